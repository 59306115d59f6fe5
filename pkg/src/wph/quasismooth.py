"""Combinatorial existence criterion for quasismooth hypersurfaces.

A general member of the family with weights a_0, ..., a_{n+1} and degree d is
quasismooth iff either some a_i equals d (the linear cone case), or for every
nonempty index subset I one of the following holds:

(a) d is a nonnegative integer combination of the weights in I, or
(b) at least |I| indices j outside I have d - a_j representable that way.

The subset scan runs in increasing subset size with early exit on the first
failure; with ``diagnostics=True`` it scans everything and reports every
failing subset. Subset indices refer to the canonical (non-increasing) weight
order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import ResourceCapError
from .intlinalg import representable_mask
from .weights import HypersurfaceFamily

MAX_SUBSET_VARIABLES = 24


@dataclass(frozen=True)
class SubsetDiagnostic:
    """Why one index subset failed (or passed) the criterion."""

    subset: tuple[int, ...]
    degree_representable: bool
    outside_witnesses: tuple[int, ...]
    required: int

    @property
    def passed(self) -> bool:
        return self.degree_representable or len(self.outside_witnesses) >= self.required


@dataclass(frozen=True)
class QuasismoothReport:
    exists: bool
    is_linear_cone: bool
    failing_subsets: tuple[SubsetDiagnostic, ...]


def is_linear_cone(fam: HypersurfaceFamily) -> bool:
    """True iff some weight equals the degree, i.e. f contains a bare variable."""
    return fam.degree in fam.weights.canonical


def _subset_diagnostic(subset, weights, d, masks):
    values = frozenset(weights[i] for i in subset)
    mask = masks.get(values)
    if mask is None:
        mask = representable_mask(d, values)
        masks[values] = mask
    rep_d = bool((mask >> d) & 1)
    witnesses = []
    inside = set(subset)
    for j, a in enumerate(weights):
        if j in inside:
            continue
        r = d - a
        if r >= 0 and (mask >> r) & 1:
            witnesses.append(j)
    return SubsetDiagnostic(
        subset=tuple(subset),
        degree_representable=rep_d,
        outside_witnesses=tuple(witnesses),
        required=len(subset),
    )


def quasismooth_exists(
    fam: HypersurfaceFamily, *, diagnostics: bool = False
) -> QuasismoothReport:
    """Does the family contain a quasismooth member?

    Implements the subset criterion verbatim over all 2^(n+2) - 1 nonempty
    subsets, with the linear cone short-circuit. Families with more than
    24 variables are rejected (the scan is exponential in the variable
    count), as are degrees beyond the representability cap.
    """
    weights = fam.weights.canonical
    m = len(weights)
    if m > MAX_SUBSET_VARIABLES:
        raise ResourceCapError(
            f"subset criterion limited to {MAX_SUBSET_VARIABLES} variables, got {m}"
        )
    if is_linear_cone(fam):
        return QuasismoothReport(exists=True, is_linear_cone=True, failing_subsets=())
    d = fam.degree
    masks: dict[frozenset[int], int] = {}

    if diagnostics:
        failing = []
        for size in range(1, m + 1):
            for subset in combinations(range(m), size):
                diag = _subset_diagnostic(subset, weights, d, masks)
                if not diag.passed:
                    failing.append(diag)
        return QuasismoothReport(
            exists=not failing, is_linear_cone=False, failing_subsets=tuple(failing)
        )

    # Fast path. Singleton subsets reduce to divisibility checks, and the
    # first failing subset of any size ends the scan.
    for i in range(m):
        a = weights[i]
        if d % a == 0:
            continue
        if any(
            j != i and d >= weights[j] and (d - weights[j]) % a == 0 for j in range(m)
        ):
            continue
        diag = SubsetDiagnostic(
            subset=(i,), degree_representable=False, outside_witnesses=(), required=1
        )
        return QuasismoothReport(
            exists=False, is_linear_cone=False, failing_subsets=(diag,)
        )
    for size in range(2, m + 1):
        for subset in combinations(range(m), size):
            diag = _subset_diagnostic(subset, weights, d, masks)
            if not diag.passed:
                return QuasismoothReport(
                    exists=False, is_linear_cone=False, failing_subsets=(diag,)
                )
    return QuasismoothReport(exists=True, is_linear_cone=False, failing_subsets=())
