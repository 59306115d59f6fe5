"""Enumeration of hypersurface families meeting combinatorial constraints.

The Calabi-Yau search (degree equal to the weight sum) is the workhorse: it
reproduces the classical lists of elliptic and K3 hypersurface families. The
enumerator walks canonical weight tuples directly and never emits a family
without re-checking it against the public predicates, so the pruning below
is a pure speedup:

for a sorted tuple (a_0 >= a_1 >= ... ) with degree d = a_0 + R, the
singleton existence condition at the largest weight forces a_0 to divide
either R or R minus one of the smaller weights. Candidate leading weights are
therefore divisors of a handful of numbers <= max_degree, which turns a
quartic scan into a cubic one.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb

from .errors import ResourceCapError, ValidationError
from .quasismooth import is_linear_cone, quasismooth_exists
from .weights import (
    CanonicalKind,
    HypersurfaceFamily,
    WeightSystem,
    canonical_class,
    is_well_formed,
)

DEFAULT_CANDIDATE_CAP = 50_000_000


@dataclass(frozen=True)
class SearchConstraints:
    """What to enumerate and which filters to apply."""

    dimension: int
    canonical_kind: CanonicalKind | None = None
    max_degree: int = 300
    max_weight: int | None = None
    require_well_formed: bool = True
    require_quasismooth: bool = True
    exclude_linear_cones: bool = True
    candidate_cap: int = DEFAULT_CANDIDATE_CAP

    def __post_init__(self):
        if self.dimension < 0:
            raise ValidationError("dimension must be >= 0")
        if self.max_degree < 1:
            raise ValidationError("max_degree must be >= 1")
        if self.max_weight is not None and self.max_weight < 1:
            raise ValidationError("max_weight must be >= 1")
        if self.candidate_cap < 1:
            raise ValidationError("candidate_cap must be >= 1")

    @property
    def variables(self) -> int:
        return self.dimension + 2

    @property
    def effective_max_weight(self) -> int:
        return self.max_weight if self.max_weight is not None else self.max_degree


def _divisor_table(limit: int) -> list[list[int]]:
    divisors: list[list[int]] = [[] for _ in range(limit + 1)]
    for q in range(1, limit + 1):
        for v in range(q, limit + 1, q):
            divisors[v].append(q)
    return divisors


def _sorted_tuples(length: int, max_entry: int, max_sum: int):
    """Yield non-increasing positive tuples with the given bounds."""
    buf = [0] * length

    def rec(pos: int, bound: int, budget: int):
        if pos == length:
            yield tuple(buf)
            return
        slots_after = length - pos - 1
        top = min(bound, budget - slots_after)
        for e in range(top, 0, -1):
            buf[pos] = e
            yield from rec(pos + 1, e, budget - e)

    yield from rec(0, max_entry, max_sum)


def _passes_filters(fam: HypersurfaceFamily, c: SearchConstraints) -> bool:
    if c.exclude_linear_cones and is_linear_cone(fam):
        return False
    if c.require_well_formed and not is_well_formed(fam.weights):
        return False
    if c.canonical_kind is not None and canonical_class(fam).kind != c.canonical_kind:
        return False
    if c.require_quasismooth and not quasismooth_exists(fam).exists:
        return False
    return True


def _enumerate_calabi_yau(c: SearchConstraints) -> list[HypersurfaceFamily]:
    # Raw candidates are the smaller-weight tuples plus the leading-weight
    # completions they spawn; both count against the cap as they are visited,
    # so a runaway search stops after at most cap + 1 steps.
    m = c.variables
    max_w = min(c.effective_max_weight, c.max_degree - m + 1)
    if max_w < 1:
        return []
    smalls_budget = c.max_degree - 1
    divisors = _divisor_table(c.max_degree)
    found = []
    seen = 0
    for smalls in _sorted_tuples(m - 1, min(max_w, smalls_budget), smalls_budget):
        seen += 1
        if seen > c.candidate_cap:
            raise ResourceCapError(
                f"candidate cap {c.candidate_cap} exceeded during search; "
                f"raise it to proceed"
            )
        lead_min = smalls[0]
        total = sum(smalls)
        if total + lead_min > c.max_degree:
            continue
        lead_max = min(max_w, c.max_degree - total)
        if not c.require_quasismooth:
            # The divisor pruning encodes the quasismoothness singleton
            # condition; without that filter every completion is a candidate.
            candidates = set(range(lead_min, lead_max + 1))
        else:
            candidates = set()
            targets = {total}
            targets.update(total - s for s in set(smalls))
            for v in targets:
                if v == 0:
                    candidates.update(range(lead_min, lead_max + 1))
                    continue
                for q in divisors[v]:
                    if lead_min <= q <= lead_max:
                        candidates.add(q)
        seen += len(candidates)
        if seen > c.candidate_cap:
            raise ResourceCapError(
                f"candidate cap {c.candidate_cap} exceeded during search; "
                f"raise it to proceed"
            )
        for lead in sorted(candidates):
            fam = HypersurfaceFamily(WeightSystem((lead,) + smalls), lead + total)
            if _passes_filters(fam, c):
                found.append(fam)
    return found


def _enumerate_generic(c: SearchConstraints) -> list[HypersurfaceFamily]:
    m = c.variables
    max_w = c.effective_max_weight
    raw = comb(max_w + m - 1, m) * c.max_degree
    if raw > c.candidate_cap:
        raise ResourceCapError(
            f"search would examine {raw} (weights, degree) pairs, above the cap "
            f"{c.candidate_cap}; raise the cap or tighten the constraints"
        )
    found = []
    for tup in combinations_with_replacement(range(max_w, 0, -1), m):
        w = WeightSystem(tup)
        if c.require_well_formed and not is_well_formed(w):
            continue
        for d in range(1, c.max_degree + 1):
            fam = HypersurfaceFamily(w, d)
            if c.exclude_linear_cones and is_linear_cone(fam):
                continue
            if c.canonical_kind is not None and canonical_class(fam).kind != c.canonical_kind:
                continue
            if c.require_quasismooth and not quasismooth_exists(fam).exists:
                continue
            found.append(fam)
    return found


def enumerate_families(c: SearchConstraints) -> list[HypersurfaceFamily]:
    """All families meeting the constraints, deduplicated up to permutation.

    Weights are canonical (non-increasing) in the output, which is sorted by
    (degree, weights). Raises ResourceCapError if the raw candidate count
    would exceed the configured cap.
    """
    if c.canonical_kind is CanonicalKind.CALABI_YAU:
        found = _enumerate_calabi_yau(c)
    else:
        found = _enumerate_generic(c)
    found.sort(key=lambda f: (f.degree, f.weights.canonical))
    return found
