"""Weighted-homogeneous monomials and polynomials.

Enumeration of graded pieces, exponent-vector supports, exact formal
derivatives and the weighted Euler identity self-test.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ResourceCapError, ValidationError
from .weights import HypersurfaceFamily, WeightSystem, as_int

#: An exponent vector is a plain tuple of nonnegative ints, one per variable.
ExponentVector = tuple[int, ...]

DEFAULT_MONOMIAL_CAP = 1_000_000


def weighted_degree(weights: Sequence[int], exponents: Sequence[int]) -> int:
    return sum(a * e for a, e in zip(weights, exponents))


def enumerate_monomials(
    w: WeightSystem, degree: int, *, cap: int = DEFAULT_MONOMIAL_CAP
) -> list[ExponentVector]:
    """All exponent vectors of the given weighted degree, largest-lex first.

    Vectors align with the weight order as given (matching how supports are
    stored) and are emitted in descending lexicographic order, so the output
    is stable enough to freeze in golden files; canonicalize the weight
    system first for the canonical ordering. Raises ResourceCapError as soon
    as the result would exceed ``cap`` vectors.
    """
    degree = as_int(degree, "degree")
    if degree < 0:
        raise ValidationError("degree must be nonnegative")
    weights = w.original
    m = len(weights)
    out: list[ExponentVector] = []
    exps = [0] * m

    def descend(pos, remaining):
        if pos == m - 1:
            last = weights[pos]
            if remaining % last == 0:
                if len(out) >= cap:
                    raise ResourceCapError(
                        f"graded piece has more than {cap} monomials"
                    )
                exps[pos] = remaining // last
                out.append(tuple(exps))
                exps[pos] = 0
            return
        a = weights[pos]
        for e in range(remaining // a, -1, -1):
            exps[pos] = e
            descend(pos + 1, remaining - e * a)
        exps[pos] = 0

    descend(0, degree)
    return out


class PolynomialSupport:
    """The set of exponent vectors of an explicit polynomial in a family.

    Rows align with the family's original weight order. Every row must have
    weighted degree exactly the family degree, and rows must be distinct.
    """

    __slots__ = ("family", "rows")

    def __init__(self, family: HypersurfaceFamily, rows: Iterable[Iterable[int]]):
        parsed = []
        weights = family.weights.original
        for idx, row in enumerate(rows):
            vec = tuple(as_int(e, f"row {idx} exponent") for e in row)
            if len(vec) != len(weights):
                raise ValidationError(
                    f"row {idx} has {len(vec)} exponents for {len(weights)} variables"
                )
            if any(e < 0 for e in vec):
                raise ValidationError(f"row {idx} has a negative exponent: {vec}")
            deg = weighted_degree(weights, vec)
            if deg != family.degree:
                raise ValidationError(
                    f"row {idx} {vec} has weighted degree {deg}, expected {family.degree}"
                )
            parsed.append(vec)
        if not parsed:
            raise ValidationError("support must contain at least one monomial")
        if len(set(parsed)) != len(parsed):
            raise ValidationError("support rows must be distinct")
        self.family = family
        self.rows = tuple(parsed)

    def __len__(self) -> int:
        return len(self.rows)

    def __repr__(self) -> str:
        return f"PolynomialSupport({self.family!r}, {len(self.rows)} rows)"


@dataclass(frozen=True)
class VariableWitness:
    """First support row of shape x_i^k or x_i^k * x_j, if any."""

    variable: int
    witness: ExponentVector | None


@dataclass(frozen=True)
class MonomialExistenceReport:
    witnesses: tuple[VariableWitness, ...]

    @property
    def passed(self) -> bool:
        return all(w.witness is not None for w in self.witnesses)

    @property
    def failing_variables(self) -> tuple[int, ...]:
        return tuple(w.variable for w in self.witnesses if w.witness is None)


def is_witness_row(row: Sequence[int], variable: int) -> bool:
    """Does ``row`` have the shape x_i^k or x_i^k * x_j for ``variable`` i?"""
    if row[variable] < 1:
        return False
    extra = None
    for j, e in enumerate(row):
        if j == variable or e == 0:
            continue
        if e != 1 or extra is not None:
            return False
        extra = j
    return True


def monomial_existence_check(p: PolynomialSupport) -> MonomialExistenceReport:
    """Per-variable necessary condition for quasismoothness of an explicit member.

    A quasismooth polynomial must contain, for each variable i, a monomial of
    shape x_i^k or x_i^k * x_j; otherwise all partial derivatives vanish at
    the i-th coordinate point of the affine cone.
    """
    witnesses = []
    m = len(p.family.weights)
    for i in range(m):
        found = next((row for row in p.rows if is_witness_row(row, i)), None)
        witnesses.append(VariableWitness(variable=i, witness=found))
    return MonomialExistenceReport(witnesses=tuple(witnesses))


class WeightedPolynomial:
    """Weighted-homogeneous polynomial with exact rational coefficients.

    Unlike :class:`PolynomialSupport` this stores coefficients and its own
    degree, which lets formal derivatives (degree d - a_i, possibly zero)
    live in the same type. Terms with mismatched degree are a hard error,
    never silently dropped.
    """

    __slots__ = ("weights", "degree", "terms")

    def __init__(
        self,
        weights: WeightSystem,
        degree: int,
        terms: Iterable[tuple[Fraction | int | str, Iterable[int]]],
    ):
        degree = as_int(degree, "degree")
        if degree < 0:
            raise ValidationError("polynomial degree must be nonnegative")
        ws = weights.original
        parsed: list[tuple[Fraction, ExponentVector]] = []
        seen: set[ExponentVector] = set()
        for idx, (coeff, exps) in enumerate(terms):
            c = Fraction(coeff)
            vec = tuple(as_int(e, f"term {idx} exponent") for e in exps)
            if len(vec) != len(ws):
                raise ValidationError(
                    f"term {idx} has {len(vec)} exponents for {len(ws)} variables"
                )
            if any(e < 0 for e in vec):
                raise ValidationError(f"term {idx} has a negative exponent")
            if c == 0:
                raise ValidationError(f"term {idx} has coefficient zero")
            deg = weighted_degree(ws, vec)
            if deg != degree:
                raise ValidationError(
                    f"term {idx} {vec} has weighted degree {deg}, expected {degree}"
                )
            if vec in seen:
                raise ValidationError(f"duplicate exponent vector {vec}")
            seen.add(vec)
            parsed.append((c, vec))
        self.weights = weights
        self.degree = degree
        self.terms = tuple(parsed)

    @classmethod
    def from_support(
        cls,
        support: PolynomialSupport,
        coefficients: Sequence[Fraction | int | str] | None = None,
    ) -> "WeightedPolynomial":
        if coefficients is None:
            coefficients = [1] * len(support.rows)
        if len(coefficients) != len(support.rows):
            raise ValidationError(
                f"{len(coefficients)} coefficients for {len(support.rows)} monomials"
            )
        return cls(
            support.family.weights,
            support.family.degree,
            zip(coefficients, support.rows),
        )

    def as_dict(self) -> dict[ExponentVector, Fraction]:
        return {vec: c for c, vec in self.terms}

    def __repr__(self) -> str:
        return (
            f"WeightedPolynomial(weights={list(self.weights.original)!r}, "
            f"degree={self.degree}, {len(self.terms)} terms)"
        )


def partial_derivative(f: WeightedPolynomial, i: int) -> WeightedPolynomial:
    """Exact formal derivative with respect to variable ``i``.

    Every surviving term has weighted degree d - a_i. The result may be the
    zero polynomial (no terms).
    """
    ws = f.weights.original
    if not 0 <= i < len(ws):
        raise ValidationError(f"variable index {i} out of range for {len(ws)} variables")
    new_terms = []
    for c, vec in f.terms:
        e = vec[i]
        if e >= 1:
            dropped = vec[:i] + (e - 1,) + vec[i + 1 :]
            new_terms.append((c * e, dropped))
    return WeightedPolynomial(f.weights, max(f.degree - ws[i], 0), new_terms)


def euler_check(f: WeightedPolynomial) -> bool:
    """Verify sum_i a_i * x_i * df/dx_i == d * f term by term.

    The identity is forced for weighted-homogeneous input, so this is a
    self-test of the derivative plumbing rather than a property of ``f``.
    """
    acc: dict[ExponentVector, Fraction] = {}
    ws = f.weights.original
    for i, a in enumerate(ws):
        for c, vec in partial_derivative(f, i).terms:
            lifted = vec[:i] + (vec[i] + 1,) + vec[i + 1 :]
            acc[lifted] = acc.get(lifted, Fraction(0)) + a * c
    lhs = {vec: c for vec, c in acc.items() if c != 0}
    rhs = {vec: f.degree * c for c, vec in f.terms}
    return lhs == rhs
