"""Finite fuzzy ordered sets over exact-rational grades.

A fuzzy order on a finite carrier is a [0,1]-valued relation that is
reflexive (grade exactly 1 on the diagonal), antisymmetric (a grade sum
above 1 forces equality) and max-min transitive.  The crisp predicate
"x precedes y" is read through the 1/2 threshold: it holds exactly when
grade(x, y) > 1/2.

All operations work by exhaustive scan over the carrier.  The carrier
size is capped (default 64, configurable) because the transitivity
check is cubic.

``is_lattice`` checks two-element subsets only.  On a finite carrier
that is enough: when every pair has a supremum, the supremum of
{x1, ..., xk} equals the iterated pairwise supremum.  Induction on k:
an upper bound of the whole set is an upper bound of every intermediate
pairwise supremum because max-min transitivity propagates grades above
the 1/2 threshold.  Infima are dual.

The lower-bound set is the order dual of the upper-bound set: it is
zero at y as soon as grade(y, x) drops to 1/2 or below for some member
x, and the minimum of those grades otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Mapping

from .errors import BrokenOrder, EmptyQuery, InvalidCarrier, InvalidOrder
from .rational import HALF, ONE, ZERO, ensure_grade

DEFAULT_MAX_ELEMENTS = 64


class MembershipMatrix:
    """A finite carrier with an exact-rational grade for every ordered pair.

    Unspecified pairs default to grade 1 on the diagonal and 0 off it.
    """

    __slots__ = ("elements", "_index", "_grades", "max_elements")

    def __init__(
        self,
        elements: Iterable[str],
        grades: Mapping[tuple[str, str], object] | None = None,
        *,
        max_elements: int = DEFAULT_MAX_ELEMENTS,
    ):
        self.elements = tuple(elements)
        if len(set(self.elements)) != len(self.elements):
            raise InvalidCarrier("duplicate element labels")
        if len(self.elements) > max_elements:
            raise InvalidCarrier(
                f"carrier of {len(self.elements)} elements exceeds the cap {max_elements}"
            )
        self.max_elements = max_elements
        self._index = {x: i for i, x in enumerate(self.elements)}
        n = len(self.elements)
        table = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
        if grades:
            for (x, y), q in grades.items():
                table[self._idx(x)][self._idx(y)] = ensure_grade(q)
        self._grades = tuple(tuple(row) for row in table)

    def _idx(self, x: str) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise InvalidCarrier(f"unknown element {x!r}") from None

    @property
    def size(self) -> int:
        return len(self.elements)

    def grade(self, x: str, y: str) -> Fraction:
        return self._grades[self._idx(x)][self._idx(y)]

    def with_grade(self, x: str, y: str, value) -> "MembershipMatrix":
        """Copy of this matrix with a single entry replaced."""
        grades = {
            (a, b): self._grades[i][j]
            for i, a in enumerate(self.elements)
            for j, b in enumerate(self.elements)
        }
        grades[(x, y)] = ensure_grade(value)
        return MembershipMatrix(self.elements, grades, max_elements=self.max_elements)

    def to_json(self) -> dict:
        entries = []
        for i, x in enumerate(self.elements):
            for j, y in enumerate(self.elements):
                default = ONE if i == j else ZERO
                if self._grades[i][j] != default:
                    entries.append([x, y, str(self._grades[i][j])])
        return {"elements": list(self.elements), "grades": entries}

    @classmethod
    def from_json(cls, data: dict, *, max_elements: int = DEFAULT_MAX_ELEMENTS) -> "MembershipMatrix":
        elements = data["elements"]
        grades = {}
        for entry in data.get("grades", []):
            x, y, q = entry
            grades[(x, y)] = q
        return cls(elements, grades, max_elements=max_elements)

    def __repr__(self):
        return f"MembershipMatrix({list(self.elements)!r}, size={self.size})"


class FuzzySubset:
    """A fuzzy subset of a carrier: one grade per element."""

    __slots__ = ("carrier", "_grades")

    def __init__(self, carrier: tuple[str, ...], grades: Mapping[str, Fraction]):
        self.carrier = tuple(carrier)
        self._grades = {x: grades.get(x, ZERO) for x in self.carrier}

    def grade(self, x: str) -> Fraction:
        return self._grades[x]

    def support(self) -> tuple[str, ...]:
        return tuple(x for x in self.carrier if self._grades[x] > 0)

    def __contains__(self, x: str) -> bool:
        return self._grades.get(x, ZERO) > 0

    def __repr__(self):
        body = ", ".join(f"{x}: {q}" for x, q in self._grades.items() if q > 0)
        return f"FuzzySubset({{{body}}})"


@dataclass
class AxiomReport:
    """Exact listing of fuzzy-order axiom violations; empty iff the matrix is a fuzzy order."""

    reflexivity_violations: list[str] = field(default_factory=list)
    antisymmetry_violations: list[tuple[str, str, Fraction]] = field(default_factory=list)
    transitivity_violations: list[tuple[str, str, str, Fraction, Fraction]] = field(
        default_factory=list
    )

    @property
    def is_valid(self) -> bool:
        return not (
            self.reflexivity_violations
            or self.antisymmetry_violations
            or self.transitivity_violations
        )

    def summary(self) -> str:
        if self.is_valid:
            return "valid fuzzy order"
        parts = []
        for x in self.reflexivity_violations:
            parts.append(f"reflexivity: grade({x}, {x}) != 1")
        for x, y, total in self.antisymmetry_violations:
            parts.append(f"antisymmetry: grade({x},{y}) + grade({y},{x}) = {total} > 1")
        for x, y, z, required, actual in self.transitivity_violations:
            parts.append(
                f"transitivity at ({x}, {y}, {z}): grade({x},{z}) = {actual} < required {required}"
            )
        return "; ".join(parts)

    def to_json(self) -> dict:
        return {
            "valid": self.is_valid,
            "reflexivity": list(self.reflexivity_violations),
            "antisymmetry": [[x, y, str(q)] for x, y, q in self.antisymmetry_violations],
            "transitivity": [
                [x, y, z, str(req), str(act)]
                for x, y, z, req, act in self.transitivity_violations
            ],
        }


def validate_fuzzy_order(m: MembershipMatrix) -> AxiomReport:
    """List every violation of reflexivity, antisymmetry and max-min transitivity."""
    report = AxiomReport()
    els = m.elements
    g = m.grade
    for x in els:
        if g(x, x) != ONE:
            report.reflexivity_violations.append(x)
    for i, x in enumerate(els):
        for y in els[i + 1 :]:
            total = g(x, y) + g(y, x)
            if total > ONE:
                report.antisymmetry_violations.append((x, y, total))
    for x in els:
        for z in els:
            best = ZERO
            witness = None
            for y in els:
                composed = min(g(x, y), g(y, z))
                if composed > best:
                    best = composed
                    witness = y
            if g(x, z) < best:
                report.transitivity_violations.append((x, witness, z, best, g(x, z)))
    return report


def is_valid_order(m: MembershipMatrix) -> bool:
    return validate_fuzzy_order(m).is_valid


def _require_nonempty(A) -> tuple[str, ...]:
    A = tuple(A)
    if not A:
        raise EmptyQuery("query set is empty")
    return A


def upper_bound_set(m: MembershipMatrix, A: Iterable[str]) -> FuzzySubset:
    """U(A): zero at y when grade(x, y) <= 1/2 for some member x, else the minimum grade."""
    A = _require_nonempty(A)
    grades = {}
    for y in m.elements:
        values = [m.grade(x, y) for x in A]
        grades[y] = ZERO if any(v <= HALF for v in values) else min(values)
    return FuzzySubset(m.elements, grades)


def lower_bound_set(m: MembershipMatrix, A: Iterable[str]) -> FuzzySubset:
    """L(A): order dual of U(A), built from grade(y, x)."""
    A = _require_nonempty(A)
    grades = {}
    for y in m.elements:
        values = [m.grade(y, x) for x in A]
        grades[y] = ZERO if any(v <= HALF for v in values) else min(values)
    return FuzzySubset(m.elements, grades)


def supremum_candidates(m: MembershipMatrix, A: Iterable[str]) -> list[str]:
    """All elements satisfying the supremum definition, by full scan."""
    ub = upper_bound_set(m, A)
    support = ub.support()
    return [z for z in support if all(m.grade(z, y) > HALF for y in support)]


def infimum_candidates(m: MembershipMatrix, A: Iterable[str]) -> list[str]:
    lb = lower_bound_set(m, A)
    support = lb.support()
    return [z for z in support if all(m.grade(y, z) > HALF for y in support)]


def supremum(m: MembershipMatrix, A: Iterable[str]) -> str | None:
    """The unique supremum of A, or None.

    Two distinct passing candidates mean the matrix is not a valid fuzzy
    order, and raise BrokenOrder instead of picking one.
    """
    candidates = supremum_candidates(m, A)
    if len(candidates) > 1:
        raise BrokenOrder(f"distinct supremum candidates {candidates}: matrix is not a fuzzy order")
    return candidates[0] if candidates else None


def infimum(m: MembershipMatrix, A: Iterable[str]) -> str | None:
    candidates = infimum_candidates(m, A)
    if len(candidates) > 1:
        raise BrokenOrder(f"distinct infimum candidates {candidates}: matrix is not a fuzzy order")
    return candidates[0] if candidates else None


def join(m: MembershipMatrix, x: str, y: str) -> str | None:
    return supremum(m, (x, y))


def meet(m: MembershipMatrix, x: str, y: str) -> str | None:
    return infimum(m, (x, y))


def is_lattice(m: MembershipMatrix) -> bool:
    """True iff every pair of elements has both a join and a meet.

    Pairs suffice on a finite carrier; see the module docstring for the
    induction.  Raises InvalidOrder if the matrix fails validation.
    """
    report = validate_fuzzy_order(m)
    if not report.is_valid:
        raise InvalidOrder(report.summary())
    for i, x in enumerate(m.elements):
        for y in m.elements[i + 1 :]:
            if supremum(m, (x, y)) is None or infimum(m, (x, y)) is None:
                return False
    return True


def is_directed(m: MembershipMatrix, D: Iterable[str], direction: str = "both") -> bool:
    """Directedness of D: every pair from D has a bound inside D.

    ``direction`` is "right" (upper bounds), "left" (lower bounds) or
    "both".  The pairwise check extends to all finite subsets by
    induction through max-min transitivity.
    """
    if direction not in ("right", "left", "both"):
        raise ValueError(f"unknown direction {direction!r}")
    D = tuple(D)
    if not D:
        return True
    checks = []
    if direction in ("right", "both"):
        checks.append(upper_bound_set)
    if direction in ("left", "both"):
        checks.append(lower_bound_set)
    members = set(D)
    for bound_set in checks:
        for pair in combinations_with_replacement(D, 2):
            bounds = bound_set(m, pair)
            if not any(d in bounds for d in members):
                return False
    return True
