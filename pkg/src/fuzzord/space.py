"""Concrete fuzzy Riesz spaces over exact-rational coordinate vectors.

Two membership families are built in, both two-level: grade 1 on equal
vectors, a constant c in (1/2, 1] on strictly related pairs, 0 on
unrelated pairs.  "Related" means coordinatewise dominance for the
pointwise family and lexicographic precedence (first coordinate, then
second; dimension fixed at 2) for the lex family.  The pointwise family
is Archimedean; the lex family is the resident non-Archimedean
specimen.

The families are closed-world on purpose: compatibility and max-min
transitivity of an arbitrary user-supplied grade function over an
infinite carrier cannot be verified mechanically, while both presets
admit short hand proofs (sketched in the README).  The grade constant
is configurable per space, so two spaces over the same carrier can
carry different strict-pair grades.

Coefficients are exact rationals.  The real-coefficient models of these
orders have stronger completeness properties than the rational carrier
(suprema of rational sets can be irrational); `space_properties` reports
that classification as analytic metadata, and everything exercised here
is finite and exactly representable.

Positive part, negative part and absolute value are the lattice
expressions x+ = x v 0, x- = (-x) v 0 and |x| = x v (-x); they satisfy
x = x+ - x-, |x| = x+ + x-, and x+ ^ x- = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionError, EmptyQuery, NotDominated, NotPositive
from .linalg import Vec
from .rational import HALF, ONE, ZERO, to_fraction

POINTWISE = "pointwise"
LEX = "lex"


@dataclass(frozen=True)
class SpaceSpec:
    """A parameterized fuzzy Riesz space: family, carrier dimension, grade constant."""

    family: str
    dimension: int
    grade_c: Fraction = Fraction(2, 3)

    def __post_init__(self):
        object.__setattr__(self, "grade_c", to_fraction(self.grade_c))
        if self.family not in (POINTWISE, LEX):
            raise ValueError(f"unknown membership family {self.family!r}")
        if self.dimension < 1:
            raise ValueError("dimension must be positive")
        if self.family == LEX and self.dimension != 2:
            raise ValueError("the lex family lives on the plane (dimension 2)")
        if not (HALF < self.grade_c <= ONE):
            raise ValueError(
                f"grade constant {self.grade_c} must lie in (1/2, 1]; "
                "at or below 1/2 every threshold predicate would be vacuous"
            )

    def zero(self) -> Vec:
        return Vec.zero(self.dimension)

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "dimension": self.dimension,
            "grade_c": str(self.grade_c),
        }

    @classmethod
    def from_json(cls, data: dict) -> "SpaceSpec":
        return cls(data["family"], int(data["dimension"]), data.get("grade_c", "2/3"))


def pointwise_space(dimension: int, grade_c=Fraction(2, 3)) -> SpaceSpec:
    return SpaceSpec(POINTWISE, dimension, grade_c)


def lex_plane(grade_c=Fraction(2, 3)) -> SpaceSpec:
    return SpaceSpec(LEX, 2, grade_c)


def _check_dims(s: SpaceSpec, *vecs: Vec) -> None:
    for v in vecs:
        if v.dim != s.dimension:
            raise DimensionError(
                f"vector of dimension {v.dim} does not live in a {s.dimension}-dimensional space"
            )


def _lex_lt(a: tuple, b: tuple) -> bool:
    return a[0] < b[0] or (a[0] == b[0] and a[1] < b[1])


def mu(s: SpaceSpec, x: Vec, y: Vec) -> Fraction:
    """Membership grade of the ordered pair (x, y) in the space's fuzzy order."""
    _check_dims(s, x, y)
    if x.coords == y.coords:
        return ONE
    if s.family == POINTWISE:
        if all(a <= b for a, b in zip(x.coords, y.coords)):
            return s.grade_c
        return ZERO
    return s.grade_c if _lex_lt(x.coords, y.coords) else ZERO


def le(s: SpaceSpec, x: Vec, y: Vec) -> bool:
    """The crisp order predicate: grade above the 1/2 threshold."""
    return mu(s, x, y) > HALF


def join(s: SpaceSpec, x: Vec, y: Vec) -> Vec:
    """Supremum of the pair: coordinatewise max (pointwise) or the lex-larger vector."""
    _check_dims(s, x, y)
    if s.family == POINTWISE:
        return Vec._wrap(tuple(max(a, b) for a, b in zip(x.coords, y.coords)))
    return y if _lex_lt(x.coords, y.coords) else x


def meet(s: SpaceSpec, x: Vec, y: Vec) -> Vec:
    _check_dims(s, x, y)
    if s.family == POINTWISE:
        return Vec._wrap(tuple(min(a, b) for a, b in zip(x.coords, y.coords)))
    return x if _lex_lt(x.coords, y.coords) else y


def sup_finite(s: SpaceSpec, vecs: Sequence[Vec]) -> Vec:
    if not vecs:
        raise EmptyQuery("supremum of an empty family")
    out = vecs[0]
    for v in vecs[1:]:
        out = join(s, out, v)
    return out


def inf_finite(s: SpaceSpec, vecs: Sequence[Vec]) -> Vec:
    if not vecs:
        raise EmptyQuery("infimum of an empty family")
    out = vecs[0]
    for v in vecs[1:]:
        out = meet(s, out, v)
    return out


def pos_part(s: SpaceSpec, x: Vec) -> Vec:
    """x+ = x v 0."""
    return join(s, x, s.zero())


def neg_part(s: SpaceSpec, x: Vec) -> Vec:
    """x- = (-x) v 0."""
    return join(s, -x, s.zero())


def abs_val(s: SpaceSpec, x: Vec) -> Vec:
    """|x| = x v (-x)."""
    return join(s, x, -x)


def is_positive(s: SpaceSpec, x: Vec) -> bool:
    """Positivity through the threshold; note that 0 itself is positive (grade 1)."""
    return mu(s, s.zero(), x) > HALF


def is_negative(s: SpaceSpec, x: Vec) -> bool:
    return mu(s, x, s.zero()) > HALF


def is_disjoint(s: SpaceSpec, x: Vec, y: Vec) -> bool:
    """True iff |x| ^ |y| = 0."""
    return meet(s, abs_val(s, x), abs_val(s, y)).is_zero()


@dataclass
class DecompositionResult:
    """Parts that sum to the decomposed vector, each absolutely below its target."""

    parts: list[Vec]

    def total(self) -> Vec:
        out = self.parts[0]
        for p in self.parts[1:]:
            out = out + p
        return out


def riesz_decompose(s: SpaceSpec, x: Vec, ys: Sequence[Vec]) -> DecompositionResult:
    """Split x into parts x_i with sum(x_i) = x and |x_i| below |y_i| in grade.

    Requires |x| to sit below |y_1 + ... + y_n| through the threshold.
    Uses the iterated clamp x_1 = (x v -|y_1|) ^ |y_1|, recursing on the
    remainder; when x is positive every part is positive.
    """
    ys = list(ys)
    if not ys:
        raise EmptyQuery("decomposition against an empty list of targets")
    _check_dims(s, x, *ys)
    total = ys[0]
    for y in ys[1:]:
        total = total + y
    if not mu(s, abs_val(s, x), abs_val(s, total)) > HALF:
        raise NotDominated(
            f"|{x}| is not below |{total}| through the grade threshold"
        )
    parts: list[Vec] = []
    remainder = x
    for y in ys[:-1]:
        a = abs_val(s, y)
        clamped = meet(s, join(s, remainder, -a), a)
        parts.append(clamped)
        remainder = remainder - clamped
    parts.append(remainder)
    # postconditions are theorems given the precondition; a failure here is a bug
    check = parts[0]
    for p in parts[1:]:
        check = check + p
    assert check == x, "decomposition parts do not sum back to the input"
    for p, y in zip(parts, ys):
        assert mu(s, abs_val(s, p), abs_val(s, y)) > HALF, "part escapes its absolute bound"
    return DecompositionResult(parts)


@dataclass
class ScalarRayReport:
    """Evidence about boundedness of the multiples n*x below a fixed y."""

    horizon: int
    bounded_within_horizon: bool
    first_failure: int | None
    closed_form_bounded: bool

    def to_json(self) -> dict:
        return {
            "horizon": self.horizon,
            "bounded_within_horizon": self.bounded_within_horizon,
            "first_failure": self.first_failure,
            "closed_form_bounded": self.closed_form_bounded,
        }


def is_nx_bounded(s: SpaceSpec, x: Vec, y: Vec, horizon: int) -> ScalarRayReport:
    """Check grade(n*x, y) > 1/2 for n up to the horizon, plus the family's closed form.

    Closed form: in the pointwise family the ray of a nonzero (non-negative)
    x is unbounded; in the lex family the ray of x = (0, t) stays below any
    vector with positive first coordinate, which is the non-Archimedean
    witness.
    """
    _check_dims(s, x, y)
    if horizon < 1:
        raise ValueError("horizon must be at least 1")
    if is_negative(s, x) and not x.is_zero():
        raise NotPositive(f"{x} is negative; the ray test expects a non-negative element")
    first_failure = None
    for n in range(1, horizon + 1):
        if not mu(s, n * x, y) > HALF:
            first_failure = n
            break
    if s.family == POINTWISE:
        closed = x.is_zero()
    else:
        closed = x.coords[0] == 0
    return ScalarRayReport(
        horizon=horizon,
        bounded_within_horizon=first_failure is None,
        first_failure=first_failure,
        closed_form_bounded=closed,
    )


def infimum_of_scaled(s: SpaceSpec, x: Vec) -> Vec | None:
    """Infimum of the family {x/n : n >= 1} for positive x.

    Pointwise: always the zero vector (each x/n dominates 0; corroborated
    over a short horizon).  Lex with positive first coordinate: no infimum
    exists, because every vector on the second-coordinate axis is a lower
    bound and none of them is greatest.
    """
    _check_dims(s, x)
    if not is_positive(s, x):
        raise NotPositive(f"{x} is not positive")
    if s.family == LEX and x.coords[0] > 0:
        return None
    zero = s.zero()
    for n in range(1, 9):
        assert mu(s, zero, x / n) > HALF, "scaled copy fails to dominate zero"
    return zero


@dataclass
class SpaceProperties:
    archimedean: bool
    dedekind_note: str
    witness: tuple[Vec, Vec] | None

    def to_json(self) -> dict:
        return {
            "archimedean": self.archimedean,
            "dedekind_note": self.dedekind_note,
            "witness": None
            if self.witness is None
            else {"x": self.witness[0].to_json(), "bound": self.witness[1].to_json()},
        }


def space_properties(s: SpaceSpec) -> SpaceProperties:
    """Archimedean flag with witness, plus the completeness classification
    of the real-coefficient model of the same order (analytic metadata)."""
    if s.family == POINTWISE:
        return SpaceProperties(
            archimedean=True,
            dedekind_note=(
                "the real-coefficient model under coordinatewise order is "
                "Dedekind complete; the exact-rational carrier only exercises "
                "finite, representable suprema"
            ),
            witness=None,
        )
    return SpaceProperties(
        archimedean=False,
        dedekind_note=(
            "the real-coefficient lexicographic plane is neither Dedekind "
            "complete nor sigma-complete; it is the resident non-Archimedean "
            "example"
        ),
        witness=(Vec((0, 1)), Vec((1, 0))),
    )


def parse_vector(data, s: SpaceSpec | None = None) -> Vec:
    """Vector from a JSON array of rational strings; checks the dimension when a space is given."""
    v = Vec(data)
    if s is not None:
        _check_dims(s, v)
    return v
