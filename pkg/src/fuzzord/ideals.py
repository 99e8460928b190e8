"""Solid sets, ideals and bands of the preset spaces, as closed-form handles.

The carriers are infinite (all rational vectors), so ideals and bands are
represented by handles rather than extensionally:

* pointwise family: every finitely generated ideal is a coordinate-support
  set {x : supp(x) is contained in S}; the handle stores S (1-based).  All
  of these are bands, and all of them are projection bands.
* lex family: the plane under the lexicographic order has exactly three
  ideals: {0}, the second-coordinate axis {(0, t)}, and the whole plane.
  All three are order closed, hence bands; the axis is the one that fails
  to be a projection band.

Each handle's membership predicate is cross-checked by two independent
definitional oracles (used heavily by the law suites):

* `ideal_member_oracle` - scaled-dominance search: x belongs to the ideal
  generated by D iff |x| sits below lambda * (|d_1| + ... + |d_k|) through
  the grade threshold for some lambda >= 0.  The least sufficient lambda
  is computed per family and confirmed by an exact grade evaluation.
* `band_member_oracle` - meet-sequence stabilization: x belongs to the
  band generated by D iff meet(|x|, n * u) climbs all the way to |x|,
  where u is the summed absolute generator.  The iteration bound is
  precomputed from coordinate ratios, so non-termination is structurally
  impossible; in the lex family the sequence can be genuinely divergent
  (axis generator against a vector with nonzero first coordinate), which
  the bound computation detects in closed form.

For both preset families the generated ideal and the generated band have
the same handle; the distinction between the two notions lives entirely
in the oracles above.

A classical caution, recorded here because finite dimensions hide it:
ideals that are not bands exist only in richer carriers (function spaces
with pointwise order), never among the handles above.  The lex axis
instead witnesses the weaker failure "band without a projection".
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import chain, combinations, product
from typing import Iterable, Sequence

from . import space as vs
from .errors import DegenerateBasis, DimensionError, EmptyQuery, StabilizationOverflow
from .linalg import Vec, in_span, rank, rref
from .rational import HALF, ZERO
from .space import LEX, POINTWISE, SpaceSpec

LEX_KINDS = ("zero", "axis", "full")
_LEX_ORDER = {"zero": 0, "axis": 1, "full": 2}


@dataclass(frozen=True)
class Handle:
    """Closed-form representation of an ideal/band of a preset space.

    Pointwise handles carry a 1-based coordinate support set; lex handles
    carry one of the kinds "zero", "axis", "full".
    """

    family: str
    support: frozenset[int] | None = None
    kind: str | None = None

    def __post_init__(self):
        if self.family == POINTWISE:
            if self.support is None or self.kind is not None:
                raise ValueError("pointwise handles carry a support set and no kind")
            object.__setattr__(self, "support", frozenset(int(i) for i in self.support))
        elif self.family == LEX:
            if self.kind not in LEX_KINDS or self.support is not None:
                raise ValueError(f"lex handles carry a kind from {LEX_KINDS}")
        else:
            raise ValueError(f"unknown family {self.family!r}")

    def to_json(self) -> dict:
        if self.family == POINTWISE:
            return {"family": POINTWISE, "support": sorted(self.support)}
        return {"family": LEX, "kind": self.kind}

    @classmethod
    def from_json(cls, data: dict) -> "Handle":
        if data["family"] == POINTWISE:
            return cls(POINTWISE, support=frozenset(data["support"]))
        return cls(LEX, kind=data["kind"])

    def __str__(self):
        if self.family == POINTWISE:
            inner = ",".join(str(i) for i in sorted(self.support))
            return "pointwise support {" + inner + "}"
        return f"lex {self.kind}"


IdealHandle = Handle
BandHandle = Handle


def pointwise_handle(support: Iterable[int]) -> Handle:
    return Handle(POINTWISE, support=frozenset(support))


def lex_handle(kind: str) -> Handle:
    return Handle(LEX, kind=kind)


def zero_handle(s: SpaceSpec) -> Handle:
    return pointwise_handle(()) if s.family == POINTWISE else lex_handle("zero")


def full_handle(s: SpaceSpec) -> Handle:
    if s.family == POINTWISE:
        return pointwise_handle(range(1, s.dimension + 1))
    return lex_handle("full")


def validate_handle(s: SpaceSpec, h: Handle) -> None:
    if h.family != s.family:
        raise DimensionError(f"handle family {h.family!r} does not match space {s.family!r}")
    if h.family == POINTWISE and h.support and max(h.support) > s.dimension:
        raise DimensionError(
            f"handle support {sorted(h.support)} exceeds dimension {s.dimension}"
        )


def is_zero_handle(s: SpaceSpec, h: Handle) -> bool:
    return h == zero_handle(s)


def is_full_handle(s: SpaceSpec, h: Handle) -> bool:
    return h == full_handle(s)


def all_handles(s: SpaceSpec) -> list[Handle]:
    """Every handle of the space: the 2^n coordinate supports, or the lex 3-chain."""
    if s.family == LEX:
        return [lex_handle(k) for k in LEX_KINDS]
    if s.dimension > 16:
        raise ValueError("handle enumeration is capped at dimension 16")
    coords = range(1, s.dimension + 1)
    subsets = chain.from_iterable(combinations(coords, k) for k in range(s.dimension + 1))
    return [pointwise_handle(sub) for sub in subsets]


def ideal_contains(s: SpaceSpec, h: Handle, x: Vec) -> bool:
    """Closed-form handle membership; the oracles below cross-check it."""
    validate_handle(s, h)
    vs._check_dims(s, x)
    if h.family == POINTWISE:
        return x.support() <= h.support
    if h.kind == "zero":
        return x.is_zero()
    if h.kind == "axis":
        return x.coords[0] == 0
    return True


band_contains = ideal_contains


def ideal_generated(s: SpaceSpec, D: Sequence[Vec]) -> Handle:
    """Handle of the smallest ideal containing D."""
    D = list(D)
    if not D:
        raise EmptyQuery("generated ideal of an empty set")
    vs._check_dims(s, *D)
    if s.family == POINTWISE:
        support: frozenset[int] = frozenset()
        for d in D:
            support |= d.support()
        return pointwise_handle(support)
    if all(d.is_zero() for d in D):
        return lex_handle("zero")
    if all(d.coords[0] == 0 for d in D):
        return lex_handle("axis")
    return lex_handle("full")


def band_generated(s: SpaceSpec, D: Sequence[Vec]) -> Handle:
    """Handle of the smallest band containing D.

    For both preset families this coincides with the generated ideal's
    handle; the ideal/band distinction lives in the membership oracles.
    """
    return ideal_generated(s, D)


def generators_for(s: SpaceSpec, h: Handle) -> list[Vec]:
    """A canonical finite generating set whose ideal/band handle is h."""
    validate_handle(s, h)
    if h.family == POINTWISE:
        if not h.support:
            return [s.zero()]
        coords = tuple(
            Fraction(1) if (i + 1) in h.support else ZERO for i in range(s.dimension)
        )
        return [Vec(coords)]
    if h.kind == "zero":
        return [s.zero()]
    if h.kind == "axis":
        return [Vec((0, 1))]
    return [Vec((1, 0))]


def _summed_absolute(s: SpaceSpec, D: Sequence[Vec]) -> Vec:
    total = vs.abs_val(s, D[0])
    for d in D[1:]:
        total = total + vs.abs_val(s, d)
    return total


def ideal_member_oracle(s: SpaceSpec, D: Sequence[Vec], x: Vec) -> bool:
    """Definitional membership in the ideal generated by D.

    Searches for lambda >= 0 with grade(|x|, lambda * (|d_1|+...+|d_k|))
    above 1/2.  Using the full sum is no loss: absolute values are
    positive, so a larger combination only helps.  The least sufficient
    lambda is computed per family and the decision is a plain grade
    evaluation, independent of the handle algebra.
    """
    D = list(D)
    if not D:
        raise EmptyQuery("oracle over an empty generating set")
    vs._check_dims(s, x, *D)
    ax = vs.abs_val(s, x)
    if ax.is_zero():
        return True
    u = _summed_absolute(s, D)
    if s.family == POINTWISE:
        lam = ZERO
        for xi, ui in zip(ax.coords, u.coords):
            if xi > 0:
                if ui == 0:
                    return False
                lam = max(lam, xi / ui)
        return vs.mu(s, ax, lam * u) > HALF
    u1, u2 = u.coords
    a1, _ = ax.coords
    if u.is_zero():
        return False
    if u1 > 0:
        lam = ax.coords[0] / u1 + 1
    elif a1 != 0:
        return False
    elif u2 > 0:
        lam = ax.coords[1] / u2
    else:
        return False
    return vs.mu(s, ax, lam * u) > HALF


@dataclass
class StabilizationResult:
    """Trace of the meet-iteration m_n = meet(target, n * generator)."""

    member: bool
    values: list[Vec] = field(repr=False)
    stabilized_at: int | None
    stable_value: Vec | None
    bound: int
    divergent: bool = False

    def __bool__(self):
        return self.member


def stabilization_bound(s: SpaceSpec, gen_abs: Vec, target_abs: Vec) -> tuple[int, bool]:
    """Precomputed index by which the meet-iteration must settle.

    Returns (bound, divergent): when `divergent` is true the lex sequence
    provably never settles (axis generator against a target with nonzero
    first coordinate) and the bound is only a short probe length.
    """
    if s.family == POINTWISE:
        worst = 1
        for g, t in zip(gen_abs.coords, target_abs.coords):
            if g > 0 and t > 0:
                worst = max(worst, math.ceil(t / g))
        return worst + 1, False
    g1, g2 = gen_abs.coords
    t1, t2 = target_abs.coords
    if gen_abs.is_zero():
        return 2, False
    if g1 > 0:
        return math.ceil(t1 / g1) + 2, False
    if t1 > 0:
        return 4, True
    return max(1, math.ceil(t2 / g2)) + 1, False


def meet_climb(s: SpaceSpec, gen_abs: Vec, target_abs: Vec) -> StabilizationResult:
    """Iterate m_n = meet(target, n * gen) until two consecutive terms agree.

    Consecutive equality implies the sequence is settled for good in both
    preset families.  Exceeding the precomputed bound without settling is
    either the detected lex divergence (reported, membership false) or an
    implementation bug (StabilizationOverflow).
    """
    bound, divergent_expected = stabilization_bound(s, gen_abs, target_abs)
    values: list[Vec] = []
    prev: Vec | None = None
    for n in range(1, bound + 2):
        current = vs.meet(s, target_abs, n * gen_abs)
        values.append(current)
        if prev is not None and current == prev:
            return StabilizationResult(
                member=(current == target_abs),
                values=values,
                stabilized_at=n - 1,
                stable_value=current,
                bound=bound,
            )
        prev = current
    if divergent_expected:
        return StabilizationResult(
            member=False,
            values=values,
            stabilized_at=None,
            stable_value=None,
            bound=bound,
            divergent=True,
        )
    raise StabilizationOverflow(
        f"meet iteration for generator {gen_abs} against {target_abs} "
        f"did not settle within its bound {bound}"
    )


def band_member_oracle(s: SpaceSpec, D: Sequence[Vec], x: Vec) -> bool:
    """Definitional membership in the band generated by D, via stabilization."""
    D = list(D)
    if not D:
        raise EmptyQuery("oracle over an empty generating set")
    vs._check_dims(s, x, *D)
    u = _summed_absolute(s, D)
    return meet_climb(s, u, vs.abs_val(s, x)).member


def principal_band_contains(s: SpaceSpec, x: Vec, y: Vec) -> StabilizationResult:
    """Does y belong to the band generated by x?  Returns the full trace.

    Computes m_n = meet(|y|, n * |x|) until it settles; membership means
    the stable value equals |y|.
    """
    vs._check_dims(s, x, y)
    return meet_climb(s, vs.abs_val(s, x), vs.abs_val(s, y))


def disjoint_complement(s: SpaceSpec, h) -> Handle:
    """Handle of the set of elements disjoint from h (a handle or a finite set).

    For a finite set D this equals the complement of the generated band's
    handle, matching the collapse D-perp = (ideal of D)-perp =
    (band of D)-perp.
    """
    if not isinstance(h, Handle):
        D = list(h)
        if not D:
            raise EmptyQuery("disjoint complement of an empty set")
        return disjoint_complement(s, band_generated(s, D))
    validate_handle(s, h)
    if h.family == POINTWISE:
        everything = frozenset(range(1, s.dimension + 1))
        return pointwise_handle(everything - h.support)
    if h.kind == "zero":
        return lex_handle("full")
    return lex_handle("zero")


def is_order_dense(s: SpaceSpec, h: Handle) -> bool:
    """Order density of the ideal: its disjoint complement is the zero handle."""
    return is_zero_handle(s, disjoint_complement(s, h))


def handle_leq(s: SpaceSpec, h1: Handle, h2: Handle) -> bool:
    validate_handle(s, h1)
    validate_handle(s, h2)
    if s.family == POINTWISE:
        return h1.support <= h2.support
    return _LEX_ORDER[h1.kind] <= _LEX_ORDER[h2.kind]


def ideal_sum(s: SpaceSpec, h1: Handle, h2: Handle) -> Handle:
    validate_handle(s, h1)
    validate_handle(s, h2)
    if s.family == POINTWISE:
        return pointwise_handle(h1.support | h2.support)
    return h1 if _LEX_ORDER[h1.kind] >= _LEX_ORDER[h2.kind] else h2


def ideal_intersection(s: SpaceSpec, h1: Handle, h2: Handle) -> Handle:
    validate_handle(s, h1)
    validate_handle(s, h2)
    if s.family == POINTWISE:
        return pointwise_handle(h1.support & h2.support)
    return h1 if _LEX_ORDER[h1.kind] <= _LEX_ORDER[h2.kind] else h2


def split_sum(s: SpaceSpec, h1: Handle, h2: Handle, x: Vec) -> tuple[Vec, Vec]:
    """Constructive witness that x lies in the sum: parts in h1 and h2 with x1 + x2 = x.

    Pointwise: mask x to the first support and leave the rest.  When the
    handles are disjoint this is the unique such decomposition.
    """
    if not ideal_contains(s, ideal_sum(s, h1, h2), x):
        raise ValueError(f"{x} does not belong to the sum of {h1} and {h2}")
    if s.family == POINTWISE:
        first = Vec._wrap(
            tuple(c if (i + 1) in h1.support else ZERO for i, c in enumerate(x.coords))
        )
        return first, x - first
    if _LEX_ORDER[h1.kind] >= _LEX_ORDER[h2.kind]:
        return x, s.zero()
    return s.zero(), x


def is_direct_sum_decomposition(s: SpaceSpec, h1: Handle, h2: Handle) -> bool:
    """True iff the handles intersect in zero and sum to the whole space.

    When true, each handle is the disjoint complement of the other
    (asserted: a failure would be a bug in the handle algebra).
    """
    ok = is_zero_handle(s, ideal_intersection(s, h1, h2)) and is_full_handle(
        s, ideal_sum(s, h1, h2)
    )
    if ok:
        assert disjoint_complement(s, h1) == h2, "direct summand is not the complement"
        assert disjoint_complement(s, h2) == h1, "direct summand is not the complement"
    return ok


def solid_hull_contains(s: SpaceSpec, A: Sequence[Vec], x: Vec) -> bool:
    """Membership of x in the solid hull of A: some member absolutely dominates x."""
    A = list(A)
    if not A:
        raise EmptyQuery("solid hull of an empty set")
    ax = vs.abs_val(s, x)
    return any(vs.mu(s, ax, vs.abs_val(s, y)) > HALF for y in A)


@dataclass
class SolidCheck:
    ok: bool
    violation: tuple[Vec, Vec] | None
    checked: int

    def __bool__(self):
        return self.ok


def _dominated_grid(s: SpaceSpec, y: Vec) -> Iterable[Vec]:
    """Integer grid points absolutely dominated by y (the sample grid for solidity)."""
    ay = vs.abs_val(s, y)
    if s.family == POINTWISE:
        ranges = [range(-math.floor(c), math.floor(c) + 1) for c in ay.coords]
    else:
        k1 = math.floor(ay.coords[0])
        k2 = math.floor(ay.coords[1]) + 1
        ranges = [range(-k1, k1 + 1), range(-k2, k2 + 1)]
    for point in product(*ranges):
        yield Vec(point)


def is_solid(s: SpaceSpec, A: Sequence[Vec]) -> SolidCheck:
    """Closure of the finite set A under absolute dominance, over the integer sample grid.

    Returns the first (dominated point, member) pair missing from A, if any.
    """
    members = set(A)
    checked = 0
    for y in A:
        ay = vs.abs_val(s, y)
        for candidate in _dominated_grid(s, y):
            if vs.mu(s, vs.abs_val(s, candidate), ay) > HALF:
                checked += 1
                if candidate not in members:
                    return SolidCheck(False, (candidate, y), checked)
    return SolidCheck(True, None, checked)


@dataclass
class SubspaceCheck:
    ok: bool
    witness: tuple[Vec, Vec, Vec] | None
    method: str

    def __bool__(self):
        return self.ok


def is_riesz_subspace(
    s: SpaceSpec, basis: Sequence[Vec], *, seed: int = 0, samples: int = 60
) -> SubspaceCheck:
    """Is the span of the basis closed under join (and hence meet)?

    Closed forms: the lex order is total, so joins never leave any
    subspace; a pointwise span of (scaled) standard basis vectors is a
    coordinate-support subspace; the all-equal-coordinates line is closed
    under max.  Everything else is a sampled verdict: random span members
    are joined and tested for span membership by exact linear solve.
    """
    basis = list(basis)
    if not basis:
        raise EmptyQuery("empty basis")
    vs._check_dims(s, *basis)
    if rank(basis) != len(basis):
        raise DegenerateBasis("basis vectors are linearly dependent")
    if s.family == LEX:
        return SubspaceCheck(True, None, "closed-form: total order")
    reduced = rref(basis)
    if all(len(row.support()) == 1 for row in reduced):
        return SubspaceCheck(True, None, "closed-form: coordinate-support subspace")
    if len(reduced) == 1 and len(set(reduced[0].coords)) == 1:
        return SubspaceCheck(True, None, "closed-form: constant-coordinates line")
    import random

    rng = random.Random(f"riesz-subspace:{seed}")
    for _ in range(samples):
        coeffs_x = [Fraction(rng.randint(-6, 6), rng.choice((1, 2))) for _ in basis]
        coeffs_y = [Fraction(rng.randint(-6, 6), rng.choice((1, 2))) for _ in basis]
        x = s.zero()
        y = s.zero()
        for cx, cy, b in zip(coeffs_x, coeffs_y, basis):
            x = x + cx * b
            y = y + cy * b
        joined = vs.join(s, x, y)
        if in_span(basis, joined) is None:
            return SubspaceCheck(False, (x, y, joined), "sampled")
    return SubspaceCheck(True, None, "sampled")
