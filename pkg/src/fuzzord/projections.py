"""Band projections of the preset spaces as explicit exact-rational matrices.

Every pointwise handle is a projection band and its projection is the
diagonal 0/1 mask on the handle's support.  In the lex plane only the
trivial bands project (identity and zero matrix); the axis band has no
complementary summand, so asking for its projection raises.

The operator order used throughout is the cone-restricted one: S is
below T when T - S is a fuzzy positive operator (it maps the positive
cone into the positive cone).  Quantifying the pointwise inequality over
the whole space instead of the cone would make even genuine band
projections fail it, so the cone version is the one all the
characterizations below use.

Fuzzy positivity of a matrix has exact closed forms for both preset
families (pointwise: all entries nonnegative; lex: a short case split on
the four entries), each corroborated by seeded cone sampling.  The
stricter grade-monotone notion (output grades dominate input grades
pairwise) is genuinely stronger: an identity map between two spaces
whose grade constants differ is fuzzy positive but not grade-monotone.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import ideals, space as vs
from .errors import (
    DimensionError,
    NotPositive,
    NotPositiveOperator,
    NotProjectionBand,
)
from .ideals import Handle, band_generated, disjoint_complement, validate_handle
from .linalg import Matrix, Vec
from .rational import HALF, ZERO
from .space import LEX, POINTWISE, SpaceSpec


def is_projection_band(s: SpaceSpec, b: Handle) -> bool:
    """A band projects iff it and its disjoint complement decompose the space."""
    validate_handle(s, b)
    return ideals.is_direct_sum_decomposition(s, b, disjoint_complement(s, b))


def band_projection_operator(s: SpaceSpec, b: Handle) -> Matrix:
    """The matrix projecting onto b along its disjoint complement."""
    validate_handle(s, b)
    if not is_projection_band(s, b):
        raise NotProjectionBand(
            f"{b} is not a projection band: it does not split the space with its complement"
        )
    if s.family == POINTWISE:
        return Matrix.mask(s.dimension, b.support)
    return Matrix.identity(2) if b.kind == "full" else Matrix.zeros(2)


def mask_handle_of_matrix(s: SpaceSpec, T: Matrix) -> Handle | None:
    """The projection-band handle whose mask is T, if T is such a mask."""
    if T.shape != (s.dimension, s.dimension):
        raise DimensionError(f"operator shape {T.shape} does not match the space")
    if s.family == LEX:
        if T == Matrix.identity(2):
            return ideals.lex_handle("full")
        if T == Matrix.zeros(2):
            return ideals.lex_handle("zero")
        return None
    support = set()
    for i, row in enumerate(T.rows):
        for j, entry in enumerate(row):
            if i == j:
                if entry == 1:
                    support.add(i + 1)
                elif entry != 0:
                    return None
            elif entry != 0:
                return None
    return ideals.pointwise_handle(support)


def sup_of_band_interval(s: SpaceSpec, b: Handle, x: Vec) -> Vec | None:
    """Closed form of sup(b intersected with [0, x]) for positive x, or None.

    The only preset case without a supremum is the lex axis against an x
    with positive first coordinate: every axis vector lies in the
    interval, so the upper bounds are exactly the vectors with positive
    first coordinate, and none of them is least.
    """
    validate_handle(s, b)
    vs._check_dims(s, x)
    if s.family == POINTWISE:
        return Vec._wrap(
            tuple(c if (i + 1) in b.support else ZERO for i, c in enumerate(x.coords))
        )
    if b.kind == "full":
        return x
    if b.kind == "zero":
        return s.zero()
    return None if x.coords[0] > 0 else x


def projection_by_interval_sup(s: SpaceSpec, b: Handle, x: Vec) -> Vec:
    """Project a positive x onto b through the interval supremum characterization."""
    if not vs.is_positive(s, x):
        raise NotPositive(f"{x} is not positive")
    operator = band_projection_operator(s, b)  # raises NotProjectionBand first
    z = sup_of_band_interval(s, b, x)
    assert z is not None, "projection band lost its interval supremum"
    assert z == operator @ x, "interval supremum disagrees with the projection matrix"
    return z


def principal_projection_trace(s: SpaceSpec, x: Vec, y: Vec):
    """Stabilization trace of meet(y, n*|x|) for positive y; exposes the index and bound."""
    if not vs.is_positive(s, y):
        raise NotPositive(f"{y} is not positive")
    return ideals.meet_climb(s, vs.abs_val(s, x), y)


def principal_projection(s: SpaceSpec, x: Vec, y: Vec) -> Vec:
    """Projection of y onto the band generated by x, by meet-iteration.

    Stated for positive y as the supremum of {y ^ n|x|}; extended to
    general y through the lattice split P(y) = P(y+) - P(y-), which
    matches the linearity of the underlying matrix.
    """
    vs._check_dims(s, x, y)
    h = band_generated(s, (x,))
    if not is_projection_band(s, h):
        raise NotProjectionBand(
            f"the band generated by {x} is not a projection band "
            "(the lex axis admits no complementary summand)"
        )
    if vs.is_positive(s, y):
        trace = principal_projection_trace(s, x, y)
        assert trace.stable_value is not None
        return trace.stable_value
    plus = principal_projection(s, x, vs.pos_part(s, y))
    minus = principal_projection(s, x, vs.neg_part(s, y))
    return plus - minus


@dataclass
class PositivityCheck:
    ok: bool
    witness: Vec | None
    method: str

    def __bool__(self):
        return self.ok


def _random_cone_vec(s: SpaceSpec, rng: random.Random) -> Vec:
    den = rng.choice((1, 2, 3))
    if s.family == POINTWISE:
        return Vec(Fraction(rng.randint(0, 10), den) for _ in range(s.dimension))
    if rng.random() < 0.5:
        return Vec((Fraction(rng.randint(1, 10), den), Fraction(rng.randint(-10, 10), den)))
    return Vec((ZERO, Fraction(rng.randint(0, 10), den)))


def _closed_form_positive(s_in: SpaceSpec, s_out: SpaceSpec, T: Matrix):
    """Exact cone-preservation test per family pair; None when no closed form applies."""
    if s_in.family == POINTWISE and s_out.family == POINTWISE:
        for j in range(T.shape[1]):
            if any(row[j] < 0 for row in T.rows):
                return False, Vec.unit(s_in.dimension, j + 1)
        return True, None
    if s_in.family == LEX and s_out.family == LEX:
        (a, b), (c, d) = T.rows
        if b == 0 and d >= 0 and (a > 0 or (a == 0 and d == 0 and c >= 0)):
            return True, None
        if b != 0:
            return False, Vec((1, Fraction(-1 - a) / b))
        if a < 0:
            return False, Vec((1, 0))
        if d < 0:
            return False, Vec((0, 1))
        if d > 0:  # a == 0 here
            return False, Vec((1, Fraction(-(abs(c) + 1)) / d))
        return False, Vec((1, 0))  # a == 0, d == 0, c < 0
    return None


def is_fuzzy_positive(
    s_in: SpaceSpec, s_out: SpaceSpec, T: Matrix, *, seed: int = 0, samples: int = 120
) -> PositivityCheck:
    """Does T carry the positive cone of the input space into the output cone?

    Uses the family closed form when one applies (always, for the preset
    pairs) and corroborates it with seeded cone samples; a disagreement
    would be a bug, not bad input.
    """
    if T.shape != (s_out.dimension, s_in.dimension):
        raise DimensionError(
            f"operator shape {T.shape} does not map a {s_in.dimension}-space "
            f"to a {s_out.dimension}-space"
        )
    closed = _closed_form_positive(s_in, s_out, T)
    rng = random.Random(f"positive:{seed}")
    sampled_witness = None
    for _ in range(samples):
        x = _random_cone_vec(s_in, rng)
        if not vs.is_positive(s_out, T @ x):
            sampled_witness = x
            break
    if closed is None:
        return PositivityCheck(sampled_witness is None, sampled_witness, "sampled")
    ok, witness = closed
    if ok:
        assert sampled_witness is None, "closed-form positivity contradicted by a sample"
    else:
        assert not vs.is_positive(s_out, T @ witness), "positivity witness does not violate"
    return PositivityCheck(ok, witness, "closed-form+samples")


def operator_leq(s: SpaceSpec, S: Matrix, T: Matrix, **kwargs) -> PositivityCheck:
    """Cone-restricted operator order: S below T iff T - S is fuzzy positive."""
    return is_fuzzy_positive(s, s, T - S, **kwargs)


@dataclass
class GradeMonotoneCheck:
    ok: bool
    witness: tuple[Vec, Vec, Fraction, Fraction] | None

    def __bool__(self):
        return self.ok


def is_grade_monotone_positive(
    s_in: SpaceSpec,
    s_out: SpaceSpec,
    T: Matrix,
    sample_count: int = 200,
    *,
    seed: int = 0,
) -> GradeMonotoneCheck:
    """Sampled check of the stricter notion: output grades dominate input grades.

    Requires grade(Tx, Ty) >= grade(x, y) on every sampled pair; returns
    the first violating pair with both grades.  Distinct from cone
    positivity: mapping a space with a high grade constant into one with
    a lower constant preserves the cone yet fails here on any strictly
    related pair.
    """
    if T.shape != (s_out.dimension, s_in.dimension):
        raise DimensionError("operator shape does not match the spaces")
    rng = random.Random(f"grade-monotone:{seed}")
    den = (1, 2, 3)
    for _ in range(sample_count):
        x = Vec(Fraction(rng.randint(-8, 8), rng.choice(den)) for _ in range(s_in.dimension))
        if rng.random() < 0.5:
            delta = _random_cone_vec(s_in, rng)
            y = x + delta
        else:
            y = Vec(
                Fraction(rng.randint(-8, 8), rng.choice(den)) for _ in range(s_in.dimension)
            )
        grade_in = vs.mu(s_in, x, y)
        grade_out = vs.mu(s_out, T @ x, T @ y)
        if grade_out < grade_in:
            return GradeMonotoneCheck(False, (x, y, grade_in, grade_out))
    return GradeMonotoneCheck(True, None)


def absolute_bound_check(
    s_in: SpaceSpec, T: Matrix, x: Vec, s_out: SpaceSpec | None = None
) -> bool:
    """For a fuzzy positive T: is |Tx| below T|x| through the output threshold?"""
    s_out = s_out or s_in
    if not is_fuzzy_positive(s_in, s_out, T):
        raise NotPositiveOperator("the absolute bound only holds for fuzzy positive operators")
    lhs = vs.abs_val(s_out, T @ x)
    rhs = T @ vs.abs_val(s_in, x)
    return vs.mu(s_out, lhs, rhs) > HALF


def _column_support(T: Matrix) -> frozenset[int]:
    out: set[int] = set()
    for col in T.columns():
        out |= col.support()
    return frozenset(out)


def _ranges_disjoint(s: SpaceSpec, T: Matrix) -> bool:
    """Exact test that every T-image is disjoint from every (I-T)-image."""
    identity = Matrix.identity(s.dimension)
    if s.family == POINTWISE:
        return not (_column_support(T) & _column_support(identity - T))
    # lex disjointness forces one side to vanish
    return T == identity or T == Matrix.zeros(2)


@dataclass
class ProjectionClassification:
    mask_handle: Handle | None
    is_mask_of_projection_band: bool
    idempotent: bool
    positive: PositivityCheck
    below_identity: PositivityCheck
    algebraic: bool
    ranges_disjoint: bool
    disjoint_witness: tuple[Vec, Vec] | None
    is_band_projection: bool

    def __bool__(self):
        return self.is_band_projection


def classify_band_projection(
    s: SpaceSpec, T: Matrix, *, seed: int = 0, samples: int = 80
) -> ProjectionClassification:
    """Evaluate the three equivalent descriptions of a band projection and
    assert they agree on this instance.

    (a) T is the mask of a projection-band handle; (b) T is an idempotent
    fuzzy positive operator below the identity in the cone order; (c) the
    ranges of T and I - T are disjoint.  All three are exact for the
    preset families; (c) additionally records a sampled witness pair when
    it fails.
    """
    handle = mask_handle_of_matrix(s, T)
    is_mask = handle is not None and is_projection_band(s, handle)
    idempotent = T.is_idempotent()
    positive = is_fuzzy_positive(s, s, T, seed=seed, samples=samples)
    below = operator_leq(s, T, Matrix.identity(s.dimension), seed=seed, samples=samples)
    algebraic = idempotent and positive.ok and below.ok
    disjoint = _ranges_disjoint(s, T)
    witness = None
    if not disjoint:
        rng = random.Random(f"classify:{seed}")
        identity = Matrix.identity(s.dimension)
        candidates = [Vec.unit(s.dimension, i + 1) for i in range(s.dimension)]
        candidates += [_random_cone_vec(s, rng) for _ in range(samples)]
        for x in candidates:
            for y in candidates:
                if not vs.is_disjoint(s, T @ x, (identity - T) @ y):
                    witness = (T @ x, (identity - T) @ y)
                    break
            if witness:
                break
    assert is_mask == algebraic == disjoint, (
        "the three band-projection characterizations disagree: "
        f"mask={is_mask} algebraic={algebraic} disjoint-ranges={disjoint}"
    )
    return ProjectionClassification(
        mask_handle=handle if is_mask else None,
        is_mask_of_projection_band=is_mask,
        idempotent=idempotent,
        positive=positive,
        below_identity=below,
        algebraic=algebraic,
        ranges_disjoint=disjoint,
        disjoint_witness=witness,
        is_band_projection=is_mask,
    )


@dataclass
class ProjectionComparison:
    included: bool
    product_is_first: bool
    operator_below: bool

    @property
    def agree(self) -> bool:
        return self.included == self.product_is_first == self.operator_below

    def __bool__(self):
        return self.included


def compare_projections(
    s: SpaceSpec, b1: Handle, b2: Handle, *, seed: int = 0, samples: int = 40
) -> ProjectionComparison:
    """The three equivalent orderings of projection bands, asserted to agree:
    handle inclusion, the product identities P1 P2 = P2 P1 = P1, and the
    cone order on the projection matrices."""
    p1 = band_projection_operator(s, b1)
    p2 = band_projection_operator(s, b2)
    included = ideals.handle_leq(s, b1, b2)
    product = (p1 @ p2 == p1) and (p2 @ p1 == p1)
    below = operator_leq(s, p1, p2, seed=seed, samples=samples).ok
    comparison = ProjectionComparison(included, product, below)
    assert comparison.agree, (
        f"projection order characterizations disagree on {b1} vs {b2}: "
        f"inclusion={included} product={product} cone-order={below}"
    )
    return comparison


@dataclass
class OrderInterval:
    """The interval [lo, hi] of a space, read through the grade threshold."""

    s: SpaceSpec
    lo: Vec
    hi: Vec

    def __post_init__(self):
        if not vs.mu(self.s, self.lo, self.hi) > HALF:
            raise ValueError(f"[{self.lo}, {self.hi}] is not a valid interval")

    def contains(self, z: Vec) -> bool:
        return vs.mu(self.s, self.lo, z) > HALF and vs.mu(self.s, z, self.hi) > HALF
