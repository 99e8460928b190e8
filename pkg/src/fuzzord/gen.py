"""Seeded random generators shared by the law suites and the tests.

Everything takes an explicit ``random.Random`` so that a run is fully
determined by its seed.  Coordinates are small rationals (bounded
numerators over denominators 1..3) to keep all downstream arithmetic
exact and fast.

The foset generator samples a random DAG, takes its transitive closure,
and grades the diagonal 1, strictly related pairs with one constant
c in (1/2, 1], and everything else 0.  Such a matrix is always a fuzzy
order: antisymmetry holds because the closure of a DAG is a strict
partial order, and max-min transitivity holds because any composed grade
min(c, c) = c is matched by the closure edge.

The bounded-lattice generator adds a global bottom and top around a
random poset of middles.  With at most three middles (size <= 5) every
such poset is a lattice: the upper bounds of any pair sit inside a
chain through the top, so a least one always exists, and dually.
"""

from __future__ import annotations

import random
import string
from fractions import Fraction
from itertools import combinations

from .foset import MembershipMatrix
from .ideals import Handle, lex_handle, pointwise_handle
from .linalg import Vec
from .space import LEX, SpaceSpec

GRADE_CHOICES = (
    Fraction(3, 5),
    Fraction(2, 3),
    Fraction(3, 4),
    Fraction(4, 5),
    Fraction(1),
)


def random_fraction(rng: random.Random, lo=-10, hi=10, denominators=(1, 2, 3)) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.choice(denominators))


def random_vec(rng: random.Random, dim: int, lo=-10, hi=10, denominators=(1, 2, 3)) -> Vec:
    return Vec(random_fraction(rng, lo, hi, denominators) for _ in range(dim))


def random_nonneg_vec(rng: random.Random, dim: int, hi=10, denominators=(1, 2, 3)) -> Vec:
    return Vec(random_fraction(rng, 0, hi, denominators) for _ in range(dim))


def random_cone_vec(s: SpaceSpec, rng: random.Random, hi=10) -> Vec:
    """A positive-or-zero vector of the space (grade(0, x) > 1/2)."""
    if s.family == LEX:
        if rng.random() < 0.5:
            return Vec((random_fraction(rng, 1, hi), random_fraction(rng, -hi, hi)))
        return Vec((Fraction(0), random_fraction(rng, 0, hi)))
    return random_nonneg_vec(rng, s.dimension, hi=hi)


def random_positive_nonzero_vec(s: SpaceSpec, rng: random.Random, hi=10) -> Vec:
    for _ in range(64):
        v = random_cone_vec(s, rng, hi=hi)
        if not v.is_zero():
            return v
    # fall back to a guaranteed strictly positive direction
    return Vec((0, 1)) if s.family == LEX else Vec([1] * s.dimension)


def random_related_pair(s: SpaceSpec, rng: random.Random) -> tuple[Vec, Vec]:
    """A pair with grade(x, y) > 1/2: y = x plus a cone vector."""
    x = random_vec(rng, s.dimension)
    return x, x + random_cone_vec(s, rng)


def random_scalar(rng: random.Random, lo=-6, hi=6, denominators=(1, 2, 3)) -> Fraction:
    return random_fraction(rng, lo, hi, denominators)


def _labels(size: int) -> tuple[str, ...]:
    if size <= 26:
        return tuple(string.ascii_lowercase[:size])
    return tuple(f"e{i}" for i in range(size))


def _closure(rel: list[list[bool]]) -> None:
    n = len(rel)
    for k in range(n):
        for i in range(n):
            if rel[i][k]:
                row_i, row_k = rel[i], rel[k]
                for j in range(n):
                    if row_k[j]:
                        row_i[j] = True


def _matrix_from_relation(
    labels: tuple[str, ...], rel: list[list[bool]], grade: Fraction
) -> MembershipMatrix:
    grades = {}
    for i, x in enumerate(labels):
        for j, y in enumerate(labels):
            if i != j and rel[i][j]:
                grades[(x, y)] = grade
    return MembershipMatrix(labels, grades)


def random_foset(
    rng: random.Random, size: int, grade: Fraction | None = None, edge_prob: float = 0.35
) -> MembershipMatrix:
    """Random fuzzy order: random DAG, transitive closure, constant strict grade."""
    if grade is None:
        grade = rng.choice(GRADE_CHOICES)
    labels = _labels(size)
    order = list(range(size))
    rng.shuffle(order)
    rel = [[False] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            if rng.random() < edge_prob:
                rel[order[i]][order[j]] = True
    _closure(rel)
    return _matrix_from_relation(labels, rel, grade)


def random_bounded_lattice(
    rng: random.Random, size: int, grade: Fraction | None = None
) -> MembershipMatrix:
    """Random lattice of up to 5 elements: bottom + random middles + top."""
    if not 1 <= size <= 5:
        raise ValueError("the bounded construction guarantees lattices only up to size 5")
    if grade is None:
        grade = rng.choice(GRADE_CHOICES)
    labels = _labels(size)
    rel = [[False] * size for _ in range(size)]
    if size >= 2:
        bottom, top = 0, size - 1
        for i in range(size):
            if i != bottom:
                rel[bottom][i] = True
            if i != top:
                rel[i][top] = True
        middles = list(range(1, size - 1))
        rng.shuffle(middles)
        for a, b in combinations(range(len(middles)), 2):
            if rng.random() < 0.4:
                rel[middles[a]][middles[b]] = True
        _closure(rel)
    return _matrix_from_relation(labels, rel, grade)


def mutate_foset(rng: random.Random, m: MembershipMatrix) -> tuple[MembershipMatrix, str]:
    """A single-entry mutation guaranteed to break one axiom.

    Kinds: lower a diagonal grade (reflexivity), raise the reverse of a
    strictly related pair so the sum exceeds 1 (antisymmetry), or cut the
    composite edge of a 2-chain to zero (transitivity).  Falls back to the
    always-available reflexivity kind.
    """
    els = m.elements
    related = [
        (x, y)
        for x in els
        for y in els
        if x != y and m.grade(x, y) > Fraction(1, 2)
    ]
    chains = [
        (x, y, z)
        for (x, y) in related
        for z in els
        if z != x and z != y and m.grade(y, z) > Fraction(1, 2)
    ]
    kinds = ["reflexivity"]
    if related:
        kinds.append("antisymmetry")
    if chains:
        kinds.append("transitivity")
    kind = rng.choice(kinds)
    if kind == "reflexivity":
        x = rng.choice(els)
        return m.with_grade(x, x, Fraction(rng.randint(0, 9), 10)), kind
    if kind == "antisymmetry":
        x, y = rng.choice(related)
        return m.with_grade(y, x, Fraction(1)), kind
    x, y, z = rng.choice(chains)
    return m.with_grade(x, z, Fraction(0)), kind


def random_pointwise_handle(rng: random.Random, dim: int) -> Handle:
    support = [i for i in range(1, dim + 1) if rng.random() < 0.5]
    return pointwise_handle(support)


def random_handle(s: SpaceSpec, rng: random.Random) -> Handle:
    if s.family == LEX:
        return lex_handle(rng.choice(("zero", "axis", "full")))
    return random_pointwise_handle(rng, s.dimension)
