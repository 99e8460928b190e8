"""Executable law suites.

Every structural fact the library relies on is packaged here as a named,
seeded check: it samples instances (or enumerates handles exhaustively),
counts failures, and keeps the first counterexample with full exact
values.  An exception raised inside a trial counts as a failure of that
trial, so internal assertion failures surface as suite counterexamples
rather than crashes.

All sampling is driven by ``random.Random(f"{seed}:{tag}")``, so a run
is completely determined by its seed and case count.  Checks that
enumerate handles report the enumeration size as their case count and
ignore the requested one.

Suites: foset (axioms, bound scans, pairwise lattice laws), riesz
(vector-compatibility, cone algebra, absolute-value and positive-part
laws, decomposition, disjointness, Archimedean classification), ideals
(solidity, generated handles vs the scaled-dominance oracle, sums,
complements, density), bands (stabilization oracle, complement collapse,
direct sums, the Archimedean dichotomy), projections (operator
decomposition, interval suprema, the projection algebra and order,
classification, positivity bounds, the two-notions-of-positivity
contrast), convergence (certificates, uniqueness, monotone limits,
sandwich, limit laws, order closure, the sharp negative case).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import convergence as cv
from . import foset as fo
from . import gen
from . import ideals as il
from . import projections as pj
from . import space as vs
from .linalg import Matrix, Vec
from .rational import HALF

DEFAULT_CASES = 500
DEFAULT_HORIZON = 128


@dataclass
class CheckResult:
    tag: str
    cases: int
    failures: int
    counterexample: str | None

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def to_json(self) -> dict:
        return {
            "tag": self.tag,
            "cases": self.cases,
            "failures": self.failures,
            "counterexample": self.counterexample,
        }


@dataclass
class SuiteResult:
    suite: str
    seed: int
    cases: int
    checks: list[CheckResult]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def check(self, tag: str) -> CheckResult:
        for c in self.checks:
            if c.tag == tag:
                return c
        raise KeyError(tag)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "cases": self.cases,
            "ok": self.ok,
            "checks": [c.to_json() for c in self.checks],
        }


def _run(tag: str, count: int, trial) -> CheckResult:
    failures = 0
    first = None
    for i in range(count):
        try:
            detail = trial(i)
        except Exception as exc:  # a crashed trial is a failed trial
            detail = f"{type(exc).__name__}: {exc}"
        if detail is not None:
            failures += 1
            if first is None:
                first = detail
    return CheckResult(tag, count, failures, first)


def _run_items(tag: str, items, fn) -> CheckResult:
    items = list(items)
    return _run(tag, len(items), lambda i: fn(items[i]))


def _rng(seed: int, tag: str) -> random.Random:
    return random.Random(f"{seed}:{tag}")


def _pointwise_spaces(dims=(1, 2, 3)) -> list[vs.SpaceSpec]:
    return [vs.pointwise_space(d) for d in dims]


def _all_spaces() -> list[vs.SpaceSpec]:
    return _pointwise_spaces() + [vs.lex_plane()]


def _unit_positive(s: vs.SpaceSpec) -> Vec:
    return Vec((0, 1)) if s.family == vs.LEX else Vec([1] * s.dimension)


# ---------------------------------------------------------------------------
# foset suite


def run_foset_suite(seed: int = 0, cases: int = DEFAULT_CASES, horizon: int = DEFAULT_HORIZON) -> SuiteResult:
    checks: list[CheckResult] = []
    rng = _rng(seed, "foset/generate")
    fosets = [gen.random_foset(rng, rng.randint(2, 8)) for _ in range(cases)]

    def valid_trial(i):
        report = fo.validate_fuzzy_order(fosets[i])
        if report.is_valid:
            return None
        return f"generator produced an invalid order: {report.summary()}"

    checks.append(_run("foset/generator-valid", cases, valid_trial))

    mrng = _rng(seed, "foset/mutate")

    def mutation_trial(i):
        mutant, kind = gen.mutate_foset(mrng, fosets[i])
        if not fo.validate_fuzzy_order(mutant).is_valid:
            return None
        return f"{kind} mutation went undetected on {mutant.to_json()}"

    checks.append(_run("foset/mutation-detected", cases, mutation_trial))

    lrng = _rng(seed, "foset/lattices")
    lattice_count = min(cases, 250)
    lattices = [gen.random_bounded_lattice(lrng, lrng.randint(1, 5)) for _ in range(lattice_count)]

    def subsets(elements):
        n = len(elements)
        for bits in range(1, 1 << n):
            yield [elements[k] for k in range(n) if bits >> k & 1]

    def uniqueness_trial(i):
        m = lattices[i]
        for A in subsets(m.elements):
            if len(fo.supremum_candidates(m, A)) > 1:
                return f"two supremum candidates for {A} in {m.to_json()}"
            if len(fo.infimum_candidates(m, A)) > 1:
                return f"two infimum candidates for {A} in {m.to_json()}"
        return None

    checks.append(_run("foset/sup-inf-unique", lattice_count, uniqueness_trial))

    def lattice_laws_trial(i):
        m = lattices[i]
        if not fo.is_lattice(m):
            return f"bounded construction failed to be a lattice: {m.to_json()}"
        for x in m.elements:
            if fo.join(m, x, x) != x or fo.meet(m, x, x) != x:
                return f"idempotence fails at {x}"
            for y in m.elements:
                if fo.join(m, x, y) != fo.join(m, y, x):
                    return f"join not commutative on ({x}, {y})"
                if fo.meet(m, x, y) != fo.meet(m, y, x):
                    return f"meet not commutative on ({x}, {y})"
                if fo.meet(m, x, fo.join(m, x, y)) != x:
                    return f"absorption x ^ (x v y) fails on ({x}, {y})"
                if fo.join(m, x, fo.meet(m, x, y)) != x:
                    return f"absorption x v (x ^ y) fails on ({x}, {y})"
        return None

    checks.append(_run("foset/lattice-laws", lattice_count, lattice_laws_trial))

    def threshold_trial(i):
        m = lattices[i]
        for x in m.elements:
            for y in m.elements:
                related = m.grade(x, y) > HALF
                meet_is_x = fo.meet(m, x, y) == x
                join_is_y = fo.join(m, x, y) == y
                if not (related == meet_is_x == join_is_y):
                    return (
                        f"threshold equivalence broken on ({x}, {y}): grade {m.grade(x, y)}, "
                        f"meet {fo.meet(m, x, y)}, join {fo.join(m, x, y)}"
                    )
        return None

    checks.append(_run("foset/threshold-equivalence", lattice_count, threshold_trial))

    def directed_trial(i):
        m = lattices[i]
        if fo.is_directed(m, m.elements, "both"):
            return None
        return f"bounded lattice not directed: {m.to_json()}"

    checks.append(_run("foset/bounded-lattice-directed", lattice_count, directed_trial))

    return SuiteResult("foset", seed, cases, checks)


# ---------------------------------------------------------------------------
# riesz suite


def _per_space(tag, spaces, cases, trial):
    """Run `cases` seeded trials in each listed space under one check tag."""
    total = cases * len(spaces)

    def dispatch(i):
        s = spaces[i // cases]
        return trial(s, i)

    return _run(tag, total, dispatch)


def run_riesz_suite(seed: int = 0, cases: int = DEFAULT_CASES, horizon: int = DEFAULT_HORIZON) -> SuiteResult:
    checks: list[CheckResult] = []
    spaces = _all_spaces()

    def compat_trial(s, i):
        rng = _rng(seed, f"riesz/compat:{s.family}:{s.dimension}:{i}")
        x, y = gen.random_related_pair(s, rng)
        z = gen.random_vec(rng, s.dimension)
        lam = abs(gen.random_scalar(rng))
        g = vs.mu(s, x, y)
        if not g <= vs.mu(s, x + z, y + z):
            return f"translation drops the grade: x={x} y={y} z={z}"
        if not g <= vs.mu(s, lam * x, lam * y):
            return f"scaling by {lam} drops the grade: x={x} y={y}"
        a, b = gen.random_related_pair(s, rng)
        if not vs.mu(s, x + a, y + b) > HALF:
            return f"sum of related pairs not related: ({x},{y}) + ({a},{b})"
        return None

    checks.append(_per_space("riesz/order-translation-scaling", spaces, cases, compat_trial))

    def cone_trial(s, i):
        rng = _rng(seed, f"riesz/cone:{s.family}:{s.dimension}:{i}")
        x = gen.random_cone_vec(s, rng)
        y = gen.random_cone_vec(s, rng)
        if not vs.is_positive(s, x + y):
            return f"cone not closed under addition: {x} + {y}"
        if vs.is_positive(s, -x) and not x.is_zero():
            return f"{x} and its negation both positive"
        alpha = abs(gen.random_scalar(rng))
        if not vs.is_positive(s, alpha * x):
            return f"cone not closed under scaling: {alpha} * {x}"
        a, b = gen.random_related_pair(s, rng)
        neg = -abs(gen.random_scalar(rng))
        if not vs.mu(s, neg * b, neg * a) > HALF:
            return f"negative scaling fails to reverse: {a} <= {b}, scalar {neg}"
        lo, hi = sorted((gen.random_scalar(rng), gen.random_scalar(rng)))
        if not vs.mu(s, lo * x, hi * x) > HALF:
            return f"scalar monotonicity fails on {x} with {lo} <= {hi}"
        return None

    checks.append(_per_space("riesz/positive-cone-algebra", spaces, cases, cone_trial))

    def scaling_trial(s, i):
        rng = _rng(seed, f"riesz/scaling:{s.family}:{s.dimension}:{i}")
        x, y = gen.random_vec(rng, s.dimension), gen.random_vec(rng, s.dimension)
        lam = abs(gen.random_scalar(rng))
        if vs.join(s, lam * x, lam * y) != lam * vs.join(s, x, y):
            return f"join does not scale by {lam} on {x}, {y}"
        neg = -abs(gen.random_scalar(rng))
        if vs.meet(s, neg * x, neg * y) != neg * vs.join(s, x, y):
            return f"negative scaling does not swap join/meet on {x}, {y}"
        x2, y2 = gen.random_vec(rng, s.dimension), gen.random_vec(rng, s.dimension)
        sums = [x + y, x + y2, x2 + y, x2 + y2]
        if vs.sup_finite(s, sums) != vs.join(s, x, x2) + vs.join(s, y, y2):
            return f"supremum not additive over {{{x},{x2}}} + {{{y},{y2}}}"
        return None

    checks.append(_per_space("riesz/join-scaling-additivity", spaces, cases, scaling_trial))

    def sup_def_trial(s, i):
        rng = _rng(seed, f"riesz/supdef:{s.family}:{s.dimension}:{i}")
        x, y = gen.random_vec(rng, s.dimension), gen.random_vec(rng, s.dimension)
        z = vs.join(s, x, y)
        if not (vs.le(s, x, z) and vs.le(s, y, z)):
            return f"join {z} is not an upper bound of {x}, {y}"
        above = z + gen.random_cone_vec(s, rng)
        if not vs.le(s, z, above):
            return f"join {z} not below the perturbed bound {above}"
        w = gen.random_vec(rng, s.dimension)
        if vs.le(s, x, w) and vs.le(s, y, w) and not vs.le(s, z, w):
            return f"sampled upper bound {w} of {x}, {y} is below the join {z}"
        m = vs.meet(s, x, y)
        if not (vs.le(s, m, x) and vs.le(s, m, y)):
            return f"meet {m} is not a lower bound of {x}, {y}"
        return None

    checks.append(_per_space("riesz/join-sup-definition", spaces, cases, sup_def_trial))

    def abs_trial(s, i):
        rng = _rng(seed, f"riesz/abs:{s.family}:{s.dimension}:{i}")
        x, y = gen.random_vec(rng, s.dimension), gen.random_vec(rng, s.dimension)
        lam = gen.random_scalar(rng)
        if not vs.le(s, vs.abs_val(s, x + y), vs.abs_val(s, x) + vs.abs_val(s, y)):
            return f"triangle bound fails on {x}, {y}"
        if vs.abs_val(s, lam * x) != abs(lam) * vs.abs_val(s, x):
            return f"absolute homogeneity fails on {lam} * {x}"
        if not vs.le(s, vs.abs_val(s, x) - vs.abs_val(s, y), vs.abs_val(s, x - y)):
            return f"reverse triangle bound fails on {x}, {y}"
        if vs.abs_val(s, x - y) != vs.join(s, x, y) - vs.meet(s, x, y):
            return f"|x - y| != join - meet on {x}, {y}"
        return None

    checks.append(_per_space("riesz/absolute-value-laws", spaces, cases, abs_trial))

    def pos_part_trial(s, i):
        rng = _rng(seed, f"riesz/pospart:{s.family}:{s.dimension}:{i}")
        x = gen.random_vec(rng, s.dimension)
        plus, minus = vs.pos_part(s, x), vs.neg_part(s, x)
        if plus - minus != x:
            return f"x+ - x- != x at {x}: {plus} - {minus}"
        if plus + minus != vs.abs_val(s, x):
            return f"x+ + x- != |x| at {x}"
        if not vs.meet(s, plus, minus).is_zero():
            return f"x+ and x- not disjoint at {x}"
        return None

    checks.append(_per_space("riesz/positive-part-identities", spaces, cases, pos_part_trial))

    def subadditive_trial(s, i):
        rng = _rng(seed, f"riesz/subadd:{s.family}:{s.dimension}:{i}")
        x, y = gen.random_vec(rng, s.dimension), gen.random_vec(rng, s.dimension)
        if not vs.le(s, vs.pos_part(s, x + y), vs.pos_part(s, x) + vs.pos_part(s, y)):
            return f"(x+y)+ not below x+ + y+ on {x}, {y}"
        if not vs.le(s, vs.neg_part(s, x + y), vs.neg_part(s, x) + vs.neg_part(s, y)):
            return f"(x+y)- not below x- + y- on {x}, {y}"
        return None

    checks.append(_per_space("riesz/positive-part-subadditive", spaces, cases, subadditive_trial))

    def homogeneous_trial(s, i):
        rng = _rng(seed, f"riesz/homog:{s.family}:{s.dimension}:{i}")
        x = gen.random_vec(rng, s.dimension)
        lam = abs(gen.random_scalar(rng)) + Fraction(1, 7)  # strictly positive
        if vs.pos_part(s, lam * x) != lam * vs.pos_part(s, x):
            return f"(lam x)+ != lam x+ on {lam} * {x}"
        if vs.neg_part(s, lam * x) != lam * vs.neg_part(s, x):
            return f"(lam x)- != lam x- on {lam} * {x}"
        return None

    checks.append(_per_space("riesz/positive-part-homogeneous", spaces, cases, homogeneous_trial))

    def sum_join_meet_trial(s, i):
        rng = _rng(seed, f"riesz/sumjm:{s.family}:{s.dimension}:{i}")
        x, y = gen.random_vec(rng, s.dimension), gen.random_vec(rng, s.dimension)
        if x + y != vs.join(s, x, y) + vs.meet(s, x, y):
            return f"x + y != join + meet on {x}, {y}"
        return None

    checks.append(_per_space("riesz/sum-of-join-and-meet", spaces, cases, sum_join_meet_trial))

    def decomposition_trial(s, i):
        rng = _rng(seed, f"riesz/decomp:{s.family}:{s.dimension}:{i}")
        n_parts = rng.randint(1, 4)
        ys = [gen.random_vec(rng, s.dimension, lo=-6, hi=6) for _ in range(n_parts)]
        total = ys[0]
        for y in ys[1:]:
            total = total + y
        abs_total = vs.abs_val(s, total)
        if s.family == vs.POINTWISE:
            mags = [c * Fraction(rng.randint(0, 6), 6) for c in abs_total.coords]
            signs = [rng.choice((-1, 1)) for _ in mags]
            x = Vec(sg * m for sg, m in zip(signs, mags))
        else:
            lam = Fraction(rng.randint(-6, 6), 6)
            x = lam * total
        want_positive = rng.random() < 0.4
        if want_positive:
            x = vs.meet(s, vs.abs_val(s, x), abs_total)  # positive and still dominated
        result = vs.riesz_decompose(s, x, ys)
        if result.total() != x:
            return f"parts {result.parts} do not sum to {x}"
        for part, y in zip(result.parts, ys):
            if not vs.mu(s, vs.abs_val(s, part), vs.abs_val(s, y)) > HALF:
                return f"part {part} escapes |{y}|"
        if vs.is_positive(s, x) and not all(vs.is_positive(s, p) for p in result.parts):
            return f"positive {x} produced non-positive parts {result.parts}"
        return None

    checks.append(_per_space("riesz/decomposition", spaces, cases, decomposition_trial))

    def disjoint_trial(s, i):
        rng = _rng(seed, f"riesz/disjoint:{s.family}:{s.dimension}:{i}")
        if s.family == vs.POINTWISE:
            his = [rng.random() < 0.5 for _ in range(s.dimension)]
            x = Vec(c if keep else 0 for keep, c in zip(his, gen.random_vec(rng, s.dimension)))
            x1 = Vec(0 if keep else c for keep, c in zip(his, gen.random_vec(rng, s.dimension)))
            x2 = Vec(0 if keep else c for keep, c in zip(his, gen.random_vec(rng, s.dimension)))
        else:
            # lex disjointness forces one side to vanish
            x = gen.random_vec(rng, 2)
            x1 = x2 = Vec((0, 0))
        a, b = gen.random_scalar(rng), gen.random_scalar(rng)
        if not (vs.is_disjoint(s, x, x1) and vs.is_disjoint(s, x, x2)):
            return f"construction failed to produce disjoint vectors: {x}, {x1}, {x2}"
        if not vs.is_disjoint(s, x, a * x1 + b * x2):
            return f"{x} not disjoint from {a}*{x1} + {b}*{x2}"
        if not vs.is_disjoint(s, x, vs.sup_finite(s, [x1, x2])):
            return f"{x} not disjoint from the supremum of {x1}, {x2}"
        return None

    checks.append(_per_space("riesz/disjointness-bilinear", spaces, cases, disjoint_trial))

    def lex_total_trial(s, i):
        rng = _rng(seed, f"riesz/lextotal:{i}")
        x, y = gen.random_vec(rng, 2), gen.random_vec(rng, 2)
        if not (vs.le(s, x, y) or vs.le(s, y, x)):
            return f"lex pair {x}, {y} incomparable"
        bigger = y if vs.le(s, x, y) else x
        smaller = x if bigger == y else y
        if vs.join(s, x, y) != bigger or vs.meet(s, x, y) != smaller:
            return f"lex join/meet disagree with max/min on {x}, {y}"
        return None

    checks.append(_run("riesz/lex-total-order", cases, lambda i: lex_total_trial(vs.lex_plane(), i)))

    def archimedean_trial(s, i):
        rng = _rng(seed, f"riesz/arch:{s.family}:{s.dimension}:{i}")
        props = vs.space_properties(s)
        if s.family == vs.POINTWISE:
            if not props.archimedean:
                return "pointwise family reported non-Archimedean"
            x = gen.random_positive_nonzero_vec(s, rng)
            bound = 20 * _unit_positive(s)
            report = vs.is_nx_bounded(s, x, bound, horizon=64)
            if report.closed_form_bounded:
                return f"closed form claims the ray of {x} is bounded"
            if report.first_failure is None:
                return f"ray of {x} stayed below {bound} through the horizon"
            if vs.infimum_of_scaled(s, x) != s.zero():
                return f"scaled infimum of {x} is not zero"
            # a candidate lower bound with a positive coordinate is refuted mechanically
            k = next(idx for idx, c in enumerate(x.coords) if c > 0)
            z = Vec(Fraction(1, 2) if idx == k else 0 for idx in range(s.dimension))
            if all(vs.le(s, z, x / n) for n in range(1, 4 * int(2 * x.coords[k]) + 3)):
                return f"positive candidate {z} survived as a lower bound of scaled {x}"
            return None
        if props.archimedean:
            return "lex family reported Archimedean"
        if props.witness != (Vec((0, 1)), Vec((1, 0))):
            return f"unexpected witness {props.witness}"
        wx, wb = props.witness
        report = vs.is_nx_bounded(s, wx, wb, horizon=64)
        if not (report.bounded_within_horizon and report.closed_form_bounded):
            return "witness ray escaped its bound"
        if vs.infimum_of_scaled(s, Vec((1, 0))) is not None:
            return "scaled infimum of (1, 0) should not exist"
        if vs.infimum_of_scaled(s, Vec((0, 3))) != s.zero():
            return "scaled infimum of an axis vector should be zero"
        # no candidate greatest lower bound of {(1,0)/n} survives
        g = gen.random_vec(rng, 2)
        x = Vec((1, 0))
        if g.coords[0] > 0:
            n = int(1 / g.coords[0]) + 2
            if vs.le(s, g, x / n):
                return f"candidate {g} is still below {x}/{n}"
        else:
            z = Vec((0, g.coords[1] + 1))
            if not all(vs.le(s, z, x / n) for n in range(1, 17)):
                return f"axis vector {z} failed to be a lower bound"
            if vs.le(s, z, g):
                return f"lower bound {z} unexpectedly below candidate {g}"
        return None

    checks.append(_per_space("riesz/archimedean-classification", spaces, max(1, cases // 4), archimedean_trial))

    return SuiteResult("riesz", seed, cases, checks)


# ---------------------------------------------------------------------------
# ideals suite


def _handle_universe(seed: int, big_dims_samples: int = 4) -> list[tuple[vs.SpaceSpec, il.Handle]]:
    """All handles up to dimension 4, a seeded sample at dimensions 5 and 6,
    and the three lex handles."""
    out: list[tuple[vs.SpaceSpec, il.Handle]] = []
    for d in (1, 2, 3, 4):
        s = vs.pointwise_space(d)
        out.extend((s, h) for h in il.all_handles(s))
    rng = _rng(seed, "handle-universe")
    for d in (5, 6):
        s = vs.pointwise_space(d)
        seen = set()
        while len(seen) < big_dims_samples:
            seen.add(gen.random_pointwise_handle(rng, d))
        out.extend((s, h) for h in sorted(seen, key=lambda h: sorted(h.support)))
    lex = vs.lex_plane()
    out.extend((lex, h) for h in il.all_handles(lex))
    return out


def _sample_for_handle(s: vs.SpaceSpec, h: il.Handle, rng: random.Random) -> Vec:
    """Mix of vectors likely inside, outside and on the boundary of the handle."""
    roll = rng.random()
    if roll < 0.4:  # inside: scaled mask of a random vector
        v = gen.random_vec(rng, s.dimension)
        if s.family == vs.POINTWISE:
            return Vec(c if (i + 1) in h.support else 0 for i, c in enumerate(v.coords))
        if h.kind == "zero":
            return s.zero()
        if h.kind == "axis":
            return Vec((0, v.coords[1]))
        return v
    if roll < 0.5:
        return s.zero()
    return gen.random_vec(rng, s.dimension)


def run_ideals_suite(seed: int = 0, cases: int = DEFAULT_CASES, horizon: int = DEFAULT_HORIZON) -> SuiteResult:
    checks: list[CheckResult] = []
    spaces = _all_spaces()

    def hull_trial(s, i):
        rng = _rng(seed, f"ideals/hull:{s.family}:{s.dimension}:{i}")
        A = [gen.random_vec(rng, s.dimension, lo=-6, hi=6) for _ in range(rng.randint(1, 4))]
        for a in A:
            if not il.solid_hull_contains(s, A, a):
                return f"member {a} missing from its own solid hull"
            lam = Fraction(rng.randint(-6, 6), 6)
            if not il.solid_hull_contains(s, A, lam * a):
                return f"shrunk member {lam} * {a} missing from the hull"
        outlier = _unit_positive(s)
        for a in A:
            outlier = outlier + vs.abs_val(s, a)
        if il.solid_hull_contains(s, A, outlier):
            return f"strict dominator {outlier} wrongly inside the hull of {A}"
        return None

    checks.append(_per_space("ideals/solid-hull-membership", spaces, cases, hull_trial))

    def solidity_trial(s, i):
        rng = _rng(seed, f"ideals/solid:{s.family}:{s.dimension}:{i}")
        if not il.is_solid(s, [s.zero()]):
            return "the singleton {0} must be solid"
        if s.family == vs.POINTWISE:
            y = Vec([rng.randint(1, 2)] * s.dimension)
        else:
            # a lex set holding any vector with nonzero first coordinate has an
            # infinite solid closure, so only axis segments can be finite and solid
            y = Vec((0, rng.randint(1, 3)))
        grid = [v for v in il._dominated_grid(s, y) if vs.mu(s, vs.abs_val(s, v), vs.abs_val(s, y)) > HALF]
        closed = il.is_solid(s, grid)
        if not closed:
            return f"full dominated grid of {y} flagged non-solid: {closed.violation}"
        gaps = [v for v in grid if not v.is_zero()]
        if gaps:
            dropped = grid.copy()
            dropped.remove(max(gaps, key=lambda v: sum(abs(c) for c in v.coords)))
            punctured = il.is_solid(s, dropped)
            if punctured.ok:
                return f"grid with a hole passed the solidity check: dropped from {y}"
        return None

    checks.append(_per_space("ideals/solidity-grid", [vs.pointwise_space(2), vs.lex_plane()], max(1, cases // 10), solidity_trial))

    def subspace_trial(s, i):
        rng = _rng(seed, f"ideals/subspace:{s.family}:{s.dimension}:{i}")
        if s.dimension >= 2:
            count = rng.randint(1, s.dimension - 1) if s.dimension > 1 else 1
            picked = rng.sample(range(1, s.dimension + 1), count)
            basis = [Fraction(rng.randint(1, 3)) * Vec.unit(s.dimension, j) for j in picked]
            if not il.is_riesz_subspace(s, basis, seed=seed + i):
                return f"coordinate subspace on {picked} not recognized"
        constants = [Vec([rng.randint(1, 3)] * s.dimension)]
        if not il.is_riesz_subspace(s, constants, seed=seed + i):
            return "constants line not recognized as closed under joins"
        if s.family == vs.POINTWISE and s.dimension >= 2:
            mixed = [Vec([1, -1] + [0] * (s.dimension - 2))]
            verdict = il.is_riesz_subspace(s, mixed, seed=seed + i)
            if verdict.ok:
                return "mixed-sign line wrongly declared join-closed"
            x, y, joined = verdict.witness
            from .linalg import in_span

            if in_span(mixed, joined) is not None:
                return f"witness join {joined} actually lies in the span"
        return None

    checks.append(_per_space("ideals/riesz-subspace-recognition", spaces, max(1, cases // 10), subspace_trial))

    def generated_trial(s, i):
        rng = _rng(seed, f"ideals/generated:{s.family}:{s.dimension}:{i}")
        D = [gen.random_vec(rng, s.dimension, lo=-6, hi=6) for _ in range(rng.randint(1, 3))]
        h = il.ideal_generated(s, D)
        for _ in range(6):
            x = _sample_for_handle(s, h, rng)
            if il.ideal_contains(s, h, x) != il.ideal_member_oracle(s, D, x):
                return f"handle {h} disagrees with the dominance oracle at {x} (generators {D})"
        return None

    checks.append(_per_space("ideals/generated-handle-oracle", spaces, cases, generated_trial))

    universe = _handle_universe(seed)

    def membership_oracle_check():
        failures = 0
        first = None
        total = 0
        for s, h in universe:
            D = il.generators_for(s, h)
            rng = _rng(seed, f"ideals/member:{s.dimension}:{sorted(h.support) if h.support is not None else h.kind}")
            for _ in range(cases):
                total += 1
                x = _sample_for_handle(s, h, rng)
                closed = il.ideal_contains(s, h, x)
                oracle = il.ideal_member_oracle(s, D, x)
                if closed != oracle:
                    failures += 1
                    if first is None:
                        first = f"{h}: closed-form {closed} vs oracle {oracle} at {x}"
        return CheckResult("ideals/handle-membership-oracle", total, failures, first)

    checks.append(membership_oracle_check())

    def sum_split_trial(s, i):
        rng = _rng(seed, f"ideals/sum:{s.family}:{s.dimension}:{i}")
        h1, h2 = gen.random_handle(s, rng), gen.random_handle(s, rng)
        total = il.ideal_sum(s, h1, h2)
        inter = il.ideal_intersection(s, h1, h2)
        x = _sample_for_handle(s, total, rng)
        both = il.ideal_contains(s, h1, x) or il.ideal_contains(s, h2, x)
        in_inter = il.ideal_contains(s, inter, x)
        if in_inter != (il.ideal_contains(s, h1, x) and il.ideal_contains(s, h2, x)):
            return f"intersection membership wrong at {x} for {h1}, {h2}"
        if il.ideal_contains(s, total, x):
            x1, x2 = il.split_sum(s, h1, h2, x)
            if x1 + x2 != x:
                return f"split of {x} does not add back: {x1} + {x2}"
            if not (il.ideal_contains(s, h1, x1) and il.ideal_contains(s, h2, x2)):
                return f"split parts escape their handles: {x1} in {h1}, {x2} in {h2}"
            pos = vs.abs_val(s, x)
            p1, p2 = il.split_sum(s, h1, h2, pos)
            if not (vs.is_positive(s, p1) and vs.is_positive(s, p2)):
                return f"positive member {pos} split into non-positive parts"
            if il.is_zero_handle(s, inter):
                delta = _sample_for_handle(s, total, rng)
                y = x + vs.abs_val(s, delta)
                y1, y2 = il.split_sum(s, h1, h2, y)
                if vs.le(s, x, y) and not (vs.le(s, x1, y1) and vs.le(s, x2, y2)):
                    return f"unique decomposition not monotone: {x} <= {y}"
        elif both:
            return f"{x} in a summand but not in the sum handle"
        return None

    checks.append(_per_space("ideals/sum-intersection-splitter", spaces, cases, sum_split_trial))

    big_universe = [
        (vs.pointwise_space(d), h)
        for d in (1, 2, 3, 4, 5, 6)
        for h in il.all_handles(vs.pointwise_space(d))
    ] + [(vs.lex_plane(), h) for h in il.all_handles(vs.lex_plane())]

    def complement_laws(item):
        s, h = item
        d1 = il.disjoint_complement(s, h)
        d2 = il.disjoint_complement(s, d1)
        d3 = il.disjoint_complement(s, d2)
        if not il.handle_leq(s, h, d2):
            return f"{h} not inside its double complement {d2}"
        if d1 != d3:
            return f"triple complement differs from single for {h}"
        if not il.is_zero_handle(s, il.ideal_intersection(s, d1, d2)):
            return f"complement and double complement of {h} overlap"
        if il.is_zero_handle(s, d1) and not il.is_full_handle(s, d2):
            return f"zero complement but partial double complement for {h}"
        return None

    checks.append(_run_items("ideals/complement-laws", big_universe, complement_laws))

    def double_complement_witness(item):
        s, h = item
        dd = il.disjoint_complement(s, il.disjoint_complement(s, h))
        rng = _rng(seed, f"ideals/ddw:{s.dimension}:{h}")
        for _ in range(8):
            x = _sample_for_handle(s, dd, rng)
            if x.is_zero() or not il.ideal_contains(s, dd, x):
                continue
            y = _dominated_member(s, h, x)
            if y is None or y.is_zero():
                return f"no nonzero member of {h} below |{x}| from its double complement"
            if not vs.mu(s, vs.abs_val(s, y), vs.abs_val(s, x)) > HALF:
                return f"witness {y} not absolutely below {x}"
        return None

    checks.append(
        _run_items("ideals/double-complement-witness", _handle_universe(seed, 2), double_complement_witness)
    )

    def density_laws(item):
        s, h = item
        dense = il.is_order_dense(s, h)
        comp = il.disjoint_complement(s, h)
        if dense != il.is_zero_handle(s, comp):
            return f"density flag disagrees with the complement for {h}"
        rng = _rng(seed, f"ideals/density:{s.dimension}:{h}")
        if dense:
            for _ in range(6):
                x = gen.random_positive_nonzero_vec(s, rng)
                y = _dominated_member(s, h, x)
                if y is None or y.is_zero() or not vs.is_positive(s, y):
                    return f"dense handle {h} offered no positive member below {x}"
                if not vs.mu(s, y, x) > HALF:
                    return f"density witness {y} not below {x}"
        else:
            probe = _dominated_member(s, comp, None)
            if probe is None or probe.is_zero():
                return f"non-dense {h} has a trivial complement"
            for d in il.generators_for(s, h):
                if not vs.is_disjoint(s, probe, d):
                    return f"complement probe {probe} not disjoint from generator {d}"
        oplus = il.ideal_sum(s, h, comp)
        if not il.is_order_dense(s, oplus):
            return f"{h} plus its complement is not order dense"
        # density of h inside its double complement
        dd = il.disjoint_complement(s, comp)
        for _ in range(4):
            x = _sample_for_handle(s, dd, rng)
            if x.is_zero() or not il.ideal_contains(s, dd, x):
                continue
            pos = vs.abs_val(s, x)
            y = _dominated_member(s, h, pos)
            if y is None or y.is_zero():
                return f"{h} not dense in its double complement at {pos}"
        return None

    checks.append(_run_items("ideals/order-density", big_universe, density_laws))

    return SuiteResult("ideals", seed, cases, checks)


def _dominated_member(s: vs.SpaceSpec, h: il.Handle, x: Vec | None) -> Vec | None:
    """A nonzero positive member of h absolutely below |x| (or any member when x is None)."""
    if x is None:
        gens = il.generators_for(s, h)
        g = gens[0]
        return None if g.is_zero() else vs.abs_val(s, g)
    ax = vs.abs_val(s, x)
    if s.family == vs.POINTWISE:
        usable = sorted(ax.support() & h.support)
        if not usable:
            return None
        k = usable[0]
        return Vec(c if (i + 1) == k else 0 for i, c in enumerate(ax.coords))
    if h.kind == "zero":
        return None
    if h.kind == "full":
        return ax if not ax.is_zero() else None
    if ax.coords[0] > 0:
        return Vec((0, 1))
    return Vec((0, ax.coords[1] / 2)) if ax.coords[1] > 0 else None


# ---------------------------------------------------------------------------
# bands suite


def run_bands_suite(seed: int = 0, cases: int = DEFAULT_CASES, horizon: int = DEFAULT_HORIZON) -> SuiteResult:
    checks: list[CheckResult] = []
    spaces = _all_spaces()
    universe = _handle_universe(seed)

    def band_oracle_check():
        failures = 0
        first = None
        total = 0
        for s, h in universe:
            D = il.generators_for(s, h)
            rng = _rng(seed, f"bands/member:{s.dimension}:{sorted(h.support) if h.support is not None else h.kind}")
            for _ in range(cases):
                total += 1
                x = _sample_for_handle(s, h, rng)
                closed = il.band_contains(s, h, x)
                oracle = il.band_member_oracle(s, D, x)
                if closed != oracle:
                    failures += 1
                    if first is None:
                        first = f"{h}: closed-form {closed} vs stabilization oracle {oracle} at {x}"
        return CheckResult("bands/band-handle-oracle", total, failures, first)

    checks.append(band_oracle_check())

    def stabilization_trial(s, i):
        rng = _rng(seed, f"bands/stab:{s.family}:{s.dimension}:{i}")
        x = gen.random_vec(rng, s.dimension, lo=-8, hi=8)
        y = gen.random_vec(rng, s.dimension, lo=-8, hi=8)
        result = il.principal_band_contains(s, x, y)
        member_by_handle = il.band_contains(s, il.band_generated(s, [x]), y)
        if result.member != member_by_handle:
            return f"stabilization membership {result.member} vs handle {member_by_handle} for x={x}, y={y}"
        if result.stabilized_at is not None and result.stabilized_at > result.bound:
            return f"stabilized at {result.stabilized_at} beyond the bound {result.bound}"
        if result.divergent and s.family == vs.POINTWISE:
            return f"pointwise stabilization flagged divergent on x={x}, y={y}"
        return None

    checks.append(_per_space("bands/principal-stabilization", spaces, cases, stabilization_trial))

    def collapse_trial(s, i):
        rng = _rng(seed, f"bands/collapse:{s.family}:{s.dimension}:{i}")
        D = [gen.random_vec(rng, s.dimension, lo=-6, hi=6) for _ in range(rng.randint(1, 3))]
        comp = il.disjoint_complement(s, D)
        if comp != il.disjoint_complement(s, il.ideal_generated(s, D)):
            return f"set complement differs from ideal complement for {D}"
        if comp != il.disjoint_complement(s, il.band_generated(s, D)):
            return f"set complement differs from band complement for {D}"
        for _ in range(6):
            x = _sample_for_handle(s, comp, rng)
            definitional = all(vs.is_disjoint(s, x, d) for d in D)
            if definitional != il.ideal_contains(s, comp, x):
                return f"complement handle disagrees with pairwise disjointness at {x} (D={D})"
        return None

    checks.append(_per_space("bands/complement-collapse", spaces, cases, collapse_trial))

    pair_universe = [
        (s, h1, h2)
        for d in (1, 2, 3, 4)
        for s in [vs.pointwise_space(d)]
        for h1 in il.all_handles(s)
        for h2 in il.all_handles(s)
    ] + [
        (vs.lex_plane(), h1, h2)
        for h1 in il.all_handles(vs.lex_plane())
        for h2 in il.all_handles(vs.lex_plane())
    ]

    def direct_sum_laws(item):
        s, h1, h2 = item
        if il.is_direct_sum_decomposition(s, h1, h2):
            if il.disjoint_complement(s, h1) != h2 or il.disjoint_complement(s, h2) != h1:
                return f"direct summands {h1}, {h2} are not mutual complements"
            dd1 = il.disjoint_complement(s, il.disjoint_complement(s, h1))
            if dd1 != h1:
                return f"direct summand {h1} not equal to its double complement"
        return None

    checks.append(_run_items("bands/direct-sum-bands", pair_universe, direct_sum_laws))

    def dichotomy_check():
        failures = 0
        first = None
        total = 0
        for d in (1, 2, 3, 4, 5, 6):
            s = vs.pointwise_space(d)
            if not vs.space_properties(s).archimedean:
                return CheckResult("bands/archimedean-dichotomy", 1, 1, "pointwise flagged non-Archimedean")
            for h in il.all_handles(s):
                total += 1
                dd = il.disjoint_complement(s, il.disjoint_complement(s, h))
                if dd != h:
                    failures += 1
                    if first is None:
                        first = f"pointwise handle {h} differs from its double complement {dd}"
        lex = vs.lex_plane()
        total += 1
        props = vs.space_properties(lex)
        axis = il.lex_handle("axis")
        axis_dd = il.disjoint_complement(lex, il.disjoint_complement(lex, axis))
        if props.archimedean or props.witness != (Vec((0, 1)), Vec((1, 0))):
            failures += 1
            first = first or "lex family lost its non-Archimedean witness"
        elif axis_dd != il.lex_handle("full") or axis_dd == axis:
            failures += 1
            first = first or f"lex axis double complement is {axis_dd}"
        return CheckResult("bands/archimedean-dichotomy", total, failures, first)

    checks.append(dichotomy_check())

    return SuiteResult("bands", seed, cases, checks)


# ---------------------------------------------------------------------------
# projections suite


def run_projections_suite(seed: int = 0, cases: int = DEFAULT_CASES, horizon: int = DEFAULT_HORIZON) -> SuiteResult:
    checks: list[CheckResult] = []
    spaces = _all_spaces()
    universe = _handle_universe(seed)

    def detection(item):
        s, h = item
        is_proj = pj.is_projection_band(s, h)
        comp = il.disjoint_complement(s, h)
        has_ideal_complement = any(
            il.is_zero_handle(s, il.ideal_intersection(s, h, other))
            and il.is_full_handle(s, il.ideal_sum(s, h, other))
            for other in il.all_handles(s)
        )
        rng = _rng(seed, f"proj/detect:{s.dimension}:{h}")
        sup_exists = True
        for _ in range(6):
            x = gen.random_cone_vec(s, rng)
            z = pj.sup_of_band_interval(s, h, x)
            if z is None:
                sup_exists = False
                continue
            if not il.ideal_contains(s, h, z):
                return f"interval supremum {z} escapes {h}"
        if s.family == vs.LEX and h.kind == "axis":
            x = Vec((1, 0))
            if pj.sup_of_band_interval(s, h, x) is not None:
                return "lex axis interval against (1,0) claimed a supremum"
            sup_exists = False
            # every axis candidate fails upper-boundedness mechanically
            for t in range(0, 3):
                candidate = Vec((0, t))
                beater = Vec((0, t + 1))
                if not (vs.is_positive(s, beater) and vs.le(s, beater, x)):
                    return "refutation member left the interval"
                if vs.le(s, beater, candidate):
                    return f"candidate {candidate} survived the member {beater}"
        if not (is_proj == sup_exists == has_ideal_complement):
            return (
                f"{h}: projection-band clauses disagree "
                f"(direct sum {is_proj}, interval suprema {sup_exists}, ideal complement {has_ideal_complement})"
            )
        if s.family == vs.POINTWISE and not is_proj:
            return f"pointwise handle {h} must be a projection band"
        return None

    checks.append(_run_items("projections/projection-band-detection", universe, detection))

    def decomposition_trial(s, i):
        rng = _rng(seed, f"proj/decomp:{s.family}:{s.dimension}:{i}")
        h = gen.random_handle(s, rng)
        if not pj.is_projection_band(s, h):
            return None  # the lex axis is exercised by the detection check
        P = pj.band_projection_operator(s, h)
        if not P.is_idempotent():
            return f"projection matrix for {h} is not idempotent"
        x = gen.random_vec(rng, s.dimension)
        inside = P @ x
        outside = x - inside
        comp = il.disjoint_complement(s, h)
        if not il.ideal_contains(s, h, inside):
            return f"projection image {inside} escapes {h}"
        if not il.ideal_contains(s, comp, outside):
            return f"residue {outside} escapes the complement of {h}"
        w = _dominated_member(s, h, _unit_positive(s) + vs.abs_val(s, x))
        if w is not None and not w.is_zero():
            alt = inside + w
            if il.ideal_contains(s, comp, x - alt):
                return f"decomposition not unique: {alt} also splits {x}"
        if il.ideal_contains(s, h, x) and inside != x:
            return f"member {x} of {h} moved by its own projection"
        return None

    checks.append(_per_space("projections/operator-decomposition", spaces, cases, decomposition_trial))

    def interval_sup_trial(s, i):
        rng = _rng(seed, f"proj/interval:{s.family}:{s.dimension}:{i}")
        h = gen.random_handle(s, rng)
        if not pj.is_projection_band(s, h):
            return None
        x = gen.random_cone_vec(s, rng)
        z = pj.projection_by_interval_sup(s, h, x)
        P = pj.band_projection_operator(s, h)
        if z != P @ x:
            return f"interval supremum {z} differs from the mask image of {x}"
        if not (il.ideal_contains(s, h, z) and vs.is_positive(s, z) and vs.le(s, z, x)):
            return f"supremum {z} left the interval of {x} in {h}"
        member = vs.meet(s, P @ gen.random_cone_vec(s, rng), x)
        if il.ideal_contains(s, h, member) and vs.is_positive(s, member):
            if not vs.le(s, member, z):
                return f"interval member {member} above the claimed supremum {z}"
        above = z + gen.random_cone_vec(s, rng)
        if vs.le(s, z, above) is False:
            return f"supremum {z} not below the perturbed bound {above}"
        return None

    checks.append(_per_space("projections/interval-sup-agreement", spaces, cases, interval_sup_trial))

    def positivity(item):
        s, h = item
        if not pj.is_projection_band(s, h):
            return None
        P = pj.band_projection_operator(s, h)
        verdict = pj.is_fuzzy_positive(s, s, P, seed=seed, samples=12)
        if not verdict.ok:
            return f"band projection for {h} not fuzzy positive: witness {verdict.witness}"
        return None

    checks.append(_run_items("projections/projection-positivity", universe, positivity))

    def principal_trial(s, i):
        rng = _rng(seed, f"proj/principal:{s.family}:{s.dimension}:{i}")
        x = gen.random_vec(rng, s.dimension, lo=-8, hi=8)
        h = il.band_generated(s, [x])
        if not pj.is_projection_band(s, h):
            try:
                pj.principal_projection(s, x, gen.random_vec(rng, 2))
            except pj.NotProjectionBand:
                return None
            return f"lex axis generator {x} did not raise NotProjectionBand"
        P = pj.band_projection_operator(s, h)
        y = gen.random_vec(rng, s.dimension, lo=-8, hi=8)
        if pj.principal_projection(s, x, y) != P @ y:
            return f"principal projection disagrees with the mask on x={x}, y={y}"
        pos = vs.abs_val(s, y)
        trace = pj.principal_projection_trace(s, x, pos)
        if trace.stabilized_at is None or trace.stabilized_at > trace.bound:
            return f"stabilization index {trace.stabilized_at} outside bound {trace.bound} for x={x}, y={pos}"
        return None

    checks.append(_per_space("projections/principal-agreement", spaces, cases, principal_trial))

    def algebra_pairs():
        out = []
        for d in (2, 3, 6):
            s = vs.pointwise_space(d)
            hs = il.all_handles(s)
            out.extend((s, h1, h2) for h1 in hs for h2 in hs)
        lex = vs.lex_plane()
        lex_proj = [il.lex_handle("zero"), il.lex_handle("full")]
        out.extend((lex, h1, h2) for h1 in lex_proj for h2 in lex_proj)
        return out

    def algebra_laws(item):
        s, h1, h2 = item
        identity = Matrix.identity(s.dimension)
        p1 = pj.band_projection_operator(s, h1)
        comp1 = pj.band_projection_operator(s, il.disjoint_complement(s, h1))
        if comp1 != identity - p1:
            return f"complement projection for {h1} is not I - P"
        p2 = pj.band_projection_operator(s, h2)
        inter = pj.band_projection_operator(s, il.ideal_intersection(s, h1, h2))
        if not (p1 @ p2 == inter and p2 @ p1 == inter):
            return f"intersection projection identity fails for {h1}, {h2}"
        total = pj.band_projection_operator(s, il.ideal_sum(s, h1, h2))
        if total != p1 + p2 - inter:
            return f"sum projection identity fails for {h1}, {h2}"
        return None

    checks.append(_run_items("projections/algebra-identities", algebra_pairs(), algebra_laws))

    def principal_algebra_trial(s, i):
        rng = _rng(seed, f"proj/principal-algebra:{s.family}:{s.dimension}:{i}")
        x = gen.random_cone_vec(s, rng)
        y = gen.random_cone_vec(s, rng)
        hx, hy = il.band_generated(s, [x]), il.band_generated(s, [y])
        if il.band_generated(s, [vs.meet(s, x, y)]) != il.ideal_intersection(s, hx, hy):
            return f"band of the meet differs from the intersection for {x}, {y}"
        if il.band_generated(s, [x + y]) != il.ideal_sum(s, hx, hy):
            return f"band of the sum differs from the handle sum for {x}, {y}"
        if pj.is_projection_band(s, hx) and pj.is_projection_band(s, hy):
            px = pj.band_projection_operator(s, hx)
            py = pj.band_projection_operator(s, hy)
            inter = pj.band_projection_operator(s, il.ideal_intersection(s, hx, hy))
            if px @ py != inter or py @ px != inter:
                return f"principal projection product law fails for {x}, {y}"
        return None

    checks.append(_per_space("projections/principal-algebra", spaces, cases, principal_algebra_trial))

    def order_pairs():
        out = []
        for d in (2, 3, 6):
            s = vs.pointwise_space(d)
            hs = il.all_handles(s)
            out.extend((s, h1, h2) for h1 in hs for h2 in hs)
        lex = vs.lex_plane()
        lex_proj = [il.lex_handle("zero"), il.lex_handle("full")]
        out.extend((lex, h1, h2) for h1 in lex_proj for h2 in lex_proj)
        return out

    def order_laws(item):
        s, h1, h2 = item
        comparison = pj.compare_projections(s, h1, h2, seed=seed)
        if not comparison.agree:
            return f"projection order clauses disagree on {h1}, {h2}"
        if comparison.included != il.handle_leq(s, h1, h2):
            return f"comparison inclusion flag wrong on {h1}, {h2}"
        return None

    checks.append(_run_items("projections/order-equivalence", order_pairs(), order_laws))

    def classification_catalog():
        items = []
        for d in (1, 2, 3):
            s = vs.pointwise_space(d)
            for h in il.all_handles(s):
                items.append((s, Matrix.mask(d, h.support)))
            items.append((s, Fraction(1, 2) * Matrix.identity(d)))
        s2 = vs.pointwise_space(2)
        items.append((s2, Matrix([[1, 1], [0, 0]])))
        items.append((s2, Matrix([[1, 0], [2, 0]])))
        items.append((s2, Matrix([[0, 1], [0, 1]])))
        lex = vs.lex_plane()
        items.append((lex, Matrix.identity(2)))
        items.append((lex, Matrix.zeros(2)))
        items.append((lex, Matrix([[1, 0], [5, 0]])))
        return items

    def classification(item):
        s, T = item
        verdict = pj.classify_band_projection(s, T, seed=seed, samples=16)
        if verdict.is_band_projection and verdict.mask_handle is None:
            return f"band projection without a handle: {T!r}"
        if verdict.is_band_projection != (verdict.idempotent and verdict.positive.ok and verdict.below_identity.ok):
            return f"classification clauses disagree for {T!r}"
        return None

    checks.append(_run_items("projections/classification-consistency", classification_catalog(), classification))

    def abs_bound_trial(s, i):
        rng = _rng(seed, f"proj/absbound:{s.family}:{s.dimension}:{i}")
        if s.family == vs.POINTWISE:
            T = Matrix(
                [[Fraction(rng.randint(0, 4), rng.choice((1, 2))) for _ in range(s.dimension)] for _ in range(s.dimension)]
            )
        else:
            T = Matrix([[Fraction(rng.randint(0, 4)), 0], [Fraction(rng.randint(-3, 3)), Fraction(rng.randint(0, 4))]])
            if T.rows[0][0] == 0:
                T = Matrix([[1, 0], [T.rows[1][0], T.rows[1][1]]])
        x = gen.random_vec(rng, s.dimension)
        if not pj.absolute_bound_check(s, T, x):
            return f"|Tx| not below T|x| for T={T!r}, x={x}"
        h = gen.random_handle(s, rng)
        if pj.is_projection_band(s, h):
            P = pj.band_projection_operator(s, h)
            if vs.abs_val(s, P @ x) != P @ vs.abs_val(s, x):
                return f"mask does not commute with the absolute value at {x}"
        return None

    checks.append(_per_space("projections/positive-abs-bound", spaces, cases, abs_bound_trial))

    def grade_contrast(i):
        sharp_in = vs.pointwise_space(1, Fraction(4, 5))
        soft_out = vs.pointwise_space(1, Fraction(2, 3))
        T = Matrix.identity(1)
        if not pj.is_fuzzy_positive(sharp_in, soft_out, T, seed=seed + i, samples=40).ok:
            return "identity between grades 4/5 -> 2/3 lost cone positivity"
        verdict = pj.is_grade_monotone_positive(sharp_in, soft_out, T, sample_count=60, seed=seed + i)
        if verdict.ok:
            return "grade-monotone check failed to reject the 4/5 -> 2/3 identity"
        x, y, g_in, g_out = verdict.witness
        if (g_in, g_out) != (Fraction(4, 5), Fraction(2, 3)):
            return f"unexpected witness grades {g_in}, {g_out}"
        same = pj.is_grade_monotone_positive(sharp_in, sharp_in, T, sample_count=40, seed=seed + i)
        if not same.ok:
            return f"identity on one space flagged non-monotone at {same.witness}"
        top_out = vs.pointwise_space(1, Fraction(1))
        zero_op = Matrix.zeros(1)
        if not pj.is_grade_monotone_positive(sharp_in, top_out, zero_op, sample_count=40, seed=seed + i).ok:
            return "zero operator into a grade-1 space flagged non-monotone"
        return None

    checks.append(_run("projections/grade-monotone-contrast", max(1, cases // 25), grade_contrast))

    return SuiteResult("projections", seed, cases, checks)


# ---------------------------------------------------------------------------
# convergence suite


def run_convergence_suite(seed: int = 0, cases: int = DEFAULT_CASES, horizon: int = DEFAULT_HORIZON) -> SuiteResult:
    checks: list[CheckResult] = []
    spaces = _all_spaces()
    count = max(1, min(cases, 120))

    def _positive_direction(s, rng):
        if s.family == vs.LEX:
            return Vec((0, Fraction(rng.randint(1, 6), rng.choice((1, 2)))))
        v = gen.random_nonneg_vec(rng, s.dimension, hi=6)
        return v if not v.is_zero() else _unit_positive(s)

    def accept_trial(s, i):
        rng = _rng(seed, f"conv/accept:{s.family}:{s.dimension}:{i}")
        x = gen.random_vec(rng, s.dimension)
        v = _positive_direction(s, rng)
        harmonic = cv.check_convergence_certificate(
            s, cv.harmonic_sequence(x, v), x, cv.DominatingFamily(cv.HARMONIC, v), horizon
        )
        if not harmonic.accepted:
            return f"harmonic approach rejected at {harmonic.violations[:1]}"
        if harmonic.inf_zero_status != "analytic":
            return f"harmonic family lost its analytic tail: {harmonic.inf_zero_status}"
        geo = cv.check_convergence_certificate(
            s,
            cv.geometric_sequence(x, v, Fraction(1, 2)),
            x,
            cv.DominatingFamily(cv.GEOMETRIC, v, Fraction(1, 2)),
            horizon,
        )
        if not geo.accepted:
            return f"geometric approach rejected at {geo.violations[:1]}"
        constant = cv.check_convergence_certificate(
            s,
            cv.explicit_sequence([x], tail_constant=x),
            x,
            cv.DominatingFamily(cv.GEOMETRIC, v, Fraction(1, 2)),
            horizon,
        )
        if not constant.accepted:
            return "constant sequence rejected under a geometric family"
        alternating = cv.check_convergence_certificate(
            s, cv.alternating_sequence(x, v), x, cv.DominatingFamily(cv.HARMONIC, v), horizon
        )
        if not alternating.accepted:
            return f"alternating approach rejected at {alternating.violations[:1]}"
        return None

    checks.append(_per_space("convergence/certificates-accept", spaces, count, accept_trial))

    def uniqueness_trial(s, i):
        rng = _rng(seed, f"conv/unique:{s.family}:{s.dimension}:{i}")
        x = gen.random_vec(rng, s.dimension)
        v = _positive_direction(s, rng)
        seq = cv.harmonic_sequence(x, v)
        if not cv.check_convergence_certificate(s, seq, x, cv.DominatingFamily(cv.HARMONIC, v), horizon).accepted:
            return "true limit rejected"
        w = Vec([rng.choice((-2, -1, 1, 2)) for _ in range(s.dimension)])
        y = x + w
        base = 16 * _unit_positive(s)
        catalog = [
            cv.DominatingFamily(cv.HARMONIC, base),
            cv.DominatingFamily(cv.GEOMETRIC, 2 * base, Fraction(1, 2)),
        ]
        for fam in catalog:
            report = cv.check_convergence_certificate(s, seq, y, fam, horizon)
            if report.accepted:
                return f"wrong limit {y} certified by {fam.kind} family"
        return None

    checks.append(_per_space("convergence/limit-uniqueness", spaces, count, uniqueness_trial))

    def monotone_trial(s, i):
        rng = _rng(seed, f"conv/monotone:{s.family}:{s.dimension}:{i}")
        x = gen.random_vec(rng, s.dimension)
        v = _positive_direction(s, rng)
        rising = cv.harmonic_sequence(x, -1 * v)
        report = cv.check_monotone_limit(s, rising, x, horizon)
        if not report.accepted:
            return f"increasing approach rejected: {report.to_json()}"
        cert = cv.check_convergence_certificate(s, rising, x, cv.DominatingFamily(cv.HARMONIC, v), horizon)
        if not cert.accepted:
            return "increasing approach has no harmonic certificate"
        try:
            cv.check_monotone_limit(s, cv.alternating_sequence(x, v), x, horizon)
        except cv.NotMonotone as exc:
            if exc.index != 2:
                return f"oscillation flagged at step {exc.index}, expected 2"
            return None
        return "oscillating sequence passed the monotonicity check"

    checks.append(_per_space("convergence/monotone-equivalence", spaces, count, monotone_trial))

    def sandwich_trial(s, i):
        rng = _rng(seed, f"conv/sandwich:{s.family}:{s.dimension}:{i}")
        x = gen.random_vec(rng, s.dimension)
        v = _positive_direction(s, rng)
        lower = cv.harmonic_sequence(x, -1 * v)
        upper = cv.harmonic_sequence(x, v)
        middle = cv.alternating_sequence(x, v / 2)
        for n in range(1, horizon + 1):
            if not (vs.le(s, lower.value(n), middle.value(n)) and vs.le(s, middle.value(n), upper.value(n))):
                return f"middle sequence escapes the sandwich at {n}"
        fam = cv.DominatingFamily(cv.HARMONIC, v)
        if not cv.check_convergence_certificate(s, middle, x, fam, horizon).accepted:
            return "sandwiched sequence failed its certificate"
        return None

    checks.append(_per_space("convergence/sandwich", spaces, count, sandwich_trial))

    def lattice_laws_trial(s, i):
        rng = _rng(seed, f"conv/lattice:{s.family}:{s.dimension}:{i}")
        x = gen.random_vec(rng, s.dimension)
        y = gen.random_vec(rng, s.dimension)
        v = _positive_direction(s, rng)
        w = _positive_direction(s, rng)
        cert1 = cv.Certificate(cv.alternating_sequence(x, v), x, cv.DominatingFamily(cv.HARMONIC, v))
        cert2 = cv.Certificate(cv.harmonic_sequence(y, w), y, cv.DominatingFamily(cv.HARMONIC, w))
        report = cv.check_limit_laws(s, cert1, cert2, 1, 1, horizon)
        if not report.all_accepted:
            return f"lattice limit laws rejected: {report.join.violations[:1] or report.abs_value.violations[:1]}"
        return None

    checks.append(_per_space("convergence/lattice-limit-laws", spaces, count, lattice_laws_trial))

    def linear_laws_trial(s, i):
        rng = _rng(seed, f"conv/linear:{s.family}:{s.dimension}:{i}")
        x, y = gen.random_vec(rng, s.dimension), gen.random_vec(rng, s.dimension)
        v = _positive_direction(s, rng)
        w = _positive_direction(s, rng)
        a, b = gen.random_scalar(rng), gen.random_scalar(rng)
        cert1 = cv.Certificate(cv.harmonic_sequence(x, v), x, cv.DominatingFamily(cv.HARMONIC, v))
        cert2 = cv.Certificate(cv.harmonic_sequence(y, -1 * w), y, cv.DominatingFamily(cv.HARMONIC, w))
        report = cv.check_limit_laws(s, cert1, cert2, a, b, horizon)
        if not report.linear.accepted:
            return f"linear law a={a}, b={b} rejected at {report.linear.violations[:1]}"
        reduced = cv.check_limit_laws(s, cert1, cert2, 1, 0, horizon)
        if not reduced.linear.accepted:
            return "a=1, b=0 did not reduce to the first certificate"
        return None

    checks.append(_per_space("convergence/linear-limit-laws", spaces, count, linear_laws_trial))

    closure_universe = [
        (vs.pointwise_space(d), h)
        for d in (1, 2, 3, 4)
        for h in il.all_handles(vs.pointwise_space(d))
    ] + [(vs.lex_plane(), h) for h in il.all_handles(vs.lex_plane())]

    def closure_laws(item):
        s, h = item
        if il.is_zero_handle(s, h):
            seq = cv.harmonic_sequence(s.zero(), s.zero())
            limit = s.zero()
            fam = cv.DominatingFamily(cv.HARMONIC, s.zero())
        elif s.family == vs.POINTWISE:
            u = il.generators_for(s, h)[0]
            seq = cv.harmonic_sequence(u, -1 * u)
            limit = u
            fam = cv.DominatingFamily(cv.HARMONIC, u)
        else:
            axis = Vec((0, 1))
            limit = axis if h.kind == "axis" else Vec((1, 1))
            seq = cv.harmonic_sequence(limit, -1 * axis)
            fam = cv.DominatingFamily(cv.HARMONIC, axis)
        verdict = cv.check_order_closed_under(s, h, seq, limit, fam, horizon)
        if not verdict.limit_in_handle:
            return f"certified limit escaped the band {h}"
        return None

    checks.append(_run_items("convergence/band-order-closure", closure_universe, closure_laws))

    def negative_trial(s, i):
        rng = _rng(seed, f"conv/negative:{s.family}:{s.dimension}:{i}")
        x = gen.random_vec(rng, s.dimension)
        v = _positive_direction(s, rng)
        offset = cv.explicit_sequence([x + v] * horizon)
        report = cv.check_convergence_certificate(s, offset, x, cv.DominatingFamily(cv.HARMONIC, v), horizon)
        if report.accepted:
            return "constant offset wrongly certified"
        if not report.violations or report.violations[0][0] != 2:
            return f"first violation at {report.violations[:1]}, expected index 2"
        return None

    checks.append(_per_space("convergence/constant-offset-rejected", spaces, count, negative_trial))

    return SuiteResult("convergence", seed, cases, checks)


# ---------------------------------------------------------------------------
# registry

SUITES = {
    "foset": run_foset_suite,
    "riesz": run_riesz_suite,
    "ideals": run_ideals_suite,
    "bands": run_bands_suite,
    "projections": run_projections_suite,
    "convergence": run_convergence_suite,
}

SUITE_ORDER = ("foset", "riesz", "ideals", "bands", "projections", "convergence")


def run_suite(name: str, seed: int = 0, cases: int = DEFAULT_CASES, horizon: int = DEFAULT_HORIZON) -> SuiteResult:
    try:
        runner = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}") from None
    return runner(seed=seed, cases=cases, horizon=horizon)


def run_all(seed: int = 0, cases: int = DEFAULT_CASES, horizon: int = DEFAULT_HORIZON) -> list[SuiteResult]:
    return [run_suite(name, seed=seed, cases=cases, horizon=horizon) for name in SUITE_ORDER]
