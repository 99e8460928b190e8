"""Order convergence of sequences via dominating-family certificates.

A certificate for "x_n converges to x" is a positive decreasing sequence
y_n with infimum zero such that |x_n - x| sits below y_n through the
grade threshold at every index.  The machinery splits that claim into a
mechanically verified part (domination and monotonicity of y_n over a
finite horizon, every comparison exact) and an analytic part (the
infimum of the tail really is zero), which is why dominating families
are closed-world: the two built-in kinds, geometric (base * ratio^n) and
harmonic (base / n), carry the analytic fact by construction, and
free-form dominating sequences are rejected so the analytic claim is
never unverifiable.

One lex caveat is tracked per certificate: a lex dominating family whose
base has a positive first coordinate does NOT decrease to zero (every
axis vector is a lower bound and none is greatest), so its report is
marked not-applicable instead of analytic.

Index sets are sequences (or finite prefixes); arbitrary directed index
sets are not mechanically representable, so product-indexed statements
are exercised on the diagonal of two sequences.

A note on order-closedness testing: among the preset handles every ideal
is already a band, so the classical "ideal that is not a band" (functions
vanishing at a point, under the pointwise order on a function space) has
no finite-dimensional counterpart here; the lex axis covers the related
but distinct failure of projection existence instead.  Closure checks on
band handles therefore must, and do, always land inside the handle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import ideals, space as vs
from .errors import NotMonotone, SpecError
from .ideals import Handle
from .linalg import Vec
from .rational import HALF, to_fraction
from .space import LEX, SpaceSpec

GEOMETRIC = "geometric"
HARMONIC = "harmonic"


@dataclass(frozen=True)
class DominatingFamily:
    """A preset positive decreasing sequence: base * ratio^n or base / n."""

    kind: str
    base: Vec
    ratio: Fraction | None = None

    def __post_init__(self):
        if self.kind not in (GEOMETRIC, HARMONIC):
            raise SpecError(f"unknown dominating family kind {self.kind!r}")
        if self.kind == GEOMETRIC:
            if self.ratio is None:
                raise SpecError("geometric family needs a ratio")
            object.__setattr__(self, "ratio", to_fraction(self.ratio))
            if not (0 < self.ratio < 1):
                raise SpecError(f"geometric ratio {self.ratio} outside (0, 1)")
        elif self.ratio is not None:
            raise SpecError("harmonic family takes no ratio")

    def value(self, n: int) -> Vec:
        if n < 1:
            raise SpecError("family indices start at 1")
        if self.kind == GEOMETRIC:
            return self.base * (self.ratio**n)
        return self.base / n

    def scaled(self, factor) -> "DominatingFamily":
        q = abs(to_fraction(factor))
        return DominatingFamily(self.kind, q * self.base, self.ratio)

    def to_json(self) -> dict:
        data = {"kind": self.kind, "base": self.base.to_json()}
        if self.ratio is not None:
            data["ratio"] = str(self.ratio)
        return data

    @classmethod
    def from_json(cls, data: dict) -> "DominatingFamily":
        return cls(data["kind"], Vec(data["base"]), data.get("ratio"))


def validate_family(s: SpaceSpec, fam: DominatingFamily) -> None:
    vs._check_dims(s, fam.base)
    if not vs.is_positive(s, fam.base):
        raise SpecError(f"dominating family base {fam.base} is not positive")


def family_inf_zero_status(s: SpaceSpec, fam: DominatingFamily) -> str:
    """"analytic" when the zero-infimum tail claim holds by construction.

    In the lex family a base with positive first coordinate decreases but
    not to zero, so the certificate is marked "not-applicable".
    """
    if s.family == LEX and fam.base.coords[0] > 0:
        return "not-applicable"
    return "analytic"


EXPLICIT = "explicit"
ALTERNATING = "alternating"


@dataclass(frozen=True)
class SequenceSpec:
    """A sequence evaluable at any index: an explicit prefix (with optional
    constant tail) or one of the closed forms x + v*ratio^n, x + v/n,
    x + (-1)^n v/n."""

    kind: str
    values: tuple[Vec, ...] | None = None
    tail_constant: Vec | None = None
    x: Vec | None = None
    v: Vec | None = None
    ratio: Fraction | None = None

    def __post_init__(self):
        if self.kind == EXPLICIT:
            if not self.values:
                raise SpecError("explicit sequence needs at least one value")
        elif self.kind in (GEOMETRIC, HARMONIC, ALTERNATING):
            if self.x is None or self.v is None:
                raise SpecError(f"{self.kind} sequence needs a center x and a direction v")
            if self.kind == GEOMETRIC:
                if self.ratio is None:
                    raise SpecError("geometric sequence needs a ratio")
                object.__setattr__(self, "ratio", to_fraction(self.ratio))
                if not (0 < self.ratio < 1):
                    raise SpecError(f"geometric ratio {self.ratio} outside (0, 1)")
        else:
            raise SpecError(f"unknown sequence kind {self.kind!r}")

    def value(self, n: int) -> Vec:
        if n < 1:
            raise SpecError("sequence indices start at 1")
        if self.kind == EXPLICIT:
            if n <= len(self.values):
                return self.values[n - 1]
            if self.tail_constant is not None:
                return self.tail_constant
            raise SpecError(
                f"explicit sequence of length {len(self.values)} has no value at {n}"
            )
        if self.kind == GEOMETRIC:
            return self.x + self.v * (self.ratio**n)
        if self.kind == HARMONIC:
            return self.x + self.v / n
        sign = 1 if n % 2 == 0 else -1
        return self.x + (sign * self.v) / n

    def to_json(self) -> dict:
        if self.kind == EXPLICIT:
            return {
                "kind": EXPLICIT,
                "values": [v.to_json() for v in self.values],
                "tail": None if self.tail_constant is None else self.tail_constant.to_json(),
            }
        data = {"kind": self.kind, "x": self.x.to_json(), "v": self.v.to_json()}
        if self.ratio is not None:
            data["ratio"] = str(self.ratio)
        return data

    @classmethod
    def from_json(cls, data: dict) -> "SequenceSpec":
        if data["kind"] == EXPLICIT:
            tail = data.get("tail")
            return cls(
                EXPLICIT,
                values=tuple(Vec(v) for v in data["values"]),
                tail_constant=None if tail is None else Vec(tail),
            )
        return cls(
            data["kind"], x=Vec(data["x"]), v=Vec(data["v"]), ratio=data.get("ratio")
        )


def explicit_sequence(values, tail_constant: Vec | None = None) -> SequenceSpec:
    return SequenceSpec(EXPLICIT, values=tuple(values), tail_constant=tail_constant)


def geometric_sequence(x: Vec, v: Vec, ratio) -> SequenceSpec:
    return SequenceSpec(GEOMETRIC, x=x, v=v, ratio=to_fraction(ratio))


def harmonic_sequence(x: Vec, v: Vec) -> SequenceSpec:
    return SequenceSpec(HARMONIC, x=x, v=v)


def alternating_sequence(x: Vec, v: Vec) -> SequenceSpec:
    return SequenceSpec(ALTERNATING, x=x, v=v)


@dataclass
class CertificateReport:
    verified_horizon: int
    violations: list[tuple[int, Fraction]]
    monotone_ok: bool
    inf_zero_status: str

    @property
    def accepted(self) -> bool:
        return not self.violations and self.monotone_ok

    def __bool__(self):
        return self.accepted

    def to_json(self) -> dict:
        return {
            "verified_horizon": self.verified_horizon,
            "violations": [[n, str(g)] for n, g in self.violations],
            "monotone_ok": self.monotone_ok,
            "inf_zero_status": self.inf_zero_status,
            "accepted": self.accepted,
        }


@dataclass(frozen=True)
class Certificate:
    """A convergence claim: sequence, limit, dominating family."""

    sequence: SequenceSpec
    limit: Vec
    family: DominatingFamily

    def to_json(self) -> dict:
        return {
            "sequence": self.sequence.to_json(),
            "limit": self.limit.to_json(),
            "family": self.family.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "Certificate":
        return cls(
            SequenceSpec.from_json(data["sequence"]),
            Vec(data["limit"]),
            DominatingFamily.from_json(data["family"]),
        )


def check_convergence_certificate(
    s: SpaceSpec,
    seq: SequenceSpec,
    limit: Vec,
    fam: DominatingFamily,
    horizon: int,
) -> CertificateReport:
    """Verify grade(|x_n - limit|, y_n) > 1/2 and y_n decreasing up to the horizon."""
    if horizon < 1:
        raise SpecError("horizon must be at least 1")
    validate_family(s, fam)
    vs._check_dims(s, limit)
    violations: list[tuple[int, Fraction]] = []
    for n in range(1, horizon + 1):
        deviation = vs.abs_val(s, seq.value(n) - limit)
        grade = vs.mu(s, deviation, fam.value(n))
        if not grade > HALF:
            violations.append((n, grade))
    monotone_ok = all(
        vs.mu(s, fam.value(n + 1), fam.value(n)) > HALF for n in range(1, horizon)
    )
    return CertificateReport(
        verified_horizon=horizon,
        violations=violations,
        monotone_ok=monotone_ok,
        inf_zero_status=family_inf_zero_status(s, fam),
    )


def check_certificate(s: SpaceSpec, cert: Certificate, horizon: int) -> CertificateReport:
    return check_convergence_certificate(s, cert.sequence, cert.limit, cert.family, horizon)


@dataclass
class MonotoneLimitReport:
    """``sup_exact`` is None when the sequence carries no tail claim (a bare
    finite prefix): the horizon checks are then the only evidence."""

    horizon: int
    increasing_ok: bool
    below_limit_ok: bool
    first_violation: int | None
    sup_exact: bool | None
    cross_check: CertificateReport

    @property
    def accepted(self) -> bool:
        return (
            self.increasing_ok
            and self.below_limit_ok
            and self.sup_exact is not False
            and self.cross_check.accepted
        )

    def __bool__(self):
        return self.accepted

    def to_json(self) -> dict:
        return {
            "horizon": self.horizon,
            "increasing_ok": self.increasing_ok,
            "below_limit_ok": self.below_limit_ok,
            "first_violation": self.first_violation,
            "sup_exact": self.sup_exact,
            "cross_check": self.cross_check.to_json(),
            "accepted": self.accepted,
        }


def _geometric_cover(s: SpaceSpec, deviations: list[Vec]) -> DominatingFamily:
    """A geometric family dominating the finitely many given deviations.

    Base = sum of 2^n-scaled deviations plus a positive unit, so each
    base * (1/2)^n covers deviation n; the unit keeps the base positive
    (and axis-supported in the lex family, preserving the analytic
    zero-infimum tail)."""
    unit = Vec((0, 1)) if s.family == LEX else Vec([1] * s.dimension)
    base = unit
    for n, d in enumerate(deviations, start=1):
        base = base + (2**n) * d
    return DominatingFamily(GEOMETRIC, base, Fraction(1, 2))


def check_monotone_limit(
    s: SpaceSpec, seq: SequenceSpec, limit: Vec, horizon: int
) -> MonotoneLimitReport:
    """Verify an increasing sequence against its claimed supremum.

    Checks grade(x_n, x_{n+1}) > 1/2 (raising NotMonotone at the first
    failure) and grade(x_n, limit) > 1/2 over the horizon.  For explicit
    sequences with a constant tail the limit must equal the tail, making
    the supremum exact; closed-form approaches carry the exact-supremum
    fact analytically.  A geometric dominating family is constructed from
    the actual deviations and re-verified as a convergence cross-check.
    """
    if horizon < 1:
        raise SpecError("horizon must be at least 1")
    vs._check_dims(s, limit)
    for n in range(1, horizon):
        if not vs.mu(s, seq.value(n), seq.value(n + 1)) > HALF:
            raise NotMonotone(f"sequence stops increasing at step {n}", index=n)
    below_violation = None
    for n in range(1, horizon + 1):
        if not vs.mu(s, seq.value(n), limit) > HALF:
            below_violation = n
            break
    if seq.kind == EXPLICIT:
        sup_exact = None if seq.tail_constant is None else seq.tail_constant == limit
    else:
        # closed forms converge to their center exactly; the supremum is the center
        sup_exact = seq.x == limit
    deviations = [vs.abs_val(s, seq.value(n) - limit) for n in range(1, horizon + 1)]
    fam = _geometric_cover(s, deviations)
    cross = check_convergence_certificate(s, seq, limit, fam, horizon)
    return MonotoneLimitReport(
        horizon=horizon,
        increasing_ok=True,
        below_limit_ok=below_violation is None,
        first_violation=below_violation,
        sup_exact=sup_exact,
        cross_check=cross,
    )


@dataclass
class ClosureVerdict:
    limit_in_handle: bool
    handle_is_band: bool
    certificate: CertificateReport

    def __bool__(self):
        return self.limit_in_handle

    def to_json(self) -> dict:
        return {
            "limit_in_handle": self.limit_in_handle,
            "handle_is_band": self.handle_is_band,
            "certificate": self.certificate.to_json(),
        }


def check_order_closed_under(
    s: SpaceSpec,
    h: Handle,
    seq: SequenceSpec,
    limit: Vec,
    fam: DominatingFamily,
    horizon: int,
) -> ClosureVerdict:
    """Drive a certified sequence that lives inside the handle at its limit.

    Preconditions: the certificate is accepted and every evaluated term
    belongs to the handle.  All preset handles are bands, so the limit
    must land inside (asserted); the verdict records it either way.
    """
    report = check_convergence_certificate(s, seq, limit, fam, horizon)
    if not report.accepted:
        raise SpecError(
            f"certificate rejected (first violation {report.violations[:1]}); "
            "order-closure needs a certified sequence"
        )
    for n in range(1, horizon + 1):
        if not ideals.ideal_contains(s, h, seq.value(n)):
            raise SpecError(f"sequence leaves the handle at index {n}")
    inside = ideals.ideal_contains(s, h, limit)
    # every preset handle is order closed; escaping it would be a bug
    assert inside, f"certified limit {limit} escaped the band handle {h}"
    return ClosureVerdict(limit_in_handle=inside, handle_is_band=True, certificate=report)


def _combine_families(
    s: SpaceSpec, f1: DominatingFamily, f2: DominatingFamily, a, b
) -> DominatingFamily:
    """|a| f1 + |b| f2 as a preset family; requires compatible kinds."""
    qa, qb = abs(to_fraction(a)), abs(to_fraction(b))
    if qa == 0 and qb == 0:
        unit = Vec((0, 1)) if s.family == LEX else Vec([1] * s.dimension)
        return DominatingFamily(HARMONIC, unit)
    if qa == 0:
        return f2.scaled(qb)
    if qb == 0:
        return f1.scaled(qa)
    if f1.kind != f2.kind:
        raise SpecError("cannot combine dominating families of different kinds")
    if f1.kind == GEOMETRIC and f1.ratio != f2.ratio:
        raise SpecError("cannot combine geometric families with different ratios")
    return DominatingFamily(f1.kind, qa * f1.base + qb * f2.base, f1.ratio)


def _derived_prefix(seq_fn, horizon: int) -> SequenceSpec:
    return explicit_sequence([seq_fn(n) for n in range(1, horizon + 1)])


@dataclass
class LimitLawsReport:
    linear: CertificateReport
    pos_part: CertificateReport
    neg_part: CertificateReport
    abs_value: CertificateReport
    join: CertificateReport
    meet: CertificateReport

    @property
    def all_accepted(self) -> bool:
        return all(
            r.accepted
            for r in (self.linear, self.pos_part, self.neg_part, self.abs_value, self.join, self.meet)
        )

    def __bool__(self):
        return self.all_accepted


def check_limit_laws(
    s: SpaceSpec,
    cert1: Certificate,
    cert2: Certificate,
    a,
    b,
    horizon: int,
) -> LimitLawsReport:
    """Construct and re-verify the derived certificates on a shared horizon.

    From two accepted certificates: the linear combination a x_n + b y_n
    (dominated by |a| fam1 + |b| fam2), the lattice images x_n+, x_n-,
    |x_n| of the first sequence (each 1-Lipschitz, so fam1 re-dominates),
    and the pairwise join/meet sequences (dominated by fam1 + fam2).
    """
    r1 = check_certificate(s, cert1, horizon)
    r2 = check_certificate(s, cert2, horizon)
    if not (r1.accepted and r2.accepted):
        raise SpecError("limit laws need two accepted certificates")
    seq1, x, f1 = cert1.sequence, cert1.limit, cert1.family
    seq2, y, f2 = cert2.sequence, cert2.limit, cert2.family

    linear_seq = _derived_prefix(lambda n: a * seq1.value(n) + b * seq2.value(n), horizon)
    linear = check_convergence_certificate(
        s, linear_seq, a * x + b * y, _combine_families(s, f1, f2, a, b), horizon
    )

    pos = check_convergence_certificate(
        s,
        _derived_prefix(lambda n: vs.pos_part(s, seq1.value(n)), horizon),
        vs.pos_part(s, x),
        f1,
        horizon,
    )
    neg = check_convergence_certificate(
        s,
        _derived_prefix(lambda n: vs.neg_part(s, seq1.value(n)), horizon),
        vs.neg_part(s, x),
        f1,
        horizon,
    )
    absolute = check_convergence_certificate(
        s,
        _derived_prefix(lambda n: vs.abs_val(s, seq1.value(n)), horizon),
        vs.abs_val(s, x),
        f1,
        horizon,
    )

    pair_family = _combine_families(s, f1, f2, 1, 1)
    joined = check_convergence_certificate(
        s,
        _derived_prefix(lambda n: vs.join(s, seq1.value(n), seq2.value(n)), horizon),
        vs.join(s, x, y),
        pair_family,
        horizon,
    )
    met = check_convergence_certificate(
        s,
        _derived_prefix(lambda n: vs.meet(s, seq1.value(n), seq2.value(n)), horizon),
        vs.meet(s, x, y),
        pair_family,
        horizon,
    )
    return LimitLawsReport(
        linear=linear, pos_part=pos, neg_part=neg, abs_value=absolute, join=joined, meet=met
    )
