"""Numerical harness for the zero-density uniqueness criterion.

The playing field: Dirichlet series L(s) = sum a(n) n^{-s} with a(1) = 1
satisfying a functional equation Lambda(s) = omega * conj(Lambda(1 - conj(s)))
with Lambda(s) = L(s) Q^s prod Gamma(lambda_j s + mu_j), compared against
meromorphic test functions f of order <= 1 with f -> 1 as sigma -> +inf.
Uniqueness holds once the exceptional zero set G is thin in the disc-count
sense limsup n(r, G)/r < log4/pi, and that bound is sharp: the polynomial
series L(s) = 1 + 2/4^s has critical-line zeros of density exactly log4/pi.

This module builds that counterexample, the three hypothesis-violating
companions f1, f2, f3, the auxiliary entire function F, and the product
growth estimate log|prod(1 - s^2/rho^2)| <= d2 |s| log 4.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .errors import ConfigError, DensityError, DomainError, PoleError
from .special import complex_gamma
from .zeros import PointSet

__all__ = [
    "FunctionalEquationDescriptor",
    "DirichletSeries",
    "MeromorphicTestFunction",
    "fe_residual",
    "counterexample_series",
    "counterexample_descriptor",
    "zeta_descriptor",
    "counterexample_zero_set",
    "build_F",
    "probe_F",
    "choose_mn",
    "ray_samples",
    "product_growth_check",
    "GrowthCheckResult",
    "remark_counterexamples",
    "RemarkReport",
    "f2_inverse_gap_log",
    "trivial_zero_classifier",
    "LOG4_OVER_PI",
]

LOG4_OVER_PI = math.log(4.0) / math.pi

LN2 = math.log(2.0)
LN4 = math.log(4.0)


@dataclass(frozen=True)
class FunctionalEquationDescriptor:
    """The data (Q, {(lambda_j, mu_j)}, omega) of a Riemann-type equation."""

    q_scale: float
    gamma_factors: tuple[tuple[float, complex], ...]
    root_number: complex

    def __post_init__(self) -> None:
        if not self.q_scale > 0.0:
            raise DomainError("Q must be positive")
        if abs(abs(self.root_number) - 1.0) > 1e-12:
            raise DomainError("the root number must be unimodular")
        for lam, mu in self.gamma_factors:
            if not lam > 0.0:
                raise DomainError("every lambda_j must be positive")
            if complex(mu).real < 0.0:
                raise DomainError("every mu_j must have Re >= 0")

    def completed(self, value: complex, s: complex) -> complex:
        """Lambda(s) given the bare value of the series/function at s."""
        out = value * self.q_scale**s
        for lam, mu in self.gamma_factors:
            out *= complex_gamma(lam * s + mu)
        return out

    def gamma_pole_distance(self, s: complex) -> float:
        """Distance from the nearest Gamma-factor pole argument."""
        dist = math.inf
        for lam, mu in self.gamma_factors:
            z = lam * s + mu
            n = round(z.real)
            if n <= 0:
                dist = min(dist, abs(z - n))
        return dist


@dataclass(frozen=True)
class DirichletSeries:
    """A Dirichlet series with a(1) = 1, finite or explicitly truncated."""

    coefficients: dict[int, complex]
    truncation: int | str = "exact-polynomial"

    def __post_init__(self) -> None:
        if self.coefficients.get(1) != 1:
            raise DomainError("a Dirichlet series here must have a(1) = 1")
        if isinstance(self.truncation, str) and self.truncation != "exact-polynomial":
            raise DomainError(f"unknown truncation mode {self.truncation!r}")
        if any(n < 1 for n in self.coefficients):
            raise DomainError("coefficient indices must be positive integers")

    def evaluate(self, s: complex) -> complex:
        total = 0.0 + 0.0j
        for n in sorted(self.coefficients):
            if isinstance(self.truncation, int) and n > self.truncation:
                break
            total += self.coefficients[n] * cmath.exp(-s * math.log(n)) if n > 1 else self.coefficients[n]
        return total

    __call__ = evaluate


@dataclass(frozen=True)
class MeromorphicTestFunction:
    """A deterministic evaluator standing in for the uniqueness candidate f."""

    evaluator: Callable[[complex], complex]
    description: str
    claimed_order: float

    def evaluate(self, s: complex) -> complex:
        return self.evaluator(s)

    __call__ = evaluate


def _safe_eval(f, s: complex) -> complex:
    """Evaluate f, mapping its poles to complex infinity."""
    try:
        value = f.evaluate(s) if hasattr(f, "evaluate") else f(s)
    except ZeroDivisionError:
        return complex(math.inf, math.inf)
    return value


def fe_residual(
    desc: FunctionalEquationDescriptor,
    f,
    s: complex | float,
) -> float:
    """|Lambda(s) - omega conj(Lambda(1 - conj(s)))| / (1 + |Lambda(s)|)."""
    s = complex(s)
    w = 1.0 - s.conjugate()
    for point in (s, w):
        if desc.gamma_pole_distance(point) <= 1e-8:
            raise PoleError(f"Gamma factor pole within 1e-8 of {point}")
    v_s = _safe_eval(f, s)
    v_w = _safe_eval(f, w)
    if not (cmath.isfinite(v_s) and cmath.isfinite(v_w)):
        raise PoleError(f"f has a pole at one of {s}, {w}")
    lam_s = desc.completed(v_s, s)
    lam_w = desc.completed(v_w, w)
    return abs(lam_s - desc.root_number * lam_w.conjugate()) / (1.0 + abs(lam_s))


# ----------------------------------------------------------------------------
# The sharp counterexample L(s) = 1 + 2/4^s and its companions.


def counterexample_series() -> DirichletSeries:
    """L(s) = 1 + 2 * 4^{-s}, the density-sharpness witness."""
    return DirichletSeries({1: 1.0 + 0.0j, 4: 2.0 + 0.0j})


def counterexample_descriptor() -> FunctionalEquationDescriptor:
    """Its functional equation 2^s L(s) = 2^{1-s} conj(L(1 - conj(s)))."""
    return FunctionalEquationDescriptor(2.0, (), 1.0 + 0.0j)


def zeta_descriptor() -> FunctionalEquationDescriptor:
    """zeta in descriptor form: Q = pi^{-1/2}, one factor Gamma(s/2), omega = 1."""
    return FunctionalEquationDescriptor(
        1.0 / math.sqrt(math.pi), ((0.5, 0.0 + 0.0j),), 1.0 + 0.0j
    )


def counterexample_zero_set(k_range: range) -> PointSet:
    """The zeros s_k = (ln 2 + (2k+1) pi i)/ln 4 of 1 + 2*4^{-s}.

    Every zero has real part exactly 1/2; the ordinates are spaced
    2 pi / ln 4 apart, which is what makes n(r)/r converge to log4/pi.
    """
    pts = [complex(0.5, (2 * k + 1) * math.pi / LN4) for k in k_range]
    return PointSet.from_points(pts)


# ----------------------------------------------------------------------------
# The auxiliary function F and its (m, n) diagnostics.


def _quotient(L, f, s: complex) -> complex:
    """(L - f)/f, with the poles of f contributing their limit -1 exactly."""
    fv = _safe_eval(f, s)
    lv = _safe_eval(L, s)
    if not cmath.isfinite(lv):
        raise PoleError(f"series pole at {s}")
    if not cmath.isfinite(fv):
        return -1.0 + 0.0j
    return (lv - fv) / fv


def build_F(
    L,
    f,
    G: PointSet,
    m: int,
    n: int,
) -> Callable[[complex], complex]:
    """The auxiliary function

    F(s) = (s^2-1)^m s^n [(L-f)/f](s) [(L-f)/f](-s) prod_{rho in G}(1 - s^2/rho^2).

    Returns a plain evaluator; run probe_F on it to certify that the chosen
    (m, n) leaves F finite at s = +-1 and vanishing at s = 0.
    """
    if abs(m) > 8 or abs(n) > 8:
        raise ConfigError("|m| and |n| must not exceed 8")
    if any(p == 0 for p in G.points):
        raise ConfigError("the exceptional set G must not contain 0")
    rho = np.asarray(G.points, dtype=np.complex128)
    mult = np.asarray(G.multiplicities, dtype=np.float64)
    rho_sq = rho * rho

    def F(s: complex) -> complex:
        s = complex(s)
        quot = _quotient(L, f, s) * _quotient(L, f, -s)
        try:
            poly = (s * s - 1.0) ** m * s**n
        except ZeroDivisionError:
            # negative m or n evaluated exactly on its pole
            return complex(math.inf, 0.0)
        if rho_sq.size:
            prod = complex(np.prod((1.0 - s * s / rho_sq) ** mult))
        else:
            prod = 1.0 + 0.0j
        return poly * quot * prod

    return F


@dataclass(frozen=True)
class ProbeResult:
    finite_at_plus_one: bool
    finite_at_minus_one: bool
    zero_at_origin: bool
    origin_value: complex
    details: dict

    @property
    def ok(self) -> bool:
        return self.finite_at_plus_one and self.finite_at_minus_one and self.zero_at_origin


_PROBE_ANGLES = (0.0, 0.5 * math.pi, math.pi, 1.5 * math.pi)


def _max_on_circle(F, center: complex, radius: float) -> float:
    return max(abs(F(center + radius * cmath.exp(1j * a))) for a in _PROBE_ANGLES)


def probe_F(F: Callable[[complex], complex], *, raise_on_failure: bool = True) -> ProbeResult:
    """Numeric limit probes: no pole at s = +-1, a zero at s = 0.

    Pole detection compares |F| on circles of radius 1e-4 and 1e-5 around
    +-1 (a simple pole grows tenfold); the origin check requires |F(0)|
    < 1e-10 together with decay of |F| on shrinking circles.
    """
    details: dict = {}
    finite = {}
    for center in (1.0, -1.0):
        outer = _max_on_circle(F, center, 1e-4)
        inner = _max_on_circle(F, center, 1e-5)
        finite[center] = inner <= 3.0 * outer + 1e-250
        details[f"ring_{center:+.0f}"] = (outer, inner)
    origin_value = F(0.0)
    outer0 = _max_on_circle(F, 0.0, 1e-4)
    inner0 = _max_on_circle(F, 0.0, 1e-5)
    zero_ok = abs(origin_value) < 1e-10 and inner0 <= 0.5 * outer0 + 1e-250
    details["ring_origin"] = (outer0, inner0)
    result = ProbeResult(finite[1.0], finite[-1.0], zero_ok, origin_value, details)
    if raise_on_failure and not result.ok:
        raise ConfigError(
            f"probe failed: finite@+1={result.finite_at_plus_one} "
            f"finite@-1={result.finite_at_minus_one} zero@0={result.zero_at_origin}"
        )
    return result


def choose_mn(L, f, G: PointSet, *, bound: int = 8) -> tuple[int, int]:
    """Exhaustive (m, n) scan, smallest |m|+|n| first, probe-certified."""
    candidates = sorted(
        ((m, n) for m in range(-bound, bound + 1) for n in range(-bound, bound + 1)),
        key=lambda mn: (abs(mn[0]) + abs(mn[1]), mn[0], mn[1]),
    )
    for m, n in candidates:
        F = build_F(L, f, G, m, n)
        try:
            result = probe_F(F, raise_on_failure=False)
        except (PoleError, OverflowError):
            continue
        if result.ok:
            return m, n
    raise ConfigError("no (m, n) within the scan bound passes the probes")


def ray_samples(
    F: Callable[[complex], complex],
    d_cos: float,
    radii: Sequence[float],
) -> list[tuple[complex, float]]:
    """|F| sampled along the four rays with |cos(arg s)| = d_cos.

    Pure diagnostics mirroring the sector geometry of the boundedness
    argument; nothing is asserted (samples cannot certify an analytic
    boundedness claim).
    """
    if not 0.0 < d_cos < 1.0:
        raise DomainError("need 0 < d_cos < 1")
    theta = math.acos(d_cos)
    out = []
    for base in (theta, math.pi - theta, math.pi + theta, 2.0 * math.pi - theta):
        direction = cmath.exp(1j * base)
        for r in radii:
            s = r * direction
            out.append((s, abs(F(s))))
    return out


# ----------------------------------------------------------------------------
# The product growth estimate.


@dataclass(frozen=True)
class GrowthCheckResult:
    records: list[tuple[complex, float, float, bool]]
    r0: float | None
    d1: float
    d2: float

    @property
    def all_ok(self) -> bool:
        return all(rec[3] for rec in self.records)


def product_growth_check(
    G: PointSet,
    s_samples: Sequence[complex],
    d1: float,
) -> GrowthCheckResult:
    """Check log|prod_{rho in G}(1 - s^2/rho^2)| <= d2 |s| log 4, d2 = (1+d1)/2.

    Precondition: the empirical density n(r, G)/r must stay below
    d1 * log4/pi at every sampled radius (DensityError otherwise).  The
    result reports, as r0, the smallest sampled radius beyond which every
    sample satisfies the bound.
    """
    if not 0.0 < d1 < 1.0:
        raise DomainError("need 0 < d1 < 1")
    samples = [complex(s) for s in s_samples]
    if not samples:
        raise DomainError("need at least one sample point")
    rho = np.asarray(G.points, dtype=np.complex128)
    mult = np.asarray(G.multiplicities, dtype=np.float64)
    rho_sq = rho * rho
    moduli = G.moduli() if len(G.points) else np.empty(0)
    threshold = d1 * LOG4_OVER_PI
    for r in sorted({abs(s) for s in samples}):
        if r <= 0.0:
            raise DomainError("samples must be nonzero")
        count = float(mult[moduli <= r].sum()) if moduli.size else 0.0
        if count / r >= threshold:
            raise DensityError(
                f"n({r:.6g}, G)/r = {count / r:.6f} is not below "
                f"d1 * log4/pi = {threshold:.6f}"
            )
    d2 = 0.5 * (1.0 + d1)
    records = []
    for s in samples:
        if rho_sq.size:
            with np.errstate(divide="ignore"):
                lhs = float(np.sum(mult * np.log(np.abs(1.0 - s * s / rho_sq))))
        else:
            lhs = 0.0
        rhs = d2 * abs(s) * LN4
        records.append((s, lhs, rhs, lhs <= rhs))
    radii_sorted = sorted(records, key=lambda rec: abs(rec[0]))
    r0 = None
    for i, rec in enumerate(radii_sorted):
        if all(r[3] for r in radii_sorted[i:]):
            r0 = abs(rec[0])
            break
    return GrowthCheckResult(records, r0, d1, d2)


# ----------------------------------------------------------------------------
# The three hypothesis-violating companions of the counterexample.


def _f1_evaluator(L) -> Callable[[complex], complex]:
    def f1(s: complex) -> complex:
        return (1.0 + 1.0 / (s * (1.0 - s))) * L.evaluate(s)

    return f1


def _f2_evaluator(L) -> Callable[[complex], complex]:
    def f2(s: complex) -> complex:
        w = s * (1.0 - s)
        # logistic form keeps exp(w) out of overflow for Re(w) > 0
        if w.real > 0.0:
            ew = cmath.exp(-w)
            return L.evaluate(s) * ew / (1.0 + ew)
        return L.evaluate(s) / (1.0 + cmath.exp(w))

    return f2


def _f3_evaluator(L) -> Callable[[complex], complex]:
    def f3(s: complex) -> complex:
        return L.evaluate(s) / (s * (1.0 - s))

    return f3


def f2_inverse_gap_log(t: float) -> float:
    """log |1/f2 - 1/L| at s = 1/2 + i t, computed analytically.

    1/f2 - 1/L = exp(s(1-s))/L(s), and on the critical line s(1-s) = |s|^2
    is real, so the log-magnitude is |s|^2 - log|L(s)| and grows
    quadratically in t: the order-2 witness probe.
    """
    s = complex(0.5, t)
    L = counterexample_series()
    return (0.25 + t * t) - math.log(abs(L.evaluate(s)))


@dataclass(frozen=True)
class RemarkReport:
    name: str
    violated_hypothesis: str
    fe_residuals: tuple[tuple[complex, float], ...]
    witness_point: complex
    witness_deviation: float
    sigma_decay: tuple[tuple[float, float], ...]


_REMARK_SAMPLE_POINTS = (
    complex(0.3, 5.0),
    complex(2.0, 1.5),
    complex(-1.2, 3.0),
    complex(0.5, 11.0),
    complex(3.4, -6.0),
)

_REMARK_SIGMAS = (5.0, 10.0, 20.0, 30.0)


def remark_counterexamples() -> list[tuple[str, MeromorphicTestFunction, RemarkReport]]:
    """The three companions of L = 1 + 2/4^s that break one hypothesis each.

    f1 = (1 + 1/(s(1-s))) L  : same equation, order 1, limit 1 -- only the
         density bound on the exceptional set fails (sharpness);
    f2 = L / (1 + e^{s(1-s)}): order 2, everything else intact;
    f3 = L / (s(1-s))        : order 1 but the sigma -> +inf limit is 0.

    Each report records functional-equation residuals at five fixed sample
    points, the violated hypothesis, a witness point with |f - L| > 0.4,
    and |f| along increasing real sigma.
    """
    L = counterexample_series()
    desc = counterexample_descriptor()
    table = (
        ("f1", _f1_evaluator(L), 1.0, "zero-density bound on the exceptional set (sharpness)", 2.0),
        ("f2", _f2_evaluator(L), 2.0, "order <= 1", complex(0.5, 3.0)),
        ("f3", _f3_evaluator(L), 1.0, "limit 1 as sigma -> +inf", 2.0),
    )
    out = []
    for name, evaluator, order, violated, witness in table:
        f = MeromorphicTestFunction(evaluator, f"{name} companion of 1 + 2*4^(-s)", order)
        residuals = tuple(
            (s, fe_residual(desc, f, s)) for s in _REMARK_SAMPLE_POINTS
        )
        witness = complex(witness)
        deviation = abs(_safe_eval(f, witness) - L.evaluate(witness))
        decay = tuple(
            (sigma, abs(_safe_eval(f, complex(sigma, 0.0)))) for sigma in _REMARK_SIGMAS
        )
        out.append(
            (
                name,
                f,
                RemarkReport(name, violated, residuals, witness, deviation, decay),
            )
        )
    return out


# ----------------------------------------------------------------------------
# Trivial-zero classification from the functional equation alone.


def trivial_zero_classifier(
    desc: FunctionalEquationDescriptor,
    s: complex | float,
    value_at_s: complex | None = None,
    zero_tol: float = 1e-6,
) -> str:
    """Classify s as ``trivial``, ``nontrivial`` or ``not-a-zero``.

    ``trivial`` is decided purely from the descriptor: some Gamma factor
    argument lambda_j s + mu_j lands (within 1e-9) on a non-positive
    integer, so the functional equation forces a zero there.  Telling a
    nontrivial zero from a non-zero needs evidence about the function
    value, supplied as ``value_at_s``; without it everything non-forced is
    reported as ``not-a-zero``.
    """
    s = complex(s)
    for lam, mu in desc.gamma_factors:
        z = lam * s + mu
        n = round(z.real)
        if n <= 0 and abs(z - n) <= 1e-9:
            return "trivial"
    if value_at_s is not None and abs(value_at_s) < zero_tol:
        return "nontrivial"
    return "not-a-zero"
