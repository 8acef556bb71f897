"""The symmetric zero product h_N and its meromorphic companion eta_N.

h_N(s) = c * prod_{nu<=N} (1 - (s - s^2) / (1/4 + t_nu^2)) is built from the
first N critical-line zero ordinates; c = 1/2 in the Riemann case.  Because
s - s^2 is invariant under s -> 1-s, the truncated product is exactly
symmetric, and eta_N(s) = h_N(s) / [(s/2)(s-1) pi^{-s/2} Gamma(s/2)]
satisfies the Riemann functional equation at every truncation order up to
floating error.

The infinite product is never summed: every evaluation carries its
truncation order, and the sigma scan reports an analytic tail bound
B(N, sigma) = |sigma(1-sigma)| * T(N) with T(N) estimated by the
zero-density integral int_{t_N}^inf log(t/2pi) / (2 pi t^2) dt.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .config import DEFAULT_CONFIG, EvalConfig
from .errors import DomainError, PoleError
from .special import complex_gamma, reflection_factor
from .zeros import ZeroList

__all__ = [
    "TruncatedProductSpec",
    "h_truncated",
    "h_log_abs",
    "eta_truncated",
    "eta_fe_residual",
    "eta_residue_at_one",
    "sigma_scan",
    "product_tail_estimate",
    "ScanPoint",
]

_LOG_PI = math.log(math.pi)

#: |s| beyond which the product switches from plain factors to log accumulation.
_DIRECT_PRODUCT_RADIUS = 50.0


@dataclass(frozen=True)
class TruncatedProductSpec:
    """How to build h_N: which zeros, how many factors, and the constant."""

    zeros: ZeroList
    n_terms: int
    leading_constant: float = 0.5

    def __post_init__(self) -> None:
        if self.n_terms < 1:
            raise DomainError("n_terms must be a positive integer")
        if self.n_terms > len(self.zeros):
            raise DomainError(
                f"spec asks for {self.n_terms} factors but only "
                f"{len(self.zeros)} zeros are available"
            )
        if not self.leading_constant > 0.0:
            raise DomainError("leading_constant must be positive")

    def factor_denominators(self) -> np.ndarray:
        """1/4 + t_nu^2 for the first n_terms ordinates."""
        t = self.zeros.ordinates[: self.n_terms]
        return 0.25 + t * t


def _factors(spec: TruncatedProductSpec, s: complex) -> np.ndarray:
    """The array 1 - (s - s^2)/(1/4 + t_nu^2), divided componentwise.

    Componentwise real division keeps the cancellation exact: at a stored
    zero the numerator reproduces the denominator bit for bit and a/a is
    exactly 1, so the factor is exactly 0 (full complex division would
    introduce a rounding detour).
    """
    q = spec.factor_denominators()
    w = s - s * s
    factors = np.empty(q.shape, dtype=np.complex128)
    factors.real = 1.0 - w.real / q
    factors.imag = -w.imag / q
    return factors


def h_truncated(spec: TruncatedProductSpec, s: complex | float) -> complex:
    """The truncated symmetric product h_N(s).

    For |s| <= 50 the factors are multiplied directly, which keeps the
    values at s = 0, s = 1 and at the listed zeros exact.  Beyond that
    radius the factor logarithms are accumulated and exponentiated, which
    can overflow to inf for very large |s|; use h_log_abs for growth
    diagnostics.
    """
    s = complex(s)
    factors = _factors(spec, s)
    if abs(s) <= _DIRECT_PRODUCT_RADIUS:
        return spec.leading_constant * complex(np.prod(factors))
    if not np.all(factors):
        return 0.0 + 0.0j
    return spec.leading_constant * cmath.exp(complex(np.sum(np.log(factors))))


def h_log_abs(spec: TruncatedProductSpec, s: complex | float) -> float:
    """log|h_N(s)|, safe at radii where the product itself would overflow."""
    factors = _factors(spec, complex(s))
    with np.errstate(divide="ignore"):
        return math.log(spec.leading_constant) + float(
            np.sum(np.log(np.abs(factors)))
        )


def _trivial_zero_index(s: complex, tol: float = 1e-10) -> int | None:
    """k >= 1 when s is within tol of the trivial zero -2k, else None."""
    k = round(-s.real / 2.0)
    if k >= 1 and abs(s - (-2.0 * k)) <= tol:
        return k
    return None


def eta_truncated(
    spec: TruncatedProductSpec,
    s: complex | float,
    cfg: EvalConfig = DEFAULT_CONFIG,
) -> complex:
    """eta_N(s) = h_N(s) / [(s/2)(s-1) pi^{-s/2} Gamma(s/2)].

    The denominator is grouped as (s-1) pi^{-s/2} Gamma(s/2 + 1), so the
    only pole is s = 1 (PoleError within 1e-8).  At the points -2, -4, ...
    the Gamma pole of the denominator forces eta to vanish; those are
    returned as exact zeros when s lies within 1e-10 of one.
    """
    s = complex(s)
    if abs(s - 1.0) <= 1e-8:
        raise PoleError("eta has its only pole at s = 1")
    if _trivial_zero_index(s) is not None:
        return 0.0 + 0.0j
    denom = (s - 1.0) * cmath.exp(-0.5 * s * _LOG_PI) * complex_gamma(0.5 * s + 1.0)
    return h_truncated(spec, s) / denom


def eta_fe_residual(
    spec: TruncatedProductSpec,
    s: complex | float,
    cfg: EvalConfig = DEFAULT_CONFIG,
) -> float:
    """Relative residual of the Riemann functional equation for eta_N.

    |eta(1-s) - 2 (2 pi)^{-s} cos(pi s/2) Gamma(s) eta(s)| / (1 + |eta(1-s)|);
    exact symmetry of h_N makes this pure floating noise at any N.
    """
    s = complex(s)
    lhs = eta_truncated(spec, 1.0 - s, cfg)
    rhs = reflection_factor(s) * eta_truncated(spec, s, cfg)
    return abs(lhs - rhs) / (1.0 + abs(lhs))


def eta_residue_at_one(spec: TruncatedProductSpec) -> float:
    """Residue of eta_N at s = 1, evaluated symbolically.

    lim (s-1) eta_N = 2 pi^{1/2} h_N(1) / Gamma(1/2) = 2 h_N(1), and
    h_N(1) is the leading constant exactly, at every truncation order.
    """
    return 2.0 * spec.leading_constant


def product_tail_estimate(spec: TruncatedProductSpec) -> float:
    """Density-integral estimate of T(N) = sum_{nu > N} (1/4 + t_nu^2)^{-1}.

    Using dN(t) ~ log(t/2pi)/(2pi) dt gives
    T(N) ~ (log(t_N / 2pi) + 1) / (2 pi t_N).
    """
    t_last = float(spec.zeros.ordinates[spec.n_terms - 1])
    return (math.log(t_last / (2.0 * math.pi)) + 1.0) / (2.0 * math.pi * t_last)


@dataclass(frozen=True)
class ScanPoint:
    sigma: float
    value: complex
    tail_bound: float
    n_terms: int


def sigma_scan(
    spec: TruncatedProductSpec,
    sigmas: Sequence[float],
    cfg: EvalConfig = DEFAULT_CONFIG,
) -> list[ScanPoint]:
    """eta_N along the real axis, each value paired with its tail bound.

    The scan reports evidence, not a verdict: whether eta(sigma) -> 1 is
    exactly the open question, so the output carries B(N, sigma) =
    |sigma(1-sigma)| * T(N) instead of asserting convergence.
    """
    tail = product_tail_estimate(spec)
    out = []
    for sigma in sigmas:
        sigma = float(sigma)
        if not sigma > 1.0:
            raise DomainError(f"sigma scan requires sigma > 1, got {sigma}")
        value = eta_truncated(spec, complex(sigma, 0.0), cfg)
        bound = abs(sigma * (1.0 - sigma)) * tail
        out.append(ScanPoint(sigma, value, bound, spec.n_terms))
    return out
