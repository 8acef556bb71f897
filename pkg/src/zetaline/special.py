"""Complex-plane special functions: Gamma, log-Gamma, zeta, xi, theta, Z.

Everything here is binary64 arithmetic.  The zeta evaluator is
Euler-Maclaurin summation with Bernoulli corrections through B_30 and the
classical reflection formula for the left half of the critical strip; the
Gamma evaluator is a fixed 15-term Lanczos rational approximation with
reflection for Re(s) < 1/2.  Documented accuracy targets:

* ``complex_gamma``: relative error <= 1e-12 for |s| <= 100 away from poles.
* ``complex_zeta``: absolute error <= 1e-10 for |Im s| <= 1000 and
  <= 1e-8 up to |Im s| <= 12000, for -10 <= Re s <= 10; where the
  reflected value is itself huge the error is machine-relative, i.e. the
  guarantee is target * (1 + |zeta(s)|).

All functions are pure; the coefficient tables are module constants and
never mutated after import, so concurrent use needs no locking.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .config import DEFAULT_CONFIG, EvalConfig
from .errors import ConsistencyError, DomainError, PoleError

__all__ = [
    "complex_gamma",
    "complex_log_gamma",
    "complex_zeta",
    "zeta_euler_maclaurin",
    "hurwitz_zeta",
    "zeta_tail_from",
    "reflection_factor",
    "log_cos_half_pi",
    "xi",
    "riemann_siegel_theta",
    "theta_batch",
    "hardy_Z",
    "hardy_Z_batch",
    "zero_count_estimate",
]

LOG_TWO_PI = math.log(2.0 * math.pi)
HALF_LOG_TWO_PI = 0.5 * LOG_TWO_PI
SQRT_TWO_PI = math.sqrt(2.0 * math.pi)

# ----------------------------------------------------------------------------
# Gamma: 15-term Lanczos approximation, g = 607/128 (Godfrey's coefficients).
# Relative accuracy is close to machine epsilon on Re(z) > 0.

_LANCZOS_G = 607.0 / 128.0

_LANCZOS_C = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
)


def _lanczos_series(zz: complex) -> complex:
    """Partial-fraction sum A(zz) = c0 + sum c_k/(zz+k) of the approximation."""
    acc = _LANCZOS_C[0]
    for k in range(1, len(_LANCZOS_C)):
        acc = acc + _LANCZOS_C[k] / (zz + k)
    return acc


def _near_nonpositive_integer(s: complex, tol: float) -> bool:
    n = round(s.real)
    return n <= 0 and abs(s - n) <= tol


def complex_gamma(s: complex | float) -> complex:
    """Euler Gamma function on the complex plane.

    Uses the Lanczos sum directly for Re(s) >= 1/2 and the reflection
    formula Gamma(s) Gamma(1-s) = pi / sin(pi s) otherwise.  Points within
    1e-12 of the poles 0, -1, -2, ... raise PoleError.
    """
    s = complex(s)
    if _near_nonpositive_integer(s, 1e-12):
        raise PoleError(f"Gamma has a pole at non-positive integer near s={s}")
    if s.real < 0.5:
        sin_pi_s = cmath.sin(cmath.pi * s)
        return cmath.pi / (sin_pi_s * complex_gamma(1.0 - s))
    zz = s - 1.0
    t = zz + _LANCZOS_G + 0.5
    return SQRT_TWO_PI * t ** (zz + 0.5) * cmath.exp(-t) * _lanczos_series(zz)


def complex_log_gamma(s: complex | float) -> complex:
    """Principal branch of log Gamma, continuous on Re(s) > 0.

    For Re(s) < 10 the argument is shifted up by the recurrence
    log Gamma(s) = log Gamma(s+1) - log s before applying the Lanczos sum;
    every shift term is a principal logarithm of a right-half-plane point,
    so no 2*pi unwinding is ever needed.
    """
    s = complex(s)
    if s.real <= 0.0:
        raise DomainError(f"complex_log_gamma requires Re(s) > 0, got {s}")
    shift = 0.0 + 0.0j
    w = s
    while w.real < 10.0:
        shift -= cmath.log(w)
        w = w + 1.0
    zz = w - 1.0
    t = zz + _LANCZOS_G + 0.5
    value = (
        HALF_LOG_TWO_PI
        + (zz + 0.5) * cmath.log(t)
        - t
        + cmath.log(_lanczos_series(zz))
    )
    return value + shift


def _log_gamma_array(z: np.ndarray) -> np.ndarray:
    """Vectorised complex_log_gamma for arrays with Re(z) > 0."""
    z = np.asarray(z, dtype=np.complex128)
    shift = np.zeros_like(z)
    w = z.copy()
    for _ in range(12):
        mask = w.real < 10.0
        if not mask.any():
            break
        shift[mask] -= np.log(w[mask])
        w[mask] += 1.0
    zz = w - 1.0
    acc = np.full_like(z, _LANCZOS_C[0])
    for k in range(1, len(_LANCZOS_C)):
        acc += _LANCZOS_C[k] / (zz + k)
    t = zz + _LANCZOS_G + 0.5
    return HALF_LOG_TWO_PI + (zz + 0.5) * np.log(t) - t + np.log(acc) + shift


# ----------------------------------------------------------------------------
# Bernoulli numbers B_2 .. B_30 (exact rationals) and the Euler-Maclaurin
# correction coefficients B_{2k} / (2k)!.

_BERNOULLI_2K = (
    (1, 6),
    (-1, 30),
    (1, 42),
    (-1, 30),
    (5, 66),
    (-691, 2730),
    (7, 6),
    (-3617, 510),
    (43867, 798),
    (-174611, 330),
    (854513, 138),
    (-236364091, 2730),
    (8553103, 6),
    (-23749461029, 870),
    (8615841276005, 14322),
)

_EM_COEF = tuple(
    num / (den * math.factorial(2 * (k + 1)))
    for k, (num, den) in enumerate(_BERNOULLI_2K)
)


def _em_cutoff(s: complex, cfg: EvalConfig) -> int:
    return max(cfg.em_terms, int(abs(s.imag) / 2.0) + 10)


def _em_corrections(s: complex, base: complex, base_point: float, kmax: int) -> complex:
    """Bernoulli correction sum: sum_k B_2k/(2k)! * (s)_{2k-1} * base_point^{-s-2k+1}.

    ``base`` must be base_point**(-s-1); the rising factorial is accumulated
    term by term.
    """
    total = 0.0 + 0.0j
    rising = s
    power = base
    inv_sq = 1.0 / (base_point * base_point)
    for k in range(kmax):
        total += _EM_COEF[k] * rising * power
        if k + 1 < kmax:
            m = 2 * k + 1
            rising = rising * (s + m) * (s + m + 1)
            power = power * inv_sq
    return total


def zeta_euler_maclaurin(s: complex | float, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """Direct Euler-Maclaurin continuation of the zeta Dirichlet series.

    Reliable for Re(s) >= 1/2 at any desk height, and in a small
    neighbourhood of the origin where the reflection formula would hit the
    pole of zeta at the reflected argument.  Cancellation between the main
    sum and the N^{1-s}/(s-1) term makes it unsuitable deep in the left
    half-plane; ``complex_zeta`` reflects there instead.
    """
    s = complex(s)
    if abs(s - 1.0) <= 1e-8:
        raise PoleError("zeta has a simple pole at s = 1")
    n_cut = _em_cutoff(s, cfg)
    n = np.arange(1, n_cut, dtype=np.float64)
    main = complex(np.sum(np.exp(-s * np.log(n))))
    big_n = float(n_cut)
    n_pow = big_n ** (-s)
    value = main + n_pow * big_n / (s - 1.0) + 0.5 * n_pow
    value += _em_corrections(s, n_pow / big_n, big_n, cfg.bernoulli_order // 2)
    return value


def hurwitz_zeta(s: complex | float, a: float, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """Hurwitz zeta(s, a) for 0 < a <= 1 by Euler-Maclaurin summation.

    Same accuracy envelope as ``zeta_euler_maclaurin``; used for Dirichlet
    L-series through the period decomposition
    L(s, chi) = q^{-s} * sum_r chi(r) zeta(s, r/q).
    """
    s = complex(s)
    if not 0.0 < a <= 1.0:
        raise DomainError(f"hurwitz_zeta requires 0 < a <= 1, got a={a}")
    if abs(s - 1.0) <= 1e-12:
        raise PoleError("hurwitz zeta has a simple pole at s = 1")
    n_cut = _em_cutoff(s, cfg)
    n = np.arange(0, n_cut, dtype=np.float64) + a
    main = complex(np.sum(np.exp(-s * np.log(n))))
    edge = float(n_cut) + a
    e_pow = edge ** (-s)
    value = main + e_pow * edge / (s - 1.0) + 0.5 * e_pow
    value += _em_corrections(s, e_pow / edge, edge, cfg.bernoulli_order // 2)
    return value


def zeta_tail_from(s: complex, n0: np.ndarray | float, cfg: EvalConfig = DEFAULT_CONFIG) -> np.ndarray | complex:
    """Closed Euler-Maclaurin form of the Dirichlet tail sum_{n >= n0} n^{-s}.

    Valid once n0 comfortably exceeds (|s| + 30)/6; vectorised over n0.
    """
    scalar = np.isscalar(n0)
    base = np.asarray(n0, dtype=np.float64)
    pow_s = np.exp(-s * np.log(base))
    value = pow_s * base / (s - 1.0) + 0.5 * pow_s
    rising = s
    power = pow_s / base
    inv_sq = 1.0 / (base * base)
    kmax = cfg.bernoulli_order // 2
    for k in range(kmax):
        value += _EM_COEF[k] * rising * power
        if k + 1 < kmax:
            m = 2 * k + 1
            rising = rising * (s + m) * (s + m + 1)
            power = power * inv_sq
    return complex(value) if scalar else value


# ----------------------------------------------------------------------------
# Overflow-safe helpers for the functional-equation factor
# chi(s) = 2 (2 pi)^{-s} cos(pi s / 2) Gamma(s), with zeta(1-s) = chi(s) zeta(s).


def log_cos_half_pi(s: complex) -> complex:
    """A logarithm of cos(pi s / 2) stable for large |Im s|.

    The imaginary part is only defined modulo 2*pi; callers exponentiate.
    Returns -inf real part at the zeros of the cosine.
    """
    z = 0.5 * cmath.pi * s
    if abs(z.imag) <= 60.0:
        c = cmath.cos(z)
        if c == 0.0:
            return complex(-math.inf, 0.0)
        return cmath.log(c)
    if z.imag > 0.0:
        return -1j * z - math.log(2.0) + cmath.log(1.0 + cmath.exp(2j * z))
    return 1j * z - math.log(2.0) + cmath.log(1.0 + cmath.exp(-2j * z))


def log_sin_half_pi(s: complex) -> complex:
    """A logarithm of sin(pi s / 2) stable for large |Im s| (modulo 2*pi*i)."""
    z = 0.5 * cmath.pi * s
    if abs(z.imag) <= 60.0:
        c = cmath.sin(z)
        if c == 0.0:
            return complex(-math.inf, 0.0)
        return cmath.log(c)
    if z.imag > 0.0:
        return 1j * z - math.log(2.0) - 0.5j * cmath.pi + cmath.log(1.0 - cmath.exp(-2j * z))
    return -1j * z - math.log(2.0) + 0.5j * cmath.pi + cmath.log(1.0 - cmath.exp(2j * z))


def log_gamma_any(s: complex) -> complex:
    """A logarithm of Gamma(s) for any non-pole s (imaginary part modulo 2*pi).

    Principal and continuous on Re(s) > 0; obtained through the sine
    reflection otherwise, where only exp() of the result is meaningful.
    """
    s = complex(s)
    if s.real > 0.0:
        return complex_log_gamma(s)
    return math.log(math.pi) - log_sin_half_pi(2.0 * s) - complex_log_gamma(1.0 - s)


def reflection_factor(s: complex) -> complex:
    """The factor chi(s) = 2 (2 pi)^{-s} cos(pi s / 2) Gamma(s).

    Assembled in log space so the exponential decay of Gamma and the growth
    of the cosine cancel before exponentiation.  The value blows up at the
    Gamma poles on Re(s) <= 0, which callers are expected to avoid.
    """
    s = complex(s)
    lc = log_cos_half_pi(s)
    if lc.real == -math.inf:
        return 0.0 + 0.0j
    return cmath.exp(math.log(2.0) - s * LOG_TWO_PI + lc + log_gamma_any(s))


def complex_zeta(s: complex | float, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """Riemann zeta by Euler-Maclaurin (Re s >= 1/2) plus reflection.

    Points within 1e-8 of the pole s = 1 raise PoleError.  Near the origin
    the reflection would itself hit the pole, so a small disc |s| <= 0.25 is
    evaluated by the direct continuation.
    """
    s = complex(s)
    if abs(s - 1.0) <= 1e-8:
        raise PoleError("zeta has a simple pole at s = 1")
    if s.real >= 0.5 or abs(s) <= 0.25:
        return zeta_euler_maclaurin(s, cfg)
    sp = 1.0 - s
    return reflection_factor(sp) * zeta_euler_maclaurin(sp, cfg)


# ----------------------------------------------------------------------------
# The completed function xi and the critical-line machinery theta, Z.

_EULER_GAMMA = 0.5772156649015329


def xi(s: complex | float, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """The entire completion xi(s) = (s/2)(s-1) pi^{-s/2} Gamma(s/2) zeta(s).

    Written as pi^{-s/2} Gamma(s/2 + 1) * (s-1) zeta(s), which removes the
    spurious 0/0 at the origin; within 1e-8 of s = 1 the removable factor
    (s-1) zeta(s) is replaced by its Laurent expansion 1 + gamma (s-1).
    Direct-product evaluation: the value itself decays like e^{-pi|t|/4}
    and underflows to 0 beyond |Im s| ~ 900, far above every documented use.
    """
    s = complex(s)
    if abs(s - 1.0) <= 1e-8:
        pole_part = 1.0 + _EULER_GAMMA * (s - 1.0)
    else:
        pole_part = (s - 1.0) * complex_zeta(s, cfg)
    prefactor = cmath.exp(-0.5 * s * math.log(math.pi)) * complex_gamma(0.5 * s + 1.0)
    return prefactor * pole_part


def riemann_siegel_theta(t: float) -> float:
    """theta(t) = Im log Gamma(1/4 + i t/2) - (t/2) log pi for t > 0."""
    if not t > 0.0:
        raise DomainError(f"riemann_siegel_theta requires t > 0, got {t}")
    return complex_log_gamma(complex(0.25, 0.5 * t)).imag - 0.5 * t * math.log(math.pi)


def theta_batch(ts: np.ndarray) -> np.ndarray:
    """Vectorised riemann_siegel_theta over an array of positive heights."""
    ts = np.asarray(ts, dtype=np.float64)
    if ts.size and ts.min() <= 0.0:
        raise DomainError("theta_batch requires all t > 0")
    z = 0.25 + 0.5j * ts
    return _log_gamma_array(z).imag - 0.5 * ts * math.log(math.pi)


def zero_count_estimate(t_max: float) -> int:
    """round(theta(t)/pi + 1): the expected number of critical-line zero
    ordinates in (0, t], good to +-1 at desk heights."""
    return round(riemann_siegel_theta(t_max) / math.pi + 1.0)


def hardy_Z(t: float, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Hardy's Z function: Z(t) = exp(i theta(t)) zeta(1/2 + i t), real valued.

    The imaginary part of the computed product is a precision telltale; it
    must stay below 1e-8 * (1 + |Z|) and is then discarded.
    """
    if not t > 0.0:
        raise DomainError(f"hardy_Z requires t > 0, got {t}")
    rotated = cmath.exp(1j * riemann_siegel_theta(t)) * zeta_euler_maclaurin(
        complex(0.5, t), cfg
    )
    if abs(rotated.imag) >= 1e-8 * (1.0 + abs(rotated)):
        raise ConsistencyError(
            f"rotated zeta at t={t} has imaginary residue {rotated.imag:.3e}"
        )
    return rotated.real


_BATCH_CHUNK = 512


def _zeta_half_line_batch(ts: np.ndarray, cfg: EvalConfig) -> np.ndarray:
    """zeta(1/2 + i t) for an array of heights, chunked outer-product sums."""
    ts = np.asarray(ts, dtype=np.float64)
    out = np.empty(ts.shape, dtype=np.complex128)
    kmax = cfg.bernoulli_order // 2
    for lo in range(0, ts.size, _BATCH_CHUNK):
        chunk = ts[lo : lo + _BATCH_CHUNK]
        s = 0.5 + 1j * chunk
        n_cut = max(cfg.em_terms, int(np.max(np.abs(chunk)) / 2.0) + 10)
        log_n = np.log(np.arange(1, n_cut, dtype=np.float64))
        main = np.exp(-s[:, None] * log_n[None, :]).sum(axis=1)
        big_n = float(n_cut)
        n_pow = np.exp(-s * math.log(big_n))
        value = main + n_pow * big_n / (s - 1.0) + 0.5 * n_pow
        rising = s.copy()
        power = n_pow / big_n
        inv_sq = 1.0 / (big_n * big_n)
        for k in range(kmax):
            value += _EM_COEF[k] * rising * power
            if k + 1 < kmax:
                m = 2 * k + 1
                rising = rising * (s + m) * (s + m + 1)
                power = power * inv_sq
        out[lo : lo + _BATCH_CHUNK] = value
    return out


def hardy_Z_batch(ts: np.ndarray, cfg: EvalConfig = DEFAULT_CONFIG) -> np.ndarray:
    """Vectorised hardy_Z with the same imaginary-residue consistency check."""
    ts = np.asarray(ts, dtype=np.float64)
    if ts.size == 0:
        return np.empty(0, dtype=np.float64)
    if ts.min() <= 0.0:
        raise DomainError("hardy_Z_batch requires all t > 0")
    rotated = np.exp(1j * theta_batch(ts)) * _zeta_half_line_batch(ts, cfg)
    bad = np.abs(rotated.imag) >= 1e-8 * (1.0 + np.abs(rotated))
    if bad.any():
        t_bad = float(ts[bad][0])
        raise ConsistencyError(f"rotated zeta at t={t_bad} lost reality")
    return rotated.real
