"""Dedekind zeta functions of quadratic number fields, at desk scale.

For a fundamental discriminant D the Dedekind zeta function factors as
zeta_kappa(s) = zeta(s) * L(s, chi_D) with chi_D the Kronecker character,
and the ideal-count coefficients are the divisor sums
a(n) = sum_{d | n} chi_D(d).  Everything downstream of that factorisation
is built here: the Analytic Class Number Formula residue
2^{r1} (2 pi)^{r2} c R / (w sqrt|D|), the completed function xi_kappa, the
truncated symmetric zero product h_kappa with leading constant
2^{r1+r2-1} c R / w, its companion eta_kappa, and a critical-line zero
finder for L(s, chi_D) whose output merges with the zeta list to give the
zeros of zeta_kappa.

Field invariants (class number, regulator, roots of unity) come from a
small built-in table for D in {-4, -3, 5, 8}; computing them is out of
scope.  A JSON table can override or extend it.
"""

from __future__ import annotations

import cmath
import json
import math
import os
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .config import DEFAULT_CONFIG, EvalConfig
from .errors import (
    CompletenessError,
    ConsistencyError,
    DomainError,
    FormatError,
    PoleError,
)
from .eta import TruncatedProductSpec, h_truncated
from .special import (
    _EM_COEF,
    _log_gamma_array,
    complex_gamma,
    complex_log_gamma,
    complex_zeta,
    hardy_Z_batch,
    hurwitz_zeta,
    log_cos_half_pi,
    log_gamma_any,
    log_sin_half_pi,
    zeta_tail_from,
)
from .zeros import ZeroList, find_zeros_up_to, scan_sign_changes

__all__ = [
    "QuadraticFieldData",
    "IdealCountSeries",
    "BUILTIN_FIELDS",
    "field_for_discriminant",
    "load_field_table",
    "is_fundamental_discriminant",
    "kronecker_chi",
    "ideal_counts",
    "dirichlet_l",
    "zeta_kappa",
    "zeta_kappa_direct",
    "class_number_formula_residue",
    "residue_check",
    "xi_kappa",
    "make_product_spec",
    "h_kappa_truncated",
    "eta_kappa_truncated",
    "eta_kappa_fe_residual",
    "eta_kappa_residue_at_one",
    "dedekind_tail_estimate",
    "theta_L",
    "rotated_completed_L",
    "find_L_zeros",
    "merged_zero_list",
    "l_zero_count_estimate",
]

LOG_TWO_PI = math.log(2.0 * math.pi)


def is_fundamental_discriminant(d: int) -> bool:
    """D = 1 mod 4 squarefree, or D = 4m with m = 2, 3 mod 4 squarefree."""
    if d in (0, 1):
        return False

    def squarefree(n: int) -> bool:
        n = abs(n)
        k = 2
        while k * k <= n:
            if n % (k * k) == 0:
                return False
            k += 1
        return True

    if d % 4 == 1:
        return squarefree(d)
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and squarefree(m)
    return False


@dataclass(frozen=True)
class QuadraticFieldData:
    """Invariants of a quadratic field entering the residue formula."""

    discriminant: int
    r1: int
    r2: int
    class_number: int
    regulator: float
    roots_of_unity: int

    def __post_init__(self) -> None:
        d = self.discriminant
        if not is_fundamental_discriminant(d):
            raise DomainError(f"{d} is not a fundamental discriminant")
        if d < 0:
            if (self.r1, self.r2) != (0, 1) or self.regulator != 1.0:
                raise DomainError(
                    "imaginary quadratic fields need r1=0, r2=1, regulator=1"
                )
        else:
            if (self.r1, self.r2) != (2, 0) or self.roots_of_unity != 2:
                raise DomainError(
                    "real quadratic fields need r1=2, r2=0, roots_of_unity=2"
                )
        if self.class_number < 1 or self.roots_of_unity < 1:
            raise DomainError("class number and root-of-unity count are positive")
        if not self.regulator > 0.0:
            raise DomainError("the regulator is positive")

    @property
    def degree(self) -> int:
        return self.r1 + 2 * self.r2

    @property
    def conductor(self) -> int:
        return abs(self.discriminant)

    @property
    def parity(self) -> int:
        """a = 0 for even chi_D (D > 0), a = 1 for odd (D < 0)."""
        return 0 if self.discriminant > 0 else 1

    def h_leading_constant(self) -> float:
        """2^{r1+r2-1} c R / w, the limit of h_kappa at s -> 1."""
        return (
            2.0 ** (self.r1 + self.r2 - 1)
            * self.class_number
            * self.regulator
            / self.roots_of_unity
        )


BUILTIN_FIELDS: dict[int, QuadraticFieldData] = {
    -4: QuadraticFieldData(-4, 0, 1, 1, 1.0, 4),
    -3: QuadraticFieldData(-3, 0, 1, 1, 1.0, 6),
    5: QuadraticFieldData(5, 2, 0, 1, 0.4812118250596035, 2),
    8: QuadraticFieldData(8, 2, 0, 1, 0.8813735870195430, 2),
}


def field_for_discriminant(
    d: int, table: dict[int, QuadraticFieldData] | None = None
) -> QuadraticFieldData:
    source = table if table is not None else BUILTIN_FIELDS
    if d not in source:
        raise DomainError(
            f"no invariants for discriminant {d}; known: {sorted(source)}"
        )
    return source[d]


def load_field_table(path: str | os.PathLike) -> dict[int, QuadraticFieldData]:
    """Read {discriminant, r1, r2, class_number, regulator, roots_of_unity}
    JSON records (a list of objects)."""
    with open(path, "r") as fh:
        try:
            records = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: invalid JSON: {exc}") from None
    if not isinstance(records, list):
        raise FormatError(f"{path}: expected a JSON array of records")
    table = {}
    for rec in records:
        try:
            fd = QuadraticFieldData(
                int(rec["discriminant"]),
                int(rec["r1"]),
                int(rec["r2"]),
                int(rec["class_number"]),
                float(rec["regulator"]),
                int(rec["roots_of_unity"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"{path}: bad field record {rec!r}: {exc}") from None
        table[fd.discriminant] = fd
    return table


# ----------------------------------------------------------------------------
# The Kronecker character and the ideal-count coefficients.


def kronecker_chi(d: int, n: int) -> int:
    """The Kronecker symbol (d | n) for positive n.

    Completely multiplicative in n with period |d| for fundamental d; the
    quadratic character attached to the field of discriminant d.
    """
    if n < 1:
        raise DomainError("kronecker_chi expects positive n")
    a = d
    result = 1
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            result = -result
    a %= n
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


@lru_cache(maxsize=32)
def _chi_period_table(d: int) -> np.ndarray:
    """chi_d on residues 0 .. |d|-1 (chi is periodic with period |d|)."""
    q = abs(d)
    vals = np.zeros(q, dtype=np.int8)
    for r in range(1, q):
        vals[r] = kronecker_chi(d, r)
    return vals


def _chi_values(d: int, limit: int) -> np.ndarray:
    """chi_d(n) for n = 0 .. limit as an int8 array."""
    table = _chi_period_table(d)
    idx = np.arange(limit + 1, dtype=np.int64) % abs(d)
    return table[idx]


@dataclass(frozen=True)
class IdealCountSeries:
    """a(n) = number of ideals of norm n, for n up to a limit."""

    values: np.ndarray  # index n holds a(n); values[0] unused
    limit: int
    discriminant: int

    def a(self, n: int) -> int:
        if not 1 <= n <= self.limit:
            raise DomainError(f"n={n} outside the tabulated range 1..{self.limit}")
        return int(self.values[n])


def ideal_counts(field: QuadraticFieldData, limit: int) -> IdealCountSeries:
    """The divisor sums a(n) = sum_{d | n} chi_D(d), sieved up to ``limit``.

    a(1) = 1 (the full ring of integers) and a is multiplicative on coprime
    arguments because chi_D is completely multiplicative.
    """
    if limit < 1:
        raise DomainError("limit must be at least 1")
    chi = _chi_values(field.discriminant, limit)
    a = np.zeros(limit + 1, dtype=np.int64)
    for d in range(1, limit + 1):
        c = int(chi[d])
        if c:
            a[d::d] += c
    if a[1:].min() < 0:
        raise ConsistencyError("negative ideal count; character table corrupt")
    return IdealCountSeries(a, limit, field.discriminant)


# ----------------------------------------------------------------------------
# L(s, chi_D) and the factorised Dedekind zeta.


def dirichlet_l(d: int, s: complex | float, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """L(s, chi_D) by period-|D| blocking into Hurwitz zetas.

    L(s, chi) = q^{-s} sum_{r=1}^{q-1} chi(r) zeta(s, r/q); the Hurwitz
    pole terms at s = 1 cancel because sum chi(r) = 0.  Good for
    Re(s) > 0 (conditionally convergent region included).
    """
    s = complex(s)
    q = abs(d)
    table = _chi_period_table(d)
    total = 0.0 + 0.0j
    for r in range(1, q):
        c = int(table[r % q])
        if c:
            total += c * hurwitz_zeta(s, r / q, cfg)
    return cmath.exp(-s * math.log(q)) * total


def _log_reflection_kappa(field: QuadraticFieldData, s: complex) -> complex:
    """log of the factor K(s) with zeta_kappa(1-s) = K(s) zeta_kappa(s).

    K(s) = |D|^{s-1/2} cos^{r1+r2}(pi s/2) sin^{r2}(pi s/2) Gamma_C(s)^2,
    Gamma_C(s) = 2 (2 pi)^{-s} Gamma(s); assembled in logs (imaginary part
    defined modulo 2 pi, callers exponentiate).  Re(s) must be positive.
    """
    lc = log_cos_half_pi(s)
    total = (s - 0.5) * math.log(field.conductor)
    total += (field.r1 + field.r2) * lc
    if field.r2:
        total += field.r2 * log_sin_half_pi(s)
    total += field.degree * (math.log(2.0) - s * LOG_TWO_PI + log_gamma_any(s))
    return total


def zeta_kappa(
    field: QuadraticFieldData, s: complex | float, cfg: EvalConfig = DEFAULT_CONFIG
) -> complex:
    """zeta_kappa(s) = zeta(s) L(s, chi_D), reflected for Re(s) <= 0.

    The only pole is s = 1 (simple); points within 1e-8 raise PoleError.
    """
    s = complex(s)
    if abs(s - 1.0) <= 1e-8:
        raise PoleError("the Dedekind zeta function has its only pole at s = 1")
    if s.real > 0.0:
        return complex_zeta(s, cfg) * dirichlet_l(field.discriminant, s, cfg)
    sp = 1.0 - s
    log_k = _log_reflection_kappa(field, sp)
    if log_k.real == -math.inf:
        return 0.0 + 0.0j
    return cmath.exp(log_k) * zeta_kappa(field, sp, cfg)


def class_number_formula_residue(
    r1: int,
    r2: int,
    class_number: int,
    regulator: float,
    roots_of_unity: int,
    abs_discriminant: float,
) -> float:
    """The Analytic Class Number Formula value
    2^{r1} (2 pi)^{r2} c R / (w sqrt|D|)."""
    return (
        2.0**r1
        * (2.0 * math.pi) ** r2
        * class_number
        * regulator
        / (roots_of_unity * math.sqrt(abs_discriminant))
    )


def residue_check(
    field: QuadraticFieldData, cfg: EvalConfig = DEFAULT_CONFIG
) -> tuple[float, float, float]:
    """(numeric, formula, rel_err) for the residue of zeta_kappa at s = 1.

    The numeric side averages (s-1) zeta_kappa(s) at s = 1 +- 1e-5, which
    cancels the linear Laurent term; rel_err is expected below 1e-4.
    """
    delta = 1e-5
    vals = []
    for sign in (+1.0, -1.0):
        s = complex(1.0 + sign * delta, 0.0)
        vals.append(((s - 1.0) * zeta_kappa(field, s, cfg)).real)
    numeric = 0.5 * (vals[0] + vals[1])
    formula = class_number_formula_residue(
        field.r1,
        field.r2,
        field.class_number,
        field.regulator,
        field.roots_of_unity,
        field.conductor,
    )
    rel_err = abs(numeric - formula) / formula
    return numeric, formula, rel_err


# ----------------------------------------------------------------------------
# Independent route: the ideal-count Dirichlet series summed directly.


def zeta_kappa_direct(
    field: QuadraticFieldData,
    s: complex | float,
    limit: int = 300_000,
    cfg: EvalConfig = DEFAULT_CONFIG,
) -> complex:
    """sum a(n) n^{-s} summed outright, with an Euler-Maclaurin tail.

    The n <= limit part is the sieved coefficient sum; the n > limit part
    is reorganised along the divisor hyperbola into character-weighted
    zeta tails, each evaluated by the closed Euler-Maclaurin form (no call
    to the zeta or L evaluators, so this is an independent route up to the
    shared character table).  The neglected d > limit remainder is below
    1e-9 for Re(s) >= 2 at the default limit.  Requires Re(s) > 1.
    """
    s = complex(s)
    if not s.real > 1.0:
        raise DomainError("the direct Dirichlet sum needs Re(s) > 1")
    counts = ideal_counts(field, limit)
    chi = _chi_values(field.discriminant, limit).astype(np.float64)
    n = np.arange(1, limit + 1, dtype=np.float64)
    npow = np.exp(-s * np.log(n))
    direct = complex(np.sum(counts.values[1:] * npow))
    chiw = chi[1:] * npow  # chi(d) d^{-s}, d = 1..limit
    prefix = np.concatenate(([0.0 + 0.0j], np.cumsum(chiw)))

    def chi_slice(lo: int, hi: int) -> complex:
        # sum over lo <= d <= hi of chi(d) d^{-s}
        return complex(prefix[hi] - prefix[lo - 1])

    cut = limit // 32
    d_small = np.arange(1, cut + 1, dtype=np.int64)
    m_small = limit // d_small
    tails = zeta_tail_from(s, (m_small + 1).astype(np.float64), cfg)
    correction = complex(np.sum(chiw[: cut] * tails))
    deep_tail = zeta_tail_from(s, 33.0, cfg)
    correction += chi_slice(cut + 1, limit) * deep_tail
    for m in range(2, 33):
        lo = limit // m + 1
        if lo <= limit:
            correction += m ** (-s) * chi_slice(lo, limit)
    return direct + correction


# ----------------------------------------------------------------------------
# The completed function xi_kappa and the zero-product pair h_kappa, eta_kappa.


def xi_kappa(
    field: QuadraticFieldData, s: complex | float, cfg: EvalConfig = DEFAULT_CONFIG
) -> complex:
    """xi_kappa(s) = (s/2)(s-1) |D|^{s/2} Gamma_R^{r1} Gamma_C^{r2} zeta_kappa(s).

    Entire and symmetric under s -> 1-s.  Within 1e-8 of the removable
    points s = 0 and s = 1 the limit 2^{r1+r2-1} c R / w is returned (the
    symmetry pins xi_kappa(0) = xi_kappa(1), and the residue computation
    of the class number formula gives that value exactly).
    """
    s = complex(s)
    if abs(s - 1.0) <= 1e-8 or abs(s) <= 1e-8:
        return complex(field.h_leading_constant(), 0.0)
    value = 0.5 * s * (s - 1.0) * field.conductor ** (0.5 * s)
    value = value * zeta_kappa(field, s, cfg)
    if field.r1:
        gamma_r = cmath.exp(-0.5 * s * math.log(math.pi)) * complex_gamma(0.5 * s)
        value = value * gamma_r**field.r1
    if field.r2:
        gamma_c = 2.0 * cmath.exp(-s * LOG_TWO_PI) * complex_gamma(s)
        value = value * gamma_c**field.r2
    return value


def make_product_spec(
    field: QuadraticFieldData, zeros: ZeroList, n_terms: int
) -> TruncatedProductSpec:
    """A truncated-product spec with the field's leading constant."""
    return TruncatedProductSpec(zeros, n_terms, field.h_leading_constant())


def h_kappa_truncated(
    field: QuadraticFieldData, spec: TruncatedProductSpec, s: complex | float
) -> complex:
    """The symmetric product over zeta_kappa zeros; h_kappa(1) is the
    constant 2^{r1+r2-1} c R / w exactly."""
    expected = field.h_leading_constant()
    if spec.leading_constant != expected:
        raise DomainError(
            f"spec constant {spec.leading_constant} does not match the "
            f"field value {expected}; build it with make_product_spec"
        )
    return h_truncated(spec, s)


def _trivial_zero_hit(field: QuadraticFieldData, s: complex, tol: float = 1e-10) -> bool:
    """Is s within tol of a forced zero of eta_kappa (a denominator Gamma pole)?

    Imaginary fields (r2 = 1): poles of Gamma(s+1), i.e. s = -1, -2, -3, ...
    Real fields (r1 = 2): poles of Gamma(s/2+1) Gamma(s/2), i.e. s = 0, -2, -4, ...
    """
    if field.discriminant < 0:
        n = round(s.real)
        return n <= -1 and abs(s - n) <= tol
    k = round(-s.real / 2.0)
    return k >= 0 and abs(s - (-2.0 * k)) <= tol


def eta_kappa_truncated(
    field: QuadraticFieldData,
    spec: TruncatedProductSpec,
    s: complex | float,
    cfg: EvalConfig = DEFAULT_CONFIG,
) -> complex:
    """eta_kappa = h_kappa / [(s/2)(s-1) |D|^{s/2} Gamma_R^{r1} Gamma_C^{r2}].

    The denominator is grouped so its only finite troubles are the Gamma
    poles that force eta_kappa to vanish; those points return exactly 0.
    The only pole is s = 1.
    """
    s = complex(s)
    if abs(s - 1.0) <= 1e-8:
        raise PoleError("eta_kappa has its only pole at s = 1")
    if _trivial_zero_hit(field, s):
        return 0.0 + 0.0j
    root_d = cmath.exp(0.5 * s * math.log(field.conductor))
    if field.discriminant < 0:
        denom = (s - 1.0) * root_d * cmath.exp(-s * LOG_TWO_PI) * complex_gamma(s + 1.0)
    else:
        denom = (
            (s - 1.0)
            * root_d
            * cmath.exp(-s * math.log(math.pi))
            * complex_gamma(0.5 * s + 1.0)
            * complex_gamma(0.5 * s)
        )
    return h_kappa_truncated(field, spec, s) / denom


def eta_kappa_fe_residual(
    field: QuadraticFieldData,
    spec: TruncatedProductSpec,
    s: complex | float,
    cfg: EvalConfig = DEFAULT_CONFIG,
) -> float:
    """Relative residual of the Dedekind functional equation for eta_kappa:
    |eta(1-s) - K(s) eta(s)| / (1 + |eta(1-s)|)."""
    s = complex(s)
    lhs = eta_kappa_truncated(field, spec, 1.0 - s, cfg)
    log_k = _log_reflection_kappa(field, s)
    rhs = (
        0.0 + 0.0j
        if log_k.real == -math.inf
        else cmath.exp(log_k) * eta_kappa_truncated(field, spec, s, cfg)
    )
    return abs(lhs - rhs) / (1.0 + abs(lhs))


def dedekind_tail_estimate(
    field: QuadraticFieldData, spec: TruncatedProductSpec
) -> float:
    """Zero-density tail estimate for a merged zeta_kappa list.

    The degree-2 counting measure is dN(t) ~ log(t sqrt|D| / 2 pi) / pi dt,
    twice the Riemann density, giving
    T(N) ~ (log(t_N sqrt|D| / 2 pi) + 1) / (pi t_N).
    """
    t_last = float(spec.zeros.ordinates[spec.n_terms - 1])
    return (
        math.log(t_last * math.sqrt(field.conductor) / (2.0 * math.pi)) + 1.0
    ) / (math.pi * t_last)


def eta_kappa_residue_at_one(
    field: QuadraticFieldData, spec: TruncatedProductSpec
) -> float:
    """Residue of eta_kappa at s = 1, assembled from the h limit:

    Res = h_kappa(1) / [(1/2) |D|^{1/2} Gamma_R(1)^{r1} Gamma_C(1)^{r2}]
        = 2 * leading_constant * pi^{r2} / sqrt|D|,

    which reproduces the class number formula value exactly.
    """
    return (
        2.0
        * spec.leading_constant
        * math.pi**field.r2
        / math.sqrt(field.conductor)
    )


# ----------------------------------------------------------------------------
# Critical-line zeros of L(s, chi_D) and the merged zeta_kappa list.


def theta_L(t: float, d: int) -> float:
    """The rotation phase for L(s, chi_D) on the critical line:
    Im log Gamma((1/2 + a)/2 + i t/2) + (t/2) log(|D|/pi), a the parity."""
    a = 0 if d > 0 else 1
    z = complex(0.25 * (1 + 2 * a), 0.5 * t)
    return complex_log_gamma(z).imag + 0.5 * t * math.log(abs(d) / math.pi)


def _theta_L_batch(ts: np.ndarray, d: int) -> np.ndarray:
    a = 0 if d > 0 else 1
    z = 0.25 * (1 + 2 * a) + 0.5j * ts
    return _log_gamma_array(z).imag + 0.5 * ts * math.log(abs(d) / math.pi)


_L_BATCH_CHUNK = 256


def _l_half_line_batch(ts: np.ndarray, d: int, cfg: EvalConfig) -> np.ndarray:
    """L(1/2 + i t, chi_D) for an array of heights (Hurwitz blocking)."""
    q = abs(d)
    table = _chi_period_table(d)
    residues = [(r, int(table[r])) for r in range(1, q) if table[r]]
    out = np.empty(ts.shape, dtype=np.complex128)
    kmax = cfg.bernoulli_order // 2
    for lo in range(0, ts.size, _L_BATCH_CHUNK):
        chunk = ts[lo : lo + _L_BATCH_CHUNK]
        s = 0.5 + 1j * chunk
        n_cut = max(cfg.em_terms, int(np.max(np.abs(chunk)) / 2.0) + 10)
        total = np.zeros(s.shape, dtype=np.complex128)
        base = np.arange(0, n_cut, dtype=np.float64)
        for r, c in residues:
            a = r / q
            log_na = np.log(base + a)
            main = np.exp(-s[:, None] * log_na[None, :]).sum(axis=1)
            edge = float(n_cut) + a
            e_pow = np.exp(-s * math.log(edge))
            value = main + e_pow * edge / (s - 1.0) + 0.5 * e_pow
            rising = s.copy()
            power = e_pow / edge
            inv_sq = 1.0 / (edge * edge)
            for k in range(kmax):
                value += _EM_COEF[k] * rising * power
                if k + 1 < kmax:
                    m = 2 * k + 1
                    rising = rising * (s + m) * (s + m + 1)
                    power = power * inv_sq
            total += c * value
        out[lo : lo + _L_BATCH_CHUNK] = np.exp(-s * math.log(q)) * total
    return out


def rotated_completed_L(
    d: int, t: float, cfg: EvalConfig = DEFAULT_CONFIG
) -> complex:
    """exp(i theta_L(t)) L(1/2 + i t, chi_D): real for these characters
    (the root number of a real primitive character is +1)."""
    return cmath.exp(1j * theta_L(t, d)) * dirichlet_l(d, complex(0.5, t), cfg)


def _z_l_batch(ts: np.ndarray, d: int, cfg: EvalConfig) -> np.ndarray:
    rotated = np.exp(1j * _theta_L_batch(ts, d)) * _l_half_line_batch(ts, d, cfg)
    bad = np.abs(rotated.imag) >= 1e-8 * (1.0 + np.abs(rotated))
    if bad.any():
        raise ConsistencyError(
            f"rotated completed L (D={d}) lost reality at t={float(ts[bad][0])}"
        )
    return rotated.real


def l_zero_count_estimate(t_max: float, d: int) -> int:
    """round(theta_L(t)/pi + 1/2): the L-function analogue of the smooth
    zero count, empirically good to +-1 at desk heights."""
    return round(theta_L(t_max, d) / math.pi + 0.5)


def find_L_zeros(
    d: int, t_max: float, cfg: EvalConfig = DEFAULT_CONFIG
) -> ZeroList:
    """Ordinates of the critical-line zeros of L(s, chi_D) in (0, t_max].

    Sign changes of the rotated completed function, bisection-refined; the
    count is checked against the theta_L estimate with +-1 slack and the
    grid halves on disagreement (three retries, then CompletenessError).
    """
    if not is_fundamental_discriminant(d):
        raise DomainError(f"{d} is not a fundamental discriminant")
    if not 10.0 < t_max <= 2000.0:
        raise DomainError(f"find_L_zeros requires 10 < t_max <= 2000, got {t_max}")
    expected = l_zero_count_estimate(t_max, d)
    base_step = 0.25 * 2.0 * math.pi / math.log(
        t_max * math.sqrt(abs(d)) / (2.0 * math.pi)
    )
    f_batch = lambda ts: _z_l_batch(ts, d, cfg)
    last = -1
    for attempt in range(4):
        step = base_step / (2.0**attempt)
        ords = scan_sign_changes(f_batch, 0.05, t_max, step)
        last = int(ords.size)
        if abs(last - expected) <= 1:
            return ZeroList(
                ords,
                f"dedekind D={d} L-zeros",
                t_max,
                validated=True,
            )
    raise CompletenessError(
        f"L(s, chi_{d}): found {last} ordinates up to {t_max}, estimate {expected}"
    )


def _merged_validator(d: int):
    def validate(ts: np.ndarray) -> np.ndarray:
        z_zeta = np.abs(hardy_Z_batch(ts, DEFAULT_CONFIG))
        z_l = np.abs(_z_l_batch(ts, d, DEFAULT_CONFIG))
        return np.minimum(z_zeta, z_l)

    return validate


def merged_zero_list(
    field: QuadraticFieldData, t_max: float, cfg: EvalConfig = DEFAULT_CONFIG
) -> ZeroList:
    """Zeros of zeta_kappa on the half-line: the zeta and L lists merged.

    The two scans run independently and the union is sorted.  Coinciding
    ordinates (closer than 1e-8) would have to be double-counted; none
    occur at desk heights, so they are rejected as a consistency failure.
    """
    zl_zeta = find_zeros_up_to(t_max, cfg)
    zl_l = find_L_zeros(field.discriminant, t_max, cfg)
    merged = np.sort(
        np.concatenate([zl_zeta.ordinates, zl_l.ordinates])
    )
    if merged.size > 1 and np.min(np.diff(merged)) < 1e-8:
        raise ConsistencyError(
            "a zeta zero coincides with an L zero within 1e-8; "
            "multiplicity handling for that case is unsupported"
        )
    return ZeroList(
        merged,
        f"dedekind D={field.discriminant}",
        t_max,
        validated=True,
        validator=_merged_validator(field.discriminant),
    )
