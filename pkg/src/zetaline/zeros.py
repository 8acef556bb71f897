"""Critical-line zero location, counting, and the disc-counting function n(r, G).

Zero ordinates are found as sign changes of Hardy's Z on a grid tied to the
local zero density, refined by bisection.  Completeness is arbitrated by the
smooth count round(theta(T)/pi + 1) with a +-1 slack; a disagreement beyond
that halves the grid and rescans (at most three retries).

Cache files are plain text: a single header line

    # zeta-zeros v1 count=<N> tmax=<T>

followed by one ordinate per line at 15 significant digits.  Writes go to a
temporary file in the target directory followed by an atomic rename, so
readers never observe a partial cache.
"""

from __future__ import annotations

import math
import os
import re
import tempfile
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .config import DEFAULT_CONFIG, EvalConfig
from .errors import (
    CompletenessError,
    DomainError,
    FormatError,
    ValidationError,
)
from .special import hardy_Z_batch, riemann_siegel_theta, zero_count_estimate

__all__ = [
    "ZeroList",
    "PointSet",
    "find_zeros_up_to",
    "disc_count",
    "density_slope",
    "save_zeros",
    "load_zeros",
    "scan_sign_changes",
    "merge_scan_results",
    "t_for_zero_count",
]

#: |Z(t)| threshold used when revalidating stored ordinates.
REVALIDATION_TOL = 1e-6

#: Bisection window for refined ordinates.
REFINE_TOL = 1e-9


def _default_validator(ts: np.ndarray) -> np.ndarray:
    return np.abs(hardy_Z_batch(ts, DEFAULT_CONFIG))


class ZeroList:
    """Ordered positive ordinates t_nu of critical-line zeros.

    The represented zeros are s_nu = 1/2 + i t_nu (conjugates are not
    stored).  Lists loaded from disk are revalidated lazily: the first
    access to ``ordinates`` checks |Z(t)| < 1e-6 at every entry and raises
    ValidationError on failure.
    """

    def __init__(
        self,
        ordinates: Iterable[float],
        source_tag: str,
        max_t_searched: float,
        *,
        validated: bool = True,
        validator: Callable[[np.ndarray], np.ndarray] | None = None,
    ) -> None:
        arr = np.asarray(list(ordinates), dtype=np.float64)
        if arr.size and arr.min() <= 0.0:
            raise DomainError("zero ordinates must be positive")
        if arr.size > 1 and not np.all(np.diff(arr) > 0.0):
            raise DomainError("zero ordinates must be strictly increasing")
        arr.flags.writeable = False
        self._ords = arr
        self.source_tag = source_tag
        self.max_t_searched = float(max_t_searched)
        self._validated = validated
        self._validator = validator or _default_validator

    @property
    def ordinates(self) -> np.ndarray:
        if not self._validated:
            residues = self._validator(self._ords)
            worst = int(np.argmax(residues)) if residues.size else 0
            if residues.size and residues[worst] >= REVALIDATION_TOL:
                raise ValidationError(
                    f"ordinate {self._ords[worst]!r} fails revalidation: "
                    f"|Z| = {residues[worst]:.3e} >= {REVALIDATION_TOL}"
                )
            # plain zeta lists also re-check the completeness count
            if self.source_tag in _PLAIN_TAGS and self.max_t_searched > 10.0:
                expected = zero_count_estimate(self.max_t_searched)
                if abs(self._ords.size - expected) > 1:
                    raise ValidationError(
                        f"list holds {self._ords.size} ordinates up to "
                        f"{self.max_t_searched} but the counting estimate "
                        f"gives {expected}"
                    )
            self._validated = True
        return self._ords

    def __len__(self) -> int:
        return int(self._ords.size)

    def points(self) -> np.ndarray:
        """The zeros as complex points 1/2 + i t_nu (upper half only)."""
        return 0.5 + 1j * self.ordinates

    def truncated(self, n: int) -> "ZeroList":
        """The first n ordinates as a self-consistent list (its searched
        range shrinks to the last kept ordinate)."""
        if not 1 <= n <= len(self):
            raise DomainError(f"cannot truncate to {n} of {len(self)} ordinates")
        kept = self.ordinates[:n]
        return ZeroList(
            kept,
            self.source_tag,
            float(kept[-1]),
            validated=True,
        )


@dataclass(frozen=True)
class PointSet:
    """A finite multiset of complex points (a generic exceptional set G)."""

    points: tuple[complex, ...]
    multiplicities: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.points) != len(self.multiplicities):
            raise DomainError("points and multiplicities must align")
        if any(m < 1 or m != int(m) for m in self.multiplicities):
            raise DomainError("multiplicities must be positive integers")

    @classmethod
    def from_points(
        cls, pts: Sequence[complex], multiplicities: Sequence[int] | None = None
    ) -> "PointSet":
        pts = tuple(complex(p) for p in pts)
        if multiplicities is None:
            multiplicities = tuple(1 for _ in pts)
        return cls(pts, tuple(int(m) for m in multiplicities))

    @classmethod
    def from_zero_list(cls, zeros: ZeroList) -> "PointSet":
        return cls.from_points([complex(p) for p in zeros.points()])

    def symmetrized(self) -> "PointSet":
        """Add the conjugate of every point off the real axis."""
        pts = list(self.points)
        mults = list(self.multiplicities)
        for p, m in zip(self.points, self.multiplicities):
            if p.imag != 0.0:
                pts.append(p.conjugate())
                mults.append(m)
        return PointSet(tuple(pts), tuple(mults))

    def scaled(self, factor: float) -> "PointSet":
        return PointSet(
            tuple(p * factor for p in self.points), self.multiplicities
        )

    def moduli(self) -> np.ndarray:
        return np.abs(np.asarray(self.points, dtype=np.complex128))

    def total(self) -> int:
        return int(sum(self.multiplicities))


# ----------------------------------------------------------------------------
# Scanning machinery (shared by the Dirichlet-L finder in the dedekind module).


def scan_sign_changes(
    f_batch: Callable[[np.ndarray], np.ndarray],
    t_start: float,
    t_max: float,
    step: float,
    refine_tol: float = REFINE_TOL,
) -> np.ndarray:
    """Locate roots of a real function of t by grid sign changes + bisection.

    ``f_batch`` must accept and return a 1-d float array.  Returns the
    refined root locations in increasing order.
    """
    n_steps = int(math.ceil((t_max - t_start) / step))
    ts = t_start + step * np.arange(n_steps + 1, dtype=np.float64)
    ts[-1] = min(ts[-1], t_max)
    vals = f_batch(ts)
    # an exact grid zero would break the strict sign test; nudge it
    vals = np.where(vals == 0.0, 1e-300, vals)
    idx = np.nonzero(vals[:-1] * vals[1:] < 0.0)[0]
    if idx.size == 0:
        return np.empty(0, dtype=np.float64)
    lo = ts[idx].copy()
    hi = ts[idx + 1].copy()
    f_lo = vals[idx].copy()
    while np.max(hi - lo) > refine_tol:
        mid = 0.5 * (lo + hi)
        f_mid = f_batch(mid)
        f_mid = np.where(f_mid == 0.0, 1e-300, f_mid)
        go_right = f_lo * f_mid > 0.0
        lo = np.where(go_right, mid, lo)
        f_lo = np.where(go_right, f_mid, f_lo)
        hi = np.where(go_right, hi, mid)
    return 0.5 * (lo + hi)


def merge_scan_results(*ordinate_arrays: np.ndarray, tol: float = 1e-8) -> np.ndarray:
    """Combine scans over disjoint t-intervals: sort and collapse duplicates.

    Neighbouring ordinates closer than ``tol`` (the same zero found from
    both sides of an interval boundary) are averaged into one entry.
    """
    merged = np.sort(np.concatenate([np.asarray(a, dtype=np.float64) for a in ordinate_arrays]))
    if merged.size < 2:
        return merged
    keep: list[float] = [float(merged[0])]
    for t in merged[1:]:
        if t - keep[-1] < tol:
            keep[-1] = 0.5 * (keep[-1] + float(t))
        else:
            keep.append(float(t))
    return np.asarray(keep)


def _grid_step(t_max: float) -> float:
    """A quarter of the local mean zero spacing 2 pi / log(t/2pi) at t_max."""
    return 0.25 * 2.0 * math.pi / math.log(t_max / (2.0 * math.pi))


def find_zeros_up_to(
    t_max: float,
    cfg: EvalConfig = DEFAULT_CONFIG,
    *,
    source_tag: str = "zeta-scan",
) -> ZeroList:
    """All critical-line zero ordinates in (0, t_max], in increasing order.

    The count must agree with round(theta(t_max)/pi + 1) to within 1; on a
    larger disagreement the grid is halved and the scan retried, at most
    three times, before CompletenessError.
    """
    if not 10.0 < t_max <= 12000.0:
        raise DomainError(f"find_zeros_up_to requires 10 < t_max <= 12000, got {t_max}")
    expected = zero_count_estimate(t_max)
    base_step = _grid_step(t_max)
    f_batch = lambda ts: hardy_Z_batch(ts, cfg)
    last_count = -1
    for attempt in range(4):
        step = base_step / (2.0**attempt)
        ords = scan_sign_changes(f_batch, 0.5, t_max, step)
        last_count = int(ords.size)
        if abs(last_count - expected) <= 1:
            return ZeroList(ords, source_tag, t_max, validated=True)
    raise CompletenessError(
        f"found {last_count} ordinates up to t={t_max} but the counting "
        f"estimate gives {expected}; suspect a missed close pair"
    )


def t_for_zero_count(n: int) -> float:
    """A height t_max whose scan yields at least n ordinates (small margin)."""
    if n < 1:
        raise DomainError("need a positive zero count")
    target = (n + 2) * math.pi
    lo, hi = 10.5, 12000.0
    if riemann_siegel_theta(hi) < target:
        raise DomainError(f"zero count {n} needs heights above the supported 12000")
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if riemann_siegel_theta(mid) < target:
            lo = mid
        else:
            hi = mid
    return hi


# ----------------------------------------------------------------------------
# Disc counting and density curves.


def disc_count(points: PointSet | ZeroList, r: float) -> int:
    """Multiplicity-weighted number of points with |s| <= r.

    A ZeroList contributes its points 1/2 + i t_nu only; reflections are
    not added implicitly (use PointSet.symmetrized for the symmetric set).
    """
    if r < 0.0:
        raise DomainError("disc radius must be nonnegative")
    if isinstance(points, ZeroList):
        moduli = np.hypot(0.5, points.ordinates)
        return int(np.count_nonzero(moduli <= r))
    keep = points.moduli() <= r
    mults = np.asarray(points.multiplicities)
    return int(mults[keep].sum()) if keep.any() else 0


def density_slope(
    points: PointSet | ZeroList, r_values: Sequence[float]
) -> list[tuple[float, float]]:
    """The empirical density curve r -> n(r)/r over increasing radii."""
    rs = list(r_values)
    if any(r <= 0.0 for r in rs):
        raise DomainError("density radii must be positive")
    if any(b <= a for a, b in zip(rs, rs[1:])):
        raise DomainError("density radii must be increasing")
    return [(r, disc_count(points, r) / r) for r in rs]


# ----------------------------------------------------------------------------
# Cache files.

_HEADER_RE = re.compile(
    r"^# zeta-zeros v1 count=(\d+) tmax=([0-9.eE+-]+)(?: tag=(.+))?$"
)

_PLAIN_TAGS = ("", "zeta-scan")


def save_zeros(zeros: ZeroList, path: str | os.PathLike) -> None:
    """Write the cache file (atomic rename; single-writer semantics)."""
    path = os.fspath(path)
    header = f"# zeta-zeros v1 count={len(zeros)} tmax={zeros.max_t_searched:.15g}"
    if zeros.source_tag not in _PLAIN_TAGS:
        header += f" tag={zeros.source_tag}"
    lines = [header]
    lines.extend(f"{t:.15g}" for t in zeros.ordinates)
    directory = os.path.dirname(path) or "."
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".zeros-", text=True)
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write("\n".join(lines) + "\n")
        os.replace(tmp_path, path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.unlink(tmp_path)
        raise


def load_zeros(
    path: str | os.PathLike,
    validator: Callable[[np.ndarray], np.ndarray] | None = None,
) -> ZeroList:
    """Parse a cache file; validation against |Z| happens lazily on use."""
    path = os.fspath(path)
    with open(path, "r") as fh:
        raw = fh.read().splitlines()
    if not raw:
        raise FormatError(f"{path}: empty zeros cache")
    match = _HEADER_RE.match(raw[0])
    if match is None:
        raise FormatError(f"{path}: bad header line {raw[0]!r}")
    count = int(match.group(1))
    t_max = float(match.group(2))
    tag = match.group(3) or "zeta-scan"
    body = [line for line in raw[1:] if line.strip()]
    if len(body) != count:
        raise FormatError(f"{path}: header says {count} ordinates, file has {len(body)}")
    try:
        ords = [float(line) for line in body]
    except ValueError as exc:
        raise FormatError(f"{path}: unparseable ordinate: {exc}") from None
    if any(t <= 0.0 for t in ords):
        raise FormatError(f"{path}: ordinates must be positive")
    if any(b <= a for a, b in zip(ords, ords[1:])):
        raise FormatError(f"{path}: ordinates must be strictly increasing")
    return ZeroList(
        ords, tag, t_max, validated=False, validator=validator
    )
