"""Figure rendering for the CLI report paths.

Every renderer takes the record dictionaries a subcommand emits and writes
one figure file; the data output never depends on these.  The Agg backend
keeps rendering headless.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .uniqueness import LOG4_OVER_PI

_DPI = 150


def render_eta_scan(records: list[dict], path: str) -> None:
    """Companion-function values along the real axis with their tail band."""
    sigmas = [r["sigma"] for r in records]
    values = [r["re"] for r in records]
    bounds = [r["tail_bound"] for r in records]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.plot(sigmas, values, "o-", color="tab:blue", label="eta_N(sigma)")
    ax.fill_between(
        sigmas,
        [v - b for v, b in zip(values, bounds)],
        [v + b for v, b in zip(values, bounds)],
        alpha=0.25,
        color="tab:blue",
        label="truncation tail band",
    )
    ax.axhline(1.0, color="tab:gray", lw=1, ls="--", label="limit candidate 1")
    ax.set_xlabel("sigma")
    ax.set_ylabel("eta_N")
    n_terms = records[0]["n_terms"] if records else 0
    ax.set_title(f"eta along the real axis (N = {n_terms} zeros)")
    ax.legend(loc="best", fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)


def render_density(records: list[dict], path: str) -> None:
    """Disc-count slope n(r)/r against the sharp threshold log4/pi."""
    rs = [r["r"] for r in records]
    slopes = [r["slope"] for r in records]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.plot(rs, slopes, "o-", color="tab:orange", label="n(r)/r")
    ax.axhline(LOG4_OVER_PI, color="tab:red", lw=1, ls="--", label="log4/pi")
    ax.set_xlabel("r")
    ax.set_ylabel("n(r)/r")
    ax.set_title("zero-counting density")
    ax.legend(loc="best", fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)


def render_fe_residuals(records: list[dict], path: str) -> None:
    """Functional-equation residuals per sample on a log scale."""
    fig, ax = plt.subplots(figsize=(7, 4.5))
    cases = sorted({r["case"] for r in records})
    for case in cases:
        ys = [max(r["residual"], 1e-18) for r in records if r["case"] == case]
        ax.plot(range(len(ys)), ys, "o", ms=4, label=case)
    ax.set_yscale("log")
    ax.set_xlabel("sample index")
    ax.set_ylabel("relative residual")
    ax.set_title("functional-equation residuals")
    ax.legend(loc="best", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)


def render_uniqueness(records: list[dict], path: str) -> None:
    """Generic lhs/rhs view of a uniqueness-case report."""
    fig, ax = plt.subplots(figsize=(7, 4.5))
    xs = list(range(len(records)))
    lhs = [r["lhs"] for r in records]
    rhs = [r["rhs"] for r in records]
    ax.plot(xs, lhs, "o-", label="lhs")
    ax.plot(xs, rhs, "s--", label="rhs / reference")
    if all(v > 0 for v in lhs + rhs):
        ax.set_yscale("log")
    ax.set_xlabel("record index")
    case = records[0]["case"] if records else ""
    ax.set_title(f"uniqueness case: {case}")
    ax.legend(loc="best", fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)
