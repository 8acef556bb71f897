"""Command-line surface: every operation as a reproducible experiment.

Outputs are CSV (default) or JSON (--format json); identical invocations
produce byte-identical output.  Figure rendering is opt-in through
--figure PATH on the report-style subcommands and never replaces the
delimited output.  Exit codes: 0 success, 2 validation failure, 3 usage
error.

The zero caches live under $ZETA_CACHE_DIR (default ~/.cache/zetaline) in
the plain-text format of ``zetaline.zeros``; the eta evaluators build a
2000-zero cache on first use unless --nzeros says otherwise.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import dedekind as dk
from . import eta as eta_mod
from . import uniqueness as uq
from .config import DEFAULT_CONFIG, EvalConfig
from .errors import ZetalineError
from .special import complex_gamma, complex_zeta, reflection_factor, xi
from .zeros import (
    ZeroList,
    density_slope,
    disc_count,
    find_zeros_up_to,
    load_zeros,
    save_zeros,
    t_for_zero_count,
)

__all__ = ["run", "console_main", "RunManifest", "cache_directory"]

_FE_THRESHOLD = 1e-9
_COUNTEREXAMPLE_THRESHOLD = 1e-10


@dataclass(frozen=True)
class RunManifest:
    """The reproducibility record of one invocation."""

    subcommand: str
    parameters: dict
    seed: int = 0
    output_format: str = "csv"


class _Parser(argparse.ArgumentParser):
    """argparse variant that exits 3 on usage errors, per the contract."""

    def error(self, message: str):  # noqa: D102 - argparse hook
        self.print_usage(sys.stderr)
        self.exit(3, f"{self.prog}: error: {message}\n")


def cache_directory() -> Path:
    override = os.environ.get("ZETA_CACHE_DIR")
    base = Path(override) if override else Path.home() / ".cache" / "zetaline"
    base.mkdir(parents=True, exist_ok=True)
    return base


def _cached_zeta_zeros(n: int, cfg: EvalConfig) -> ZeroList:
    path = cache_directory() / f"zeta-zeros-n{n}.txt"
    if path.exists():
        zl = load_zeros(path)
        if len(zl) >= n:
            return zl
    t_max = t_for_zero_count(n)
    save_zeros(find_zeros_up_to(t_max, cfg), path)
    # serve the cache representation so later runs are byte-identical
    return load_zeros(path)


def _cached_merged_zeros(
    field_data: dk.QuadraticFieldData, t_max: float, cfg: EvalConfig
) -> ZeroList:
    d = field_data.discriminant
    path = cache_directory() / f"dedekind-D{d}-t{t_max:g}.txt"
    if not path.exists():
        save_zeros(dk.merged_zero_list(field_data, t_max, cfg), path)
    return load_zeros(path, validator=dk._merged_validator(d))


# ----------------------------------------------------------------------------
# Output plumbing.


def _emit(records: list[dict], fieldnames: list[str], fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(records, indent=2))
        out.write("\n")
        return
    writer = csv.DictWriter(out, fieldnames=fieldnames, lineterminator="\n")
    writer.writeheader()
    for rec in records:
        writer.writerow({k: _cell(rec.get(k)) for k in fieldnames})


def _cell(value) -> str:
    if isinstance(value, float):
        return repr(value)
    return "" if value is None else str(value)


def _parse_point(text: str) -> complex:
    try:
        re_part, im_part = text.split(",")
        return complex(float(re_part), float(im_part))
    except ValueError:
        raise ZetalineError(f"--s expects RE,IM, got {text!r}") from None


def _fe_samples(rng: np.random.Generator, count: int) -> list[complex]:
    """Seeded sample points kept away from poles and forced zeros."""
    out: list[complex] = []
    while len(out) < count:
        s = complex(rng.uniform(-4.0, 6.0), rng.uniform(-25.0, 25.0))
        near_int = abs(s.imag) < 0.3 and abs(s.real - round(s.real)) < 0.25 and round(s.real) <= 1
        if abs(s) < 0.3 or abs(s - 1.0) < 0.3 or near_int:
            continue
        out.append(s)
    return out


# ----------------------------------------------------------------------------
# Subcommand bodies.  Each returns (records, fieldnames, exit_code).


def _cmd_zeros(args, cfg) -> tuple[list[dict], list[str], int]:
    zl = find_zeros_up_to(args.tmax, cfg)
    if args.out:
        save_zeros(zl, args.out)
    records = [
        {"index": i + 1, "t": float(t)} for i, t in enumerate(zl.ordinates)
    ]
    return records, ["index", "t"], 0


def _eta_spec(nzeros: int, cfg) -> eta_mod.TruncatedProductSpec:
    zl = _cached_zeta_zeros(nzeros, cfg)
    return eta_mod.TruncatedProductSpec(zl, nzeros)


def _cmd_eval(args, cfg) -> tuple[list[dict], list[str], int]:
    s = _parse_point(args.s)
    n_terms = None
    if args.fn == "zeta":
        value = complex_zeta(s, cfg)
    elif args.fn == "gamma":
        value = complex_gamma(s)
    elif args.fn == "xi":
        value = xi(s, cfg)
    elif args.fn == "h":
        spec = _eta_spec(args.nzeros, cfg)
        value = eta_mod.h_truncated(spec, s)
        n_terms = args.nzeros
    else:  # eta
        spec = _eta_spec(args.nzeros, cfg)
        value = eta_mod.eta_truncated(spec, s, cfg)
        n_terms = args.nzeros
    record = {
        "fn": args.fn,
        "s_re": s.real,
        "s_im": s.imag,
        "value_re": value.real,
        "value_im": value.imag,
        "n_terms": n_terms,
    }
    return [record], ["fn", "s_re", "s_im", "value_re", "value_im", "n_terms"], 0


def _cmd_eta_scan(args, cfg) -> tuple[list[dict], list[str], int]:
    spec = _eta_spec(args.nzeros, cfg)
    count = int(math.floor((args.sigma_to - args.sigma_from) / args.step + 1e-9)) + 1
    sigmas = [args.sigma_from + i * args.step for i in range(count)]
    points = eta_mod.sigma_scan(spec, sigmas, cfg)
    records = [
        {
            "sigma": p.sigma,
            "re": p.value.real,
            "im": p.value.imag,
            "tail_bound": p.tail_bound,
            "n_terms": p.n_terms,
        }
        for p in points
    ]
    if args.figure:
        from .plotting import render_eta_scan

        render_eta_scan(records, args.figure)
    return records, ["sigma", "re", "im", "tail_bound", "n_terms"], 0


def _fe_case_rows(args, cfg) -> list[dict]:
    rng = np.random.default_rng(args.seed)
    samples = _fe_samples(rng, args.samples)
    rows: list[dict] = []

    def add(case: str, s: complex, residual: float, threshold: float) -> None:
        rows.append(
            {
                "case": case,
                "s_re": s.real,
                "s_im": s.imag,
                "residual": residual,
                "ok": residual < threshold,
            }
        )

    if args.case == "zeta":
        for s in samples:
            lhs = complex_zeta(1.0 - s, cfg)
            rhs = reflection_factor(s) * complex_zeta(s, cfg)
            add("zeta", s, abs(lhs - rhs) / (1.0 + abs(lhs)), _FE_THRESHOLD)
    elif args.case == "xi":
        for s in samples:
            lhs = xi(s, cfg)
            rhs = xi(1.0 - s, cfg)
            add("xi", s, abs(lhs - rhs) / (1.0 + abs(lhs)), _FE_THRESHOLD)
    elif args.case == "eta":
        spec = _eta_spec(args.nzeros, cfg)
        for s in samples:
            add("eta", s, eta_mod.eta_fe_residual(spec, s, cfg), _FE_THRESHOLD)
    elif args.case == "counterexample":
        series = uq.counterexample_series()
        desc = uq.counterexample_descriptor()
        functions = [("L", series)] + [
            (name, f) for name, f, _ in uq.remark_counterexamples()
        ]
        for name, f in functions:
            for s in samples:
                add(
                    f"counterexample:{name}",
                    s,
                    uq.fe_residual(desc, f, s),
                    _COUNTEREXAMPLE_THRESHOLD,
                )
    else:  # dedekind
        field_data = dk.field_for_discriminant(args.disc)
        zl = _cached_merged_zeros(field_data, args.tmax, cfg)
        spec = dk.make_product_spec(field_data, zl, len(zl))
        for s in samples:
            add(
                f"dedekind:eta_kappa:D={args.disc}",
                s,
                dk.eta_kappa_fe_residual(field_data, spec, s, cfg),
                _FE_THRESHOLD,
            )
        for s in samples:
            lhs = dk.xi_kappa(field_data, s, cfg)
            rhs = dk.xi_kappa(field_data, 1.0 - s, cfg)
            add(
                f"dedekind:xi_kappa:D={args.disc}",
                s,
                abs(lhs - rhs) / (1.0 + abs(lhs)),
                _FE_THRESHOLD,
            )
    return rows


def _cmd_fe_check(args, cfg) -> tuple[list[dict], list[str], int]:
    rows = _fe_case_rows(args, cfg)
    if args.figure:
        from .plotting import render_fe_residuals

        render_fe_residuals(rows, args.figure)
    bad = [r for r in rows if not r["ok"]]
    if bad:
        first = bad[0]
        print(
            f"functional-equation residual {first['residual']!r} at "
            f"s=({first['s_re']!r},{first['s_im']!r}) violates the suite bound",
            file=sys.stderr,
        )
    return rows, ["case", "s_re", "s_im", "residual", "ok"], 2 if bad else 0


_UNIQ_FIELDS = ["case", "sample", "lhs", "rhs", "residual", "verdict"]


def _cmd_uniqueness(args, cfg) -> tuple[list[dict], list[str], int]:
    remarks = {name: (f, rep) for name, f, rep in uq.remark_counterexamples()}
    rows: list[dict] = []

    if args.case == "sharpness":
        f1, rep = remarks["f1"]
        for s, residual in rep.fe_residuals:
            rows.append(
                {
                    "case": "sharpness",
                    "sample": f"fe@{s.real:g}{s.imag:+g}i",
                    "lhs": residual,
                    "rhs": _COUNTEREXAMPLE_THRESHOLD,
                    "residual": residual,
                    "verdict": "ok" if residual < _COUNTEREXAMPLE_THRESHOLD else "fail",
                }
            )
        zero_set = uq.counterexample_zero_set(range(-120, 120))
        for r in (100.0, 200.0, 400.0):
            slope = disc_count(zero_set, r) / r
            rel = abs(slope - uq.LOG4_OVER_PI) / uq.LOG4_OVER_PI
            rows.append(
                {
                    "case": "sharpness",
                    "sample": f"density@r={r:g}",
                    "lhs": slope,
                    "rhs": uq.LOG4_OVER_PI,
                    "residual": rel,
                    "verdict": "ok" if rel <= 0.02 else "fail",
                }
            )
        rows.append(
            {
                "case": "sharpness",
                "sample": "witness:|f1-L|(2)",
                "lhs": rep.witness_deviation,
                "rhs": 0.5625,
                "residual": abs(rep.witness_deviation - 0.5625),
                "verdict": "ok" if abs(rep.witness_deviation - 0.5625) < 1e-12 else "fail",
            }
        )
    elif args.case == "order2":
        _, rep = remarks["f2"]
        base_t = 10.0
        base = uq.f2_inverse_gap_log(base_t)
        for t in (10.0, 20.0, 40.0):
            lhs = uq.f2_inverse_gap_log(t)
            rhs = base * (t / base_t) ** 2
            ratio = lhs / rhs
            rows.append(
                {
                    "case": "order2",
                    "sample": f"gap-log@t={t:g}",
                    "lhs": lhs,
                    "rhs": rhs,
                    "residual": ratio,
                    "verdict": "ok" if 0.5 <= ratio <= 2.0 else "fail",
                }
            )
        for s, residual in rep.fe_residuals:
            rows.append(
                {
                    "case": "order2",
                    "sample": f"fe@{s.real:g}{s.imag:+g}i",
                    "lhs": residual,
                    "rhs": _COUNTEREXAMPLE_THRESHOLD,
                    "residual": residual,
                    "verdict": "ok" if residual < _COUNTEREXAMPLE_THRESHOLD else "fail",
                }
            )
    else:  # limit0
        _, rep = remarks["f3"]
        previous = math.inf
        for sigma, magnitude in rep.sigma_decay:
            reference = 1.0 / (sigma * (sigma - 1.0))
            rows.append(
                {
                    "case": "limit0",
                    "sample": f"|f3|@sigma={sigma:g}",
                    "lhs": magnitude,
                    "rhs": reference,
                    "residual": abs(magnitude - reference),
                    "verdict": "ok" if magnitude < previous else "fail",
                }
            )
            previous = magnitude
        for s, residual in rep.fe_residuals:
            rows.append(
                {
                    "case": "limit0",
                    "sample": f"fe@{s.real:g}{s.imag:+g}i",
                    "lhs": residual,
                    "rhs": _COUNTEREXAMPLE_THRESHOLD,
                    "residual": residual,
                    "verdict": "ok" if residual < _COUNTEREXAMPLE_THRESHOLD else "fail",
                }
            )

    if args.report:
        with open(args.report, "w") as fh:
            json.dump(rows, fh, indent=2)
            fh.write("\n")
    if args.figure:
        from .plotting import render_uniqueness

        render_uniqueness(rows, args.figure)
    bad = [r for r in rows if r["verdict"] == "fail"]
    if bad:
        print(f"uniqueness case record failed: {bad[0]['sample']}", file=sys.stderr)
    return rows, _UNIQ_FIELDS, 2 if bad else 0


def _cmd_dedekind(args, cfg) -> tuple[list[dict], list[str], int]:
    table = dk.load_field_table(args.field_table) if args.field_table else None
    field_data = dk.field_for_discriminant(args.disc, table)
    if args.action == "residue":
        numeric, formula, rel_err = dk.residue_check(field_data, cfg)
        records = [
            {
                "disc": args.disc,
                "numeric": numeric,
                "formula": formula,
                "rel_err": rel_err,
            }
        ]
        code = 0 if rel_err < 1e-4 else 2
        if code:
            print(f"residue mismatch: rel_err={rel_err!r}", file=sys.stderr)
        return records, ["disc", "numeric", "formula", "rel_err"], code
    if args.action == "zeros":
        zl = _cached_merged_zeros(field_data, args.tmax, cfg)
        records = [
            {"index": i + 1, "t": float(t)} for i, t in enumerate(zl.ordinates)
        ]
        return records, ["index", "t"], 0
    if args.action == "coeffs":
        counts = dk.ideal_counts(field_data, args.limit)
        records = [
            {"n": n, "a": counts.a(n)} for n in range(1, args.limit + 1)
        ]
        return records, ["n", "a"], 0
    # eta-scan
    zl = _cached_merged_zeros(field_data, args.tmax, cfg)
    spec = dk.make_product_spec(field_data, zl, len(zl))
    count = int(math.floor((args.sigma_to - args.sigma_from) / args.step + 1e-9)) + 1
    records = []
    tail = dk.dedekind_tail_estimate(field_data, spec)
    for i in range(count):
        sigma = args.sigma_from + i * args.step
        value = dk.eta_kappa_truncated(field_data, spec, complex(sigma, 0.0), cfg)
        records.append(
            {
                "sigma": sigma,
                "re": value.real,
                "im": value.imag,
                "tail_bound": abs(sigma * (1.0 - sigma)) * tail,
                "n_terms": spec.n_terms,
            }
        )
    if args.figure:
        from .plotting import render_eta_scan

        render_eta_scan(records, args.figure)
    return records, ["sigma", "re", "im", "tail_bound", "n_terms"], 0


def _cmd_density(args, cfg) -> tuple[list[dict], list[str], int]:
    if args.set == "counterexample":
        k_extent = int(math.ceil(args.rmax / (2.0 * math.pi / math.log(4.0)))) + 2
        points = uq.counterexample_zero_set(range(-k_extent, k_extent))
        target = uq.LOG4_OVER_PI
    else:
        t_max = args.tmax if args.tmax is not None else args.rmax
        points = find_zeros_up_to(t_max, cfg)
        target = None
    n_radii = 20
    radii = [args.rmax * (i + 1) / n_radii for i in range(n_radii)]
    curve = density_slope(points, radii)
    records = [
        {"r": r, "count": disc_count(points, r), "slope": slope}
        for r, slope in curve
    ]
    if args.figure:
        from .plotting import render_density

        render_density(records, args.figure)
    code = 0
    if target is not None:
        final = records[-1]["slope"]
        if abs(final - target) / target > 0.02:
            print(
                f"final density slope {final!r} off the sharp constant "
                f"{target!r} by more than 2%",
                file=sys.stderr,
            )
            code = 2
    return records, ["r", "count", "slope"], code


# ----------------------------------------------------------------------------
# Parser assembly and the entry point.


def _build_parser() -> _Parser:
    parser = _Parser(prog="zetaline", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt_opt(p, default="csv"):
        p.add_argument("--format", choices=("csv", "json"), default=default)

    p = sub.add_parser("zeros", help="scan critical-line zero ordinates")
    p.add_argument("--tmax", type=float, required=True)
    p.add_argument("--out", type=str, default=None, help="also write a cache file")
    fmt_opt(p)

    p = sub.add_parser("eval", help="evaluate one function at one point")
    p.add_argument("--fn", choices=("zeta", "xi", "gamma", "eta", "h"), required=True)
    p.add_argument("--s", required=True, metavar="RE,IM")
    p.add_argument("--nzeros", type=int, default=2000)
    p.add_argument("--format", choices=("plain", "csv", "json"), default="plain")

    p = sub.add_parser("eta-scan", help="companion function along the real axis")
    p.add_argument("--sigma-from", type=float, required=True, dest="sigma_from")
    p.add_argument("--sigma-to", type=float, required=True, dest="sigma_to")
    p.add_argument("--step", type=float, required=True)
    p.add_argument("--nzeros", type=int, required=True)
    p.add_argument("--figure", type=str, default=None)
    fmt_opt(p)

    p = sub.add_parser("fe-check", help="functional-equation residual suite")
    p.add_argument(
        "--case",
        choices=("zeta", "eta", "xi", "counterexample", "dedekind"),
        required=True,
    )
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--nzeros", type=int, default=2000)
    p.add_argument("--disc", type=int, default=-4)
    p.add_argument("--tmax", type=float, default=60.0)
    p.add_argument("--figure", type=str, default=None)
    fmt_opt(p)

    p = sub.add_parser("uniqueness", help="counterexample case reports")
    p.add_argument("--case", choices=("sharpness", "order2", "limit0"), required=True)
    p.add_argument("--report", type=str, default=None)
    p.add_argument("--figure", type=str, default=None)
    fmt_opt(p)

    p = sub.add_parser("dedekind", help="quadratic-field experiments")
    p.add_argument("--disc", type=int, required=True)
    p.add_argument(
        "--action", choices=("residue", "zeros", "eta-scan", "coeffs"), required=True
    )
    p.add_argument("--tmax", type=float, default=30.0)
    p.add_argument("--limit", type=int, default=50)
    p.add_argument("--sigma-from", type=float, default=2.0, dest="sigma_from")
    p.add_argument("--sigma-to", type=float, default=6.0, dest="sigma_to")
    p.add_argument("--step", type=float, default=1.0)
    p.add_argument("--field-table", type=str, default=None, dest="field_table")
    p.add_argument("--figure", type=str, default=None)
    fmt_opt(p)

    p = sub.add_parser("density", help="disc-count density curves")
    p.add_argument("--set", choices=("counterexample", "zeta"), required=True)
    p.add_argument("--rmax", type=float, required=True)
    p.add_argument("--tmax", type=float, default=None)
    p.add_argument("--figure", type=str, default=None)
    fmt_opt(p)

    return parser


_HANDLERS = {
    "zeros": _cmd_zeros,
    "eval": _cmd_eval,
    "eta-scan": _cmd_eta_scan,
    "fe-check": _cmd_fe_check,
    "uniqueness": _cmd_uniqueness,
    "dedekind": _cmd_dedekind,
    "density": _cmd_density,
}


def run(argv: list[str] | None = None, out=None) -> int:
    """Parse argv, run the subcommand, stream records; returns the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    manifest = RunManifest(
        subcommand=args.command,
        parameters={
            k: v for k, v in sorted(vars(args).items()) if k != "command"
        },
        seed=getattr(args, "seed", 0),
        output_format=getattr(args, "format", "csv"),
    )
    out = out if out is not None else sys.stdout
    cfg = DEFAULT_CONFIG
    try:
        records, fieldnames, code = _HANDLERS[manifest.subcommand](args, cfg)
    except ZetalineError as exc:
        print(f"zetaline: {exc}", file=sys.stderr)
        return 2
    if manifest.subcommand == "eval" and manifest.output_format == "plain":
        rec = records[0]
        if rec["value_im"] == 0.0:
            out.write(f"{rec['value_re']!r}\n")
        else:
            out.write(f"{rec['value_re']!r} {rec['value_im']!r}\n")
        return code
    _emit(records, fieldnames, manifest.output_format, out)
    return code


def console_main() -> None:
    sys.exit(run())
