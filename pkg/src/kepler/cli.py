"""Command-line front end: invariants, kernels and acceptance suites as JSON/CSV."""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from kepler.cone_measures import peirce_volume, tripotent_volume
from kepler.hyper_series import SeriesControl
from kepler.jordan_core import DomainError, JordanType, classified_table, derive_invariants, is_classified, parse_type_name
from kepler.kepler_kernels import Bounded, Flat, KernelSpec, kernel_closed, kernel_diag
from kepler.verification import SUITES, SuiteReport, run_suite

SCHEMA = 1

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    jt: JordanType
    type_label: str
    ells: tuple[int, ...]
    fmt: str


# ---------------------------------------------------------------------------
# output


def _num(x: float) -> str:
    if math.isnan(x) or math.isinf(x):
        return "null"
    return format(x, ".17g")


def _to_json(obj: object) -> str:
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, float):
        return _num(obj)
    if isinstance(obj, (int, str)):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {_to_json(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_to_json(v) for v in obj) + "]"
    return json.dumps(str(obj))


def _cell(v: object) -> str:
    if isinstance(v, float):
        return "" if math.isnan(v) else format(v, ".17g")
    if isinstance(v, (list, tuple)):
        return ";".join(_cell(x) for x in v)
    return "" if v is None else str(v)


def _to_csv(columns: Sequence[str], rows: Sequence[dict[str, object]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([_cell(row.get(c)) for c in columns])
    return buf.getvalue()


def _emit(fmt: str, payload: dict[str, object], columns: Sequence[str], rows: Sequence[dict[str, object]]) -> None:
    if fmt == "csv":
        sys.stdout.write(_to_csv(columns, rows))
    else:
        sys.stdout.write(_to_json({"schema": SCHEMA, **payload, "rows": list(rows)}) + "\n")


# ---------------------------------------------------------------------------
# config


def _config(args: argparse.Namespace, need_ell: bool) -> RunConfig:
    if args.type and any(v is not None for v in (args.r, args.a, args.b)):
        raise UsageError("give either --type or --r/--a/--b, not both")
    if args.type:
        jt = parse_type_name(args.type)
        label = args.type
    elif args.r is not None and args.a is not None:
        jt = JordanType(args.r, args.a, args.b if args.b is not None else 0)
        label = f"r={jt.r},a={jt.a},b={jt.b}"
        if not is_classified(jt):
            print(f"warning: {label} is not in the classified table; results are formal", file=sys.stderr)
    else:
        raise UsageError("a Jordan type is required: --type NAME or --r R --a A [--b B]")
    if args.ell is None:
        if need_ell:
            raise UsageError("--ell is required")
        ells = tuple(range(1, jt.r + 1))
    else:
        derive_invariants(jt, args.ell)
        ells = (args.ell,)
    return RunConfig(jt, label, ells, args.format)


def _type_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--type", help="named type: sym:r, full:r,s, asym:n, spin:d, exc:16, exc:27")
    p.add_argument("--r", type=int, help="rank")
    p.add_argument("--a", type=float, help="multiplicity a")
    p.add_argument("--b", type=float, help="multiplicity b (default 0)")
    p.add_argument("--ell", type=int, help="Kepler rank, 1 <= ell <= r")


def _fmt_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "csv"), default="json")


# ---------------------------------------------------------------------------
# commands


INVARIANT_COLUMNS = ["type", "r", "a", "b", "d", "p", "ell", "d_ell", "dprime_ell", "dsecond_ell", "peirce_volume_reduced", "tripotent_volume"]


def _plain(x: object) -> object:
    if isinstance(x, int):
        return x
    f = float(x)
    return int(f) if f.is_integer() else f


def cmd_invariants(cfg: RunConfig) -> list[dict[str, object]]:
    rows = []
    jt = cfg.jt
    for ell in cfg.ells:
        kr = derive_invariants(jt, ell)
        rows.append(
            {
                "type": cfg.type_label,
                "r": jt.r,
                "a": _plain(jt.a),
                "b": _plain(jt.b),
                "d": _plain(jt.d),
                "p": _plain(jt.p),
                "ell": ell,
                "d_ell": _plain(kr.d_ell),
                "dprime_ell": _plain(kr.dprime_ell),
                "dsecond_ell": _plain(kr.dsecond_ell),
                "peirce_volume_reduced": peirce_volume(jt, ell).value(),
                "tripotent_volume": tripotent_volume(jt, ell).value(),
            }
        )
    return rows


KERNEL_COLUMNS = ["type", "ell", "potential", "nu", "t", "direct", "closed", "log_direct", "log_closed", "rel_gap", "shells_direct", "shells_closed", "converged"]


def _parse_point(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"malformed point {text!r}; expected comma-separated numbers") from exc


def cmd_kernel(cfg: RunConfig, args: argparse.Namespace) -> list[dict[str, object]]:
    pot = Bounded() if args.potential == "bounded" else Flat(args.lambda_exp)
    spec = KernelSpec(cfg.jt, cfg.ells[0], pot, args.nu)
    ctl = SeriesControl(max_degree=args.max_degree)
    rows = []
    for text in args.t:
        pt = _parse_point(text)
        direct = kernel_diag(spec, pt, ctl)
        closed = kernel_closed(spec, pt, ctl)
        ld, lc = direct.log_value(), closed.log_value()
        gap = abs(math.expm1(ld.log_abs - lc.log_abs)) if ld.sign == lc.sign else math.inf
        rows.append(
            {
                "type": cfg.type_label,
                "ell": spec.rank,
                "potential": "bounded" if args.potential == "bounded" else f"flat({args.lambda_exp:g})",
                "nu": spec.nu,
                "t": list(pt),
                "direct": direct.value,
                "closed": closed.value,
                "log_direct": ld.log_abs,
                "log_closed": lc.log_abs,
                "rel_gap": gap,
                "shells_direct": direct.degrees_used,
                "shells_closed": closed.degrees_used,
                "converged": direct.converged and closed.converged,
            }
        )
    return rows


def write_figures(reports: Sequence[SuiteReport], out_dir: Path) -> list[Path]:
    try:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError as exc:
        raise UsageError("--figures needs matplotlib; install the 'plot' extra") from exc
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for rep in reports:
        for plot in rep.plots:
            fig, ax = plt.subplots(figsize=(5.5, 4))
            for c in plot.curves:
                ax.plot(c.x, c.y, marker="o", markersize=3, label=c.label)
            if plot.loglog:
                ax.set_xscale("log")
            ax.set_yscale("log")
            ax.set_xlabel(plot.xlabel)
            ax.set_ylabel(plot.ylabel)
            ax.set_title(f"{rep.suite} ({'PASS' if rep.passed else 'FAIL'})")
            ax.legend(fontsize=7)
            fig.tight_layout()
            path = out_dir / f"{plot.name}.png"
            fig.savefig(path, dpi=120)
            plt.close(fig)
            written.append(path)
    return written


def cmd_verify(args: argparse.Namespace) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reports = []
    for name in names:
        rep = run_suite(name)
        print(f"{rep.line()} ({rep.seconds:.1f}s)", file=sys.stderr)
        reports.append(rep)
    if args.figures:
        for path in write_figures(reports, Path(args.figures)):
            print(f"wrote {path}", file=sys.stderr)
    if len(reports) == 1:
        rep = reports[0]
        payload = {"suite": rep.suite, "criterion": rep.criterion, "passed": rep.passed, "summary": rep.summary}
        _emit(args.format, payload, rep.columns, rep.rows)
    else:
        rows = [{"suite": r.suite, "passed": r.passed, "criterion": r.criterion, "summary": ";".join(f"{k}={_cell(v)}" for k, v in r.summary.items())} for r in reports]
        if args.format == "csv":
            sys.stdout.write(_to_csv(["suite", "passed", "criterion", "summary"], rows))
        else:
            suites = [{"suite": r.suite, "criterion": r.criterion, "passed": r.passed, "summary": r.summary} for r in reports]
            sys.stdout.write(_to_json({"schema": SCHEMA, "passed": all(r.passed for r in reports), "suites": suites}) + "\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def cmd_types(args: argparse.Namespace) -> None:
    rows = [{"name": n, "r": jt.r, "a": _plain(jt.a), "b": _plain(jt.b), "d": _plain(jt.d), "p": _plain(jt.p)} for n, jt in classified_table()]
    _emit(args.format, {"command": "types"}, ["name", "r", "a", "b", "d", "p"], rows)


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kepler", description="Kernels and special functions on Kepler manifolds.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="dimensions, genus and volumes")
    _type_args(p)
    _fmt_arg(p)

    p = sub.add_parser("kernel", help="diagonal kernel by two routes")
    _type_args(p)
    p.add_argument("--potential", choices=("flat", "bounded"), default="flat")
    p.add_argument("--lambda", dest="lambda_exp", type=float, default=1.0, help="flat potential exponent")
    p.add_argument("--nu", type=float, required=True, help="weight")
    p.add_argument("--t", action="append", required=True, help="eigenvalues, comma-separated; repeatable")
    p.add_argument("--max-degree", type=int, default=400)
    _fmt_arg(p)

    p = sub.add_parser("verify", help="run an acceptance suite")
    p.add_argument("suite", choices=[*SUITES, "all"])
    p.add_argument("--figures", metavar="DIR", help="also write PNG figures (needs matplotlib)")
    _fmt_arg(p)

    p = sub.add_parser("types", help="list the classified table")
    _fmt_arg(p)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "invariants":
            cfg = _config(args, need_ell=False)
            _emit(cfg.fmt, {"command": "invariants"}, INVARIANT_COLUMNS, cmd_invariants(cfg))
        elif args.command == "kernel":
            cfg = _config(args, need_ell=True)
            _emit(cfg.fmt, {"command": "kernel"}, KERNEL_COLUMNS, cmd_kernel(cfg, args))
        elif args.command == "verify":
            return cmd_verify(args)
        elif args.command == "types":
            cmd_types(args)
    except (DomainError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
