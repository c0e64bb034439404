"""Command-line front end: tables, reports, family generation, selftest.

Output is deterministic: identical invocations produce byte-identical
JSON/CSV.  Floats print with 12 significant digits; exact integers
print in full unless --short.  Exit status is 0 iff every bound check
in the run passed, 1 for a failed bound check, 2 for usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Any, Sequence

from .reports import (
    DEFAULT_M,
    RatioReport,
    enumerate_ratio_optimizers,
    johnson_report,
    pointpush_report,
    ratio_report,
    separating_config,
    standard_config,
)
from .selftest import run_all
from .surfaces import SeparatingSeeds, UnsupportedSurfaceError, filling_table
from .words import WordParseError, parse_word

SCHEMA_VERSION = 1

_REPORT_COLUMNS = [
    "word",
    "is_pseudo_anosov",
    "trace_abs",
    "ell_T",
    "ell_C_lower",
    "ell_C_upper",
    "tau_lower",
    "tau_upper",
    "theorem_bound",
    "corollary_bound",
    "cyclically_reduced",
    "letter_eq_syllable",
    "primitive",
    "bound_satisfied",
    "M",
    "B",
    "genus",
    "punctures",
    "omega",
    "pair_value",
    "pair_kind",
    "n_eff",
]


def _fmt12(x: float | None) -> str:
    return "" if x is None else f"{x:.12g}"


def _report_row(rep: RatioReport, short: bool) -> list[str]:
    d = rep.to_dict(short=short)
    certs = d["certificates"]
    cfg = d["config"]
    tau = d["tau_interval"]
    return [
        d["word"],
        str(d["is_pseudo_anosov"]).lower(),
        d["trace_abs"],
        _fmt12(rep.ell_T),
        str(d["ell_C_interval"]["lower"]),
        str(d["ell_C_interval"]["upper"]),
        _fmt12(None if tau is None else rep.tau_interval[0]),
        _fmt12(None if tau is None else rep.tau_interval[1]),
        _fmt12(rep.theorem_bound),
        _fmt12(rep.corollary_bound),
        str(certs["cyclically_reduced"]).lower(),
        str(certs["letter_eq_syllable"]).lower(),
        str(certs["primitive"]).lower(),
        "" if certs["bound_satisfied"] is None else str(certs["bound_satisfied"]).lower(),
        str(cfg["M"]),
        str(cfg["B"]),
        str(cfg["genus"]),
        str(cfg["punctures"]),
        str(cfg["omega"]),
        str(cfg["pair_intersection"]["value"]),
        cfg["pair_intersection"]["kind"],
        str(cfg["n_eff"]),
    ]


def _emit_csv(rows: list[list[str]], header: list[str]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _emit_json(payload: dict[str, Any]) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _report_text(rep: RatioReport, short: bool) -> str:
    d = rep.to_dict(short=short)
    lines = [
        f"word:            {d['word'] or '(identity)'}",
        f"pseudo-Anosov:   {d['is_pseudo_anosov']}",
        f"|trace|:         {d['trace_abs']}",
        f"ell_T:           {_fmt12(rep.ell_T) or '-'}",
        f"ell_C interval:  [{rep.ell_C_interval.lower}, {rep.ell_C_interval.upper}]",
    ]
    if rep.tau_interval is not None:
        lines.append(
            f"tau interval:    [{_fmt12(rep.tau_interval[0])}, {_fmt12(rep.tau_interval[1])}]"
        )
    else:
        lines.append("tau interval:    -")
    lines += [
        f"theorem bound:   {_fmt12(rep.theorem_bound)}",
        f"corollary bound: {_fmt12(rep.corollary_bound)}",
        f"certificates:    {rep.certificates}",
        f"config:          M={rep.config.M} B={rep.config.B} "
        f"(g,p)=({rep.config.surface.genus},{rep.config.surface.punctures}) "
        f"i={rep.config.pair_intersection.value} ({rep.config.pair_intersection.kind}) "
        f"n_eff={rep.config.n_eff}",
    ]
    if rep.family:
        lines.append(f"family:          {rep.family} {rep.to_dict(short=True)['family_data']}")
    return "\n".join(lines) + "\n"


def _bound_exit(reports: Sequence[RatioReport]) -> int:
    for rep in reports:
        if rep.is_pseudo_anosov and rep.bound_satisfied is False:
            return 1
    return 0


def _parse_seeds(text: str | None) -> SeparatingSeeds:
    if not text:
        return SeparatingSeeds()
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError("seeds must be three comma-separated integers: genus2,genus3,arcs")
    g2, g3, arcs = (int(p) for p in parts)
    return SeparatingSeeds(g2, g3, arcs)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistratio",
        description="Exact ratio certificates for pseudo-Anosov twist words",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="minimal filling-pair intersection table")
    table.add_argument("--gmax", type=int, default=5)
    table.add_argument("--pmax", type=int, default=8)
    table.add_argument("--format", choices=("csv", "json", "text"), default="csv")

    report = sub.add_parser("report", help="ratio report for one word")
    report.add_argument("--word", required=True, help="word over {a,A,b,B}, e.g. abAB or a^3b^-2")
    report.add_argument("--genus", type=int, required=True)
    report.add_argument("--punctures", type=int, default=0)
    report.add_argument("--M", type=int, default=DEFAULT_M)
    report.add_argument("--format", choices=("json", "csv", "text"), default="text")
    report.add_argument("--short", action="store_true", help="truncate huge integers")

    enum = sub.add_parser("enumerate", help="stream the optimizer word family")
    enum.add_argument("--count", type=int, required=True)
    enum.add_argument("--genus", type=int, default=2)
    enum.add_argument("--punctures", type=int, default=0)
    enum.add_argument("--M", type=int, default=DEFAULT_M)
    enum.add_argument("--prefix-stable", action="store_true")
    enum.add_argument("--format", choices=("json", "csv", "text"), default="text")
    enum.add_argument("--short", action="store_true")

    johnson = sub.add_parser("johnson", help="deep commutator family report")
    johnson.add_argument("--k", type=int, required=True)
    johnson.add_argument("--genus", type=int, required=True)
    johnson.add_argument("--punctures", type=int, default=0, choices=(0, 1))
    johnson.add_argument("--M", type=int, default=DEFAULT_M)
    johnson.add_argument("--seeds", help="separating seeds genus2,genus3,arcs (default 4,8,4)")
    johnson.add_argument("--format", choices=("json", "csv", "text"), default="text")
    johnson.add_argument("--short", action="store_true")

    push = sub.add_parser("pointpush", help="point-pushing family report")
    push.add_argument("--genus", type=int, required=True)
    push.add_argument("--M", type=int, default=DEFAULT_M)
    push.add_argument("--format", choices=("json", "csv", "text"), default="text")
    push.add_argument("--short", action="store_true")

    selftest = sub.add_parser("selftest", help="run the built-in oracle suites")
    selftest.add_argument("--seed", type=int, default=0)

    return parser


def _cmd_table(args) -> int:
    rows = list(filling_table(args.gmax, args.pmax))
    if args.format == "json":
        payload = {
            "schema": SCHEMA_VERSION,
            "command": "table",
            "rows": [
                {"g": g, "p": p, "omega": om, "i_min": v, "kind": kind}
                for g, p, om, v, kind in rows
            ],
        }
        sys.stdout.write(_emit_json(payload))
    elif args.format == "csv":
        sys.stdout.write(
            _emit_csv(
                [[str(g), str(p), str(om), str(v), kind] for g, p, om, v, kind in rows],
                ["g", "p", "omega", "i_min", "kind"],
            )
        )
    else:
        for g, p, om, v, kind in rows:
            sys.stdout.write(f"S_{{{g},{p}}}  omega={om}  i_min={v} ({kind})\n")
    return 0


def _emit_reports(args, command: str, reports: list[RatioReport], extra: dict[str, Any]) -> None:
    short = getattr(args, "short", False)
    if args.format == "json":
        payload: dict[str, Any] = {"schema": SCHEMA_VERSION, "command": command}
        payload.update(extra)
        payload["config"] = reports[0].config.to_dict() if reports else None
        payload["reports"] = [rep.to_dict(short=short) for rep in reports]
        sys.stdout.write(_emit_json(payload))
    elif args.format == "csv":
        sys.stdout.write(
            _emit_csv([_report_row(rep, short) for rep in reports], _REPORT_COLUMNS)
        )
    else:
        for rep in reports:
            sys.stdout.write(_report_text(rep, short))


def _cmd_report(args) -> int:
    w = parse_word(args.word)
    cfg = standard_config(args.genus, args.punctures, args.M)
    rep = ratio_report(w, cfg)
    _emit_reports(args, "report", [rep], {})
    return _bound_exit([rep])


def _cmd_enumerate(args) -> int:
    if args.count < 1:
        raise ValueError("--count must be positive")
    cfg = standard_config(args.genus, args.punctures, args.M)
    reports = [rep for _, rep in enumerate_ratio_optimizers(args.count, cfg, args.prefix_stable)]
    _emit_reports(
        args,
        "enumerate",
        reports,
        {"count": args.count, "prefix_stable": args.prefix_stable},
    )
    return _bound_exit(reports)


def _cmd_johnson(args) -> int:
    if args.k < 1:
        raise ValueError("--k must be positive")
    seeds = _parse_seeds(args.seeds)
    cfg = separating_config(args.genus, args.punctures, args.M, seeds)
    rep = johnson_report(args.k, cfg)
    _emit_reports(args, "johnson", [rep], {"k": args.k})
    return _bound_exit([rep])


def _cmd_pointpush(args) -> int:
    rep = pointpush_report(args.genus, args.M)
    _emit_reports(args, "pointpush", [rep], {})
    return _bound_exit([rep])


def _cmd_selftest(args) -> int:
    results = run_all(args.seed)
    ok = True
    for res in results:
        status = "ok" if res.ok else "FAIL"
        sys.stdout.write(f"{res.name}: {res.passed}/{res.total} {status}\n")
        ok = ok and res.ok
    sys.stdout.write(f"selftest: {'PASS' if ok else 'FAIL'} ({len(results)} suites)\n")
    return 0 if ok else 1


_HANDLERS = {
    "table": _cmd_table,
    "report": _cmd_report,
    "enumerate": _cmd_enumerate,
    "johnson": _cmd_johnson,
    "pointpush": _cmd_pointpush,
    "selftest": _cmd_selftest,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except (WordParseError, UnsupportedSurfaceError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
