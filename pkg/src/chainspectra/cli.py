"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 oracle mismatch, 64 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass

from . import closed_forms as cf
from . import oracles
from .decomposition import char_poly, decompose, numeric_spectrum
from .errors import UnknownObject
from .graph import adjacency_json, build_chain, edge_list_text, laplacian
from .sequences import c_by_recurrence, e_by_recurrence
from .verification import run_checks

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_ORACLE_MISMATCH = 2
EXIT_USAGE = 64

DEFAULT_MAX_N = 50
ENV_MAX_N = "CHAINSPECTRA_MAX_N"
DUMP_OBJECTS = ("graph", "laplacian", "LA", "LS", "charpoly", "minors", "spectrum")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    subcommand: str
    ns: list[int]
    fmt: str = "text"
    oracle: bool = False
    precision: int = 2
    max_n: int = DEFAULT_MAX_N
    oracle_max: int = oracles.DEFAULT_RESISTANCE_CAP


def parse_range(text: str) -> list[int]:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise UsageError(f"bad range {text!r}, expected A..B") from None
    if a < 1 or b < a:
        raise UsageError(f"range {text!r} must satisfy 1 <= A <= B")
    return list(range(a, b + 1))


def _config(args) -> RunConfig:
    if getattr(args, "range", None) and getattr(args, "n", None) is not None:
        raise UsageError("give --n or --range, not both")
    if getattr(args, "range", None):
        ns = parse_range(args.range)
    elif getattr(args, "n", None) is not None:
        if args.n < 1:
            raise UsageError("--n must be >= 1")
        ns = [args.n]
    else:
        raise UsageError("one of --n or --range is required")
    max_n = args.max if getattr(args, "max", None) is not None else DEFAULT_MAX_N
    hard = os.environ.get(ENV_MAX_N)
    if hard:
        max_n = min(max_n, int(hard))
    if ns[-1] > max_n:
        raise UsageError(f"n={ns[-1]} exceeds the cap {max_n} (see --max and ${ENV_MAX_N})")
    precision = getattr(args, "precision", 2)
    if precision < 2:
        raise UsageError("--precision must be >= 2")
    return RunConfig(
        subcommand=args.command,
        ns=ns,
        fmt=getattr(args, "format", "text"),
        oracle=getattr(args, "oracle", False),
        precision=precision,
        max_n=max_n,
        oracle_max=getattr(args, "oracle_max", oracles.DEFAULT_RESISTANCE_CAP),
    )


def _csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerows(rows)
    return buf.getvalue()


def _text_table(header, rows) -> str:
    table = [list(map(str, header))] + [list(map(str, r)) for r in rows]
    widths = [max(len(r[i]) for r in table) for i in range(len(header))]
    return "".join(
        "  ".join(cell.rjust(w) for cell, w in zip(r, widths)).rstrip() + "\n" for r in table
    )


def _json(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def cmd_kf(cfg: RunConfig) -> tuple[str, int]:
    records = []
    mismatch = False
    for n in cfg.ns:
        kf = cf.kirchhoff(n)
        rec = {
            "n": n,
            "G": f"L_{n}",
            "kf_exact": cf.fraction_str(kf),
            "kf": str(cf.round_half_away(kf, cfg.precision)),
        }
        if cfg.oracle:
            g = build_chain(n)
            spec = oracles.kirchhoff_by_spectrum(g)
            ok = abs(spec - float(kf)) <= 1e-8 * float(kf)
            rec["oracle_spectrum"] = f"{spec:.{cfg.precision + 6}f}"
            if n <= cfg.oracle_max:
                res = oracles.kirchhoff_by_resistance(g)
                rec["oracle_resistance"] = cf.fraction_str(res)
                ok = ok and res == kf
            rec["match"] = ok
            mismatch |= not ok
        records.append(rec)
    code = EXIT_ORACLE_MISMATCH if mismatch else EXIT_OK
    if cfg.fmt == "json":
        return _json(records), code
    if cfg.fmt == "csv":
        header = ["G", "value"]
        if cfg.oracle:
            header += ["oracle_spectrum", "oracle_resistance", "match"]
        rows = [header]
        for r in records:
            row = [r["G"], r["kf"]]
            if cfg.oracle:
                row += [r["oracle_spectrum"], r.get("oracle_resistance", ""), str(r["match"]).lower()]
            rows.append(row)
        return _csv(rows), code
    header = ["G", "Kf exact", "Kf"]
    if cfg.oracle:
        header += ["oracle", "match"]
    rows = []
    for r in records:
        row = [r["G"], r["kf_exact"], r["kf"]]
        if cfg.oracle:
            row += [r["oracle_spectrum"], "yes" if r["match"] else "NO"]
        rows.append(row)
    return _text_table(header, rows), code


def cmd_tau(cfg: RunConfig) -> tuple[str, int]:
    records = []
    mismatch = False
    for n in cfg.ns:
        tau = cf.complexity(n)
        rec = {"n": n, "G": f"L_{n}", "tau": str(tau)}
        if cfg.oracle and n <= max(cfg.oracle_max, 12):
            g = build_chain(n)
            mtt = oracles.spanning_trees_mtt(g)
            rec["oracle_mtt"] = str(mtt)
            rec["match"] = mtt == tau
            mismatch |= mtt != tau
        records.append(rec)
    code = EXIT_ORACLE_MISMATCH if mismatch else EXIT_OK
    if cfg.fmt == "json":
        return _json(records), code
    if cfg.fmt == "csv":
        header = ["G", "value"] + (["oracle_mtt", "match"] if cfg.oracle else [])
        rows = [header]
        for r in records:
            row = [r["G"], r["tau"]]
            if cfg.oracle:
                row += [r.get("oracle_mtt", ""), str(r["match"]).lower() if "match" in r else ""]
            rows.append(row)
        return _csv(rows), code
    header = ["G", "tau"] + (["oracle", "match"] if cfg.oracle else [])
    rows = []
    for r in records:
        row = [r["G"], r["tau"]]
        if cfg.oracle:
            row += [r.get("oracle_mtt", "-"), {True: "yes", False: "NO"}.get(r.get("match"), "-")]
        rows.append(row)
    return _text_table(header, rows), code


def cmd_verify(cfg: RunConfig, tamper: bool = False) -> tuple[str, int]:
    records = run_checks(cfg.ns, tamper=tamper, oracle_cap=cfg.oracle_max)
    failed = [r for r in records if r["status"] != "PASS"]
    doc = {
        "records": records,
        "summary": {"total": len(records), "passed": len(records) - len(failed), "failed": len(failed)},
    }
    return _json(doc), EXIT_VERIFY_FAIL if failed else EXIT_OK


def _matrix_out(m, fmt) -> str:
    if fmt == "json":
        return _json(m.to_lists())
    if fmt == "csv":
        return _csv(m.rows)
    return "".join(" ".join(f"{v:3d}" for v in r) + "\n" for r in m.rows)


def _fmt_eig(x: float) -> str:
    return f"{0.0 if abs(x) < 1e-9 else x:.12f}"


def cmd_dump(n: int, obj: str, fmt: str) -> str:
    g = build_chain(n)
    if obj == "graph":
        return adjacency_json(g) if fmt == "json" else edge_list_text(g)
    if obj == "laplacian":
        return _matrix_out(laplacian(g), fmt)
    if obj in ("LA", "LS"):
        la, ls = decompose(g)
        return _matrix_out(la if obj == "LA" else ls, fmt)
    if obj == "charpoly":
        la, ls = decompose(g)
        polys = {
            "L": list(char_poly(laplacian(g)).coefficients),
            "LA": list(char_poly(la).coefficients),
            "LS": list(char_poly(ls).coefficients),
        }
        if fmt == "json":
            return _json({k: [str(c) for c in v] for k, v in polys.items()})
        return "".join(f"{k}: {' '.join(map(str, v))}\n" for k, v in polys.items())
    if obj == "minors":
        return minors_csv(n)
    if obj == "spectrum":
        vals = numeric_spectrum(laplacian(g), "L").eigenvalues
        if fmt == "json":
            return _json([_fmt_eig(v) for v in vals])
        return "".join(_fmt_eig(v) + "\n" for v in vals)
    raise UnknownObject(obj)


def minors_csv(n: int) -> str:
    c = c_by_recurrence(n)
    e = e_by_recurrence(n)
    return _csv([["k", "c_k", "e_k"]] + [[k, c[k], e[k]] for k in range(1, 4 * n + 1)])


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(
        prog="chainspectra",
        description="Kirchhoff index and spanning-tree counts of linear "
        "octagonal-quadrilateral networks L_n, with exact cross-checks.",
        epilog=f"Exit codes: 0 ok, 1 verification failure, 2 oracle mismatch, 64 usage error. "
        f"${ENV_MAX_N} imposes a hard cap on n.",
    )
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def common(sp, formats=("text", "csv", "json")):
        sp.add_argument("--n", type=int, help="single chain length")
        sp.add_argument("--range", help="inclusive range A..B of chain lengths")
        sp.add_argument("--format", choices=formats, default=formats[0])
        sp.add_argument("--max", type=int, help=f"largest n accepted (default {DEFAULT_MAX_N})")
        sp.add_argument("--out", help="write output to FILE instead of stdout")

    for name, helptext in (("kf", "Kirchhoff index table"), ("tau", "spanning-tree count table")):
        sp = sub.add_parser(name, help=helptext)
        common(sp)
        sp.add_argument("--oracle", action="store_true", help="add brute-force oracle columns")
        sp.add_argument("--precision", type=int, default=2, help="decimals shown (>= 2)")
        sp.add_argument(
            "--oracle-max", type=int, default=oracles.DEFAULT_RESISTANCE_CAP,
            help="largest n for the exact resistance oracle",
        )

    sp = sub.add_parser("verify", help="run every cross-check, JSON report")
    common(sp, formats=("json",))
    sp.add_argument("--oracle-max", type=int, default=oracles.DEFAULT_RESISTANCE_CAP)
    sp.add_argument("--tamper", action="store_true", help=argparse.SUPPRESS)

    sp = sub.add_parser("dump", help="write an intermediate object")
    common(sp)
    sp.add_argument("--object", required=True, help="one of " + ", ".join(DUMP_OBJECTS))

    sp = sub.add_parser("graph", help="export L_n as an edge list or adjacency JSON")
    common(sp, formats=("text", "json"))

    sp = sub.add_parser("minors", help="c_k and e_k as CSV")
    common(sp, formats=("csv",))
    return p


def run(argv=None) -> tuple[str, int, str | None]:
    """Parse ``argv`` and return ``(output, exit_code, out_path)``."""
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help(sys.stderr)
        return "", EXIT_USAGE, None
    out, code = _dispatch(args, _config(args))
    return out, code, args.out


def _dispatch(args, cfg: RunConfig) -> tuple[str, int]:
    if args.command == "kf":
        return cmd_kf(cfg)
    if args.command == "tau":
        return cmd_tau(cfg)
    if args.command == "verify":
        return cmd_verify(cfg, tamper=args.tamper)
    if len(cfg.ns) != 1:
        raise UsageError(f"{args.command} takes a single --n")
    n = cfg.ns[0]
    if args.command == "dump":
        if args.object not in DUMP_OBJECTS:
            raise UnknownObject(args.object)
        return cmd_dump(n, args.object, cfg.fmt), EXIT_OK
    if args.command == "graph":
        return cmd_dump(n, "graph", cfg.fmt), EXIT_OK
    return minors_csv(n), EXIT_OK


def main(argv=None) -> int:
    try:
        out, code, dest = run(argv)
    except UsageError as exc:
        print(f"chainspectra: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnknownObject as exc:
        print(
            f"chainspectra: error: unknown object {exc.args[0]!r}; "
            f"choose from {', '.join(DUMP_OBJECTS)}",
            file=sys.stderr,
        )
        return EXIT_USAGE
    if dest:
        with open(dest, "w", newline="") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
