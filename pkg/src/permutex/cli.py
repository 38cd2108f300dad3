"""Command-line interface: ``permutex {generate,perms,complexity,verify,appendix}``.

Exit codes: 0 ok, 1 verification violation, 2 usage error, 3 resource cap hit.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys

from . import appendix, suites
from .complexity import CSV_HEADER, complexity_report, enumerate_perms
from .errors import (
    BadLiteral,
    DomainTooSmall,
    NonStabilized,
    NotProlongable,
    UnresolvedComparison,
    UnsupportedMorphism,
)
from .perms import form_of
from .typek import group_by_form
from .words import WORD_NAMES, resolve_word, thue_morse

log = logging.getLogger("permutex")

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

SUITE_NAMES = [*suites.SUITES, "all"]
CONFIG_KEYS = {
    "word", "seed", "length", "n", "from_", "to", "format", "scan", "max_depth",
    "jobs", "suite", "max_n",
}


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON file of option defaults; flags take precedence")
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    common.add_argument("--scan", type=_positive, help="initial scan length for enumeration")
    common.add_argument("--max-depth", type=_positive, help="shift comparison budget")
    common.add_argument("--jobs", type=_positive, default=1)
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="permutex", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", parents=[common], help="print a word prefix")
    p.add_argument("--word", default="thue-morse", help=f"one of {', '.join(WORD_NAMES)} or a literal like 0>01,1>10")
    p.add_argument("--seed", default="0", choices=["0", "1"])
    p.add_argument("--length", type=_positive, default=32)

    p = sub.add_parser("perms", parents=[common], help="list Perm(n) grouped by form")
    p.add_argument("--word", default="thue-morse")
    p.add_argument("--seed", default="0", choices=["0", "1"])
    p.add_argument("--n", type=_positive, default=2)

    p = sub.add_parser("complexity", parents=[common], help="permutation complexity table for T")
    p.add_argument("--from", dest="from_", type=int, default=2)
    p.add_argument("--to", type=int, default=None)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", choices=SUITE_NAMES, default="all")
    p.add_argument("--max-n", type=_positive, default=12)

    sub.add_parser("appendix", parents=[common], help="list Perm(2)..Perm(9) by form")
    return parser


def _load_config(path: str) -> dict:
    try:
        with open(path) as fh:
            cfg = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None
    if not isinstance(cfg, dict):
        raise UsageError("config must be a JSON object")
    cfg = {k.replace("-", "_"): v for k, v in cfg.items()}
    if "from" in cfg:
        cfg["from_"] = cfg.pop("from")
    unknown = set(cfg) - CONFIG_KEYS
    if unknown:
        raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")
    return cfg


def parse_args(argv: list[str]) -> argparse.Namespace:
    """Parse flags; config entries are replayed as flags ahead of the real ones."""
    parser = build_parser()
    args = parser.parse_args(argv)
    if not args.config:
        return args
    cfg = _load_config(args.config)
    subparser = parser._subparsers._group_actions[0].choices[args.command]
    flags = {a.dest: a.option_strings[-1] for a in subparser._actions if a.option_strings}
    tokens = []
    for key, value in cfg.items():
        if key in flags:
            tokens += [flags[key], str(value)]
    at = argv.index(args.command)
    return parser.parse_args(argv[: at + 1] + tokens + argv[at + 1 :])


def _emit_csv(rows, out):
    writer = csv.writer(out, lineterminator="\n")
    writer.writerows(rows)


def cmd_generate(args, out) -> int:
    w = resolve_word(args.word, args.seed)
    out.write(w.factor(0, args.length) + "\n")
    return EXIT_OK


def cmd_perms(args, out) -> int:
    w = resolve_word(args.word, args.seed)
    ps = enumerate_perms(w, args.n, initial_scan=args.scan, max_depth=args.max_depth, jobs=args.jobs)
    members = ps.sorted()
    if args.format == "json":
        doc = {
            "n": args.n,
            "word": w.name,
            "count": len(members),
            "scan_len": ps.scan_len,
            "members": [{**p.to_json(), "form": form_of(p)} for p in members],
        }
        out.write(json.dumps(doc, indent=2) + "\n")
    elif args.format == "csv":
        rows = [["form", "perm", "start"]]
        for form, group in group_by_form(members).items():
            rows += [[form, str(p), p.origin.start] for p in group]
        _emit_csv(rows, out)
    else:
        out.write("\n".join(appendix.form_lines(members)) + "\n")
    return EXIT_OK


def cmd_complexity(args, out) -> int:
    lo = args.from_
    hi = args.to if args.to is not None else lo
    if lo < 2 or hi < lo:
        raise UsageError("need 2 <= --from <= --to")
    reports = []
    for n in range(lo, hi + 1):
        ps = enumerate_perms(thue_morse(), n, initial_scan=args.scan, max_depth=args.max_depth, jobs=args.jobs)
        reports.append(complexity_report(n, ps))
    if args.format == "json":
        out.write(json.dumps([r.to_json() for r in reports], indent=2) + "\n")
    elif args.format == "csv":
        _emit_csv([CSV_HEADER] + [r.csv_row() for r in reports], out)
    else:
        for r in reports:
            note = "" if r.in_theorem_domain else "  (outside theorem domain n >= 6)"
            out.write(
                f"n={r.n:<3d} tau={r.tau_bruteforce:<5d} recursive={r.tau_recursive:<5d} "
                f"closed={r.tau_closed_form:<5d} even={r.even:<4d} odd={r.odd:<4d} "
                f"rho({r.n - 1})={r.rho_prev} rho({2 * r.n - 1})={r.rho_2n_minus_1} "
                f"bounds={'ok' if r.bounds_ok else 'FAIL'}{note}\n"
            )
    code = EXIT_OK
    for r in reports:
        if not r.bounds_ok or (r.in_theorem_domain and not r.agree):
            code = EXIT_VIOLATION
    return code


def cmd_verify(args, out) -> int:
    reports = []
    for name in (list(suites.SUITES) if args.suite == "all" else [args.suite]):
        log.info("running %s", name)
        try:
            reports.append(suites.SUITES[name](args.max_n))
        except UnresolvedComparison as exc:
            rep = suites.VerificationReport(name)
            rep.violations.append({"error": str(exc)})
            reports.append(rep)
    if args.format == "json":
        out.write(json.dumps([r.to_json() for r in reports], indent=2) + "\n")
    elif args.format == "csv":
        _emit_csv([["suite", "scanned", "violations", "status"]]
                  + [[r.lemma, r.scanned, len(r.violations), "pass" if r.ok else "FAIL"] for r in reports], out)
    else:
        for r in reports:
            extra = ""
            if r.details:
                extra = "  " + ", ".join(f"{k}:{v}" for k, v in r.details.items())
            status = "PASS" if r.ok else f"FAIL ({len(r.violations)} violations)"
            out.write(f"{r.lemma}: {status}, {r.scanned} checked{extra}\n")
    return EXIT_OK if all(r.ok for r in reports) else EXIT_VIOLATION


def cmd_appendix(args, out) -> int:
    if args.format == "json":
        blocks = {
            str(n): [
                {"form": form, "members": [str(p) for p in ms]}
                for form, ms in group_by_form(appendix.perm_set(n)).items()
            ]
            for n in appendix.APPENDIX_LENGTHS
        }
        out.write(json.dumps(blocks, indent=2) + "\n")
    else:
        out.write(appendix.render_appendix())
    return EXIT_OK


COMMANDS = {
    "generate": cmd_generate,
    "perms": cmd_perms,
    "complexity": cmd_complexity,
    "verify": cmd_verify,
    "appendix": cmd_appendix,
}


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and EXIT_USAGE
    except UsageError as exc:
        print(f"permutex: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, BadLiteral, NotProlongable, DomainTooSmall, UnsupportedMorphism, KeyError) as exc:
        print(f"permutex: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NonStabilized, UnresolvedComparison) as exc:
        print(f"permutex: resource cap: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
