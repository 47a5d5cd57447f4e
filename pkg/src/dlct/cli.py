"""Command-line front end.

Exit status: 0 on success, 1 when a verification or reproduction fails,
2 on usage errors (bad input, unknown names, size caps).
"""

import argparse
import sys

import numpy as np

from . import catalog, serialize
from .analysis import analyze
from .errors import DlctError
from .field import field_new
from .reproduce import TARGETS, reproduce
from .search import MODES, search
from .spectra import TableKind, autocorrelation_table, ddt, dlct_direct, dlct_from_ddt, dlct_from_walsh, walsh_table
from .verify import CHECK_NAMES, run_check
from .vbf import from_univariate, identity, load_lut_file, parse_poly

CATALOG_NAMES = ("inverse", "gold", "kasami", "bracken-leander", "table1", "bent", "quadratic", "identity")


class UsageError(Exception):
    pass


def _need(args, name):
    val = getattr(args, name)
    if val is None:
        raise UsageError(f"--{name.replace('_', '-')} is required for this source")
    return val


def _ctx(args):
    return field_new(_need(args, "n"), args.modulus)


def build_function(args):
    """The function named by exactly one of --lut-file, --poly, --catalog."""
    sources = [s for s in (args.lut_file, args.poly, args.catalog) if s is not None]
    if len(sources) != 1:
        raise UsageError("give exactly one of --lut-file, --poly, --catalog")
    if args.lut_file is not None:
        return load_lut_file(args.lut_file)
    if args.poly is not None:
        return from_univariate(_ctx(args), parse_poly(args.poly))
    name = args.catalog
    if name == "inverse":
        return catalog.make_inverse(_ctx(args))
    if name == "gold":
        return catalog.make_gold(_ctx(args), _need(args, "i"))
    if name == "kasami":
        return catalog.make_kasami(_need(args, "n"), _need(args, "k"),
                                   field_new(args.n, args.modulus))
    if name == "bracken-leander":
        k = _need(args, "k")
        return catalog.make_bracken_leander(k, field_new(4 * k, args.modulus))
    if name == "table1":
        return catalog.optimal_sbox(_need(args, "index"))
    if name == "bent":
        n = _need(args, "n")
        if n % 2:
            raise UsageError("bent functions need an even --n")
        return catalog.make_field_product_bent(n // 2)
    if name == "quadratic":
        return catalog.random_quadratic(_ctx(args), np.random.default_rng(args.seed))
    if name == "identity":
        return identity(_need(args, "n"))
    raise UsageError(f"unknown catalog name {name!r}; choose from {', '.join(CATALOG_NAMES)}")


def _modulus(F):
    return F.field_ctx.modulus if F.field_ctx is not None else None


def _emit(args, text):
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _is_scalar_list(v):
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) or _is_scalar_list(x) for x in v)


def _pretty_obj(obj, indent=0):
    """Indented key: value rendering; lists of scalars stay on one line."""
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, dict) or (isinstance(v, list) and not _is_scalar_list(v)):
                lines.append(f"{pad}{k}:")
                lines.append(_pretty_obj(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
    else:
        for item in obj:
            lines.append(_pretty_obj(item, indent) if isinstance(item, (dict, list)) else f"{pad}- {item}")
    return "\n".join(lines)


def _emit_obj(args, obj, csv_rows=None):
    if args.format == "json":
        _emit(args, serialize.dumps(obj))
    elif args.format == "csv":
        if csv_rows is None:
            raise UsageError("CSV output is only available for tables and verify results")
        _emit(args, csv_rows)
    else:
        _emit(args, _pretty_obj(obj) + "\n")


_TABLE_BUILDERS = {
    "ddt": lambda F, w: ddt(F, w),
    "walsh": lambda F, w: walsh_table(F),
    "dlct": lambda F, w: dlct_from_ddt(F, w),
    "ac": lambda F, w: autocorrelation_table(F, w),
}
_DLCT_METHODS = {
    "ddt": lambda F, w: dlct_from_ddt(F, w),
    "walsh": lambda F, w: dlct_from_walsh(F),
    "direct": lambda F, w: dlct_direct(F, w),
}


def cmd_table(args):
    F = build_function(args)
    if args.kind == "dlct":
        table = _DLCT_METHODS[args.method](F, args.threads)
    else:
        table = _TABLE_BUILDERS[args.kind](F, args.threads)
    if args.format == "csv":
        _emit(args, serialize.table_to_csv(table))
    elif args.format == "pretty":
        _emit(args, serialize.table_to_pretty(table))
    else:
        _emit(args, serialize.dumps(serialize.table_to_obj(table, _modulus(F))))
    return 0


def cmd_analyze(args):
    F = build_function(args)
    report = analyze(F, args.threads)
    obj = {"schema": serialize.SCHEMA, "modulus": _modulus(F), **report.to_dict()}
    _emit_obj(args, obj)
    return 0


def cmd_verify(args):
    F = None
    if any(s is not None for s in (args.lut_file, args.poly, args.catalog)):
        F = build_function(args)
    results = run_check(args.check, F=F, n=args.n, seed=args.seed, trials=args.trials)
    rows = [r.to_dict() for r in results]
    csv_text = "check,instance,pass\n" + "".join(
        f"{r['check']},\"{r['instance']}\",{int(r['passed'])}\n" for r in rows)
    passed = all(r.passed for r in results)
    if args.format == "pretty":
        lines = [f"{'PASS' if r.passed else 'FAIL'}  {r.check}  {r.instance}" for r in results]
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit_obj(args, {"schema": serialize.SCHEMA, "results": rows, "pass": passed}, csv_text)
    return 0 if passed else 1


def cmd_reproduce(args):
    report = reproduce(args.target, n=args.n, k=args.k, seed=args.seed, trials=args.trials)
    if args.format == "pretty":
        lines = [f"target {report['target']}"]
        for c in report["cases"]:
            lines.append(f"{'ok  ' if c['match'] else 'DIFF'}  {c['instance']}")
            lines.append(f"      expected {c['expected']}")
            lines.append(f"      computed {c['computed']}")
        lines.append(f"{sum(c['match'] for c in report['cases'])}/{len(report['cases'])} match")
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit_obj(args, {"schema": serialize.SCHEMA, **report})
    return 0 if report["match"] else 1


def cmd_search(args):
    result = search(_need(args, "n"), args.mode, args.max_dlu, args.budget, args.seed, args.modulus)
    _emit_obj(args, {"schema": serialize.SCHEMA, **result})
    return 0


def _int(text):
    return int(text, 0)


def build_parser():
    p = argparse.ArgumentParser(prog="dlct", description="DLCT and related spectra of vectorial Boolean functions.")
    sub = p.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="field / input dimension")
    common.add_argument("--modulus", type=_int, help="irreducible modulus overriding the default")
    common.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
    common.add_argument("--output", help="write to this file instead of stdout")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=1, help="row-partition width")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--lut-file", help="S-box file: entries separated by whitespace/commas, optional 'n=.. m=..' header")
    source.add_argument("--poly", help="univariate polynomial such as '1*x^3 + 0x2*x^5'")
    source.add_argument("--catalog", choices=CATALOG_NAMES)
    source.add_argument("--index", type=int, help="optimal 4-bit S-box index 0..15 for --catalog table1")
    source.add_argument("--i", type=int, help="Gold parameter")
    source.add_argument("--k", type=int, help="Kasami / Bracken-Leander parameter")

    t = sub.add_parser("table", parents=[common, source], help="full DDT / Walsh / DLCT / autocorrelation table")
    t.add_argument("--kind", choices=[k.value for k in TableKind], required=True)
    t.add_argument("--method", choices=tuple(_DLCT_METHODS), default="ddt", help="DLCT route")
    t.set_defaults(func=cmd_table)

    a = sub.add_parser("analyze", parents=[common, source], help="indicators, flags and DLCT spectrum")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", parents=[common, source], help="run a named consistency check")
    v.add_argument("--check", choices=CHECK_NAMES, required=True)
    v.add_argument("--trials", type=int, default=20)
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("reproduce", parents=[common], help="recompute a published table or example")
    r.add_argument("target", choices=tuple(TARGETS))
    r.add_argument("--k", type=int)
    r.add_argument("--trials", type=int, default=20)
    r.set_defaults(func=cmd_reproduce)

    s = sub.add_parser("search", parents=[common], help="small searches for low-DLU functions")
    s.add_argument("--mode", choices=MODES, default="monomial")
    s.add_argument("--max-dlu", type=int)
    s.add_argument("--budget", type=int)
    s.set_defaults(func=cmd_search)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DlctError, ValueError, OSError) as exc:
        print(f"dlct: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
