"""Command-line front door.

Subcommands: describe, twist, classify, dual, torsion, rootnum, analytic,
verify, scan.  Exit code 0 on success, 1 when any fail verdict was produced,
2 on usage errors.  Diagnostics go to stderr; results to stdout or --out.
"""

from __future__ import annotations

import argparse
import json
import sys

import mpmath as mp

from .analytic import real_period, sha_analytic_rank0
from .curve import invariants, minimal_model, quadratic_twist
from .dataio import named_curves, parse_records, write_report
from .errors import EcqError, RankPositiveSuspected
from .family3 import FamilyCurve, classify, dual, normalize
from .localdata import bad_primes, conductor, tate
from .rootnum import root_number_report
from .torsion import torsion_subgroup
from .verify import (ScanOptions, check_divisibility_main, check_theorem31,
                     check_torsion_theorems, check_twist_reduction, scan)

PASS_EXIT, FAIL_EXIT, USAGE_EXIT = 0, 1, 2


def _add_curve_args(p):
    p.add_argument("--a", nargs=5, type=int, metavar=("A1", "A2", "A3", "A4", "A6"),
                   help="five Weierstrass coefficients")
    p.add_argument("--family", nargs=2, type=int, metavar=("A", "B"),
                   help="member (a, b) of the 3-torsion family")
    p.add_argument("--records", metavar="FILE",
                   help="JSONL curve-record file (with --label)")
    p.add_argument("--label", help="label to pick from --records or fixtures")


def _get_curve(args):
    modes = sum(x is not None for x in (args.a, args.family, args.label))
    if modes != 1:
        raise UsageError("specify exactly one of --a, --family, --label")
    if args.a is not None:
        return invariants(*args.a), None
    if args.family is not None:
        return FamilyCurve(*args.family).curve(), None
    if args.records:
        with open(args.records) as fh:
            records, issues = parse_records(fh.read())
        for issue in issues:
            print(f"warning: {issue}", file=sys.stderr)
        table = {r.label: r for r in records if r.label}
    else:
        table = named_curves()
    if args.label not in table:
        raise UsageError(f"label {args.label!r} not found")
    rec = table[args.label]
    return rec.curve(), rec


class UsageError(Exception):
    pass


def _emit(args, obj, human):
    text = json.dumps(obj, sort_keys=True, separators=(",", ":")) \
        if args.json else human
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _cmd_describe(args):
    E, _ = _get_curve(args)
    Em, _ = minimal_model(E)
    locs = [tate(Em, p) for p in bad_primes(Em)]
    obj = {
        "equation": str(Em),
        "a": [str(x) for x in Em.a_invariants],
        "discriminant": str(Em.discriminant),
        "c4": str(Em.c4), "c6": str(Em.c6), "j": str(Em.j),
        "conductor": conductor(Em),
        "local": [{"p": l.p, "kodaira": str(l.kodaira), "c": l.c_p,
                   "f": l.f_p, "class": l.red_class} for l in locs],
    }
    lines = [f"minimal model: {Em}",
             f"discriminant {Em.discriminant}, c4 {Em.c4}, c6 {Em.c6}, j {Em.j}",
             f"conductor {obj['conductor']}"]
    lines += ["  " + str(l) for l in locs]
    _emit(args, obj, "\n".join(lines))
    return PASS_EXIT


def _cmd_twist(args):
    E, _ = _get_curve(args)
    Ed, _ = minimal_model(quadratic_twist(E, args.d))
    obj = {"d": args.d, "a": [str(x) for x in Ed.a_invariants],
           "conductor": conductor(Ed)}
    _emit(args, obj, f"twist by {args.d}: {Ed}   (conductor {obj['conductor']})")
    return PASS_EXIT


def _cmd_classify(args):
    if args.family is None:
        raise UsageError("classify needs --family A B")
    F = normalize(*args.family)
    res = classify(F, args.p)
    obj = {"a": F.a, "b": F.b, "p": args.p,
           "candidates": sorted(str(k) for k in res.candidates)}
    if res.c_p is not None:
        obj["c"] = res.c_p
    _emit(args, obj, str(res))
    return PASS_EXIT


def _cmd_dual(args):
    if args.family is None:
        raise UsageError("dual needs --family A B")
    F = normalize(*args.family)
    Ed = dual(F)
    obj = {"a": [str(x) for x in Ed.a_invariants],
           "conductor": conductor(Ed)}
    _emit(args, obj, f"3-isogenous dual: {Ed}   (conductor {obj['conductor']})")
    return PASS_EXIT


def _cmd_torsion(args):
    E, _ = _get_curve(args)
    T = torsion_subgroup(E)
    obj = {"shape": T.shape, "order": T.order,
           "generators": [[str(x), str(y)] for x, y in T.generators]}
    _emit(args, obj, f"torsion {T.shape} (order {T.order}), generators "
          + (", ".join(f"({x}, {y})" for x, y in T.generators) or "none"))
    return PASS_EXIT


def _cmd_rootnum(args):
    E, _ = _get_curve(args)
    rep = root_number_report(E)
    obj = {"local": [{"place": ("infinity" if l.p == 0 else l.p),
                      "w": l.w, "reason": l.reason} for l in rep.local],
           "w": rep.w}
    lines = [f"  {'oo' if l.p == 0 else l.p}: "
             f"{l.w if l.w is not None else 'undetermined'}  ({l.reason})"
             for l in rep.local]
    lines.append(f"global: {rep.w if rep.w is not None else 'undetermined'}")
    _emit(args, obj, "\n".join(lines))
    return PASS_EXIT


def _cmd_analytic(args):
    E, rec = _get_curve(args)
    with mp.workprec(args.prec):
        try:
            data = sha_analytic_rank0(E, terms=args.terms,
                                      assume_even=args.assume_even)
        except RankPositiveSuspected as exc:
            print(f"rank > 0 suspected: {exc}", file=sys.stderr)
            om = real_period(E)
            _emit(args, {"period": mp.nstr(om, 12), "sha": None},
                  f"Omega = {mp.nstr(om, 12)}; L(E,1) not certified nonzero")
            return PASS_EXIT
    obj = {"conductor": data.conductor,
           "l_value": mp.nstr(data.l_value.value, 12),
           "l_tail": mp.nstr(data.l_value.tail, 3),
           "period": mp.nstr(data.period, 12),
           "l_over_period": mp.nstr(data.ratio, 12),
           "torsion": data.torsion_order, "tamagawa": data.tamagawa,
           "sha": str(data.sha), "residual": mp.nstr(data.residual, 3)}
    human = (f"L(E,1) = {obj['l_value']} (tail {obj['l_tail']}), "
             f"Omega = {obj['period']}, L/Omega = {obj['l_over_period']}\n"
             f"|T| = {data.torsion_order}, prod c_p = {data.tamagawa}, "
             f"analytic sha = {data.sha} (residual {obj['residual']})")
    _emit(args, obj, human)
    return PASS_EXIT


def _cmd_verify(args):
    E, rec = _get_curve(args)
    label = args.label or None
    sha = rec.sha_order if (rec and rec.sha_order is not None) else "analytic"
    rank = rec.rank if rec else None
    verdicts = [check_theorem31(E, sha_source=sha, label=label, rank=rank)]
    for d in args.d_list:
        verdicts.append(check_torsion_theorems(E, d, label=label))
        verdicts.append(check_twist_reduction(E, d, label=label))
        verdicts.append(check_divisibility_main(E, d, sha_source=sha, label=label))
    return _finish_verdicts(args, verdicts)


def _cmd_scan(args):
    opt = ScanOptions(threads=args.threads,
                      l_conductor_cap=args.l_cap,
                      d_set=tuple(args.d_list) if args.d_list else
                      ScanOptions.d_set)
    verdicts = scan(range(-args.amax, args.amax + 1),
                    range(1, args.bmax + 1), opt)
    return _finish_verdicts(args, verdicts)


def _finish_verdicts(args, verdicts):
    sink = open(args.out, "w") if args.out else sys.stdout
    try:
        if args.json:
            write_report(verdicts, sink)
        else:
            for v in verdicts:
                print(v, file=sink)
    finally:
        if args.out:
            sink.close()
    n_fail = sum(v.status == "fail" for v in verdicts)
    counts = {}
    for v in verdicts:
        counts[v.status] = counts.get(v.status, 0) + 1
    print("verdicts: " + ", ".join(f"{k}={v}" for k, v in sorted(counts.items())),
          file=sys.stderr)
    return FAIL_EXIT if n_fail else PASS_EXIT


def _build_parser():
    ap = argparse.ArgumentParser(
        prog="ecq",
        description="Local data, twists, 3-isogeny duals, torsion, root "
                    "numbers and rank-0 analytic invariants of elliptic "
                    "curves over Q.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def common(p, curve=True):
        if curve:
            _add_curve_args(p)
        p.add_argument("--json", action="store_true", help="JSON output")
        p.add_argument("--out", help="write output to this file")

    p = sub.add_parser("describe", help="minimal model, conductor, local data")
    common(p)
    p.set_defaults(fn=_cmd_describe)

    p = sub.add_parser("twist", help="quadratic twist by a squarefree d")
    common(p)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(fn=_cmd_twist)

    p = sub.add_parser("classify", help="closed-form reduction type of a family member")
    common(p)
    p.add_argument("-p", "--p", type=int, required=True, dest="p")
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("dual", help="3-isogenous dual of a family member")
    common(p)
    p.set_defaults(fn=_cmd_dual)

    p = sub.add_parser("torsion", help="rational torsion subgroup")
    common(p)
    p.set_defaults(fn=_cmd_torsion)

    p = sub.add_parser("rootnum", help="local and global root numbers")
    common(p)
    p.set_defaults(fn=_cmd_rootnum)

    p = sub.add_parser("analytic", help="L(E,1), period, analytic sha")
    common(p)
    p.add_argument("--terms", type=int, default=None)
    p.add_argument("--prec", type=int, default=53)
    p.add_argument("--assume-even", action="store_true", dest="assume_even",
                   help="force the even-functional-equation series")
    p.set_defaults(fn=_cmd_analytic)

    p = sub.add_parser("verify", help="run the theorem checks on one curve")
    common(p)
    p.add_argument("--d", type=int, action="append", dest="d_list", default=[],
                   metavar="D", help="twist parameter (repeatable)")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("scan", help="run every boxed check over (a, b)")
    common(p, curve=False)
    p.add_argument("--amax", type=int, default=60)
    p.add_argument("--bmax", type=int, default=60)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--l-cap", type=int, default=200_000, dest="l_cap",
                   help="skip L-certification above this conductor")
    p.add_argument("--d", type=int, action="append", dest="d_list", default=[],
                   metavar="D", help="twist parameter (repeatable)")
    p.set_defaults(fn=_cmd_scan)
    return ap


def main(argv=None) -> int:
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return USAGE_EXIT if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except EcqError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAIL_EXIT


if __name__ == "__main__":
    sys.exit(main())
