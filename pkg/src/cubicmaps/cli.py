"""Command line front end.

Each result is printed as one line of ``key=value`` pairs (values
shell-quoted); ``--json`` prints a single JSON object per invocation
instead.  Exit status: 0 success, 1 bad input, 2 internal invariant
violation.
"""
from __future__ import annotations

import argparse
import json
import re
import shlex
import sys

from .cubicnf import (
    DegenerateParameter,
    InvalidCriticalData,
    NotInNormalForm,
    TooFewCriticalPoints,
    cubics_with_critical_quad,
    equivalent,
    normalize,
    phi,
    two_point_class,
)
from .exactfield import require_prime
from .perfectness import (
    InvariantViolation,
    catalan_bound,
    fp_scan,
    qp_perfect,
    real_perfect,
)
from .ratfunc import (
    ParseError,
    UnresolvableFactor,
    format_mobius,
    format_ratfunc,
    parse_point,
    parse_ratfunc,
    parse_scalar,
)

USER_ERRORS = (ParseError, DegenerateParameter, NotInNormalForm, InvalidCriticalData,
               TooFewCriticalPoints, UnresolvableFactor, ValueError, ZeroDivisionError)

_NEG_NUMBER = re.compile(r"^-\d")


def _text(v) -> str:
    if v is None:
        return "none"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def format_record(rec: dict) -> str:
    return " ".join(f"{k}={shlex.quote(_text(v))}" for k, v in rec.items())


def parse_record(line: str) -> dict:
    out = {}
    for tok in shlex.split(line):
        k, _, v = tok.partition("=")
        out[k] = v
    return out


def _class_record(i, cls) -> dict:
    rec = {"class": i, "kind": cls.kind}
    if cls.kind == "TwoPoint":
        rec.update(c1=cls.c1, c2=cls.c2, field=cls.field)
    else:
        rec.update(u=cls.u, field=cls.field, real=cls.is_real(), tau=format_mobius(cls.tau))
    rec["representative"] = format_ratfunc(cls.representative())
    return rec


def cmd_normalize(args):
    f = parse_ratfunc(args.f)
    try:
        nf = normalize(f)
    except TooFewCriticalPoints:
        cls = two_point_class(f)
        return [{"kind": "TwoPoint", "c1": cls.c1, "c2": cls.c2,
                 "representative": format_ratfunc(cls.representative())}]
    return [{"kind": "Generic", "u": nf.u, "tau": format_mobius(nf.tau),
             "sigma": format_mobius(nf.sigma), "field": nf.field}]


def cmd_solve(args):
    pts = [parse_point(c) for c in args.points]
    classes = cubics_with_critical_quad(pts)
    recs = [_class_record(i, c) for i, c in enumerate(classes)]
    return recs or [{"classes": 0}]


def cmd_equiv(args):
    f, g = parse_ratfunc(args.f), parse_ratfunc(args.g)
    sigma = equivalent(f, g)
    if sigma is None:
        return [{"equivalent": False, "sigma": "inequivalent"}]
    return [{"equivalent": True, "sigma": format_mobius(sigma)}]


def cmd_phi(args):
    u = parse_point(args.u)
    return [{"u": u, "phi": phi(u)}]


def cmd_perfect(args):
    if args.real:
        verdict = real_perfect()
    else:
        verdict = qp_perfect(args.p)
    return [verdict.as_record()]


def cmd_fpscan(args):
    require_prime(args.p)
    scan = fp_scan(args.p)
    return [{"p": scan.p, "reduced_degree": scan.reduced_degree,
             "image": " ".join(str(P) for P in sorted(scan.image, key=lambda P: P.key())),
             "image_size": len(scan.image), "surjective": scan.surjective,
             "missing": " ".join(str(P) for P in scan.missing)}]


def cmd_bound(args):
    return [{"d": args.d, "bound": catalan_bound(args.d)}]


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cubicmaps", description=__doc__.splitlines()[0])
    ap.add_argument("--json", action="store_true", help="emit one JSON record")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("normalize", help="normal form f_u of a cubic")
    sp.add_argument("f")
    sp.set_defaults(func=cmd_normalize)

    sp = sub.add_parser("solve", help="cubics with four given critical points")
    sp.add_argument("points", nargs=4)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("equiv", help="find sigma with f = sigma o g")
    sp.add_argument("f")
    sp.add_argument("g")
    sp.set_defaults(func=cmd_equiv)

    sp = sub.add_parser("phi", help="evaluate phi(u)")
    sp.add_argument("u")
    sp.set_defaults(func=cmd_phi)

    sp = sub.add_parser("perfect", help="phi-perfectness verdict for R or Q_p")
    grp = sp.add_mutually_exclusive_group(required=True)
    grp.add_argument("--p", type=int)
    grp.add_argument("--real", action="store_true")
    sp.set_defaults(func=cmd_perfect)

    sp = sub.add_parser("fpscan", help="image of phi mod p on P^1(F_p)")
    sp.add_argument("--p", type=int, required=True)
    sp.set_defaults(func=cmd_fpscan)

    sp = sub.add_parser("bound", help="Catalan bound on classes of degree d")
    sp.add_argument("--d", type=int, required=True)
    sp.set_defaults(func=cmd_bound)
    return ap


def _emit(records, as_json, stream, command):
    if as_json:
        stream.write(json.dumps({"command": command, "results": [
            {k: _text(v) for k, v in r.items()} for r in records]}) + "\n")
    else:
        for r in records:
            stream.write(format_record(r) + "\n")


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    # argparse would read "-3/5" as an option flag
    argv = [" " + a if _NEG_NUMBER.match(a) else a for a in argv]
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    as_json = args.json
    try:
        records = args.func(args)
    except InvariantViolation as exc:
        _emit([{"error": "InvariantViolation", "message": str(exc)}], as_json, stderr, args.command)
        return 2
    except USER_ERRORS as exc:
        _emit([{"error": type(exc).__name__, "message": str(exc)}], as_json, stderr, args.command)
        return 1
    _emit(records, as_json, stdout, args.command)
    return 0


def main():
    sys.exit(run())
