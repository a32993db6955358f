"""Command-line front end.

Every command prints a single JSON object on stdout.  Exact scalars are
strings ("p/q"); decimal approximations live in ``*_approx`` fields.
"""

from __future__ import annotations

import argparse
import json
import sys
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Optional, Sequence

from . import certificates as certs
from .exactmath import AlgebraicNumber, AlgElem
from .forms import Domain, QuarticForm, decide
from .frontier import (DEFAULT_EPS, Infeasible, OutOfRange, bmin_real, case_membership,
                       cmin_nonneg, param_point)
from .oracle import find_counterexample, numeric_min

SCHEMA = "symquartic-cli/1"

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def exact(text: str) -> Fraction:
    """Parse "p/q", integers and decimals exactly; "2.09" becomes 209/100."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact scalar: {text!r}") from None


def positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def domain_arg(text: str) -> Domain:
    try:
        return Domain.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def decimal_str(q: Fraction, digits: int = 20) -> str:
    with localcontext() as ctx:
        ctx.prec = digits + 10
        d = Decimal(q.numerator) / Decimal(q.denominator)
        return format(d.quantize(Decimal(1).scaleb(-digits)).normalize(), "f")


def _digits(eps: Fraction) -> int:
    d = 0
    while Fraction(1, 10**d) > eps:
        d += 1
    return d + 2


def scalar(v) -> Optional[str]:
    if v is None:
        return None
    if isinstance(v, AlgebraicNumber) and v.is_rational:
        return str(v.lo)
    if isinstance(v, (AlgebraicNumber, AlgElem)):
        return None
    return str(Fraction(v))


def approx(v, eps: Fraction = DEFAULT_EPS) -> Optional[str]:
    if v is None:
        return None
    if isinstance(v, (AlgebraicNumber, AlgElem)):
        return decimal_str(v.approx(eps), _digits(eps))
    return decimal_str(Fraction(v), _digits(eps))


def algebraic(v) -> object:
    """Exact description: a rational string or {defining, interval}."""
    if isinstance(v, AlgebraicNumber) and not v.is_rational:
        return {"defining": [str(c) for c in v.defining.coeffs],
                "interval": [str(v.lo), str(v.hi)]}
    return scalar(v)


def _envelope(command: str, **inputs) -> dict:
    return {"schema": SCHEMA, "command": command,
            "input": {k: (str(v) if isinstance(v, Fraction) else v) for k, v in inputs.items()}}


def _form(args) -> QuarticForm:
    return QuarticForm(args.a, args.b, args.c, args.domain)


def _emit(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def cmd_decide(args) -> int:
    form = _form(args)
    out = _envelope("decide", a=form.a, b=form.b, c=form.c, domain=form.domain.value,
                    certify=args.certify)
    res = decide(form, certify=args.certify)
    out["holds"] = res.holds
    if res.holds:
        if args.certify:
            if res.certificate is None:
                out["certificate_unavailable"] = True
            else:
                out["certificate"] = certs.to_dict(res.certificate)
    else:
        out["counterexample"] = [str(v) for v in res.counterexample]
        out["value"] = str(res.value)
    _emit(out)
    return EXIT_OK if res.holds else EXIT_FAIL


def _bound_payload(out: dict, res, eps: Fraction) -> None:
    out["kind"] = res.kind
    out["rule"] = res.rule
    out["value"] = algebraic(res.value)
    out["value_approx"] = approx(res.value, eps)
    out["defining_polynomial"] = [str(c) for c in res.defining.coeffs]
    if res.t is not None:
        out["t"] = algebraic(res.t)
        out["t_approx"] = approx(res.t, eps)
    if res.equality_point is not None:
        out["equality_point"] = [algebraic(v) for v in res.equality_point]
        out["equality_point_approx"] = [approx(v, eps) for v in res.equality_point]


def cmd_bmin(args) -> int:
    out = _envelope("bmin", a=args.a, c=args.c, eps=args.eps)
    _bound_payload(out, bmin_real(args.a, args.c, args.eps), args.eps)
    _emit(out)
    return EXIT_OK


def cmd_cmin(args) -> int:
    out = _envelope("cmin", a=args.a, b=args.b, eps=args.eps)
    res = cmin_nonneg(args.a, args.b, args.eps)
    if isinstance(res, Infeasible):
        out["infeasible"] = True
        out["reason"] = res.reason
        out["b_lower"] = str(res.b_lower)
    else:
        out["infeasible"] = False
        _bound_payload(out, res, args.eps)
    _emit(out)
    return EXIT_OK


def cmd_param(args) -> int:
    out = _envelope("param", a=args.a, t=args.t)
    pt = param_point(args.a, args.t)
    for name in ("bt", "ct", "p", "q", "k"):
        key = name[0] if name in ("bt", "ct") else name
        v = getattr(pt, name)
        out[key] = scalar(v)
        out[key + "_approx"] = approx(v)
    out["k_irrelevant"] = pt.k_irrelevant
    out["cases"] = case_membership(args.a, args.t)
    _emit(out)
    return EXIT_OK


def cmd_certify(args) -> int:
    form = _form(args)
    out = _envelope("certify", a=form.a, b=form.b, c=form.c, domain=form.domain.value,
                    out=args.out)
    res = decide(form, certify=True)
    out["holds"] = res.holds
    if not res.holds:
        out["counterexample"] = [str(v) for v in res.counterexample]
        _emit(out)
        return EXIT_FAIL
    if res.certificate is None:
        out["certificate_unavailable"] = True
        _emit(out)
        return EXIT_FAIL
    text = certs.dumps(res.certificate)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    out["kind"] = res.certificate.kind
    out["certificate"] = json.loads(text)
    _emit(out)
    return EXIT_OK


def cmd_verify(args) -> int:
    out = _envelope("verify", cert=args.cert)
    try:
        with open(args.cert, encoding="utf-8") as fh:
            cert = certs.loads(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {args.cert}: {exc}") from exc
    except certs.CertificateFormatError as exc:
        raise UsageError(f"malformed certificate: {exc}") from exc
    res = certs.verify(cert)
    out["status"] = "Valid" if res.valid else "Invalid"
    out["kind"] = cert.kind
    out["form"] = {"a": str(cert.form.a), "b": str(cert.form.b), "c": str(cert.form.c),
                   "domain": cert.domain.value}
    if not res.valid:
        out["reason"] = res.reason
    _emit(out)
    return EXIT_OK if res.valid else EXIT_FAIL


def cmd_oracle(args) -> int:
    form = _form(args)
    out = _envelope("oracle", a=form.a, b=form.b, c=form.c, domain=form.domain.value,
                    budget=args.budget, seed=args.seed)
    rep = numeric_min(form, args.budget, args.seed)
    out.update(min_estimate=rep.min_estimate, argmin=list(rep.argmin), samples=rep.samples,
               verdict_hint=rep.verdict_hint, tolerance=rep.tolerance)
    pt = find_counterexample(form, args.budget, args.seed, report=rep)
    out["counterexample"] = None if pt is None else [str(v) for v in pt]
    _emit(out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="symquartic",
                                     description="Nonnegativity of symmetric ternary quartic forms.")
    sub = parser.add_subparsers(dest="command", required=True)

    def form_args(p, domain=True):
        p.add_argument("--a", type=exact, required=True)
        p.add_argument("--b", type=exact, required=True)
        p.add_argument("--c", type=exact, required=True)
        if domain:
            p.add_argument("--domain", type=domain_arg, default=Domain.REALS,
                           help="real (default) or nonneg")

    p = sub.add_parser("decide", help="decide f >= 0 exactly")
    form_args(p)
    p.add_argument("--certify", action="store_true", help="attach a certificate when f >= 0")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("bmin", help="smallest b for f >= 0 over the reals")
    p.add_argument("--a", type=exact, required=True)
    p.add_argument("--c", type=exact, required=True)
    p.add_argument("--eps", type=exact, default=DEFAULT_EPS)
    p.set_defaults(func=cmd_bmin)

    p = sub.add_parser("cmin", help="smallest c for f >= 0 on the nonnegative orthant")
    p.add_argument("--a", type=exact, required=True)
    p.add_argument("--b", type=exact, required=True)
    p.add_argument("--eps", type=exact, default=DEFAULT_EPS)
    p.set_defaults(func=cmd_cmin)

    p = sub.add_parser("param", help="evaluate the frontier parametrization at t")
    p.add_argument("--a", type=exact, required=True)
    p.add_argument("--t", type=exact, required=True)
    p.set_defaults(func=cmd_param)

    p = sub.add_parser("certify", help="write a nonnegativity certificate")
    form_args(p)
    p.add_argument("--out", help="certificate file to write")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verify", help="re-check a certificate file")
    p.add_argument("--cert", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="numeric minimum and falsification search")
    form_args(p)
    p.add_argument("--budget", type=positive_int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_oracle)
    return parser


def _glue_negatives(argv: Sequence[str]) -> list[str]:
    """Rewrite ``--t -1/2`` as ``--t=-1/2``; argparse would read the value as a flag."""
    out: list[str] = []
    for tok in argv:
        if (out and out[-1].startswith("--") and "=" not in out[-1]
                and len(tok) > 1 and tok[0] == "-" and (tok[1].isdigit() or tok[1] == ".")):
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_glue_negatives(sys.argv[1:] if argv is None else argv))
    if getattr(args, "eps", 1) <= 0:
        parser.error("--eps must be positive")
    try:
        return args.func(args)
    except (UsageError, OutOfRange, ZeroDivisionError, ValueError) as exc:
        print(f"symquartic {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
