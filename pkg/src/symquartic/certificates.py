"""Positivity certificates: conic combinations of squares and catalogued nonnegative facts.

A certificate is checked by exact expansion.  When the parameter t is
irrational, every scalar lives in Q(t) and the residual is tested for zero at
the root (see :class:`symquartic.exactmath.AlgElem`).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

import numpy as np

from .exactmath import AlgebraicNumber, AlgElem, MultiPoly, UniPoly, scalar_sign
from .forms import Domain, QuarticForm, expand, w_basis
from .frontier import (
    HALF,
    OutOfRange,
    TValue,
    as_field_value,
    b_range_nonneg,
    case_intervals,
    invert_b,
    invert_c,
    param_point,
)

FORMAT = "symquartic-certificate"
VERSION = 1

UV_IDENTITY = "UVIdentity"
XYZ_IDENTITY = "XYZIdentity"
SCHUR_CONIC = "SchurConic"
THEOREM2_COMBO = "Theorem2Combo"
KINDS = (UV_IDENTITY, XYZ_IDENTITY, SCHUR_CONIC, THEOREM2_COMBO)

_x, _y, _z = (MultiPoly.var(i) for i in range(3))


class CertificateError(ValueError):
    """Preconditions of a certificate construction are not met."""


class CertificateFormatError(ValueError):
    """A serialized certificate is malformed."""


@dataclass(frozen=True)
class SquareCombo:
    terms: tuple[tuple[object, MultiPoly], ...]

    def expand(self) -> MultiPoly:
        out = MultiPoly()
        for coef, base in self.terms:
            out = out + base * base * coef
        return out

    def nonnegative_coefficients(self) -> bool:
        return all(scalar_sign(c) >= 0 for c, _ in self.terms)


@dataclass(frozen=True)
class BaseFact:
    name: str
    polynomial: MultiPoly
    validity: Domain
    witness: Optional[SquareCombo] = None
    spot_check: Optional[dict] = field(default=None, compare=False)

    @property
    def is_axiom(self) -> bool:
        return self.witness is None


def _pairs():
    return ((_x, _y), (_y, _z), (_z, _x))


def _eval_numpy(poly: MultiPoly, pts: np.ndarray) -> np.ndarray:
    out = np.zeros(len(pts))
    for (i, j, k), c in poly.terms.items():
        out += float(c) * pts[:, 0] ** i * pts[:, 1] ** j * pts[:, 2] ** k
    return out


def _spot_check(poly: MultiPoly, domain: Domain, samples: int = 100_000, seed: int = 0) -> dict:
    rng = np.random.default_rng(seed)
    pts = rng.uniform(-1.0, 1.0, size=(samples, 3))
    if domain is Domain.NONNEG:
        pts = np.abs(pts)
    vals = _eval_numpy(poly, pts)
    return {"samples": samples, "seed": seed, "min": float(vals.min()),
            "negatives": int((vals < -1e-12).sum())}


@lru_cache(maxsize=None)
def _catalog() -> dict[str, BaseFact]:
    w = w_basis()
    w4, w3, w2, w1 = w["w4"], w["w3"], w["w2"], w["w1"]
    R, N = Domain.REALS, Domain.NONNEG
    half, three_q = Fraction(1, 2), Fraction(3, 4)
    one = Fraction(1)
    prods = (_x * _y, _y * _z, _z * _x)
    facts = [
        BaseFact("2w4-w3", w4 * 2 - w3, R, SquareCombo(tuple(
            item for u, v in _pairs()
            for item in ((one, (u - v) * (u + v * half)), (three_q, (u - v) * v))))),
        BaseFact("w4-w2", w4 - w2, R, SquareCombo(tuple(
            (half, u * u - v * v) for u, v in _pairs()))),
        BaseFact("w2", w2, R, SquareCombo(tuple((one, m) for m in prods))),
        BaseFact("w2-w1", w2 - w1, R, SquareCombo(tuple(
            (half, prods[i] - prods[(i + 1) % 3]) for i in range(3)))),
        BaseFact("2w2-2w1", (w2 - w1) * 2, R, SquareCombo(tuple(
            (one, prods[i] - prods[(i + 1) % 3]) for i in range(3)))),
        BaseFact("w2+2w1", w2 + w1 * 2, R, SquareCombo(((one, prods[0] + prods[1] + prods[2]),))),
        BaseFact("w1", w1, N),
        BaseFact("w3-2w2", w3 - w2 * 2, N),
        BaseFact("2w2-w1", w2 * 2 - w1, N),
        BaseFact("w4+w1-w3", w4 + w1 - w3, N),
    ]
    out = {}
    for f in facts:
        if f.is_axiom:
            f = BaseFact(f.name, f.polynomial, f.validity, None, _spot_check(f.polynomial, f.validity))
        out[f.name] = f
    return out


def catalog() -> list[BaseFact]:
    return list(_catalog().values())


def fact(name: str) -> BaseFact:
    try:
        return _catalog()[name]
    except KeyError:
        raise KeyError(f"unknown base fact {name!r}") from None


# ---------------------------------------------------------------------------
# certificate objects
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Term:
    multiplier: object
    fact: Optional[str] = None
    square: Optional[MultiPoly] = None

    def polynomial(self) -> MultiPoly:
        if self.fact is not None:
            return fact(self.fact).polynomial
        return self.square * self.square


@dataclass(frozen=True)
class Certificate:
    kind: str
    domain: Domain
    form: QuarticForm
    terms: tuple[Term, ...]
    t: Optional[TValue] = None

    def combination(self) -> MultiPoly:
        out = MultiPoly()
        for term in self.terms:
            out = out + term.polynomial() * term.multiplier
        return out

    def multipliers(self) -> list:
        return [term.multiplier for term in self.terms]

    def to_json(self) -> str:
        return dumps(self)


@dataclass(frozen=True)
class VerifyResult:
    valid: bool
    reason: str = ""

    def __bool__(self):
        return self.valid


def verify(cert: Certificate, form: Optional[QuarticForm] = None) -> VerifyResult:
    """Check signs, fact domains and the exact residual of a certificate."""
    form = cert.form if form is None else form
    if not cert.domain.contains(form.domain):
        return VerifyResult(False, f"certificate domain {cert.domain.value} does not cover "
                                   f"{form.domain.value}")
    for i, term in enumerate(cert.terms):
        if scalar_sign(term.multiplier) < 0:
            return VerifyResult(False, f"negative multiplier in term {i}")
        if term.fact is not None:
            try:
                f = fact(term.fact)
            except KeyError as exc:
                return VerifyResult(False, str(exc))
            if not f.validity.contains(form.domain) or not f.validity.contains(cert.domain):
                return VerifyResult(False, f"fact {term.fact} is valid only on {f.validity.value}")
        elif term.square is None:
            return VerifyResult(False, f"term {i} has neither fact nor square")
    residual = cert.combination() - expand(form)
    if not residual.is_zero():
        return VerifyResult(False, "residual nonzero")
    return VerifyResult(True)


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------


def uv_pair(a) -> tuple[MultiPoly, MultiPoly]:
    """u = (x - y)(x + y + a z), v = (x - z)(x + z + a y)."""
    a = Fraction(a)
    return (_x - _y) * (_x + _y + _z * a), (_x - _z) * (_x + _z + _y * a)


def uv_base(a) -> MultiPoly:
    """w4 + a w3 + (a^2 - 1) w2 - (a^2 + 2a) w1."""
    a = Fraction(a)
    w = w_basis()
    return w["w4"] + w["w3"] * a + w["w2"] * (a * a - 1) - w["w1"] * (a * a + 2 * a)


def uv_squares(a) -> SquareCombo:
    """u^2 + v^2 - uv written as (u - v/2)^2 + 3/4 v^2."""
    u, v = uv_pair(a)
    return SquareCombo(((Fraction(1), u - v * HALF), (Fraction(3, 4), v)))


def uv_cyclic_squares(a) -> SquareCombo:
    """The same base as 1/2 * sum over cyclic pairs of (x - y)^2 (x + y + a z)^2."""
    a = Fraction(a)
    return SquareCombo(tuple(
        (HALF, (p - q) * (p + q + r * a))
        for p, q, r in ((_x, _y, _z), (_y, _z, _x), (_z, _x, _y))))


def _combo_terms(combo: SquareCombo) -> list[Term]:
    return [Term(c, square=base) for c, base in combo.terms]


def _form(a, b, c, domain) -> QuarticForm:
    return QuarticForm(Fraction(a), Fraction(b), Fraction(c), Domain.parse(domain))


def cert_theorem1(a, b, c, domain=Domain.REALS) -> Certificate:
    """Base u^2 + v^2 - uv plus nonnegative slack.

    Over the reals the slack is (2a+b+c+1) w2 + (-c-a^2-2a)(w2 - w1), needing
    c <= -a^2 - 2a and b >= -2a - c - 1.  On the orthant a positive
    c + a^2 + 2a may instead be carried by w1 when b >= a^2 - 1.
    """
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    domain = Domain.parse(domain)
    gamma = c + a * a + 2 * a
    beta = b - (a * a - 1)
    terms = _combo_terms(uv_squares(a))
    if gamma <= 0:
        if beta + gamma < 0:
            raise CertificateError("needs b >= -2a - c - 1")
        terms += [Term(beta + gamma, fact="w2"), Term(-gamma, fact="w2-w1")]
    else:
        if domain is Domain.REALS:
            raise CertificateError("needs c <= -a^2 - 2a over the reals")
        if beta < 0:
            raise CertificateError("needs b >= a^2 - 1 when c > -a^2 - 2a")
        terms += [Term(beta, fact="w2"), Term(gamma, fact="w1")]
    return Certificate(UV_IDENTITY, domain, _form(a, b, c, domain), tuple(terms))


def cert_theorem2(b, c) -> Certificate:
    """a = -1/2: base at c = 3/4 plus 1/2 (c - 3/4)(w2 + 2 w1) + (b - c/2 + 9/8) w2."""
    b, c = Fraction(b), Fraction(c)
    a = -HALF
    if c <= Fraction(3, 4):
        return cert_theorem1(a, b, c)
    slack = b - c / 2 + Fraction(9, 8)
    if slack < 0:
        raise CertificateError("needs b >= c/2 - 9/8")
    terms = _combo_terms(uv_squares(a)) + [
        Term((c - Fraction(3, 4)) / 2, fact="w2+2w1"),
        Term(slack, fact="w2"),
    ]
    return Certificate(THEOREM2_COMBO, Domain.REALS, _form(a, b, c, Domain.REALS), tuple(terms))


def xyz_polys(p, q) -> tuple[MultiPoly, MultiPoly, MultiPoly]:
    """X = x^2 + p(xy + xz) + q yz and its cyclic images."""
    def one(u, v, w):
        return u * u + (u * v + u * w) * p + v * w * q
    return one(_x, _y, _z), one(_y, _z, _x), one(_z, _x, _y)


def cert_xyz(a, t: TValue, b, c, domain=Domain.REALS) -> Certificate:
    """X^2 + Y^2 + Z^2 + k(XY + YZ + ZX) split as
    (k+1)/3 (X+Y+Z)^2 + (2-k)/6 [(X-Y)^2 + (Y-Z)^2 + (Z-X)^2],
    plus (b - b(t)) w2, and on the orthant (c - c(t)) w1.
    """
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    domain = Domain.parse(domain)
    if not isinstance(t, AlgebraicNumber):
        t = Fraction(t)
        if t == -HALF:
            raise CertificateError("t = -1/2 is a pole")
    try:
        cases = case_intervals(a, "real")
    except OutOfRange as exc:
        raise CertificateError(str(exc)) from None
    if not cases.contains(t):
        raise CertificateError(f"t is outside the admissible intervals for a = {a}")
    pp = param_point(a, t)
    terms: list[Term] = []
    if pp.k is None:
        # only at a = -2, t = 1: 2 f = sum of fourth powers of differences
        for u, v in _pairs():
            d = u - v
            terms.append(Term(HALF, square=d * d))
    else:
        k = pp.k
        if scalar_sign(k + 1) < 0 or scalar_sign(k - 2) > 0:
            raise AssertionError("cross weight outside [-1, 2] on an admissible interval")
        X_, Y_, Z_ = xyz_polys(pp.p, pp.q)
        m_sum = (k + 1) / 3
        m_diff = (2 - k) / 6
        if m_sum:
            terms.append(Term(m_sum, square=X_ + Y_ + Z_))
        if m_diff:
            terms += [Term(m_diff, square=X_ - Y_), Term(m_diff, square=Y_ - Z_),
                      Term(m_diff, square=Z_ - X_)]
    slack_b = b - pp.bt
    slack_c = c - pp.ct
    if scalar_sign(slack_b) < 0:
        raise CertificateError("needs b >= b(t)")
    if domain is Domain.REALS and scalar_sign(slack_c) != 0:
        raise CertificateError("over the reals c must equal c(t)")
    if scalar_sign(slack_c) < 0:
        raise CertificateError("needs c >= c(t)")
    if slack_b:
        terms.append(Term(slack_b, fact="w2"))
    if slack_c and scalar_sign(slack_c) > 0:
        terms.append(Term(slack_c, fact="w1"))
    return Certificate(XYZ_IDENTITY, domain, _form(a, b, c, domain), tuple(terms), t)


def cert_schur_nonneg(a, b, c) -> Certificate:
    """Schur + (a+1)(w3 - 2w2) + (2a+2+b)(w2 - w1) + (2a+b+c+1) w1 on the orthant."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    mults = (Fraction(1), a + 1, 2 * a + 2 + b, 2 * a + b + c + 1)
    if any(m < 0 for m in mults):
        raise CertificateError("needs a >= -1, b >= -2(a+1), c >= -2a - b - 1")
    names = ("w4+w1-w3", "w3-2w2", "w2-w1", "w1")
    terms = tuple(Term(m, fact=n) for m, n in zip(mults, names))
    return Certificate(SCHUR_CONIC, Domain.NONNEG, _form(a, b, c, Domain.NONNEG), terms)


def certify(form: QuarticForm) -> Optional[Certificate]:
    """Certificate for a form already known to be nonnegative; None outside the covered regions."""
    a, b, c = form.a, form.b, form.c
    try:
        if form.domain is Domain.REALS:
            if c <= -a * a - 2 * a:
                return cert_theorem1(a, b, c)
            if a == -HALF:
                return cert_theorem2(b, c)
            return cert_xyz(a, invert_c(a, c), b, c)
        if a >= -1:
            return cert_schur_nonneg(a, b, c)
        lower, upper = b_range_nonneg(a)
        if b >= upper:
            return cert_theorem1(a, b, c, Domain.NONNEG)
        if b >= lower:
            return cert_xyz(a, invert_b(a, b), b, c, Domain.NONNEG)
    except (CertificateError, OutOfRange):
        return None
    return None


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def _scalar_out(s) -> Union[str, dict]:
    if isinstance(s, AlgElem):
        return {"t_poly": [str(c) for c in s.rep.coeffs]}
    return str(Fraction(s))


def _poly_out(p: MultiPoly) -> list:
    return [[list(e), _scalar_out(c)] for e, c in sorted(p.terms.items(), reverse=True)]


def _t_out(t):
    if t is None:
        return None
    if isinstance(t, AlgebraicNumber):
        if t.is_rational:
            return str(t.lo)
        return {"defining": [str(c) for c in t.defining.coeffs],
                "interval": [str(t.lo), str(t.hi)]}
    return str(t)


def to_dict(cert: Certificate) -> dict:
    terms = []
    for term in cert.terms:
        item = {"multiplier": _scalar_out(term.multiplier)}
        if term.fact is not None:
            item["fact"] = term.fact
        else:
            item["square"] = _poly_out(term.square)
        terms.append(item)
    return {
        "format": FORMAT,
        "version": VERSION,
        "kind": cert.kind,
        "domain": cert.domain.value,
        "form": {"a": str(cert.form.a), "b": str(cert.form.b), "c": str(cert.form.c)},
        "t": _t_out(cert.t),
        "terms": terms,
    }


def dumps(cert: Certificate) -> str:
    return json.dumps(to_dict(cert), sort_keys=True, indent=2)


def _frac(s) -> Fraction:
    if not isinstance(s, (str, int)) or isinstance(s, bool):
        raise CertificateFormatError(f"expected an exact scalar string, got {s!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise CertificateFormatError(f"bad scalar {s!r}") from exc


def _scalar_in(s, root: Optional[AlgebraicNumber]):
    if isinstance(s, dict):
        if root is None:
            raise CertificateFormatError("t_poly scalar without an algebraic t")
        coeffs = s.get("t_poly")
        if not isinstance(coeffs, list):
            raise CertificateFormatError("t_poly must be a list")
        return AlgElem(UniPoly([_frac(c) for c in coeffs]), root)
    return _frac(s)


def from_dict(data: dict) -> Certificate:
    try:
        if data.get("format") != FORMAT:
            raise CertificateFormatError("not a certificate document")
        if data.get("version") != VERSION:
            raise CertificateFormatError(f"unsupported version {data.get('version')!r}")
        kind = data["kind"]
        if kind not in KINDS:
            raise CertificateFormatError(f"unknown kind {kind!r}")
        domain = Domain.parse(data["domain"])
        f = data["form"]
        form = QuarticForm(_frac(f["a"]), _frac(f["b"]), _frac(f["c"]), domain)
        t_raw = data.get("t")
        root = None
        if t_raw is None:
            t = None
        elif isinstance(t_raw, dict):
            defining = UniPoly([_frac(c) for c in t_raw["defining"]])
            lo, hi = (_frac(v) for v in t_raw["interval"])
            t = root = AlgebraicNumber(defining, lo, hi)
        else:
            t = _frac(t_raw)
        terms = []
        for item in data["terms"]:
            mult = _scalar_in(item["multiplier"], root)
            if "fact" in item:
                terms.append(Term(mult, fact=str(item["fact"])))
            else:
                monos = {}
                for exps, coef in item["square"]:
                    if not (isinstance(exps, list) and len(exps) == 3
                            and all(isinstance(e, int) and e >= 0 for e in exps)):
                        raise CertificateFormatError(f"bad exponent {exps!r}")
                    monos[tuple(exps)] = _scalar_in(coef, root)
                terms.append(Term(mult, square=MultiPoly(monos)))
    except CertificateFormatError:
        raise
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise CertificateFormatError(f"malformed certificate: {exc}") from exc
    return Certificate(kind, domain, form, tuple(terms), t)


def loads(text: str) -> Certificate:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CertificateFormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise CertificateFormatError("certificate must be a JSON object")
    return from_dict(data)
