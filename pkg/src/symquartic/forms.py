"""Symmetric quartic forms f = w4 + a*w3 + b*w2 + c*w1 in three variables."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import TYPE_CHECKING, Optional

from .exactmath import MultiPoly, UniPoly, X, univariate_nonneg

if TYPE_CHECKING:
    from .certificates import Certificate


class Domain(str, enum.Enum):
    REALS = "real"
    NONNEG = "nonneg"

    @classmethod
    def parse(cls, value) -> "Domain":
        if isinstance(value, Domain):
            return value
        aliases = {"real": cls.REALS, "reals": cls.REALS,
                   "nonneg": cls.NONNEG, "orthant": cls.NONNEG, "nonnegative": cls.NONNEG}
        try:
            return aliases[str(value).lower()]
        except KeyError:
            raise ValueError(f"unknown domain {value!r}") from None

    def contains(self, other: "Domain") -> bool:
        """True when this domain is a superset of ``other``."""
        return self is Domain.REALS or other is Domain.NONNEG


@lru_cache(maxsize=None)
def w_basis() -> dict[str, MultiPoly]:
    """Expanded generators w4, w3, w2, w1."""
    x, y, z = (MultiPoly.var(i) for i in range(3))
    w4 = x**4 + y**4 + z**4
    w3 = (x**3 * y + y**3 * z + z**3 * x) + (x * y**3 + y * z**3 + z * x**3)
    w2 = x**2 * y**2 + y**2 * z**2 + z**2 * x**2
    w1 = x * y * z * (x + y + z)
    return {"w4": w4, "w3": w3, "w2": w2, "w1": w1}


def w_combination(c4, c3, c2, c1) -> MultiPoly:
    """c4*w4 + c3*w3 + c2*w2 + c1*w1; coefficients may live in an extension field."""
    w = w_basis()
    out = MultiPoly()
    for coef, name in ((c4, "w4"), (c3, "w3"), (c2, "w2"), (c1, "w1")):
        if isinstance(coef, int):
            coef = Fraction(coef)
        if coef:
            out = out + w[name] * coef
    return out


@dataclass(frozen=True)
class QuarticForm:
    a: Fraction
    b: Fraction
    c: Fraction
    domain: Domain = Domain.REALS

    def __post_init__(self):
        for name in ("a", "b", "c"):
            v = getattr(self, name)
            if isinstance(v, float):
                raise TypeError("coefficients must be exact (int, Fraction, or str)")
            object.__setattr__(self, name, Fraction(v))
        object.__setattr__(self, "domain", Domain.parse(self.domain))

    def with_domain(self, domain) -> "QuarticForm":
        return QuarticForm(self.a, self.b, self.c, Domain.parse(domain))

    def __str__(self):
        return f"w4 + ({self.a})w3 + ({self.b})w2 + ({self.c})w1 on {self.domain.value}"


def expand(form: QuarticForm) -> MultiPoly:
    return w_combination(1, form.a, form.b, form.c)


def evaluate(form: QuarticForm, x, y, z):
    """Exact value of f at a point; works for any numeric type, evaluated directly from the w-basis."""
    w4 = x**4 + y**4 + z**4
    w3 = x**3 * y + y**3 * z + z**3 * x + x * y**3 + y * z**3 + z * x**3
    w2 = x**2 * y**2 + y**2 * z**2 + z**2 * x**2
    w1 = x * y * z * (x + y + z)
    return w4 + form.a * w3 + form.b * w2 + form.c * w1


@lru_cache(maxsize=None)
def _restricted_basis(edge: bool) -> tuple[UniPoly, ...]:
    one = UniPoly.const(1)
    third = UniPoly() if edge else one
    w = w_basis()
    return tuple(w[name].eval(X, one, third) for name in ("w4", "w3", "w2", "w1"))


def _restrict(form: QuarticForm, edge: bool) -> UniPoly:
    r4, r3, r2, r1 = _restricted_basis(edge)
    return r4 + r3 * form.a + r2 * form.b + r1 * form.c


def restrict_diag(form: QuarticForm) -> UniPoly:
    """f(x, 1, 1) as a polynomial in x."""
    return _restrict(form, edge=False)


def restrict_edge(form: QuarticForm) -> UniPoly:
    """f(x, 1, 0) as a polynomial in x."""
    return _restrict(form, edge=True)


@dataclass
class Decision:
    holds: bool
    form: QuarticForm
    counterexample: Optional[tuple[Fraction, Fraction, Fraction]] = None
    value: Optional[Fraction] = None
    certificate: Optional["Certificate"] = None
    certificate_requested: bool = field(default=False, repr=False)

    def __bool__(self):
        return self.holds

    @property
    def certificate_unavailable(self) -> bool:
        return self.holds and self.certificate_requested and self.certificate is None


def decide(form: QuarticForm, certify: bool = True) -> Decision:
    """Decide f >= 0 on the form's domain.

    Over the reals f >= 0 iff f(x,1,1) >= 0 for every real x; on the orthant iff
    f(x,1,0) >= 0 and f(x,1,1) >= 0 for every x >= 0.  A failing verdict carries
    an exact rational point with negative value.
    """
    one = Fraction(1)
    if evaluate(form, one, one, one) < 0:
        return Decision(False, form, (one, one, one), evaluate(form, one, one, one))
    if form.domain is Domain.REALS:
        checks = [(restrict_diag(form), "reals", False)]
    else:
        checks = [(restrict_edge(form), "nonneg", True), (restrict_diag(form), "nonneg", False)]
    for poly, dom, edge in checks:
        res = univariate_nonneg(poly, dom)
        if not res.holds:
            x0 = res.witness
            point = (x0, one, Fraction(0)) if edge else (x0, one, one)
            value = evaluate(form, *point)
            assert value < 0, "witness must be exactly negative"
            return Decision(False, form, point, value)
    decision = Decision(True, form, certificate_requested=certify)
    if certify:
        from .certificates import certify as build_certificate

        decision.certificate = build_certificate(form)
    return decision
