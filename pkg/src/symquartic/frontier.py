"""Optimal coefficient thresholds via the rational parametrization t -> (b(t), c(t)).

For each admissible t the form w4 + a*w3 + b(t)*w2 + c(t)*w1 vanishes at
(t, 1, 1) and all its permutations.  Inverting c (reals) or b (orthant) over
the right t-intervals yields the exact thresholds b_min(a, c) and c_min(a, b).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .exactmath import (
    AlgebraicNumber,
    AlgElem,
    MultiPoly,
    UniPoly,
    X,
    isolate_roots,
    minimal_root,
    resultant,
    sign,
)

TValue = Union[Fraction, AlgebraicNumber]
HALF = Fraction(1, 2)
DEFAULT_EPS = Fraction(1, 10**12)


class OutOfRange(ValueError):
    """Parameter outside every admissible case."""


# ---------------------------------------------------------------------------
# parametrization
# ---------------------------------------------------------------------------


def c_numerator(a) -> UniPoly:
    a = Fraction(a)
    return UniPoly([-a, 3 * a + 4, 2 * a + 4, 2 * (a + 1), 2])


def b_numerator(a) -> UniPoly:
    a = Fraction(a)
    return UniPoly([2 * a + 2, 4 * (a + 1), 5 * a + 4, a + 4, 1])


def _check_pole(t) -> None:
    if isinstance(t, (int, Fraction)) and Fraction(t) == -HALF:
        raise ZeroDivisionError("t = -1/2 is a pole of the parametrization")


def c_of_t(a, t):
    """c(t) = (2t^4 + 2(a+1)t^3 + (2a+4)t^2 + (3a+4)t - a) / (2t + 1)."""
    _check_pole(t)
    a = Fraction(a)
    num = (((2 * t + 2 * (a + 1)) * t + (2 * a + 4)) * t + (3 * a + 4)) * t - a
    return num / (2 * t + 1)


def b_of_t(a, t):
    """b(t) = -(t^4 + (a+4)t^3 + (5a+4)t^2 + 4(a+1)t + 2a + 2) / (2t + 1)."""
    _check_pole(t)
    a = Fraction(a)
    num = (((t + (a + 4)) * t + (5 * a + 4)) * t + 4 * (a + 1)) * t + (2 * a + 2)
    return -num / (2 * t + 1)


def pqk(a, t):
    """Coefficients of X = x^2 + p(xy + xz) + q*yz and the cross weight k.

    At t = 1 the cross terms XY + YZ + ZX vanish identically, so k is
    irrelevant and returned as None.
    """
    _check_pole(t)
    a = Fraction(a)
    d = 2 * t + 1
    p = -(t * t + t + 1) / d
    q = (t * t + 2 * t) / d
    if isinstance(t, (int, Fraction)) and t == 1:
        return p, q, None
    k = (2 * t * t + 2 * (a + 1) * t + a + 2) / (t - 1)
    return p, q, k


@dataclass(frozen=True)
class ParamPoint:
    a: Fraction
    t: object
    bt: object
    ct: object
    p: object
    q: object
    k: object  # None at t == 1

    @property
    def k_irrelevant(self) -> bool:
        return self.k is None


def as_field_value(t: TValue):
    """Fractions pass through; an irrational algebraic t becomes the generator of Q(t)."""
    if isinstance(t, AlgebraicNumber):
        if t.is_rational:
            return t.lo
        return AlgElem.generator(t)
    return Fraction(t)


def param_point(a, t: TValue) -> ParamPoint:
    a = Fraction(a)
    tv = as_field_value(t)
    p, q, k = pqk(a, tv)
    return ParamPoint(a, t, b_of_t(a, tv), c_of_t(a, tv), p, q, k)


# ---------------------------------------------------------------------------
# branch points and case intervals
# ---------------------------------------------------------------------------


def _rational_sqrt(r: Fraction) -> Optional[Fraction]:
    if r < 0:
        return None
    n, d = r.numerator, r.denominator
    sn, sd = math.isqrt(n), math.isqrt(d)
    if sn * sn == n and sd * sd == d:
        return Fraction(sn, sd)
    return None


def branch_polynomial(a) -> UniPoly:
    """2t^2 + 2at + (a + 4); its roots are the branch points."""
    a = Fraction(a)
    return UniPoly([a + 4, 2 * a, 2])


@dataclass(frozen=True)
class BranchPoints:
    t1: TValue
    t2: TValue


def branch_points(a) -> Optional[BranchPoints]:
    """t1,2 = (-a -+ sqrt((a+2)(a-4))) / 2, or None when the radicand is negative."""
    a = Fraction(a)
    disc = (a + 2) * (a - 4)
    if disc < 0:
        return None
    root = _rational_sqrt(disc)
    if root is not None:
        return BranchPoints((-a - root) / 2, (-a + root) / 2)
    poly = branch_polynomial(a)
    (l1, h1), (l2, h2) = isolate_roots(poly)
    return BranchPoints(AlgebraicNumber(poly, l1, h1), AlgebraicNumber(poly, l2, h2))


def _cmp(u: TValue, v: TValue) -> int:
    if isinstance(u, AlgebraicNumber):
        return u.compare(v)
    if isinstance(v, AlgebraicNumber):
        return -v.compare(u)
    return sign(Fraction(u) - Fraction(v))


@dataclass(frozen=True)
class TInterval:
    lo: TValue
    hi: TValue
    lo_closed: bool = True
    hi_closed: bool = True

    def contains(self, t: TValue) -> bool:
        lo = _cmp(t, self.lo)
        hi = _cmp(t, self.hi)
        return (lo > 0 or (lo == 0 and self.lo_closed)) and (hi < 0 or (hi == 0 and self.hi_closed))

    def rational_hull(self) -> tuple[Fraction, Fraction]:
        lo = self.lo.lo if isinstance(self.lo, AlgebraicNumber) else Fraction(self.lo)
        hi = self.hi.hi if isinstance(self.hi, AlgebraicNumber) else Fraction(self.hi)
        return lo, hi

    def __str__(self):
        def fmt(v):
            return str(v) if not isinstance(v, AlgebraicNumber) else f"~{float(v):.12g}"
        return f"{'[' if self.lo_closed else '('}{fmt(self.lo)}, {fmt(self.hi)}{']' if self.hi_closed else ')'}"


@dataclass(frozen=True)
class CaseSet:
    label: str
    intervals: tuple[TInterval, ...]

    def contains(self, t: TValue) -> bool:
        return any(iv.contains(t) for iv in self.intervals)


REAL = "real"
NONNEG = "nonneg"


def case_intervals(a, section: str = REAL) -> CaseSet:
    """Admissible t-intervals for the real-variable frontier (``"real"``) or the orthant one.

    real:   R1  -1/2 < a <= 4   [-a-1, -1/2)
            R2  -2 <= a < -1/2  (-1/2, -a-1]
            R3  a > 4           [-a-1, t1] u [t2, -1/2)
            R4  a < -2          (-1/2, t1] u [-a-1, t2]
    nonneg: N1  -2 <= a < -1    [0, -a-1]
            N2  -4 < a < -2     [0, t1] u [-a-1, t2]
            N3  a <= -4         [-a-1, t2]
    """
    a = Fraction(a)
    e = -a - 1
    if section == REAL:
        if a == -HALF:
            raise OutOfRange("a = -1/2 has no parametric frontier")
        if -HALF < a <= 4:
            return CaseSet("R1", (TInterval(e, -HALF, True, False),))
        if -2 <= a < -HALF:
            return CaseSet("R2", (TInterval(-HALF, e, False, True),))
        bp = branch_points(a)
        if a > 4:
            return CaseSet("R3", (TInterval(e, bp.t1), TInterval(bp.t2, -HALF, True, False)))
        return CaseSet("R4", (TInterval(-HALF, bp.t1, False, True), TInterval(e, bp.t2)))
    if section == NONNEG:
        if a >= -1:
            raise OutOfRange("the orthant frontier is parametric only for a < -1")
        if a >= -2:
            return CaseSet("N1", (TInterval(Fraction(0), e),))
        bp = branch_points(a)
        if a > -4:
            return CaseSet("N2", (TInterval(Fraction(0), bp.t1), TInterval(e, bp.t2)))
        return CaseSet("N3", (TInterval(e, bp.t2),))
    raise ValueError(f"unknown section {section!r}")


def case_membership(a, t: TValue) -> dict[str, Optional[str]]:
    """Labels of the real / orthant case sets containing t (None when outside)."""
    out: dict[str, Optional[str]] = {REAL: None, NONNEG: None}
    for section in (REAL, NONNEG):
        try:
            cs = case_intervals(a, section)
        except OutOfRange:
            continue
        if cs.contains(t):
            out[section] = cs.label
    return out


# ---------------------------------------------------------------------------
# inversion
# ---------------------------------------------------------------------------


def _roots_in(poly: UniPoly, cases: CaseSet) -> list[TValue]:
    found: list[TValue] = []
    for iv in cases.intervals:
        lo, hi = iv.rational_hull()
        candidates: list[tuple[Fraction, Fraction]] = []
        for end, closed in ((lo, iv.lo_closed), (hi, iv.hi_closed)):
            if closed and not poly(end):
                candidates.append((end, end))
        candidates.extend(isolate_roots(poly, lo, hi))
        for l, h in candidates:
            t = minimal_root(poly, l, h)
            if iv.contains(t) and not any(_cmp(t, u) == 0 for u in found):
                found.append(t)
    found.sort(key=_SortKey)
    return found


class _SortKey:
    __slots__ = ("v",)

    def __init__(self, v):
        self.v = v

    def __lt__(self, other):
        return _cmp(self.v, other.v) < 0


def invert_c(a, c) -> TValue:
    """The smallest admissible t with c(t) = c (real-variable case sets)."""
    a, c = Fraction(a), Fraction(c)
    if a == -HALF:
        raise OutOfRange("a = -1/2 has no parametric frontier")
    if c < -a * a - 2 * a:
        raise OutOfRange(f"c = {c} is below -a^2 - 2a = {-a * a - 2 * a}")
    poly = c_numerator(a) - UniPoly([c, 2 * c])
    roots = _roots_in(poly, case_intervals(a, REAL))
    if not roots:
        raise AssertionError(f"no admissible t with c(t) = {c} at a = {a}")
    return roots[0]


def b_range_nonneg(a) -> tuple[Fraction, Fraction]:
    """Interval of b covered by the orthant parametrization (a < -1)."""
    a = Fraction(a)
    lower = a * a / 4 + 2 if a <= -4 else -2 * (a + 1)
    return lower, a * a - 1


def invert_b(a, b) -> TValue:
    """The smallest admissible t with b(t) = b (orthant case sets)."""
    a, b = Fraction(a), Fraction(b)
    if a >= -1:
        raise OutOfRange("the orthant frontier is parametric only for a < -1")
    lower, upper = b_range_nonneg(a)
    if not lower <= b <= upper:
        raise OutOfRange(f"b = {b} outside [{lower}, {upper}]")
    poly = b_numerator(a) + UniPoly([b, 2 * b])
    roots = _roots_in(poly, case_intervals(a, NONNEG))
    if not roots:
        raise AssertionError(f"no admissible t with b(t) = {b} at a = {a}")
    return roots[0]


# ---------------------------------------------------------------------------
# thresholds
# ---------------------------------------------------------------------------


CLOSED = "closed_form"
PARAMETRIC = "parametric"


@dataclass(frozen=True)
class BoundResult:
    value: TValue
    kind: str
    approx: Fraction
    defining: UniPoly
    t: Optional[TValue] = None
    rule: str = ""
    equality_point: Optional[tuple] = None

    def __float__(self):
        return float(self.approx)


@dataclass(frozen=True)
class Infeasible:
    reason: str
    b_lower: Fraction

    def __bool__(self):
        return False


def _algebraic_value(t: TValue, elem_of_t, relation) -> TValue:
    """Exact value v = g(t): its defining polynomial comes from Res_t(m(t), relation(t, s)).

    ``relation`` is a bivariate MultiPoly in (t, s) vanishing at (t, v).
    """
    if not isinstance(t, AlgebraicNumber) or t.is_rational:
        tv = t.lo if isinstance(t, AlgebraicNumber) else t
        return elem_of_t(Fraction(tv))
    m = MultiPoly({(i, 0): c for i, c in enumerate(t.defining.coeffs)}, 2)
    res = resultant(m, relation, 0)
    v = elem_of_t(AlgElem.generator(t))
    for l, h in isolate_roots(res):
        if l == h:
            if (v - l).is_zero():
                return l
        elif (v - l).sign() > 0 and (v - h).sign() < 0:
            return minimal_root(res, l, h)
    raise AssertionError("value not found among resultant roots")


def _approx(v: TValue, eps: Fraction, budget: Optional[int] = None) -> Fraction:
    return v.approx(eps, budget) if isinstance(v, AlgebraicNumber) else Fraction(v)


def _defining(v: TValue) -> UniPoly:
    return v.defining if isinstance(v, AlgebraicNumber) else UniPoly([-Fraction(v), 1])


def _closed(value: Fraction, rule: str, point=(1, 1, 1)) -> BoundResult:
    point = tuple(Fraction(x) for x in point) if point else None
    return BoundResult(value, CLOSED, value, _defining(value), None, rule, point)


def bmin_real(a, c, eps=DEFAULT_EPS, budget: Optional[int] = None) -> BoundResult:
    """Smallest b with w4 + a*w3 + b*w2 + c*w1 >= 0 for all real x, y, z."""
    a, c, eps = Fraction(a), Fraction(c), Fraction(eps)
    if c <= -a * a - 2 * a:
        return _closed(-2 * a - c - 1, "b >= -2a - c - 1")
    if a == -HALF:
        v1, v2 = -c, c / 2 - Fraction(9, 8)
        if v1 >= v2:
            return _closed(v1, "b >= max(-c, c/2 - 9/8)")
        return _closed(v2, "b >= max(-c, c/2 - 9/8)", (-HALF, 1, 1))
    t = invert_c(a, c)
    s = MultiPoly.var(1, 2)
    tt = MultiPoly.var(0, 2)
    b_num = MultiPoly({(i, 0): co for i, co in enumerate(b_numerator(a).coeffs)}, 2)
    relation = s * (tt * 2 + 1) + b_num
    value = _algebraic_value(t, lambda tv: b_of_t(a, tv), relation)
    return BoundResult(value, PARAMETRIC, _approx(value, eps, budget), _defining(value), t,
                       "b >= b(t), c(t) = c", (t, Fraction(1), Fraction(1)))


def cmin_nonneg(a, b, eps=DEFAULT_EPS, budget: Optional[int] = None) -> Union[BoundResult, Infeasible]:
    """Smallest c with w4 + a*w3 + b*w2 + c*w1 >= 0 for all x, y, z >= 0."""
    a, b, eps = Fraction(a), Fraction(b), Fraction(eps)
    lower = a * a / 4 + 2 if a <= -4 else -2 * (a + 1)
    if b < lower:
        return Infeasible(f"b must be at least {lower}", lower)
    if a >= -1 or b >= a * a - 1:
        return _closed(-2 * a - b - 1, "c >= -2a - b - 1")
    t = invert_b(a, b)
    s = MultiPoly.var(1, 2)
    tt = MultiPoly.var(0, 2)
    c_num = MultiPoly({(i, 0): co for i, co in enumerate(c_numerator(a).coeffs)}, 2)
    relation = s * (tt * 2 + 1) - c_num
    value = _algebraic_value(t, lambda tv: c_of_t(a, tv), relation)
    return BoundResult(value, PARAMETRIC, _approx(value, eps, budget), _defining(value), t,
                       "c >= c(t), b(t) = b", (t, Fraction(1), Fraction(1)))
