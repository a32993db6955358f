"""Exact arithmetic kernel.

Rationals are :class:`fractions.Fraction`.  On top of them this module provides
dense univariate polynomials, sparse multivariate polynomials, Sturm sequences,
real root isolation, subresultant resultants and real algebraic numbers given
by an integer polynomial plus an isolating interval.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Union

import sympy

Rational = Fraction
Number = Union[int, Fraction]


def as_rational(value) -> Fraction:
    """Convert int, Fraction, or a decimal/fraction string exactly."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a string or Fraction")
    return Fraction(value)


class BudgetExceeded(ArithmeticError):
    """A caller-supplied iteration budget ran out."""


def sign(x) -> int:
    return (x > 0) - (x < 0)


# ---------------------------------------------------------------------------
# univariate polynomials
# ---------------------------------------------------------------------------


class UniPoly:
    """Dense univariate polynomial with Fraction coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def x(cls) -> "UniPoly":
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> "UniPoly":
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"UniPoly({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}" + (f"*{mono}" if mono else "")
            parts.append(("-" if c < 0 else "+", body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for s, body in parts[1:]:
            out += f" {s} {body}"
        return out

    # arithmetic

    def _coerce(self, other) -> Optional["UniPoly"]:
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        return UniPoly([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly([c * other for c in self.coeffs])
        if not isinstance(other, UniPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result, base = UniPoly.const(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(o.coeffs)
        if dq < 0:
            return UniPoly(), self
        quot = [Fraction(0)] * (dq + 1)
        inv = 1 / o.lc
        db = o.degree
        for k in range(dq, -1, -1):
            q = rem[k + db] * inv
            quot[k] = q
            if q:
                for j, b in enumerate(o.coeffs):
                    rem[k + j] -= q * b
        return UniPoly(quot), UniPoly(rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "UniPoly":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    # evaluation and calculus

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval(self, x):
        return self(x)

    def derivative(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            return self
        return self * (1 / self.lc)

    def compose(self, other: "UniPoly") -> "UniPoly":
        acc = UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def primitive_integer(self) -> "UniPoly":
        """Scale to coprime integer coefficients with positive leading coefficient."""
        if not self.coeffs:
            return self
        den = reduce(math.lcm, (c.denominator for c in self.coeffs), 1)
        ints = [int(c * den) for c in self.coeffs]
        g = reduce(math.gcd, ints)
        if ints[-1] < 0:
            g = -g
        return UniPoly([i // g for i in ints])

    def squarefree(self) -> "UniPoly":
        """Squarefree part p / gcd(p, p'), as a primitive integer polynomial."""
        if self.degree <= 0:
            return self
        g = poly_gcd(self, self.derivative())
        return self.exact_div(g).primitive_integer()

    def sign_at(self, x) -> int:
        return sign(self(x))

    def cauchy_bound(self) -> Fraction:
        """Every root r satisfies |r| < bound."""
        lc = abs(self.lc)
        return 1 + max((abs(c) / lc for c in self.coeffs[:-1]), default=Fraction(0))


X = UniPoly.x()


def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd over Q (zero if both are zero)."""
    while q:
        p, q = q, p % q
    return p.monic()


def poly_xgcd(p: UniPoly, q: UniPoly) -> tuple[UniPoly, UniPoly, UniPoly]:
    """Return (g, s, t) with s*p + t*q = g, g monic."""
    r0, r1 = p, q
    s0, s1 = UniPoly.const(1), UniPoly()
    t0, t1 = UniPoly(), UniPoly.const(1)
    while r1:
        quo, rem = divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
        t0, t1 = t1, t0 - quo * t1
    inv = 1 / r0.lc
    return r0 * inv, s0 * inv, t0 * inv


# ---------------------------------------------------------------------------
# Sturm sequences and root isolation
# ---------------------------------------------------------------------------


def sturm_sequence(p: UniPoly) -> list[UniPoly]:
    """Canonical Sturm chain p, p', -rem(...), ...; entries rescaled by positive constants."""
    if not p:
        raise ValueError("Sturm sequence of the zero polynomial")
    seq = [p, p.derivative()]
    while seq[-1]:
        r = -(seq[-2] % seq[-1])
        if not r:
            break
        seq.append(r * (1 / abs(r.lc)))
    if not seq[-1]:
        seq.pop()
    return seq


def _variations(signs: Iterable[int]) -> int:
    count, last = 0, 0
    for s in signs:
        if s:
            if last and s != last:
                count += 1
            last = s
    return count


class _IntChain:
    """Sturm chain with each entry scaled by a positive constant to integer coefficients.

    Signs at a rational n/d come from the homogenized value sum c_i n^i d^(m-i),
    which avoids Fraction arithmetic in the hot loop.
    """

    __slots__ = ("polys",)

    def __init__(self, seq: Sequence[UniPoly]):
        polys = []
        for q in seq:
            den = reduce(math.lcm, (c.denominator for c in q.coeffs), 1)
            ints = [c.numerator * (den // c.denominator) for c in q.coeffs]
            g = reduce(math.gcd, ints) or 1
            polys.append(tuple(i // abs(g) for i in ints))
        self.polys = polys

    def variations_at(self, x: Optional[Fraction], plus_inf: bool = True) -> int:
        if x is None:
            if plus_inf:
                return _variations((p[-1] > 0) - (p[-1] < 0) for p in self.polys)
            return _variations(((p[-1] > 0) - (p[-1] < 0)) * (-1 if (len(p) - 1) % 2 else 1)
                               for p in self.polys)
        n, d = x.numerator, x.denominator
        signs = []
        for p in self.polys:
            m = len(p) - 1
            acc = p[m]
            dp = 1
            for i in range(m - 1, -1, -1):
                dp *= d
                acc = acc * n + p[i] * dp
            signs.append((acc > 0) - (acc < 0))
        return _variations(signs)


def _sign_variations(seq, x: Optional[Fraction], at_plus_inf: bool) -> int:
    if not isinstance(seq, _IntChain):
        seq = _IntChain(seq)
    return seq.variations_at(x, at_plus_inf)


def sturm_root_count(p: UniPoly, lo: Optional[Number] = None, hi: Optional[Number] = None,
                     seq=None) -> int:
    """Number of distinct real roots of p in (lo, hi]; None means an infinite bound."""
    if seq is None:
        seq = _IntChain(sturm_sequence(p))
    elif not isinstance(seq, _IntChain):
        seq = _IntChain(seq)
    lo = None if lo is None else Fraction(lo)
    hi = None if hi is None else Fraction(hi)
    if lo is not None and hi is not None and lo >= hi:
        return 0
    return seq.variations_at(lo, False) - seq.variations_at(hi, True)


def isolate_roots(p: UniPoly, lo: Optional[Number] = None,
                  hi: Optional[Number] = None) -> list[tuple[Fraction, Fraction]]:
    """Isolating intervals for the distinct real roots of p in the open interval (lo, hi).

    Each returned pair (l, h) is either a degenerate interval l == h at an exact
    rational root, or satisfies p(l) != 0 != p(h) with exactly one root in
    [l, h].  The list is sorted and pairwise disjoint.
    """
    if not p:
        raise ValueError("cannot isolate roots of the zero polynomial")
    sq = p.squarefree()
    if sq.degree <= 0:
        return []
    bound = sq.cauchy_bound()
    lo = -bound if lo is None else max(Fraction(lo), -bound)
    hi = bound if hi is None else min(Fraction(hi), bound)
    if lo >= hi:
        return []
    seq = _IntChain(sturm_sequence(sq))

    def open_count(l: Fraction, h: Fraction) -> int:
        return sturm_root_count(sq, l, h, seq) - (1 if not sq(h) else 0)

    out: list[tuple[Fraction, Fraction]] = []
    stack = [(lo, hi, open_count(lo, hi))]
    while stack:
        l, h, n = stack.pop()
        if n == 0:
            continue
        if n == 1 and sq(l) and sq(h):
            out.append((l, h))
            continue
        m = (l + h) / 2
        if not sq(m):
            out.append((m, m))
        left = open_count(l, m)
        stack.append((l, m, left))
        stack.append((m, h, n - left - (0 if sq(m) else 1)))
    out.sort()
    return out


@dataclass(frozen=True)
class NonnegResult:
    holds: bool
    witness: Optional[Fraction] = None
    witness_interval: Optional[tuple[Fraction, Fraction]] = None

    def __bool__(self) -> bool:
        return self.holds


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """Rational with the smallest denominator (then numerator) in the closed interval."""
    if lo > hi:
        lo, hi = hi, lo
    if lo <= 0 <= hi:
        return Fraction(0)
    if hi < 0:
        return -simplest_between(-hi, -lo)
    fl = math.floor(lo)
    if fl == lo:
        return Fraction(fl)
    if fl + 1 <= hi:
        return Fraction(fl + 1)
    # lo, hi share the integer part; recurse on reciprocals of the fractional parts
    inner = simplest_between(1 / (hi - fl), 1 / (lo - fl))
    return fl + 1 / inner


def univariate_nonneg(p: UniPoly, domain: str = "reals") -> NonnegResult:
    """Decide p(x) >= 0 for all real x (``"reals"``) or all x >= 0 (``"nonneg"``).

    One test point is taken in every gap between consecutive distinct roots of
    the squarefree part (and beyond the extreme roots).  On failure the witness
    is the simplest rational in the negative gap that was found.
    """
    if not p:
        return NonnegResult(True)
    if domain not in ("reals", "nonneg"):
        raise ValueError(f"unknown domain {domain!r}")
    nonneg = domain == "nonneg"
    sq = p.squarefree()
    lower = Fraction(0) if nonneg else None
    intervals = isolate_roots(sq, -1, None) if nonneg else isolate_roots(sq)
    if nonneg:
        # roots at or below zero only bound the gap; they are not domain points
        intervals = [(l, h) for l, h in intervals if h > 0 or (l == h == 0)]
    points: list[Fraction] = []
    if not intervals:
        points.append(Fraction(1))
    else:
        first, last = intervals[0], intervals[-1]
        points.append(first[0] - 1)
        points.append(last[1] + 1)
        for (l1, h1), (l2, h2) in zip(intervals, intervals[1:]):
            points.append((h1 + l2) / 2)
        for l, h in intervals:
            if l != h:
                points.extend((l, h))
    if nonneg:
        points = [Fraction(0)] + [x for x in points if x > 0]
    for x in sorted(set(points)):
        if p(x) < 0:
            return _negative_gap(p, intervals, x, lower)
    return NonnegResult(True)


def _negative_gap(p: UniPoly, intervals, x: Fraction,
                  lower: Optional[Fraction]) -> NonnegResult:
    """Bracket the root gap around the negative point x and pick its simplest rational."""
    lo = max((h for l, h in intervals if h <= x), default=None)
    hi = min((l for l, h in intervals if l >= x), default=None)
    if lower is not None:
        lo = lower if lo is None else max(lo, lower)
    lo = x if lo is None else lo
    hi = x if hi is None else hi
    w = simplest_between(lo, hi)
    if p(w) >= 0:
        w = x
    return NonnegResult(False, w, (lo, hi))


# ---------------------------------------------------------------------------
# real algebraic numbers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AlgebraicNumber:
    """The unique root of a squarefree integer polynomial inside [lo, hi]."""

    defining: UniPoly
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        object.__setattr__(self, "defining", self.defining.primitive_integer())
        if self.lo > self.hi:
            raise ValueError("empty isolating interval")
        if self.defining.degree < 1:
            raise ValueError("defining polynomial must be nonconstant")
        if self.root_count() != 1:
            raise ValueError(f"{self.defining} does not have exactly one root in "
                             f"[{self.lo}, {self.hi}]")

    @classmethod
    def from_rational(cls, r: Number) -> "AlgebraicNumber":
        r = Fraction(r)
        return cls(UniPoly((-r, 1)), r, r)

    @classmethod
    def squarefree_root(cls, p: UniPoly, lo: Number, hi: Number) -> "AlgebraicNumber":
        return cls(p.squarefree(), lo, hi)

    def root_count(self) -> int:
        p = self.defining
        if self.lo == self.hi:
            return 1 if not p(self.lo) else 0
        if p.degree != p.squarefree().degree:
            return -1
        return sturm_root_count(p, self.lo, self.hi) + (1 if not p(self.lo) else 0)

    @property
    def is_rational(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def refined(self, eps: Number, max_steps: Optional[int] = None) -> "AlgebraicNumber":
        """Bisect until the interval width is at most 2*eps; intervals are nested.

        ``max_steps`` bounds the number of bisections (``BudgetExceeded`` past it).
        """
        eps = Fraction(eps)
        steps = 0
        p, lo, hi = self.defining, self.lo, self.hi
        if lo == hi:
            return self
        s_lo = sign(p(lo))
        if s_lo == 0:
            return AlgebraicNumber(p, lo, lo)
        if not p(hi):
            return AlgebraicNumber(p, hi, hi)
        while hi - lo > 2 * eps:
            steps += 1
            if max_steps is not None and steps > max_steps:
                raise BudgetExceeded(f"refinement needs more than {max_steps} bisections")
            m = (lo + hi) / 2
            s = sign(p(m))
            if s == 0:
                return AlgebraicNumber(p, m, m)
            if s == s_lo:
                lo = m
            else:
                hi = m
        return AlgebraicNumber(p, lo, hi)

    def approx(self, eps: Number = Fraction(1, 10**12), max_steps: Optional[int] = None) -> Fraction:
        r = self.refined(eps, max_steps)
        return (r.lo + r.hi) / 2

    def __float__(self) -> float:
        return float(self.approx(Fraction(1, 2**60)))

    def sign_of(self, g: UniPoly) -> int:
        """Exact sign of g at this root."""
        if not g:
            return 0
        g = g % self.defining
        if g.degree <= 0:
            return sign(g.lc)
        if self.is_rational:
            return sign(g(self.lo))
        common = poly_gcd(g, self.defining)
        if common.degree > 0 and sturm_root_count(common, self.lo, self.hi) + (
                1 if not common(self.lo) else 0) > 0:
            return 0
        seq = _IntChain(sturm_sequence(g))
        cur = self
        while True:
            n = sturm_root_count(g, cur.lo, cur.hi, seq) + (1 if not g(cur.lo) else 0)
            if n == 0:
                return sign(g(cur.hi))
            cur = cur.refined(cur.width / 4)
            if cur.is_rational:
                return sign(g(cur.lo))

    def compare(self, other: Union["AlgebraicNumber", Number]) -> int:
        """Exact three-way comparison."""
        if not isinstance(other, AlgebraicNumber):
            r = Fraction(other)
            return self.sign_of(X - r)
        a, b = self, other
        g = poly_gcd(a.defining, b.defining)
        while True:
            if a.hi < b.lo:
                return -1
            if b.hi < a.lo:
                return 1
            if g.degree > 0:
                lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
                if lo == hi:
                    if not g(lo):
                        return 0
                elif sturm_root_count(g, lo, hi) + (1 if not g(lo) else 0) > 0:
                    return 0
            if a.is_rational and b.is_rational:
                return sign(a.lo - b.lo)
            a = a.refined(a.width / 4) if not a.is_rational else a
            b = b.refined(b.width / 4) if not b.is_rational else b

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    def __eq__(self, other):
        if isinstance(other, (AlgebraicNumber, int, Fraction)):
            return self.compare(other) == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.defining, self.lo, self.hi))

    def __repr__(self):
        return f"AlgebraicNumber(root of {self.defining} in [{self.lo}, {self.hi}])"


def refine(x: AlgebraicNumber, eps: Number) -> Fraction:
    """Rational within eps of the algebraic number."""
    return x.approx(eps)


def minimal_root(p: UniPoly, lo: Number, hi: Number) -> Union[Fraction, AlgebraicNumber]:
    """Replace p by its irreducible factor over Q vanishing in [lo, hi].

    Returns a Fraction when that factor is linear.
    """
    z = sympy.Symbol("z")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * z**i
               for i, c in enumerate(p.squarefree().coeffs))
    _, factors = sympy.factor_list(expr, z)
    for fac, _mult in factors:
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(sympy.Poly(fac, z).all_coeffs())]
        f = UniPoly(coeffs)
        if f.degree < 1:
            continue
        if f.degree == 1:
            r = -f.coeffs[0] / f.coeffs[1]
            if Fraction(lo) <= r <= Fraction(hi):
                return r
            continue
        lo_f, hi_f = Fraction(lo), Fraction(hi)
        n = sturm_root_count(f, lo_f, hi_f) + (1 if not f(lo_f) else 0)
        if n == 1:
            return AlgebraicNumber(f, lo_f, hi_f)
    raise ArithmeticError(f"no factor of {p} has a root in [{lo}, {hi}]")


# ---------------------------------------------------------------------------
# arithmetic in Q(alpha)
# ---------------------------------------------------------------------------


class AlgElem:
    """Element g(alpha) of Q(alpha), stored as g reduced modulo alpha's defining polynomial.

    ``bool`` reports structural nonzeroness of the representative; use
    :meth:`is_zero` for the exact test (they differ only when the defining
    polynomial is reducible).
    """

    __slots__ = ("rep", "root")

    def __init__(self, rep: Union[UniPoly, Number], root: AlgebraicNumber):
        if not isinstance(rep, UniPoly):
            rep = UniPoly.const(rep)
        self.root = root
        self.rep = rep % root.defining if rep.degree >= root.defining.degree else rep

    @classmethod
    def generator(cls, root: AlgebraicNumber) -> "AlgElem":
        return cls(X, root)

    def _lift(self, other) -> Optional["AlgElem"]:
        if isinstance(other, AlgElem):
            if other.root.defining != self.root.defining:
                raise ValueError("elements of different number fields")
            return other
        if isinstance(other, (int, Fraction)):
            return AlgElem(UniPoly.const(other), self.root)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return AlgElem(self.rep + o.rep, self.root)

    __radd__ = __add__

    def __neg__(self):
        return AlgElem(-self.rep, self.root)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return AlgElem(self.rep - o.rep, self.root)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return AlgElem(self.rep * other, self.root)
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return AlgElem(self.rep * o.rep, self.root)

    __rmul__ = __mul__

    def inverse(self) -> "AlgElem":
        g, s, _ = poly_xgcd(self.rep, self.root.defining)
        if g.degree != 0:
            if self.is_zero():
                raise ZeroDivisionError("division by zero in Q(alpha)")
            raise ArithmeticError("defining polynomial is reducible; reduce it first")
        return AlgElem(s, self.root)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return AlgElem(self.rep * (1 / Fraction(other)), self.root)
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        result = AlgElem(1, self.root)
        for _ in range(n):
            result = result * self
        return result

    def __bool__(self) -> bool:
        return bool(self.rep)

    def is_zero(self) -> bool:
        return self.sign() == 0

    def sign(self) -> int:
        return self.root.sign_of(self.rep)

    def __float__(self) -> float:
        t = self.root.approx(Fraction(1, 2**80))
        return float(self.rep(t))

    def approx(self, eps: Number = Fraction(1, 10**12)) -> Fraction:
        """Rational approximation; the root is refined until the value interval is below eps."""
        eps = Fraction(eps)
        # |g(t) - g(t')| <= bound * |t - t'| with bound from |g'| on the interval
        d = self.rep.derivative()
        r = self.root
        big = max(abs(r.lo), abs(r.hi)) + 1
        lip = sum(abs(c) * big**i for i, c in enumerate(d.coeffs)) or Fraction(1)
        r = r.refined(eps / (2 * lip))
        return self.rep((r.lo + r.hi) / 2)

    def __repr__(self):
        return f"AlgElem({self.rep} at {self.root!r})"


Scalar = Union[Fraction, AlgElem]


def scalar_sign(x: Scalar) -> int:
    return x.sign() if isinstance(x, AlgElem) else sign(x)


def scalar_is_zero(x: Scalar) -> bool:
    return x.is_zero() if isinstance(x, AlgElem) else x == 0


# ---------------------------------------------------------------------------
# multivariate polynomials
# ---------------------------------------------------------------------------


class MultiPoly:
    """Sparse polynomial: exponent tuple -> coefficient.

    Coefficients may be Fractions or :class:`AlgElem`; structurally zero
    coefficients are never stored.
    """

    __slots__ = ("terms", "nvars")

    def __init__(self, terms: Mapping[tuple[int, ...], Scalar] | None = None, nvars: int = 3):
        clean: dict[tuple[int, ...], Scalar] = {}
        for exps, c in (terms or {}).items():
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent tuple {exps}")
            if not isinstance(c, (Fraction, AlgElem)):
                c = Fraction(c)
            if c:
                clean[tuple(exps)] = c
        self.terms = clean
        self.nvars = nvars

    @classmethod
    def var(cls, i: int, nvars: int = 3) -> "MultiPoly":
        exps = [0] * nvars
        exps[i] = 1
        return cls({tuple(exps): Fraction(1)}, nvars)

    @classmethod
    def const(cls, c: Scalar, nvars: int = 3) -> "MultiPoly":
        return cls({(0,) * nvars: c}, nvars)

    def _coerce(self, other) -> Optional["MultiPoly"]:
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        if isinstance(other, (int, Fraction, AlgElem)):
            return MultiPoly.const(other if not isinstance(other, int) else Fraction(other),
                                   self.nvars)
        return None

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).is_zero()

    def is_zero(self) -> bool:
        """Exact zero test (coefficients in Q(alpha) are tested at the root)."""
        return all(scalar_is_zero(c) for c in self.terms.values())

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out[e] + c if e in out else c
        return MultiPoly(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, AlgElem)):
            return MultiPoly({e: c * other for e, c in self.terms.items()}, self.nvars)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[tuple[int, ...], Scalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out[e] + c1 * c2 if e in out else c1 * c2
        return MultiPoly(out, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = MultiPoly.const(Fraction(1), self.nvars)
        for _ in range(n):
            result = result * self
        return result

    def coeff(self, exps: tuple[int, ...]) -> Scalar:
        return self.terms.get(tuple(exps), Fraction(0))

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self, d: Optional[int] = None) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1 and (d is None or not degs or degs == {d})

    def permute(self, perm: Sequence[int]) -> "MultiPoly":
        """Substitute variable i -> variable perm[i]."""
        out = {}
        for e, c in self.terms.items():
            new = [0] * self.nvars
            for i, k in enumerate(e):
                new[perm[i]] += k
            out[tuple(new)] = c
        return MultiPoly(out, self.nvars)

    def eval(self, *values):
        """Evaluate at ring elements (Fractions, UniPolys, floats, ...)."""
        if len(values) != self.nvars:
            raise ValueError(f"expected {self.nvars} values")
        total = 0
        for e, c in self.terms.items():
            term = c
            for v, k in zip(values, e):
                if k:
                    term = term * v**k
            total = term + total
        return total

    __call__ = eval

    def __iter__(self) -> Iterator[tuple[tuple[int, ...], Scalar]]:
        return iter(sorted(self.terms.items()))

    def __repr__(self):
        body = " + ".join(f"{c}*{e}" for e, c in sorted(self.terms.items(), reverse=True))
        return f"MultiPoly({body or '0'})"


def poly_add(p, q):
    return p + q


def poly_mul(p, q):
    return p * q


def poly_eval(p, *values):
    return p.eval(*values)


# ---------------------------------------------------------------------------
# resultants
# ---------------------------------------------------------------------------


def _prem(A: list[UniPoly], B: list[UniPoly]) -> list[UniPoly]:
    """Pseudo-remainder lc(B)^(degA-degB+1) * A mod B over Q[s]; lists are lowest degree first."""
    R = list(A)
    lcb = B[-1]
    db = len(B) - 1
    e = len(A) - len(B) + 1
    while len(R) - 1 >= db and R:
        shift = len(R) - 1 - db
        lcr = R[-1]
        R = [c * lcb for c in R]
        for j, b in enumerate(B):
            R[j + shift] = R[j + shift] - lcr * b
        while R and not R[-1]:
            R.pop()
        e -= 1
    return [c * lcb**e for c in R]


def _to_nested(p: MultiPoly, var: int) -> list[UniPoly]:
    if p.nvars != 2:
        raise ValueError("resultant expects bivariate polynomials")
    other = 1 - var
    deg = max((e[var] for e in p.terms), default=-1)
    rows: list[dict[int, Fraction]] = [dict() for _ in range(deg + 1)]
    for e, c in p.terms.items():
        if isinstance(c, AlgElem):
            raise TypeError("resultant requires rational coefficients")
        rows[e[var]][e[other]] = c
    out = []
    for row in rows:
        n = max(row, default=-1) + 1
        out.append(UniPoly([row.get(i, 0) for i in range(n)]))
    return out


def resultant_nested(A: list[UniPoly], B: list[UniPoly]) -> UniPoly:
    """Resultant in the main variable of polynomials with coefficients in Q[s].

    Subresultant PRS: every division below is exact in Q[s].
    """
    A = list(A)
    B = list(B)
    while A and not A[-1]:
        A.pop()
    while B and not B[-1]:
        B.pop()
    if not A or not B:
        return UniPoly()
    da, db = len(A) - 1, len(B) - 1
    s = 1
    if da < db:
        A, B = B, A
        da, db = db, da
        if da % 2 and db % 2:
            s = -s
    if db == 0:
        return B[0] ** da * s
    g = UniPoly.const(1)
    h = UniPoly.const(1)
    while len(B) - 1 > 0:
        da, db = len(A) - 1, len(B) - 1
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        R = _prem(A, B)
        A = B
        div = g * h**delta
        B = [c.exact_div(div) for c in R]
        g = A[-1]
        if delta:
            h = (g**delta).exact_div(h ** (delta - 1)) if delta >= 1 else h
        if not B:
            return UniPoly()
    da = len(A) - 1
    lcb = B[0]
    if da == 0:
        return lcb * s
    return (lcb**da).exact_div(h ** (da - 1)) * s


def resultant(p: MultiPoly, q: MultiPoly, eliminate: int = 0) -> UniPoly:
    """Res_t(p, q) for bivariate p, q; ``eliminate`` is the index of t."""
    return resultant_nested(_to_nested(p, eliminate), _to_nested(q, eliminate))
