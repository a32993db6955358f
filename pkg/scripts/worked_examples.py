"""Print the headline thresholds, equality points and certificate kinds."""

from dataclasses import dataclass
from fractions import Fraction

from symquartic import certificates as C
from symquartic.forms import Domain, QuarticForm
from symquartic.frontier import bmin_real, cmin_nonneg


@dataclass(frozen=True)
class Config:
    eps: Fraction = Fraction(1, 10**15)


BMIN = [(2, 4), (-1, 2), (-1, 1), (6, 24), (-1 / 2, 2)]
CMIN = [(-4, 14), (-6, 31), (-6, 10), (0, -2), (-3, Fraction(17, 4))]
CERTS = [(2, 3, 8, "real"), (2, 3, -8, "real"), (Fraction(19, 4), Fraction(17, 2), 19, "real"),
         (Fraction(19, 4), Fraction(17, 2), Fraction(49, 4), "real"), (-2, 3, 0, "real"),
         (-1, 0, 1, "nonneg")]


def main(cfg: Config = Config()) -> None:
    print(f"{'a':>6} {'c':>6} {'b_min':>22} {'t':>20}  kind")
    for a, c in BMIN:
        a, c = Fraction(a).limit_denominator(), Fraction(c)
        r = bmin_real(a, c, cfg.eps)
        t = "" if r.t is None else f"{float(r.t):.15f}"
        print(f"{str(a):>6} {str(c):>6} {float(r.approx):>22.15f} {t:>20}  {r.kind}")
    print()
    print(f"{'a':>6} {'b':>6} {'c_min':>22} {'t':>20}  kind")
    for a, b in CMIN:
        a, b = Fraction(a), Fraction(b)
        r = cmin_nonneg(a, b, cfg.eps)
        if not r:
            print(f"{str(a):>6} {str(b):>6} {'infeasible':>22} {'':>20}  b >= {r.b_lower}")
            continue
        t = "" if r.t is None else f"{float(r.t):.15f}"
        print(f"{str(a):>6} {str(b):>6} {float(r.approx):>22.15f} {t:>20}  {r.kind}")
    print()
    for a, b, c, dom in CERTS:
        form = QuarticForm(Fraction(a), Fraction(b), Fraction(c), Domain.parse(dom))
        cert = C.certify(form)
        status = C.verify(cert) if cert else None
        print(f"{str(form):<50} {cert.kind if cert else '-':<15} "
              f"{'Valid' if status else 'Invalid'}")


if __name__ == "__main__":
    main()
