"""Tabulate b_min(a, c) or c_min(a, b) along a line, with the equality point t."""

import argparse
from dataclasses import dataclass
from fractions import Fraction

from symquartic.frontier import bmin_real, cmin_nonneg


@dataclass(frozen=True)
class CurveConfig:
    a: Fraction
    start: Fraction
    stop: Fraction
    points: int = 21
    mode: str = "bmin"
    eps: Fraction = Fraction(1, 10**10)


def curve(cfg: CurveConfig):
    for i in range(cfg.points):
        s = cfg.start + (cfg.stop - cfg.start) * Fraction(i, max(cfg.points - 1, 1))
        if cfg.mode == "bmin":
            r = bmin_real(cfg.a, s, cfg.eps)
        else:
            r = cmin_nonneg(cfg.a, s, cfg.eps)
        yield s, r


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("mode", choices=["bmin", "cmin"])
    ap.add_argument("--a", type=Fraction, required=True)
    ap.add_argument("--start", type=Fraction, required=True)
    ap.add_argument("--stop", type=Fraction, required=True)
    ap.add_argument("--points", type=int, default=21)
    args = ap.parse_args()
    cfg = CurveConfig(args.a, args.start, args.stop, args.points, args.mode)
    other = "c" if cfg.mode == "bmin" else "b"
    print(f"{other:>10} {cfg.mode:>18} {'t':>14}  kind")
    for s, r in curve(cfg):
        if not r:
            print(f"{float(s):>10.4f} {'infeasible':>18}")
            continue
        t = "" if r.t is None else f"{float(r.t):.8f}"
        print(f"{float(s):>10.4f} {float(r.approx):>18.10f} {t:>14}  {r.kind}")


if __name__ == "__main__":
    main()
