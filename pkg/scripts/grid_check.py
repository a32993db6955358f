"""Compare exact decisions with the numeric oracle on a coefficient grid."""

import argparse
import json
import time
from dataclasses import asdict, dataclass
from fractions import Fraction

from symquartic.forms import Domain, QuarticForm, decide
from symquartic.oracle import LIKELY_FAILS, numeric_min


@dataclass(frozen=True)
class GridConfig:
    lo: Fraction = Fraction(-5)
    hi: Fraction = Fraction(5)
    step: Fraction = Fraction(1, 2)
    budget: int = 10_000
    seed: int = 0
    domains: tuple = ("real", "nonneg")


def run(cfg: GridConfig) -> dict:
    n = int((cfg.hi - cfg.lo) / cfg.step)
    vals = [cfg.lo + i * cfg.step for i in range(n + 1)]
    stats = {"cells": 0, "holds": 0, "contradictions": [], "misses": [], "persistent": []}
    t0 = time.perf_counter()
    for dom in map(Domain.parse, cfg.domains):
        for a in vals:
            for b in vals:
                for c in vals:
                    form = QuarticForm(a, b, c, dom)
                    holds = decide(form, certify=False).holds
                    fails = numeric_min(form, cfg.budget, cfg.seed).verdict_hint == LIKELY_FAILS
                    stats["cells"] += 1
                    stats["holds"] += holds
                    key = [str(a), str(b), str(c), dom.value]
                    if fails and holds:
                        stats["contradictions"].append(key)
                    elif not fails and not holds:
                        stats["misses"].append(key)
                        if numeric_min(form, 10 * cfg.budget, cfg.seed).verdict_hint != LIKELY_FAILS:
                            stats["persistent"].append(key)
    stats["seconds"] = round(time.perf_counter() - t0, 1)
    stats["config"] = {k: str(v) for k, v in asdict(cfg).items()}
    return stats


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--step", type=Fraction, default=Fraction(1, 2))
    ap.add_argument("--bound", type=Fraction, default=Fraction(5))
    ap.add_argument("--budget", type=int, default=10_000)
    ap.add_argument("--out", help="write the JSON summary here")
    args = ap.parse_args()
    cfg = GridConfig(-args.bound, args.bound, args.step, args.budget)
    stats = run(cfg)
    text = json.dumps(stats, indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    print(json.dumps({k: (len(v) if isinstance(v, list) else v) for k, v in stats.items()
                      if k != "config"}))


if __name__ == "__main__":
    main()
