"""Random sweep: module-engine invariant dimensions against predicted c_s(mu).

Draws configurations of evaluation modules at rational points (types A and
C, plus B/D vector modules), compares every dominant weight, and tallies
agreements separately for distinct-point and coincident-point samples.
"""

from __future__ import annotations

import argparse
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from weylhom.charring import hom_rank
from weylhom.repmod import EvaluationModule, Point, TensorConfiguration, fundamental_module, loop_invariants
from weylhom.rootsys import build_root_system


@dataclass
class Config:
    samples: int = 40
    seed: int = 0
    max_factors: int = 3


def _draw(rng: random.Random, cfg: Config):
    fam, rank = rng.choice([("A", 1), ("A", 2), ("A", 3), ("C", 2), ("C", 3), ("B", 2), ("D", 4)])
    rs = build_root_system(fam, rank)
    nodes = list(rs.nodes) if fam == "A" else [1]
    size = rng.randint(1, cfg.max_factors if rs.rank <= 2 or fam == "A" else 2)
    laurent = rng.random() < 0.5
    points = [Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(size)]
    if laurent:
        points = [p if p else Fraction(5) for p in points]
    factors = []
    for p in points:
        pt = Point((p,), ()) if laurent else Point((), (p,))
        factors.append(EvaluationModule(fundamental_module(rs, rng.choice(nodes)), pt))
    return TensorConfiguration(factors)


def run(cfg: Config) -> Counter:
    rng = random.Random(cfg.seed)
    tally: Counter = Counter()
    for _ in range(cfg.samples):
        tc = _draw(rng, cfg)
        table = hom_rank(tc.rs, tc.node_counts(), tc.k)
        tag = "distinct" if tc.distinct_points else "coincident"
        for mu in tc.weight_spaces():
            if any(c < 0 for c in mu):
                continue
            ok = loop_invariants(tc, mu).dim == table.coeff(mu)
            tally[(tag, ok)] += 1
            if not ok and tc.distinct_points:
                print(f"disagreement: {tc!r} at {mu}")
    return tally


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--samples", type=int, default=40)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()
    tally = run(Config(samples=args.samples, seed=args.seed))
    for tag in ("distinct", "coincident"):
        agree, total = tally[(tag, True)], tally[(tag, True)] + tally[(tag, False)]
        print(f"{tag} points: {agree}/{total} dominant weights agree with c_s(mu)")


if __name__ == "__main__":
    main()
