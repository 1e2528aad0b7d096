"""Print c_s(lambda) tables for every single-node s in types B and D."""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from weylhom.charring import hom_rank
from weylhom.rootsys import build_root_system, compute_I0


@dataclass
class Config:
    families: tuple = ("B", "D")
    max_rank: int = 6
    ks: tuple = (0, 1, 2)


def run(cfg: Config) -> None:
    for fam in cfg.families:
        for rank in range((3 if fam == "B" else 4), cfg.max_rank + 1):
            rs = build_root_system(fam, rank)
            i0 = compute_I0(rs)
            for i in rs.nodes:
                if i in i0:
                    continue
                s = tuple(int(j == i) for j in rs.nodes)
                for k in cfg.ks:
                    row = ", ".join(f"({','.join(map(str, w))}):{c}" for w, c in hom_rank(rs, s, k).items())
                    print(f"{rs.name} i={i} k={k}: {row}")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-rank", type=int, default=6)
    p.add_argument("--k", type=int, nargs="+", default=[0, 1, 2])
    args = p.parse_args()
    run(Config(max_rank=args.max_rank, ks=tuple(args.k)))


if __name__ == "__main__":
    main()
