"""Coefficient of e(omega_2) in the node-4 table for B_n, D_n with n >= 6.

A nonzero value means Hom(W(omega_2), W(omega_4)) is nonzero, so vanishing of
Hom between distinct fundamental global Weyl modules fails outside I_0.
"""

from __future__ import annotations

import argparse

from weylhom.charring import hom_rank
from weylhom.rootsys import build_root_system


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-rank", type=int, default=8)
    p.add_argument("--max-k", type=int, default=3)
    args = p.parse_args()
    for fam in ("B", "D"):
        for rank in range(6, args.max_rank + 1):
            rs = build_root_system(fam, rank, cap=max(rank, 8))
            s = tuple(int(j == 4) for j in rs.nodes)
            coeffs = [hom_rank(rs, s, k).coeff(rs.fundamental(2)) for k in range(args.max_k + 1)]
            print(f"{rs.name}: c(omega_2) for k=0..{args.max_k} = {coeffs}")


if __name__ == "__main__":
    main()
