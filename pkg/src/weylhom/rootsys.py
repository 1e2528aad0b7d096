"""Classical root systems (types A, B, C, D) and the weight lattice.

Node numbering follows Bourbaki throughout:

* ``A_n``: chain 1 - 2 - ... - n.
* ``B_n``: chain with the short simple root at node n (a_{n-1,n} = -1,
  a_{n,n-1} = -2).
* ``C_n``: chain with the long simple root at node n (a_{n-1,n} = -2,
  a_{n,n-1} = -1).
* ``D_n``: chain 1 - ... - (n-2) with nodes n-1 and n both attached to n-2.

The Cartan matrix entry ``a_ij`` is ``alpha_j(h_i) = 2(alpha_i, alpha_j) /
(alpha_i, alpha_i)``, so ``[h_i, e_j] = a_ij e_j``.  The set I_0 depends on
this numbering; e.g. I_0(B_3) = {1, 3} and I_0(D_6) = {1, 5, 6}.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import FrozenSet, Iterable, List, Sequence, Tuple

Vec = Tuple[int, ...]

FAMILIES = ("A", "B", "C", "D")
MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
DEFAULT_MAX_RANK = 8


class RootSystemError(ValueError):
    pass


def max_rank() -> int:
    """Rank cap, overridable through ``WEYLHOM_MAX_RANK``."""
    raw = os.environ.get("WEYLHOM_MAX_RANK")
    if raw is None:
        return DEFAULT_MAX_RANK
    try:
        cap = int(raw)
    except ValueError as exc:
        raise RootSystemError(f"WEYLHOM_MAX_RANK must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise RootSystemError("WEYLHOM_MAX_RANK must be positive")
    return cap


def cartan_matrix(family: str, rank: int) -> List[List[int]]:
    n = rank
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
    chain = n if family != "D" else n - 1
    for i in range(chain - 1):
        a[i][i + 1] = a[i + 1][i] = -1
    if family == "B":
        a[n - 1][n - 2] = -2
    elif family == "C":
        a[n - 2][n - 1] = -2
    elif family == "D":
        a[n - 1][n - 3] = a[n - 3][n - 1] = -1
    return a


def _invert(m: Sequence[Sequence[int]]) -> List[List[Fraction]]:
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _positive_roots(cartan: Sequence[Sequence[int]]) -> List[Vec]:
    """Closure along root strings, level by level from the simple roots.

    For a positive root beta and simple root alpha_i, with p the largest
    integer such that beta - p alpha_i is a root, beta + alpha_i is a root
    iff p - <beta, alpha_i^vee> > 0.
    """
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                pairing = sum(beta[j] * cartan[i][j] for j in range(n))
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(roots, key=lambda r: (sum(r), r))


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    cartan: Tuple[Vec, ...]
    symmetrizers: Tuple[Fraction, ...]
    positive_roots: Tuple[Vec, ...]
    theta: Vec
    inv_cartan: Tuple[Tuple[Fraction, ...], ...] = field(repr=False)

    @property
    def name(self) -> str:
        return f"{self.family}_{self.rank}"

    @property
    def nodes(self) -> range:
        """Node labels 1..rank (Bourbaki)."""
        return range(1, self.rank + 1)

    def form(self, x: Sequence, y: Sequence) -> Fraction:
        """Normalized bilinear form on root coordinates, (theta, theta) = 2."""
        n = self.rank
        return sum(
            (Fraction(x[i]) * y[j] * self.symmetrizers[i] * self.cartan[i][j] for i in range(n) for j in range(n)),
            Fraction(0),
        )

    def root_length2(self, i: int) -> Fraction:
        """(alpha_i, alpha_i) for the node i (1-based)."""
        return 2 * self.symmetrizers[i - 1]

    def simple_root_weight(self, i: int) -> Vec:
        """alpha_i in fundamental-weight coordinates (column i of the Cartan matrix)."""
        return tuple(self.cartan[r][i - 1] for r in range(self.rank))

    def weight(self, coords: Iterable[int]) -> "Weight":
        return Weight(tuple(int(c) for c in coords), self)

    def fundamental(self, i: int) -> "Weight":
        """omega_i; ``i = 0`` gives omega_0 = 0."""
        if not 0 <= i <= self.rank:
            raise RootSystemError(f"node {i} out of range for {self.name}")
        return Weight(tuple(int(j == i) for j in self.nodes), self)

    def zero(self) -> "Weight":
        return Weight((0,) * self.rank, self)

    def root_coords(self, coords: Sequence[int]) -> Tuple[Fraction, ...]:
        """Simple-root coordinates of a weight given in omega-coordinates."""
        n = self.rank
        return tuple(sum((Fraction(coords[j]) * self.inv_cartan[i][j] for j in range(n)), Fraction(0)) for i in range(n))

    def root_to_weight(self, root: Sequence[int]) -> Vec:
        n = self.rank
        return tuple(sum(root[j] * self.cartan[i][j] for j in range(n)) for i in range(n))


def build_root_system(family: str, rank: int, cap: int | None = None) -> RootSystem:
    family = family.upper()
    if family not in FAMILIES:
        raise RootSystemError(f"unsupported family {family!r}; expected one of {', '.join(FAMILIES)}")
    if not isinstance(rank, int) or rank < MIN_RANK[family]:
        raise RootSystemError(f"rank for type {family} must be >= {MIN_RANK[family]}, got {rank}")
    cap = max_rank() if cap is None else cap
    if rank > cap:
        raise RootSystemError(f"rank {rank} exceeds the rank cap {cap}")

    a = cartan_matrix(family, rank)
    # D = diag(d_i) with d_i * a_ij symmetric; start from the chain and propagate
    d = [Fraction(0)] * rank
    d[0] = Fraction(1)
    changed = True
    while changed:
        changed = False
        for i in range(rank):
            for j in range(rank):
                if i != j and a[i][j] and d[i] and not d[j]:
                    d[j] = d[i] * a[i][j] / a[j][i]
                    changed = True
    roots = _positive_roots(a)
    theta = max(roots, key=sum)
    if not all(all(t >= r for t, r in zip(theta, root)) for root in roots):
        raise RootSystemError("no unique maximal positive root")  # pragma: no cover
    raw = RootSystem(family, rank, tuple(map(tuple, a)), tuple(d), tuple(roots), theta, ())
    scale = 2 / raw.form(theta, theta)
    return RootSystem(
        family=family,
        rank=rank,
        cartan=tuple(map(tuple, a)),
        symmetrizers=tuple(x * scale for x in d),
        positive_roots=tuple(roots),
        theta=theta,
        inv_cartan=tuple(map(tuple, _invert(a))),
    )


def compute_I0(rs: RootSystem) -> FrozenSet[int]:
    """Nodes i where alpha_i occurs in theta with coefficient 2/(alpha_i, alpha_i)."""
    return frozenset(i for i in rs.nodes if rs.theta[i - 1] == 2 / rs.root_length2(i))


@dataclass(frozen=True)
class Weight:
    """An integral weight in fundamental-weight coordinates."""

    coords: Vec
    rs: RootSystem = field(repr=False, compare=False)

    def __post_init__(self):
        if len(self.coords) != self.rs.rank:
            raise RootSystemError(f"weight {self.coords} has wrong length for {self.rs.name}")

    def _same(self, other: "Weight") -> None:
        if self.rs != other.rs:
            raise RootSystemError(f"mixed root systems {self.rs.name} and {other.rs.name}")

    def __add__(self, other: "Weight") -> "Weight":
        self._same(other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)), self.rs)

    def __sub__(self, other: "Weight") -> "Weight":
        self._same(other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)), self.rs)

    def __mul__(self, k: int) -> "Weight":
        return Weight(tuple(k * a for a in self.coords), self.rs)

    __rmul__ = __mul__

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def root_coords(self) -> Tuple[Fraction, ...]:
        return self.rs.root_coords(self.coords)

    def in_root_lattice(self) -> bool:
        return all(c.denominator == 1 for c in self.root_coords())

    def in_positive_cone(self) -> bool:
        """Membership in Q^+."""
        return all(c.denominator == 1 and c >= 0 for c in self.root_coords())

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coords)


def height(eta: Weight) -> int:
    """Ht(eta) for eta in Q^+."""
    rc = eta.root_coords()
    if any(c.denominator != 1 or c < 0 for c in rc):
        raise RootSystemError(f"weight ({eta}) is not in Q^+")
    return int(sum(rc))


def dominance_leq(mu: Weight, lam: Weight) -> bool:
    """mu <= lambda iff lambda - mu lies in Q^+."""
    return (lam - mu).in_positive_cone()


def root_as_weight(rs: RootSystem, root: Sequence[int]) -> Weight:
    return Weight(rs.root_to_weight(root), rs)
