"""Formal characters in Z[P] and Hom-rank coefficients between global Weyl modules."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union

from .rootsys import RootSystem, RootSystemError, Vec, Weight, compute_I0

WeightLike = Union[Weight, Sequence[int]]


def binom_convention(n: int, j: int) -> int:
    """binom(n, j) for j >= 0 with binom(-1, 0) = 1 and binom(n, j) = 0 when n < j."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    if j == 0:
        return 1
    if n < j:
        return 0
    return comb(n, j)


def _key(rs: RootSystem, w: WeightLike) -> Vec:
    if isinstance(w, Weight):
        if w.rs != rs:
            raise RootSystemError(f"weight from {w.rs.name} used with {rs.name}")
        return w.coords
    key = tuple(int(c) for c in w)
    if len(key) != rs.rank:
        raise RootSystemError(f"weight {key} has wrong length for {rs.name}")
    return key


@dataclass(frozen=True)
class Character:
    """A finitely supported Z_{>=0}-combination of formal exponentials e(mu)."""

    rs: RootSystem = field(repr=False)
    terms: Mapping[Vec, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for w, c in self.terms.items():
            if c < 0:
                raise ValueError("character coefficients must be nonnegative")
            if c:
                clean[_key(self.rs, w)] = int(c)
        object.__setattr__(self, "terms", clean)

    @classmethod
    def e(cls, rs: RootSystem, w: WeightLike, coeff: int = 1) -> "Character":
        return cls(rs, {_key(rs, w): coeff})

    @classmethod
    def one(cls, rs: RootSystem) -> "Character":
        return cls.e(rs, rs.zero())

    @classmethod
    def zero(cls, rs: RootSystem) -> "Character":
        return cls(rs, {})

    def _same(self, other: "Character") -> None:
        if self.rs != other.rs:
            raise RootSystemError(f"mixed root systems {self.rs.name} and {other.rs.name}")

    def __add__(self, other: "Character") -> "Character":
        return char_add(self, other)

    def __mul__(self, other: "Character") -> "Character":
        return char_mul(self, other)

    def __pow__(self, n: int) -> "Character":
        if n < 0:
            raise ValueError("negative power")
        out = Character.one(self.rs)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Character):
            return NotImplemented
        return self.rs == other.rs and dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash((self.rs.name, frozenset(self.terms.items())))

    def coeff(self, w: WeightLike) -> int:
        return self.terms.get(_key(self.rs, w), 0)

    def mass(self) -> int:
        """Sum of coefficients (the dimension, for a genuine character)."""
        return sum(self.terms.values())

    def items(self) -> List[Tuple[Vec, int]]:
        """Terms in reverse lexicographic order of weights (top weights first)."""
        return sorted(self.terms.items(), reverse=True)

    def to_json(self) -> List[dict]:
        return [{"weight": list(w), "coeff": c} for w, c in self.items()]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.items():
            pre = "" if c == 1 else f"{c}*"
            parts.append(f"{pre}e({','.join(map(str, w))})")
        return " + ".join(parts)


def char_add(a: Character, b: Character) -> Character:
    a._same(b)
    out = dict(a.terms)
    for w, c in b.terms.items():
        out[w] = out.get(w, 0) + c
    return Character(a.rs, out)


def char_mul(a: Character, b: Character) -> Character:
    """Convolution product e(mu) e(nu) = e(mu + nu)."""
    a._same(b)
    out: Dict[Vec, int] = {}
    for w1, c1 in a.terms.items():
        for w2, c2 in b.terms.items():
            w = tuple(x + y for x, y in zip(w1, w2))
            out[w] = out.get(w, 0) + c1 * c2
    return Character(a.rs, out)


def _check_node(rs: RootSystem, i: int) -> None:
    if i not in rs.nodes:
        raise RootSystemError(f"node {i} out of range 1..{rs.rank} for {rs.name}")


def fundamental_invariant_character(rs: RootSystem, i: int, k: int) -> Character:
    """Character of the n+ (x) A invariants of the fundamental local Weyl module at node i.

    Equal to e(omega_i) for i in I_0.  Otherwise (types B and D) it is the sum
    over j with i - 2j >= 0 of binom(j + k - 1, j) e(omega_{i-2j}), omega_0 = 0.
    """
    _check_node(rs, i)
    if k < 0:
        raise ValueError("k must be nonnegative")
    if i in compute_I0(rs):
        return Character.e(rs, rs.fundamental(i))
    if rs.family not in ("B", "D"):
        raise RootSystemError(f"node {i} of {rs.name} is outside I_0")  # pragma: no cover
    terms = {}
    for j in range(i // 2 + 1):
        c = binom_convention(j + k - 1, j)
        if c:
            terms[rs.fundamental(i - 2 * j).coords] = c
    return Character(rs, terms)


def is_convention_dependent(rs: RootSystem, s: Sequence[int], k: int) -> bool:
    """True when a k = 0 answer relies on the binom(j - 1, j) = 0 convention."""
    i0 = compute_I0(rs)
    return k == 0 and any(si and (i + 1) not in i0 and i + 1 >= 2 for i, si in enumerate(s))


@dataclass(frozen=True)
class HomRankTable:
    rs: RootSystem = field(repr=False)
    s: Tuple[int, ...]
    k: int
    entries: Mapping[Vec, int]

    @property
    def character(self) -> Character:
        return Character(self.rs, dict(self.entries))

    def coeff(self, w: WeightLike) -> int:
        return self.entries.get(_key(self.rs, w), 0)

    def items(self) -> List[Tuple[Vec, int]]:
        return sorted(self.entries.items(), reverse=True)

    def to_json(self) -> dict:
        return {
            "family": self.rs.family,
            "rank": self.rs.rank,
            "s": list(self.s),
            "k": self.k,
            "convention_dependent": is_convention_dependent(self.rs, self.s, self.k),
            "entries": [{"weight": list(w), "coeff": c} for w, c in self.items()],
        }


def hom_rank(rs: RootSystem, s: Sequence[int], k: int) -> HomRankTable:
    """Coefficients c_s(lambda) of the product of fundamental invariant characters."""
    s = tuple(int(x) for x in s)
    if len(s) != rs.rank:
        raise ValueError(f"s must have {rs.rank} entries for {rs.name}, got {len(s)}")
    if any(x < 0 for x in s):
        raise ValueError("s must be nonnegative")
    if k < 0:
        raise ValueError("k must be nonnegative")
    total = Character.one(rs)
    for i, si in zip(rs.nodes, s):
        if si:
            total = total * fundamental_invariant_character(rs, i, k) ** si
    return HomRankTable(rs, s, k, dict(total.terms))


def remark_red_check(rs: RootSystem, k: int) -> bool:
    """Whether Hom(W(omega_2), W(omega_4)) is predicted nonzero (B_n, D_n with n >= 6)."""
    if rs.family not in ("B", "D") or rs.rank < 6:
        raise RootSystemError(f"needs type B or D of rank >= 6, got {rs.name}")
    s = [0] * rs.rank
    s[3] = 1
    return hom_rank(rs, s, k).coeff(rs.fundamental(2)) > 0


def dominant_weights(weights: Iterable[Vec]) -> List[Vec]:
    return sorted({w for w in weights if all(c >= 0 for c in w)}, reverse=True)
