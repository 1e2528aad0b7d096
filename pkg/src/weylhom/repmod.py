"""Finite-dimensional modules for g and g (x) A with exact Chevalley-generator matrices.

A loop module here is anything exposing ``act(kind, node, a)``: the matrix of
x (x) a for x in {e_i, f_i, h_i} and a in R_{k,l}.  Three kinds are provided:

* ``EvaluationModule``: x (x) a acts by a(point) x.
* ``JetModule``: V (x) A/m^depth with (x (x) a)(v (x) b) = xv (x) ab; for
  depth 1 this is the evaluation module.
* ``TensorConfiguration``: tensor products of the above, with x (x) a acting
  as a derivation.

Finite invariance lemma.  A acts on each of these through a finite quotient
A/J of dimension at most ``algebra_length``; polynomial monomials of total
degree < algebra_length span that quotient.  Since n+ (x) A is generated as a
Lie algebra by the e_i (x) a ([e_i (x) a, e_j (x) b] = [e_i, e_j] (x) ab), a
vector is n+ (x) A-invariant iff it is killed by e_i (x) m for those finitely
many monomials m.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .charring import Character, hom_rank
from .linalg import EchelonBasis, SparseMatrix, SparseVec, commutator, nullspace
from .polyalg import MonoKey, RingElement, automorphism_to_point, ideal_generators
from .rootsys import RootSystem, RootSystemError, Vec, build_root_system, dominance_leq

KINDS = ("e", "f", "h")


class ModuleError(ValueError):
    pass


# ---------------------------------------------------------------------------
# g-modules

@dataclass
class GModule:
    rs: RootSystem
    dim: int
    e_mats: List[SparseMatrix]
    f_mats: List[SparseMatrix]
    h_mats: List[SparseMatrix]
    weights: List[Vec]
    label: str = ""
    check: bool = field(default=True, repr=False)

    def __post_init__(self):
        if self.check:
            self.verify()

    def mat(self, kind: str, node: int) -> SparseMatrix:
        if kind not in KINDS:
            raise ModuleError(f"unknown generator kind {kind!r}")
        if node not in self.rs.nodes:
            raise ModuleError(f"node {node} out of range for {self.rs.name}")
        return {"e": self.e_mats, "f": self.f_mats, "h": self.h_mats}[kind][node - 1]

    def verify(self) -> None:
        """Check the Chevalley-Serre relations and the weight decomposition."""
        n = self.rs.rank
        for mats in (self.e_mats, self.f_mats, self.h_mats):
            if len(mats) != n or any(m.shape != (self.dim, self.dim) for m in mats):
                raise ModuleError("generator matrices have the wrong count or shape")
        if len(self.weights) != self.dim:
            raise ModuleError("need one weight per basis vector")
        for i in range(n):
            h = self.h_mats[i]
            if not h.is_diagonal():
                raise ModuleError(f"h_{i + 1} is not diagonal")
            if [int(x) for x in h.diagonal()] != [w[i] for w in self.weights] or any(
                x.denominator != 1 for x in h.diagonal()
            ):
                raise ModuleError(f"h_{i + 1} eigenvalues disagree with the weights")
        for i in range(n):
            for j in range(n):
                a = self.rs.cartan[i][j]
                if commutator(self.h_mats[i], self.e_mats[j]) != self.e_mats[j].scale(a):
                    raise ModuleError(f"[h_{i + 1}, e_{j + 1}] != a_ij e_{j + 1}")
                if commutator(self.h_mats[i], self.f_mats[j]) != self.f_mats[j].scale(-a):
                    raise ModuleError(f"[h_{i + 1}, f_{j + 1}] != -a_ij f_{j + 1}")
                expect = self.h_mats[i] if i == j else SparseMatrix.zero(self.dim)
                if commutator(self.e_mats[i], self.f_mats[j]) != expect:
                    raise ModuleError(f"[e_{i + 1}, f_{j + 1}] relation fails")
                if i != j:
                    for mats, name in ((self.e_mats, "e"), (self.f_mats, "f")):
                        x = mats[j]
                        for _ in range(1 - a):
                            x = commutator(mats[i], x)
                        if not x.is_zero():
                            raise ModuleError(f"Serre relation for {name}_{i + 1}, {name}_{j + 1} fails")

    def weight_spaces(self) -> Dict[Vec, List[int]]:
        out: Dict[Vec, List[int]] = {}
        for idx, w in enumerate(self.weights):
            out.setdefault(w, []).append(idx)
        return out

    def character(self) -> Character:
        ch: Dict[Vec, int] = {}
        for w in self.weights:
            ch[w] = ch.get(w, 0) + 1
        return Character(self.rs, ch)

    def highest_weight(self) -> Vec:
        """The unique dominance-maximal weight; raises if there is none."""
        ws = list(self.weight_spaces())
        tops = [w for w in ws if not any(v != w and dominance_leq(self.rs.weight(w), self.rs.weight(v)) for v in ws)]
        if len(tops) != 1:
            raise ModuleError(f"module has {len(tops)} maximal weights")
        return tops[0]

    def highest_vector(self) -> int:
        top = self.highest_weight()
        idx = self.weight_spaces()[top]
        if len(idx) != 1:
            raise ModuleError("top weight space is not one-dimensional")
        return idx[0]


def _gmodule_from_entries(rs, dim, e, f, weights, label) -> GModule:
    n = rs.rank
    e_mats = [SparseMatrix(dim, dim, e[i]) for i in range(n)]
    f_mats = [SparseMatrix(dim, dim, f[i]) for i in range(n)]
    h_mats = [SparseMatrix(dim, dim, {(b, b): w[i] for b, w in enumerate(weights)}) for i in range(n)]
    return GModule(rs, dim, e_mats, f_mats, h_mats, [tuple(w) for w in weights], label)


def trivial_module(rs: RootSystem) -> GModule:
    z = [SparseMatrix.zero(1) for _ in rs.nodes]
    return GModule(rs, 1, list(z), list(z), list(z), [(0,) * rs.rank], "V(0)")


def build_sl2_module(m: int) -> GModule:
    """V(m) for sl_2 on v_0..v_m: h v_j = (m-2j) v_j, f v_j = (j+1) v_{j+1}, e v_j = (m-j+1) v_{j-1}."""
    if m < 0:
        raise ModuleError("highest weight must be nonnegative")
    rs = build_root_system("A", 1)
    f = {(j + 1, j): j + 1 for j in range(m)}
    e = {(j - 1, j): m - j + 1 for j in range(1, m + 1)}
    return _gmodule_from_entries(rs, m + 1, [e], [f], [(m - 2 * j,) for j in range(m + 1)], f"V({m})")


def build_sln_exterior(n: int, i: int) -> GModule:
    """Lambda^i of the natural sl_n-module, highest weight omega_i."""
    if n < 2 or not 1 <= i <= n - 1:
        raise ModuleError(f"need 1 <= i <= n-1, got n={n}, i={i}")
    rs = build_root_system("A", n - 1)
    basis = list(combinations(range(n), i))
    pos = {S: b for b, S in enumerate(basis)}
    e = [dict() for _ in range(n - 1)]
    f = [dict() for _ in range(n - 1)]
    for S, b in pos.items():
        for a in range(n - 1):
            # E_{a,a+1} swaps a+1 -> a; adjacent indices keep the wedge ordered
            if a + 1 in S and a not in S:
                T = tuple(sorted((set(S) - {a + 1}) | {a}))
                e[a][(pos[T], b)] = 1
            if a in S and a + 1 not in S:
                T = tuple(sorted((set(S) - {a}) | {a + 1}))
                f[a][(pos[T], b)] = 1
    weights = [tuple(int(a in S) - int(a + 1 in S) for a in range(n - 1)) for S in basis]
    return _gmodule_from_entries(rs, len(basis), e, f, weights, f"Lambda^{i}(C^{n})")


def build_vector_module(rs: RootSystem) -> GModule:
    """Natural representation V(omega_1) for types B, C, D."""
    n = rs.rank
    fam = rs.family
    if fam not in ("B", "C", "D"):
        raise ModuleError("vector module is built for types B, C, D")
    # basis order: v_1..v_n, [v_0], v_{-n}..v_{-1}
    labels = list(range(1, n + 1)) + ([0] if fam == "B" else []) + list(range(-n, 0))
    pos = {lab: b for b, lab in enumerate(labels)}
    dim = len(labels)
    e = [dict() for _ in range(n)]
    f = [dict() for _ in range(n)]

    def E(store, a, b, c=1):
        store[(pos[a], pos[b])] = store.get((pos[a], pos[b]), 0) + c

    for a in range(1, n):
        E(e[a - 1], a, a + 1)
        E(e[a - 1], -(a + 1), -a, -1)
        E(f[a - 1], a + 1, a)
        E(f[a - 1], -a, -(a + 1), -1)
    if fam == "B":
        E(e[n - 1], n, 0)
        E(e[n - 1], 0, -n, -1)
        E(f[n - 1], 0, n, 2)
        E(f[n - 1], -n, 0, -2)
    elif fam == "C":
        E(e[n - 1], n, -n)
        E(f[n - 1], -n, n)
    else:
        E(e[n - 1], n - 1, -n)
        E(e[n - 1], n, -(n - 1), -1)
        E(f[n - 1], -n, n - 1)
        E(f[n - 1], -(n - 1), n, -1)

    def eps(lab: int) -> List[int]:
        v = [0] * n
        if lab > 0:
            v[lab - 1] = 1
        elif lab < 0:
            v[-lab - 1] = -1
        return v

    coroots = []
    for a in range(1, n):
        coroots.append([int(j == a) - int(j == a + 1) for j in range(1, n + 1)])
    if fam == "B":
        coroots.append([2 * int(j == n) for j in range(1, n + 1)])
    elif fam == "C":
        coroots.append([int(j == n) for j in range(1, n + 1)])
    else:
        coroots.append([int(j in (n - 1, n)) for j in range(1, n + 1)])
    weights = [tuple(sum(x * y for x, y in zip(eps(lab), cr)) for cr in coroots) for lab in labels]
    return _gmodule_from_entries(rs, dim, e, f, weights, f"V(omega_1) of {rs.name}")


def fundamental_module(rs: RootSystem, i: int) -> GModule:
    """V(omega_i) where an explicit model is available: type A (all i), types B/C/D (i = 1)."""
    if i not in rs.nodes:
        raise ModuleError(f"node {i} out of range for {rs.name}")
    if rs.family == "A":
        mod = build_sln_exterior(rs.rank + 1, i)
        return GModule(rs, mod.dim, mod.e_mats, mod.f_mats, mod.h_mats, mod.weights, mod.label, check=False)
    if i == 1:
        return build_vector_module(rs)
    raise NotImplementedError(f"no explicit module for node {i} of type {rs.family}")


def tensor(a: GModule, b: GModule) -> GModule:
    """V (x) W with x acting as x (x) 1 + 1 (x) x."""
    if a.rs != b.rs:
        raise RootSystemError(f"mixed root systems {a.rs.name} and {b.rs.name}")
    ia, ib = SparseMatrix.identity(a.dim), SparseMatrix.identity(b.dim)

    def lift(x, y):
        return [xa.kron(ib) + ia.kron(yb) for xa, yb in zip(x, y)]

    weights = [tuple(p + q for p, q in zip(wa, wb)) for wa in a.weights for wb in b.weights]
    return GModule(
        a.rs, a.dim * b.dim, lift(a.e_mats, b.e_mats), lift(a.f_mats, b.f_mats), lift(a.h_mats, b.h_mats),
        weights, f"{a.label} (x) {b.label}",
    )


# ---------------------------------------------------------------------------
# g (x) A-modules

@dataclass(frozen=True)
class Point:
    """A point of Max R_{k,l}: k nonzero t-coordinates and l u-coordinates."""

    t: Tuple[Fraction, ...] = ()
    u: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "t", tuple(Fraction(x) for x in self.t))
        object.__setattr__(self, "u", tuple(Fraction(x) for x in self.u))
        if any(x == 0 for x in self.t):
            raise ModuleError("t-coordinates of a point must be nonzero")

    @property
    def k(self) -> int:
        return len(self.t)

    @property
    def l(self) -> int:
        return len(self.u)

    @classmethod
    def base(cls, k: int, l: int) -> "Point":
        """The point of the base ideal (t_s - 1, u_r)."""
        return cls((1,) * k, (0,) * l)

    def __str__(self) -> str:
        return "(" + ", ".join(str(x) for x in self.t + self.u) + ")"


def _gbinom(e: int, c: int) -> Fraction:
    num = Fraction(1)
    for j in range(c):
        num *= e - j
    return num / Fraction(_fact(c))


def _fact(c: int) -> int:
    out = 1
    for j in range(2, c + 1):
        out *= j
    return out


def nonneg_monomials(k: int, l: int, below: int) -> List[MonoKey]:
    """Monomials with nonnegative exponents and total degree < below."""
    out = []
    for exps in product(range(below), repeat=k + l):
        if sum(exps) < below:
            out.append((tuple(exps[:k]), tuple(exps[k:])))
    return sorted(out, key=lambda key: (sum(key[0]) + sum(key[1]), key))


class LoopModule:
    """Common interface: rs, dim, weights, k, l, act(kind, node, a), algebra_length."""

    rs: RootSystem
    dim: int
    weights: List[Vec]
    k: int
    l: int

    def act(self, kind: str, node: int, a) -> SparseMatrix:  # pragma: no cover - interface
        raise NotImplementedError

    @property
    def algebra_length(self) -> int:  # pragma: no cover - interface
        raise NotImplementedError

    def _ring(self, a) -> RingElement:
        if isinstance(a, RingElement):
            if (a.k, a.l) != (self.k, self.l):
                raise ModuleError(f"ring element from R_{{{a.k},{a.l}}} acting on an R_{{{self.k},{self.l}}}-module")
            return a
        if isinstance(a, tuple) and len(a) == 2:
            return RingElement(self.k, self.l, {a: 1})
        return RingElement.constant(self.k, self.l, a)

    def weight_spaces(self) -> Dict[Vec, List[int]]:
        out: Dict[Vec, List[int]] = {}
        for idx, w in enumerate(self.weights):
            out.setdefault(w, []).append(idx)
        return out

    def invariant_monomials(self) -> List[MonoKey]:
        return nonneg_monomials(self.k, self.l, self.algebra_length)


class EvaluationModule(LoopModule):
    def __init__(self, base: GModule, point: Point):
        self.base = base
        self.point = point
        self.rs = base.rs
        self.dim = base.dim
        self.weights = list(base.weights)
        self.k, self.l = point.k, point.l

    def act(self, kind: str, node: int, a) -> SparseMatrix:
        a = self._ring(a)
        return self.base.mat(kind, node).scale(a.evaluate(self.point.t, self.point.u))

    @property
    def algebra_length(self) -> int:
        return 1

    @property
    def depth(self) -> int:
        return 1

    def __repr__(self) -> str:
        return f"EvaluationModule({self.base.label} @ {self.point})"


class JetModule(LoopModule):
    """V (x) A/m^depth for the maximal ideal m of ``point``."""

    def __init__(self, base: GModule, point: Point, depth: int):
        if depth < 1:
            raise ModuleError("depth must be >= 1")
        self.base = base
        self.point = point
        self.depth = depth
        self.rs = base.rs
        self.k, self.l = point.k, point.l
        self.jets = nonneg_monomials(self.k, self.l, depth)
        self._jet_pos = {j: n for n, j in enumerate(self.jets)}
        self.dim = base.dim * len(self.jets)
        self.weights = [w for w in base.weights for _ in self.jets]

    @property
    def algebra_length(self) -> int:
        return len(self.jets)

    def _expand(self, key: MonoKey) -> Dict[Tuple[int, ...], Fraction]:
        """Taylor coefficients of a monomial at the point, truncated below ``depth``."""
        coords = list(self.point.t) + list(self.point.u)
        exps = list(key[0]) + list(key[1])
        out: Dict[Tuple[int, ...], Fraction] = {(): Fraction(1)}
        for p, e in zip(coords, exps):
            series = []
            for c in range(self.depth):
                if e >= 0 and c > e:
                    break
                coef = _gbinom(e, c) * p ** (e - c) if p != 0 else Fraction(int(c == e))
                series.append(coef)
            nxt: Dict[Tuple[int, ...], Fraction] = {}
            for gamma, v in out.items():
                for c, s in enumerate(series):
                    if s and sum(gamma) + c < self.depth:
                        g = gamma + (c,)
                        nxt[g] = nxt.get(g, 0) + v * s
            out = nxt
        return out

    def multiplication(self, a) -> SparseMatrix:
        a = self._ring(a)
        J = len(self.jets)
        entries: Dict[Tuple[int, int], Fraction] = {}
        for key, c in a.terms.items():
            for gamma, v in self._expand(key).items():
                for beta, col in self._jet_pos.items():
                    flat = tuple(x + y for x, y in zip(beta[0] + beta[1], gamma))
                    if sum(flat) < self.depth:
                        row = self._jet_pos[(flat[: self.k], flat[self.k:])]
                        entries[(row, col)] = entries.get((row, col), 0) + c * v
        return SparseMatrix(J, J, entries)

    def act(self, kind: str, node: int, a) -> SparseMatrix:
        return self.base.mat(kind, node).kron(self.multiplication(a))

    def __repr__(self) -> str:
        return f"JetModule({self.base.label} @ {self.point}, depth={self.depth})"


class TensorConfiguration(LoopModule):
    """Ordered tensor product of evaluation (or jet) modules."""

    def __init__(self, factors: Sequence[LoopModule]):
        if not factors:
            raise ModuleError("configuration needs at least one factor")
        self.factors = list(factors)
        self.rs = factors[0].rs
        self.k, self.l = factors[0].k, factors[0].l
        for fct in factors:
            if fct.rs != self.rs:
                raise RootSystemError("mixed root systems in configuration")
            if (fct.k, fct.l) != (self.k, self.l):
                raise ModuleError("factors live over different rings")
        self.dim = 1
        for fct in factors:
            self.dim *= fct.dim
        weights: List[Vec] = [(0,) * self.rs.rank]
        for fct in factors:
            weights = [tuple(p + q for p, q in zip(w, v)) for w in weights for v in fct.weights]
        self.weights = weights
        self._cache: Dict[tuple, SparseMatrix] = {}

    @property
    def points(self) -> List[Point]:
        return [fct.point for fct in self.factors]

    @property
    def distinct_points(self) -> bool:
        pts = self.points
        return len(set(pts)) == len(pts)

    @property
    def algebra_length(self) -> int:
        return sum(fct.algebra_length for fct in self.factors)

    def act(self, kind: str, node: int, a) -> SparseMatrix:
        a = self._ring(a)
        key = (kind, node, a)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        total = SparseMatrix.zero(self.dim)
        left = 1
        for j, fct in enumerate(self.factors):
            right = self.dim // (left * fct.dim)
            m = fct.act(kind, node, a)
            if not m.is_zero():
                total = total + SparseMatrix.identity(left).kron(m).kron(SparseMatrix.identity(right))
            left *= fct.dim
        self._cache[key] = total
        return total

    def gmodule(self) -> GModule:
        """The underlying g-module (x (x) 1 actions)."""
        mats = {kind: [self.act(kind, i, 1) for i in self.rs.nodes] for kind in KINDS}
        return GModule(self.rs, self.dim, mats["e"], mats["f"], mats["h"], list(self.weights), "configuration")

    def node_counts(self) -> Tuple[int, ...]:
        """s with s_i = number of factors whose base module is V(omega_i)."""
        s = [0] * self.rs.rank
        for fct in self.factors:
            top = fct.base.highest_weight()
            nz = [i for i, c in enumerate(top) if c]
            if len(nz) != 1 or top[nz[0]] != 1:
                raise ModuleError(f"factor {fct!r} is not a fundamental module")
            s[nz[0]] += 1
        return tuple(s)

    def __repr__(self) -> str:
        return f"TensorConfiguration({self.factors!r})"


# ---------------------------------------------------------------------------
# invariants

@dataclass
class InvariantSpace:
    dim: int
    basis: List[SparseVec]
    weight: Optional[Vec] = None


def _restricted_rows(mat: SparseMatrix, cols: Sequence[int]) -> List[Dict[int, Fraction]]:
    cpos = {c: j for j, c in enumerate(cols)}
    rows = []
    for row in mat.rows.values():
        picked = {cpos[c]: v for c, v in row.items() if c in cpos}
        if picked:
            rows.append(picked)
    return rows


def invariant_space(module: LoopModule, monomials: Iterable[MonoKey], weight: Optional[Sequence[int]] = None,
                    kind: str = "e") -> InvariantSpace:
    """Vectors (of one weight, if given) killed by every kind_i (x) m for m in ``monomials``."""
    if weight is not None:
        cols = module.weight_spaces().get(tuple(weight), [])
    else:
        cols = list(range(module.dim))
    if not cols:
        return InvariantSpace(0, [], None if weight is None else tuple(weight))
    rows: List[Dict[int, Fraction]] = []
    for m in monomials:
        for i in module.rs.nodes:
            rows.extend(_restricted_rows(module.act(kind, i, m), cols))
    ns = nullspace(rows, len(cols))
    basis = [{cols[j]: v for j, v in vec.items()} for vec in ns]
    return InvariantSpace(len(basis), basis, None if weight is None else tuple(weight))


def loop_invariants(cfg: LoopModule, mu) -> InvariantSpace:
    """The weight-mu part of the n+ (x) A-invariants, with a basis."""
    if hasattr(mu, "coords"):
        mu = mu.coords
    mu = tuple(int(x) for x in mu)
    if len(mu) != cfg.rs.rank:
        raise ModuleError(f"weight {mu} has wrong length for {cfg.rs.name}")
    return invariant_space(cfg, cfg.invariant_monomials(), mu)


def all_loop_invariants(cfg: LoopModule) -> InvariantSpace:
    return invariant_space(cfg, cfg.invariant_monomials())


def invariant_character(cfg: LoopModule) -> Dict[Vec, int]:
    """Dimension of the loop invariants at every weight of the module (zeros dropped)."""
    out = {}
    for w in cfg.weight_spaces():
        d = loop_invariants(cfg, w).dim
        if d:
            out[w] = d
    return out


# ---------------------------------------------------------------------------
# annihilators

class MixedPointsError(ModuleError):
    def __init__(self, points: Sequence[Point]):
        self.points = sorted(set(points), key=lambda p: (p.t, p.u))
        ideals = "; ".join(
            "(" + ", ".join(str(g) for g in ideal_generators(p.t, p.u)) + ")" for p in self.points
        )
        super().__init__(f"annihilator is supported at {len(self.points)} distinct maximal ideals: {ideals}")


def _ideal_power_products(point: Point, n: int) -> List[RingElement]:
    gens = ideal_generators(point.t, point.u)
    if n == 0:
        return [RingElement.constant(point.k, point.l)]
    out = []
    for combo in combinations_with_replacement(range(len(gens)), n):
        x = RingElement.constant(point.k, point.l)
        for g in combo:
            x = x * gens[g]
        out.append(x)
    return out


def annihilator_exponent(cfg: LoopModule, limit: Optional[int] = None) -> int:
    """Least N with (g (x) I^N) acting as zero, I the common point's maximal ideal."""
    factors = cfg.factors if isinstance(cfg, TensorConfiguration) else [cfg]
    pts = [fct.point for fct in factors]
    if len(set(pts)) != 1:
        raise MixedPointsError(pts)
    point = pts[0]
    monos = cfg.invariant_monomials()
    limit = cfg.algebra_length + 1 if limit is None else limit
    for n in range(limit + 1):
        zero = True
        for g in _ideal_power_products(point, n):
            for m in monos:
                a = g * RingElement(cfg.k, cfg.l, {m: 1})
                if any(not cfg.act(kind, i, a).is_zero() for kind in KINDS for i in cfg.rs.nodes):
                    zero = False
                    break
            if not zero:
                break
        if zero:
            return n
    raise ModuleError(f"no annihilating power of the ideal up to {limit}")  # pragma: no cover


# ---------------------------------------------------------------------------
# cyclic spans and factorization reports

def cyclic_span(module: LoopModule, start: SparseVec, operators: Sequence[SparseMatrix],
                budget: int = 100_000) -> Tuple[EchelonBasis, bool]:
    """Span of all words in ``operators`` applied to ``start``; flag False if the budget ran out."""
    basis = EchelonBasis()
    queue = [start] if basis.add(start) else []
    steps = 0
    while queue:
        v = queue.pop()
        for op in operators:
            steps += 1
            if steps > budget:
                return basis, False
            w = op.apply(v)
            if w and basis.add(w):
                queue.append(w)
    return basis, True


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    witness: Optional[dict] = None

    def to_json(self) -> dict:
        out = {"check": self.name, "passed": self.passed, "detail": self.detail}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class FactorizationReport:
    config: str
    distinct_points: bool
    checks: List[CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {
            "check": "tensor_factorization",
            "params": {"config": self.config, "distinct_points": self.distinct_points},
            "verdict": "pass" if self.passed else "fail",
            "checks": [c.to_json() for c in self.checks],
        }


def verify_tensor_factorization(cfg: TensorConfiguration) -> FactorizationReport:
    """Top-weight invariants, agreement with c_s(mu) below the top, and cyclicity of the top vector."""
    s = cfg.node_counts()
    top = tuple(sum(c) for c in zip(*(fct.base.highest_weight() for fct in cfg.factors)))
    predicted = hom_rank(cfg.rs, s, cfg.k)
    checks: List[CheckResult] = []

    top_dim = loop_invariants(cfg, top).dim
    checks.append(CheckResult("top_weight_invariants", top_dim == 1, f"dim = {top_dim} at ({_fmt(top)})",
                              {"weight": list(top), "dim": top_dim}))

    bad = None
    for w in sorted(cfg.weight_spaces(), reverse=True):
        if w == top or any(c < 0 for c in w):
            continue
        got = loop_invariants(cfg, w).dim
        want = predicted.coeff(w)
        if got != want:
            bad = {"weight": list(w), "dim": got, "predicted": want}
            break
    detail = "all dominant weights below the top agree" if bad is None else (
        f"dim {bad['dim']} vs predicted {bad['predicted']} at ({_fmt(bad['weight'])})")
    checks.append(CheckResult("below_top_matches_prediction", bad is None, detail, bad))

    ops = [cfg.act("f", i, m) for i in cfg.rs.nodes for m in cfg.invariant_monomials()]
    top_idx = cfg.weight_spaces()[top]
    span, done = cyclic_span(cfg, {top_idx[0]: Fraction(1)}, ops)
    ok = done and span.dim == cfg.dim
    checks.append(CheckResult("cyclic_top_vector", ok, f"lowering span has dim {span.dim} of {cfg.dim}",
                              {"span_dim": span.dim, "dim": cfg.dim}))
    return FactorizationReport(describe(cfg), cfg.distinct_points, checks)


def _fmt(w: Sequence[int]) -> str:
    return ",".join(str(x) for x in w)


# ---------------------------------------------------------------------------
# configuration strings

CONFIG_GRAMMAR = """\
config   := FAMILY ':' RANK ';' factor (',' factor)*
factor   := NODE '@' rational ['^' DEPTH]
rational := ['-'] DIGITS ['/' DIGITS]
FAMILY is one of A, B, C, D; a depth d > 1 gives the truncated module V (x) A/m^d."""

_FACTOR = re.compile(r"^\s*(\d+)\s*@\s*(-?\d+(?:/\d+)?)\s*(?:\^\s*(\d+))?\s*$")
_HEAD = re.compile(r"^\s*([A-Za-z])\s*:\s*(\d+)\s*$")


class ConfigSyntaxError(ModuleError):
    pass


def parse_configuration(text: str, ring: str = "poly") -> TensorConfiguration:
    """Parse ``TYPE:RANK; i1@p1, i2@p2, ...`` over R_{0,1} (ring='poly') or R_{1,0} ('laurent')."""
    if ring not in ("poly", "laurent"):
        raise ConfigSyntaxError(f"ring must be 'poly' or 'laurent', got {ring!r}")
    if ";" not in text:
        raise ConfigSyntaxError("config: expected ';' separating 'TYPE:RANK' from the factor list")
    head, body = text.split(";", 1)
    m = _HEAD.match(head)
    if not m:
        raise ConfigSyntaxError(f"config: head {head.strip()!r} does not match FAMILY ':' RANK")
    rs = build_root_system(m.group(1).upper(), int(m.group(2)))
    factors = []
    for part in body.split(","):
        fm = _FACTOR.match(part)
        if not fm:
            raise ConfigSyntaxError(f"factor: {part.strip()!r} does not match NODE '@' rational ['^' DEPTH]")
        node, p = int(fm.group(1)), Fraction(fm.group(2))
        depth = int(fm.group(3)) if fm.group(3) else 1
        if depth < 1:
            raise ConfigSyntaxError("factor: DEPTH must be >= 1")
        if node not in rs.nodes:
            raise ConfigSyntaxError(f"factor: node {node} out of range 1..{rs.rank}")
        if ring == "laurent" and p == 0:
            raise ConfigSyntaxError("factor: Laurent points must be nonzero")
        point = Point((p,), ()) if ring == "laurent" else Point((), (p,))
        base = fundamental_module(rs, node)
        factors.append(EvaluationModule(base, point) if depth == 1 else JetModule(base, point, depth))
    return TensorConfiguration(factors)


def describe(cfg: TensorConfiguration) -> str:
    parts = []
    for fct in cfg.factors:
        node = fct.base.highest_weight().index(1) + 1 if any(fct.base.highest_weight()) else 0
        p = (fct.point.t + fct.point.u)[0] if (fct.point.t + fct.point.u) else ""
        parts.append(f"{node}@{p}" + (f"^{fct.depth}" if getattr(fct, "depth", 1) > 1 else ""))
    return f"{cfg.rs.family}:{cfg.rs.rank}; " + ", ".join(parts)


def evaluation_config(rs: RootSystem, nodes: Sequence[int], points: Sequence, ring: str = "poly") -> TensorConfiguration:
    factors = []
    for node, p in zip(nodes, points):
        point = Point((p,), ()) if ring == "laurent" else Point((), (p,))
        factors.append(EvaluationModule(fundamental_module(rs, node), point))
    return TensorConfiguration(factors)


def normalize_to_base(cfg: TensorConfiguration):
    """Move a single-point configuration to the base point; returns (config, automorphism).

    The automorphism phi satisfies phi(I) = ideal of the original point, so the
    module pulled back along phi is the returned configuration.
    """
    pts = cfg.points
    if len(set(pts)) != 1:
        raise MixedPointsError(pts)
    p = pts[0]
    phi = automorphism_to_point(p.t, p.u)
    origin = Point.base(cfg.k, cfg.l)
    factors = []
    for fct in cfg.factors:
        if isinstance(fct, JetModule):
            factors.append(JetModule(fct.base, origin, fct.depth))
        else:
            factors.append(EvaluationModule(fct.base, origin))
    return TensorConfiguration(factors), phi
