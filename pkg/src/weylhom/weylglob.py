"""The twisted bimodule (V (x) A)_h at window scale.

Elements are finitely supported maps (basis index, monomial) -> Fraction.
The left action of x (x) a is routed through the comultiplication:
(x (x) a)(v (x) b) = sum_s (x (x) a'_s) v (x) a''_s b with Delta(a) = sum a'_s (x) a''_s.
It is computed exactly with no degree cap; only converting to window
coordinates can overflow, and that raises ``WindowOverflow``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .linalg import EchelonBasis, nullspace, rank
from .polyalg import (
    MonoKey, RingElement, comultiply_key, deg_u, format_element, key_mul, monomials_in_window, unit_key,
)
from .repmod import (
    KINDS, LoopModule, Point, TensorConfiguration, all_loop_invariants, annihilator_exponent, invariant_space,
)
from .rootsys import dominance_leq

Coord = Tuple[int, MonoKey]
Elem = Dict[Coord, Fraction]


class WindowOverflow(ArithmeticError):
    """A result that must lie in the window has support outside it."""


class Inconclusive(RuntimeError):
    """The window or iteration budget is too small to decide a check."""


@dataclass(frozen=True)
class Window:
    max_u: int
    max_t: int

    def __post_init__(self):
        if self.max_u < 0 or self.max_t < 0:
            raise ValueError("window bounds must be nonnegative")

    def contains(self, key: MonoKey) -> bool:
        return deg_u(key) <= self.max_u and all(abs(e) <= self.max_t for e in key[0])

    def monomials(self, k: int, l: int) -> List[MonoKey]:
        return monomials_in_window(k, l, self.max_u if l else 0, self.max_t if k else 0)

    def to_json(self) -> dict:
        return {"max_u": self.max_u, "max_t": self.max_t}


@dataclass
class CheckReport:
    check: str
    params: dict
    window: dict
    verdict: str
    witness: Optional[dict] = None

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_json(self) -> dict:
        out = {"check": self.check, "params": self.params, "window": self.window, "verdict": self.verdict}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def _module_points(base: LoopModule) -> List[Point]:
    if isinstance(base, TensorConfiguration):
        return base.points
    return [base.point]


def top_weight_index(base: LoopModule) -> int:
    """Index of the unique basis vector of dominance-maximal weight."""
    rs = base.rs
    spaces = base.weight_spaces()
    tops = [w for w in spaces if not any(v != w and dominance_leq(rs.weight(w), rs.weight(v)) for v in spaces)]
    if len(tops) != 1 or len(spaces[tops[0]]) != 1:
        raise ValueError("base module has no one-dimensional top weight space")
    return spaces[tops[0]][0]


class TruncatedBimodule:
    """(V (x) A)_h for a loop module V supported at the base point (1,...,1, 0,...,0)."""

    def __init__(self, base: LoopModule, max_u: int = 0, max_t: int = 0):
        self.base = base
        self.rs = base.rs
        self.k, self.l = base.k, base.l
        origin = Point.base(self.k, self.l)
        if any(p != origin for p in _module_points(base)):
            raise ValueError("base module must be supported at the base point; apply a shift automorphism first")
        self.window = Window(max_u, max_t)
        self.monomials = self.window.monomials(self.k, self.l)
        self._mono_pos = {m: n for n, m in enumerate(self.monomials)}
        self._mats: Dict[tuple, object] = {}

    @property
    def dim(self) -> int:
        return self.base.dim * len(self.monomials)

    # coordinates -----------------------------------------------------------
    def index(self, coord: Coord) -> int:
        b, key = coord
        pos = self._mono_pos.get(key)
        if pos is None:
            raise WindowOverflow(f"monomial {key} lies outside the window {self.window}")
        return b * len(self.monomials) + pos

    def coord(self, idx: int) -> Coord:
        b, pos = divmod(idx, len(self.monomials))
        return b, self.monomials[pos]

    def to_vector(self, z: Elem) -> Dict[int, Fraction]:
        return {self.index(c): v for c, v in z.items()}

    def from_vector(self, vec: Dict[int, Fraction]) -> Elem:
        return {self.coord(i): v for i, v in vec.items()}

    def in_window(self, z: Elem) -> bool:
        return all(key in self._mono_pos for _, key in z)

    def pure(self, b: int, key: Optional[MonoKey] = None) -> Elem:
        return {(b, unit_key(self.k, self.l) if key is None else key): Fraction(1)}

    # actions ---------------------------------------------------------------
    def _mat(self, kind: str, node: int, key: MonoKey):
        hit = self._mats.get((kind, node, key))
        if hit is None:
            hit = self.base.act(kind, node, RingElement(self.k, self.l, {key: 1}))
            self._mats[(kind, node, key)] = hit
        return hit

    def act(self, kind: str, node: int, a, z: Elem) -> Elem:
        """(x (x) a) z through the comultiplication; exact and uncapped."""
        if not isinstance(a, RingElement):
            a = RingElement(self.k, self.l, {a: 1}) if isinstance(a, tuple) else RingElement.constant(self.k, self.l, a)
        by_mono: Dict[MonoKey, Dict[int, Fraction]] = {}
        for (b, key), c in z.items():
            by_mono.setdefault(key, {})[b] = c
        out: Elem = {}
        for akey, ac in a.terms.items():
            for (left, right), dc in comultiply_key(akey).items():
                mat = self._mat(kind, node, left)
                if mat.is_zero():
                    continue
                for bkey, vec in by_mono.items():
                    target = key_mul(right, bkey)
                    for r, v in mat.apply(vec).items():
                        c = out.get((r, target), 0) + ac * dc * v
                        if c:
                            out[(r, target)] = c
                        else:
                            out.pop((r, target), None)
        return out

    def right_mul(self, z: Elem, a) -> Elem:
        if not isinstance(a, RingElement):
            a = RingElement(self.k, self.l, {a: 1}) if isinstance(a, tuple) else RingElement.constant(self.k, self.l, a)
        out: Elem = {}
        for (b, key), c in z.items():
            for akey, ac in a.terms.items():
                t = (b, key_mul(key, akey))
                s = out.get(t, 0) + c * ac
                if s:
                    out[t] = s
                else:
                    out.pop(t, None)
        return out

    def right_mul_in_window(self, z: Elem, a) -> Elem:
        out = self.right_mul(z, a)
        if not self.in_window(out):
            raise WindowOverflow("right multiplication leaves the window")
        return out

    def highest_vector(self) -> Elem:
        return self.pure(top_weight_index(self.base))

    def invariant_basis(self, keys: Sequence[MonoKey]) -> List[Dict[int, Fraction]]:
        """Window vectors z with (e_j (x) m) z = 0 for every node j and m in ``keys``."""
        rows: Dict[tuple, Dict[int, Fraction]] = {}
        for col in range(self.dim):
            unit = self.from_vector({col: Fraction(1)})
            for key in keys:
                for j in self.rs.nodes:
                    for out, v in self.act("e", j, key, unit).items():
                        rows.setdefault((j, key, out), {})[col] = v
        return nullspace(rows.values(), self.dim)

    def params(self) -> dict:
        return {"type": self.rs.name, "k": self.k, "l": self.l, "dim_V": self.base.dim}


# ---------------------------------------------------------------------------
# checks

def check_highest_relations(tb: TruncatedBimodule) -> CheckReport:
    """Defining relations of the global Weyl module on w (x) 1, and (h_i (x) m)(w (x) 1) = lambda(h_i) w (x) m."""
    if tb.window.max_u < 1 and tb.l or tb.window.max_t < 1 and tb.k:
        raise ValueError("window bounds must be >= 1")
    top = top_weight_index(tb.base)
    lam = tb.base.weights[top]
    w = tb.highest_vector()
    report = lambda verdict, witness=None: CheckReport(  # noqa: E731
        "highest_relations", dict(tb.params(), weight=list(lam)), tb.window.to_json(), verdict, witness)
    for m in tb.monomials:
        for j in tb.rs.nodes:
            if tb.act("e", j, m, w):
                return report("fail", {"relation": "e", "node": j, "monomial": _fmt_key(m)})
            expect = {(top, m): Fraction(lam[j - 1])} if lam[j - 1] else {}
            if tb.act("h", j, m, w) != expect:
                return report("fail", {"relation": "h", "node": j, "monomial": _fmt_key(m)})
    for j in tb.rs.nodes:
        z = w
        for _ in range(lam[j - 1] + 1):
            z = tb.act("f", j, 1, z)
        if z:
            return report("fail", {"relation": "f-power", "node": j})
    return report("pass")


def _restrict(tb: TruncatedBimodule, sub: Window) -> List[int]:
    return [i for i in range(tb.dim) if sub.contains(tb.coord(i)[1])]


def cyclic_span_dimension(tb: TruncatedBimodule, sub: Window, budget: int = 200_000) -> int:
    """dim of U(g (x) A)(w (x) 1) intersected with the sub-window.

    Saturation runs inside tb's window and discards images that leave it, so
    the value is a lower bound for the true intersection; it is exact
    whenever it reaches dim V * |sub-window|.
    """
    if (tb.l and sub.max_u >= tb.window.max_u) or (tb.k and sub.max_t >= tb.window.max_t):
        raise ValueError("sub-window must lie strictly inside the window")
    ops = [(kind, j, m) for kind in KINDS for j in tb.rs.nodes for m in tb.monomials]
    basis = EchelonBasis()
    start = tb.to_vector(tb.highest_vector())
    basis.add(start)
    queue = [start]
    steps = 0
    while queue:
        v = queue.pop()
        z = tb.from_vector(v)
        for kind, j, m in ops:
            steps += 1
            if steps > budget:
                raise Inconclusive(f"saturation exceeded its budget of {budget} steps")
            img = tb.act(kind, j, m, z)
            if not img or not tb.in_window(img):
                continue
            vec = tb.to_vector(img)
            if basis.add(vec):
                queue.append(vec)
    inside = set(_restrict(tb, sub))
    outside_rows = [{i: x for i, x in vec.items() if i not in inside} for vec in basis.vectors()]
    return basis.dim - rank(r for r in outside_rows if r)


def window_size(tb: TruncatedBimodule, sub: Optional[Window] = None) -> int:
    win = sub or tb.window
    return len(win.monomials(tb.k, tb.l))


def freeness_rank(tb: TruncatedBimodule) -> int:
    """Rank of {(v_b (x) 1) . m : b, m in window}; dim V * |window| means free with basis v_b (x) 1."""
    vecs = []
    for b in range(tb.base.dim):
        for m in tb.monomials:
            vecs.append(tb.to_vector(tb.right_mul_in_window(tb.pure(b), m)))
    return rank(vecs)


def invariants_equal_base(tb: TruncatedBimodule) -> CheckReport:
    """Window invariants of (V (x) A)_h against V^{n+ (x) A} (x) window monomials."""
    found = tb.invariant_basis(tb.monomials)
    base_inv = all_loop_invariants(tb.base).basis
    expected = []
    for v in base_inv:
        for m in tb.monomials:
            expected.append(tb.to_vector({(b, m): c for b, c in v.items()}))
    span = EchelonBasis()
    for vec in found:
        span.add(vec)
    params = dict(tb.params(), base_invariants=len(base_inv))
    for vec in expected:
        if not span.contains(vec):
            return CheckReport("invariants_equal_base", params, tb.window.to_json(), "fail",
                               {"missing": _fmt_elem(tb, vec)})
    if len(found) != len(expected):
        extra = EchelonBasis()
        for vec in expected:
            extra.add(vec)
        odd = next(vec for vec in found if not extra.contains(vec))
        return CheckReport("invariants_equal_base", params, tb.window.to_json(), "fail",
                           {"extra": _fmt_elem(tb, odd), "found": len(found), "expected": len(expected)})
    return CheckReport("invariants_equal_base", dict(params, dim=len(found)), tb.window.to_json(), "pass")


def stabilization_check(cfg: LoopModule, K: int) -> bool:
    """Vectors killed by e_j (x) t^d for |d| >= K coincide with the loop invariants (Laurent case).

    d ranges over [K, K+L] and [-K-L, -K] with L = algebra_length; since t
    is a unit, t^K times 1, ..., t^{L-1} already spans the finite quotient A/J.
    """
    if (cfg.k, cfg.l) != (1, 0):
        raise ValueError("stabilization_check needs the Laurent ring R_{1,0}")
    if K < 0:
        raise ValueError("K must be nonnegative")
    L = cfg.algebra_length
    ds = sorted(set(range(K, K + L + 1)) | set(range(-K - L, -K + 1)))
    keys = [((d,), ()) for d in ds]
    high = invariant_space(cfg, keys)
    full = all_loop_invariants(cfg)
    if high.dim != full.dim:
        return False
    span = EchelonBasis()
    for v in high.basis:
        span.add(v)
    return all(span.contains(v) for v in full.basis)


def u_degree_invariant_criterion(tb: TruncatedBimodule, K: int, N: Optional[int] = None) -> bool:
    """Invariants are detected by e_j (x) m with deg_u m in [K, K+N] once K >= N."""
    if tb.k != 0 or tb.l < 1:
        raise ValueError("u_degree_invariant_criterion needs k = 0 and l >= 1")
    N = annihilator_exponent(tb.base) if N is None else N
    if K < N:
        raise ValueError(f"K = {K} must be at least the annihilator exponent N = {N}")
    if tb.window.max_u < K + N:
        raise Inconclusive(f"window max_u = {tb.window.max_u} is below K + N = {K + N}")
    probe = [m for m in tb.monomials if K <= deg_u(m) <= K + N]
    sub = tb.invariant_basis(probe)
    full = tb.invariant_basis(tb.monomials)
    if len(sub) != len(full):
        return False
    span = EchelonBasis()
    for v in sub:
        span.add(v)
    return all(span.contains(v) for v in full)


def _fmt_key(key: MonoKey) -> str:
    return format_element(RingElement(len(key[0]), len(key[1]), {key: 1}))


def _fmt_elem(tb: TruncatedBimodule, vec: Dict[int, Fraction]) -> List[dict]:
    out = []
    for i, c in sorted(vec.items()):
        b, key = tb.coord(i)
        out.append({"basis": b, "monomial": _fmt_key(key), "coeff": str(c)})
    return out
