"""The acceptance battery: ten exact checks, each with a wall-clock budget.

Shared by ``weylhom check-suite`` and the test suite.  A criterion passes
only if every instance agrees exactly and the run finishes inside its budget.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, product
from typing import Callable, Dict, List, Optional, Tuple

from .charring import fundamental_invariant_character, hom_rank, remark_red_check
from .polyalg import (
    Monomial, RingElement, SymmetrizerContext, TensorElement, binom_matrix_det, check_degree_bookkeeping,
    comultiply, comultiply_slot, counit_slot, is_block_invariant, predicted_binom_det, sym_element,
)
from .repmod import (
    EvaluationModule, Point, TensorConfiguration, build_sl2_module, fundamental_module, loop_invariants,
    parse_configuration, trivial_module,
)
from .rootsys import build_root_system
from .weylglob import (
    TruncatedBimodule, Window, check_highest_relations, cyclic_span_dimension, freeness_rank,
    invariants_equal_base, stabilization_check, u_degree_invariant_criterion, window_size,
)


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    elapsed: float
    budget: float
    instances: int
    detail: str = ""

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return (f"[{mark}] {self.number:>2}. {self.name}: {self.instances} instances, "
                f"{self.elapsed:.2f}s / {self.budget:g}s" + (f" ({self.detail})" if self.detail else ""))

    def to_json(self) -> dict:
        return {
            "criterion": self.number, "name": self.name, "passed": self.passed,
            "elapsed_s": round(self.elapsed, 4), "budget_s": self.budget,
            "instances": self.instances, "detail": self.detail,
        }


class _Tally:
    def __init__(self):
        self.count = 0
        self.failure: Optional[str] = None

    def check(self, ok: bool, what: str) -> None:
        self.count += 1
        if not ok and self.failure is None:
            self.failure = what


def _run(number: int, name: str, budget: float, body: Callable[[_Tally], None]) -> CriterionResult:
    tally = _Tally()
    start = time.perf_counter()
    try:
        body(tally)
    except Exception as exc:  # a crash is a failure of the criterion, not of the suite
        tally.failure = tally.failure or f"{type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - start
    detail = tally.failure or ""
    if tally.failure is None and elapsed >= budget:
        detail = "over time budget"
    passed = tally.failure is None and elapsed < budget
    return CriterionResult(number, name, passed, elapsed, budget, tally.count, detail)


# ---------------------------------------------------------------------------

def _compositions(rank: int, total_max: int):
    for s in product(range(total_max + 1), repeat=rank):
        if sum(s) <= total_max:
            yield s


def criterion_1(t: _Tally) -> None:
    for fam in ("A", "C"):
        for rank in range(1 if fam == "A" else 2, 6):
            rs = build_root_system(fam, rank)
            for s in _compositions(rank, 4):
                for k in (0, 1, 2):
                    got = dict(hom_rank(rs, s, k).entries)
                    t.check(got == {tuple(s): 1}, f"{rs.name} s={s} k={k}: {got}")


def criterion_2(t: _Tally) -> None:
    b3 = build_root_system("B", 3)
    d6 = build_root_system("D", 6)
    ch = lambda rs, i, k: dict(fundamental_invariant_character(rs, i, k).terms)  # noqa: E731
    t.check(ch(b3, 2, 1) == {(0, 1, 0): 1, (0, 0, 0): 1}, "fundchar(B_3, 2, 1)")
    t.check(ch(b3, 2, 2) == {(0, 1, 0): 1, (0, 0, 0): 2}, "fundchar(B_3, 2, 2)")
    t.check(ch(d6, 4, 1) == {(0, 0, 0, 1, 0, 0): 1, (0, 1, 0, 0, 0, 0): 1, (0,) * 6: 1}, "fundchar(D_6, 4, 1)")
    t.check(remark_red_check(d6, 1), "remark_red_check(D_6, 1)")


def criterion_3(t: _Tally) -> None:
    for N in range(9):
        for K in range(9):
            t.check(binom_matrix_det(N, K) == predicted_binom_det(N), f"det C({N},{K})")


def _oracle_configs():
    """Distinct-point configurations of <= 3 fundamental evaluation factors, type A rank <= 3."""
    poly_points = [Fraction(0), Fraction(1), Fraction(-1, 2)]
    laurent_points = [Fraction(1), Fraction(2), Fraction(-1, 3)]
    for rank in (1, 2, 3):
        rs = build_root_system("A", rank)
        for size in (1, 2, 3):
            for nodes in combinations_with_replacement(rs.nodes, size):
                yield rs, nodes, poly_points[:size], "poly"
                if rank <= 2:
                    yield rs, nodes, laurent_points[:size], "laurent"


def _config(rs, nodes, points, ring) -> TensorConfiguration:
    factors = []
    for node, p in zip(nodes, points):
        pt = Point((p,), ()) if ring == "laurent" else Point((), (p,))
        factors.append(EvaluationModule(fundamental_module(rs, node), pt))
    return TensorConfiguration(factors)


def criterion_4(t: _Tally) -> None:
    for rs, nodes, points, ring in _oracle_configs():
        cfg = _config(rs, nodes, points, ring)
        s = cfg.node_counts()
        table = hom_rank(rs, s, cfg.k)
        for mu in sorted(cfg.weight_spaces(), reverse=True):
            if any(c < 0 for c in mu):
                continue
            got = loop_invariants(cfg, mu).dim
            t.check(got == table.coeff(mu), f"{rs.name} nodes={nodes} {ring} mu={mu}: {got} vs {table.coeff(mu)}")
    if t.count < 30:
        t.check(False, f"only {t.count} (configuration, mu) pairs")


def criterion_5(t: _Tally) -> None:
    cfg = parse_configuration("A:1; 1@1/2, 1@1/2")
    got = loop_invariants(cfg, (0,)).dim
    predicted = hom_rank(cfg.rs, (2,), cfg.k).coeff((0,))
    t.check(got == 1, f"same-point invariant dim {got}, expected 1")
    t.check(predicted == 0, f"c_s(0) = {predicted}, expected 0")


def random_monomial(rng: random.Random, k: int, l: int, max_u: int = 6, max_t: int = 3) -> Monomial:
    total = rng.randint(0, max_u) if l else 0
    u = [0] * l
    for _ in range(total):
        u[rng.randrange(l)] += 1
    t = [rng.randint(-max_t, max_t) for _ in range(k)]
    return Monomial(tuple(t), tuple(u), Fraction(rng.randint(1, 5), rng.randint(1, 3)))


def random_element(rng: random.Random, k: int, l: int, terms: int = 3) -> RingElement:
    out = RingElement(k, l)
    for _ in range(rng.randint(1, terms)):
        out = out + random_monomial(rng, k, l, max_u=3, max_t=2).element()
    return out


def criterion_6(t: _Tally, seed: int = 0) -> None:
    rng = random.Random(seed)
    shapes = [(k, l) for k in range(3) for l in range(3) if k + l]
    for n in range(200):
        k, l = shapes[n % len(shapes)]
        m = random_monomial(rng, k, l)
        m2 = random_monomial(rng, k, l)
        d = comultiply(m)
        t.check(comultiply_slot(d, 0) == comultiply_slot(d, 1), f"coassociativity at {m}")
        as_tensor = TensorElement.pure([m.element()])
        t.check(counit_slot(d, 0) == as_tensor and counit_slot(d, 1) == as_tensor, f"counit at {m}")
        t.check(comultiply(m.element() * m2.element()) == d * comultiply(m2), f"multiplicativity at {m}, {m2}")
        if m.deg_u > 0:
            t.check(check_degree_bookkeeping(m), f"degree bookkeeping at {m}")


def criterion_7(t: _Tally) -> None:
    for rank in (1, 2):
        rs = build_root_system("A", rank)
        for node in rs.nodes:
            for ring in ("poly", "laurent"):
                if ring == "poly":
                    base = EvaluationModule(fundamental_module(rs, node), Point.base(0, 1))
                    tb, sub = TruncatedBimodule(base, max_u=4), Window(3, 0)
                else:
                    base = EvaluationModule(fundamental_module(rs, node), Point.base(1, 0))
                    tb, sub = TruncatedBimodule(base, max_t=4), Window(0, 3)
                tag = f"{rs.name} node {node} {ring}"
                t.check(check_highest_relations(tb).passed, f"{tag}: highest relations")
                t.check(cyclic_span_dimension(tb, sub) == base.dim * window_size(tb, sub), f"{tag}: cyclic span")
                t.check(freeness_rank(tb) == base.dim * window_size(tb), f"{tag}: freeness rank")
                t.check(invariants_equal_base(tb).passed, f"{tag}: invariants")


def criterion_8(t: _Tally) -> None:
    pair = parse_configuration("A:1; 1@2, 1@3", ring="laurent")
    single = parse_configuration("A:1; 1@2", ring="laurent")
    for K in range(5):
        t.check(stabilization_check(pair, K), f"stabilization pair K={K}")
        t.check(stabilization_check(single, K), f"stabilization single K={K}")
    sl2 = build_sl2_module(1)
    v1 = EvaluationModule(sl2, Point.base(0, 1))
    t.check(u_degree_invariant_criterion(TruncatedBimodule(v1, max_u=4), 1), "V(1), N=1, K=1, D=4")
    triv = EvaluationModule(trivial_module(sl2.rs), Point.base(0, 1))
    t.check(u_degree_invariant_criterion(TruncatedBimodule(triv, max_u=2), 1), "trivial base module")
    same = parse_configuration("A:1; 1@0, 1@0")
    t.check(u_degree_invariant_criterion(TruncatedBimodule(same, max_u=6), 2, N=2), "V(1)(x)V(1), N=2, K=2, D=6")
    jet = parse_configuration("A:1; 1@0^2")
    t.check(u_degree_invariant_criterion(TruncatedBimodule(jet, max_u=6), 2), "jet module, N=2, K=2, D=6")


def criterion_9(t: _Tally) -> None:
    cfg = parse_configuration("A:1; 1@0, 1@1")
    d_lambda = build_sl2_module(1).dim ** 2
    t.check(d_lambda == 4 and cfg.dim == d_lambda, f"d_lambda = {d_lambda}, tensor dim = {cfg.dim}")
    total = sum(loop_invariants(cfg, mu).dim for mu in cfg.weight_spaces() if all(c >= 0 for c in mu))
    t.check(total == 1, f"sum of invariant dimensions = {total}")
    t.check(hom_rank(cfg.rs, (2,), cfg.k).character.mass() == 1, "c_s mass")


def criterion_10(t: _Tally, seed: int = 0) -> None:
    rng = random.Random(seed)
    shapes = [(0, 1), (1, 0), (1, 1), (0, 2), (2, 0)]
    contexts = []
    for total in range(1, 5):
        for n in range(1, total + 1):
            for r in product(range(1, total + 1), repeat=n):
                if sum(r) == total:
                    contexts.append(SymmetrizerContext(r))
    elements = 0
    for ctx in contexts:
        for _ in range(3):
            k, l = rng.choice(shapes)
            a, b = random_element(rng, k, l), random_element(rng, k, l)
            elements += 2
            i, j = rng.randint(1, len(ctx.r)), rng.randint(1, len(ctx.r))
            x, y = sym_element(ctx, i, a), sym_element(ctx, j, b)
            t.check(is_block_invariant(ctx, x), f"sym invariance r={ctx.r}")
            t.check(is_block_invariant(ctx, x * y), f"product invariance r={ctx.r}")
            t.check(is_block_invariant(ctx, x * y + x), f"sum invariance r={ctx.r}")
    for _ in range(10):
        k, l = rng.choice(shapes)
        a = random_element(rng, k, l)
        elements += 1
        t.check(sym_element(SymmetrizerContext((1,)), 1, a).slot_element() == a, "A_{omega_i} = A")
        for n, i in ((3, 2), (2, 1)):
            r = tuple(int(j == i) for j in range(1, n + 1))
            t.check(sym_element(SymmetrizerContext(r), i, a).slot_element() == a, f"slot embedding r={r}")
    if elements < 50:
        t.check(False, f"only {elements} random ring elements")


CRITERIA: List[Tuple[int, str, float, Callable[[_Tally], None]]] = [
    (1, "Hom-rank collapse for types A and C", 5.0, criterion_1),
    (2, "fundamental invariant character tables", 1.0, criterion_2),
    (3, "binomial determinant identity", 1.0, criterion_3),
    (4, "module oracle agrees with hom_rank", 30.0, criterion_4),
    (5, "distinct-point necessity", 1.0, criterion_5),
    (6, "bialgebra laws and degree bookkeeping", 5.0, criterion_6),
    (7, "bimodule reconstruction at window scale", 30.0, criterion_7),
    (8, "stabilization lemmas", 10.0, criterion_8),
    (9, "freeness rank consistency", 1.0, criterion_9),
    (10, "symmetrizer algebra", 5.0, criterion_10),
]


def run_criterion(number: int) -> CriterionResult:
    for num, name, budget, body in CRITERIA:
        if num == number:
            return _run(num, name, budget, body)
    raise ValueError(f"no acceptance criterion {number}")


def run_all() -> List[CriterionResult]:
    return [_run(num, name, budget, body) for num, name, budget, body in CRITERIA]


def summary_json(results: List[CriterionResult]) -> Dict:
    return {"passed": all(r.passed for r in results), "criteria": [r.to_json() for r in results]}
