from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import character_product, invariant_dim_dense
from weylhom.charring import hom_rank
from weylhom.polyalg import RingElement
from weylhom.repmod import (
    EvaluationModule, GModule, JetModule, MixedPointsError, ModuleError, Point,
    TensorConfiguration, annihilator_exponent, build_sl2_module, build_sln_exterior, build_vector_module,
    fundamental_module, loop_invariants, normalize_to_base, parse_configuration, tensor, trivial_module,
    verify_tensor_factorization,
)
from weylhom.rootsys import RootSystemError, build_root_system


def test_sl2_examples():
    v0 = build_sl2_module(0)
    assert v0.dim == 1 and all(m.is_zero() for m in v0.e_mats + v0.f_mats + v0.h_mats)
    v1 = build_sl2_module(1)
    assert v1.weights == [(1,), (-1,)]
    v2 = build_sl2_module(2)
    assert v2.weights == [(2,), (0,), (-2,)]
    ef = v2.e_mats[0] @ v2.f_mats[0]
    assert ef.apply({0: Fraction(1)}) == {0: 2}


def test_exterior_examples():
    assert build_sln_exterior(2, 1).weights == build_sl2_module(1).weights
    m = build_sln_exterior(3, 2)
    assert m.dim == 3 and m.highest_weight() == (0, 1)
    assert build_sln_exterior(4, 2).dim == 6
    with pytest.raises(ModuleError):
        build_sln_exterior(3, 3)


@pytest.mark.parametrize("family,rank", [("B", 2), ("B", 4), ("C", 2), ("C", 4), ("D", 4), ("D", 5)])
def test_vector_modules_satisfy_relations(family, rank):
    m = build_vector_module(build_root_system(family, rank))
    assert m.highest_weight() == (1,) + (0,) * (rank - 1)
    assert m.dim == {"B": 2 * rank + 1, "C": 2 * rank, "D": 2 * rank}[family]


def test_spin_nodes_unavailable():
    with pytest.raises(NotImplementedError):
        fundamental_module(build_root_system("B", 3), 3)


def test_relations_are_enforced():
    v1 = build_sl2_module(1)
    with pytest.raises(ModuleError):
        GModule(v1.rs, 2, v1.f_mats, v1.e_mats, v1.h_mats, v1.weights)


def test_tensor_examples():
    v1 = build_sl2_module(1)
    t = tensor(v1, v1)
    assert t.dim == 4 and sorted(t.weights) == [(-2,), (0,), (0,), (2,)]
    triv = trivial_module(v1.rs)
    assert tensor(v1, triv).e_mats == v1.e_mats
    a2 = build_root_system("A", 2)
    assert tensor(fundamental_module(a2, 1), fundamental_module(a2, 2)).dim == 9
    with pytest.raises(RootSystemError):
        tensor(v1, fundamental_module(a2, 1))


@given(st.sampled_from([(2, 1), (3, 1), (3, 2), (4, 2)]), st.sampled_from([(2, 1), (3, 1), (3, 2), (4, 1)]))
def test_tensor_weights_are_convolutions(p, q):
    if p[0] != q[0]:
        return
    a, b = build_sln_exterior(*p), build_sln_exterior(*q)
    t = tensor(a, b)
    shift = 2  # keep exponents nonnegative for the polynomial oracle
    lift = lambda ch: {tuple(x + shift for x in w): c for w, c in ch.terms.items()}  # noqa: E731
    want = character_product(a.rs.rank, [lift(a.character()), lift(b.character())])
    want = {tuple(x - 2 * shift for x in w): c for w, c in want.items()}
    assert t.character().terms == want


def test_loop_invariants_examples():
    cfg = parse_configuration("A:1; 1@2, 1@5")
    assert loop_invariants(cfg, (2,)).dim == 1
    assert loop_invariants(cfg, (0,)).dim == 0
    assert loop_invariants(cfg, (4,)).dim == 0
    same = parse_configuration("A:1; 1@2, 1@2")
    assert loop_invariants(same, (0,)).dim == 1
    a2 = parse_configuration("A:2; 1@0, 2@1")
    assert loop_invariants(a2, (1, 1)).dim == 1
    assert loop_invariants(a2, (0, 0)).dim == 0


CONFIGS = [
    (2, [(1, 0), (1, 1)]), (2, [(1, 0), (1, 0)]), (3, [(1, 0), (2, 1)]), (3, [(1, 3), (1, 3)]),
    (3, [(1, 0), (1, 1), (2, 2)]), (4, [(2, 0), (2, -1)]), (4, [(1, 0), (3, 1)]), (3, [(2, 1), (2, 1), (1, 0)]),
]


@pytest.mark.parametrize("n,factors", CONFIGS)
def test_loop_invariants_match_dense_oracle(n, factors):
    rs = build_root_system("A", n - 1)
    cfg = TensorConfiguration([EvaluationModule(fundamental_module(rs, i), Point((), (p,))) for i, p in factors])
    for mu in cfg.weight_spaces():
        assert loop_invariants(cfg, mu).dim == invariant_dim_dense(n, factors, mu), mu


@given(st.lists(st.tuples(st.integers(1, 2), st.fractions(-3, 3, max_denominator=3)), min_size=1, max_size=3))
def test_invariants_independent_of_factor_order(factors):
    rs = build_root_system("A", 2)
    dims = set()
    for perm in set(permutations(factors)):
        cfg = TensorConfiguration([EvaluationModule(fundamental_module(rs, i), Point((), (p,))) for i, p in perm])
        dims.add(tuple(sorted((w, loop_invariants(cfg, w).dim) for w in cfg.weight_spaces())))
    assert len(dims) == 1


@given(st.lists(st.fractions(-3, 3, max_denominator=3), min_size=1, max_size=3),
       st.fractions(-3, 3, max_denominator=3), st.fractions(1, 3, max_denominator=3))
def test_invariants_stable_under_point_automorphisms(points, shift, scale):
    rs = build_root_system("A", 1)
    def dims(ps, laurent):
        mk = (lambda p: Point((p,), ())) if laurent else (lambda p: Point((), (p,)))
        cfg = TensorConfiguration([EvaluationModule(fundamental_module(rs, 1), mk(p)) for p in ps])
        return [loop_invariants(cfg, w).dim for w in sorted(cfg.weight_spaces())]
    assert dims(points, False) == dims([p + shift for p in points], False)
    nonzero = [p + 4 for p in points]
    assert dims(nonzero, True) == dims([p * scale for p in nonzero], True)


@given(st.sampled_from(["A", "C"]), st.data())
def test_distinct_points_concentrate_at_top(family, data):
    rs = build_root_system(family, 2 if family == "C" else data.draw(st.integers(1, 3)))
    nodes = data.draw(st.lists(st.sampled_from(list(rs.nodes) if family == "A" else [1]), min_size=1, max_size=3))
    points = data.draw(st.lists(st.integers(-4, 4), min_size=len(nodes), max_size=len(nodes), unique=True))
    cfg = TensorConfiguration([EvaluationModule(fundamental_module(rs, i), Point((), (p,))) for i, p in zip(nodes, points)])
    total = {w: loop_invariants(cfg, w).dim for w in cfg.weight_spaces() if all(c >= 0 for c in w)}
    assert sum(total.values()) == 1
    top = tuple(sum(fct.base.highest_weight()[j] for fct in cfg.factors) for j in range(rs.rank))
    assert total[top] == 1


def test_type_C_matches_prediction():
    rs = build_root_system("C", 2)
    cfg = TensorConfiguration([EvaluationModule(fundamental_module(rs, 1), Point((), (p,))) for p in (0, 1)])
    table = hom_rank(rs, (2, 0), 0)
    for w in cfg.weight_spaces():
        if all(c >= 0 for c in w):
            assert loop_invariants(cfg, w).dim == table.coeff(w)


def test_annihilator_examples():
    v1 = build_sl2_module(1)
    one = TensorConfiguration([EvaluationModule(v1, Point((), (3,)))])
    assert annihilator_exponent(one) == 1
    # evaluation factors at one point: I acts by zero on each, so N stays 1
    assert annihilator_exponent(parse_configuration("A:1; 1@3, 1@3")) == 1
    assert annihilator_exponent(parse_configuration("A:1; 1@3^2")) == 2
    assert annihilator_exponent(parse_configuration("A:1; 1@0^2, 1@0")) == 2
    assert annihilator_exponent(parse_configuration("A:1; 1@1^3", ring="laurent")) == 3
    with pytest.raises(MixedPointsError) as err:
        annihilator_exponent(parse_configuration("A:1; 1@0, 1@1"))
    assert len(err.value.points) == 2


def test_jet_module_is_a_loop_module():
    jet = JetModule(build_sl2_module(1), Point((Fraction(2),), ()), 3)
    t = RingElement.t(1, 0, 1)
    # (x (x) a)(x (x) b) - (x (x) b)(x (x) a) = [x, x] (x) ab = 0 for h
    a, b = jet.act("h", 1, t), jet.act("h", 1, t ** -1)
    assert (a @ b - b @ a).is_zero()
    # [e (x) a, f (x) b] = h (x) ab
    lhs = jet.act("e", 1, t) @ jet.act("f", 1, t ** 2) - jet.act("f", 1, t ** 2) @ jet.act("e", 1, t)
    assert lhs == jet.act("h", 1, t ** 3)


def test_factorization_examples():
    assert verify_tensor_factorization(parse_configuration("A:2; 1@0, 2@1")).passed
    bad = verify_tensor_factorization(parse_configuration("A:1; 1@0, 1@0"))
    assert [c.name for c in bad.failures][0] == "below_top_matches_prediction"
    assert bad.failures[0].witness == {"weight": [0], "dim": 1, "predicted": 0}
    assert verify_tensor_factorization(parse_configuration("A:3; 2@7")).passed


@pytest.mark.parametrize("text,ring,match", [
    ("A:2 1@0", "poly", "config"), ("Q:2; 1@0", "poly", None), ("A:2; 3@0", "poly", "factor"),
    ("A:2; 1@x", "poly", "factor"), ("A:1; 1@0", "laurent", "factor"), ("A:1; 1@0", "weird", None),
])
def test_config_parser_errors(text, ring, match):
    with pytest.raises(ValueError) as err:
        parse_configuration(text, ring=ring)
    if match:
        assert str(err.value).startswith(match)


def test_normalize_to_base():
    cfg, phi = normalize_to_base(parse_configuration("A:1; 1@5/2, 1@5/2^2"))
    assert all(p == Point.base(0, 1) for p in cfg.points)
    assert phi.image_point == ((), (Fraction(5, 2),))
    with pytest.raises(MixedPointsError):
        normalize_to_base(parse_configuration("A:1; 1@0, 1@1"))
