from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weylhom.polyalg import RingElement
from weylhom.repmod import (
    EvaluationModule, Point, build_sl2_module, fundamental_module, parse_configuration, trivial_module,
)
from weylhom.rootsys import build_root_system
from weylhom.weylglob import (
    Inconclusive, TruncatedBimodule, Window, WindowOverflow, check_highest_relations, cyclic_span_dimension,
    freeness_rank, invariants_equal_base, stabilization_check, u_degree_invariant_criterion, window_size,
)

V1 = build_sl2_module(1)


def poly_tb(mod=V1, D=4):
    return TruncatedBimodule(EvaluationModule(mod, Point.base(0, 1)), max_u=D)


def laurent_tb(mod=V1, T=3):
    return TruncatedBimodule(EvaluationModule(mod, Point.base(1, 0)), max_t=T)


def test_highest_relations_examples():
    tb = poly_tb()
    assert check_highest_relations(tb).passed
    u = ((), (1,))
    assert tb.act("h", 1, u, tb.highest_vector()) == {(0, u): 1}
    tl = laurent_tb()
    assert check_highest_relations(tl).passed
    t = ((1,), ())
    assert tl.act("h", 1, t, tl.highest_vector()) == {(0, t): 1}
    triv = poly_tb(trivial_module(V1.rs), D=2)
    assert check_highest_relations(triv).passed


def test_highest_relations_detects_wrong_vector():
    tb = poly_tb()
    tb.highest_vector = lambda: tb.pure(1)
    rep = check_highest_relations(tb)
    assert rep.verdict == "fail"
    assert rep.witness == {"relation": "e", "node": 1, "monomial": "1"}


def test_cyclic_span_examples():
    tb = poly_tb()
    assert cyclic_span_dimension(tb, Window(3, 0)) == 8
    assert cyclic_span_dimension(tb, Window(0, 0)) == 2
    with pytest.raises(ValueError):
        cyclic_span_dimension(tb, Window(4, 0))
    with pytest.raises(Inconclusive):
        cyclic_span_dimension(tb, Window(3, 0), budget=5)


def test_cyclic_span_trivial_module_degenerate():
    tb = poly_tb(trivial_module(V1.rs), D=3)
    assert cyclic_span_dimension(tb, Window(2, 0)) == 1


@pytest.mark.parametrize("rank", [1, 2])
@pytest.mark.parametrize("ring", ["poly", "laurent"])
def test_window_scale_reconstruction(rank, ring):
    rs = build_root_system("A", rank)
    for node in rs.nodes:
        mod = fundamental_module(rs, node)
        tb = poly_tb(mod, D=4) if ring == "poly" else laurent_tb(mod, T=4)
        sub = Window(3, 0) if ring == "poly" else Window(0, 3)
        assert check_highest_relations(tb).passed
        assert cyclic_span_dimension(tb, sub) == mod.dim * window_size(tb, sub)
        assert freeness_rank(tb) == mod.dim * window_size(tb)
        assert invariants_equal_base(tb).passed


def test_invariants_examples():
    rep = invariants_equal_base(poly_tb(D=3))
    assert rep.passed and rep.params["dim"] == 4
    assert invariants_equal_base(poly_tb(trivial_module(V1.rs), D=3)).params["dim"] == 4
    pair = TruncatedBimodule(parse_configuration("A:1; 1@0, 1@0"), max_u=3)
    rep = invariants_equal_base(pair)
    assert rep.passed and rep.params["base_invariants"] == 2 and rep.params["dim"] == 8


def test_window_overflow_is_signalled():
    tb = poly_tb(D=2)
    with pytest.raises(WindowOverflow):
        tb.right_mul_in_window(tb.pure(0, ((), (2,))), ((), (1,)))
    with pytest.raises(WindowOverflow):
        tb.to_vector({(0, ((), (3,))): Fraction(1)})


def test_base_point_required():
    with pytest.raises(ValueError):
        TruncatedBimodule(EvaluationModule(V1, Point((), (1,))), max_u=2)


def _window_elements(tb, draw, n):
    out = {}
    for _ in range(n):
        b = draw(st.integers(0, tb.base.dim - 1))
        m = draw(st.sampled_from(tb.monomials))
        out[(b, m)] = Fraction(draw(st.integers(-3, 3)))
    return {c: v for c, v in out.items() if v}


@given(st.data())
def test_bimodule_compatibility(data):
    rs = build_root_system("A", 2)
    ring = data.draw(st.sampled_from(["poly", "laurent"]))
    mod = fundamental_module(rs, data.draw(st.integers(1, 2)))
    tb = poly_tb(mod, D=3) if ring == "poly" else laurent_tb(mod, T=2)
    z = _window_elements(tb, data.draw, 3)
    kind = data.draw(st.sampled_from("efh"))
    node = data.draw(st.integers(1, 2))
    a = data.draw(st.sampled_from(tb.monomials))
    c = data.draw(st.sampled_from(tb.monomials))
    lhs = tb.act(kind, node, a, tb.right_mul(z, c))
    rhs = tb.right_mul(tb.act(kind, node, a, z), c)
    assert lhs == rhs


@given(st.data())
def test_left_action_is_a_lie_action(data):
    tb = poly_tb(D=3)
    z = _window_elements(tb, data.draw, 2)
    a = data.draw(st.sampled_from(tb.monomials))
    b = data.draw(st.sampled_from(tb.monomials))
    ab = RingElement(0, 1, {a: 1}) * RingElement(0, 1, {b: 1})
    ef = tb.act("e", 1, a, tb.act("f", 1, b, z))
    fe = tb.act("f", 1, b, tb.act("e", 1, a, z))
    diff = dict(ef)
    for key, v in fe.items():
        diff[key] = diff.get(key, 0) - v
    diff = {k: v for k, v in diff.items() if v}
    assert diff == tb.act("h", 1, ab, z)


def test_stabilization_examples():
    pair = parse_configuration("A:1; 1@2, 1@3", ring="laurent")
    single = parse_configuration("A:1; 1@2", ring="laurent")
    for K in range(5):
        assert stabilization_check(pair, K)
        assert stabilization_check(single, K)
    with pytest.raises(ValueError):
        stabilization_check(parse_configuration("A:1; 1@2"), 1)


def test_u_degree_examples():
    assert u_degree_invariant_criterion(poly_tb(D=4), 1)
    assert u_degree_invariant_criterion(poly_tb(trivial_module(V1.rs), D=2), 1)
    pair = TruncatedBimodule(parse_configuration("A:1; 1@0, 1@0"), max_u=6)
    assert u_degree_invariant_criterion(pair, 2, N=2)
    jet = TruncatedBimodule(parse_configuration("A:1; 1@0^2"), max_u=6)
    assert u_degree_invariant_criterion(jet, 2)
    with pytest.raises(Inconclusive):
        u_degree_invariant_criterion(poly_tb(D=1), 1)
    with pytest.raises(ValueError):
        u_degree_invariant_criterion(jet, 1)
    with pytest.raises(ValueError):
        u_degree_invariant_criterion(laurent_tb(), 1)


def test_reports_are_deterministic():
    a = invariants_equal_base(poly_tb(D=2)).to_json()
    b = invariants_equal_base(poly_tb(D=2)).to_json()
    assert a == b
    assert set(a) >= {"check", "params", "window", "verdict"}
