import os
import pathlib

import pytest

import pskew

DATA = pathlib.Path(os.environ.get("PSKEW_DATA_DIR", pathlib.Path(__file__).resolve().parents[2] / "data"))


def c4_example():
    g = pskew.Group.cyclic(4)
    return pskew.PartialAction.create(
        g,
        ["e1", "e2", "e3"],
        {1: [(1, 0), (2, 1)], 2: [(0, 2), (2, 0)], 3: [(0, 1), (1, 2)]},
    )


def test_c4_example_is_simple():
    a = c4_example()
    assert pskew.validate_axioms(a).ok
    assert pskew.is_G_simple(a)
    for p in (2, 3):
        r = pskew.SkewRing(a, p)
        assert r.dimension == 9
        assert pskew.verify_associativity(r)
        assert pskew.is_maximal_commutative(r)
        assert pskew.centralizer_dimension(r) == 3
        assert pskew.is_simple_oracle(r)["verdict"] is True
        iip, simple = pskew.check_both_criteria(r)
        assert iip["agree"] and simple["agree"]
        assert not simple["skipped"]


def test_multiply_and_format():
    r = pskew.SkewRing(c4_example(), 2)
    one = r.one()
    assert r.format(one) == "1_e1 d_0 + 1_e2 d_0 + 1_e3 d_0"
    for i in range(r.dimension):
        b = r.basis(i)
        assert r.multiply(one, b) == b
        assert r.multiply(b, one) == b
    assert r.augment(one) == [1, 1, 1]
    assert len(r.ideal_generated(r.basis(0))) == r.dimension


def test_homogeneous_outside_domain_is_rejected():
    r = pskew.SkewRing(c4_example(), 2)
    with pytest.raises(Exception):
        r.homogeneous(1, [0, 0, 1])


def test_broken_composition_is_reported():
    a, p = pskew.load_instance(str(DATA / "c4_broken_composition.json"))
    report = pskew.validate_axioms(a)
    assert not report.ok
    assert any(v.axiom == "composition" for v in report.violations)


def test_trivial_action_is_not_simple():
    a = pskew.restrict_global([0, 1], [0, 1], 2)
    assert not pskew.is_G_simple(a)
    assert pskew.invariant_closure(a, [0]) == [0]
    r = pskew.SkewRing(a, 2)
    assert not pskew.is_maximal_commutative(r)
    assert pskew.is_simple_oracle(r)["verdict"] is False


def test_leavitt_graphs():
    a2 = pskew.Graph.parse((DATA / "a2.graph").read_text())
    star = pskew.Graph.parse((DATA / "star.graph").read_text())
    loop = pskew.Graph.parse((DATA / "loop.graph").read_text())
    assert pskew.leavitt_is_simple(a2) and pskew.leavitt_is_simple(star)
    assert not pskew.satisfies_condition_L(loop)
    lr = pskew.build_leavitt_ring(a2, 2)
    assert lr.ring.dimension == 4
    assert pskew.build_leavitt_ring(star, 2).ring.dimension == 9
    w = lr.vertex_witness([1] * len(lr.carrier))
    assert w["confirmed"]


def test_dynamics_and_generator():
    swap = pskew.restrict_global([1, 0], [0, 1], 2)
    d = pskew.check_dynamical_simplicity(swap, 2)
    assert d["topologically_free"] and d["minimal"] and d["simple"] is True
    actions = pskew.random_restrictions(7, 5, 3, 4)
    assert len(actions) == 5
    assert all(pskew.validate_axioms(a).ok for a in actions)


def test_budget_skips():
    r = pskew.SkewRing(c4_example(), 3)
    out = pskew.is_simple_oracle(r, budget=4)
    assert out["verdict"] is None
    assert out["reason"]
