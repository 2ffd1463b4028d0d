import itertools

import pytest

from resdom import families as fam
from resdom.errors import DomainError, InfeasibleTripleError, ParameterError, SizeGuardError
from resdom.graph import complete, cycle, is_connected, path, star
from resdom.solvers import minimum_set


@pytest.mark.parametrize("k, n, want", [(1, 2, 1), (2, 10, 2), (1, 4, 2), (3, 4, 1), (2, 6, 2)])
def test_path_formula_values(k, n, want):
    assert fam.predicted_gamma_rk_path(k, n) == want


@pytest.mark.parametrize("k, n, want", [(1, 6, 3), (2, 10, 3), (2, 11, 3), (1, 3, 2), (1, 9, 3)])
def test_cycle_formula_values(k, n, want):
    assert fam.predicted_gamma_rk_cycle(k, n) == want


@pytest.mark.parametrize("k, r, order", [(1, 2, 8), (2, 2, 18), (1, 3, 30), (2, 3, 105), (1, 1, 2)])
def test_max_order(k, r, order):
    assert fam.predicted_max_order(k, r) == order


def test_tree_metric_dimension_formula():
    assert fam.tree_metric_dimension_formula(star(5)) == 3
    t = fam.tree_t4(2, 1, 1, 3)
    assert fam.tree_metric_dimension_formula(t) == minimum_set(t, "DIM").value
    with pytest.raises(DomainError):
        fam.tree_metric_dimension_formula(path(5))
    with pytest.raises(DomainError):
        fam.tree_metric_dimension_formula(cycle(5))


@pytest.mark.parametrize("params", [
    fam.FamilyParams("T1", k=2, m=0, l=0),
    fam.FamilyParams("T2", k=2, m=0, l=1),
    fam.FamilyParams("T4", k=2, m=0, l=0, r=3),
    fam.FamilyParams("T4", k=2, m=1, l=1, r=2),
    fam.FamilyParams("T5", k=2, m=1, l=0, r=1),
    fam.FamilyParams("T1", k=1, m=1, l=1),
    fam.FamilyParams("SPIDER", k=2, legs=2),
    fam.FamilyParams("CYCLE", n=2),
    fam.FamilyParams("T3", k=2, m=1),
])
def test_quantifiers_enforced(params):
    with pytest.raises(ParameterError):
        fam.generate_family(params)


def test_unknown_family():
    with pytest.raises(ParameterError):
        fam.FamilyParams("PETERSEN")
    assert fam.FamilyParams("extremal-gr", r=2).family == "EXTREMAL_GR"


CERTIFIED = [
    fam.FamilyParams("T1", k=2, m=1, l=2),
    fam.FamilyParams("T1", k=3, m=0, l=1),
    fam.FamilyParams("T2", k=2, m=2, l=3),
    fam.FamilyParams("T3", k=2, m=1, l=2),
    fam.FamilyParams("T3", k=3, m=2, l=1),
    fam.FamilyParams("T4", k=2, m=1, l=1, r=3),
    fam.FamilyParams("T4", k=2, m=0, l=1, r=4),
    fam.FamilyParams("T5", k=2, m=1, l=1, r=2),
    fam.FamilyParams("T5", k=3, m=0, l=1, r=3),
    fam.FamilyParams("SPIDER", k=2, legs=4),
    fam.FamilyParams("T_GAMMA", k=2, gamma=3),
    fam.FamilyParams("EXTREMAL_GR", k=1, r=2),
    fam.FamilyParams("PATH", k=2, n=11),
    fam.FamilyParams("CYCLE", k=1, n=12),
    fam.FamilyParams("COMPLETE", k=3, n=5),
    fam.FamilyParams("STAR", k=1, n=6),
]


@pytest.mark.parametrize("params", CERTIFIED, ids=lambda p: str(p.as_dict()))
def test_family_claims_certify(params):
    ok, computed, claimed = fam.certify(params)
    assert claimed and ok, (computed, claimed)


def test_t4_triple_from_cli_example():
    ok, computed, _ = fam.certify(fam.FamilyParams("T4", k=2, m=1, l=1, r=3))
    assert ok and computed == {"DIM": 4, "GAMMA_K": 3, "GAMMA_RK": 6}


def test_trees_are_trees():
    for p in CERTIFIED[:11]:
        g = fam.generate_family(p)
        assert g.m == g.n - 1 and is_connected(g)


@pytest.mark.parametrize("k", [2, 3])
def test_every_valid_triple_is_realized(k):
    for b, g, a in itertools.product(range(1, 4), range(1, 4), range(1, 7)):
        target = fam.TripleTarget(k, b, g, a)
        valid = max(b, g) <= a <= b + g and not (b == 1 and g >= 2 and a == g + 1)
        if not valid:
            with pytest.raises(InfeasibleTripleError):
                fam.realize_triple(target)
            continue
        tree = fam.realize_triple(target)
        assert tree.m == tree.n - 1 and is_connected(tree)
        got = tuple(minimum_set(tree, name, None if name == "DIM" else k).value
                    for name in ("DIM", "GAMMA_K", "GAMMA_RK"))
        assert got == (b, g, a)


def test_triples_need_k_at_least_two():
    with pytest.raises(ParameterError):
        fam.realize_triple(fam.TripleTarget(1, 1, 1, 1))


def test_extremal_vectors_k1_r2():
    assert fam.extremal_vectors(1, 2) == [(0, 3), (3, 0), (1, 2), (1, 3), (1, 4),
                                          (2, 1), (3, 1), (4, 1)]


def test_extremal_graph_is_certified():
    g = fam.extremal_gr(2, 2)
    assert g.n == 18 and is_connected(g)
    res = minimum_set(g, "GAMMA_RK", 2)
    assert res.value == 2 and res.witness == (0, 1)


def test_extremal_size_guard():
    with pytest.raises(SizeGuardError):
        fam.extremal_gr(2, 4)


def test_complete_graph_claims():
    assert fam.claimed_invariants(fam.FamilyParams("COMPLETE", k=2, n=5))["GAMMA_RK"] == 4
    assert minimum_set(complete(5), "GAMMA_RK", 2).value == 4
