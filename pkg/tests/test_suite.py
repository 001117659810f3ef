import pytest

from conftest import ideal
from ntfkit.graphs import cover_ideal, cycle_graph
from ntfkit.suite import (
    ScenarioOutcome, all_squarefree_ideals, example_ideal, odd_cycle_deletion_rhs, paper_suite,
    scenario_c,
)


@pytest.mark.parametrize("n, count", [(1, 1), (2, 4), (3, 18), (4, 166)])
def test_squarefree_ideal_enumeration(n, count):
    # Dedekind numbers 3, 6, 20, 168 minus the zero and unit ideals
    ideals = list(all_squarefree_ideals(n))
    assert len(ideals) == count == len(set(ideals))


@pytest.mark.parametrize("n", [3, 5, 7])
def test_deletion_identity_every_vertex(n):
    J = cover_ideal(cycle_graph(n))
    for j in range(1, n + 1):
        assert J.deletion(j) == odd_cycle_deletion_rhs(n, j)


def test_deletion_rhs_five_cycle():
    assert odd_cycle_deletion_rhs(5, 1) == ideal(5, "x2*x3*x5, x2*x4*x5")


def test_example_fixture():
    I, q, r, v = example_ideal()
    assert len(I) == 12 and q.vars == {1, 3, 7} and r == 8 and str(v) == "x2*x3*x4*x5*x7"


def test_outcome_records_counterexamples():
    o = ScenarioOutcome("Z", "t")
    o.check(True, "fine")
    o.check(False, "broken", ideal=ideal(2, "x1"))
    assert o.status == "fail" and o.failures == [{"check": "broken", "ideal": "(x1)"}]


def test_small_tree_suite():
    o = scenario_c(3, 0, max_n=5)
    assert o.passed and o.details["trees_per_n"][5] == 125


def test_paper_suite_orders_and_validates():
    outs = paper_suite(3, 0, "BA")
    assert [o.label for o in outs] == ["A", "B"] and all(o.passed for o in outs)
    with pytest.raises(ValueError):
        paper_suite(2)
