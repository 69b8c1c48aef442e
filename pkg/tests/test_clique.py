import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import oracles
from simplexint.clique import (
    Graph,
    all_graphs,
    brute_force_clique,
    clique_estimate,
    expansion_term_count,
    integrate_form_power,
    motzkin_straus_form,
    recommended_p,
    sweep,
)
from simplexint.errors import ExpansionLimitExceeded, InputError
from simplexint.integrate import integrate_via_duality
from simplexint.polynomial import SparsePolynomial
from simplexint.simplex import canonical_simplex

K3 = Graph.complete(3)
EDGE = Graph(2, frozenset({(1, 2)}))
EMPTY4 = Graph(4)


def test_form_examples():
    assert motzkin_straus_form(K3) == SparsePolynomial(3, {(1, 1, 0): Fraction(1, 2), (1, 0, 1): Fraction(1, 2),
                                                          (0, 1, 1): Fraction(1, 2)})
    assert motzkin_straus_form(EMPTY4).is_zero()
    assert motzkin_straus_form(EDGE) == SparsePolynomial(2, {(1, 1): Fraction(1, 2)})


def test_form_power_examples():
    assert integrate_form_power(K3, 1) == Fraction(1, 8)
    assert integrate_form_power(EDGE, 1) == Fraction(1, 12)
    for p in (1, 3, 7):
        assert integrate_form_power(EMPTY4, p) == 0


@pytest.mark.parametrize("p", [1, 2, 3, 5])
def test_form_power_matches_general_integrator(p):
    # volume-one normalization: divide the integral-measure value by vol = 1/(n-1)!
    g = Graph.cycle(4)
    s = canonical_simplex(4)
    q = motzkin_straus_form(g) ** p
    assert integrate_form_power(g, p) == integrate_via_duality(s, q) / s.volume


def test_expansion_limit():
    g = Graph.complete(4)
    assert expansion_term_count(g, 10) == math.comb(15, 5)
    with pytest.raises(ExpansionLimitExceeded) as info:
        integrate_form_power(g, 10, limit=1000)
    assert info.value.size == math.comb(15, 5)


def test_estimate_examples():
    assert clique_estimate(Graph(3), 1) == 1
    assert clique_estimate(EDGE, 1) == 2
    assert clique_estimate(K3, 1) == 2


def test_recommended_p():
    exact3 = oracles.ln_float_bound(3)
    assert math.ceil(exact3) <= recommended_p(3) <= 1.05 * exact3
    assert abs(recommended_p(3) - 1052) <= 2
    assert recommended_p(1) >= math.ceil(oracles.ln_float_bound(1))
    assert abs(recommended_p(1) - 24) <= 1
    values = [recommended_p(n) for n in range(1, 30)]
    assert values == sorted(set(values))


def test_brute_force_examples():
    assert brute_force_clique(K3) == 3
    assert brute_force_clique(EMPTY4) == 1
    assert brute_force_clique(Graph.cycle(5)) == 2
    assert brute_force_clique(Graph.complete(7)) == 7


def subset_clique(g):
    best = 1
    for r in range(2, g.n + 1):
        for S in itertools.combinations(range(1, g.n + 1), r):
            if all((i, j) in g.edges for i, j in itertools.combinations(S, 2)):
                best = r
    return best


@given(st.integers(1, 7).flatmap(
    lambda n: st.sets(st.tuples(st.integers(1, n), st.integers(1, n)).filter(lambda e: e[0] < e[1])).map(
        lambda E: Graph(n, frozenset(E)))))
def test_brute_force_against_subset_enumeration(g):
    assert brute_force_clique(g) == subset_clique(g)


def test_motzkin_straus_anchor():
    # the edge sum 2 Q_G reaches (1/2)(1 - 1/omega) at uniform points on maximum cliques
    for n in range(1, 6):
        for g in all_graphs(n):
            q = motzkin_straus_form(g) * 2
            best = Fraction(0)
            for r in range(1, n + 1):
                for S in itertools.combinations(range(n), r):
                    x = [Fraction(1, r) if i in S else 0 for i in range(n)]
                    best = max(best, q(x))
            omega = brute_force_clique(g)
            assert best == Fraction(1, 2) * (1 - Fraction(1, omega))


def test_graph_validation():
    with pytest.raises(InputError):
        Graph(3, frozenset({(1, 1)}))
    with pytest.raises(InputError):
        Graph(3, frozenset({(1, 4)}))
    with pytest.raises(InputError):
        Graph.from_edges(3, [[1, 2], [2, 1]])
    with pytest.raises(InputError):
        Graph(0)
    g = Graph.from_json('{"n": 4, "edges": [[1,2],[2,3]]}')
    assert g.to_json() == {"n": 4, "edges": [[1, 2], [2, 3]]}


def test_sweep_k3_and_path():
    res = sweep(K3)
    assert res.match and res.p_used <= 100 and res.brute_force == 3
    path = Graph(3, frozenset({(1, 2), (2, 3)}))
    res = sweep(path)
    assert res.match and res.brute_force == 2


def test_sweep_reports_limit():
    res = sweep(Graph.complete(4), limit=200)
    assert not res.match and res.stopped_by_limit
    assert expansion_term_count(Graph.complete(4), res.p_used) <= 200
