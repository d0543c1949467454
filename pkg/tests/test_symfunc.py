import itertools
import json
import random

import pytest

from _oracles import coloring_count
from csftrees.errors import CapExceededError, GraphError
from csftrees.generators import enumerate_free_trees, gen_path, gen_star
from csftrees.graphs import Graph
from csftrees.partitions import mult_factorial
from csftrees.symfunc import (
    SymmetricFunction,
    csf_equal,
    csf_monomial,
    csf_powersum,
    evaluate_ones,
    max_block_from_csf,
    pretty,
    stable_partitions,
    symfunc_from_json,
    symfunc_to_json_dict,
    to_monomial,
)


def _cycle(n: int) -> Graph:
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


# ------------------------------------------------------- the container itself

def test_terms_normalized():
    f = SymmetricFunction(3, "m", {(1, 1, 1): 6, (3,): 0, (2, 1): 1})
    assert f.terms == (((2, 1), 1), ((1, 1, 1), 6))  # zero dropped, desc-lex
    assert f.coeff((1, 1, 1)) == 6
    assert f.coeff((3,)) == 0
    assert f.as_dict() == {(2, 1): 1, (1, 1, 1): 6}


@pytest.mark.parametrize(
    "n, basis, terms",
    [
        (3, "q", {}),
        (-1, "m", {}),
        (3, "m", {(2, 1): True}),
        (3, "m", {(2, 0, 1): 1}),
        (3, "m", {(1, 2): 1}),
        (3, "m", {(2, 2): 1}),
        (3, "m", [((2, 1), 1), ((2, 1), 2)]),
    ],
)
def test_container_rejects(n, basis, terms):
    with pytest.raises(GraphError):
        SymmetricFunction(n, basis, terms)


# ------------------------------------------------------------------- goldens

def test_single_vertex():
    g = Graph(1)
    assert csf_monomial(g).terms == (((1,), 1),)
    assert csf_powersum(g).terms == (((1,), 1),)


def test_k2_both_bases():
    g = gen_path(2).graph
    assert csf_monomial(g).as_dict() == {(1, 1): 2}
    assert csf_powersum(g).as_dict() == {(1, 1): 1, (2,): -1}


def test_p3_both_bases():
    t = gen_path(3)
    assert csf_monomial(t).as_dict() == {(2, 1): 1, (1, 1, 1): 6}
    assert csf_powersum(t).as_dict() == {(1, 1, 1): 1, (2, 1): -2, (3,): 1}


def test_edgeless_graph_is_power_of_sum():
    # X of the empty graph on 2 vertices is (x1 + x2 + ...)^2
    assert csf_monomial(Graph(2)).as_dict() == {(2,): 1, (1, 1): 2}


def test_domain_errors():
    with pytest.raises(GraphError):
        csf_monomial(Graph(0))
    with pytest.raises(GraphError):
        csf_powersum(Graph(0))


def test_caps():
    with pytest.raises(CapExceededError):
        csf_monomial(gen_path(15))
    with pytest.raises(CapExceededError):
        csf_powersum(gen_path(26))
    with pytest.raises(CapExceededError):
        to_monomial(SymmetricFunction(15, "p", {(15,): 1}))


# ------------------------------------------------------------ the two routes

def test_routes_agree_on_trees():
    for n in range(1, 10):
        for t in enumerate_free_trees(n):
            assert to_monomial(csf_powersum(t)).terms == csf_monomial(t).terms


def test_routes_agree_on_cycles_and_random_graphs():
    rng = random.Random(1207)
    graphs = [_cycle(4), _cycle(5), _cycle(6)]
    for n in (5, 6, 7):
        pool = list(itertools.combinations(range(n), 2))
        graphs.append(Graph(n, tuple(rng.sample(pool, rng.randint(0, min(len(pool), 12))))))
    for g in graphs:
        assert to_monomial(csf_powersum(g)).terms == csf_monomial(g).terms


def test_augmented_basis_round_trip():
    t = gen_path(5)
    mono = csf_monomial(t)
    am = SymmetricFunction(
        t.n, "am", {p: c // mult_factorial(p) for p, c in mono.terms}
    )
    assert to_monomial(am).terms == mono.terms
    for r in range(5):
        assert evaluate_ones(am, r) == evaluate_ones(mono, r)


def test_to_monomial_rejects_monomial_input():
    with pytest.raises(GraphError):
        to_monomial(csf_monomial(gen_path(3)))


# ------------------------------------------------------------ specialization

def test_evaluate_ones_counts_colorings():
    rng = random.Random(406)
    graphs = [gen_path(4).graph, gen_star(5).graph, _cycle(4), _cycle(5), Graph(3)]
    for n in (4, 5):
        pool = list(itertools.combinations(range(n), 2))
        graphs.append(Graph(n, tuple(rng.sample(pool, rng.randint(0, len(pool))))))
    for g in graphs:
        fm, fp = csf_monomial(g), csf_powersum(g)
        for r in range(4):
            want = coloring_count(g, r)
            assert evaluate_ones(fm, r) == want
            assert evaluate_ones(fp, r) == want


def test_evaluate_ones_tree_closed_form():
    for n in range(2, 9):
        for t in enumerate_free_trees(n):
            f = csf_monomial(t)
            for r in range(1, 6):
                assert evaluate_ones(f, r) == r * (r - 1) ** (n - 1)


def test_evaluate_ones_rejects_bad_r():
    f = csf_monomial(gen_path(3))
    with pytest.raises(GraphError):
        evaluate_ones(f, -1)
    with pytest.raises(GraphError):
        evaluate_ones(f, 2.0)


# -------------------------------------------------------------------- extras

def test_stable_partitions_wrapper():
    parts = list(stable_partitions(gen_path(2)))
    assert parts == [((0,), (1,))]
    with pytest.raises(GraphError):
        stable_partitions(Graph(0))


def test_max_block_from_csf():
    assert max_block_from_csf(csf_monomial(gen_star(4))) == 3
    assert max_block_from_csf(csf_monomial(gen_path(7))) == 4
    with pytest.raises(GraphError):
        max_block_from_csf(csf_powersum(gen_path(3)))
    with pytest.raises(GraphError):
        max_block_from_csf(SymmetricFunction(3, "m", {}))


def test_csf_equal():
    p6 = gen_path(6)
    relabeled = Graph(6, tuple((5 - u, 5 - v) for u, v in p6.graph.edges))
    assert csf_equal(p6, relabeled)
    assert not csf_equal(p6, gen_star(6))
    assert not csf_equal(gen_path(5), gen_path(6))


def test_json_round_trip():
    for f in (csf_monomial(gen_path(4)), csf_powersum(gen_star(5))):
        d = symfunc_to_json_dict(f)
        assert symfunc_from_json(json.dumps(d)).terms == f.terms
        assert d["basis"] == f.basis
        assert all(isinstance(t["coeff"], int) for t in d["terms"])


@pytest.mark.parametrize("text", ["{", "{}", '{"n": 3, "terms": []}', '{"n": 3, "basis": "m", "terms": [{}]}'])
def test_json_rejects(text):
    with pytest.raises(GraphError):
        symfunc_from_json(text)


def test_pretty():
    assert pretty(csf_monomial(gen_path(3))) == "m[2,1] + 6*m[1,1,1]"
    assert pretty(csf_powersum(gen_path(2))) == "-p[2] + p[1,1]"
    assert pretty(SymmetricFunction(2, "m", {})) == "0"
