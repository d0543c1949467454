import json
import random

import pytest

from _oracles import mis_bruteforce
from csftrees.decomposition import (
    alpha_from_decomposition,
    alpha_mis,
    chain_holds,
    chain_sequence,
    decomposition_from_json,
    decomposition_to_json_dict,
    leaf_decomposition,
    max_block_greedy,
    padded_levels,
    rho_data,
)
from csftrees.errors import GraphError
from csftrees.generators import (
    Gluing,
    StarConnectionSpec,
    enumerate_free_trees,
    gen_path,
    gen_spider,
    gen_star,
    gen_star_connection,
)
from csftrees.graphs import Graph, Tree, as_tree, degrees, relabel


@pytest.mark.parametrize(
    "tree, counts, term_alpha",
    [
        (gen_star(4), ((3, 1),), 0),
        (gen_path(4), ((2, 2),), 0),
        (gen_path(7), ((2, 2), (2, 1)), 0),
        (gen_path(2), ((1, 1),), 2),
        (gen_path(1), ((1, 0),), 0),
        (gen_spider((2, 2, 2)), ((3, 3), (1, 0)), 0),
    ],
)
def test_decomposition_goldens(tree, counts, term_alpha):
    d = leaf_decomposition(tree)
    assert d.level_counts() == counts
    assert d.terminal_alpha == term_alpha
    assert d.depth == len(counts)


def test_chain_example_alpha():
    spec = StarConnectionSpec((4, 5, 3, 4), (Gluing((0, 1)), Gluing((1, 2)), Gluing((2, 3))))
    t = gen_star_connection(spec)
    assert alpha_from_decomposition(leaf_decomposition(t)) == 9


def test_levels_partition_vertices():
    for n in range(1, 11):
        for t in enumerate_free_trees(n):
            d = leaf_decomposition(t)
            seen = []
            for lvl in d.levels:
                assert lvl.b == len(lvl.leaf_vertices)
                assert lvl.eta == len(lvl.neighbor_vertices)
                assert lvl.b >= lvl.eta
                seen.extend(lvl.leaf_vertices)
                seen.extend(lvl.neighbor_vertices)
            assert sorted(seen) == list(range(n))


def test_block_sum_is_independence_number():
    for n in range(1, 11):
        for t in enumerate_free_trees(n):
            d = leaf_decomposition(t)
            alpha = alpha_mis(t.graph)
            assert alpha_from_decomposition(d) == alpha
            if n <= 8:
                assert alpha == mis_bruteforce(t.graph)


def test_greedy_witness():
    for n in range(1, 11):
        for t in enumerate_free_trees(n):
            size, witness = max_block_greedy(t)
            assert size == alpha_mis(t.graph)
            members = set(witness)
            assert len(members) == size
            assert not any(u in members and v in members for u, v in t.graph.edges)
            if n >= 3:
                deg = degrees(t.graph)
                assert all(v in members for v in range(n) if deg[v] == 1)


def test_chain_inequalities_hold_empirically():
    for n in range(1, 10):
        for t in enumerate_free_trees(n):
            d = leaf_decomposition(t)
            assert chain_holds(d), chain_sequence(d)


def test_chain_inequalities_first_failure():
    """b1 >= eta1 >= b2 >= ... is an audited claim, not a theorem: the first
    counterexample is P11 with a pendant leaf on its center, at n = 12."""
    edges = tuple((i, i + 1) for i in range(10)) + ((5, 11),)
    t = as_tree(Graph(12, edges))
    d = leaf_decomposition(t)
    assert chain_sequence(d) == (3, 3, 4, 2)
    assert not chain_holds(d)
    assert alpha_from_decomposition(d) == alpha_mis(t.graph) == 7


def test_relabeling_invariance():
    rng = random.Random(2024)
    for n in range(2, 9):
        for t in enumerate_free_trees(n):
            perm = list(range(n))
            rng.shuffle(perm)
            t2 = as_tree(relabel(t.graph, perm))
            assert leaf_decomposition(t2).level_counts() == leaf_decomposition(t).level_counts()


def test_rho_data_goldens():
    r = rho_data(gen_path(7))
    assert (r.rho, r.rho_vertices, r.is_path) == (3, (2, 3, 4), True)
    assert rho_data(gen_star(4)) == rho_data(gen_star(4))  # hashable/frozen
    assert rho_data(gen_star(4)).rho == 0
    assert rho_data(gen_star(4)).is_path
    assert rho_data(gen_path(2)).rho == 0
    assert rho_data(gen_path(5)).rho == 1 and rho_data(gen_path(5)).is_path


def test_rho_set_may_be_disconnected():
    # path 0-..-6 with an extra leaf on vertex 3: rho vertices {2, 4} split up
    edges = tuple((i, i + 1) for i in range(6)) + ((3, 7),)
    t = as_tree(Graph(8, edges))
    r = rho_data(t)
    assert r.rho == 2
    assert r.rho_vertices == (2, 4)
    assert not r.is_path


def test_rho_needs_two_vertices():
    with pytest.raises(GraphError):
        rho_data(gen_path(1))


def test_padded_levels():
    assert padded_levels([], [(1, 0)]) == ([(0, 0)], [(1, 0)])
    d1 = leaf_decomposition(gen_path(7))
    d2 = leaf_decomposition(gen_star(7))
    s1, s2 = padded_levels(d1, d2)
    assert s1 == [(2, 2), (2, 1)]
    assert s2 == [(6, 1), (0, 0)]


def test_alpha_mis_forest_and_cycle():
    forest = Graph(5, ((0, 1), (1, 2), (3, 4)))  # P3 + P2
    assert alpha_mis(forest) == 3
    assert alpha_mis(Graph(3)) == 3
    with pytest.raises(GraphError):
        alpha_mis(Graph(3, ((0, 1), (1, 2), (0, 2))))


def test_decomposition_json():
    d = leaf_decomposition(gen_path(7))
    blob = json.dumps(decomposition_to_json_dict(d))
    levels, alpha = decomposition_from_json(blob)
    assert levels == d.level_counts()
    assert alpha == d.terminal_alpha
    assert decomposition_to_json_dict(d) == {
        "levels": [{"b": 2, "eta": 2}, {"b": 2, "eta": 1}],
        "alpha_correction": 0,
    }
    with pytest.raises(GraphError):
        decomposition_from_json("{")
    with pytest.raises(GraphError):
        decomposition_from_json('{"levels": [{"b": 1}], "alpha_correction": 0}')
