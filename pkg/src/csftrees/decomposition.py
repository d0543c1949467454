"""Leaf decomposition, the rho statistic, and independence numbers.

The decomposition peels a tree level by level: level i records the leaves of
the current forest F_i (the b-side) and the vertices adjacent to a leaf (the
eta-side), removes both, and repeats. The peeling stops when the remaining
forest has maximum degree <= 1; its vertices form one final level via the
pairing correction: isolated vertices all count as b, and each surviving edge
contributes one endpoint to b and one to eta (alpha = number of degree-1
vertices in that terminal forest, always even).

The same pairing is applied to any two-vertex component that appears *inside*
an earlier level (both endpoints are leaves of F_i, but counting both as b
would double-count the component): the smaller-id endpoint goes to b, the
other to eta. With that convention the level vertex sets partition V, every
level has b_i >= eta_i, and the greedy witness (all b-vertices) is a maximum
independent set — sum(b_i) = alpha(T) for every tree, which alpha_mis
cross-checks by dynamic programming.

rho = n - b_1 - eta_1 uses the first level only; its vertex set V(rho) is
everything that is neither a leaf nor a leaf-neighbor, and is_path reports
whether the induced subgraph is a path (vacuously true for rho <= 1).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import GraphError
from .graphs import (
    Graph,
    Tree,
    adjacency,
    degrees,
    has_cycle,
    induced_subgraph,
    is_connected,
)


@dataclass(frozen=True)
class LeafLevel:
    b: int
    eta: int
    leaf_vertices: tuple[int, ...]
    neighbor_vertices: tuple[int, ...]


@dataclass(frozen=True)
class LeafDecomposition:
    levels: tuple[LeafLevel, ...]
    terminal_alpha: int

    @property
    def depth(self) -> int:
        return len(self.levels)

    def level_counts(self) -> tuple[tuple[int, int], ...]:
        return tuple((lvl.b, lvl.eta) for lvl in self.levels)


def leaf_decomposition(t: Tree) -> LeafDecomposition:
    n = t.n
    adjsets = [set(a) for a in adjacency(t.graph)]
    alive = set(range(n))
    levels: list[LeafLevel] = []
    terminal_alpha = 0
    while alive:
        maxdeg = max(len(adjsets[v]) for v in alive)
        if maxdeg <= 1:
            pairs = sorted(
                (v, next(iter(adjsets[v])))
                for v in alive
                if adjsets[v] and v < next(iter(adjsets[v]))
            )
            isolated = [v for v in alive if not adjsets[v]]
            b_set = sorted(isolated + [u for u, _ in pairs])
            eta_set = sorted(w for _, w in pairs)
            terminal_alpha = 2 * len(pairs)
            levels.append(LeafLevel(len(b_set), len(eta_set), tuple(b_set), tuple(eta_set)))
            break
        leaves = {v for v in alive if len(adjsets[v]) == 1}
        b_set, eta_set = set(), set()
        for v in leaves:
            u = next(iter(adjsets[v]))
            if u in leaves:  # two-vertex component inside this level
                b_set.add(min(u, v))
                eta_set.add(max(u, v))
            else:
                b_set.add(v)
                eta_set.add(u)
        removed = b_set | eta_set
        levels.append(
            LeafLevel(len(b_set), len(eta_set), tuple(sorted(b_set)), tuple(sorted(eta_set)))
        )
        for v in removed:
            for w in adjsets[v]:
                adjsets[w].discard(v)
            adjsets[v] = set()
        alive -= removed
    return LeafDecomposition(tuple(levels), terminal_alpha)


def padded_levels(d1, d2) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """Both (b, eta) sequences extended with (0, 0) levels to equal length.
    Accepts LeafDecompositions or raw sequences of (b, eta) pairs."""
    s1 = list(_level_counts(d1))
    s2 = list(_level_counts(d2))
    r = max(len(s1), len(s2), 1)
    s1 += [(0, 0)] * (r - len(s1))
    s2 += [(0, 0)] * (r - len(s2))
    return s1, s2


def _level_counts(d) -> tuple[tuple[int, int], ...]:
    if isinstance(d, LeafDecomposition):
        return d.level_counts()
    return tuple((int(b), int(e)) for b, e in d)


@dataclass(frozen=True)
class RhoData:
    rho: int
    rho_vertices: tuple[int, ...]
    is_path: bool


def rho_data(t: Tree) -> RhoData:
    if t.n < 2:
        raise GraphError("rho_data needs n >= 2")
    lvl1 = leaf_decomposition(t).levels[0]
    rest = sorted(set(range(t.n)) - set(lvl1.leaf_vertices) - set(lvl1.neighbor_vertices))
    rho = t.n - lvl1.b - lvl1.eta
    if rho <= 1:
        path = True
    else:
        sub = induced_subgraph(t.graph, rest)
        path = is_connected(sub) and max(degrees(sub)) <= 2
    return RhoData(rho, tuple(rest), path)


def alpha_mis(g: Graph) -> int:
    """Independence number of a forest by include/exclude DP per component."""
    if has_cycle(g):
        raise GraphError("alpha_mis needs an acyclic graph")
    n = g.n
    adj = adjacency(g)
    seen = [False] * n
    parent = [-1] * n
    take = [0] * n
    skip = [0] * n
    total = 0
    for root in range(n):
        if seen[root]:
            continue
        seen[root] = True
        order = [root]
        for v in order:
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    parent[w] = v
                    order.append(w)
        for v in reversed(order):
            t_in, t_out = 1, 0
            for w in adj[v]:
                if parent[w] == v:
                    t_in += skip[w]
                    t_out += max(take[w], skip[w])
            take[v], skip[v] = t_in, t_out
        total += max(take[root], skip[root])
    return total


def max_block_greedy(t: Tree) -> tuple[int, tuple[int, ...]]:
    """(size, witness): an independent set of maximum size collecting the
    b-vertices of every decomposition level. For n >= 3 the witness contains
    every leaf of t; for a single edge only one endpoint can be taken."""
    d = leaf_decomposition(t)
    witness: list[int] = []
    for lvl in d.levels:
        witness.extend(lvl.leaf_vertices)
    witness.sort()
    return len(witness), tuple(witness)


def alpha_from_decomposition(d: LeafDecomposition) -> int:
    return sum(lvl.b for lvl in d.levels)


def chain_sequence(d: LeafDecomposition) -> tuple[int, ...]:
    """b_1, eta_1, b_2, eta_2, ... flattened."""
    out: list[int] = []
    for lvl in d.levels:
        out.extend((lvl.b, lvl.eta))
    return tuple(out)


def chain_holds(d: LeafDecomposition) -> bool:
    """Whether b_1 >= eta_1 >= b_2 >= eta_2 >= ... (audited, not assumed)."""
    seq = chain_sequence(d)
    return all(seq[i] >= seq[i + 1] for i in range(len(seq) - 1))


def decomposition_to_json_dict(d: LeafDecomposition) -> dict:
    return {
        "levels": [{"b": lvl.b, "eta": lvl.eta} for lvl in d.levels],
        "alpha_correction": d.terminal_alpha,
    }


def decomposition_from_json(text: str) -> tuple[tuple[tuple[int, int], ...], int]:
    """Parse the JSON form back into ((b, eta), ...) counts + alpha (the
    vertex sets are not serialized)."""
    try:
        data = json.loads(text)
        levels = tuple((lvl["b"], lvl["eta"]) for lvl in data["levels"])
        return levels, data["alpha_correction"]
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise GraphError(f"malformed decomposition JSON: {exc}") from None
