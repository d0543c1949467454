"""Finite simple graphs restricted to the forest/tree world.

Vertices are dense integers 0..n-1. A Graph is immutable: edges are stored as
a sorted tuple of (u, v) pairs with u < v, so equal graphs compare and hash
equal and every downstream computation is deterministic.

Canonical form for trees is the AHU parenthesis code rooted at the tree's
center: peel leaf layers until one or two vertices remain; with two centers,
take the lexicographically smaller of the two rooted codes. Equal codes are
equivalent to isomorphism, which is what the enumeration and the pairwise
surveys rely on.

Edge-list text format: lines "u v"; blank lines and lines starting with '#'
are ignored; an optional header "n <k>" (first content line) declares the
vertex count, which allows isolated vertices. Without a header, n is one plus
the maximum vertex id (0 for an empty file).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GraphError


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1; edges normalized and sorted."""

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 0:
            raise GraphError(f"vertex count must be a non-negative integer, got {self.n!r}")
        norm = []
        seen = set()
        for e in self.edges:
            try:
                u, v = e
            except (TypeError, ValueError):
                raise GraphError(f"edge {e!r} is not a pair") from None
            if not isinstance(u, int) or not isinstance(v, int):
                raise GraphError(f"edge {e!r} has non-integer endpoint")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u},{v}) has endpoint outside 0..{self.n - 1}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphError(f"duplicate edge ({key[0]},{key[1]})")
            seen.add(key)
            norm.append(key)
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @property
    def num_edges(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class Tree:
    """A connected acyclic Graph. Constructing one runs full validation."""

    graph: Graph

    def __post_init__(self) -> None:
        g = self.graph
        if g.n == 0:
            raise GraphError("a tree needs at least one vertex")
        # All three conditions checked even though any two imply the third.
        if g.num_edges != g.n - 1:
            raise GraphError(f"tree on {g.n} vertices needs {g.n - 1} edges, got {g.num_edges}")
        if not is_connected(g):
            raise GraphError("graph is not connected")
        if has_cycle(g):
            raise GraphError("graph has a cycle")

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self.graph.edges


def as_tree(g: Graph) -> Tree:
    return Tree(g)


def adjacency(g: Graph) -> list[list[int]]:
    """Adjacency lists; each neighbor list sorted ascending."""
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    for a in adj:
        a.sort()
    return adj


def degrees(g: Graph) -> list[int]:
    deg = [0] * g.n
    for u, v in g.edges:
        deg[u] += 1
        deg[v] += 1
    return deg


def is_connected(g: Graph) -> bool:
    """True for graphs with one component; vacuously true for n <= 1."""
    if g.n <= 1:
        return True
    adj = adjacency(g)
    seen = [False] * g.n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == g.n


def has_cycle(g: Graph) -> bool:
    """Union-find over the edge list."""
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return True
        parent[ru] = rv
    return False


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex lists of the components, each sorted, ordered by smallest member."""
    adj = adjacency(g)
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        stack = [s]
        comp = [s]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comp.sort()
        comps.append(comp)
    return comps


def relabel(g: Graph, perm) -> Graph:
    """Apply the vertex relabeling v -> perm[v]."""
    perm = list(perm)
    if sorted(perm) != list(range(g.n)):
        raise GraphError("perm must be a permutation of 0..n-1")
    return Graph(g.n, tuple((perm[u], perm[v]) for u, v in g.edges))


def induced_subgraph(g: Graph, vertices) -> Graph:
    """Subgraph induced on `vertices`, relabeled densely in sorted order."""
    vs = sorted(set(vertices))
    index = {v: i for i, v in enumerate(vs)}
    keep = tuple(
        (index[u], index[v]) for u, v in g.edges if u in index and v in index
    )
    return Graph(len(vs), keep)


def parse_edge_list(text: str) -> Graph:
    n_header: int | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    saw_content = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if toks[0] == "n":
            if saw_content:
                raise GraphError(f"line {lineno}: header 'n <k>' must be the first content line")
            if len(toks) != 2:
                raise GraphError(f"line {lineno}: malformed header {line!r}")
            try:
                n_header = int(toks[1])
            except ValueError:
                raise GraphError(f"line {lineno}: malformed header {line!r}") from None
            if n_header < 0:
                raise GraphError(f"line {lineno}: negative vertex count")
            saw_content = True
            continue
        saw_content = True
        if len(toks) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise GraphError(f"line {lineno}: expected 'u v', got {line!r}") from None
        if u < 0 or v < 0:
            raise GraphError(f"line {lineno}: negative vertex id")
        if u == v:
            raise GraphError(f"line {lineno}: loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphError(f"line {lineno}: duplicate edge ({key[0]},{key[1]})")
        seen.add(key)
        edges.append(key)
    if n_header is not None:
        n = n_header
        for u, v in edges:
            if v >= n:  # v is the larger endpoint
                raise GraphError(f"edge ({u},{v}) has endpoint >= declared n={n}")
    else:
        n = 1 + max((v for _, v in edges), default=-1)
    return Graph(n, tuple(edges))


def serialize(g: Graph) -> str:
    """Inverse of parse_edge_list: header plus one edge per line, ascending."""
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def tree_center(t: Tree) -> tuple[int, ...]:
    """The 1 or 2 central vertices (sorted), found by peeling leaf layers."""
    return tuple(_centers(t.n, adjacency(t.graph)))


def _centers(n: int, adj: list[list[int]]) -> list[int]:
    if n <= 2:
        return list(range(n))
    deg = [len(a) for a in adj]
    layer = [v for v in range(n) if deg[v] <= 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def _rooted_code(root: int, n: int, adj: list[list[int]]) -> str:
    """AHU parenthesis code of the tree rooted at `root`."""
    parent = [-1] * n
    parent[root] = root
    order = [root]
    for v in order:
        for w in adj[v]:
            if parent[w] == -1:
                parent[w] = v
                order.append(w)
    code: list[str] = [""] * n
    for v in reversed(order):
        kids = sorted(code[w] for w in adj[v] if parent[w] == v and w != v)
        code[v] = "(" + "".join(kids) + ")"
    return code[root]


def _code_from_adj(n: int, adj: list[list[int]]) -> str:
    centers = _centers(n, adj)
    if len(centers) == 1:
        return _rooted_code(centers[0], n, adj)
    return min(_rooted_code(c, n, adj) for c in centers)


def canonical_code(t: Tree) -> str:
    """Relabeling-invariant code; equal codes iff isomorphic trees."""
    return _code_from_adj(t.n, adjacency(t.graph))


def trees_isomorphic(a: Tree, b: Tree) -> bool:
    if a.n != b.n:
        return False
    return canonical_code(a) == canonical_code(b)
