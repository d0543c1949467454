"""Constructors for tree families and exhaustive free-tree enumeration.

Vertex numbering is deterministic for every generator (golden tests depend on
it): the center(s) come first, then the legs/stars in spec order.

  gen_path      0 - 1 - ... - n-1
  gen_star      center 0, leaves 1..n-1
  gen_spider    center 0; leg i occupies the next L_i ids walking outward
  gen_star_connection
                centers 0..r-1 in star order, then one vertex per gluing in
                gluing order, then the unshared leaves star by star in slot
                order

Free trees are enumerated by generating every canonical rooted level sequence
(Beyer-Hedetniemi successor rule, starting from the path [0,1,...,n-1] and
ending at the star [0,1,1,...,1]) and deduplicating by the center-rooted
canonical code; the result is sorted by code. The Prüfer decoder lives here
too because the test suite uses n^(n-2) Prüfer sequences as the enumeration
oracle.
"""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass
from functools import lru_cache

from .errors import CapExceededError, GraphError
from .graphs import Graph, Tree, _code_from_adj, as_tree

ENUM_MAX_N = 16


def gen_path(n: int) -> Tree:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return as_tree(Graph(n, tuple((i, i + 1) for i in range(n - 1))))


def gen_star(n: int) -> Tree:
    if n < 2:
        raise GraphError("star needs n >= 2")
    return as_tree(Graph(n, tuple((0, i) for i in range(1, n))))


@dataclass(frozen=True)
class SpiderSpec:
    """Leg lengths (in edges) of a spider; at least 3 legs, each of length >= 1."""

    legs: tuple[int, ...]

    def __post_init__(self) -> None:
        legs = tuple(self.legs)
        object.__setattr__(self, "legs", legs)
        if len(legs) < 3:
            raise GraphError("spider needs at least 3 legs (center degree > 2)")
        if any(not isinstance(x, int) or x < 1 for x in legs):
            raise GraphError("spider leg lengths must be integers >= 1")

    @property
    def num_vertices(self) -> int:
        return 1 + sum(self.legs)

    @classmethod
    def from_json(cls, text: str) -> "SpiderSpec":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphError(f"malformed spider spec: {exc}") from None
        if not isinstance(data, dict) or "legs" not in data:
            raise GraphError('spider spec must be {"legs": [..]}')
        legs = data["legs"]
        if not isinstance(legs, list):
            raise GraphError('spider spec "legs" must be a list')
        return cls(tuple(legs))

    def to_json_dict(self) -> dict:
        return {"legs": list(self.legs)}


def gen_spider(spec: SpiderSpec) -> Tree:
    if not isinstance(spec, SpiderSpec):
        spec = SpiderSpec(tuple(spec))
    edges = []
    nxt = 1
    for length in spec.legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return as_tree(Graph(nxt, tuple(edges)))


@dataclass(frozen=True)
class Gluing:
    """One shared non-center vertex: the stars meeting there (>= 2 of them),
    optionally pinned to explicit leaf slots (auto-assigned in order if None)."""

    stars: tuple[int, ...]
    slots: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        stars = tuple(self.stars)
        object.__setattr__(self, "stars", stars)
        if len(stars) < 2:
            raise GraphError("a gluing must involve at least 2 stars")
        if len(set(stars)) != len(stars):
            raise GraphError(f"gluing lists a star twice: {stars}")
        if self.slots is not None:
            slots = tuple(self.slots)
            object.__setattr__(self, "slots", slots)
            if len(slots) != len(stars):
                raise GraphError("gluing slots must match its star list")


@dataclass(frozen=True)
class StarConnectionSpec:
    """Stars S_{n_1},...,S_{n_r} (each n_k >= 3, r >= 2) glued at shared
    non-center vertices. Star k has leaf slots 0..n_k-2; each gluing consumes
    one slot per member star."""

    star_sizes: tuple[int, ...]
    gluings: tuple[Gluing, ...]

    def __post_init__(self) -> None:
        sizes = tuple(self.star_sizes)
        object.__setattr__(self, "star_sizes", sizes)
        object.__setattr__(self, "gluings", tuple(self.gluings))
        if len(sizes) < 2:
            raise GraphError("star connection needs r >= 2 stars")
        if any(not isinstance(x, int) or x < 3 for x in sizes):
            raise GraphError("every star size must be an integer >= 3")
        r = len(sizes)
        for g in self.gluings:
            for k in g.stars:
                if not (0 <= k < r):
                    raise GraphError(f"gluing references star {k}, but there are {r} stars")

    @property
    def num_stars(self) -> int:
        return len(self.star_sizes)

    @classmethod
    def from_json(cls, text: str) -> "StarConnectionSpec":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphError(f"malformed star connection spec: {exc}") from None
        if not isinstance(data, dict) or "stars" not in data or "gluings" not in data:
            raise GraphError('star connection spec must be {"stars": [..], "gluings": [..]}')
        sizes = data["stars"]
        raw_gluings = data["gluings"]
        if not isinstance(sizes, list) or not isinstance(raw_gluings, list):
            raise GraphError('star connection "stars" and "gluings" must be lists')
        gluings = []
        for item in raw_gluings:
            if not isinstance(item, dict) or "stars" not in item:
                raise GraphError('each gluing must be {"stars": [..]} with optional "slots"')
            slots = item.get("slots")
            gluings.append(Gluing(tuple(item["stars"]), None if slots is None else tuple(slots)))
        return cls(tuple(sizes), tuple(gluings))

    def to_json_dict(self) -> dict:
        out = {"stars": list(self.star_sizes), "gluings": []}
        for g in self.gluings:
            item: dict = {"stars": list(g.stars)}
            if g.slots is not None:
                item["slots"] = list(g.slots)
            out["gluings"].append(item)
        return out


def resolved_slots(spec: StarConnectionSpec) -> list[tuple[int, ...]]:
    """Concrete leaf slot consumed per (gluing, member star); autos take the
    lowest unused slot of that star, processed in gluing order."""
    used: list[set[int]] = [set() for _ in spec.star_sizes]
    out: list[tuple[int, ...]] = []
    for gi, g in enumerate(spec.gluings):
        slots = []
        for pos, k in enumerate(g.stars):
            cap = spec.star_sizes[k] - 1
            if g.slots is not None:
                s = g.slots[pos]
                if not (0 <= s < cap):
                    raise GraphError(f"gluing {gi}: slot {s} out of range for star {k}")
                if s in used[k]:
                    raise GraphError(f"gluing {gi}: slot {s} of star {k} already consumed")
            else:
                s = 0
                while s in used[k]:
                    s += 1
                if s >= cap:
                    raise GraphError(f"gluing {gi}: star {k} has no free leaf slot left")
            used[k].add(s)
            slots.append(s)
        out.append(tuple(slots))
    return out


def gen_star_connection(spec: StarConnectionSpec) -> Tree:
    r = spec.num_stars
    t = len(spec.gluings)
    slot_map = resolved_slots(spec)

    # Tree-ness of the gluing structure, with targeted messages before the
    # generic as_tree validation would fire.
    for a in range(r):
        for b in range(a + 1, r):
            shared = sum(1 for g in spec.gluings if a in g.stars and b in g.stars)
            if shared > 1:
                raise GraphError(f"stars {a} and {b} share {shared} vertices (at most 1 allowed)")
    parent = list(range(r))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in spec.gluings:
        anchor = g.stars[0]
        for k in g.stars[1:]:
            ra, rk = find(anchor), find(k)
            if ra == rk:
                raise GraphError("gluing structure contains a cycle")
            parent[ra] = rk
    if len({find(k) for k in range(r)}) != 1:
        raise GraphError("gluing structure is not connected")

    # slot -> vertex id: gluing vertices first (r..r+t-1), then free leaves.
    slot_vertex: dict[tuple[int, int], int] = {}
    for gi, g in enumerate(spec.gluings):
        for pos, k in enumerate(g.stars):
            slot_vertex[(k, slot_map[gi][pos])] = r + gi
    nxt = r + t
    for k, size in enumerate(spec.star_sizes):
        for s in range(size - 1):
            if (k, s) not in slot_vertex:
                slot_vertex[(k, s)] = nxt
                nxt += 1
    edges = []
    for k, size in enumerate(spec.star_sizes):
        for s in range(size - 1):
            edges.append((k, slot_vertex[(k, s)]))
    return as_tree(Graph(nxt, tuple(edges)))


def prufer_tree(seq) -> Tree:
    """Decode a Prüfer sequence over 0..n-1 (n = len(seq) + 2)."""
    seq = tuple(seq)
    n = len(seq) + 2
    deg = [1] * n
    for x in seq:
        if not isinstance(x, int) or not (0 <= x < n):
            raise GraphError(f"Prüfer entry {x!r} out of range for n={n}")
        deg[x] += 1
    heap = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(heap)
    edges = []
    for x in seq:
        leaf = heapq.heappop(heap)
        edges.append((leaf, x))
        deg[x] -= 1
        if deg[x] == 1:
            heapq.heappush(heap, x)
    u = heapq.heappop(heap)
    v = heapq.heappop(heap)
    edges.append((u, v))
    return as_tree(Graph(n, tuple(edges)))


def _rooted_level_sequences(n: int):
    """All canonical rooted level sequences on n vertices (root at level 0),
    in the successor order that starts at the path and ends at the star.
    Yields an internal buffer — consume, don't store."""
    s = list(range(n))
    while True:
        yield s
        p = -1
        for i in range(n - 1, -1, -1):
            if s[i] > 1:
                p = i
                break
        if p < 0:
            return
        q = p - 1
        while s[q] != s[p] - 1:
            q -= 1
        for i in range(p, n):
            s[i] = s[i - (p - q)]


def _edges_and_adj_from_levels(s: list[int]):
    n = len(s)
    last = [0] * n
    edges = []
    adj: list[list[int]] = [[] for _ in range(n)]
    for i in range(1, n):
        par = last[s[i] - 1]
        edges.append((par, i))
        adj[par].append(i)
        adj[i].append(par)
        last[s[i]] = i
    return edges, adj


@lru_cache(maxsize=None)
def _free_tree_edge_sets(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    by_code: dict[str, tuple[tuple[int, int], ...]] = {}
    for s in _rooted_level_sequences(n):
        edges, adj = _edges_and_adj_from_levels(s)
        code = _code_from_adj(n, adj)
        if code not in by_code:
            by_code[code] = tuple(edges)
    return tuple(by_code[code] for code in sorted(by_code))


def enumerate_free_trees(n: int, max_n: int = ENUM_MAX_N) -> list[Tree]:
    """One representative per isomorphism class of trees on n vertices,
    in canonical-code order."""
    if not isinstance(n, int) or n < 1:
        raise GraphError(f"tree order must be a positive integer, got {n!r}")
    if n > max_n:
        raise CapExceededError(f"enumeration capped at n <= {max_n}, got {n}")
    return [as_tree(Graph(n, e)) for e in _free_tree_edge_sets(n)]
