"""Chromatic symmetric functions of small graphs, exactly.

A SymmetricFunction is a sparse exact-integer coefficient map indexed by
integer partitions of its weight n, tagged with a basis:

    "m"   monomial
    "am"  augmented monomial  (m~_lambda = (prod of multiplicities!) m_lambda)
    "p"   power sum

Two independent routes compute X_G:

  * csf_monomial: every stable partition of type lambda contributes one
    augmented-monomial term, so the m-coefficient is
    (#stable partitions of type lambda) * (product of part multiplicities!).
  * csf_powersum: the signed edge-subset expansion
    X_G = sum over S subset of E of (-1)^|S| p_(component sizes of S).

to_monomial closes the loop: the two routes agreeing on every tree is the
package's main cross-check. Everything is plain Python int arithmetic once
the kernels hand back their int64 count arrays; coefficients up to n! at
n <= 14 stay well inside exact range.

Term order is canonical everywhere: partitions in descending lexicographic
order, no zero coefficients stored.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import groupby
from typing import Iterator

from ._kernels import edge_subset_type_counts, stable_partitions_rgs, stable_type_counts
from .errors import CapExceededError, GraphError
from .graphs import Graph, Tree
from .partitions import (
    falling_factorial,
    mult_factorial,
    partitions_desc,
)

BASIS_MONOMIAL = "m"
BASIS_AUGMENTED = "am"
BASIS_POWERSUM = "p"
_BASES = (BASIS_MONOMIAL, BASIS_AUGMENTED, BASIS_POWERSUM)

CSF_MONOMIAL_MAX_N = 14
CSF_POWERSUM_MAX_EDGES = 24


@dataclass(frozen=True)
class SymmetricFunction:
    """Weight-n symmetric function in one of the supported bases.

    terms is normalized on construction: tuple of (partition, coeff) pairs in
    descending lexicographic partition order with zero coefficients dropped.
    A dict is accepted for convenience.
    """

    n: int
    basis: str
    terms: tuple[tuple[tuple[int, ...], int], ...] = field(default=())

    def __post_init__(self) -> None:
        if self.basis not in _BASES:
            raise GraphError(f"unknown basis {self.basis!r}; expected one of {_BASES}")
        if not isinstance(self.n, int) or self.n < 0:
            raise GraphError(f"weight must be a non-negative integer, got {self.n!r}")
        items = self.terms.items() if isinstance(self.terms, dict) else self.terms
        norm = []
        seen = set()
        for parts, coeff in items:
            parts = tuple(parts)
            if not isinstance(coeff, int) or isinstance(coeff, bool):
                raise GraphError(f"coefficient of {parts} is not an exact integer")
            if any(not isinstance(x, int) or x < 1 for x in parts):
                raise GraphError(f"partition {parts} has a non-positive part")
            if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
                raise GraphError(f"partition {parts} is not weakly decreasing")
            if sum(parts) != self.n:
                raise GraphError(f"partition {parts} does not sum to the weight {self.n}")
            if parts in seen:
                raise GraphError(f"duplicate partition {parts}")
            seen.add(parts)
            if coeff != 0:
                norm.append((parts, coeff))
        norm.sort(key=lambda item: item[0], reverse=True)
        object.__setattr__(self, "terms", tuple(norm))

    def as_dict(self) -> dict[tuple[int, ...], int]:
        return dict(self.terms)

    def coeff(self, parts) -> int:
        return self.as_dict().get(tuple(parts), 0)


def _graph_of(x) -> Graph:
    return x.graph if isinstance(x, Tree) else x


def stable_partitions(g) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All partitions of V(g) into independent blocks, each yielded once as a
    tuple of ascending blocks ordered by smallest member."""
    g = _graph_of(g)
    if g.n < 1:
        raise GraphError("stable_partitions needs n >= 1")
    adjsets: list[set[int]] = [set() for _ in range(g.n)]
    for u, v in g.edges:
        adjsets[u].add(v)
        adjsets[v].add(u)
    return stable_partitions_rgs(g.n, adjsets)


def csf_monomial(g, backend: str | None = None) -> SymmetricFunction:
    """X_G in the monomial basis via stable-partition counting."""
    g = _graph_of(g)
    if g.n < 1:
        raise GraphError("csf_monomial needs n >= 1")
    if g.n > CSF_MONOMIAL_MAX_N:
        raise CapExceededError(
            f"csf_monomial capped at n <= {CSF_MONOMIAL_MAX_N}, got {g.n}"
        )
    counts = stable_type_counts(g.n, g.edges, backend=backend)
    plist = partitions_desc(g.n)
    terms = {}
    for i, cnt in enumerate(counts):
        if cnt:
            parts = plist[i]
            terms[parts] = int(cnt) * mult_factorial(parts)
    return SymmetricFunction(g.n, BASIS_MONOMIAL, terms)


def csf_powersum(g, backend: str | None = None) -> SymmetricFunction:
    """X_G in the power-sum basis via the signed edge-subset expansion."""
    g = _graph_of(g)
    if g.n < 1:
        raise GraphError("csf_powersum needs n >= 1")
    if g.num_edges > CSF_POWERSUM_MAX_EDGES:
        raise CapExceededError(
            f"csf_powersum capped at |E| <= {CSF_POWERSUM_MAX_EDGES}, got {g.num_edges}"
        )
    signed = edge_subset_type_counts(g.n, g.edges, backend=backend)
    plist = partitions_desc(g.n)
    terms = {plist[i]: int(c) for i, c in enumerate(signed) if c}
    return SymmetricFunction(g.n, BASIS_POWERSUM, terms)


def _distinct_runs(parts: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    return tuple((val, len(tuple(grp))) for val, grp in groupby(parts))


@lru_cache(maxsize=None)
def _sub_bags(runs: tuple[tuple[int, int], ...], target: int):
    """All ways to take a sub-multiset of `runs` summing to `target`:
    yields (remaining_runs, multiplicity) pairs, where multiplicity is the
    product of binomial choices within each equal-value run."""
    if target == 0:
        return ((runs, 1),)
    if not runs:
        return ()
    (val, mult), rest = runs[0], runs[1:]
    out = []
    binom = 1
    for take in range(0, mult + 1):
        if take:
            binom = binom * (mult - take + 1) // take
        if val * take > target:
            break
        for rem_rest, ways in _sub_bags(rest, target - val * take):
            kept = ((val, mult - take),) if take < mult else ()
            out.append((kept + rem_rest, binom * ways))
    return tuple(out)


@lru_cache(maxsize=None)
def _slot_assignments(runs: tuple[tuple[int, int], ...], mu: tuple[int, ...]) -> int:
    """Number of functions from the parts of lambda (runs form) onto ordered
    slots with prescribed sums mu; this is the p-to-m transition count."""
    if not mu:
        return 1 if not runs else 0
    total = 0
    for rem, ways in _sub_bags(runs, mu[0]):
        total += ways * _slot_assignments(rem, mu[1:])
    return total


def to_monomial(f: SymmetricFunction) -> SymmetricFunction:
    """Exact change of basis into the monomial basis (from p or am)."""
    if f.n > CSF_MONOMIAL_MAX_N:
        raise CapExceededError(f"to_monomial capped at n <= {CSF_MONOMIAL_MAX_N}")
    if f.basis == BASIS_AUGMENTED:
        terms = {parts: coeff * mult_factorial(parts) for parts, coeff in f.terms}
        return SymmetricFunction(f.n, BASIS_MONOMIAL, terms)
    if f.basis != BASIS_POWERSUM:
        raise GraphError(f"to_monomial supports bases 'p' and 'am', not {f.basis!r}")
    out: dict[tuple[int, ...], int] = {}
    for mu in partitions_desc(f.n):
        acc = 0
        for parts, coeff in f.terms:
            acc += coeff * _slot_assignments(_distinct_runs(parts), mu)
        if acc:
            out[mu] = acc
    return SymmetricFunction(f.n, BASIS_MONOMIAL, out)


def csf_equal(a, b) -> bool:
    """True iff the chromatic symmetric functions coincide (unequal n: False)."""
    ga, gb = _graph_of(a), _graph_of(b)
    if ga.n != gb.n:
        return False
    return csf_monomial(ga).terms == csf_monomial(gb).terms


def max_block_from_csf(f: SymmetricFunction) -> int:
    """Largest part over the supported partitions = max block size over all
    stable partitions = independence number."""
    if f.basis != BASIS_MONOMIAL:
        raise GraphError("max_block_from_csf needs the monomial basis")
    if not f.terms:
        raise GraphError("empty symmetric function")
    return max(parts[0] for parts, _ in f.terms)


def evaluate_ones(f: SymmetricFunction, r: int) -> int:
    """Value at x_1 = ... = x_r = 1, all other variables 0 (exact)."""
    if not isinstance(r, int) or r < 0:
        raise GraphError(f"r must be a non-negative integer, got {r!r}")
    total = 0
    for parts, coeff in f.terms:
        length = len(parts)
        if f.basis == BASIS_POWERSUM:
            total += coeff * r**length
        elif f.basis == BASIS_AUGMENTED:
            total += coeff * falling_factorial(r, length)
        else:
            ways, rem = divmod(falling_factorial(r, length), mult_factorial(parts))
            assert rem == 0
            total += coeff * ways
    return total


# ------------------------------------------------------------- serialization

def symfunc_to_json_dict(f: SymmetricFunction) -> dict:
    return {
        "n": f.n,
        "basis": f.basis,
        "terms": [{"partition": list(p), "coeff": c} for p, c in f.terms],
    }


def symfunc_from_json(text: str) -> SymmetricFunction:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"malformed symmetric function JSON: {exc}") from None
    try:
        terms = {tuple(t["partition"]): t["coeff"] for t in data["terms"]}
        return SymmetricFunction(data["n"], data["basis"], terms)
    except (KeyError, TypeError) as exc:
        raise GraphError(f"malformed symmetric function JSON: {exc}") from None


def pretty(f: SymmetricFunction) -> str:
    """Plain-text form like "m[2,1] + 6*m[1,1,1]"."""
    if not f.terms:
        return "0"
    pieces = []
    for i, (parts, coeff) in enumerate(f.terms):
        mag = abs(coeff)
        body = f"{f.basis}[{','.join(map(str, parts))}]"
        if mag != 1:
            body = f"{mag}*{body}"
        if i == 0:
            pieces.append(body if coeff > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(pieces)
