"""Checkers for the tree-distinguishing criteria, plus the bulk survey.

Five checkers, identified by theorem id:

  LEAVES_RHO      leaf counts b and path remainders rho (four cases)
  COMPONENTWISE   levelwise dominance of the padded leaf decompositions
  SUMMED          aggregate dominance with a bounded reversed-index set
  STAR_COUNT      star connections on the same vertex set with r < s stars
  SPIDER_FORMULA  closed-form spider block maximum (audit only, see below)

Applicable verdicts claim the maximal independent blocks satisfy m1 > m2,
with the pair oriented internally (``swapped`` records an exchange of the
inputs, and the detail string repeats it).  ``survey`` replays the first
three checkers over every pair of non-isomorphic trees on n vertices and
cross-checks each claim against the chromatic symmetric function itself,
so an unsound verdict cannot pass silently.

Two known weaknesses are handled explicitly rather than papered over:

* The LEAVES_RHO case-4 bound (b1-b2 > ceil((rho2-rho1)/k) for every
  admissible k >= 3) does not force strictness of the block maxima: the
  5-tooth comb versus P10 satisfies it with both maxima equal to 5.  The
  checker additionally requires m1 > m2 and otherwise reports the tie in
  ``detail`` as NotApplicable.
* spider_M_formula reproduces its closed form verbatim even though it
  disagrees with the exact independence number already on legs (1,1,1);
  spider_audit pairs it with the alpha_mis oracle instead of correcting it.
"""

from __future__ import annotations

import multiprocessing
import os
from dataclasses import dataclass

from .decomposition import (
    alpha_mis,
    chain_holds,
    chain_sequence,
    leaf_decomposition,
    padded_levels,
    rho_data,
)
from .errors import GraphError
from .generators import (
    Gluing,
    SpiderSpec,
    StarConnectionSpec,
    enumerate_free_trees,
    gen_spider,
    gen_star_connection,
)
from .graphs import Graph, Tree, canonical_code, degrees, trees_isomorphic
from .partitions import partitions_desc
from .symfunc import csf_monomial, max_block_from_csf

LEAVES_RHO = "LEAVES_RHO"
COMPONENTWISE = "COMPONENTWISE"
SUMMED = "SUMMED"
STAR_COUNT = "STAR_COUNT"
SPIDER_FORMULA = "SPIDER_FORMULA"

APPLICABLE = "Applicable"
NOT_APPLICABLE = "NotApplicable"

SPIDER_AUDIT_MAX_VERTICES = 24


@dataclass(frozen=True)
class TheoremVerdict:
    theorem_id: str
    status: str
    case_id: int | None = None
    m1: int | None = None
    m2: int | None = None
    swapped: bool = False
    detail: str = ""


def verdict_to_json_dict(v: TheoremVerdict) -> dict:
    return {
        "theorem": v.theorem_id,
        "status": v.status,
        "case": v.case_id,
        "m1": v.m1,
        "m2": v.m2,
        "swapped": v.swapped,
        "detail": v.detail,
    }


@dataclass(frozen=True)
class TreeFacts:
    """Everything the pairwise checkers need to know about one tree."""

    n: int
    levels: tuple[tuple[int, int], ...]
    rho: int
    is_path: bool


def tree_facts(t: Tree) -> TreeFacts:
    d = leaf_decomposition(t)
    if t.n >= 2:
        rd = rho_data(t)
        rho, path = rd.rho, rd.is_path
    else:
        rho, path = 0, True
    return TreeFacts(t.n, d.level_counts(), rho, path)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _check_pair_pre(t1: Tree, t2: Tree, min_n: int = 1) -> None:
    if t1.n != t2.n:
        raise GraphError(f"vertex counts differ: {t1.n} != {t2.n}")
    if t1.n < min_n:
        raise GraphError(f"checker needs n >= {min_n}, got {t1.n}")
    if trees_isomorphic(t1, t2):
        raise GraphError("trees are isomorphic")


def _leaves_verdict(f1: TreeFacts, f2: TreeFacts) -> TheoremVerdict:
    b1, b2 = f1.levels[0][0], f2.levels[0][0]
    if b1 == b2:
        return TheoremVerdict(LEAVES_RHO, NOT_APPLICABLE, detail=f"equal leaf counts b = {b1}")
    swapped = b1 < b2
    if swapped:
        f1, f2, b1, b2 = f2, f1, b2, b1
    note = "inputs swapped so that b1 > b2; " if swapped else ""
    if not (f1.is_path and f2.is_path):
        bad = [name for name, f in (("t1", f1), ("t2", f2)) if not f.is_path]
        return TheoremVerdict(
            LEAVES_RHO,
            NOT_APPLICABLE,
            swapped=swapped,
            detail=note + f"rho-induced subgraph is not a path for {', '.join(bad)}",
        )
    r1, r2 = f1.rho, f2.rho
    m1 = b1 + _ceil_div(r1, 2)
    m2 = b2 + _ceil_div(r2, 2)
    diff = b1 - b2
    if r1 == r2:
        assert m1 > m2
        return TheoremVerdict(
            LEAVES_RHO, APPLICABLE, 1, m1, m2, swapped, note + f"rho1 = rho2 = {r1}"
        )
    if r1 > r2:
        assert m1 > m2
        return TheoremVerdict(
            LEAVES_RHO, APPLICABLE, 2, m1, m2, swapped, note + f"rho1 = {r1} > rho2 = {r2}"
        )
    delta = r2 - r1
    half = _ceil_div(delta, 2)
    if diff > half:
        assert m1 > m2
        return TheoremVerdict(
            LEAVES_RHO,
            APPLICABLE,
            3,
            m1,
            m2,
            swapped,
            note + f"b1-b2 = {diff} > ceil((rho2-rho1)/2) = {half}",
        )
    # Case 4: the admissible k (k >= 3, k/(k-2) <= delta < k*(b1-b2)) form the
    # integer ray [k0, oo) once delta >= 2, and ceil(delta/k) is nonincreasing
    # in k, so the whole family passes iff its smallest member does.
    if delta < 2:
        return TheoremVerdict(
            LEAVES_RHO,
            NOT_APPLICABLE,
            swapped=swapped,
            detail=note + f"no case applies (rho2-rho1 = {delta} admits no k >= 3)",
        )
    k0 = max(4 if delta == 2 else 3, delta // diff + 1)
    bound = _ceil_div(delta, k0)
    if diff > bound:
        if m1 > m2:
            return TheoremVerdict(
                LEAVES_RHO,
                APPLICABLE,
                4,
                m1,
                m2,
                swapped,
                note + f"b1-b2 = {diff} > ceil((rho2-rho1)/k) for all k >= {k0} "
                f"(hardest: ceil({delta}/{k0}) = {bound})",
            )
        return TheoremVerdict(
            LEAVES_RHO,
            NOT_APPLICABLE,
            swapped=swapped,
            detail=note + f"case-4 bound holds for all k >= {k0}, but the block maxima tie "
            f"(m1 = m2 = {m1}); the bound does not force a strict conclusion",
        )
    return TheoremVerdict(
        LEAVES_RHO,
        NOT_APPLICABLE,
        swapped=swapped,
        detail=note + f"case-4 bound fails at k = {k0}: {diff} <= ceil({delta}/{k0}) = {bound}; "
        f"the sign-flipped reading ceil((rho1-rho2)/k) <= 0 would accept every k — "
        "readings diverge",
    )


def _componentwise_verdict(f1: TreeFacts, f2: TreeFacts) -> TheoremVerdict:
    s1, s2 = padded_levels(f1.levels, f2.levels)
    if s1 == s2:
        return TheoremVerdict(COMPONENTWISE, NOT_APPLICABLE, detail="identical level sequences")
    for a, b, swapped in ((s1, s2, False), (s2, s1, True)):
        if all(ba >= bb and ea <= eb for (ba, ea), (bb, eb) in zip(a, b)):
            m1 = sum(x for x, _ in a)
            m2 = sum(x for x, _ in b)
            assert m1 > m2
            note = "inputs swapped; " if swapped else ""
            return TheoremVerdict(
                COMPONENTWISE,
                APPLICABLE,
                None,
                m1,
                m2,
                swapped,
                note + f"levelwise b >= and eta <= holds: {a} dominates {b}",
            )
    return TheoremVerdict(
        COMPONENTWISE,
        NOT_APPLICABLE,
        detail=f"no levelwise dominance in either orientation: {s1} vs {s2}",
    )


def _sum_verdict(f1: TreeFacts, f2: TreeFacts) -> TheoremVerdict:
    s1, s2 = padded_levels(f1.levels, f2.levels)
    r = len(s1)
    b1 = [x for x, _ in s1]
    b2 = [x for x, _ in s2]
    if b1 == b2:
        return TheoremVerdict(SUMMED, NOT_APPLICABLE, detail=f"identical b sequences {b1}")
    reasons = []
    for a, b, swapped in ((b1, b2, False), (b2, b1, True)):
        tag = "swapped" if swapped else "as given"
        rev = [i for i in range(r) if a[i] <= b[i]]
        if not 1 <= len(rev) <= r - 1:
            reasons.append(f"{tag}: |reversed set| = {len(rev)} outside 1..{r - 1}")
            continue
        back = sum(b[i] - a[i] for i in rev)
        fwd = sum(a[j] - b[j] for j in range(r) if j not in rev)
        if back < fwd:
            note = "inputs swapped; " if swapped else ""
            return TheoremVerdict(
                SUMMED,
                APPLICABLE,
                None,
                sum(a),
                sum(b),
                swapped,
                note + f"reversed levels {rev}: deficit {back} < surplus {fwd} (b: {a} vs {b})",
            )
        reasons.append(f"{tag}: deficit {back} >= surplus {fwd}")
    return TheoremVerdict(SUMMED, NOT_APPLICABLE, detail="; ".join(reasons))


def thm_leaves_check(t1: Tree, t2: Tree) -> TheoremVerdict:
    _check_pair_pre(t1, t2, min_n=4)
    return _leaves_verdict(tree_facts(t1), tree_facts(t2))


def thm_componentwise_check(t1: Tree, t2: Tree) -> TheoremVerdict:
    _check_pair_pre(t1, t2)
    return _componentwise_verdict(tree_facts(t1), tree_facts(t2))


def thm_sum_check(t1: Tree, t2: Tree) -> TheoremVerdict:
    _check_pair_pre(t1, t2)
    return _sum_verdict(tree_facts(t1), tree_facts(t2))


def star_connection_counts(spec: StarConnectionSpec) -> tuple[int, int]:
    """(vertex count, degree excess of the gluing vertices), both computed by
    the closed forms sum(n_k) - (r-1) and r-1 and verified on the built tree."""
    r = spec.num_stars
    t = gen_star_connection(spec)
    nverts = sum(spec.star_sizes) - (r - 1)
    excess = r - 1
    deg = degrees(t.graph)
    built = sum(deg[r + i] - 1 for i in range(len(spec.gluings)))
    assert t.n == nverts and built == excess
    return nverts, excess


def star_connection_M(spec: StarConnectionSpec) -> int:
    nverts, excess = star_connection_counts(spec)
    m = sum(k - 1 for k in spec.star_sizes) - excess
    assert m == nverts - spec.num_stars
    return m


def star_connection_distinct(a: StarConnectionSpec, b: StarConnectionSpec) -> TheoremVerdict:
    va, _ = star_connection_counts(a)
    vb, _ = star_connection_counts(b)
    if va != vb:
        raise GraphError(f"vertex counts differ: {va} != {vb}")
    r, s = a.num_stars, b.num_stars
    if r == s:
        return TheoremVerdict(STAR_COUNT, NOT_APPLICABLE, detail=f"equal star counts r = s = {r}")
    swapped = r > s
    first, second = (b, a) if swapped else (a, b)
    m1 = star_connection_M(first)
    m2 = star_connection_M(second)
    assert m1 > m2
    note = "inputs swapped; " if swapped else ""
    return TheoremVerdict(
        STAR_COUNT,
        APPLICABLE,
        None,
        m1,
        m2,
        swapped,
        note + f"{first.num_stars} < {second.num_stars} stars on {va} vertices",
    )


def spider_M_formula(spec: SpiderSpec) -> int:
    """The closed form by leg parity, reproduced verbatim: all even ->
    sum(L/2); all odd -> sum((L-1)/2) + 1; mixed -> evens and odds summed
    without the +1.  No claim of agreement with alpha_mis is made here."""
    if not isinstance(spec, SpiderSpec):
        spec = SpiderSpec(tuple(spec))
    evens = [L for L in spec.legs if L % 2 == 0]
    odds = [L for L in spec.legs if L % 2 == 1]
    if not odds:
        return sum(L // 2 for L in evens)
    if not evens:
        return sum((L - 1) // 2 for L in odds) + 1
    return sum(L // 2 for L in evens) + sum((L - 1) // 2 for L in odds)


def spider_audit(spec: SpiderSpec) -> tuple[int, int, bool]:
    if not isinstance(spec, SpiderSpec):
        spec = SpiderSpec(tuple(spec))
    if spec.num_vertices > SPIDER_AUDIT_MAX_VERTICES:
        raise GraphError(
            f"spider audit capped at {SPIDER_AUDIT_MAX_VERTICES} vertices, got {spec.num_vertices}"
        )
    formula = spider_M_formula(spec)
    oracle = alpha_mis(gen_spider(spec).graph)
    return formula, oracle, formula == oracle


@dataclass(frozen=True)
class SurveyReport:
    n: int
    num_trees: int
    pairs: int
    x_equal_pairs: int
    skipped_pairs: int
    soundness_violations: tuple[dict, ...]
    verdict_counts: dict
    chain_audit_violations: tuple[dict, ...]
    spider_audit: tuple[dict, ...]
    star_audit: tuple[dict, ...]
    pair_rows: tuple[tuple, ...]


def survey_report_to_json_dict(rep: SurveyReport) -> dict:
    return {
        "n": rep.n,
        "num_trees": rep.num_trees,
        "pairs": rep.pairs,
        "x_equal_pairs": rep.x_equal_pairs,
        "skipped_pairs": rep.skipped_pairs,
        "soundness_violations": list(rep.soundness_violations),
        "verdict_counts": rep.verdict_counts,
        "chain_audit_violations": list(rep.chain_audit_violations),
        "spider_audit": list(rep.spider_audit),
        "star_audit": list(rep.star_audit),
    }


SURVEY_CSV_HEADER = (
    "a",
    "b",
    "x_equal",
    "leaves_status",
    "leaves_case",
    "leaves_m1",
    "leaves_m2",
    "leaves_swapped",
    "componentwise_status",
    "componentwise_m1",
    "componentwise_m2",
    "componentwise_swapped",
    "summed_status",
    "summed_m1",
    "summed_m2",
    "summed_swapped",
)


def _cell(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    return str(x)


def _pair_row(i, j, x_eq, lv, cw, sm) -> tuple[str, ...]:
    return (
        _cell(i),
        _cell(j),
        _cell(x_eq),
        lv.status,
        _cell(lv.case_id),
        _cell(lv.m1),
        _cell(lv.m2),
        _cell(lv.swapped),
        cw.status,
        _cell(cw.m1),
        _cell(cw.m2),
        _cell(cw.swapped),
        sm.status,
        _cell(sm.m1),
        _cell(sm.m2),
        _cell(sm.swapped),
    )


def _survey_payload(task):
    """Per-tree work unit: decomposition facts plus the CSF. Pure, picklable."""
    n, edges = task
    t = Tree(Graph(n, edges))
    d = leaf_decomposition(t)
    facts = tree_facts(t)
    f = csf_monomial(t.graph)
    return facts, chain_sequence(d), chain_holds(d), f.terms, max_block_from_csf(f)


def _map_payloads(tasks, jobs):
    if jobs is None:
        jobs = os.cpu_count() or 1
    jobs = max(1, min(int(jobs), len(tasks)))
    if jobs == 1:
        return [_survey_payload(t) for t in tasks]
    with multiprocessing.get_context().Pool(jobs) as pool:
        return pool.map(_survey_payload, tasks)


def _spider_audit_rows(n: int) -> list[dict]:
    rows = []
    for parts in partitions_desc(n - 1):
        if len(parts) < 3:
            continue
        formula, oracle, agrees = spider_audit(SpiderSpec(parts))
        rows.append({"legs": list(parts), "formula": formula, "oracle": oracle, "agrees": agrees})
    return rows


def _compositions(total: int, r: int, minpart: int):
    if r == 1:
        if total >= minpart:
            yield (total,)
        return
    for first in range(minpart, total - minpart * (r - 1) + 1):
        for rest in _compositions(total - first, r - 1, minpart):
            yield (first,) + rest


def _star_audit_rows(n: int) -> list[dict]:
    """Formula-vs-oracle rows for the star connections on n vertices that the
    survey samples: all chains (stars glued in a row at distinct vertices) and
    all bouquets (every star glued at one shared vertex), deduplicated up to
    isomorphism."""
    rows = []
    seen = set()
    for r in range(2, n):
        total = n + r - 1  # sum of star sizes; each of r-1 merges saves a vertex
        if 3 * r > total:
            break
        specs = [
            StarConnectionSpec(comp, tuple(Gluing((i, i + 1)) for i in range(r - 1)))
            for comp in _compositions(total, r, 3)
        ]
        if r >= 3:
            specs.extend(
                StarConnectionSpec(parts, (Gluing(tuple(range(r))),))
                for parts in partitions_desc(total)
                if len(parts) == r and parts[-1] >= 3
            )
        for spec in specs:
            t = gen_star_connection(spec)
            code = canonical_code(t)
            if code in seen:
                continue
            seen.add(code)
            m = star_connection_M(spec)
            a = alpha_mis(t.graph)
            rows.append({"stars": list(spec.star_sizes), "formula": m, "alpha": a, "agrees": m == a})
    return rows


def survey(n: int, jobs: int | None = None) -> SurveyReport:
    """Replay the pairwise checkers over all non-isomorphic trees on n
    vertices (3 <= n <= 11), cross-check every Applicable claim against the
    CSF, and run the chain/spider/star audits for the same n.

    Per-tree work fans out over `jobs` processes; the pairwise pass is a
    cheap single-writer loop in canonical-code order, so the report is
    byte-identical regardless of jobs."""
    if not isinstance(n, int) or isinstance(n, bool) or not 3 <= n <= 11:
        raise GraphError("survey needs an integer n with 3 <= n <= 11")
    trees = enumerate_free_trees(n)
    payloads = _map_payloads([(n, t.graph.edges) for t in trees], jobs)
    facts = [p[0] for p in payloads]
    terms = [p[3] for p in payloads]
    mb = [p[4] for p in payloads]

    chain_viol = [
        {"tree": i, "sequence": list(p[1])} for i, p in enumerate(payloads) if not p[2]
    ]
    counts = {
        LEAVES_RHO: {"case1": 0, "case2": 0, "case3": 0, "case4": 0, "not_applicable": 0},
        COMPONENTWISE: {"applicable": 0, "not_applicable": 0},
        SUMMED: {"applicable": 0, "not_applicable": 0},
    }
    x_equal = 0
    violations: list[dict] = []
    rows: list[tuple] = []
    for i in range(len(trees)):
        for j in range(i + 1, len(trees)):
            x_eq = terms[i] == terms[j]
            if x_eq:
                x_equal += 1
            lv = _leaves_verdict(facts[i], facts[j])
            cw = _componentwise_verdict(facts[i], facts[j])
            sm = _sum_verdict(facts[i], facts[j])
            if lv.status == APPLICABLE:
                counts[LEAVES_RHO][f"case{lv.case_id}"] += 1
            else:
                counts[LEAVES_RHO]["not_applicable"] += 1
            for key, v in ((COMPONENTWISE, cw), (SUMMED, sm)):
                counts[key]["applicable" if v.status == APPLICABLE else "not_applicable"] += 1
            for v in (lv, cw, sm):
                if v.status != APPLICABLE:
                    continue
                hi, lo = (j, i) if v.swapped else (i, j)
                problems = []
                if x_eq:
                    problems.append("csf_equal is true")
                if v.m1 != mb[hi] or v.m2 != mb[lo]:
                    problems.append(
                        f"claimed m = ({v.m1}, {v.m2}) but max blocks are ({mb[hi]}, {mb[lo]})"
                    )
                if not (v.m1 is not None and v.m2 is not None and v.m1 > v.m2):
                    problems.append(f"m1 = {v.m1} is not strictly greater than m2 = {v.m2}")
                if problems:
                    violations.append(
                        {"a": i, "b": j, "theorem": v.theorem_id, "reason": "; ".join(problems)}
                    )
            rows.append(_pair_row(i, j, x_eq, lv, cw, sm))
    return SurveyReport(
        n=n,
        num_trees=len(trees),
        pairs=len(rows),
        x_equal_pairs=x_equal,
        skipped_pairs=0,
        soundness_violations=tuple(violations),
        verdict_counts=counts,
        chain_audit_violations=tuple(chain_viol),
        spider_audit=tuple(_spider_audit_rows(n)),
        star_audit=tuple(_star_audit_rows(n)),
        pair_rows=tuple(rows),
    )
