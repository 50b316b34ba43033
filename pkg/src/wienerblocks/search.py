"""Exhaustive extremal search over graphs with a given number of blocks, and
small-n verifiers for the distance bounds behind the extremal structure."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from functools import lru_cache
from itertools import combinations
import numpy as np

from .blocks import block_decomposition
from .canon import canonical_graph6, canonical_label
from .compose import wiener_pair
from .enumeration import enumerate_biconnected, enumerate_connected
from .families import FamilyParams, cycle, spider, theta, two_cycles_path, two_cycles_wiener
from .graph import Graph, GraphError, distance_matrix, graph6_decode, is_connected, wiener
from .rewrites import hill_climb, is_normalized


@dataclass
class ExtremalResult:
    n: int
    p: int
    max_w: int
    extremal: list[str]  # canonical graph6
    family_match: bool
    witness_params: list[tuple[int, int]]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "max_w": self.max_w,
            "extremal": list(self.extremal),
            "family_match": self.family_match,
            "witness_params": [list(x) for x in self.witness_params],
        }


@dataclass
class FamilyOptimum:
    n: int
    p: int
    best_pairs: list[tuple[int, int]]
    best_w: int


@lru_cache(maxsize=None)
def _stats(n: int, jobs: int = 1) -> tuple[tuple[Graph, int, int], ...]:
    """(graph, block count, Wiener index) for every connected class on ``n`` vertices."""
    out = []
    for g in enumerate_connected(n, jobs):
        out.append((g, block_decomposition(g).block_count, wiener(g)))
    return tuple(out)


def _family_codes(n: int, p: int) -> dict[int, tuple[int, int]]:
    codes = {}
    s = n - p + 3
    for a in range(2, s // 2 + 1):
        params = FamilyParams(a, s - a, p)
        codes[canonical_label(two_cycles_path(params)).code] = (params.a, params.b)
    return codes


def max_wiener_blocks(n: int, p: int, jobs: int = 1) -> ExtremalResult:
    """Exact maximum Wiener index over connected graphs with ``n`` vertices and ``p`` blocks."""
    if not (1 <= p < n):
        raise GraphError(f"need n > p >= 1, got n={n}, p={p}")
    best = -1
    winners: list[Graph] = []
    for g, blocks, w in _stats(n, jobs):
        if blocks != p:
            continue
        if w > best:
            best, winners = w, [g]
        elif w == best:
            winners.append(g)
    family = _family_codes(n, p) if p >= 2 else {}
    matched = []
    all_match = bool(winners) and p >= 2
    for g in winners:
        code = canonical_label(g).code
        if code in family:
            matched.append(family[code])
        else:
            all_match = False
    return ExtremalResult(
        n=n,
        p=p,
        max_w=best,
        extremal=sorted(canonical_graph6(g) for g in winners),
        family_match=all_match,
        witness_params=sorted(matched),
    )


def family_optimum(n: int, p: int) -> FamilyOptimum:
    """Best cycle-path-cycle member for ``(n, p)``, evaluated compositionally."""
    if not (2 <= p < n):
        raise GraphError(f"need n > p >= 2, got n={n}, p={p}")
    s = n - p + 3
    values = {}
    for a in range(2, s // 2 + 1):
        values[(a, s - a)] = two_cycles_wiener(FamilyParams(a, s - a, p))
    best = max(values.values())
    return FamilyOptimum(n, p, sorted(k for k, v in values.items() if v == best), best)


# verifiers


@dataclass
class MainCase:
    p: int
    max_w: int
    family_best_w: int
    family_best_pairs: list[tuple[int, int]]
    extremal_count: int
    family_match: bool
    witness_params: list[tuple[int, int]]
    terminal_block_counts: list[int]
    outside_family: list[str]
    passed: bool


@dataclass
class MainReport:
    n: int
    cases: list[MainCase] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    def to_dict(self) -> dict:
        return {"check": "main", "n": self.n, "passed": self.passed,
                "cases": [asdict(c) for c in self.cases]}


def verify_main(n: int, jobs: int = 1) -> MainReport:
    """Compare the exhaustive maximum with the family maximum for every ``p``."""
    if not 3 <= n <= 10:
        raise GraphError(f"verify_main supports 3 <= n <= 10, got {n}")
    report = MainReport(n)
    for p in range(2, n):
        res = max_wiener_blocks(n, p, jobs)
        fam = family_optimum(n, p)
        family = _family_codes(n, p)
        outside = []
        terminal_counts = []
        for g6 in res.extremal:
            g = graph6_decode(g6)
            if canonical_label(g).code not in family:
                outside.append(g6)
            dec = block_decomposition(g)
            terminal_counts.append(sum(1 for i in range(dec.block_count) if len(dec.attachments(i)) == 1))
        report.cases.append(
            MainCase(
                p=p,
                max_w=res.max_w,
                family_best_w=fam.best_w,
                family_best_pairs=fam.best_pairs,
                extremal_count=len(res.extremal),
                family_match=res.family_match,
                witness_params=res.witness_params,
                terminal_block_counts=terminal_counts,
                outside_family=outside,
                passed=res.max_w == fam.best_w and res.family_match,
            )
        )
    return report


@dataclass
class TwoCycleReport:
    n: int
    values: dict[int, int]  # r -> W(C_{n-r+1} o C_r)
    checks: dict[str, bool]

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        return {"check": "two_cycle", "n": self.n, "passed": self.passed,
                "values": {str(r): w for r, w in self.values.items()}, "checks": self.checks}


def two_cycle_wiener(n: int, r: int) -> int:
    """W of the cycles C_{n-r+1} and C_r sharing one vertex."""
    return wiener_pair(cycle(n - r + 1), 0, cycle(r), 0)


def verify_two_cycle_family(n: int) -> TwoCycleReport:
    if not 5 <= n <= 40:
        raise GraphError(f"verify_two_cycle_family supports 5 <= n <= 40, got {n}")
    values = {r: two_cycle_wiener(n, r) for r in range(2, n)}
    family = {r: w for r, w in values.items() if r >= 3 and n - r >= 2}
    top = max(family.values())
    checks = {}
    if n == 7:
        checks["W(C4oC4) > W(C5oC3)"] = values[4] > values[3]
    elif n == 9:
        checks["W(C6oC4) > W(C7oC3)"] = values[4] > values[3]
        checks["W(C7oC3) > W(C5oC5)"] = values[3] > values[5]
    else:
        checks["argmax r = 3"] = {r for r, w in family.items() if w == top} <= {3, n - 2}
    checks["C_{n-1}oC_2 beats every r >= 3"] = all(values[2] > w for w in family.values())
    return TwoCycleReport(n, values, checks)


def far_subsets(dist: list[list[int]], k: int, t: int) -> list[tuple[int, ...]]:
    """All ``k``-subsets whose pairwise distances are all at least ``t``."""
    n = len(dist)
    far = [sum(1 << w for w in range(n) if w != v and dist[v][w] >= t) for v in range(n)]
    out = []

    def extend(chosen: list[int], cands: int) -> None:
        if len(chosen) == k:
            out.append(tuple(chosen))
            return
        while cands:
            if (cands.bit_count() + len(chosen)) < k:
                return
            low = cands & -cands
            v = low.bit_length() - 1
            cands ^= low
            chosen.append(v)
            extend(chosen, cands & far[v])
            chosen.pop()

    extend([], (1 << n) - 1)
    return out


def max_min_distance(dist: list[list[int]], k: int) -> int:
    """Largest value of the minimum pairwise distance over ``k``-subsets."""
    top = max(max(row) for row in dist)
    for t in range(top, 0, -1):
        if far_subsets(dist, k, t):
            return t
    return 0


@dataclass
class KDistReport:
    n: int
    k: int
    graphs: int
    bound: int  # floor((2n - 2) / k)
    worst: int  # largest min-distance seen
    equality_cases: list[tuple[str, tuple[int, ...]]]
    violations: list[str]

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {"check": "kdist", "passed": self.passed, **asdict(self)}


def verify_kdist(n: int, k: int, jobs: int = 1) -> KDistReport:
    if not 3 <= k < n <= 10:
        raise GraphError(f"verify_kdist needs 3 <= k < n <= 10, got n={n}, k={k}")
    bound = (2 * n - 2) // k
    exact = (2 * n - 2) % k == 0
    spider_code = None
    if (n - 1) % k == 0:
        spider_code = canonical_label(spider(k, (n - 1) // k)).code
    equality = []
    violations = []
    worst = 0
    count = 0
    for g in enumerate_connected(n, jobs):
        count += 1
        dist = distance_matrix(g)
        if far_subsets(dist, k, bound + 1):
            violations.append(f"bound exceeded in {canonical_graph6(g)}")
        worst = max(worst, max_min_distance(dist, k))
        if not exact:
            continue
        for subset in far_subsets(dist, k, bound):
            g6 = canonical_graph6(g)
            equality.append((g6, subset))
            leaves = tuple(v for v in range(n) if g.degree(v) == 1)
            if n % k != 1 % k:
                violations.append(f"equality with n not 1 mod k in {g6}")
            elif canonical_label(g).code != spider_code:
                violations.append(f"equality in non-spider {g6}")
            elif subset != leaves:
                violations.append(f"equality at non-tip vertices {subset} of {g6}")
    return KDistReport(n, k, count, bound, worst, equality, violations)


def _triples(n: int) -> np.ndarray:
    return np.array(list(combinations(range(n), 3)), dtype=np.int64).reshape(-1, 3)


def max_triple_distance(g: Graph) -> int:
    """Maximum over distinct vertex triples of the sum of their pairwise distances."""
    dist = distance_matrix(g)
    return max(dist[a][b] + dist[a][c] + dist[b][c] for a, b, c in combinations(range(g.n), 3))


@dataclass
class ThetaReport:
    n: int
    graphs: int
    max_d: int
    witnesses: list[str]
    violations: list[str]  # bound, even-n strictness, and "every witness is an even theta"
    # weaker form: edge-minimal witnesses are even thetas and every witness
    # contains a spanning even theta
    spanning_theta_violations: list[str]

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {"check": "theta", "passed": self.passed, **asdict(self)}


def even_thetas(n: int) -> dict[int, tuple[int, int, int]]:
    """Canonical codes of theta graphs on ``n`` vertices with all path lengths even."""
    out = {}
    for a in range(2, n + 2, 2):
        for b in range(a, n + 2, 2):
            c = n + 1 - a - b
            if c >= b and c % 2 == 0:
                out[canonical_label(theta(a, b, c)).code] = (a, b, c)
    return out


def is_biconnected(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and block_decomposition(g).block_count == 1


def _drop_edge(g: Graph, u: int, v: int) -> Graph:
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(g.n, tuple(adj))


def minimal_biconnected_spanning(g: Graph) -> Graph:
    """Greedily delete edges (in edge order) while the graph stays 2-connected."""
    changed = True
    while changed:
        changed = False
        for u, v in g.edges():
            h = _drop_edge(g, u, v)
            if is_biconnected(h):
                g, changed = h, True
                break
    return g


def verify_theta(n: int, jobs: int = 1) -> ThetaReport:
    if not 4 <= n <= 10:
        raise GraphError(f"verify_theta supports 4 <= n <= 10, got {n}")
    graphs = list(enumerate_biconnected(n, jobs))
    idx = _triples(n)
    mats = np.array([distance_matrix(g) for g in graphs], dtype=np.int16)
    sums = (
        mats[:, idx[:, 0], idx[:, 1]] + mats[:, idx[:, 0], idx[:, 2]] + mats[:, idx[:, 1], idx[:, 2]]
    )
    best = sums.max(axis=1)
    allowed = even_thetas(n)
    witnesses = []
    violations = []
    weaker = []
    for i in np.flatnonzero(best > n + 1):
        violations.append(f"D = {int(best[i])} > n + 1 in {canonical_graph6(graphs[i])}")
    for i in np.flatnonzero(best == n + 1):
        g = graphs[i]
        g6 = canonical_graph6(g)
        witnesses.append(g6)
        if n % 2 == 0:
            violations.append(f"D = n + 1 for even n in {g6}")
        elif canonical_label(g).code not in allowed:
            violations.append(f"D = n + 1 in a graph that is not an even theta: {g6}")
        # edge deletion keeps D >= n + 1, so the reduced graph is again a witness
        core = minimal_biconnected_spanning(g)
        if canonical_label(core).code not in allowed:
            weaker.append(f"witness {g6} reduces to {canonical_graph6(core)}, not an even theta")
    return ThetaReport(n, len(graphs), int(best.max()), sorted(witnesses), violations, weaker)


# hill-climb survey


@dataclass
class ClimbSurvey:
    n: int
    graphs: int
    steps: int
    non_global: list[tuple[str, str, int, int]]  # (start, fixpoint, W, max W for its p)
    violations: list[str]

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {"check": "climb", "passed": self.passed, **asdict(self)}


def survey_hill_climb(n: int, jobs: int = 1) -> ClimbSurvey:
    """Climb from every class on ``n`` vertices; record fixpoints below the optimum."""
    best: dict[int, int] = {}
    for _, p, w in _stats(n, jobs):
        best[p] = max(best.get(p, -1), w)
    steps = 0
    non_global = []
    violations = []
    for g, p, w in _stats(n, jobs):
        fix, trace = hill_climb(g)
        steps += len(trace)
        w_fix = w + sum(r.delta_w for r in trace)
        if any(r.delta_w <= 0 for r in trace):
            violations.append(f"non-increasing step from {canonical_graph6(g)}")
        if w_fix > best[p]:
            violations.append(f"fixpoint above the exhaustive maximum from {canonical_graph6(g)}")
        if not is_normalized(fix):
            violations.append(f"fixpoint not normalized from {canonical_graph6(g)}")
        if w_fix < best[p]:
            non_global.append((canonical_graph6(g), canonical_graph6(fix), w_fix, best[p]))
    return ClimbSurvey(n, len(_stats(n, jobs)), steps, non_global, violations)
