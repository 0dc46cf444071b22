"""Minimum bipartizing edge sets of fullerenes.

b(H) equals the weight of a minimum perfect matching of the twelve
pentagons, weighted by their distances in the dual graph.  The edge set
itself is the union of the primal edges crossed by one shortest dual path
per matched pair.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .errors import (
    Exceeded,
    FullereneError,
    OverlapInvariantViolated,
    WrongVertexCount,
)
from .planar import (
    DualGraph,
    Edge,
    Fullerene,
    build_dual,
    edge_key,
    is_bipartite,
    remove_edges,
)


class BoundViolated(FullereneError):
    pass


# ---------------------------------------------------------------------------
# pentagon metric


@dataclass(frozen=True)
class PentagonMetric:
    order: tuple[int, ...]
    d: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.order)


def bfs_distances(adj: Sequence[Sequence[int]], source: int) -> list[int]:
    dist = [-1] * len(adj)
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        dv = dist[v] + 1
        for w in adj[v]:
            if dist[w] < 0:
                dist[w] = dv
                queue.append(w)
    return dist


def pentagon_metric(F: Fullerene, dual: DualGraph | None = None) -> PentagonMetric:
    dual = dual or build_dual(F)
    order = F.pentagons
    rows = []
    for p in order:
        dist = bfs_distances(dual.adj, p)
        rows.append(tuple(dist[q] for q in order))
    return PentagonMetric(tuple(order), tuple(rows))


# ---------------------------------------------------------------------------
# matching


@dataclass(frozen=True)
class PentagonMatching:
    pairs: tuple[tuple[int, int], ...]
    weight: int


def min_weight_perfect_matching(M: PentagonMetric | Sequence[Sequence[int]]) -> PentagonMatching:
    """Exact minimum perfect matching by dynamic programming over vertex subsets.

    The lowest unmatched index is always paired first, and among optimal
    partners the smallest is taken, which yields the lexicographically
    smallest optimal pair sequence.
    """
    d = M.d if isinstance(M, PentagonMetric) else M
    k = len(d)
    if k % 2:
        raise ValueError("perfect matching needs an even number of vertices")
    full = (1 << k) - 1
    INF = math.inf
    # best[mask] = minimum cost of matching the vertices in mask
    best = [INF] * (1 << k)
    best[0] = 0
    for mask in range(1, full + 1):
        if bin(mask).count("1") % 2:
            continue
        i = (mask & -mask).bit_length() - 1
        rest = mask ^ (1 << i)
        di = d[i]
        b = INF
        r = rest
        while r:
            low = r & -r
            j = low.bit_length() - 1
            c = di[j] + best[rest ^ low]
            if c < b:
                b = c
            r ^= low
        best[mask] = b

    pairs = []
    mask = full
    while mask:
        i = (mask & -mask).bit_length() - 1
        rest = mask ^ (1 << i)
        for j in range(i + 1, k):
            if rest >> j & 1 and d[i][j] + best[rest ^ (1 << j)] == best[mask]:
                pairs.append((i, j))
                mask = rest ^ (1 << j)
                break
    weight = best[full]
    return PentagonMatching(tuple(pairs), int(weight) if weight != INF else weight)


# ---------------------------------------------------------------------------
# cut recovery


def shortest_dual_path(dual: DualGraph, source: int, target: int) -> list[int]:
    """Face sequence of a shortest path; ties go to the smallest predecessor id."""
    dist = bfs_distances(dual.adj, source)
    path = [target]
    v = target
    while v != source:
        want = dist[v] - 1
        v = min(w for w in dual.adj[v] if dist[w] == want)
        path.append(v)
    path.reverse()
    return path


def recover_edge_cut(F: Fullerene, dual: DualGraph, matching: PentagonMatching) -> tuple[Edge, ...]:
    order = F.pentagons
    used: dict[Edge, tuple[int, int]] = {}
    cut: set[Edge] = set()
    for a, b in matching.pairs:
        path = shortest_dual_path(dual, order[a], order[b])
        for f, g in zip(path, path[1:]):
            key = edge_key(f, g)
            if key in used:
                raise OverlapInvariantViolated(
                    f"dual edge {key} used by pairs {used[key]} and {(a, b)}"
                )
            used[key] = (a, b)
            cut.add(dual.crossing(f, g))
    return tuple(sorted(cut))


# ---------------------------------------------------------------------------
# bounds


def conjecture_bound(n: int) -> float:
    return math.sqrt(12 * n / 5)


def matched_bound(n: int) -> float:
    return math.sqrt(1134 * n) + 84


def general_bound(n: int) -> float:
    return math.sqrt(3087 * n / 2) + 98


def proximity_threshold(n: int) -> float:
    return math.sqrt(63 * n / 2) + 14


def within_threshold(w: int, n: int) -> bool:
    """Exact test of ``w <= sqrt(63n/2) + 14`` for integer w."""
    return w <= 14 or 2 * (w - 14) ** 2 <= 63 * n


def within_matched_bound(b: int, n: int) -> bool:
    return b <= 84 or (b - 84) ** 2 <= 1134 * n


def within_general_bound(b: int, n: int) -> bool:
    return b <= 98 or 2 * (b - 98) ** 2 <= 3087 * n


def within_conjecture_bound(b: int, n: int) -> bool:
    return 5 * b * b <= 12 * n


@dataclass(frozen=True)
class ThresholdedMetric:
    metric: PentagonMetric
    n: int
    adjacency: tuple[tuple[bool, ...], ...]

    @property
    def threshold(self) -> float:
        return proximity_threshold(self.n)

    def degrees(self) -> list[int]:
        return [sum(row) for row in self.adjacency]

    def as_graph12(self) -> list[set[int]]:
        return [{j for j, x in enumerate(row) if x} for row in self.adjacency]


def thresholded_metric(M: PentagonMetric, n: int) -> ThresholdedMetric:
    k = len(M.d)
    adj = tuple(
        tuple(i != j and within_threshold(M.d[i][j], n) for j in range(k)) for i in range(k)
    )
    return ThresholdedMetric(M, n, adj)


@dataclass(frozen=True)
class ProximityVerdict:
    counts: tuple[int, ...]
    ok: bool


def check_pentagon_proximity(F: Fullerene, M: PentagonMetric | None = None) -> ProximityVerdict:
    """For every pentagon, count the other pentagons within the distance threshold."""
    M = M or pentagon_metric(F)
    counts = tuple(thresholded_metric(M, F.n).degrees())
    return ProximityVerdict(counts, all(c >= 5 for c in counts))


# ---------------------------------------------------------------------------
# end to end


@dataclass(frozen=True)
class BipartizationResult:
    n: int
    matching: PentagonMatching
    cut: tuple[Edge, ...]
    metric: PentagonMetric = field(repr=False)
    thresholded_has_matching: bool = True

    @property
    def b(self) -> int:
        return len(self.cut)

    @property
    def bounds(self) -> dict[str, float]:
        return {
            "conjecture": conjecture_bound(self.n),
            "matched": matched_bound(self.n),
            "general": general_bound(self.n),
        }


def bipartize(F: Fullerene, dual: DualGraph | None = None, *, check: bool = True) -> BipartizationResult:
    """Minimum edge set whose removal leaves ``F`` bipartite.

    With ``check`` the result is verified by an independent 2-colouring and
    both proven upper bounds are asserted in exact integer arithmetic.
    """
    dual = dual or build_dual(F)
    M = pentagon_metric(F, dual)
    matching = min_weight_perfect_matching(M)
    cut = recover_edge_cut(F, dual, matching)
    K = thresholded_metric(M, F.n)
    has_pm = has_perfect_matching_12(K.as_graph12())
    result = BipartizationResult(F.n, matching, cut, M, has_pm)
    if check:
        if len(cut) != matching.weight:
            raise OverlapInvariantViolated(f"|S|={len(cut)} but matching weight {matching.weight}")
        if not is_bipartite(remove_edges(F, cut)):
            raise FullereneError("recovered cut does not bipartize the graph")
        if not within_general_bound(result.b, F.n):
            raise BoundViolated(f"b={result.b} exceeds sqrt(3087n/2)+98 at n={F.n}")
        if has_pm and not within_matched_bound(result.b, F.n):
            raise BoundViolated(f"b={result.b} exceeds sqrt(1134n)+84 at n={F.n}")
    return result


# ---------------------------------------------------------------------------
# 12-vertex graphs


def _bitmasks(g) -> list[int]:
    if len(g) != 12:
        raise WrongVertexCount(f"expected 12 vertices, got {len(g)}")
    if isinstance(g[0], int):
        return list(g)
    masks = []
    for v, nbrs in enumerate(g):
        m = 0
        for w in nbrs:
            if w != v:
                m |= 1 << w
        masks.append(m)
    return masks


def has_perfect_matching_12(g) -> bool:
    """Exact perfect matching test on 12 vertices (adjacency lists or bitmasks)."""
    adj = _bitmasks(g)

    @lru_cache(maxsize=None)
    def matchable(mask: int) -> bool:
        if not mask:
            return True
        low = mask & -mask
        i = low.bit_length() - 1
        rest = mask ^ low
        cand = adj[i] & rest
        while cand:
            bit = cand & -cand
            if matchable(rest ^ bit):
                return True
            cand ^= bit
        return False

    return matchable((1 << 12) - 1)


_FIVE_SETS = tuple(sum(1 << v for v in c) for c in combinations(range(12), 5))


def contains_K57(g) -> bool:
    """True iff some 5 vertices are each adjacent to all 7 others."""
    adj = _bitmasks(g)
    full = (1 << 12) - 1
    for S in _FIVE_SETS:
        common = full
        s = S
        while s:
            bit = s & -s
            common &= adj[bit.bit_length() - 1]
            s ^= bit
        rest = full ^ S
        if common & rest == rest:
            return True
    return False


# ---------------------------------------------------------------------------
# brute-force oracle


def brute_force_b(F: Fullerene, limit: int) -> int:
    """Smallest bipartizing edge set found by iterative deepening.

    Branches on the edges of an odd cycle of the current graph; a branch is
    pruned when half the number of odd faces of the current plane graph
    exceeds the remaining budget (each deleted edge merges at most two
    faces).  Raises ``Exceeded`` when no set of size <= ``limit`` works.
    """
    g = F.graph
    face_pair = {}
    for d in range(3 * g.n):
        r = g.rev[d]
        if d < r:
            face_pair[edge_key(d // 3, r // 3)] = (g.face_of_dart[d], g.face_of_dart[r])
    parity = [f.len % 2 for f in g.faces]

    def odd_faces(removed: frozenset[Edge]) -> int:
        parent = list(range(len(parity)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in removed:
            a, b = face_pair[e]
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
        total: dict[int, int] = {}
        for f, p in enumerate(parity):
            r = find(f)
            total[r] = total.get(r, 0) ^ p
        return sum(total.values())

    base = [set(r) for r in g.rot]

    def search(removed: frozenset[Edge], budget: int, seen: set) -> bool:
        if removed in seen:
            return False
        seen.add(removed)
        if odd_faces(removed) > 2 * budget:
            return False
        adj = [set(x) for x in base]
        for u, v in removed:
            adj[u].discard(v)
            adj[v].discard(u)
        verdict = is_bipartite(adj)
        if verdict.bipartite:
            return True
        if budget == 0:
            return False
        cyc = verdict.odd_cycle
        for i in range(len(cyc)):
            e = edge_key(cyc[i], cyc[(i + 1) % len(cyc)])
            if search(removed | {e}, budget - 1, seen):
                return True
        return False

    for size in range(limit + 1):
        if search(frozenset(), size, set()):
            return size
    raise Exceeded(limit)
