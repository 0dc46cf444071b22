"""Patches of a fullerene and the combinatorics of their boundaries.

A patch is a disc of host faces bounded by a single cycle ``o``.  Boundary
vertices are 2-vertices or 3-vertices according to their degree inside the
patch; boundary edges are then 22-, 23- or 33-edges.  The boundary
description encodes a 33-edge as ``A``, a 22-edge as ``B`` and a maximal run
of 23-edges by its length.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Sequence, Union

from .errors import (
    IdentityViolated,
    NotACycle,
    NotTwoConnected,
    SeedOnBoundaryCrossing,
)
from .planar import Edge, Fullerene, edge_key

Token = Union[str, int]


# ---------------------------------------------------------------------------
# construction helpers


def boundary_cycle(F: Fullerene, faces: Iterable[int]) -> tuple[int, ...] | None:
    """Vertices of the boundary of a face set, or None unless it is one simple cycle.

    The cycle starts at its smallest vertex and continues towards the
    smaller of that vertex's two boundary neighbours.
    """
    faces = set(faces)
    if not faces:
        return None
    count: dict[Edge, int] = {}
    for fid in faces:
        for e in F.faces[fid].edges:
            count[e] = count.get(e, 0) + 1
    nbrs: dict[int, list[int]] = {}
    for (u, v), c in count.items():
        if c == 1:
            nbrs.setdefault(u, []).append(v)
            nbrs.setdefault(v, []).append(u)
    if not nbrs:
        return None  # every face present: no boundary on the sphere
    if any(len(x) != 2 for x in nbrs.values()):
        return None
    start = min(nbrs)
    prev, cur = start, min(nbrs[start])
    cycle = [start]
    while cur != start:
        cycle.append(cur)
        a, b = nbrs[cur]
        prev, cur = cur, (b if a == prev else a)
    if len(cycle) != len(nbrs):
        return None
    return tuple(cycle)


def _cycle_edges(cycle: Sequence[int]) -> list[Edge]:
    k = len(cycle)
    return [edge_key(cycle[i], cycle[(i + 1) % k]) for i in range(k)]


def _is_two_connected(adj: dict[int, set[int]]) -> bool:
    """No articulation point and connected (iterative Tarjan)."""
    if len(adj) < 3:
        return False
    root = next(iter(adj))
    disc = {root: 0}
    low = {root: 0}
    root_children = 0
    stack = [(root, None, iter(adj[root]))]
    counter = 1
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if w == parent:
                continue
            if w in disc:
                low[v] = min(low[v], disc[w])
            else:
                disc[w] = low[w] = counter
                counter += 1
                if v == root:
                    root_children += 1
                stack.append((w, v, iter(adj[w])))
                advanced = True
                break
        if not advanced:
            stack.pop()
            if parent is not None:
                low[parent] = min(low[parent], low[v])
                if parent != root and low[v] >= disc[parent]:
                    return False
    return len(disc) == len(adj) and root_children == 1


# ---------------------------------------------------------------------------
# patch


class PatchKind(Enum):
    SLIM_WORM = "SlimWorm"
    FAT_WORM = "FatWorm"
    SHELL = "Shell"
    OTHER = "Other"


@dataclass(frozen=True)
class BoundaryStats:
    length: int
    s: int
    t: int
    s2: int
    p: int


@dataclass(frozen=True, eq=False)
class Patch:
    host: Fullerene
    boundary: tuple[int, ...]
    faces: frozenset[int]

    @cached_property
    def vertices(self) -> frozenset[int]:
        return frozenset(v for f in self.faces for v in self.host.faces[f].vertices)

    @cached_property
    def edges(self) -> frozenset[Edge]:
        return frozenset(e for f in self.faces for e in self.host.faces[f].edges)

    @cached_property
    def boundary_edges(self) -> tuple[Edge, ...]:
        return tuple(_cycle_edges(self.boundary))

    @cached_property
    def boundary_set(self) -> frozenset[int]:
        return frozenset(self.boundary)

    @cached_property
    def interior(self) -> frozenset[int]:
        return self.vertices - self.boundary_set

    @cached_property
    def degree(self) -> dict[int, int]:
        """Degree inside the patch of every boundary vertex (2 or 3)."""
        faces_at = self.host.graph.faces_at_vertex
        inside = self.faces
        return {v: 1 + sum(f in inside for f in faces_at(v)) for v in self.boundary}

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    @cached_property
    def edge_types(self) -> tuple[str, ...]:
        """'22', '23' or '33' for each boundary edge, in boundary order."""
        deg = self.degree
        b = self.boundary
        k = len(b)
        out = []
        for i in range(k):
            x, y = deg[b[i]], deg[b[(i + 1) % k]]
            out.append("22" if x == y == 2 else "33" if x == y == 3 else "23")
        return tuple(out)

    @cached_property
    def p(self) -> int:
        return sum(self.host.faces[f].len == 5 for f in self.faces)

    @property
    def length(self) -> int:
        return len(self.boundary)

    def __repr__(self) -> str:
        return f"Patch(length={self.length}, faces={len(self.faces)}, p={self.p})"


def patch_from_faces(F: Fullerene, faces: Iterable[int]) -> Patch:
    faces = frozenset(faces)
    cycle = boundary_cycle(F, faces)
    if cycle is None:
        raise NotACycle("face set is not bounded by a single cycle")
    return Patch(F, cycle, faces)


def patch_from_cycle(F: Fullerene, cycle: Sequence[int], seed_face: int) -> Patch:
    """Patch bounded by ``cycle`` on the side that contains ``seed_face``."""
    g = F.graph
    cycle = tuple(int(v) for v in cycle)
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        raise NotACycle("a cycle needs at least 3 distinct vertices")
    for u, v in zip(cycle, cycle[1:] + cycle[:1]):
        if not g.has_edge(u, v):
            raise NotACycle(f"({u}, {v}) is not an edge of the host")
    if not 0 <= seed_face < len(F.faces):
        raise SeedOnBoundaryCrossing(f"no face {seed_face}")
    walls = set(_cycle_edges(cycle))
    region = {seed_face}
    stack = [seed_face]
    while stack:
        f = stack.pop()
        for d in F.faces[f].darts:
            u, v = d // 3, g.head(d)
            if edge_key(u, v) in walls:
                continue
            h = g.face_of_dart[g.rev[d]]
            if h not in region:
                region.add(h)
                stack.append(h)
    found = boundary_cycle(F, region)
    if found is None or set(_cycle_edges(found)) != walls:
        raise SeedOnBoundaryCrossing("region grown from the seed is not bounded by the cycle")
    P = Patch(F, cycle, frozenset(region))
    if not _is_two_connected(P.adjacency()):
        raise NotTwoConnected("patch is not 2-connected")
    return P


# ---------------------------------------------------------------------------
# stats and descriptions


def boundary_stats(P: Patch) -> BoundaryStats:
    """Counts of the boundary; raises IdentityViolated if s != 6 - p + t."""
    types = P.edge_types
    k = len(types)
    s = types.count("22")
    t = types.count("33")
    s2 = sum(types[i] == "22" and types[(i + 1) % k] == "22" for i in range(k))
    stats = BoundaryStats(k, s, t, s2, P.p)
    if s != 6 - stats.p + t:
        raise IdentityViolated(f"s={s}, p={stats.p}, t={t}")
    return stats


def _token_key(tok: Token) -> tuple[int, int]:
    if tok == "A":
        return (0, 0)
    if tok == "B":
        return (1, 0)
    return (2, int(tok))


def canonical_tokens(tokens: Sequence[Token]) -> tuple[Token, ...]:
    """Lexicographically smallest rotation or reflection, with A < B < integers."""
    tokens = list(tokens)
    if not tokens:
        return ()
    best = None
    best_key = None
    for seq in (tokens, tokens[::-1]):
        for i in range(len(seq)):
            rot = seq[i:] + seq[:i]
            key = [_token_key(t) for t in rot]
            if best_key is None or key < best_key:
                best, best_key = rot, key
    return tuple(best)


@dataclass(frozen=True)
class BoundaryDescription:
    tokens: tuple[Token, ...]

    def __str__(self) -> str:
        return "".join(str(t) for t in self.tokens)

    @classmethod
    def parse(cls, text: str) -> "BoundaryDescription":
        if not re.fullmatch(r"(?:A|B|[1-9][0-9]*)+", text):
            raise ValueError(f"bad description {text!r}")
        toks: list[Token] = [int(x) if x.isdigit() else x for x in re.findall(r"A|B|\d+", text)]
        return cls.from_tokens(toks)

    @classmethod
    def from_tokens(cls, tokens: Sequence[Token]) -> "BoundaryDescription":
        return cls(canonical_tokens(tokens))

    @property
    def s(self) -> int:
        return self.tokens.count("B")

    @property
    def t(self) -> int:
        return self.tokens.count("A")

    @property
    def length(self) -> int:
        return sum(x if isinstance(x, int) else 1 for x in self.tokens)


def raw_tokens(edge_types: Sequence[str]) -> list[Token]:
    k = len(edge_types)
    if all(x == "23" for x in edge_types):
        return [k]
    # start right after a letter edge so no run of 23-edges wraps around
    start = next(i for i in range(k) if edge_types[i - 1] != "23")
    tokens: list[Token] = []
    run = 0
    for j in range(k):
        x = edge_types[(start + j) % k]
        if x == "23":
            run += 1
            continue
        if run:
            tokens.append(run)
            run = 0
        tokens.append("A" if x == "33" else "B")
    if run:
        tokens.append(run)
    return tokens


def describe_boundary(P: Patch) -> BoundaryDescription:
    return BoundaryDescription.from_tokens(raw_tokens(P.edge_types))


# ---------------------------------------------------------------------------
# chords and splits


@dataclass(frozen=True)
class Chord:
    path: tuple[int, ...]
    splits_off_face: bool = False

    @property
    def length(self) -> int:
        return len(self.path) - 1

    @property
    def ends(self) -> tuple[int, int]:
        return self.path[0], self.path[-1]

    def edges(self) -> list[Edge]:
        return [edge_key(a, b) for a, b in zip(self.path, self.path[1:])]


def _chord_paths(P: Patch, max_len: int) -> list[tuple[int, ...]]:
    g = P.host.graph
    on_o = P.boundary_set
    o_edges = set(P.boundary_edges)
    inner = P.interior
    found = set()
    for b0 in P.boundary:
        if P.degree[b0] != 3:
            continue
        x = next(w for w in g.rot[b0] if edge_key(b0, w) not in o_edges)
        if x in on_o:
            found.add(min((b0, x), (x, b0)))
            continue
        if x not in inner:  # pragma: no cover - 3-vertex edges lie inside
            continue
        stack = [(b0, x)]
        while stack:
            path = stack.pop()
            if len(path) - 1 >= max_len:
                continue
            last = path[-1]
            for w in g.rot[last]:
                if w in path:
                    continue
                if w in on_o:
                    q = path + (w,)
                    found.add(min(q, q[::-1]))
                elif w in inner:
                    stack.append(path + (w,))
    return sorted(found, key=lambda q: (len(q), q))


def split_patch(P: Patch, chord: Chord | Sequence[int]) -> tuple[Patch, Patch]:
    """The two patches into which a chord cuts ``P``."""
    path = chord.path if isinstance(chord, Chord) else tuple(chord)
    g = P.host.graph
    walls = {edge_key(a, b) for a, b in zip(path, path[1:])}
    remaining = set(P.faces)
    sides = []
    while remaining:
        seed = min(remaining)
        region = {seed}
        stack = [seed]
        while stack:
            f = stack.pop()
            for d in P.host.faces[f].darts:
                if edge_key(d // 3, g.head(d)) in walls:
                    continue
                h = g.face_of_dart[g.rev[d]]
                if h in remaining and h not in region:
                    region.add(h)
                    stack.append(h)
        remaining -= region
        sides.append(region)
    if len(sides) != 2:
        raise NotACycle(f"chord {path} splits the patch into {len(sides)} parts")
    return patch_from_faces(P.host, sides[0]), patch_from_faces(P.host, sides[1])


@dataclass(frozen=True)
class ChordSide:
    arc: tuple[int, ...]
    t: int
    single_face: bool


def chord_sides(P: Patch, chord: Chord | Sequence[int]) -> tuple[ChordSide, ChordSide]:
    """Boundary arc, 33-edge count and single-face flag of both sides of a chord.

    Computed locally from the rotation system; agrees with ``split_patch``
    without flooding the faces.  The first side is the one holding the face
    of the dart ``path[0] -> path[1]``.
    """
    path = chord.path if isinstance(chord, Chord) else tuple(chord)
    g = P.host.graph
    b = P.boundary
    k = len(b)
    pos = {v: i for i, v in enumerate(b)}
    q0, ql = path[0], path[-1]
    i, j = pos[q0], pos[ql]
    r0 = g.rot[q0]
    y = r0[(r0.index(path[1]) - 1) % 3]
    forward = [b[(i + s) % k] for s in range((j - i) % k + 1)]
    backward = [b[(i - s) % k] for s in range((i - j) % k + 1)]
    arcs = (forward, backward) if forward[1] == y else (backward, forward)

    # inner chord vertex degree on the first side
    inner_deg = {}
    for a, v, c in zip(path, path[1:], path[2:]):
        rv = g.rot[v]
        turns_onto_chord = rv[(rv.index(a) + 1) % 3] == c
        inner_deg[v] = 2 if turns_onto_chord else 3

    deg = P.degree
    faces = (
        P.host.faces[g.face_of_dart[g.dart(q0, path[1])]],
        P.host.faces[g.face_of_dart[g.dart(path[1], q0)]],
    )
    sides = []
    for side, arc in enumerate(arcs):
        dside = {v: (d if side == 0 else 5 - d) for v, d in inner_deg.items()}
        dside.update({v: deg[v] for v in arc[1:-1]})
        dside[q0] = dside[ql] = 2
        cycle = arc + list(path[-2:0:-1])
        t = sum(
            dside[cycle[m]] == 3 and dside[cycle[(m + 1) % len(cycle)]] == 3
            for m in range(len(cycle))
        )
        single = set(faces[side].vertices) == set(cycle)
        sides.append(ChordSide(tuple(arc), t, single))
    return sides[0], sides[1]


def find_chords(P: Patch, max_len: int = 4) -> list[Chord]:
    """Every l-chord of the boundary with l <= max_len, up to reversal."""
    chords = []
    for q in _chord_paths(P, max_len):
        a, b = chord_sides(P, q)
        chords.append(Chord(q, a.single_face or b.single_face))
    return chords


def incident_33_edges(P: Patch, chord: Chord) -> int:
    ends = set(chord.ends)
    return sum(
        1
        for e, kind in zip(P.boundary_edges, P.edge_types)
        if kind == "33" and (e[0] in ends or e[1] in ends)
    )


# ---------------------------------------------------------------------------
# simplifying cuts


@dataclass(frozen=True)
class ShortChord:
    chord: Chord
    t_sides: tuple[int, int]
    t: int


@dataclass(frozen=True)
class Paired4Chords:
    q1: tuple[int, ...]
    q2: tuple[int, ...]

    @property
    def rungs(self) -> tuple[Edge, Edge, Edge]:
        return tuple(edge_key(self.q1[i], self.q2[i]) for i in (0, 2, 4))  # type: ignore[return-value]


SimplifyingCut = Union[ShortChord, Paired4Chords]


def _t(P: Patch) -> int:
    return P.edge_types.count("33")


def iter_simplifying_cuts(P: Patch, chords: Sequence[Chord] | None = None):
    """Yield every short-chord witness, then every paired 4-chord witness."""
    if chords is None:
        chords = [Chord(q) for q in _chord_paths(P, 4)]
    t = _t(P)
    for c in chords:
        if c.length <= 3:
            a, b = chord_sides(P, c)
            t1, t2 = a.t, b.t
            if t1 + t2 < t:
                yield ShortChord(c, (t1, t2), t)
    yield from _paired_4_chords(P, [c.path for c in chords if c.length == 4])


def _paired_4_chords(P: Patch, fours: Sequence[tuple[int, ...]]):
    by_middle: dict[int, list[tuple[int, ...]]] = {}
    oriented = []
    for q in fours:
        for r in (q, q[::-1]):
            oriented.append(r)
            by_middle.setdefault(r[2], []).append(r)
    edges = P.edges
    seen = set()
    g = P.host.graph
    for q1 in oriented:
        for w2 in g.rot[q1[2]]:
            for q2 in by_middle.get(w2, ()):
                if set(q1) & set(q2):
                    continue
                if edge_key(q1[0], q2[0]) in edges and edge_key(q1[4], q2[4]) in edges:
                    key = frozenset((q1, q2)) | frozenset((q1[::-1], q2[::-1]))
                    if key in seen:
                        continue
                    seen.add(key)
                    yield Paired4Chords(q1, q2)


def find_simplifying_cut(P: Patch, kind: type | None = None) -> SimplifyingCut | None:
    """First simplifying cut (optionally of the given witness class), or None."""
    cuts = iter_simplifying_cuts(P)
    if kind is not None:
        cuts = (c for c in cuts if isinstance(c, kind))
    return next(cuts, None)


# ---------------------------------------------------------------------------
# classification


def _is_fat_worm(P: Patch) -> bool:
    inner = P.interior
    if not inner:
        return False
    g = P.host.graph
    nbrs = {v: [w for w in g.rot[v] if w in inner] for v in inner}
    if len(inner) == 1:
        return True
    if any(len(x) > 2 or not x for x in nbrs.values()):
        return False
    ends = [v for v, x in nbrs.items() if len(x) == 1]
    if len(ends) != 2:
        return False
    path = [min(ends)]
    while len(path) < len(inner):
        nxt = [w for w in nbrs[path[-1]] if w not in path[-2:]]
        if not nxt:
            return False
        path.append(nxt[0])
    if path[-1] != max(ends) or len(set(path)) != len(inner):
        return False
    # legs of consecutive inner path vertices must not share a face
    faces = [P.host.faces[f] for f in P.faces]
    path_edges = set(edge_key(a, b) for a, b in zip(path, path[1:]))

    def leg(v: int) -> Edge:
        return next(edge_key(v, w) for w in g.rot[v] if edge_key(v, w) not in path_edges)

    for u, v in zip(path[1:-1], path[2:-1]):
        eu, ev = leg(u), leg(v)
        for face in faces:
            fe = face.edges
            if eu in fe and ev in fe:
                return False
    return True


def classify_patch(P: Patch) -> PatchKind:
    if P.p != 0:
        return PatchKind.OTHER
    if not P.interior and _t(P) == 0:
        return PatchKind.SLIM_WORM
    if _is_fat_worm(P):
        return PatchKind.FAT_WORM
    if len(P.interior) == 4 and str(describe_boundary(P)) == "BB4BB4BB4":
        return PatchKind.SHELL
    return PatchKind.OTHER


def pentagon_touches_boundary(P: Patch) -> bool:
    g = P.host.graph
    for u, v in P.boundary_edges:
        a, b = g.faces_of_edge(u, v)
        f = a if a in P.faces else b
        if P.host.faces[f].len == 5:
            return True
    return False


def is_normal(P: Patch) -> bool:
    if pentagon_touches_boundary(P):
        return False
    if classify_patch(P) is not PatchKind.OTHER:
        return False
    return find_simplifying_cut(P) is None
