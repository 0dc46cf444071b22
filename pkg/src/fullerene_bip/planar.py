"""Embedded cubic planar graphs given as rotation systems.

A graph is stored as ``rot``: for every vertex an ordered triple of its
neighbours, listed in the cyclic order of its edges around the vertex.
Darts are numbered ``3 * v + i`` and point from ``v`` to ``rot[v][i]``.

Faces are traced with one fixed convention: after walking the dart
``(u, v)`` the walk continues along ``(v, w)`` where ``w`` is the
neighbour that follows ``u`` in the rotation of ``v``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    AsymmetricAdjacency,
    BadFaceLength,
    Disconnected,
    EdgeNotPresent,
    LoopOrMultiEdge,
    NonCubic,
    NonPlanar,
    WrongPentagonCount,
)

Edge = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Face:
    id: int
    darts: tuple[int, ...]
    vertices: tuple[int, ...]

    @property
    def len(self) -> int:
        return len(self.darts)

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        vs = self.vertices
        k = len(vs)
        return tuple(edge_key(vs[i], vs[(i + 1) % k]) for i in range(k))


@dataclass(frozen=True, eq=False)
class CubicPlanarGraph:
    """Validated cubic plane graph. Build with :func:`build_graph`."""

    n: int
    rot: tuple[tuple[int, int, int], ...]
    # derived dart tables, filled in by build_graph
    rev: tuple[int, ...] = field(repr=False)
    face_of_dart: tuple[int, ...] = field(repr=False)
    faces: tuple[Face, ...] = field(repr=False)

    @property
    def m(self) -> int:
        return 3 * self.n // 2

    @property
    def f(self) -> int:
        return len(self.faces)

    def head(self, dart: int) -> int:
        return self.rot[dart // 3][dart % 3]

    def tail(self, dart: int) -> int:
        return dart // 3

    def next_dart(self, dart: int) -> int:
        r = self.rev[dart]
        return 3 * (r // 3) + (r % 3 + 1) % 3

    def dart(self, u: int, v: int) -> int:
        try:
            return 3 * u + self.rot[u].index(v)
        except ValueError:
            raise EdgeNotPresent(f"({u}, {v}) is not an edge") from None

    def neighbors(self, v: int) -> tuple[int, int, int]:
        return self.rot[v]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.rot[u]

    def edges(self) -> list[Edge]:
        return [(u, w) for u in range(self.n) for w in self.rot[u] if u < w]

    def adjacency(self) -> list[list[int]]:
        return [list(r) for r in self.rot]

    def faces_of_edge(self, u: int, v: int) -> tuple[int, int]:
        d = self.dart(u, v)
        return self.face_of_dart[d], self.face_of_dart[self.rev[d]]

    def faces_at_vertex(self, v: int) -> tuple[int, int, int]:
        fd = self.face_of_dart
        return fd[3 * v], fd[3 * v + 1], fd[3 * v + 2]


def build_graph(rotations: Sequence[Sequence[int]]) -> CubicPlanarGraph:
    """Validate a rotation table and trace its faces.

    Raises one of ``NonCubic``, ``LoopOrMultiEdge``, ``AsymmetricAdjacency``,
    ``Disconnected`` or ``NonPlanar`` when the table does not describe a
    connected cubic simple plane graph.
    """
    n = len(rotations)
    if n < 4:
        raise NonCubic(f"a cubic graph needs at least 4 vertices, got {n}")
    rot: list[tuple[int, int, int]] = []
    for v, r in enumerate(rotations):
        r = tuple(int(x) for x in r)
        if len(r) != 3:
            raise NonCubic(f"vertex {v} has {len(r)} neighbours")
        for x in r:
            if not 0 <= x < n:
                raise AsymmetricAdjacency(f"vertex {v} lists invalid id {x}")
        if v in r:
            raise LoopOrMultiEdge(f"loop at vertex {v}")
        if len(set(r)) != 3:
            raise LoopOrMultiEdge(f"parallel edges at vertex {v}")
        rot.append(r)  # type: ignore[arg-type]

    rev = [0] * (3 * n)
    for v in range(n):
        for i, w in enumerate(rot[v]):
            rw = rot[w]
            if v not in rw:
                raise AsymmetricAdjacency(f"{v} lists {w} but {w} omits {v}")
            rev[3 * v + i] = 3 * w + rw.index(v)

    _check_connected(rot)

    face_of = [-1] * (3 * n)
    faces: list[Face] = []
    for start in range(3 * n):
        if face_of[start] >= 0:
            continue
        fid = len(faces)
        darts = []
        d = start
        while face_of[d] < 0:
            face_of[d] = fid
            darts.append(d)
            r = rev[d]
            d = 3 * (r // 3) + (r % 3 + 1) % 3
        if d != start:  # pragma: no cover - next_dart is a permutation
            raise NonPlanar("face tracing did not close")
        faces.append(Face(fid, tuple(darts), tuple(x // 3 for x in darts)))

    m = 3 * n // 2
    if n - m + len(faces) != 2:
        raise NonPlanar(
            f"Euler check failed: n - m + f = {n} - {m} + {len(faces)} != 2"
        )
    for face in faces:
        if len(set(face.vertices)) != face.len:
            raise NonPlanar(f"face {face.id} revisits a vertex")
    return CubicPlanarGraph(n, tuple(rot), tuple(rev), tuple(face_of), tuple(faces))


def _check_connected(rot: Sequence[Sequence[int]]) -> None:
    n = len(rot)
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        v = stack.pop()
        for w in rot[v]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    if count != n:
        raise Disconnected(f"only {count} of {n} vertices reachable from 0")


def trace_faces(g: CubicPlanarGraph) -> list[Face]:
    return list(g.faces)


@dataclass(frozen=True, eq=False)
class Fullerene:
    graph: CubicPlanarGraph
    pentagons: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def faces(self) -> tuple[Face, ...]:
        return self.graph.faces

    @property
    def hexagons(self) -> tuple[int, ...]:
        return tuple(f.id for f in self.graph.faces if f.len == 6)

    def face(self, fid: int) -> Face:
        return self.graph.faces[fid]


def validate_fullerene(g: CubicPlanarGraph) -> Fullerene:
    """Check that every face is a pentagon or hexagon (twelve pentagons)."""
    pentagons = []
    for face in g.faces:
        if face.len == 5:
            pentagons.append(face.id)
        elif face.len != 6:
            raise BadFaceLength(f"face {face.id} has length {face.len}")
    if len(pentagons) != 12:
        raise WrongPentagonCount(f"{len(pentagons)} pentagons")
    return Fullerene(g, tuple(pentagons))


@dataclass(frozen=True, eq=False)
class DualGraph:
    """Face adjacency graph; each dual edge records the primal edge it crosses."""

    nodes: int
    adj: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int, Edge], ...]
    cross: dict[Edge, Edge] = field(repr=False)

    def degree(self, f: int) -> int:
        return len(self.adj[f])

    def crossing(self, f: int, g: int) -> Edge:
        """Primal edge crossed by the dual edge f-g (fullerene faces share at most one)."""
        return self.cross[edge_key(f, g)]


def build_dual(F: Fullerene | CubicPlanarGraph) -> DualGraph:
    g = F.graph if isinstance(F, Fullerene) else F
    adj: list[list[int]] = [[] for _ in g.faces]
    edges = []
    fd = g.face_of_dart
    for d in range(3 * g.n):
        r = g.rev[d]
        if d < r:
            a, b = fd[d], fd[r]
            adj[a].append(b)
            adj[b].append(a)
            edges.append((a, b, edge_key(d // 3, r // 3)))
    cross = {edge_key(a, b): e for a, b, e in edges}
    return DualGraph(len(g.faces), tuple(tuple(x) for x in adj), tuple(edges), cross)


@dataclass(frozen=True)
class BipartiteVerdict:
    bipartite: bool
    coloring: tuple[int, ...] | None = None
    odd_cycle: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.bipartite


def _as_adjacency(g) -> Sequence[Sequence[int]]:
    if isinstance(g, Fullerene):
        g = g.graph
    if isinstance(g, CubicPlanarGraph):
        return g.rot
    return g


def is_bipartite(g) -> BipartiteVerdict:
    """2-colour ``g`` by BFS, or return an odd cycle as a witness.

    ``g`` is an adjacency list (possibly disconnected) or a planar graph.
    """
    adj = _as_adjacency(g)
    n = len(adj)
    color = [-1] * n
    parent = [-1] * n
    for root in range(n):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    parent[w] = v
                    queue.append(w)
                elif color[w] == color[v]:
                    return BipartiteVerdict(False, odd_cycle=_odd_cycle(parent, v, w))
    return BipartiteVerdict(True, coloring=tuple(color))


def _odd_cycle(parent: list[int], v: int, w: int) -> tuple[int, ...]:
    # v and w are adjacent with equal BFS depth parity; join their tree paths
    path_v = [v]
    while parent[path_v[-1]] >= 0:
        path_v.append(parent[path_v[-1]])
    index_v = {x: i for i, x in enumerate(path_v)}
    path_w = [w]
    while path_w[-1] not in index_v:
        path_w.append(parent[path_w[-1]])
    lca = path_w[-1]
    return tuple(path_v[: index_v[lca] + 1] + path_w[-2::-1])


def remove_edges(g, S: Iterable[Edge]) -> list[list[int]]:
    """Adjacency lists of ``g`` without the edges in ``S`` (embedding dropped)."""
    adj = [set(x) for x in _as_adjacency(g)]
    for u, v in S:
        if not (0 <= u < len(adj)) or v not in adj[u]:
            raise EdgeNotPresent(f"({u}, {v}) is not an edge")
        adj[u].discard(v)
        adj[v].discard(u)
    return [sorted(x) for x in adj]
