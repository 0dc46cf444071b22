"""Peeling the outer layer of faces off a normal patch."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import LayerLemmaViolated, NegativeRunLength, NotNormal, PreconditionP6
from .patches import (
    BoundaryDescription,
    BoundaryStats,
    Patch,
    Token,
    boundary_cycle,
    boundary_stats,
    is_normal,
)
from .planar import edge_key


@dataclass(frozen=True)
class LayerReport:
    outer: BoundaryStats
    inner: BoundaryStats
    removed_faces: int
    s_set: tuple[int, ...]


def peel(P: Patch, *, check_normal: bool = True) -> tuple[Patch, LayerReport]:
    """Remove the faces sharing an edge with the boundary.

    The new boundary is the outer layer subgraph minus the old boundary
    vertices and minus the interior vertices with two or more boundary
    neighbours.  Every counting identity of the layer step is re-checked and
    ``LayerLemmaViolated`` is raised on any mismatch.
    """
    if check_normal and not is_normal(P):
        raise NotNormal("peel requires a normal patch")
    F = P.host
    g = F.graph
    o_edges = set(P.boundary_edges)
    on_o = P.boundary_set

    layer = set()
    for u, v in o_edges:
        a, b = g.faces_of_edge(u, v)
        layer.add(a if a in P.faces else b)

    s_set = {
        v for v in P.interior if sum(w in on_o for w in g.rot[v]) >= 2
    }
    removed = on_o | s_set
    layer_edges = {e for f in layer for e in F.faces[f].edges}
    nbrs: dict[int, list[int]] = {}
    for u, v in layer_edges:
        if u in removed or v in removed:
            continue
        nbrs.setdefault(u, []).append(v)
        nbrs.setdefault(v, []).append(u)
    if len(nbrs) < 3 or any(len(x) != 2 for x in nbrs.values()):
        raise LayerLemmaViolated("new boundary is not 2-regular")

    inner_faces = P.faces - layer
    cycle = boundary_cycle(F, inner_faces)
    if cycle is None:
        raise LayerLemmaViolated("remaining faces are not bounded by a single cycle")
    cycle_edges = {edge_key(cycle[i], cycle[i - 1]) for i in range(len(cycle))}
    new_edges = {edge_key(u, v) for u, x in nbrs.items() for v in x}
    if cycle_edges != new_edges:
        raise LayerLemmaViolated("new boundary differs from the boundary of the inner faces")

    inner = Patch(F, cycle, frozenset(inner_faces))
    before = boundary_stats(P)
    after = boundary_stats(inner)
    if after.t != before.t or after.s != before.s:
        raise LayerLemmaViolated(f"t/s changed: {before} -> {after}")
    if after.s2 < before.s2:
        raise LayerLemmaViolated(f"s2 decreased: {before} -> {after}")
    if after.length != before.length + 2 * before.p - 12 - 2 * before.s2:
        raise LayerLemmaViolated(f"length formula fails: {before} -> {after}")
    return inner, LayerReport(before, after, len(layer), tuple(sorted(s_set)))


def rewrite_description(D: BoundaryDescription | Sequence[Token]) -> BoundaryDescription:
    """Predict the description of the peeled boundary syntactically.

    Insert 0 between adjacent letters; every ``n1 B 0 B n2`` lowers n1 and n2
    by 3; every other B lowers both neighbouring integers by 1; every A
    raises them by 1; zeros are dropped.  Adjustments accumulate.
    """
    tokens = list(D.tokens if isinstance(D, BoundaryDescription) else D)
    if not any(isinstance(x, str) for x in tokens):
        return BoundaryDescription.from_tokens(tokens)
    seq: list[Token] = []
    k = len(tokens)
    for i, tok in enumerate(tokens):
        seq.append(tok)
        if isinstance(tok, str) and isinstance(tokens[(i + 1) % k], str):
            seq.append(0)
    k = len(seq)
    delta = [0] * k
    paired = set()
    for i in range(k):
        if seq[i] == "B" and seq[(i + 1) % k] == 0 and seq[(i + 2) % k] == "B":
            left, right = (i - 1) % k, (i + 3) % k
            if isinstance(seq[left], int) and isinstance(seq[right], int):
                paired.update((i, (i + 2) % k))
                delta[left] -= 3
                delta[right] -= 3
    for i, tok in enumerate(seq):
        if tok == "B" and i not in paired:
            delta[(i - 1) % k] -= 1
            delta[(i + 1) % k] -= 1
        elif tok == "A":
            delta[(i - 1) % k] += 1
            delta[(i + 1) % k] += 1
    out: list[Token] = []
    for tok, dt in zip(seq, delta):
        if isinstance(tok, str):
            out.append(tok)
            continue
        value = tok + dt
        if value < 0:
            raise NegativeRunLength(f"run {tok} adjusted by {dt}")
        if value:
            out.append(value)
    return BoundaryDescription.from_tokens(out)


@dataclass(frozen=True)
class PeelingSequence:
    patches: tuple[Patch, ...]
    stats: tuple[BoundaryStats, ...]

    @property
    def cycles(self) -> tuple[tuple[int, ...], ...]:
        return tuple(P.boundary for P in self.patches)

    @property
    def k(self) -> int:
        return len(self.patches)

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(s.length for s in self.stats)


def uninterrupted_peeling(P: Patch) -> PeelingSequence:
    patches = [P]
    while is_normal(patches[-1]):
        inner, _ = peel(patches[-1], check_normal=False)
        patches.append(inner)
    return PeelingSequence(tuple(patches), tuple(boundary_stats(x) for x in patches))


def vertices_outside(seq: PeelingSequence) -> int:
    return len(seq.patches[0].vertices - seq.patches[-1].vertices)


def check_peeling_volume(P: Patch, seq: PeelingSequence) -> bool:
    """At least 4k^2/9 vertices lie strictly outside the last cycle.

    A sequence of a single cycle has no peeled layer and passes vacuously.
    """
    if P.p == 6:
        raise PreconditionP6("volume bound needs p != 6")
    if seq.k == 1:
        return True
    return 9 * vertices_outside(seq) >= 4 * seq.k ** 2
