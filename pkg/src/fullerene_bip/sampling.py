"""Deterministic and seeded generators of patches inside a fullerene."""

from __future__ import annotations

import random
from typing import Iterator

from .patches import Patch, boundary_cycle
from .planar import Fullerene


def face_neighbors(F: Fullerene, f: int) -> list[int]:
    g = F.graph
    return [g.face_of_dart[g.rev[d]] for d in F.faces[f].darts]


def single_face_patches(F: Fullerene) -> Iterator[Patch]:
    for face in F.faces:
        yield Patch(F, face.vertices, frozenset((face.id,)))


def two_face_patches(F: Fullerene) -> Iterator[Patch]:
    for face in F.faces:
        for h in face_neighbors(F, face.id):
            if face.id < h:
                faces = frozenset((face.id, h))
                yield Patch(F, boundary_cycle(F, faces), faces)


def _ball_layers(F: Fullerene, seeds: set[int]):
    ball = set(seeds)
    frontier = set(seeds)
    while True:
        yield ball
        nxt = set()
        for f in frontier:
            for h in face_neighbors(F, f):
                if h not in ball:
                    nxt.add(h)
        if not nxt:
            return
        ball = ball | nxt
        frontier = nxt


def ball_patches(
    F: Fullerene, max_radius: int | None = None, centers: str = "face,vertex,edge"
) -> Iterator[Patch]:
    """Dual balls around faces, vertices and edges, while they stay discs.

    Balls covering more than half of the faces are skipped.
    """
    g = F.graph
    seeds: list[set[int]] = []
    if "face" in centers:
        seeds += [{f.id} for f in F.faces]
    if "vertex" in centers:
        seeds += [set(g.faces_at_vertex(v)) for v in range(g.n)]
    if "edge" in centers:
        seeds += [set(g.faces_of_edge(u, v)) for u, v in g.edges()]
    limit = len(F.faces) // 2
    for center in seeds:
        for r, ball in enumerate(_ball_layers(F, center)):
            if max_radius is not None and r > max_radius:
                break
            if len(ball) > limit:
                break
            cycle = boundary_cycle(F, ball)
            if cycle is not None:
                yield Patch(F, cycle, frozenset(ball))


def random_patch(F: Fullerene, rng: random.Random, size: int) -> Patch | None:
    """Grow a disc of up to ``size`` faces from a random face."""
    start = rng.randrange(len(F.faces))
    faces = {start}
    frontier = set(face_neighbors(F, start))
    attempts = 0
    while len(faces) < size and frontier and attempts < 4 * size:
        attempts += 1
        f = rng.choice(sorted(frontier))
        trial = faces | {f}
        if boundary_cycle(F, trial) is None:
            frontier.discard(f)
            continue
        faces = trial
        frontier.discard(f)
        frontier.update(h for h in face_neighbors(F, f) if h not in faces)
    cycle = boundary_cycle(F, faces)
    if cycle is None:
        return None
    return Patch(F, cycle, frozenset(faces))
