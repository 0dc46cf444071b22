from __future__ import annotations

from pathlib import Path

import networkx as nx
import pytest

from fullerene_bip.generators import dodecahedron, hexagonal_barrel, leapfrog_iterate, nanotube
from fullerene_bip.patches import Patch, boundary_cycle
from fullerene_bip.planar import Fullerene

DATA = Path(__file__).parent / "data"

K4_ROT = [(1, 2, 3), (0, 3, 2), (0, 1, 3), (0, 2, 1)]


def to_nx(g) -> nx.Graph:
    if isinstance(g, Fullerene):
        g = g.graph
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def faces_patch(F: Fullerene, faces) -> Patch:
    faces = frozenset(faces)
    return Patch(F, boundary_cycle(F, faces), faces)


def flower(F: Fullerene, hexagon: int) -> Patch:
    g = F.graph
    ring = {g.face_of_dart[g.rev[d]] for d in F.faces[hexagon].darts}
    return faces_patch(F, ring | {hexagon})


def isolated_hexagon(F: Fullerene) -> int:
    """A hexagon whose neighbours are all hexagons."""
    g = F.graph
    for f in F.hexagons:
        if all(F.faces[g.face_of_dart[g.rev[d]]].len == 6 for d in F.faces[f].darts):
            return f
    raise LookupError("no hexagon surrounded by hexagons")


@pytest.fixture(scope="session")
def c20():
    return dodecahedron()


@pytest.fixture(scope="session")
def c24():
    return hexagonal_barrel()


@pytest.fixture(scope="session")
def c60():
    return leapfrog_iterate(1)


@pytest.fixture(scope="session")
def lf2():
    return leapfrog_iterate(2)


@pytest.fixture(scope="session")
def lf3():
    return leapfrog_iterate(3)


@pytest.fixture(scope="session")
def tube1():
    return nanotube(1)


@pytest.fixture(scope="session")
def fixtures_small(c20, c24, tube1, c60):
    return {"c20": c20, "c24": c24, "nanotube1": tube1, "c60": c60}
