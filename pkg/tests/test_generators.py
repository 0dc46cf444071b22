from __future__ import annotations

import networkx as nx
import pytest

from conftest import to_nx
from fullerene_bip.generators import (
    DODECAHEDRON_ROT,
    HEXAGONAL_BARREL_ROT,
    FamilySpec,
    dodecahedron,
    hexagonal_barrel,
    leapfrog,
    leapfrog_iterate,
    nanotube,
    zigzag_rotations,
)
from fullerene_bip.planar import build_dual, build_graph
from fullerene_bip.planar_code import write_planar_code


def test_dodecahedron_matches_networkx(c20):
    assert c20.n == 20 and len(c20.hexagons) == 0
    assert nx.is_isomorphic(to_nx(c20), nx.dodecahedral_graph())


def test_literal_tables_match_construction():
    assert [tuple(r) for r in zigzag_rotations(5, 0)] == list(DODECAHEDRON_ROT)
    assert [tuple(r) for r in zigzag_rotations(6, 0)] == list(HEXAGONAL_BARREL_ROT)


def test_barrel(c24):
    assert c24.n == 24 and len(c24.hexagons) == 2
    # the two hexagons are the caps, far apart
    a, b = c24.hexagons
    assert not set(c24.faces[a].vertices) & set(c24.faces[b].vertices)


@pytest.mark.parametrize("k", [0, 1, 2, 5, 10, 37])
def test_nanotube_sizes(k):
    F = nanotube(k)
    assert F.n == 20 + 10 * k
    assert len(F.hexagons) == 5 * k


def test_nanotube_zero_is_dodecahedron():
    assert nanotube(0).graph.rot == dodecahedron().graph.rot


def test_nanotube_caps_hold_all_pentagons():
    # pentagons adjacent to pentagons only near the ends: 6 at each cap
    F = nanotube(6)
    D = build_dual(F)
    pent = set(F.pentagons)
    clusters = nx.connected_components(nx.Graph((a, b) for a, b, _ in D.edges if a in pent and b in pent))
    assert sorted(len(c) for c in clusters) == [6, 6]


@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_leapfrog_triples_vertices(m):
    F = leapfrog_iterate(m)
    assert F.n == 20 * 3**m
    assert len(F.hexagons) == F.n // 2 - 10


def test_c60_is_isolated_pentagon_fullerene(c60):
    D = build_dual(c60)
    pent = set(c60.pentagons)
    assert not any(a in pent and b in pent for a, b, _ in D.edges)
    assert len(c60.hexagons) == 20
    # C60 has the truncated icosahedron's 60 symmetries x 2 = 120 automorphisms
    G = to_nx(c60)
    matcher = nx.algorithms.isomorphism.GraphMatcher(G, G)
    assert sum(1 for _ in matcher.isomorphisms_iter()) == 120


def test_leapfrog_of_barrel():
    F = leapfrog(hexagonal_barrel())
    assert F.n == 72 and len(F.pentagons) == 12


def test_leapfrog_accepts_plain_graph():
    g = build_graph(DODECAHEDRON_ROT)
    assert leapfrog(g).n == 60


def test_generation_is_deterministic():
    a = write_planar_code([leapfrog_iterate(2), nanotube(4)])
    b = write_planar_code([leapfrog_iterate(2), nanotube(4)])
    assert a == b


@pytest.mark.parametrize(
    "family, param",
    [("nanotube", -1), ("octahedron", 0), ("dodecahedron", 3), ("hexagonal_barrel", 1)],
)
def test_family_spec_rejects(family, param):
    with pytest.raises(ValueError):
        FamilySpec(family, param)


def test_family_spec_builds():
    assert FamilySpec("nanotube", 3).build().n == 50
    assert FamilySpec("leapfrog_iterate", 1).build().n == 60
    assert FamilySpec("hexagonal_barrel").build().n == 24
    assert FamilySpec("dodecahedron").build().n == 20
