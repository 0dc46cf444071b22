from __future__ import annotations

import struct

import networkx as nx
import pytest

from conftest import DATA, K4_ROT, to_nx
from fullerene_bip.errors import BadHeader, TruncatedRecord, VertexIdOutOfRange
from fullerene_bip.generators import dodecahedron
from fullerene_bip.planar import validate_fullerene
from fullerene_bip.planar_code import (
    HEADER,
    read_file,
    read_planar_code,
    read_rotations,
    write_file,
    write_planar_code,
)

FIXTURES = sorted(DATA.glob("*.pc"))


def test_fixture_files_exist():
    names = {p.name for p in FIXTURES}
    assert {"dodecahedron.pc", "c60.pc", "leapfrog3.pc", "external_dodecahedron.pc"} <= names


@pytest.mark.parametrize("path", FIXTURES, ids=lambda p: p.name)
def test_round_trip_is_byte_exact(path):
    data = path.read_bytes()
    graphs = read_planar_code(data)
    assert write_planar_code(graphs) == data
    for g in graphs:
        validate_fullerene(g)


def test_k4_bytes_by_hand():
    expected = HEADER + bytes([4, 2, 3, 4, 0, 1, 4, 3, 0, 1, 2, 4, 0, 1, 3, 2, 0])
    assert write_planar_code([K4_ROT]) == expected
    assert read_rotations(expected) == [[tuple(r) for r in K4_ROT]]


def test_header_is_optional_on_read():
    data = write_planar_code([K4_ROT])
    assert read_rotations(data[len(HEADER):]) == read_rotations(data)


def test_empty_payload():
    assert read_planar_code(HEADER) == []
    assert write_planar_code([]) == HEADER


def test_sixteen_bit_records(lf3):
    data = write_planar_code([lf3])
    body = data[len(HEADER):]
    assert body[0] == 0
    (n,) = struct.unpack_from("<H", body, 1)
    assert n == 540
    # first vertex: three neighbours and a terminator, all little-endian words
    first = struct.unpack_from("<4H", body, 3)
    assert [w - 1 for w in first[:3]] == list(lf3.graph.rot[0]) and first[3] == 0
    assert read_planar_code(data)[0].rot == lf3.graph.rot


def test_write_rejects_huge_graphs():
    with pytest.raises(ValueError):
        write_planar_code([[(0, 0, 0)] * 70000])


def test_bad_header():
    with pytest.raises(BadHeader):
        read_rotations(b">>planar_kode<<" + bytes([4]))


def test_truncated():
    data = write_planar_code([K4_ROT])
    with pytest.raises(TruncatedRecord):
        read_rotations(data[:-3])
    with pytest.raises(TruncatedRecord):
        read_rotations(HEADER + b"\x00\x10")


def test_vertex_out_of_range():
    data = bytearray(write_planar_code([K4_ROT]))
    data[len(HEADER) + 1] = 9
    with pytest.raises(VertexIdOutOfRange):
        read_rotations(bytes(data))


def test_external_dodecahedron_is_isomorphic():
    (g,) = read_file(DATA / "external_dodecahedron.pc")
    F = validate_fullerene(g)
    assert F.n == 20
    assert nx.is_isomorphic(to_nx(F), to_nx(dodecahedron()))


def test_file_helpers(tmp_path):
    path = tmp_path / "x.pc"
    write_file(path, [dodecahedron()])
    (g,) = read_file(path)
    assert g.rot == dodecahedron().graph.rot
