"""Reader and writer for the ``planar_code`` format of plantri/buckygen.

Per graph: the vertex count, then for every vertex (1-based) its neighbours
in rotation order followed by a 0 terminator.  Graphs with more than 255
vertices are written as a 0 byte followed by little-endian 16-bit words.
"""

from __future__ import annotations

import struct
from pathlib import Path
from typing import Iterable, Sequence

from .errors import BadHeader, TruncatedRecord, VertexIdOutOfRange
from .planar import CubicPlanarGraph, Fullerene, build_graph

HEADER = b">>planar_code<<"


def _rotation_table(g) -> Sequence[Sequence[int]]:
    if isinstance(g, Fullerene):
        g = g.graph
    if isinstance(g, CubicPlanarGraph):
        return g.rot
    return g


def write_planar_code(graphs: Iterable) -> bytes:
    """Serialize graphs (or raw rotation tables); always emits the header."""
    out = bytearray(HEADER)
    for g in graphs:
        rot = _rotation_table(g)
        n = len(rot)
        if n <= 255:
            out.append(n)
            for nbrs in rot:
                out.extend(w + 1 for w in nbrs)
                out.append(0)
        elif n <= 0xFFFF:
            words = [n]
            for nbrs in rot:
                words.extend(w + 1 for w in nbrs)
                words.append(0)
            out.append(0)
            out.extend(struct.pack(f"<{len(words)}H", *words))
        else:
            raise ValueError(f"planar_code cannot store {n} vertices")
    return bytes(out)


def read_rotations(data: bytes) -> list[list[tuple[int, ...]]]:
    """Decode raw 0-based rotation tables without validating them."""
    pos = 0
    if data.startswith(b">>"):
        if not data.startswith(HEADER):
            raise BadHeader(f"unexpected header {data[:15]!r}")
        pos = len(HEADER)
    graphs = []
    size = len(data)
    while pos < size:
        if data[pos] != 0:
            n = data[pos]
            pos += 1
            width = 1
        else:
            if pos + 3 > size:
                raise TruncatedRecord("truncated 16-bit vertex count")
            (n,) = struct.unpack_from("<H", data, pos + 1)
            pos += 3
            width = 2
        if n == 0:
            raise BadHeader("graph with zero vertices")
        rot = []
        for v in range(n):
            nbrs = []
            while True:
                if pos + width > size:
                    raise TruncatedRecord(f"record ends inside vertex {v + 1}")
                if width == 1:
                    x = data[pos]
                else:
                    (x,) = struct.unpack_from("<H", data, pos)
                pos += width
                if x == 0:
                    break
                if x > n:
                    raise VertexIdOutOfRange(f"neighbour {x} of vertex {v + 1} exceeds n={n}")
                nbrs.append(x - 1)
            rot.append(tuple(nbrs))
        graphs.append(rot)
    return graphs


def read_planar_code(data: bytes) -> list[CubicPlanarGraph]:
    return [build_graph(rot) for rot in read_rotations(data)]


def read_file(path: str | Path) -> list[CubicPlanarGraph]:
    return read_planar_code(Path(path).read_bytes())


def write_file(path: str | Path, graphs: Iterable) -> None:
    Path(path).write_bytes(write_planar_code(graphs))
