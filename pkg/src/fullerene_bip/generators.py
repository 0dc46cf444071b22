"""Deterministic fullerene families.

``nanotube(k)`` is the (5,0) tube: a pentagon cap, ``k + 1`` zig-zag
rings of ten vertices and a second pentagon cap.  The same layered
construction with hexagonal caps gives the 24-vertex barrel.
``leapfrog`` is a pure rotation-system transform whose vertices are the
darts of its input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .planar import CubicPlanarGraph, Fullerene, build_graph, validate_fullerene

FAMILIES = ("dodecahedron", "nanotube", "leapfrog_iterate", "hexagonal_barrel")

# rotation table of nanotube(0); the pentagon 0-1-2-3-4 is one cap
DODECAHEDRON_ROT = (
    (5, 1, 4), (7, 2, 0), (9, 3, 1), (11, 4, 2), (13, 0, 3),
    (6, 0, 14), (15, 7, 5), (8, 1, 6), (16, 9, 7), (10, 2, 8),
    (17, 11, 9), (12, 3, 10), (18, 13, 11), (14, 4, 12), (19, 5, 13),
    (16, 6, 19), (17, 8, 15), (18, 10, 16), (19, 12, 17), (15, 14, 18),
)

HEXAGONAL_BARREL_ROT = (
    (6, 1, 5), (8, 2, 0), (10, 3, 1), (12, 4, 2), (14, 5, 3), (16, 0, 4),
    (7, 0, 17), (18, 8, 6), (9, 1, 7), (19, 10, 8), (11, 2, 9), (20, 12, 10),
    (13, 3, 11), (21, 14, 12), (15, 4, 13), (22, 16, 14), (17, 5, 15), (23, 6, 16),
    (19, 7, 23), (20, 9, 18), (21, 11, 19), (22, 13, 20), (23, 15, 21), (18, 17, 22),
)


@dataclass(frozen=True)
class FamilySpec:
    family: str
    param: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.param < 0:
            raise ValueError("param must be non-negative")
        if self.family in ("dodecahedron", "hexagonal_barrel") and self.param != 0:
            raise ValueError(f"{self.family} takes no parameter")

    def build(self) -> Fullerene:
        if self.family == "dodecahedron":
            return dodecahedron()
        if self.family == "hexagonal_barrel":
            return hexagonal_barrel()
        if self.family == "nanotube":
            return nanotube(self.param)
        return leapfrog_iterate(self.param)


def zigzag_rotations(m: int, rings: int) -> list[tuple[int, int, int]]:
    """Rotation table of two m-gon caps joined by ``rings + 1`` zig-zag 2m-cycles.

    Vertex layout: cap ``0..m-1``, ring j at ``m + 2m*j + x`` and the far cap
    after the last ring.  Ring vertex x of ring j has its third edge pointing
    to ring j-1 (or the first cap) when ``x % 2 == j % 2``, otherwise to ring
    j+1 (or the far cap).
    """
    size = 2 * m

    def ring(j: int, x: int) -> int:
        return m + size * j + x % size

    far = m + size * (rings + 1)
    rot: list[tuple[int, int, int]] = []
    for i in range(m):
        rot.append((ring(0, 2 * i), (i + 1) % m, (i - 1) % m))
    for j in range(rings + 1):
        for x in range(size):
            nxt, prv = ring(j, x + 1), ring(j, x - 1)
            if x % 2 == j % 2:
                inward = (x // 2) if j == 0 else ring(j - 1, x)
                rot.append((nxt, inward, prv))
            else:
                outward = far + x // 2 if j == rings else ring(j + 1, x)
                rot.append((outward, nxt, prv))
    parity = (rings + 1) % 2
    for i in range(m):
        rot.append((far + (i + 1) % m, ring(rings, 2 * i + parity), far + (i - 1) % m))
    return rot


def dodecahedron() -> Fullerene:
    return validate_fullerene(build_graph(DODECAHEDRON_ROT))


def hexagonal_barrel() -> Fullerene:
    return validate_fullerene(build_graph(HEXAGONAL_BARREL_ROT))


def nanotube(k: int) -> Fullerene:
    if k < 0:
        raise ValueError("ring count must be non-negative")
    return validate_fullerene(build_graph(zigzag_rotations(5, k)))


def leapfrog_rotations(g: CubicPlanarGraph) -> list[tuple[int, int, int]]:
    """Output vertex d is the dart d of ``g``.

    d is joined to the next and previous darts of its face (those become the
    enlarged copy of the face) and to its reverse dart.
    """
    rot = []
    rev = g.rev
    for d in range(3 * g.n):
        v, i = divmod(d, 3)
        nxt = g.next_dart(d)
        prv = rev[3 * v + (i - 1) % 3]
        rot.append((nxt, prv, rev[d]))
    return rot


def leapfrog(F: Fullerene | CubicPlanarGraph) -> Fullerene:
    g = F.graph if isinstance(F, Fullerene) else F
    return validate_fullerene(build_graph(leapfrog_rotations(g)))


def leapfrog_iterate(m: int) -> Fullerene:
    """``m`` leapfrog steps applied to the dodecahedron (n = 20 * 3**m)."""
    if m < 0:
        raise ValueError("iteration count must be non-negative")
    F = dodecahedron()
    for _ in range(m):
        F = leapfrog(F)
    return F
