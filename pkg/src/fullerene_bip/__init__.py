"""Minimum bipartizing edge sets of fullerenes and a calculus of fullerene patches."""

from __future__ import annotations

from .bipartizer import BipartizationResult, bipartize, brute_force_b
from .errors import FullereneError
from .generators import FamilySpec, dodecahedron, hexagonal_barrel, leapfrog_iterate, nanotube
from .planar import CubicPlanarGraph, Fullerene, build_graph, validate_fullerene
from .planar_code import read_planar_code, write_planar_code

__version__ = "0.1.0"

__all__ = [
    "BipartizationResult",
    "CubicPlanarGraph",
    "FamilySpec",
    "Fullerene",
    "FullereneError",
    "bipartize",
    "brute_force_b",
    "build_graph",
    "dodecahedron",
    "hexagonal_barrel",
    "leapfrog_iterate",
    "nanotube",
    "read_planar_code",
    "validate_fullerene",
    "write_planar_code",
]
