"""Property suites that check the structural claims of the toolkit on generated data.

Every suite returns a :class:`SuiteReport`; a failing report carries the
first counterexample in a JSON-serialisable form.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator

from .bipartizer import (
    bipartize,
    brute_force_b,
    check_pentagon_proximity,
    contains_K57,
    has_perfect_matching_12,
    within_general_bound,
    within_matched_bound,
)
from .errors import FullereneError
from .generators import (
    dodecahedron,
    hexagonal_barrel,
    leapfrog_iterate,
    nanotube,
)
from .patches import (
    Patch,
    boundary_stats,
    describe_boundary,
    find_chords,
    incident_33_edges,
    is_normal,
)
from .peeling import check_peeling_volume, peel, rewrite_description, uninterrupted_peeling, vertices_outside
from .planar import Fullerene
from .sampling import ball_patches, random_patch, single_face_patches, two_face_patches

SUITES = ("theorem1", "bounds", "dist", "match", "n22", "nochord", "layer", "peeling")


@dataclass
class SuiteReport:
    name: str
    passed: bool = True
    checked: int = 0
    seconds: float = 0.0
    counterexample: dict | None = None
    notes: dict = field(default_factory=dict)

    def fail(self, **detail) -> None:
        if self.passed:
            self.counterexample = detail
        self.passed = False

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = "".join(f" {k}={v}" for k, v in sorted(self.notes.items()))
        return f"{status} {self.name} checked={self.checked}{extra} ({self.seconds:.2f}s)"


def _patch_info(P: Patch) -> dict:
    return {
        "host_n": P.host.n,
        "faces": sorted(P.faces),
        "boundary": list(P.boundary),
        "description": str(describe_boundary(P)),
    }


# ---------------------------------------------------------------------------
# instance sets


def small_fixtures() -> list[tuple[str, Fullerene]]:
    return [
        ("dodecahedron", dodecahedron()),
        ("hexagonal_barrel", hexagonal_barrel()),
        ("nanotube:1", nanotube(1)),
    ]


def bound_instances(max_rings: int = 100, max_iterations: int = 4) -> Iterator[tuple[str, Fullerene]]:
    for k in range(max_rings + 1):
        yield f"nanotube:{k}", nanotube(k)
    for m in range(max_iterations + 1):
        yield f"leapfrog_iterate:{m}", leapfrog_iterate(m)
    yield "hexagonal_barrel", hexagonal_barrel()


@lru_cache(maxsize=None)
def _host(name: str) -> Fullerene:
    family, _, param = name.partition(":")
    if family == "leapfrog":
        return leapfrog_iterate(int(param))
    return nanotube(int(param))


PATCH_HOSTS = ("leapfrog:2", "leapfrog:3", "nanotube:8", "nanotube:20")


def sampled_patches(count: int, seed: int) -> list[Patch]:
    """Ball patches of the patch hosts plus seeded random discs (not deduplicated)."""
    out: list[Patch] = []
    for name in PATCH_HOSTS:
        out.extend(ball_patches(_host(name), max_radius=8))
    rng = random.Random(seed)
    hosts = [_host(name) for name in PATCH_HOSTS]
    while len(out) < count:
        P = random_patch(rng.choice(hosts), rng, rng.randint(1, 80))
        if P is not None:
            out.append(P)
    return out


@lru_cache(maxsize=8)
def normal_patches(count: int = 1000, seed: int = 0) -> tuple[Patch, ...]:
    """A deterministic sample of distinct normal patches, drawn round-robin per host."""
    pools: dict[int, list[Patch]] = {}
    seen = set()
    deep = _host("leapfrog:4")
    candidates = list(sampled_patches(0, seed))
    candidates += [P for P in ball_patches(deep, centers="face") if len(P.faces) >= 60]
    for P in candidates:
        key = (P.host.n, P.faces)
        if key not in seen:
            seen.add(key)
            pools.setdefault(P.host.n, []).append(P)
    rng = random.Random(seed)
    iters = []
    for n in sorted(pools):
        rng.shuffle(pools[n])
        iters.append(iter(P for P in pools[n] if is_normal(P)))
    out: list[Patch] = []
    while iters and len(out) < count:
        for it in list(iters):
            P = next(it, None)
            if P is None:
                iters.remove(it)
            else:
                out.append(P)
                if len(out) >= count:
                    break
    return tuple(out)


# ---------------------------------------------------------------------------
# suites


def suite_theorem1(samples: int = 0, seed: int = 0) -> SuiteReport:
    report = SuiteReport("theorem1")
    for name, F in small_fixtures():
        b = bipartize(F).b
        oracle = brute_force_b(F, limit=8)
        report.checked += 1
        if b != oracle:
            report.fail(instance=name, matching_b=b, oracle_b=oracle)
    return report


def suite_bounds(samples: int = 0, seed: int = 0) -> SuiteReport:
    report = SuiteReport("bounds")
    for name, F in bound_instances():
        res = bipartize(F, check=False)
        report.checked += 1
        ok = res.b >= 6 and within_general_bound(res.b, F.n)
        ok = ok and res.thresholded_has_matching and within_matched_bound(res.b, F.n)
        if not ok:
            report.fail(instance=name, n=F.n, b=res.b, has_matching=res.thresholded_has_matching)
    return report


def suite_dist(samples: int = 0, seed: int = 0) -> SuiteReport:
    report = SuiteReport("dist")
    for name, F in bound_instances():
        verdict = check_pentagon_proximity(F)
        report.checked += 1
        if not verdict.ok:
            report.fail(instance=name, n=F.n, counts=list(verdict.counts))
    return report


def random_graph12(rng: random.Random) -> list[int]:
    """Random 12-vertex graph with minimum degree >= 5, as neighbour bitmasks.

    Mixes dense and sparse G(12, p) graphs repaired up to degree 5 with
    planted K_{5,7} graphs carrying random extra edges.
    """
    adj = [0] * 12
    if rng.random() < 0.05:
        order = list(range(12))
        rng.shuffle(order)
        small, large = order[:5], order[5:]
        for u in small:
            for v in large:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        extra = rng.random()
        for i in range(12):
            for j in range(i + 1, 12):
                if not adj[i] >> j & 1 and rng.random() < extra * 0.3:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
        return adj
    p = rng.uniform(0.15, 0.9)
    for i in range(12):
        for j in range(i + 1, 12):
            if rng.random() < p:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    for v in range(12):
        while bin(adj[v]).count("1") < 5:
            w = rng.choice([w for w in range(12) if w != v and not adj[v] >> w & 1])
            adj[v] |= 1 << w
            adj[w] |= 1 << v
    return adj


def suite_match(samples: int = 100_000, seed: int = 7) -> SuiteReport:
    report = SuiteReport("match")
    rng = random.Random(seed)
    without_matching = 0
    for _ in range(samples):
        adj = random_graph12(rng)
        report.checked += 1
        if has_perfect_matching_12(adj):
            continue
        without_matching += 1
        if not contains_K57(adj):
            report.fail(graph=adj)
    report.notes["no_matching"] = without_matching
    return report


def suite_n22(samples: int = 10_000, seed: int = 0) -> SuiteReport:
    report = SuiteReport("n22")
    patches: list[Patch] = []
    for name in PATCH_HOSTS:
        F = _host(name)
        patches.extend(single_face_patches(F))
        patches.extend(two_face_patches(F))
    patches.extend(sampled_patches(samples, seed))
    for P in patches:
        types = P.edge_types
        s, t = types.count("22"), types.count("33")
        report.checked += 1
        if s != 6 - P.p + t:
            report.fail(patch=_patch_info(P), s=s, t=t, p=P.p)
    return report


def suite_layer(samples: int = 1000, seed: int = 0) -> SuiteReport:
    report = SuiteReport("layer")
    for P in normal_patches(samples, seed):
        report.checked += 1
        try:
            inner, layer = peel(P, check_normal=False)
        except FullereneError as exc:
            report.fail(patch=_patch_info(P), error=repr(exc))
            continue
        predicted = rewrite_description(describe_boundary(P))
        actual = describe_boundary(inner)
        if predicted != actual:
            report.fail(patch=_patch_info(P), predicted=str(predicted), actual=str(actual))
    return report


def suite_nochord(samples: int = 1000, seed: int = 0) -> SuiteReport:
    report = SuiteReport("nochord")
    chords = 0
    for P in normal_patches(samples, seed):
        report.checked += 1
        for c in find_chords(P, 3):
            chords += 1
            k33 = incident_33_edges(P, c)
            if c.length < 2 or not c.splits_off_face or k33 > c.length - 2:
                report.fail(patch=_patch_info(P), chord=list(c.path), incident_33=k33)
    report.notes["chords"] = chords
    return report


def suite_peeling(samples: int = 1000, seed: int = 0) -> SuiteReport:
    report = SuiteReport("peeling")
    deepest = 0
    for P in normal_patches(samples, seed):
        if P.p == 6:
            continue
        seq = uninterrupted_peeling(P)
        report.checked += 1
        deepest = max(deepest, seq.k)
        if not check_peeling_volume(P, seq):
            report.fail(patch=_patch_info(P), k=seq.k, outside=vertices_outside(seq))
    report.notes["max_k"] = deepest
    return report


RUNNERS: dict[str, Callable[..., SuiteReport]] = {
    "theorem1": suite_theorem1,
    "bounds": suite_bounds,
    "dist": suite_dist,
    "match": suite_match,
    "n22": suite_n22,
    "nochord": suite_nochord,
    "layer": suite_layer,
    "peeling": suite_peeling,
}


def run_suite(name: str, samples: int | None = None, seed: int | None = None) -> SuiteReport:
    runner = RUNNERS[name]
    kwargs = {}
    if samples is not None:
        kwargs["samples"] = samples
    if seed is not None:
        kwargs["seed"] = seed
    start = time.perf_counter()
    report = runner(**kwargs)
    report.seconds = time.perf_counter() - start
    return report


__all__ = ["SUITES", "SuiteReport", "run_suite", "normal_patches", "random_graph12", "boundary_stats"]
