"""Command-line front end: ``fullerene-bip <command> ...``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .bipartizer import (
    bipartize,
    check_pentagon_proximity,
    conjecture_bound,
    general_bound,
    matched_bound,
    min_weight_perfect_matching,
    pentagon_metric,
    recover_edge_cut,
    within_conjecture_bound,
)
from .errors import FullereneError
from .generators import FAMILIES, FamilySpec
from .planar import build_dual, build_graph, is_bipartite, remove_edges, validate_fullerene
from .planar_code import read_file, write_planar_code

JOBS_ENV = "FULLERENE_BIP_JOBS"

CSV_FIELDS = (
    "family", "param", "n", "b", "matching_weight", "bound_conjecture",
    "bound_matched", "bound_general", "proximity_ok", "wall_time_ms",
)
BENCH_FIELDS = (
    "family", "param", "n", "validate_ms", "dual_ms", "metric_ms",
    "matching_ms", "cut_ms", "bipartite_check_ms", "total_ms",
)

ALIASES = {"leapfrog": "leapfrog_iterate", "barrel": "hexagonal_barrel", "tube": "nanotube"}

EXIT_FAILURE = 1
EXIT_USAGE = 2


class CliError(Exception):
    pass


class IoError(CliError):
    pass


# ---------------------------------------------------------------------------
# inputs


@dataclass(frozen=True)
class Job:
    """One graph to process: a generated family member or a record of a file."""

    family: str
    param: int
    rotations: tuple[tuple[int, ...], ...] | None = None


def parse_params(text: str | None) -> list[int]:
    """``"5"``, ``"0-10"`` or ``"1,3,5"``; ranges are inclusive."""
    if text is None:
        return [0]
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        lo, sep, hi = part.partition("-")
        try:
            if sep:
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(part))
        except ValueError:
            raise CliError(f"bad parameter list {text!r}") from None
    return out


def family_specs(families: Sequence[str] | None, rings: str | None, iterations: str | None) -> list[FamilySpec]:
    specs = []
    for name in families or ():
        family = ALIASES.get(name, name)
        if family not in FAMILIES:
            raise CliError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}")
        if family == "nanotube":
            params = parse_params(rings)
        elif family == "leapfrog_iterate":
            params = parse_params(iterations)
        else:
            params = [0]
        try:
            specs.extend(FamilySpec(family, p) for p in params)
        except ValueError as exc:
            raise CliError(str(exc)) from None
    return specs


def collect_jobs(args) -> list[Job]:
    jobs: list[Job] = []
    for path in args.inputs or ():
        try:
            graphs = read_file(path)
        except OSError as exc:
            raise IoError(f"cannot read {path}: {exc}") from None
        except FullereneError as exc:
            raise CliError(f"{path}: {type(exc).__name__}: {exc}") from None
        name = Path(path).name
        jobs.extend(Job(name, i, tuple(g.rot)) for i, g in enumerate(graphs))
    jobs.extend(Job(s.family, s.param) for s in family_specs(args.family, args.rings, args.iterations))
    return jobs


def _load(job: Job):
    if job.rotations is None:
        return FamilySpec(job.family, job.param).build()
    return validate_fullerene(build_graph(job.rotations))


def default_jobs() -> int:
    value = os.environ.get(JOBS_ENV)
    if value:
        try:
            return max(1, int(value))
        except ValueError:
            raise CliError(f"{JOBS_ENV} must be an integer, got {value!r}") from None
    return 1


def parallel_map(fn, items: list, jobs: int) -> list:
    """Order-preserving map; runs in-process for a single job."""
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


# ---------------------------------------------------------------------------
# output


def fmt_float(x: float) -> str:
    return f"{x:.6g}"


def emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text)
    except OSError as exc:
        raise IoError(f"cannot write {out}: {exc}") from None


def to_csv(rows: list[dict], fields: Sequence[str]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(fields)
    for row in rows:
        writer.writerow([row[k] for k in fields])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# bipartize


@dataclass(frozen=True)
class Outcome:
    record: dict | None = None
    error: str | None = None


def _bipartize_job(job: Job) -> Outcome:
    start = time.perf_counter()
    try:
        F = _load(job)
        res = bipartize(F)
        proximity = check_pentagon_proximity(F, res.metric)
    except FullereneError as exc:
        return Outcome(error=f"{type(exc).__name__}: {exc}")
    elapsed = (time.perf_counter() - start) * 1000
    record = {
        "family": job.family,
        "param": job.param,
        "n": F.n,
        "b": res.b,
        "matching_weight": res.matching.weight,
        "bound_conjecture": conjecture_bound(F.n),
        "bound_matched": matched_bound(F.n),
        "bound_general": general_bound(F.n),
        "proximity_ok": proximity.ok,
        "wall_time_ms": elapsed,
        "cut": [list(e) for e in res.cut],
        "conjecture_ok": within_conjecture_bound(res.b, F.n),
    }
    return Outcome(record=record)


def _csv_row(rec: dict, emit_cut: bool) -> dict:
    row = dict(rec)
    for k in ("bound_conjecture", "bound_matched", "bound_general", "wall_time_ms"):
        row[k] = fmt_float(rec[k])
    row["proximity_ok"] = str(rec["proximity_ok"]).lower()
    if emit_cut:
        row["cut"] = " ".join(f"{u}-{v}" for u, v in rec["cut"])
    return row


def _json_row(rec: dict, emit_cut: bool) -> dict:
    row = {k: rec[k] for k in CSV_FIELDS}
    for k in ("bound_conjecture", "bound_matched", "bound_general", "wall_time_ms"):
        row[k] = float(fmt_float(rec[k]))
    if emit_cut:
        row["cut"] = rec["cut"]
    return row


def cmd_bipartize(args) -> int:
    jobs = collect_jobs(args)
    if not jobs:
        raise CliError("no input graphs; give --in FILE and/or --family")
    outcomes = parallel_map(_bipartize_job, jobs, args.jobs or default_jobs())
    failed = False
    for i, o in enumerate(outcomes):
        if o.error is not None:
            print(f"ValidationError: graph {i} ({jobs[i].family}:{jobs[i].param}): {o.error}", file=sys.stderr)
            failed = True
        elif args.strict_conjecture and not o.record["conjecture_ok"]:
            rec = o.record
            print(f"graph {i}: b={rec['b']} exceeds sqrt(12n/5) at n={rec['n']}", file=sys.stderr)
            failed = True
    if failed:
        return EXIT_FAILURE
    records = [o.record for o in outcomes]
    if args.no_timing:
        for rec in records:
            rec["wall_time_ms"] = 0.0
    if args.format == "json":
        text = json.dumps([_json_row(r, args.emit_cut) for r in records], indent=2) + "\n"
    else:
        fields = CSV_FIELDS + (("cut",) if args.emit_cut else ())
        text = to_csv([_csv_row(r, args.emit_cut) for r in records], fields)
    emit(text, args.out)
    return 0


# ---------------------------------------------------------------------------
# generate


def cmd_generate(args) -> int:
    specs = family_specs(args.family, args.rings, args.iterations)
    if not specs:
        raise CliError("generate needs --family")
    data = write_planar_code(s.build() for s in specs)
    if args.out is None:
        sys.stdout.buffer.write(data)
        return 0
    try:
        Path(args.out).write_bytes(data)
    except OSError as exc:
        raise IoError(f"cannot write {args.out}: {exc}") from None
    return 0


# ---------------------------------------------------------------------------
# bench


def _ms(t0: float) -> float:
    return (time.perf_counter() - t0) * 1000


def _bench_job(job: Job) -> dict:
    F0 = _load(job)
    rot = F0.graph.rot
    times = {}
    t0 = time.perf_counter()
    F = validate_fullerene(build_graph(rot))
    times["validate_ms"] = _ms(t0)
    t = time.perf_counter()
    dual = build_dual(F)
    times["dual_ms"] = _ms(t)
    t = time.perf_counter()
    M = pentagon_metric(F, dual)
    times["metric_ms"] = _ms(t)
    t = time.perf_counter()
    matching = min_weight_perfect_matching(M)
    times["matching_ms"] = _ms(t)
    t = time.perf_counter()
    cut = recover_edge_cut(F, dual, matching)
    times["cut_ms"] = _ms(t)
    t = time.perf_counter()
    ok = is_bipartite(remove_edges(F, cut)).bipartite
    times["bipartite_check_ms"] = _ms(t)
    times["total_ms"] = _ms(t0)
    if not ok:
        raise FullereneError(f"{job.family}:{job.param}: recovered cut does not bipartize")
    row = {"family": job.family, "param": job.param, "n": F.n}
    row.update({k: fmt_float(v) for k, v in times.items()})
    return row


def cmd_bench(args) -> int:
    jobs = collect_jobs(args)
    rows = [_bench_job(j) for j in jobs]
    emit(to_csv(rows, BENCH_FIELDS), args.out)
    return 0


# ---------------------------------------------------------------------------
# verify


def cmd_verify(args) -> int:
    from .suites import SUITES, run_suite

    names = list(SUITES) if "all" in args.suite else args.suite
    reports = []
    for name in names:
        report = run_suite(name, samples=args.samples, seed=args.seed)
        reports.append(report)
        print(report.line(), file=sys.stderr if args.format == "json" else sys.stdout, flush=True)
        if not report.passed:
            print(f"SuiteFailed: {name}: " + json.dumps(report.counterexample), file=sys.stderr)
    if args.format == "json":
        payload = [
            {
                "suite": r.name,
                "passed": r.passed,
                "checked": r.checked,
                "counterexample": r.counterexample,
                **r.notes,
            }
            for r in reports
        ]
        emit(json.dumps(payload, indent=2) + "\n", args.out)
    return 0 if all(r.passed for r in reports) else EXIT_FAILURE


# ---------------------------------------------------------------------------
# analyze-patch


def parse_int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise CliError(f"bad vertex list {text!r}") from None


def analyze_patch(P) -> dict:
    from .patches import (
        Paired4Chords,
        ShortChord,
        boundary_stats,
        classify_patch,
        describe_boundary,
        find_chords,
        find_simplifying_cut,
        is_normal,
    )
    from .peeling import check_peeling_volume, rewrite_description, uninterrupted_peeling

    stats = boundary_stats(P)
    D = describe_boundary(P)
    info: dict = {
        "length": stats.length,
        "faces": sorted(P.faces),
        "s": stats.s,
        "t": stats.t,
        "s2": stats.s2,
        "p": stats.p,
        "description": str(D),
        "kind": classify_patch(P).value,
        "chords": [list(c.path) for c in find_chords(P, 4)],
    }
    cut = find_simplifying_cut(P)
    if isinstance(cut, ShortChord):
        info["simplifying_cut"] = {"type": "short_chord", "chord": list(cut.chord.path)}
    elif isinstance(cut, Paired4Chords):
        info["simplifying_cut"] = {"type": "paired_4_chords", "chords": [list(cut.q1), list(cut.q2)]}
    else:
        info["simplifying_cut"] = None
    info["normal"] = is_normal(P)
    if info["normal"]:
        seq = uninterrupted_peeling(P)
        info["predicted_inner_description"] = str(rewrite_description(D))
        info["peeling"] = {
            "k": seq.k,
            "lengths": list(seq.lengths),
            "descriptions": [str(describe_boundary(Q)) for Q in seq.patches],
        }
        if stats.p != 6:
            info["peeling"]["volume_ok"] = check_peeling_volume(P, seq)
    return info


def cmd_analyze_patch(args) -> int:
    from .patches import patch_from_cycle, patch_from_faces

    jobs = collect_jobs(args)
    if not jobs:
        raise CliError("analyze-patch needs a host graph (--in FILE or --family)")
    if not 0 <= args.graph < len(jobs):
        raise CliError(f"--graph {args.graph} out of range (0..{len(jobs) - 1})")
    F = _load(jobs[args.graph])
    if args.cycle is not None:
        if args.face is None:
            raise CliError("--cycle needs --face to pick the side")
        P = patch_from_cycle(F, parse_int_list(args.cycle), args.face)
    elif args.faces is not None:
        P = patch_from_faces(F, parse_int_list(args.faces))
    else:
        raise CliError("give --cycle with --face, or --faces")
    emit(json.dumps(analyze_patch(P), indent=2) + "\n", args.out)
    return 0


# ---------------------------------------------------------------------------
# parser


def _add_inputs(p: argparse.ArgumentParser) -> None:
    p.add_argument("--in", dest="inputs", action="append", metavar="FILE", help="planar_code file (repeatable)")
    p.add_argument("--family", action="append", help=f"one of {', '.join(FAMILIES)} (repeatable)")
    p.add_argument("--rings", help="nanotube ring counts, e.g. 10, 0-10 or 1,3,5")
    p.add_argument("--iterations", help="leapfrog iteration counts, e.g. 2 or 0-4")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fullerene-bip", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write family members in planar_code")
    _add_inputs(p)
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("bipartize", help="minimum bipartizing edge sets")
    _add_inputs(p)
    p.add_argument("--out")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--jobs", type=int, default=None, help=f"worker processes (default ${JOBS_ENV} or 1)")
    p.add_argument("--emit-cut", action="store_true", help="append the edge set as a 'cut' column")
    p.add_argument("--strict-conjecture", action="store_true", help="fail when b > sqrt(12n/5)")
    p.add_argument("--no-timing", action="store_true", help="report wall_time_ms as 0")
    p.set_defaults(func=cmd_bipartize)

    p = sub.add_parser("analyze-patch", help="patch statistics for a cycle or face set")
    _add_inputs(p)
    p.add_argument("--graph", type=int, default=0, help="index of the host among the inputs")
    p.add_argument("--cycle", help="boundary vertices in order, comma or space separated")
    p.add_argument("--face", type=int, help="a face on the patch side of --cycle")
    p.add_argument("--faces", help="face ids of the patch (alternative to --cycle)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_analyze_patch)

    p = sub.add_parser("verify", help="run property suites")
    p.add_argument("suite", nargs="+", help="suite names or 'all'")
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="per-phase timings as CSV")
    _add_inputs(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        from .suites import SUITES

        unknown = [s for s in args.suite if s != "all" and s not in SUITES]
        if unknown:
            parser.error(f"unknown suite(s) {', '.join(unknown)}; choose from {', '.join(SUITES)}")
    try:
        return args.func(args)
    except CliError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FullereneError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
