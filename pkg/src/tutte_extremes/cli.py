"""Command-line front end.

Exit codes: 0 when every check passes, 1 when some check fails, 2 for usage,
parse, precondition or cap errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .coeffs import verify_extremes
from .corpus import exhaustive, random_corpus
from .errors import CapExceededError, GraphParseError, PreconditionError
from .graph import Multigraph, format_graph, is_bridgeless, is_connected, parse_graph
from .planar import PlaneGraph, duality_report
from .special import chromatic, chromatic_top3, flow, flow_top3, jones
from .structure import structure_report
from .tutte import compute
from .verify import Caps, verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


@dataclass
class RunConfig:
    command: str
    paths: list[Path]
    json: bool
    caps: Caps
    max_n: int = 5
    max_m: int = 9
    count: int = 100
    seed: int = 0
    exhaustive: bool = False
    jobs: int = 1
    dump: Path | None = None


def _emit(cfg: RunConfig, payload, text: str) -> None:
    if cfg.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _load(path: Path) -> tuple[Multigraph, PlaneGraph | None]:
    try:
        text = path.read_text()
    except OSError as exc:
        raise GraphParseError(f"cannot read {path}: {exc.strerror}") from None
    g, rotation = parse_graph(text)
    plane = PlaneGraph(g, rotation) if rotation is not None else None
    return g, plane


def _hypotheses(g: Multigraph) -> bool:
    return g.n >= 2 and is_connected(g) and not g.has_loop() and is_bridgeless(g)


# ---------------------------------------------------------------------------
# subcommands


def cmd_tutte(cfg: RunConfig, g: Multigraph, plane) -> int:
    results = {
        "delcon": compute(g, "delcon"),
        "subset": compute(g, "subset", cfg.caps.subset),
        "convolution": compute(g, "convolution", cfg.caps.convolution),
    }
    agree = len({r.poly for r in results.values()}) == 1
    poly = results["delcon"].poly
    lines = [str(poly)]
    for name, r in results.items():
        lines.append(f"  {name:<12} {r.elapsed * 1000:8.1f} ms")
    lines.append(f"method agreement: {'ok' if agree else 'MISMATCH'}")
    if not agree:
        lines.extend(f"  {name}: {r.poly}" for name, r in results.items())
    payload = {
        "n": g.n,
        "m": g.m,
        "tutte": poly.to_json(),
        "string": str(poly),
        "methods": {name: r.poly.to_json() for name, r in results.items()},
        "agree": agree,
    }
    _emit(cfg, payload, "\n".join(lines))
    return EXIT_OK if agree else EXIT_FAIL


def cmd_coeffs(cfg: RunConfig, g: Multigraph, plane) -> int:
    report = verify_extremes(g)
    lines = [f"{'coefficient':<12} {'position':<9} {'formula':>8} {'oracle':>8}  match"]
    for e in report.entries:
        pos = "absent" if e.position is None else f"({e.position[0]},{e.position[1]})"
        formula = "-" if e.formula is None else str(e.formula)
        oracle = "-" if e.oracle is None else str(e.oracle)
        lines.append(f"{e.label:<12} {pos:<9} {formula:>8} {oracle:>8}  {'ok' if e.match else 'MISMATCH'}")
    _emit(cfg, report.to_json(), "\n".join(lines))
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_structure(cfg: RunConfig, g: Multigraph, plane) -> int:
    r = structure_report(g)
    lines = [
        f"n={r.n} m={r.m}",
        f"p={r.p} p*={r.p_star} s={r.s} s*={r.s_star} triangles={r.triangles} Theta={r.theta} Infinity={r.infinity}",
    ]
    lines.extend(f"  {c.kind}: edges {sorted(c.edges)}" for c in r.classes)
    _emit(cfg, r.to_json(), "\n".join(lines))
    return EXIT_OK


def _poly_command(cfg: RunConfig, g: Multigraph, which: str) -> int:
    poly = chromatic(g) if which == "chromatic" else flow(g)
    payload: dict = {"poly": poly.to_json(), "string": str(poly)}
    lines = [f"{which}: {poly}"]
    status = EXIT_OK
    if _hypotheses(g):
        top = chromatic_top3(g) if which == "chromatic" else flow_top3(g)
        payload["top3"] = top.to_json()
        lines.append(f"top-3 closed form {top.formula}, actual {top.actual}: {'ok' if top.match else 'MISMATCH'}")
        status = EXIT_OK if top.match else EXIT_FAIL
    _emit(cfg, payload, "\n".join(lines))
    return status


def cmd_chromatic(cfg, g, plane) -> int:
    return _poly_command(cfg, g, "chromatic")


def cmd_flow(cfg, g, plane) -> int:
    return _poly_command(cfg, g, "flow")


def cmd_jones(cfg: RunConfig, g: Multigraph, plane) -> int:
    jr = jones(g)
    lines = [f"J(t) = {jr.poly}"]
    for e in jr.entries():
        lines.append(f"  {e['label']:<7} formula={e['formula']:>6} oracle={e['oracle']:>6}  {'ok' if e['match'] else 'MISMATCH'}")
    lines.append(f"sign pattern (-1)^(m-i) b_i >= 0: {'ok' if jr.signs_ok else 'VIOLATED'}")
    _emit(cfg, jr.to_json(), "\n".join(lines))
    return EXIT_OK if jr.ok else EXIT_FAIL


def cmd_dual(cfg: RunConfig, g: Multigraph, plane: PlaneGraph | None) -> int:
    if plane is None:
        raise PreconditionError("the dual command needs rotation lines ('r V: ...') in the graph file")
    dr = duality_report(plane)
    lines = [f"dual: n={dr.dual.n} m={dr.dual.m}", f"T(G*) = {dr.dual_tutte}"]
    for c in dr.checks:
        if isinstance(c.lhs, str):
            # polynomial sides are in the JSON output; too wide for a table row
            lines.append(f"  {c.name:<30} {'':>17}  {'ok' if c.holds else 'MISMATCH'}")
            continue
        lines.append(f"  {c.name:<30} {c.lhs:>8} {c.rhs:>8}  {'ok' if c.holds else 'MISMATCH'}")
    _emit(cfg, dr.to_json(), "\n".join(lines))
    return EXIT_OK if dr.ok else EXIT_FAIL


def _verify_text(rep) -> str:
    lines = [f"n={rep.n} m={rep.m}"]
    for c in rep.checks:
        extra = f"  ({c.detail})" if c.detail and not c.passed else ""
        lines.append(f"  {'PASS' if c.passed else 'FAIL'}  {c.name}{extra}")
    lines.extend(f"  skip  {s}" for s in rep.skipped)
    lines.append("all checks passed" if rep.ok else f"{len(rep.failures())} check(s) failed")
    return "\n".join(lines)


def cmd_verify(cfg: RunConfig, g: Multigraph, plane) -> int:
    rep = verify(g, cfg.caps, plane)
    _emit(cfg, rep.to_json(), _verify_text(rep))
    return EXIT_OK if rep.ok else EXIT_FAIL


def _verify_one(args):
    g, caps = args
    return verify(g, caps)


def cmd_fuzz(cfg: RunConfig) -> int:
    if cfg.max_n < 2:
        raise PreconditionError("--max-n must be at least 2")
    if cfg.exhaustive:
        graphs = exhaustive(cfg.max_n, cfg.max_m)
    else:
        graphs = random_corpus(cfg.count, cfg.max_n, cfg.max_m, cfg.seed)
    jobs = [(g, cfg.caps) for g in graphs]
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            reports = list(pool.map(_verify_one, jobs, chunksize=8))
    else:
        reports = [_verify_one(j) for j in jobs]
    failures = [(k, g, r) for k, (g, r) in enumerate(zip(graphs, reports)) if not r.ok]
    mode = "exhaustive" if cfg.exhaustive else f"random seed={cfg.seed}"
    summary = {
        "mode": "exhaustive" if cfg.exhaustive else "random",
        "seed": None if cfg.exhaustive else cfg.seed,
        "max_n": cfg.max_n,
        "max_m": cfg.max_m,
        "checked": len(graphs),
        "checks_run": sum(len(r.checks) for r in reports),
        "failed": len(failures),
    }
    lines = [f"fuzz ({mode}, n<={cfg.max_n}, m<={cfg.max_m}): checked {len(graphs)} graphs, "
             f"{summary['checks_run']} checks, {len(failures)} failing graphs"]
    if failures:
        k, g, r = failures[0]
        dump = cfg.dump or Path("fuzz-failure.g")
        header = "".join(f"# FAIL {c.name} {c.detail}\n" for c in r.failures())
        dump.write_text(f"# fuzz graph index {k}\n{header}{format_graph(g)}")
        summary["first_failure"] = {"index": k, "edges": [list(e) for e in g.edges], "n": g.n, "dump": str(dump)}
        lines.append(f"first failure: graph #{k}, written to {dump}")
        lines.extend(f"  FAIL {c.name} {c.detail}" for c in r.failures())
    _emit(cfg, summary, "\n".join(lines))
    return EXIT_FAIL if failures else EXIT_OK


COMMANDS = {
    "tutte": cmd_tutte,
    "coeffs": cmd_coeffs,
    "structure": cmd_structure,
    "chromatic": cmd_chromatic,
    "flow": cmd_flow,
    "jones": cmd_jones,
    "dual": cmd_dual,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--subset-cap", type=int, default=Caps.subset, help="max edges for the subset expansion")
    common.add_argument("--conv-cap", type=int, default=Caps.convolution, help="max edges for the convolution sum")
    common.add_argument("--bond-cap", type=int, default=Caps.bond_vertices, help="max vertices for the bond lattice")
    common.add_argument(
        "--lattice-cap", type=int, default=Caps.bridgeless_edges, help="max edges for the bridgeless lattice"
    )
    common.add_argument(
        "--class-cap", type=int, default=Caps.special_bruteforce, help="max edges for brute-force class search"
    )

    parser = argparse.ArgumentParser(prog="tutte-extremes", description="Exact Tutte polynomial toolkit.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "tutte": "Tutte polynomial by all three methods",
        "coeffs": "closed-form extreme coefficients against the polynomial",
        "structure": "parallel, series, Theta and Infinity classes",
        "chromatic": "chromatic polynomial",
        "flow": "flow polynomial",
        "jones": "Jones polynomial of the graph",
        "dual": "planar dual and duality identities (needs rotation lines)",
        "verify": "run every applicable identity",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("file", type=Path)
    fz = sub.add_parser("fuzz", parents=[common], help="verify a generated corpus")
    fz.add_argument("--max-n", type=int, default=5)
    fz.add_argument("--max-m", type=int, default=9)
    fz.add_argument("--count", type=int, default=100, help="random graphs to draw")
    fz.add_argument("--seed", type=int, default=0)
    fz.add_argument("--exhaustive", action="store_true", help="enumerate every graph within the bounds")
    fz.add_argument("--jobs", type=int, default=1, help="worker processes")
    fz.add_argument("--dump", type=Path, default=None, help="where to write the first failing graph")
    return parser


def _config(args) -> RunConfig:
    caps = Caps(
        subset=args.subset_cap,
        convolution=args.conv_cap,
        special_bruteforce=args.class_cap,
        bond_vertices=args.bond_cap,
        bridgeless_edges=args.lattice_cap,
    )
    if min(caps.subset, caps.convolution, caps.special_bruteforce, caps.bond_vertices, caps.bridgeless_edges) <= 0:
        raise PreconditionError("caps must be positive")
    cfg = RunConfig(command=args.command, paths=[], json=args.json, caps=caps)
    if args.command == "fuzz":
        cfg.max_n, cfg.max_m, cfg.count, cfg.seed = args.max_n, args.max_m, args.count, args.seed
        cfg.exhaustive, cfg.jobs, cfg.dump = args.exhaustive, args.jobs, args.dump
    else:
        cfg.paths = [args.file]
    return cfg


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        cfg = _config(args)
        if cfg.command == "fuzz":
            return cmd_fuzz(cfg)
        g, plane = _load(cfg.paths[0])
        return COMMANDS[cfg.command](cfg, g, plane)
    except GraphParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
    except PreconditionError as exc:
        print(f"precondition error: {exc}", file=sys.stderr)
    except CapExceededError as exc:
        print(f"cap error: {exc}", file=sys.stderr)
    return EXIT_USAGE


def main() -> None:
    sys.exit(run())
