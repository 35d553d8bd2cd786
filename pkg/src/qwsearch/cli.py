"""Command-line front end emitting CSV datasets for search experiments.

Subcommands: ``simulate`` (success-probability curves), ``sweep-gamma``
(peak success versus jumping rate), ``overlaps`` (eigenvector overlap
profiles), ``runtimes`` (runtime comparison across walks), ``verify-spin``
(spin-network walk-equivalence check). Parameters come from flags or a flat
``key=value`` config file; flags override the file. Exit status is 0 on
success, 1 for usage or validation errors, and 2 when ``verify-spin`` finds
a mismatch.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .bipartite import (
    InitialStateKind,
    class_slices,
    initial_state,
    reduced_hamiltonian,
    reduced_to_full,
    runtime_table,
    fastest_regime,
    simulate_full,
    simulate_reduced,
)
from .evolve import (
    SearchInstance,
    WalkKind,
    eig_hermitian,
    first_peak,
    overlap_profile,
    propagate,
    search_hamiltonian,
    uniform_state,
)
from .graph import BipartiteSpec, complete_bipartite, read_edge_list
from .spin_network import CouplingConstants, certify_walk_equivalence, demo_graph

__all__ = ["RunConfig", "main", "entry"]

FULL_MODE_CAP = 2000
DEFAULT_SAMPLES = 2000
DEFAULT_GAMMA_COUNT = 200

_WALKS = {kind.value: kind for kind in WalkKind}
_INITS = {kind.value: kind for kind in InitialStateKind}
_PROBES = ("s", "sq", "ml", "mr")


class UsageError(Exception):
    """Bad flags or config values; maps to exit status 1."""


@dataclass(frozen=True)
class RunConfig:
    """Merged parameters of one subcommand invocation."""

    spec: BipartiteSpec | None = None
    graph_path: str | None = None
    marked: frozenset[int] | None = None
    walk: WalkKind = WalkKind.SIGNLESS_LAPLACIAN
    init: InitialStateKind = InitialStateKind.UNIFORM
    probe: str = "s"
    gamma: float | None = None
    gamma_range: tuple[float, float, int] | None = None
    tmax: float | None = None
    samples: int = DEFAULT_SAMPLES
    mode: str = "reduced"
    out: str | None = None
    sweep_axis: str | None = None
    sweep_range: tuple[int, int] | None = None
    jz_ratio: float | None = None


# ---------------------------------------------------------------------------
# config-file handling


_CONFIG_CONVERTERS = {
    "n1": int,
    "n2": int,
    "k1": int,
    "k2": int,
    "graph": str,
    "marked": str,
    "walk": str,
    "init": str,
    "probe": str,
    "gamma": float,
    "gamma_min": float,
    "gamma_max": float,
    "gamma_count": int,
    "tmax": float,
    "samples": int,
    "mode": str,
    "out": str,
    "sweep": str,
    "sweep_min": int,
    "sweep_max": int,
    "jz_ratio": float,
}


def load_config(path: str | Path) -> dict[str, str]:
    """Parse a flat ``key=value`` config file; ``#`` starts a comment."""
    values: dict[str, str] = {}
    for raw in Path(path).read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}: malformed config line {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        if key not in _CONFIG_CONVERTERS:
            raise UsageError(f"{path}: unknown config key {key!r}")
        values[key] = value.strip()
    return values


def _resolve(args: argparse.Namespace, config: dict[str, str], name: str, default=None):
    """Flag value if given, else config-file value, else default."""
    value = getattr(args, name, None)
    if value is not None:
        return value
    if name in config:
        try:
            return _CONFIG_CONVERTERS[name](config[name])
        except ValueError as exc:
            raise UsageError(f"config key {name}: {exc}") from exc
    return default


def _parse_marked(text: str) -> frozenset[int]:
    try:
        return frozenset(int(tok) for tok in text.split(",") if tok.strip())
    except ValueError as exc:
        raise UsageError(f"bad --marked list {text!r}") from exc


def _build_config(args: argparse.Namespace) -> RunConfig:
    config = {}
    if getattr(args, "config", None):
        config = load_config(args.config)

    sides = [_resolve(args, config, name) for name in ("n1", "n2", "k1", "k2")]
    graph_path = _resolve(args, config, "graph")
    spec = None
    if any(v is not None for v in sides):
        if any(v is None for v in sides):
            raise UsageError("a bipartite layout needs all of --n1 --n2 --k1 --k2")
        if graph_path is not None:
            raise UsageError("give either --n1/--n2/--k1/--k2 or --graph, not both")
        spec = BipartiteSpec(*sides)

    marked_text = _resolve(args, config, "marked")
    marked = _parse_marked(marked_text) if marked_text is not None else None

    walk_name = _resolve(args, config, "walk", "signless")
    if walk_name not in _WALKS:
        raise UsageError(f"unknown walk kind {walk_name!r}")
    init_name = _resolve(args, config, "init", "s")
    if init_name not in _INITS:
        raise UsageError(f"unknown initial state {init_name!r}")
    probe = _resolve(args, config, "probe", "s")
    if probe not in _PROBES:
        raise UsageError(f"unknown probe {probe!r}")

    gamma = _resolve(args, config, "gamma")
    gamma_min = _resolve(args, config, "gamma_min")
    gamma_max = _resolve(args, config, "gamma_max")
    gamma_count = _resolve(args, config, "gamma_count")
    gamma_range = None
    if gamma_min is not None or gamma_max is not None:
        if gamma_min is None or gamma_max is None:
            raise UsageError("--gamma-min and --gamma-max go together")
        gamma_range = (
            float(gamma_min),
            float(gamma_max),
            int(gamma_count if gamma_count is not None else DEFAULT_GAMMA_COUNT),
        )

    mode = _resolve(args, config, "mode", "full" if graph_path else "reduced")
    if mode not in ("reduced", "full"):
        raise UsageError(f"unknown mode {mode!r}")

    sweep_axis = _resolve(args, config, "sweep")
    if sweep_axis is not None and sweep_axis not in ("k1", "k2"):
        raise UsageError("--sweep must be k1 or k2")
    sweep_min = _resolve(args, config, "sweep_min")
    sweep_max = _resolve(args, config, "sweep_max")
    sweep_range = None
    if sweep_axis is not None:
        if sweep_min is None or sweep_max is None:
            raise UsageError("--sweep needs --sweep-min and --sweep-max")
        sweep_range = (int(sweep_min), int(sweep_max))

    return RunConfig(
        spec=spec,
        graph_path=graph_path,
        marked=marked,
        walk=_WALKS[walk_name],
        init=_INITS[init_name],
        probe=probe,
        gamma=gamma,
        gamma_range=gamma_range,
        tmax=_resolve(args, config, "tmax"),
        samples=int(_resolve(args, config, "samples", DEFAULT_SAMPLES)),
        mode=mode,
        out=_resolve(args, config, "out"),
        sweep_axis=sweep_axis,
        sweep_range=sweep_range,
        jz_ratio=_resolve(args, config, "jz_ratio"),
    )


# ---------------------------------------------------------------------------
# CSV helpers


def _fmt(x) -> str:
    """Shortest round-trip decimal form of a float."""
    return repr(float(x))


def _emit(lines: list[str], out: str | None) -> None:
    text = "\n".join(lines) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _time_grid(cfg: RunConfig) -> np.ndarray:
    tmax = cfg.tmax
    if tmax is None:
        if cfg.spec is None:
            raise UsageError("--tmax is required for edge-list instances")
        defined = [
            t for t in vars(runtime_table(cfg.spec)).values() if t is not None
        ]
        tmax = 2.0 * max(defined)
    if tmax <= 0:
        raise UsageError("--tmax must be positive")
    if cfg.samples < 2:
        raise UsageError("--samples must be at least 2")
    return np.linspace(0.0, float(tmax), cfg.samples)


def _check_full_cap(n: int) -> None:
    if n > FULL_MODE_CAP:
        raise UsageError(f"full mode caps at {FULL_MODE_CAP} vertices, got {n}")


def _gamma_grid(cfg: RunConfig) -> np.ndarray:
    if cfg.gamma_range is None:
        if cfg.gamma is not None:
            return np.array([float(cfg.gamma)])
        raise UsageError("a gamma range (or a single --gamma) is required")
    lo, hi, count = cfg.gamma_range
    if count < 1:
        raise UsageError("--gamma-count must be at least 1")
    if lo <= 0 or hi < lo:
        raise UsageError("need 0 < gamma-min <= gamma-max for a log-spaced sweep")
    return np.geomspace(lo, hi, count)


def _edge_list_curve(cfg: RunConfig, gamma: float, times: np.ndarray) -> np.ndarray:
    """Success-probability curve for a non-bipartite edge-list instance."""
    if cfg.init is not InitialStateKind.UNIFORM:
        raise UsageError("edge-list instances support only --init s")
    if cfg.mode != "full":
        raise UsageError("edge-list instances run in full mode only")
    graph = read_edge_list(cfg.graph_path)
    _check_full_cap(graph.n)
    marked = cfg.marked if cfg.marked is not None else frozenset({0})
    inst = SearchInstance(walk=cfg.walk, graph=graph, marked=marked, gamma=gamma)
    states = propagate(
        eig_hermitian(search_hamiltonian(inst)), uniform_state(graph.n), times
    )
    probs = np.abs(states) ** 2
    return probs[:, sorted(marked)].sum(axis=1)


def _bipartite_curve(cfg: RunConfig, gamma: float, times: np.ndarray) -> np.ndarray:
    if cfg.mode == "reduced":
        return simulate_reduced(cfg.spec, cfg.walk, cfg.init, gamma, times)
    _check_full_cap(cfg.spec.n)
    return simulate_full(cfg.spec, cfg.walk, cfg.init, gamma, times)


# ---------------------------------------------------------------------------
# subcommands


def cmd_simulate(cfg: RunConfig) -> int:
    if cfg.gamma is None:
        raise UsageError("simulate needs a single --gamma")
    if cfg.spec is None and cfg.graph_path is None:
        raise UsageError("simulate needs a bipartite layout or --graph")
    times = _time_grid(cfg)
    lines: list[str] = []
    if cfg.spec is not None:
        probs = _bipartite_curve(cfg, float(cfg.gamma), times)
        lines.append("t,p_success,p_a,p_b,p_c,p_d")
        for t, row in zip(times, probs):
            p_success = row[0] + row[1]
            fields = [_fmt(t), _fmt(p_success)] + [_fmt(x) for x in row]
            lines.append(",".join(fields))
    else:
        curve = _edge_list_curve(cfg, float(cfg.gamma), times)
        lines.append("t,p_success")
        for t, p in zip(times, curve):
            lines.append(f"{_fmt(t)},{_fmt(p)}")
    _emit(lines, cfg.out)
    return 0


def cmd_sweep_gamma(cfg: RunConfig) -> int:
    if cfg.spec is None and cfg.graph_path is None:
        raise UsageError("sweep-gamma needs a bipartite layout or --graph")
    gammas = _gamma_grid(cfg)
    times = _time_grid(cfg)
    lines = ["gamma,t_peak,p_peak"]
    # work items are independent per gamma; output stays sorted by gamma
    for gamma in gammas:
        if cfg.spec is not None:
            probs = _bipartite_curve(cfg, float(gamma), times)
            curve = probs[:, 0] + probs[:, 1]
        else:
            curve = _edge_list_curve(cfg, float(gamma), times)
        t_peak, p_peak = first_peak(times, curve)
        lines.append(f"{_fmt(gamma)},{_fmt(t_peak)},{_fmt(p_peak)}")
    _emit(lines, cfg.out)
    return 0


def _probe_state(cfg: RunConfig) -> np.ndarray:
    """Reduced-basis probe vector for the overlaps subcommand."""
    spec = cfg.spec
    if cfg.probe == "s":
        return initial_state(spec, InitialStateKind.UNIFORM)
    if cfg.probe == "sq":
        return initial_state(spec, InitialStateKind.SIGNLESS_EIGENVECTOR)
    if cfg.probe == "ml":
        if spec.k1 < 1:
            raise UsageError("probe ml needs k1 >= 1")
        return np.array([1.0, 0.0, 0.0, 0.0], dtype=complex)
    if spec.k2 < 1:
        raise UsageError("probe mr needs k2 >= 1")
    return np.array([0.0, 1.0, 0.0, 0.0], dtype=complex)


def cmd_overlaps(cfg: RunConfig) -> int:
    if cfg.spec is None:
        raise UsageError("overlaps needs a bipartite layout")
    gammas = _gamma_grid(cfg)
    spec = cfg.spec
    probe_reduced = _probe_state(cfg)
    if cfg.mode == "reduced":
        rows = overlap_profile(
            lambda g: reduced_hamiltonian(spec, cfg.walk, g),
            gammas,
            probe_reduced,
            left_marked=[0],
            right_marked=[1],
        )
    else:
        _check_full_cap(spec.n)
        graph, marked = complete_bipartite(spec)

        def build(g: float) -> np.ndarray:
            inst = SearchInstance(walk=cfg.walk, graph=graph, marked=marked, gamma=g)
            return search_hamiltonian(inst)

        slices = class_slices(spec)
        rows = overlap_profile(
            build,
            gammas,
            reduced_to_full(spec, probe_reduced),
            left_marked=list(slices[0]),
            right_marked=list(slices[1]),
        )
    lines = ["gamma,n,S_n,L_n,R_n"]
    for row in rows:
        lines.append(
            f"{_fmt(row.gamma)},{row.n},{_fmt(row.s_overlap)},"
            f"{_fmt(row.left_overlap)},{_fmt(row.right_overlap)}"
        )
    _emit(lines, cfg.out)
    return 0


def cmd_runtimes(cfg: RunConfig) -> int:
    if cfg.spec is None:
        raise UsageError("runtimes needs a bipartite layout")
    spec = cfg.spec
    if cfg.sweep_axis is None:
        values = [spec.k1]
    else:
        lo, hi = cfg.sweep_range
        cap = spec.n1 if cfg.sweep_axis == "k1" else spec.n2
        if lo < 0 or hi < lo or hi > cap:
            raise UsageError(f"sweep range must satisfy 0 <= min <= max <= {cap}")
        values = list(range(lo, hi + 1))
    lines = ["sweep_key,t_La,t_Lb,t_A,t_Qa,t_Qb,fastest,near_regular_flag"]
    for value in values:
        if cfg.sweep_axis == "k2":
            k1, k2 = spec.k1, value
        elif cfg.sweep_axis == "k1":
            k1, k2 = value, spec.k2
        else:
            k1, k2 = spec.k1, spec.k2
        if k1 + k2 == 0:
            print(
                f"warning: skipping sweep_key={value}: no marked vertices",
                file=sys.stderr,
            )
            continue
        candidate = BipartiteSpec(spec.n1, spec.n2, k1, k2)
        table = runtime_table(candidate)
        regime = fastest_regime(candidate)
        runtimes = [
            "" if t is None else _fmt(t)
            for t in (table.t_la, table.t_lb, table.t_a, table.t_qa, table.t_qb)
        ]
        lines.append(
            f"{value},{','.join(runtimes)},{regime.fastest.value},"
            f"{1 if regime.near_regular else 0}"
        )
    _emit(lines, cfg.out)
    return 0


_EXPECTED_CLASS = {
    0.0: WalkKind.ADJACENCY,
    1.0: WalkKind.LAPLACIAN,
    -1.0: WalkKind.SIGNLESS_LAPLACIAN,
}


def cmd_verify_spin(cfg: RunConfig) -> int:
    if cfg.jz_ratio is None:
        raise UsageError("verify-spin needs --jz-ratio")
    gamma = float(cfg.gamma) if cfg.gamma is not None else 1.0
    graph = read_edge_list(cfg.graph_path) if cfg.graph_path else demo_graph()
    ratio = float(cfg.jz_ratio)
    couplings = CouplingConstants(jx=gamma, jy=gamma, jz=ratio * gamma)
    kind, deviation = certify_walk_equivalence(graph, couplings)
    expected = _EXPECTED_CLASS.get(ratio)
    passed = expected is not None and kind is expected
    print(f"classification={kind.value if kind else 'other'}")
    print(f"max_deviation={_fmt(deviation)}")
    print(f"expected={expected.value if expected else 'none'}")
    print(f"result={'PASS' if passed else 'FAIL'}")
    return 0 if passed else 2


# ---------------------------------------------------------------------------
# argument parsing


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # exit status 1 instead of argparse's 2
        raise UsageError(message)


def _add_instance_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n1", type=int)
    p.add_argument("--n2", type=int)
    p.add_argument("--k1", type=int)
    p.add_argument("--k2", type=int)
    p.add_argument("--graph", help="edge-list file: 'n m' header then 'i j' lines")
    p.add_argument("--marked", help="comma-separated marked vertices (edge-list runs)")
    p.add_argument("--walk", choices=sorted(_WALKS))


def _add_io_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="flat key=value file; flags override it")
    p.add_argument("--out", help="CSV output path (default: stdout)")


def _add_time_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tmax", type=float)
    p.add_argument("--samples", type=int)
    p.add_argument("--mode", choices=["reduced", "full"])


def _add_gamma_range_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--gamma", type=float)
    p.add_argument("--gamma-min", dest="gamma_min", type=float)
    p.add_argument("--gamma-max", dest="gamma_max", type=float)
    p.add_argument("--gamma-count", dest="gamma_count", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qwsearch", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="success-probability curve over time")
    _add_instance_flags(p)
    _add_io_flags(p)
    _add_time_flags(p)
    p.add_argument("--init", choices=sorted(_INITS))
    p.add_argument("--gamma", type=float)
    p.set_defaults(handler=cmd_simulate)

    p = sub.add_parser("sweep-gamma", help="peak success probability per gamma")
    _add_instance_flags(p)
    _add_io_flags(p)
    _add_time_flags(p)
    p.add_argument("--init", choices=sorted(_INITS))
    _add_gamma_range_flags(p)
    p.set_defaults(handler=cmd_sweep_gamma)

    p = sub.add_parser("overlaps", help="eigenvector overlap profile per gamma")
    _add_instance_flags(p)
    _add_io_flags(p)
    p.add_argument("--mode", choices=["reduced", "full"])
    p.add_argument("--probe", choices=list(_PROBES))
    _add_gamma_range_flags(p)
    p.set_defaults(handler=cmd_overlaps)

    p = sub.add_parser("runtimes", help="runtime table and fastest-walk labels")
    _add_instance_flags(p)
    _add_io_flags(p)
    p.add_argument("--sweep", choices=["k1", "k2"])
    p.add_argument("--sweep-min", dest="sweep_min", type=int)
    p.add_argument("--sweep-max", dest="sweep_max", type=int)
    p.set_defaults(handler=cmd_runtimes)

    p = sub.add_parser("verify-spin", help="certify the spin-network walk class")
    _add_io_flags(p)
    p.add_argument("--graph", help="edge-list file (default: builtin demo graph)")
    p.add_argument("--jz-ratio", dest="jz_ratio", type=float)
    p.add_argument("--gamma", type=float)
    p.set_defaults(handler=cmd_verify_spin)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = _build_config(args)
        return args.handler(cfg)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
