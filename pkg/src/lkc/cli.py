"""Command line front end for lossy Kitaev chain computations.

Runs are driven by a single TOML config file: a [model] table holding
the chain parameterization (couplings = [{r, J, Delta}], u, v), a [run]
table (out, workers), and one optional table per subcommand holding its
numeric knobs.  Any scalar field can be overridden on the command line
with --set path=value, so a committed config plus the invocation fully
determines a run.

Each run writes <out>/<command>/<timestamp>/data.csv plus a
manifest.json listing every output file with a SHA-256 hash.  CSV reals
use '.' decimals, no thousands separators, and shortest round-trip
notation (at most 17 significant digits), so files re-read exactly.
Identical configs produce byte-identical CSVs regardless of the worker
count: workers only distribute independent cells, results are placed by
index, and BLAS pools are pinned to one thread.

Exit status: 0 on success, 1 on configuration or I/O errors, 2 when
individual cells of a sweep failed (itemized in the manifest).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from threadpoolctl import threadpool_limits

from . import __version__
from .analysis import (
    compute_phase_cell,
    compute_scan_point,
    default_l_values,
    detect_kinks,
)
from .dynamics import assemble_correlator
from .entanglement import ee_time_series
from .errors import ConfigError, GaplessError, IoError, LkcError, NonConvergence
from .model import (
    ChainSpec,
    Coupling,
    band_energy,
    bloch_field,
    momentum_grid,
    obc_spectrum,
)
from .topology import (
    compute_topo_cell,
    nn_critical_loss,
    nnn_boundaries,
    winding_number,
)

COMMANDS = (
    "spectrum",
    "winding",
    "topo-diagram",
    "evolve-ee",
    "ee-scaling",
    "ee-diagram",
    "validate",
)


# ---------------------------------------------------------------- config


def _load_config(path: str) -> dict:
    try:
        with open(path, "rb") as fh:
            return tomllib.load(fh)
    except FileNotFoundError:
        raise ConfigError(f"config file not found: {path}")
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"config file {path} is not valid TOML: {exc}")


def _apply_set(cfg: dict, assignment: str) -> None:
    """Apply one --set path=value override, parsing value as TOML."""
    if "=" not in assignment:
        raise ConfigError(f"--set expects path=value, got {assignment!r}")
    path, raw = assignment.split("=", 1)
    keys = [k for k in path.strip().split(".") if k]
    if not keys:
        raise ConfigError(f"--set has an empty path: {assignment!r}")
    try:
        value = tomllib.loads(f"v = {raw}")["v"]
    except tomllib.TOMLDecodeError:
        value = raw  # bare word, keep as string
    node = cfg
    for key in keys[:-1]:
        node = node.setdefault(key, {})
        if not isinstance(node, dict):
            raise ConfigError(f"--set path {path!r} passes through a scalar")
    node[keys[-1]] = value


def _spec_from_config(cfg: dict) -> ChainSpec:
    model = cfg.get("model")
    if not isinstance(model, dict):
        raise ConfigError("config needs a [model] table")
    raw = model.get("couplings")
    if not isinstance(raw, list) or not raw:
        raise ConfigError("[model] needs couplings = [{r, J, Delta}, ...]")
    try:
        couplings = tuple(
            Coupling(int(c["r"]), float(c["J"]), float(c["Delta"])) for c in raw
        )
        return ChainSpec(
            couplings=couplings,
            u=float(model.get("u", 0.0)),
            v=float(model.get("v", 0.0)),
        )
    except (KeyError, TypeError) as exc:
        raise ConfigError(f"bad coupling entry in [model]: {exc}")
    except ValueError as exc:
        raise ConfigError(f"invalid model parameters: {exc}")


def _resolve_workers(cfg: dict, args) -> int:
    value = cfg.get("run", {}).get("workers", 1)
    env = os.environ.get("LKC_WORKERS")
    if env is not None:
        try:
            value = int(env)
        except ValueError:
            raise ConfigError(f"LKC_WORKERS must be an integer, got {env!r}")
    if getattr(args, "workers", None) is not None:
        value = args.workers
    try:
        workers = int(value)
    except (TypeError, ValueError):
        raise ConfigError(f"workers must be a positive integer, got {value!r}")
    if workers < 1:
        raise ConfigError(f"workers must be a positive integer, got {workers}")
    return workers


def _even_int(tab: dict, key: str, default: int, *, where: str) -> int:
    value = tab.get(key, default)
    try:
        n = int(value)
    except (TypeError, ValueError):
        raise ConfigError(f"[{where}] {key} must be an even integer, got {value!r}")
    if n != value or n < 4 or n % 2:
        raise ConfigError(f"[{where}] {key} must be an even integer >= 4, got {value!r}")
    return n


def _positive(tab: dict, key: str, default: float, *, where: str) -> float:
    value = tab.get(key, default)
    try:
        x = float(value)
    except (TypeError, ValueError):
        raise ConfigError(f"[{where}] {key} must be a positive number, got {value!r}")
    if not np.isfinite(x) or x <= 0:
        raise ConfigError(f"[{where}] {key} must be a positive number, got {value!r}")
    return x


def _grid_values(tab: dict, name: str, *, where: str, positive: bool = False) -> list[float]:
    """A sweep axis: explicit <name>_values, or <name>_min/_max/_step."""
    if f"{name}_values" in tab:
        try:
            values = [float(x) for x in tab[f"{name}_values"]]
        except (TypeError, ValueError):
            raise ConfigError(f"[{where}] {name}_values must be a list of numbers")
    elif f"{name}_min" in tab and f"{name}_max" in tab:
        lo = float(tab[f"{name}_min"])
        hi = float(tab[f"{name}_max"])
        step = _positive(tab, f"{name}_step", 0.05, where=where)
        if hi < lo:
            raise ConfigError(f"[{where}] {name}_max must be >= {name}_min")
        count = int(round((hi - lo) / step)) + 1
        values = [lo + i * step for i in range(count)]
        while values and values[-1] > hi + step / 2:
            values.pop()
    else:
        raise ConfigError(
            f"[{where}] needs {name}_values or {name}_min/{name}_max/{name}_step"
        )
    if not values:
        raise ConfigError(f"[{where}] {name} grid is empty")
    if positive and any(x <= 0 for x in values):
        raise ConfigError(f"[{where}] {name} grid must be strictly positive")
    return values


def _int(tab: dict, key: str, default: int, *, where: str) -> int:
    value = tab.get(key, default)
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise ConfigError(f"[{where}] {key} must be an integer, got {value!r}")
    return int(value)


def _l_values(tab: dict, L: int, *, where: str) -> list[int]:
    if "l_values" in tab:
        try:
            ls = [int(x) for x in tab["l_values"]]
        except (TypeError, ValueError):
            raise ConfigError(f"[{where}] l_values must be a list of integers")
        if any(not 8 <= l <= L // 2 for l in ls):
            raise ConfigError(f"[{where}] l_values must lie in [8, L/2]")
        return ls
    ls = default_l_values(L)
    if not ls:
        raise ConfigError(f"[{where}] L = {L} leaves no usable subsystem sizes")
    return ls


# ---------------------------------------------------------------- output


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        return repr(float(x))
    return str(x)


def _write_text(path: Path, text: str) -> dict:
    try:
        path.write_text(text)
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}")
    data = path.read_bytes()
    return {
        "path": path.name,
        "sha256": hashlib.sha256(data).hexdigest(),
        "bytes": len(data),
    }


def _csv_text(header: list[str], rows) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(_fmt(x) for x in row) for row in rows)
    return "\n".join(lines) + "\n"


def _run_dir(out_root: str, command: str) -> Path:
    base = Path(out_root) / command
    stamp = datetime.now(timezone.utc).strftime("%Y%m%dT%H%M%S_%f")
    for attempt in range(1000):
        candidate = base / (stamp if attempt == 0 else f"{stamp}_{attempt}")
        try:
            candidate.mkdir(parents=True, exist_ok=False)
            return candidate
        except FileExistsError:
            continue
        except OSError as exc:
            raise IoError(f"cannot create output directory {candidate}: {exc}")
    raise IoError(f"cannot create a fresh output directory under {base}")


def _map_cells(fn, items, workers: int) -> list:
    """Apply fn to every item, preserving order; results placed by index."""
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


# ---------------------------------------------------------------- commands


def _cmd_spectrum(spec: ChainSpec, tab: dict, ctx: dict):
    boundary = str(tab.get("boundary", "PBC")).upper()
    if boundary not in ("PBC", "OBC"):
        raise ConfigError(f"[spectrum] boundary must be PBC or OBC, got {boundary!r}")
    L = _even_int(tab, "L", 256, where="spectrum")
    params = {"L": L, "boundary": boundary}
    if boundary == "PBC":
        ks = momentum_grid(L)
        f = bloch_field(spec, ks)
        E = band_energy(spec, ks)
        header = ["k", "h_y", "re_h_z", "im_h_z", "re_E", "im_E"]
        rows = [
            (ks[j], float(f.h_y[j]), f.h_z[j].real, f.h_z[j].imag, E[j].real, E[j].imag)
            for j in range(L)
        ]
    else:
        zero_tol = _positive(tab, "zero_tol", 1e-4, where="spectrum")
        params["zero_tol"] = zero_tol
        result = obc_spectrum(spec, L, zero_tol=zero_tol)
        zero_set = {i for i, _ in result.zero_modes}
        header = ["index", "re_E", "im_E", "is_zero_mode", "edge_weight"]
        rows = [
            (i, ev.real, ev.imag, i in zero_set, float(result.edge_weights[i]))
            for i, ev in enumerate(result.eigenvalues)
        ]
        params["zero_mode_count"] = len(zero_set)
    return header, rows, [], params


def _cmd_winding(spec: ChainSpec, tab: dict, ctx: dict):
    initial_grid = _int(tab, "initial_grid", 256, where="winding")
    gap_tol = _positive(tab, "gap_tol", 1e-8, where="winding")
    params = {"initial_grid": initial_grid, "gap_tol": gap_tol}
    header = ["u", "v", "w", "n_plus", "n_minus", "grid_points", "min_gap", "status"]
    failures = []
    try:
        res = winding_number(spec, initial_grid=initial_grid, gap_tol=gap_tol)
        row = (
            spec.u, spec.v, int(round(res.w)), res.n_plus, res.n_minus,
            res.grid_points, res.min_gap, "ok",
        )
    except GaplessError as exc:
        row = (spec.u, spec.v, None, None, None, None, None, "boundary")
        params["detail"] = str(exc)
    except NonConvergence as exc:
        row = (spec.u, spec.v, None, None, None, None, None, "error")
        failures.append(
            {"cell": {"u": spec.u, "v": spec.v}, "error": "NonConvergence",
             "detail": str(exc)}
        )
    return header, [row], failures, params


def _cmd_topo_diagram(spec: ChainSpec, tab: dict, ctx: dict):
    us = _grid_values(tab, "u", where="topo-diagram")
    vs = _grid_values(tab, "v", where="topo-diagram", positive=True)
    initial_grid = _int(tab, "initial_grid", 256, where="topo-diagram")
    gap_tol = _positive(tab, "gap_tol", 1e-8, where="topo-diagram")
    params = {
        "u_grid": us, "v_grid": vs,
        "initial_grid": initial_grid, "gap_tol": gap_tol,
    }
    items = [(u, v) for u in us for v in vs]

    def cell(uv):
        return compute_topo_cell(spec, uv[0], uv[1], initial_grid, gap_tol)

    cells = _map_cells(cell, items, ctx["workers"])
    header = ["u", "v", "w", "min_gap", "status"]
    rows = []
    failures = []
    for c in cells:
        w = None if c.w is None else int(round(c.w))
        rows.append((c.u, c.v, w, c.min_gap, c.status))
        if c.status == "error":
            failures.append(
                {"cell": {"u": c.u, "v": c.v}, "error": "NonConvergence",
                 "detail": c.detail}
            )
    return header, rows, failures, params


def _cmd_evolve_ee(spec: ChainSpec, tab: dict, ctx: dict):
    L = _even_int(tab, "L", 400, where="evolve-ee")
    l = _int(tab, "l", L // 4, where="evolve-ee")
    if not 1 <= l < L:
        raise ConfigError(f"[evolve-ee] l must lie in [1, L), got {l}")
    if "times" in tab:
        try:
            times = [float(t) for t in tab["times"]]
        except (TypeError, ValueError):
            raise ConfigError("[evolve-ee] times must be a list of numbers")
    else:
        t_max = _positive(tab, "t_max", 100.0, where="evolve-ee")
        samples = _int(tab, "samples", 51, where="evolve-ee")
        if samples < 2:
            raise ConfigError("[evolve-ee] samples must be at least 2")
        times = [float(t) for t in np.linspace(0.0, t_max, samples)]
    if not times or times[0] != 0.0 or any(b <= a for a, b in zip(times, times[1:])):
        raise ConfigError("[evolve-ee] times must be ascending and start at 0")
    steady_tol = _positive(tab, "steady_tol", 1e-6, where="evolve-ee")
    series = ee_time_series(spec, L, l, times, steady_tol=steady_tol)
    header = ["t", "S", "l", "L", "u", "v"]
    rows = [(t, s, l, L, spec.u, spec.v) for t, s in zip(series.times, series.values)]
    params = {
        "L": L, "l": l, "times": times, "steady_tol": steady_tol,
        "converged": series.converged, "final_value": float(series.final_value),
    }
    dump = bool(tab.get("dump_correlator", False)) or ctx.get("dump_correlator", False)
    extra_files = []
    if dump:
        matrix = assemble_correlator(spec, L, times[-1]).assembled
        lines = []
        for row in matrix:
            lines.append(",".join(f"{float(z.real)!r},{float(z.imag)!r}" for z in row))
        extra_files.append(("correlator.csv", "\n".join(lines) + "\n"))
        params["correlator_time"] = times[-1]
    return header, rows, [], params, extra_files


def _cmd_ee_scaling(spec: ChainSpec, tab: dict, ctx: dict):
    L = _even_int(tab, "L", 400, where="ee-scaling")
    vs = _grid_values(tab, "v", where="ee-scaling", positive=True)
    l_values = _l_values(tab, L, where="ee-scaling")
    T = _positive(tab, "T", 2000.0, where="ee-scaling")
    steady_tol = _positive(tab, "steady_tol", 1e-6, where="ee-scaling")
    max_doublings = _int(tab, "max_doublings", 8, where="ee-scaling")
    params = {
        "u": spec.u, "L": L, "v_grid": vs, "l_values": l_values, "T": T,
        "steady_tol": steady_tol, "max_doublings": max_doublings,
    }

    def point(v):
        try:
            return compute_scan_point(
                spec, spec.u, v, L, l_values,
                T=T, steady_tol=steady_tol, max_doublings=max_doublings,
            )
        except LkcError as exc:
            return (v, type(exc).__name__, str(exc))

    results = _map_cells(point, vs, ctx["workers"])
    header = ["v", "g", "intercept", "r2", "converged"]
    rows = []
    failures = []
    good = []
    for v, res in zip(vs, results):
        if isinstance(res, tuple):
            rows.append((v, None, None, None, False))
            failures.append({"cell": {"v": v}, "error": res[1], "detail": res[2]})
        else:
            rows.append((res.v, res.g, res.intercept, res.r_squared, res.converged))
            good.append(res)
    if not failures:
        params["kinks"] = detect_kinks(vs, [p.g for p in good])
    return header, rows, failures, params


def _nn_pattern(spec: ChainSpec):
    cs = sorted(spec.couplings)
    if [c.r for c in cs] == [1] and cs[0].J != 0 and cs[0].Delta != 0:
        return lambda u: nn_critical_loss(cs[0].J, cs[0].Delta, u).critical_rates
    if [c.r for c in cs] == [1, 2] and cs[1].J != 0:
        return lambda u: nnn_boundaries(
            cs[0].J, cs[1].J, cs[0].Delta, cs[1].Delta, u
        ).critical_rates
    return None


def _cmd_ee_diagram(spec: ChainSpec, tab: dict, ctx: dict):
    L = _even_int(tab, "L", 400, where="ee-diagram")
    us = _grid_values(tab, "u", where="ee-diagram")
    vs = _grid_values(tab, "v", where="ee-diagram", positive=True)
    l_values = _l_values(tab, L, where="ee-diagram")
    T = _positive(tab, "T", 2000.0, where="ee-diagram")
    g_threshold = _positive(tab, "g_threshold", 0.02, where="ee-diagram")
    steady_tol = _positive(tab, "steady_tol", 1e-6, where="ee-diagram")
    max_doublings = _int(tab, "max_doublings", 8, where="ee-diagram")
    mode = str(tab.get("boundaries", "auto"))
    if mode not in ("auto", "none"):
        raise ConfigError(f"[ee-diagram] boundaries must be auto or none, got {mode!r}")
    boundaries = _nn_pattern(spec) if mode == "auto" else None
    params = {
        "L": L, "u_grid": us, "v_grid": vs, "l_values": l_values, "T": T,
        "g_threshold": g_threshold, "steady_tol": steady_tol,
        "max_doublings": max_doublings,
        "boundaries": "analytic" if boundaries is not None else "none",
        "determinism": "seed-free; identical configs yield identical CSV bytes",
    }
    v_step = min(b - a for a, b in zip(vs, vs[1:])) if len(vs) > 1 else np.inf
    crit = {u: boundaries(u) if boundaries is not None else () for u in us}
    items = [(u, v) for u in us for v in vs]

    def cell(uv):
        u, v = uv
        try:
            return compute_phase_cell(
                spec, u, v, L, l_values,
                T=T, g_threshold=g_threshold, steady_tol=steady_tol,
                max_doublings=max_doublings,
                critical_rates=crit[u], v_step=v_step,
            )
        except LkcError as exc:
            return (type(exc).__name__, str(exc))

    results = _map_cells(cell, items, ctx["workers"])
    header = ["u", "v", "g", "r2", "phase"]
    rows = []
    failures = []
    for (u, v), res in zip(items, results):
        if isinstance(res, tuple):
            rows.append((u, v, None, None, "Error"))
            failures.append(
                {"cell": {"u": u, "v": v}, "error": res[0], "detail": res[1]}
            )
        else:
            rows.append((res.u, res.v, res.g, res.r_squared, res.phase))
    return header, rows, failures, params


_HANDLERS = {
    "spectrum": _cmd_spectrum,
    "winding": _cmd_winding,
    "topo-diagram": _cmd_topo_diagram,
    "evolve-ee": _cmd_evolve_ee,
    "ee-scaling": _cmd_ee_scaling,
    "ee-diagram": _cmd_ee_diagram,
}


_TABLE_KEYS = {
    "model": {"couplings", "u", "v"},
    "run": {"out", "workers"},
    "spectrum": {"L", "boundary", "zero_tol"},
    "winding": {"initial_grid", "gap_tol"},
    "topo-diagram": {
        "initial_grid", "gap_tol",
        "u_values", "u_min", "u_max", "u_step",
        "v_values", "v_min", "v_max", "v_step",
    },
    "evolve-ee": {
        "L", "l", "times", "t_max", "samples", "steady_tol", "dump_correlator",
    },
    "ee-scaling": {
        "L", "l_values", "T", "steady_tol", "max_doublings",
        "v_values", "v_min", "v_max", "v_step",
    },
    "ee-diagram": {
        "L", "l_values", "T", "g_threshold", "steady_tol", "max_doublings",
        "boundaries",
        "u_values", "u_min", "u_max", "u_step",
        "v_values", "v_min", "v_max", "v_step",
    },
}


def _validate_tables(cfg: dict) -> None:
    """Schema checks shared by validate and every run.

    Unknown tables and keys are rejected rather than ignored so that a
    mistyped --set override fails loudly instead of silently running the
    defaults.
    """
    declared = cfg.get("command")
    if declared is not None and declared not in COMMANDS:
        raise ConfigError(f"unknown command {declared!r} in config")
    for where, tab in cfg.items():
        if where == "command":
            continue
        if where not in _TABLE_KEYS:
            raise ConfigError(f"unknown config table [{where}]")
        if not isinstance(tab, dict):
            raise ConfigError(f"{where} must be a table, got {tab!r}")
        for key, value in tab.items():
            if key not in _TABLE_KEYS[where]:
                raise ConfigError(f"unknown key {key!r} in [{where}]")
            if key.endswith("tol") or key == "g_threshold":
                _positive(tab, key, 1.0, where=where)
            if key == "L":
                _even_int(tab, key, 4, where=where)
            if key == "workers":
                if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                    raise ConfigError("[run] workers must be a positive integer")


def _cmd_validate(cfg: dict, spec: ChainSpec, workers: int, out_root: str) -> int:
    resolved = {
        "model": {
            "couplings": [
                {"r": c.r, "J": c.J, "Delta": c.Delta} for c in spec.couplings
            ],
            "u": spec.u,
            "v": spec.v,
        },
        "run": {"out": out_root, "workers": workers},
    }
    for name in COMMANDS:
        if name in cfg and isinstance(cfg[name], dict):
            resolved[name] = cfg[name]
    print(json.dumps(resolved, indent=2, sort_keys=True))
    return 0


# ---------------------------------------------------------------- driver


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lkc",
        description="Lossy Kitaev chains: spectra, winding numbers, entanglement.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, help=f"run the {name} pipeline")
        p.add_argument("config", help="TOML config file")
        p.add_argument(
            "--set", action="append", default=[], metavar="PATH=VALUE",
            help="override a config field, e.g. --set model.v=0.4",
        )
        p.add_argument("--workers", type=int, default=None, help="worker threads")
        p.add_argument("--out", default=None, help="output root directory")
        if name == "evolve-ee":
            p.add_argument(
                "--dump-correlator", action="store_true",
                help="also write the full 2Lx2L correlator (debugging)",
            )
    return parser


def _dispatch(args) -> int:
    cfg = _load_config(args.config)
    for assignment in args.set:
        _apply_set(cfg, assignment)
    _validate_tables(cfg)
    declared = cfg.get("command")
    if declared is not None and declared != args.command:
        raise ConfigError(
            f"config declares command {declared!r} but {args.command!r} was invoked"
        )
    spec = _spec_from_config(cfg)
    workers = _resolve_workers(cfg, args)
    out_root = args.out or cfg.get("run", {}).get("out", "runs")

    if args.command == "validate":
        return _cmd_validate(cfg, spec, workers, out_root)

    ctx = {
        "workers": workers,
        "dump_correlator": getattr(args, "dump_correlator", False),
    }
    handler = _HANDLERS[args.command]
    with threadpool_limits(limits=1):
        result = handler(spec, cfg.get(args.command, {}), ctx)
    header, rows, failures, params = result[:4]
    extra_files = result[4] if len(result) > 4 else []

    run_dir = _run_dir(out_root, args.command)
    outputs = [_write_text(run_dir / "data.csv", _csv_text(header, rows))]
    for name, text in extra_files:
        outputs.append(_write_text(run_dir / name, text))
    manifest = {
        "command": args.command,
        "version": __version__,
        "timestamp": datetime.now(timezone.utc).isoformat(),
        "workers": workers,
        "config": cfg,
        "parameters": params,
        "columns": header,
        "outputs": outputs,
        "failures": failures,
    }
    _write_text(run_dir / "manifest.json", json.dumps(manifest, indent=2, sort_keys=True))
    print(f"wrote {run_dir / 'data.csv'}")
    if failures:
        print(f"{len(failures)} cell(s) failed; see manifest.json", file=sys.stderr)
        return 2
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 1
    except IoError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 1
    except LkcError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
