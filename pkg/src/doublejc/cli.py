"""Command-line front end: grid sweeps, closed-form comparisons, benchmark.

Subcommands
-----------
``sweep <config>``
    Evaluate entanglement measures over an (alpha, gt) grid and write one
    CSV row per grid point (two when measurement-interrupted dynamics is
    requested: the free-dynamics row first, then the projected row, which
    carries a success probability).  Row order is deterministic:
    alpha-major, then gt, then pair, then measure.
``compare <config>``
    Run the same sweep, then report per-formula deviations between the
    numeric pipeline and the closed forms, flagging every point beyond the
    reporting threshold and naming the negativity convention that matches
    each closed form best.
``bench``
    Time the cached spectral propagator against a per-call dense matrix
    exponential (scaling-and-squaring) over many evolve calls.
``preset <name>``
    Run one of the configs shipped with the package (fig2 .. fig8), which
    reproduce the reference curves/surfaces.

Config files are flat ``key = value`` text; every key can be overridden by
a command-line flag of the same name.  Angles accept decimal radians or
``pi`` fractions (``pi/4``, ``3pi/2``); grids are ``start:stop:count``.
Exit codes: 0 success, 1 config error, 2 numeric-vs-analytic deviation
above the configured ``fail_threshold`` (off by default).

CSV output is gnuplot-compatible: every header line, including the column
list, is a ``#`` comment; data rows carry 17-significant-digit floats that
round-trip exactly.  Rerunning an identical config reproduces the file
byte for byte.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import analytic
from .dynamics import Propagator, reduced_density, zeno_evolve
from .linalg import DensityMatrix, StateVector, truncate_subsystem
from .measures import concurrence_general, concurrence_x, negativity
from .model import (
    InitialCondition,
    ModelParams,
    build_hamiltonian,
    build_initial_state,
    build_layout,
    zeno_projector,
)

__all__ = [
    "ConfigError",
    "ScenarioConfig",
    "SeriesRecord",
    "parse_angle",
    "load_config",
    "resolve_config",
    "run_sweep",
    "write_csv",
    "report_discrepancies",
    "bench_propagator",
    "main",
]

PAIRS = ("AB", "ab", "Aa", "Ab")
MEASURES = ("concurrence_x", "concurrence_general", "negativity_min", "negativity_sum")
_PAIR_KEEP = {"AB": ("A", "B"), "ab": ("a", "b"), "Aa": ("A", "a"), "Ab": ("A", "b")}

CONFIG_KEYS = (
    "scenario",
    "alpha",
    "g",
    "omega",
    "nu",
    "n_max",
    "t_grid",
    "zeno_n",
    "pairs",
    "measures",
    "output_path",
    "fail_threshold",
)

FLAG_THRESHOLD = 1e-6


class ConfigError(ValueError):
    """Bad configuration; the message carries line/field diagnostics."""


_PI_RE = re.compile(r"^([+-]?\d*\.?\d*)\s*\*?\s*pi\s*(?:/\s*(\d+\.?\d*))?$", re.IGNORECASE)


def parse_angle(token: str) -> float:
    """Parse decimal radians or a pi fraction such as ``pi/4`` or ``3pi/2``."""
    token = token.strip()
    try:
        return float(token)
    except ValueError:
        pass
    m = _PI_RE.match(token)
    if not m:
        raise ConfigError(f"cannot parse angle {token!r}")
    coef_s, den_s = m.groups()
    if coef_s in ("", "+"):
        coef = 1.0
    elif coef_s == "-":
        coef = -1.0
    else:
        coef = float(coef_s)
    den = float(den_s) if den_s else 1.0
    if den == 0:
        raise ConfigError(f"zero denominator in angle {token!r}")
    return coef * np.pi / den


def _parse_grid(token: str, field: str) -> tuple[float, float, int]:
    parts = token.split(":")
    if len(parts) != 3:
        raise ConfigError(f"{field}: expected start:stop:count, got {token!r}")
    start, stop = parse_angle(parts[0]), parse_angle(parts[1])
    try:
        count = int(parts[2])
    except ValueError:
        raise ConfigError(f"{field}: count {parts[2]!r} is not an integer") from None
    if count < 2:
        raise ConfigError(f"{field}: grid count must be >= 2, got {count}")
    return start, stop, count


@dataclass(frozen=True)
class ScenarioConfig:
    """Fully resolved sweep configuration."""

    scenario: str
    alpha: float | tuple[float, float, int]
    g: float = 1.0
    omega: float = 1.0
    nu: float = 1.0
    n_max: int = 2
    t_grid: tuple[float, float, int] = (0.0, float(np.pi), 50)
    zeno_n: int | None = None
    pairs: tuple[str, ...] = ("AB",)
    measures: tuple[str, ...] = ("concurrence_x",)
    output_path: str = "sweep.csv"
    fail_threshold: float | None = None

    def alphas(self) -> np.ndarray:
        if isinstance(self.alpha, tuple):
            return np.linspace(*self.alpha)
        return np.array([self.alpha])

    def gts(self) -> np.ndarray:
        return np.linspace(*self.t_grid)

    def echo(self) -> str:
        """Deterministic one-line summary of every resolved key."""
        def fmt(v):
            if v is None:
                return ""
            if isinstance(v, tuple) and len(v) == 3 and isinstance(v[2], int):
                return f"{v[0]:.17g}:{v[1]:.17g}:{v[2]}"
            if isinstance(v, tuple):
                return ",".join(v)
            if isinstance(v, float):
                return f"{v:.17g}"
            return str(v)

        return " ".join(f"{k}={fmt(getattr(self, k))}" for k in sorted(CONFIG_KEYS))


# pairs whose reduced state stays inside the two lowest photon levels, by
# (scenario, interrupted-by-measurements?); only these admit a concurrence.
# A zeno sweep also emits the free-dynamics rows, so the pair must stay
# qubit-sized under both kinds of evolution.
_QUBIT_PAIRS = {
    ("ground", False): set(PAIRS),
    ("ground", True): set(PAIRS),
    ("excited", False): {"AB"},
    ("excited", True): {"AB"},
}


def _validate(config: ScenarioConfig) -> ScenarioConfig:
    if config.scenario not in ("ground", "excited"):
        raise ConfigError(f"scenario: must be 'ground' or 'excited', got {config.scenario!r}")
    if config.g <= 0:
        raise ConfigError("g: coupling must be positive")
    if config.omega < 0 or config.nu < 0:
        raise ConfigError("omega/nu: frequencies must be nonnegative")
    if config.n_max < 2:
        raise ConfigError(f"n_max: must be >= 2, got {config.n_max}")
    if config.t_grid[0] < 0:
        raise ConfigError(f"t_grid: start must be >= 0, got {config.t_grid[0]}")
    if config.zeno_n is not None and config.zeno_n < 1:
        raise ConfigError(f"zeno_n: must be >= 1, got {config.zeno_n}")
    if not config.pairs:
        raise ConfigError("pairs: at least one pair required")
    for p in config.pairs:
        if p not in PAIRS:
            raise ConfigError(f"pairs: unknown pair {p!r}, expected subset of {','.join(PAIRS)}")
    if not config.measures:
        raise ConfigError("measures: at least one measure required")
    for m in config.measures:
        if m not in MEASURES:
            raise ConfigError(f"measures: unknown measure {m!r}, expected subset of {','.join(MEASURES)}")
    if not config.output_path:
        raise ConfigError("output_path: must be nonempty")
    if config.fail_threshold is not None and config.fail_threshold <= 0:
        raise ConfigError("fail_threshold: must be positive when set")

    qubit_ok = _QUBIT_PAIRS[(config.scenario, config.zeno_n is not None)]
    for p in config.pairs:
        for m in config.measures:
            if m.startswith("concurrence") and p not in qubit_ok:
                raise ConfigError(
                    f"measures: {m} needs a two-qubit reduction, but pair {p} leaves the "
                    f"photon mode outside the two lowest levels in the {config.scenario} scenario"
                )
    return config


def _parse_value(key: str, raw: str, where: str):
    try:
        if key == "scenario":
            return raw
        if key == "alpha":
            return _parse_grid(raw, "alpha") if ":" in raw else parse_angle(raw)
        if key in ("g", "omega", "nu"):
            return float(raw)
        if key in ("n_max", "zeno_n"):
            return int(raw)
        if key == "t_grid":
            return _parse_grid(raw, "t_grid")
        if key in ("pairs", "measures"):
            return tuple(s.strip() for s in raw.split(",") if s.strip())
        if key == "output_path":
            return raw
        if key == "fail_threshold":
            return float(raw)
    except ConfigError as exc:
        raise ConfigError(f"{where}: {exc}") from None
    except ValueError:
        raise ConfigError(f"{where}: cannot parse {key} value {raw!r}") from None
    raise ConfigError(f"{where}: unknown key {key!r}")


def load_config(path: str | Path) -> dict[str, tuple[str, str]]:
    """Read a flat key=value config file into {key: (raw_value, where)}."""
    entries: dict[str, tuple[str, str]] = {}
    text = Path(path).read_text()
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path} line {lineno}: expected key = value, got {line!r}")
        key, raw = (s.strip() for s in line.split("=", 1))
        if key not in CONFIG_KEYS:
            raise ConfigError(f"{path} line {lineno}: unknown key {key!r}")
        entries[key] = (raw, f"{path} line {lineno}")
    return entries


def resolve_config(entries: dict[str, tuple[str, str]]) -> ScenarioConfig:
    """Build and validate a ScenarioConfig from raw key/value entries."""
    for required in ("scenario", "alpha", "t_grid"):
        if required not in entries:
            raise ConfigError(f"missing required key {required!r}")
    kwargs = {}
    for key, (raw, where) in entries.items():
        kwargs[key] = _parse_value(key, raw, where)
    return _validate(ScenarioConfig(**kwargs))


@dataclass(frozen=True)
class SeriesRecord:
    """One sampled point of an entanglement curve."""

    alpha: float
    gt: float
    pair: str
    measure: str
    numeric: float
    analytic: float | None = None
    success_prob: float | None = None

    @property
    def abs_dev(self) -> float | None:
        if self.analytic is None:
            return None
        return abs(self.numeric - self.analytic)


def measure_reduced(rho: DensityMatrix, measure: str) -> float:
    """Apply one measure to a reduced state, compacting modes when needed."""
    if measure.startswith("concurrence"):
        mat, layout = rho.mat, rho.layout
        for label, d in zip(layout.labels, layout.dims):
            if d > 2:
                mat, layout = truncate_subsystem(mat, layout, label, 2)
        if layout.dim != 4:
            raise ValueError(f"cannot reduce pair {rho.layout.labels} to two qubits")
        if measure == "concurrence_x":
            return concurrence_x(mat)
        return concurrence_general(mat)
    if measure == "negativity_min":
        return negativity(rho.mat, rho.layout, 0, "min")
    if measure == "negativity_sum":
        return negativity(rho.mat, rho.layout, 0, "sum")
    raise ValueError(f"unknown measure {measure!r}")


def _analytic_value(config: ScenarioConfig, interrupted: bool, pair: str, measure: str,
                    alpha: float, gt: float) -> float | None:
    """Closed-form value for one record, or None where no form applies."""
    if config.omega != config.nu:
        return None  # closed forms hold at resonance only
    g, t = config.g, gt / config.g
    conc = measure.startswith("concurrence")
    if not interrupted:
        if config.scenario == "ground" and conc:
            return float(getattr(analytic.ground_concurrences(alpha, g, t), pair))
        if config.scenario == "excited":
            if pair == "AB" and conc:
                return float(analytic.excited_concurrence_AB(alpha, g, t))
            if pair == "Aa" and measure.startswith("negativity"):
                return float(analytic.excited_negativity_Aa(alpha, g, t))
            if pair == "Ab" and measure.startswith("negativity"):
                return float(analytic.excited_negativity_Ab(alpha, g, t))
        return None
    if config.scenario == "ground" and pair == "Ab" and conc:
        return float(analytic.zeno_ground_limit_Ab(alpha, g, t))
    if (config.scenario == "excited" and pair == "Ab" and measure.startswith("negativity")
            and config.omega == config.g):
        return float(analytic.zeno_excited_limit_Ab(alpha, g, t))
    return None


def run_sweep(config: ScenarioConfig) -> list[SeriesRecord]:
    """Evaluate the configured grid; deterministic record order.

    Records are ordered alpha-major, then gt, then pair, then measure.
    When ``zeno_n`` is set, each (pair, measure) point yields two adjacent
    records: free dynamics first (empty success probability), then the
    measurement-interrupted value, so overlay figures are self-contained in
    one file.
    """
    params = ModelParams(g=config.g, omega=config.omega, nu=config.nu, n_max=config.n_max)
    layout = build_layout(config.n_max)
    prop = Propagator(build_hamiltonian(params, layout), layout, params)
    projector = None
    if config.zeno_n is not None:
        projector = zeno_projector(layout, excited=config.scenario == "excited")

    gts = config.gts()
    ts_real = gts / config.g
    records: list[SeriesRecord] = []
    for alpha in config.alphas():
        psi0 = build_initial_state(InitialCondition(config.scenario, float(alpha)), layout)
        free = prop.evolve_grid(psi0, ts_real)
        for i, gt in enumerate(gts):
            psi = StateVector(free[i], layout)
            reduced = {p: reduced_density(psi, _PAIR_KEEP[p]) for p in config.pairs}
            zeno_reduced = {}
            success = None
            if projector is not None:
                zres = zeno_evolve(prop, projector, psi0, float(ts_real[i]), config.zeno_n)
                success = zres.success_probability
                zeno_reduced = {p: reduced_density(zres.state, _PAIR_KEEP[p]) for p in config.pairs}
            for pair in config.pairs:
                for measure in config.measures:
                    records.append(SeriesRecord(
                        alpha=float(alpha), gt=float(gt), pair=pair, measure=measure,
                        numeric=measure_reduced(reduced[pair], measure),
                        analytic=_analytic_value(config, False, pair, measure, float(alpha), float(gt)),
                    ))
                    if projector is not None:
                        records.append(SeriesRecord(
                            alpha=float(alpha), gt=float(gt), pair=pair, measure=measure,
                            numeric=measure_reduced(zeno_reduced[pair], measure),
                            analytic=_analytic_value(config, True, pair, measure, float(alpha), float(gt)),
                            success_prob=success,
                        ))
    return records


def _fmt_float(x: float | None) -> str:
    return "" if x is None else f"{x:.17g}"


def write_csv(records: list[SeriesRecord], config: ScenarioConfig, path: str | Path) -> None:
    """Write records as a gnuplot-compatible CSV (headers are # comments)."""
    lines = [
        "# doublejc sweep",
        f"# config: {config.echo()}",
        "# columns: alpha,gt,pair,measure,numeric,analytic,abs_dev,success_prob",
    ]
    for r in records:
        lines.append(",".join([
            _fmt_float(r.alpha),
            _fmt_float(r.gt),
            r.pair,
            r.measure,
            _fmt_float(r.numeric),
            _fmt_float(r.analytic),
            _fmt_float(r.abs_dev),
            _fmt_float(r.success_prob),
        ]))
    Path(path).write_text("\n".join(lines) + "\n")


def report_discrepancies(
    records: list[SeriesRecord],
    flag_threshold: float = FLAG_THRESHOLD,
) -> tuple[str, dict]:
    """Summarize numeric-vs-closed-form deviations per (pair, measure).

    Returns human-readable text and a machine-readable dict.  Every record
    whose deviation exceeds ``flag_threshold`` is itemized.  For pairs
    carrying the same closed form under both negativity conventions, the
    convention with the smaller worst-case deviation is named as the match.
    """
    groups: dict[tuple[str, str, bool], list[SeriesRecord]] = {}
    for r in records:
        if r.analytic is None:
            continue
        groups.setdefault((r.pair, r.measure, r.success_prob is not None), []).append(r)

    summary: dict = {"flag_threshold": flag_threshold, "groups": [], "conventions": []}
    lines = ["numeric vs closed-form comparison"]
    if not groups:
        lines.append("  (no records carry closed-form values)")
    for key in sorted(groups, key=lambda k: (k[0], k[1], k[2])):
        pair, measure, interrupted = key
        recs = groups[key]
        devs = np.array([r.abs_dev for r in recs])
        worst = recs[int(devs.argmax())]
        flagged = [r for r in recs if r.abs_dev > flag_threshold]
        tag = f"{pair}/{measure}" + ("/projected" if interrupted else "")
        lines.append(
            f"  {tag}: n={len(recs)} max_dev={devs.max():.3e} mean_dev={devs.mean():.3e}"
            f" worst at (alpha={worst.alpha:.6g}, gt={worst.gt:.6g})"
        )
        if flagged:
            lines.append(f"    {len(flagged)} points beyond {flag_threshold:.1e}:")
            for r in flagged[:10]:
                lines.append(
                    f"      alpha={r.alpha:.6g} gt={r.gt:.6g} numeric={r.numeric:.9g}"
                    f" analytic={r.analytic:.9g} dev={r.abs_dev:.3e}"
                )
            if len(flagged) > 10:
                lines.append(f"      ... ({len(flagged) - 10} more)")
        summary["groups"].append({
            "pair": pair,
            "measure": measure,
            "projected": interrupted,
            "n": len(recs),
            "max_abs_dev": float(devs.max()),
            "mean_abs_dev": float(devs.mean()),
            "worst_point": {"alpha": worst.alpha, "gt": worst.gt},
            "flagged": [
                {"alpha": r.alpha, "gt": r.gt, "numeric": r.numeric,
                 "analytic": r.analytic, "abs_dev": r.abs_dev}
                for r in flagged[:1000]
            ],
            "n_flagged": len(flagged),
        })

    # resolve which negativity convention each closed form matches
    by_pair: dict[tuple[str, bool], dict[str, float]] = {}
    for (pair, measure, interrupted), recs in groups.items():
        if measure in ("negativity_min", "negativity_sum"):
            by_pair.setdefault((pair, interrupted), {})[measure] = float(
                max(r.abs_dev for r in recs)
            )
    for (pair, interrupted), devs in sorted(by_pair.items()):
        if len(devs) == 2:
            best = min(devs, key=devs.get)
            tag = pair + ("/projected" if interrupted else "")
            lines.append(
                f"  convention match for {tag}: {best.removeprefix('negativity_')}"
                f" (max dev {devs[best]:.3e}; other {max(devs.values()):.3e})"
            )
            summary["conventions"].append({
                "pair": pair,
                "projected": interrupted,
                "matched": best.removeprefix("negativity_"),
                "max_abs_dev": devs[best],
                "other_max_abs_dev": max(devs.values()),
            })
    return "\n".join(lines), summary


def bench_propagator(
    n_calls: int = 10_000,
    params: ModelParams | None = None,
    output_path: str | Path | None = None,
    seed: int = 7,
) -> dict:
    """Time cached-spectral evolution against per-call scaling-and-squaring.

    Both strategies evolve the same state to the same random times; their
    final states are compared on a subsample.  The contract is the ordering
    (cached spectral beats per-call expm at many calls), not the absolute
    numbers.
    """
    from scipy.linalg import expm

    params = params or ModelParams()
    layout = build_layout(params.n_max)
    h = build_hamiltonian(params, layout)
    prop = Propagator(h, layout, params)
    psi0 = build_initial_state(InitialCondition("excited", np.pi / 4), layout)
    ts = np.random.default_rng(seed).uniform(0.0, 2.0 * np.pi, n_calls)

    t0 = time.perf_counter()
    for t in ts:
        prop.evolve(psi0, t)
    spectral_s = time.perf_counter() - t0

    t0 = time.perf_counter()
    for t in ts:
        expm(-1j * h * t) @ psi0.amps
    expm_s = time.perf_counter() - t0

    sample = ts[:: max(1, n_calls // 25)]
    diff = max(
        float(np.abs(prop.evolve(psi0, t).amps - expm(-1j * h * t) @ psi0.amps).max())
        for t in sample
    )
    result = {
        "calls": n_calls,
        "dim": layout.dim,
        "cached_spectral_s": spectral_s,
        "expm_per_call_s": expm_s,
        "cached_spectral_us_per_call": 1e6 * spectral_s / n_calls,
        "expm_us_per_call": 1e6 * expm_s / n_calls,
        "max_state_diff": diff,
    }
    if output_path is not None:
        lines = [
            "# doublejc propagator benchmark",
            f"# dim={layout.dim} calls={n_calls} max_state_diff={diff:.3e}",
            "# columns: strategy,calls,total_s,per_call_us",
            f"cached_spectral,{n_calls},{spectral_s:.17g},{result['cached_spectral_us_per_call']:.17g}",
            f"expm_per_call,{n_calls},{expm_s:.17g},{result['expm_us_per_call']:.17g}",
        ]
        Path(output_path).write_text("\n".join(lines) + "\n")
    return result


def _preset_path(name: str) -> Path:
    from importlib.resources import files

    path = files("doublejc").joinpath("presets", f"{name}.cfg")
    if not path.is_file():
        raise ConfigError(f"unknown preset {name!r}; expected one of fig2..fig8")
    return Path(str(path))


def _config_from_args(args) -> ScenarioConfig:
    path = Path(args.config)
    if not path.is_file() and re.fullmatch(r"fig[2-8]", args.config):
        path = _preset_path(args.config)  # allow `sweep fig5` / `compare fig7`
    entries = load_config(path)
    for key in CONFIG_KEYS:
        raw = getattr(args, key, None)
        if raw is not None:
            entries[key] = (raw, f"command-line flag --{key}")
    return resolve_config(entries)


def _max_deviation(records: list[SeriesRecord]) -> float:
    devs = [r.abs_dev for r in records if r.abs_dev is not None]
    return max(devs) if devs else 0.0


def _check_fail_threshold(config: ScenarioConfig, records: list[SeriesRecord]) -> int:
    if config.fail_threshold is not None:
        worst = _max_deviation(records)
        if worst > config.fail_threshold:
            print(
                f"deviation {worst:.3e} exceeds fail_threshold {config.fail_threshold:.3e}",
                file=sys.stderr,
            )
            return 2
    return 0


def _cmd_sweep(args) -> int:
    config = _config_from_args(args)
    records = run_sweep(config)
    write_csv(records, config, config.output_path)
    print(f"wrote {len(records)} records to {config.output_path}")
    return _check_fail_threshold(config, records)


def _cmd_compare(args) -> int:
    config = _config_from_args(args)
    records = run_sweep(config)
    write_csv(records, config, config.output_path)
    text, summary = report_discrepancies(records, flag_threshold=args.flag_threshold)
    print(text)
    report_path = args.report or str(Path(config.output_path).with_suffix(".report.json"))
    Path(report_path).write_text(json.dumps(summary, indent=2) + "\n")
    print(f"report written to {report_path}")
    return _check_fail_threshold(config, records)


def _cmd_bench(args) -> int:
    result = bench_propagator(n_calls=args.calls, output_path=args.output)
    print(f"dim {result['dim']}, {result['calls']} evolve calls")
    print(f"  cached spectral:   {result['cached_spectral_s']:9.4f} s "
          f"({result['cached_spectral_us_per_call']:9.2f} us/call)")
    print(f"  expm per call:     {result['expm_per_call_s']:9.4f} s "
          f"({result['expm_us_per_call']:9.2f} us/call)")
    print(f"  max state difference: {result['max_state_diff']:.3e}")
    return 0


def _cmd_preset(args) -> int:
    path = _preset_path(args.name)
    entries = load_config(path)
    if args.output_path is not None:
        entries["output_path"] = (args.output_path, "command-line flag --output_path")
    config = resolve_config(entries)
    records = run_sweep(config)
    write_csv(records, config, config.output_path)
    print(f"preset {args.name}: wrote {len(records)} records to {config.output_path}")
    return _check_fail_threshold(config, records)


def _add_override_flags(parser: argparse.ArgumentParser) -> None:
    for key in CONFIG_KEYS:
        parser.add_argument(f"--{key}", default=None, help=f"override config key {key}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="doublejc", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sweep", help="run an (alpha, gt) grid sweep and write CSV")
    p.add_argument("config", help="path to a key=value config file, or a preset name")
    _add_override_flags(p)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("compare", help="sweep, then report numeric-vs-closed-form deviations")
    p.add_argument("config", help="path to a key=value config file, or a preset name")
    _add_override_flags(p)
    p.add_argument("--report", default=None, help="path for the JSON report")
    p.add_argument("--flag-threshold", type=float, default=FLAG_THRESHOLD,
                   help="itemize deviations above this value")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("bench", help="benchmark propagator strategies")
    p.add_argument("--calls", type=int, default=10_000)
    p.add_argument("--output", default="bench.csv", help="CSV path for timings")
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("preset", help="run a shipped figure preset")
    p.add_argument("name", choices=[f"fig{i}" for i in range(2, 9)])
    p.add_argument("--output_path", default=None, help="override the preset's output path")
    p.set_defaults(func=_cmd_preset)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
