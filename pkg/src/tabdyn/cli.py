"""Command-line surface: samplers, law tables, and the verify gate.

Every data command writes a metadata record first (version, seed,
parameters — never a timestamp), then the payload; rerunning with the same
flags and seed reproduces the output byte for byte.  Config files are
line-oriented ``key=value`` with the same names as the long flags; flags
override the file.  The seed is never taken from the environment.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Iterable, Sequence

from . import __version__, acceptance
from . import rng as rng_mod
from .errors import IoError, MalformedLine, TabdynError, UnknownKey
from .laws import law_table, omega_star, omega_star_slope
from .plancherel import pieri_growth, sample_growth_markov, sample_growth_rsk
from .particles import (
    competition_interface,
    corner_growth_sample,
    second_class_from_growth,
)
from .rsk import record_box_arrays
from .taquin import MissingEntries, infinite_path_prefix

# defaults per subcommand; config-file keys are validated against these
DEFAULTS: dict[str, dict] = {
    "growth": {"n": 100, "seed": 0, "mechanism": "insertion",
               "out": "-", "format": "csv"},
    "jdt-path": {"n": 100, "seed": 0, "mode": "infinity",
                 "out": "-", "format": "csv"},
    "second-class": {"n": 100, "seed": 0, "out": "-", "format": "csv"},
    "corner-growth": {"m": 20, "seed": 0, "out": "-", "format": "csv"},
    "interface": {"m": 20, "seed": 0, "out": "-", "format": "csv"},
    "pieri": {"n": 1000, "k": 0, "trials": 1, "seed": 0,
              "out": "-", "format": "csv"},
    "law": {"name": "theta", "grid": 101, "out": "-", "format": "csv"},
    "invert": {"n": 1000, "depth": 1, "seed": 0, "out": "-", "format": "csv"},
    "verify": {"suite": "all", "scale": "small", "seed": acceptance.ACCEPTANCE_SEED,
               "jobs": 1, "out": "", "format": "jsonl"},
}

_KEY_TYPES = {
    "n": int, "m": int, "k": int, "trials": int, "depth": int, "grid": int,
    "seed": int, "jobs": int, "z": float,
    "mechanism": str, "mode": str, "name": str, "suite": str, "scale": str,
    "out": str, "format": str,
}

_CHOICES = {
    "mechanism": {"insertion", "transition"},
    "mode": {"infinity", "undetermined"},
    "name": {"semicircle", "theta", "phi", "omega_star"},
    "suite": {"exact", "mc", "all"},
    "scale": {"small", "full"},
    "format": {"csv", "jsonl"},
}


def read_config(path: str) -> dict[str, str]:
    """Parse a line-oriented key=value file; values stay raw strings."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise IoError(f"cannot read config {path}: {exc}") from exc
    out: dict[str, str] = {}
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise MalformedLine(f"{path}:{lineno}: expected key=value, got {line!r}")
        key, _, value = line.partition("=")
        out[key.strip()] = value.strip()
    return out


def _coerce_config(cmd: str, raw: dict[str, str]) -> dict:
    allowed = DEFAULTS[cmd]
    coerced: dict = {}
    for key, value in raw.items():
        if key not in allowed:
            raise UnknownKey(f"config key {key!r} is not a {cmd} option")
        typ = _KEY_TYPES[key]
        try:
            coerced[key] = typ(value)
        except ValueError as exc:
            raise MalformedLine(f"config value {key}={value!r}: {exc}") from exc
        if key in _CHOICES and coerced[key] not in _CHOICES[key]:
            raise MalformedLine(
                f"config value {key}={value!r}: expected one of "
                f"{sorted(_CHOICES[key])}"
            )
    return coerced


def _meta(command: str, params: dict, seed: int | None) -> dict:
    meta = {
        "command": command,
        "version": __version__,
        "generator": rng_mod.GENERATOR_NAME,
        "params": {k: params[k] for k in sorted(params)},
    }
    if seed is not None:
        meta["seed"] = seed
    return meta


def _fmt_cell(v) -> str:
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _emit(out: str, fmt: str, meta: dict, header: list[str],
          rows: Iterable[tuple]) -> None:
    """Serialize one table: metadata record first, then the payload."""
    meta_json = json.dumps(meta, sort_keys=True, separators=(",", ":"))
    lines: list[str] = []
    if fmt == "csv":
        lines.append("# " + meta_json)
        lines.append(",".join(header))
        for row in rows:
            lines.append(",".join(_fmt_cell(v) for v in row))
    else:
        lines.append(meta_json)
        for row in rows:
            lines.append(json.dumps(dict(zip(header, row)), sort_keys=True))
    text = "\n".join(lines) + "\n"
    if out in ("", "-"):
        sys.stdout.write(text)
    else:
        try:
            with open(out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise IoError(f"cannot write {out}: {exc}") from exc


def write_report(report, path: str, fmt: str = "jsonl") -> None:
    """Write one experiment report; JSON-lines is the structured format."""
    meta = _meta("report", {"name": report.name}, report.seed)
    if fmt == "jsonl":
        text = (
            json.dumps(meta, sort_keys=True, separators=(",", ":")) + "\n"
            + json.dumps(report.payload(), sort_keys=True) + "\n"
        )
        if path in ("", "-"):
            sys.stdout.write(text)
            return
        try:
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise IoError(f"cannot write {path}: {exc}") from exc
    else:
        stats = sorted(report.payload()["statistics"].items())
        _emit(path, "csv", meta, ["statistic", "value"], stats)


# ---------------------------------------------------------------------------
# subcommand bodies
# ---------------------------------------------------------------------------

def _cmd_growth(opts: dict) -> int:
    n, seed = opts["n"], opts["seed"]
    rng = rng_mod.stream(seed)
    if opts["mechanism"] == "insertion":
        trace = sample_growth_rsk(n, rng)
    else:
        trace = sample_growth_markov(n, rng)
    rows = [(s + 1, b[0], b[1]) for s, b in enumerate(trace.boxes)]
    _emit(opts["out"], opts["format"],
          _meta("growth", {"n": n, "mechanism": opts["mechanism"]}, seed),
          ["step", "i", "j"], rows)
    return 0


def _cmd_jdt_path(opts: dict) -> int:
    from .core import tableau_from_boxes

    n, seed = opts["n"], opts["seed"]
    rng = rng_mod.stream(seed)
    trace = sample_growth_rsk(n, rng)
    tab = tableau_from_boxes(list(trace.boxes))
    path = infinite_path_prefix(tab, MissingEntries(opts["mode"]))
    rows = [(s + 1, b[0], b[1]) for s, b in enumerate(path.boxes)]
    _emit(opts["out"], opts["format"],
          _meta("jdt-path",
                {"n": n, "mode": opts["mode"],
                 "undetermined_tail": path.undetermined_tail}, seed),
          ["step", "i", "j"], rows)
    return 0


def _cmd_second_class(opts: dict) -> int:
    n, seed = opts["n"], opts["seed"]
    rng = rng_mod.stream(seed)
    trace = sample_growth_rsk(n, rng)
    traj = second_class_from_growth(trace)
    rows = [(m, traj.positions[m], traj.jumps[m]) for m in range(len(traj.positions))]
    _emit(opts["out"], opts["format"],
          _meta("second-class", {"n": n}, seed),
          ["step", "x", "v"], rows)
    return 0


def _cmd_corner_growth(opts: dict) -> int:
    m, seed = opts["m"], opts["seed"]
    rng = rng_mod.stream(seed)
    run = corner_growth_sample(m, rng)
    color_names = {0: "none", 1: "green", 2: "red"}
    rows = [
        (i, j, float(run.g[i - 1, j - 1]), color_names[int(run.colors[i - 1, j - 1])])
        for i in range(1, m + 1)
        for j in range(1, m + 1)
    ]
    _emit(opts["out"], opts["format"],
          _meta("corner-growth", {"m": m}, seed),
          ["i", "j", "g", "color"], rows)
    return 0


def _cmd_interface(opts: dict) -> int:
    m, seed = opts["m"], opts["seed"]
    rng = rng_mod.stream(seed)
    run = corner_growth_sample(m, rng)
    path = competition_interface(run)
    rows = [(s + 1, b[0], b[1]) for s, b in enumerate(path.boxes)]
    _emit(opts["out"], opts["format"],
          _meta("interface", {"m": m}, seed),
          ["step", "i", "j"], rows)
    return 0


def _cmd_pieri(opts: dict) -> int:
    n, k, trials, seed = opts["n"], opts["k"], opts["trials"], opts["seed"]
    if k == 0:
        k = math.ceil(n ** 0.25)  # documented default strip width
    rows = []
    for trial in range(trials):
        rng = rng_mod.stream(seed, trial)
        sample = pieri_growth(n, k, rng)
        root = math.sqrt(n)
        rows.extend((trial, n, k, u / root) for u in sample.u_coords)
    _emit(opts["out"], opts["format"],
          _meta("pieri", {"n": n, "k": k, "trials": trials}, seed),
          ["trial", "n", "k", "u_scaled"], rows)
    return 0


def _cmd_law(opts: dict) -> int:
    name, grid = opts["name"], opts["grid"]
    if grid < 2:
        raise MalformedLine("grid must be at least 2")
    if name == "omega_star":
        lo, hi = -2.0, 2.0
        rows = []
        for idx in range(grid):
            x = lo + (hi - lo) * idx / (grid - 1)
            rows.append((x, omega_star(x), omega_star_slope(x)))
        header = ["x", "value", "slope"]
    else:
        table = law_table(name)
        lo, hi = table.support
        rows = []
        for idx in range(grid):
            x = lo + (hi - lo) * idx / (grid - 1)
            rows.append((x, table.cdf(x), table.density(x)))
        header = ["x", "cdf", "density"]
    _emit(opts["out"], opts["format"],
          _meta("law", {"name": name, "grid": grid}, None),
          header, rows)
    return 0


def _cmd_invert(opts: dict) -> int:
    from .core import tableau_from_boxes
    from .laws import theta_cdf
    from .taquin import apply_J

    n, depth, seed = opts["n"], opts["depth"], opts["seed"]
    rng = rng_mod.stream(seed)
    xs = rng.random(n)
    bi, bj = record_box_arrays(xs)
    cur = tableau_from_boxes(list(zip(bi.tolist(), bj.tolist())))
    rows = []
    for k in range(1, depth + 1):
        end = infinite_path_prefix(cur, MissingEntries.INFINITY).boxes[-1]
        estimate = theta_cdf(math.atan2(end[1], end[0]))
        rows.append((k, float(xs[k - 1]), estimate))
        if k < depth:
            cur = apply_J(cur)
    _emit(opts["out"], opts["format"],
          _meta("invert", {"n": n, "depth": depth}, seed),
          ["k", "x_true", "x_hat"], rows)
    return 0


def _cmd_verify(opts: dict) -> int:
    reports = acceptance.run_acceptance(
        suite=opts["suite"], scale=opts["scale"],
        seed=opts["seed"], jobs=opts["jobs"],
    )
    for rep in reports:
        sys.stdout.write(rep.summary_line() + "\n")
    n_pass = sum(r.passed for r in reports)
    sys.stdout.write(
        f"{n_pass}/{len(reports)} checks passed "
        f"(suite={opts['suite']}, scale={opts['scale']}, seed={opts['seed']})\n"
    )
    if opts["out"]:
        meta_json = json.dumps(
            _meta("verify", {"suite": opts["suite"], "scale": opts["scale"]},
                  opts["seed"]),
            sort_keys=True, separators=(",", ":"))
        try:
            with open(opts["out"], "w", encoding="utf-8") as fh:
                fh.write(meta_json + "\n")
                for rep in reports:
                    fh.write(json.dumps(rep.payload(), sort_keys=True) + "\n")
        except OSError as exc:
            raise IoError(f"cannot write {opts['out']}: {exc}") from exc
    return 0 if n_pass == len(reports) else 1


_BODIES = {
    "growth": _cmd_growth,
    "jdt-path": _cmd_jdt_path,
    "second-class": _cmd_second_class,
    "corner-growth": _cmd_corner_growth,
    "interface": _cmd_interface,
    "pieri": _cmd_pieri,
    "law": _cmd_law,
    "invert": _cmd_invert,
    "verify": _cmd_verify,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tabdyn",
        description="Tableau-dynamics samplers, limit-law tables, and checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(cmd: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(cmd, help=help_text)
        p.add_argument("--config", default=None,
                       help="key=value file; flags override it")
        for key, default in DEFAULTS[cmd].items():
            flag = "--" + key
            if key in _CHOICES:
                p.add_argument(flag, type=_KEY_TYPES[key],
                               choices=sorted(_CHOICES[key]),
                               default=argparse.SUPPRESS,
                               help=f"default: {default}")
            else:
                p.add_argument(flag, type=_KEY_TYPES[key],
                               default=argparse.SUPPRESS,
                               help=f"default: {default}")
        return p

    add("growth", "sample a measure-driven growth trace (step,i,j)")
    add("jdt-path", "slide path of a sampled tableau (step,i,j)")
    add("second-class", "paired-walk trajectory of a sampled trace (step,x,v)")
    add("corner-growth", "exponential corner growth grid (i,j,g,color)")
    add("interface", "competition interface of a corner-growth run (step,i,j)")
    add("pieri", "row-strip growth u-coordinates (trial,n,k,u_scaled); "
                 "--k 0 means ceil(n^(1/4))")
    add("law", "tabulate a limit law (x,cdf,density)")
    add("invert", "recover leading inputs from a recording tableau")
    add("verify", "run acceptance checks; exit 1 on any failure")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = vars(parser.parse_args(argv))
    cmd = args.pop("command")
    config_path = args.pop("config", None)
    opts = dict(DEFAULTS[cmd])
    try:
        if config_path:
            opts.update(_coerce_config(cmd, read_config(config_path)))
        opts.update(args)  # flags override config
        return _BODIES[cmd](opts)
    except TabdynError as exc:
        sys.stderr.write(f"tabdyn: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
