"""Command-line interface: ``fracsym simulate | bifurcation | symmetry``.

Exit codes: 0 success, 2 invalid flags or configuration, 3 orbit diverged
before the transient was discarded, 4 symmetry pattern differs from theory.

Every subcommand accepts ``--config FILE`` with ``key = value`` lines using
the long flag names (``n-power = 6``, ``ic = 0.05,0.1; 0.01,0.01``).
Command-line flags override the file.
"""

from __future__ import annotations

import argparse
import enum
import json
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from . import __version__
from .bifurcation import (
    FO_INITIAL_CONDITIONS,
    IO_INITIAL_CONDITIONS,
    ScanAxis,
    ScanConfig,
    run_scan,
    scan_to_csv,
)
from .caputo import iterate_fo
from .group import elements, parse_element
from .maps import MapKind, MapSpec, cyclic_c4, dihedral_d3, dihedral_re_d6, parse_key_values
from .orbit import DEFAULT_ESCAPE_RADIUS, iterate_io
from .raster import PALETTE, scatter_image, write_png
from .settings import SYMMETRY
from .symmetry import (
    check_equivariance,
    expected_equivariant,
    fo_solution_defect,
    orbit_symmetry_defect,
    OrbitSymmetryReport,
    reports_to_csv,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DIVERGED = 3
EXIT_SYMMETRY = 4

PRESETS = {
    MapKind.DIHEDRAL: dihedral_d3,
    MapKind.CYCLIC: cyclic_c4,
    MapKind.DIHEDRAL_RE: dihedral_re_d6,
}


class UsageError(Exception):
    pass


@dataclass
class RunManifest:
    command: str
    config: dict
    seed: int | None
    artifacts: list = field(default_factory=list)
    version: str = __version__

    def add(self, path, rows: int | None = None):
        self.artifacts.append({"path": str(path), "rows": rows})

    def write(self, path):
        missing = [a["path"] for a in self.artifacts if not Path(a["path"]).exists()]
        if missing:
            raise RuntimeError(f"manifest lists missing files: {missing}")
        Path(path).write_text(json.dumps(asdict(self), indent=2, sort_keys=True) + "\n")


def _add_map_flags(p: argparse.ArgumentParser):
    g = p.add_argument_group("map")
    g.add_argument("--map", choices=[k.value for k in MapKind], default="dihedral")
    g.add_argument("--m", type=int)
    for name in ("a", "b", "c", "d", "gamma"):
        g.add_argument(f"--{name}", type=float)
    g.add_argument("--n-power", type=int)


def _add_orbit_flags(p: argparse.ArgumentParser, steps: int):
    g = p.add_argument_group("orbit")
    g.add_argument("--order", choices=["io", "fo"], default="io")
    g.add_argument("--q", type=float)
    g.add_argument("--x0", type=float, default=0.05)
    g.add_argument("--y0", type=float, default=0.1)
    g.add_argument("--steps", type=int, default=steps)
    g.add_argument("--discard", type=int, default=None)
    g.add_argument("--escape", type=float, default=DEFAULT_ESCAPE_RADIUS)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fracsym", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="integer- or fractional-order orbit to CSV")
    sim.add_argument("--config")
    _add_map_flags(sim)
    _add_orbit_flags(sim, steps=100_000)
    sim.add_argument("--out", required=False, default="orbit.csv")
    sim.add_argument("--image")

    bif = sub.add_parser("bifurcation", help="bifurcation diagram vs a, q or x0")
    bif.add_argument("--config")
    _add_map_flags(bif)
    bif.add_argument("--axis", choices=[a.value for a in ScanAxis], default="a")
    bif.add_argument("--min", type=float, dest="axis_min")
    bif.add_argument("--max", type=float, dest="axis_max")
    bif.add_argument("--steps-axis", type=int, default=200)
    bif.add_argument("--order", choices=["io", "fo"], default="io")
    bif.add_argument("--q", type=float)
    bif.add_argument("--ic", action="append", help="initial condition 'x,y' (repeatable; write --ic=-0.1,-0.1 for a leading minus)")
    bif.add_argument("--steps", type=int)
    bif.add_argument("--discard", type=int)
    bif.add_argument("--randomize-y0", action="store_true")
    bif.add_argument("--y0-min", type=float, default=-1.0)
    bif.add_argument("--y0-max", type=float, default=1.0)
    bif.add_argument("--escape", type=float, default=DEFAULT_ESCAPE_RADIUS)
    bif.add_argument("--memory", type=int)
    bif.add_argument("--seed", type=int, default=0)
    bif.add_argument("--workers", type=int, default=1)
    bif.add_argument("--out-prefix", default="bifurcation")

    sym = sub.add_parser("symmetry", help="check symmetry predictions")
    sym.add_argument("--config")
    _add_map_flags(sym)
    _add_orbit_flags(sym, steps=20_000)
    sym.add_argument("--check", choices=["equivariance", "orbit"], default="equivariance")
    sym.add_argument("--element", default="all", help="Rk, Sk or 'all'")
    sym.add_argument("--samples", type=int, default=1000)
    sym.add_argument("--radius", type=float, default=1.5)
    sym.add_argument("--seed", type=int, default=0)
    sym.add_argument("--out")
    parser.subcommands = {"simulate": sim, "bifurcation": bif, "symmetry": sym}
    return parser


_BOOL_KEYS = {"randomize_y0"}


def _apply_config(parser: argparse.ArgumentParser, argv: list[str]) -> argparse.Namespace:
    args = parser.parse_args(argv)
    if not getattr(args, "config", None):
        return args
    try:
        values = parse_key_values(Path(args.config).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read config {args.config}: {exc}") from exc
    # re-parse with file values as defaults so explicit flags win
    sub = parser.subcommands[args.command]
    dests = {a.dest for a in sub._actions}
    aliases = {"min": "axis_min", "max": "axis_max"}
    defaults = {}
    config_ics = None
    for key, raw in values.items():
        dest = aliases.get(key, key)
        if dest not in dests:
            raise UsageError(f"unknown config key {key!r}")
        if dest in _BOOL_KEYS:
            defaults[dest] = raw.lower() in ("1", "true", "yes", "on")
        elif dest == "ic":
            # applied after parsing: an append action would extend a default list
            config_ics = [part.strip() for part in raw.split(";") if part.strip()]
        else:
            action = next(a for a in sub._actions if a.dest == dest)
            try:
                defaults[dest] = action.type(raw) if action.type else raw
            except ValueError as exc:
                raise UsageError(f"bad value for {key!r}: {raw!r}") from exc
    sub.set_defaults(**defaults)
    args = parser.parse_args(argv)
    if config_ics is not None and args.ic is None:
        args.ic = config_ics
    return args


def _spec_from_args(args) -> MapSpec:
    kind = MapKind(args.map)
    base = PRESETS[kind]()
    changes = {}
    for name in ("m", "a", "b", "c", "d", "gamma", "n_power"):
        value = getattr(args, name)
        if value is not None:
            changes[name] = value
    return base.replace(**changes)


def _parse_ic(text: str) -> complex:
    try:
        x, y = (float(v) for v in text.split(","))
    except ValueError as exc:
        raise UsageError(f"initial condition must be 'x,y', got {text!r}") from exc
    return complex(x, y)


def _orbit(args, spec):
    z0 = complex(args.x0, args.y0)
    if args.discard is None:
        args.discard = 1000 if args.order == "io" else 500
    if args.order == "fo":
        if args.q is None:
            raise UsageError("--order fo requires --q")
        return iterate_fo(spec, z0, args.q, args.steps, args.escape, discard=args.discard)
    return iterate_io(spec, z0, args.steps, args.escape, discard=args.discard)


def cmd_simulate(args) -> int:
    spec = _spec_from_args(args)
    orbit = _orbit(args, spec)
    out = Path(args.out)
    manifest = RunManifest("simulate", _plain({"spec": asdict(spec), "args": vars(args)}), None)
    orbit.to_csv(out)
    manifest.add(out, len(orbit))
    if args.image:
        pts = orbit.post_transient()
        write_png(args.image, scatter_image([(pts.real, pts.imag, PALETTE[3])]))
        manifest.add(args.image)
    manifest.write(out.with_suffix(out.suffix + ".manifest.json"))
    if orbit.diverged_at is not None and orbit.diverged_at <= orbit.discard:
        print(f"orbit diverged at step {orbit.diverged_at} (discard {orbit.discard})", file=sys.stderr)
        return EXIT_DIVERGED
    print(f"wrote {len(orbit)} points to {out}")
    return EXIT_OK


def cmd_bifurcation(args) -> int:
    spec = _spec_from_args(args)
    axis = ScanAxis(args.axis)
    fo = args.order == "fo"
    if axis is ScanAxis.ORDER_Q and not fo:
        raise UsageError("--axis q requires --order fo")
    if fo and axis is not ScanAxis.ORDER_Q and args.q is None:
        raise UsageError("--order fo with --axis a/x0 requires --q")
    defaults = {ScanAxis.PARAM_A: (-2.0, -0.5), ScanAxis.ORDER_Q: (0.01, 0.99), ScanAxis.INIT_X0: (-1.5, 1.5)}
    lo, hi = defaults[axis]
    if args.ic:
        ics = tuple(_parse_ic(t) for t in args.ic)
    else:
        ics = FO_INITIAL_CONDITIONS if fo else IO_INITIAL_CONDITIONS
    cfg = ScanConfig(
        spec_template=spec,
        scan_axis=axis,
        axis_min=lo if args.axis_min is None else args.axis_min,
        axis_max=hi if args.axis_max is None else args.axis_max,
        axis_steps=args.steps_axis,
        initial_conditions=ics,
        q_fixed=args.q if fo and axis is not ScanAxis.ORDER_Q else None,
        steps=args.steps,
        discard=args.discard,
        randomize_y0=args.randomize_y0,
        y0_interval=(args.y0_min, args.y0_max),
        seed=args.seed,
        escape_radius=args.escape,
        memory=args.memory,
    )
    sets = run_scan(cfg, workers=args.workers)
    prefix = Path(args.out_prefix)
    prefix.parent.mkdir(parents=True, exist_ok=True)
    manifest = RunManifest("bifurcation", _plain(asdict(cfg)), cfg.seed)
    series = []
    for bs in sets:
        path = prefix.parent / f"{prefix.name}_bs{bs.ic_index}.csv"
        text = scan_to_csv(bs, path)
        manifest.add(path, text.count("\n") - 1)
        xs = [np.full(len(v), a) for a, v in bs.samples.items()]
        ys = list(bs.samples.values())
        if xs:
            series.append((np.concatenate(xs), np.concatenate(ys), PALETTE[bs.ic_index % len(PALETTE)]))
        if bs.diverged:
            print(f"initial condition {bs.ic_index}: {len(bs.diverged)} diverged cells", file=sys.stderr)
    image = prefix.parent / f"{prefix.name}.png"
    write_png(image, scatter_image(series))
    manifest.add(image)
    manifest.write(prefix.parent / f"{prefix.name}_manifest.json")
    print(f"wrote {len(sets)} bifurcative sets with prefix {prefix}")
    return EXIT_OK


def _selected_elements(args, m):
    if args.element == "all":
        return elements(m)
    try:
        return [parse_element(label, m) for label in args.element.split(",")]
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_symmetry(args) -> int:
    spec = _spec_from_args(args)
    chosen = _selected_elements(args, spec.m)
    rows = []
    reports = []
    if args.check == "equivariance":
        for g in chosen:
            rep = check_equivariance(spec, g, args.samples, args.radius, args.seed)
            expect = expected_equivariant(spec, g)
            ok = rep.defect < SYMMETRY.equivariance_pass if expect else rep.defect > SYMMETRY.equivariance_fail
            reports.append(rep)
            rows.append((g.label, expect, rep.defect, ok))
    elif args.order == "io":
        orbit = _orbit(args, spec)
        for g in chosen:
            rep = orbit_symmetry_defect(orbit, g)
            expect = expected_equivariant(spec, g)
            ok = (rep.defect < SYMMETRY.cloud_pass) == expect
            reports.append(rep)
            rows.append((g.label, expect, rep.defect, ok))
    else:
        orbit = _orbit(args, spec)
        z0 = complex(args.x0, args.y0)
        for g in chosen:
            defect = float(fo_solution_defect(spec, z0, args.q, g, args.steps, orbit).max())
            # the anchor z0 is untouched, so symmetry survives only where g fixes z0
            expect = expected_equivariant(spec, g) and g.apply(z0) == z0
            ok = defect < SYMMETRY.fo_keep if expect else defect > SYMMETRY.fo_break
            reports.append(OrbitSymmetryReport(g, defect, args.steps))
            rows.append((g.label, expect, defect, ok))

    print(f"{'element':>8} {'expected':>9} {'defect':>12}  result")
    for label, expect, defect, ok in rows:
        word = "symmetric" if expect else "broken"
        print(f"{label:>8} {word:>9} {defect:12.3e}  {'ok' if ok else 'MISMATCH'}")
    if args.out:
        reports_to_csv(reports, args.out)
        manifest = RunManifest("symmetry", _plain(vars(args)), args.seed)
        manifest.add(args.out, len(reports))
        manifest.write(args.out + ".manifest.json")
    return EXIT_OK if all(r[3] for r in rows) else EXIT_SYMMETRY


def _plain(obj):
    """JSON-friendly copy (complex -> [re, im], enums -> value)."""
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    if isinstance(obj, enum.Enum):
        return obj.value
    return obj


COMMANDS = {"simulate": cmd_simulate, "bifurcation": cmd_bifurcation, "symmetry": cmd_symmetry}


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = _apply_config(parser, argv)
        return COMMANDS[args.command](args)
    except SystemExit as exc:
        return int(exc.code or 0)
    except (UsageError, ValueError) as exc:
        print(f"fracsym: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
