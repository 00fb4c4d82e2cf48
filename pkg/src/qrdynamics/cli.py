"""Command line interface.

Examples::

    qrdynamics render --map p --grid -1.5,-1.5,1.5,1.5,512x512 --out p.ppm
    qrdynamics orbit --map p --point 0,0.75 -n 10
    qrdynamics verify --map p --mode demo
    qrdynamics degree --map g --d 5 --delta 0.01
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import dynamics as dyn
from .config import RunConfig, write_atomic
from .maps import MapKind, iterate
from .qc import REGIONS, WindingError, estimate_dilatation, winding_degree
from .render import construction_overlays, render_image

# flags shared with RunConfig; None means "not given on the command line"
_CONFIG_FLAGS = ("map", "d", "delta", "mode", "eps", "eta", "grid", "max_iter",
                 "escape_radius", "seed", "out", "workers", "checks")


def _point(text: str) -> complex:
    x, y = (float(v) for v in text.split(","))
    return complex(x, y)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--map", choices=[k.value for k in MapKind])
    common.add_argument("--d", type=int)
    common.add_argument("--delta", type=float)
    common.add_argument("--mode", choices=["demo", "faithful"])
    common.add_argument("--eps", type=float)
    common.add_argument("--eta", type=float)
    common.add_argument("--grid", help="x0,y0,x1,y1,WxH")
    common.add_argument("--max-iter", dest="max_iter", type=int)
    common.add_argument("--escape-radius", dest="escape_radius", type=float)
    common.add_argument("--seed", type=int)
    common.add_argument("--workers", type=int)
    common.add_argument("--out", help="output path (stdout if omitted, except render)")
    common.add_argument("--config", help="JSON RunConfig; flags override it")

    ap = argparse.ArgumentParser(prog="qrdynamics", description=__doc__.split("\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)
    r = sub.add_parser("render", parents=[common], help="classify a grid and write a PPM")
    r.add_argument("--overlay", action="store_true", help="outline diamonds and seed boxes")
    sub.add_parser("classify", parents=[common], help="classify a grid, CSV x,y,label,iters")
    o = sub.add_parser("orbit", parents=[common], help="CSV trace n,x,y,|z| of one orbit")
    o.add_argument("--point", type=_point, required=True, help="x,y")
    o.add_argument("-n", type=int, default=20, help="number of steps")
    v = sub.add_parser("verify", parents=[common], help="run verification checks")
    v.add_argument("--checks", nargs="*", choices=dyn.VERIFY_CHECKS)
    e = sub.add_parser("estimate-k", parents=[common], help="sampled dilatation report (JSON)")
    e.add_argument("--region", choices=sorted(REGIONS))
    e.add_argument("--samples", type=int, default=10_000)
    e.add_argument("--step", type=float, default=1e-6)
    g = sub.add_parser("degree", parents=[common], help="winding number on a circle")
    g.add_argument("--center", type=_point, default=0j)
    g.add_argument("--radius", type=float, default=10.0)
    g.add_argument("--target", type=_point, default=0j)
    g.add_argument("--samples", type=int, default=4096)
    return ap


def load_config(args: argparse.Namespace) -> RunConfig:
    data = {}
    if args.config:
        with open(args.config, encoding="utf-8") as fh:
            data = json.load(fh)
    for name in _CONFIG_FLAGS:
        value = getattr(args, name, None)
        if value is not None:
            data[name] = value
    return RunConfig.from_dict(data)


def _emit(cfg: RunConfig, data: bytes | str) -> None:
    if cfg.out:
        write_atomic(cfg.out, data)
    elif isinstance(data, bytes):
        sys.stdout.buffer.write(data)
    else:
        sys.stdout.write(data)


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


_LABEL_TEXT = {dyn.Label.ESCAPED: "Escaped", dyn.Label.CONVERGED: "ConvergedToZero",
               dyn.Label.UNDECIDED: "Undecided"}


def cmd_render(cfg: RunConfig, args) -> int:
    if not cfg.out:
        raise ValueError("render needs --out")
    grid = cfg.grid_spec()
    lg = dyn.classify_grid(cfg.map_spec(), grid, cfg.dynamics(), cfg.workers)
    overlays = construction_overlays(grid, seeds=cfg.seeds()) if args.overlay else ()
    write_atomic(cfg.out, render_image(lg, overlays=overlays))
    counts = lg.counts()
    print(f"wrote {cfg.out} ({grid.width}x{grid.height}): " +
          ", ".join(f"{k}={v}" for k, v in counts.items()), file=sys.stderr)
    return 0


def cmd_classify(cfg: RunConfig, args) -> int:
    grid = cfg.grid_spec()
    lg = dyn.classify_grid(cfg.map_spec(), grid, cfg.dynamics(), cfg.workers)
    rows = []
    for r in range(grid.height):
        for c in range(grid.width):
            z = grid.pixel_center(r, c)
            rows.append((repr(z.x), repr(z.y), _LABEL_TEXT[dyn.Label(int(lg.labels[r, c]))],
                         int(lg.iters[r, c])))
    _emit(cfg, _csv(("x", "y", "label", "iters"), rows))
    return 0


def cmd_orbit(cfg: RunConfig, args) -> int:
    pts = iterate(cfg.map_spec(), args.point, args.n)
    rows = [(n, repr(p.x), repr(p.y), repr(abs(p))) for n, p in enumerate(pts)]
    _emit(cfg, _csv(("n", "x", "y", "|z|"), rows))
    return 0


def cmd_verify(cfg: RunConfig, args) -> int:
    results = dyn.run_verification(cfg.map_spec(), cfg.seeds(), None, cfg.eta,
                                   cfg.checks or None, cfg.seed)
    width = max(len(r.name) for r in results)
    lines = [f"{r.name:<{width}}  {'PASS' if r.passed else 'FAIL'}  {r.detail}" for r in results]
    _emit(cfg, "\n".join(lines) + "\n")
    return 0 if all(r.passed for r in results) else 1


def cmd_estimate_k(cfg: RunConfig, args) -> int:
    rep = estimate_dilatation(cfg.map_spec(), args.region, args.samples, args.step)
    _emit(cfg, json.dumps(rep.to_dict(), indent=2) + "\n")
    return 0


def cmd_degree(cfg: RunConfig, args) -> int:
    deg = winding_degree(cfg.map_spec(), args.center, args.radius, args.target, args.samples)
    _emit(cfg, f"{deg}\n")
    return 0


COMMANDS = {
    "render": cmd_render,
    "classify": cmd_classify,
    "orbit": cmd_orbit,
    "verify": cmd_verify,
    "estimate-k": cmd_estimate_k,
    "degree": cmd_degree,
}


_VALUE_FLAGS = ("--grid", "--point", "--center", "--target")


def _join_values(argv: list[str]) -> list[str]:
    """Turn ``--grid -1,...`` into ``--grid=-1,...`` so argparse accepts
    coordinate lists that start with a minus sign."""
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    ap = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = ap.parse_args(_join_values(argv))
    try:
        cfg = load_config(args)
    except (ValueError, TypeError, OSError) as exc:
        ap.print_usage(sys.stderr)
        print(f"qrdynamics: error: {exc}", file=sys.stderr)
        return 2
    try:
        return COMMANDS[args.command](cfg, args)
    except WindingError as exc:
        print(f"qrdynamics: error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        ap.print_usage(sys.stderr)
        print(f"qrdynamics: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
