"""Command-line interface.

Subcommands: ``delta``, ``heatmap``, ``boundary``, ``zipf-links``, ``verify``.
Exit status is 0 on success, 1 on domain errors (one-line diagnostic on
stderr) and 2 on usage errors.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import phase, zipf
from .delta import (
    DeltaInputsCounterpartCapped,
    DeltaInputsVertexCapped,
    delta_counterpart_capped,
    delta_general,
    delta_phi0,
    delta_vertex_capped,
)
from .errors import DomainError, SkeletonError
from .flesh import CostParams, FleshParams
from .skeleton import read_skeleton
from .verify import check_skeleton, run_all

CLASSES = ("phi0", "vertex-capped", "counterpart-capped")


def fmt(x: float) -> str:
    return f"{x + 0.0:.17g}"


def _emit(data: bytes | str, out: str | None) -> None:
    if isinstance(data, str):
        data = data.encode()
    if out is None or out == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        Path(out).write_bytes(data)


def _need(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise DomainError(f"{args.cls} needs {', '.join(missing)}")


def cmd_delta(args) -> int:
    if args.skeleton:
        sk = read_skeleton(args.skeleton)
        if None in (args.form, args.j_a, args.j_b):
            raise DomainError("--skeleton needs --form, --j-a and --j-b")
        value = delta_general(sk, FleshParams(args.phi or 0.0), CostParams(args.lam),
                              args.form, args.j_a, args.j_b)
    elif args.cls == "phi0":
        _need(args, "omega", "links")
        value = delta_phi0(args.lam, args.omega, args.links)
    elif args.cls == "vertex-capped":
        _need(args, "phi", "links")
        value, _ = delta_vertex_capped(DeltaInputsVertexCapped(args.lam, args.phi, args.links))
    elif args.cls == "counterpart-capped":
        _need(args, "phi", "mu_k", "alpha", "n")
        seq = zipf.generate(args.n, args.alpha, args.phi, args.mode)
        if args.mu_k > seq.mu_max:
            raise DomainError(f"mu_k={args.mu_k} exceeds the maximum degree {seq.mu_max:.17g}")
        x_sr, m_phi = zipf.sufficient_stats(seq)
        value, _ = delta_counterpart_capped(
            DeltaInputsCounterpartCapped(args.lam, args.phi, args.mu_k, x_sr, m_phi))
    else:
        raise DomainError("give --class or --skeleton")
    print(fmt(value))
    return 0


def _grid_spec(args) -> phase.GridSpec:
    if args.cls not in phase.Y_PARAMS:
        raise DomainError(f"--class must be one of {sorted(phase.Y_PARAMS)} for sweeps")
    y_name = args.y or phase.Y_PARAMS[args.cls][0]
    fixed = {"phi": args.phi, "alpha": args.alpha, "n": args.n, "mu_k": args.mu_k, "m_links": args.links}
    fixed[phase._FIELD[y_name]] = None
    missing = [k for k in phase.FIXED[args.cls].get(y_name, ()) if fixed[k] is None]
    if missing:
        raise DomainError(f"sweep over {y_name} needs " + ", ".join(f"--{k.replace('_', '-')}" for k in missing))
    if y_name not in phase.Y_PARAMS[args.cls]:
        raise DomainError(f"y axis for {args.cls} must be one of {phase.Y_PARAMS[args.cls]}")
    axis = phase.default_axis(args.cls, y_name, args.y_res, **{k: v for k, v in fixed.items() if v is not None})
    lo = axis.lo if args.y_min is None else args.y_min
    hi = axis.hi if args.y_max is None else args.y_max
    axis = phase.Axis(y_name, lo, hi, args.y_res, "log" if args.log_y else axis.scale)
    fixed = {k: v for k, v in fixed.items() if v is not None}
    return phase.GridSpec(cls=args.cls, y=axis, x_res=args.x_res, mode=args.mode, **fixed)


def cmd_heatmap(args) -> int:
    hm = phase.sweep(_grid_spec(args), workers=args.workers)
    if hm.fully_masked:
        print("warning: every cell is infeasible", file=sys.stderr)
    _emit(phase.render(hm, args.format), args.out)
    return 0


def cmd_boundary(args) -> int:
    curve = phase.boundary(_grid_spec(args))
    for msg in curve.diagnostics:
        print(msg, file=sys.stderr)
    _emit(phase.boundary_csv(curve), args.out)
    return 0


def cmd_zipf_links(args) -> int:
    seq = zipf.generate(args.n, args.alpha, args.phi, args.mode)
    lo, hi = zipf.link_bounds(args.n, seq.tau)
    print(f"M={fmt(zipf.links(seq))} lower={fmt(lo)} upper={fmt(hi)} mu_max={fmt(seq.mu_max)}")
    if args.out:
        _emit(zipf.to_csv(seq), args.out)
    return 0


def cmd_verify(args) -> int:
    if args.skeleton:
        results = check_skeleton(read_skeleton(args.skeleton))
    else:
        results = run_all(max_n=args.max_n, max_m=args.max_m, seed=args.seed, samples=args.samples)
    for r in results:
        print(r.line())
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="vocabias", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def model_flags(sp, need_class=True):
        sp.add_argument("--class", dest="cls", choices=CLASSES, required=need_class)
        sp.add_argument("--phi", type=float)
        sp.add_argument("--links", type=float, help="number of edges M")
        sp.add_argument("--omega", type=float, help="degree of strategy b's counterpart (phi0)")
        sp.add_argument("--mu-k", type=float, help="degree of the form behind strategy b's counterpart")
        sp.add_argument("--alpha", type=float)
        sp.add_argument("--n", type=int, help="number of forms")
        sp.add_argument("--mode", choices=zipf.MODES, default="continuous")

    sp = sub.add_parser("delta", help="evaluate Delta at one parameter point")
    model_flags(sp, need_class=False)
    sp.add_argument("--lambda", dest="lam", type=float, required=True)
    sp.add_argument("--skeleton", help="skeleton text file; evaluates the general case")
    sp.add_argument("--form", type=int)
    sp.add_argument("--j-a", type=int)
    sp.add_argument("--j-b", type=int)
    sp.set_defaults(func=cmd_delta)

    for name, func, helptext in (
        ("heatmap", cmd_heatmap, "sweep Delta over (lambda, y)"),
        ("boundary", cmd_boundary, "Delta = 0 curve over (lambda, y)"),
    ):
        sp = sub.add_parser(name, help=helptext)
        model_flags(sp)
        sp.add_argument("--y", choices=("M", "phi", "mu_k", "alpha", "n"))
        sp.add_argument("--y-min", "--m-min", dest="y_min", type=float)
        sp.add_argument("--y-max", "--m-max", dest="y_max", type=float)
        sp.add_argument("--log-y", action="store_true")
        sp.add_argument("--x-res", type=int, default=phase.DEFAULT_X_RES)
        sp.add_argument("--y-res", type=int, default=phase.DEFAULT_Y_RES)
        sp.add_argument("--out")
        if name == "heatmap":
            sp.add_argument("--format", choices=("csv", "ppm"), default="csv")
            sp.add_argument("--workers", type=int, default=1)
        sp.set_defaults(func=func)

    sp = sub.add_parser("zipf-links", help="number of links of a power-law degree sequence")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--phi", type=float, required=True)
    sp.add_argument("--mode", choices=zipf.MODES, default="continuous")
    sp.add_argument("--out", help="also write the degree sequence as CSV")
    sp.set_defaults(func=cmd_zipf_links)

    sp = sub.add_parser("verify", help="oracle equivalence checks")
    sp.add_argument("--max-n", type=int, default=4)
    sp.add_argument("--max-m", type=int)
    sp.add_argument("--samples", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--skeleton")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, SkeletonError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


run = main
