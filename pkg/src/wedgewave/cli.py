"""Command line front end.

Commands: transform | propagate | expand | scatter | verify.
Exit codes: 0 success, 1 verification failure, 2 I/O or configuration
problem, 3 numerical failure.  Identical inputs and flags produce
bit-identical output files.
"""

from __future__ import annotations

import argparse
import csv
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import debranges, htransform, verify
from .errors import AccuracyError, WedgewaveError
from .kleingordon import riemann_propagate
from .quadrature import DecayHint
from .sampling import (SampledFunction, l2_norm, log_grid,
                       read_sampled_csv, read_sampled_json, uniform_grid,
                       write_sampled_csv, write_sampled_json)
from .scattering import phase_shift_sweep

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_IO = 2
EXIT_NUMERIC = 3


def _add_shared(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", help="input data file (csv or json)")
    p.add_argument("--output", help="output data file")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--grid-min", type=float, default=1e-3)
    p.add_argument("--grid-max", type=float, default=40.0)
    p.add_argument("--grid-count", type=int, default=256)
    p.add_argument("--grid-kind", choices=["uniform", "log_uniform"],
                   default="log_uniform")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=20251)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wedgewave",
        description="Light-cone scattering numerics for the J0-kernel transform")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", help="apply the transform to sampled data")
    _add_shared(p)
    p.add_argument("--operator", choices=["h", "hankel0", "h-mellin"],
                   default="h")
    p.add_argument("--both-paths", action="store_true",
                   help="also run the Mellin path and report the L2 gap")
    p.add_argument("--decay-rate", type=float, default=None,
                   help="override the exponential decay rate of the input")

    p = sub.add_parser("propagate", help="evolve Cauchy data to (t, x) points")
    _add_shared(p)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--dphi-input", help="csv/json with d(phi)/dt samples "
                                        "(defaults to zero)")

    p = sub.add_parser("expand", help="isometric expansion and its inverse")
    _add_shared(p)
    p.add_argument("--direction", choices=["forward", "inverse"],
                   default="forward")
    p.add_argument("--g-input", help="second input (G column) for inverse")
    p.add_argument("--support-a", type=float, default=None,
                   help="also report the causal support check at this radius")

    p = sub.add_parser("scatter", help="phase-shift sweep over gamma")
    _add_shared(p)
    p.add_argument("--gammas", default="0.5,1,2",
                   help="comma-separated gamma values")
    p.add_argument("--kind", choices=["a_minus", "b_plus"], default="a_minus")

    p = sub.add_parser("verify", help="run the acceptance suite")
    _add_shared(p)
    p.add_argument("--criteria", default=None,
                   help="comma-separated subset of criteria to run")
    return parser


def _read_sampled(path, decay=None) -> SampledFunction:
    if path is None:
        raise FileNotFoundError("missing --input")
    if str(path).endswith(".json"):
        sf = read_sampled_json(path)
        return sf if decay is None else sf.with_decay(decay)
    return read_sampled_csv(path, decay)


def _write_sampled(sf: SampledFunction, path, fmt: str) -> None:
    if path is None:
        raise FileNotFoundError("missing --output")
    if fmt == "json" or str(path).endswith(".json"):
        write_sampled_json(sf, path)
    else:
        write_sampled_csv(sf, path)


def _grid(args) -> np.ndarray:
    if args.grid_count < 16:
        raise ValueError("grid count must be >= 16")
    make = log_grid if args.grid_kind == "log_uniform" else uniform_grid
    return make(args.grid_min, args.grid_max, args.grid_count)


def _chunked_map(fn, items, jobs: int):
    if jobs <= 1:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def cmd_transform(args) -> int:
    decay = DecayHint.exponential(args.decay_rate) if args.decay_rate else None
    sf = _read_sampled(args.input, decay)
    if sf.decay is None:
        sf = sf.with_decay(sf.fitted_exponential_decay())
    grid = _grid(args)
    if args.operator == "h":
        vals = _chunked_map(
            lambda x: htransform.h_transform_point(sf, float(x), args.tol),
            grid, args.jobs)
        out = SampledFunction(grid, np.array(vals), args.grid_kind, None)
        out = out.with_decay(out.fitted_exponential_decay())
    elif args.operator == "hankel0":
        out = htransform.hankel0_transform(sf, grid, args.tol)
    else:
        out = htransform.h_via_mellin(sf, grid, args.tol)
    _write_sampled(out, args.output, args.format)
    ratio = l2_norm(out, lower=0.0) / l2_norm(sf, lower=0.0)
    print(f"l2 norm ratio: {ratio:.9f}")
    if args.both_paths and args.operator != "h-mellin":
        alt = htransform.h_via_mellin(sf, grid, args.tol)
        num = np.sqrt(np.trapezoid(np.abs(out.values - alt.values) ** 2, grid))
        den = max(np.sqrt(np.trapezoid(np.abs(out.values) ** 2, grid)), 1e-300)
        print(f"cross-path l2 discrepancy: {num / den:.3e}")
    return EXIT_OK


def cmd_propagate(args) -> int:
    phi0 = _read_sampled(args.input)
    if args.dphi_input:
        dphi = _read_sampled(args.dphi_input)
    else:
        dphi = SampledFunction(phi0.grid, np.zeros_like(phi0.grid),
                               phi0.grid_kind, phi0.decay)
    grid = _grid(args)
    vals = _chunked_map(
        lambda x: float(np.real(riemann_propagate(phi0, dphi, args.t,
                                                  float(x), args.tol))),
        grid, args.jobs)
    out = SampledFunction(grid, np.array(vals), args.grid_kind, None)
    _write_sampled(out, args.output, args.format)
    print(f"propagated {grid.size} points to t={args.t}")
    return EXIT_OK


def cmd_expand(args) -> int:
    from .kleingordon import CauchyData

    if args.direction == "forward":
        k = _read_sampled(args.input)
        if k.decay is None:
            k = k.with_decay(k.fitted_exponential_decay())
        grid = _grid(args)
        F = np.array([debranges.expand_F_from_k(k, float(x), args.tol)
                      for x in grid])
        G = np.array([debranges.expand_G_from_k(k, float(x), args.tol)
                      for x in grid])
        fg = CauchyData(grid, F, G)
        defect = debranges.isometry_defect(k, fg)
        _write_sampled(SampledFunction(grid, F, args.grid_kind, None),
                       args.output, args.format)
        if args.output:
            g_path = _sibling(args.output, "_G")
            _write_sampled(SampledFunction(grid, G, args.grid_kind, None),
                           g_path, args.format)
            print(f"wrote F to {args.output} and G to {g_path}")
    else:
        f_sf = _read_sampled(args.input)
        g_sf = _read_sampled(args.g_input or args.input)
        fg = CauchyData(f_sf.grid, f_sf.values, g_sf.values)
        grid = _grid(args)
        k_vals = np.array([debranges.reconstruct_k(fg, float(v), args.tol)
                           for v in grid])
        out = SampledFunction(grid, k_vals, args.grid_kind, None)
        out = out.with_decay(out.fitted_exponential_decay())
        _write_sampled(out, args.output, args.format)
        defect = debranges.isometry_defect(out, fg)
    print(f"isometry defect: {defect:.6e}")
    if args.support_a is not None:
        rep = debranges.support_equivalence_check(fg, args.support_a)
        print(f"max trace on (0,{args.support_a}): {rep.max_trace_below_a:.3e}")
        print(f"max re-expansion on (0,{2 * args.support_a}): "
              f"{max(rep.max_F_reexpanded_below_2a, rep.max_G_reexpanded_below_2a):.3e}")
    return EXIT_OK


def _sibling(path: str, suffix: str) -> str:
    dot = path.rfind(".")
    return path + suffix if dot < 0 else path[:dot] + suffix + path[dot:]


def cmd_scatter(args) -> int:
    gammas = [float(v) for v in args.gammas.split(",") if v.strip()]
    rows = phase_shift_sweep(gammas, args.kind)
    if args.output:
        with open(args.output, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["gamma", "theta_extracted", "theta_reference",
                             "abs_error"])
            for r in rows:
                writer.writerow([format(r.gamma, ".17g"),
                                 format(r.theta_extracted, ".17g"),
                                 format(r.theta_reference, ".17g"),
                                 format(r.abs_error, ".17g")])
    for r in rows:
        print(f"gamma={r.gamma:g} theta={r.theta_extracted:+.6f} "
              f"reference={r.theta_reference:+.6f} error={r.abs_error:.3e}")
    return EXIT_OK


def cmd_verify(args) -> int:
    names = None
    if args.criteria:
        names = [n.strip() for n in args.criteria.split(",") if n.strip()]
    results = verify.run_all(names)
    for r in results:
        print(verify.format_result(r))
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} criteria passed")
    return EXIT_VERIFY_FAIL if failed else EXIT_OK


_COMMANDS = {
    "transform": cmd_transform,
    "propagate": cmd_propagate,
    "expand": cmd_expand,
    "scatter": cmd_scatter,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (OSError, FileNotFoundError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except AccuracyError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except WedgewaveError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
