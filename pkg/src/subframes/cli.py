"""Command-line front end.

Exit codes are shared by every subcommand: 0 success, 1 semantic failure
(not a frame, did not converge, residual too large), 2 usage, I/O or
parse error. Human-readable summaries go to standard output; matrices and
reports go to the files named by ``--out`` / ``--report``.
"""

import argparse
import sys

import numpy as np

from . import __version__
from .exceptions import FrameError, NotInSubspaceError, NotInvertibleError
from .frames import DEFAULT_TOL, Frame, classify, dual_frame, harmonic_frame, random_unit_frame
from .frames import reconstruct as frame_reconstruct
from .io import MatrixFileError, dumps_matrix, read_matrix, write_matrix, write_report, write_trajectory
from .potential import (
    MinimizerConfig,
    fp_minimum,
    frame_potential,
    frame_potential_via_trace,
    minimize_fp,
    minimize_fp_subspace,
    restricted_frame_potential,
)
from .subspace import (
    Subspace,
    coordinate_frame,
    dual_subspace_frame,
    is_subspace_frame,
    random_subspace,
    subspace_residuals,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    """Bad arguments or unreadable input; maps to exit code 2."""


def _load(path, what):
    try:
        m, _ = read_matrix(path)
    except MatrixFileError as exc:
        raise UsageError(f"{what}: {exc}") from None
    return m


def _load_frame(path):
    return Frame(_load(path, "frame"))


def _load_subspace(path, n=None):
    basis = _load(path, "subspace")
    try:
        w = Subspace(basis)
    except FrameError as exc:
        raise UsageError(f"subspace: {exc}") from None
    if n is not None and w.ambient_dim != n:
        raise UsageError(f"subspace lives in C^{w.ambient_dim} but frame lives in C^{n}")
    return w


def _emit_matrix(m, kind, out):
    if out is None:
        sys.stdout.write(dumps_matrix(m, kind))
    else:
        write_matrix(out, m, kind)


def _emit_report(report, path):
    if path is not None:
        write_report(path, report)


def _positive_tol(text):
    try:
        val = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not np.isfinite(val) or val <= 0:
        raise argparse.ArgumentTypeError(f"tolerance must be positive, got {text}")
    return val


def _count(text):
    try:
        val = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if val < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return val


def cmd_gen(args):
    if args.kind == "harmonic":
        if args.s is None or args.n is None:
            raise UsageError("gen harmonic needs --s and --n")
        if args.s < args.n:
            raise UsageError(f"s < N (s={args.s}, N={args.n})")
        _emit_matrix(harmonic_frame(args.s, args.n).matrix, "frame", args.out)
    elif args.kind == "random":
        dim = args.dim if args.dim is not None else args.n
        if args.s is None or dim is None:
            raise UsageError("gen random needs --s and --dim")
        _emit_matrix(random_unit_frame(args.s, dim, args.seed).matrix, "frame", args.out)
    elif args.kind == "subspace":
        if args.n is None or args.r is None:
            raise UsageError("gen subspace needs --n and --r")
        if args.r >= args.n:
            raise UsageError(f"r must be < N (r={args.r}, N={args.n})")
        _emit_matrix(random_subspace(args.n, args.r, args.seed).basis, "subspace_basis", args.out)
    else:
        dim = args.dim if args.dim is not None else args.n
        if args.subspace is not None:
            w = _load_subspace(args.subspace, dim)
            rng = np.random.default_rng(args.seed)
            g = rng.standard_normal(w.dim) + 1j * rng.standard_normal(w.dim)
            f = w.basis @ g
        else:
            if dim is None:
                raise UsageError("gen vector needs --dim or --subspace")
            rng = np.random.default_rng(args.seed)
            f = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
        _emit_matrix(f[:, None], "vector", args.out)
    return EXIT_OK


def cmd_classify(args):
    frame = _load_frame(args.frame)
    if args.subspace is None:
        rep = classify(frame, args.tol)
        print(
            f"A={rep.lower_bound:.12g} B={rep.upper_bound:.12g} frame={rep.is_frame} "
            f"tight={rep.is_tight} unit_norm={rep.is_unit_norm} funtf={rep.is_funtf} onb={rep.is_onb}"
        )
        report = {"command": "classify", "tolerance": args.tol, "frame": rep.to_dict()}
        ok = rep.is_frame
    else:
        w = _load_subspace(args.subspace, frame.dim)
        rep = is_subspace_frame(frame, w, args.tol)
        c = rep.coordinate
        print(
            f"A={c.lower_bound:.12g} B={c.upper_bound:.12g} r={w.dim} contained={rep.contained_in_w} "
            f"spans={rep.spans_w} subspace_frame={rep.is_subspace_frame} "
            f"subspace_funtf={rep.is_subspace_funtf}"
        )
        report = {"command": "classify", "tolerance": args.tol, "subspace_dim": w.dim, "subspace_frame": rep.to_dict()}
        ok = rep.is_subspace_frame
    _emit_report(report, args.report)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_dual(args):
    frame = _load_frame(args.frame)
    try:
        if args.subspace is None:
            dual = dual_frame(frame, args.tol)
        else:
            dual = dual_subspace_frame(frame, _load_subspace(args.subspace, frame.dim), args.tol)
    except NotInvertibleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except NotInSubspaceError as exc:
        print(f"error: does not span W: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _emit_matrix(dual.matrix, "frame", args.out)
    if args.out is not None:
        print(f"wrote dual of {frame.n_vectors} vectors in C^{frame.dim} to {args.out}")
    return EXIT_OK


def _relative_error(approx, f):
    scale = np.linalg.norm(f)
    err = np.linalg.norm(approx - f)
    return float(err / scale) if scale > 0 else float(err)


def cmd_reconstruct(args):
    frame = _load_frame(args.frame)
    dual = _load_frame(args.dual)
    f = _load(args.vector, "vector")
    if f.shape[1] != 1:
        raise UsageError(f"vector file must be a single column, got {f.shape[0]}x{f.shape[1]}")
    f = f[:, 0]
    if dual.matrix.shape != frame.matrix.shape:
        raise UsageError(f"frame is {frame.dim}x{frame.n_vectors} but dual is {dual.dim}x{dual.n_vectors}")
    if f.shape[0] != frame.dim:
        raise UsageError(f"vector has length {f.shape[0]}, frame lives in C^{frame.dim}")
    if args.subspace is not None:
        w = _load_subspace(args.subspace, frame.dim)
        residual = float(subspace_residuals(w, f)[0])
        if residual > args.tol * max(1.0, float(np.linalg.norm(f))):
            raise UsageError(f"vector is not in W (out-of-subspace residual {residual:.3e})")
    err1 = _relative_error(frame_reconstruct(frame, dual, f), f)
    err2 = _relative_error(frame_reconstruct(dual, frame, f), f)
    ok = err1 <= args.tol and err2 <= args.tol
    print(f"residual(sum <f,dual_j> phi_j)={err1:.3e} residual(sum <f,phi_j> dual_j)={err2:.3e}")
    _emit_report(
        {
            "command": "reconstruct",
            "tolerance": args.tol,
            "relative_error_dual_analysis": err1,
            "relative_error_frame_analysis": err2,
            "ok": ok,
        },
        args.report,
    )
    return EXIT_OK if ok else EXIT_FAIL


def cmd_potential(args):
    frame = _load_frame(args.frame)
    d = frame.dim
    report = {"command": "potential", "tolerance": args.tol}
    if args.subspace is not None:
        w = _load_subspace(args.subspace, frame.dim)
        try:
            report["fp_restricted"] = restricted_frame_potential(frame, w, args.tol)
        except NotInSubspaceError as exc:
            raise UsageError(str(exc)) from None
        d = w.dim
        report["subspace_dim"] = d
        report["fp_coordinates"] = frame_potential(coordinate_frame(frame, w))
    fp = frame_potential(frame)
    fp_trace = frame_potential_via_trace(frame)
    minimum = fp_minimum(frame.n_vectors, d)
    report.update(fp=fp, fp_trace=fp_trace, difference=fp - fp_trace, minimum=minimum, dim=d, s=frame.n_vectors)
    print(f"FP={fp:.12g} FP_trace={fp_trace:.12g} diff={fp - fp_trace:.3e} minimum={minimum:.12g}")
    _emit_report(report, args.report)
    return EXIT_OK


def cmd_minimize(args):
    if (args.dim is None) == (args.subspace is None):
        raise UsageError("minimize needs exactly one of --dim or --subspace")
    cfg = MinimizerConfig(seed=args.seed, max_iters=args.max_iters, grad_tol=args.grad_tol, fp_tol=args.fp_tol)
    report = {
        "command": "minimize",
        "seed": args.seed,
        "s": args.s,
        "tolerance": args.tol,
        "max_iters": cfg.max_iters,
        "grad_tol": cfg.grad_tol,
        "fp_tol": cfg.fp_tol,
    }
    if args.subspace is not None:
        w = _load_subspace(args.subspace)
        result = minimize_fp_subspace(args.s, w, cfg)
        check = is_subspace_frame(result.frame, w, args.tol)
        coords = check.coordinate
        report["subspace_dim"] = w.dim
        report["classification"] = check.to_dict()
        d = w.dim
    else:
        result = minimize_fp(args.s, args.dim, cfg)
        coords = classify(result.frame, args.tol)
        report["classification"] = coords.to_dict()
        d = args.dim
    if args.s <= d:
        gram = result.frame.matrix.conj().T @ result.frame.matrix
        gram_err = float(np.max(np.abs(gram - np.eye(args.s))))
        report["gram_identity_error"] = gram_err
        shape = f"orthonormal (max |G - I| = {gram_err:.3e})"
    else:
        shape = f"funtf={coords.is_funtf} A={coords.lower_bound:.12g}"
    report.update(result.to_dict())
    _emit_matrix(result.frame.matrix, "frame", args.out)
    if args.trajectory_out is not None:
        write_trajectory(args.trajectory_out, result.fp_trajectory)
    _emit_report(report, args.report)
    status = "converged" if result.converged else "NOT converged"
    print(
        f"{status} after {result.iterations} iterations: FP={result.final_fp:.12g} "
        f"target={result.target_fp:.12g} {shape}",
        file=sys.stdout if args.out is not None else sys.stderr,
    )
    return EXIT_OK if result.converged else EXIT_FAIL


def build_parser():
    p = argparse.ArgumentParser(prog="subframes", description="Finite frames for C^N and its subspaces.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a frame, subspace basis or vector")
    g.add_argument("kind", choices=["harmonic", "random", "subspace", "vector"])
    g.add_argument("--s", type=_count, help="number of frame vectors")
    g.add_argument("--n", type=_count, help="ambient dimension N")
    g.add_argument("--dim", type=_count, help="dimension (alias of --n for random/vector)")
    g.add_argument("--r", type=_count, help="subspace dimension")
    g.add_argument("--subspace", help="draw the vector inside this subspace (gen vector)")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", help="output matrix file (default: standard output)")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("classify", help="frame bounds and FUNTF/ONB flags")
    c.add_argument("--frame", required=True)
    c.add_argument("--subspace")
    c.add_argument("--tol", type=_positive_tol, default=DEFAULT_TOL)
    c.add_argument("--report")
    c.set_defaults(func=cmd_classify)

    d = sub.add_parser("dual", help="canonical dual (or dual subspace) frame")
    d.add_argument("--frame", required=True)
    d.add_argument("--subspace")
    d.add_argument("--tol", type=_positive_tol, default=DEFAULT_TOL)
    d.add_argument("--out")
    d.set_defaults(func=cmd_dual)

    r = sub.add_parser("reconstruct", help="check both dual-frame expansions of a vector")
    r.add_argument("--frame", required=True)
    r.add_argument("--dual", required=True)
    r.add_argument("--vector", required=True)
    r.add_argument("--subspace")
    r.add_argument("--tol", type=_positive_tol, default=DEFAULT_TOL)
    r.add_argument("--report")
    r.set_defaults(func=cmd_reconstruct)

    fp = sub.add_parser("potential", help="frame potential, trace form and theoretical minimum")
    fp.add_argument("--frame", required=True)
    fp.add_argument("--subspace")
    fp.add_argument("--tol", type=_positive_tol, default=DEFAULT_TOL)
    fp.add_argument("--report")
    fp.set_defaults(func=cmd_potential)

    m = sub.add_parser("minimize", help="minimize the frame potential")
    m.add_argument("--s", type=_count, required=True)
    m.add_argument("--dim", type=_count)
    m.add_argument("--subspace")
    m.add_argument("--seed", type=int, default=0)
    m.add_argument("--max-iters", type=int, default=10000)
    m.add_argument("--grad-tol", type=_positive_tol, default=1e-9)
    m.add_argument("--fp-tol", type=_positive_tol, default=1e-10)
    m.add_argument("--tol", type=_positive_tol, default=DEFAULT_TOL, help="classification tolerance")
    m.add_argument("--out")
    m.add_argument("--trajectory-out")
    m.add_argument("--report")
    m.set_defaults(func=cmd_minimize)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, FrameError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

