"""Command-line interface.

Exit codes: 0 success / admissible, 1 domain rejection, 2 input or usage
error, 3 internal verification failure.
"""

import argparse
import sys

from . import io
from .characterize import kernel_dimension, random_admissible, validate_response
from .config import DEFAULT_TOLERANCES
from .errors import (
    ACNetError,
    FileFormatError,
    InadmissibleError,
    InvalidNetworkError,
    ShapeError,
    SynthesisVerificationError,
)
from .network import validate_network
from .response import boundary_currents, response_matrix, solve_network
from .synthesize import synthesize_network

EXIT_OK, EXIT_REJECT, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2, 3


def fmt(x):
    return f"{x:.17g}"


def fmt_complex(z):
    z = complex(z)
    return f"{z.real:.17g} {z.imag:+.17g}i"


def _emit(text, path, out):
    if path is None:
        out.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _print_verdict(verdict, out):
    for c in verdict.conditions:
        status = "ok" if c.passed else "FAIL"
        out.write(f"{c.name:<22} {status:<4} residual {fmt(c.residual)} threshold {fmt(c.threshold)}\n")
    out.write("eigenvalues of real part: " + " ".join(fmt(x) for x in verdict.eigenvalues) + "\n")
    if not verdict.kernel.passed:
        out.write(f"kernel dimension: {kernel_dimension(verdict)}\n")


def cmd_validate(args, tol, out):
    verdict, _ = validate_response(io.read_matrix(args.matrix), tol)
    _print_verdict(verdict, out)
    out.write("ADMISSIBLE\n" if verdict.admissible else "INADMISSIBLE\n")
    return EXIT_OK if verdict.admissible else EXIT_REJECT


def cmd_synthesize(args, tol, out):
    m = io.read_matrix(args.matrix)
    result = synthesize_network(m, minimize_interior=args.minimize_interior, tolerances=tol)
    net = result.network
    text = io.write_network(net)
    # summary goes to stderr when stdout carries the network file
    info = out if args.output else sys.stderr
    _emit(text, args.output, out)
    info.write(f"boundary nodes {net.boundary_count}\n")
    info.write(f"interior nodes {net.interior_count}\n")
    info.write(f"nodes {net.node_count}\n")
    info.write(f"edges {len(net.edges)}\n")
    info.write(f"residual {fmt(result.report.residual)}\n")
    return EXIT_OK


def _checked_network(path):
    net = io.read_network(path)
    report = validate_network(net)
    if report:
        raise InvalidNetworkError(report)
    return net


def cmd_respond(args, tol, out):
    net = _checked_network(args.network)
    _emit(io.write_matrix(response_matrix(net, tol)), args.output, out)
    return EXIT_OK


def cmd_solve(args, tol, out):
    net = _checked_network(args.network)
    v = io.read_vector(args.voltages)
    if v.size != net.boundary_count:
        raise ShapeError(f"voltage file has {v.size} entries, network has {net.boundary_count} boundary nodes")
    volts = solve_network(net, v, tol)
    currents = boundary_currents(net, volts)
    out.write("voltages\n")
    for k, z in enumerate(volts):
        out.write(f"{k} {fmt_complex(z)}\n")
    out.write("currents\n")
    for k, z in enumerate(currents):
        out.write(f"{k} {fmt_complex(z)}\n")
    return EXIT_OK


def cmd_roundtrip(args, tol, out):
    m = io.read_matrix(args.matrix)
    try:
        result = synthesize_network(m, minimize_interior=args.minimize_interior, tolerances=tol)
    except SynthesisVerificationError as exc:
        out.write(f"residual {fmt(exc.residual)} (relative)\n")
        raise
    rep = result.report
    out.write(f"interior nodes {rep.interior_count}\n")
    out.write(f"edges {rep.edge_count}\n")
    out.write(f"residual {fmt(rep.residual)}\n")
    out.write(f"relative residual {fmt(rep.relative_residual)}\n")
    return EXIT_OK if rep.relative_residual <= tol.roundtrip else EXIT_VERIFY


def cmd_gen(args, tol, out):
    if args.size < 2:
        raise ShapeError("--size must be at least 2")
    rm = random_admissible(args.size, args.seed, tol)
    _emit(io.write_matrix(rm.matrix), args.output, out)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="acnet", description=__doc__.splitlines()[0])
    parser.add_argument("--tol", type=float, default=None,
                        help="relative tolerance for all admissibility and round-trip checks")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check whether a matrix is an admissible response matrix")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("synthesize", help="build a network realizing a response matrix")
    p.add_argument("matrix")
    p.add_argument("-o", "--output")
    p.add_argument("--minimize-interior", action="store_true")
    p.set_defaults(func=cmd_synthesize)

    p = sub.add_parser("respond", help="compute the response matrix of a network")
    p.add_argument("network")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_respond)

    p = sub.add_parser("solve", help="node voltages and boundary currents for given boundary voltages")
    p.add_argument("network")
    p.add_argument("--voltages", required=True)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("roundtrip", help="synthesize then recompute the response")
    p.add_argument("matrix")
    p.add_argument("--minimize-interior", action="store_true")
    p.set_defaults(func=cmd_roundtrip)

    p = sub.add_parser("gen", help="write a random admissible matrix")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    tol = DEFAULT_TOLERANCES
    if args.tol is not None:
        if not args.tol > 0:
            sys.stderr.write("error: --tol must be positive\n")
            return EXIT_INPUT
        tol = tol.with_relative(args.tol)
    try:
        return args.func(args, tol, out)
    except (FileFormatError, ShapeError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except InadmissibleError as exc:
        sys.stderr.write(f"error: {exc}\n")
        _print_verdict(exc.verdict, sys.stderr)
        return EXIT_REJECT
    except InvalidNetworkError as exc:
        sys.stderr.write("error: invalid network\n")
        for line in exc.report:
            sys.stderr.write(f"  {line}\n")
        return EXIT_REJECT
    except SynthesisVerificationError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_VERIFY
    except ACNetError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
