"""Command-line entry point.

Exit status is 0 on success, 1 when a mathematical precondition fails (for
example beta not dominated by lambda) and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import gt, stretch, tiling, weights
from .weights import DomainError, format_weight

DEFAULT_SEED = 0


class UsageError(Exception):
    pass


def _weight(text: str):
    try:
        return weights.parse_weight(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _integral(v, name: str):
    if any(int(a) != a for a in v):
        raise UsageError(f"{name} must have integer entries: {format_weight(v)}")
    if any(a < 0 for a in v):
        raise UsageError(f"{name} must have nonnegative entries: {format_weight(v)}")
    return tuple(int(a) for a in v)


def _pair(args):
    if args.lam is None or args.beta is None:
        raise UsageError("both -l/--lambda and -b/--beta are required")
    lam = _integral(args.lam, "lambda")
    beta = _integral(args.beta, "beta")
    if len(lam) != len(beta):
        raise UsageError(f"length mismatch: lambda has {len(lam)} parts, beta has {len(beta)}")
    if not weights.is_partition(lam):
        raise UsageError(f"lambda must be weakly decreasing: {format_weight(lam)}")
    return lam, beta


def cmd_kostka(args):
    lam, beta = _pair(args)
    count = gt.count_lattice_points(lam, beta)
    out = {"lambda": list(lam), "beta": list(beta), "kostka": count}
    lines = [str(count)]
    status = 0
    if args.verify:
        oracle = gt.kostka_ssyt(lam, beta)
        out.update(ssyt=oracle, agree=oracle == count)
        lines.append(f"ssyt count: {oracle} ({'agree' if oracle == count else 'DISAGREE'})")
        status = 0 if oracle == count else 1
    return out, lines, status


def cmd_poly(args):
    lam, beta = _pair(args)
    p = stretch.stretched_polynomial(lam, beta, max_n=args.max_n)
    out = {"lambda": list(lam), "beta": list(beta), "degree": p.degree,
           "polynomial": p.to_json(), "nonnegative": stretch.positivity_check(p)}
    return out, [str(p)], 0


def cmd_degree(args):
    lam, beta = _pair(args)
    deg = stretch.degree_stretched(lam, beta)
    out = {"lambda": list(lam), "beta": list(beta), "degree": deg}
    lines = [str(deg)]
    status = 0
    if args.interpolate:
        N = args.max_n if args.max_n is not None else deg + 2
        values = stretch.stretched_values(lam, beta, N)
        p = stretch.interpolate(values)
        out.update(interpolated_degree=p.degree, samples=N, values=values,
                   polynomial=p.to_json())
        agree = p.degree == deg
        lines.append(f"interpolated degree: {p.degree} from n = 1..{N} "
                     f"({'agree' if agree else 'DISAGREE'})")
        status = 0 if agree else 1
    return out, lines, status


def cmd_dim(args):
    lam, beta = _pair(args)
    d = tiling.dim_gt_polytope(lam, beta)
    return {"lambda": list(lam), "beta": list(beta), "dimension": d}, [str(d)], 0


def cmd_decompose(args):
    lam, beta = _pair(args)
    dec = weights.primitive_decomposition(lam, beta)
    pairs = dec.pairs
    out = {
        "lambda": list(lam),
        "beta": list(beta),
        "pairs": [[list(a), list(b)] for a, b in pairs],
        "split_indices": list(dec.split_indices),
        "sorted_beta": dec.sorted_beta,
        "primitive": len(pairs) == 1,
    }
    lines = [f"{format_weight(a)} | {format_weight(b)}" for a, b in pairs]
    return out, lines, 0


def cmd_tiling(args):
    sources = sum(x is not None for x in (args.pattern, args.lam, args.random))
    if sources != 1:
        raise UsageError("give exactly one of --pattern, -l/--lambda, --random")
    if args.pattern is not None:
        try:
            x = gt.GTPattern.from_text(Path(args.pattern).read_text())
        except (OSError, ValueError) as exc:
            raise UsageError(f"cannot read pattern file: {exc}") from None
        if not gt.is_gt_pattern(x):
            raise DomainError("pattern violates the Gelfand-Tsetlin inequalities")
    else:
        if args.lam is not None:
            lam = args.lam
        else:
            lam = tiling.random_partition(random.Random(args.seed), args.random)
        if not weights.is_partition(lam):
            raise UsageError(f"lambda must be weakly decreasing: {format_weight(lam)}")
        x = tiling.interior_point(lam)
    P = tiling.tiling(x)
    A = tiling.tiling_matrix(P)
    k = tiling.kernel_dimension(A)
    out = {
        "pattern": [[str(a) for a in row] for row in x.rows],
        "tiling": P.to_json(),
        "matrix": A.to_list(),
        "kernel_dimension": k,
    }
    lines = [P.render(), "tiling matrix:"]
    lines += ["  " + " ".join(str(a) for a in row) for row in A.rows] or ["  (no rows)"]
    lines.append(f"kernel dimension: {k}")
    return out, lines, 0


def cmd_schur(args):
    if args.lam is None:
        raise UsageError("-l/--lambda is required")
    lam = _integral(args.lam, "lambda")
    if not weights.is_partition(lam):
        raise UsageError(f"lambda must be weakly decreasing: {format_weight(lam)}")
    terms = gt.schur_monomials(lam)
    out = {"lambda": list(lam),
           "terms": [{"beta": list(b), "coefficient": c} for b, c in terms.items()]}
    lines = [f"{c} x^({format_weight(b)})" for b, c in terms.items()]
    return out, lines, 0


COMMANDS = {
    "kostka": (cmd_kostka, "Kostka number as a GT lattice-point count"),
    "poly": (cmd_poly, "stretched Kostka polynomial by exact interpolation"),
    "degree": (cmd_degree, "degree of the stretched Kostka polynomial from the formula"),
    "decompose": (cmd_decompose, "split (lambda, beta) into primitive pairs"),
    "tiling": (cmd_tiling, "tiling, tiling matrix and kernel dimension of a GT-pattern"),
    "dim": (cmd_dim, "dimension of the GT-polytope"),
    "schur": (cmd_schur, "monomial expansion of a Schur polynomial"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-l", "--lambda", dest="lam", type=_weight, metavar="L",
                        help="highest weight, comma separated, e.g. 4,2,2,0,0,0")
    common.add_argument("-b", "--beta", type=_weight, metavar="B",
                        help="weight, comma separated, same length as lambda")
    common.add_argument("--json", action="store_true", help="emit one line of JSON")

    parser = argparse.ArgumentParser(prog="gtkostka", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    parsers = {name: sub.add_parser(name, parents=[common], help=text)
               for name, (_, text) in COMMANDS.items()}
    parsers["kostka"].add_argument("--verify", action="store_true",
                                   help="cross-check against the tableau count")
    parsers["degree"].add_argument("--interpolate", action="store_true",
                                   help="cross-check by interpolating exact counts")
    for name in ("degree", "poly"):
        parsers[name].add_argument("--max-n", type=int, default=None,
                                   help="number of dilations to sample (default degree + 2)")
    parsers["tiling"].add_argument("--pattern", metavar="FILE",
                                   help="pattern file, one row per line, bottom row first")
    parsers["tiling"].add_argument("--random", type=int, metavar="R",
                                   help="use the interior point of a random rational lambda of length R")
    parsers["tiling"].add_argument("--seed", type=int, default=DEFAULT_SEED)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handler = COMMANDS[args.command][0]
    try:
        if getattr(args, "max_n", None) is not None and args.max_n < 2:
            raise UsageError("--max-n must be at least 2")
        out, lines, status = handler(args)
    except UsageError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=stderr)
        return 2
    except (DomainError, stretch.InterpolationError) as exc:
        print(f"{parser.prog} {args.command}: {exc}", file=stderr)
        return 1
    if args.json:
        print(json.dumps(out, sort_keys=True), file=stdout)
    else:
        print("\n".join(lines), file=stdout)
    return status


def main() -> None:
    sys.exit(run())
