"""Command-line interface with deterministic, line-oriented reports.

Every report opens with the command name and the sha256 of the input file,
followed by ``key: value`` result lines in a fixed order.  Exit codes:
0 success, 1 user error (bad file, bad flags), 2 refusal (a requested
deletion-restriction computation whose hypothesis fails).
"""

from __future__ import annotations

import argparse
import hashlib
import sys

from .arrangement import ParseError, ToricArrangement, parse, serialize, weyl
from .cohomology import (
    DrHypothesisError,
    dcp_poincare,
    dr_poincare,
    find_dr_ordering,
)
from .forms import degree2_relations, generators, wedge_monomials
from .poset import build_poset, is_unimodular

EXIT_OK = 0
EXIT_USER_ERROR = 1
EXIT_REFUSED = 2


class _Parser(argparse.ArgumentParser):
    """argparse variant whose usage errors exit with code 1, not 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(self.prog + ": error: " + message)


def _load(path: str) -> tuple[ToricArrangement, str]:
    with open(path, "rb") as fh:
        data = fh.read()
    return parse(data.decode("utf-8")), hashlib.sha256(data).hexdigest()


def _emit(key, value):
    text = str(value)
    print(f"{key}: {text}" if text else f"{key}:")


def _header(command: str, path: str, digest: str):
    _emit("command", command)
    _emit("input", path)
    _emit("sha256", digest)


def _poly_str(poly) -> str:
    return " ".join(str(c) for c in poly.coefficients)


def _ordering_str(ordering) -> str:
    if ordering is None:
        return "none"
    return ",".join(str(i + 1) for i in ordering)


def _parse_ordering(text: str, n: int) -> tuple[int, ...]:
    try:
        ordering = tuple(int(tok) - 1 for tok in text.split(","))
    except ValueError:
        raise ValueError(f"bad ordering {text!r}: expected comma-separated integers")
    if sorted(ordering) != list(range(n)):
        raise ValueError(f"ordering {text!r} is not a permutation of 1..{n}")
    return ordering


def cmd_analyze(args) -> int:
    arr, digest = _load(args.file)
    _header("analyze", args.file, digest)
    _emit("l", arr.dim)
    _emit("n", arr.n)
    _emit("unimodular", str(is_unimodular(arr)).lower())
    report = find_dr_ordering(arr)
    _emit("dr_type", str(report.verdict).lower())
    _emit("dr_ordering", _ordering_str(report.ordering))
    _emit("poincare_dcp", _poly_str(dcp_poincare(arr)))
    if report.ordering is not None:
        try:
            _emit("poincare_dr", _poly_str(dr_poincare(arr, report.ordering)))
        except DrHypothesisError:
            _emit("poincare_dr", "unavailable")
    else:
        _emit("poincare_dr", "unavailable")
    _emit("poset_layers", " ".join(str(s) for s in build_poset(arr).layer_sizes()))
    return EXIT_OK


def _basis_str(mat) -> str:
    return "[" + "; ".join(" ".join(str(x) for x in row) for row in mat.entries) + "]"


def _values_str(values) -> str:
    return "[" + " ".join(f"{v.numerator}/{v.denominator}" for v in values) + "]"


def cmd_poset(args) -> int:
    arr, digest = _load(args.file)
    _header("poset", args.file, digest)
    poset = build_poset(arr)
    _emit("l", arr.dim)
    _emit("n", arr.n)
    _emit("components", len(poset.components))
    _emit("layer_sizes", " ".join(str(s) for s in poset.layer_sizes()))
    for k, comp in enumerate(poset.components, start=1):
        _emit(f"component {k}",
              f"codim={comp.codim} dim={comp.dim} "
              f"basis={_basis_str(comp.sat_basis)} values={_values_str(comp.values)}")
    for i, j in poset.covers():
        _emit("cover", f"{i + 1} < {j + 1}")
    return EXIT_OK


def cmd_poincare(args) -> int:
    arr, digest = _load(args.file)
    _header("poincare", args.file, digest)
    _emit("method", args.method)
    if args.method == "dcp":
        if args.ordering is not None:
            raise ValueError("--ordering only applies to --method=dr")
        _emit("poincare", _poly_str(dcp_poincare(arr)))
        return EXIT_OK
    if args.ordering is not None:
        ordering = _parse_ordering(args.ordering, arr.n)
    else:
        report = find_dr_ordering(arr)
        if report.ordering is None:
            raise DrHypothesisError(
                "no ordering satisfies the deletion-restriction condition")
        ordering = report.ordering
    _emit("ordering", _ordering_str(ordering))
    _emit("poincare", _poly_str(dr_poincare(arr, ordering)))
    return EXIT_OK


def cmd_unimodular(args) -> int:
    arr, digest = _load(args.file)
    _header("unimodular", args.file, digest)
    _emit("unimodular", str(is_unimodular(arr)).lower())
    return EXIT_OK


def cmd_drtype(args) -> int:
    arr, digest = _load(args.file)
    _header("drtype", args.file, digest)
    report = find_dr_ordering(arr)
    _emit("dr_type", str(report.verdict).lower())
    _emit("dr_ordering", _ordering_str(report.ordering))
    _emit("step_counts",
          " ".join(str(c) for c in report.step_counts) if report.ordering else "none")
    return EXIT_OK


def cmd_weyl(args) -> int:
    arr = weyl(args.family, args.rank, simple_only=args.simple_only)
    sys.stdout.write(serialize(arr))
    return EXIT_OK


def cmd_relations(args) -> int:
    arr, digest = _load(args.file)
    _header("relations", args.file, digest)
    monos = wedge_monomials(arr.dim, arr.n)
    gens = generators(arr)
    basis = degree2_relations(arr, samples=args.samples, tol=args.tol, seed=args.seed)
    _emit("samples", basis.samples)
    _emit("tol", args.tol)
    _emit("seed", args.seed)
    _emit("generators", " ".join(g.name() for g in gens))
    _emit("monomials", len(monos))
    _emit("monomial_order",
          " ".join(f"{gens[a].name()}^{gens[b].name()}" for a, b in monos))
    h2 = dcp_poincare(arr).coefficient(2)
    _emit("nullity", basis.nullity)
    _emit("expected_h2", h2)
    _emit("consistent", str(len(monos) - basis.nullity == h2).lower())
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="toricarr",
                     description="exact computations with toric arrangements")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report on an arrangement file")
    p.add_argument("file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("poset", help="components and covering relations")
    p.add_argument("file")
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("poincare", help="Poincare polynomial of the complement")
    p.add_argument("--method", choices=("dcp", "dr"), required=True)
    p.add_argument("--ordering", help="comma-separated 1-based hypersurface order")
    p.add_argument("file")
    p.set_defaults(func=cmd_poincare)

    p = sub.add_parser("unimodular", help="subset-connectivity test")
    p.add_argument("file")
    p.set_defaults(func=cmd_unimodular)

    p = sub.add_parser("drtype", help="deletion-restriction ordering search")
    p.add_argument("file")
    p.set_defaults(func=cmd_drtype)

    p = sub.add_parser("weyl", help="emit a toric Weyl arrangement file")
    p.add_argument("--family", choices=("A", "B", "C", "D", "G2"), required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--simple-only", action="store_true",
                   help="use only the simple roots")
    p.set_defaults(func=cmd_weyl)

    p = sub.add_parser("relations", help="degree-2 relations among log 1-forms")
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("file")
    p.set_defaults(func=cmd_relations)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(exc.code, file=sys.stderr)
            return EXIT_USER_ERROR
        return EXIT_USER_ERROR if exc.code else EXIT_OK
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"toricarr: {exc}", file=sys.stderr)
        return EXIT_USER_ERROR
    except (OSError, ValueError) as exc:
        print(f"toricarr: {exc}", file=sys.stderr)
        return EXIT_USER_ERROR
    except DrHypothesisError as exc:
        print(f"toricarr: refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
