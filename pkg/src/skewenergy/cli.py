"""Command-line front end.

Subcommands: charpoly, energy, compare, construct, verify,
verify-oracle, crossover.  Graphs come from oriented edge list files
(--file) or from the named constructions (--construct with --n/--m).
Output is TSV by default; energy, verify and crossover also emit JSON.
All output is deterministic for fixed input and flags.
"""

from __future__ import annotations

import argparse
import json
import sys

from .charpoly import charpoly, quasi_compare
from .energy import energy_report
from .extremal import crossover_table, verify_theorem_1
from .graphs import (
    GraphError,
    OrientedGraph,
    construct_b_plus,
    construct_o_plus,
    oriented_cycle,
    oriented_path,
    oriented_star,
    parse_graph,
    serialize_graph,
)
from .subgraphs import a4_bound_check, coefficient_by_expansion

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2  # argparse's own code
EXIT_GRAPH_ERROR = 3
EXIT_DOMAIN_ERROR = 4
EXIT_INTERNAL = 5

_EXIT_HELP = """\
exit codes:
  0  success (verify: verdict pass)
  1  a verification subcommand reported a failure
  2  command-line usage error
  3  invalid graph input (parse error or invariant violation)
  4  parameter outside an operation's valid window
  5  internal exactness failure (a bug; please report)
"""

_CONSTRUCTIONS = ("o-plus", "b-plus", "star", "path", "cycle-odd", "cycle-even")


def _construct(name: str, n: int | None, m: int | None) -> OrientedGraph:
    if n is None:
        raise ValueError(f"--construct {name} needs --n")
    if name == "o-plus":
        if m is None:
            raise ValueError("--construct o-plus needs --m")
        return construct_o_plus(n, m)
    if name == "b-plus":
        if m is None:
            raise ValueError("--construct b-plus needs --m")
        return construct_b_plus(n, m)
    if name == "star":
        return oriented_star(n)
    if name == "path":
        return oriented_path(n)
    if name == "cycle-odd":
        return oriented_cycle(n, "odd")
    if name == "cycle-even":
        return oriented_cycle(n, "even")
    raise ValueError(f"unknown construction {name!r}")


def _add_source_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--file", help="path to an oriented edge list file ('-' for stdin)")
    sub.add_argument("--construct", choices=_CONSTRUCTIONS, help="use a named construction")
    sub.add_argument("--n", type=int, help="vertex count for --construct")
    sub.add_argument("--m", type=int, help="arc count for --construct (o-plus, b-plus)")


def _load_source(args: argparse.Namespace) -> tuple[str, OrientedGraph]:
    if (args.file is None) == (args.construct is None):
        raise ValueError("exactly one of --file and --construct is required")
    if args.file is not None:
        text = sys.stdin.read() if args.file == "-" else open(args.file).read()
        return args.file, parse_graph(text)
    label = args.construct
    if args.n is not None:
        label += f"(n={args.n}" + (f",m={args.m})" if args.m is not None else ")")
    return label, _construct(args.construct, args.n, args.m)


def _resolve_spec(spec: str) -> tuple[str, OrientedGraph]:
    """A compare operand: either 'name:n[:m]' for a construction or a file path."""
    head, _, rest = spec.partition(":")
    if head in _CONSTRUCTIONS:
        parts = rest.split(":") if rest else []
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise ValueError(f"malformed construction spec {spec!r}") from None
        n = nums[0] if nums else None
        m = nums[1] if len(nums) > 1 else None
        return spec, _construct(head, n, m)
    text = sys.stdin.read() if spec == "-" else open(spec).read()
    return spec, parse_graph(text)


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _cmd_charpoly(args) -> int:
    _, g = _load_source(args)
    print(charpoly(g).line())
    return EXIT_OK


def _cmd_energy(args) -> int:
    label, g = _load_source(args)
    rep = energy_report(g, tol=args.tol)
    if args.emit == "json":
        print(
            json.dumps(
                {
                    "graph": label,
                    "spectral": rep.spectral,
                    "integral": rep.integral,
                    "discrepancy": rep.discrepancy,
                    "nodes": rep.quadrature_nodes,
                    "tolerance_met": rep.tolerance_met,
                },
                indent=2,
            )
        )
    else:
        print("graph\tspectral\tintegral\tdiscrepancy\tnodes\ttolerance_met")
        print(
            f"{label}\t{_fmt(rep.spectral)}\t{_fmt(rep.integral)}"
            f"\t{_fmt(rep.discrepancy)}\t{rep.quadrature_nodes}\t{str(rep.tolerance_met).lower()}"
        )
    return EXIT_OK


def _cmd_compare(args) -> int:
    label_a, ga = _resolve_spec(args.a)
    label_b, gb = _resolve_spec(args.b)
    pa, pb = charpoly(ga), charpoly(gb)
    verdict = quasi_compare(pa, pb)
    print(f"verdict\t{verdict.value}")
    print(f"a\t{label_a}\t{pa.line()}")
    print(f"b\t{label_b}\t{pb.line()}")
    return EXIT_OK


def _cmd_construct(args) -> int:
    g = _construct(args.name, args.n, args.m)
    sys.stdout.write(serialize_graph(g))
    return EXIT_OK


def _cmd_verify(args) -> int:
    cert = verify_theorem_1(args.n, args.m, jobs=args.jobs)
    if args.emit == "tsv":
        d = cert.to_dict()
        d["min_coeffs"] = " ".join(str(c) for c in cert.min_coeffs)
        keys = list(d)
        print("\t".join(keys))
        print("\t".join(str(d[k]) for k in keys))
    else:
        print(json.dumps(cert.to_dict(), indent=2))
    return EXIT_OK if cert.verdict == "pass" else EXIT_VERIFY_FAILED


def _cmd_verify_oracle(args) -> int:
    _, g = _load_source(args)
    poly = charpoly(g)
    ok = True
    print("index\tcharpoly\texpansion\tmatch")
    for i in range(0, g.n + 1, 2):
        lhs = poly.coefficient(i)
        rhs = coefficient_by_expansion(g, i)
        match = lhs == rhs
        ok = ok and match
        print(f"{i}\t{lhs}\t{rhs}\t{str(match).lower()}")
    if g.n >= 4:
        b = a4_bound_check(g)
        print(f"a4-bound\t{b.lower_bound}\ta4={b.a4}\ttight={str(b.tight).lower()}")
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def _cmd_crossover(args) -> int:
    rows = crossover_table(args.n)
    if args.emit == "json":
        print(
            json.dumps(
                [
                    {
                        "m": r.m,
                        "a4_o_plus": r.a4_o_plus,
                        "a4_b_plus": r.a4_b_plus,
                        "winner": r.winner,
                    }
                    for r in rows
                ],
                indent=2,
            )
        )
    else:
        print("m\ta4_o_plus\ta4_b_plus\twinner")
        for r in rows:
            print(f"{r.m}\t{r.a4_o_plus}\t{r.a4_b_plus}\t{r.winner}")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewenergy",
        description="Exact skew characteristic polynomials and skew energies of oriented graphs.",
        epilog=_EXIT_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("charpoly", help="exact even coefficients, one line 'n: a0 a2 ...'")
    _add_source_args(p)
    p.set_defaults(func=_cmd_charpoly)

    p = sub.add_parser("energy", help="spectral and integral skew energy with diagnostics")
    _add_source_args(p)
    p.add_argument("--tol", type=float, default=1e-9, help="quadrature tolerance (default 1e-9)")
    p.add_argument("--emit", choices=("tsv", "json"), default="tsv")
    p.set_defaults(func=_cmd_energy)

    p = sub.add_parser(
        "compare",
        help="quasi-order verdict between two graphs (files or 'name:n[:m]' specs)",
    )
    p.add_argument("a", help="file path or construction spec like o-plus:6:7")
    p.add_argument("b", help="file path or construction spec like b-plus:6:7")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("construct", help="emit a named construction as an edge list")
    p.add_argument("--name", choices=_CONSTRUCTIONS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", help="exhaustive minimum-energy scan at (n, m)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1, help="class-level worker processes")
    p.add_argument("--emit", choices=("json", "tsv"), default="json")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser(
        "verify-oracle",
        help="cross-check exact coefficients against the subgraph expansion",
    )
    _add_source_args(p)
    p.set_defaults(func=_cmd_verify_oracle)

    p = sub.add_parser("crossover", help="quartic coefficients of both constructions per m")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--emit", choices=("tsv", "json"), default="tsv")
    p.set_defaults(func=_cmd_crossover)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GRAPH_ERROR
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GRAPH_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN_ERROR
    except RuntimeError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
