"""Command-line front end.

Subcommands: invariants, certify, trace, extremal, verify, g6.  Graphs
arrive as graph6 text, either as a positional argument or one per line
on standard input.  Exit codes: 0 success, 1 a counterexample or
property violation was found, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from hamcert.graph6 import Graph6Error, parse_graph6, to_graph6
from hamcert.graphs import Graph, min_degree, with_edges
from hamcert.invariants import (
    chromatic_number,
    independence_number,
    max_clique,
    vertex_connectivity,
)
from hamcert.cycles import find_hamiltonian_cycle
from hamcert.harness import verify_order
from hamcert.theorem import (
    HypothesisError,
    build_extremal,
    certify,
    format_certificate,
    format_trace,
    trace_proof,
)


@dataclass(frozen=True)
class CommandOutcome:
    exit_code: int
    payload: str


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hamcert",
        description="Exact invariant solvers and certified Hamiltonicity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="print the invariant profile of a graph")
    p.add_argument("graph", nargs="?", help="graph6 string (stdin if omitted)")

    p = sub.add_parser("certify", help="certify one graph against the theorem")
    p.add_argument("graph", nargs="?", help="graph6 string (stdin if omitted)")
    p.add_argument("--k", type=int, required=True, help="connectivity parameter")

    p = sub.add_parser("trace", help="print the mechanized proof trace")
    p.add_argument("graph", nargs="?", help="graph6 string (stdin if omitted)")
    p.add_argument("--k", type=int, required=True, help="connectivity parameter")

    p = sub.add_parser("extremal", help="emit the extremal graph as graph6")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("verify", help="sweep a whole graph population")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k-min", type=int, default=None)
    p.add_argument("--k-max", type=int, default=None)
    p.add_argument("--stream", default=None, metavar="FILE",
                   help="graph6 file ('-' for stdin) instead of internal enumeration")

    p = sub.add_parser("g6", help="graph6 codec utility")
    p.add_argument("mode", choices=["encode", "decode"])
    p.add_argument("text", nargs="?", help="input line (stdin if omitted)")
    return parser


def _input_lines(arg: str | None) -> list[str]:
    if arg is not None:
        return [arg]
    return [line for line in (raw.strip() for raw in sys.stdin) if line]


def _each_graph(arg, handler) -> CommandOutcome:
    """Run handler(g6, graph) per input line; worst severity wins."""
    out: list[str] = []
    code = 0
    for text in _input_lines(arg):
        try:
            g = parse_graph6(text)
        except Graph6Error as err:
            out.append(f"error: {text}: {err}")
            code = 2
            continue
        line_code, payload = handler(text, g)
        out.append(payload)
        code = max(code, line_code)
    if not out:
        return CommandOutcome(2, "error: no input graphs")
    return CommandOutcome(code, "\n".join(out))


def _cmd_invariants(args) -> CommandOutcome:
    def handler(g6: str, g: Graph):
        chi = chromatic_number(g)[0]
        alpha = independence_number(g)[0]
        omega = max_clique(g).bit_count()
        ham = g.n >= 3 and find_hamiltonian_cycle(g) is not None
        fields = [
            f"n={g.n}",
            f"kappa={vertex_connectivity(g)}",
            f"chi={chi}",
            f"alpha={alpha}",
            f"omega={omega}",
            f"mindeg={min_degree(g)}",
            f"hamiltonian={'yes' if ham else 'no'}",
        ]
        return 0, f"{g6} " + " ".join(fields)

    return _each_graph(args.graph, handler)


def _cmd_certify(args) -> CommandOutcome:
    def handler(g6: str, g: Graph):
        try:
            cert = certify(g, args.k)
        except HypothesisError as err:
            return 2, f"error: {g6}: hypothesis fails ({err.flag}): {err}"
        code = 1 if cert.kind == "counterexample" else 0
        return code, format_certificate(g, cert)

    return _each_graph(args.graph, handler)


def _cmd_trace(args) -> CommandOutcome:
    def handler(g6: str, g: Graph):
        try:
            trace = trace_proof(g, args.k)
        except HypothesisError as err:
            return 2, f"error: {g6}: hypothesis fails ({err.flag}): {err}"
        except ValueError as err:
            return 2, f"error: {g6}: {err}"
        return (0 if trace.all_passed else 1), format_trace(trace)

    return _each_graph(args.graph, handler)


def _cmd_extremal(args) -> CommandOutcome:
    try:
        g = build_extremal(args.k, args.n)
    except ValueError as err:
        return CommandOutcome(2, f"error: {err}")
    return CommandOutcome(0, to_graph6(g))


def _cmd_verify(args) -> CommandOutcome:
    k_min = args.k_min if args.k_min is not None else 2
    k_max = args.k_max if args.k_max is not None else args.n - 1
    try:
        if args.stream is None:
            report = verify_order(args.n, (k_min, k_max))
        elif args.stream == "-":
            report = verify_order(args.n, (k_min, k_max), source="graph6", stream=sys.stdin)
        else:
            with open(args.stream, encoding="ascii") as handle:
                report = verify_order(args.n, (k_min, k_max), source="graph6", stream=handle)
    except (ValueError, OSError) as err:
        return CommandOutcome(2, f"error: {err}")
    bad = report.counterexamples or report.lemma1_violations
    return CommandOutcome(1 if bad else 0, report.summary())


def _cmd_g6(args) -> CommandOutcome:
    out: list[str] = []
    code = 0
    for text in _input_lines(args.text):
        try:
            if args.mode == "decode":
                g = parse_graph6(text)
                edges = " ".join(f"{u}-{v}" for u, v in g.edges())
                out.append(f"{g.n} {edges}".rstrip())
            else:
                tokens = text.split()
                n = int(tokens[0])
                edges = []
                for token in tokens[1:]:
                    u, _, v = token.partition("-")
                    edges.append((int(u), int(v)))
                out.append(to_graph6(with_edges(n, edges)))
        except (Graph6Error, ValueError, IndexError) as err:
            out.append(f"error: {text}: {err}")
            code = 2
    if not out:
        return CommandOutcome(2, "error: no input")
    return CommandOutcome(code, "\n".join(out))


_HANDLERS = {
    "invariants": _cmd_invariants,
    "certify": _cmd_certify,
    "trace": _cmd_trace,
    "extremal": _cmd_extremal,
    "verify": _cmd_verify,
    "g6": _cmd_g6,
}


def run(argv) -> CommandOutcome:
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        # argparse already wrote usage/help text to its own streams
        return CommandOutcome(0 if exc.code in (0, None) else 2, "")
    return _HANDLERS[args.command](args)


def main(argv=None) -> int:
    outcome = run(sys.argv[1:] if argv is None else argv)
    if outcome.payload:
        print(outcome.payload)
    return outcome.exit_code
