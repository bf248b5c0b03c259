import argparse
import logging
import sys
from typing import List, Optional, Tuple
from circulant import config
from circulant.errors import CirculantError, InconsistencyError
from circulant.graph import Graph, complement
from circulant.serialization import dumps, load_graph
from circulant.spec import CirculantSpec, CmpSpec, build_circulant, build_cmp
from workbench.core import (EXIT_INCONSISTENT, EXIT_INVALID, CommandResult, report_blocks,
                            run_autgroup, run_break, run_construct, run_dnumber, run_family,
                            run_label, run_verify)

logger = logging.getLogger(__name__)


def int_list(text: str) -> List[int]:
    """Parse "1,2,3" into [1, 2, 3]."""
    try:
        return [int(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _add_spec_source(parser, graph_file=True, general=True):
    parser.add_argument("--m", type=int, help="multiplicity m of C(m,p)")
    parser.add_argument("--p", type=int, help="period p of C(m,p)")
    if general:
        parser.add_argument("--n", type=int, help="order of a general circulant graph")
        parser.add_argument("--generators", type=int_list,
                            help="generator set of a general circulant graph, e.g. 1,4")
    if graph_file:
        parser.add_argument("--graph", help="JSON file holding a graph or circulant spec")


def resolve_graph(args) -> Tuple[Graph, Optional[CmpSpec]]:
    """
    Build the graph named on the command line: C(m,p), a general circulant, or a JSON file.
    """
    m, p = getattr(args, "m", None), getattr(args, "p", None)
    if m is not None or p is not None:
        if m is None or p is None:
            raise CirculantError("--m and --p must be given together")
        spec = CmpSpec(m, p)
        graph = build_cmp(spec)
    elif getattr(args, "n", None) is not None:
        if args.generators is None:
            raise CirculantError("--n needs --generators")
        spec = None
        graph = build_circulant(CirculantSpec(args.n, tuple(args.generators)))
    elif getattr(args, "graph", None):
        spec = None
        graph = load_graph(args.graph)
    else:
        raise CirculantError("give --m/--p, --n/--generators or --graph")
    if getattr(args, "complement", False):
        graph, spec = complement(graph), None
    return graph, spec


def resolve_cmp(args) -> CmpSpec:
    if args.m is None or args.p is None:
        raise CirculantError("--m and --p are required")
    return CmpSpec(args.m, args.p)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "dot", "text"), default="json",
                        help="output format (dot only for construct)")
    common.add_argument("--verbose", action="store_true", help="log debug output to stderr")
    common.add_argument("--threads", type=int, default=None,
                        help="worker processes for sampling (default: all cores)")
    common.add_argument("--seed", type=int, default=config.DEFAULT_SEED,
                        help="seed for random labelings")
    parser = argparse.ArgumentParser(
        prog="circdist",
        description="Circulant graphs C(m,p) and their distinguishing numbers.")
    commands = parser.add_subparsers(dest="command", required=True)

    construct = commands.add_parser("construct", parents=[common], help="build a graph")
    _add_spec_source(construct, graph_file=False)

    dnumber = commands.add_parser("dnumber", parents=[common], help="distinguishing number")
    _add_spec_source(dnumber)
    dnumber.add_argument("--exact", action="store_true", help="run the exact oracle")
    dnumber.add_argument("--formula", action="store_true", help="use the closed form")
    dnumber.add_argument("--rmax", type=int, default=config.DEFAULT_R_MAX,
                         help="largest number of labels the oracle tries")
    dnumber.add_argument("--cap", type=int, default=None,
                         help="largest number of labelings the oracle tests")

    label = commands.add_parser("label", parents=[common],
                                help="explicit distinguishing labeling of C(m,p)")
    _add_spec_source(label, graph_file=False, general=False)
    label.add_argument("--multipartite", action="store_true",
                       help="multipartite labeling (p in 2, 3, 4)")

    verify = commands.add_parser("verify", parents=[common], help="test a labeling")
    _add_spec_source(verify)
    verify.add_argument("--labels", type=int_list, required=True)

    breaker = commands.add_parser("break", parents=[common],
                                  help="automorphism preserving an m-labeling")
    _add_spec_source(breaker, graph_file=False, general=False)
    breaker.add_argument("--labels", type=int_list, default=None)
    breaker.add_argument("--samples", type=int, default=None,
                         help="break this many random labelings instead")

    autgroup = commands.add_parser("autgroup", parents=[common], help="automorphism group")
    _add_spec_source(autgroup)
    autgroup.add_argument("--elements", action="store_true",
                          help="list the elements and check closure")
    autgroup.add_argument("--complement", action="store_true",
                          help="work on the complement graph")
    autgroup.add_argument("--cap", type=int, default=None, help="largest group order accepted")

    family = commands.add_parser("family", parents=[common],
                                 help="family with prescribed distinguishing numbers")
    family.add_argument("--d", type=int_list, required=True, help="targets, e.g. 3,4,5")
    family.add_argument("--minimal", action="store_true", help="smallest common order")
    family.add_argument("--disconnected", action="store_true",
                        help="clique plus path members of order max(d)")
    family.add_argument("--samples", type=int, default=config.RANDOM_SAMPLES,
                        help="random m-labelings broken per member")
    return parser


def dispatch(args) -> CommandResult:
    if args.command == "construct":
        return run_construct(*resolve_graph(args))
    if args.command == "dnumber":
        graph, spec = resolve_graph(args)
        exact, formula = args.exact, args.formula
        if not exact and not formula:
            formula, exact = spec is not None, spec is None
        return run_dnumber(graph, spec, exact, formula, args.rmax, args.cap)
    if args.command == "label":
        return run_label(resolve_cmp(args), args.multipartite)
    if args.command == "verify":
        graph, _ = resolve_graph(args)
        return run_verify(graph, args.labels)
    if args.command == "break":
        if args.labels is None and args.samples is None:
            raise CirculantError("give --labels or --samples")
        return run_break(resolve_cmp(args), args.labels, args.samples or 0, args.seed,
                         args.threads)
    if args.command == "autgroup":
        graph, _ = resolve_graph(args)
        return run_autgroup(graph, args.elements, args.cap)
    return run_family(args.d, args.minimal, args.disconnected, args.samples, args.seed,
                      args.threads)


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    try:
        result = dispatch(args)
    except InconsistencyError as e:
        print(f"inconsistency: {e}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except (CirculantError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID

    if args.format == "dot":
        if result.dot is None:
            print("error: dot output is only available for construct", file=sys.stderr)
            return EXIT_INVALID
        print(result.dot)
    elif args.format == "text":
        for block in report_blocks(result):
            print(block)
    else:
        print(dumps(result.document))
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
