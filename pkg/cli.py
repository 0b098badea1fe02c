"""Command-line front end for checking and converting symplectic matroids."""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from typing import Callable, Dict, List, Optional, Sequence

from axioms import DEFAULT_MAX_N, check_bases, check_circuit_axioms, replay
from cryptomorphism import bases_from_circuits, circuits_from_bases, dual, fundamental_circuit
from errors import ConstructionError, InputError
from graph import matroid_from_graph
from models import AdmissibleSet, Kind, SetCollection, SignedElement
from oracle import DEFAULT_SEED, all_collections, enumerate_symplectic, random_collection, sweep
from report import json_report, text
from storage.files import dump_instance, load_graph, load_instance

DEFAULT_FORMAT = "text"
FORMATS = ("text", "json")

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT = 2

logger = logging.getLogger(__name__)


def parse_element(raw: str) -> SignedElement:
    """Accept "3", "-3" or "3*"."""
    token = raw.strip()
    starred = token.endswith("*")
    if starred:
        token = token[:-1]
    try:
        value = int(token)
    except ValueError:
        raise InputError(f"element {raw!r} is not an integer or k* label") from None
    if value == 0 or (starred and value < 0):
        raise InputError(f"element {raw!r} is not a nonzero element")
    return -value if starred else value


def parse_element_list(raw: str) -> List[SignedElement]:
    """Comma-separated elements, e.g. "1,2*,3"; an empty string is the empty set."""
    return [parse_element(part) for part in raw.split(",") if part.strip()]


def resolve_format(requested: Optional[str], default: str) -> str:
    value = requested or os.environ.get("SYMPLECTIC_FORMAT") or default
    if value not in FORMATS:
        raise InputError(f"format must be one of {', '.join(FORMATS)}, got {value!r}")
    return value


def resolve_max_n(requested: Optional[int]) -> int:
    raw = requested if requested is not None else os.environ.get("SYMPLECTIC_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        value = int(raw)
    except ValueError:
        raise InputError(f"SYMPLECTIC_MAX_N must be an integer, got {raw!r}") from None
    if value < 1:
        raise InputError(f"--max-n must be at least 1, got {value}")
    return value


def _load(path: str, kind: Kind, max_n: int) -> SetCollection:
    collection = load_instance(path)
    if collection.kind != kind:
        raise InputError(f"{path}: expected a {kind.value} instance, got kind {collection.kind.value!r}")
    if collection.n > max_n:
        raise InputError(f"{path}: n = {collection.n} is above the limit of {max_n} (see --max-n)")
    return collection


def _emit(collection: SetCollection, fmt: str) -> None:
    print(dump_instance(collection) if fmt == "json" else text.render_collection(collection))


def _run_replay(report_path: str, collection: SetCollection, fmt: str) -> int:
    verdict = json_report.load_failure(report_path, collection.n)
    reproduced = replay(verdict, collection)
    if fmt == "json":
        print(json_report.dumps({"schema": json_report.SCHEMA_VERSION, "command": "replay", "reproduced": reproduced}))
    else:
        print(text.render_replay(reproduced))
    return EXIT_PASS if reproduced else EXIT_FAIL


def cmd_check_bases(args: argparse.Namespace) -> int:
    fmt = resolve_format(args.format, DEFAULT_FORMAT)
    max_n = resolve_max_n(args.max_n)
    bases = _load(args.file, Kind.BASES, max_n)
    if args.replay:
        return _run_replay(args.replay, bases, fmt)
    verdict = check_bases(bases, max_n=max_n)
    if fmt == "json":
        print(json_report.dumps(json_report.bases_report(verdict, bases)))
    else:
        print(text.render_bases_verdict(verdict))
    return EXIT_PASS if verdict.passed else EXIT_FAIL


def cmd_check_circuits(args: argparse.Namespace) -> int:
    fmt = resolve_format(args.format, DEFAULT_FORMAT)
    circuits = _load(args.file, Kind.CIRCUITS, resolve_max_n(args.max_n))
    if args.replay:
        return _run_replay(args.replay, circuits, fmt)
    verdicts = check_circuit_axioms(circuits)
    if fmt == "json":
        print(json_report.dumps(json_report.circuits_report(verdicts, circuits)))
    else:
        print(text.render_circuit_verdicts(verdicts))
    return EXIT_PASS if verdicts.passed else EXIT_FAIL


def cmd_convert(args: argparse.Namespace) -> int:
    # Instance-emitting commands write the instance file unless text is asked for.
    fmt = resolve_format(args.format, "json")
    max_n = resolve_max_n(args.max_n)
    target = Kind(args.to)
    source = Kind.CIRCUITS if target is Kind.BASES else Kind.BASES
    collection = _load(args.file, source, max_n)
    converted = bases_from_circuits(collection) if target is Kind.BASES else circuits_from_bases(collection)
    _emit(converted, fmt)
    return EXIT_PASS


def cmd_from_graph(args: argparse.Namespace) -> int:
    fmt = resolve_format(args.format, "json")
    graph = load_graph(args.file)
    try:
        circuits, bases = matroid_from_graph(graph, max_n=resolve_max_n(args.max_n))
    except ConstructionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        for line in text.describe_witness(exc.verdict.witness):
            print(line, file=sys.stderr)
        return EXIT_FAIL
    _emit(bases if Kind(args.emit) is Kind.BASES else circuits, fmt)
    return EXIT_PASS


def cmd_fundamental_circuit(args: argparse.Namespace) -> int:
    fmt = resolve_format(args.format, DEFAULT_FORMAT)
    bases = _load(args.file, Kind.BASES, resolve_max_n(args.max_n))
    basis = AdmissibleSet.of(bases.n, parse_element_list(args.basis))
    circuit = fundamental_circuit(bases, basis, parse_element(args.element))
    if fmt == "json":
        print(json_report.dumps({"schema": json_report.SCHEMA_VERSION, "command": "fundamental-circuit", "circuit": list(circuit.sorted())}))
    else:
        print(circuit)
    return EXIT_PASS


def cmd_dual(args: argparse.Namespace) -> int:
    fmt = resolve_format(args.format, "json")
    collection = load_instance(args.file)
    max_n = resolve_max_n(args.max_n)
    if collection.n > max_n:
        raise InputError(f"{args.file}: n = {collection.n} is above the limit of {max_n} (see --max-n)")
    _emit(dual(collection), fmt)
    return EXIT_PASS


def cmd_enumerate(args: argparse.Namespace) -> int:
    fmt = resolve_format(args.format, DEFAULT_FORMAT)
    if args.summary:
        summary = sweep(args.n, args.k, progress=args.progress)
        print(json_report.dumps(json_report.summary_to_dict(summary)) if fmt == "json" else text.render_summary(summary))
        return EXIT_PASS
    if args.symplectic_only:
        found = enumerate_symplectic(args.n, args.k, progress=args.progress)
    else:
        found = list(all_collections(args.n, args.k, progress=args.progress))
    if fmt == "json":
        print(json_report.dumps(json_report.collections_to_dict(found)))
    else:
        print(f"collections: {len(found)}")
        for collection in found:
            print()
            print(text.render_collection(collection))
    return EXIT_PASS


def cmd_random(args: argparse.Namespace) -> int:
    fmt = resolve_format(args.format, "json")
    _emit(random_collection(args.n, args.k, args.count, args.seed), fmt)
    return EXIT_PASS


COMMANDS: Dict[str, Callable[[argparse.Namespace], int]] = {
    "check-bases": cmd_check_bases,
    "check-circuits": cmd_check_circuits,
    "convert": cmd_convert,
    "from-graph": cmd_from_graph,
    "fundamental-circuit": cmd_fundamental_circuit,
    "dual": cmd_dual,
    "enumerate": cmd_enumerate,
    "random": cmd_random,
}


def build_parser() -> argparse.ArgumentParser:
    """Describe the command-line options available to the user."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=FORMATS,
        default=None,
        help="Report encoding (defaults to SYMPLECTIC_FORMAT env var, then text for checks, json for emitted instances)",
    )
    common.add_argument(
        "--max-n",
        type=int,
        default=None,
        help=f"Largest n accepted for exhaustive checks (defaults to SYMPLECTIC_MAX_N env var or {DEFAULT_MAX_N})",
    )
    common.add_argument("--verbose", action="store_true", help="Log debug progress to stderr (or SYMPLECTIC_VERBOSE=1)")

    parser = argparse.ArgumentParser(description="Check, convert and enumerate symplectic matroids over E±n.")
    commands = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("check-bases", "Check the Maximality Property of a basis collection"),
        ("check-circuits", "Check the circuit axioms SC1-SC4"),
    ):
        sub = commands.add_parser(name, parents=[common], help=help_text)
        sub.add_argument("file", help="Instance file (JSON)")
        sub.add_argument("--replay", default=None, metavar="REPORT", help="Re-run the witness of a JSON fail report")

    convert = commands.add_parser("convert", parents=[common], help="Convert bases to circuits or back")
    convert.add_argument("file", help="Instance file (JSON)")
    convert.add_argument("--to", choices=[kind.value for kind in Kind], required=True, help="Target kind")

    from_graph = commands.add_parser("from-graph", parents=[common], help="Build the matroid of a multigraph")
    from_graph.add_argument("file", help="Graph file (JSON)")
    from_graph.add_argument(
        "--emit",
        choices=[kind.value for kind in Kind],
        default=Kind.CIRCUITS.value,
        help="Emit the circuits (default) or the bases",
    )

    fundamental = commands.add_parser("fundamental-circuit", parents=[common], help="Print the circuit inside B ∪ {x}")
    fundamental.add_argument("file", help="Basis instance file (JSON)")
    fundamental.add_argument("--basis", required=True, help='Comma-separated basis, e.g. "1,2*,3"')
    fundamental.add_argument("--element", required=True, help='Element to add, e.g. "4" or "4*"')

    dual_parser = commands.add_parser("dual", parents=[common], help="Star every member of a collection")
    dual_parser.add_argument("file", help="Instance file (JSON)")

    enumerate_parser = commands.add_parser("enumerate", parents=[common], help="List families of admissible k-subsets")
    enumerate_parser.add_argument("--n", type=int, required=True, help="Ground size")
    enumerate_parser.add_argument("--k", type=int, required=True, help="Member size")
    enumerate_parser.add_argument("--symplectic-only", action="store_true", help="Keep only families with the Maximality Property")
    enumerate_parser.add_argument("--summary", action="store_true", help="Print sweep counts instead of the families")
    enumerate_parser.add_argument("--progress", action="store_true", help="Show a progress bar on stderr")

    random_parser = commands.add_parser("random", parents=[common], help="Sample a family of admissible k-subsets")
    random_parser.add_argument("--n", type=int, required=True, help="Ground size")
    random_parser.add_argument("--k", type=int, required=True, help="Member size")
    random_parser.add_argument("--count", type=int, required=True, help="Number of distinct members")
    random_parser.add_argument(
        "--seed", type=int, default=DEFAULT_SEED, help=f"Seed for a reproducible sample (default {DEFAULT_SEED})"
    )
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse CLI arguments, dispatch the command and return its exit code."""
    args = build_parser().parse_args(argv)
    if args.verbose or os.environ.get("SYMPLECTIC_VERBOSE") == "1":
        logging.basicConfig(level=logging.DEBUG, stream=sys.stderr, format="%(name)s: %(message)s")
    logger.debug("running %s", args.command)
    try:
        return COMMANDS[args.command](args)
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except json.JSONDecodeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
