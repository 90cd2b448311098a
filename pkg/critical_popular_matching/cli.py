# coding: utf-8
"""
Description:
    Command-line front end. Every subcommand prints a single JSON document on stdout, notes go to
    stderr through logging. Instances whose critical vertices are women are swapped before solving,
    and every result is swapped back into the file's orientation.
    Exit codes:
        0: success, or "yes" for an edge query
        1: "no" for an edge query
        2: usage or validation error
        3: internal verification failure
Functions:
    build_parser: Builds the argparse parser
    main: Entry point of the console script
    run: Runs one command line and returns its exit code
"""


# --------------------------------------------------------------------------------
# > Imports
# --------------------------------------------------------------------------------
# Built-in
import argparse
import logging
import sys
from pathlib import Path

# Third-party

# Local
from .config import Config
from .exceptions import InternalVerificationError, MatchingError
from .formats import parse_instance, parse_matching, serialize_instance
from .generators import GenSpec, generate_random
from .leveling import (
    assign_levels_dom,
    assign_levels_min,
    check_dom_conditions,
    check_min_conditions,
)
from .models import normalize_critical_side
from .oracle import check_edge_cap
from .partition import Part, find_srap_siap, partition, transform_for_edge
from .reductions import build_gdoubleprime, build_gprime
from .solver import PopularEdgeSolver
from .utils import dump_json, instance_as_dict, levels_as_dict, matching_as_list
from .verification import run_suite, suite_passed


# --------------------------------------------------------------------------------
# > Constants
# --------------------------------------------------------------------------------
EXIT_YES = 0
EXIT_NO = 1
EXIT_ERROR = 2
EXIT_INTERNAL = 3
PACKAGE_LOGGER = "critical_popular_matching"
log = logging.getLogger(__name__)


# --------------------------------------------------------------------------------
# > Parser
# --------------------------------------------------------------------------------
def build_parser():
    parser = argparse.ArgumentParser(
        prog="critical-popular-matching",
        description="Popular feasible matchings in marriage instances with critical vertices",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
    commands = parser.add_subparsers(dest="command", required=True)

    solve = commands.add_parser("solve", help="Compute a minimum size PFM or a dominant FM")
    solve.add_argument("file")
    solve.add_argument("--objective", choices=["min", "dominant"], default="min")

    edge = commands.add_parser("edge", help="Decide whether an edge belongs to some PFM")
    edge.add_argument("file")
    edge.add_argument("man")
    edge.add_argument("woman")
    edge.add_argument("--witness", action="store_true", help="Also output a PFM containing the edge")
    edge.add_argument("--oracle", action="store_true", help="Decide stable pairs by enumeration")

    reduce = commands.add_parser("reduce", help="Build G' or G''")
    reduce.add_argument("file")
    reduce.add_argument("--target", choices=["gprime", "gpp"], default="gprime")

    levels = commands.add_parser("levels", help="Assign and check the levels of a matching")
    levels.add_argument("file")
    levels.add_argument("--matching", required=True)
    levels.add_argument("--mode", choices=["min", "dom"], default="min")
    levels.add_argument("--relaxed", action="store_true", help="Relaxed bounds ('min' mode only)")

    split = commands.add_parser("partition", help="Run the partition method on a PFM")
    split.add_argument("file")
    split.add_argument("--matching", required=True)
    split.add_argument("--edge", nargs=2, metavar=("MAN", "WOMAN"), help="Also transform around this edge")

    gen = commands.add_parser("gen", help="Generate a random instance")
    _add_generator_arguments(gen)
    gen.add_argument("--output", help="Also write the instance text to this file")

    verify = commands.add_parser("verify", help="Run the differential suite against the oracle")
    verify.add_argument("file", nargs="?")
    _add_generator_arguments(verify)
    verify.add_argument("--count", type=int, default=None, help="Number of generated instances (seeds follow --seed)")
    verify.add_argument("--max-edges", type=int, default=None, help="Oracle edge cap")
    return parser


def _add_generator_arguments(parser):
    parser.add_argument("--men", type=int, default=3)
    parser.add_argument("--women", type=int, default=3)
    parser.add_argument("--density", type=float, default=None)
    parser.add_argument("--critical", type=int, default=0)
    parser.add_argument("--seed", type=int, default=0)


# --------------------------------------------------------------------------------
# > Commands
# --------------------------------------------------------------------------------
class _Loaded:
    """An instance read from a file, normalized, and the way back to the file's orientation"""

    def __init__(self, path):
        self.original = parse_instance(_read(path))
        self.inst, self.swapped = normalize_critical_side(self.original)

    def edge_in(self, man, woman):
        return (woman, man) if self.swapped else (man, woman)

    def edge_out(self, edge):
        return list(reversed(edge)) if self.swapped else list(edge)

    def matching_in(self, path):
        matching = parse_matching(_read(path), self.original)
        return matching.swapped() if self.swapped else matching

    def matching_out(self, matching):
        return matching_as_list(matching.swapped() if self.swapped else matching)


def _solve(args, config):
    loaded = _Loaded(args.file)
    solver = PopularEdgeSolver(loaded.inst, config=config)
    matching = solver.min_size_pfm() if args.objective == "min" else solver.dominant_fm()
    return EXIT_YES, {"objective": args.objective, "size": len(matching), "matching": loaded.matching_out(matching)}


def _edge(args, config):
    loaded = _Loaded(args.file)
    edge = loaded.inst.require_edge(loaded.edge_in(args.man, args.woman))
    solver = PopularEdgeSolver(loaded.inst, use_oracle=args.oracle, config=config)
    decision = solver.decide(edge)
    output = decision.as_dict()
    output["edge"] = [args.man, args.woman]
    if decision.lifted_edge is not None:
        output["lifted_edge"] = loaded.edge_out(decision.lifted_edge)
    if args.witness:
        found = solver.witness(edge)
        output["witness"] = loaded.matching_out(found) if found is not None else None
    return (EXIT_YES if decision.popular else EXIT_NO), output


def _reduce(args, config):
    loaded = _Loaded(args.file)
    red = build_gprime(loaded.inst) if args.target == "gprime" else build_gdoubleprime(loaded.inst)
    return EXIT_YES, {
        "target": args.target,
        "swapped": loaded.swapped,
        "instance": instance_as_dict(red.inst),
        "text": serialize_instance(red.inst),
    }


def _levels(args, config):
    loaded = _Loaded(args.file)
    matching = loaded.matching_in(args.matching)
    if args.mode == "min":
        levels = assign_levels_min(loaded.inst, matching, relaxed=args.relaxed)
        report = check_min_conditions(loaded.inst, matching, levels)
    else:
        levels = assign_levels_dom(loaded.inst, matching)
        report = check_dom_conditions(loaded.inst, matching, levels)
    return EXIT_YES, {"mode": args.mode, "levels": levels_as_dict(levels), "report": report.as_dict()}


def _partition(args, config):
    loaded = _Loaded(args.file)
    matching = loaded.matching_in(args.matching)
    solver = PopularEdgeSolver(loaded.inst, config=config)
    levels = assign_levels_min(loaded.inst, matching, relaxed=True)
    sraps, siaps = find_srap_siap(loaded.inst, matching, levels, solver)
    split = partition(loaded.inst, matching, levels, sraps, siaps)
    output = {
        "levels": levels_as_dict(levels),
        "sraps": [path.as_dict() for path in sraps],
        "siaps": [path.as_dict() for path in siaps],
        "parts": {part.value: split.vertices(part) for part in Part},
        "matchings": {part.value: loaded.matching_out(split.sub_matching(part)) for part in Part},
    }
    if args.edge:
        edge = loaded.inst.require_edge(loaded.edge_in(*args.edge))
        output["transformed"] = loaded.matching_out(transform_for_edge(loaded.inst, matching, edge, solver))
    return EXIT_YES, output


def _gen(args, config):
    density = config.default_density if args.density is None else args.density
    inst = generate_random(GenSpec(args.men, args.women, density, args.critical, args.seed), config)
    text = serialize_instance(inst)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        log.info("instance written to %s", args.output)
    return EXIT_YES, {"seed": args.seed, "instance": instance_as_dict(inst), "text": text}


def _verify(args, config):
    config = config.with_overrides(oracle_edge_cap=args.max_edges)
    if args.file:
        runs = [(None, parse_instance(_read(args.file)))]
    else:
        density = config.default_density if args.density is None else args.density
        count = config.verify_count if args.count is None else args.count
        runs = [
            (seed, generate_random(GenSpec(args.men, args.women, density, args.critical, seed), config))
            for seed in range(args.seed, args.seed + count)
        ]
    for _, inst in runs:
        check_edge_cap(inst, config)
    reports = []
    for seed, inst in runs:
        results = run_suite(inst, config)
        reports.append({"seed": seed, "passed": suite_passed(results), "properties": [r.as_dict() for r in results]})
    passed = all(report["passed"] for report in reports)
    log.info("verify: %d instance(s), %s", len(reports), "all passed" if passed else "failures found")
    return (EXIT_YES if passed else EXIT_INTERNAL), {"passed": passed, "instances": reports}


COMMANDS = {
    "solve": _solve,
    "edge": _edge,
    "reduce": _reduce,
    "levels": _levels,
    "partition": _partition,
    "gen": _gen,
    "verify": _verify,
}


# --------------------------------------------------------------------------------
# > Entry points
# --------------------------------------------------------------------------------
def run(argv=None, config=None):
    """
    Description:
        Parses and runs one command line, printing its JSON document on stdout
    Args:
        argv (list, optional): The arguments, without the program name. Defaults to sys.argv[1:].
        config (Config, optional): Base configuration. Defaults to Config.from_env().
    Returns:
        int: The exit code
    """
    args = build_parser().parse_args(argv)
    try:
        config = config or Config.from_env()
        _configure_logging(args.verbose, config)
        code, output = COMMANDS[args.command](args, config)
    except InternalVerificationError as error:
        log.error("internal verification failure: %s", error)
        return _error(error, EXIT_INTERNAL)
    except (MatchingError, OSError) as error:
        log.error("%s", error)
        return _error(error, EXIT_ERROR)
    sys.stdout.write(dump_json(output))
    return code


def main(argv=None):
    sys.exit(run(argv))


# --------------------------------------------------------------------------------
# > Helpers
# --------------------------------------------------------------------------------
def _read(path):
    return Path(path).read_text(encoding="utf-8")


def _error(error, code):
    sys.stdout.write(dump_json({"error": {"type": type(error).__name__, "message": str(error)}}))
    return code


def _configure_logging(verbosity, config):
    """Installs a single stderr handler on the package logger"""
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = getattr(logging, str(config.log_level).upper(), logging.WARNING)
    logger = logging.getLogger(PACKAGE_LOGGER)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    logger.addHandler(handler)
    logger.setLevel(level)
