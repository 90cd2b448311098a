# coding: utf-8
"""
Description:
    Differential suite: every polynomial-time component is compared with the brute-force oracle on
    one instance, and the outcome is reported property by property.
    A property that raises is reported as failed with the error message, the suite itself never stops.
Classes:
    PropertyResult: Outcome of one property
Functions:
    run_suite: Runs every property on one instance
    suite_passed: Checks that every property of a suite passed
"""


# --------------------------------------------------------------------------------
# > Imports
# --------------------------------------------------------------------------------
# Built-in
import logging
from dataclasses import dataclass
from functools import cached_property

# Third-party

# Local
from . import oracle
from .config import Config
from .exceptions import MatchingError, NoSiapError, NoSrapError
from .gale_shapley import is_stable, propose_man_optimal, propose_woman_optimal
from .leveling import assign_levels_dom, assign_levels_min, check_dom_conditions, check_min_conditions
from .models import has_feasible, normalize_critical_side
from .partition import Part, cross_edge_violations, find_srap_siap, partition, transform1, transform2
from .reductions import build_gdoubleprime, build_gprime, image, preimage
from .solver import PopularEdgeSolver
from .stable_pairs import stable_pairs


# --------------------------------------------------------------------------------
# > Constants
# --------------------------------------------------------------------------------
log = logging.getLogger(__name__)


# --------------------------------------------------------------------------------
# > Classes
# --------------------------------------------------------------------------------
@dataclass(frozen=True)
class PropertyResult:
    name: str
    passed: bool
    checked: int = 0
    message: str = ""

    def as_dict(self):
        return {"name": self.name, "passed": self.passed, "checked": self.checked, "message": self.message}


class _Failure(Exception):
    """Raised inside a property to report a mismatch"""


# --------------------------------------------------------------------------------
# > Properties
# --------------------------------------------------------------------------------
def _has_feasible(ctx):
    expected = bool(oracle.enumerate_matchings(ctx.inst, feasible_only=True, config=ctx.config))
    if has_feasible(ctx.inst) != expected:
        raise _Failure(f"has_feasible says {not expected}, the oracle says {expected}")
    return 1


def _gale_shapley_stable(ctx):
    stable = oracle.enumerate_stable(ctx.inst, ctx.config)
    for matching in (propose_man_optimal(ctx.inst), propose_woman_optimal(ctx.inst)):
        if not is_stable(ctx.inst, matching) or matching not in stable:
            raise _Failure(f"{matching} is not stable")
    return 2


def _rural_hospitals(ctx):
    stable = oracle.enumerate_stable(ctx.inst, ctx.config)
    covered = {frozenset(v for edge in matching for v in edge) for matching in stable}
    if len(covered) != 1:
        raise _Failure("The stable matchings do not all match the same vertices")
    return len(stable)


def _stable_pairs(ctx):
    expected = stable_pairs(ctx.inst, use_oracle=True, config=ctx.config)
    found = stable_pairs(ctx.inst)
    if found != expected:
        raise _Failure(f"Stable pairs differ: {sorted(found ^ expected)}")
    return len(expected)


def _image_min(ctx):
    matching = ctx.solver.min_size_pfm()
    if matching not in oracle.min_size_pfms(ctx.inst, ctx.config):
        raise _Failure(f"{matching} is not a minimum size popular feasible matching")
    return 1


def _image_dom(ctx):
    matching = ctx.solver.dominant_fm()
    if matching not in oracle.dominant_fms(ctx.inst, ctx.config):
        raise _Failure(f"{matching} is not a dominant feasible matching")
    return 1


def _round_trip_min(ctx):
    red = build_gprime(ctx.inst)
    matching = ctx.solver.min_size_pfm()
    levels = assign_levels_min(ctx.inst, matching)
    _round_trip(ctx, red, matching, levels, check_min_conditions)
    return 1


def _round_trip_dom(ctx):
    red = build_gdoubleprime(ctx.inst)
    found = oracle.dominant_fms(ctx.inst, ctx.config)
    for matching in sorted(found, key=lambda m: m.sorted_edges()):
        _round_trip(ctx, red, matching, assign_levels_dom(ctx.inst, matching), check_dom_conditions)
    return len(found)


def _round_trip(ctx, red, matching, levels, checker):
    report = checker(ctx.inst, matching, levels)
    if not report.passed:
        raise _Failure(f"{matching}: condition {report.condition} fails ({report.message})")
    reduced = preimage(red, matching, levels)
    if not is_stable(red.inst, reduced) or image(red, reduced) != matching:
        raise _Failure(f"{matching}: the pre-image does not map back to it")


def _popular_edges(ctx):
    expected = oracle.popular_edges(ctx.inst, ctx.config)
    edges = ctx.inst.edges()
    for edge in edges:
        if ctx.solver.decide(edge).popular != (edge in expected):
            raise _Failure(f"Decision on {edge} differs from the oracle")
    return len(edges)


def _witness(ctx):
    expected = sorted(oracle.popular_edges(ctx.inst, ctx.config))
    for edge in expected:
        matching = ctx.solver.witness(edge)
        if matching is None or edge not in matching or not oracle.is_popular_feasible(ctx.inst, matching, ctx.config):
            raise _Failure(f"Witness for {edge} is not a popular feasible matching containing it")
    return len(expected)


def _transforms(ctx):
    smallest = oracle.min_size_pfms(ctx.inst, ctx.config)
    dominant = oracle.dominant_fms(ctx.inst, ctx.config)
    checked = 0
    for matching in oracle.pfms(ctx.inst, ctx.config):
        if matching in smallest or matching in dominant:
            continue
        levels = assign_levels_min(ctx.inst, matching, relaxed=True)
        try:
            sraps, siaps = find_srap_siap(ctx.inst, matching, levels, ctx.solver)
        except (NoSrapError, NoSiapError) as error:
            raise _Failure(f"{matching}: {error}")
        split = partition(ctx.inst, matching, levels, sraps, siaps)
        if cross_edge_violations(ctx.inst, matching, levels, split):
            raise _Failure(f"{matching}: cross-part edges break the level relations")
        kept_m = split.sub_matching(Part.M).union(split.sub_matching(Part.R))
        kept_d = split.sub_matching(Part.D).union(split.sub_matching(Part.R))
        first = transform1(ctx.inst, split, levels)
        if first not in smallest or not kept_m.edges <= first.edges:
            raise _Failure(f"{matching}: transformation 1 gives {first}")
        second = transform2(ctx.inst, split, levels)
        if second not in dominant or not kept_d.edges <= second.edges:
            raise _Failure(f"{matching}: transformation 2 gives {second}")
        checked += 1
    return checked


PROPERTIES = (
    ("has_feasible", _has_feasible),
    ("gale_shapley_stable", _gale_shapley_stable),
    ("rural_hospitals", _rural_hospitals),
    ("stable_pairs", _stable_pairs),
    ("image_min", _image_min),
    ("image_dom", _image_dom),
    ("round_trip_min", _round_trip_min),
    ("round_trip_dom", _round_trip_dom),
    ("popular_edges", _popular_edges),
    ("witness", _witness),
    ("transforms", _transforms),
)


# --------------------------------------------------------------------------------
# > Functions
# --------------------------------------------------------------------------------
class _Context:
    def __init__(self, inst, config):
        self.inst = inst
        self.config = config

    @cached_property
    def solver(self):
        return PopularEdgeSolver(self.inst, config=self.config)


def run_suite(inst, config=None):
    """
    Description:
        Runs every property of the differential suite on one instance.
        Instances whose critical vertices are women are swapped first. On an infeasible instance,
        only 'has_feasible' is evaluated.
    Args:
        inst (MarriageInstance): The instance, small enough for the oracle
        config (Config, optional): Oracle settings. Defaults to None.
    Returns:
        list: One PropertyResult per property, in a fixed order
    """
    config = config or Config()
    inst, _ = normalize_critical_side(inst)
    context = _Context(inst, config)
    if not has_feasible(inst):
        return [_evaluate("has_feasible", _has_feasible, context)]
    return [_evaluate(name, check, context) for name, check in PROPERTIES]


def suite_passed(results):
    return all(result.passed for result in results)


def _evaluate(name, check, context):
    try:
        checked = check(context)
    except (_Failure, MatchingError) as error:
        log.warning("property %s failed: %s", name, error)
        return PropertyResult(name, False, message=str(error))
    log.debug("property %s passed (%d checks)", name, checked)
    return PropertyResult(name, True, checked)
