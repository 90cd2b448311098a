# coding: utf-8
"""
Description:
    Level assignments certifying popular feasible matchings.
    The leveling algorithms start from level 0 (unmatched men start at level 1 in 'dom' mode) and
    promote a woman together with her partner until no phase applies:
        - Phase 1: a (+1,+1) edge from a man at level i to a woman at level <= i lifts her to i+1
        - Phase 2: a (+1,-1) or (-1,+1) edge from a man at level i to a woman below i lifts her to i
        - Phase 3: a (-1,-1) edge from a man at level i to a woman at level <= i-2 lifts her to i-1
    Levels never decrease, and edges are scanned in lexicographic (man, woman) order.
    The checkers verify the certificate conditions:
        0. well-formed: every vertex has a level, M-edges aside, unmatched women are at level 0,
           matched men stay within the copy range of the reduced instance and M is feasible
        1. every (+1,+1) edge goes from a man at level i to a woman at level j > i
        2. every edge from a man at level i to a woman at level i-1 is (-1,-1)
        3. no edge goes from a man at level i to a woman at level <= i-2, and M-edges are level-equal
        4. unmatched men are at level 0 ('min') or 1 ('dom')
    A passing report means the pre-image of (M, levels) is stable in G' ('min') or G'' ('dom').
Classes:
    ConditionReport: Result of a checker, with the first violated condition and its witness
    Mode: min or dom
Functions:
    assign_levels_dom: Leveling for dominant feasible matchings
    assign_levels_min: Leveling for minimum size popular feasible matchings
    check_dom_conditions: Checks the dominant certificate conditions
    check_min_conditions: Checks the minimum size certificate conditions
    level_gaps: Lists the edges climbing more than one level from a woman to a man
"""


# --------------------------------------------------------------------------------
# > Imports
# --------------------------------------------------------------------------------
# Built-in
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional

# Third-party

# Local
from .exceptions import CertificateRejectedError, LevelBoundError, UnmatchedPromotionError
from .models import Edge, is_feasible
from .reductions import LevelAssignment
from .utils import edge_as_list
from .voting import label_edge


# --------------------------------------------------------------------------------
# > Constants
# --------------------------------------------------------------------------------
log = logging.getLogger(__name__)


# --------------------------------------------------------------------------------
# > Classes
# --------------------------------------------------------------------------------
class Mode(str, Enum):
    MIN = "min"
    DOM = "dom"


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of a checker: 'condition' is the first violated condition (None when passed)"""
    passed: bool
    condition: Optional[int] = None
    edge: Optional[Edge] = None
    vertex: Optional[str] = None
    message: str = ""

    def __bool__(self):
        return self.passed

    def as_dict(self):
        return {
            "passed": self.passed,
            "condition": self.condition,
            "edge": edge_as_list(self.edge) if self.edge else None,
            "vertex": self.vertex,
            "message": self.message,
        }


# --------------------------------------------------------------------------------
# > Leveling algorithms
# --------------------------------------------------------------------------------
def assign_levels_min(inst, matching, relaxed=False):
    """
    Description:
        Computes the levels of a minimum size popular feasible matching.
        Critical men may rise up to ℓ and non-critical men must stay at level 0.
        With 'relaxed', the bound becomes ℓ+1 and non-critical men may reach level 1: this is the
        setting used on intermediate popular feasible matchings by the partition method.
    Args:
        inst (MarriageInstance): A normalized instance
        matching (Matching): The matching to certify
        relaxed (bool, optional): Use the relaxed bounds. Defaults to False.
    Returns:
        LevelAssignment: The level of every vertex
    """
    bound = inst.ell + 1 if relaxed else inst.ell
    return _assign_levels(inst, matching, Mode.MIN, bound, 1 if relaxed else 0)


def assign_levels_dom(inst, matching):
    """
    Description:
        Computes the levels of a dominant feasible matching. Unmatched men start at level 1,
        critical men may rise up to ℓ+1 and non-critical men up to 1.
    Args:
        inst (MarriageInstance): A normalized instance
        matching (Matching): The matching to certify
    Returns:
        LevelAssignment: The level of every vertex
    """
    return _assign_levels(inst, matching, Mode.DOM, inst.ell + 1, 1)


def _assign_levels(inst, matching, mode, bound, plain_bound):
    matching.validate(inst)
    levels = {vertex: 0 for vertex in inst.vertices}
    if mode is Mode.DOM:
        for man in inst.men:
            if not matching.is_matched(man):
                levels[man] = 1
    labelled = [(edge, label_edge(inst, matching, edge)) for edge in inst.edges() if edge not in matching]
    guard = (inst.ell + 2) * len(inst.vertices)
    rounds = 0
    while True:
        rounds += 1
        if rounds > guard:
            raise CertificateRejectedError(f"No fixpoint after {guard} rounds")
        changed = False
        for phase in (_phase_one, _phase_two, _phase_three):
            while True:
                hit = phase(labelled, levels)
                if hit is None:
                    break
                edge, target = hit
                _promote(inst, matching, levels, edge, target, bound, plain_bound)
                changed = True
        if not changed:
            break
    log.debug("%s leveling reached its fixpoint after %d rounds", mode.value, rounds)
    return LevelAssignment(levels)


def _phase_one(labelled, levels):
    for (man, woman), label in labelled:
        if label.is_plus_plus and levels[woman] <= levels[man]:
            return (man, woman), levels[man] + 1
    return None


def _phase_two(labelled, levels):
    for (man, woman), label in labelled:
        if label.man_vote != label.woman_vote and levels[woman] < levels[man]:
            return (man, woman), levels[man]
    return None


def _phase_three(labelled, levels):
    for (man, woman), label in labelled:
        if label.is_minus_minus and levels[woman] <= levels[man] - 2:
            return (man, woman), levels[man] - 1
    return None


def _promote(inst, matching, levels, edge, target, bound, plain_bound):
    """Lifts the woman of 'edge' and her partner to 'target'"""
    woman = edge[1]
    partner = matching.partner(woman)
    if partner is None:
        raise UnmatchedPromotionError(
            f"Edge {edge} asks to promote the unmatched woman {woman!r}: the matching is not popular", edge
        )
    cap = bound if partner in inst.critical else plain_bound
    if target > cap:
        raise LevelBoundError(
            f"Edge {edge} lifts {partner!r} to level {target}, above its bound {cap}", edge
        )
    log.debug("edge %s: %s and %s go from level %d to %d", edge, woman, partner, levels[woman], target)
    levels[woman] = levels[partner] = target


# --------------------------------------------------------------------------------
# > Checkers
# --------------------------------------------------------------------------------
def check_min_conditions(inst, matching, levels):
    """
    Description:
        Checks (M, levels) against the minimum size certificate conditions
    Args:
        inst (MarriageInstance): A normalized instance
        matching (Matching): The matching
        levels (Mapping): Level of every vertex
    Returns:
        ConditionReport: The outcome, naming the first violated condition and its witness
    """
    return _check(inst, matching, levels, Mode.MIN)


def check_dom_conditions(inst, matching, levels):
    """
    Description:
        Checks (M, levels) against the dominant certificate conditions.
        M-edges are required to be level-equal here as well.
    Args:
        inst (MarriageInstance): A normalized instance
        matching (Matching): The matching
        levels (Mapping): Level of every vertex
    Returns:
        ConditionReport: The outcome, naming the first violated condition and its witness
    """
    return _check(inst, matching, levels, Mode.DOM)


def _check(inst, matching, levels, mode):
    matching.validate(inst)
    unmatched_level = 0 if mode is Mode.MIN else 1
    bound = inst.ell + (0 if mode is Mode.MIN else 1)
    plain_bound = 0 if mode is Mode.MIN else 1
    # Condition 0
    for vertex in inst.vertices:
        level = levels.get(vertex)
        if not isinstance(level, int) or level < 0:
            return _fail(0, f"{vertex!r} has no valid level", vertex=vertex)
    for woman in inst.women:
        if not matching.is_matched(woman) and levels[woman] != 0:
            return _fail(0, f"Unmatched woman {woman!r} is not at level 0", vertex=woman)
    for man in inst.men:
        cap = bound if man in inst.critical else plain_bound
        if matching.is_matched(man) and levels[man] > cap:
            return _fail(0, f"{man!r} is at level {levels[man]}, above its bound {cap}", vertex=man)
    if not is_feasible(inst, matching):
        missing = sorted(v for v in inst.critical if not matching.is_matched(v))
        return _fail(0, f"Critical vertex {missing[0]!r} is unmatched", vertex=missing[0])
    labelled = [(edge, label_edge(inst, matching, edge)) for edge in inst.edges() if edge not in matching]
    # Condition 1
    for (man, woman), label in labelled:
        if label.is_plus_plus and levels[woman] <= levels[man]:
            return _fail(1, "(+1,+1) edge does not climb", edge=(man, woman))
    # Condition 2
    for (man, woman), label in labelled:
        if levels[woman] == levels[man] - 1 and not label.is_minus_minus:
            return _fail(2, "edge one level down is not (-1,-1)", edge=(man, woman))
    # Condition 3
    for (man, woman), _ in labelled:
        if levels[woman] <= levels[man] - 2:
            return _fail(3, "edge goes two or more levels down", edge=(man, woman))
    for man, woman in matching:
        if levels[man] != levels[woman]:
            return _fail(3, "matched pair at different levels", edge=(man, woman))
    # Condition 4
    for man in inst.men:
        if not matching.is_matched(man) and levels[man] != unmatched_level:
            return _fail(4, f"unmatched man not at level {unmatched_level}", vertex=man)
    return ConditionReport(True)


def level_gaps(inst, matching, levels):
    """Returns the edges outside M whose man sits more than one level above the woman"""
    return [
        (man, woman) for man, woman in inst.edges()
        if (man, woman) not in matching and levels[man] > levels[woman] + 1
    ]


def _fail(condition, message, edge=None, vertex=None):
    return ConditionReport(False, condition, edge, vertex, message)
