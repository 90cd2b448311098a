# coding: utf-8
"""
Description:
    Decides whether an edge belongs to some popular feasible matching.
    An edge is popular exactly when it belongs to a minimum size popular feasible matching or to a
    dominant feasible matching. Both are images of stable matchings of G' and G'', so the edge is
    popular when one of its copies is a stable pair of G' (checked first) or of G''.
    A witness is built by forcing that stable pair: the woman's list is cut right after the chosen
    copy and deferred acceptance is run again.
Classes:
    Decision: Outcome of an edge query
    PopularEdgeSolver: Builds both reductions once and answers queries on one instance
    Via: Which reduction proved the edge popular
Functions:
    decide_popular_edge: Decides whether an edge is popular
    dominant_fm: Returns a dominant feasible matching
    edge_in_dfm: Checks whether an edge belongs to some dominant feasible matching
    edge_in_min_pfm: Checks whether an edge belongs to some minimum size popular feasible matching
    min_size_pfm: Returns a minimum size popular feasible matching
    witness: Returns a popular feasible matching containing the edge, if any
"""


# --------------------------------------------------------------------------------
# > Imports
# --------------------------------------------------------------------------------
# Built-in
import logging
from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache
from typing import Optional

# Third-party

# Local
from .exceptions import CriticalSideError, InfeasibleInstanceError, InternalVerificationError
from .gale_shapley import is_stable, propose_man_optimal
from .leveling import check_dom_conditions, check_min_conditions
from .models import Edge, has_feasible
from .reductions import build_gdoubleprime, build_gprime, image, image_with_levels, lift_edge
from .stable_pairs import is_stable_pair, stable_pair_index
from .utils import edge_as_list


# --------------------------------------------------------------------------------
# > Constants
# --------------------------------------------------------------------------------
log = logging.getLogger(__name__)


# --------------------------------------------------------------------------------
# > Classes
# --------------------------------------------------------------------------------
class Via(str, Enum):
    MIN = "min"
    DOMINANT = "dominant"
    NONE = "none"


@dataclass(frozen=True)
class Decision:
    """Answer to an edge query, with the branch and the stable copy that proved it"""
    popular: bool
    via: Via
    lifted_edge: Optional[Edge] = None

    @property
    def answer(self) -> str:
        return "yes" if self.popular else "no"

    def as_dict(self):
        return {
            "decision": self.answer,
            "via": self.via.value,
            "lifted_edge": edge_as_list(self.lifted_edge) if self.lifted_edge else None,
        }


class PopularEdgeSolver:
    """
    Answers popular edge queries on one normalized, feasible instance.
    G' and G'' are built on first use and shared by every query.
    """

    def __init__(self, inst, use_oracle=False, config=None):
        if any(inst.is_woman(vertex) for vertex in inst.critical):
            raise CriticalSideError("The critical vertices must be men: normalize the instance first")
        if not has_feasible(inst):
            raise InfeasibleInstanceError("No matching saturates the critical vertices")
        self.inst = inst
        self.use_oracle = use_oracle
        self.config = config

    # ----------------------------------------
    # Reductions
    # ----------------------------------------
    @cached_property
    def gprime(self):
        return build_gprime(self.inst)

    @cached_property
    def gdoubleprime(self):
        return build_gdoubleprime(self.inst)

    def _reduction(self, via):
        return self.gprime if via is Via.MIN else self.gdoubleprime

    # ----------------------------------------
    # Matchings
    # ----------------------------------------
    def min_size_pfm(self):
        """Returns the image of the man-optimal stable matching of G'"""
        return image(self.gprime, propose_man_optimal(self.gprime.inst))

    def dominant_fm(self):
        """Returns the image of the man-optimal stable matching of G''"""
        return image(self.gdoubleprime, propose_man_optimal(self.gdoubleprime.inst))

    # ----------------------------------------
    # Edge queries
    # ----------------------------------------
    def stable_copy(self, edge, via) -> Optional[Edge]:
        """Returns the first copy of the edge (by level) that is a stable pair of the reduction"""
        self.inst.require_edge(edge)
        red = self._reduction(via)
        for lifted in lift_edge(red, edge):
            if is_stable_pair(red.inst, lifted, use_oracle=self.use_oracle, config=self.config):
                return lifted
        return None

    def edge_in_min_pfm(self, edge) -> bool:
        return self.stable_copy(edge, Via.MIN) is not None

    def edge_in_dfm(self, edge) -> bool:
        return self.stable_copy(edge, Via.DOMINANT) is not None

    def decide(self, edge) -> Decision:
        """
        Description:
            Decides whether the edge belongs to some popular feasible matching
        Args:
            edge (tuple): A (man, woman) edge of the instance
        Returns:
            Decision: The answer, and the branch (min first, then dominant) that proved it
        """
        for via in (Via.MIN, Via.DOMINANT):
            lifted = self.stable_copy(edge, via)
            if lifted is not None:
                log.info("edge %s is popular (%s branch, stable copy %s)", edge, via.value, lifted)
                return Decision(True, via, lifted)
        log.info("edge %s is not popular", edge)
        return Decision(False, Via.NONE)

    def witness(self, edge):
        """
        Description:
            Builds a popular feasible matching containing the edge, and checks it with its levels
        Args:
            edge (tuple): A (man, woman) edge of the instance
        Returns:
            Matching|None: The witness, or None when the edge is not popular
        """
        decision = self.decide(edge)
        if not decision.popular:
            return None
        red = self._reduction(decision.via)
        reduced = _forced_stable_matching(red, decision.lifted_edge)
        matching, levels = image_with_levels(red, reduced)
        checker = check_min_conditions if decision.via is Via.MIN else check_dom_conditions
        report = checker(self.inst, matching, levels)
        if edge not in matching or not report.passed:
            raise InternalVerificationError(
                f"Witness for {edge} failed its verification: {report.message or 'edge missing'}"
            )
        return matching


# --------------------------------------------------------------------------------
# > Functions
# --------------------------------------------------------------------------------
@lru_cache(maxsize=64)
def _solver(inst):
    return PopularEdgeSolver(inst)


def min_size_pfm(inst):
    """Returns a minimum size popular feasible matching of a normalized, feasible instance"""
    return _solver(inst).min_size_pfm()


def dominant_fm(inst):
    """Returns a dominant feasible matching of a normalized, feasible instance"""
    return _solver(inst).dominant_fm()


def edge_in_min_pfm(inst, edge):
    return _solver(inst).edge_in_min_pfm(edge)


def edge_in_dfm(inst, edge):
    return _solver(inst).edge_in_dfm(edge)


def decide_popular_edge(inst, edge):
    """Decides whether an edge belongs to some popular feasible matching (see PopularEdgeSolver.decide)"""
    return _solver(inst).decide(edge)


def witness(inst, edge):
    """Returns a popular feasible matching containing the edge, or None (see PopularEdgeSolver.witness)"""
    return _solver(inst).witness(edge)


# --------------------------------------------------------------------------------
# > Helpers
# --------------------------------------------------------------------------------
def _forced_stable_matching(red, lifted):
    """
    Returns a stable matching of the reduced instance containing the stable pair 'lifted'.
    Cutting the woman's list right after the copy makes deferred acceptance match her to it;
    the chain of rotations is used if that ever fails.
    """
    copy, woman = lifted
    candidate = propose_man_optimal(red.inst.truncated(woman, after=copy))
    if lifted in candidate and is_stable(red.inst, candidate):
        return candidate
    log.warning("forced deferred acceptance missed %s, using the rotation chain", lifted)
    fallback = stable_pair_index(red.inst).matching_with(lifted)
    if fallback is None:
        raise InternalVerificationError(f"{lifted} is not a stable pair of the reduced instance")
    return fallback
