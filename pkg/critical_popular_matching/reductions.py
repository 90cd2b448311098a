# coding: utf-8
"""
Description:
    Reduced instances whose stable matchings map onto popular feasible matchings:
        - G' (kind 'gprime'): a critical man m gets copies m#0..m#ℓ linked by dummy women
          d(m)#1..d(m)#ℓ, a non-critical man keeps the single copy m#0.
          Stable matchings of G' map onto minimum size popular feasible matchings.
        - G'' (kind 'gdoubleprime'): critical men get copies 0..ℓ+1 and dummies 1..ℓ+1,
          non-critical men get copies 0 and 1 and the dummy d(m)#1.
          Stable matchings of G'' map onto dominant feasible matchings.
    Lists of the copies: m#i = [d(m)#i] + Pref(m) + [d(m)#(i+1)] (missing dummies dropped).
    Lists of the women: higher copies first, each level block in the woman's own order.
    Lists of the dummies: d(m)#i = [m#(i-1), m#i].
    The level of a man is the index of his copy that is not matched to a dummy.
Classes:
    LevelAssignment: Read-only mapping vertex -> level
    ReducedInstance: The reduced MarriageInstance plus its back-mapping tables
    ReductionKind: gprime or gdoubleprime
Functions:
    build_gdoubleprime: Builds G''
    build_gprime: Builds G'
    copy_name: Name of the level-i copy of a man
    dummy_name: Name of the level-i dummy woman of a man
    image: Maps a stable matching of a reduced instance onto the base instance
    image_levels: Reads the levels off a stable matching of a reduced instance
    lift_edge: Lists the reduced edges corresponding to a base edge
    preimage: Rebuilds a reduced matching from a base matching and its levels
"""


# --------------------------------------------------------------------------------
# > Imports
# --------------------------------------------------------------------------------
# Built-in
import logging
from collections.abc import Mapping
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Tuple

# Third-party

# Local
from .exceptions import (
    CriticalSideError,
    InfeasibleInstanceError,
    LevelMismatchError,
    LevelRangeError,
    MultipleActiveCopiesError,
    NotStableError,
)
from .gale_shapley import blocking_pairs
from .models import Edge, MarriageInstance, Matching, has_feasible


# --------------------------------------------------------------------------------
# > Constants
# --------------------------------------------------------------------------------
log = logging.getLogger(__name__)


# --------------------------------------------------------------------------------
# > Classes
# --------------------------------------------------------------------------------
class ReductionKind(str, Enum):
    GPRIME = "gprime"
    GDOUBLEPRIME = "gdoubleprime"


class LevelAssignment(Mapping):
    """Read-only vertex -> level mapping. Compares equal to any mapping with the same items."""

    def __init__(self, levels):
        self._levels = dict(levels)
        for vertex, level in self._levels.items():
            if not isinstance(level, int) or level < 0:
                raise LevelRangeError(f"Invalid level {level!r} for {vertex!r}")

    def __getitem__(self, vertex):
        return self._levels[vertex]

    def __iter__(self):
        return iter(self._levels)

    def __len__(self):
        return len(self._levels)

    def __repr__(self):
        return f"LevelAssignment({self.as_dict()})"

    def as_dict(self) -> Dict[str, int]:
        return dict(sorted(self._levels.items()))


@dataclass(frozen=True, eq=False)
class ReducedInstance:
    """A G' or G'' instance, with the tables mapping its vertices back to the base instance"""
    inst: MarriageInstance
    kind: ReductionKind
    origin: MarriageInstance
    copy_of: Dict[str, Tuple[str, int]]
    dummy_of: Dict[str, Tuple[str, int]]
    levels_per_man: Dict[str, int]

    def is_dummy(self, woman: str) -> bool:
        return woman in self.dummy_of

    def copy(self, man: str, level: int) -> str:
        """Returns the name of a copy, checking that it exists"""
        top = self.levels_per_man.get(man)
        if top is None:
            raise LevelRangeError(f"{man!r} is not a man of the base instance")
        if not 0 <= level <= top:
            raise LevelRangeError(f"{man!r} has no copy at level {level} (levels 0..{top})")
        return copy_name(man, level)


# --------------------------------------------------------------------------------
# > Builders
# --------------------------------------------------------------------------------
def copy_name(man, level):
    return f"{man}#{level}"


def dummy_name(man, level):
    return f"d({man})#{level}"


def build_gprime(inst):
    """
    Description:
        Builds G', whose stable matchings map onto minimum size popular feasible matchings
    Args:
        inst (MarriageInstance): A feasible instance whose critical vertices are men
    Returns:
        ReducedInstance: The G' instance
    """
    return _build(inst, ReductionKind.GPRIME)


def build_gdoubleprime(inst):
    """
    Description:
        Builds G'', whose stable matchings map onto dominant feasible matchings
    Args:
        inst (MarriageInstance): A feasible instance whose critical vertices are men
    Returns:
        ReducedInstance: The G'' instance
    """
    return _build(inst, ReductionKind.GDOUBLEPRIME)


def _build(inst, kind):
    if any(inst.is_woman(vertex) for vertex in inst.critical):
        raise CriticalSideError("The critical vertices must be men: normalize the instance first")
    if not has_feasible(inst):
        raise InfeasibleInstanceError("No matching saturates the critical vertices")
    ell = inst.ell
    if kind is ReductionKind.GPRIME:
        top_level, plain_top = ell, 0
    else:
        top_level, plain_top = ell + 1, 1
    tops = {m: top_level if m in inst.critical else plain_top for m in inst.men}
    men, dummies, pref, copy_of, dummy_of = [], [], {}, {}, {}
    for man in inst.men:
        top = tops[man]
        for level in range(top + 1):
            name = copy_name(man, level)
            men.append(name)
            copy_of[name] = (man, level)
            choices = [dummy_name(man, level)] if level >= 1 else []
            choices.extend(inst.pref(man))
            if level < top:
                choices.append(dummy_name(man, level + 1))
            pref[name] = choices
        for level in range(1, top + 1):
            name = dummy_name(man, level)
            dummies.append(name)
            dummy_of[name] = (man, level)
            pref[name] = [copy_name(man, level - 1), copy_name(man, level)]
    for woman in inst.women:
        pref[woman] = [
            copy_name(man, level)
            for level in range(top_level, -1, -1)
            for man in inst.pref(woman)
            if tops[man] >= level
        ]
    reduced = MarriageInstance(men, list(inst.women) + dummies, pref, reduced=True)
    log.info("built %s: %d men, %d women (ℓ=%d)", kind.value, len(men), len(reduced.women), ell)
    return ReducedInstance(reduced, kind, inst, copy_of, dummy_of, tops)


# --------------------------------------------------------------------------------
# > Maps between base and reduced matchings
# --------------------------------------------------------------------------------
def image(red, reduced_matching):
    """
    Description:
        Maps a stable matching of a reduced instance onto the base instance:
        (m, w) belongs to the image when some copy of m is matched to the non-dummy woman w
    Args:
        red (ReducedInstance): The reduced instance
        reduced_matching (Matching): A stable matching of red.inst
    Returns:
        Matching: The base matching
    """
    return image_with_levels(red, reduced_matching)[0]


def image_levels(red, reduced_matching):
    """Returns the LevelAssignment read off a stable matching of a reduced instance"""
    return image_with_levels(red, reduced_matching)[1]


def image_with_levels(red, reduced_matching):
    """
    Description:
        Computes the image and the levels in one pass. Each man has exactly one copy that is not
        matched to a dummy: its level is the man's level, shared by his partner if he has one.
        Unmatched women are at level 0.
    Args:
        red (ReducedInstance): The reduced instance
        reduced_matching (Matching): A stable matching of red.inst
    Returns:
        tuple: (Matching, LevelAssignment)
    """
    reduced_matching.validate(red.inst)
    blocking = blocking_pairs(red.inst, reduced_matching)
    if blocking:
        raise NotStableError(f"The reduced matching is not stable, e.g. {blocking[0]} blocks it", blocking)
    edges, levels = [], {}
    for man in red.origin.men:
        active = []
        for level in range(red.levels_per_man[man] + 1):
            partner = reduced_matching.partner(copy_name(man, level))
            if partner is None or not red.is_dummy(partner):
                active.append((level, partner))
        if len(active) != 1:
            raise MultipleActiveCopiesError(
                f"{man!r} has {len(active)} copies outside the dummies: {[level for level, _ in active]}"
            )
        level, partner = active[0]
        levels[man] = level
        if partner is not None:
            edges.append((man, partner))
            levels[partner] = level
    for woman in red.origin.women:
        levels.setdefault(woman, 0)
    return Matching(edges), LevelAssignment(levels)


def lift_edge(red, edge) -> List[Edge]:
    """Returns every (copy, woman) edge of the reduced instance coming from a base edge, by level"""
    man, woman = red.origin.require_edge(edge)
    return [(copy_name(man, level), woman) for level in range(red.levels_per_man[man] + 1)]


def preimage(red, matching, levels):
    """
    Description:
        Rebuilds the reduced matching of a base matching and its levels:
            - the copy of m at level(m) takes M(m), or stays unmatched
            - copies below level(m) take their last dummy, copies above take their first dummy
    Args:
        red (ReducedInstance): The reduced instance
        matching (Matching): A matching of the base instance
        levels (Mapping): Level of every man (and of every matched woman)
    Returns:
        Matching: The reduced matching
    """
    matching.validate(red.origin)
    edges = []
    for man in red.origin.men:
        if man not in levels:
            raise LevelRangeError(f"No level given for {man!r}")
        level = levels[man]
        red.copy(man, level)
        woman = matching.partner(man)
        if woman is not None:
            if levels.get(woman) != level:
                raise LevelMismatchError(
                    f"{man!r} is at level {level} but his partner {woman!r} is at level {levels.get(woman)}"
                )
            edges.append((copy_name(man, level), woman))
        for other in range(red.levels_per_man[man] + 1):
            if other < level:
                edges.append((copy_name(man, other), dummy_name(man, other + 1)))
            elif other > level:
                edges.append((copy_name(man, other), dummy_name(man, other)))
    return Matching(edges)
