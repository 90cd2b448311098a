# coding: utf-8
"""
Description:
    Turns a popular feasible matching M that is neither of minimum size nor dominant into one that is,
    while keeping a chosen edge of M.
    Size-reducing (SRAP) and size-increasing (SIAP) alternating paths are read off M ⊕ M_min and
    M ⊕ M_dom, the vertex set is split into three parts (d, m and r) around them, and a leveled
    proposal algorithm is rerun inside one part only:
        - Transformation 1 works on the d-part and yields a minimum size popular feasible matching
        - Transformation 2 works on the m-part and yields a dominant feasible matching
    Women compare proposers by level first and by their own list second.
Classes:
    ClassifiedPath: Component of a symmetric difference, classified as SRAP, SIAP or other
    Part: d, m or r
    PathKind: SRAP, SIAP or other
    Partition3: The three-way split of the vertices, with the induced sub-matchings
Functions:
    classify_component: Classifies one component of M ⊕ N against the SRAP/SIAP definitions
    cross_edge_violations: Lists cross-part edges that break the level relations
    find_srap_siap: Finds the SRAPs and SIAPs of a popular feasible matching
    partition: Runs the partition method
    transform1: Rebuilds the d-part into a minimum size popular feasible matching
    transform2: Rebuilds the m-part into a dominant feasible matching
    transform_for_edge: Runs the whole constructive procedure for one edge of M
"""


# --------------------------------------------------------------------------------
# > Imports
# --------------------------------------------------------------------------------
# Built-in
import logging
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Mapping, Tuple

# Third-party

# Local
from .exceptions import NoSiapError, NoSrapError, PartitionConflictError, PartitionError, TransformError
from .leveling import assign_levels_min
from .models import Matching
from .reductions import LevelAssignment
from .solver import PopularEdgeSolver
from .utils import matching_as_list
from .voting import AltComponent, label_edge, symmetric_difference


# --------------------------------------------------------------------------------
# > Constants
# --------------------------------------------------------------------------------
log = logging.getLogger(__name__)


# --------------------------------------------------------------------------------
# > Classes
# --------------------------------------------------------------------------------
class PathKind(str, Enum):
    SRAP = "SRAP"
    SIAP = "SIAP"
    OTHER = "other"


class Part(str, Enum):
    D = "d"
    M = "m"
    R = "r"


@dataclass(frozen=True)
class ClassifiedPath:
    """
    An alternating component with its classification.
    SRAPs are read from their level-0 woman, SIAPs from their unmatched man.
    """
    component: AltComponent
    kind: PathKind

    @property
    def vertices(self) -> Tuple[str, ...]:
        return self.component.vertices

    def as_dict(self):
        return {
            "kind": self.kind.value,
            "vertices": list(self.component.vertices),
            "plus_plus": self.component.plus_plus,
            "minus_minus": self.component.minus_minus,
        }


@dataclass(frozen=True, eq=False)
class Partition3:
    """Part of every vertex, with the sub-matchings of M induced on each part"""
    part: Mapping[str, Part]
    matching_d: Matching
    matching_m: Matching
    matching_r: Matching

    # ----------------------------------------
    # Custom Methods
    # ----------------------------------------
    def vertices(self, part: Part) -> List[str]:
        return sorted(vertex for vertex, where in self.part.items() if where is part)

    def sub_matching(self, part: Part) -> Matching:
        return {Part.D: self.matching_d, Part.M: self.matching_m, Part.R: self.matching_r}[part]

    def as_dict(self):
        return {
            "parts": {part.value: self.vertices(part) for part in Part},
            "matchings": {part.value: matching_as_list(self.sub_matching(part)) for part in Part},
        }


# --------------------------------------------------------------------------------
# > SRAP / SIAP
# --------------------------------------------------------------------------------
def classify_component(inst, matching, levels, component):
    """
    Description:
        Classifies a component of M ⊕ N (labels taken against M)
    Args:
        inst (MarriageInstance): A normalized instance
        matching (Matching): The popular feasible matching M
        levels (Mapping): The levels of M
        component (AltComponent): One component of M ⊕ N
    Returns:
        ClassifiedPath: The oriented component and its kind
    """
    if not component.is_path:
        return ClassifiedPath(component, PathKind.OTHER)
    first, last = component.endpoints
    man, woman = (first, last) if inst.is_man(first) else (last, first)
    if not inst.is_man(man) or not inst.is_woman(woman):
        return ClassifiedPath(component, PathKind.OTHER)
    if (
        component.plus_plus == component.minus_minus + 1
        and matching.is_matched(woman)
        and levels[woman] == 0
        and matching.is_matched(man)
        and man not in inst.critical
        and levels[man] == 1
    ):
        return ClassifiedPath(component.oriented_from(woman), PathKind.SRAP)
    if (
        component.plus_plus == component.minus_minus
        and not matching.is_matched(man)
        and not matching.is_matched(woman)
    ):
        return ClassifiedPath(component.oriented_from(man), PathKind.SIAP)
    return ClassifiedPath(component, PathKind.OTHER)


def find_srap_siap(inst, matching, levels, solver=None):
    """
    Description:
        Finds the SRAPs of M ⊕ M_min and the SIAPs of M ⊕ M_dom
    Args:
        inst (MarriageInstance): A normalized, feasible instance
        matching (Matching): A popular feasible matching, neither minimum size nor dominant
        levels (Mapping): Its levels, from the relaxed minimum size leveling
        solver (PopularEdgeSolver, optional): Solver to reuse for M_min and M_dom. Defaults to None.
    Returns:
        tuple: The list of SRAPs and the list of SIAPs, as ClassifiedPath
    """
    for man in inst.men:
        if man not in inst.critical and levels[man] > 1:
            raise PartitionError(f"Non-critical man {man!r} is at level {levels[man]}, above 1")
    solver = solver or PopularEdgeSolver(inst)
    sraps = _paths_of_kind(inst, matching, levels, solver.min_size_pfm(), PathKind.SRAP)
    siaps = _paths_of_kind(inst, matching, levels, solver.dominant_fm(), PathKind.SIAP)
    if not sraps:
        raise NoSrapError("M ⊕ M_min holds no SRAP: the matching is already of minimum size")
    if not siaps:
        raise NoSiapError("M ⊕ M_dom holds no SIAP: the matching is already dominant")
    log.debug("%d SRAP(s) and %d SIAP(s) found", len(sraps), len(siaps))
    return sraps, siaps


def _paths_of_kind(inst, matching, levels, other, kind):
    classified = (
        classify_component(inst, matching, levels, component)
        for component in symmetric_difference(inst, matching, other)
    )
    return [path for path in classified if path.kind is kind]


# --------------------------------------------------------------------------------
# > Partition method
# --------------------------------------------------------------------------------
def partition(inst, matching, levels, sraps, siaps):
    """
    Description:
        Splits the vertices into the d, m and r parts:
            - unmatched vertices, then SIAP vertices, go to the m-part
            - SRAP vertices go to the d-part
            - a pair (m, M(m)) joins the d-part while m has an edge to the d-part that breaks the
              level relations of the edges between the r-part and the d-part
            - a pair (M(w), w) joins the m-part while an m-part man has such an edge to w
            - every other vertex goes to the r-part
        Matched partners always end up in the same part.
    Args:
        inst (MarriageInstance): A normalized instance
        matching (Matching): The popular feasible matching
        levels (Mapping): Its levels
        sraps (list): SRAPs from find_srap_siap
        siaps (list): SIAPs from find_srap_siap
    Returns:
        Partition3: The split
    """
    part: Dict[str, Part] = {}

    def claim(vertices, where, step):
        for vertex in vertices:
            current = part.get(vertex)
            if current is not None and current is not where:
                raise PartitionConflictError(
                    f"Step {step} puts {vertex!r} in part {where.value}, but it is already in {current.value}"
                )
            part[vertex] = where

    claim([v for v in inst.vertices if not matching.is_matched(v)], Part.M, "b")
    for path in sraps:
        claim(path.vertices, Part.D, "c")
    for path in siaps:
        claim(path.vertices, Part.M, "d")
    labels = {edge: label_edge(inst, matching, edge) for edge in inst.edges() if edge not in matching}

    # Step (e)
    changed = True
    while changed:
        changed = False
        for (man, woman), label in labels.items():
            if man not in part and part.get(woman) is Part.D and _breaks(label, levels[man], levels[woman]):
                log.debug("step e: %s pulls %s and %s into the d-part", (man, woman), man, matching.partner(man))
                claim((man, matching.partner(man)), Part.D, "e")
                changed = True
    # Step (f)
    changed = True
    while changed:
        changed = False
        for (man, woman), label in labels.items():
            if woman not in part and part.get(man) is Part.M and _breaks(label, levels[man], levels[woman]):
                log.debug("step f: %s pulls %s and %s into the m-part", (man, woman), matching.partner(woman), woman)
                claim((matching.partner(woman), woman), Part.M, "f")
                changed = True

    claim([v for v in inst.vertices if v not in part], Part.R, "g")
    result = Partition3(
        part=part,
        matching_d=matching.restricted(v for v in part if part[v] is Part.D),
        matching_m=matching.restricted(v for v in part if part[v] is Part.M),
        matching_r=matching.restricted(v for v in part if part[v] is Part.R),
    )
    if len(result.matching_d) + len(result.matching_m) + len(result.matching_r) != len(matching):
        raise PartitionConflictError("An edge of the matching crosses two parts")
    log.info(
        "partition: %d vertices in d, %d in m, %d in r",
        len(result.vertices(Part.D)), len(result.vertices(Part.M)), len(result.vertices(Part.R)),
    )
    return result


def _breaks(label, man_level, woman_level):
    """True when an edge from a man at 'man_level' to a woman at 'woman_level' breaks the cross-part relations"""
    if woman_level == man_level + 1:
        return label.is_plus_plus
    if woman_level == man_level:
        return not label.is_minus_minus
    return woman_level < man_level


def cross_edge_violations(inst, matching, levels, split):
    """
    Description:
        Lists the edges of A_m × B_d, A_r × B_d and A_m × B_r that break the level relations:
        a (+1,+1) edge one level up, an edge to a woman at a lower level, or an edge at the same
        level that is not (-1,-1)
    Args:
        inst (MarriageInstance): A normalized instance
        matching (Matching): The partitioned matching
        levels (Mapping): Its levels
        split (Partition3): The partition
    Returns:
        list: The offending edges, in lexicographic order
    """
    checked = {(Part.M, Part.D), (Part.R, Part.D), (Part.M, Part.R)}
    violations = []
    for man, woman in inst.edges():
        if (split.part[man], split.part[woman]) not in checked or (man, woman) in matching:
            continue
        if _breaks(label_edge(inst, matching, (man, woman)), levels[man], levels[woman]):
            violations.append((man, woman))
    return violations


# --------------------------------------------------------------------------------
# > Transformations
# --------------------------------------------------------------------------------
def transform1(inst, split, levels, with_levels=False):
    """
    Description:
        Transformation 1, on the d-part only:
            - matched pairs at level i >= 1 drop to level i-1
            - the pairs left at level 0 are dissolved, and their men propose from the top of their lists
            - a critical man exhausting his list at a level below ℓ proposes again one level higher;
              non-critical men are never promoted
        The result is M*_m = M'_m ∪ M_m ∪ M_r.
    Args:
        inst (MarriageInstance): A normalized instance
        split (Partition3): Partition of a popular feasible matching
        levels (Mapping): The levels used for the partition
        with_levels (bool, optional): Also return the levels after the transformation. Defaults to False.
    Returns:
        Matching|tuple: M*_m, or (M*_m, LevelAssignment) with 'with_levels'
    """
    vertices = split.vertices(Part.D)
    sub = inst.restricted(vertices)
    level = {}
    husband = {}
    free = []
    for man in sub.men:
        wife = split.matching_d.partner(man)
        level[man] = max(levels[man] - 1, 0) if wife is not None else levels[man]
        if wife is not None and level[man] >= 1:
            husband[wife] = man
        else:
            free.append(man)
    pointer = {man: 0 if man in free else sub.rank(man, split.matching_d.partner(man)) + 1 for man in sub.men}

    def can_promote(man):
        return man in inst.critical and level[man] < inst.ell

    bound = (inst.ell + 1) * _list_total(sub) + len(sub.men)
    rebuilt = _leveled_proposal(sub, level, husband, pointer, free, can_promote, bound)
    result = rebuilt.union(split.matching_m, split.matching_r)
    log.info("transformation 1: %d pairs in the d-part become %d", len(split.matching_d), len(rebuilt))
    if not with_levels:
        return result
    return result, _merged_levels(sub, levels, level, rebuilt)


def transform2(inst, split, levels, with_levels=False):
    """
    Description:
        Transformation 2, on the m-part only:
            - unmatched men enter at level 1 and propose, displaced men go on down their lists
            - a critical man exhausting his list at a level below ℓ+1 proposes again one level higher
            - a non-critical man exhausting his list at level 0 proposes again at level 1
        The result is M*_d = M_d ∪ M'_d ∪ M_r.
    Args:
        inst (MarriageInstance): A normalized instance
        split (Partition3): Partition of a popular feasible matching
        levels (Mapping): The levels used for the partition
        with_levels (bool, optional): Also return the levels after the transformation. Defaults to False.
    Returns:
        Matching|tuple: M*_d, or (M*_d, LevelAssignment) with 'with_levels'
    """
    vertices = split.vertices(Part.M)
    sub = inst.restricted(vertices)
    level = {}
    husband = {}
    free = []
    pointer = {}
    for man in sub.men:
        wife = split.matching_m.partner(man)
        if wife is None:
            level[man] = 1
            pointer[man] = 0
            free.append(man)
        else:
            level[man] = levels[man]
            pointer[man] = sub.rank(man, wife) + 1
            husband[wife] = man

    def can_promote(man):
        if man in inst.critical:
            return level[man] < inst.ell + 1
        return level[man] == 0

    bound = (inst.ell + 2) * _list_total(sub) + len(sub.men)
    rebuilt = _leveled_proposal(sub, level, husband, pointer, free, can_promote, bound)
    result = split.matching_d.union(rebuilt, split.matching_r)
    log.info("transformation 2: %d pairs in the m-part become %d", len(split.matching_m), len(rebuilt))
    if not with_levels:
        return result
    return result, _merged_levels(sub, levels, level, rebuilt)


def _leveled_proposal(sub, level, husband, pointer, free, can_promote, bound):
    """
    Runs the leveled proposal algorithm in place ('level', 'husband' and 'pointer' are updated).
    A woman prefers a man at a higher level, then the man she ranks first.
    """
    queue = deque(free)
    steps = 0
    while queue:
        man = queue.popleft()
        prefs = sub.pref(man)
        if pointer[man] >= len(prefs):
            if can_promote(man):
                level[man] += 1
                pointer[man] = 0
                log.debug("%s exhausted his list and moves to level %d", man, level[man])
                queue.appendleft(man)
            else:
                log.debug("%s stays unmatched at level %d", man, level[man])
            continue
        steps += 1
        if steps > bound:
            raise TransformError(f"The proposal algorithm did not stop within {bound} proposals")
        woman = prefs[pointer[man]]
        pointer[man] += 1
        current = husband.get(woman)
        if current is None:
            husband[woman] = man
        elif _standing(sub, level, woman, man) > _standing(sub, level, woman, current):
            husband[woman] = man
            log.debug("%s accepts %s and drops %s", woman, man, current)
            queue.append(current)
        else:
            queue.appendleft(man)
    return Matching((man, woman) for woman, man in husband.items())


def _standing(sub, level, woman, man):
    return level[man], -sub.rank(woman, man)


def _list_total(sub):
    return sum(len(sub.pref(man)) for man in sub.men)


def _merged_levels(sub, levels, level, rebuilt):
    merged = dict(levels)
    for man in sub.men:
        merged[man] = level[man]
    for woman in sub.women:
        partner = rebuilt.partner(woman)
        merged[woman] = level[partner] if partner is not None else 0
    return LevelAssignment(merged)


# --------------------------------------------------------------------------------
# > Pipeline
# --------------------------------------------------------------------------------
def transform_for_edge(inst, matching, edge, solver=None):
    """
    Description:
        Turns a popular feasible matching containing 'edge' into a minimum size popular feasible
        matching or a dominant feasible matching that still contains it.
        Transformation 1 is used when the edge lies in M_m or M_r, Transformation 2 otherwise.
        M is returned unchanged when it has no SRAP or no SIAP.
    Args:
        inst (MarriageInstance): A normalized, feasible instance
        matching (Matching): A popular feasible matching
        edge (tuple): An edge of the matching
        solver (PopularEdgeSolver, optional): Solver to reuse. Defaults to None.
    Returns:
        Matching: The transformed matching
    """
    inst.require_edge(edge)
    if edge not in matching:
        raise PartitionError(f"{edge} is not an edge of the matching")
    levels = assign_levels_min(inst, matching, relaxed=True)
    try:
        sraps, siaps = find_srap_siap(inst, matching, levels, solver)
    except (NoSrapError, NoSiapError) as error:
        log.info("no transformation needed: %s", error)
        return matching
    split = partition(inst, matching, levels, sraps, siaps)
    if split.part[edge[0]] is Part.D:
        return transform2(inst, split, levels)
    return transform1(inst, split, levels)
