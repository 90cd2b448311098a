# coding: utf-8
"""
Description:
    Stable pairs: the edges that belong to at least one stable matching.
    Starting from the man-optimal matching and its shortlists (every woman's list cut right after her
    partner, symmetrically), exposed rotations are found and eliminated one after the other until the
    woman-optimal matching is reached. A maximal chain of eliminations goes through every rotation,
    so every stable pair is either in the man-optimal matching or created by one of them.
Classes:
    Rotation: Cyclic re-matching between two stable matchings
    StablePairIndex: Runs the elimination once for an instance and answers queries
Functions:
    is_stable_pair: Checks whether an edge belongs to some stable matching
    rotations: Lists the rotations of a maximal elimination chain
    stable_pair_index: Returns the (cached) StablePairIndex of an instance
    stable_pairs: Returns all the stable pairs of an instance
"""


# --------------------------------------------------------------------------------
# > Imports
# --------------------------------------------------------------------------------
# Built-in
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Tuple

# Third-party

# Local
from .exceptions import InternalVerificationError
from .gale_shapley import propose_man_optimal
from .models import Edge, Matching
from . import oracle


# --------------------------------------------------------------------------------
# > Constants
# --------------------------------------------------------------------------------
log = logging.getLogger(__name__)


# --------------------------------------------------------------------------------
# > Classes
# --------------------------------------------------------------------------------
@dataclass(frozen=True)
class Rotation:
    """Pairs (m_0, w_0) ... (m_k-1, w_k-1): eliminating it gives w_i+1 to every m_i"""
    pairs: Tuple[Edge, ...]

    def created_pairs(self) -> List[Edge]:
        """Returns the pairs produced by the elimination"""
        size = len(self.pairs)
        return [(self.pairs[i][0], self.pairs[(i + 1) % size][1]) for i in range(size)]

    def eliminate(self, matching: Matching) -> Matching:
        """Returns the matching obtained by eliminating the rotation from 'matching'"""
        return Matching((matching.edges - set(self.pairs)) | set(self.created_pairs()))


class StablePairIndex:
    """
    Runs the rotation elimination once for an instance.
    Remembers, for every stable pair, the first stable matching of the chain that contains it.
    """

    def __init__(self, inst):
        self.inst = inst
        self._first_matching: Dict[Edge, Matching] = {}
        self._rotations: List[Rotation] = []
        self._lists: Dict[str, List[str]] = {}
        self._run()

    # ----------------------------------------
    # Built-in Methods
    # ----------------------------------------
    def __contains__(self, edge):
        return edge in self._first_matching

    # ----------------------------------------
    # Properties
    # ----------------------------------------
    @property
    def pairs(self) -> FrozenSet[Edge]:
        return frozenset(self._first_matching)

    @property
    def rotations(self) -> Tuple[Rotation, ...]:
        return tuple(self._rotations)

    # ----------------------------------------
    # Custom Methods
    # ----------------------------------------
    def matching_with(self, edge) -> Optional[Matching]:
        """Returns a stable matching containing the edge, or None if the edge is not a stable pair"""
        return self._first_matching.get(edge)

    # ----------------------------------------
    # Elimination
    # ----------------------------------------
    def _run(self):
        inst = self.inst
        matching = propose_man_optimal(inst)
        self._lists = {u: list(inst.pref(u)) for u in inst.vertices}
        # Unmatched women keep their lists: no stable matching moves a man below one of them
        for woman in inst.women:
            partner = matching.partner(woman)
            if partner is not None:
                self._truncate(woman, partner)
        wife = {man: matching.partner(man) for man in inst.men if matching.is_matched(man)}
        self._record(matching)
        while True:
            rotation = self._exposed_rotation(wife)
            if rotation is None:
                break
            self._rotations.append(rotation)
            for man, woman in rotation.created_pairs():
                wife[man] = woman
            for man, woman in rotation.created_pairs():
                self._truncate(woman, man)
            matching = Matching(wife.items())
            log.debug("eliminated rotation %s", rotation.pairs)
            self._record(matching)
        log.debug("%d rotations, %d stable pairs", len(self._rotations), len(self._first_matching))

    def _record(self, matching):
        for edge in matching.edges:
            self._first_matching.setdefault(edge, matching)

    def _delete(self, man, woman):
        self._lists[man].remove(woman)
        self._lists[woman].remove(man)

    def _truncate(self, woman, man):
        """Removes every man 'woman' ranks below 'man' from her shortlist (and her from theirs)"""
        shortlist = self._lists[woman]
        for other in shortlist[shortlist.index(man) + 1:]:
            self._delete(other, woman)

    def _exposed_rotation(self, wife):
        husband = {woman: man for man, woman in wife.items()}
        for man, woman in wife.items():
            if self._lists[man][0] != woman:
                raise InternalVerificationError(f"Shortlist of {man!r} does not start with his partner")

        def successor(man):
            shortlist = self._lists[man]
            return husband.get(shortlist[1]) if len(shortlist) >= 2 else None

        dead = set()
        for start in self.inst.men:
            if start not in wife or start in dead:
                continue
            path, position = [], {}
            current = start
            while current is not None and current not in dead and current not in position:
                position[current] = len(path)
                path.append(current)
                current = successor(current)
            if current is not None and current in position:
                cycle = path[position[current]:]
                return Rotation(tuple((man, wife[man]) for man in cycle))
            dead.update(path)
        return None


# --------------------------------------------------------------------------------
# > Functions
# --------------------------------------------------------------------------------
@lru_cache(maxsize=256)
def stable_pair_index(inst):
    """Returns the StablePairIndex of an instance, built once per instance"""
    return StablePairIndex(inst)


def stable_pairs(inst, use_oracle=False, config=None):
    """
    Description:
        Returns the edges contained in at least one stable matching
    Args:
        inst (MarriageInstance): Any marriage instance (critical vertices are ignored)
        use_oracle (bool, optional): Enumerate the stable matchings instead. Defaults to False.
        config (Config, optional): Oracle settings, when 'use_oracle' is set. Defaults to None.
    Returns:
        frozenset: The stable pairs
    """
    if use_oracle:
        return frozenset(edge for stable in oracle.enumerate_stable(inst, config) for edge in stable.edges)
    return stable_pair_index(inst).pairs


def is_stable_pair(inst, edge, use_oracle=False, config=None):
    """Checks whether an edge of the instance belongs to some stable matching"""
    inst.require_edge(edge)
    if use_oracle:
        return edge in stable_pairs(inst, use_oracle=True, config=config)
    return edge in stable_pair_index(inst)


def rotations(inst):
    """Returns the rotations eliminated on the way from the man-optimal to the woman-optimal matching"""
    return stable_pair_index(inst).rotations
