# coding: utf-8
"""
Description:
    Brute-force ground truth, for small instances only.
    Every matching is enumerated by edge inclusion/exclusion (excluded branch first, over the edges in
    lexicographic order) and votes between matchings are counted on a numpy rank matrix.
    Instances with more edges than Config.oracle_edge_cap are refused, never truncated.
    Tables are cached per instance fingerprint (SHA-256 of the canonical serialization).
Functions:
    check_edge_cap: Refuses instances above the oracle cap
    dominant_fms: All dominant feasible matchings
    enumerate_matchings: Every matching (or every feasible one), in a fixed order
    enumerate_stable: All stable matchings
    fingerprint: Canonical hash of an instance
    is_popular_feasible: Checks a feasible matching against every feasible matching
    min_size_pfms: All popular feasible matchings of minimum size
    pfms: All popular feasible matchings
    popular_edges: Edges contained in some popular feasible matching
"""


# --------------------------------------------------------------------------------
# > Imports
# --------------------------------------------------------------------------------
# Built-in
import hashlib
import logging
from collections import OrderedDict

# Third-party
import numpy as np

# Local
from .config import Config
from .exceptions import InvalidMatchingError, OracleCapError
from .formats import serialize_instance
from .gale_shapley import is_stable
from .models import Matching, is_feasible


# --------------------------------------------------------------------------------
# > Constants
# --------------------------------------------------------------------------------
CACHE_SIZE = 64
log = logging.getLogger(__name__)
_CACHE = OrderedDict()


# --------------------------------------------------------------------------------
# > Tables
# --------------------------------------------------------------------------------
class _Tables:
    """Every matching of one instance, with the rank matrix used for vote counting"""

    def __init__(self, inst, matchings):
        self.inst = inst
        self.matchings = matchings
        self.feasible = [matching for matching in matchings if is_feasible(inst, matching)]
        self.ranks = np.array([_rank_row(inst, matching) for matching in self.feasible], dtype=np.int64)
        self.sizes = np.array([len(matching) for matching in self.feasible], dtype=np.int64)
        self.index = {matching: i for i, matching in enumerate(self.feasible)}
        self._pfms = None

    def votes_against(self, row):
        """For the feasible matching of row 'row', returns (votes for it, votes for each other row)"""
        mine = self.ranks[row]
        return (mine < self.ranks).sum(axis=1), (self.ranks < mine).sum(axis=1)

    @property
    def pfm_rows(self):
        if self._pfms is None:
            self._pfms = []
            for row in range(len(self.feasible)):
                for_me, for_them = self.votes_against(row)
                if np.all(for_them <= for_me):
                    self._pfms.append(row)
        return self._pfms


def _rank_row(inst, matching):
    """Rank of every vertex's partner, unmatched vertices getting a rank below every neighbor"""
    worst = max((len(inst.pref(u)) for u in inst.vertices), default=0)
    row = []
    for vertex in inst.vertices:
        partner = matching.partner(vertex)
        row.append(worst if partner is None else inst.rank(vertex, partner))
    return row


def _tables(inst, config):
    config = config or Config()
    key = (fingerprint(inst), config.oracle_edge_cap)
    if key in _CACHE:
        _CACHE.move_to_end(key)
        return _CACHE[key]
    tables = _Tables(inst, list(_enumerate(inst, config)))
    log.debug("oracle: %d matchings, %d feasible", len(tables.matchings), len(tables.feasible))
    _CACHE[key] = tables
    if len(_CACHE) > CACHE_SIZE:
        _CACHE.popitem(last=False)
    return tables


def _enumerate(inst, config):
    check_edge_cap(inst, config)
    edges = inst.edges()
    chosen, used = [], set()

    def explore(position):
        if position == len(edges):
            yield Matching(chosen)
            return
        yield from explore(position + 1)
        man, woman = edges[position]
        if man not in used and woman not in used:
            chosen.append((man, woman))
            used.update((man, woman))
            yield from explore(position + 1)
            chosen.pop()
            used.difference_update((man, woman))

    yield from explore(0)


# --------------------------------------------------------------------------------
# > Functions
# --------------------------------------------------------------------------------
def check_edge_cap(inst, config=None):
    """Raises OracleCapError when the instance has more edges than the oracle accepts"""
    config = config or Config()
    count = len(inst.edges())
    if count > config.oracle_edge_cap:
        raise OracleCapError(f"The instance has {count} edges, above the oracle cap of {config.oracle_edge_cap}")


def fingerprint(inst):
    """Returns the SHA-256 of the canonical serialization of an instance"""
    return hashlib.sha256(serialize_instance(inst).encode("utf-8")).hexdigest()


def enumerate_matchings(inst, feasible_only=False, config=None):
    """
    Description:
        Lists every matching of the instance exactly once, in the oracle's fixed order
    Args:
        inst (MarriageInstance): The instance
        feasible_only (bool, optional): Keep only the matchings saturating the critical set. Defaults to False.
        config (Config, optional): Provides the edge cap. Defaults to None.
    Returns:
        list: The matchings
    """
    tables = _tables(inst, config)
    return list(tables.feasible if feasible_only else tables.matchings)


def is_popular_feasible(inst, matching, config=None):
    """
    Description:
        Checks that no feasible matching gets more votes than 'matching'
    Args:
        inst (MarriageInstance): The instance
        matching (Matching): A feasible matching of the instance
        config (Config, optional): Provides the edge cap. Defaults to None.
    Returns:
        bool: True if the matching is a popular feasible matching
    """
    matching.validate(inst)
    if not is_feasible(inst, matching):
        raise InvalidMatchingError("The matching leaves a critical vertex unmatched")
    tables = _tables(inst, config)
    return tables.index[matching] in tables.pfm_rows


def pfms(inst, config=None):
    """Returns every popular feasible matching, in enumeration order"""
    tables = _tables(inst, config)
    return [tables.feasible[row] for row in tables.pfm_rows]


def min_size_pfms(inst, config=None):
    """Returns the set of popular feasible matchings of minimum size"""
    found = pfms(inst, config)
    if not found:
        return set()
    smallest = min(len(matching) for matching in found)
    return {matching for matching in found if len(matching) == smallest}


def dominant_fms(inst, config=None):
    """Returns the popular feasible matchings that get strictly more votes than every larger feasible matching"""
    tables = _tables(inst, config)
    result = set()
    for row in tables.pfm_rows:
        for_me, for_them = tables.votes_against(row)
        larger = tables.sizes > tables.sizes[row]
        if np.all(for_me[larger] > for_them[larger]):
            result.add(tables.feasible[row])
    return result


def popular_edges(inst, config=None):
    """Returns the edges contained in at least one popular feasible matching"""
    return frozenset(edge for matching in pfms(inst, config) for edge in matching.edges)


def enumerate_stable(inst, config=None):
    """Returns every stable matching (critical vertices are ignored)"""
    tables = _tables(inst, config)
    return {matching for matching in tables.matchings if is_stable(inst, matching)}
