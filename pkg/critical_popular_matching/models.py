# coding: utf-8
"""
Description:
    Core data model of the package: marriage instances with critical vertices, and matchings.
    - A MarriageInstance holds two disjoint ordered vertex lists (men and women), one strict
      preference list per vertex (most-preferred first) and a set of critical vertices
    - Adjacency is implied by the lists and must be mutual
    - The critical set lives on one side only. Every algorithm of the package expects it on the
      men's side: use 'normalize_critical_side' first
    - Both classes are immutable once built, and hashable
Classes:
    MarriageInstance: Bipartite graph with strict preferences and a critical set
    Matching: Set of disjoint (man, woman) edges with partner lookup
Functions:
    has_feasible: Checks whether some matching saturates the critical set
    is_feasible: Checks whether a matching saturates the critical set
    normalize_critical_side: Swaps the sides of an instance whose critical vertices are women
    swap_sides: Exchanges men and women
"""


# --------------------------------------------------------------------------------
# > Imports
# --------------------------------------------------------------------------------
# Built-in
import logging
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Iterator, Mapping, Optional, Sequence, Tuple

# Third-party
import networkx as nx

# Local
from .exceptions import (
    CriticalSideError,
    DuplicateVertexError,
    InstanceError,
    InvalidMatchingError,
    NonMutualAdjacencyError,
    NotNeighborError,
    RepeatedPreferenceError,
    UnknownEdgeError,
    UnknownVertexError,
)


# --------------------------------------------------------------------------------
# > Constants
# --------------------------------------------------------------------------------
Edge = Tuple[str, str]
RESERVED_CHARACTERS = "#()"
FORBIDDEN_CHARACTERS = ":"
log = logging.getLogger(__name__)


# --------------------------------------------------------------------------------
# > Classes
# --------------------------------------------------------------------------------
class MarriageInstance:
    """
    Bipartite graph (men + women) with strict preference lists and a set of critical vertices.
    Set 'reduced' to True to allow the '#', '(' and ')' characters used by reduced instances.
    """

    def __init__(
        self,
        men: Iterable[str],
        women: Iterable[str],
        pref: Mapping[str, Sequence[str]],
        critical: Iterable[str] = (),
        reduced: bool = False,
    ):
        self._men = tuple(men)
        self._women = tuple(women)
        self._pref = {u: tuple(pref.get(u, ())) for u in self._men + self._women}
        self._critical = frozenset(critical)
        self._reduced = reduced
        self._validate(pref)

    # ----------------------------------------
    # Properties
    # ----------------------------------------
    @property
    def men(self) -> Tuple[str, ...]:
        return self._men

    @property
    def women(self) -> Tuple[str, ...]:
        return self._women

    @property
    def critical(self) -> FrozenSet[str]:
        return self._critical

    @property
    def ell(self) -> int:
        """Number of critical vertices"""
        return len(self._critical)

    @property
    def reduced(self) -> bool:
        return self._reduced

    @property
    def vertices(self) -> Tuple[str, ...]:
        return self._men + self._women

    @cached_property
    def _men_set(self) -> FrozenSet[str]:
        return frozenset(self._men)

    @cached_property
    def _women_set(self) -> FrozenSet[str]:
        return frozenset(self._women)

    @cached_property
    def _ranks(self) -> Dict[str, Dict[str, int]]:
        return {u: {v: i for i, v in enumerate(lst)} for u, lst in self._pref.items()}

    # ----------------------------------------
    # Built-in Methods
    # ----------------------------------------
    def __eq__(self, other):
        if not isinstance(other, MarriageInstance):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return (
            f"MarriageInstance(men={list(self._men)}, women={list(self._women)}, "
            f"critical={sorted(self._critical)}, edges={len(self.edges())})"
        )

    @cached_property
    def _key(self):
        return (
            self._men,
            self._women,
            tuple(self._pref[u] for u in self.vertices),
            tuple(sorted(self._critical)),
        )

    # ----------------------------------------
    # Custom Methods
    # ----------------------------------------
    def pref(self, vertex: str) -> Tuple[str, ...]:
        """Returns the preference list of a vertex, most-preferred first"""
        self._require_vertex(vertex)
        return self._pref[vertex]

    def rank(self, vertex: str, other: str) -> int:
        """Returns the position of 'other' in the list of 'vertex' (0 is the favourite)"""
        try:
            return self._ranks[vertex][other]
        except KeyError:
            self._require_vertex(vertex)
            raise NotNeighborError(f"{other!r} is not a neighbor of {vertex!r}")

    def is_man(self, vertex: str) -> bool:
        return vertex in self._men_set

    def is_woman(self, vertex: str) -> bool:
        return vertex in self._women_set

    def has_vertex(self, vertex: str) -> bool:
        return vertex in self._ranks

    def is_edge(self, man: str, woman: str) -> bool:
        return man in self._men_set and woman in self._ranks.get(man, ())

    def require_edge(self, edge: Edge) -> Edge:
        """Returns the edge unchanged, or raises UnknownEdgeError if it is not in E"""
        man, woman = edge
        if not self.is_edge(man, woman):
            raise UnknownEdgeError(f"({man}, {woman}) is not an edge of the instance")
        return edge

    def edges(self) -> Tuple[Edge, ...]:
        """Returns every (man, woman) edge in lexicographic order"""
        return self._edges

    @cached_property
    def _edges(self) -> Tuple[Edge, ...]:
        return tuple(sorted((m, w) for m in self._men for w in self._pref[m]))

    def restricted(self, vertices: Iterable[str]) -> "MarriageInstance":
        """Returns the sub-instance induced by 'vertices' (lists keep their order)"""
        keep = set(vertices)
        return MarriageInstance(
            men=[m for m in self._men if m in keep],
            women=[w for w in self._women if w in keep],
            pref={u: [v for v in self._pref[u] if v in keep] for u in self.vertices if u in keep},
            critical=[c for c in self._critical if c in keep],
            reduced=self._reduced,
        )

    def truncated(self, woman: str, after: str) -> "MarriageInstance":
        """
        Description:
            Returns a copy where 'woman' no longer accepts the men she ranks below 'after'.
            The deleted edges are removed from both lists.
        Args:
            woman (str): The woman whose list is truncated
            after (str): The last man she keeps
        Returns:
            MarriageInstance: The truncated instance
        """
        cut = self.rank(woman, after)
        dropped = set(self._pref[woman][cut + 1:])
        pref = dict(self._pref)
        pref[woman] = self._pref[woman][:cut + 1]
        for man in dropped:
            pref[man] = tuple(w for w in self._pref[man] if w != woman)
        return MarriageInstance(self._men, self._women, pref, self._critical, reduced=self._reduced)

    # ----------------------------------------
    # Validation
    # ----------------------------------------
    def _require_vertex(self, vertex):
        if vertex not in self._ranks:
            raise UnknownVertexError(f"Unknown vertex {vertex!r}")

    def _validate(self, raw_pref):
        seen = set()
        for vertex in self.vertices:
            self._validate_identifier(vertex)
            if vertex in seen:
                raise DuplicateVertexError(f"Vertex {vertex!r} is declared twice")
            seen.add(vertex)
        for vertex in raw_pref:
            if vertex not in seen:
                raise UnknownVertexError(f"Preferences given for unknown vertex {vertex!r}")
        men, women = set(self._men), set(self._women)
        for vertex, lst in self._pref.items():
            other_side = women if vertex in men else men
            if len(set(lst)) != len(lst):
                raise RepeatedPreferenceError(f"The list of {vertex!r} repeats an entry")
            for other in lst:
                if other not in other_side:
                    raise UnknownVertexError(
                        f"{other!r} in the list of {vertex!r} is not a vertex of the opposite side"
                    )
                if vertex not in self._pref[other]:
                    raise NonMutualAdjacencyError(
                        f"{other!r} is listed by {vertex!r} but does not list {vertex!r}"
                    )
        unknown = self._critical - seen
        if unknown:
            raise UnknownVertexError(f"Unknown critical vertices: {sorted(unknown)}")
        if self._critical & men and self._critical & women:
            raise CriticalSideError("Critical vertices must all be men or all be women")

    def _validate_identifier(self, vertex):
        if not isinstance(vertex, str):
            raise TypeError(f"Vertex ids must be strings, got {vertex!r}")
        if not vertex or any(c.isspace() for c in vertex) or any(c in FORBIDDEN_CHARACTERS for c in vertex):
            raise InstanceError(f"Invalid vertex id {vertex!r}")
        if not self._reduced and any(c in RESERVED_CHARACTERS for c in vertex):
            raise InstanceError(f"Vertex id {vertex!r} uses a reserved character ('#', '(' or ')')")


class Matching:
    """Immutable set of disjoint (man, woman) edges"""

    def __init__(self, edges: Iterable[Edge] = ()):
        partner = {}
        pairs = []
        for man, woman in edges:
            for vertex in (man, woman):
                if vertex in partner:
                    raise InvalidMatchingError(f"Vertex {vertex!r} is matched twice")
            partner[man] = woman
            partner[woman] = man
            pairs.append((man, woman))
        self._partner = partner
        self._edges = frozenset(pairs)

    # ----------------------------------------
    # Built-in Methods
    # ----------------------------------------
    def __contains__(self, edge):
        return edge in self._edges

    def __eq__(self, other):
        if not isinstance(other, Matching):
            return NotImplemented
        return self._edges == other._edges

    def __hash__(self):
        return hash(self._edges)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.sorted_edges())

    def __len__(self):
        return len(self._edges)

    def __repr__(self):
        return f"Matching({self.sorted_edges()})"

    # ----------------------------------------
    # Custom Methods
    # ----------------------------------------
    @property
    def edges(self) -> FrozenSet[Edge]:
        return self._edges

    def sorted_edges(self):
        return sorted(self._edges)

    def partner(self, vertex: str) -> Optional[str]:
        """Returns the partner of a vertex, or None if unmatched"""
        return self._partner.get(vertex)

    def is_matched(self, vertex: str) -> bool:
        return vertex in self._partner

    def restricted(self, vertices: Iterable[str]) -> "Matching":
        """Keeps the edges whose both endpoints are in 'vertices'"""
        keep = set(vertices)
        return Matching(e for e in self._edges if e[0] in keep and e[1] in keep)

    def union(self, *others: "Matching") -> "Matching":
        edges = set(self._edges)
        for other in others:
            edges |= other.edges
        return Matching(edges)

    def swapped(self) -> "Matching":
        """Returns the same matching with every pair written (woman, man)"""
        return Matching((w, m) for m, w in self._edges)

    def validate(self, inst: MarriageInstance) -> "Matching":
        """Checks every edge against the instance and returns self"""
        for man, woman in self._edges:
            if not inst.is_edge(man, woman):
                raise InvalidMatchingError(f"({man}, {woman}) is not an edge of the instance")
        return self


# --------------------------------------------------------------------------------
# > Functions
# --------------------------------------------------------------------------------
def has_feasible(inst: MarriageInstance) -> bool:
    """
    Description:
        Checks whether some matching saturates the critical set.
        Runs Hopcroft-Karp on the subgraph spanned by the critical vertices and their neighbors:
        augmenting paths only ever start at critical vertices.
    Args:
        inst (MarriageInstance): The instance to check
    Returns:
        bool: True if a feasible matching exists
    """
    if not inst.critical:
        return True
    graph = nx.Graph()
    graph.add_nodes_from(inst.critical)
    for vertex in inst.critical:
        graph.add_edges_from((vertex, other) for other in inst.pref(vertex))
    matching = nx.bipartite.hopcroft_karp_matching(graph, top_nodes=inst.critical)
    saturated = sum(1 for vertex in inst.critical if vertex in matching)
    log.debug("critical saturation: %d of %d", saturated, inst.ell)
    return saturated == inst.ell


def is_feasible(inst: MarriageInstance, matching: Matching) -> bool:
    """Returns True if every critical vertex is matched"""
    return all(matching.is_matched(vertex) for vertex in inst.critical)


def normalize_critical_side(inst: MarriageInstance) -> Tuple[MarriageInstance, bool]:
    """
    Description:
        Makes sure the critical vertices are men, swapping the sides if they are women
    Args:
        inst (MarriageInstance): The instance to normalize
    Returns:
        tuple: The (possibly swapped) instance, and whether a swap happened
    """
    if inst.critical and inst.critical <= set(inst.women):
        log.info("critical vertices are women: swapping sides")
        return swap_sides(inst), True
    return inst, False


def swap_sides(inst: MarriageInstance) -> MarriageInstance:
    """Exchanges men and women (applying it twice gives the original instance back)"""
    return MarriageInstance(
        men=inst.women,
        women=inst.men,
        pref={u: inst.pref(u) for u in inst.vertices},
        critical=inst.critical,
        reduced=inst.reduced,
    )
