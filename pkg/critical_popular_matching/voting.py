# coding: utf-8
"""
Description:
    Comparison machinery behind popularity:
        - a vertex votes between two partners (being unmatched loses to any neighbor)
        - an edge outside a matching M carries the votes of its two endpoints for each other
        - two matchings are compared by counting the vertices strictly preferring each one
        - M ⊕ N splits into alternating paths and cycles, counted by their (+1,+1) and (-1,-1) edges
Classes:
    AltComponent: Alternating path or cycle of a symmetric difference
    EdgeLabel: The (man vote, woman vote) pair of an edge w.r.t. a matching
    VoteTally: Number of vertices preferring the first / the second matching
Functions:
    label_edge: Returns the label of an edge w.r.t. a matching
    prefers: Compares two optional partners from the point of view of a vertex
    symmetric_difference: Splits M ⊕ N into labelled alternating components
    tally: Counts the votes between two matchings
"""


# --------------------------------------------------------------------------------
# > Imports
# --------------------------------------------------------------------------------
# Built-in
from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Tuple

# Third-party
import networkx as nx

# Local
from .exceptions import InvalidMatchingError
from .models import Edge, MarriageInstance, Matching


# --------------------------------------------------------------------------------
# > Classes
# --------------------------------------------------------------------------------
class EdgeLabel(NamedTuple):
    man_vote: int
    woman_vote: int

    @property
    def is_plus_plus(self) -> bool:
        return self.man_vote == 1 and self.woman_vote == 1

    @property
    def is_minus_minus(self) -> bool:
        return self.man_vote == -1 and self.woman_vote == -1


class VoteTally(NamedTuple):
    for_first: int
    for_second: int

    def reversed(self) -> "VoteTally":
        return VoteTally(self.for_second, self.for_first)


@dataclass(frozen=True)
class AltComponent:
    """
    Connected component of M ⊕ N.
    'vertices' lists the component in traversal order (a cycle does not repeat its first vertex),
    'edges' lists its (man, woman) edges in the same order, and the counts are the labels of its
    N-edges w.r.t. M.
    """
    kind: str
    vertices: Tuple[str, ...]
    edges: Tuple[Edge, ...]
    plus_plus: int
    minus_minus: int

    @property
    def is_path(self) -> bool:
        return self.kind == "path"

    @property
    def endpoints(self) -> Tuple[str, ...]:
        return (self.vertices[0], self.vertices[-1]) if self.is_path else ()

    def oriented_from(self, vertex: str) -> "AltComponent":
        """Returns the same path read from the given endpoint"""
        if not self.is_path or vertex not in self.endpoints:
            raise ValueError(f"{vertex!r} is not an endpoint of this path")
        if vertex == self.vertices[0]:
            return self
        return AltComponent(
            self.kind, self.vertices[::-1], self.edges[::-1], self.plus_plus, self.minus_minus
        )


# --------------------------------------------------------------------------------
# > Functions
# --------------------------------------------------------------------------------
def prefers(inst: MarriageInstance, vertex: str, p: Optional[str], q: Optional[str]) -> int:
    """
    Description:
        Compares two possible partners of 'vertex' (None meaning unmatched)
    Args:
        inst (MarriageInstance): The instance
        vertex (str): The voting vertex
        p (str|None): First option
        q (str|None): Second option
    Returns:
        int: +1 if p is strictly preferred, -1 if q is, 0 if they are the same
    """
    rank_p = inst.rank(vertex, p) if p is not None else None
    rank_q = inst.rank(vertex, q) if q is not None else None
    if p == q:
        return 0
    if rank_p is None:
        return -1
    if rank_q is None:
        return 1
    return 1 if rank_p < rank_q else -1


def label_edge(inst: MarriageInstance, matching: Matching, edge: Edge) -> EdgeLabel:
    """Returns the votes of the endpoints of an edge outside the matching, for each other"""
    man, woman = inst.require_edge(edge)
    if edge in matching:
        raise InvalidMatchingError(f"({man}, {woman}) belongs to the matching and has no label")
    return EdgeLabel(
        prefers(inst, man, woman, matching.partner(man)),
        prefers(inst, woman, man, matching.partner(woman)),
    )


def tally(inst: MarriageInstance, first: Matching, second: Matching) -> VoteTally:
    """Counts the vertices strictly preferring 'first' and those strictly preferring 'second'"""
    for_first = for_second = 0
    for vertex in inst.vertices:
        vote = prefers(inst, vertex, first.partner(vertex), second.partner(vertex))
        if vote > 0:
            for_first += 1
        elif vote < 0:
            for_second += 1
    return VoteTally(for_first, for_second)


def symmetric_difference(inst: MarriageInstance, matching: Matching, other: Matching) -> List[AltComponent]:
    """
    Description:
        Splits M ⊕ N into alternating paths and cycles.
        Components come ordered by their smallest vertex. A path is read from its smaller endpoint,
        a cycle from its smallest vertex towards the smaller of its two neighbors.
    Args:
        inst (MarriageInstance): The instance
        matching (Matching): The reference matching M (labels are computed against it)
        other (Matching): The other matching N
    Returns:
        list: The AltComponent list
    """
    graph = nx.Graph()
    graph.add_edges_from(matching.edges ^ other.edges)
    components = []
    for nodes in sorted(nx.connected_components(graph), key=min):
        endpoints = [v for v in nodes if graph.degree(v) == 1]
        kind = "path" if endpoints else "cycle"
        sequence = _walk(graph, min(endpoints) if endpoints else min(nodes))
        pairs = list(zip(sequence, sequence[1:]))
        if kind == "cycle":
            pairs.append((sequence[-1], sequence[0]))
        edges = tuple((u, v) if inst.is_man(u) else (v, u) for u, v in pairs)
        plus_plus = minus_minus = 0
        for edge in edges:
            if edge in matching:
                continue
            label = label_edge(inst, matching, edge)
            plus_plus += label.is_plus_plus
            minus_minus += label.is_minus_minus
        components.append(AltComponent(kind, tuple(sequence), edges, plus_plus, minus_minus))
    return components


# --------------------------------------------------------------------------------
# > Helpers
# --------------------------------------------------------------------------------
def _walk(graph, start):
    """Walks a path or a cycle from 'start', always moving to the smallest unvisited neighbor"""
    sequence = [start]
    visited = {start}
    current = start
    while True:
        candidates = sorted(v for v in graph.neighbors(current) if v not in visited)
        if not candidates:
            return sequence
        current = candidates[0]
        visited.add(current)
        sequence.append(current)
