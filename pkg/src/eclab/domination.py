"""Edge-dominating sets, minimality, and exact domination numbers.

An edge set D dominates when every edge outside D shares an endpoint with
some member of D.  Edges inside D are never themselves required to be
dominated; that convention matters for coalition checks and is pinned by a
dedicated unit test.  Consequently the whole edge set always dominates and
the empty set dominates exactly when the graph has no edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import GraphMismatch
from .graphs import Graph, line_graph


def check_edge_set(g: Graph, members: Iterable[int]) -> frozenset[int]:
    """Normalize an edge-index collection, raising GraphMismatch on bad indices."""
    s = frozenset(members)
    for e in s:
        if not isinstance(e, int) or not 0 <= e < g.m:
            raise GraphMismatch(f"edge index {e!r} does not exist in a graph with m={g.m}")
    return s


def _cover_mask(g: Graph, members: frozenset[int]) -> int:
    masks = g._nbr_masks
    cover = 0
    for e in members:
        cover |= masks[e] | (1 << e)
    return cover


def is_edge_dominating_set(g: Graph, members: Iterable[int]) -> bool:
    """True iff every edge outside the set has a neighbor inside it."""
    s = check_edge_set(g, members)
    return _cover_mask(g, s) == g.full_edge_mask


def is_minimal_edge_dominating_set(g: Graph, members: Iterable[int]) -> bool:
    """True iff the set dominates and no single member can be dropped."""
    s = check_edge_set(g, members)
    full = g.full_edge_mask
    if _cover_mask(g, s) != full:
        return False
    return all(_cover_mask(g, s - {e}) != full for e in s)


@dataclass(frozen=True)
class DominationResult:
    """Exact edge domination number together with a witness of that size."""

    gamma_prime: int
    witness: frozenset[int]


def edge_domination_number(g: Graph) -> DominationResult:
    """Minimum size of an edge dominating set, with a deterministic witness.

    A greedy maximal matching (always dominating) caps the search; subsets
    are then scanned in increasing cardinality and lexicographic order, so
    the witness is the lexicographically least minimum set.
    """
    m = g.m
    if m == 0:
        return DominationResult(0, frozenset())
    matched: set[int] = set()
    greedy = []
    for e, (u, v) in enumerate(g.edges):
        if u not in matched and v not in matched:
            matched.update((u, v))
            greedy.append(e)
    upper = len(greedy)

    masks = g.closed_edge_masks()
    full = g.full_edge_mask
    for size in range(1, upper + 1):
        for combo in combinations(range(m), size):
            cover = 0
            for e in combo:
                cover |= masks[e]
            if cover == full:
                return DominationResult(size, frozenset(combo))
    # The greedy matching itself dominates, so the loop above cannot fail.
    return DominationResult(upper, frozenset(greedy))


def vertex_domination_number(g: Graph) -> int:
    """Minimum size of a vertex dominating set (increasing-cardinality search)."""
    n = g.n
    if n == 0:
        return 0
    closed = [1 << v for v in range(n)]
    for v in range(n):
        for u in g.neighbors(v):
            closed[v] |= 1 << u
    full = (1 << n) - 1

    # Greedy cover for an upper bound.
    covered = 0
    upper = 0
    while covered != full:
        best = max(range(n), key=lambda v: (closed[v] | covered).bit_count())
        covered |= closed[best]
        upper += 1

    for size in range(1, upper + 1):
        for combo in combinations(range(n), size):
            cover = 0
            for v in combo:
                cover |= closed[v]
            if cover == full:
                return size
    return upper


def gamma_prime_via_line_graph(g: Graph) -> int:
    """Cross-check route: edge domination of g equals vertex domination of L(g)."""
    return vertex_domination_number(line_graph(g))
