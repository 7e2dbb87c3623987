"""Undirected simple graphs with stable, indexable edges.

Edges are stored in insertion order and addressed everywhere in the
library by their 0-based index; sets of edges are plain ``frozenset``
objects of indices.  A :class:`Graph` is immutable after construction
(including its cached incidence bitmasks), so instances can be shared
freely between threads and reused as dictionary keys.

The module also provides the edge-list text format used by the CLI:
a header line ``"n m"`` followed by ``m`` lines ``"u v"``; blank lines
and lines starting with ``#`` are ignored.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    DuplicateEdge,
    EdgeIndexOutOfRange,
    OutOfRangeVertex,
    SelfLoop,
    SizeLimitExceeded,
)

DEFAULT_ISO_VERTEX_CAP = 12


class Graph:
    """Immutable undirected simple graph.

    Vertices are ``0..n-1``.  Edges are unordered pairs, normalized to
    ``(min, max)`` and kept in insertion order; ``m`` is the edge count.
    """

    __slots__ = ("n", "edges", "_adj", "_incident", "_nbr_masks", "_edge_pairs")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise OutOfRangeVertex(f"vertex count must be nonnegative, got {n}")
        normalized: list[tuple[int, int]] = []
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n) or not (0 <= v < n):
                raise OutOfRangeVertex(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            pair = (u, v) if u < v else (v, u)
            if pair in seen:
                raise DuplicateEdge(f"duplicate edge {pair}")
            seen.add(pair)
            normalized.append(pair)
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(normalized)
        self._edge_pairs = seen

        adj: list[list[int]] = [[] for _ in range(n)]
        incident: list[list[int]] = [[] for _ in range(n)]
        for idx, (u, v) in enumerate(self.edges):
            adj[u].append(v)
            adj[v].append(u)
            incident[u].append(idx)
            incident[v].append(idx)
        self._adj = tuple(tuple(sorted(a)) for a in adj)
        self._incident = tuple(tuple(a) for a in incident)

        # Open edge-neighborhood bitmasks: bit f set in mask e iff edges
        # e and f are distinct and share an endpoint.
        masks = [0] * self.m
        for inc in self._incident:
            for i in inc:
                for j in inc:
                    if i != j:
                        masks[i] |= 1 << j
        self._nbr_masks = tuple(masks)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def full_edge_mask(self) -> int:
        """Bitmask with one bit per edge, all set."""
        return (1 << self.m) - 1

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def incident_edges(self, v: int) -> tuple[int, ...]:
        """Indices of the edges incident to vertex ``v``."""
        return self._incident[v]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edge_pairs

    def edge_neighbor_mask(self, e: int) -> int:
        """Open neighborhood of edge ``e`` as a bitmask (``e`` excluded)."""
        self._check_edge(e)
        return self._nbr_masks[e]

    def closed_edge_masks(self) -> tuple[int, ...]:
        """Closed neighborhood masks ``N[e] = N(e) | {e}`` for all edges."""
        return tuple(mask | (1 << e) for e, mask in enumerate(self._nbr_masks))

    def _check_edge(self, e: int) -> None:
        if not 0 <= e < self.m:
            raise EdgeIndexOutOfRange(f"edge index {e} not in 0..{self.m - 1}")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def graph_from_edge_list(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices from vertex pairs, indexed in input order."""
    return Graph(n, pairs)


@dataclass(frozen=True)
class EdgeNeighborhood:
    """Open neighborhood of one edge: every other edge sharing an endpoint."""

    center: int
    neighbors: frozenset[int]

    @property
    def degree(self) -> int:
        """Edge degree of the center: the number of its neighbors."""
        return len(self.neighbors)


def edge_neighborhood(g: Graph, e: int) -> EdgeNeighborhood:
    """Neighborhood of edge ``e`` in ``g``."""
    mask = g.edge_neighbor_mask(e)
    return EdgeNeighborhood(e, frozenset(_mask_to_indices(mask)))


def is_full_edge(g: Graph, e: int) -> bool:
    """True iff edge ``e`` is adjacent to every other edge (edge degree m-1)."""
    return g.edge_neighbor_mask(e).bit_count() == g.m - 1


def line_graph(g: Graph) -> Graph:
    """Line graph: one vertex per edge of ``g``, adjacent iff the edges share an endpoint."""
    edges = [
        (i, j)
        for i in range(g.m)
        for j in _mask_to_indices(g.edge_neighbor_mask(i))
        if i < j
    ]
    return Graph(g.m, edges)


@dataclass(frozen=True)
class GraphMetrics:
    """Basic structural facts about one graph.

    ``diameter`` is ``None`` for disconnected graphs (undefined, not an
    error).  ``longest_path_length`` counts edges and is computed by
    exhaustive DFS, so it is only meant for small graphs (n <= 16).
    """

    min_degree: int
    max_degree: int
    connected: bool
    tree: bool
    unicyclic: bool
    diameter: int | None
    longest_path_length: int


def graph_metrics(g: Graph) -> GraphMetrics:
    """Degrees, connectivity class, diameter and longest simple path of ``g``."""
    n = g.n
    degrees = [g.degree(v) for v in range(n)]
    min_deg = min(degrees) if degrees else 0
    max_deg = max(degrees) if degrees else 0
    connected = _is_connected(g)
    tree = connected and g.m == n - 1
    unicyclic = connected and g.m == n and n >= 3
    diameter = _diameter(g) if connected and n > 0 else None
    return GraphMetrics(
        min_degree=min_deg,
        max_degree=max_deg,
        connected=connected,
        tree=tree,
        unicyclic=unicyclic,
        diameter=diameter,
        longest_path_length=longest_path_length(g),
    )


def longest_path_length(g: Graph) -> int:
    """Maximum edge count over all simple paths (exhaustive DFS; exponential)."""
    best = 0
    adj = g._adj

    def dfs(v: int, visited: int, length: int) -> None:
        nonlocal best
        if length > best:
            best = length
        for u in adj[v]:
            bit = 1 << u
            if not visited & bit:
                dfs(u, visited | bit, length + 1)

    for start in range(g.n):
        dfs(start, 1 << start, 0)
    return best


def _is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in g.neighbors(v):
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return len(seen) == g.n


def _bfs_distances(g: Graph, start: int) -> list[int]:
    dist = [-1] * g.n
    dist[start] = 0
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for u in g.neighbors(v):
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def _diameter(g: Graph) -> int:
    if g.n == 0:
        return 0
    return max(max(_bfs_distances(g, v)) for v in range(g.n))


def _mask_to_indices(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


# --- isomorphism ---------------------------------------------------------


def are_isomorphic(g1: Graph, g2: Graph, *, max_vertices: int = DEFAULT_ISO_VERTEX_CAP) -> bool:
    """Exact isomorphism test by degree refinement plus backtracking.

    Intended for small graphs; raises :class:`SizeLimitExceeded` when either
    graph has more than ``max_vertices`` vertices.
    """
    if max(g1.n, g2.n) > max_vertices:
        raise SizeLimitExceeded(
            f"isomorphism test limited to {max_vertices} vertices, "
            f"got {g1.n} and {g2.n}"
        )
    if g1.n != g2.n or g1.m != g2.m:
        return False
    n = g1.n
    if n == 0:
        return True

    colors = _joint_refinement(g1, g2)
    if colors is None:
        return False
    c1, c2 = colors

    # Map most-constrained vertices first: small color classes, high degree.
    class_size = {c: c1.count(c) for c in set(c1)}
    order = sorted(range(n), key=lambda v: (class_size[c1[v]], -g1.degree(v), v))
    candidates = {v: [w for w in range(n) if c2[w] == c1[v]] for v in order}

    mapping = [-1] * n
    used = [False] * n
    adj1 = [set(g1.neighbors(v)) for v in range(n)]
    adj2 = [set(g2.neighbors(v)) for v in range(n)]

    def backtrack(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in candidates[v]:
            if used[w]:
                continue
            ok = True
            for u in adj1[v]:
                mu = mapping[u]
                if mu >= 0 and mu not in adj2[w]:
                    ok = False
                    break
            if ok:
                # Non-adjacency must be preserved too; with equal degrees it
                # suffices that every mapped neighbor lands on a neighbor.
                mapped_nbrs = sum(1 for u in adj1[v] if mapping[u] >= 0)
                placed_nbrs = sum(1 for x in adj2[w] if used[x])
                if mapped_nbrs != placed_nbrs:
                    ok = False
            if ok:
                mapping[v] = w
                used[w] = True
                if backtrack(i + 1):
                    return True
                mapping[v] = -1
                used[w] = False
        return False

    return backtrack(0)


def _joint_refinement(g1: Graph, g2: Graph) -> tuple[list[int], list[int]] | None:
    """Iterate neighbor-color refinement on both graphs with a shared palette.

    Returns per-vertex color lists, or ``None`` when the color multisets
    diverge (the graphs are certainly non-isomorphic).
    """
    n = g1.n
    c1 = [g1.degree(v) for v in range(n)]
    c2 = [g2.degree(v) for v in range(n)]
    for _ in range(n):
        if sorted(c1) != sorted(c2):
            return None
        palette: dict[tuple, int] = {}

        def recolor(g: Graph, c: list[int]) -> list[int]:
            out = []
            for v in range(g.n):
                sig = (c[v], tuple(sorted(c[u] for u in g.neighbors(v))))
                out.append(palette.setdefault(sig, len(palette)))
            return out

        n1, n2 = recolor(g1, c1), recolor(g2, c2)
        if n1 == c1 and n2 == c2:
            break
        c1, c2 = n1, n2
    if sorted(c1) != sorted(c2):
        return None
    return c1, c2


# --- edge-list text format ------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: ``"n m"`` header, then ``m`` ``"u v"`` lines."""
    rows = []
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        rows.append(stripped)
    if not rows:
        raise ValueError("empty edge-list input")
    header = rows[0].split()
    if len(header) != 2:
        raise ValueError(f"expected header 'n m', got {rows[0]!r}")
    n, m = int(header[0]), int(header[1])
    if len(rows) - 1 != m:
        raise ValueError(f"header declares {m} edges but {len(rows) - 1} lines follow")
    pairs = []
    for row in rows[1:]:
        parts = row.split()
        if len(parts) != 2:
            raise ValueError(f"expected edge line 'u v', got {row!r}")
        pairs.append((int(parts[0]), int(parts[1])))
    return Graph(n, pairs)


def format_edge_list(g: Graph) -> str:
    """Serialize ``g`` in the edge-list text format (inverse of :func:`parse_edge_list`)."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
