"""Named graph families, closed-form coalition numbers, and recognizers.

Family generators use a canonical layout so edge indices are reproducible:
vertices are numbered as documented per family and the edge list is sorted
lexicographically by endpoint pair.  Family specs are also expressible as
CLI strings: ``path:6``, ``cycle:7``, ``star:5``, ``dstar:3,2``,
``complete:4``, ``kbip:2,4``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidSpec, NotATree, NotUnicyclic
from .graphs import Graph, are_isomorphic, graph_metrics

_KINDS = ("path", "cycle", "star", "double_star", "complete", "complete_bipartite")
_CLI_ALIASES = {
    "path": "path",
    "cycle": "cycle",
    "star": "star",
    "dstar": "double_star",
    "double_star": "double_star",
    "complete": "complete",
    "kbip": "complete_bipartite",
    "complete_bipartite": "complete_bipartite",
}
_CLI_NAMES = {
    "path": "path",
    "cycle": "cycle",
    "star": "star",
    "double_star": "dstar",
    "complete": "complete",
    "complete_bipartite": "kbip",
}


@dataclass(frozen=True)
class FamilySpec:
    """A parameterized family member, e.g. ``FamilySpec("path", (6,))``."""

    kind: str
    params: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise InvalidSpec(f"unknown family kind {self.kind!r}")
        p = self.params
        ok = {
            "path": len(p) == 1 and p[0] >= 2,
            "cycle": len(p) == 1 and p[0] >= 3,
            "star": len(p) == 1 and p[0] >= 1,
            "double_star": len(p) == 2 and p[0] >= p[1] >= 0,
            "complete": len(p) == 1 and p[0] >= 2,
            "complete_bipartite": len(p) == 2 and p[0] >= 1 and p[1] >= 1,
        }[self.kind]
        if not ok:
            raise InvalidSpec(f"invalid parameters {p} for family {self.kind!r}")

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse a CLI spec string such as ``"dstar:3,2"``."""
        name, sep, rest = text.partition(":")
        if not sep or name.lower() not in _CLI_ALIASES:
            raise InvalidSpec(f"cannot parse family spec {text!r}")
        try:
            params = tuple(int(part) for part in rest.split(","))
        except ValueError as exc:
            raise InvalidSpec(f"cannot parse family spec {text!r}") from exc
        return cls(_CLI_ALIASES[name.lower()], params)

    def to_string(self) -> str:
        return f"{_CLI_NAMES[self.kind]}:" + ",".join(str(p) for p in self.params)


def generate(spec: FamilySpec) -> Graph:
    """Build the canonical member of a family.

    Vertex layout: paths/cycles sequential; star center 0; double-star
    centers 0 (p leaves) and 1 (q leaves), joined; complete-bipartite parts
    ``0..r-1`` and ``r..r+s-1``.  Edges are indexed in lexicographic order.
    """
    kind, p = spec.kind, spec.params
    if kind == "path":
        n = p[0]
        pairs = [(i, i + 1) for i in range(n - 1)]
    elif kind == "cycle":
        n = p[0]
        pairs = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    elif kind == "star":
        n = p[0] + 1
        pairs = [(0, i) for i in range(1, n)]
    elif kind == "double_star":
        leaves_a, leaves_b = p
        n = leaves_a + leaves_b + 2
        pairs = [(0, 1)]
        pairs += [(0, 2 + i) for i in range(leaves_a)]
        pairs += [(1, 2 + leaves_a + i) for i in range(leaves_b)]
    elif kind == "complete":
        n = p[0]
        pairs = list(combinations(range(n), 2))
    else:  # complete_bipartite
        r, s = p
        n = r + s
        pairs = [(a, b) for a in range(r) for b in range(r, r + s)]
    return Graph(n, sorted(tuple(sorted(pair)) for pair in pairs))


def path_graph(n: int) -> Graph:
    return generate(FamilySpec("path", (n,)))


def cycle_graph(n: int) -> Graph:
    return generate(FamilySpec("cycle", (n,)))


def star_graph(leaves: int) -> Graph:
    return generate(FamilySpec("star", (leaves,)))


def double_star(p: int, q: int) -> Graph:
    return generate(FamilySpec("double_star", (p, q)))


def complete_graph(n: int) -> Graph:
    return generate(FamilySpec("complete", (n,)))


def complete_bipartite(r: int, s: int) -> Graph:
    return generate(FamilySpec("complete_bipartite", (r, s)))


# Small named graphs used by the characterization checks.


def two_disjoint_edges() -> Graph:
    """2K2 (equivalently the complement of C4)."""
    return Graph(4, [(0, 1), (2, 3)])


def paw_graph() -> Graph:
    """Triangle with one pendant leaf."""
    return Graph(4, [(0, 1), (0, 2), (1, 2), (2, 3)])


def net_graph() -> Graph:
    """Triangle with one pendant leaf at each vertex."""
    return Graph(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)])


def diamond_graph() -> Graph:
    """K4 minus one edge."""
    return Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def bowtie_graph() -> Graph:
    """Two triangles sharing one vertex."""
    return Graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


#: Graphs beyond trees/unicyclic spot-checked to have coalition number m.
SINGLETON_EC_SPOT_CHECKS: dict[str, Graph] = {
    "diamond": diamond_graph(),
    "k4": complete_graph(4),
    "bowtie": bowtie_graph(),
}


def closed_form_ec(spec: FamilySpec) -> int | None:
    """Known exact coalition number for a family member, or None if no
    closed form is covered (e.g. complete graphs beyond order 5)."""
    kind, p = spec.kind, spec.params
    if kind == "path":
        n = p[0]
        if n <= 5:
            return n - 1
        if n == 6:
            return 4
        if n <= 10:
            return 5
        return 6
    if kind == "cycle":
        n = p[0]
        if n <= 6:
            return n
        if n == 7:
            return 5
        return 6
    if kind == "star":
        return p[0]
    if kind == "double_star":
        return p[0] + p[1] + 1
    if kind == "complete":
        n = p[0]
        return n * (n - 1) // 2 if n <= 5 else None
    # Complete bipartite: K_{1,s} is the star with s leaves; for r >= 2 only
    # lower bounds are known.
    r, s = p
    if r == 1:
        return s
    if s == 1:
        return r
    return None


# --- recognizers ------------------------------------------------------------


def phi_recognizer(t: Graph) -> bool:
    """Trees whose coalition number equals their size.

    True exactly for trees of diameter at most 3, and diameter-4 trees in
    which the middle vertex of every longest path has degree 2.
    """
    metrics = graph_metrics(t)
    if not metrics.tree or t.m < 1:
        raise NotATree(f"expected a tree with at least one edge, got {t!r}")
    diameter = metrics.diameter
    assert diameter is not None
    if diameter <= 3:
        return True
    if diameter != 4:
        return False
    return all(t.degree(path[2]) == 2 for path in _all_paths_of_length(t, 4))


def _all_paths_of_length(g: Graph, length: int) -> list[list[int]]:
    """All simple paths with exactly ``length`` edges (each reported once)."""
    out: list[list[int]] = []

    def extend(path: list[int], visited: set[int]) -> None:
        if len(path) == length + 1:
            if path[0] < path[-1]:  # one orientation per path
                out.append(list(path))
            return
        for u in g.neighbors(path[-1]):
            if u not in visited:
                path.append(u)
                visited.add(u)
                extend(path, visited)
                path.pop()
                visited.remove(u)

    for start in range(g.n):
        extend([start], {start})
    return out


def _cycle_vertices(g: Graph) -> list[int]:
    """Vertices on the unique cycle of a unicyclic graph (peel leaves)."""
    degree = [g.degree(v) for v in range(g.n)]
    alive = [True] * g.n
    pending = [v for v in range(g.n) if degree[v] == 1]
    while pending:
        v = pending.pop()
        alive[v] = False
        for u in g.neighbors(v):
            if alive[u]:
                degree[u] -= 1
                if degree[u] == 1:
                    pending.append(u)
    return [v for v in range(g.n) if alive[v]]


def theta_recognizer(g: Graph) -> bool:
    """Unicyclic graphs whose coalition number equals their size.

    Accepted shapes (calibrated against the exhaustive operational check on
    all unicyclic graphs up to 8 vertices):

    * bare cycles C3..C6;
    * C3 with pendant leaves at any of its vertices;
    * C3 with exactly one depth-two tail: one cycle vertex has a single
      non-cycle neighbor w, every other neighbor of w is a leaf, and nothing
      else is attached anywhere;
    * C4 with pendant leaves at one or two of its vertices;
    * C5 with pendant leaves at exactly one vertex.
    """
    metrics = graph_metrics(g)
    if not metrics.unicyclic:
        raise NotUnicyclic(f"expected a connected graph with m = n >= 3, got {g!r}")
    cycle = set(_cycle_vertices(g))
    cycle_len = len(cycle)
    outside = [v for v in range(g.n) if v not in cycle]
    if not outside:
        return 3 <= cycle_len <= 6

    leaves = [v for v in outside if g.degree(v) == 1]
    attach_points = {
        c for c in cycle if any(u not in cycle for u in g.neighbors(c))
    }

    if cycle_len == 3:
        if len(leaves) == len(outside):
            # Only pendant leaves hang off the triangle.
            return all(any(u in cycle for u in g.neighbors(v)) for v in leaves)
        # One depth-two tail: a single inner vertex w adjacent to exactly one
        # cycle vertex, all of w's other neighbors leaves, nothing else.
        inner = [v for v in outside if g.degree(v) > 1]
        if len(inner) != 1 or len(attach_points) != 1:
            return False
        w = inner[0]
        attach = next(iter(attach_points))
        if w not in g.neighbors(attach):
            return False
        if set(g.neighbors(attach)) - cycle != {w}:
            return False
        return all(u == attach or g.degree(u) == 1 for u in g.neighbors(w))

    if cycle_len == 4:
        if len(leaves) != len(outside):
            return False
        if not all(any(u in cycle for u in g.neighbors(v)) for v in leaves):
            return False
        return len(attach_points) in (1, 2)

    if cycle_len == 5:
        if len(leaves) != len(outside):
            return False
        if not all(any(u in cycle for u in g.neighbors(v)) for v in leaves):
            return False
        return len(attach_points) == 1

    return False


class SmallEcClass(enum.Enum):
    """Classification of graphs by very small coalition numbers."""

    EC1 = 1
    EC2 = 2
    EC3 = 3
    OTHER = 0


def small_ec_classifier(g: Graph) -> SmallEcClass:
    """Isomorphism-based classifier for EC in {1, 2, 3}.

    EC1: K2.  EC2: P3 or 2K2.  EC3 (connected graphs): C3, P4 or K_{1,3}.
    Everything else maps to OTHER.  Deliberately independent of the solver
    so the two can cross-check each other.
    """
    if g.m < 1:
        return SmallEcClass.OTHER
    if are_isomorphic(g, complete_graph(2)):
        return SmallEcClass.EC1
    if are_isomorphic(g, path_graph(3)) or are_isomorphic(g, two_disjoint_edges()):
        return SmallEcClass.EC2
    for target in (cycle_graph(3), path_graph(4), star_graph(3)):
        if are_isomorphic(g, target):
            return SmallEcClass.EC3
    return SmallEcClass.OTHER


# --- built-in partitions of K_{2,4} -----------------------------------------

# Edge indices of complete_bipartite(2, 4) in generation order: edges 0..3
# join vertex 0 to 2,3,4,5 and edges 4..7 join vertex 1 to 2,3,4,5.
K24_PARTITION_PRESETS: dict[str, tuple[frozenset[int], ...]] = {
    "pi1": tuple(frozenset((e,)) for e in range(8)),
    "pi2": (frozenset({0, 1}),) + tuple(frozenset((e,)) for e in range(2, 8)),
    "pi3": (frozenset({0, 1, 2}),) + tuple(frozenset((e,)) for e in range(3, 8)),
    "pi4": (
        frozenset({0, 1}),
        frozenset({2}),
        frozenset({3}),
        frozenset({4, 5}),
        frozenset({6}),
        frozenset({7}),
    ),
    "pi5": (
        frozenset({0, 1}),
        frozenset({2, 3}),
        frozenset({4, 5}),
        frozenset({6}),
        frozenset({7}),
    ),
    "pi6": (
        frozenset({0, 1}),
        frozenset({2, 3}),
        frozenset({4, 5}),
        frozenset({6, 7}),
    ),
}
