"""Independent brute-force ground truth and small-graph corpora.

The brute-force coalition number below deliberately shares no code with
the optimized solver or the domination module: adjacency is rebuilt from
the raw vertex pairs, domination is a direct scan of the definition, and
every set partition is enumerated without pruning.  A bug in the fast
path therefore cannot hide behind a shared helper.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterator

from .errors import BudgetExceeded, TooManyEdges
from .graphs import Graph, are_isomorphic, format_edge_list

ORACLE_EDGE_CAP = 10

_CLASS_CAPS = {"all": 9, "connected": 9, "trees": 10, "unicyclic": 10}


def _edge_neighbor_sets(g: Graph) -> list[set[int]]:
    """Edge adjacency rebuilt from the raw vertex pairs (oracle's own route)."""
    m = g.m
    edges = g.edges
    neighbors: list[set[int]] = [set() for _ in range(m)]
    for i in range(m):
        ui, vi = edges[i]
        for j in range(i + 1, m):
            uj, vj = edges[j]
            if ui in (uj, vj) or vi in (uj, vj):
                neighbors[i].add(j)
                neighbors[j].add(i)
    return neighbors


def _make_dominating_check(g: Graph):
    neighbors = _edge_neighbor_sets(g)
    m = g.m
    cache: dict[frozenset[int], bool] = {}

    def dominating(members: frozenset[int]) -> bool:
        cached = cache.get(members)
        if cached is not None:
            return cached
        answer = True
        for e in range(m):
            if e not in members and not neighbors[e] & members:
                answer = False
                break
        cache[members] = answer
        return answer

    return dominating


def _blocks_satisfy_definition(blocks: list[frozenset[int]], dominating) -> bool:
    for i, block in enumerate(blocks):
        if dominating(block):
            if len(block) != 1:
                return False
            continue
        for j, other in enumerate(blocks):
            if j != i and not dominating(other) and dominating(block | other):
                break
        else:
            return False
    return True


def accepts_partition(g: Graph, blocks) -> bool:
    """Definition-level validity of an edge partition, independent of the
    solver's verifier (used for double-entry bookkeeping in tests)."""
    normalized = [frozenset(b) for b in blocks]
    return _blocks_satisfy_definition(normalized, _make_dominating_check(g))


def brute_force_ec(g: Graph) -> int:
    """Maximum order over all set partitions of E that satisfy the block
    conditions, checked straight from the definitions."""
    m = g.m
    if not 1 <= m <= ORACLE_EDGE_CAP:
        raise TooManyEdges(f"oracle accepts 1 <= m <= {ORACLE_EDGE_CAP}, got m={m}")
    dominating = _make_dominating_check(g)

    best = 0
    for labels in _restricted_growth_strings(m):
        k = max(labels) + 1
        if k <= best:
            continue
        blocks: list[set[int]] = [set() for _ in range(k)]
        for e, b in enumerate(labels):
            blocks[b].add(e)
        if _blocks_satisfy_definition([frozenset(b) for b in blocks], dominating):
            best = k
    return best


def _restricted_growth_strings(m: int) -> Iterator[list[int]]:
    """All set partitions of range(m) as canonical labelings, in lex order.

    Yields the internal buffer; consume each value before advancing.
    """
    labels = [0] * m

    def rec(i: int, peak: int) -> Iterator[list[int]]:
        if i == m:
            yield labels
            return
        for b in range(peak + 1):
            labels[i] = b
            yield from rec(i + 1, max(peak, b + 1))

    if m:
        yield from rec(0, 0)


# --- corpus enumeration ------------------------------------------------------


@dataclass(frozen=True)
class CorpusSpec:
    """Which isomorphism-class corpora to enumerate, and up to what order."""

    max_vertices: int
    classes: tuple[str, ...] = ("connected",)

    def __post_init__(self) -> None:
        for cls in self.classes:
            cap = _CLASS_CAPS.get(cls)
            if cap is None:
                raise BudgetExceeded(f"unknown corpus class {cls!r}")
            if self.max_vertices > cap:
                raise BudgetExceeded(
                    f"class {cls!r} is capped at {cap} vertices, got {self.max_vertices}"
                )


def enumerate_corpus(spec: CorpusSpec) -> Iterator[Graph]:
    """All graphs of the requested classes up to ``max_vertices``, one
    representative per isomorphism class, in a deterministic order."""
    for cls in spec.classes:
        start = {"all": 1, "connected": 1, "trees": 1, "unicyclic": 3}[cls]
        for n in range(start, spec.max_vertices + 1):
            yield from graphs_of_order(cls, n)


def export_corpus(spec: CorpusSpec, directory: str | Path) -> list[Path]:
    """Write one edge-list file per corpus graph, named <class>_<n>_<index>.el."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for cls in spec.classes:
        start = {"all": 1, "connected": 1, "trees": 1, "unicyclic": 3}[cls]
        for n in range(start, spec.max_vertices + 1):
            for index, g in enumerate(graphs_of_order(cls, n)):
                path = directory / f"{cls}_{n}_{index}.el"
                path.write_text(format_edge_list(g))
                written.append(path)
    return written


@lru_cache(maxsize=None)
def graphs_of_order(cls: str, n: int) -> tuple[Graph, ...]:
    """Isomorphism-class representatives of the given class and order.

    Built by augmenting the order n-1 corpus (new vertex joined to each
    admissible neighbor subset, or a new leaf, plus the bare cycle for the
    unicyclic class) and rejecting isomorphs of already-kept graphs.
    """
    cap = _CLASS_CAPS[cls]
    if n > cap:
        raise BudgetExceeded(f"class {cls!r} is capped at {cap} vertices")
    if cls == "all":
        if n == 1:
            return (Graph(1),)
        return _dedup(_extend_with_vertex(graphs_of_order(cls, n - 1), n, empty_ok=True))
    if cls == "connected":
        if n == 1:
            return (Graph(1),)
        return _dedup(_extend_with_vertex(graphs_of_order(cls, n - 1), n, empty_ok=False))
    if cls == "trees":
        if n == 1:
            return (Graph(1),)
        return _dedup(_extend_with_leaf(graphs_of_order(cls, n - 1), n))
    # unicyclic
    if n < 3:
        return ()
    cycle = Graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])
    candidates = [cycle]
    if n > 3:
        candidates.extend(_extend_with_leaf(graphs_of_order(cls, n - 1), n))
    return _dedup(candidates)


def _extend_with_vertex(bases: tuple[Graph, ...], n: int, empty_ok: bool) -> list[Graph]:
    out = []
    for g in bases:
        for mask in range(0 if empty_ok else 1, 1 << (n - 1)):
            extra = [(v, n - 1) for v in range(n - 1) if mask >> v & 1]
            out.append(Graph(n, list(g.edges) + extra))
    return out


def _extend_with_leaf(bases: tuple[Graph, ...], n: int) -> list[Graph]:
    out = []
    for g in bases:
        for v in range(n - 1):
            out.append(Graph(n, list(g.edges) + [(v, n - 1)]))
    return out


def _invariant_key(g: Graph) -> tuple:
    degs = sorted(g.degree(v) for v in range(g.n))
    nbr_degs = tuple(
        sorted(tuple(sorted(g.degree(u) for u in g.neighbors(v))) for v in range(g.n))
    )
    return (g.m, tuple(degs), nbr_degs)


def _dedup(candidates: list[Graph]) -> tuple[Graph, ...]:
    buckets: dict[tuple, list[Graph]] = {}
    kept: list[Graph] = []
    for g in candidates:
        key = _invariant_key(g)
        bucket = buckets.setdefault(key, [])
        if not any(are_isomorphic(g, other) for other in bucket):
            bucket.append(g)
            kept.append(g)
    return tuple(kept)
