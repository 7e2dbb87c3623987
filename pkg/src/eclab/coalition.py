"""Edge coalitions: verification with certificates, the exact solver, bounds.

Vocabulary used throughout:

* Two disjoint nonempty edge sets form an *edge coalition* when neither
  dominates on its own but their union does.
* An *ec-partition* splits the edge set into blocks so that every block is
  either a one-edge dominating set (necessarily a full edge) or forms a
  coalition with some other non-dominating block.
* ``EC(G)`` is the largest number of blocks over all ec-partitions; the
  singleton partition puts every edge in its own block.

Verification is pure set/bitmask arithmetic.  The solver searches for a
feasible partition order k = m, m-1, ... by enumerating restricted-growth
strings (canonical block labelings) with pruning, so the first feasible k
is exact and the returned witness is the lexicographically least canonical
labeling of that order.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Literal, Sequence, Union

from .domination import check_edge_set, edge_domination_number
from .errors import (
    BlockIndexOutOfRange,
    BudgetExceeded,
    EmptyGraph,
    EmptySet,
    InvalidPartition,
    NotAnEcPartition,
)
from .graphs import Graph

DEFAULT_EXACT_EDGE_CAP = 16

NO_PARTNER = "no_partner"
NON_SINGLETON_DOMINATING = "non_singleton_dominating"

Blocks = tuple[frozenset[int], ...]


# --- certificates ---------------------------------------------------------


@dataclass(frozen=True)
class FullEdgeSingleton:
    """Justification: the block is a single full edge, hence dominating alone."""


@dataclass(frozen=True)
class Partner:
    """Justification: the block forms an edge coalition with block ``with_block``."""

    with_block: int


Justification = Union[FullEdgeSingleton, Partner]


@dataclass(frozen=True)
class EcCertificate:
    """A verified ec-partition with one justification per block."""

    blocks: Blocks
    justifications: tuple[Justification, ...]

    @property
    def order(self) -> int:
        return len(self.blocks)

    def __bool__(self) -> bool:
        return True


@dataclass(frozen=True)
class EcRejection:
    """Why a partition is not an ec-partition: first offending block + reason."""

    block: int
    reason: str

    def message(self) -> str:
        if self.reason == NO_PARTNER:
            return f"block {self.block} has no partner"
        return f"block {self.block} is a dominating set with more than one edge"

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class EcResult:
    """Coalition number plus its certificate.

    ``mode`` is "exact" or "lower_bound"; for exact results ``proof`` records
    how optimality was established ("upper-bound-met" when the partition
    reaches the trivial bound m, "exhausted-search" when every larger order
    was refuted).
    """

    ec: int
    certificate: EcCertificate
    mode: Literal["exact", "lower_bound"]
    proof: str | None


# --- partitions and verification -------------------------------------------


def validate_partition(g: Graph, blocks: Iterable[Iterable[int]]) -> Blocks:
    """Normalize blocks and check they partition the edge set of ``g``."""
    if g.m == 0:
        raise InvalidPartition("a graph with no edges has no edge partitions")
    normalized = tuple(frozenset(b) for b in blocks)
    seen = 0
    for i, block in enumerate(normalized):
        if not block:
            raise InvalidPartition(f"block {i} is empty")
        for e in block:
            if not isinstance(e, int) or not 0 <= e < g.m:
                raise InvalidPartition(f"block {i} references nonexistent edge {e!r}")
            bit = 1 << e
            if seen & bit:
                raise InvalidPartition(f"edge {e} appears in more than one block")
            seen |= bit
    if seen != g.full_edge_mask:
        missing = [e for e in range(g.m) if not seen >> e & 1]
        raise InvalidPartition(f"edges {missing} are not covered by any block")
    return normalized


def singleton_partition(g: Graph) -> Blocks:
    """The partition of the edge set into one-edge blocks, in index order."""
    if g.m == 0:
        raise InvalidPartition("a graph with no edges has no edge partitions")
    return tuple(frozenset((e,)) for e in range(g.m))


def forms_edge_coalition(g: Graph, a: Iterable[int], b: Iterable[int]) -> bool:
    """True iff ``a`` and ``b`` are disjoint, individually non-dominating,
    and jointly dominating."""
    sa = check_edge_set(g, a)
    sb = check_edge_set(g, b)
    if not sa or not sb:
        raise EmptySet("coalition members must be nonempty edge sets")
    if sa & sb:
        return False
    masks = g.closed_edge_masks()
    full = g.full_edge_mask
    ca = _union_mask(masks, sa)
    cb = _union_mask(masks, sb)
    return ca != full and cb != full and (ca | cb) == full


def _union_mask(masks: Sequence[int], members: Iterable[int]) -> int:
    out = 0
    for e in members:
        out |= masks[e]
    return out


def is_ec_partition(
    g: Graph, blocks: Iterable[Iterable[int]]
) -> EcCertificate | EcRejection:
    """Verify a partition block by block.

    Returns a truthy :class:`EcCertificate` on success, or a falsy
    :class:`EcRejection` naming the first offending block.  A dominating
    singleton block is accepted exactly as a full-edge singleton; a
    dominating block with two or more edges is always rejected; any other
    block needs a non-dominating partner whose union with it dominates.
    Raises :class:`InvalidPartition` when the blocks do not partition E.
    """
    normalized = validate_partition(g, blocks)
    masks = g.closed_edge_masks()
    full = g.full_edge_mask
    covers = [_union_mask(masks, block) for block in normalized]

    justifications: list[Justification] = []
    for i, block in enumerate(normalized):
        if covers[i] == full:
            if len(block) == 1:
                justifications.append(FullEdgeSingleton())
                continue
            return EcRejection(i, NON_SINGLETON_DOMINATING)
        partner = next(
            (
                j
                for j in range(len(normalized))
                if j != i and covers[j] != full and covers[i] | covers[j] == full
            ),
            None,
        )
        if partner is None:
            return EcRejection(i, NO_PARTNER)
        justifications.append(Partner(partner))
    return EcCertificate(normalized, tuple(justifications))


def coalition_graph(g: Graph, blocks: Iterable[Iterable[int]]) -> Graph:
    """Graph on the blocks of a verified ec-partition; i ~ j iff blocks i and j
    form an edge coalition."""
    cert = is_ec_partition(g, blocks)
    if not cert:
        raise NotAnEcPartition(cert.message())
    masks = g.closed_edge_masks()
    full = g.full_edge_mask
    covers = [_union_mask(masks, block) for block in cert.blocks]
    k = len(covers)
    edges = [
        (i, j)
        for i in range(k)
        for j in range(i + 1, k)
        if covers[i] != full and covers[j] != full and covers[i] | covers[j] == full
    ]
    return Graph(k, edges)


def coalition_partner_count(g: Graph, blocks: Iterable[Iterable[int]], i: int) -> int:
    """Number of blocks forming an edge coalition with block ``i``
    (its degree in the coalition graph)."""
    cert = is_ec_partition(g, blocks)
    if not cert:
        raise NotAnEcPartition(cert.message())
    if not 0 <= i < cert.order:
        raise BlockIndexOutOfRange(f"block index {i} not in 0..{cert.order - 1}")
    masks = g.closed_edge_masks()
    full = g.full_edge_mask
    covers = [_union_mask(masks, block) for block in cert.blocks]
    if covers[i] == full:
        return 0
    return sum(
        1
        for j in range(cert.order)
        if j != i and covers[j] != full and covers[i] | covers[j] == full
    )


# --- exact solver -----------------------------------------------------------

_TIMEOUT = object()


def _search_exact_k(
    closed: Sequence[int],
    full: int,
    m: int,
    k: int,
    prefix: Sequence[int] = (),
    deadline: float | None = None,
):
    """Lexicographically least restricted-growth string of a valid order-k
    partition extending ``prefix``, or None, or the timeout sentinel.

    Pruning rules, all sound for the strict block conditions:
      * a block that holds two or more edges must stay non-dominating;
      * exactly k labels must remain reachable;
      * every block must keep a *potential* partner: the part of its
        deficiency that no remaining edge can cover must already be covered
        by some other existing block that is not itself dominating.
    """
    rem = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        rem[i] = rem[i + 1] | closed[i]

    labels = [0] * m
    covers = [0] * k
    sizes = [0] * k
    used = 0

    def assign(i: int, b: int) -> bool:
        """Apply labels[i] = b if legal; returns False when pruned."""
        nonlocal used
        new_cover = covers[b] | closed[i]
        if sizes[b] >= 1 and new_cover == full:
            return False
        labels[i] = b
        covers[b] = new_cover
        sizes[b] += 1
        if b == used:
            used += 1
        return True

    def unassign(i: int, b: int, old_cover: int) -> None:
        nonlocal used
        covers[b] = old_cover
        sizes[b] -= 1
        if sizes[b] == 0 and b == used - 1:
            used -= 1

    def partners_feasible(i: int) -> bool:
        r = rem[i]
        for b in range(used):
            need = full & ~(covers[b] | r)
            if not need:
                continue
            for c in range(used):
                if c != b and covers[c] != full and not need & ~covers[c]:
                    break
            else:
                return False
        return True

    # Replay the prefix through the same legality checks.
    for i, b in enumerate(prefix):
        if b > used or b >= k or not assign(i, b):
            return None
        if used + (m - i - 1) < k or not partners_feasible(i + 1):
            return None

    counter = 0

    def rec(i: int) -> bool:
        nonlocal counter
        if deadline is not None:
            counter += 1
            if counter & 0xFFF == 0 and time.monotonic() > deadline:
                raise _SearchTimeout
        if i == m:
            return used == k  # partners_feasible(m) held before descending here
        if used + (m - i) < k:
            return False
        limit = min(used + 1, k)
        for b in range(limit):
            old_cover = covers[b]
            if not assign(i, b):
                continue
            if partners_feasible(i + 1) and rec(i + 1):
                return True
            unassign(i, b, old_cover)
        return False

    try:
        found = rec(len(prefix))
    except _SearchTimeout:
        return _TIMEOUT
    return list(labels) if found else None


class _SearchTimeout(Exception):
    pass


def _labels_to_blocks(labels: Sequence[int], k: int) -> Blocks:
    groups: list[list[int]] = [[] for _ in range(k)]
    for e, b in enumerate(labels):
        groups[b].append(e)
    return tuple(frozenset(group) for group in groups)


def _legal_prefixes(closed: Sequence[int], full: int, m: int, k: int, depth: int) -> list[tuple[int, ...]]:
    """All restricted-growth prefixes of the given depth that survive the
    assignment-time checks, in lexicographic order."""
    out: list[tuple[int, ...]] = []

    def grow(prefix: tuple[int, ...], covers: tuple[int, ...], sizes: tuple[int, ...], used: int) -> None:
        i = len(prefix)
        if i == depth:
            out.append(prefix)
            return
        if used + (m - i) < k:
            return
        for b in range(min(used + 1, k)):
            new_cover = covers[b] | closed[i]
            if sizes[b] >= 1 and new_cover == full:
                continue
            grow(
                prefix + (b,),
                covers[:b] + (new_cover,) + covers[b + 1 :],
                sizes[:b] + (sizes[b] + 1,) + sizes[b + 1 :],
                used + (b == used),
            )

    grow((), (0,) * k, (0,) * k, 0)
    return out


def _search_worker(args):
    closed, full, m, k, prefix = args
    return _search_exact_k(closed, full, m, k, prefix)


def _find_partition_of_order(
    g: Graph, k: int, jobs: int, deadline: float | None = None
):
    """Order-k search entry point; splits the tree across processes if asked.

    The parallel route consumes per-prefix results in lexicographic order,
    so the witness matches the single-threaded one whenever it completes.
    """
    closed = g.closed_edge_masks()
    full = g.full_edge_mask
    m = g.m
    if jobs <= 1 or m < 6 or deadline is not None:
        return _search_exact_k(closed, full, m, k, deadline=deadline)

    depth = 2
    prefixes = _legal_prefixes(closed, full, m, k, depth)
    while len(prefixes) < 3 * jobs and depth < m - 1:
        depth += 1
        prefixes = _legal_prefixes(closed, full, m, k, depth)
    if len(prefixes) <= 1:
        return _search_exact_k(closed, full, m, k, deadline=deadline)

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [
            pool.submit(_search_worker, (closed, full, m, k, prefix))
            for prefix in prefixes
        ]
        result = None
        for future in futures:
            labels = future.result()
            if labels is not None:
                result = labels
                break
        if result is not None:
            for future in futures:
                future.cancel()
        return result


def edge_coalition_number(
    g: Graph,
    *,
    max_edges: int = DEFAULT_EXACT_EDGE_CAP,
    jobs: int = 1,
) -> EcResult:
    """Exact edge coalition number with a verified certificate.

    Searches partition orders k = m, m-1, ... and returns at the first
    feasible order, so the result is the maximum.  Raises
    :class:`EmptyGraph` when m = 0 and :class:`BudgetExceeded` when m
    exceeds ``max_edges`` (enumeration grows like the Bell numbers).
    """
    m = g.m
    if m == 0:
        raise EmptyGraph("EC is undefined for graphs without edges")
    if m > max_edges:
        raise BudgetExceeded(
            f"graph has m={m} edges, above the exact-mode cap {max_edges}; "
            "raise the cap or use edge_coalition_lower_bound"
        )
    for k in range(m, 0, -1):
        labels = _find_partition_of_order(g, k, jobs)
        if labels is not None:
            blocks = _labels_to_blocks(labels, k)
            cert = is_ec_partition(g, blocks)
            assert cert, "solver produced a partition its own verifier rejects"
            proof = "upper-bound-met" if k == m else "exhausted-search"
            return EcResult(ec=k, certificate=cert, mode="exact", proof=proof)
    raise NotAnEcPartition(
        "no ec-partition found; this contradicts the existence guarantee"
    )


def edge_coalition_lower_bound(
    g: Graph,
    *,
    time_budget: float = 30.0,
    jobs: int = 1,
) -> EcResult:
    """Best certified lower bound on EC(g) found within a time budget.

    Runs the same descending-order search but gives each order a slice of
    the budget; orders that neither succeed nor get refuted in time are
    skipped downward.  The first order that yields a partition gives a
    certificate; the value is exact only if no higher order was skipped,
    and the result is always labeled "lower_bound".
    """
    m = g.m
    if m == 0:
        raise EmptyGraph("EC is undefined for graphs without edges")
    overall_deadline = time.monotonic() + time_budget
    for k in range(m, 0, -1):
        remaining = overall_deadline - time.monotonic()
        if remaining <= 0:
            break
        slice_deadline = time.monotonic() + max(remaining / max(k, 1), 0.05)
        outcome = _find_partition_of_order(g, k, jobs, deadline=min(slice_deadline, overall_deadline))
        if outcome is _TIMEOUT or outcome is None:
            continue
        blocks = _labels_to_blocks(outcome, k)
        cert = is_ec_partition(g, blocks)
        assert cert
        return EcResult(ec=k, certificate=cert, mode="lower_bound", proof=None)
    raise BudgetExceeded(
        f"no ec-partition found within {time_budget:.1f}s for m={m}"
    )


# --- derived predicates -----------------------------------------------------


def is_singleton_ec_graph(g: Graph) -> bool:
    """True iff the singleton partition is an ec-partition (equivalently EC = m)."""
    if g.m == 0:
        raise EmptyGraph("EC is undefined for graphs without edges")
    return bool(is_ec_partition(g, singleton_partition(g)))


def is_self_edge_coalition_graph(g: Graph) -> bool:
    """True iff g is isomorphic to the coalition graph of its own singleton
    partition (which must itself be an ec-partition)."""
    from .graphs import are_isomorphic

    if g.m == 0:
        raise EmptyGraph("EC is undefined for graphs without edges")
    cert = is_ec_partition(g, singleton_partition(g))
    if not cert:
        return False
    if g.m != g.n:
        return False  # the coalition graph has m vertices, so iso is impossible
    return are_isomorphic(g, coalition_graph(g, cert.blocks))


# --- bound report -----------------------------------------------------------


@dataclass(frozen=True)
class BoundEntry:
    """One bound on EC(g): value, direction, origin tag, and applicability."""

    source: str
    kind: Literal["lower", "upper"]
    value: int
    applicable: bool
    reason: str


@dataclass(frozen=True)
class BoundReport:
    entries: tuple[BoundEntry, ...]

    def applicable_lower(self) -> int:
        values = [e.value for e in self.entries if e.applicable and e.kind == "lower"]
        return max(values) if values else 1

    def applicable_upper(self) -> int:
        values = [e.value for e in self.entries if e.applicable and e.kind == "upper"]
        return min(values)


def ec_bounds(g: Graph) -> BoundReport:
    """Evaluate every known EC bound on ``g``, flagging inapplicable ones.

    Inapplicable bounds are reported with a reason rather than dropped.
    """
    if g.m == 0:
        raise EmptyGraph("EC is undefined for graphs without edges")
    m = g.m
    n = g.n
    degrees = [g.degree(v) for v in range(n)]
    delta = min(degrees)
    has_full_edge = any(
        g.edge_neighbor_mask(e).bit_count() == m - 1 for e in range(m)
    )
    has_isolated_edge = any(g.edge_neighbor_mask(e) == 0 for e in range(m))
    is_complete = m == n * (n - 1) // 2 and n >= 2
    universal = sum(1 for d in degrees if d == n - 1)

    entries = [
        BoundEntry("trivial-lower", "lower", 1, True, "holds for every graph with an edge"),
        BoundEntry("size-upper", "upper", m, True, "a partition of m edges has at most m blocks"),
    ]

    gamma = edge_domination_number(g).gamma_prime
    if has_full_edge:
        reason = "graph has a full edge"
        applicable = False
    elif has_isolated_edge:
        reason = "graph has an isolated edge"
        applicable = False
    else:
        reason = "no isolated edges and no full edges"
        applicable = True
    entries.append(
        BoundEntry("twice-gamma-minus-one", "lower", 2 * gamma - 1, applicable, reason)
    )

    if is_complete:
        entries.append(
            BoundEntry(
                "universal-vertex-count",
                "lower",
                universal * n - universal * (universal + 1) // 2,
                False,
                "stated only for incomplete graphs",
            )
        )
    else:
        entries.append(
            BoundEntry(
                "universal-vertex-count",
                "lower",
                universal * n - universal * (universal + 1) // 2,
                True,
                f"{universal} vertices of degree n-1",
            )
        )

    if has_full_edge:
        entries.append(
            BoundEntry("one-plus-min-degree", "lower", 1 + delta, False, "graph has a full edge")
        )
    elif delta < 1:
        entries.append(
            BoundEntry("one-plus-min-degree", "lower", 1 + delta, False, "graph has an isolated vertex")
        )
    else:
        entries.append(
            BoundEntry(
                "one-plus-min-degree", "lower", 1 + delta, True, "no full edge and minimum degree >= 1"
            )
        )

    if is_complete and n % 2 == 0 and n >= 4:
        entries.append(
            BoundEntry(
                "complete-even-order",
                "lower",
                2 * (n - 1),
                True,
                "complete graph of even order >= 4",
            )
        )
    else:
        entries.append(
            BoundEntry(
                "complete-even-order",
                "lower",
                2 * (n - 1),
                False,
                "needs a complete graph of even order >= 4 "
                "(splitting a one-edge dominating set is impossible at n = 2)",
            )
        )

    bip = _complete_bipartite_parts(g)
    if bip is not None and bip[0] >= 2:
        r, s = bip
        entries.append(
            BoundEntry(
                "bipartite-twice-larger-side",
                "lower",
                2 * s,
                True,
                f"complete bipartite with parts {r} <= {s}",
            )
        )
    else:
        entries.append(
            BoundEntry(
                "bipartite-twice-larger-side",
                "lower",
                0,
                False,
                "needs a complete bipartite graph with both parts of size >= 2",
            )
        )

    return BoundReport(tuple(entries))


def _complete_bipartite_parts(g: Graph) -> tuple[int, int] | None:
    """(r, s) with r <= s when g is a complete bipartite graph, else None."""
    from .graphs import _is_connected

    if g.n < 2 or g.m == 0 or not _is_connected(g):
        return None
    color = [-1] * g.n
    color[0] = 0
    stack = [0]
    while stack:
        v = stack.pop()
        for u in g.neighbors(v):
            if color[u] < 0:
                color[u] = 1 - color[v]
                stack.append(u)
            elif color[u] == color[v]:
                return None
    r = color.count(0)
    s = color.count(1)
    if g.m != r * s:
        return None
    return (min(r, s), max(r, s))


# --- JSON schema ------------------------------------------------------------


def certificate_json(result: EcResult) -> dict:
    """Certificate as a JSON-ready dict with the documented fixed field order:
    ec, blocks, justification, mode."""
    justification = []
    for j in result.certificate.justifications:
        if isinstance(j, FullEdgeSingleton):
            justification.append({"type": "full_edge"})
        else:
            justification.append({"type": "partner", "with": j.with_block})
    return {
        "ec": result.ec,
        "blocks": [sorted(block) for block in result.certificate.blocks],
        "justification": justification,
        "mode": result.mode,
    }
