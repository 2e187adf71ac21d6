"""Exact odd-book detection, maximality checking, and saturation.

A copy of the (s, k) odd book decomposes as a hub edge plus s internally
disjoint hub-to-hub paths of length 2k, so detection anchored at a host
edge reduces to a disjoint-paths search.  Probing a non-edge xy for
maximality is anchored at each of the three pattern edge orbits in turn:
xy as the hub edge, xy as a hub-to-page edge, and xy as an interior page
edge.  All searches are exhaustive and deterministic (neighbors visited in
ascending-degree order, ties by id).
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace

from .graph import Graph, bfs_distances, bits, mask_of
from .pattern import build_odd_book

DEFAULT_SIZE_LIMIT = 512

ANCHOR_HUB = "hub-hub"
ANCHOR_HUB_PAGE = "hub-page"
ANCHOR_INTERIOR = "page-interior"


class NotBookFreeError(ValueError):
    """Input graph already contains the pattern; carries one witness."""

    def __init__(self, witness: "Witness"):
        super().__init__(
            f"graph contains an ({witness.s}, {witness.k}) odd book "
            f"with hub edge {witness.hub_edge}"
        )
        self.witness = witness


class NotMaximalError(ValueError):
    """A probe pair produced no witness where the caller required one."""

    def __init__(self, probe: tuple[int, int]):
        super().__init__(f"adding non-edge {probe} creates no odd-book copy")
        self.probe = probe


@dataclass(frozen=True)
class Witness:
    """Injective embedding of the (s, k) odd book into a host graph.

    mapping[i] is the host vertex for pattern vertex i in build_odd_book
    numbering (hubs 0 and 1, then page interiors).  When the witness was
    found while probing a non-edge, `probe` records that pair and `anchor`
    names the pattern edge orbit the pair occupies.
    """

    s: int
    k: int
    mapping: tuple[int, ...]
    anchor: str | None = None
    probe: tuple[int, int] | None = None

    @property
    def hub_edge(self) -> tuple[int, int]:
        return self.mapping[0], self.mapping[1]

    def page_hosts(self, i: int) -> tuple[int, ...]:
        width = 2 * self.k - 1
        return self.mapping[2 + i * width : 2 + (i + 1) * width]

    def host_neighbors(self, host: int) -> tuple[int, ...]:
        """Witness-neighbors of a host vertex that is in the image."""
        pat = _pattern_cache(self.s, self.k)
        idx = self.mapping.index(host)
        return tuple(self.mapping[j] for j in bits(pat.graph.adj[idx]))

    def host_degree(self, host: int) -> int:
        pat = _pattern_cache(self.s, self.k)
        return pat.graph.degree(self.mapping.index(host))

    def to_json(self) -> dict:
        return {
            "pattern": {"s": self.s, "k": self.k},
            "mapping": list(self.mapping),
            "hub_edge": list(self.hub_edge),
            "anchor": self.anchor,
            "probe": list(self.probe) if self.probe else None,
        }


_PATTERNS: dict[tuple[int, int], object] = {}


def _pattern_cache(s: int, k: int):
    key = (s, k)
    if key not in _PATTERNS:
        _PATTERNS[key] = build_odd_book(s, k)
    return _PATTERNS[key]


def validate_witness(g: Graph, w: Witness) -> bool:
    """Re-check a witness against the host: injectivity plus every pattern
    edge present (the recorded probe pair counts as present)."""
    if len(set(w.mapping)) != len(w.mapping):
        return False
    if any(not 0 <= v < g.n for v in w.mapping):
        return False
    pat = _pattern_cache(w.s, w.k)
    probe = frozenset(w.probe) if w.probe else None
    for pu, pv in pat.graph.edges():
        hu, hv = w.mapping[pu], w.mapping[pv]
        if g.has_edge(hu, hv):
            continue
        if probe and frozenset((hu, hv)) == probe:
            continue
        return False
    return True


# ---------------------------------------------------------------------------
# path machinery


def _neighbor_orders(g: Graph) -> list[tuple[int, ...]]:
    deg = [row.bit_count() for row in g.adj]
    return [
        tuple(sorted(bits(row), key=lambda w: (deg[w], w))) for row in g.adj
    ]


def _iter_paths(adj, orders, start, goal, length, banned):
    """Yield interior tuples of start-goal paths with exactly `length` edges.

    Interiors avoid `banned`; start and goal are excluded automatically.
    Exhaustive; neighbor order gives determinism.
    """
    if length < 1:
        return
    if length == 1:
        if adj[start] >> goal & 1:
            yield ()
        return
    goal_adj = adj[goal]
    interior: list[int] = []

    def extend(v, rem, used):
        if rem == 2:
            cand = adj[v] & goal_adj & ~used
            if not cand:
                return
            for w in orders[v]:
                if cand >> w & 1:
                    interior.append(w)
                    yield tuple(interior)
                    interior.pop()
            return
        cand = adj[v] & ~used
        if not cand:
            return
        for w in orders[v]:
            if not cand >> w & 1:
                continue
            used_w = used | 1 << w
            if rem == 3 and not adj[w] & goal_adj & ~used_w:
                continue
            interior.append(w)
            yield from extend(w, rem - 1, used_w)
            interior.pop()

    yield from extend(start, length, banned | 1 << start | 1 << goal)


def _find_pages(adj, orders, h1, h2, count, length, banned):
    """`count` internally disjoint h1-h2 paths of exact `length` edges with
    interiors avoiding `banned`; list of interior tuples, or None."""
    if count == 0:
        return []
    for interior in _iter_paths(adj, orders, h1, h2, length, banned):
        rest = _find_pages(
            adj, orders, h1, h2, count - 1, length, banned | mask_of(interior)
        )
        if rest is not None:
            return [interior] + rest
    return None


def _witness(s, k, hub1, hub2, pages, anchor, probe) -> Witness:
    mapping = [hub1, hub2]
    for page in pages:
        mapping.extend(page)
    return Witness(s=s, k=k, mapping=tuple(mapping), anchor=anchor, probe=probe)


# ---------------------------------------------------------------------------
# anchored searches


def find_book_at_edge(
    g: Graph, x: int, y: int, s: int, k: int, _orders=None
) -> Witness | None:
    """Copy with hub edge exactly (x, y), probing G+xy; exhaustive.

    The pair may or may not be an edge of g: the s pages never traverse it.
    """
    if x == y:
        raise ValueError("probe pair must be two distinct vertices")
    orders = _orders if _orders is not None else _neighbor_orders(g)
    adj = g.adj
    if adj[x].bit_count() < s or adj[y].bit_count() < s:
        return None
    pages = _find_pages(adj, orders, x, y, s, 2 * k, 0)
    if pages is None:
        return None
    return _witness(s, k, x, y, pages, ANCHOR_HUB, (x, y))


def _find_hub_page_anchored(g, orders, hub, end, s, k):
    """Copies where `hub` is a hub and `end` is the page interior adjacent to
    it, with the probe pair (hub, end) as the connecting edge."""
    adj = g.adj
    if adj[hub].bit_count() < s:
        return None
    if adj[end].bit_count() < 1:
        return None
    deg = [row.bit_count() for row in adj]
    for other in orders[hub]:
        if other == end or deg[other] < s + 1:
            continue
        for tail in _iter_paths(adj, orders, end, other, 2 * k - 1, 1 << hub):
            first_page = (end,) + tail
            rest = _find_pages(
                adj, orders, hub, other, s - 1, 2 * k, mask_of(first_page)
            )
            if rest is not None:
                return _witness(s, k, hub, other, [first_page] + rest,
                                ANCHOR_HUB_PAGE, (hub, end))
    return None


def _find_interior_anchored(g, orders, x, y, s, k):
    """Copies where (x, y) is an interior page edge, x at distance r from one
    hub and y at distance 2k-1-r from the other.  Sweeping r over 1..2k-2
    with x on the near side covers both traversal directions."""
    if k < 2:
        return None
    adj = g.adj
    deg = [row.bit_count() for row in adj]
    dist_x = bfs_distances(g, x)
    dist_y = bfs_distances(g, y)
    pair_mask = 1 << x | 1 << y
    for r in range(1, 2 * k - 1):
        tail_len = 2 * k - 1 - r
        for u in range(g.n):
            if pair_mask >> u & 1 or deg[u] < s + 1 or dist_x[u] > r:
                continue
            for v in orders[u]:
                if pair_mask >> v & 1 or deg[v] < s + 1 or dist_y[v] > tail_len:
                    continue
                for seg1 in _iter_paths(adj, orders, u, x, r, 1 << v | 1 << y):
                    seg1_mask = mask_of(seg1)
                    for seg2 in _iter_paths(
                        adj, orders, y, v, tail_len, seg1_mask | 1 << u | 1 << x
                    ):
                        page = seg1 + (x, y) + seg2
                        rest = _find_pages(
                            adj, orders, u, v, s - 1, 2 * k,
                            seg1_mask | mask_of(seg2) | pair_mask,
                        )
                        if rest is not None:
                            return _witness(s, k, u, v, [page] + rest,
                                            ANCHOR_INTERIOR, (x, y))
    return None


def find_book_using_edge(
    g: Graph, x: int, y: int, s: int, k: int, _orders=None
) -> Witness | None:
    """Copy of the odd book in G+xy that uses the pair (x, y) in any pattern
    position; None only when no such copy exists (exhaustive)."""
    orders = _orders if _orders is not None else _neighbor_orders(g)
    w = find_book_at_edge(g, x, y, s, k, _orders=orders)
    if w is not None:
        return w
    w = _find_hub_page_anchored(g, orders, x, y, s, k)
    if w is None:
        w = _find_hub_page_anchored(g, orders, y, x, s, k)
        if w is not None:
            w = replace(w, probe=(x, y))
    if w is not None:
        return w
    return _find_interior_anchored(g, orders, x, y, s, k)


# ---------------------------------------------------------------------------
# whole-graph checks


def _check_size(g: Graph, size_limit: int | None):
    if size_limit is not None and g.n > size_limit:
        raise ValueError(
            f"exhaustive search refused for n={g.n} > {size_limit}; "
            "pass size_limit=None to override"
        )


def is_book_free(
    g: Graph, s: int, k: int, size_limit: int | None = DEFAULT_SIZE_LIMIT
) -> tuple[bool, Witness | None]:
    """True iff the graph has no (s, k) odd-book subgraph; on False the
    witness is the first copy in edge-lexicographic search order."""
    _check_size(g, size_limit)
    orders = _neighbor_orders(g)
    for u, v in g.edges():
        w = find_book_at_edge(g, u, v, s, k, _orders=orders)
        if w is not None:
            return False, Witness(s=s, k=k, mapping=w.mapping, anchor=None, probe=None)
    return True, None


def _probe_chunk(args):
    g, s, k, pairs = args
    orders = _neighbor_orders(g)
    return [
        (x, y)
        for x, y in pairs
        if find_book_using_edge(g, x, y, s, k, _orders=orders) is None
    ]


def is_maximal_book_free(
    g: Graph,
    s: int,
    k: int,
    size_limit: int | None = DEFAULT_SIZE_LIMIT,
    workers: int = 1,
) -> tuple[bool, list[tuple[int, int]]]:
    """Every non-edge must create a copy when added; failing non-edges are
    returned in lexicographic order.  Raises NotBookFreeError if the input
    already contains the pattern."""
    _check_size(g, size_limit)
    free, witness = is_book_free(g, s, k, size_limit=size_limit)
    if not free:
        raise NotBookFreeError(witness)
    non_edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.has_edge(u, v)
    ]
    if workers > 1 and len(non_edges) > 4 * workers:
        chunks = [
            (g, s, k, non_edges[i::workers]) for i in range(workers)
        ]
        failing: list[tuple[int, int]] = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_probe_chunk, chunks):
                failing.extend(part)
        failing.sort()
    else:
        orders = _neighbor_orders(g)
        failing = [
            (x, y)
            for x, y in non_edges
            if find_book_using_edge(g, x, y, s, k, _orders=orders) is None
        ]
    return not failing, failing


def saturate(
    g: Graph, s: int, k: int, size_limit: int | None = DEFAULT_SIZE_LIMIT
) -> tuple[Graph, list[tuple[int, int]]]:
    """Maximal book-free supergraph via one lexicographic pass.

    Each pair is added iff its addition creates no copy at probe time; a
    copy created by a rejected pair persists in every later supergraph, so
    a single pass already reaches the fixpoint.
    """
    _check_size(g, size_limit)
    free, witness = is_book_free(g, s, k, size_limit=size_limit)
    if not free:
        raise NotBookFreeError(witness)
    out = g.copy()
    added: list[tuple[int, int]] = []
    orders = _neighbor_orders(out)
    for u in range(out.n):
        for v in range(u + 1, out.n):
            if out.has_edge(u, v):
                continue
            if find_book_using_edge(out, u, v, s, k, _orders=orders) is None:
                out.add_edge(u, v)
                added.append((u, v))
                orders = _neighbor_orders(out)
    return out, added
