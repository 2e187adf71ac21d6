"""The odd-book pattern family: s odd cycles C_{2k+1} glued along one edge.

An odd book with parameters (s, k) has two hub vertices joined by an edge,
plus s internally disjoint hub-to-hub paths of length 2k.  It is
3-chromatic and removing the hub edge leaves a bipartite graph, which is
exactly the edge-color-critical property the rest of the toolkit leans on.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, bits, two_coloring


@dataclass(frozen=True)
class OddBook:
    s: int
    k: int
    graph: Graph
    hubs: tuple[int, int]
    pages: tuple[tuple[int, ...], ...]  # interior vertices per page, hub-to-hub order

    @property
    def order(self) -> int:
        return self.graph.n

    @property
    def hub_edge(self) -> tuple[int, int]:
        return self.hubs


def book_order(s: int, k: int) -> int:
    return s * (2 * k - 1) + 2


def book_size(s: int, k: int) -> int:
    return 2 * k * s + 1


def build_odd_book(s: int, k: int) -> OddBook:
    """Deterministic construction: hubs 0 and 1, pages numbered consecutively."""
    if s < 1 or k < 1:
        raise ValueError("odd book needs s >= 1 and k >= 1")
    n = book_order(s, k)
    g = Graph(n)
    g.add_edge(0, 1)
    pages = []
    nxt = 2
    for _ in range(s):
        interior = tuple(range(nxt, nxt + 2 * k - 1))
        nxt += 2 * k - 1
        chain = (0,) + interior + (1,)
        for a, b in zip(chain, chain[1:]):
            g.add_edge(a, b)
        pages.append(interior)
    return OddBook(s=s, k=k, graph=g, hubs=(0, 1), pages=tuple(pages))


def odd_book_issues(p: OddBook) -> list[str]:
    """Structural defects of a purported odd book; empty list means valid."""
    issues = []
    g = p.graph
    if g.n != book_order(p.s, p.k):
        issues.append(f"order {g.n} != {book_order(p.s, p.k)}")
    if g.num_edges() != book_size(p.s, p.k):
        issues.append(f"size {g.num_edges()} != {book_size(p.s, p.k)}")
    h1, h2 = p.hubs
    if not g.has_edge(h1, h2):
        issues.append("hub edge missing")
    for h in p.hubs:
        if g.degree(h) != p.s + 1:
            issues.append(f"hub {h} degree {g.degree(h)} != {p.s + 1}")
    seen = set(p.hubs)
    for i, interior in enumerate(p.pages):
        if len(interior) != 2 * p.k - 1:
            issues.append(f"page {i} has {len(interior)} interior vertices")
            continue
        if seen.intersection(interior):
            issues.append(f"page {i} shares vertices with another page or hub")
        seen.update(interior)
        chain = (h1,) + interior + (h2,)
        for a, b in zip(chain, chain[1:]):
            if not g.has_edge(a, b):
                issues.append(f"page {i} misses edge ({a}, {b})")
        for v in interior:
            if g.degree(v) != 2:
                issues.append(f"interior {v} degree {g.degree(v)} != 2")
    if len(seen) != g.n:
        issues.append("pages and hubs do not cover all vertices")
    return issues


# ---------------------------------------------------------------------------
# exact coloring, used only to validate small patterns

_CHROMATIC_CAP = 32


def chromatic_number(g: Graph, max_n: int = _CHROMATIC_CAP) -> int:
    """Exact chromatic number by backtracking, capped to small graphs."""
    if g.n > max_n:
        raise ValueError(f"exact coloring refused for n > {max_n}")
    if g.n == 0:
        return 0
    if g.num_edges() == 0:
        return 1
    if two_coloring(g) is not None:
        return 2
    lower = max(3, _greedy_clique(g))
    upper, greedy_colors = _greedy_coloring(g)
    if lower == upper:
        return lower
    for target in range(lower, upper):
        if _colorable(g, target):
            return target
    return upper


def _greedy_clique(g: Graph) -> int:
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    best = 0
    for start in order[: min(g.n, 8)]:
        clique = 1 << start
        common = g.adj[start]
        while common:
            v = max(bits(common), key=lambda w: ((g.adj[w] & common).bit_count(), -w))
            clique |= 1 << v
            common &= g.adj[v]
        best = max(best, clique.bit_count())
    return best


def _greedy_coloring(g: Graph) -> tuple[int, list[int]]:
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    color = [-1] * g.n
    used = 0
    for v in order:
        taken = 0
        for w in bits(g.adj[v]):
            if color[w] >= 0:
                taken |= 1 << color[w]
        c = 0
        while taken >> c & 1:
            c += 1
        color[v] = c
        used = max(used, c + 1)
    return used, color


def _colorable(g: Graph, ncolors: int) -> bool:
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    color = [-1] * g.n

    def place(i: int, maxused: int) -> bool:
        if i == g.n:
            return True
        v = order[i]
        taken = 0
        for w in bits(g.adj[v]):
            if color[w] >= 0:
                taken |= 1 << color[w]
        # new colors beyond maxused+1 are symmetric, try at most one
        limit = min(ncolors, maxused + 1)
        for c in range(limit):
            if taken >> c & 1:
                continue
            color[v] = c
            if place(i + 1, max(maxused, c + 1)):
                return True
            color[v] = -1
        return False

    return place(0, 0)


def is_color_critical_edge(p: OddBook) -> bool:
    """True iff the pattern is 3-chromatic and dropping the hub edge gives 2."""
    if chromatic_number(p.graph) != 3:
        return False
    stripped = p.graph.copy()
    stripped.delete_edge(*p.hubs)
    return chromatic_number(stripped) == 2
