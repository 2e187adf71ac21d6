"""Lower-bound construction: dense near-bipartite graphs with connector paths.

The layout partitions n vertices into paired blocks (left_i, right_i) for
i = 0..base**s - 1, one leftover pair (left tail / right tail), and s*base
connector paths of 2k-1 vertices each.  Block pairs are indexed by an
s-digit base-`base` code; connector (p, q) attaches its first vertex to
every left block whose code has digit q at position p, and its last vertex
to the matching right blocks.  The minimum-edge member of the class adds
nothing beyond what the definition mandates, and that member is free of
the (s, k) odd book.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, bits, is_independent, mask_of, two_coloring


class LayoutInfeasibleError(ValueError):
    """Requested parameters leave no room for the leftover blocks."""

    def __init__(self, message: str, inequality: str):
        super().__init__(f"{message}: violated {inequality}")
        self.inequality = inequality


@dataclass(frozen=True)
class DigitParams:
    base: int
    width: int

    def __post_init__(self):
        if self.base < 1:
            raise ValueError("digit base must be >= 1")
        if self.width < 1:
            raise ValueError("digit width must be >= 1")


def digit(x: int, pos: int, params: DigitParams) -> int:
    """Digit at position pos (0 = least significant) of x in the given base."""
    limit = params.base ** params.width
    if not 0 <= x < limit:
        raise ValueError(f"x={x} outside [0, {limit - 1}]")
    if not 0 <= pos < params.width:
        raise ValueError(f"digit position {pos} outside [0, {params.width - 1}]")
    return x // params.base ** pos % params.base


def integer_root(x: int, r: int) -> int:
    """Largest m with m**r <= x, exact integer arithmetic."""
    if x < 0 or r < 1:
        raise ValueError("integer_root needs x >= 0 and r >= 1")
    if x in (0, 1) or r == 1:
        return x
    m = int(round(x ** (1.0 / r)))
    while m > 0 and m ** r > x:
        m -= 1
    while (m + 1) ** r <= x:
        m += 1
    return m


@dataclass(frozen=True)
class BlockLayout:
    """Vertex partition of the construction; ids are assigned contiguously:
    left blocks 0..pairs-1, right blocks 0..pairs-1, connectors (p-major),
    then the left tail and right tail."""

    n: int
    s: int
    k: int
    alpha: Fraction
    base: int        # number of digit values per position
    block_size: int  # size of each indexed left/right block

    @property
    def pairs(self) -> int:
        return self.base ** self.s

    @property
    def connector_len(self) -> int:
        return 2 * self.k - 1

    @property
    def connector_count(self) -> int:
        return self.s * self.base

    @property
    def residual(self) -> int:
        return (
            self.n
            - 2 * self.pairs * self.block_size
            - self.connector_count * self.connector_len
        )

    @property
    def left_tail_size(self) -> int:
        return (self.residual + 1) // 2

    @property
    def right_tail_size(self) -> int:
        return self.residual // 2

    @property
    def degenerate(self) -> bool:
        return self.base == 1

    @property
    def theorem_scale(self) -> bool:
        return Fraction(self.n) >= Fraction(8 * self.k ** 2 * self.s ** 2) / self.alpha

    @property
    def digit_params(self) -> DigitParams:
        return DigitParams(base=self.base, width=self.s)

    # -- vertex id geometry ------------------------------------------------

    def left_block(self, i: int) -> range:
        if i == self.pairs:
            start = 2 * self.pairs * self.block_size + self.connector_count * self.connector_len
            return range(start, start + self.left_tail_size)
        if not 0 <= i < self.pairs:
            raise ValueError(f"block index {i} outside [0, {self.pairs}]")
        return range(i * self.block_size, (i + 1) * self.block_size)

    def right_block(self, i: int) -> range:
        if i == self.pairs:
            start = (
                2 * self.pairs * self.block_size
                + self.connector_count * self.connector_len
                + self.left_tail_size
            )
            return range(start, start + self.right_tail_size)
        if not 0 <= i < self.pairs:
            raise ValueError(f"block index {i} outside [0, {self.pairs}]")
        base = self.pairs * self.block_size
        return range(base + i * self.block_size, base + (i + 1) * self.block_size)

    def connector(self, p: int, q: int) -> range:
        if not (0 <= p < self.s and 0 <= q < self.base):
            raise ValueError(f"connector index ({p}, {q}) out of range")
        start = 2 * self.pairs * self.block_size + (p * self.base + q) * self.connector_len
        return range(start, start + self.connector_len)

    def connector_vertex(self, p: int, q: int, r: int) -> int:
        """r-th vertex on connector (p, q), 1-based along the path."""
        if not 1 <= r <= self.connector_len:
            raise ValueError(f"connector position {r} outside [1, {self.connector_len}]")
        return self.connector(p, q)[r - 1]

    def left_mask(self) -> int:
        m = 0
        for i in range(self.pairs + 1):
            m |= mask_of(self.left_block(i))
        return m

    def right_mask(self) -> int:
        m = 0
        for i in range(self.pairs + 1):
            m |= mask_of(self.right_block(i))
        return m

    def connector_mask(self) -> int:
        m = 0
        for p in range(self.s):
            for q in range(self.base):
                m |= mask_of(self.connector(p, q))
        return m

    def middle_mask(self) -> int:
        """Middle vertices (position k) of all connectors."""
        return mask_of(
            self.connector_vertex(p, q, self.k)
            for p in range(self.s)
            for q in range(self.base)
        )

    def label_of(self, v: int) -> tuple:
        for i in range(self.pairs + 1):
            if v in self.left_block(i):
                return ("left", i)
            if v in self.right_block(i):
                return ("right", i)
        for p in range(self.s):
            for q in range(self.base):
                rng = self.connector(p, q)
                if v in rng:
                    return ("connector", p, q, v - rng.start + 1)
        raise ValueError(f"vertex {v} outside layout")

    def attached_pairs(self, p: int, q: int) -> list[int]:
        """Indexed block pairs whose digit at position p equals q."""
        dp = self.digit_params
        return [i for i in range(self.pairs) if digit(i, p, dp) == q]

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "s": self.s,
            "k": self.k,
            "alpha": str(self.alpha),
            "base": self.base,
            "block_size": self.block_size,
            "pairs": self.pairs,
            "left_blocks": [list(self.left_block(i)) for i in range(self.pairs + 1)],
            "right_blocks": [list(self.right_block(i)) for i in range(self.pairs + 1)],
            "connectors": [
                [list(self.connector(p, q)) for q in range(self.base)]
                for p in range(self.s)
            ],
            "degenerate": self.degenerate,
            "theorem_scale": self.theorem_scale,
        }

    @classmethod
    def from_json(cls, doc: dict) -> "BlockLayout":
        layout = cls(
            n=doc["n"],
            s=doc["s"],
            k=doc["k"],
            alpha=Fraction(doc["alpha"]),
            base=doc["base"],
            block_size=doc["block_size"],
        )
        if layout.to_json()["left_blocks"] != doc["left_blocks"]:
            raise ValueError("layout document inconsistent with derived geometry")
        return layout

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def plan_layout(n: int, s: int, k: int, alpha: Fraction | str) -> BlockLayout:
    """Integerized layout: block size is the floor (s+1)-th root of n and the
    digit base is max(1, floor(alpha * block_size))."""
    alpha = Fraction(alpha)
    if s < 2 or k < 2:
        raise ValueError("layout needs s >= 2 and k >= 2")
    if not 0 < alpha <= Fraction(1, 2):
        raise ValueError("alpha must lie in (0, 1/2]")
    m = integer_root(n, s + 1)
    t = max(1, int(alpha * m))
    layout = BlockLayout(n=n, s=s, k=k, alpha=alpha, base=t, block_size=m)
    if layout.residual < 2:
        raise LayoutInfeasibleError(
            f"n={n} too small for s={s}, k={k}, alpha={alpha} "
            f"(block_size={m}, base={t})",
            inequality=(
                f"n - 2*base**s*block_size - s*base*(2k-1) >= 2 "
                f"({n} - {2 * t ** s * m} - {s * t * (2 * k - 1)} = {layout.residual})"
            ),
        )
    return layout


@dataclass(frozen=True)
class ConstructionResult:
    graph: Graph
    layout: BlockLayout
    specified_edge_count: int


def specified_edge_count(layout: BlockLayout) -> int:
    """Closed-form edge count of the minimum member."""
    left_total = layout.pairs * layout.block_size + layout.left_tail_size
    right_total = layout.pairs * layout.block_size + layout.right_tail_size
    cross = left_total * right_total - layout.pairs * layout.block_size ** 2
    path_edges = layout.connector_count * (2 * layout.k - 2)
    attach = 2 * layout.connector_count * layout.base ** (layout.s - 1) * layout.block_size
    return cross + path_edges + attach


def build_min_member(layout: BlockLayout) -> ConstructionResult:
    """Graph with exactly the mandated edges: complete off-diagonal block
    pairs, complete tail pair, connector paths, and digit-matched
    attachments at connector endpoints."""
    n = layout.n
    adj = [0] * n
    pairs = layout.pairs
    left_masks = [mask_of(layout.left_block(i)) for i in range(pairs + 1)]
    right_masks = [mask_of(layout.right_block(i)) for i in range(pairs + 1)]
    left_all = 0
    right_all = 0
    for m in left_masks:
        left_all |= m
    for m in right_masks:
        right_all |= m

    for i in range(pairs + 1):
        if i < pairs:
            row_left = right_all & ~right_masks[i]
            row_right = left_all & ~left_masks[i]
        else:
            row_left = right_all
            row_right = left_all
        for v in layout.left_block(i):
            adj[v] |= row_left
        for v in layout.right_block(i):
            adj[v] |= row_right

    for p in range(layout.s):
        for q in range(layout.base):
            chain = list(layout.connector(p, q))
            for a, b in zip(chain, chain[1:]):
                adj[a] |= 1 << b
                adj[b] |= 1 << a
            attach_left = 0
            attach_right = 0
            for i in layout.attached_pairs(p, q):
                attach_left |= left_masks[i]
                attach_right |= right_masks[i]
            first, last = chain[0], chain[-1]
            adj[first] |= attach_left
            for v in bits(attach_left):
                adj[v] |= 1 << first
            adj[last] |= attach_right
            for v in bits(attach_right):
                adj[v] |= 1 << last

    g = Graph.from_adjacency(adj)
    return ConstructionResult(
        graph=g, layout=layout, specified_edge_count=specified_edge_count(layout)
    )


# ---------------------------------------------------------------------------
# structure certificate: the facts the freeness argument rests on


@dataclass
class CertificateFact:
    name: str
    ok: bool
    witness: tuple | None = None

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "witness": self.witness}


@dataclass
class CertificateReport:
    facts: list[CertificateFact]

    @property
    def ok(self) -> bool:
        return all(f.ok for f in self.facts)

    def fact(self, name: str) -> CertificateFact:
        for f in self.facts:
            if f.name == name:
                return f
        raise KeyError(name)

    def to_json(self) -> dict:
        return {"ok": self.ok, "facts": [f.to_json() for f in self.facts]}


def _alternating_connector_sets(layout: BlockLayout) -> tuple[int, int]:
    """Connector positions split around the middle: set 1 holds odd positions
    before the middle and even after; set 2 the mirror image."""
    k = layout.k
    set1 = 0
    set2 = 0
    for p in range(layout.s):
        for q in range(layout.base):
            for r in range(1, layout.connector_len + 1):
                if r == k:
                    continue
                v = layout.connector_vertex(p, q, r)
                before = r < k
                odd = r % 2 == 1
                if (before and odd) or (not before and not odd):
                    set1 |= 1 << v
                else:
                    set2 |= 1 << v
    return set1, set2


def certify_structure(result: ConstructionResult) -> CertificateReport:
    g = result.graph
    layout = result.layout
    facts: list[CertificateFact] = []

    # connector paths are exactly the induced structure
    path_ok = True
    path_witness = None
    for p in range(layout.s):
        for q in range(layout.base):
            chain = list(layout.connector(p, q))
            cmask = mask_of(chain)
            expected = {}
            for a, b in zip(chain, chain[1:]):
                expected.setdefault(a, 0)
                expected.setdefault(b, 0)
                expected[a] |= 1 << b
                expected[b] |= 1 << a
            for v in chain:
                if g.adj[v] & cmask != expected.get(v, 0):
                    path_ok = False
                    path_witness = ("connector", p, q, v)
                    break
            if not path_ok:
                break
        if not path_ok:
            break
    facts.append(CertificateFact("connector-paths-exact", path_ok, path_witness))

    # middle connector vertices have degree exactly 2
    mid_ok = True
    mid_witness = None
    for v in bits(layout.middle_mask()):
        if g.degree(v) != 2:
            mid_ok = False
            mid_witness = (v, g.degree(v))
            break
    facts.append(CertificateFact("middle-degree-two", mid_ok, mid_witness))

    # independence of each side joined with its alternating connector set
    set1, set2 = _alternating_connector_sets(layout)
    for name, mask in (
        ("left-with-mirror-set-independent", layout.left_mask() | set2),
        ("right-with-near-set-independent", layout.right_mask() | set1),
    ):
        ok = is_independent(g, mask)
        witness = None
        if not ok:
            for u in bits(mask):
                inside = g.adj[u] & mask
                if inside:
                    witness = (u, next(bits(inside)))
                    break
        facts.append(CertificateFact(name, ok, witness))

    # removing the middles leaves a bipartite graph
    rest = g.vertex_mask & ~layout.middle_mask()
    sub_adj = [g.adj[v] & rest if rest >> v & 1 else 0 for v in range(g.n)]
    stripped = Graph.from_adjacency(sub_adj)
    facts.append(
        CertificateFact("bipartite-without-middles", two_coloring(stripped) is not None)
    )

    # connector endpoints attach only to indexed blocks on the correct side
    attach_ok = True
    attach_witness = None
    left_indexed = layout.left_mask() & ~mask_of(layout.left_block(layout.pairs))
    right_indexed = layout.right_mask() & ~mask_of(layout.right_block(layout.pairs))
    for p in range(layout.s):
        for q in range(layout.base):
            first = layout.connector_vertex(p, q, 1)
            last = layout.connector_vertex(p, q, layout.connector_len)
            second = layout.connector_vertex(p, q, 2)
            second_last = layout.connector_vertex(p, q, layout.connector_len - 1)
            bad_first = g.adj[first] & ~(1 << second) & ~left_indexed
            bad_last = g.adj[last] & ~(1 << second_last) & ~right_indexed
            if bad_first:
                attach_ok = False
                attach_witness = (first, next(bits(bad_first)))
                break
            if bad_last:
                attach_ok = False
                attach_witness = (last, next(bits(bad_last)))
                break
        if not attach_ok:
            break
    facts.append(CertificateFact("endpoint-attachments-one-sided", attach_ok, attach_witness))

    return CertificateReport(facts)


# ---------------------------------------------------------------------------
# exact edge bound: e(G) >= n^2/4 - 2ks * alpha * n^((s+2)/(s+1))


@dataclass
class EdgeBoundReport:
    edge_count: int
    holds: bool
    margin_low: Fraction
    margin_high: Fraction
    theorem_scale: bool

    def to_json(self) -> dict:
        return {
            "edge_count": self.edge_count,
            "holds": self.holds,
            "margin_low": str(self.margin_low),
            "margin_high": str(self.margin_high),
            "theorem_scale": self.theorem_scale,
        }


def edge_bound_check(result: ConstructionResult) -> EdgeBoundReport:
    """Exact rational verdict; the irrational term n^((s+2)/(s+1)) is handled
    by comparing (s+1)-th powers and bracketed via integer roots."""
    layout = result.layout
    n, s, k, alpha = layout.n, layout.s, layout.k, layout.alpha
    e = result.graph.num_edges()
    deficit = Fraction(n * n, 4) - e
    coeff = 2 * k * s * alpha * n  # bound term is coeff * n^(1/(s+1))
    if deficit <= 0:
        holds = True
    else:
        c = deficit / coeff
        holds = c.numerator ** (s + 1) <= n * c.denominator ** (s + 1)
    r = integer_root(n, s + 1)
    margin_low = e - Fraction(n * n, 4) + coeff * r
    margin_high = e - Fraction(n * n, 4) + coeff * (r + 1)
    return EdgeBoundReport(
        edge_count=e,
        holds=holds,
        margin_low=margin_low,
        margin_high=margin_high,
        theorem_scale=layout.theorem_scale,
    )
