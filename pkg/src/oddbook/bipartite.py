"""Induced-complete-bipartite analysis: exact maximum bicliques, the
two-sides-plus-exceptionals partition, and constrained path finders.

An induced biclique here is a pair of disjoint vertex sets, each
independent, with every cross pair adjacent; one side may be empty, so an
independent set counts as a degenerate biclique.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .graph import (
    Graph,
    bfs_distances,
    bits,
    connected_components,
    find_odd_cycle,
    induced_subgraph,
    is_independent,
    mask_of,
    two_coloring,
)


@dataclass(frozen=True)
class Biclique:
    left: int
    right: int

    @property
    def size(self) -> int:
        return self.left.bit_count() + self.right.bit_count()

    @property
    def vertices(self) -> int:
        return self.left | self.right

    def to_json(self) -> dict:
        return {
            "left": sorted(bits(self.left)),
            "right": sorted(bits(self.right)),
            "size": self.size,
        }


def validate_biclique(g: Graph, b: Biclique) -> bool:
    """Independent re-check: disjoint sides, both independent, all cross
    pairs adjacent (so the union induces exactly a complete bipartite graph)."""
    if b.left & b.right:
        return False
    if (b.left | b.right) & ~g.vertex_mask:
        return False
    if not is_independent(g, b.left) or not is_independent(g, b.right):
        return False
    for u in bits(b.left):
        if b.right & ~g.adj[u]:
            return False
    return True


# ---------------------------------------------------------------------------
# exact maximum induced complete bipartite subgraph


@dataclass
class BicliqueSearch:
    best: Biclique
    optimal: bool
    nodes: int
    upper_bound: int
    budget: int

    def to_json(self) -> dict:
        return {
            "biclique": self.best.to_json(),
            "optimal": self.optimal,
            "nodes": self.nodes,
            "upper_bound": self.upper_bound,
            "budget": self.budget,
        }


def greedy_biclique(g: Graph) -> Biclique:
    """Deterministic greedy seed: grow from every start vertex, assign each
    chosen candidate to the side keeping the most future candidates."""
    best = Biclique(0, 0)
    if g.n == 0:
        return best
    starts = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    for v0 in starts:
        left = 1 << v0
        right = 0
        cand_l = ~g.adj[v0] & g.vertex_mask & ~left
        cand_r = g.adj[v0]
        while cand_l | cand_r:
            pick = None
            for u in bits(cand_l | cand_r):
                to_left = bool(cand_l >> u & 1)
                to_right = bool(cand_r >> u & 1)
                score = -1
                side = None
                if to_right:
                    nl = cand_l & g.adj[u] & ~(1 << u)
                    nr = cand_r & ~g.adj[u] & ~(1 << u)
                    score = (nl | nr).bit_count()
                    side = "r"
                if to_left:
                    nl = cand_l & ~g.adj[u] & ~(1 << u)
                    nr = cand_r & g.adj[u] & ~(1 << u)
                    sc = (nl | nr).bit_count()
                    if sc > score:
                        score = sc
                        side = "l"
                if pick is None or score > pick[0]:
                    pick = (score, u, side)
            _, u, side = pick
            if side == "l":
                left |= 1 << u
                cand_l &= ~g.adj[u]
                cand_r &= g.adj[u]
            else:
                right |= 1 << u
                cand_l &= g.adj[u]
                cand_r &= ~g.adj[u]
            cand_l &= ~(1 << u)
            cand_r &= ~(1 << u)
        if left.bit_count() + right.bit_count() > best.size:
            best = Biclique(left, right)
    return best


def _twin_classes(g: Graph) -> list[list[int]]:
    """Groups of vertices with identical open neighborhoods (false twins).

    Such a class is independent and sits wholly inside one side of some
    maximum biclique or wholly outside it, so searching over whole classes
    is lossless for the maximum size.
    """
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(g.adj[v], []).append(v)
    return list(groups.values())


def max_induced_complete_bipartite(
    g: Graph, budget: int = 10 ** 7
) -> BicliqueSearch:
    """Exact branch and bound over side-assignment decisions.

    False-twin classes are collapsed into weighted quotient vertices first;
    the bound is committed weight plus the weight of all candidates still
    consistent with a side.  When the node budget runs out the incumbent
    is returned with optimal=False and upper_bound covering every open node.
    """
    if g.n == 0:
        return BicliqueSearch(
            best=Biclique(0, 0), optimal=True, nodes=0, upper_bound=0, budget=budget
        )
    classes = _twin_classes(g)
    m = len(classes)
    weight = [len(c) for c in classes]
    cmask = [mask_of(c) for c in classes]
    reps = [c[0] for c in classes]
    qadj = [0] * m
    for i in range(m):
        for j in range(i + 1, m):
            if g.adj[reps[i]] >> reps[j] & 1:
                qadj[i] |= 1 << j
                qadj[j] |= 1 << i

    def wsum(mask: int) -> int:
        total = 0
        while mask:
            low = mask & -mask
            total += weight[low.bit_length() - 1]
            mask ^= low
        return total

    def expand(class_mask: int) -> int:
        out = 0
        for i in bits(class_mask):
            out |= cmask[i]
        return out

    seed = greedy_biclique(g)
    best = seed
    best_size = seed.size
    nodes = 0
    aborted = False
    open_bound = 0
    full = (1 << m) - 1

    # stack entries over quotient classes: (left, right, cand_left, cand_right)
    stack: list[tuple[int, int, int, int]] = [(0, 0, full, full)]
    while stack:
        if nodes >= budget:
            aborted = True
            for left, right, cl, cr in stack:
                open_bound = max(open_bound, wsum(left) + wsum(right) + wsum(cl | cr))
            break
        nodes += 1
        left, right, cl, cr = stack.pop()
        cu = cl | cr
        size = wsum(left) + wsum(right)
        if size + wsum(cu) <= best_size:
            continue
        if not cu:
            if size > best_size:
                best = Biclique(expand(left), expand(right))
                best_size = size
            continue
        v = max(bits(cu), key=lambda i: (weight[i], -i))
        vbit = 1 << v
        # exclude branch first so assignment branches pop first (DFS
        # dives toward large bicliques early)
        stack.append((left, right, cl & ~vbit, cr & ~vbit))
        if cr >> v & 1 and (left or right):
            stack.append((left, right | vbit, cl & qadj[v], cr & ~qadj[v] & ~vbit))
        if cl >> v & 1:
            stack.append((left | vbit, right, cl & ~qadj[v] & ~vbit, cr & qadj[v]))

    upper = best_size if not aborted else max(best_size, open_bound)
    return BicliqueSearch(
        best=best, optimal=not aborted, nodes=nodes, upper_bound=upper, budget=budget
    )


# ---------------------------------------------------------------------------
# (left, right, exceptional) partition with greedy cleanup


@dataclass(frozen=True)
class CorePartition:
    left: int
    right: int
    exceptional: int
    h: int

    def to_json(self) -> dict:
        return {
            "left": sorted(bits(self.left)),
            "right": sorted(bits(self.right)),
            "exceptional": sorted(bits(self.exceptional)),
            "h": self.h,
        }


@dataclass
class PartitionTrace:
    method: str
    seed: int | None
    initial_exceptional: int
    moves: list[tuple[str, int, int]] = field(default_factory=list)  # (side, trigger, moved mask)
    left_independent: bool = False
    right_independent: bool = False
    min_cross_degree: int = 0

    def to_json(self) -> dict:
        return {
            "method": self.method,
            "seed": self.seed,
            "initial_exceptional": sorted(bits(self.initial_exceptional)),
            "moves": [
                {"side": side, "trigger": trig, "moved": sorted(bits(m))}
                for side, trig, m in self.moves
            ],
            "left_independent": self.left_independent,
            "right_independent": self.right_independent,
            "min_cross_degree": self.min_cross_degree,
        }


def max_cut_bipartition(g: Graph, seed: int = 0, restarts: int = 4) -> tuple[int, int]:
    """Seeded local-search max cut: single-vertex flips to a local optimum,
    best of `restarts` starts.  Deterministic for a fixed seed."""
    rng = random.Random(seed)
    best_sides = None
    best_cut = -1
    for _ in range(max(1, restarts)):
        side = [rng.randrange(2) for _ in range(g.n)]
        masks = [0, 0]
        for v, sd in enumerate(side):
            masks[sd] |= 1 << v
        improved = True
        while improved:
            improved = False
            for v in range(g.n):
                sd = side[v]
                same = (g.adj[v] & masks[sd]).bit_count()
                cross = (g.adj[v] & masks[sd ^ 1]).bit_count()
                if same > cross:
                    masks[sd] &= ~(1 << v)
                    masks[sd ^ 1] |= 1 << v
                    side[v] = sd ^ 1
                    improved = True
        cut = sum((g.adj[v] & masks[side[v] ^ 1]).bit_count() for v in range(g.n)) // 2
        if cut > best_cut:
            best_cut = cut
            best_sides = tuple(masks)
    m0, m1 = best_sides
    if m1 and (not m0 or next(bits(m1)) < next(bits(m0))):
        m0, m1 = m1, m0
    return m0, m1


def greedy_odd_cycle_transversal(g: Graph) -> int:
    """Vertices whose removal leaves a bipartite graph: repeatedly find an
    odd cycle and drop its minimum-degree vertex (ties to the smaller id).
    Deterministic; not minimum, but small on nearly bipartite graphs."""
    removed = 0
    scope = g.vertex_mask
    while True:
        cyc = find_odd_cycle(g, within=scope)
        if cyc is None:
            return removed
        victim = min(cyc, key=lambda v: (g.degree(v), v))
        scope &= ~(1 << victim)
        removed |= 1 << victim


def build_uvt_partition(
    g: Graph,
    h: int,
    seed: int = 0,
    initial: tuple[int, int, int] | None = None,
    restarts: int = 4,
) -> tuple[CorePartition, PartitionTrace]:
    """Partition into two sides plus an exceptional set such that every
    exceptional vertex has, toward each side, either no neighbor or more
    than h of them.

    The initial split: a plain 2-coloring when the graph is bipartite;
    otherwise a greedy odd-cycle transversal becomes the exceptional
    candidate set and the bipartite remainder is 2-colored.  When that
    transversal exceeds n/3 the graph is nowhere near bipartite and a
    seeded local-search max cut is used instead, with overloaded vertices
    (more than h same-side neighbors) moved to the exceptional set.
    Callers may also supply `initial` explicitly.

    Then greedily: while an exceptional vertex has between 1 and h
    neighbors in a side, that whole neighborhood moves to the exceptional
    set.  Each move shrinks the sides, so this terminates.  Side
    independence is reported, not assumed.
    """
    if initial is not None:
        left, right, exceptional = initial
        if (left | right | exceptional) != g.vertex_mask or (
            left & right or left & exceptional or right & exceptional
        ):
            raise ValueError("initial sides must partition the vertex set")
        method = "explicit"
        used_seed = None
    else:
        coloring = two_coloring(g)
        exceptional = 0
        used_seed = None
        if coloring is not None:
            left, right = coloring
            method = "two-coloring"
        else:
            transversal = greedy_odd_cycle_transversal(g)
            if 3 * transversal.bit_count() <= g.n:
                exceptional = transversal
                left, right = two_coloring(g, within=g.vertex_mask & ~transversal)
                method = "transversal"
            else:
                side0, side1 = max_cut_bipartition(g, seed=seed, restarts=restarts)
                for v in range(g.n):
                    own = side0 if side0 >> v & 1 else side1
                    if (g.adj[v] & own).bit_count() >= h + 1:
                        exceptional |= 1 << v
                left = side0 & ~exceptional
                right = side1 & ~exceptional
                method = "max-cut"
                used_seed = seed

    trace = PartitionTrace(method=method, seed=used_seed, initial_exceptional=exceptional)

    progress = True
    while progress:
        progress = False
        for side_name in ("left", "right"):
            while True:
                side = left if side_name == "left" else right
                trigger = None
                for x in bits(exceptional):
                    d = (g.adj[x] & side).bit_count()
                    if 1 <= d <= h:
                        trigger = x
                        break
                if trigger is None:
                    break
                moved = g.adj[trigger] & side
                if side_name == "left":
                    left &= ~moved
                else:
                    right &= ~moved
                exceptional |= moved
                trace.moves.append((side_name, trigger, moved))
                progress = True

    part = CorePartition(left=left, right=right, exceptional=exceptional, h=h)
    trace.left_independent = is_independent(g, left)
    trace.right_independent = is_independent(g, right)
    cross_degrees = [
        (g.adj[v] & (right if left >> v & 1 else left)).bit_count()
        for v in bits(left | right)
    ]
    trace.min_cross_degree = min(cross_degrees, default=0)
    return part, trace


# ---------------------------------------------------------------------------
# parity-constrained and long paths


def find_parity_path(
    g: Graph,
    u: int,
    v: int,
    length: int,
    sides: tuple[int, int],
    avoid: int = 0,
) -> list[int] | None:
    """Path of exactly `length` edges from u to v whose interior avoids
    `avoid`, in a bipartite graph with the given sides.

    The requested length must match the parity forced by the endpoints'
    sides (odd across sides, even within a side); mismatches are rejected.
    Exhaustive DFS with distance-based pruning.
    """
    side0, side1 = sides
    if side0 & side1 or (side0 | side1) != g.vertex_mask:
        raise ValueError("sides must partition the vertex set")
    for mask in sides:
        for x in bits(mask):
            if g.adj[x] & mask:
                raise ValueError("graph is not bipartite for the given sides")
    if u == v:
        raise ValueError("endpoints must differ")
    if length < 2:
        raise ValueError("length must be at least 2")
    cross = (side0 >> u & 1) != (side0 >> v & 1)
    if cross != bool(length % 2):
        want = "odd" if cross else "even"
        raise ValueError(
            f"parity mismatch: endpoints force an {want} length, got {length}"
        )
    endpoints = 1 << u | 1 << v
    # the endpoints themselves may be listed in `avoid`
    avoid_interior = avoid & ~endpoints
    dist = bfs_distances(g, v, allowed=g.vertex_mask & ~avoid_interior)

    path = [u]

    def extend(x: int, rem: int, used: int) -> bool:
        if rem == 1:
            if g.adj[x] >> v & 1:
                path.append(v)
                return True
            return False
        cand = g.adj[x] & ~used & ~avoid_interior
        for w in bits(cand):
            if dist[w] > rem - 1:
                continue
            path.append(w)
            if extend(w, rem - 1, used | 1 << w):
                return True
            path.pop()
        return False

    if extend(u, length, endpoints):
        return path
    return None


@dataclass
class LongPathResult:
    path: list[int] | None
    density_guarantee: bool


def find_long_path(g: Graph, min_vertices: int) -> LongPathResult:
    """Path on at least `min_vertices` vertices.

    A bounded DFS with degree-ordered extension runs first.  When the edge
    count exceeds (min_vertices-2)*n/2 the classical density argument
    guarantees such a path exists; in that regime a constructive fallback
    (low-degree peeling, then rotation-extension inside a dense component)
    always produces one.
    """
    n = g.n
    if min_vertices <= 1:
        return LongPathResult([0] if n else [], density_guarantee=False)
    guarantee = 2 * g.num_edges() > (min_vertices - 2) * n and n <= 512
    path = _dfs_long_path(g, min_vertices)
    if path is None and guarantee:
        path = _density_long_path(g, min_vertices)
        assert path is not None and len(path) >= min_vertices
    return LongPathResult(path, density_guarantee=guarantee)


def _dfs_long_path(g: Graph, target: int, budget: int = 20000) -> list[int] | None:
    starts = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    expansions = 0
    for start in starts:
        stack = [(start, 1 << start, (start,))]
        while stack and expansions < budget:
            expansions += 1
            v, used, path = stack.pop()
            if len(path) >= target:
                return list(path)
            nxt = sorted(bits(g.adj[v] & ~used), key=lambda w: (g.degree(w), w))
            for w in reversed(nxt):
                stack.append((w, used | 1 << w, path + (w,)))
        if expansions >= budget:
            break
    return None


def _density_long_path(g: Graph, target: int) -> list[int] | None:
    # peel low-degree vertices; the density invariant survives each removal
    alive = g.vertex_mask
    deg = [g.degree(v) for v in range(g.n)]
    floor = (target - 2) // 2
    changed = True
    while changed:
        changed = False
        for v in bits(alive):
            if deg[v] <= floor:
                alive &= ~(1 << v)
                for w in bits(g.adj[v] & alive):
                    deg[w] -= 1
                changed = True
    if not alive:
        return None
    best_comp = None
    best_ratio = None
    for comp in connected_components(g, within=alive):
        edges = sum((g.adj[v] & comp).bit_count() for v in bits(comp)) // 2
        ratio = Fraction(edges, comp.bit_count())
        if best_ratio is None or ratio > best_ratio:
            best_ratio = ratio
            best_comp = comp
    comp = best_comp
    sub, relabel = induced_subgraph(g, comp)
    back = {new: old for old, new in relabel.items()}
    path = _rotation_extension(sub, target)
    if path is None:
        return None
    return [back[v] for v in path]


def _rotation_extension(g: Graph, target: int) -> list[int] | None:
    """Inside a connected graph with min degree above (target-2)/2, grow a
    maximal path; while it is short, rotate it into a cycle (pigeonhole on
    endpoint neighborhoods) and extend through any outside attachment."""
    n = g.n
    start = max(range(n), key=lambda v: (g.degree(v), -v))
    path = [start]
    in_path = 1 << start

    def extend_ends():
        nonlocal in_path
        grown = True
        while grown:
            grown = False
            for end, append in ((path[-1], True), (path[0], False)):
                free = g.adj[end] & ~in_path
                if free:
                    w = next(bits(free))
                    if append:
                        path.append(w)
                    else:
                        path.insert(0, w)
                    in_path |= 1 << w
                    grown = True

    extend_ends()
    while len(path) < min(target, n):
        head, tail = path[0], path[-1]
        m = len(path)
        rotated = False
        for i in range(1, m):
            # head ~ path[i] and tail ~ path[i-1] closes a cycle on the path
            if g.has_edge(head, path[i]) and g.has_edge(tail, path[i - 1]):
                cycle = path[:i] + path[i:][::-1]
                out = _attach_outside(g, cycle, in_path)
                if out is None:
                    # connectivity: the cycle already covers the component
                    path[:] = cycle
                    return path if len(path) >= target else None
                y, pos = out
                # break the cycle next to the attachment and append y
                path[:] = cycle[pos + 1 :] + cycle[: pos + 1] + [y]
                in_path |= 1 << y
                extend_ends()
                rotated = True
                break
        if not rotated:
            break
    return path if len(path) >= target else None


def _attach_outside(g: Graph, cycle: list[int], in_path: int):
    for pos, z in enumerate(cycle):
        free = g.adj[z] & ~in_path
        if free:
            return next(bits(free)), pos
    return None


def truncate_into_disjoint_paths(
    path: list[int],
    count: int,
    each_length: int,
    side: int,
) -> list[list[int]]:
    """Slice an alternating path into `count` vertex-disjoint subpaths of
    `each_length` edges whose endpoints lie in `side`."""
    out: list[list[int]] = []
    i = 0
    n = len(path)
    while len(out) < count:
        while i < n and not side >> path[i] & 1:
            i += 1
        if i + each_length >= n:
            raise ValueError(
                f"path too short: got {len(out)} of {count} segments of "
                f"length {each_length} from {n} vertices"
            )
        segment = path[i : i + each_length + 1]
        if not side >> segment[-1] & 1:
            raise ValueError(
                f"alignment failure: segment ending at position {i + each_length} "
                "does not end in the requested side"
            )
        out.append(segment)
        i += each_length + 1
    return out
