import random

import pytest

from oddbook.bipartite import (
    Biclique,
    build_uvt_partition,
    find_long_path,
    find_parity_path,
    greedy_biclique,
    greedy_odd_cycle_transversal,
    max_cut_bipartition,
    max_induced_complete_bipartite,
    truncate_into_disjoint_paths,
    validate_biclique,
)
from oddbook.graph import (
    Graph,
    bits,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    mask_of,
    path_graph,
    random_graph,
    two_coloring,
)
from .oracles import longest_path_brute, max_biclique_brute


def _check_path(g, path, length=None):
    assert len(set(path)) == len(path)
    for a, b in zip(path, path[1:]):
        assert g.has_edge(a, b)
    if length is not None:
        assert len(path) == length + 1


# ---------------------------------------------------------------------------
# maximum induced complete bipartite subgraph


def test_biclique_k33():
    search = max_induced_complete_bipartite(complete_bipartite(3, 3))
    assert search.optimal
    assert search.best.size == 6


def test_biclique_c5():
    search = max_induced_complete_bipartite(cycle_graph(5))
    assert search.optimal
    assert search.best.size == 3  # an induced path on 3 vertices


def test_biclique_matches_brute_force(rng):
    for _ in range(25):
        n = rng.randrange(1, 15)
        g = random_graph(n, rng.uniform(0.1, 0.9), rng)
        search = max_induced_complete_bipartite(g)
        assert search.optimal
        assert validate_biclique(g, search.best)
        assert search.best.size == max_biclique_brute(g)


def test_biclique_budget_abort():
    g = random_graph(14, 0.5, random.Random(5))
    search = max_induced_complete_bipartite(g, budget=1)
    assert not search.optimal
    assert validate_biclique(g, search.best)
    full = max_induced_complete_bipartite(g)
    assert search.best.size <= full.best.size <= search.upper_bound


def test_greedy_seed_is_valid(rng):
    for _ in range(15):
        g = random_graph(12, rng.random(), rng)
        b = greedy_biclique(g)
        assert validate_biclique(g, b)


def test_validator_checks_all_conditions():
    g = complete_bipartite(3, 3)
    # {0,1} vs {3}: independent sides, complete across
    assert validate_biclique(g, Biclique(left=0b11, right=0b1000))
    # overlapping sides
    assert not validate_biclique(g, Biclique(left=0b1, right=0b1))
    # left side {0, 3} carries an edge
    assert not validate_biclique(g, Biclique(left=0b1001, right=0b10000))
    # cross pair (0, 1) is missing
    assert not validate_biclique(g, Biclique(left=0b1, right=0b10))


def test_biclique_empty_graph():
    search = max_induced_complete_bipartite(Graph(0))
    assert search.optimal and search.best.size == 0


def test_edgeless_graph_is_one_sided():
    search = max_induced_complete_bipartite(Graph(5))
    assert search.optimal
    assert search.best.size == 5


# ---------------------------------------------------------------------------
# partition machinery


def test_partition_complete_bipartite_trivial():
    g = complete_bipartite(8, 8)
    part, trace = build_uvt_partition(g, h=8)
    assert trace.method == "two-coloring"
    assert part.exceptional == 0
    assert part.left.bit_count() == 8 and part.right.bit_count() == 8
    assert trace.left_independent and trace.right_independent


def test_partition_pendant_attachment_migrates():
    # complete bipartite sides of 12 plus a low-degree pendant w: seeding w
    # into the exceptional set pulls its 3 attachment vertices out of the
    # side, after which w has no side neighbors left
    m, h = 12, 8
    g = complete_bipartite(m, m)
    w = m * 2
    g2 = Graph(2 * m + 1)
    for u, v in g.edges():
        g2.add_edge(u, v)
    for a in (0, 1, 2):
        g2.add_edge(w, a)
    left = mask_of(range(m))
    right = mask_of(range(m, 2 * m))
    part, trace = build_uvt_partition(g2, h, initial=(left, right, 1 << w))
    assert part.exceptional == mask_of([0, 1, 2, w])
    assert part.left == mask_of(range(3, m))
    assert part.right == right
    assert (g2.adj[w] & part.left) == 0
    assert len(trace.moves) == 1


def test_partition_degree_dichotomy(rng):
    for _ in range(12):
        n = rng.randrange(6, 30)
        g = random_graph(n, rng.uniform(0.1, 0.7), rng)
        h = rng.randrange(2, 6)
        part, trace = build_uvt_partition(g, h, seed=3)
        assert (part.left | part.right | part.exceptional) == g.vertex_mask
        assert part.left & part.right == 0
        assert len(trace.moves) <= n  # every move strictly shrinks the sides
        for x in bits(part.exceptional):
            for side in (part.left, part.right):
                d = (g.adj[x] & side).bit_count()
                assert d == 0 or d >= h + 1, (x, d, h)


def test_partition_saturated_construction(saturated_64):
    sat, _ = saturated_64
    part, trace = build_uvt_partition(sat, h=8, seed=0)
    assert trace.method == "transversal"
    # connector vertices plus both attachment-starved block families migrate
    assert part.exceptional.bit_count() == 44
    assert part.left.bit_count() == 10
    assert part.right.bit_count() == 10
    assert trace.left_independent and trace.right_independent


def test_transversal_on_odd_structures():
    g = cycle_graph(5)
    t = greedy_odd_cycle_transversal(g)
    assert t.bit_count() == 1
    remainder = g.vertex_mask & ~t
    assert two_coloring(g, within=remainder) is not None


def test_max_cut_is_deterministic():
    g = random_graph(12, 0.5, random.Random(9))
    assert max_cut_bipartition(g, seed=4) == max_cut_bipartition(g, seed=4)


# ---------------------------------------------------------------------------
# parity-constrained paths


def _k55_sides():
    g = complete_bipartite(5, 5)
    return g, (mask_of(range(5)), mask_of(range(5, 10)))


def test_parity_path_cross_side():
    g, sides = _k55_sides()
    path = find_parity_path(g, 0, 5, 3, sides)
    _check_path(g, path, length=3)


def test_parity_path_same_side():
    g, sides = _k55_sides()
    path = find_parity_path(g, 0, 1, 2, sides)
    _check_path(g, path, length=2)


def test_parity_mismatch_rejected():
    g, sides = _k55_sides()
    with pytest.raises(ValueError):
        find_parity_path(g, 0, 5, 4, sides)
    with pytest.raises(ValueError):
        find_parity_path(g, 0, 1, 3, sides)


def test_parity_path_avoids_interior_set():
    g, sides = _k55_sides()
    avoid = mask_of([6, 7, 8])
    path = find_parity_path(g, 0, 1, 2, sides, avoid=avoid)
    _check_path(g, path, length=2)
    assert not (mask_of(path[1:-1]) & avoid)


def test_parity_path_endpoints_may_be_in_avoid():
    g, sides = _k55_sides()
    avoid = mask_of([0, 5, 6])
    path = find_parity_path(g, 0, 5, 3, sides, avoid=avoid)
    _check_path(g, path, length=3)
    assert not (mask_of(path[1:-1]) & avoid)


def test_parity_path_absence():
    g = Graph(4)
    g.add_edge(0, 1)
    g.add_edge(2, 3)
    sides = (mask_of([0, 2]), mask_of([1, 3]))
    assert find_parity_path(g, 0, 3, 3, sides) is None


def test_parity_path_rejects_non_bipartite_sides():
    g = cycle_graph(4)
    g.add_edge(0, 2)
    with pytest.raises(ValueError):
        find_parity_path(g, 0, 1, 3, (mask_of([0, 2]), mask_of([1, 3])))


# ---------------------------------------------------------------------------
# long paths


def test_long_path_path_graph():
    res = find_long_path(path_graph(10), 10)
    assert res.path is not None
    _check_path(path_graph(10), res.path)
    assert len(res.path) >= 10


def test_long_path_star_absent():
    g = Graph(10)
    for v in range(1, 10):
        g.add_edge(0, v)
    res = find_long_path(g, 4)
    assert res.path is None
    assert not res.density_guarantee


def test_long_path_density_regime(rng):
    # e > (L-2) n / 2 guarantees an L-vertex path; verify against the
    # exhaustive oracle on small instances
    for _ in range(20):
        n = rng.randrange(6, 13)
        target = rng.randrange(4, n + 1)
        need = (target - 2) * n // 2 + 1
        if need > n * (n - 1) // 2:
            continue
        g = Graph(n)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        rng.shuffle(pairs)
        for u, v in pairs[:need]:
            g.add_edge(u, v)
        assert 2 * g.num_edges() > (target - 2) * n
        res = find_long_path(g, target)
        assert res.density_guarantee
        assert res.path is not None and len(res.path) >= target
        _check_path(g, res.path)
        assert longest_path_brute(g, cap=target) >= target


def test_long_path_complete_graph():
    res = find_long_path(complete_graph(8), 8)
    assert res.path is not None and len(res.path) == 8


# ---------------------------------------------------------------------------
# truncation


def test_truncate_alternating_path():
    # vertices 0..8 alternating side membership, side = even positions
    path = list(range(9))
    side = mask_of(range(0, 9, 2))
    segments = truncate_into_disjoint_paths(path, 2, 2, side)
    assert segments == [[0, 1, 2], [4, 5, 6]]


def test_truncate_claim_arithmetic():
    # s segments of length 2k-2 from a path on 2ks+1 vertices
    for s, k in ((2, 2), (3, 2), (2, 3)):
        n = 2 * k * s + 1
        path = list(range(n))
        side = mask_of(range(0, n, 2))
        segments = truncate_into_disjoint_paths(path, s, 2 * k - 2, side)
        assert len(segments) == s
        used = [v for seg in segments for v in seg]
        assert len(set(used)) == len(used)
        for seg in segments:
            assert len(seg) == 2 * k - 1
            assert side >> seg[0] & 1 and side >> seg[-1] & 1


def test_truncate_too_short():
    # two length-2 segments with a separator need 7 vertices; 6 must fail
    path = list(range(6))
    side = mask_of(range(0, 6, 2))
    with pytest.raises(ValueError):
        truncate_into_disjoint_paths(path, 2, 2, side)
