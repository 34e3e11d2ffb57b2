import pytest

from ordtile.barriers import (
    BarrierError,
    Kind,
    PropertyBRequired,
    PropertyCRequired,
    divisibility_barrier,
    divisibility_cut,
    local_barrier,
    near_equal_sizes,
    space_barrier,
)
from ordtile.catalog import pattern
from ordtile.core import OrderedGraph, is_independent, mirror
from ordtile.embed import Outcome, iter_embeddings, perfect_tiling
from ordtile.profile import alpha_plus_seq


def _is_clique(g, vertices):
    vertices = list(vertices)
    return all(g.has_edge(u, v) for i, u in enumerate(vertices) for v in vertices[i + 1:])


def _fully_joined(g, left, right):
    return all(g.has_edge(u, v) for u in left for v in right)


def test_space_barrier_213_n6():
    cert = space_barrier(pattern("213"), 1, 6)
    g = cert.graph
    assert cert.kind is Kind.SPACE
    assert is_independent(g, 1, 3)
    assert _is_clique(g, range(4, 7))
    assert _fully_joined(g, range(1, 4), range(4, 7))
    assert cert.claimed_min_degree == 3 == cert.formula_value


def test_space_barrier_k2_n6():
    cert = space_barrier(pattern("K2"), 1, 6)
    g = cert.graph
    assert is_independent(g, 1, 4)
    assert _is_clique(g, range(5, 7)) and _fully_joined(g, range(1, 5), range(5, 7))
    assert cert.claimed_min_degree == 2


def test_space_barrier_rejects_ell_out_of_range():
    with pytest.raises(BarrierError):
        space_barrier(OrderedGraph.empty(3), 1, 6)
    with pytest.raises(BarrierError):
        space_barrier(pattern("213"), 2, 6)


def test_space_barrier_needs_divisibility():
    with pytest.raises(BarrierError):
        space_barrier(pattern("213"), 1, 7)


def test_space_barrier_with_n_equal_h_has_null_clique():
    # alpha^+_1 = 2 for P_B23, s = 2, [s+1] = [1,3], clique on [4,5]
    cert = space_barrier(pattern("P_B23"), 1, 5)
    assert cert.graph.n == 5
    H = pattern("K2")
    cert = space_barrier(H, 1, 2)  # s = 1, [1,2] edgeless, clique part empty
    assert cert.graph.edges == frozenset()


def test_space_barrier_multiple_intervals():
    # path 1-2-3-4: chi_< = 4, alpha^+ = [1,2,3,4]; ell = 2 -> s = 2*8/4 = 4, [5] split 3+2
    H = OrderedGraph.from_edges(4, [(1, 2), (2, 3), (3, 4)])
    cert = space_barrier(H, 2, 8)
    g = cert.graph
    assert near_equal_sizes(5, 2) == [3, 2]
    assert is_independent(g, 1, 3) and is_independent(g, 4, 5)
    assert _fully_joined(g, range(1, 4), range(4, 6))
    assert _is_clique(g, range(6, 9))
    assert perfect_tiling(g, H).outcome is Outcome.NO_TILING


# exact min degrees: a vertex of A_i misses only A_i, so delta = n - max|A_i|
SPACE_DEGREES = [
    ("213", 6, 3, 3), ("213", 9, 5, 5), ("213", 12, 7, 7), ("213", 18, 11, 11),
    ("K2", 6, 2, 2), ("K2", 10, 4, 4), ("K2", 18, 8, 8),
    ("P_A14", 8, 1, 1), ("P_B23", 10, 5, 5),
    ("P_C6", 12, 3, 3), ("P_D6", 12, 3, 3),
]


@pytest.mark.parametrize("name, n, exact, bound", SPACE_DEGREES)
def test_space_barrier_degrees(name, n, exact, bound):
    cert = space_barrier(pattern(name), 1, n)
    assert cert.claimed_min_degree == exact
    assert cert.formula_value == bound
    assert cert.formula_value <= cert.claimed_min_degree <= cert.formula_value + 1


@pytest.mark.parametrize("name", ["213", "P_B23", "P_C6"])
def test_mirrored_space_barrier(name):
    H = pattern(name)
    n = 2 * H.n
    cert = space_barrier(H, 1, n, mirrored=True)
    assert cert.graph == mirror(space_barrier(mirror(H), 1, n).graph)
    assert perfect_tiling(cert.graph, H).outcome is Outcome.NO_TILING


@pytest.mark.parametrize("name, n", [("213", 6), ("213", 9), ("213", 12), ("K2", 6), ("K2", 10), ("P_B23", 10)])
def test_space_barrier_copies_use_few_small_vertices(name, n):
    H = pattern(name)
    a = alpha_plus_seq(H)[0]
    s = a * n // H.n
    g = space_barrier(H, 1, n).graph
    for emb in iter_embeddings(g, H):
        assert sum(1 for v in emb.image if v <= s + 1) <= a


def test_divisibility_cut():
    assert divisibility_cut(4, 8) == 3
    assert divisibility_cut(4, 12) == 6
    assert divisibility_cut(3, 6) == 2


@pytest.mark.parametrize("n, k, exact", [(8, 3, 2), (12, 6, 5), (16, 7, 6)])
def test_divisibility_barrier_p_a14(n, k, exact):
    cert = divisibility_barrier(pattern("P_A14"), n)
    g = cert.graph
    assert _is_clique(g, range(1, k + 1)) and _is_clique(g, range(k + 1, n + 1))
    assert not any(g.has_edge(u, v) for u in range(1, k + 1) for v in range(k + 1, n + 1))
    assert cert.claimed_min_degree == exact
    assert cert.formula_value == n // 2 - 2
    assert perfect_tiling(g, pattern("P_A14")).outcome is Outcome.NO_TILING


def test_divisibility_barrier_213():
    cert = divisibility_barrier(pattern("213"), 6)
    assert cert.graph.edges == OrderedGraph.complete(2).edges | {
        (i, j) for i in range(3, 7) for j in range(i + 1, 7)
    }


def test_divisibility_barrier_requires_property_b():
    with pytest.raises(PropertyBRequired):
        divisibility_barrier(pattern("P_C6"), 12)


def test_local_barrier_last_vertex():
    cert = local_barrier(pattern("P_C6m"), 12)
    g = cert.graph
    assert cert.endpoint == "last"
    assert is_independent(g, 1, 5) and is_independent(g, 6, 11)
    assert _fully_joined(g, range(1, 6), range(6, 12))
    assert g.neighbors(12) == list(range(6, 12))
    assert cert.claimed_min_degree == 6 == cert.formula_value
    assert perfect_tiling(g, pattern("P_C6m")).outcome is Outcome.NO_TILING


def test_local_barrier_first_vertex_is_mirror():
    cert = local_barrier(pattern("P_C6"), 12)
    assert cert.endpoint == "first"
    assert cert.graph == mirror(local_barrier(pattern("P_C6m"), 12).graph)
    assert perfect_tiling(cert.graph, pattern("P_C6")).outcome is Outcome.NO_TILING


def test_local_barrier_odd_n_degree():
    # 213 has Property C at vertex 3 (s = 1, edge 12 inside [1,2])
    cert = local_barrier(pattern("213"), 9)
    assert cert.claimed_min_degree == 4 == 9 // 2
    assert perfect_tiling(cert.graph, pattern("213")).outcome is Outcome.NO_TILING


def test_local_barrier_requires_property_c():
    with pytest.raises(PropertyCRequired):
        local_barrier(pattern("P_A14"), 8)
