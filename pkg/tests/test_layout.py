"""Arrangement evaluation, bounds, cross-matching cost, and certification."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bclayout import (
    Graph,
    Leaf,
    LinearArrangement,
    SplitMix64,
    arrangement_cost,
    bc_arrangement,
    certify,
    cross_matching_cost,
    cut_profile,
    evaluate_arrangement,
    hypercube,
    locally_twisted,
    lower_bound_closed,
    lower_bound_generic,
    mobius,
    random_arrangement,
    random_bc,
)

C4 = Graph(4, [(0, 1), (2, 3), (0, 2), (1, 3)])
K2 = Graph(2, [(0, 1)])


def small_graphs(draw):
    n = draw(st.integers(2, 7))
    possible = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.sets(st.sampled_from(possible)))
    return Graph(n, edges)


graphs = st.composite(small_graphs)()
seeds = st.integers(0, 2**64 - 1)


# ---------------------------------------------------- LinearArrangement


def test_arrangement_validation():
    LinearArrangement([2, 1, 3])
    with pytest.raises(ValueError):
        LinearArrangement([0, 1, 2])  # positions are 1-based
    with pytest.raises(ValueError):
        LinearArrangement([1, 1, 3])
    with pytest.raises(ValueError):
        LinearArrangement([])


def test_arrangement_helpers():
    f = LinearArrangement.identity(4)
    assert f.to_list() == [1, 2, 3, 4]
    assert f.position_of(2) == 3
    assert f.reverse().to_list() == [4, 3, 2, 1]
    assert f.reverse().reverse() == f
    assert len(f) == 4


# ---------------------------------------------------------------- cost


def test_cost_examples():
    assert arrangement_cost(K2, LinearArrangement([1, 2])) == 1
    # natural order on the identity-composed four-cycle: spans 1, 1, 2, 2
    assert arrangement_cost(C4, LinearArrangement.identity(4)) == 6


def test_cost_size_mismatch():
    with pytest.raises(ValueError):
        arrangement_cost(C4, LinearArrangement([1, 2]))


def test_cut_profile_examples():
    assert cut_profile(C4, LinearArrangement.identity(4)).counts == (2, 2, 2)
    q3 = hypercube(3)
    profile = cut_profile(q3.graph, bc_arrangement(q3.tree))
    assert profile.counts == (3, 4, 5, 4, 5, 4, 3)
    assert profile.total == 28


def test_cut_profile_no_edges():
    g = Graph(3)
    assert cut_profile(g, LinearArrangement.identity(3)).counts == (0, 0)


@given(graphs, seeds)
@settings(max_examples=60, deadline=None)
def test_cut_totals_equal_cost(graph, seed):
    f = random_arrangement(graph.vertex_count, SplitMix64(seed))
    assert cut_profile(graph, f).total == arrangement_cost(graph, f)


@given(graphs, seeds)
@settings(max_examples=60, deadline=None)
def test_reversal_preserves_cost(graph, seed):
    f = random_arrangement(graph.vertex_count, SplitMix64(seed))
    assert arrangement_cost(graph, f.reverse()) == arrangement_cost(graph, f)


# ------------------------------------------------------ bc_arrangement


def test_bc_arrangement_of_leaf():
    assert bc_arrangement(Leaf()).to_list() == [1, 2]


@pytest.mark.parametrize("n", range(1, 9))
def test_bc_arrangement_is_identity_for_every_tree(n):
    for bc in (
        hypercube(n),
        locally_twisted(n),
        mobius(n, 0),
        mobius(n, 1),
        random_bc(n, 5),
    ):
        assert bc_arrangement(bc.tree) == LinearArrangement.identity(1 << n)


def test_bc_arrangement_cost_dim2():
    bc = hypercube(2)
    assert arrangement_cost(bc.graph, bc_arrangement(bc.tree)) == 6


# --------------------------------------------------------- lower bounds


def test_lower_bound_closed_values():
    assert lower_bound_closed(1) == 1
    assert lower_bound_closed(2) == 6
    assert lower_bound_closed(3) == 28


def test_lower_bound_generic_values():
    assert lower_bound_generic(K2) == 1
    assert lower_bound_generic(C4) == 6
    assert lower_bound_generic(hypercube(3).graph) == lower_bound_closed(3) == 28


@given(graphs, seeds)
@settings(max_examples=80, deadline=None)
def test_any_arrangement_respects_generic_bound(graph, seed):
    f = random_arrangement(graph.vertex_count, SplitMix64(seed))
    assert arrangement_cost(graph, f) >= lower_bound_generic(graph)


# ------------------------------------------------- cross matching cost


def test_cross_matching_dim2():
    assert cross_matching_cost(2, (0, 1)) == 4  # |3-1| + |4-2|
    assert cross_matching_cost(2, (1, 0)) == 4  # |4-1| + |3-2|


def test_cross_matching_dim3_samples():
    rng = SplitMix64(3)
    for _ in range(20):
        assert cross_matching_cost(3, rng.permutation(4)) == 16


@given(st.integers(1, 8), seeds)
@settings(max_examples=80)
def test_cross_matching_is_permutation_independent(n, seed):
    phi = SplitMix64(seed).permutation(1 << (n - 1))
    assert cross_matching_cost(n, phi) == 1 << (2 * n - 2)


def test_cross_matching_rejects_non_permutation():
    with pytest.raises(ValueError):
        cross_matching_cost(2, (0, 0))


# -------------------------------------------------------------- certify


def test_certify_hypercube():
    report = certify(hypercube(3))
    assert report.cost == 28
    assert report.lower_bound == 28
    assert report.closed_form == 28
    assert report.optimal
    assert report.cut_profile.counts == (3, 4, 5, 4, 5, 4, 3)


def test_certify_examples():
    assert certify(random_bc(5, 42)).cost == 496
    assert certify(random_bc(5, 42)).optimal
    assert certify(mobius(4, 1)).cost == 120
    assert certify(mobius(4, 1)).optimal


def test_certify_spot_dimensions():
    assert certify(hypercube(10)).cost == 523776
    assert certify(locally_twisted(12)).cost == (1 << 11) * ((1 << 12) - 1)


@pytest.mark.parametrize("n", (15, 16))
def test_every_prefix_of_the_tree_arrangement_is_optimal(n):
    # the cut profile meets the per-size boundary minimum entrywise
    from bclayout import edge_boundary

    for bc in (hypercube(n), mobius(n, 1)):
        counts = cut_profile(bc.graph, bc_arrangement(bc.tree)).counts
        assert all(
            counts[m - 1] == edge_boundary(n, m) for m in range(1, 1 << n)
        )


# -------------------------------------------------- evaluate_arrangement


def test_evaluate_generic_optimal():
    report = evaluate_arrangement(C4, LinearArrangement.identity(4))
    assert report.cost == 6
    assert report.lower_bound == 6
    assert report.closed_form is None
    assert report.optimal


def test_evaluate_generic_suboptimal():
    bad = LinearArrangement([1, 3, 4, 2])  # costs 8 on the four-cycle
    report = evaluate_arrangement(C4, bad)
    assert report.cost > report.lower_bound
    assert not report.optimal


def test_evaluate_with_witness_uses_closed_bound():
    bc = hypercube(4)
    report = evaluate_arrangement(bc.graph, bc_arrangement(bc.tree), witness=bc)
    assert report.lower_bound == 120
    assert report.closed_form == 120
    assert report.optimal
