from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given

from ordtile.catalog import pattern
from ordtile.core import OrderedGraph, mirror
from ordtile.naive import min_independent_intervals
from ordtile.profile import (
    AlphaStarUndefined,
    Case,
    alpha_minus_seq,
    alpha_plus_seq,
    alpha_star,
    compute_profile,
)

from .conftest import ordered_graphs

F = Fraction


@pytest.mark.parametrize(
    "name, plus, minus",
    [("213", [1, 3], [2, 1]), ("P_C6", [4, 6], [3, 1]), ("K2", [1, 2], [2, 1])],
)
def test_alpha_sequences(name, plus, minus):
    H = pattern(name)
    assert alpha_plus_seq(H) == plus
    assert alpha_minus_seq(H) == minus


def test_alpha_sequences_edgeless():
    assert alpha_plus_seq(OrderedGraph.empty(5)) == [5]
    assert alpha_minus_seq(OrderedGraph.empty(5)) == [1]


# Hand-derived from the definitions; see the per-row notes.
PROFILE_TABLE = [
    # 213: [1,1] indep, [1,2] not -> a+1 = 1; [2,3] indep -> a-1 = 2; min(1/3, 2/3)
    ("213", F(1, 3), False, True, Case.I, F(2, 3)),
    # K2: a+1 = 1, a-1 = 2 -> 1/2; [1,2] has the edge, so no Property A
    ("K2", F(1, 2), False, True, Case.I, F(1, 2)),
    # P_A14: [1,3] and [2,4] independent -> a* = 3/4; edge 14 crosses every cut
    ("P_A14", F(3, 4), True, True, Case.II, F(1, 2)),
    # P_B23: a+1 = 2, a-1 = 3 -> min(2/5, 3/5)
    ("P_B23", F(2, 5), False, False, Case.I, F(3, 5)),
    # P_C6: a+1 = 4, a-1 = 3 -> 2/3; cut [1,5]|[6] uncrossed; l = 5 and 25 lies in [2,5]
    ("P_C6", F(2, 3), True, False, Case.III, F(1, 2)),
    # P_D6: same alphas; both endpoints isolated
    ("P_D6", F(2, 3), True, False, Case.IV, F(1, 3)),
]


@pytest.mark.parametrize("name, a_star, prop_a, prop_b, case, coeff", PROFILE_TABLE)
def test_profile_table(name, a_star, prop_a, prop_b, case, coeff):
    prof = compute_profile(pattern(name))
    assert prof.alpha_star == a_star
    assert prof.prop_a is prop_a
    assert prof.prop_b is prop_b
    assert prof.case is case
    assert prof.threshold_coeff == coeff


def test_p_c6_endpoint_details():
    prof = compute_profile(pattern("P_C6"))
    assert prof.l == 5 and prof.s == 0
    assert prof.prop_c_first and not prof.prop_c_last


def test_isolated_endpoint_conventions():
    prof = compute_profile(pattern("P_D6"))
    assert prof.s == 0 and prof.l == 7
    assert not prof.prop_c_first and not prof.prop_c_last


def test_mirrored_c6_has_property_c_at_last_vertex():
    prof = compute_profile(pattern("P_C6m"))
    assert prof.s == 2 and prof.prop_c_last and prof.case is Case.III


def test_edgeless_is_unclassified():
    prof = compute_profile(OrderedGraph.empty(4))
    assert prof.chi_lt == 1
    assert prof.case is Case.UNCLASSIFIED
    assert prof.alpha_star is None and prof.threshold_coeff is None
    with pytest.raises(AlphaStarUndefined):
        alpha_star(OrderedGraph.empty(4))


def test_chi_three_reports_parameters_only():
    path = OrderedGraph.from_edges(3, [(1, 2), (2, 3)])
    prof = compute_profile(path)
    assert prof.chi_lt == 3
    assert prof.case is Case.UNCLASSIFIED and prof.threshold_coeff is None
    # a+ = [1,2,3], a- = [3,2,1]: min over ell=1,2 of {1/3, 1/3, 2/6, 2/6}
    assert prof.alpha_star == F(1, 3)
    assert prof.lower_bound_coeff == F(2, 3)


@given(ordered_graphs(min_n=1, max_n=10))
def test_mirror_duality(H):
    h = H.n
    assert alpha_plus_seq(mirror(H)) == [h + 1 - x for x in alpha_minus_seq(H)]
    prof, mprof = compute_profile(H), compute_profile(mirror(H))
    assert prof.alpha_star == mprof.alpha_star
    assert prof.case == mprof.case


@given(ordered_graphs(min_n=1, max_n=10))
def test_sequence_invariants(H):
    plus, minus = alpha_plus_seq(H), alpha_minus_seq(H)
    assert len(plus) == len(minus)
    assert all(a < b for a, b in zip(plus, plus[1:])) and plus[-1] == H.n and plus[0] > 0
    assert all(a > b for a, b in zip(minus, minus[1:])) and minus[-1] == 1 and minus[0] <= H.n


def _all_patterns(h):
    pairs = list(combinations(range(1, h + 1), 2))
    for mask in range(1 << len(pairs)):
        yield OrderedGraph.from_edges(h, [e for k, e in enumerate(pairs) if mask >> k & 1])


@pytest.mark.parametrize("h", [1, 2, 3, 4, 5])
def test_greedy_chi_matches_exhaustive_partition(h):
    for H in _all_patterns(h):
        assert len(alpha_plus_seq(H)) == min_independent_intervals(H)


def test_alpha_star_matches_definition_formula():
    # alpha* = min over ell of both normalized interval lengths, recomputed by hand
    for H in _all_patterns(5):
        plus, minus = alpha_plus_seq(H), alpha_minus_seq(H)
        if len(plus) < 2:
            continue
        h = H.n
        vals = []
        for ell in range(1, len(plus)):
            vals += [F(plus[ell - 1], ell * h), F(h - minus[ell - 1] + 1, ell * h)]
        assert alpha_star(H) == min(vals)


@pytest.mark.parametrize("h", [2, 3, 4, 5, 6])
def test_classification_invariants_exhaustive(h):
    half = F(1, 2)
    for H in _all_patterns(h):
        prof = compute_profile(H)
        if prof.chi_lt >= 2 and (H.has_edge(1, 2) or H.has_edge(h - 1, h)):
            assert prof.alpha_star == F(1, h)
        if prof.chi_lt != 2:
            assert prof.case is Case.UNCLASSIFIED
            continue
        assert prof.prop_a == (prof.alpha_star > half)
        assert prof.threshold_coeff in (1 - prof.alpha_star, half)
        if prof.threshold_coeff == half:
            assert prof.prop_a or prof.alpha_star == half
