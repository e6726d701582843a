from itertools import product

import pytest
from planarcount.graphs import (
    count_bounded_lis,
    count_bounded_matching,
    planar_matching_profile,
)
from planarcount.perms import iter_permutations, perm_sign
from planarcount.walks import (
    BudgetExceeded,
    Walk,
    count_all_walks_signed,
    crossing_pairing,
    endpoint,
    in_restricted_family,
    in_reversed_family,
    is_profile_walk,
    is_toeplitz_point,
    iter_profile_walks,
    iter_region_walks,
    iter_restricted_walks,
    iter_toeplitz,
    nonprofile_involution,
    occurrence_profile,
    offregion_involution,
    profile_violations,
    profile_walk,
    reverse_negative_half,
    signed_walk_sum,
    stays_in_dominance_region,
    toeplitz_point,
    translated_exit,
)

WORKED_LIFT = (6, 4, 2, 1, 5, 3)
WORKED_WALK = Walk.from_text("111122|112121")


def all_representative_walks(m, d):
    """Every representative walk with m positive and m negative steps."""
    values = range(1, d + 1)
    for pos in product(values, repeat=m):
        for neg in product(values, repeat=m):
            yield Walk(d=d, pos=pos, neg=neg)


# ------------------------------------------------------------------- basics


def test_walk_text_round_trip():
    assert WORKED_WALK.pos == (1, 1, 1, 1, 2, 2)
    assert WORKED_WALK.neg == (1, 1, 2, 1, 2, 1)
    assert WORKED_WALK.to_text() == "111122|112121"
    big = Walk(d=11, pos=(1, 11), neg=(2,))
    assert Walk.from_text(big.to_text(), d=11) == big
    with pytest.raises(ValueError):
        Walk.from_text("11|2|1")
    with pytest.raises(ValueError):
        Walk(d=2, pos=(3,), neg=())


def test_toeplitz_points():
    assert toeplitz_point((1, 2, 3)) == (0, 0, 0)
    assert toeplitz_point((2, 1)) == (-1, 1)
    assert toeplitz_point((2, 3, 1)) == (-1, -1, 2)
    points = list(iter_toeplitz(3))
    assert len(points) == 6
    assert sum(sign for _, _, sign in points) == 0


def test_endpoint_examples():
    assert endpoint(Walk(d=2, pos=(), neg=())) == (0, 0)
    assert endpoint(WORKED_WALK) == (0, 0)
    assert endpoint(Walk(d=2, pos=(1, 2), neg=(2,))) == (1, 0)


def test_dominance_region():
    assert stays_in_dominance_region(Walk(d=2, pos=(1, 1, 2, 1), neg=()))
    assert not stays_in_dominance_region(Walk(d=2, pos=(2,), neg=()))
    assert stays_in_dominance_region(Walk(d=3, pos=(), neg=()))


def test_reverse_negative_half():
    w = Walk(d=2, pos=(1, 1, 2, 1), neg=(1, 1, 2, 1))
    assert reverse_negative_half(w).neg == (1, 2, 1, 1)
    assert reverse_negative_half(reverse_negative_half(w)) == w
    pal = Walk(d=2, pos=(1, 2), neg=(1, 2, 1))
    assert reverse_negative_half(pal).neg == (1, 2, 1)
    for w in all_representative_walks(3, 2):
        assert reverse_negative_half(reverse_negative_half(w)) == w


# ------------------------------------------------------- restricted families


def test_restricted_walks_single_step_blocks():
    for d in (1, 2, 3):
        walks = list(iter_restricted_walks(1, 1, d, tuple(range(1, d + 1))))
        assert sorted(w.pos for w in walks) == [(v,) for v in range(1, d + 1)]
        for w in walks:
            assert w.pos == w.neg
    with pytest.raises(ValueError):  # endpoint permutation of the wrong length
        list(iter_restricted_walks(2, 1, 3, (2, 1)))


def test_worked_walk_is_in_matching_family():
    assert in_restricted_family(WORKED_WALK, 2, "matching")
    assert endpoint(WORKED_WALK) == (0, 0)
    family = list(iter_restricted_walks(3, 2, 2, (1, 2)))
    assert WORKED_WALK in family


def test_restricted_walks_one_block_pair():
    walks = list(iter_restricted_walks(1, 2, 2, (1, 2)))
    assert {w.to_text() for w in walks} == {"11|11", "21|21", "22|22"}


def test_subgraph_walks_examples():
    assert list(iter_restricted_walks(1, 2, 1, (1,), "subgraph")) == []
    walks = list(iter_restricted_walks(1, 2, 2, (1, 2), "subgraph"))
    assert [w.to_text() for w in walks] == ["12|12"]


@pytest.mark.parametrize("n,d", [(2, 2), (3, 2), (2, 3)])
def test_one_regular_families_agree(n, d):
    for pi, _, _ in iter_toeplitz(d, 2 * n):
        a = list(iter_restricted_walks(n, 1, d, pi, "matching"))
        b = list(iter_restricted_walks(n, 1, d, pi, "subgraph"))
        assert a == b


@pytest.mark.parametrize("n,r,d", [(2, 1, 2), (1, 2, 2), (2, 2, 2), (3, 1, 3)])
def test_enumerated_walks_against_raw_filter(n, r, d):
    m = n * r
    for pi, point, _ in iter_toeplitz(d, 2 * m):
        expected = sorted(
            (w.pos, w.neg)
            for w in all_representative_walks(m, d)
            if endpoint(w) == point and in_restricted_family(w, r, "matching")
        )
        got = sorted(
            (w.pos, w.neg) for w in iter_restricted_walks(n, r, d, pi, "matching")
        )
        assert got == expected


# ------------------------------------------------------------- signed sums


def test_signed_sum_examples():
    assert signed_walk_sum(2, 2, 2, "matching", "enumerate") == 3
    assert signed_walk_sum(2, 2, 1, "matching", "enumerate") == 1
    assert signed_walk_sum(2, 2, 2, "subgraph", "enumerate") == 1
    assert signed_walk_sum(2, 2, 3, "subgraph", "dp") == 2


@pytest.mark.parametrize("n,r", [(1, 1), (2, 1), (3, 1), (1, 2), (2, 2), (1, 3), (5, 1), (4, 1)])
def test_signed_sum_counters_agree(n, r):
    for d in range(0, min(n * r, 4) + 1):
        for kind in ("matching", "subgraph"):
            assert signed_walk_sum(n, r, d, kind, "enumerate") == signed_walk_sum(
                n, r, d, kind, "dp"
            )


def test_signed_sum_against_direct_family_count():
    # fold |family| per endpoint directly from the enumerator
    for n, r, d in [(2, 1, 2), (1, 2, 2), (2, 2, 2), (2, 2, 1)]:
        total = 0
        for pi, _, sign in iter_toeplitz(d, 2 * n * r):
            total += sign * sum(1 for _ in iter_restricted_walks(n, r, d, pi))
        assert total == signed_walk_sum(n, r, d, "matching", "dp")


def test_signed_sum_budget_refusal():
    with pytest.raises(BudgetExceeded):
        signed_walk_sum(8, 1, 8, "matching", "enumerate", budget=10)


def test_join_fast_path_matches_fallback(monkeypatch):
    import planarcount.walks as walks_mod

    cases = [(4, 1, 4), (2, 2, 4), (5, 1, 3), (3, 2, 3)]
    with_numpy = [
        walks_mod.signed_walk_sum(n, r, d, "matching", "dp") for n, r, d in cases
    ]
    monkeypatch.setattr(walks_mod, "_np", None)
    walks_mod._half_profiles_dp.cache_clear()
    without_numpy = [
        walks_mod.signed_walk_sum(n, r, d, "matching", "dp") for n, r, d in cases
    ]
    assert with_numpy == without_numpy


@pytest.mark.parametrize("n,r,d", [(2, 1, 2), (3, 1, 3), (1, 2, 2), (2, 2, 3), (4, 1, 4), (5, 1, 3)])
def test_dp_counts_match_enumerator_per_endpoint(n, r, d):
    from planarcount.walks import _half_profiles_dp

    profiles = _half_profiles_dp(n, r, d, "matching")
    for pi, point, _ in iter_toeplitz(d, 2 * n * r):
        expected = sum(1 for _ in iter_restricted_walks(n, r, d, pi, "matching"))
        joined = 0
        for hist, ways in profiles.items():
            other = tuple(h - t for h, t in zip(hist, point))
            if all(x >= 0 for x in other):
                joined += ways * profiles.get(other, 0)
        assert joined == expected, (pi, joined, expected)


def test_all_walks_signed_small():
    # length-2 walks in d=2: four closed, two to the transposition point
    assert count_all_walks_signed(1, 2) == 2
    for d in (1, 2, 3):
        assert count_all_walks_signed(1, d) == 2 if d >= 1 else 0
    assert count_all_walks_signed(0, 2) == 1


# ------------------------------------------------------------ profile walks


def test_profile_walk_examples():
    assert profile_walk(WORKED_LIFT).to_text() == "111122|112121"
    assert profile_walk((2, 1)).to_text() == "11|11"
    assert profile_walk((1, 2, 3)).to_text() == "123|123"


def test_crossing_pairing_worked_example():
    qc = crossing_pairing(Walk.from_text("112122|122122"))
    assert qc.pairs == ((1, 4), (2, 1), (3, 6), (5, 5), (6, 3))
    assert qc.unmatched_left() == (4,)
    assert qc.unmatched_right() == (2,)
    assert not qc.is_complete


def test_crossing_pairing_small():
    qc = crossing_pairing(Walk.from_text("11|11"))
    assert qc.as_permutation() == (2, 1)


@pytest.mark.parametrize("m", range(1, 9))
def test_crossing_inverts_profile_walk(m):
    for perm in iter_permutations(m):
        w = profile_walk(perm)
        assert crossing_pairing(w).as_permutation() == perm


@pytest.mark.parametrize("m,d", [(2, 2), (3, 2), (2, 3), (3, 3), (4, 3), (4, 4)])
def test_crossing_complete_iff_closed(m, d):
    origin = (0,) * d
    for w in all_representative_walks(m, d):
        assert crossing_pairing(w).is_complete == (endpoint(w) == origin)


@pytest.mark.parametrize("m,d", [(2, 2), (3, 2), (3, 3)])
def test_positive_steps_agree_iff_walks_equal(m, d):
    origin = (0,) * d
    for w in all_representative_walks(m, d):
        if endpoint(w) != origin:
            continue
        again = profile_walk(crossing_pairing(w).as_permutation(), d=d)
        assert (again.pos == w.pos) == (again == w)


# -------------------------------------------------------------- condition on k/l


def test_occurrence_profile_table():
    prof = occurrence_profile(WORKED_WALK)
    assert prof.same == (1, 2, 3, 4, 1, 2)
    assert prof.lower == (0, 0, 0, 0, 4, 4)
    assert occurrence_profile(Walk.from_text("12|21")) == ((1, 1), (0, 1))


def test_profile_condition_examples():
    assert is_profile_walk(WORKED_WALK)
    assert not is_profile_walk(Walk.from_text("12|21"))
    assert is_profile_walk(Walk.from_text("1|1"))
    assert profile_violations(Walk.from_text("12|21")) == (2,)


@pytest.mark.parametrize("m,d", [(2, 2), (3, 2), (3, 3), (4, 2)])
def test_profile_condition_characterizes_images(m, d):
    # among Toeplitz-ending walks the positional test must accept exactly
    # the prefix-profile walks; profiles are always closed
    images = {
        profile_walk(perm, d=d)
        for perm in iter_permutations(m)
        if planar_matching_profile(perm).largest <= d
    }
    for w in all_representative_walks(m, d):
        pairing = crossing_pairing(w)
        truth = False
        if pairing.is_complete:
            prof = planar_matching_profile(pairing.as_permutation())
            truth = prof.left == w.pos and prof.right == w.neg
        if is_toeplitz_point(endpoint(w)):
            assert is_profile_walk(w) == truth, w.to_text()
        else:
            assert not truth, w.to_text()
        if truth:
            assert w in images


# ----------------------------------------------------------- involution (second)


def test_nonprofile_involution_hand_example():
    w = Walk.from_text("12|21")
    out = nonprofile_involution(w, 1)
    assert out.to_text() == "12|11"
    assert endpoint(out) == (-1, 1)
    assert nonprofile_involution(out, 1) == w


def test_nonprofile_involution_rejects_profiles():
    with pytest.raises(ValueError):
        nonprofile_involution(WORKED_WALK, 2)
    with pytest.raises(ValueError):
        nonprofile_involution(Walk.from_text("12|12"), 1)
    with pytest.raises(ValueError):   # endpoint not a Toeplitz point
        nonprofile_involution(Walk.from_text("21|22"), 1)


def toeplitz_sign_of(w):
    point = endpoint(w)
    pi = tuple(j - point[j - 1] for j in range(1, w.d + 1))
    return perm_sign(pi)


@pytest.mark.parametrize("n,r,d", [(2, 1, 2), (3, 1, 2), (1, 2, 2), (2, 2, 2), (1, 3, 3), (2, 2, 3)])
def test_nonprofile_involution_is_sign_reversing(n, r, d):
    domain = set()
    for pi, _, _ in iter_toeplitz(d, 2 * n * r):
        for w in iter_restricted_walks(n, r, d, pi, "matching"):
            if profile_violations(w):
                domain.add(w)
    assert sum(toeplitz_sign_of(w) for w in domain) == 0
    for w in domain:
        out = nonprofile_involution(w, r)
        assert out in domain
        assert out != w
        assert in_restricted_family(out, r, "matching")
        assert toeplitz_sign_of(out) == -toeplitz_sign_of(w)
        assert profile_violations(out)[0] == profile_violations(w)[0]
        assert nonprofile_involution(out, r) == w


# ------------------------------------------------------------ involution (first)


def test_translated_exit_examples():
    # walk 2|2 in d=2: from start (1,0) the first step reaches (1,1)
    w = Walk(d=2, pos=(2,), neg=(2,))
    assert translated_exit(w) == (1, 1)
    assert translated_exit(Walk(d=2, pos=(1,), neg=(1,))) is None
    tilde = reverse_negative_half(WORKED_WALK)
    assert translated_exit(tilde) is None  # corresponds to a real graph


def test_offregion_involution_hand_example():
    w = Walk(d=2, pos=(2,), neg=(2,))
    out = offregion_involution(w, 1)
    assert out == Walk(d=2, pos=(2,), neg=(1,))
    assert endpoint(out) == (-1, 1)
    assert offregion_involution(out, 1) == w
    with pytest.raises(ValueError):
        offregion_involution(Walk(d=2, pos=(1,), neg=(1,)), 1)


@pytest.mark.parametrize("n,r,d", [(2, 1, 2), (3, 1, 2), (1, 2, 2), (2, 2, 2), (1, 3, 3), (4, 1, 2), (2, 2, 3)])
def test_offregion_involution_is_sign_reversing(n, r, d):
    domain = set()
    for pi, _, _ in iter_toeplitz(d, 2 * n * r):
        for w in iter_restricted_walks(n, r, d, pi, "matching"):
            wt = reverse_negative_half(w)
            if translated_exit(wt) is not None:
                domain.add(wt)
    assert sum(toeplitz_sign_of(w) for w in domain) == 0
    for w in domain:
        out = offregion_involution(w, r)
        assert out in domain
        assert out != w
        assert in_reversed_family(out, r)
        assert toeplitz_sign_of(out) == -toeplitz_sign_of(w)
        assert translated_exit(out) == translated_exit(w)
        assert offregion_involution(out, r) == w


# ------------------------------------------------------- audit-grade enumerators


@pytest.mark.parametrize("n,r,d", [(2, 1, 2), (3, 1, 3), (1, 2, 2), (2, 2, 2), (2, 2, 4), (1, 3, 3)])
def test_profile_walk_enumerator_against_filter(n, r, d):
    m = n * r
    expected = set()
    for pi, point, _ in iter_toeplitz(d, 2 * m):
        for w in iter_restricted_walks(n, r, d, pi, "matching"):
            if is_profile_walk(w):
                expected.add(w)
    got = set(iter_profile_walks(n, r, d))
    assert got == expected


@pytest.mark.parametrize("n,r,d", [(2, 1, 2), (3, 1, 3), (1, 2, 2), (2, 2, 2), (2, 2, 4)])
def test_region_walk_enumerator_against_filter(n, r, d):
    m = n * r
    expected = set()
    for w in iter_restricted_walks(n, r, d, tuple(range(1, d + 1)), "matching"):
        wt = reverse_negative_half(w)
        if stays_in_dominance_region(wt):
            expected.add(wt)
    got = set(iter_region_walks(n, r, d))
    assert got == expected


def test_profile_enumerator_counts_match_graph_counts():
    for n, r in [(2, 2), (3, 1), (1, 3), (4, 1)]:
        for d in range(n * r + 1):
            assert sum(1 for _ in iter_profile_walks(n, r, d)) == (
                count_bounded_matching(n, r, d)
            )


def test_enumerator_budgets():
    with pytest.raises(BudgetExceeded):
        list(iter_profile_walks(3, 2, 4, budget=5))
    with pytest.raises(BudgetExceeded):
        list(iter_region_walks(3, 2, 4, budget=5))


# --------------------------------------------------------------- lis linkage


@pytest.mark.parametrize("m", range(0, 6))
def test_one_regular_signed_sum_counts_lis(m):
    for d in range(0, m + 2):
        assert signed_walk_sum(m, 1, d, "matching", "dp") == count_bounded_lis(m, d)
