"""Coalition predicates and enumeration."""

import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from privcoal import (
    CoalitionQuery,
    ParameterError,
    PrimeField,
    enumerate_tracks,
    extension_condition,
    is_minimal_privileged,
    is_privileged,
    is_unextended,
    minimal_privileged_coalitions,
    privileged_coalitions,
    privileged_rank_oracle,
    valid_lengths,
)

from oracles import determines_coefficient, elem_sym_subsets, minimal_by_all_subtracks

F7 = PrimeField(7)
F13 = PrimeField(13)


def test_valid_lengths():
    assert valid_lengths(7, 1) == [6]
    assert valid_lengths(7, 2) == [5, 6]
    assert valid_lengths(7, 3) == [4, 5, 6]
    assert valid_lengths(7, 4) == [5, 6]
    assert valid_lengths(7, 5) == [6]
    assert valid_lengths(5, 2) == [3, 4]


def test_enumerate_tracks():
    assert list(enumerate_tracks(2, 3)) == [(1, 2), (1, 3), (2, 3)]
    assert list(enumerate_tracks(3, 3)) == [(1, 2, 3)]
    tracks = list(enumerate_tracks(4, 13))
    assert len(tracks) == math.comb(13, 4) == 715
    assert tracks[0] == (1, 2, 3, 4)
    assert tracks[-1] == (10, 11, 12, 13)
    with pytest.raises(ParameterError):
        list(enumerate_tracks(4, 3))
    with pytest.raises(ParameterError):
        list(enumerate_tracks(0, 3))


def test_is_privileged_known_cases():
    assert is_privileged((1, 2, 4), 5, 2, F7)
    assert is_privileged((3, 5, 6), 5, 2, F7)
    assert is_privileged((1, 2, 5, 6), 5, 1, F7)
    assert is_privileged((1, 2, 5, 6), 5, 3, F7)
    assert not is_privileged((1, 2, 3), 5, 2, F7)  # tau_1 = 6, nonzero mod 7
    assert is_privileged((1, 5, 8, 12), 7, 3, F13)


def test_is_privileged_index_boundaries():
    for track in itertools.combinations(range(1, 7), 3):
        assert not is_privileged(track, 5, 0, F7)
        assert not is_privileged(track, 5, 4, F7)
    # outside the window [t-r, r-1] the answer is immediately False
    assert not is_privileged((1, 2, 4), 5, 1, F7)
    assert not is_privileged((1, 2, 4), 5, 3, F7)


def test_is_privileged_preconditions():
    with pytest.raises(ParameterError):
        is_privileged((1, 2, 3, 4, 5), 5, 2, F7)  # full track, not a coalition
    with pytest.raises(ParameterError):
        is_privileged((1, 2, 4), 5, 5, F7)
    with pytest.raises(ParameterError):
        is_privileged((1, 2, 4), 11, 2, F7)  # t > p


def test_rank_oracle_known_cases():
    assert privileged_rank_oracle((1, 2, 4), 5, 2, F7)
    assert not privileged_rank_oracle((1, 2, 3), 5, 2, F7)
    # superset of a privileged coalition stays privileged
    assert privileged_rank_oracle((1, 2, 4, 5), 5, 2, F7)
    # the kernel of the power matrix of (1,2,4,5) is spanned by the
    # coefficients of (x-1)(x-2)(x-4)(x-5), whose x^2 coefficient is 0 mod 7
    poly = [1]
    for root in (1, 2, 4, 5):
        poly = [(a - root * b) % 7 for a, b in
                zip(poly + [0], [0] + poly)]
    # poly is descending-power; x^2 coefficient sits at index 2 from the end
    assert poly[-3] == 0


def test_extension_condition():
    assert extension_condition((1, 2, 4), (3, 5), 5, 2, F7)
    assert extension_condition((1, 2, 4), (5, 6), 5, 2, F7)
    assert not extension_condition((1, 2, 3), (4, 5), 5, 2, F7)
    # a single-element extension reduces to tau_{t-1-j}(track) = 0
    assert extension_condition((1, 2, 5, 6), (3,), 5, 1, F7) == \
        (elem_sym_subsets((1, 2, 5, 6), 3) % 7 == 0)
    with pytest.raises(ParameterError):
        extension_condition((1, 2, 4), (4, 5), 5, 2, F7)  # overlap
    with pytest.raises(ParameterError):
        extension_condition((1, 2, 4), (3,), 5, 2, F7)  # wrong length


def test_privileged_coalitions_goldens():
    report = privileged_coalitions(
        CoalitionQuery(t=7, j=3, field=F13, n_max=13, r=4)
    )
    assert report.coalitions == ((1, 5, 8, 12), (2, 3, 10, 11), (4, 6, 7, 9))
    assert report.count == 3
    report17 = privileged_coalitions(
        CoalitionQuery(t=7, j=3, field=PrimeField(17), n_max=13, r=4)
    )
    assert report17.coalitions == ((6, 7, 10, 11),)
    report7 = privileged_coalitions(
        CoalitionQuery(t=5, j=2, field=F7, n_max=6, r=3)
    )
    assert report7.coalitions == ((1, 2, 4), (3, 5, 6))


def test_query_constraint_violations_are_named():
    with pytest.raises(ParameterError, match="t - r <= j"):
        CoalitionQuery(t=5, j=1, field=F7, n_max=6, r=3)
    with pytest.raises(ParameterError, match=r"\(t \+ 1\) / 2 <= r"):
        CoalitionQuery(t=7, j=3, field=F13, n_max=13, r=3)
    with pytest.raises(ParameterError, match="j <= r - 1"):
        CoalitionQuery(t=7, j=5, field=F13, n_max=13, r=5)
    with pytest.raises(ParameterError, match="r <= t - 1"):
        CoalitionQuery(t=5, j=2, field=F7, n_max=6, r=5)
    with pytest.raises(ParameterError, match="t <= p"):
        CoalitionQuery(t=11, j=2, field=F7, n_max=6, r=6)
    with pytest.raises(ParameterError, match="t >= 3"):
        CoalitionQuery(t=2, j=1, field=F7, n_max=6)


def test_identity_bound_clamps_to_field():
    # N = p is accepted; the residue 0 = p mod p is never a candidate
    report = privileged_coalitions(CoalitionQuery(t=7, j=3, field=F13, n_max=13, r=4))
    assert all(max(c) <= 12 for c in report.coalitions)


def test_minimal_privileged():
    assert is_minimal_privileged((1, 2, 4), 5, 2, F7)
    assert not is_minimal_privileged((1, 2, 4, 5), 5, 2, F7)  # contains (1,2,4)
    assert is_minimal_privileged((1, 5, 8, 12), 7, 3, F13)


def test_minimal_enumeration_cases():
    report = minimal_privileged_coalitions(
        CoalitionQuery(t=5, j=2, field=F7, n_max=6, r=4)
    )
    assert report.coalitions == ()
    # sweep over all lengths: only the two length-3 coalitions are minimal
    sweep = minimal_privileged_coalitions(CoalitionQuery(t=5, j=2, field=F7, n_max=6))
    assert sweep.coalitions == ((1, 2, 4), (3, 5, 6))
    assert sweep.r_min == 3 and sweep.n_min == 2
    # no (7,5)-minimal coalitions at p = 67
    report67 = minimal_privileged_coalitions(
        CoalitionQuery(t=7, j=5, field=PrimeField(67), n_max=13)
    )
    assert report67.count == 0
    assert report67.r_min is None and report67.n_min is None


def test_minimality_agrees_with_all_subtracks_oracle():
    for j in range(1, 6):
        query = CoalitionQuery(t=7, j=j, field=F13, n_max=13)
        members = set(minimal_privileged_coalitions(query).coalitions)
        for r in query.lengths:
            for track in itertools.combinations(range(1, 13), r):
                expected = minimal_by_all_subtracks(track, 7, j, 13)
                assert ((track in members) == expected), (track, j)


def test_unextended():
    assert not is_unextended((1, 2, 3, 4, 5), 5, 2, F7)  # contains (1,2,4)
    assert not is_unextended((2, 3, 4, 5, 6), 5, 1, F7)  # contains (2,3,4,5)
    with pytest.raises(ParameterError):
        is_unextended((1, 2, 4), 5, 2, F7)
    # over a huge prime no subset of 1..13 has vanishing symmetric functions,
    # so any 7-subset is unextended for every index
    big = PrimeField(22787)
    assert is_unextended((1, 2, 3, 4, 5, 6, 7), 7, 3, big)
    assert is_unextended((7, 8, 9, 10, 11, 12, 13), 7, 4, big)


GRID_PRIMES = [7, 11, 13, 17]


def test_window_test_agrees_with_rank_oracle_small_grid():
    # the full grid lives in the acceptance suite; keep a fast slice here
    for p in GRID_PRIMES:
        field = PrimeField(p)
        n = min(8, p - 1)
        for t in (4, 5):
            if t > p:
                continue
            for r in range(2, t):
                for j in range(t):
                    for track in itertools.combinations(range(1, n + 1), r):
                        assert is_privileged(track, t, j, field) == \
                            privileged_rank_oracle(track, t, j, field)


def test_rank_oracle_agrees_with_independent_elimination():
    for t, j, p, n in [(5, 2, 7, 6), (5, 1, 7, 6), (7, 3, 13, 12)]:
        field = PrimeField(p)
        for r in range(2, min(t, 6)):
            for track in itertools.combinations(range(1, n + 1), r):
                assert privileged_rank_oracle(track, t, j, field) == \
                    determines_coefficient(track, t, j, p)


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from([7, 11, 13]),
    st.integers(min_value=4, max_value=6),
    st.data(),
)
def test_superset_closure(p, t, data):
    if t > p:
        t = p
    field = PrimeField(p)
    j = data.draw(st.integers(min_value=1, max_value=t - 2))
    pool = list(range(1, min(13, p - 1) + 1))
    r = data.draw(st.integers(min_value=max(t - j, j + 1), max_value=t - 1))
    if r > len(pool):
        return
    track = tuple(sorted(data.draw(
        st.sets(st.sampled_from(pool), min_size=r, max_size=r))))
    if not is_privileged(track, t, j, field):
        return
    rest = [x for x in pool if x not in track]
    for extra in rest:
        bigger = tuple(sorted(track + (extra,)))
        if len(bigger) < t:
            assert privileged_rank_oracle(bigger, t, j, field)


def test_report_determinism_and_dict():
    query = CoalitionQuery(t=7, j=3, field=F13, n_max=13, r=4)
    a = privileged_coalitions(query)
    b = privileged_coalitions(query)
    assert a == b
    doc = a.to_dict()
    assert doc["query"] == {"t": 7, "j": 3, "r": 4, "p": 13, "N": 13}
    assert doc["count"] == 3
    assert doc["coalitions"][0] == [1, 5, 8, 12]
    assert doc["minimal"] is False
