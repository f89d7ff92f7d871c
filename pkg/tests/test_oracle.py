import pytest
from hypothesis import given, strategies as st

from traceideals import colon, trace
from traceideals import oracle as orc
from traceideals.battery import ORACLE_OPS, oracle_grid, oracle_random
from traceideals.enumeration import ideals_between, enumerate_trace_ideals

from conftest import cr_ideals, ideal, relative_ideals, semigroups, sg


def test_window_set_basics():
    A = orc.WindowSet.from_members([3, 6, 7], 8)
    assert A.members() == [3, 6, 7]
    assert 3 in A and 4 not in A and 100 in A and 2 not in A
    assert A.canonical().lo == 3 and A.min == 3
    assert A == orc.WindowSet.from_members([3, 6, 7, 8, 9], 10)


def test_sieve():
    S = orc.sieve_semigroup([3, 4])
    assert [x for x in range(10) if x not in S] == [1, 2, 5]
    assert orc.conductor_of(S) == 6
    with pytest.raises(ValueError):
        orc.sieve_semigroup([4, 6])


def test_dual_seven_ten():
    Hw = orc.sieve_semigroup([7, 10])
    D = orc.oracle_dual(Hw, orc.oracle_ideal(Hw, [14, 50]))
    assert D == orc.oracle_ideal(Hw, [0, 6])


def test_colon_of_semigroup_by_itself():
    Hw = orc.sieve_semigroup([5, 6, 7])
    assert orc.oracle_colon(Hw, Hw) == Hw


def test_subtrace_three_four():
    Hw = orc.sieve_semigroup([3, 4])
    sub = orc.oracle_subtrace(Hw, orc.oracle_ideal(Hw, [3, 8]))
    assert sub == orc.oracle_ideal(Hw, [6, 7, 8])


def test_star_with_whole_is_identity():
    H = sg(4, 5, 6)
    Hw = orc.sieve_semigroup(H.generators)
    for E in enumerate_trace_ideals(H):
        X = orc.window_of_ideal(E)
        assert orc.oracle_star(Hw, X, Hw) == X


def test_trace_of_every_ideal_five_six_seven():
    H = sg(5, 6, 7)
    Hw = orc.sieve_semigroup(H.generators)
    for E in ideals_between(H):
        got = orc.window_of_ideal(trace(E))
        assert orc.oracle_trace(Hw, orc.window_of_ideal(E)) == got


def test_narrow_window_rejected():
    E = ideal(sg(3, 4), 3, 8)
    with pytest.raises(orc.WindowTooNarrow):
        orc.window_of_ideal(E, lo=3, hi=4)
    with pytest.raises(orc.WindowTooNarrow):
        orc.window_of_ideal(E, lo=4)
    partial = orc.WindowSet(0, 5, 0b10001, tail_all_in=False)
    with pytest.raises(orc.WindowTooNarrow):
        orc.oracle_colon(partial, partial)


@given(st.data())
def test_colon_matches(data):
    H = data.draw(semigroups())
    E, F = data.draw(relative_ideals(H)), data.draw(relative_ideals(H))
    got = orc.oracle_colon(orc.window_of_ideal(E), orc.window_of_ideal(F))
    assert got == orc.window_of_ideal(colon(E, F))


@given(st.data())
def test_subtrace_union_is_trace(data):
    H = data.draw(semigroups(max_gen=8).filter(lambda H: H.non_gap_count <= 10))
    E = data.draw(cr_ideals(H))
    Hw = orc.sieve_semigroup(H.generators)
    S = orc.oracle_subtrace(Hw, orc.window_of_ideal(E))
    assert orc.oracle_is_trace(Hw, S) and S.issubset(Hw)


def test_grid_small():
    summary = oracle_grid(genus_max=3).summary()
    assert {r.name for r in summary} == set(ORACLE_OPS)
    assert all(r.passed and r.checked for r in summary)


def test_random_small():
    summary = oracle_random(cases=200, genus_max=8, seed=1).summary()
    assert all(r.passed for r in summary)
