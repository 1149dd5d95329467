import pytest
from hypothesis import given, strategies as st

from passgame import published
from passgame.compound import nim_state, one_pass_sg_oracle
from passgame.core import SGCache, sg
from passgame.games import NIM_PASS
from passgame.nimpass import gp, gp_is_one, gp_is_two, gp_is_zero, gp_n, gp_table


@pytest.mark.parametrize("x, y, v", [(0, 0, 0), (2, 4, 7), (9, 12, 2)])
def test_gp_examples(x, y, v):
    assert gp(x, y) == v


def test_gp_table_examples():
    t = gp_table(12)
    assert t[0] == [0, 2, 1, 4, 3, 6, 5, 8, 7, 10, 9, 12, 11]
    assert t[6][11] == 16
    assert gp_table(0) == [[0]]


def test_gp_table_matches_published():
    assert gp_table(12) == [list(r) for r in published.GP_TABLE_12]


def test_predicate_examples():
    assert gp_is_zero(0, 0) and gp_is_zero(5, 6) and not gp_is_zero(2, 2)
    assert gp_is_one(0, 2) and gp_is_one(7, 7) and not gp_is_one(2, 2)
    assert gp_is_two(3, 5) and gp_is_two(9, 12) and not gp_is_two(9, 10)


def test_gp_n_examples():
    assert gp_n([0]) == 0
    assert gp_n([1]) == 2
    t = gp_table(12)
    cache = SGCache()
    assert all(gp_n([x, y], cache) == t[x][y] for x in range(13) for y in range(13))


@given(st.integers(0, 40), st.integers(0, 40))
def test_gp_symmetric(x, y):
    assert gp(x, y) == gp(y, x)


@given(st.integers(0, 60), st.integers(0, 60))
def test_predicates_mutually_exclusive(x, y):
    assert gp_is_zero(x, y) + gp_is_one(x, y) + gp_is_two(x, y) <= 1


@given(st.lists(st.integers(0, 4), min_size=1, max_size=3), st.booleans())
def test_sorted_ruleset_matches_generic_oracle(piles, p):
    k = NIM_PASS.position(piles, p)
    assert sg(NIM_PASS, k) == one_pass_sg_oracle(nim_state(piles, p))


@given(st.lists(st.integers(0, 6), min_size=1, max_size=4))
def test_pass_bit_never_restored(piles):
    for o in NIM_PASS.options(NIM_PASS.position(piles, False)):
        assert o.payload[-1] == 0


def test_pass_not_offered_at_terminal():
    assert NIM_PASS.options(NIM_PASS.position([0, 0], True)) == []


@given(st.permutations([0, 3, 5, 6]))
def test_piles_permutation_invariant(piles):
    assert gp_n(piles) == gp_n([0, 3, 5, 6])
