from hypothesis import given, strategies as st

from passgame.chocolate import BUILTIN_NS_H, Choco2, floor_div
from passgame.classify import ONE_MOVE, Certificate, is_one_move, is_sg_decreasing, known_one_move, recheck
from passgame.games import NIM, NIM2

import pytest


def test_nim_pile_both_true():
    for m in range(12):
        assert is_one_move(NIM, NIM.key(m)).verdict
        assert is_sg_decreasing(NIM, NIM.key(m)).verdict


def test_cb2_one_move_not_decreasing():
    cb = Choco2(floor_div(1))
    assert is_one_move(cb, cb.key(1, 3)).verdict
    cert = is_sg_decreasing(cb, cb.key(1, 3))
    assert not cert.verdict
    assert cert.witness == (cb.key(1, 3), cb.key(1, 2))
    assert recheck(cert, cb)


def test_two_pile_nim_not_one_move():
    cert = is_one_move(NIM2, NIM2.key(1, 1))
    assert not cert.verdict and cert.witness == (NIM2.key(1, 1),)
    assert recheck(cert, NIM2)


def test_terminal_vacuous():
    cb = Choco2(floor_div(1))
    assert is_sg_decreasing(cb, cb.key(0, 0)).verdict
    assert is_one_move(NIM2, NIM2.key(0, 0)).verdict


def test_negative_certificate_needs_witness():
    with pytest.raises(ValueError):
        Certificate(ONE_MOVE, NIM.key(1), False)


@pytest.mark.parametrize("h", BUILTIN_NS_H, ids=lambda h: h.spec)
def test_ns_cb2_all_one_move(h):
    cb = Choco2(h)
    assert known_one_move(cb)
    for z in range(24):
        for y in range(h(z) + 1):
            assert is_one_move(cb, cb.key(y, z)).verdict


@given(st.integers(0, 5), st.integers(0, 5))
def test_decreasing_implies_one_move(a, b):
    for r, k in [(NIM2, NIM2.key(a, b)), (NIM, NIM.key(a))]:
        if is_sg_decreasing(r, k).verdict:
            assert is_one_move(r, k).verdict
