"""Rank rows, the multiplicity recurrence, and cyclic access."""

import pytest
from hypothesis import given, strategies as st

from flophelix.numerics import (LENGTHS, derive_ns, euler_sequence, for_length,
                                n_at, rank_at)


def test_rows():
    assert for_length(1).ns == (2,)
    assert for_length(2).ranks == (1, 2) and for_length(2).ns == (4, 1)
    assert for_length(4).ns == (8, 1, 2, 3, 2, 1)
    assert for_length(6).N == 12


def test_n0_is_twice_length():
    for ell in LENGTHS:
        assert for_length(ell).ns[0] == 2 * ell


def test_derive_ns_rejects_inconsistent():
    with pytest.raises(ValueError):
        derive_ns((1, 3, 2, 4))
    with pytest.raises(ValueError):
        derive_ns((2, 1))


def test_bad_length():
    with pytest.raises(ValueError):
        for_length(7)


@given(st.sampled_from(LENGTHS), st.integers(-100, 100))
def test_cyclic_access(ell, i):
    num = for_length(ell)
    assert rank_at(i, ell) == num.ranks[i % num.N]
    assert n_at(i + num.N, ell) == n_at(i, ell)
    assert rank_at(-i, ell) == rank_at(i, ell)  # palindromic


@given(st.sampled_from(LENGTHS), st.integers(-20, 20))
def test_euler_sequence_additivity(ell, i):
    seq = euler_sequence(i, ell)
    mid, n = seq["middle"]
    assert seq["left"] + seq["right"] == n * mid
