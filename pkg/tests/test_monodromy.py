"""Word typing, reduction, K-matrices, and the two-basepoint rewrites."""

import pytest
from hypothesis import given, settings, strategies as st

from flophelix.monodromy import (IDENT, FunctorWord, WordSyntaxError,
                                 WordTypeError, X, XPLUS, beta, beta_inv,
                                 k_matrix, kappa, lambda_word, loop_q,
                                 loop_q_minus, loop_q_plus, mat_inv, mat_mul,
                                 mutation_matrix, mutb, mutf, p, parse_word,
                                 puncture_count, reduce, rewrite_flop,
                                 sphere_relation, two_basepoint_check,
                                 two_basepoint_words)
from flophelix.numerics import LENGTHS, for_length


def test_letter_typing():
    w = FunctorWord.from_letters(2, [mutf(0), mutf(1), beta_inv(0)], p(0))
    assert w.closed
    with pytest.raises(WordTypeError):
        FunctorWord.from_letters(2, [mutf(0), mutf(0)], p(0))


def test_kappa_and_lambda():
    assert kappa(0, 3).letters == ()
    assert kappa(2, 3).letters == (mutf(0), mutf(1))
    assert lambda_word(-2, 3).letters == (mutf(-2), mutf(-1))
    with pytest.raises(ValueError):
        kappa(-1, 3)


def test_loop_shapes():
    q0 = loop_q(0, 1)
    assert q0.letters == (mutf(0), mutb(0))
    q2 = loop_q(2, 3)
    assert q2.letters == (mutf(0), mutf(1), mutf(2), mutb(2),
                          mutf(1).inverse(), mutf(0).inverse())
    assert loop_q_minus(2).letters == (mutf(0), mutf(1), beta_inv(0))
    assert loop_q_plus(2).letters == (beta(0), mutb(1), mutb(0))
    for ell in LENGTHS:
        assert loop_q_minus(ell).closed and loop_q_plus(ell).closed


def test_backward_is_not_inverse():
    w = FunctorWord.from_letters(1, [mutf(0), mutb(0)], p(0))
    assert reduce(w).letters == w.letters  # no cancellation


def test_sphere_relation():
    assert sphere_relation(1).letters == ()
    rel2 = sphere_relation(2)
    assert [str(l) for l in rel2.letters] == \
        ["MutFwd(0)", "MutFwd(1)", "MutBwd(1)", "inv(MutFwd(0))"]
    assert k_matrix(rel2, 2) == IDENT


def test_mutation_matrices():
    assert mutation_matrix(0, 2) == ((1, 0), (4, -1))
    assert mutation_matrix(1, 2) == ((-1, 1), (0, 1))
    for ell in LENGTHS:
        for i in range(for_length(ell).N):
            M = mutation_matrix(i, ell)
            assert mat_mul(M, M) == IDENT
            assert M[0][0] * M[1][1] - M[0][1] * M[1][0] == -1


def test_k_matrices_of_loops():
    for ell in LENGTHS:
        for i in range(for_length(ell).N):
            assert k_matrix(loop_q(i, ell), ell) == IDENT
        km = k_matrix(loop_q_minus(ell), ell)
        kp = k_matrix(loop_q_plus(ell), ell)
        assert mat_mul(km, kp) == IDENT
        assert km[0][0] + km[1][1] == 2 and kp[0][0] + kp[1][1] == 2
    assert k_matrix(loop_q_minus(2), 2) == ((3, -1), (4, -1))


def test_k_matrix_rejects_geometric():
    w = two_basepoint_words(2)[("b", 1)]
    with pytest.raises(ValueError):
        k_matrix(w, 2)


def test_two_basepoint_words():
    for ell in LENGTHS:
        words = two_basepoint_words(ell)
        assert words["a"].source == X and words["d"].source == XPLUS
        for i in range(1, max(for_length(ell).N // 2, 1) + 1):
            assert words[("b", i)].closed and words[("c", i)].closed
        assert two_basepoint_check(ell)


def test_rewrite_moves_between_basepoints():
    b1 = two_basepoint_words(1)[("b", 1)]
    rewritten = rewrite_flop(b1)
    assert all(l.kind not in ("flop", "flopinv") for l in rewritten.letters)


def test_puncture_count():
    assert [puncture_count(l) for l in LENGTHS] == [3, 4, 6, 8, 12, 14]


def test_parse_word():
    w = parse_word("inv(q0).qplus.qminus", 1)
    assert reduce(w).letters == ()
    assert parse_word("phi_bwd(0).phi_fwd(0)", 3).letters == (mutf(0), mutb(0))
    assert parse_word("beta", 2).letters == (beta(0),)
    with pytest.raises(WordSyntaxError):
        parse_word("nonsense", 2)
    with pytest.raises(WordSyntaxError):
        parse_word("q0..q1", 4)
    with pytest.raises(WordTypeError):
        parse_word("q5", 2)
    with pytest.raises(WordTypeError):
        parse_word("phi_fwd(0).phi_fwd(0)", 2)


_letters = st.sampled_from([mutf(0), mutb(0), mutf(1), mutb(1)])


def _chain(ell, kinds):
    """Greedily type a random letter soup into a word based at p_0."""
    N = for_length(ell).N
    at, out = p(0), []
    for letter in kinds:
        for cand in (letter, letter.inverse()):
            if cand.source(N) == at:
                out.append(cand)
                at = cand.target(N)
                break
    return FunctorWord.from_letters(ell, out, p(0))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 3]), st.lists(_letters, max_size=12))
def test_reduction_soundness(ell, kinds):
    w = _chain(ell, kinds)
    r = reduce(w)
    assert reduce(r) == r  # idempotent
    assert k_matrix(r, ell) == k_matrix(w, ell)
    assert reduce(w.then(w.inverse())).letters == ()
