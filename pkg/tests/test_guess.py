import pytest

from recurra.guess import (
    GuessNotFoundError,
    GuessProblem,
    InsufficientTermsError,
    guess_recurrence,
    minimal_guess,
    required_terms,
)
from recurra.operators import builtin_operator, verify_range
from recurra.sequences import builtin_sequence


def test_required_terms_formula():
    assert required_terms(1, 1, holdout=10) == 4 + 1 + 10 + 10
    assert required_terms(5, 2, holdout=10) == 18 + 5 + 10 + 10


def test_problem_rejects_too_few_terms():
    with pytest.raises(InsufficientTermsError, match="needs at least"):
        GuessProblem(terms=list(range(10)), order=1, degree=1)


def test_recovers_u_op_exactly():
    u = builtin_sequence("central-binomial")
    result = guess_recurrence(GuessProblem(terms=u.terms(0, 40), order=1, degree=1))
    assert len(result.verified) == 1
    assert result.verified[0] == builtin_operator("u-op")


def test_recovers_geometric():
    result = guess_recurrence(
        GuessProblem(terms=[2**k for k in range(26)], order=1, degree=0)
    )
    ops = result.verified
    assert len(ops) == 1
    assert [p.to_strings() for p in ops[0].coeffs] == [["1"], ["-2"]]


def test_order5_guess_on_a032123():
    a = builtin_sequence("A032123")
    result = guess_recurrence(GuessProblem(terms=a.terms(0, 60), order=5, degree=2))
    assert result.verified
    for op in result.verified:
        assert verify_range(op, a, max(op.order, 6), 1000).passed


def test_order5_degree2_nullspace_is_exactly_mathar():
    a = builtin_sequence("A032123")
    result = guess_recurrence(GuessProblem(terms=a.terms(0, 60), order=5, degree=2))
    assert builtin_operator("mathar") in result.verified


def test_scaling_invariance():
    u = builtin_sequence("central-binomial")
    terms = u.terms(0, 40)
    base = guess_recurrence(GuessProblem(terms=terms, order=1, degree=1))
    scaled = guess_recurrence(
        GuessProblem(terms=[7 * t for t in terms], order=1, degree=1)
    )
    assert base.verified == scaled.verified


def test_holdout_soundness_on_patternless_terms():
    # the primes satisfy no low-order polynomial recurrence; nothing may verify
    primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61,
              67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137,
              139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199]
    result = guess_recurrence(GuessProblem(terms=primes, order=2, degree=1))
    assert not result.verified
    with pytest.raises(GuessNotFoundError, match="no verified recurrence"):
        minimal_guess(primes, max_order=2, max_degree=1)


def test_minimal_guess_a032123_is_order_3():
    a = builtin_sequence("A032123")
    op = minimal_guess(a.terms(0, 79), max_order=5, max_degree=4)
    assert op.order <= 3
    assert verify_range(op, a, max(op.order, 6), 2000).passed


def test_minimal_guess_central_binomial_is_u_op():
    u = builtin_sequence("central-binomial")
    op = minimal_guess(u.terms(0, 50), max_order=3, max_degree=3)
    assert op == builtin_operator("u-op")


def test_minimal_guess_deterministic():
    a = builtin_sequence("A032123")
    terms = a.terms(0, 79)
    assert minimal_guess(terms, 5, 4) == minimal_guess(terms, 5, 4)


def test_guess_respects_offset():
    u = builtin_sequence("central-binomial")
    # same sequence, window starting at n = 3
    result = guess_recurrence(
        GuessProblem(terms=u.terms(3, 45), order=1, degree=1, offset=3)
    )
    assert result.verified[0] == builtin_operator("u-op")


def test_guessed_and_lclm_operators_co_annihilate():
    # both routes to an order-3 annihilator must agree on the verification
    # range; operator equality is not asserted, only co-annihilation
    from recurra.operators import lclm

    a = builtin_sequence("A032123")
    guessed = minimal_guess(a.terms(0, 79), max_order=5, max_degree=4)
    computed = lclm(builtin_operator("u-op"), builtin_operator("v-op"))
    for op in (guessed, computed):
        assert verify_range(op, a, max(op.order, 6), 2000).passed


def test_mathar_is_consistent_as_frozen_solution():
    # the order-5 operator, restated as nullspace membership: its residuals
    # vanish at every sample index of the guessing window
    a = builtin_sequence("A032123")
    m = builtin_operator("mathar")
    for i in range(6, 61):
        assert m.apply(a, i) == 0
