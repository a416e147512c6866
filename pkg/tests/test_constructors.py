from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from bruijn_mis.constructors import (
    B1,
    B2,
    ConstructionTrace,
    apply_f,
    apply_f_prime,
    apply_g,
    apply_g_prime,
    apply_op,
    construct,
    decompose,
    decompose_step,
    from_loopless,
    restrict,
    to_loopless,
)
from bruijn_mis.enumeration import enumerate_all, enumerate_orbit_reps
from bruijn_mis.group import Permutation, act, describe_group, stabilizer
from bruijn_mis.sets import CandidateSet, Kind, M_set, mis_size, validate_mis


def ws(*words):
    return frozenset(tuple(int(c) for c in w) for w in words)


def test_operator_examples():
    assert apply_f(B1).words == ws("000", "010", "011")
    assert apply_f_prime(B1).words == ws("000", "010", "110")
    assert apply_f(B2).words == ws("000", "010", "111", "020", "021", "120", "121", "022", "122")
    assert apply_g(B1).words == ws("000", "010", "020", "011", "022", "120", "210", "122", "211")
    assert apply_g_prime(B1).words == ws("000", "010", "020", "110", "220", "012", "021", "221", "112")


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_operators_produce_mis(d):
    for S in enumerate_all(d):
        for tag in ("f", "f'", "g", "g'"):
            T = apply_op(tag, S)
            assert len(T) == mis_size(T.d)


def test_restrict():
    assert restrict(apply_f(B1), 1) == B1
    assert restrict(apply_g(B1), 1) == B1
    n = 0
    for S in enumerate_all(4):
        if max(S.loops) < 3:
            assert len(restrict(S, 3)) == 9
            n += 1
    assert n > 0
    with pytest.raises(ValueError):
        restrict(B2, 1)  # loop 111 would be cut off


def test_decompose_step_examples():
    tag, sigma, prev = decompose_step(apply_f(B2))
    assert (tag, prev) == ("f", B2) and sigma.is_identity()
    tag, sigma, prev = decompose_step(apply_g(B1))
    assert (tag, prev) == ("g", B1)
    assert sorted(sigma(x) for x in (1, 2)) == [1, 2]


def test_decompose_construct_examples():
    t = decompose(validate_mis(CandidateSet(2, ws("000", "010", "011"))))
    assert (t.base, t.ops) == ("B1", ("f",)) and t.final_perm.is_identity()
    assert construct(ConstructionTrace("B1", ("f",), Permutation.identity(2))).words == ws("000", "010", "011")
    assert construct(ConstructionTrace("B2", (), Permutation.identity(2))) == B2


@pytest.mark.parametrize("d", [3, 4])
def test_decompose_step_round_trip(d):
    for S in enumerate_all(d):
        tag, sigma, prev = decompose_step(S)
        assert act(sigma, apply_op(tag, prev)).words == S.words
        # digits with m = l+1 exist exactly in the f/f' case
        has_one = any(len(M_set(S, x)) == S.l + 1 for x in range(d) if x not in S.loops)
        assert has_one == (tag in ("f", "f'"))


@pytest.mark.parametrize("d", [2, 3, 4])
def test_construct_decompose_round_trip(d):
    for S in enumerate_all(d):
        assert construct(decompose(S)) == S


@pytest.mark.parametrize("d", range(1, 7))
def test_trace_uniqueness(d):
    for S, trace in enumerate_orbit_reps(d):
        back = decompose(S)
        assert back.key() == trace.key()


@settings(max_examples=40, deadline=None)
@given(st.permutations(range(4)))
def test_scrambled_decompose(images):
    S = apply_g(apply_f_prime(B1))
    T = validate_mis(act(Permutation(images), S))
    t = decompose(T)
    assert (t.base, t.ops) == ("B1", ("f'", "g"))
    assert construct(t) == T


@pytest.mark.parametrize("d", range(1, 5))
def test_stabilizers_under_operators(d):
    for S, _ in enumerate_orbit_reps(d):
        H = stabilizer(S)
        for tag in ("f", "f'"):
            assert stabilizer(apply_op(tag, S)) == describe_group(d + 1, H.transposition_pairs())
        if d <= 3:
            for tag in ("g", "g'"):
                expected = describe_group(d + 2, H.transposition_pairs() + [(d, d + 1)])
                assert stabilizer(apply_op(tag, S)) == expected


def test_bijection_examples():
    assert to_loopless(apply_f(B1)).words == ws("010", "011")
    assert to_loopless(B2).words == ws("001", "110")
    T = validate_mis(CandidateSet(2, ws("010", "011")), Kind.LOOPLESS)
    assert from_loopless(T) == apply_f(B1)


@pytest.mark.parametrize("d", [2, 3, 4])
def test_bijection_inverse(d):
    mis = list(enumerate_all(d))
    for S in mis:
        T = to_loopless(S)
        assert len(T) == len(S) - 1
        assert from_loopless(T) == S
    for T in enumerate_all(d, Kind.LOOPLESS):
        assert to_loopless(from_loopless(T)) == T


def test_two_loop_order_branch():
    # a > b: distinguished loop is the larger digit
    S = validate_mis(act(Permutation.transposition(2, 0, 1), B2))
    assert (S.a, S.b) == (1, 0)
    assert to_loopless(S).words == ws("100", "011")
    assert from_loopless(to_loopless(S)) == S


def test_operator_input_must_be_validated():
    with pytest.raises(TypeError):
        apply_f(CandidateSet(1, ws("000")))
