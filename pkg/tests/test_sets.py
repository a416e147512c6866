from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from bruijn_mis.constructors import apply_f
from bruijn_mis.enumeration import enumerate_all
from bruijn_mis.sets import (
    CandidateSet,
    InvalidSetError,
    Kind,
    M_set,
    Violation,
    check_structure_lemmas,
    is_comma_free,
    is_independent,
    is_mis,
    validate_mis,
)
from bruijn_mis.words import cycle_of

# naive brute force over all 3-subsets of B(2,3) (and 2-subsets of the non-loops)
D2_WITH_LOOPS = [
    ["000", "010", "011"], ["000", "010", "110"], ["000", "010", "111"],
    ["000", "101", "111"], ["001", "101", "111"], ["100", "101", "111"],
]
D2_LOOPLESS = [["001", "101"], ["001", "110"], ["010", "011"], ["010", "110"], ["011", "100"], ["100", "101"]]


def cs(d, *words):
    return CandidateSet.of(d, words)


def test_m_sets_of_b2():
    S = cs(2, "000", "010", "111")
    assert M_set(S, 0) == frozenset()
    # literal reading of the definition: 101 is absent, 111 present
    assert M_set(S, 1) == {0}
    assert M_set(cs(1, "000"), 0) == frozenset()


def test_is_independent_examples():
    assert is_independent(cs(2, "000", "010", "011"), Kind.WITH_LOOPS)
    for kind in Kind:
        assert not is_independent(cs(2, "100", "110"), kind)
    assert is_independent(CandidateSet(2, frozenset()))


def test_loop_is_dependent_in_loopless_kind():
    assert not is_independent(cs(2, "000"), Kind.LOOPLESS)


def test_validate_one_loop():
    S = validate_mis(cs(2, "000", "010", "011"))
    assert S.loops == (0,) and S.a == 0 and S.b is None


def test_validate_two_loops():
    S = validate_mis(cs(2, "000", "010", "111"))
    assert S.loops == (0, 1) and (S.a, S.b) == (0, 1)
    # the cycle of bab is the one left empty
    assert not (cycle_of((1, 0, 1)) & S.words)


@pytest.mark.parametrize(
    "words, kind, code",
    [
        (["000", "010"], Kind.WITH_LOOPS, Violation.CARDINALITY),
        (["100", "110"], Kind.WITH_LOOPS, Violation.DEPENDENT),
        (["000", "010"], Kind.LOOPLESS, Violation.DEPENDENT),
        (["001", "011", "111"], Kind.WITH_LOOPS, Violation.DEPENDENT),
    ],
)
def test_validate_errors(words, kind, code):
    with pytest.raises(InvalidSetError) as info:
        validate_mis(cs(2, *words), kind)
    assert info.value.code is code


def test_digit_range():
    with pytest.raises(InvalidSetError) as info:
        cs(2, "020")
    assert info.value.code is Violation.DIGIT_RANGE


def test_d2_populations_match_brute_force():
    got = [[f"{a}{b}{c}" for a, b, c in S] for S in enumerate_all(2, Kind.WITH_LOOPS)]
    assert got == D2_WITH_LOOPS
    got = [[f"{a}{b}{c}" for a, b, c in S] for S in enumerate_all(2, Kind.LOOPLESS)]
    assert got == D2_LOOPLESS


def test_is_mis_rejects_non_maximum():
    assert is_mis(cs(2, "000", "010", "011"))
    assert not is_mis(cs(2, "000", "010"))


@pytest.mark.parametrize("kind", list(Kind))
def test_structure_lemmas_on_b33(kind):
    sets = list(enumerate_all(3, kind))
    assert len(sets) == 42
    for S in sets:
        assert check_structure_lemmas(S).ok, S


def test_f_of_b1_has_one_digit_at_l_plus_one():
    S = apply_f(validate_mis(cs(1, "000")))
    assert [x for x in range(S.d) if x not in S.loops and len(M_set(S, x)) == S.l + 1] == [1]


def test_comma_free_examples():
    assert is_comma_free(cs(2, "100", "110"))
    assert is_comma_free(cs(2, "010", "011"))
    assert not is_comma_free(cs(2, "010", "101"))


@pytest.mark.parametrize("d", [2, 3, 4])
def test_mis_invariants(d):
    for S in enumerate_all(d):
        hits = 0
        for w in S.words:
            if len(set(w)) > 1:
                hits += 1
        assert hits == (d**3 - d) // 3 - (S.l == 2)
        assert sum(len(M_set(S, x)) == 0 for x in S.loops) == 1
        if S.b is not None:
            assert len(M_set(S, S.b)) >= 1
    for T in enumerate_all(d, Kind.LOOPLESS):
        assert not T.loops and is_comma_free(T)


@given(st.sets(st.tuples(*[st.integers(0, 2)] * 3), max_size=12))
def test_validation_is_consistent_with_independence(words):
    S = CandidateSet(3, frozenset(words))
    try:
        validate_mis(S)
    except InvalidSetError:
        return
    assert is_independent(S) and len(S) == 9
