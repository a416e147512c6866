from __future__ import annotations

import pytest

from bruijn_mis.codes import Provenance, classical_code, code_classes, codes_from_lmis, validate_code
from bruijn_mis.sets import CandidateSet, is_comma_free

# naive search over all 2-subsets of {0,1}^3: the maximum comma-free codes for d = 2
D2_MAX_CODES = [
    ["001", "011"], ["001", "101"], ["001", "110"], ["010", "011"],
    ["010", "110"], ["011", "100"], ["100", "101"], ["100", "110"],
]


def ws(*words):
    return frozenset(tuple(int(c) for c in w) for w in words)


def test_classical_code():
    assert classical_code(2).words == ws("010", "011")
    assert classical_code(3).words == ws("010", "011", "020", "021", "022", "120", "121", "122")
    for d in range(2, 7):
        c = classical_code(d)
        assert c.provenance is Provenance.CLASSICAL
        assert len(c) == (d**3 - d) // 3 and is_comma_free(c)


def test_codes_from_lmis():
    codes = list(codes_from_lmis(2))
    assert len(codes) == 6
    assert ws("001", "110") in [c.words for c in codes]
    assert len(list(codes_from_lmis(3))) == 42


def test_lmis_codes_are_the_independent_maximum_codes():
    got = sorted(sorted(c.words) for c in codes_from_lmis(2))
    all_max = [sorted(ws(*c)) for c in D2_MAX_CODES]
    assert all(g in all_max for g in got)
    dependent = [c for c in all_max if c not in got]
    assert sorted(dependent) == sorted([sorted(ws("001", "011")), sorted(ws("100", "110"))])


@pytest.mark.parametrize("d", [2, 3, 4])
def test_class_count_lower_bound(d):
    assert len(code_classes(list(codes_from_lmis(d)))) >= 2**d


def test_class_counts_frozen():
    assert [len(code_classes(list(codes_from_lmis(d)))) for d in (2, 3, 4)] == [4, 10, 28]


def test_validate_code_examples():
    r = validate_code(CandidateSet.of(2, ["100", "110"]))
    assert (r.comma_free, r.maximum, r.independent) == (True, True, False)
    assert not validate_code(CandidateSet.of(2, ["010", "101"])).comma_free
    r = validate_code(classical_code(4))
    assert r.comma_free and r.maximum
