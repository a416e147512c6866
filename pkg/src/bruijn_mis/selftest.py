"""Acceptance checks, runnable from the CLI (``selftest``) and from pytest.

Every check is exact integer / set equality.  The published values below are
frozen copies of the orbit table, not recomputed here.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Callable

from .codes import classical_code, validate_code
from .constructors import apply_op, construct, decompose, from_loopless, to_loopless, trace_stabilizer
from .counting import bivariate_coefficients, count_mis, count_mis_D2, egf_coefficients
from .enumeration import enumerate_all, enumerate_orbit_reps, oracle_enumerate
from .group import stabilizer, transporter
from .sets import CandidateSet, Kind, check_structure_lemmas, is_comma_free, lmis_size

# (d, k) -> (b_dk, one-loop orbits, two-loop orbits)
PUBLISHED_BDK = {
    (1, 0): (1, 1, 0),
    (2, 0): (3, 2, 1),
    (3, 0): (6, 4, 2),
    (4, 0): (12, 8, 4),
    (5, 0): (24, 16, 8),
    (6, 0): (48, 32, 16),
    (3, 1): (2, 2, 0),
    (4, 1): (10, 8, 2),
    (5, 1): (32, 24, 8),
    (6, 1): (88, 64, 24),
    (5, 2): (4, 4, 0),
    (6, 2): (28, 24, 4),
}
PUBLISHED_A = {1: 1, 2: 6, 3: 42}


@dataclass
class Outcome:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number:2d}. {self.name}: {self.detail} ({self.seconds:.2f}s)"


class _Check:
    def __init__(self):
        self.problems: list[str] = []

    def expect(self, cond: bool, msg: str) -> None:
        if not cond:
            self.problems.append(msg)


def counts_vs_published() -> str:
    c = _Check()
    t0 = time.perf_counter()
    table = count_mis(6)
    elapsed = time.perf_counter() - t0
    for d, a in PUBLISHED_A.items():
        c.expect(table.a[d] == a, f"a_{d} = {table.a[d]}, expected {a}")
    got = {key: (table.b[key], table.one_loop[key], table.two_loop[key]) for key in table.b}
    c.expect(got == PUBLISHED_BDK, f"b table differs: {got}")
    c.expect(elapsed < 1.0, f"took {elapsed:.2f}s")
    _raise(c)
    return "a_1..a_3 = 1, 6, 42; b_{d,k} with loop split matches for d <= 6"


def oracle_equivalence() -> str:
    c = _Check()
    sizes = {}
    for d, expected in ((2, 6), (3, 42), (4, 408)):
        t0 = time.perf_counter()
        oracle = [S.words for S in oracle_enumerate(d, 3, Kind.WITH_LOOPS)]
        elapsed = time.perf_counter() - t0
        built = [S.words for S in enumerate_all(d, Kind.WITH_LOOPS)]
        c.expect(oracle == built, f"d={d}: oracle and orbit enumeration differ")
        c.expect(len(oracle) == expected, f"d={d}: {len(oracle)} sets, expected {expected}")
        c.expect(elapsed < 60.0, f"d={d}: oracle took {elapsed:.1f}s")
        sizes[d] = len(oracle)
    _raise(c)
    return f"identical sorted populations, sizes {sizes}"


def diameter_five() -> str:
    c = _Check()
    t0 = time.perf_counter()
    n1 = len(oracle_enumerate(1, 5, Kind.WITH_LOOPS))
    n2 = len(oracle_enumerate(2, 5, Kind.WITH_LOOPS))
    elapsed = time.perf_counter() - t0
    c.expect((n1, n2) == (1, 44), f"got {(n1, n2)}, expected (1, 44)")
    c.expect(elapsed < 10.0, f"took {elapsed:.1f}s")
    _raise(c)
    return f"B(1,5): {n1}, B(2,5): {n2}"


def bijection() -> str:
    c = _Check()
    for d in (2, 3, 4):
        mis = list(enumerate_all(d, Kind.WITH_LOOPS))
        lmis = list(enumerate_all(d, Kind.LOOPLESS))
        images = sorted((to_loopless(S).words for S in mis), key=sorted)
        c.expect(len(set(images)) == len(mis), f"d={d}: to_loopless not injective")
        c.expect(all(from_loopless(to_loopless(S)) == S for S in mis), f"d={d}: from . to != id")
        c.expect(all(to_loopless(from_loopless(T)) == T for T in lmis), f"d={d}: to . from != id")
        oracle = [S.words for S in oracle_enumerate(d, 3, Kind.LOOPLESS)]
        c.expect(oracle == [T.words for T in lmis], f"d={d}: LMIS population differs from oracle")
        c.expect(len(lmis) == count_mis(d).a[d], f"d={d}: {len(lmis)} LMISs, a_d = {count_mis(d).a[d]}")
    _raise(c)
    return "mutually inverse on d = 2, 3, 4; LMIS counts 6, 42, 408 confirmed by oracle"


def round_trip_uniqueness() -> str:
    c = _Check()
    checked = 0
    for d in (3, 4):
        keys_by_orbit: dict = {}
        for rep, trace in enumerate_orbit_reps(d):
            keys_by_orbit[trace.key()] = rep
        for S in enumerate_all(d):
            tr = decompose(S)
            c.expect(construct(tr) == S, f"construct(decompose(S)) != S for {S}")
            rep = keys_by_orbit.get(tr.key())
            c.expect(rep is not None and transporter(rep, S) is not None, f"{S} decomposed to foreign orbit {tr.key()}")
            checked += 1
    _raise(c)
    return f"{checked} sets rebuilt; each orbit maps to exactly one (base, ops)"


def stabilizers() -> str:
    c = _Check()
    n = 0
    for d in range(1, 6):
        for S, trace in enumerate_orbit_reps(d):
            brute = stabilizer(S)
            predicted = trace_stabilizer(trace)
            c.expect(brute == predicted, f"{trace}: brute {brute.transposition_pairs()} vs {predicted.transposition_pairs()}")
            touched = [x for p in brute.transposition_pairs() for x in p]
            c.expect(len(touched) == len(set(touched)), f"{trace}: generators not disjoint")
            c.expect(brute.order == 2**brute.k, f"{trace}: order {brute.order} != 2^{brute.k}")
            n += 1
    _raise(c)
    return f"{n} orbit representatives, d <= 5"


def structural_lemmas() -> str:
    c = _Check()
    n = 0
    for d in (1, 2, 3, 4):
        for kind in (Kind.WITH_LOOPS, Kind.LOOPLESS):
            for S in enumerate_all(d, kind):
                report = check_structure_lemmas(S)
                c.expect(report.ok, f"{kind.value} {S}: {report.violations}")
                n += 1
    _raise(c)
    return f"0 violations over {n} MISs and LMISs"


def orbit_disjointness() -> str:
    c = _Check()
    pairs = 0
    for d_out in (2, 3, 4):
        images = []
        for tag, grow in (("f", 1), ("f'", 1), ("g", 2), ("g'", 2)):
            d_in = d_out - grow
            if d_in < 1:
                continue
            for S, _ in enumerate_orbit_reps(d_in):
                images.append((tag, apply_op(tag, S)))
        for (t1, X), (t2, Y) in itertools.combinations(images, 2):
            pairs += 1
            c.expect(transporter(X, Y) is None, f"d={d_out}: {t1}-image {X} ~ {t2}-image {Y}")
    _raise(c)
    return f"{pairs} image pairs with output alphabet <= 4, none in a common orbit"


def comma_free() -> str:
    c = _Check()
    for d in (1, 2, 3, 4):
        for T in enumerate_all(d, Kind.LOOPLESS):
            c.expect(is_comma_free(T), f"LMIS {T} is not comma-free")
    for d in range(2, 7):
        code = classical_code(d)
        c.expect(is_comma_free(code) and len(code) == lmis_size(d), f"classical code for d={d}")
    report = validate_code(CandidateSet.of(2, ["100", "110"]))
    c.expect(report.comma_free and report.maximum and not report.independent, f"witness report {report}")
    _raise(c)
    return "all LMISs d <= 4 comma-free; classical codes d <= 6 ok; {100,110} comma-free, maximum, dependent"


def generating_functions() -> str:
    c = _Check()
    table = count_mis(20)
    for d, (coef, a) in enumerate(egf_coefficients(20), 1):
        c.expect(a == table.a[d], f"d={d}: d! c_d = {a}, a_d = {table.a[d]}")
    small = count_mis(10)
    c.expect(bivariate_coefficients(10) == small.b, "bivariate coefficients differ from b_{d,k}")
    _raise(c)
    return f"d! c_d = a_d for d <= 20 (a_20 = {table.a[20]}); bivariate = b_dk for d <= 10"


def d2_formula() -> str:
    c = _Check()
    for d, expected in ((4, 6), (5, 20)):
        formula = count_mis_D2(d)
        brute = len(oracle_enumerate(d, 2, Kind.LOOPLESS))
        c.expect(formula == expected == brute, f"d={d}: formula {formula}, brute force {brute}, expected {expected}")
    _raise(c)
    return "count_mis_D2(4) = 6, count_mis_D2(5) = 20, both confirmed by exhaustive search"


class CriterionFailed(AssertionError):
    pass


def _raise(c: _Check) -> None:
    if c.problems:
        raise CriterionFailed("; ".join(c.problems[:5]) + (" ..." if len(c.problems) > 5 else ""))


CRITERIA: list[tuple[int, str, Callable[[], str]]] = [
    (1, "counts vs published table", counts_vs_published),
    (2, "oracle equivalence d <= 4", oracle_equivalence),
    (3, "diameter-5 counts", diameter_five),
    (4, "MIS/LMIS bijection", bijection),
    (5, "round-trip uniqueness", round_trip_uniqueness),
    (6, "stabilizers", stabilizers),
    (7, "structural lemmas", structural_lemmas),
    (8, "orbit disjointness", orbit_disjointness),
    (9, "comma-free codes", comma_free),
    (10, "generating functions", generating_functions),
    (11, "D = 2 formula", d2_formula),
]


def full_extras() -> str:
    c = _Check()
    mis5 = list(enumerate_all(5))
    c.expect(len(mis5) == 4920, f"{len(mis5)} MISs for d=5")
    oracle5 = [S.words for S in oracle_enumerate(5, 3, Kind.WITH_LOOPS)]
    c.expect(oracle5 == [S.words for S in mis5], "d=5 oracle differs")
    for S in mis5:
        c.expect(construct(decompose(S)) == S, f"round trip fails for {S}")
    _raise(c)
    return "d = 5: 4920 sets, oracle agrees, every set round-trips"


def run_one(number: int, name: str, fn: Callable[[], str]) -> Outcome:
    t0 = time.perf_counter()
    try:
        detail = fn()
        passed = True
    except AssertionError as exc:
        detail, passed = str(exc), False
    return Outcome(number, name, passed, detail, time.perf_counter() - t0)


def run(level: str = "quick") -> list[Outcome]:
    if level not in ("quick", "full"):
        raise ValueError(f"level must be 'quick' or 'full', got {level!r}")
    checks = list(CRITERIA)
    if level == "full":
        checks.append((12, "d = 5 extension", full_extras))
    return [run_one(*check) for check in checks]

