"""Node sets of B(d, 3), MIS / LMIS validation and the M_x statistics."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .words import Word, cycle_of, theta_cycles, word_str


class Kind(str, enum.Enum):
    WITH_LOOPS = "with-loops"
    LOOPLESS = "loop-less"


class Violation(str, enum.Enum):
    DIGIT_RANGE = "digit-range"
    CARDINALITY = "cardinality"
    DEPENDENT = "dependent"
    LOOP_COUNT = "loop-count"
    NO_DISTINGUISHED_LOOP = "no-distinguished-loop"
    CYCLE_CONTRIBUTION = "cycle-contribution"


class InvalidSetError(ValueError):
    def __init__(self, code: Violation, message: str):
        super().__init__(f"{code.value}: {message}")
        self.code = code


def mis_size(d: int) -> int:
    return (d**3 - d) // 3 + 1


def lmis_size(d: int) -> int:
    return (d**3 - d) // 3


def _sort_key(words: Iterable[Word]) -> tuple[Word, ...]:
    return tuple(sorted(words))


@dataclass(frozen=True)
class CandidateSet:
    d: int
    words: frozenset[Word]

    def __post_init__(self):
        words = frozenset(tuple(w) for w in self.words)
        object.__setattr__(self, "words", words)
        for w in words:
            if any(not 0 <= x < self.d for x in w):
                raise InvalidSetError(Violation.DIGIT_RANGE, f"word {word_str(w)} not over alphabet of size {self.d}")

    @classmethod
    def of(cls, d: int, words: Iterable[Sequence[int] | str]) -> "CandidateSet":
        return cls(d, frozenset(tuple(int(c) for c in w) for w in words))

    def __contains__(self, w) -> bool:
        return tuple(w) in self.words

    def __iter__(self) -> Iterator[Word]:
        return iter(sorted(self.words))

    def __len__(self) -> int:
        return len(self.words)

    def sorted_words(self) -> list[Word]:
        return sorted(self.words)

    def sort_key(self):
        return (self.d, _sort_key(self.words))

    def __str__(self) -> str:
        return "{" + ", ".join(word_str(w, self.d) for w in self.sorted_words()) + "}"


@dataclass(frozen=True)
class MaxIndepSet(CandidateSet):
    """A validated maximum independent set; build it with :func:`validate_mis`.

    For the with-loops kind ``a`` is the distinguished loop (the loop digit
    with ``m_a = 0``) and ``b`` the optional second loop.
    """

    kind: Kind = Kind.WITH_LOOPS
    loops: tuple[int, ...] = field(default=())
    a: int | None = None
    b: int | None = None

    @property
    def l(self) -> int:
        return len(self.loops)

    def candidate(self) -> CandidateSet:
        return CandidateSet(self.d, self.words)


def M_set(S: CandidateSet, x: int) -> frozenset[int]:
    """Digits y such that x y x is not in S."""
    return frozenset(y for y in range(S.d) if (x, y, x) not in S.words)


def m_value(S: CandidateSet, x: int) -> int:
    return len(M_set(S, x))


def m_profile(S: CandidateSet) -> tuple[int, ...]:
    return tuple(m_value(S, x) for x in range(S.d))


def loop_digits(S: CandidateSet) -> tuple[int, ...]:
    return tuple(x for x in range(S.d) if (x, x, x) in S.words)


def first_dependence(S: CandidateSet, kind: Kind) -> tuple[Word, Word] | None:
    words = S.words
    for u in sorted(words):
        for c in range(S.d):
            v = u[1:] + (c,)
            if v in words and not (u == v and kind is Kind.WITH_LOOPS):
                return u, v
    return None


def is_independent(S: CandidateSet, kind: Kind = Kind.WITH_LOOPS) -> bool:
    return first_dependence(S, Kind(kind)) is None


def validate_mis(S: CandidateSet, kind: Kind = Kind.WITH_LOOPS) -> MaxIndepSet:
    """Check every MIS / LMIS invariant and return the set with its loop data."""
    kind = Kind(kind)
    d, words = S.d, S.words
    if any(len(w) != 3 for w in words):
        raise InvalidSetError(Violation.DIGIT_RANGE, "all words must have length 3")

    bad = first_dependence(S, kind)
    if bad is not None:
        raise InvalidSetError(Violation.DEPENDENT, f"edge {word_str(bad[0], d)} -> {word_str(bad[1], d)}")

    target = mis_size(d) if kind is Kind.WITH_LOOPS else lmis_size(d)
    if len(words) != target:
        raise InvalidSetError(Violation.CARDINALITY, f"expected {target} words over d={d}, got {len(words)}")

    loops = loop_digits(S)
    a = b = None
    deficient: Word | None = None
    if kind is Kind.LOOPLESS:
        if loops:
            raise InvalidSetError(Violation.LOOP_COUNT, f"loop-less set contains loops {loops}")
    else:
        if not 1 <= len(loops) <= 2:
            raise InvalidSetError(Violation.LOOP_COUNT, f"expected one or two loops, found {len(loops)}")
        zero = [x for x in loops if m_value(S, x) == 0]
        if len(zero) != 1:
            raise InvalidSetError(Violation.NO_DISTINGUISHED_LOOP, f"loops with m = 0: {zero}")
        a = zero[0]
        if len(loops) == 2:
            b = loops[0] if loops[1] == a else loops[1]
            if (a, b, a) not in words:
                raise InvalidSetError(Violation.NO_DISTINGUISHED_LOOP, "a b a missing from a two-loop set")
            deficient = (b, a, b)

    skip = cycle_of(deficient) if deficient is not None else None
    for cyc in theta_cycles(d, 3):
        if len(cyc) == 1:
            continue
        hits = sum(w in words for w in cyc)
        expected = 0 if skip is not None and cyc[0] in skip else 1
        if hits != expected:
            raise InvalidSetError(
                Violation.CYCLE_CONTRIBUTION,
                f"cycle of {word_str(cyc[0], d)} contributes {hits}, expected {expected}",
            )
    return MaxIndepSet(d, words, kind, loops, a, b)


def is_mis(S: CandidateSet, kind: Kind = Kind.WITH_LOOPS) -> bool:
    try:
        validate_mis(S, kind)
    except InvalidSetError:
        return False
    return True


@dataclass
class StructureReport:
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def fail(self, msg: str) -> None:
        self.violations.append(msg)


def check_structure_lemmas(S: MaxIndepSet) -> StructureReport:
    """Evaluate the M-set lemmas and loop rules on one validated set.

    Any finding means the implementation is wrong, since the statements are
    theorems about every MIS and LMIS of B(d, 3).
    """
    report = StructureReport()
    d, words = S.d, S.words
    L = set(S.loops)
    l = len(L)
    M = {x: M_set(S, x) for x in range(d)}
    free = [x for x in range(d) if x not in L]

    # at most one digit with m = l+1
    ones = [x for x in free if len(M[x]) == l + 1]
    if len(ones) > 1:
        report.fail(f"digits {ones} all have m = l+1")

    # no three digits with m = l+2
    twos = [x for x in free if len(M[x]) == l + 2]
    if len(twos) > 2:
        report.fail(f"digits {twos} all have m = l+2")

    # three digits x, y, z with M_x = M_y = L+{x,y,z}, M_z in {L+{x,z}, L+{x,y,z}}
    for x in free:
        for y in free:
            if y == x:
                continue
            for z in free:
                if z in (x, y):
                    continue
                xyz = L | {x, y, z}
                if M[x] == xyz and M[y] == xyz and M[z] in (L | {x, z}, xyz):
                    report.fail(f"digits {x},{y},{z} realize the forbidden M-set pattern")

    # without an m = l+1 digit there are exactly two m = l+2 digits, with M = L+{x,y}
    if not ones and d >= 3:
        if len(twos) != 2:
            report.fail(f"no m = l+1 digit, but m = l+2 digits are {twos}")
        else:
            x, y = twos
            if M[x] != L | {x, y} or M[y] != L | {x, y}:
                report.fail(f"M-sets of {x},{y} are not L + {{{x},{y}}}")

    # two m = l+2 digits never appear between each other
    for i, y in enumerate(twos):
        for z in twos[i + 1 :]:
            if (y, z, y) in words or (z, y, z) in words:
                report.fail(f"{y}{z}{y} or {z}{y}{z} in S although m_{y} = m_{z} = l+2")

    # every loop u has u x u in S for each non-loop digit x
    for u in L:
        for x in free:
            if (u, x, u) not in words:
                report.fail(f"loop {u} missing {u}{x}{u}")

    # cycle contributions
    skip = cycle_of((S.b, S.a, S.b)) if S.b is not None else frozenset()
    for cyc in theta_cycles(d, 3):
        if len(cyc) == 1:
            continue
        hits = sum(w in words for w in cyc)
        expected = 0 if cyc[0] in skip else 1
        if hits != expected:
            report.fail(f"cycle of {word_str(cyc[0], d)} contributes {hits}")
    return report


def is_comma_free(S: CandidateSet) -> bool:
    words = S.words
    for x in words:
        for y in words:
            if (x[1], x[2], y[0]) in words or (x[2], y[0], y[1]) in words:
                return False
    return True


def sort_sets(sets: Iterable[CandidateSet]) -> list:
    return sorted(sets, key=lambda s: s.sort_key())
