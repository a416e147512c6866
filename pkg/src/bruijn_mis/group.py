"""The symmetric group acting on digits, and through them on words and sets."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable

from .budget import BudgetExceeded
from .sets import CandidateSet, MaxIndepSet, M_set, loop_digits, sort_sets, validate_mis
from .words import Word

BRUTE_FORCE_MAX_D = 8


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of {0, ..., n-1}; ``images[i]`` is the image of digit i."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        images = list(range(n))
        images[i], images[j] = images[j], images[i]
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __len__(self) -> int:
        return len(self.images)

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: x -> self(other(x))."""
        if other.n != self.n:
            raise ValueError("permutations act on different alphabets")
        return Permutation(tuple(self.images[x] for x in other.images))

    __mul__ = compose

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation(tuple(inv))

    def extend(self, n: int) -> "Permutation":
        """Same map on a larger alphabet, fixing the new digits."""
        if n < self.n:
            raise ValueError("cannot shrink a permutation")
        return Permutation(self.images + tuple(range(self.n, n)))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def moved(self) -> list[int]:
        return [i for i, x in enumerate(self.images) if i != x]

    def is_transposition(self) -> bool:
        m = self.moved()
        return len(m) == 2 and self.images[m[0]] == m[1]

    def act_word(self, w: Word) -> Word:
        return tuple(self.images[x] for x in w)

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"


def act(sigma: Permutation, S: CandidateSet) -> CandidateSet:
    if sigma.n != S.d:
        raise ValueError(f"permutation on {sigma.n} digits applied to a set over {S.d}")
    return CandidateSet(S.d, frozenset(sigma.act_word(w) for w in S.words))


def _profile(S: CandidateSet) -> list[tuple[bool, int]]:
    loops = set(loop_digits(S))
    return [(x in loops, len(M_set(S, x))) for x in range(S.d)]


def _search(S: CandidateSet, T: CandidateSet, first_only: bool) -> list[Permutation]:
    """Backtrack over digit images in increasing order; results come out sorted."""
    d = S.d
    if T.d != d or len(S) != len(T):
        return []
    ps, pt = _profile(S), _profile(T)
    if sorted(ps) != sorted(pt):
        return []
    # words of S that become checkable once digit i is assigned
    by_max: list[list[Word]] = [[] for _ in range(d)]
    for w in S.words:
        by_max[max(w)].append(w)
    target = T.words
    images = [-1] * d
    used = [False] * d
    found: list[Permutation] = []

    def extend(i: int) -> bool:
        if i == d:
            found.append(Permutation(tuple(images)))
            return first_only
        for y in range(d):
            if used[y] or ps[i] != pt[y]:
                continue
            images[i] = y
            if all(tuple(images[x] for x in w) in target for w in by_max[i]):
                used[y] = True
                if extend(i + 1):
                    return True
                used[y] = False
        images[i] = -1
        return False

    extend(0)
    return found


def transporter(S: CandidateSet, T: CandidateSet) -> Permutation | None:
    """The lexicographically least sigma with sigma(S) = T, or None."""
    found = _search(S, T, first_only=True)
    return found[0] if found else None


def stabilizer_elements(S: CandidateSet, max_d: int = BRUTE_FORCE_MAX_D) -> list[Permutation]:
    if S.d > max_d:
        raise BudgetExceeded(f"brute-force stabilizer limited to d <= {max_d}, got d={S.d}")
    return _search(S, S, first_only=False)


@dataclass(frozen=True)
class StabilizerDescription:
    generators: tuple[Permutation, ...]
    order: int

    @property
    def k(self) -> int:
        return len(self.generators)

    def transposition_pairs(self) -> list[tuple[int, int]]:
        return sorted(tuple(g.moved()) for g in self.generators)


def describe_group(n: int, pairs: Iterable[tuple[int, int]]) -> StabilizerDescription:
    gens = tuple(sorted(Permutation.transposition(n, i, j) for i, j in {tuple(sorted(p)) for p in pairs}))
    return StabilizerDescription(gens, 2 ** len(gens))


def stabilizer(S: CandidateSet, trace=None, max_d: int = BRUTE_FORCE_MAX_D) -> StabilizerDescription:
    """Stabilizer of S as a product of disjoint transpositions.

    Small alphabets are searched exhaustively.  Above ``max_d`` a construction
    trace is required and the answer is read off the operator sequence.
    """
    if S.d > max_d:
        if trace is None:
            raise BudgetExceeded(f"stabilizer of a set over d={S.d} needs a construction trace")
        from .constructors import trace_stabilizer

        return trace_stabilizer(trace)

    elements = stabilizer_elements(S, max_d)
    transpositions = [g for g in elements if g.is_transposition()]
    pairs = [tuple(g.moved()) for g in transpositions]
    touched = [x for p in pairs for x in p]
    if len(touched) != len(set(touched)):
        raise AssertionError(f"stabilizer transpositions {pairs} are not disjoint")
    if len(elements) != 2 ** len(pairs):
        raise AssertionError(f"stabilizer of order {len(elements)} is not generated by {pairs}")
    return describe_group(S.d, pairs)


def expand_orbit(S: CandidateSet, max_d: int = BRUTE_FORCE_MAX_D) -> list[CandidateSet]:
    """All distinct images of S under the digit action, sorted."""
    if S.d > max_d:
        raise BudgetExceeded(f"orbit expansion limited to d <= {max_d}, got d={S.d}")
    seen: set[frozenset[Word]] = set()
    for images in itertools.permutations(range(S.d)):
        seen.add(frozenset(tuple(images[x] for x in w) for w in S.words))
    images = sort_sets(CandidateSet(S.d, ws) for ws in seen)
    if isinstance(S, MaxIndepSet):
        return [validate_mis(T, S.kind) for T in images]
    return images


def orbit_size(S: CandidateSet) -> int:
    return math.factorial(S.d) // stabilizer(S).order


def canonical_lexmin(S: CandidateSet, max_d: int = 6) -> tuple[Word, ...]:
    """Least sorted word tuple over the orbit of S."""
    if S.d > max_d:
        raise BudgetExceeded(f"lex-min canonical form limited to d <= {max_d}")
    return min(tuple(sorted(tuple(p[x] for x in w) for w in S.words)) for p in itertools.permutations(range(S.d)))


def same_orbit(S: CandidateSet, T: CandidateSet) -> bool:
    return transporter(S, T) is not None
