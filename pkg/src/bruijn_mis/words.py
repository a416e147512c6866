"""Words, de Bruijn graphs B(d, D), the shift map and its cycles.

A word is a plain tuple of small integers.  The alphabet size is carried by
whoever holds the word (a graph or a set), never by the word itself.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .budget import BudgetExceeded, node_budget

Word = tuple[int, ...]

MAX_ALPHABET = 255


def parse_word(text: str) -> Word:
    """Parse ``"012"`` or ``"0,1,2"`` into a word."""
    text = text.strip()
    if "," in text:
        return tuple(int(part) for part in text.split(","))
    return tuple(int(ch) for ch in text)


def word_str(w: Sequence[int], d: int | None = None) -> str:
    if (d is not None and d > 10) or any(x > 9 for x in w):
        return ",".join(str(x) for x in w)
    return "".join(str(x) for x in w)


def loop(x: int, D: int = 3) -> Word:
    return (x,) * D


def is_loop(w: Sequence[int]) -> bool:
    return all(x == w[0] for x in w)


def replace_digit(w: Word, old: int, new: int) -> Word:
    return tuple(new if x == old else x for x in w)


def theta(w: Word) -> Word:
    """Rotate a word one place to the left: xyz -> yzx."""
    return w[1:] + w[:1]


def cycle_of(w: Word) -> frozenset[Word]:
    orbit = {w}
    v = theta(w)
    while v != w:
        orbit.add(v)
        v = theta(v)
    return frozenset(orbit)


def adjacent(x: Sequence[int], y: Sequence[int]) -> bool:
    """True iff B(d, D) has the edge x -> y (self-loops included)."""
    if len(x) != len(y):
        raise ValueError("words must have the same length")
    return tuple(x[1:]) == tuple(y[:-1])


def pack(w: Sequence[int], d: int) -> int:
    key = 0
    for x in w:
        key = key * d + x
    return key


def unpack(key: int, d: int, D: int) -> Word:
    digits = []
    for _ in range(D):
        key, r = divmod(key, d)
        digits.append(r)
    return tuple(reversed(digits))


@dataclass(frozen=True)
class DeBruijnGraph:
    d: int
    D: int
    self_loops_removed: bool = False
    cycles: tuple[tuple[Word, ...], ...] = field(default=(), compare=False, repr=False)

    @property
    def num_nodes(self) -> int:
        return self.d**self.D

    @property
    def num_edges(self) -> int:
        return self.d ** (self.D + 1) - (self.d if self.self_loops_removed else 0)

    def nodes(self) -> Iterator[Word]:
        return itertools.product(range(self.d), repeat=self.D)

    def contains(self, w: Sequence[int]) -> bool:
        return len(w) == self.D and all(0 <= x < self.d for x in w)

    def successors(self, w: Word) -> list[Word]:
        out = [w[1:] + (c,) for c in range(self.d)]
        if self.self_loops_removed and is_loop(w):
            out.remove(w)
        return out

    def predecessors(self, w: Word) -> list[Word]:
        out = [(c,) + w[:-1] for c in range(self.d)]
        if self.self_loops_removed and is_loop(w):
            out.remove(w)
        return out

    def has_edge(self, x: Word, y: Word) -> bool:
        if self.self_loops_removed and x == y:
            return False
        return adjacent(x, y)

    def edges(self) -> Iterator[tuple[Word, Word]]:
        for w in self.nodes():
            for v in self.successors(w):
                yield w, v

    def three_cycles(self) -> list[tuple[Word, ...]]:
        return [c for c in self.cycles if len(c) == 3]

    def loops(self) -> list[Word]:
        return [c[0] for c in self.cycles if len(c) == 1]


@functools.lru_cache(maxsize=64)
def theta_cycles(d: int, D: int) -> tuple[tuple[Word, ...], ...]:
    """All shift orbits of B(d, D), each listed from its least member, in order."""
    seen: set[Word] = set()
    out = []
    for w in itertools.product(range(d), repeat=D):
        if w in seen:
            continue
        orbit = [w]
        v = theta(w)
        while v != w:
            orbit.append(v)
            v = theta(v)
        seen.update(orbit)
        out.append(tuple(orbit))
    return tuple(out)


def build_graph(d: int, D: int = 3, drop_self_loops: bool = False, budget: int | None = None) -> DeBruijnGraph:
    if d < 1 or D < 1:
        raise ValueError(f"need d >= 1 and D >= 1, got d={d}, D={D}")
    if d > MAX_ALPHABET:
        raise ValueError(f"alphabet size {d} exceeds {MAX_ALPHABET}")
    limit = node_budget(budget)
    if d**D > limit:
        raise BudgetExceeded(f"B({d},{D}) has {d**D} nodes, budget is {limit}")
    return DeBruijnGraph(d, D, drop_self_loops, theta_cycles(d, D))


def export_dot(
    g: DeBruijnGraph,
    highlight: Iterable[Sequence[int]] | None = None,
    bold_theta: bool = False,
) -> str:
    marked: set[Word] = set()
    for w in highlight or ():
        w = tuple(w)
        if not g.contains(w):
            raise ValueError(f"highlighted word {word_str(w)} is not a node of B({g.d},{g.D})")
        marked.add(w)

    def label(w: Word) -> str:
        return '"' + word_str(w, g.d) + '"'

    lines = [f'digraph "B({g.d},{g.D})" {{']
    for w in g.nodes():
        if w in marked:
            lines.append(f"  {label(w)} [style=filled, fillcolor=lightgray];")
        else:
            lines.append(f"  {label(w)};")
    for x, y in g.edges():
        if bold_theta and not is_loop(x) and y == theta(x):
            lines.append(f"  {label(x)} -> {label(y)} [style=bold];")
        else:
            lines.append(f"  {label(x)} -> {label(y)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
