"""Enumerating MISs and LMISs, by orbit construction and by exact search."""

from __future__ import annotations

import functools
import itertools
from typing import Iterator

from .budget import BudgetExceeded, oracle_budget
from .constructors import B1, B2, ConstructionTrace, apply_op, to_loopless
from .group import Permutation, expand_orbit
from .sets import CandidateSet, Kind, MaxIndepSet, sort_sets
from .words import theta_cycles

ENUMERATION_MAX_D = 5


@functools.lru_cache(maxsize=None)
def _reps(d: int) -> tuple[tuple[MaxIndepSet, str, tuple[str, ...]], ...]:
    if d == 1:
        return ((B1, "B1", ()),)
    if d == 2:
        return (
            (apply_op("f", B1), "B1", ("f",)),
            (apply_op("f'", B1), "B1", ("f'",)),
            (B2, "B2", ()),
        )
    out = []
    for tag, prev_d in (("f", d - 1), ("f'", d - 1), ("g", d - 2), ("g'", d - 2)):
        for S, base, ops in _reps(prev_d):
            out.append((apply_op(tag, S), base, ops + (tag,)))
    return tuple(out)


def enumerate_orbit_reps(d: int) -> list[tuple[MaxIndepSet, ConstructionTrace]]:
    """One constructed representative per orbit of MISs of B(d, 3), sorted by trace."""
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    reps = [(S, ConstructionTrace(base, ops, Permutation.identity(d))) for S, base, ops in _reps(d)]
    return sorted(reps, key=lambda pair: pair[1].key())


def enumerate_all(d: int, kind: Kind = Kind.WITH_LOOPS, max_d: int = ENUMERATION_MAX_D) -> Iterator[MaxIndepSet]:
    """Every MIS (or LMIS) of B(d, 3) in lexicographic order."""
    kind = Kind(kind)
    if d > max_d:
        raise BudgetExceeded(f"full enumeration limited to d <= {max_d}, got d={d}")
    sets = [T for S, _ in enumerate_orbit_reps(d) for T in expand_orbit(S)]
    if kind is Kind.LOOPLESS:
        sets = [to_loopless(S) for S in sets]
    yield from sort_sets(sets)


def lichiardopol_bound(d: int, D: int, kind: Kind) -> int:
    """Upper bound on the independence number for prime D; attained for D in {3, 5, 7}."""
    base = (D - 1) * (d**D - d) // (2 * D)
    return base + 1 if Kind(kind) is Kind.WITH_LOOPS else base


def oracle_enumerate(
    d: int,
    D: int = 3,
    kind: Kind = Kind.WITH_LOOPS,
    budget: int | None = None,
    target: int | None = None,
) -> list[CandidateSet]:
    """All maximum independent sets of B(d, D) by exhaustive branch and bound.

    Independent of the operator machinery: it only knows the edge rule.  The
    search walks shift-orbits in lexicographic order, choosing for each an
    independent subset of its members (possibly empty), and prunes with the
    bound "each orbit of length p adds at most p // 2 more nodes".  With-loops
    kind ignores self-loop edges; loop-less kind never picks a loop.

    ``target`` is the known maximum size.  For D in {3, 5, 7} it defaults to
    the attained Lichiardopol bound; otherwise the maximum is found by the
    search itself.
    """
    kind = Kind(kind)
    limit = oracle_budget(budget)
    n = d**D
    if n > limit:
        raise BudgetExceeded(f"oracle over B({d},{D}) has {n} nodes, budget is {limit}")
    if target is None and D in (3, 5, 7):
        target = lichiardopol_bound(d, D, kind)

    nodes = list(itertools.product(range(d), repeat=D))
    index = {w: i for i, w in enumerate(nodes)}
    nbr = [0] * n
    for i, w in enumerate(nodes):
        for c in range(d):
            j = index[w[1:] + (c,)]
            if i == j:
                continue
            nbr[i] |= 1 << j
            nbr[j] |= 1 << i

    cycles = []
    for cyc in theta_cycles(d, D):
        members = [index[w] for w in cyc]
        if len(cyc) == 1:
            cap = 0 if kind is Kind.LOOPLESS else 1
        else:
            cap = len(cyc) // 2
        if cap:
            mask = 0
            for v in members:
                mask |= 1 << v
            cycles.append((members, cap, mask))
    n_cycles = len(cycles)

    def bound(i: int, blocked: int) -> int:
        # each remaining orbit adds at most min(cap, its unblocked members)
        total = 0
        for _, cap, mask in cycles[i:]:
            free = mask & ~blocked
            if free:
                total += min(cap, bin(free).count("1"))
        return total

    def options(members: list[int], cap: int, blocked: int) -> list[tuple[int, int, int]]:
        # independent subsets of this orbit avoiding blocked nodes: (mask, size, their neighbours)
        free = [v for v in members if not blocked >> v & 1]
        out = [(0, 0, 0)]
        for size in range(1, cap + 1):
            for combo in itertools.combinations(free, size):
                mask = nb = 0
                for v in combo:
                    if nbr[v] & mask:
                        break
                    mask |= 1 << v
                    nb |= nbr[v]
                else:
                    out.append((mask, size, nb))
        return out

    best = target if target is not None else 0
    found: list[int] = []

    def search(i: int, chosen: int, blocked: int, size: int) -> None:
        nonlocal best, found
        if i == n_cycles:
            if size > best:
                best, found = size, []
            if size == best:
                found.append(chosen)
            return
        if size + bound(i, blocked) < best:
            return
        members, cap, _ = cycles[i]
        for mask, k, nb in reversed(options(members, cap, blocked)):
            search(i + 1, chosen | mask, blocked | nb, size + k)

    search(0, 0, 0, 0)
    sets = [CandidateSet(d, frozenset(nodes[i] for i in range(n) if m >> i & 1)) for m in found]
    return sort_sets(sets)


def count_orbits_by_stabilizer(d: int) -> dict[tuple[int, int], int]:
    """(k, loop count) -> number of orbits, read off the constructed representatives."""
    from .group import stabilizer

    table: dict[tuple[int, int], int] = {}
    for S, _ in enumerate_orbit_reps(d):
        key = (stabilizer(S).k, S.l)
        table[key] = table.get(key, 0) + 1
    return table
