"""The operators f, f', g, g', their inverses, and the MIS <-> LMIS bijection.

Every MIS of B(d, 3) is, up to a digit permutation, obtained from one of two
base sets by a unique word over {f, f', g, g'}.  :func:`decompose` recovers
that word and :func:`construct` replays it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .group import Permutation, act, describe_group, transporter
from .sets import CandidateSet, Kind, MaxIndepSet, M_set, validate_mis
from .words import Word, replace_digit

OPS = ("f", "f'", "g", "g'")
BASES = ("B1", "B2")


class DecompositionError(RuntimeError):
    """A set could not be peeled; only raised if a structural theorem is violated."""


def _mis(d: int, words) -> MaxIndepSet:
    return validate_mis(CandidateSet(d, frozenset(words)), Kind.WITH_LOOPS)


B1 = _mis(1, [(0, 0, 0)])
B2 = _mis(2, [(0, 0, 0), (0, 1, 0), (1, 1, 1)])


def base_set(name: str) -> MaxIndepSet:
    if name == "B1":
        return B1
    if name == "B2":
        return B2
    raise ValueError(f"unknown base {name!r}")


def _require_mis(S: MaxIndepSet) -> None:
    if not isinstance(S, MaxIndepSet) or S.kind is not Kind.WITH_LOOPS:
        raise TypeError("operator input must be a validated with-loops MIS")


def _substituted(S: MaxIndepSet, targets: Sequence[int]) -> set[Word]:
    # words containing a, other than aaa and aba, with a renamed to each target
    a, b = S.a, S.b
    skip = {(a, a, a)}
    if b is not None:
        skip.add((a, b, a))
    return {replace_digit(w, a, t) for w in S.words if a in w and w not in skip for t in targets}


def _one_digit(S: MaxIndepSet, reverse: bool) -> MaxIndepSet:
    _require_mis(S)
    n, a, L = S.d, S.a, S.loops
    free = [x for x in range(S.d) if x not in L]
    out = set(S.words)
    out |= _substituted(S, [n])
    out |= {(a, x, n) for x in free}
    out |= {(n, x, a) for x in free}
    out |= {(u, n, v) for u in L for v in L}
    if reverse:
        out |= {(n, n, u) for u in L}
    else:
        out |= {(u, n, n) for u in L}
    return _mis(n + 1, out)


def apply_f(S: MaxIndepSet) -> MaxIndepSet:
    return _one_digit(S, reverse=False)


def apply_f_prime(S: MaxIndepSet) -> MaxIndepSet:
    return _one_digit(S, reverse=True)


def _two_digit(S: MaxIndepSet, reverse: bool) -> MaxIndepSet:
    _require_mis(S)
    p, q = S.d, S.d + 1
    new = (p, q)
    a, L = S.a, S.loops
    free = [x for x in range(S.d) if x not in L]
    out = set(S.words)
    out |= _substituted(S, new)
    out |= {(a, x, y) for x in free for y in new}
    out |= {(y, x, a) for x in free for y in new}
    out |= {(y, x, z) for y in new for z in new if y != z for x in free}
    out |= {(u, y, v) for u in L for v in L for y in new}
    if reverse:
        out |= {(y, y, u) for u in L for y in new}
        out |= {(u, y, z) for y in new for z in new if y != z for u in L}
        out |= {(q, q, p), (p, p, q)}
    else:
        out |= {(u, y, y) for u in L for y in new}
        out |= {(y, z, u) for y in new for z in new if y != z for u in L}
        out |= {(p, q, q), (q, p, p)}
    return _mis(S.d + 2, out)


def apply_g(S: MaxIndepSet) -> MaxIndepSet:
    return _two_digit(S, reverse=False)


def apply_g_prime(S: MaxIndepSet) -> MaxIndepSet:
    return _two_digit(S, reverse=True)


OPERATORS: dict[str, Callable[[MaxIndepSet], MaxIndepSet]] = {
    "f": apply_f,
    "f'": apply_f_prime,
    "g": apply_g,
    "g'": apply_g_prime,
}

GROWTH = {"f": 1, "f'": 1, "g": 2, "g'": 2}


def apply_op(tag: str, S: MaxIndepSet) -> MaxIndepSet:
    try:
        return OPERATORS[tag](S)
    except KeyError:
        raise ValueError(f"unknown operator {tag!r}") from None


def restrict(S: MaxIndepSet, d_new: int) -> MaxIndepSet:
    """S intersected with B(d_new, 3); keeps every loop, so all loops must be < d_new."""
    if not 1 <= d_new < S.d:
        raise ValueError(f"need 1 <= d_new < {S.d}, got {d_new}")
    if any(u >= d_new for u in S.loops):
        raise ValueError(f"loop digits {S.loops} must all be below {d_new}")
    words = frozenset(w for w in S.words if max(w) < d_new)
    return validate_mis(CandidateSet(d_new, words), S.kind)


def _sigma_apply(sigma: Permutation, S: MaxIndepSet) -> MaxIndepSet:
    return validate_mis(act(sigma, S), S.kind)


def decompose_step(S: MaxIndepSet) -> tuple[str, Permutation, MaxIndepSet]:
    """Peel one operator: returns (tag, sigma, S_prev) with S = sigma(tag(S_prev))."""
    _require_mis(S)
    d = S.d
    if d < 3:
        raise ValueError(f"decompose_step needs d >= 3, got {d}")
    l, L = S.l, set(S.loops)
    M = {x: M_set(S, x) for x in range(d)}
    free = [x for x in range(d) if x not in L]

    ones = [x for x in free if len(M[x]) == l + 1]
    if len(ones) > 1:
        raise DecompositionError(f"several digits with m = l+1: {ones}")
    if ones:
        x = ones[0]
        sigma = Permutation.transposition(d, x, d - 1)
        T = _sigma_apply(sigma, S)
        top, a = d - 1, T.a
        has_axx = (a, top, top) in T.words
        has_xxa = (top, top, a) in T.words
        if has_axx == has_xxa:
            raise DecompositionError("expected exactly one of a x x and x x a in S")
        tag = "f" if has_axx else "f'"
        prev = restrict(T, d - 1)
    else:
        twos = [x for x in free if len(M[x]) == l + 2]
        if len(twos) != 2:
            raise DecompositionError(f"neither an m = l+1 digit nor exactly two m = l+2 digits: {twos}")
        y, z = twos
        p, q = d - 2, d - 1
        first = Permutation.transposition(d, y, p)
        pi = Permutation.transposition(d, first(z), q).compose(first)
        T = _sigma_apply(pi, S)
        if (p, q, q) in T.words and (q, p, p) in T.words:
            tag = "g"
        elif (q, q, p) in T.words and (p, p, q) in T.words:
            tag = "g'"
        else:
            raise DecompositionError("two new digits show neither the g nor the g' pattern")
        prev = restrict(T, d - 2)
        sigma = pi.inverse()

    if _sigma_apply(sigma, apply_op(tag, prev)) != S:
        raise DecompositionError(f"{tag} does not reproduce the input after peeling")
    return tag, sigma, prev


@dataclass(frozen=True)
class ConstructionTrace:
    base: str
    ops: tuple[str, ...]
    final_perm: Permutation

    def __post_init__(self):
        object.__setattr__(self, "ops", tuple(self.ops))
        if self.base not in BASES:
            raise ValueError(f"unknown base {self.base!r}")
        for op in self.ops:
            if op not in OPERATORS:
                raise ValueError(f"unknown operator {op!r}")
        if self.final_perm.n != self.d:
            raise ValueError(f"permutation on {self.final_perm.n} digits, trace builds d={self.d}")

    @property
    def d(self) -> int:
        return base_set(self.base).d + sum(GROWTH[op] for op in self.ops)

    def key(self) -> tuple[str, tuple[str, ...]]:
        return self.base, self.ops

    def __str__(self) -> str:
        ops = " ".join(self.ops) or "-"
        return f"{self.base} [{ops}] perm={list(self.final_perm.images)}"


def build(base: str, ops: Sequence[str]) -> MaxIndepSet:
    S = base_set(base)
    for op in ops:
        S = apply_op(op, S)
    return S


def construct(trace: ConstructionTrace) -> MaxIndepSet:
    return _sigma_apply(trace.final_perm, build(trace.base, trace.ops))


def decompose(S: MaxIndepSet) -> ConstructionTrace:
    _require_mis(S)
    d = S.d
    peeled: list[str] = []
    perm = Permutation.identity(d)
    cur = S
    # invariant: S = perm(ops_peeled(cur)) with ops applied innermost-last
    while cur.d >= 3:
        tag, sigma, cur = decompose_step(cur)
        peeled.append(tag)
        perm = perm.compose(sigma.extend(d))

    if cur.d == 1:
        base = "B1"
    else:
        for tag in ("f", "f'"):
            rho = transporter(apply_op(tag, B1), cur)
            if rho is not None:
                base = "B1"
                peeled.append(tag)
                break
        else:
            rho = transporter(B2, cur)
            if rho is None:
                raise DecompositionError(f"{cur} is in none of the three d=2 orbits")
            base = "B2"
        perm = perm.compose(rho.extend(d))

    trace = ConstructionTrace(base, tuple(reversed(peeled)), perm)
    if construct(trace) != S:
        raise DecompositionError("trace does not rebuild the input")
    return trace


def trace_stabilizer(trace: ConstructionTrace):
    """Stabilizer predicted from the operator sequence: each g or g' adjoins
    the swap of its two new digits, f and f' add nothing."""
    n = base_set(trace.base).d
    pairs = []
    for op in trace.ops:
        if op in ("g", "g'"):
            pairs.append((n, n + 1))
        n += GROWTH[op]
    pi = trace.final_perm
    return describe_group(n, [(pi(i), pi(j)) for i, j in pairs])


def to_loopless(S: MaxIndepSet) -> MaxIndepSet:
    _require_mis(S)
    a, b = S.a, S.b
    words = set(S.words)
    if b is None:
        words.discard((a, a, a))
    else:
        words -= {(a, a, a), (b, b, b), (a, b, a)}
        if a < b:
            words |= {(a, a, b), (b, b, a)}
        else:
            words |= {(b, a, a), (a, b, b)}
    return validate_mis(CandidateSet(S.d, frozenset(words)), Kind.LOOPLESS)


def from_loopless(T: MaxIndepSet) -> MaxIndepSet:
    """Inverse of :func:`to_loopless`."""
    if not isinstance(T, MaxIndepSet) or T.kind is not Kind.LOOPLESS:
        raise TypeError("from_loopless needs a validated loop-less MIS")
    d, words = T.d, set(T.words)
    M = {x: M_set(T, x) for x in range(d)}
    ones = [x for x in range(d) if len(M[x]) == 1]
    twos = [x for x in range(d) if len(M[x]) == 2]
    if len(ones) == 1:
        x = ones[0]
        S = _mis(d, words | {(x, x, x)})
    elif not ones and len(twos) == 2:
        x, y = twos
        if (x, x, y) in words and (y, y, x) in words:
            S = _mis(d, (words - {(x, x, y), (y, y, x)}) | {(x, x, x), (y, y, y), (x, y, x)})
            swap = x > y
        elif (y, x, x) in words and (x, y, y) in words:
            S = _mis(d, (words - {(y, x, x), (x, y, y)}) | {(x, x, x), (y, y, y), (x, y, x)})
            swap = x < y
        else:
            raise ValueError("digits with m = 2 show neither pair pattern")
        if swap:
            S = _sigma_apply(Permutation.transposition(d, x, y), S)
    else:
        raise ValueError(f"not a loop-less MIS: m = 1 digits {ones}, m = 2 digits {twos}")
    if to_loopless(S) != T:
        raise DecompositionError("from_loopless is not inverse to to_loopless here")
    return S
