"""Exact counts: recurrences, the b_{d,k} orbit table, EGF coefficients, D = 2."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction


@dataclass
class CountTable:
    d_max: int
    a: dict[int, int] = field(default_factory=dict)
    # (d, k) -> orbit count, and its split by number of loops
    b: dict[tuple[int, int], int] = field(default_factory=dict)
    one_loop: dict[tuple[int, int], int] = field(default_factory=dict)
    two_loop: dict[tuple[int, int], int] = field(default_factory=dict)

    def ks(self, d: int) -> list[int]:
        return sorted(k for dd, k in self.b if dd == d)

    def orbits(self, d: int) -> int:
        return sum(self.b[d, k] for k in self.ks(d))

    def rows(self) -> list[tuple[int, int, int, int, int, int]]:
        """(d, k, b_dk, one_loop_orbits, two_loop_orbits, a_d) for every nonzero entry."""
        return [
            (d, k, self.b[d, k], self.one_loop[d, k], self.two_loop[d, k], self.a[d])
            for d in range(1, self.d_max + 1)
            for k in self.ks(d)
        ]


def count_mis(d_max: int) -> CountTable:
    if d_max < 1:
        raise ValueError(f"need d_max >= 1, got {d_max}")
    table = CountTable(d_max)
    one, two = table.one_loop, table.two_loop
    one[1, 0], two[1, 0] = 1, 0
    one[2, 0], two[2, 0] = 2, 1
    for d in range(3, d_max + 1):
        for k in range(d // 2 + 1):
            for split in (one, two):
                v = 2 * split.get((d - 1, k), 0) + 2 * split.get((d - 2, k - 1), 0)
                if v:
                    split[d, k] = v
    for d in range(1, d_max + 1):
        for k in range(d // 2 + 1):
            total = one.get((d, k), 0) + two.get((d, k), 0)
            if total:
                one.setdefault((d, k), 0)
                two.setdefault((d, k), 0)
                table.b[d, k] = total

    a = table.a
    a[1] = 1
    if d_max >= 2:
        a[2] = 6
    for d in range(3, d_max + 1):
        a[d] = 2 * d * a[d - 1] + d * (d - 1) * a[d - 2]

    for d in range(1, d_max + 1):
        total = 0
        for k in table.ks(d):
            q, r = divmod(math.factorial(d) * table.b[d, k], 2**k)
            assert r == 0
            total += q
        if total != a[d]:
            raise AssertionError(f"orbit-stabilizer sum {total} != a_{d} = {a[d]}")
    return table


def series_divide(num: list, den: list, terms: int) -> list:
    """First ``terms`` coefficients of num/den as formal power series.

    Coefficients may be any ring elements supporting + - * (ints, Fractions,
    or the sparse polynomials used for the bivariate series); den[0] must be 1.
    """
    if den[0] != 1:
        raise ValueError("denominator must have constant term 1")
    out = []
    for n in range(terms):
        c = num[n] if n < len(num) else 0
        for i in range(1, min(n, len(den) - 1) + 1):
            c = c - den[i] * out[n - i]
        out.append(c)
    return out


def egf_coefficients(d_max: int) -> list[tuple[Fraction, int]]:
    """[(c_d, d! c_d)] for d = 1..d_max, where sum c_d t^d = (t + t^2) / (1 - 2t - t^2)."""
    coeffs = series_divide([Fraction(0), Fraction(1), Fraction(1)], [1, -2, -1], d_max + 1)
    out = []
    for d in range(1, d_max + 1):
        c = coeffs[d]
        a = c * math.factorial(d)
        assert a.denominator == 1
        out.append((c, int(a)))
    return out


class _Poly(dict):
    """Sparse polynomial in s: {power: coefficient}."""

    def __add__(self, other):
        other = _as_poly(other)
        out = _Poly(self)
        for k, v in other.items():
            out[k] = out.get(k, 0) + v
        return _Poly({k: v for k, v in out.items() if v})

    __radd__ = __add__

    def __neg__(self):
        return _Poly({k: -v for k, v in self.items()})

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        out: dict[int, int] = {}
        for i, u in self.items():
            for j, v in other.items():
                out[i + j] = out.get(i + j, 0) + u * v
        return _Poly({k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __eq__(self, other):
        return dict.__eq__(self, _as_poly(other))

    def __ne__(self, other):
        return not self == other

    __hash__ = None


def _as_poly(x) -> _Poly:
    if isinstance(x, _Poly):
        return x
    return _Poly({0: x} if x else {})


def bivariate_coefficients(d_max: int) -> dict[tuple[int, int], int]:
    """Coefficients of t^d s^k in (t + t^2) / (1 - 2t - 2t^2 s)."""
    num = [_Poly(), _Poly({0: 1}), _Poly({0: 1})]
    den = [_Poly({0: 1}), _Poly({0: -2}), _Poly({1: -2})]
    coeffs = series_divide(num, den, d_max + 1)
    return {(d, k): v for d in range(1, d_max + 1) for k, v in sorted(coeffs[d].items())}


def count_mis_D2(d: int) -> int:
    """Number of maximum independent sets of B(d, 2), valid for d >= 4."""
    if d < 4:
        raise ValueError(f"the B(d,2) count formula holds for d >= 4, got d={d}")
    if d % 2 == 0:
        return math.comb(d, d // 2)
    return 2 * math.comb(d, (d - 1) // 2)
