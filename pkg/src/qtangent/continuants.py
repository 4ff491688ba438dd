"""Continuants of the q-tangent continued fraction and their z^2-coefficients.

The continued fraction is ``-z^2/(b_1 - z^2/(b_2 - z^2/(b_3 - ...)))`` with

    b_n = [2n-1]_q * q^e(n),    e(n) = (-1)^(n-1) n(n-1)/2 - n + 1,

and ``A_n / B_n`` is its truncation after ``b_n``.  Polynomials in z are
plain lists of LaurentPoly indexed by the power of z.

The coefficient tables ``c[n,k]`` (of z^(2k) in A_n) and ``d[n,k]`` (in B_n)
are produced three ways so they can be checked against each other:

* ``direct``: read off the polynomials built by the three-term recurrence;
* ``recursion``: ``c[n,k] = b_n c[n-1,k] - c[n-2,k-1]`` on the table;
* ``sumform``: the unrolled recurrence

      c[n,k] = P(1..n) c[0,k] - sum_{i=-1}^{n-2} c[i,k-1] P(i+3..n),

  ``P(a..b)`` being the product of ``b_a ... b_b``.  For k >= 2 the boundary
  terms vanish and only ``i = 0 .. n-2`` contributes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Sequence

from .exact import LaurentPoly
from .qseries import q_bracket

ZPoly = tuple  # tuple of LaurentPoly, index = power of z

_ZERO = LaurentPoly()
_ONE = LaurentPoly.one()


def b_exponent(n: int) -> int:
    """q-exponent of the n-th partial denominator."""
    return (-1) ** (n - 1) * n * (n - 1) // 2 - n + 1


@lru_cache(maxsize=None)
def b_coeff(n: int) -> LaurentPoly:
    if n < 0:
        raise ValueError(f"b_coeff needs n >= 0, got {n}")
    if n == 0:
        return _ZERO
    return q_bracket(2 * n - 1).shift(2 * b_exponent(n))


def partial_denominators(m: int, corrupt: int | None = None) -> list[LaurentPoly]:
    """``[b_1, ..., b_m]``; ``corrupt=j`` perturbs ``b_j`` (negative-control hook)."""
    bs = [b_coeff(i) for i in range(1, m + 1)]
    if corrupt is not None and 1 <= corrupt <= m:
        bs[corrupt - 1] = corrupt_b(bs[corrupt - 1])
    return bs


def corrupt_b(b: LaurentPoly) -> LaurentPoly:
    # shifts the top term by one power of q: same shape, wrong value
    return b + LaurentPoly.monomial(b.degree + 2)


@dataclass(frozen=True)
class CFPartialDenominator:
    n: int
    value: LaurentPoly

    @classmethod
    def of(cls, n: int) -> "CFPartialDenominator":
        if n < 1:
            raise ValueError("partial denominators start at n = 1")
        return cls(n, b_coeff(n))


# ---------------------------------------------------------------------------
# polynomials in z


def zpoly_trim(p: Sequence[LaurentPoly]) -> ZPoly:
    p = list(p)
    while p and p[-1].is_zero():
        p.pop()
    return tuple(p)


def zpoly_add(a: ZPoly, b: ZPoly, sign: int = 1) -> ZPoly:
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else _ZERO
        y = b[i] if i < len(b) else _ZERO
        out.append(x + y if sign > 0 else x - y)
    return zpoly_trim(out)


def zpoly_mul(a: ZPoly, b: ZPoly) -> ZPoly:
    if not a or not b:
        return ()
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for j, y in enumerate(b):
            if not y.is_zero():
                out[i + j] = out[i + j] + x * y
    return zpoly_trim(out)


def zpoly_scale(a: ZPoly, c: LaurentPoly) -> ZPoly:
    return zpoly_trim([x * c for x in a])


def zpoly_shift(a: ZPoly, k: int) -> ZPoly:
    return zpoly_trim([_ZERO] * k + list(a)) if a else ()


def z_monomial(k: int, c: LaurentPoly = _ONE) -> ZPoly:
    return zpoly_trim([_ZERO] * k + [c])


@dataclass(frozen=True)
class ContinuantPair:
    n: int
    A: ZPoly
    B: ZPoly


def continuant_pairs(
    n_max: int, b: Callable[[int], LaurentPoly] = b_coeff
) -> list[ContinuantPair]:
    """``A_n, B_n`` for ``n = -1 .. n_max`` from ``A_{-1}=1, B_{-1}=0, A_0=b_0, B_0=1``."""
    if n_max < -1:
        raise ValueError(f"n_max must be >= -1, got {n_max}")
    pairs = [ContinuantPair(-1, (_ONE,), ())]
    if n_max >= 0:
        pairs.append(ContinuantPair(0, zpoly_trim([b(0)]), (_ONE,)))
    for n in range(1, n_max + 1):
        p1, p2 = pairs[-1], pairs[-2]
        bn = b(n)
        A = zpoly_add(zpoly_scale(p1.A, bn), zpoly_shift(p2.A, 2), -1)
        B = zpoly_add(zpoly_scale(p1.B, bn), zpoly_shift(p2.B, 2), -1)
        pairs.append(ContinuantPair(n, A, B))
    return pairs


@lru_cache(maxsize=None)
def _pairs_cached(n_max: int) -> tuple[ContinuantPair, ...]:
    return tuple(continuant_pairs(n_max))


def continuant(n: int) -> ContinuantPair:
    return _pairs_cached(max(n, 0))[n + 1]


# ---------------------------------------------------------------------------
# coefficient tables


@dataclass
class CoeffTable:
    route: str
    c: dict = field(default_factory=dict)
    d: dict = field(default_factory=dict)

    def window(self) -> set:
        return set(self.c)


def cd_direct(n_max: int, k_max: int) -> CoeffTable:
    table = CoeffTable("direct")
    for pair in continuant_pairs(n_max)[1:]:
        for k in range(k_max + 1):
            table.c[pair.n, k] = pair.A[2 * k] if 2 * k < len(pair.A) else _ZERO
            table.d[pair.n, k] = pair.B[2 * k] if 2 * k < len(pair.B) else _ZERO
    return table


def _seed(n: int, k: int, which: str) -> LaurentPoly:
    # boundary values from A_{-1}=1, B_{-1}=0, A_0=0, B_0=1
    if k < 0:
        return _ZERO
    if n == -1:
        return _ONE if (which == "c" and k == 0) else _ZERO
    if n == 0:
        return _ONE if (which == "d" and k == 0) else _ZERO
    raise KeyError((n, k))


def cd_recursive(n_max: int, k_max: int) -> CoeffTable:
    table = CoeffTable("recursion")
    c: dict = {}
    d: dict = {}

    def get(tab, n, k, which):
        if n <= 0 or k < 0:
            return _seed(n, k, which)
        return tab[n, k]

    for n in range(0, n_max + 1):
        for k in range(k_max + 1):
            if n == 0:
                c[n, k] = _seed(0, k, "c")
                d[n, k] = _seed(0, k, "d")
                continue
            bn = b_coeff(n)
            c[n, k] = bn * get(c, n - 1, k, "c") - get(c, n - 2, k - 1, "c")
            d[n, k] = bn * get(d, n - 1, k, "d") - get(d, n - 2, k - 1, "d")
    table.c, table.d = c, d
    return table


def b_product(lo: int, hi: int) -> LaurentPoly:
    """``b_lo * ... * b_hi``; 1 for an empty range."""
    return _b_product(lo, hi)


@lru_cache(maxsize=None)
def _b_product(lo: int, hi: int) -> LaurentPoly:
    if lo > hi:
        return _ONE
    return _b_product(lo, hi - 1) * b_coeff(hi)


def base_products(n: int) -> LaurentPoly:
    """``b_1 b_2 ... b_n``, the value of ``-c[n,1]`` and ``d[n,0]``."""
    if n < 1:
        raise ValueError(f"base_products needs n >= 1, got {n}")
    return b_product(1, n)


def cd_sumform(n_max: int, k_max: int) -> CoeffTable:
    table = CoeffTable("sumform")
    c: dict = {}
    d: dict = {}

    def get(tab, n, k, which):
        if n <= 0 or k < 0:
            return _seed(n, k, which)
        return tab[n, k]

    for k in range(k_max + 1):
        for n in range(0, n_max + 1):
            if n == 0:
                c[n, k] = _seed(0, k, "c")
                d[n, k] = _seed(0, k, "d")
                continue
            head = b_product(1, n)
            cv = head * _seed(0, k, "c")
            dv = head * _seed(0, k, "d")
            for i in range(-1, n - 1):
                tail = b_product(i + 3, n)
                cv = cv - get(c, i, k - 1, "c") * tail
                dv = dv - get(d, i, k - 1, "d") * tail
            c[n, k] = cv
            d[n, k] = dv
    table.c, table.d = c, d
    return table


def determinant(n: int) -> ZPoly:
    """``A_n B_{n-1} - A_{n-1} B_n`` as a polynomial in z."""
    if n < 0:
        raise ValueError("determinant needs n >= 0")
    pairs = _pairs_cached(max(n, 0))
    cur, prev = pairs[n + 1], pairs[n]
    return zpoly_add(zpoly_mul(cur.A, prev.B), zpoly_mul(prev.A, cur.B), -1)
