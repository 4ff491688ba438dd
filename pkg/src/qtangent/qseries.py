"""q-numbers, q-Pochhammer symbols and truncated power series in z.

Series coefficients are :class:`RationalFunc` values in ``u = q^(1/2)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .exact import LaurentPoly, RationalFunc, product


def q_bracket(n: int) -> LaurentPoly:
    """``[n]_q = 1 + q + ... + q^(n-1)``; ``[0]_q = 0``."""
    if n < 0:
        raise ValueError(f"q_bracket needs n >= 0, got {n}")
    return LaurentPoly({2 * i: 1 for i in range(n)})


@lru_cache(maxsize=None)
def q_factorial(n: int) -> LaurentPoly:
    if n < 0:
        raise ValueError(f"q_factorial needs n >= 0, got {n}")
    if n == 0:
        return LaurentPoly.one()
    return q_factorial(n - 1) * q_bracket(n)


@dataclass(frozen=True)
class QPochSpec:
    """``(sign*u^a_exp; u^base_exp)_length``.

    Exponents count powers of ``u``: the base ``q^2`` is ``base_exp=4`` and
    the argument ``-q^(9/2-k)`` is ``sign=-1, a_exp=9-2k``.
    """

    sign: int
    a_exp: int
    base_exp: int
    length: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        if self.length < 0:
            raise ValueError(f"negative Pochhammer length {self.length}")
        if self.base_exp < 2 or self.base_exp % 2:
            raise ValueError(f"base exponent must be even and >= 2, got {self.base_exp}")


def q_pochhammer(spec: QPochSpec) -> LaurentPoly:
    return _qpoch(spec.sign, spec.a_exp, spec.base_exp, spec.length)


@lru_cache(maxsize=4096)
def _qpoch(sign: int, a_exp: int, base_exp: int, length: int) -> LaurentPoly:
    if length == 0:
        return LaurentPoly.one()
    factor = LaurentPoly.one() - LaurentPoly.monomial(a_exp + base_exp * (length - 1), sign)
    return _qpoch(sign, a_exp, base_exp, length - 1) * factor


def qpoch(a_exp_q, base_q: int, length: int, sign: int = 1) -> LaurentPoly:
    """Convenience form in q-exponents: ``(sign*q^a_exp_q; q^base_q)_length``.

    ``a_exp_q`` may be a half-integer (``Fraction`` or float like 8.5).
    """
    a_u = 2 * a_exp_q
    if a_u != int(a_u):
        raise ValueError(f"q-exponent {a_exp_q} is not a multiple of 1/2")
    return q_pochhammer(QPochSpec(sign, int(a_u), 2 * base_q, length))


# ---------------------------------------------------------------------------


class ZSeries:
    """Power series in ``z`` known modulo ``z**order``."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Sequence, order: int | None = None):
        coeffs = [RationalFunc.coerce(c) for c in coeffs]
        if order is None:
            order = len(coeffs)
        if order < 0:
            raise ValueError(f"negative truncation order {order}")
        zero = RationalFunc.zero()
        coeffs = coeffs[:order] + [zero] * (order - len(coeffs))
        self.coeffs = tuple(coeffs)
        self.order = order

    @classmethod
    def from_poly(cls, coeffs: Sequence, order: int) -> "ZSeries":
        """Truncate an exact polynomial (list of coefficients) to ``order``."""
        return cls(list(coeffs)[:order], order)

    def __getitem__(self, m: int) -> RationalFunc:
        if not 0 <= m < self.order:
            raise IndexError(f"coefficient z^{m} not known (order {self.order})")
        return self.coeffs[m]

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None if zero to this order."""
        for m, c in enumerate(self.coeffs):
            if not c.is_zero():
                return m
        return None

    def is_zero(self) -> bool:
        return self.valuation() is None

    def truncate(self, order: int) -> "ZSeries":
        return ZSeries(self.coeffs[:order], min(order, self.order))

    def __add__(self, other: "ZSeries") -> "ZSeries":
        order = min(self.order, other.order)
        return ZSeries([a + b for a, b in zip(self.coeffs[:order], other.coeffs[:order])], order)

    def __sub__(self, other: "ZSeries") -> "ZSeries":
        order = min(self.order, other.order)
        return ZSeries([a - b for a, b in zip(self.coeffs[:order], other.coeffs[:order])], order)

    def __neg__(self) -> "ZSeries":
        return ZSeries([-a for a in self.coeffs], self.order)

    def __mul__(self, other) -> "ZSeries":
        if not isinstance(other, ZSeries):
            return self.scale(other)
        order = min(self.order, other.order)
        out = []
        for m in range(order):
            acc = RationalFunc.zero()
            for i in range(m + 1):
                a = self.coeffs[i]
                b = other.coeffs[m - i]
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return ZSeries(out, order)

    __rmul__ = __mul__

    def scale(self, c) -> "ZSeries":
        c = RationalFunc.coerce(c)
        return ZSeries([a * c for a in self.coeffs], self.order)

    def shift(self, k: int) -> "ZSeries":
        """Multiply by ``z**k`` (k >= 0); the known range grows by k."""
        if k < 0:
            raise ValueError("shift_by_z_power needs k >= 0")
        return ZSeries([RationalFunc.zero()] * k + list(self.coeffs), self.order + k)

    def evaluate_coeffs(self, u_value) -> list:
        return [c.evaluate(u_value) for c in self.coeffs]

    def __eq__(self, other):
        if not isinstance(other, ZSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self):
        return f"ZSeries(order={self.order}, coeffs={[str(c) for c in self.coeffs]})"


def series_arith(op: str, f: ZSeries, g=None) -> ZSeries:
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "scale_by_rf":
        return f.scale(g)
    if op == "shift_by_z_power":
        return f.shift(g)
    raise ValueError(f"unknown series operation {op!r}")


def series_div(f: ZSeries, g: ZSeries) -> ZSeries:
    """Truncated quotient ``f / g``.

    With ``v = valuation(g)`` the result is known to ``min(f.order, g.order) - v``.
    """
    vg = g.valuation()
    if vg is None:
        raise ZeroDivisionError("divisor series is zero to working precision")
    vf = f.valuation()
    if vf is not None and vf < vg:
        raise ValueError(f"valuation mismatch: numerator {vf} < divisor {vg}")
    order = min(f.order, g.order) - vg
    if order <= 0:
        raise ValueError("not enough precision to divide")
    lead_inv = g.coeffs[vg].inverse()
    gs = g.coeffs[vg:]
    fs = f.coeffs[vg:]
    out = []
    for m in range(order):
        acc = fs[m]
        for i in range(max(0, m - len(gs) + 1), m):
            b = gs[m - i]
            if out[i] and b:
                acc = acc - out[i] * b
        out.append(acc * lead_inv)
    return ZSeries(out, order)


def _trig_series(order: int, parity: int) -> ZSeries:
    if order < 1:
        raise ValueError(f"series order must be >= 1, got {order}")
    coeffs = []
    for m in range(order):
        if m % 2 != parity:
            coeffs.append(RationalFunc.zero())
            continue
        n = m // 2
        coeffs.append(RationalFunc(LaurentPoly.q_power(n * n, (-1) ** n), q_factorial(m)))
    return ZSeries(coeffs, order)


@lru_cache(maxsize=None)
def sin_q(order: int) -> ZSeries:
    """``sum_n (-1)^n q^(n^2) z^(2n+1) / [2n+1]_q!`` modulo ``z**order``."""
    return _trig_series(order, 1)


@lru_cache(maxsize=None)
def cos_q(order: int) -> ZSeries:
    """``sum_n (-1)^n q^(n^2) z^(2n) / [2n]_q!`` modulo ``z**order``."""
    return _trig_series(order, 0)


@lru_cache(maxsize=None)
def tan_q(order: int) -> ZSeries:
    if order < 1:
        raise ValueError(f"series order must be >= 1, got {order}")
    return series_div(sin_q(order + 1), cos_q(order + 1)).truncate(order)
