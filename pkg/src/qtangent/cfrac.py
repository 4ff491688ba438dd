"""Finite truncations of the q-tangent continued fraction and coefficient extraction.

``extract_cf_coeffs`` recovers partial denominators from a power series by
repeated reciprocals, without ever looking at the closed form of ``b_n``.
That makes it an independent check of the expansion of ``-z tan_q(z)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .continuants import b_coeff, continuant_pairs
from .exact import LaurentPoly, RationalFunc
from .qseries import ZSeries, series_div, tan_q


class CFShapeError(ValueError):
    """The series does not have the ``-z^2/(b - z^2/(...))`` shape."""


@dataclass(frozen=True)
class CFTruncation:
    """``-z^2/(b_1 - z^2/(b_2 - ... - z^2/b_n))``."""

    partial_denominators: tuple[LaurentPoly, ...]

    @property
    def depth(self) -> int:
        return len(self.partial_denominators)

    @classmethod
    def of_depth(cls, n: int) -> "CFTruncation":
        if n < 1:
            raise ValueError(f"depth must be >= 1, got {n}")
        return cls(tuple(b_coeff(i) for i in range(1, n + 1)))


def _bs_lookup(bs: Sequence[LaurentPoly]):
    def b(i: int) -> LaurentPoly:
        return LaurentPoly() if i == 0 else bs[i - 1]

    return b


def convergent(cf: CFTruncation):
    """The continuant pair ``(A_n, B_n)`` of the truncation, as z-polynomials."""
    pair = continuant_pairs(cf.depth, _bs_lookup(cf.partial_denominators))[-1]
    return pair.A, pair.B


def cf_as_series(cf: CFTruncation, order: int) -> ZSeries:
    """``A_n / B_n`` expanded to ``z**order``."""
    A, B = convergent(cf)
    if not B or B[0].is_zero():
        raise ZeroDivisionError("B_n has no invertible constant term")
    return series_div(ZSeries.from_poly(A, order), ZSeries.from_poly(B, order))


def cf_fold_series(cf: CFTruncation, order: int) -> ZSeries:
    """Bottom-up evaluation ``-z^2/(b_1 - z^2/(... - z^2/b_n))`` as a series.

    Independent of the continuant recurrence; used as its oracle.
    """
    zsq = ZSeries([0, 0, 1], order)
    tail = ZSeries([cf.partial_denominators[-1]], order)
    for b in reversed(cf.partial_denominators[:-1]):
        tail = ZSeries([b], order) - series_div(zsq, tail)
    return -series_div(zsq, tail)


def cf_evaluate(cf: CFTruncation, z: float, u: float = 1.0) -> float:
    """Floating-point fold of the truncation at numeric ``z`` and ``u``."""
    zsq = z * z
    acc = cf.partial_denominators[-1].evaluate(u)
    for b in reversed(cf.partial_denominators[:-1]):
        acc = b.evaluate(u) - zsq / acc
    return -zsq / acc


def minus_z_tan(order: int) -> ZSeries:
    """``-z tan_q(z)`` modulo ``z**order``."""
    return -tan_q(order - 1).shift(1)


def extract_cf_coeffs(F: ZSeries, m: int) -> list[LaurentPoly]:
    """Peel ``m`` partial denominators off ``F = -z^2/(b_1 - z^2/(b_2 - ...))``.

    Each step computes ``-z^2/F_j``, takes its constant term as ``b_{j+1}``
    and continues with the remainder.  Every extracted value must be a
    z-constant Laurent polynomial; anything else raises CFShapeError.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if F.order < 2 * m + 2:
        raise ValueError(f"series order {F.order} too small to extract {m} coefficients (need {2 * m + 2})")
    if F.valuation() != 2:
        raise CFShapeError(f"expected valuation 2, got {F.valuation()}")
    zsq = ZSeries([0, 0, -1], F.order)
    out = []
    cur = F
    for j in range(m):
        recip = series_div(zsq, cur)
        b = recip[0]
        if recip.order > 1 and not recip[1].is_zero():
            raise CFShapeError(f"step {j + 1}: odd term z^1 present: {recip[1]}")
        if not b.is_polynomial():
            raise CFShapeError(f"step {j + 1}: extracted value is not a Laurent polynomial: {b}")
        out.append(b.as_laurent())
        if j == m - 1:
            break
        cur = recip - ZSeries([b], recip.order)
        if cur.valuation() != 2:
            raise CFShapeError(f"step {j + 1}: remainder has valuation {cur.valuation()}, expected 2")
    return out


def extract_from_tan(m: int, order: int | None = None) -> list[LaurentPoly]:
    order = 2 * m + 2 if order is None else order
    return extract_cf_coeffs(minus_z_tan(order), m)
