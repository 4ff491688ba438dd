"""Exact arithmetic kernel: rationals, Laurent polynomials in u = q^(1/2), rational functions.

Every exponent stored here counts powers of ``u``; ``u**2 == q``.  A polynomial
whose exponents are all even is "q-integral" and is rendered in ``q``, anything
else is rendered in ``u``.

Coefficients are exact rationals.  Integral coefficients are kept as plain
``int`` so the common case (all of the q-series in this package) runs on
machine-speed big integers; ``Fraction`` only appears where it is needed.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from numbers import Rational
from typing import Iterable, Mapping, Union

ExactRational = Fraction
Coeff = Union[int, Fraction]

# exponents are checked against a machine-width bound; blowing past it is a bug
EXPONENT_LIMIT = 2**62

_KRONECKER_MIN = 24
HEU_GCD_TRIES = 24


def _canon(c) -> Coeff:
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return _canon(Fraction(c.numerator, c.denominator))
    raise TypeError(f"not an exact rational coefficient: {c!r}")


def _check_exponent(e: int) -> int:
    if not -EXPONENT_LIMIT < e < EXPONENT_LIMIT:
        raise OverflowError(f"exponent {e} out of range")
    return e


# ---------------------------------------------------------------------------
# dense integer polynomial helpers (lists, lowest degree first)


def _all_int(cs) -> bool:
    return all(type(c) is int for c in cs)


def _trim(cs: list) -> list:
    while cs and not cs[-1]:
        cs.pop()
    return cs


def _mul_school(a, b) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] += x * y
    return out


def _pack(cs, bits: int) -> int:
    acc = 0
    for c in reversed(cs):
        acc = (acc << bits) + c
    return acc


def _unpack(x: int, bits: int, n: int) -> list:
    full = 1 << bits
    half = full >> 1
    mask = full - 1
    out = []
    for _ in range(n):
        c = x & mask
        if c >= half:
            c -= full
        out.append(c)
        x = (x - c) >> bits
    return out


def _mul_kronecker(a, b) -> list:
    bound = max(map(abs, a)) * max(map(abs, b)) * min(len(a), len(b))
    bits = bound.bit_length() + 2
    return _unpack(_pack(a, bits) * _pack(b, bits), bits, len(a) + len(b) - 1)


def _dense_mul(a, b) -> list:
    if not a or not b:
        return []
    if min(len(a), len(b)) >= _KRONECKER_MIN and _all_int(a) and _all_int(b):
        return _mul_kronecker(a, b)
    return _mul_school(a, b)


def _content(cs) -> int:
    g = 0
    for c in cs:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def _primitive(cs) -> list:
    g = _content(cs)
    if cs[-1] < 0:
        g = -g
    return [c // g for c in cs]


def _divmod_field(f, g) -> tuple[list, list]:
    """Long division over the rationals; ``g`` must be nonzero."""
    f = [Fraction(c) for c in f]
    dg = len(g) - 1
    lc = Fraction(g[-1])
    if len(f) <= dg:
        return [], _trim([_canon(c) for c in f])
    quot = [Fraction(0)] * (len(f) - dg)
    for i in range(len(f) - 1, dg - 1, -1):
        c = f[i] / lc
        if c:
            quot[i - dg] = c
            for j in range(dg + 1):
                f[i - dg + j] -= c * g[j]
    rem = _trim([_canon(c) for c in f[:dg]])
    return _trim([_canon(c) for c in quot]), rem


def _prem_gcd(f, g) -> list:
    """Primitive remainder sequence; the slow but unconditional route."""
    f, g = _primitive(f), _primitive(g)
    if len(f) < len(g):
        f, g = g, f
    while g:
        d = len(f) - len(g)
        lc = g[-1]
        r = [c * lc ** (d + 1) for c in f]
        for i in range(len(r) - 1, len(g) - 2, -1):
            c = r[i]
            if c:
                q = c // lc
                for j in range(len(g)):
                    r[i - len(g) + 1 + j] -= q * g[j]
        r = _trim(r[: len(g) - 1])
        f, g = g, (_primitive(r) if r else [])
    return _primitive(f)


def _evaluate_int(cs, x: int) -> int:
    acc = 0
    for c in reversed(cs):
        acc = acc * x + c
    return acc


def _interpolate(h: int, x: int) -> list:
    out = []
    half = x // 2
    while h:
        c = h % x
        if c > half:
            c -= x
        out.append(c)
        h = (h - c) // x
    return out


def _heu_gcd(f, g):
    """Heuristic GCD of primitive integer polynomials with nonzero constant terms.

    Returns ``(h, cf, cg)`` with ``f == h*cf`` and ``g == h*cg`` or ``None``
    when no evaluation point produces a certified divisor.  Cofactors can
    have far larger coefficients than the inputs, so the evaluation point
    keeps growing for a good while before giving up.
    """
    f_norm = max(map(abs, f))
    g_norm = max(map(abs, g))
    # a dividing interpolant is the true gcd once x >= 2*min norm + 2
    x = 2 * min(f_norm, g_norm) + 29
    for _ in range(HEU_GCD_TRIES):
        ff = _evaluate_int(f, x)
        gg = _evaluate_int(g, x)
        if ff and gg:
            hv = gcd(ff, gg)
            h = _interpolate(hv, x)
            if h:
                c = _content(h)
                h = [v // c for v in h]
                cf = _interpolate((ff // hv) * c, x)
                cg = _interpolate((gg // hv) * c, x)
                if cf and cg and _dense_mul(h, cf) == list(f) and _dense_mul(h, cg) == list(g):
                    return h, cf, cg
        x = 73794 * x * isqrt(isqrt(x)) // 27011
    return None


def _int_gcd_cofactors(f, g):
    res = _heu_gcd(f, g)
    if res is not None:
        return res
    h = _prem_gcd(f, g)
    return h, _exact_div_int(f, h), _exact_div_int(g, h)


def _exact_div_int(f, g) -> list:
    """Quotient of integer polynomials known to divide exactly over Z."""
    f = list(f)
    dg = len(g) - 1
    lc = g[-1]
    quot = [0] * (len(f) - dg)
    for i in range(len(f) - 1, dg - 1, -1):
        c, r = divmod(f[i], lc)
        if r:
            raise ArithmeticError("inexact integer polynomial division")
        if c:
            quot[i - dg] = c
            for j in range(dg + 1):
                f[i - dg + j] -= c * g[j]
    if any(f[:dg]):
        raise ArithmeticError("inexact integer polynomial division")
    return quot


# ---------------------------------------------------------------------------


class LaurentPoly:
    """Immutable Laurent polynomial in ``u`` with exact rational coefficients.

    Stored densely: ``low`` is the smallest exponent and ``coeffs[i]`` the
    coefficient of ``u**(low + i)``; both ends of ``coeffs`` are nonzero.
    """

    __slots__ = ("_low", "_coeffs", "_hash")

    def __init__(self, terms: Mapping[int, object] | None = None):
        low, coeffs = 0, ()
        if terms:
            clean = {}
            for e, c in terms.items():
                c = _canon(c)
                if c:
                    clean[_check_exponent(int(e))] = c
            if clean:
                low = min(clean)
                dense = [0] * (max(clean) - low + 1)
                for e, c in clean.items():
                    dense[e - low] = c
                coeffs = tuple(dense)
        self._low = low
        self._coeffs = coeffs
        self._hash = None

    @classmethod
    def _from_dense(cls, low: int, coeffs) -> "LaurentPoly":
        cs = list(coeffs)
        _trim(cs)
        start = 0
        while start < len(cs) and not cs[start]:
            start += 1
        obj = cls.__new__(cls)
        if start == len(cs):
            obj._low, obj._coeffs = 0, ()
        else:
            obj._low = _check_exponent(low + start)
            _check_exponent(low + len(cs) - 1)
            obj._coeffs = tuple(_canon(c) for c in cs[start:])
        obj._hash = None
        return obj

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, u_exp: int, coeff: Coeff = 1) -> "LaurentPoly":
        return cls({u_exp: coeff})

    @classmethod
    def q_power(cls, q_exp: int, coeff: Coeff = 1) -> "LaurentPoly":
        """``coeff * q**q_exp``."""
        return cls({2 * q_exp: coeff})

    @classmethod
    def coerce(cls, value) -> "LaurentPoly":
        if isinstance(value, LaurentPoly):
            return value
        return cls({0: value})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[int, Coeff]:
        return {self._low + i: c for i, c in enumerate(self._coeffs) if c}

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_one(self) -> bool:
        return self._low == 0 and self._coeffs == (1,)

    def is_monomial(self) -> bool:
        return len(self._coeffs) == 1

    def is_constant(self) -> bool:
        return not self._coeffs or (self._low == 0 and len(self._coeffs) == 1)

    def is_q_integral(self) -> bool:
        return all(e % 2 == 0 for e in self.terms)

    @property
    def valuation(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no valuation")
        return self._low

    @property
    def degree(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no degree")
        return self._low + len(self._coeffs) - 1

    @property
    def lowest_coeff(self) -> Coeff:
        return self._coeffs[0] if self._coeffs else 0

    def coeff(self, u_exp: int) -> Coeff:
        i = u_exp - self._low
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return 0

    def __len__(self) -> int:
        return sum(1 for c in self._coeffs if c)

    # -- arithmetic -------------------------------------------------------

    def _add(self, other: "LaurentPoly", sign: int) -> "LaurentPoly":
        if not other._coeffs:
            return self
        if not self._coeffs:
            return other if sign > 0 else -other
        low = min(self._low, other._low)
        high = max(self.degree, other.degree)
        out = [0] * (high - low + 1)
        for i, c in enumerate(self._coeffs):
            out[self._low - low + i] = c
        off = other._low - low
        if sign > 0:
            for i, c in enumerate(other._coeffs):
                out[off + i] += c
        else:
            for i, c in enumerate(other._coeffs):
                out[off + i] -= c
        return LaurentPoly._from_dense(low, out)

    def __add__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self._add(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self._add(other, -1)

    def __rsub__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return other._add(self, -1)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._from_dense(self._low, [-c for c in self._coeffs])

    def scale(self, c) -> "LaurentPoly":
        c = _canon(c)
        if c == 1:
            return self
        return LaurentPoly._from_dense(self._low, [c * x for x in self._coeffs])

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            if not self._coeffs or not other._coeffs:
                return LaurentPoly()
            if len(other._coeffs) == 1:
                return self.scale(other._coeffs[0]).shift(other._low)
            if len(self._coeffs) == 1:
                return other.scale(self._coeffs[0]).shift(self._low)
            return LaurentPoly._from_dense(
                self._low + other._low, _dense_mul(self._coeffs, other._coeffs)
            )
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if not self.is_monomial():
                raise ValueError("negative power of a non-monomial")
            return LaurentPoly({-self._low * -n: Fraction(1) / Fraction(self._coeffs[0]) ** -n})
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, u_exp: int) -> "LaurentPoly":
        """Multiply by ``u**u_exp``."""
        if not self._coeffs or not u_exp:
            return self
        obj = LaurentPoly.__new__(LaurentPoly)
        obj._low = _check_exponent(self._low + u_exp)
        _check_exponent(obj._low + len(self._coeffs) - 1)
        obj._coeffs = self._coeffs
        obj._hash = None
        return obj

    def divmod(self, other: "LaurentPoly") -> tuple["LaurentPoly", "LaurentPoly"]:
        """Long division of the polynomial parts after shifting both to exponent 0.

        Returns ``(quot, rem)`` with ``self == quot*other + rem`` where the
        shifts are folded back in; ``rem`` is zero iff ``other`` divides
        ``self`` in the Laurent ring.
        """
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPoly(), LaurentPoly()
        quot, rem = _divmod_field(self._coeffs, other._coeffs)
        shift = self._low - other._low
        return LaurentPoly._from_dense(shift, quot), LaurentPoly._from_dense(self._low, rem)

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        quot, rem = self.divmod(other)
        if not rem.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return quot

    # -- comparison, evaluation, rendering -------------------------------

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._low == other._low and self._coeffs == other._coeffs
        try:
            return self == LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._low, self._coeffs))
        return self._hash

    def __bool__(self):
        return bool(self._coeffs)

    def evaluate(self, u_value):
        """Evaluate at ``u = u_value`` (exact for rationals, float for floats)."""
        if isinstance(u_value, float):
            return float(sum(float(c) * u_value**e for e, c in self.terms.items()))
        u_value = Fraction(u_value)
        if not u_value and self._low < 0:
            raise ZeroDivisionError("negative power evaluated at u = 0")
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * u_value + c
        return acc * u_value**self._low

    def __reduce__(self):
        return (LaurentPoly._from_dense, (self._low, self._coeffs))

    def __repr__(self):
        return f"LaurentPoly({self.terms!r})"

    def __str__(self):
        return render(self)


def lp_normalize(raw: Mapping[int, object]) -> LaurentPoly:
    return LaurentPoly(raw)


def _format_coeff(c: Coeff) -> str:
    return str(c)


def render(p: LaurentPoly, var: str | None = None) -> str:
    """Ascending-exponent text form, e.g. ``"q^-2 + 1"`` or ``"1 + u^5"``."""
    if p.is_zero():
        return "0"
    if var is None:
        var = "q" if p.is_q_integral() else "u"
    div = 2 if var == "q" else 1
    parts = []
    for e, c in sorted(p.terms.items()):
        e //= div
        neg = c < 0
        mag = -c if neg else c
        if e == 0:
            body = _format_coeff(mag)
        else:
            power = var if e == 1 else f"{var}^{e}"
            body = power if mag == 1 else f"{_format_coeff(mag)}*{power}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts)


def _integer_primitive(p: LaurentPoly) -> tuple[Fraction, list]:
    """Split the dense coefficient list of ``p`` into ``scalar * primitive``."""
    cs = p._coeffs
    if not _all_int(cs):
        den = 1
        for c in cs:
            if type(c) is not int:
                den = den * c.denominator // gcd(den, c.denominator)
        cs = [int(c * den) for c in cs]
    else:
        den = 1
    g = _content(cs)
    if cs[-1] < 0:
        g = -g
    return Fraction(g, den), [c // g for c in cs]


def _stride(*polys: LaurentPoly) -> int:
    s = 0
    for p in polys:
        for i, c in enumerate(p._coeffs):
            if c and i:
                s = gcd(s, i)
                if s == 1:
                    return 1
    return s or 1


def _gcd_parts(a: LaurentPoly, b: LaurentPoly):
    """GCD and cofactors of two nonzero Laurent polynomials.

    Returns ``(g, a_over_g, b_over_g)`` as LaurentPolys; ``g`` has valuation
    0 and a positive leading coefficient but is otherwise unnormalized.
    """
    if b.is_monomial() or a.is_monomial():
        return LaurentPoly.one(), a, b
    s = _stride(a, b)
    ca, fa = _integer_primitive(a)
    cb, fb = _integer_primitive(b)
    if s > 1:
        fa, fb = fa[::s], fb[::s]
    h, qa, qb = _int_gcd_cofactors(fa, fb)
    if s > 1:
        h, qa, qb = (_expand(x, s) for x in (h, qa, qb))
    return (
        LaurentPoly._from_dense(0, h),
        LaurentPoly._from_dense(a._low, qa).scale(ca),
        LaurentPoly._from_dense(b._low, qb).scale(cb),
    )


def _expand(cs, s: int) -> list:
    out = [0] * ((len(cs) - 1) * s + 1)
    out[::s] = cs
    return out


def _monic_low(p: LaurentPoly) -> LaurentPoly:
    return p.shift(-p.valuation).scale(Fraction(1) / Fraction(p.lowest_coeff))


def lp_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Greatest common divisor, normalized to valuation 0 with lowest coefficient 1."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    if a.is_zero():
        return _monic_low(b)
    if b.is_zero():
        return _monic_low(a)
    return _monic_low(_gcd_parts(a, b)[0])


# ---------------------------------------------------------------------------


class RationalFunc:
    """Reduced quotient of Laurent polynomials in canonical form.

    The denominator has valuation 0 and lowest coefficient 1, so two equal
    rational functions have identical ``(num, den)`` pairs.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = LaurentPoly.coerce(num)
        den = LaurentPoly.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = LaurentPoly(), LaurentPoly.one()
        elif den.is_monomial():
            num = num.shift(-den.valuation).scale(Fraction(1) / Fraction(den.lowest_coeff))
            den = LaurentPoly.one()
        else:
            _, num, den = _gcd_parts(num, den)
            c = Fraction(1) / Fraction(den.lowest_coeff)
            num = num.shift(-den.valuation).scale(c)
            den = den.shift(-den.valuation).scale(c)
        self.num = num
        self.den = den

    @classmethod
    def _raw(cls, num: LaurentPoly, den: LaurentPoly) -> "RationalFunc":
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        return obj

    @classmethod
    def _canonical(cls, num: LaurentPoly, den: LaurentPoly) -> "RationalFunc":
        # caller guarantees num/den is already reduced
        c = Fraction(1) / Fraction(den.lowest_coeff)
        return cls._raw(num.shift(-den.valuation).scale(c), den.shift(-den.valuation).scale(c))

    @classmethod
    def coerce(cls, value) -> "RationalFunc":
        if isinstance(value, RationalFunc):
            return value
        return cls._raw(LaurentPoly.coerce(value), LaurentPoly.one())

    @classmethod
    def zero(cls) -> "RationalFunc":
        return cls._raw(LaurentPoly(), LaurentPoly.one())

    @classmethod
    def one(cls) -> "RationalFunc":
        return cls._raw(LaurentPoly.one(), LaurentPoly.one())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def __bool__(self):
        return not self.num.is_zero()

    def __add__(self, other):
        try:
            other = RationalFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den == other.den:
            if self.den.is_one():
                return RationalFunc._raw(self.num + other.num, self.den)
            return RationalFunc(self.num + other.num, self.den)
        # (n + p*d)/d is reduced whenever n/d is
        if other.den.is_one():
            return RationalFunc._raw(self.num + other.num * self.den, self.den)
        if self.den.is_one():
            return RationalFunc._raw(other.num + self.num * other.den, other.den)
        _, a, b = _gcd_parts(self.den, other.den)
        return RationalFunc(self.num * b + other.num * a, self.den * b)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunc":
        return RationalFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        try:
            other = RationalFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        try:
            other = RationalFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        try:
            other = RationalFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return RationalFunc.zero()
        if self.den.is_one() and other.den.is_one():
            return RationalFunc._raw(self.num * other.num, self.den)
        # cross-cancel before multiplying to keep gcds small
        _, n1, d2 = _gcd_parts(self.num, other.den)
        _, n2, d1 = _gcd_parts(other.num, self.den)
        return RationalFunc._canonical(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunc":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RationalFunc._canonical(self.den, self.num)

    def __truediv__(self, other):
        try:
            other = RationalFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        try:
            other = RationalFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int) -> "RationalFunc":
        if n < 0:
            return self.inverse() ** -n
        return RationalFunc._raw(self.num**n, self.den**n)

    def __eq__(self, other):
        try:
            other = RationalFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def as_laurent(self) -> LaurentPoly:
        if not self.den.is_one():
            raise ValueError(f"not a Laurent polynomial: {self}")
        return self.num

    def evaluate(self, u_value):
        d = self.den.evaluate(u_value)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at u = {u_value}")
        return self.num.evaluate(u_value) / d

    def is_q_integral(self) -> bool:
        return self.num.is_q_integral() and self.den.is_q_integral()

    def __repr__(self):
        return f"RationalFunc({self.num!r}, {self.den!r})"

    def __str__(self):
        return render_rf(self)


def render_rf(f: RationalFunc, max_terms: int | None = None) -> str:
    var = "q" if f.is_q_integral() else "u"
    num = render(f.num, var)
    if f.den.is_one():
        text = num
    else:
        den = render(f.den, var)
        if len(f.num) > 1:
            num = f"({num})"
        text = f"{num}/({den})"
    if max_terms is not None:
        n_terms = len(f.num) + (0 if f.den.is_one() else len(f.den))
        if n_terms > max_terms:
            head = render(LaurentPoly(dict(sorted(f.num.terms.items())[:max_terms])), var)
            text = f"[{n_terms} terms] {head} ..."
    return text


def rf_make(num, den) -> RationalFunc:
    return RationalFunc(num, den)


def rf_eval(f: RationalFunc, u_value):
    return RationalFunc.coerce(f).evaluate(u_value)


def lp_arith(op: str, a: LaurentPoly, b=None) -> LaurentPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    if op == "scale":
        return a.scale(b)
    raise ValueError(f"unknown operation {op!r}")


def rf_arith(op: str, a: RationalFunc, b=None) -> RationalFunc:
    a = RationalFunc.coerce(a)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "neg":
        return -a
    raise ValueError(f"unknown operation {op!r}")


def q(exp: int = 1, coeff: Coeff = 1) -> LaurentPoly:
    """Shorthand for ``coeff * q**exp``."""
    return LaurentPoly.q_power(exp, coeff)


def product(factors: Iterable) -> LaurentPoly:
    result = LaurentPoly.one()
    for f in factors:
        result = result * f
    return result
