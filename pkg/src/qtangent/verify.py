"""Identity checks for the continued fraction of the q-tangent function.

Every check builds both sides as exact rational functions in ``u = q^(1/2)``
and compares canonical forms.  A cheap evaluation at a fixed rational point
runs first so that a failing identity is reported without further work; it
never decides a pass on its own.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable

from .cfrac import CFTruncation, cf_as_series, extract_cf_coeffs, minus_z_tan
from .continuants import (
    b_coeff,
    b_exponent,
    b_product,
    base_products,
    cd_direct,
    cd_recursive,
    cd_sumform,
    continuant,
    determinant,
    partial_denominators,
    z_monomial,
)
from .exact import LaurentPoly, RationalFunc, render_rf
from .qseries import QPochSpec, ZSeries, cos_q, q_bracket, q_factorial, q_pochhammer, sin_q

WITNESS_TERMS = 40
_PROBE = Fraction(3, 7)


@dataclass
class VerifyReport:
    identity_id: str
    parameters: dict
    passed: bool
    witness: str | None = None
    elapsed: float = 0.0
    witness_full: str | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.passed != (self.witness is None):
            raise ValueError("a report passes exactly when it carries no witness")


def _witness(diff: RationalFunc) -> tuple[str, str]:
    return render_rf(diff, max_terms=WITNESS_TERMS), render_rf(diff)


def _probe_differs(lhs: RationalFunc, rhs: RationalFunc) -> bool:
    try:
        return lhs.evaluate(_PROBE) != rhs.evaluate(_PROBE)
    except ZeroDivisionError:
        return False


def compare(identity: str, params: dict, lhs, rhs, started: float) -> VerifyReport:
    lhs = RationalFunc.coerce(lhs)
    rhs = RationalFunc.coerce(rhs)
    if not _probe_differs(lhs, rhs) and lhs == rhs:
        return VerifyReport(identity, params, True, None, time.perf_counter() - started)
    short, full = _witness(lhs - rhs)
    return VerifyReport(identity, params, False, short, time.perf_counter() - started, full)


def _u(q_exp: int, coeff=1) -> LaurentPoly:
    return LaurentPoly.q_power(q_exp, coeff)


def _one_minus_q(e) -> LaurentPoly:
    """``1 - q^e``; ``e`` may be a half-integer given as ``Fraction``."""
    ue = 2 * Fraction(e)
    if ue.denominator != 1:
        raise ValueError(f"q-exponent {e} is not a multiple of 1/2")
    return LaurentPoly.one() - LaurentPoly.monomial(int(ue))


def _poch(a_exp_u: int, base_q: int, length: int, sign: int = 1) -> LaurentPoly:
    return q_pochhammer(QPochSpec(sign, a_exp_u, 2 * base_q, length))


# ---------------------------------------------------------------------------
# residual A_n cos_q + z B_n sin_q


def residual_series(n: int, order: int | None = None) -> ZSeries:
    """``A_n cos_q + z B_n sin_q`` modulo ``z**order`` (default ``2n+2``)."""
    if n < 1:
        raise ValueError(f"residual needs n >= 1, got {n}")
    order = 2 * n + 2 if order is None else order
    pair = continuant(n)
    A = ZSeries.from_poly(pair.A, order)
    zB = ZSeries.from_poly(pair.B, order).shift(1).truncate(order)
    return A * cos_q(order) + zB * sin_q(order)


def check_residual(n: int) -> VerifyReport:
    t0 = time.perf_counter()
    res = residual_series(n)
    for m in range(2 * n + 1):
        if not res[m].is_zero():
            short, full = _witness(res[m])
            return VerifyReport(
                "residual", {"n": n}, False, f"z^{m}: {short}", time.perf_counter() - t0, full
            )
    return VerifyReport("residual", {"n": n}, True, None, time.perf_counter() - t0)


def check_convergent(n: int) -> VerifyReport:
    """``A_n/B_n + z tan_q`` vanishes through ``z^(2n+1)``."""
    t0 = time.perf_counter()
    order = 2 * n + 2
    diff = cf_as_series(CFTruncation.of_depth(n), order) - minus_z_tan(order)
    v = diff.valuation()
    if v is None:
        return VerifyReport("convergent", {"n": n}, True, None, time.perf_counter() - t0)
    short, full = _witness(diff[v])
    return VerifyReport("convergent", {"n": n}, False, f"z^{v}: {short}", time.perf_counter() - t0, full)


# ---------------------------------------------------------------------------
# Lemma: sum over c, d against a closed form


@lru_cache(maxsize=None)
def coefficient_table(n_max: int, k_max: int):
    return cd_direct(n_max, k_max)


def _cd(n: int, k: int):
    table = coefficient_table(max(n, 12), max(k, 12))
    return table.c[n, k], table.d[n, k]


def lemma_lhs(n: int, k: int) -> RationalFunc:
    """``sum_{i<k} (-1)^i q^((k-i-1)^2)/[2k-2i-2]! * (c[n,i+1] + d[n,i]/[2k-2i-1])``."""
    if n < 0 or k < 0:
        raise ValueError(f"lemma_lhs needs n >= 0 and k >= 0, got ({n}, {k})")
    total = RationalFunc.zero()
    for i in range(k):
        c_next, _ = _cd(n, i + 1)
        _, d_i = _cd(n, i)
        inner = RationalFunc(c_next) + RationalFunc(d_i, q_bracket(2 * k - 2 * i - 1))
        weight = RationalFunc(_u((k - i - 1) ** 2, (-1) ** i), q_factorial(2 * k - 2 * i - 2))
        total = total + weight * inner
    return total


@dataclass(frozen=True)
class LemmaRHSSpec:
    """``(-1)^n q^(E/8) prod_{s=k-n}^{k} [2s]_q / [2k]_q!``."""

    n: int
    k: int

    @property
    def sign(self) -> int:
        return (-1) ** self.n

    @property
    def q_exponent(self) -> int:
        s = self.sign
        n, k = self.n, self.k
        e8 = 5 + 3 * s - 12 * k - 4 * s * k + 8 * k * k + 8 * n - 8 * k * n + 4 * n * n - 2 * s * n * n
        if e8 % 8:
            raise ArithmeticError(f"non-integral q-exponent {e8}/8 at n={n}, k={k}")
        return e8 // 8

    def vanishes(self) -> bool:
        return self.k - self.n <= 0 <= self.k

    @property
    def numerator_product(self) -> LaurentPoly:
        if self.vanishes():
            return LaurentPoly()
        out = LaurentPoly.one()
        for s in range(self.k - self.n, self.k + 1):
            out = out * q_bracket(2 * s)
        return out

    @property
    def denominator(self) -> LaurentPoly:
        return q_factorial(2 * self.k)

    def value(self) -> RationalFunc:
        e = self.q_exponent
        if self.vanishes():
            return RationalFunc.zero()
        return RationalFunc(self.numerator_product * _u(e, self.sign), self.denominator)


@lru_cache(maxsize=None)
def lemma_rhs(n: int, k: int) -> RationalFunc:
    """Closed form of the lemma; defined for ``n >= 0`` (``n = 0`` feeds the inductive step)."""
    if n < 0 or k < 0:
        raise ValueError(f"lemma_rhs needs n >= 0 and k >= 0, got ({n}, {k})")
    return LemmaRHSSpec(n, k).value()


def check_lemma(n: int, k: int) -> VerifyReport:
    t0 = time.perf_counter()
    return compare("lemma", {"n": n, "k": k}, lemma_lhs(n, k), lemma_rhs(n, k), t0)


def check_residual_lemma(n: int, k: int) -> VerifyReport:
    """The ``z^(2k)`` coefficient of the residual is ``(-1)^(k-1) lemma_lhs(n, k)``."""
    t0 = time.perf_counter()
    res = residual_series(n, 2 * k + 1)
    return compare("residual_lemma", {"n": n, "k": k}, res[2 * k], lemma_lhs(n, k) * (1 if k % 2 else -1), t0)


# ---------------------------------------------------------------------------
# inductive step


def inductive_lhs(n: int, k: int) -> RationalFunc:
    head = RationalFunc(
        _u((k - 1) ** 2) * (LaurentPoly.one() - q_bracket(2 * k - 1)) * base_products(n),
        q_factorial(2 * k - 1),
    )
    total = head
    for i in range(0, n - 1):
        total = total + lemma_rhs(i, k - 1) * b_product(i + 3, n)
    return total


def inductive_step_check(n: int, k: int) -> VerifyReport:
    if n < 1 or k < 1:
        raise ValueError(f"inductive step needs n >= 1 and k >= 1, got ({n}, {k})")
    t0 = time.perf_counter()
    return compare("inductive_step", {"n": n, "k": k}, inductive_lhs(n, k), lemma_rhs(n, k), t0)


# ---------------------------------------------------------------------------
# the master identity and its very-well-poised sum


def phi65_summand(k: int, j: int) -> RationalFunc:
    """The ``j``-th summand: eight base-``q^4`` Pochhammers times ``q^((2k-1)j)``.

    Half-integer exponents ``17/2 - k`` and ``9/2 - k`` become odd u-exponents.
    """
    num = (
        _poch(2 * (6 - 2 * k), 4, j)
        * _poch(2 * (4 - 2 * k), 4, j)
        * _poch(17 - 2 * k, 4, j)
        * _poch(17 - 2 * k, 4, j, sign=-1)
    )
    den = _poch(14, 4, j) * _poch(18, 4, j) * _poch(9 - 2 * k, 4, j) * _poch(9 - 2 * k, 4, j, sign=-1)
    return RationalFunc(num * _u((2 * k - 1) * j), den)


def phi65_finite_sum(x: int, k: int) -> RationalFunc:
    total = RationalFunc.zero()
    for j in range(x + 1):
        total = total + phi65_summand(k, j)
    return total


def phi65_closed_form(x: int, k: int) -> RationalFunc:
    """``(1-q^3)(1-q^5)/((1-q^(2k-1))(1-q^(9-2k))) * (1 - q^((2k-1)(x+1)) R)``.

    ``R = (q^(4-2k); q^2)_(2x+2) / (q^3; q^2)_(2x+2)``.
    """
    ratio = RationalFunc(
        _u((2 * k - 1) * (x + 1)) * _poch(2 * (4 - 2 * k), 2, 2 * x + 2), _poch(6, 2, 2 * x + 2)
    )
    prefactor = RationalFunc(
        _one_minus_q(3) * _one_minus_q(5), _one_minus_q(2 * k - 1) * _one_minus_q(9 - 2 * k)
    )
    return prefactor * (RationalFunc.one() - ratio)


def check_phi65(x: int, k: int) -> VerifyReport:
    t0 = time.perf_counter()
    return compare("phi65", {"x": x, "k": k}, phi65_finite_sum(x, k), phi65_closed_form(x, k), t0)


def master_upper_limit(n: int) -> int:
    """``ceil((n-4)/2)``; negative means an empty sum."""
    return -((4 - n) // 2)


def master_terms(n: int, k: int) -> list[RationalFunc]:
    """The five terms whose sum must vanish."""
    s = (-1) ** n
    total = RationalFunc.zero()
    for j in range(master_upper_limit(n) + 1):
        total = total + phi65_summand(k, j)
    one_m_2k1 = _one_minus_q(2 * k - 1)
    t1 = total * RationalFunc(
        _poch(2, 2, n) * _u(1) * one_m_2k1 * _one_minus_q(2 * k - 2) * _one_minus_q(9 - 2 * k),
        _one_minus_q(1) * _one_minus_q(3) * _one_minus_q(5),
    )
    t2 = -(one_m_2k1 * _poch(6, 2, n - 1))
    e4 = -1 + s + 2 * k - 2 * s * k + 2 * n - 4 * k * n + 4 * n * n
    if e4 % 2:
        raise ArithmeticError(f"exponent {e4}/4 is not a multiple of 1/2")
    t3 = LaurentPoly.monomial(e4 // 2, -s) * _poch(2 * (2 * k - 2 * n), 2, n)
    t4 = _poch(2, 2, n)
    if n % 2 == 0:
        t5 = one_m_2k1 * LaurentPoly.monomial(n * (2 * n - 2 * k + 1)) * _poch(2 * (2 * k - 2 * n + 2), 2, n - 1)
    else:
        t5 = LaurentPoly()
    return [t1, RationalFunc(t2), RationalFunc(t3), RationalFunc(t4), RationalFunc(t5)]


def master_identity(n: int, k: int) -> RationalFunc:
    total = RationalFunc.zero()
    for t in master_terms(n, k):
        total = total + t
    return total


def master_identity_check(n: int, k: int) -> VerifyReport:
    if n < 1:
        raise ValueError(f"master identity needs n >= 1, got {n}")
    t0 = time.perf_counter()
    return compare("master_identity", {"n": n, "k": k}, master_identity(n, k), RationalFunc.zero(), t0)


# ---------------------------------------------------------------------------
# the final two-Pochhammer identity


def final_identity_sides(N: int, k: int) -> tuple[LaurentPoly, LaurentPoly]:
    lhs = _poch(2 * (2 - 2 * k), 2, 2 * N - 1)
    rhs = -(_u(-2 * (k - N) * (2 * N - 1)) * _poch(2 * (2 * k - 4 * N + 2), 2, 2 * N - 1))
    return lhs, rhs


def final_identity_check(N: int, k: int) -> VerifyReport:
    if N < 1:
        raise ValueError(f"final identity needs N >= 1, got {N}")
    t0 = time.perf_counter()
    lhs, rhs = final_identity_sides(N, k)
    return compare("final_identity", {"N": N, "k": k}, lhs, rhs, t0)


# ---------------------------------------------------------------------------
# continuant-level checks


def check_determinant(n: int) -> VerifyReport:
    t0 = time.perf_counter()
    got = determinant(n)
    want = z_monomial(2 * n, LaurentPoly({0: -1}))
    if got == want:
        return VerifyReport("determinant", {"n": n}, True, None, time.perf_counter() - t0)
    diff = [g_ - w_ for g_, w_ in zip(got + (LaurentPoly(),) * len(want), want + (LaurentPoly(),) * len(got))]
    m = next(i for i, c in enumerate(diff) if not c.is_zero())
    short, full = _witness(RationalFunc(diff[m]))
    return VerifyReport("determinant", {"n": n}, False, f"z^{m}: {short}", time.perf_counter() - t0, full)


@lru_cache(maxsize=None)
def _route_tables(n_max: int, k_max: int):
    return cd_direct(n_max, k_max), cd_recursive(n_max, k_max), cd_sumform(n_max, k_max)


def check_routes(n: int, k_max: int, n_max: int | None = None) -> VerifyReport:
    """``cd_direct``, ``cd_recursive`` and ``cd_sumform`` agree at row ``n`` for ``1 <= k <= k_max``."""
    t0 = time.perf_counter()
    direct, rec, summ = _route_tables(max(n, n_max or n), k_max)
    for k in range(1, k_max + 1):
        for which in ("c", "d"):
            vals = [getattr(t, which)[n, k] for t in (direct, rec, summ)]
            for other, name in ((vals[1], "recursion"), (vals[2], "sumform")):
                if other != vals[0]:
                    short, full = _witness(RationalFunc(other - vals[0]))
                    return VerifyReport(
                        "coefficient_routes",
                        {"n": n, "k_max": k_max},
                        False,
                        f"{which}[{n},{k}] {name}-direct: {short}",
                        time.perf_counter() - t0,
                        full,
                    )
    return VerifyReport("coefficient_routes", {"n": n, "k_max": k_max}, True, None, time.perf_counter() - t0)


def check_base_case(n: int) -> VerifyReport:
    t0 = time.perf_counter()
    c1, _ = _cd(n, 1)
    _, d0 = _cd(n, 0)
    prod = base_products(n)
    for got in (-c1, d0):
        if got != prod:
            return compare("base_case", {"n": n}, got, prod, t0)
    return VerifyReport("base_case", {"n": n}, True, None, time.perf_counter() - t0)


def check_cf_coefficients(depth: int, order: int, corrupt: int | None = None) -> list[VerifyReport]:
    """Extract ``b_1..b_depth`` from ``-z tan_q`` and compare with the closed form.

    ``corrupt`` perturbs one expected value; used as a negative control.
    """
    t0 = time.perf_counter()
    extracted = extract_cf_coeffs(minus_z_tan(order), depth)
    per_item = (time.perf_counter() - t0) / depth
    expected = partial_denominators(depth, corrupt)
    reports = []
    for i, (got, want) in enumerate(zip(extracted, expected), start=1):
        t1 = time.perf_counter()
        rep = compare("cf_coefficient", {"n": i}, got, want, t1)
        if rep.passed and _lowest_q_exponent(got) != b_exponent(i):
            rep = VerifyReport("cf_coefficient", {"n": i}, False, f"exponent law: lowest q-power {_lowest_q_exponent(got)}")
        rep.elapsed += per_item
        reports.append(rep)
    return reports


def _lowest_q_exponent(p: LaurentPoly) -> Fraction:
    return Fraction(p.valuation, 2)


# ---------------------------------------------------------------------------
# suite


@dataclass(frozen=True)
class SuiteConfig:
    max_n: int = 8
    max_k: int = 10
    max_N: int = 8
    max_x: int = 8
    max_depth: int = 10
    series_order: int = 26
    corrupt_b: int | None = None

    def __post_init__(self):
        for name in ("max_n", "max_k", "max_N", "max_x", "max_depth", "series_order"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be nonnegative")
        if self.max_depth and self.series_order < 2 * self.max_depth + 2:
            raise ValueError(
                f"series_order {self.series_order} < 2*max_depth + 2 = {2 * self.max_depth + 2}"
            )

    def is_empty(self) -> bool:
        return min(self.max_n, self.max_k, self.max_N, self.max_x + 1, self.max_depth) <= 0


def suite_tasks(config: SuiteConfig) -> list[tuple[str, tuple]]:
    if config.is_empty():
        return []
    n_range = range(1, config.max_n + 1)
    tasks: list[tuple[str, tuple]] = []
    tasks += [("coefficient_routes", (n, config.max_k, config.max_n)) for n in n_range]
    tasks += [("base_case", (n,)) for n in n_range]
    tasks += [("determinant", (n,)) for n in n_range]
    tasks += [("residual", (n,)) for n in n_range]
    tasks += [("convergent", (n,)) for n in range(1, config.max_depth + 1)]
    tasks += [("cf_coefficient", (config.max_depth, config.series_order, config.corrupt_b))]
    tasks += [("lemma", (n, k)) for n in n_range for k in range(0, config.max_k + 1)]
    tasks += [("inductive_step", (n, k)) for n in n_range for k in range(1, config.max_k + 1)]
    tasks += [("master_identity", (n, k)) for n in n_range for k in range(1, config.max_k + 1)]
    tasks += [("phi65", (x, k)) for x in range(0, config.max_x + 1) for k in range(0, config.max_k + 1)]
    tasks += [("final_identity", (N, k)) for N in range(1, config.max_N + 1) for k in range(0, config.max_k + 1)]
    return tasks


CHECKS: dict[str, Callable[..., VerifyReport | list[VerifyReport]]] = {
    "coefficient_routes": check_routes,
    "base_case": check_base_case,
    "determinant": check_determinant,
    "residual": check_residual,
    "convergent": check_convergent,
    "cf_coefficient": check_cf_coefficients,
    "lemma": check_lemma,
    "inductive_step": inductive_step_check,
    "master_identity": master_identity_check,
    "phi65": check_phi65,
    "final_identity": final_identity_check,
}


def run_task(task: tuple[str, tuple]) -> list[VerifyReport]:
    name, args = task
    try:
        out = CHECKS[name](*args)
    except Exception as exc:  # a crash inside a check is a failed check, not a dead suite
        return [VerifyReport(name, _params_of(name, args), False, f"error: {exc!r}")]
    return out if isinstance(out, list) else [out]


def _params_of(name: str, args: tuple) -> dict:
    keys = {
        "coefficient_routes": ("n", "k_max"),
        "cf_coefficient": ("depth", "order"),
        "phi65": ("x", "k"),
        "final_identity": ("N", "k"),
    }.get(name, ("n", "k"))
    return dict(zip(keys, args))


def run_suite(config: SuiteConfig, jobs: int = 1) -> list[VerifyReport]:
    """Run every identity over the configured ranges; report order is fixed by the task list."""
    tasks = suite_tasks(config)
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(run_task, tasks, chunksize=4))
    else:
        chunks = [run_task(t) for t in tasks]
    return [rep for chunk in chunks for rep in chunk]


def all_passed(reports: Iterable[VerifyReport]) -> bool:
    return all(r.passed for r in reports)
