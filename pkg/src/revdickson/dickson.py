"""Reversed Dickson polynomials D_{n,k}(a, x), with the third kind F_n = D_{n,2}.

Four independent evaluators of F_n(1, x) live here:

* :func:`f3_eval_recurrence` -- F_0 = 0, F_1 = 1, F_n = F_{n-1} - x F_{n-2};
* :func:`f3_eval_coeff` -- the explicit coefficient sum, optionally with a != 1;
* :func:`f3_eval_functional` -- (y^n - (1-y)^n) / (2y - 1) where x = y(1 - y),
  with y taken in GF(q^2) when needed;
* :func:`f3_eval_jacobsthal` -- J_n(-x/2) for the Jacobsthal polynomials.

They are cross-checked against each other by the test-suite and by
``revdickson verify``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import islice
from math import comb
from typing import Iterable, Iterator

from .gf import GF, FieldError, quad_ext
from .poly import DensePoly, poly_eval, poly_mod_xq_minus_x

__all__ = [
    "CharacteristicTwoError",
    "require_odd",
    "reversed_dickson_coeffs",
    "f3_coeffs",
    "f3_eval_recurrence",
    "f3_recurrence_rows",
    "f3_table",
    "f3_eval_coeff",
    "f3_eval_functional",
    "f3_eval_jacobsthal",
    "jacobsthal_eval",
    "jacobsthal_rows",
    "fn_aux",
    "fn_aux_eval",
    "frobenius_lift",
    "quarter_value",
]


class CharacteristicTwoError(ValueError):
    """Raised for fields of characteristic 2, where F_n(1, x) is D_n(1, x)."""

    def __init__(self, field: GF | None = None):
        where = f" ({field!r})" if field is not None else ""
        super().__init__(f"characteristic 2 collapses to first kind{where}")


def require_odd(field: GF) -> None:
    if field.p == 2:
        raise CharacteristicTwoError(field)


def _coeff_int(n: int, i: int, k: int) -> int:
    # (n-ki)/(n-i) * C(n-i, i) == C(n-i, i) - (k-1) * C(n-i-1, i-1), exactly
    if i == 0:
        return 1
    lower = comb(n - i - 1, i - 1)
    # C(n-i, i) = C(n-i-1, i-1) * (n-i) / i
    return lower * (n - i) // i - (k - 1) * lower


def reversed_dickson_coeffs(field: GF, n: int, k: int = 2) -> DensePoly:
    """D_{n,k}(1, x) as a polynomial in x with prime-field coefficients.

    k = 0, 1, 2 give the first, second and third kind. D_{0,k} = 2 - k.
    """
    if k not in (0, 1, 2):
        raise ValueError(f"kind parameter k must be 0, 1 or 2, got {k}")
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return DensePoly.from_ints(field, [2 - k])
    ints = [(-1) ** i * _coeff_int(n, i, k) for i in range(n // 2 + 1)]
    return DensePoly.from_ints(field, ints)


def f3_coeffs(field: GF, n: int) -> DensePoly:
    """F_n(1, x) = D_{n,2}(1, x)."""
    return reversed_dickson_coeffs(field, n, 2)


@lru_cache(maxsize=4096)
def _f3_reduced(field: GF, n: int) -> DensePoly:
    return poly_mod_xq_minus_x(f3_coeffs(field, n), field.q)


def f3_eval_recurrence(field: GF, n: int, x: int) -> int:
    """F_n(1, x) by the three-term recurrence, O(n) field operations."""
    require_odd(field)
    if n == 0:
        return 0
    prev, cur = 0, 1
    nx = field.neg(x)
    for _ in range(n - 1):
        prev, cur = cur, field.add(cur, field.mul(nx, prev))
    return cur


def f3_recurrence_rows(field: GF, xs: Iterable[int]) -> Iterator[list[int]]:
    """Yield [F_n(1, x) for x in xs] for n = 0, 1, 2, ... indefinitely."""
    require_odd(field)
    xs = list(xs)
    add, mul = field.add, field.mul
    nxs = [field.neg(x) for x in xs]
    prev = [0] * len(xs)
    cur = [1] * len(xs)
    yield prev
    while True:
        yield cur
        prev, cur = cur, [add(c, mul(nx, pv)) for c, nx, pv in zip(cur, nxs, prev)]


def f3_table(field: GF, n_max: int, xs: Iterable[int] | None = None) -> list[list[int]]:
    """Rows F_n(1, x), n = 0..n_max, over xs (default: all of the field)."""
    rows = f3_recurrence_rows(field, field.elements() if xs is None else xs)
    return list(islice(rows, n_max + 1))


def f3_eval_coeff(field: GF, n: int, a: int, x: int) -> int:
    """F_n(a, x) from the coefficient form: a^n F_n(1, x / a^2), and 0 when a = 0."""
    if a == 0:
        return 0
    if a == 1:
        t = x
        scale = 1
    else:
        t = field.div(x, field.mul(a, a))
        scale = field.pow(a, n)
    return field.mul(scale, poly_eval(_f3_reduced(field, n), t))


def quarter_value(field: GF, n: int) -> int:
    """n / 2^(n-1) in the prime subfield (the value of F_n(1, 1/4))."""
    require_odd(field)
    if n == 0 or n % field.p == 0:
        return 0
    half = field.inv(2)
    return field.mul(field.scalar(n), field.pow(half, (n - 1) % (field.p - 1)))


def f3_eval_functional(field: GF, n: int, x: int) -> int:
    """F_n(1, x) through x = y(1 - y): (y^n - (1 - y)^n) / (2y - 1).

    y = (1 + s) / 2 with s the canonical square root of 1 - 4x, taken in
    GF(q^2) when 1 - 4x is a non-square in GF(q).
    """
    require_odd(field)
    disc = field.sub(1, field.mul(4 % field.p, x))
    if disc == 0:
        return quarter_value(field, n)
    s = field.sqrt(disc)
    if s is not None:
        return _functional(field, n, s)
    big, emb = quad_ext(field)
    s = big.sqrt(emb(disc))
    if s is None:  # pragma: no cover - every element of GF(q) is a square in GF(q^2)
        raise RuntimeError("no square root in the quadratic extension")
    value = _functional(big, n, s)
    try:
        return emb.restrict(value)
    except FieldError:
        raise RuntimeError(f"functional value {value} escaped {field!r}") from None


def _functional(F: GF, n: int, s: int) -> int:
    # s = 2y - 1, so y = (1 + s)/2 and 1 - y = (1 - s)/2
    half = F.inv(2)
    y = F.mul(F.add(1, s), half)
    y_bar = F.mul(F.sub(1, s), half)
    return F.div(F.sub(F.pow(y, n), F.pow(y_bar, n)), s)


def jacobsthal_eval(field: GF, n: int, t: int) -> int:
    """Jacobsthal polynomial J_n(t): J_0 = 0, J_1 = 1, J_n = J_{n-1} + 2t J_{n-2}."""
    if n == 0:
        return 0
    two_t = field.add(t, t)
    prev, cur = 0, 1
    for _ in range(n - 1):
        prev, cur = cur, field.add(cur, field.mul(two_t, prev))
    return cur


def jacobsthal_rows(field: GF, ts: Iterable[int]) -> Iterator[list[int]]:
    """Yield [J_n(t) for t in ts] for n = 0, 1, 2, ... indefinitely."""
    ts = list(ts)
    add, mul = field.add, field.mul
    two_ts = [add(t, t) for t in ts]
    prev = [0] * len(ts)
    cur = [1] * len(ts)
    yield prev
    while True:
        yield cur
        prev, cur = cur, [add(c, mul(tt, pv)) for c, tt, pv in zip(cur, two_ts, prev)]


def f3_eval_jacobsthal(field: GF, n: int, x: int) -> int:
    """F_n(1, x) as J_n(-x/2)."""
    require_odd(field)
    t = field.neg(field.mul(x, field.inv(2)))
    return jacobsthal_eval(field, n, t)


def fn_aux(field: GF, n: int) -> DensePoly:
    """f_n(x) = sum_j C(n, 2j+1) x^j."""
    return DensePoly.from_ints(field, [comb(n, 2 * j + 1) for j in range((n + 1) // 2)])


def fn_aux_eval(field: GF, n: int, x: int) -> int:
    return poly_eval(fn_aux(field, n), x)


def frobenius_lift(field: GF, n: int, k: int, x: int) -> int:
    """F_n(1, x)^(p^k) * (1 - 4x)^((p^k - 1)/2), the closed form of F_{n p^k}(1, x).

    F_n is taken from the coefficient form so the result is independent of
    the recurrence evaluator.
    """
    require_odd(field)
    if k < 1:
        raise ValueError("k must be >= 1")
    pk = field.p**k
    base = f3_eval_coeff(field, n, 1, x)
    disc = field.sub(1, field.mul(4 % field.p, x))
    return field.mul(field.pow(base, pk), field.pow(disc, (pk - 1) // 2))
