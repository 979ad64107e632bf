"""The value sums f_n = sum_{a in F_q} F_n(1, a), n = 1 .. q^2 - 1.

Two independent routes:

* :func:`sum_bruteforce` adds up F_n(1, a) over the field;
* :func:`sum_via_recursion` expands the generating function
  z / (1 - z + x z^2) reduced modulo x^q - x into a polynomial identity

      (z^q - z^(q-1) - 1) * sum_n d_n z^n = sum_k c_k z^k,

  with d_n = f_n - n / 2^(n-1), and peels off d_n by comparing coefficients.

Everything on the second route happens in F_p: all coefficients involved are
prime-field values.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import islice
from math import comb

from .dickson import f3_recurrence_rows, quarter_value, require_odd
from .gf import GF, field_make
from .poly import DensePoly, poly_mul, poly_pow

__all__ = [
    "ConsistencyError",
    "SumTable",
    "sum_bruteforce",
    "sums_bruteforce",
    "b_coeffs",
    "b_expansion",
    "b_closed_form",
    "c_coeffs",
    "d_table",
    "sum_table",
    "sum_via_recursion",
    "printed_sum_table",
    "h_identity_holds",
    "generating_function_holds",
]


class ConsistencyError(RuntimeError):
    """Two derivations of the same coefficient disagree."""


def _prime_field(field: GF) -> GF:
    require_odd(field)
    return field_make(field.p, 1)


def sum_bruteforce(field: GF, n: int) -> int:
    """sum over a in F_q of F_n(1, a), computed with the recurrence."""
    row = next(islice(f3_recurrence_rows(field, field.elements()), n, None))
    s = field.sum(row)
    if not field.in_prime_field(s):
        raise ConsistencyError(f"sum {s} for n={n} lies outside the prime field")
    return s


def sums_bruteforce(field: GF, n_max: int) -> list[int]:
    """[sum_bruteforce(field, n) for n in 0..n_max], sharing one recurrence pass."""
    out = []
    for row in islice(f3_recurrence_rows(field, field.elements()), n_max + 1):
        s = field.sum(row)
        if not field.in_prime_field(s):
            raise ConsistencyError(f"sum {s} for n={len(out)} lies outside the prime field")
        out.append(s)
    return out


# -- the numerator sum_k b_k z^k of h(z) --------------------------------------

def b_expansion(field: GF) -> DensePoly:
    """z * (-1 - (z - z^q)^(q-1)) over F_p."""
    Fp = _prime_field(field)
    q = field.q
    z_minus_zq = DensePoly(Fp, [0, 1] + [0] * (q - 2) + [Fp.neg(1)])
    inner = poly_pow(z_minus_zq, q - 1)
    return (DensePoly(Fp, [Fp.neg(1)]) - inner).shift(1)


def b_closed_form(field: GF) -> list[int]:
    """b_0..b_{q^2-q+1} from k = alpha + beta q (b_0 = 0)."""
    Fp = _prime_field(field)
    q = field.q
    out = [0] * (q * q - q + 2)
    for k in range(1, q * q - q + 2):
        beta, alpha = divmod(k, q)
        if alpha + beta == q:
            out[k] = Fp.scalar((-1) ** (beta + 1) * comb(q - 1, beta))
        elif alpha + beta == 1:
            out[k] = Fp.neg(1)
    return out


def b_coeffs(field: GF) -> list[int]:
    """b_0..b_{q^2-q+1}, checked between expansion and closed form."""
    closed = b_closed_form(field)
    expanded = b_expansion(field)
    if expanded.degree > len(closed) - 1:
        raise ConsistencyError("b expansion degree exceeds q^2 - q + 1")
    for k, v in enumerate(closed):
        if expanded[k] != v:
            raise ConsistencyError(f"b_{k}: expansion {expanded[k]} != closed form {v}")
    return closed


def c_coeffs(field: GF, b: list[int] | None = None) -> list[int]:
    """c_0..c_{q^2+q-1} of the right-hand side of the coefficient identity."""
    Fp = _prime_field(field)
    q = field.q
    if b is None:
        b = b_coeffs(field)
    one = Fp.neg(Fp.neg(1))
    first = DensePoly(Fp, [one] + [0] * (q - 2) + [one, Fp.neg(1)])
    first = poly_mul(first, DensePoly(Fp, [0] + [1] * (q * q - 1)))

    quarter = Fp.inv(4 % Fp.p)
    z_minus_1 = DensePoly(Fp, [Fp.neg(1), 1])
    second = DensePoly.monomial(Fp, 2 * (q - 1))
    qj = 1
    for j in range(1, q):
        qj = Fp.mul(qj, quarter)
        term = poly_pow(z_minus_1, q - 1 - j).shift(2 * j).scale(qj)
        second = second + term
    rhs = first - poly_mul(second, DensePoly(Fp, b))

    top = q * q + q - 1
    if rhs.degree > top:
        raise ConsistencyError(f"degree {rhs.degree} of c-polynomial exceeds {top}")
    if rhs[0] != 0:
        raise ConsistencyError("c-polynomial has a constant term")
    return [rhs[k] for k in range(top + 1)]


def d_table(field: GF, c: list[int]) -> list[int]:
    """d_0..d_{q^2-1} (d_0 = 0) from c by coefficient comparison.

    Rows l = 1..q-2 are filled recursively; the last q entries come from the
    telescoped tail sum and must agree with continuing the recursion.
    """
    Fp = _prime_field(field)
    q = field.q
    add, sub, neg = Fp.add, Fp.sub, Fp.neg
    if len(c) != q * q + q:
        raise ValueError(f"expected c_0..c_{q*q+q-1}, got {len(c)} entries")
    d = [0] * (q * q)
    for j in range(1, q):
        d[j] = neg(c[j])
    d[q] = sub(c[1], c[q])
    for l in range(1, q - 1):
        if l >= 2:
            d[l * q] = sub(sub(d[(l - 1) * q], d[(l - 1) * q + 1]), c[l * q])
        for j in range(1, q):
            i = l * q + j
            d[i] = sub(sub(d[i - q], d[i - q + 1]), c[i])

    tail = [0] * q
    for j in range(q - 1, -1, -1):
        tail[j] = add(tail[j + 1] if j + 1 < q else 0, c[q * q + j])
    for j in range(q):
        i = q * q - q + j
        d[i] = tail[j]
    # every coefficient of the identity, including the rows only the tail covers
    for i in range(1, q * q + q):
        lhs = sub(sub(d[i - q] if i - q >= 1 else 0, d[i - q + 1] if 1 <= i - q + 1 < q * q else 0),
                  d[i] if i < q * q else 0)
        if lhs != c[i]:
            raise ConsistencyError(f"coefficient comparison fails at index {i}")
    return d


@dataclass(frozen=True)
class SumTable:
    """b, c, d and f for one field, each indexed from 0 with unused slot 0."""

    q: int
    p: int
    b: tuple[int, ...]
    c: tuple[int, ...]
    d: tuple[int, ...]
    f: tuple[int, ...]


@lru_cache(maxsize=None)
def sum_table(field: GF) -> SumTable:
    require_odd(field)
    Fp = _prime_field(field)
    b = b_coeffs(field)
    c = c_coeffs(field, b)
    d = d_table(field, c)
    f = [0] + [Fp.add(d[n], quarter_value(Fp, n)) for n in range(1, len(d))]
    return SumTable(field.q, field.p, tuple(b), tuple(c), tuple(d), tuple(f))


def sum_via_recursion(field: GF, n: int) -> int:
    """sum over a in F_q of F_n(1, a) for 1 <= n <= q^2 - 1, from the c/d tables."""
    require_odd(field)
    if not 1 <= n <= field.q**2 - 1:
        raise ValueError(f"n must lie in 1..{field.q**2 - 1}, got {n}")
    return sum_table(field).f[n]


def printed_sum_table(field: GF) -> list[int]:
    """f_1..f_{q^2-1} (slot 0 unused) using the closed correction terms
    (2^q(1-j) + 2j) / 2^(lq+j) and 1 / 2^((l-1)q) directly on f."""
    Fp = _prime_field(field)
    q = field.q
    c = sum_table(field).c
    add, sub, mul = Fp.add, Fp.sub, Fp.mul
    half = Fp.inv(2)

    def inv2pow(m: int) -> int:
        return Fp.pow(half, m % (Fp.p - 1))

    f = [0] * (q * q)
    for j in range(1, q):
        f[j] = add(Fp.neg(c[j]), mul(Fp.scalar(j), inv2pow(j - 1)))
    f[q] = sub(c[1], c[q])
    two_q = Fp.pow(2, q)
    for l in range(1, q - 1):
        if l >= 2:
            i = l * q
            f[i] = add(sub(sub(f[i - q], f[i - q + 1]), c[i]), inv2pow((l - 1) * q))
        for j in range(1, q):
            i = l * q + j
            corr = mul(add(mul(two_q, Fp.scalar(1 - j)), Fp.scalar(2 * j)), inv2pow(i))
            f[i] = add(sub(sub(f[i - q], f[i - q + 1]), c[i]), corr)
    for j in range(q):
        i = q * q - q + j
        tail = Fp.sum(c[q * q + k] for k in range(j, q))
        f[i] = add(tail, mul(Fp.scalar(j), inv2pow(i - 1)))
    return f


def h_identity_holds(field: GF) -> bool:
    """z(-1-(z-z^q)^(q-1)) (z-1) [(z-1)^(q-1) - z^(2(q-1))]
    == z (z^(q^2-1) - 1) (z^q - z^(q-1) - 1) in F_p[z]."""
    Fp = _prime_field(field)
    q = field.q
    m1 = Fp.neg(1)
    z_minus_1 = DensePoly(Fp, [m1, 1])
    bracket = poly_pow(z_minus_1, q - 1) - DensePoly.monomial(Fp, 2 * (q - 1))
    lhs = poly_mul(poly_mul(b_expansion(field), z_minus_1), bracket)
    rhs_a = DensePoly.monomial(Fp, q * q) - DensePoly.monomial(Fp, 1)
    rhs_b = DensePoly.monomial(Fp, q) - DensePoly.monomial(Fp, q - 1) - DensePoly(Fp, [1])
    return lhs == poly_mul(rhs_a, rhs_b)


def generating_function_holds(field: GF, x: int, n_terms: int) -> bool:
    """(1 - z + x z^2) * sum_{n<=N} F_n(1, x) z^n == z + O(z^(N+1))."""
    series = DensePoly(field, next(zip(*islice(f3_recurrence_rows(field, [x]), n_terms + 1))))
    denom = DensePoly(field, [1, field.neg(1), x])
    return poly_mul(denom, series).truncate(n_terms + 1) == DensePoly(field, [0, 1])
