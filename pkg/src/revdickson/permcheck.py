"""Permutation behaviour of F_n(1, x) on F_q.

The brute-force verdict (:func:`is_permutation`) is the ground truth; every
other routine here is a theorem-derived predictor that a scan compares
against it.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from itertools import islice
from math import gcd

from .dickson import (
    f3_eval_recurrence,
    f3_recurrence_rows,
    quarter_value,
    require_odd,
)
from .gf import GF, quad_ext

__all__ = [
    "FilterResult",
    "PPReport",
    "VSet",
    "is_permutation",
    "values_are_permutation",
    "prime_power_exponent",
    "exact_criterion_pk",
    "pk_criterion",
    "filter_mod6",
    "filter_even",
    "filter_div3",
    "build_V",
    "two_to_one_test",
    "square_membership_scan",
    "product_membership_scan",
    "scan",
    "worker_count",
]


@dataclass(frozen=True)
class FilterResult:
    name: str
    applicable: bool
    passed: bool


@dataclass(frozen=True)
class PPReport:
    """Everything known about F_n(1, x) on one field.

    ``exact_criterion`` is set only for n = p^k or 2 p^k with 1 <= k <= e;
    for k > e the same gcd test is kept in ``extrapolated_criterion`` and is
    never treated as a theorem.
    """

    q: int
    n: int
    is_pp: bool
    filters: tuple[FilterResult, ...]
    exact_criterion: bool | None
    extrapolated_criterion: bool | None
    two_to_one_verdict: bool
    value_sum: int

    def violations(self) -> list[str]:
        out = []
        if self.is_pp:
            for f in self.filters:
                if f.applicable and not f.passed:
                    out.append(f"{f.name}: PP at n={self.n} but filter fails")
            if self.value_sum != 0:
                out.append(f"sum: PP at n={self.n} but sum of values is {self.value_sum}")
        if self.exact_criterion is not None and self.exact_criterion != self.is_pp:
            out.append(f"pk_criterion: predicts {self.exact_criterion}, brute force {self.is_pp} at n={self.n}")
        if self.two_to_one_verdict != self.is_pp:
            out.append(f"two_to_one: predicts {self.two_to_one_verdict}, brute force {self.is_pp} at n={self.n}")
        return out

    def as_record(self) -> dict:
        rec = {
            "q": self.q,
            "n": self.n,
            "is_pp": self.is_pp,
            "exact_criterion": self.exact_criterion,
            "extrapolated_criterion": self.extrapolated_criterion,
            "two_to_one": self.two_to_one_verdict,
            "value_sum": self.value_sum,
        }
        for f in self.filters:
            rec[f"{f.name}_applicable"] = f.applicable
            rec[f"{f.name}_passed"] = f.passed
        rec["invariants_ok"] = not self.violations()
        return rec


def values_are_permutation(values: list[int], q: int) -> bool:
    seen = bytearray(q)
    for v in values:
        if seen[v]:
            return False
        seen[v] = 1
    return True


def is_permutation(field: GF, n: int) -> bool:
    """Brute force: does x -> F_n(1, x) hit every element of F_q once?"""
    require_odd(field)
    return values_are_permutation([f3_eval_recurrence(field, n, x) for x in field.elements()], field.q)


def prime_power_exponent(field: GF, n: int) -> tuple[int, int] | None:
    """(k, m) with n = m p^k, m in {1, 2}, k >= 1; None otherwise."""
    p = field.p
    if n <= 0:
        return None
    for m in (1, 2):
        if n % m:
            continue
        r, k = n // m, 0
        while r % p == 0:
            r //= p
            k += 1
        if r == 1 and k >= 1:
            return k, m
    return None


def pk_criterion(field: GF, k: int) -> bool:
    return gcd((field.p**k - 1) // 2, field.q - 1) == 1


def exact_criterion_pk(field: GF, n: int) -> bool | None:
    """gcd((p^k - 1)/2, q - 1) == 1 for n = p^k or 2 p^k with 1 <= k <= e."""
    require_odd(field)
    hit = prime_power_exponent(field, n)
    if hit is None or hit[0] > field.e:
        return None
    return pk_criterion(field, hit[0])


def filter_mod6(field: GF, n: int) -> tuple[bool, bool]:
    require_odd(field)
    return True, n % 6 not in (1, 2)


def filter_even(field: GF, n: int) -> tuple[bool, bool]:
    require_odd(field)
    applicable = n % 2 == 0 and n % field.p != 0
    passed = n % 4 == 0 and gcd((n - 1) // 2, field.q - 1) == 1
    return applicable, passed


def filter_div3(field: GF, n: int) -> tuple[bool, bool]:
    require_odd(field)
    applicable = field.p > 3 and n % 3 == 0
    passed = gcd(n, field.q**2 - 1) == 3
    return applicable, passed


_FILTERS = (("mod6", filter_mod6), ("even", filter_even), ("div3", filter_div3))


@dataclass(frozen=True)
class VSet:
    """V = {v in GF(q^2) : v^q = 1 - v}, as encodings in the extension field."""

    big: GF
    elements: tuple[int, ...] = dc_field(default=())

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, v: int) -> bool:
        return v in self.elements


def build_V(field: GF) -> VSet:
    require_odd(field)
    big, emb = quad_ext(field)
    q = field.q
    elems = tuple(v for v in big.elements() if big.pow(v, q) == big.sub(1, v))
    if len(elems) != q:
        raise RuntimeError(f"|V| = {len(elems)}, expected {q}")
    half = emb(field.inv(2))
    if [v for v in elems if emb.contains(v)] != [half]:
        raise RuntimeError("V meets F_q outside {1/2}")
    return VSet(big, elems)


@dataclass
class _TwoToOneDomain:
    big: GF
    ys: list[int]
    s_inv: list[int]  # 1 / (2y - 1)
    ybar: list[int]   # 1 - y


_domain_cache: dict[GF, _TwoToOneDomain] = {}


def _two_to_one_domain(field: GF) -> _TwoToOneDomain:
    dom = _domain_cache.get(field)
    if dom is None:
        big, emb = quad_ext(field)
        half = emb(field.inv(2))
        ys = [emb(a) for a in field.elements()] + list(build_V(field).elements)
        ys = sorted(set(ys) - {half})
        s_inv = [big.inv(big.sub(big.add(y, y), 1)) for y in ys]
        ybar = [big.sub(1, y) for y in ys]
        dom = _domain_cache[field] = _TwoToOneDomain(big, ys, s_inv, ybar)
    return dom


def two_to_one_test(field: GF, n: int) -> bool:
    """True iff y -> (y^n - (1-y)^n)/(2y-1) is 2-to-1 on (F_q u V) minus {1/2}
    and never takes the value n / 2^(n-1)."""
    require_odd(field)
    dom = _two_to_one_domain(field)
    big = dom.big
    _, emb = quad_ext(field)
    forbidden = emb(quarter_value(field, n))
    counts: dict[int, int] = {}
    for y, yb, si in zip(dom.ys, dom.ybar, dom.s_inv):
        g = big.mul(big.sub(big.pow(y, n), big.pow(yb, n)), si)
        if g == forbidden:
            return False
        c = counts.get(g, 0) + 1
        if c > 2:
            return False
        counts[g] = c
    return all(c == 2 for c in counts.values())


def product_membership_scan(field: GF) -> bool:
    """x(1 - x) lies in F_q exactly when x^q = x or x^q = 1 - x, for all x in GF(q^2)."""
    require_odd(field)
    big, emb = quad_ext(field)
    q = field.q
    for x in big.elements():
        xq = big.pow(x, q)
        lhs = emb.contains(big.mul(x, big.sub(1, x)))
        rhs = xq == x or xq == big.sub(1, x)
        if lhs != rhs:
            return False
    return True


def square_membership_scan(field: GF) -> bool:
    """For eps in GF(q^2) minus {0, 1}, y = (eps + 1)/(eps - 1):
    y^2 in F_q iff eps^(q+1) = 1 or eps^(q-1) = 1."""
    require_odd(field)
    big, emb = quad_ext(field)
    q = field.q
    for eps in big.elements():
        if eps in (0, 1):
            continue
        y = big.div(big.add(eps, 1), big.sub(eps, 1))
        lhs = emb.contains(big.mul(y, y))
        rhs = big.pow(eps, q + 1) == 1 or big.pow(eps, q - 1) == 1
        if lhs != rhs:
            return False
    return True


def _report(field: GF, n: int, values: list[int]) -> PPReport:
    filters = tuple(FilterResult(name, *fn(field, n)) for name, fn in _FILTERS)
    hit = prime_power_exponent(field, n)
    exact = extrap = None
    if hit is not None:
        if hit[0] <= field.e:
            exact = pk_criterion(field, hit[0])
        else:
            extrap = pk_criterion(field, hit[0])
    return PPReport(
        q=field.q,
        n=n,
        is_pp=values_are_permutation(values, field.q),
        filters=filters,
        exact_criterion=exact,
        extrapolated_criterion=extrap,
        two_to_one_verdict=two_to_one_test(field, n),
        value_sum=field.sum(values),
    )


def _scan_range(field: GF, start: int, stop: int) -> list[PPReport]:
    rows = f3_recurrence_rows(field, field.elements())
    return [_report(field, n, row) for n, row in zip(range(start, stop), islice(rows, start, stop))]


def worker_count() -> int:
    env = os.environ.get("DICKSON_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def scan(field: GF, n_max: int, workers: int | None = None) -> list[PPReport]:
    """One :class:`PPReport` per n in [0, n_max], ordered by n."""
    require_odd(field)
    workers = worker_count() if workers is None else workers
    total = n_max + 1
    if workers <= 1 or total < 64:
        return _scan_range(field, 0, total)
    step = -(-total // workers)
    bounds = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_scan_range, field, lo, hi) for lo, hi in bounds]
        return [r for fut in futures for r in fut.result()]
