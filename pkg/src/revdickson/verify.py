"""Exhaustive identity checks, one function per identity, run per field.

Each check takes a field and returns ``(ok, detail)``; ``detail`` names the
first counterexample when ``ok`` is false. :func:`run` drives a list of
checks over field lists and is what ``revdickson verify`` calls.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import islice
from typing import Callable, Iterable

from . import charsum, dickson as dk, permcheck as pc
from .gf import GF, parse_field
from .poly import poly_eval

__all__ = ["CheckResult", "CHECKS", "QUICK_FIELDS", "run", "fields_for"]

Check = Callable[[GF], "tuple[bool, str]"]

ALL_FIELDS = ("3", "5", "7", "3^2", "11", "13", "5^2", "3^3")
SMALL_FIELDS = ("3", "5", "7", "3^2")
QUICK_FIELDS = ("3", "5", "7")


def _rows(F: GF, n_max: int, xs: Iterable[int] | None = None) -> list[list[int]]:
    return dk.f3_table(F, n_max, xs)


def check_three_oracle(F: GF) -> tuple[bool, str]:
    n_max = F.q**2 - 1
    xs = list(F.elements())
    half = F.inv(2)
    ts = [F.neg(F.mul(x, half)) for x in xs]
    rec = _rows(F, n_max)
    jac = list(islice(dk.jacobsthal_rows(F, ts), n_max + 1))
    for n in range(n_max + 1):
        for x in xs:
            r = rec[n][x]
            if not (r == jac[n][x] == dk.f3_eval_coeff(F, n, 1, x) == dk.f3_eval_functional(F, n, x)):
                return False, f"n={n} x={x}"
    return True, f"n<={n_max}, all x"


def check_quarter_point(F: GF) -> tuple[bool, str]:
    x = F.inv(4 % F.p)
    half = F.inv(2)
    n_max = 2 * F.q**2
    for n, row in enumerate(islice(dk.f3_recurrence_rows(F, [x]), n_max + 1)):
        want = 0 if n == 0 else F.mul(F.scalar(n), F.pow(half, n - 1))
        if row[0] != want:
            return False, f"n={n}"
    return True, f"n<={n_max}"


def check_kind_relation(F: GF) -> tuple[bool, str]:
    two = F.scalar(2)
    for n in range(201):
        third = dk.reversed_dickson_coeffs(F, n, 2)
        combo = dk.reversed_dickson_coeffs(F, n, 1).scale(two) - dk.reversed_dickson_coeffs(F, n, 0)
        if third != combo:
            return False, f"n={n}"
    return True, "n<=200"


def check_frobenius_lift(F: GF) -> tuple[bool, str]:
    p = F.p
    rec = _rows(F, 50 * p * p)
    for k in (1, 2):
        for n in range(51):
            for x in F.elements():
                if rec[n * p**k][x] != dk.frobenius_lift(F, n, k, x):
                    return False, f"n={n} k={k} x={x}"
    return True, "n<=50, k in {1,2}"


def check_periodicity(F: GF) -> tuple[bool, str]:
    period = F.q**2 - 1
    quarter = F.inv(4 % F.p)
    rec = _rows(F, 3 * period)
    for n in range(1, period + 1):
        for x in F.elements():
            if x == quarter:
                continue
            if not rec[n][x] == rec[n + period][x] == rec[n + 2 * period][x]:
                return False, f"n={n} x={x}"
    return True, f"period {period}"


def check_binomial_form(F: GF) -> tuple[bool, str]:
    n_max = F.q**2 - 1
    half = F.inv(2)
    four = F.scalar(4)
    rec = _rows(F, n_max)
    for n in range(n_max + 1):
        fn = dk.fn_aux(F, n)
        scale = F.pow(half, n - 1) if n else 0
        for x in F.elements():
            if rec[n][x] != F.mul(scale, poly_eval(fn, F.sub(1, F.mul(four, x)))):
                return False, f"n={n} x={x}"
    return True, f"n<={n_max}"


def check_self_reciprocal(F: GF) -> tuple[bool, str]:
    for n in range(2, F.q**2, 2):
        if n % F.p == 0:
            continue
        fn = dk.fn_aux(F, n)
        m = (n - 1) // 2
        for x0 in range(1, F.q):
            if poly_eval(fn, x0) != F.mul(F.pow(x0, m), poly_eval(fn, F.inv(x0))):
                return False, f"n={n} x0={x0}"
    return True, "even n, p does not divide n"


def check_period6(F: GF) -> tuple[bool, str]:
    table = [0, 1, 1, 0, -1, -1]
    for n, row in enumerate(islice(dk.f3_recurrence_rows(F, [1]), 101)):
        if row[0] != F.scalar(table[n % 6]):
            return False, f"n={n}"
    return True, "n<=100"


def check_fixtures(F: GF) -> tuple[bool, str]:
    rows = _rows(F, 100)
    for n in range(1, 101):
        if rows[n][0] != 1:
            return False, f"F_{n}(1,0) != 1"
    for n, want in ((0, 0), (1, 1), (2, 1)):
        if any(v != want for v in rows[n]):
            return False, f"F_{n} is not constant {want}"
    return True, "F_n(1,0), F_0, F_1, F_2"


def check_pk_criterion(F: GF) -> tuple[bool, str]:
    for k in range(1, F.e + 1):
        for n in (F.p**k, 2 * F.p**k):
            crit = pc.exact_criterion_pk(F, n)
            if crit is None or crit != pc.is_permutation(F, n):
                return False, f"n={n}"
    return True, f"k<={F.e}"


def check_filters(F: GF) -> tuple[bool, str]:
    for n, row in enumerate(_rows(F, F.q**2 - 1)):
        if not pc.values_are_permutation(row, F.q):
            continue
        for name, fn in (("mod6", pc.filter_mod6), ("even", pc.filter_even), ("div3", pc.filter_div3)):
            applicable, passed = fn(F, n)
            if applicable and not passed:
                return False, f"{name} at n={n}"
        if F.sum(row) != 0:
            return False, f"nonzero value sum at n={n}"
    return True, f"n<={F.q**2 - 1}"


def check_two_to_one(F: GF) -> tuple[bool, str]:
    for n, row in enumerate(_rows(F, F.q**2 - 1)):
        if pc.two_to_one_test(F, n) != pc.values_are_permutation(row, F.q):
            return False, f"n={n}"
    return True, f"n<={F.q**2 - 1}"


def check_binomial_form_pp(F: GF) -> tuple[bool, str]:
    for n, row in enumerate(_rows(F, F.q**2 - 1)):
        fn = dk.fn_aux(F, n)
        aux_pp = pc.values_are_permutation([poly_eval(fn, x) for x in F.elements()], F.q)
        if aux_pp != pc.values_are_permutation(row, F.q):
            return False, f"n={n}"
    return True, f"n<={F.q**2 - 1}"


def check_product_membership(F: GF) -> tuple[bool, str]:
    try:
        V = pc.build_V(F)
    except RuntimeError as exc:
        return False, str(exc)
    if len(V) != F.q:
        return False, f"|V|={len(V)}"
    return pc.product_membership_scan(F), f"|V|={len(V)}"


def check_square_membership(F: GF) -> tuple[bool, str]:
    return pc.square_membership_scan(F), "all eps in GF(q^2) minus {0,1}"


def check_charsum(F: GF) -> tuple[bool, str]:
    try:
        table = charsum.sum_table(F)
    except charsum.ConsistencyError as exc:
        return False, str(exc)
    brute = charsum.sums_bruteforce(F, F.q**2 - 1)
    for n in range(1, F.q**2):
        if table.f[n] != brute[n]:
            return False, f"n={n}"
    return True, f"n in 1..{F.q**2 - 1}"


def check_h_identity(F: GF) -> tuple[bool, str]:
    try:
        charsum.b_coeffs(F)
    except charsum.ConsistencyError as exc:
        return False, str(exc)
    return charsum.h_identity_holds(F), "b closed form and h(z) cross-multiplied"


def check_generating_function(F: GF) -> tuple[bool, str]:
    n_terms = 2 * F.q**2
    for x in F.elements():
        if not charsum.generating_function_holds(F, x, n_terms):
            return False, f"x={x}"
    return True, f"N={n_terms}"


@dataclass(frozen=True)
class _Spec:
    name: str
    fn: Check
    full_fields: tuple[str, ...]


CHECKS: tuple[_Spec, ...] = (
    _Spec("fixtures", check_fixtures, ("3", "5", "7", "11", "13")),
    _Spec("period6", check_period6, ("3", "5", "7", "11", "13")),
    _Spec("three_oracle", check_three_oracle, ALL_FIELDS),
    _Spec("quarter_point", check_quarter_point, ALL_FIELDS),
    _Spec("kind_relation", check_kind_relation, ("3", "5", "7")),
    _Spec("frobenius_lift", check_frobenius_lift, SMALL_FIELDS),
    _Spec("periodicity", check_periodicity, SMALL_FIELDS),
    _Spec("binomial_form", check_binomial_form, ("3", "5", "7", "3^2", "11", "13")),
    _Spec("self_reciprocal", check_self_reciprocal, ("3", "5", "7", "3^2", "11", "13")),
    _Spec("pk_criterion", check_pk_criterion, ALL_FIELDS),
    _Spec("filters", check_filters, ALL_FIELDS),
    _Spec("two_to_one", check_two_to_one, SMALL_FIELDS),
    _Spec("binomial_form_pp", check_binomial_form_pp, SMALL_FIELDS),
    _Spec("product_membership", check_product_membership, SMALL_FIELDS),
    _Spec("square_membership", check_square_membership, SMALL_FIELDS),
    _Spec("charsum", check_charsum, ("3", "5", "7", "3^2", "13")),
    _Spec("h_identity", check_h_identity, ("3", "5", "7", "3^2", "13")),
    _Spec("generating_function", check_generating_function, ("3", "5", "7")),
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    field: str
    ok: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.name} q={self.field} ({self.detail})"


def fields_for(spec: _Spec, level: str, fields: Iterable[str] | None) -> list[str]:
    if fields is not None:
        return list(fields)
    if level == "quick":
        return [f for f in spec.full_fields if f in QUICK_FIELDS]
    return list(spec.full_fields)


def _run_one(name: str, label: str) -> CheckResult:
    spec = next(s for s in CHECKS if s.name == name)
    F = parse_field(label)
    try:
        ok, detail = spec.fn(F)
    except Exception as exc:  # a crash inside a check is a failure of that check
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return CheckResult(name, F.label, bool(ok), detail)


def run(level: str = "quick", fields: Iterable[str] | None = None, workers: int = 1) -> list[CheckResult]:
    """Run every check; results come back in CHECKS order, then field order."""
    if level not in ("quick", "full"):
        raise ValueError(f"unknown level {level!r}")
    fields = None if fields is None else list(fields)
    jobs = [(s.name, f) for s in CHECKS for f in fields_for(s, level, fields)]
    if workers <= 1:
        return [_run_one(*job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_one, *zip(*jobs)))

