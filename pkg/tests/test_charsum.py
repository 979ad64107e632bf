import pytest

from revdickson import charsum as cs
from revdickson.dickson import f3_eval_recurrence
from revdickson.gf import field_make
from revdickson.permcheck import is_permutation

F3 = field_make(3)
FIELDS = [(3, 1), (5, 1), (7, 1), (3, 2), (13, 1)]


def naive_sum(F, n):
    return F.sum(f3_eval_recurrence(F, n, a) for a in F.elements())


@pytest.mark.parametrize("n,want", [(1, 0), (5, 2), (3, 0)])
def test_bruteforce_examples(n, want):
    assert cs.sum_bruteforce(F3, n) == want


def test_bruteforce_q3_n5_by_hand():
    # F_5(1, x) = 1 - 3x + x^2 = 1 + x^2 mod 3
    assert sum(1 + a * a for a in range(3)) % 3 == 2


def test_sums_bruteforce_matches_naive():
    F = field_make(3, 2)
    sums = cs.sums_bruteforce(F, 80)
    assert sums == [naive_sum(F, n) for n in range(81)]


def test_b_closed_form_entries():
    for p in (3, 5, 7):
        F = field_make(p)
        b = cs.b_closed_form(F)
        q = F.q
        assert b[1] == p - 1 and b[q] == p - 1
        assert len(b) == q * q - q + 2


def test_b_q3_binomial_positions():
    b = cs.b_closed_form(F3)
    # k = 5, 7 (alpha + beta = 3) carry (-1)^(beta+1) C(2, beta); k = 9 is out of range
    assert b[5] == (-1) ** 2 * 2 % 3
    assert b[7] == (-1) ** 3 * 1 % 3
    assert [k for k in range(len(b)) if b[k]] == [1, 3, 5, 7]
    assert cs.b_expansion(F3).coeffs == tuple(b[: cs.b_expansion(F3).degree + 1])


@pytest.mark.parametrize("pe", FIELDS)
def test_b_expansion_equals_closed_form(pe):
    F = field_make(*pe)
    assert cs.b_coeffs(F) == cs.b_closed_form(F)


@pytest.mark.parametrize("pe", FIELDS)
def test_c_shape(pe):
    F = field_make(*pe)
    c = cs.c_coeffs(F)
    assert len(c) == F.q**2 + F.q
    assert c[0] == 0
    assert all(v < F.p for v in c)


def test_c1_gets_the_leading_one():
    # only the first product contributes to z^1: the b-part starts at z^3
    assert cs.c_coeffs(F3)[1] == 1


def test_d_table_first_and_last():
    for pe in FIELDS:
        F = field_make(*pe)
        T = cs.sum_table(F)
        q = F.q
        assert T.d[1] == F.neg(T.c[1])
        assert T.d[q * q - 1] == T.c[q * q + q - 1]
        assert T.d[q] == F.sub(T.c[1], T.c[q])


def test_d5_q3_is_zero():
    assert cs.sum_table(F3).d[5] == 0


def test_d_table_detects_inconsistent_c():
    c = list(cs.sum_table(F3).c)
    c[-1] = (c[-1] + 1) % 3
    with pytest.raises(cs.ConsistencyError, match="index"):
        cs.d_table(F3, c)


def test_d_table_length_check():
    with pytest.raises(ValueError):
        cs.d_table(F3, [0] * 5)


@pytest.mark.parametrize("pe", FIELDS + [(11, 1), (5, 2), (3, 3)])
def test_recursion_equals_bruteforce(pe):
    F = field_make(*pe)
    brute = cs.sums_bruteforce(F, F.q**2 - 1)
    for n in range(1, F.q**2):
        assert cs.sum_via_recursion(F, n) == brute[n], n


@pytest.mark.parametrize("pe", FIELDS)
def test_printed_corrections_equal_derived(pe):
    F = field_make(*pe)
    assert cs.printed_sum_table(F)[1:] == list(cs.sum_table(F).f[1:])


def test_sum_via_recursion_examples():
    assert cs.sum_via_recursion(F3, 5) == 2
    assert cs.sum_via_recursion(F3, 1) == 0
    F5 = field_make(5)
    assert cs.sum_via_recursion(F5, 5) == cs.sum_bruteforce(F5, 5)


@pytest.mark.parametrize("n", [0, 9, -1])
def test_sum_via_recursion_range(n):
    with pytest.raises(ValueError):
        cs.sum_via_recursion(F3, n)


@pytest.mark.parametrize("pe", FIELDS)
def test_h_identity(pe):
    assert cs.h_identity_holds(field_make(*pe))


@pytest.mark.parametrize("pe", [(3, 1), (5, 1), (7, 1)])
def test_generating_function(pe):
    F = field_make(*pe)
    for x in F.elements():
        assert cs.generating_function_holds(F, x, 2 * F.q**2)


@pytest.mark.parametrize("pe", [(3, 1), (5, 1), (7, 1), (3, 2)])
def test_pp_implies_zero_sum(pe):
    F = field_make(*pe)
    for n in range(F.q**2):
        if is_permutation(F, n):
            assert cs.sum_bruteforce(F, n) == 0


def test_table_entries_in_prime_field():
    for pe in FIELDS:
        F = field_make(*pe)
        T = cs.sum_table(F)
        for arr in (T.b, T.c, T.d, T.f):
            assert all(0 <= v < F.p for v in arr)
