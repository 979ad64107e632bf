import pytest
from hypothesis import given, settings, strategies as st

from revdickson.gf import (
    GF,
    FieldError,
    field_make,
    is_irreducible,
    parse_field,
    quad_ext,
    smallest_irreducible,
)
from revdickson.poly import DensePoly, poly_eval, poly_mod_xq_minus_x, poly_mul, poly_pow

from oracles import (
    irreducible_by_trial_division,
    monic_polys,
    smallest_irreducible_bruteforce,
    sqrt_bruteforce,
)

SMALL = [(3, 1), (5, 1), (7, 1), (3, 2), (5, 2), (3, 3), (3, 4), (7, 2)]


def test_field_make_prime_field_modulus_is_x():
    assert field_make(7, 1).modulus == (0, 1)


@pytest.mark.parametrize("p,e,want", [(3, 2, (1, 0, 1)), (5, 2, (2, 0, 1))])
def test_field_make_examples(p, e, want):
    assert field_make(p, e).modulus == want


@pytest.mark.parametrize("p,d", [(3, 2), (3, 3), (3, 4), (5, 2), (5, 3), (7, 2), (11, 2), (3, 6)])
def test_smallest_irreducible_matches_exhaustive_scan(p, d):
    assert smallest_irreducible(p, d) == smallest_irreducible_bruteforce(p, d)


@pytest.mark.parametrize("p,d", [(3, 2), (3, 3), (3, 4), (5, 2), (5, 3)])
def test_rabin_agrees_with_trial_division(p, d):
    for f in monic_polys(p, d):
        assert is_irreducible(f, p) == irreducible_by_trial_division(f, p), f


@pytest.mark.parametrize("p,e", [(4, 1), (1, 1), (9, 1), (3, 11), (257, 2)])
def test_field_make_rejects(p, e):
    with pytest.raises(FieldError):
        field_make(p, e)


def test_field_make_deterministic_and_cached():
    assert field_make(3, 3) is field_make(3, 3)
    assert GF(3, 3).modulus == field_make(3, 3).modulus


def test_reducible_modulus_rejected():
    with pytest.raises(FieldError):
        GF(3, 2, modulus=(2, 0, 1))  # x^2 - 1


def test_small_arithmetic_examples():
    F7 = field_make(7)
    assert F7.inv(2) == 4
    assert F7.pow(3, 6) == 1
    F9 = field_make(3, 2)
    t = F9.from_coeffs([0, 1])
    assert F9.mul(t, t) == 2


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        field_make(7).inv(0)
    with pytest.raises(ZeroDivisionError):
        field_make(3, 2).inv(0)


@pytest.mark.parametrize("p,n,want", [(7, 10, 3), (5, 1, 1)])
def test_int_scalar(p, n, want):
    assert field_make(p).scalar(n) == want


def test_int_scalar_extension_characteristic():
    assert field_make(3, 2).scalar(3) == 0


@pytest.mark.parametrize("a,want", [(2, 3), (0, 0), (3, None)])
def test_sqrt_gf7(a, want):
    assert field_make(7).sqrt(a) == want


@pytest.mark.parametrize("p,e", [(3, 1), (7, 1), (13, 1), (3, 2), (5, 2), (3, 3), (17, 1)])
def test_sqrt_matches_bruteforce(p, e):
    F = field_make(p, e)
    for a in F.elements():
        assert F.sqrt(a) == sqrt_bruteforce(F, a)


def test_enumerate_order():
    assert list(field_make(3).elements()) == [0, 1, 2]
    F9 = field_make(3, 2)
    elems = list(F9.elements())
    assert len(elems) == 9 and F9.coeffs(elems[0]) == (0, 0) and F9.coeffs(elems[-1]) == (2, 2)
    assert len(field_make(5, 2).elements()) == 25
    coeff_keys = [tuple(reversed(F9.coeffs(a))) for a in elems]
    assert coeff_keys == sorted(coeff_keys)


@pytest.mark.parametrize("p,e", SMALL[:7])
def test_multiplicative_inverse_exhaustive(p, e):
    F = field_make(p, e)
    for a in F.elements():
        for b in range(1, F.q):
            assert F.mul(F.mul(a, b), F.inv(b)) == a


@pytest.mark.parametrize("p,e", SMALL)
def test_fermat(p, e):
    F = field_make(p, e)
    for a in F.elements():
        assert F.pow(a, F.q) == a
        if a:
            assert F.pow(a, F.q - 1) == 1


@pytest.mark.parametrize("p,e", [(3, 2), (5, 2), (3, 3)])
def test_tabled_and_polynomial_multiplication_agree(p, e):
    F = field_make(p, e)
    for a in F.elements():
        for b in F.elements():
            assert F.mul(a, b) == F._mul_poly(a, b)
            assert F.add(a, b) == F.from_coeffs(x + y for x, y in zip(F.coeffs(a), F.coeffs(b)))


def test_large_exponent_pow():
    F = field_make(5, 2)
    a = F.from_coeffs([2, 3])
    n = 2**64 - 1
    assert F.pow(a, n) == F.pow(a, n % (F.q - 1))


def test_untabled_extension_arithmetic():
    # GF(3^12) has order > table limit, so the polynomial path is used
    F = GF(3, 12)
    assert F._exp is None
    a, b = 12345, 54321
    assert F.mul(F.mul(a, b), F.inv(b)) == a
    assert F.pow(a, F.q - 1) == 1
    r = F.sqrt(F.mul(a, a))
    assert r in (a, F.neg(a))


def test_quad_ext_prime_subfield_canonical():
    big, emb = quad_ext(field_make(3))
    assert big.q == 9
    assert emb(2) == 2


@pytest.mark.parametrize("p,e", [(3, 1), (5, 1), (7, 1), (3, 2)])
def test_quad_ext_is_a_homomorphism(p, e):
    F = field_make(p, e)
    big, emb = quad_ext(F)
    assert big.q == F.q**2
    assert len(set(emb.image())) == F.q
    for a in F.elements():
        assert big.pow(emb(a), F.q) == emb(a)
        assert emb.restrict(emb(a)) == a
        for b in F.elements():
            assert emb(F.add(a, b)) == big.add(emb(a), emb(b))
            assert emb(F.mul(a, b)) == big.mul(emb(a), emb(b))


def test_restrict_outside_image():
    big, emb = quad_ext(field_make(5))
    outside = next(b for b in big.elements() if not emb.contains(b))
    with pytest.raises(FieldError):
        emb.restrict(outside)


@pytest.mark.parametrize("text,label", [("7", "7"), ("3^2", "3^2"), ("9", "3^2"), ("27", "3^3")])
def test_parse_field(text, label):
    assert parse_field(text).label == label


@pytest.mark.parametrize("text", ["6", "x", "1", "3^0", "2^17"])
def test_parse_field_errors(text):
    with pytest.raises(FieldError):
        parse_field(text)


# -- dense polynomials --------------------------------------------------------

def test_poly_mul_example():
    F = field_make(7)
    assert poly_mul(DensePoly(F, [1, 1]), DensePoly(F, [1, 6])) == DensePoly(F, [1, 0, 6])


def test_poly_mod_example():
    F = field_make(3)
    assert poly_mod_xq_minus_x(DensePoly.monomial(F, 3), 3) == DensePoly(F, [0, 1])


def test_poly_eval_example():
    F = field_make(7)
    assert poly_eval(DensePoly(F, [1, F.neg(2)]), 3) == 2


def test_poly_trailing_zeros_and_zero_poly():
    F = field_make(5)
    assert DensePoly(F, [1, 2, 0, 0]).coeffs == (1, 2)
    assert DensePoly(F).degree == -1
    assert not DensePoly(F, [0])


def test_poly_field_mismatch():
    with pytest.raises(FieldError):
        DensePoly(field_make(5), [1]) * DensePoly(field_make(7), [1])


def test_poly_pow_matches_repeated_mul():
    F = field_make(3, 2)
    a = DensePoly(F, [1, 4, 7])
    acc = DensePoly(F, [1])
    for n in range(7):
        assert poly_pow(a, n) == acc
        acc = acc * a


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([(3, 1), (5, 1), (3, 2), (7, 1)]), st.data())
def test_mod_xq_minus_x_preserves_values(pe, data):
    F = field_make(*pe)
    coeffs = data.draw(st.lists(st.integers(0, F.q - 1), max_size=2 * F.q + 1))
    a = DensePoly(F, coeffs)
    r = poly_mod_xq_minus_x(a, F.q)
    assert r.degree < F.q
    for x in F.elements():
        assert poly_eval(a, x) == poly_eval(r, x)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_poly_ring_laws(data):
    F = field_make(5, 2)
    el = st.integers(0, F.q - 1)
    a, b, c = (DensePoly(F, data.draw(st.lists(el, max_size=6))) for _ in range(3))
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    x = data.draw(el)
    assert poly_eval(a * b, x) == F.mul(poly_eval(a, x), poly_eval(b, x))
