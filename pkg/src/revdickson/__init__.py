"""Reversed Dickson polynomials of the third kind over finite fields."""

from .gf import GF, FieldError, field_make, quad_ext
from .poly import DensePoly
from .dickson import (
    CharacteristicTwoError,
    reversed_dickson_coeffs,
    f3_eval_recurrence,
    f3_eval_coeff,
    f3_eval_functional,
    f3_eval_jacobsthal,
    fn_aux,
    frobenius_lift,
)
from .permcheck import PPReport, is_permutation, scan, two_to_one_test
from .charsum import SumTable, sum_bruteforce, sum_via_recursion, sum_table

__version__ = "0.1.0"
