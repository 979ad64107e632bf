"""Dense univariate polynomials over a :class:`~revdickson.gf.GF`."""

from __future__ import annotations

from typing import Iterable, Sequence

from .gf import GF, FieldError

__all__ = ["DensePoly", "poly_mul", "poly_pow", "poly_eval", "poly_mod_xq_minus_x"]


class DensePoly:
    """Polynomial with coefficients low-to-high and no trailing zeros.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: GF, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.field = field
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def monomial(cls, field: GF, degree: int, coeff: int = 1) -> "DensePoly":
        return cls(field, [0] * degree + [coeff])

    @classmethod
    def from_ints(cls, field: GF, ints: Sequence[int]) -> "DensePoly":
        """Coefficients given as integers, embedded in the prime subfield."""
        return cls(field, [field.scalar(i) for i in ints])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, DensePoly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __repr__(self) -> str:
        return f"DensePoly({self.field!r}, {list(self.coeffs)})"

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def _same_field(self, other: "DensePoly") -> GF:
        if self.field != other.field:
            raise FieldError(f"field mismatch: {self.field!r} vs {other.field!r}")
        return self.field

    def __add__(self, other: "DensePoly") -> "DensePoly":
        F = self._same_field(other)
        n = max(len(self), len(other))
        return DensePoly(F, [F.add(self[i], other[i]) for i in range(n)])

    def __sub__(self, other: "DensePoly") -> "DensePoly":
        F = self._same_field(other)
        n = max(len(self), len(other))
        return DensePoly(F, [F.sub(self[i], other[i]) for i in range(n)])

    def __neg__(self) -> "DensePoly":
        return DensePoly(self.field, [self.field.neg(c) for c in self.coeffs])

    def __mul__(self, other: "DensePoly") -> "DensePoly":
        return poly_mul(self, other)

    def scale(self, c: int) -> "DensePoly":
        F = self.field
        return DensePoly(F, [F.mul(c, a) for a in self.coeffs])

    def shift(self, k: int) -> "DensePoly":
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return DensePoly(self.field, (0,) * k + self.coeffs)

    def __call__(self, x: int) -> int:
        return poly_eval(self, x)

    def truncate(self, n: int) -> "DensePoly":
        """Drop all terms of degree >= n."""
        return DensePoly(self.field, self.coeffs[:n])


def poly_mul(a: DensePoly, b: DensePoly) -> DensePoly:
    F = a._same_field(b)
    if not a.coeffs or not b.coeffs:
        return DensePoly(F)
    if F.e == 1:
        p = F.p
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a.coeffs):
            if ai:
                for j, bj in enumerate(b.coeffs):
                    out[i + j] += ai * bj
        return DensePoly(F, [c % p for c in out])
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a.coeffs):
        if ai:
            for j, bj in enumerate(b.coeffs):
                if bj:
                    out[i + j] = F.add(out[i + j], F.mul(ai, bj))
    return DensePoly(F, out)


def poly_pow(a: DensePoly, n: int) -> DensePoly:
    if n < 0:
        raise ValueError("negative exponent")
    acc = DensePoly(a.field, [1])
    base = a
    while n:
        if n & 1:
            acc = poly_mul(acc, base)
        n >>= 1
        if n:
            base = poly_mul(base, base)
    return acc


def poly_eval(a: DensePoly, x: int) -> int:
    F = a.field
    acc = 0
    if F.e == 1:
        p = F.p
        for c in reversed(a.coeffs):
            acc = (acc * x + c) % p
        return acc
    for c in reversed(a.coeffs):
        acc = F.add(F.mul(acc, x), c)
    return acc


def poly_mod_xq_minus_x(a: DensePoly, q: int | None = None) -> DensePoly:
    """Reduce modulo x^q - x: exponents i >= q fold to 1 + (i - 1) mod (q - 1).

    The result has degree < q and the same values on F_q.
    """
    F = a.field
    if q is None:
        q = F.q
    if len(a) <= q:
        return a
    out = list(a.coeffs[:q])
    for i in range(q, len(a)):
        c = a.coeffs[i]
        if c:
            j = 1 + (i - 1) % (q - 1)
            out[j] = F.add(out[j], c)
    return DensePoly(F, out)
