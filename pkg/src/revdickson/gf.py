"""Exact arithmetic in GF(p^e).

Elements are plain Python integers. The element

    c_0 + c_1 t + ... + c_{e-1} t^{e-1}   (t a root of the field modulus)

is encoded as ``c_0 + c_1 p + ... + c_{e-1} p^(e-1)``. With this encoding
``range(q)`` enumerates the field in ascending base-p coefficient order, the
prime subfield is exactly ``{0, ..., p-1}``, and comparing two encodings is
comparing their coefficient vectors as base-p integers.

Fields are immutable once built. Use :func:`field_make` to get the canonical
(cached) field for a prime power.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "MAX_ORDER",
    "FieldError",
    "GF",
    "Embedding",
    "field_make",
    "quad_ext",
    "is_prime",
    "factorize",
    "is_irreducible",
    "smallest_irreducible",
    "parse_field",
]

MAX_ORDER = 1 << 16

# log/exp tables are built for extension fields up to this order
_TABLE_LIMIT = 1 << 17
# a full q x q addition table is built up to this order
_ADD_TABLE_LIMIT = 1024


class FieldError(ValueError):
    """Invalid field parameters or an operation outside the field."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorisation by trial division (n is at most ~2^32 here)."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


# -- polynomials over F_p as int lists, low-to-high --------------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim([c % p for c in out])


def _pmod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    a = [c % p for c in a]
    _trim(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], -1, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def _psub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim(out)


def _pgcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _ppow_x(k: int, m: Sequence[int], p: int) -> list[int]:
    """x^(p^k) mod m."""
    r = [0, 1]
    for _ in range(k):
        # r <- r^p mod m by square-and-multiply
        base, acc, n = r, [1], p
        while n:
            if n & 1:
                acc = _pmod(_pmul(acc, base, p), m, p)
            base = _pmod(_pmul(base, base, p), m, p)
            n >>= 1
        r = acc
    return r


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Rabin's test for a polynomial over F_p given low-to-high."""
    f = _trim([c % p for c in poly])
    d = len(f) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    x = [0, 1]
    if _psub(_ppow_x(d, f, p), x, p) != []:
        return False
    for r in factorize(d):
        g = _pgcd(f, _psub(_ppow_x(d // r, f, p), x, p), p)
        if len(g) > 1:
            return False
    return True


def smallest_irreducible(p: int, d: int) -> tuple[int, ...]:
    """The monic irreducible of degree d whose low-to-high coefficient vector,
    read as a base-p number (constant term least significant), is smallest."""
    for v in range(p**d):
        lower = [(v // p**i) % p for i in range(d)]
        cand = lower + [1]
        if is_irreducible(cand, p):
            return tuple(cand)
    raise FieldError(f"no irreducible polynomial of degree {d} over F_{p}")  # unreachable


class GF:
    """The finite field F_p[t]/(modulus) of order q = p^e."""

    def __init__(self, p: int, e: int = 1, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        if e < 1:
            raise FieldError(f"extension degree must be >= 1, got {e}")
        self.p = p
        self.e = e
        self.q = p**e
        if modulus is None:
            modulus = smallest_irreducible(p, e)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != e + 1 or modulus[-1] != 1:
            raise FieldError("modulus must be monic of degree e")
        if not is_irreducible(modulus, p):
            raise FieldError(f"modulus {modulus} is reducible over F_{p}")
        self.modulus = modulus
        self._pw = [p**i for i in range(e)]
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._addt: list[list[int]] | None = None
        self._nonresidue: int | None = None
        self._primitive: int | None = None
        if e > 1:
            if self.q <= _TABLE_LIMIT:
                self._build_tables()
            if self.q <= _ADD_TABLE_LIMIT:
                self._build_add_table()

    # -- identity -------------------------------------------------------------

    def __repr__(self) -> str:
        if self.e == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.e})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GF) and self.p == other.p and self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash((self.p, self.modulus))

    def __reduce__(self):
        return (GF, (self.p, self.e, self.modulus))

    @property
    def label(self) -> str:
        return str(self.p) if self.e == 1 else f"{self.p}^{self.e}"

    # -- encoding -------------------------------------------------------------

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Coefficient vector (length e, low-to-high) of an element."""
        p = self.p
        out = []
        for _ in range(self.e):
            a, r = divmod(a, p)
            out.append(r)
        return tuple(out)

    def from_coeffs(self, coeffs: Iterable[int]) -> int:
        c = [int(x) % self.p for x in coeffs]
        if len(c) > self.e:
            if any(c[self.e:]):
                raise FieldError(f"too many coefficients for {self!r}: {c}")
            c = c[: self.e]
        return sum(ci * w for ci, w in zip(c, self._pw))

    def scalar(self, n: int) -> int:
        """The integer n embedded in the prime subfield."""
        return n % self.p

    def elements(self) -> range:
        return range(self.q)

    def check(self, a: int) -> int:
        if not (0 <= a < self.q):
            raise FieldError(f"{a} is not an element of {self!r}")
        return a

    def in_prime_field(self, a: int) -> bool:
        return a < self.p

    # -- slow polynomial-basis arithmetic ---------------------------------------

    def _mul_poly(self, a: int, b: int) -> int:
        p = self.p
        prod_ = _pmul(self.coeffs(a), self.coeffs(b), p)
        return self.from_coeffs(_pmod(prod_, self.modulus, p) if len(prod_) > self.e else prod_)

    def _build_tables(self) -> None:
        g = self._find_primitive_slow()
        n = self.q - 1
        exp = [0] * (2 * n)
        log = [0] * self.q
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self._mul_poly(x, g)
        exp[n:] = exp[:n]
        self._exp, self._log = exp, log
        self._primitive = g

    def _build_add_table(self) -> None:
        q, p = self.q, self.p
        digits = np.array([self.coeffs(a) for a in range(q)], dtype=np.int64)
        weights = np.array(self._pw, dtype=np.int64)
        s = (digits[:, None, :] + digits[None, :, :]) % p
        self._addt = (s @ weights).tolist()

    def _find_primitive_slow(self) -> int:
        n = self.q - 1
        cofactors = [n // r for r in factorize(n)]
        for g in range(1, self.q):
            if all(self._pow_slow(g, c) != 1 for c in cofactors):
                return g
        raise FieldError("no primitive element")  # unreachable

    def _pow_slow(self, a: int, n: int) -> int:
        acc = 1
        while n:
            if n & 1:
                acc = self._mul_poly(acc, a)
            a = self._mul_poly(a, a)
            n >>= 1
        return acc

    # -- field operations -------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        if self._addt is not None:
            return self._addt[a][b]
        p = self.p
        out, w = 0, 1
        while a or b:
            a, ra = divmod(a, p)
            b, rb = divmod(b, p)
            out += ((ra + rb) % p) * w
            w *= p
        return out

    def neg(self, a: int) -> int:
        if self.e == 1:
            return -a % self.p
        p = self.p
        out, w = 0, 1
        while a:
            a, r = divmod(a, p)
            out += (-r % p) * w
            w *= p
        return out

    def sub(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a - b) % self.p
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.e == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._mul_poly(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"inverse of zero in {self!r}")
        if self.e == 1:
            return pow(a, -1, self.p)
        if self._exp is not None:
            return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]
        return self._pow_slow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        """a**n for n >= 0, by square-and-multiply (or logs when tabled)."""
        if n < 0:
            return self.pow(self.inv(a), -n)
        if n == 0:
            return 1
        if a == 0:
            return 0
        n %= self.q - 1
        if n == 0:
            n = self.q - 1
        if self.e == 1:
            return pow(a, n, self.p)
        if self._exp is not None:
            return self._exp[self._log[a] * n % (self.q - 1)]
        return self._pow_slow(a, n)

    def sum(self, items: Iterable[int]) -> int:
        if self.e == 1:
            return sum(items) % self.p
        acc = 0
        for x in items:
            acc = self.add(acc, x)
        return acc

    def primitive_element(self) -> int:
        """Smallest generator of the multiplicative group."""
        if self._primitive is None:
            if self.e == 1:
                n = self.p - 1
                cofactors = [n // r for r in factorize(n)] if n > 1 else []
                self._primitive = next(
                    g for g in range(1, self.p) if all(pow(g, c, self.p) != 1 for c in cofactors)
                )
            else:
                self._primitive = self._find_primitive_slow()
        return self._primitive

    # -- square roots -----------------------------------------------------------

    def is_square(self, a: int) -> bool:
        if a == 0 or self.p == 2:
            return True
        return self.pow(a, (self.q - 1) // 2) == 1

    def _quadratic_nonresidue(self) -> int:
        if self._nonresidue is None:
            self._nonresidue = next(z for z in range(2, self.q) if not self.is_square(z))
        return self._nonresidue

    def sqrt(self, a: int) -> int | None:
        """Square root of a, or None when a is a non-square.

        Of the two roots r and -r the one with the smaller encoding is
        returned.
        """
        if a == 0:
            return 0
        if self.p == 2:
            return self.pow(a, self.q // 2)
        if not self.is_square(a):
            return None
        # Tonelli-Shanks in the cyclic group of order q - 1
        s, t = 0, self.q - 1
        while t % 2 == 0:
            s, t = s + 1, t // 2
        z = self.pow(self._quadratic_nonresidue(), t)
        x = self.pow(a, (t + 1) // 2)
        b = self.pow(a, t)
        m = s
        while b != 1:
            i, bb = 0, b
            while bb != 1:
                bb = self.mul(bb, bb)
                i += 1
            c = z
            for _ in range(m - i - 1):
                c = self.mul(c, c)
            x = self.mul(x, c)
            z = self.mul(c, c)
            b = self.mul(b, z)
            m = i
        return min(x, self.neg(x))


class Embedding:
    """Field homomorphism from ``small`` into ``big`` (an extension of it).

    The generator of ``small`` is sent to the smallest-encoded root of
    ``small.modulus`` lying in ``big``.
    """

    def __init__(self, small: GF, big: GF):
        if small.p != big.p or big.e % small.e:
            raise FieldError(f"{small!r} does not embed in {big!r}")
        self.small = small
        self.big = big
        if small.e == 1:
            self.root = None
            self._image = list(range(small.p))
        else:
            self.root = self._find_root()
            powers = [1]
            for _ in range(small.e - 1):
                powers.append(big.mul(powers[-1], self.root))
            self._image = []
            for a in small.elements():
                acc = 0
                for c, w in zip(small.coeffs(a), powers):
                    if c:
                        acc = big.add(acc, big.mul(c, w))
                self._image.append(acc)
        self._preimage = {b: a for a, b in enumerate(self._image)}

    def _find_root(self) -> int:
        big, small = self.big, self.small
        g = big.primitive_element()
        h = big.pow(g, (big.q - 1) // (small.q - 1))
        roots = []
        x = 1
        for _ in range(small.q - 1):
            acc = 0
            for c in reversed(small.modulus):
                acc = big.add(big.mul(acc, x), c)
            if acc == 0:
                roots.append(x)
            x = big.mul(x, h)
        if len(roots) != small.e:
            raise FieldError("modulus does not split in the extension")  # unreachable
        return min(roots)

    def __call__(self, a: int) -> int:
        return self._image[a]

    def image(self) -> list[int]:
        return list(self._image)

    def contains(self, b: int) -> bool:
        return b in self._preimage

    def restrict(self, b: int) -> int:
        """Inverse of the embedding on its image."""
        try:
            return self._preimage[b]
        except KeyError:
            raise FieldError(f"{b} is not in the image of {self.small!r}") from None


@lru_cache(maxsize=None)
def field_make(p: int, e: int = 1) -> GF:
    """Canonical GF(p^e) with the smallest monic irreducible modulus."""
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if e < 1 or p**e > MAX_ORDER:
        raise FieldError(f"p^e = {p}^{e} outside supported range 2..{MAX_ORDER}")
    return GF(p, e)


@lru_cache(maxsize=None)
def quad_ext(field: GF) -> tuple[GF, Embedding]:
    """GF(q^2) with the canonical modulus of degree 2e, plus the embedding of ``field``."""
    big = GF(field.p, 2 * field.e)
    return big, Embedding(field, big)


def parse_field(text: str) -> GF:
    """Parse ``"p"``, ``"p^e"`` or a prime power ``"q"`` into a field."""
    text = text.strip()
    try:
        if "^" in text:
            ps, es = text.split("^", 1)
            return field_make(int(ps), int(es))
        q = int(text)
    except ValueError:
        raise FieldError(f"cannot parse field {text!r}") from None
    if q < 2:
        raise FieldError(f"cannot parse field {text!r}")
    fac = factorize(q)
    if len(fac) != 1:
        raise FieldError(f"{q} is not a prime power")
    (p, e), = fac.items()
    return field_make(p, e)
