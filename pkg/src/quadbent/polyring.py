"""Dense univariate polynomials over GF(2^e), with gcd and the binary
cyclotomic polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .gfcore import GF2, BinaryField


@dataclass(frozen=True)
class Poly:
    """Polynomial with ``coeffs[i]`` the coefficient of x^i.

    Trailing zeros are trimmed on construction, so the zero polynomial has
    ``coeffs == ()`` and ``degree is None``.
    """

    coeffs: tuple[int, ...]
    field: BinaryField = GF2

    def __post_init__(self):
        c = tuple(self.coeffs)
        if any(a not in self.field for a in c):
            raise ValueError(f"coefficient outside {self.field}: {c}")
        end = len(c)
        while end and not c[end - 1]:
            end -= 1
        object.__setattr__(self, "coeffs", c[:end])

    @classmethod
    def zero(cls, field: BinaryField = GF2) -> Poly:
        return cls((), field)

    @classmethod
    def one(cls, field: BinaryField = GF2) -> Poly:
        return cls((1,), field)

    @classmethod
    def monomial(cls, k: int, c: int = 1, field: BinaryField = GF2) -> Poly:
        return cls((0,) * k + (c,), field)

    @classmethod
    def x_pow_plus_1(cls, k: int, field: BinaryField = GF2) -> Poly:
        """x^k + 1."""
        if k == 0:
            return cls.zero(field)
        return cls((1,) + (0,) * (k - 1) + (1,), field)

    @classmethod
    def from_bitmask(cls, bits: int, field: BinaryField = GF2) -> Poly:
        """A GF(2) polynomial given as a bitmask, lifted into ``field``."""
        return cls(tuple(bits >> i & 1 for i in range(bits.bit_length())), field)

    @classmethod
    def parse(cls, text: str, field: BinaryField = GF2) -> Poly:
        text = text.strip()
        if not text:
            return cls.zero(field)
        return cls(tuple(int(t) for t in text.split(",")), field)

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __str__(self):
        return ",".join(str(c) for c in self.coeffs) if self.coeffs else "0"

    def _check(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        if other.field != self.field:
            raise ValueError(f"field mismatch: {self.field} vs {other.field}")
        return other

    def __add__(self, other: Poly) -> Poly:
        if self._check(other) is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] ^= c
        return Poly(tuple(out), self.field)

    __sub__ = __add__

    def __mul__(self, other: Poly) -> Poly:
        if self._check(other) is NotImplemented:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly.zero(self.field)
        mul = self.field.mul
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] ^= mul(a, b)
        return Poly(tuple(out), self.field)

    def scale(self, c: int) -> Poly:
        mul = self.field.mul
        return Poly(tuple(mul(c, a) for a in self.coeffs), self.field)

    def monic(self) -> Poly:
        if not self.coeffs:
            raise ZeroDivisionError("zero polynomial has no monic associate")
        if self.lead == 1:
            return self
        return self.scale(self.field.inv(self.lead))

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        if self._check(other) is NotImplemented:
            return NotImplemented
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        inv_lead = f.inv(other.lead)
        quot = [0] * max(len(rem) - db, 0)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if not c:
                continue
            q = f.mul(c, inv_lead)
            quot[k - db] = q
            shift = k - db
            for j, b in enumerate(other.coeffs):
                if b:
                    rem[shift + j] ^= f.mul(q, b)
        return Poly(tuple(quot), f), Poly(tuple(rem[:db]), f)

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = self.field.mul(acc, x) ^ c
        return acc


def _gcd_gf2(a: Poly, b: Poly) -> Poly:
    # GF(2) fast path: pack into bitmask ints
    ia = sum(c << i for i, c in enumerate(a.coeffs))
    ib = sum(c << i for i, c in enumerate(b.coeffs))
    while ib:
        db = ib.bit_length()
        while ia.bit_length() >= db:
            ia ^= ib << (ia.bit_length() - db)
        ia, ib = ib, ia
    return Poly.from_bitmask(ia, a.field)


def _gcd_tables(a: Poly, b: Poly) -> Poly:
    # Euclid on raw coefficient lists in the log domain
    field = a.field
    exp, log = field._scalar_tables
    n1 = field.order - 1
    x, y = list(a.coeffs), list(b.coeffs)
    while y:
        ylog = [log[c] if c else -1 for c in y]
        inv_lead = n1 - ylog[-1]
        dy = len(y) - 1
        for k in range(len(x) - 1, dy - 1, -1):
            c = x[k]
            if c:
                q = log[c] + inv_lead
                s = k - dy
                for j, lj in enumerate(ylog):
                    if lj >= 0:
                        x[s + j] ^= exp[(q + lj) % n1]
        del x[dy:]
        while x and not x[-1]:
            x.pop()
        x, y = y, x
    return Poly(tuple(x), field).monic()


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by Euclid's algorithm; gcd(0, 0) raises ValueError."""
    if a.field != b.field:
        raise ValueError(f"field mismatch: {a.field} vs {b.field}")
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if a.field.degree == 1:
        return _gcd_gf2(a, b)
    if a.field.degree <= 16:
        return _gcd_tables(a, b)
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def mulmod(a: Poly, b: Poly, modulus: Poly) -> Poly:
    """a*b mod modulus."""
    if modulus.is_zero() or modulus.degree < 1:
        raise ValueError("modulus must have degree >= 1")
    return (a * b) % modulus


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def _cyclotomic_bits(d: int) -> int:
    # Q_d over GF(2) as a bitmask: (x^d + 1) divided by Q_d' for proper divisors d'
    num = (1 << d) | 1
    for dd in divisors(d)[:-1]:
        num = _gf2_exact_div(num, _cyclotomic_bits(dd))
    return num


def _gf2_exact_div(a: int, b: int) -> int:
    q = 0
    db = b.bit_length()
    while a.bit_length() >= db:
        s = a.bit_length() - db
        q |= 1 << s
        a ^= b << s
    if a:
        raise ArithmeticError("inexact division")
    return q


def cyclotomic(d: int, field: BinaryField = GF2) -> Poly:
    """The cyclotomic polynomial Q_d for odd d (coefficients 0/1 lifted to ``field``)."""
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    if d % 2 == 0:
        raise ValueError(f"even cyclotomic index {d} is not supported over GF(2)")
    return Poly.from_bitmask(_cyclotomic_bits(d), field)


def factor_xN_plus_1(N: int, field: BinaryField = GF2) -> list[tuple[int, Poly]]:
    """x^N + 1 = prod over d | N of Q_d, for odd N."""
    if N < 1 or N % 2 == 0:
        raise ValueError(f"N must be odd and positive, got {N}")
    return [(d, cyclotomic(d, field)) for d in divisors(N)]
