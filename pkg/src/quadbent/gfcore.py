"""Binary extension fields GF(2^k) in polynomial basis, plus the pair of
fields GF(2^e) inside GF(2^n) that the quadratic forms live on.

Elements are plain Python ints: bit j is the coefficient of alpha^j, where
alpha is a root of the field's defining polynomial.  Addition is XOR.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

# Lexicographically least irreducible polynomial of each degree over GF(2),
# as bitmasks (bit j = coefficient of x^j).  Degree 3 -> x^3+x+1 -> 0b1011.
# Degrees above the table are searched on demand with the same rule.
IRREDUCIBLE_POLYS = {
    1: 0x2, 2: 0x7, 3: 0xB, 4: 0x13, 5: 0x25, 6: 0x43, 7: 0x83, 8: 0x11B,
    9: 0x203, 10: 0x409, 11: 0x805, 12: 0x1009, 13: 0x201B, 14: 0x4021,
    15: 0x8003, 16: 0x1002B, 17: 0x20009, 18: 0x40009, 19: 0x80027,
    20: 0x100009, 21: 0x200005, 22: 0x400003, 23: 0x800021, 24: 0x100001B,
    25: 0x2000009, 26: 0x400001B, 27: 0x8000027, 28: 0x10000003,
    29: 0x20000005, 30: 0x40000003, 31: 0x80000009, 32: 0x10000008D,
    33: 0x20000004B, 34: 0x40000001B, 35: 0x800000005, 36: 0x1000000035,
    37: 0x200000003F, 38: 0x4000000063, 39: 0x8000000011, 40: 0x10000000039,
    41: 0x20000000009, 42: 0x40000000027, 43: 0x80000000059,
    44: 0x100000000021, 45: 0x20000000001B, 46: 0x400000000003,
    47: 0x800000000021, 48: 0x100000000002D, 49: 0x2000000000071,
    50: 0x400000000001D, 51: 0x800000000004B, 52: 0x10000000000009,
    53: 0x20000000000047, 54: 0x4000000000007D, 55: 0x80000000000047,
    56: 0x100000000000095, 57: 0x200000000000011, 58: 0x400000000000063,
    59: 0x80000000000007B, 60: 0x1000000000000003, 61: 0x2000000000000027,
    62: 0x4000000000000069, 63: 0x8000000000000003, 64: 0x1000000000000001B,
}

MAX_SMALL_DEGREE = 16
# Scalar log/exp tables are built up to this degree; numpy tables up to the next.
_SCALAR_TABLE_DEGREE = 16
_ARRAY_TABLE_DEGREE = 22


# -- GF(2)[x] on bitmask integers -------------------------------------------

def _deg(a: int) -> int:
    return a.bit_length() - 1


def gf2_polymod(a: int, f: int) -> int:
    df = _deg(f)
    while a and _deg(a) >= df:
        a ^= f << (_deg(a) - df)
    return a


def gf2_polymulmod(a: int, b: int, f: int) -> int:
    df = _deg(f)
    a = gf2_polymod(a, f)
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a >> df & 1:
            a ^= f
    return r


def gf2_polygcd(a: int, b: int) -> int:
    while b:
        a, b = b, gf2_polymod(a, b)
    return a


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n by trial division."""
    out = []
    q = 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1 if q == 2 else 2
    if n > 1:
        out.append(n)
    return out


def is_irreducible(f: int) -> bool:
    """Rabin's irreducibility test for a bitmask polynomial over GF(2)."""
    d = _deg(f)
    if d < 1:
        return False

    def x_pow_2k(k):
        x = 2
        for _ in range(k):
            x = gf2_polymulmod(x, x, f)
        return x

    x = gf2_polymod(2, f)
    if x_pow_2k(d) != x:
        return False
    return all(gf2_polygcd(f, x_pow_2k(d // q) ^ x) == 1 for q in prime_factors(d))


@lru_cache(maxsize=None)
def least_irreducible(degree: int) -> int:
    if degree < 1:
        raise ValueError(f"degree must be >= 1, got {degree}")
    if degree in IRREDUCIBLE_POLYS:
        return IRREDUCIBLE_POLYS[degree]
    f = 1 << degree
    while not is_irreducible(f):
        f += 1
    return f


# -- a single field ------------------------------------------------------------

@dataclass(frozen=True)
class BinaryField:
    """GF(2^degree) = GF(2)[x] / (modulus)."""

    degree: int
    modulus: int

    def __post_init__(self):
        if _deg(self.modulus) != self.degree:
            raise ValueError(f"modulus {self.modulus:#x} does not have degree {self.degree}")
        if not is_irreducible(self.modulus):
            raise ValueError(f"modulus {self.modulus:#x} is reducible")

    @property
    def order(self) -> int:
        return 1 << self.degree

    def __contains__(self, a) -> bool:
        return isinstance(a, int) and 0 <= a < self.order

    def __repr__(self):
        return f"GF(2^{self.degree})[{self.modulus:#x}]"

    # scalar arithmetic

    def mul(self, a: int, b: int) -> int:
        if not a or not b:
            return 0
        if self.degree <= _SCALAR_TABLE_DEGREE:
            exp, log = self._scalar_tables
            return exp[log[a] + log[b]]
        return self._clmul(a, b)

    def _clmul(self, a: int, b: int) -> int:
        d, f = self.degree, self.modulus
        r = 0
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if a >> d & 1:
                a ^= f
        return r

    def square(self, a: int) -> int:
        return self.mul(a, a)

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            return self.pow(self.inv(a), -k)
        r = 1
        while k:
            if k & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            k >>= 1
        return r

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        if self.degree <= _SCALAR_TABLE_DEGREE:
            exp, log = self._scalar_tables
            return exp[(self.order - 1 - log[a]) % (self.order - 1)]
        return self.pow(a, self.order - 2)

    def frobenius(self, a: int, j: int) -> int:
        """a^(2^j); j is taken modulo the degree."""
        for _ in range(j % self.degree):
            a = self.mul(a, a)
        return a

    def trace(self, a: int, d: int = 1) -> int:
        """Tr^k_d(a) = a + a^(2^d) + ... for k = degree; requires d | k."""
        if d < 1 or self.degree % d:
            raise ValueError(f"{d} does not divide {self.degree}")
        acc = 0
        for _ in range(self.degree // d):
            acc ^= a
            a = self.frobenius(a, d)
        return acc

    def subfield_trace(self, a: int, source: int, target: int = 1) -> int:
        """Tr^source_target(a) for a lying in the subfield GF(2^source)."""
        if self.degree % source or source % target:
            raise ValueError(f"need {target} | {source} | {self.degree}")
        acc = 0
        for _ in range(source // target):
            acc ^= a
            a = self.frobenius(a, target)
        return acc

    @cached_property
    def trace_mask(self) -> int:
        """Bitmask t with Tr^k_1(a) = parity(a & t)."""
        return sum(self.trace(1 << j) << j for j in range(self.degree))

    def abs_trace(self, a: int) -> int:
        return (a & self.trace_mask).bit_count() & 1

    def order_of(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        t = self.order - 1
        for q in prime_factors(t):
            while t % q == 0 and self.pow(a, t // q) == 1:
                t //= q
        return t

    @cached_property
    def generator(self) -> int:
        """Smallest element generating the multiplicative group."""
        if self.degree == 1:
            return 1
        n1 = self.order - 1
        qs = prime_factors(n1)
        g = 2
        while any(self._pow_loop(g, n1 // q) == 1 for q in qs):
            g += 1
        return g

    def _pow_loop(self, a, k):
        r = 1
        while k:
            if k & 1:
                r = self._clmul(r, a)
            a = self._clmul(a, a)
            k >>= 1
        return r

    @cached_property
    def _scalar_tables(self):
        # exp doubled in length so exp[log a + log b] needs no reduction
        n1 = self.order - 1
        exp = [0] * (2 * n1 + 1)
        log = [0] * self.order
        x = 1
        g = self.generator
        for i in range(n1):
            exp[i] = x
            log[x] = i
            x = self._clmul(x, g)
        for i in range(n1, 2 * n1 + 1):
            exp[i] = exp[i - n1]
        return exp, log

    # vectorized arithmetic over numpy int64 arrays

    @cached_property
    def array_tables(self):
        """(exp, log) numpy tables, built by doubling with vectorized multiply."""
        if self.degree > _ARRAY_TABLE_DEGREE:
            raise ValueError(f"no array tables above degree {_ARRAY_TABLE_DEGREE}")
        n1 = self.order - 1
        exp = np.empty(n1, dtype=np.int64)
        exp[0] = 1
        filled = 1
        g = self.generator
        while filled < n1:
            chunk = min(filled, n1 - filled)
            exp[filled:filled + chunk] = self.mul_array_const(exp[:chunk], self.pow(g, filled))
            filled += chunk
        log = np.zeros(self.order, dtype=np.int64)
        log[exp] = np.arange(n1, dtype=np.int64)
        return exp, log

    def mul_array_const(self, a: np.ndarray, c: int) -> np.ndarray:
        """Elementwise a*c by shift-and-add; does not touch the tables."""
        d, f = self.degree, self.modulus
        a = np.asarray(a, dtype=np.int64).copy()
        r = np.zeros_like(a)
        while c:
            if c & 1:
                r ^= a
            c >>= 1
            a <<= 1
            a ^= np.where((a >> d) & 1, f, 0)
        return r

    def mul_array(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.degree <= _ARRAY_TABLE_DEGREE:
            exp, log = self.array_tables
            out = exp[(log[a] + log[b]) % (self.order - 1)]
            return np.where((a == 0) | (b == 0), 0, out)
        d, f = self.degree, self.modulus
        a = a.copy()
        r = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        for bit in range(d):
            r ^= np.where((b >> bit) & 1, a, 0)
            a <<= 1
            a ^= np.where((a >> d) & 1, f, 0)
        return r

    def pow_array(self, a: np.ndarray, k: int) -> np.ndarray:
        """Elementwise a^k for k >= 1."""
        a = np.asarray(a, dtype=np.int64)
        if self.degree <= _ARRAY_TABLE_DEGREE:
            exp, log = self.array_tables
            n1 = self.order - 1
            out = exp[(log[a] * (k % n1)) % n1]
            return np.where(a == 0, 0, out)
        r = None
        while k:
            if k & 1:
                r = a if r is None else self.mul_array(r, a)
            a = self.mul_array(a, a)
            k >>= 1
        return r

    def abs_trace_array(self, a: np.ndarray) -> np.ndarray:
        return parity_array(np.asarray(a, dtype=np.int64) & self.trace_mask)


def parity_array(a: np.ndarray) -> np.ndarray:
    a = a.copy()
    shift = 32
    while shift:
        a ^= a >> shift
        shift >>= 1
    return a & 1


@lru_cache(maxsize=None)
def standard_field(degree: int) -> BinaryField:
    """GF(2^degree) with the built-in defining polynomial."""
    return BinaryField(degree, least_irreducible(degree))


GF2 = standard_field(1)


# -- the pair GF(2^e) <= GF(2^n) ---------------------------------------------

@dataclass(frozen=True)
class FieldContext:
    """GF(2^e) embedded in GF(2^n), n = e*m.

    ``embed_root`` is the root of the small field's defining polynomial in
    GF(2^n) with the smallest integer encoding; it fixes the embedding.
    """

    e: int
    m: int
    small: BinaryField
    big: BinaryField
    embed_root: int

    @property
    def n(self) -> int:
        return self.big.degree

    @property
    def def_poly_e(self) -> int:
        return self.small.modulus

    @property
    def def_poly_n(self) -> int:
        return self.big.modulus

    @cached_property
    def _root_powers(self) -> tuple[int, ...]:
        out = [1]
        for _ in range(self.e - 1):
            out.append(self.big.mul(out[-1], self.embed_root))
        return tuple(out)

    def embed(self, a: int) -> int:
        if a not in self.small:
            raise ValueError(f"{a} is not an element of GF(2^{self.e})")
        acc = 0
        for j, rj in enumerate(self._root_powers):
            if a >> j & 1:
                acc ^= rj
        return acc

    @cached_property
    def _unembed_table(self) -> dict[int, int]:
        return {self.embed(a): a for a in range(self.small.order)}

    def unembed(self, x: int) -> int:
        """Inverse of embed on the embedded copy of GF(2^e)."""
        try:
            return self._unembed_table[x]
        except KeyError:
            raise ValueError(f"{x} does not lie in the embedded GF(2^{self.e})") from None

    def trace(self, x: int, d: int) -> int:
        """Tr^n_d(x), as an element of GF(2^n) lying in the subfield GF(2^d)."""
        return self.big.trace(x, d)

    def frobenius(self, x: int, j: int) -> int:
        return self.big.frobenius(x, j)


def _poly_eval(field: BinaryField, poly: int, x: int) -> int:
    acc = 0
    for j in range(_deg(poly), -1, -1):
        acc = field.mul(acc, x) ^ (poly >> j & 1)
    return acc


def _find_embed_root(small: BinaryField, big: BinaryField) -> int:
    e, f = small.degree, small.modulus
    if _poly_eval(big, f, 0) == 0:
        return 0
    # beta generates the copy of GF(2^e)^* inside GF(2^n)
    cofactor = (big.order - 1) // (small.order - 1)
    qs = prime_factors(small.order - 1) if e > 1 else []
    x = 2
    while True:
        beta = big.pow(x, cofactor)
        if beta and all(big.pow(beta, (small.order - 1) // q) != 1 for q in qs):
            break
        x += 1
    gamma = 1
    for _ in range(small.order - 1):
        if _poly_eval(big, f, gamma) == 0:
            conjugates = [big.frobenius(gamma, j) for j in range(e)]
            return min(conjugates)
        gamma = big.mul(gamma, beta)
    raise AssertionError("defining polynomial has no root in the big field")


@lru_cache(maxsize=None)
def make_context(e: int, m: int) -> FieldContext:
    """Build the standard context for GF(2^e) <= GF(2^(e*m))."""
    if not 1 <= e <= MAX_SMALL_DEGREE:
        raise ValueError(f"e must lie in 1..{MAX_SMALL_DEGREE}, got {e}")
    if m < 2 or m % 2:
        raise ValueError(f"m must be even and >= 2, got {m}")
    small = standard_field(e)
    big = standard_field(e * m)
    root = _find_embed_root(small, big)
    if _poly_eval(big, small.modulus, root) != 0:
        raise AssertionError("embedding root check failed")
    return FieldContext(e=e, m=m, small=small, big=big, embed_root=root)
