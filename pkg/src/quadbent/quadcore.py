"""Quadratic Boolean functions on GF(2^n) and three independent bentness tests.

* gcd:      gcd(c_f(x), x^m + 1) == 1 over GF(2^e)
* rank:     the bilinear form f(x+y)+f(x)+f(y) has trivial radical
* spectral: every Walsh coefficient is +-2^(n/2)

The rank test uses scalar shift-and-add field arithmetic; the spectral test
fills the truth table with log/exp table arithmetic, so the two only share
the definition of f.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Union

import numpy as np

from .gfcore import _ARRAY_TABLE_DEGREE, BinaryField, FieldContext, make_context
from .polyring import Poly, poly_gcd

SPECTRAL_CAP = 30
DEFAULT_SPECTRAL_CAP = 24


@dataclass(frozen=True)
class QuadForm:
    """f(x) = sum_{i<m/2} Tr^n_1(c_i x^(1+2^(e i))) + Tr^(n/2)_1(c_{m/2} x^(1+2^(n/2))).

    ``coeffs`` holds (c_1, ..., c_{m/2}) as GF(2^e) bitmasks.
    """

    ctx: FieldContext
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if len(self.coeffs) != self.ctx.m // 2:
            raise ValueError(f"expected {self.ctx.m // 2} coefficients, got {len(self.coeffs)}")
        for c in self.coeffs:
            if c not in self.ctx.small:
                raise ValueError(f"coefficient {c} is not in GF(2^{self.ctx.e})")

    @classmethod
    def make(cls, e: int, m: int, coeffs) -> QuadForm:
        return cls(make_context(e, m), tuple(coeffs))

    @classmethod
    def from_index(cls, ctx: FieldContext, index: int) -> QuadForm:
        """Coefficient vector packed into an int, c_1 in the lowest e bits."""
        e, mask = ctx.e, (1 << ctx.e) - 1
        return cls(ctx, tuple(index >> (e * i) & mask for i in range(ctx.m // 2)))

    @property
    def e(self) -> int:
        return self.ctx.e

    @property
    def m(self) -> int:
        return self.ctx.m

    @property
    def n(self) -> int:
        return self.ctx.n

    @property
    def field(self) -> BinaryField:
        return self.ctx.big

    def to_dict(self) -> dict:
        return {"e": self.ctx.e, "m": self.ctx.m, "coeffs": list(self.coeffs)}

    @classmethod
    def from_dict(cls, d: dict) -> QuadForm:
        return cls.make(int(d["e"]), int(d["m"]), d["coeffs"])

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, s: str) -> QuadForm:
        return cls.from_dict(json.loads(s))

    def terms(self) -> list[tuple[int, int, bool]]:
        """(GF(2^n) coefficient, Frobenius shift, is_half_term) per nonzero term."""
        ctx = self.ctx
        out = []
        for i, c in enumerate(self.coeffs[:-1], start=1):
            if c:
                out.append((ctx.embed(c), ctx.e * i, False))
        if self.coeffs[-1]:
            out.append((ctx.embed(self.coeffs[-1]), ctx.n // 2, True))
        return out


@dataclass(frozen=True)
class GeneralQuadForm:
    """Any quadratic form on GF(2^n).

    Even n: sum_{i<n/2} Tr^n_1(c_i x^(1+2^i)) + Tr^(n/2)_1(c_{n/2} x^(1+2^(n/2))),
    with c_{n/2} in GF(2^(n/2)).  Odd n: sum_{i<=(n-1)/2} Tr^n_1(c_i x^(1+2^i)).
    """

    field: BinaryField
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        n = self.field.degree
        if len(self.coeffs) != n // 2 + 1:
            raise ValueError(f"expected {n // 2 + 1} coefficients, got {len(self.coeffs)}")
        if any(c not in self.field for c in self.coeffs):
            raise ValueError("coefficient outside the field")
        if n % 2 == 0:
            last = self.coeffs[-1]
            if self.field.frobenius(last, n // 2) != last:
                raise ValueError("c_{n/2} must lie in GF(2^(n/2))")

    @property
    def n(self) -> int:
        return self.field.degree

    @classmethod
    def random(cls, field: BinaryField, rng: np.random.Generator) -> GeneralQuadForm:
        n = field.degree
        coeffs = [int(rng.integers(0, field.order)) for _ in range(n // 2 + 1)]
        if n % 2 == 0:
            # project the last coefficient into the half field via its relative trace
            coeffs[-1] = field.subfield_trace(coeffs[-1], n, n // 2)
        return cls(field, tuple(coeffs))

    def terms(self) -> list[tuple[int, int, bool]]:
        n = self.n
        out = []
        for i, c in enumerate(self.coeffs):
            if c:
                out.append((c, i, n % 2 == 0 and i == n // 2))
        return out


AnyQuadForm = Union[QuadForm, GeneralQuadForm]


class GcdVerdict(NamedTuple):
    bent: bool
    gcd: Poly


@dataclass(frozen=True)
class SpectrumSummary:
    values: dict[int, int]
    k_f: int
    n: int

    @property
    def is_bent(self) -> bool:
        h = 1 << (self.n // 2)
        return self.n % 2 == 0 and set(self.values) <= {h, -h}

    def to_dict(self) -> dict:
        return {"n": self.n, "k_f": self.k_f,
                "values": {str(v): c for v, c in sorted(self.values.items())}}

    @classmethod
    def from_dict(cls, d: dict) -> SpectrumSummary:
        return cls({int(v): int(c) for v, c in d["values"].items()}, int(d["k_f"]), int(d["n"]))


# -- evaluation ---------------------------------------------------------------

def evaluate(f: AnyQuadForm, x: int) -> int:
    F = f.field
    if x not in F:
        raise ValueError(f"{x} is not an element of {F}")
    acc = 0
    bit = 0
    for c, shift, half in f.terms():
        y = F.mul(c, F.mul(x, F.frobenius(x, shift)))
        if half:
            bit ^= F.subfield_trace(y, F.degree // 2)
        else:
            acc ^= y
    return bit ^ F.abs_trace(acc)


def truth_table(f: AnyQuadForm) -> np.ndarray:
    """f on every x in GF(2^n), indexed by the integer encoding of x."""
    F = f.field
    n = F.degree
    if n > SPECTRAL_CAP:
        raise ValueError(f"n={n} exceeds the spectral cap {SPECTRAL_CAP}")
    xs = np.arange(F.order, dtype=np.int64)
    acc = np.zeros_like(xs)
    out = np.zeros_like(xs)
    if n <= _ARRAY_TABLE_DEGREE:
        return _truth_table_logs(f, xs)
    for c, shift, half in f.terms():
        y = F.mul_array(np.full_like(xs, c), F.pow_array(xs, 1 + (1 << shift)))
        if half:
            # Tr^(n/2)_1 as a Frobenius sum; lands in {0, 1}
            t = np.zeros_like(xs)
            for j in range(n // 2):
                t ^= F.pow_array(y, 1 << j) if j else y
            if np.any(t >> 1):
                raise AssertionError("half-trace left GF(2)")
            out ^= t
        else:
            acc ^= y
    return out ^ F.abs_trace_array(acc)


def _truth_table_logs(f: AnyQuadForm, xs: np.ndarray) -> np.ndarray:
    # every term c x^(1+2^s) is a single exp lookup in the log domain
    F = f.field
    n = F.degree
    exp, log = F.array_tables
    n1 = F.order - 1
    nz = xs != 0
    lx = log[xs]
    acc = np.zeros_like(xs)
    out = np.zeros_like(xs)
    for c, shift, half in f.terms():
        ly = (log[c] + lx * ((1 + (1 << shift)) % n1)) % n1
        if half:
            t = np.zeros_like(xs)
            for j in range(n // 2):
                t ^= exp[(ly * ((1 << j) % n1)) % n1]
            t = np.where(nz, t, 0)
            if np.any(t >> 1):
                raise AssertionError("half-trace left GF(2)")
            out ^= t
        else:
            acc ^= np.where(nz, exp[ly], 0)
    return out ^ F.abs_trace_array(acc)


def fwht(a: np.ndarray) -> np.ndarray:
    """Unnormalized Walsh-Hadamard transform of a length-2^k vector."""
    a = np.array(a, dtype=np.int64)
    size = a.shape[0]
    h = 1
    while h < size:
        a = a.reshape(-1, 2, h)
        a = np.stack((a[:, 0] + a[:, 1], a[:, 0] - a[:, 1]), axis=1).reshape(-1)
        h *= 2
    return a


def walsh_spectrum(f: AnyQuadForm, cap: int = SPECTRAL_CAP) -> SpectrumSummary:
    """Value multiset of the Walsh transform, O(n 2^n).

    Uses the standard dot product pairing, an invertible reindexing of
    Tr(lambda x), so only the multiset is meaningful.
    """
    if f.n > min(cap, SPECTRAL_CAP):
        raise ValueError(f"n={f.n} exceeds the spectral cap {min(cap, SPECTRAL_CAP)}")
    spec = fwht(1 - 2 * truth_table(f))
    vals, counts = np.unique(spec, return_counts=True)
    values = {int(v): int(c) for v, c in zip(vals, counts)}
    return SpectrumSummary(values, kernel_dimension(f), f.n)


def vd_distribution(n: int, k_f: int) -> dict[int, int]:
    """Walsh value multiplicities of a quadratic form with radical dimension k_f."""
    r = n - k_f
    if r % 2:
        raise ValueError(f"n - k_f = {r} must be even")
    amp = 1 << ((n + k_f) // 2)
    half = 1 << (r // 2 - 1) if r else 0
    base = 1 << (r - 1) if r else 0
    if r == 0:
        # f is linear on GF(2^n) modulo a constant: one peak of full height
        dist = {0: (1 << n) - 1, amp: 1}
    else:
        dist = {0: (1 << n) - (1 << r), amp: base + half, -amp: base - half}
    return {v: c for v, c in dist.items() if c}


def check_vd_distribution(f: AnyQuadForm) -> bool:
    s = walsh_spectrum(f)
    return s.values == vd_distribution(f.n, s.k_f)


# -- rank oracle --------------------------------------------------------------

def bilinear_rows(f: AnyQuadForm) -> list[int]:
    """Rows of B[i][j] = f(b_i+b_j)+f(b_i)+f(b_j) as bitmasks over the polynomial basis."""
    n = f.n
    fb = [evaluate(f, 1 << i) for i in range(n)]
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if evaluate(f, (1 << i) | (1 << j)) ^ fb[i] ^ fb[j]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return rows


def gf2_rank(rows) -> int:
    basis = []
    for r in rows:
        for b in basis:
            r = min(r, r ^ b)
        if r:
            basis.append(r)
    return len(basis)


@lru_cache(maxsize=None)
def _unit_rows(ctx: FieldContext, index: int, bit: int) -> tuple[int, ...]:
    coeffs = [0] * (ctx.m // 2)
    coeffs[index] = 1 << bit
    return tuple(bilinear_rows(QuadForm(ctx, tuple(coeffs))))


def quadform_rows(f: QuadForm) -> list[int]:
    """Same matrix as bilinear_rows, assembled from cached single-bit forms.

    Exact because f is GF(2)-linear in the bits of its coefficients.
    """
    rows = [0] * f.n
    for index, c in enumerate(f.coeffs):
        bit = 0
        while c:
            if c & 1:
                for i, r in enumerate(_unit_rows(f.ctx, index, bit)):
                    rows[i] ^= r
            c >>= 1
            bit += 1
    return rows


def kernel_dimension(f: AnyQuadForm) -> int:
    """k_f = n - rank of the bilinear form."""
    rows = quadform_rows(f) if isinstance(f, QuadForm) else bilinear_rows(f)
    return f.n - gf2_rank(rows)


def is_bent_rank(f: AnyQuadForm) -> bool:
    return f.n % 2 == 0 and kernel_dimension(f) == 0


def is_bent_spectral(f: AnyQuadForm, cap: int = SPECTRAL_CAP) -> bool:
    if f.n > min(cap, SPECTRAL_CAP):
        raise ValueError(f"n={f.n} exceeds the spectral cap {min(cap, SPECTRAL_CAP)}")
    if f.n % 2:
        return False
    spec = fwht(1 - 2 * truth_table(f))
    return bool(np.all(np.abs(spec) == 1 << (f.n // 2)))


# -- gcd oracle ---------------------------------------------------------------

def build_cf(f: QuadForm) -> Poly:
    """c_f(x) = sum_{i<m/2} c_i (x^i + x^(m-i)) + c_{m/2} x^(m/2) over GF(2^e)."""
    m = f.m
    out = [0] * m
    for i, c in enumerate(f.coeffs[:-1], start=1):
        out[i] ^= c
        out[m - i] ^= c
    out[m // 2] ^= f.coeffs[-1]
    return Poly(tuple(out), f.ctx.small)


def is_bent_gcd(f: QuadForm) -> GcdVerdict:
    cf = build_cf(f)
    modulus = Poly.x_pow_plus_1(f.m, f.ctx.small)
    g = poly_gcd(cf, modulus)
    return GcdVerdict(g.is_one(), g)
