"""Parameter classes m = 2^v p^r and m = 2^v p q, and the coefficient-sum
bentness criteria valid on them.

All sums here are XORs of GF(2^e) bitmasks; no field multiplication is
needed, which keeps these checks independent of the polynomial gcd path.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import gcd

from .quadcore import QuadForm

PR = "PR"
PQ = "PQ"
UNSUPPORTED = "UNSUPPORTED"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    q = 3
    while q * q <= n:
        if n % q == 0:
            return False
        q += 2
    return True


def factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    q = 2
    while q * q <= n:
        while n % q == 0:
            out[q] = out.get(q, 0) + 1
            n //= q
        q += 1 if q == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def mult_order(base: int, modulus: int) -> int:
    """Least t >= 1 with base^t = 1 (mod modulus)."""
    if modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")
    if gcd(base, modulus) != 1:
        raise ValueError(f"{base} is not invertible modulo {modulus}")
    t, x = 1, base % modulus
    while x != 1:
        x = x * base % modulus
        t += 1
    return t


@dataclass(frozen=True)
class ParamClass:
    kind: str
    e: int
    m: int
    v: int = 0
    p: int | None = None
    q: int | None = None
    r: int | None = None
    ord_data: dict = field(default_factory=dict, compare=False)
    failed_condition: str | None = None

    def to_dict(self) -> dict:
        return {"kind": self.kind, "e": self.e, "m": self.m, "v": self.v, "p": self.p,
                "q": self.q, "r": self.r, "failed_condition": self.failed_condition}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _pr_order_ok(p: int, ordp: int) -> bool:
    half = (p - 1) // 2
    return ordp == p - 1 or (ordp == half and half % 2 == 1)


def classify(e: int, m: int) -> ParamClass:
    """Which family (e, m) falls into; UNSUPPORTED names the first failed condition."""
    if m < 2 or m % 2:
        raise ValueError(f"m must be even and >= 2, got {m}")
    v = 0
    odd = m
    while odd % 2 == 0:
        odd //= 2
        v += 1
    facs = factorize(odd)
    unsupported = lambda why, **kw: ParamClass(UNSUPPORTED, e, m, v, failed_condition=why, **kw)

    if not facs:
        return unsupported(f"m = 2^{v} has no odd prime part")

    if len(facs) == 1:
        (p, r), = facs.items()
        ordp = mult_order(2, p)
        data = {f"ord_{p}(2)": ordp}
        if not _pr_order_ok(p, ordp):
            return unsupported(f"ord_{p}(2) = {ordp} is neither p-1 nor an odd (p-1)/2",
                               p=p, r=r, ord_data=data)
        if gcd(e, p - 1) != 1:
            return unsupported(f"gcd(e, p-1) = gcd({e}, {p - 1}) != 1", p=p, r=r, ord_data=data)
        if r > 1:
            # Q_{p^k} must factor over GF(2^e) as it does over GF(2) at every level,
            # i.e. ord_{p^r}(2^e) = ord_{p^r}(2); gcd(e, p-1) = 1 alone misses p | e
            ordpr = mult_order(2, p ** r)
            data[f"ord_{p ** r}(2)"] = ordpr
            if gcd(e, ordpr) != 1:
                return unsupported(f"gcd(e, ord_{p ** r}(2)) = gcd({e}, {ordpr}) != 1",
                                   p=p, r=r, ord_data=data)
        return ParamClass(PR, e, m, v, p=p, r=r, ord_data=data)

    if len(facs) == 2 and all(k == 1 for k in facs.values()):
        p, q = sorted(facs)
        ordp, ordq = mult_order(2, p), mult_order(2, q)
        data = {f"ord_{p}(2)": ordp, f"ord_{q}(2)": ordq, f"ord_{p * q}(2)": mult_order(2, p * q)}
        kw = dict(p=p, q=q, ord_data=data)
        if gcd(p - 1, q - 1) != 2:
            return unsupported(f"gcd(p-1, q-1) = {gcd(p - 1, q - 1)} != 2", **kw)
        if ordp != p - 1:
            return unsupported(f"ord_{p}(2) = {ordp} != p-1", **kw)
        if ordq != q - 1:
            return unsupported(f"ord_{q}(2) = {ordq} != q-1", **kw)
        if ((p - 1) * (q - 1) // 4) % 2:
            return unsupported(f"(p-1)(q-1)/4 = {(p - 1) * (q - 1) // 4} is odd", **kw)
        if gcd(e, (p - 1) * (q - 1)) != 1:
            return unsupported(f"gcd(e, (p-1)(q-1)) = {gcd(e, (p - 1) * (q - 1))} != 1", **kw)
        return ParamClass(PQ, e, m, v, **kw)

    return unsupported(f"odd part {odd} is neither a prime power nor a product of two primes")


def _require(f: QuadForm, cls: ParamClass, kind: str):
    if cls.kind != kind:
        raise ValueError(f"expected a {kind} class, got {cls.kind}")
    if (cls.e, cls.m) != (f.e, f.m):
        raise ValueError(f"class is for (e={cls.e}, m={cls.m}), form has (e={f.e}, m={f.m})")


# -- fold sums ------------------------------------------------------------------

def fold_sums(f: QuadForm, period: int) -> list[int]:
    """w_i = sum_j c_{i + j*period} for 1 <= i < period (index 0 unused)."""
    half = f.m // 2
    if half % period:
        raise ValueError(f"period {period} does not divide m/2 = {half}")
    c = (0,) + f.coeffs  # c[i] is c_i
    w = [0] * period
    for i in range(1, period):
        acc = 0
        for idx in range(i, half, period):
            acc ^= c[idx]
        w[i] = acc
    return w


def symmetrized_sums(f: QuadForm, period: int) -> list[int]:
    """u_0 = c_{m/2}, u_i = w_i + w_{period-i}; extended periodically by the caller."""
    w = fold_sums(f, period)
    u = [f.coeffs[-1]] + [w[i] ^ w[period - i] for i in range(1, period)]
    return u


def compute_uk(f: QuadForm, k: int, cls: ParamClass | None = None) -> tuple[list[int], list[int]]:
    """(w_{., k}, u_{., k}) over one period p^k for the PR family."""
    cls = cls or classify(f.e, f.m)
    _require(f, cls, PR)
    if not 1 <= k <= cls.r:
        raise ValueError(f"level k={k} outside 1..{cls.r}")
    period = cls.p ** k
    return fold_sums(f, period), symmetrized_sums(f, period)


def column(u: list[int], i: int, stride: int, rows: int) -> list[int]:
    """A_{i,k}: entries u_{i + j*stride} for j < rows."""
    period = len(u)
    return [u[(i + j * stride) % period] for j in range(rows)]


def check_pr(f: QuadForm, cls: ParamClass) -> bool:
    _require(f, cls, PR)
    if not f.coeffs[-1]:
        return False
    p = cls.p
    for k in range(1, cls.r + 1):
        _, u = compute_uk(f, k, cls)
        stride = p ** (k - 1)
        if not any(len(set(column(u, i, stride, p))) > 1 for i in range((stride - 1) // 2 + 1)):
            return False
    return True


def check_2vp(f: QuadForm, cls: ParamClass) -> bool:
    _require(f, cls, PR)
    if cls.r != 1:
        raise ValueError(f"needs r = 1, class has r = {cls.r}")
    cm = f.coeffs[-1]
    if not cm:
        return False
    p = cls.p
    w = fold_sums(f, p)
    return any(w[i] ^ w[p - i] != cm for i in range(1, (p - 1) // 2 + 1))


@dataclass(frozen=True)
class PQSums:
    w_p: list[int]
    w_q: list[int]
    w_pq: list[int]
    u_p: list[int]
    u_q: list[int]
    u_pq: list[int]


def compute_pq_sums(f: QuadForm, cls: ParamClass) -> PQSums:
    _require(f, cls, PQ)
    p, q = cls.p, cls.q
    return PQSums(fold_sums(f, p), fold_sums(f, q), fold_sums(f, p * q),
                  symmetrized_sums(f, p), symmetrized_sums(f, q), symmetrized_sums(f, p * q))


def check_pq(f: QuadForm, cls: ParamClass) -> bool:
    _require(f, cls, PQ)
    cm = f.coeffs[-1]
    if not cm:
        return False
    p, q = cls.p, cls.q
    s = compute_pq_sums(f, cls)
    if not any(s.w_p[i] ^ s.w_p[p - i] != cm for i in range(1, (p - 1) // 2 + 1)):
        return False
    if not any(s.w_q[i] ^ s.w_q[q - i] != cm for i in range(1, (q - 1) // 2 + 1)):
        return False
    u, pq = s.u_pq, p * q
    return any(u[i] ^ u[(i - p) % pq] ^ u[(i - q) % pq] ^ u[(i - p - q) % pq] for i in range(pq))


def check_structural(f: QuadForm, cls: ParamClass | None = None) -> bool:
    """Dispatch to the criterion for the form's parameter class."""
    cls = cls or classify(f.e, f.m)
    if cls.kind == PR:
        return check_pr(f, cls)
    if cls.kind == PQ:
        return check_pq(f, cls)
    raise ValueError(f"no structural criterion for (e={f.e}, m={f.m}): {cls.failed_condition}")
