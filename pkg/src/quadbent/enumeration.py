"""Bent-function counts: closed-form products, exhaustive sweeps, and a
seeded rejection sampler."""

from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .criteria import PQ, PR, ParamClass, check_structural, classify
from .gfcore import make_context
from .quadcore import QuadForm, is_bent_gcd, is_bent_rank, is_bent_spectral

EXHAUSTIVE_CAP_BITS = 24

ORACLES = {
    "gcd": lambda f, cls: is_bent_gcd(f).bent,
    "rank": lambda f, cls: is_bent_rank(f),
    "structural": lambda f, cls: check_structural(f, cls),
    "spectral": lambda f, cls: is_bent_spectral(f),
}


def _factor_exponents(cls: ParamClass) -> list[int]:
    # E with a factor (1 - 2^-E) in the count
    e, p = cls.e, cls.p
    if cls.kind == PR:
        return [e * (p ** i - p ** (i - 1)) // 2 for i in range(1, cls.r + 1)]
    if cls.kind == PQ:
        q = cls.q
        return [e * (p - 1) // 2, e * (q - 1) // 2, e * (p - 1) * (q - 1) // 2]
    raise ValueError(f"no count formula for (e={cls.e}, m={cls.m}): {cls.failed_condition}")


def count_formula(cls: ParamClass) -> int:
    """(2^e - 1) 2^(e(m-2)/2) prod (1 - 2^-E), in exact arithmetic."""
    exps = _factor_exponents(cls)
    e, m = cls.e, cls.m
    total = Fraction((2 ** e - 1) * 2 ** (e * (m - 2) // 2))
    for E in exps:
        total *= 1 - Fraction(1, 2 ** E)
    if total.denominator != 1:
        raise ArithmeticError(f"count formula is not integral: {total}")
    return total.numerator


def _count_range(e: int, m: int, oracle: str, start: int, stop: int) -> int:
    ctx = make_context(e, m)
    cls = classify(e, m)
    test = ORACLES[oracle]
    return sum(1 for idx in range(start, stop) if test(QuadForm.from_index(ctx, idx), cls))


def count_exhaustive(e: int, m: int, oracle: str = "gcd", jobs: int = 1,
                     cap_bits: int = EXHAUSTIVE_CAP_BITS) -> int:
    """Number of coefficient vectors in GF(2^e)^(m/2) whose form is bent."""
    if oracle not in ORACLES:
        raise ValueError(f"unknown oracle {oracle!r}; choose from {sorted(ORACLES)}")
    bits = e * (m // 2)
    if bits > cap_bits:
        raise ValueError(f"search space 2^{bits} exceeds the cap 2^{cap_bits}")
    make_context(e, m)
    if oracle == "structural" and classify(e, m).kind not in (PR, PQ):
        raise ValueError(f"no structural criterion for (e={e}, m={m})")
    space = 1 << bits
    if jobs <= 1:
        return _count_range(e, m, oracle, 0, space)
    step = -(-space // jobs)
    bounds = [(lo, min(lo + step, space)) for lo in range(0, space, step)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = pool.map(_count_range, *zip(*[(e, m, oracle, lo, hi) for lo, hi in bounds]))
        return sum(parts)


@dataclass
class CountReport:
    cls: ParamClass
    formula_count: int | None
    exhaustive_count: int | None
    search_space: int
    methods: list[str] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return (self.formula_count is None or self.exhaustive_count is None
                or self.formula_count == self.exhaustive_count)

    def to_dict(self) -> dict:
        return {"kind": self.cls.kind, "formula": self.formula_count,
                "exhaustive": self.exhaustive_count, "space": self.search_space}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def count_report(e: int, m: int, mode: str = "both", oracle: str = "gcd", jobs: int = 1) -> CountReport:
    if mode not in ("formula", "exhaustive", "both"):
        raise ValueError(f"unknown mode {mode!r}")
    cls = classify(e, m)
    formula = exhaustive = None
    methods = []
    if mode in ("formula", "both"):
        formula = count_formula(cls)
        methods.append("formula")
    if mode in ("exhaustive", "both"):
        exhaustive = count_exhaustive(e, m, oracle=oracle, jobs=jobs)
        methods.append(f"exhaustive:{oracle}")
    return CountReport(cls, formula, exhaustive, 1 << (e * (m // 2)), methods)


@dataclass
class SampleResult:
    forms: list[QuadForm]
    draws: int
    seed: int

    @property
    def acceptance_rate(self) -> float:
        return len(self.forms) / self.draws if self.draws else float("nan")

    def to_dict(self) -> dict:
        return {"seed": self.seed, "draws": self.draws, "accepted": len(self.forms),
                "forms": [f.to_dict() for f in self.forms]}


def expected_acceptance(cls: ParamClass) -> Fraction:
    e, m = cls.e, cls.m
    return Fraction(count_formula(cls), (2 ** e - 1) * 2 ** (e * (m - 2) // 2))


def sample_bent(e: int, m: int, seed: int, count: int, max_draws: int | None = None) -> SampleResult:
    """Rejection-sample ``count`` bent forms.

    Draw order with random.Random(seed): c_1, ..., c_{m/2-1} each from
    getrandbits(e), then c_{m/2} from randrange(1, 2^e); accept when the
    gcd test passes.
    """
    ctx = make_context(e, m)
    rng = random.Random(seed)
    forms: list[QuadForm] = []
    draws = 0
    while len(forms) < count:
        if max_draws is not None and draws >= max_draws:
            raise RuntimeError(f"only {len(forms)} of {count} accepted after {draws} draws")
        coeffs = [rng.getrandbits(e) for _ in range(m // 2 - 1)]
        coeffs.append(rng.randrange(1, 1 << e))
        draws += 1
        f = QuadForm(ctx, tuple(coeffs))
        if is_bent_gcd(f).bent:
            forms.append(f)
    return SampleResult(forms, draws, seed)
