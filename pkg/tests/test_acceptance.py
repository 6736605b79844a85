"""Acceptance criteria. Each test prints one PASS/FAIL line."""

import math
import random
import time
from math import gcd

import numpy as np
import pytest

from quadbent.criteria import check_pq, check_pr, classify
from quadbent.enumeration import count_exhaustive, count_formula, expected_acceptance, sample_bent
from quadbent.gfcore import make_context, standard_field
from quadbent.polyring import cyclotomic, divisors, poly_gcd
from quadbent.quadcore import (GeneralQuadForm, QuadForm, build_cf, check_vd_distribution,
                               is_bent_gcd, is_bent_rank, is_bent_spectral, kernel_dimension)


@pytest.fixture
def report(capsys):
    def emit(number, name, ok, detail=""):
        with capsys.disabled():
            print(f"\nCRITERION {number} {name}: {'PASS' if ok else 'FAIL'} {detail}".rstrip())
        assert ok, detail
    return emit


def all_forms(e, m):
    ctx = make_context(e, m)
    return [QuadForm.from_index(ctx, i) for i in range(1 << (e * m // 2))]


def test_1_oracle_triangle(report):
    t0 = time.perf_counter()
    bad = []
    for e, m in [(1, 6), (1, 12)]:
        for f in all_forms(e, m):
            verdicts = {is_bent_gcd(f).bent, is_bent_rank(f), is_bent_spectral(f)}
            if len(verdicts) != 1:
                bad.append(f.coeffs)
    dt = time.perf_counter() - t0
    report(1, "oracle triangle", not bad and dt < 1.0, f"disagreements={len(bad)} time={dt:.2f}s")


def test_2_count_reproduction(report):
    expected = {(1, 6): 2, (1, 10): 12, (1, 12): 16, (1, 18): 112, (3, 6): 392, (1, 30): 5760}
    t0 = time.perf_counter()
    got = {(e, m): (count_formula(classify(e, m)), count_exhaustive(e, m)) for e, m in expected}
    dt = time.perf_counter() - t0
    ok = all(got[k] == (v, v) for k, v in expected.items()) and dt < 30
    report(2, "count reproduction", ok, f"{got} time={dt:.1f}s")


def test_3_structural_pr(report):
    bad = 0
    for e, m in [(1, 18), (3, 6)]:
        cls = classify(e, m)
        bad += sum(check_pr(f, cls) != is_bent_gcd(f).bent for f in all_forms(e, m))
    report(3, "check_pr vs gcd", bad == 0, f"disagreements={bad}")


def test_4_structural_pq(report):
    t0 = time.perf_counter()
    cls = classify(1, 30)
    bad = 0
    for f in all_forms(1, 30):
        s, g, r = check_pq(f, cls), is_bent_gcd(f).bent, is_bent_rank(f)
        bad += not (s == g == r)
    dt = time.perf_counter() - t0
    report(4, "check_pq vs gcd vs rank", bad == 0 and dt < 120, f"disagreements={bad} time={dt:.1f}s")


def test_5_vd_distribution(report):
    rng = np.random.default_rng(5)
    failures = []
    for n in (6, 8, 9, 12):
        F = standard_field(n)
        for _ in range(200):
            f = GeneralQuadForm.random(F, rng)
            if not check_vd_distribution(f) or (n - kernel_dimension(f)) % 2:
                failures.append((n, f.coeffs))
    report(5, "value distribution", not failures, f"failures={len(failures)}")


def _clmul(a, b):
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def _bits(p):
    return sum(c << i for i, c in enumerate(p.coeffs))


def test_6_cyclotomic_consistency(report):
    bad = []
    for N in range(1, 1001, 2):
        prod = 1
        for d in divisors(N):
            q = cyclotomic(d)
            phi = sum(1 for k in range(1, d + 1) if gcd(k, d) == 1)
            if q.degree != phi:
                bad.append(("degree", d))
            prod = _clmul(prod, _bits(q))
        if prod != (1 << N) | 1:
            bad.append(("product", N))
    report(6, "cyclotomic consistency", not bad, f"failures={bad[:5]}")


def test_7_gcd_dichotomy(report):
    violations = 0
    for m, d in [(18, 9), (30, 15)]:
        ctx = make_context(1, m)
        q = cyclotomic(d)
        rng = random.Random(m)
        for _ in range(10_000):
            f = QuadForm(ctx, tuple(rng.getrandbits(1) for _ in range(m // 2)))
            g = poly_gcd(build_cf(f), q)
            violations += not (g.is_one() or g == q)
    report(7, "gcd dichotomy", violations == 0, f"violations={violations}")


def test_8_sampler(report):
    res = sample_bent(3, 6, seed=1, count=100)
    sound = all(is_bent_rank(f) and is_bent_gcd(f).bent for f in res.forms)
    p = float(expected_acceptance(classify(3, 6)))
    se = math.sqrt(p * (1 - p) / res.draws)
    z = (res.acceptance_rate - p) / se
    ok = sound and len(res.forms) == 100 and abs(z) <= 3 and p == 392 / 448
    report(8, "sampler soundness", ok,
           f"rate={res.acceptance_rate:.4f} expected={p:.4f} z={z:.2f} draws={res.draws}")
