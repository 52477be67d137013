"""ln Gamma from first principles, pinned against independent references.

The package computes ln Gamma with its own shift + Stirling evaluation; the
cross-checks here are a frozen externally computed value, the reflection and
multiplication functional equations, and mpmath's own loggamma.
"""

import random
from fractions import Fraction as Q

import mpmath
import pytest

from gammaroots.exact import factor_power
from gammaroots.gammaword import GammaWord
from gammaroots.numeric import (
    PrecisionContext,
    bernoulli,
    eval_word_ln,
    ln_gamma,
    stirling_tail_log10,
)

# Gamma(1/6) logarithm, computed offline at 60 significant digits.
LN_GAMMA_SIXTH = "1.71673343507824046052784630958793075727937748710540556387316"


def test_bernoulli_literals():
    expected = [
        Q(1), Q(-1, 2), Q(1, 6), Q(0), Q(-1, 30), Q(0), Q(1, 42), Q(0),
        Q(-1, 30), Q(0), Q(5, 66), Q(0), Q(-691, 2730),
    ]
    assert [bernoulli(n) for n in range(13)] == expected
    with pytest.raises(ValueError):
        bernoulli(-1)


def test_precision_context_meets_tail_bound():
    for digits in (10, 30, 60, 100):
        ctx = PrecisionContext.for_digits(digits)
        assert stirling_tail_log10(ctx.shift_count, ctx.stirling_terms) <= -(digits + 5)
        assert ctx.bits > digits * 3.3
    with pytest.raises(ValueError):
        PrecisionContext.for_digits(9)


def test_ln_gamma_half():
    ctx = PrecisionContext.for_digits(60)
    with mpmath.workprec(300):
        diff = abs(ln_gamma(Q(1, 2), ctx) - mpmath.ln(mpmath.pi) / 2)
    assert diff < mpmath.mpf(10) ** -58


def test_ln_gamma_frozen_reference():
    ctx = PrecisionContext.for_digits(50)
    with mpmath.workprec(300):
        reference = mpmath.mpf(LN_GAMMA_SIXTH)
        diff = abs(ln_gamma(Q(1, 6), ctx) - reference)
    assert diff < mpmath.mpf(10) ** -49


def test_ln_gamma_domain():
    ctx = PrecisionContext.for_digits(20)
    for bad in (Q(0), Q(1), Q(3, 2), Q(-1, 4)):
        with pytest.raises(ValueError):
            ln_gamma(bad, ctx)


def test_reflection_functional_equation():
    ctx = PrecisionContext.for_digits(60)
    rng = random.Random(5)
    with mpmath.workprec(ctx.bits):
        for _ in range(12):
            n = rng.randint(2, 30)
            j = rng.randint(1, n - 1)
            x = Q(j, n)
            xf = mpmath.mpf(j) / n
            lhs = ln_gamma(x, ctx) + ln_gamma(1 - x, ctx)
            rhs = mpmath.ln(mpmath.pi) - mpmath.ln(mpmath.sin(mpmath.pi * xf))
            assert abs(lhs - rhs) < mpmath.mpf(10) ** -55


def test_multiplication_functional_equation():
    # prod_{i<d} Gamma(x + i/d) = (2 pi)^((d-1)/2) d^(1/2 - dx) Gamma(dx)
    ctx = PrecisionContext.for_digits(60)
    with mpmath.workprec(ctx.bits):
        for d in range(2, 7):
            x = Q(1, 7 * d)
            lhs = sum(ln_gamma(x + Q(i, d), ctx) for i in range(d))
            rhs = (
                Q(d - 1, 2) * mpmath.ln(2 * mpmath.pi)
                + (Q(1, 2) - d * x) * mpmath.ln(d)
                + ln_gamma(d * x, ctx)
            )
            assert abs(lhs - rhs) < mpmath.mpf(10) ** -55


def test_gamma_ratio_multiplication_form():
    # the same identity for gamma(x) = Gamma(x)/Gamma(1-x): every 2 pi cancels
    ctx = PrecisionContext.for_digits(60)

    def ln_ratio(x):
        return ln_gamma(x, ctx) - ln_gamma(1 - x, ctx)

    with mpmath.workprec(ctx.bits):
        for d in range(2, 7):
            x = Q(1, 7 * d)
            lhs = sum(ln_ratio(x + Q(i, d)) for i in range(d))
            rhs = (1 - 2 * d * x) * mpmath.ln(d) + ln_ratio(d * x)
            assert abs(lhs - rhs) < mpmath.mpf(10) ** -55


def test_against_mpmath_loggamma():
    ctx = PrecisionContext.for_digits(40)
    rng = random.Random(17)
    with mpmath.workprec(250):
        for _ in range(25):
            den = rng.randint(2, 46)
            num = rng.randint(1, den - 1)
            mine = ln_gamma(Q(num, den), ctx)
            reference = mpmath.loggamma(mpmath.mpf(num) / den)
            assert abs(mine - reference) < mpmath.mpf(10) ** -39


def test_precision_scales_with_digits():
    x = Q(1, 7)
    with mpmath.workprec(600):
        coarse = ln_gamma(x, PrecisionContext.for_digits(20))
        fine = ln_gamma(x, PrecisionContext.for_digits(120))
        reference = mpmath.loggamma(mpmath.mpf(1) / 7)
        assert abs(coarse - reference) < mpmath.mpf(10) ** -19
        assert abs(fine - reference) < mpmath.mpf(10) ** -119


def test_eval_word_ln_matches_direct_sum():
    ctx = PrecisionContext.for_digits(50)
    word = GammaWord(4, ((1, 2),), factor_power(3, Q(1, 2)))
    with mpmath.workprec(ctx.bits):
        direct = 2 * (ln_gamma(Q(1, 4), ctx) - ln_gamma(Q(3, 4), ctx)) + mpmath.ln(3) / 2
        assert abs(eval_word_ln(word, ctx) - direct) < mpmath.mpf(10) ** -45
