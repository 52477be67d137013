"""Arbitrary-precision evaluation of ln Gamma at rational arguments in (0,1).

The identities this package checks are proved exactly; this module is the
independent numeric cross-check, so it computes ln Gamma from first
principles: an integer argument shift in exact rational arithmetic, then the
Stirling series with exact Bernoulli coefficients and an explicit tail bound.
mpmath supplies only the big-float substrate (ln, pi, arithmetic).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction as Q
from functools import lru_cache

import mpmath

from .exact import const_ln, working_precision_bits

DEFAULT_DIGITS = 60

# B_0, B_1, ... with B_1 = -1/2; grown on demand, read-only thereafter.
_BERNOULLI: list[Q] = [Q(1)]


def bernoulli(n: int) -> Q:
    """Exact Bernoulli number B_n."""
    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")
    while len(_BERNOULLI) <= n:
        m = len(_BERNOULLI)
        acc = sum(
            (math.comb(m + 1, j) * _BERNOULLI[j] for j in range(m)), Q(0)
        )
        _BERNOULLI.append(-acc / (m + 1))
    return _BERNOULLI[n]


def stirling_tail_log10(shift: int, terms: int) -> float:
    """log10 of the tail bound |B_{2K+2}| / ((2K+1)(2K+2) z^(2K+1)) at z = shift."""
    k = terms
    b = bernoulli(2 * k + 2)
    return (
        math.log10(abs(b.numerator))
        - math.log10(b.denominator)
        - math.log10(2 * k + 1)
        - math.log10(2 * k + 2)
        - (2 * k + 1) * math.log10(shift)
    )


@dataclass(frozen=True)
class PrecisionContext:
    """Evaluation parameters: target digits, mantissa bits, shift, series length.

    for_digits picks shift_count and stirling_terms so the Stirling tail
    bound stays below 10^-(decimal_digits + 5); the extra mantissa bits keep
    accumulated rounding inside the same margin.
    """

    decimal_digits: int
    bits: int
    shift_count: int
    stirling_terms: int

    @classmethod
    def for_digits(cls, decimal_digits: int = DEFAULT_DIGITS) -> "PrecisionContext":
        if decimal_digits < 10:
            raise ValueError(f"decimal_digits must be at least 10, got {decimal_digits}")
        target = -(decimal_digits + 5)
        shift = max(8, math.ceil(0.55 * (decimal_digits + 5)))
        while True:
            for terms in range(1, 3 * shift + 1):
                if stirling_tail_log10(shift, terms) <= target:
                    return cls(
                        decimal_digits,
                        working_precision_bits(decimal_digits),
                        shift,
                        terms,
                    )
            shift += 8


def _to_mpf(q: Q) -> mpmath.mpf:
    return mpmath.mpf(q.numerator) / q.denominator


def ln_gamma(x, ctx: PrecisionContext | None = None) -> mpmath.mpf:
    """ln Gamma(x) for rational x in (0,1), absolute error below 10^-decimal_digits.

    Gamma(x) = Gamma(x + m) / (x (x+1) ... (x+m-1)) with m = ctx.shift_count,
    then Stirling at z = x + m:

        ln Gamma(z) = (z - 1/2) ln z - z + ln(2 pi)/2
                      + sum_{k=1..K} B_{2k} / (2k (2k-1) z^(2k-1)) + R_K(z),
        |R_K(z)| <= |B_{2K+2}| / ((2K+1)(2K+2) z^(2K+1)),

    and the context keeps that bound below 10^-(decimal_digits + 5).
    """
    ctx = ctx or PrecisionContext.for_digits()
    x = Q(x)
    if not 0 < x < 1:
        raise ValueError(f"argument must lie in (0,1), got {x}")
    z = x + ctx.shift_count
    descent = Q(1)
    for k in range(ctx.shift_count):
        descent *= x + k
    with mpmath.workprec(ctx.bits):
        zf = _to_mpf(z)
        total = (zf - mpmath.mpf(1) / 2) * mpmath.ln(zf) - zf + mpmath.ln(2 * mpmath.pi) / 2
        inv = 1 / zf
        inv2 = inv * inv
        power = inv
        for k in range(1, ctx.stirling_terms + 1):
            total += _to_mpf(bernoulli(2 * k) / ((2 * k) * (2 * k - 1))) * power
            power *= inv2
        total -= mpmath.ln(_to_mpf(descent))
        return +total


@lru_cache(maxsize=None)
def _ln_gamma_cached(x: Q, ctx: PrecisionContext) -> mpmath.mpf:
    return ln_gamma(x, ctx)


def eval_word_ln(word, ctx: PrecisionContext | None = None) -> mpmath.mpf:
    """ln of a word's value: sum_j e_j (ln Gamma(j/N) - ln Gamma((N-j)/N)) + ln coeff.

    Worst-case absolute error (2 sum_j |e_j| + 1) * 10^-decimal_digits.
    """
    ctx = ctx or PrecisionContext.for_digits()
    n = word.denominator
    with mpmath.workprec(ctx.bits):
        total = mpmath.mpf(0)
        for j, e in word.exponents:
            total += e * (
                _ln_gamma_cached(Q(j, n), ctx) - _ln_gamma_cached(Q(n - j, n), ctx)
            )
        total += const_ln(word.coeff, ctx.decimal_digits)
        return +total
