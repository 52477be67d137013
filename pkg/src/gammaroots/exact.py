"""Exact arithmetic for positive constants of the form prod_p p^(e_p) * pi^(e_pi).

Rational numbers are stdlib fractions.Fraction throughout the package:
always lowest terms, positive denominator, unbounded integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Tuple, Union

import mpmath

Rational = Q
RationalLike = Union[int, Q]

# Reserved base token for the pi factor in serialized form.
PI_TOKEN = "pi"

_LOG2_10 = math.log2(10)


def working_precision_bits(decimal_digits: int) -> int:
    """Mantissa bits for a decimal accuracy target, with guard room for rounding."""
    if decimal_digits < 1:
        raise ValueError(f"decimal_digits must be positive, got {decimal_digits}")
    return math.ceil((decimal_digits + 10) * _LOG2_10) + 10


def _factorize(n: int) -> dict[int, int]:
    """Prime factorization of a positive integer by trial division."""
    if n <= 0:
        raise ValueError(f"cannot factor non-positive integer {n}")
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


@dataclass(frozen=True)
class FactoredConstant:
    """A positive real number prod_p p^(e_p) * pi^(e_pi) with rational exponents.

    Canonical form: prime bases strictly increasing, no zero exponents.  The
    logarithms of distinct primes and of pi are linearly independent over the
    rationals, so structural equality coincides with equality of real values.
    """

    prime_powers: Tuple[Tuple[int, Q], ...] = ()
    pi_power: Q = Q(0)

    def __post_init__(self) -> None:
        merged: dict[int, Q] = {}
        for base, exponent in self.prime_powers:
            base = int(base)
            if base < 2 or _factorize(base) != {base: 1}:
                raise ValueError(f"base {base} is not prime")
            merged[base] = merged.get(base, Q(0)) + Q(exponent)
        canonical = tuple(sorted((b, e) for b, e in merged.items() if e != 0))
        object.__setattr__(self, "prime_powers", canonical)
        object.__setattr__(self, "pi_power", Q(self.pi_power))

    @property
    def is_one(self) -> bool:
        return not self.prime_powers and self.pi_power == 0

    def exponent_of(self, base: int) -> Q:
        for b, e in self.prime_powers:
            if b == base:
                return e
        return Q(0)

    def to_json_obj(self) -> list[dict]:
        """Sorted base/exponent entries; the pi factor uses the reserved token, last."""
        entries = [
            {
                "base": b,
                "exponent_numerator": e.numerator,
                "exponent_denominator": e.denominator,
            }
            for b, e in self.prime_powers
        ]
        if self.pi_power:
            entries.append(
                {
                    "base": PI_TOKEN,
                    "exponent_numerator": self.pi_power.numerator,
                    "exponent_denominator": self.pi_power.denominator,
                }
            )
        return entries

    def __str__(self) -> str:
        if self.is_one:
            return "1"
        parts = []
        for b, e in self.prime_powers:
            parts.append(str(b) if e == 1 else f"{b}^({e})")
        if self.pi_power:
            e = self.pi_power
            parts.append(PI_TOKEN if e == 1 else f"{PI_TOKEN}^({e})")
        return "*".join(parts)


ONE = FactoredConstant()


def factor_power(base: RationalLike, exponent: RationalLike) -> FactoredConstant:
    """base^exponent as a FactoredConstant; base must be a positive rational."""
    base = Q(base)
    exponent = Q(exponent)
    if base <= 0:
        raise ValueError(f"base must be positive, got {base}")
    powers: dict[int, Q] = {}
    for p, m in _factorize(base.numerator).items():
        powers[p] = powers.get(p, Q(0)) + m * exponent
    for p, m in _factorize(base.denominator).items():
        powers[p] = powers.get(p, Q(0)) - m * exponent
    return FactoredConstant(tuple(powers.items()))


def const_mul(a: FactoredConstant, b: FactoredConstant) -> FactoredConstant:
    """Exact product of two factored constants."""
    merged = dict(a.prime_powers)
    for base, e in b.prime_powers:
        merged[base] = merged.get(base, Q(0)) + e
    return FactoredConstant(tuple(merged.items()), a.pi_power + b.pi_power)


def const_pow(a: FactoredConstant, exponent: RationalLike) -> FactoredConstant:
    """Exact rational power of a factored constant."""
    e = Q(exponent)
    return FactoredConstant(
        tuple((b, ex * e) for b, ex in a.prime_powers), a.pi_power * e
    )


def const_ln(a: FactoredConstant, decimal_digits: int) -> mpmath.mpf:
    """ln(a) with absolute error well below 10^-decimal_digits."""
    with mpmath.workprec(working_precision_bits(decimal_digits)):
        total = mpmath.mpf(0)
        for base, e in a.prime_powers:
            total += mpmath.mpf(e.numerator) / e.denominator * mpmath.ln(base)
        if a.pi_power:
            e = a.pi_power
            total += mpmath.mpf(e.numerator) / e.denominator * mpmath.ln(mpmath.pi)
        return +total
