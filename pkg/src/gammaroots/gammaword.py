"""Words in gamma(x) = Gamma(x) / Gamma(1 - x) at rational arguments.

A word keeps every factor on one common grid: integer exponents attached to
indices j standing for the arguments j/N, together with an exact coefficient.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Iterable, Tuple

import mpmath

from .exact import ONE, FactoredConstant, RationalLike, const_mul, const_pow
from .numeric import DEFAULT_DIGITS, PrecisionContext, eval_word_ln


@dataclass(frozen=True)
class GammaWord:
    """coeff * prod over stored indices j of gamma(j/denominator)^e_j.

    Indices satisfy 1 <= j <= denominator - 1, appear at most once, in
    increasing order, and never carry exponent zero.
    """

    denominator: int
    exponents: Tuple[Tuple[int, int], ...] = ()
    coeff: FactoredConstant = ONE

    def __post_init__(self) -> None:
        if not isinstance(self.denominator, int) or self.denominator < 1:
            raise ValueError(f"denominator must be a positive integer, got {self.denominator}")
        previous = 0
        for j, e in self.exponents:
            if not isinstance(j, int) or not isinstance(e, int):
                raise ValueError("indices and exponents must be integers")
            if j <= previous:
                raise ValueError("indices must be strictly increasing")
            if not 1 <= j <= self.denominator - 1:
                raise ValueError(f"index {j} outside 1..{self.denominator - 1}")
            if e == 0:
                raise ValueError("zero exponents must be dropped")
            previous = j

    @property
    def is_empty(self) -> bool:
        return not self.exponents

    def exponent_map(self) -> dict[int, int]:
        return dict(self.exponents)

    def to_json_obj(self) -> dict:
        return {
            "N": self.denominator,
            "terms": [{"j": j, "exponent": e} for j, e in self.exponents],
            "coeff": self.coeff.to_json_obj(),
        }


def _collect(pairs: Iterable[Tuple[int, int]]) -> Tuple[Tuple[int, int], ...]:
    agg: dict[int, int] = {}
    for j, e in pairs:
        agg[j] = agg.get(j, 0) + e
    return tuple(sorted((j, e) for j, e in agg.items() if e))


def word_from_terms(terms: Iterable[Tuple[RationalLike, int]]) -> GammaWord:
    """Merge gamma(argument)^exponent factors onto one grid.

    The grid denominator is the lcm of every term's argument denominator,
    including terms whose exponents later cancel or are zero.
    """
    items = [(Q(a), int(e)) for a, e in terms]
    for a, _ in items:
        if not 0 < a < 1:
            raise ValueError(f"argument {a} outside (0,1)")
    if not items:
        return GammaWord(1)
    n = math.lcm(*(a.denominator for a, _ in items))
    pairs = [(a.numerator * (n // a.denominator), e) for a, e in items]
    return GammaWord(n, _collect(pairs))


def word_mul(a: GammaWord, b: GammaWord) -> GammaWord:
    """Pointwise product on the common (lcm) grid; coefficients multiply."""
    n = math.lcm(a.denominator, b.denominator)
    pairs = []
    for w in (a, b):
        scale = n // w.denominator
        pairs.extend((j * scale, e) for j, e in w.exponents)
    return GammaWord(n, _collect(pairs), const_mul(a.coeff, b.coeff))


def word_pow(w: GammaWord, k: int) -> GammaWord:
    """k-th power on the same grid; k = -1 gives the inverse."""
    k = int(k)
    if k == 0:
        return GammaWord(w.denominator)
    return GammaWord(
        w.denominator,
        tuple((j, e * k) for j, e in w.exponents),
        const_pow(w.coeff, k),
    )


def reduce_reflection(w: GammaWord) -> GammaWord:
    """Canonical form under gamma(x) gamma(1-x) = 1 and gamma(1/2) = 1.

    Indices above N/2 fold onto the complementary index with negated
    exponent; the middle index drops.  The value and coeff are unchanged.
    """
    n = w.denominator
    pairs = []
    for j, e in w.exponents:
        if 2 * j == n:
            continue
        if 2 * j > n:
            j, e = n - j, -e
        pairs.append((j, e))
    return GammaWord(n, _collect(pairs), w.coeff)


def eval_ln(w: GammaWord, decimal_digits: int = DEFAULT_DIGITS) -> mpmath.mpf:
    """ln of the word's value at the requested precision."""
    return eval_word_ln(w, PrecisionContext.for_digits(decimal_digits))


def brace_str(w: GammaWord) -> str:
    """Display shorthand with {j} for gamma(j/N); unit factors gamma(1/2) are omitted."""
    num: list[str] = []
    den: list[str] = []
    for j, e in w.exponents:
        if 2 * j == w.denominator:
            continue
        target, magnitude = (num, e) if e > 0 else (den, -e)
        target.append("{%d}" % j if magnitude == 1 else "{%d}^%d" % (j, magnitude))
    if not num and not den:
        core = "1"
    elif not den:
        core = "".join(num)
    else:
        tail = den[0] if len(den) == 1 else "(%s)" % "".join(den)
        core = "%s/%s" % ("".join(num) or "1", tail)
    if w.coeff.is_one:
        return core
    return f"{w.coeff}*{core}"
