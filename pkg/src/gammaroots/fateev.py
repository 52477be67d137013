"""Gamma-product identities over the positive roots of an irreducible system.

With marks n_i, comarks n_i', double comarks n_i'' (index 0..r, node 0 being
the negated highest root), h the mark sum and h' the comark sum, the three
variants checked here read, for each simple root alpha_i:

  F        prod_{a>0} gamma((a|rho)/h)^(-(alpha_i|a))    = n_i  k^(-1/h),
           k  = prod_j n_j^(n_j)                (simply laced systems only)
  Fprime   prod_{a>0} gamma((a|rho')/h)^(-(alpha_i|a^))  = n_i' k'^(-1/h),
           k' = prod_j (n_j')^(n_j)
  Fsecond  prod_{a>0} gamma((a|rho)/h')^(-(alpha_i^|a))  = n_i'' k''^(-1/h'),
           k''= prod_j (n_j'')^(n_j')

where rho / rho' are the half-sums of positive roots / coroots and a^ is the
coroot of a.  Left sides are exact gamma words, right sides exact prime-power
constants; verification is an exact lattice proof, a high-precision numeric
comparison, or both.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Iterable, Optional, Sequence, Tuple

import mpmath

from .exact import ONE, FactoredConstant, const_ln, const_mul, const_pow, factor_power
from .gammaword import GammaWord, brace_str, word_from_terms
from .numeric import PrecisionContext, eval_word_ln
from .prover import Certificate, prove_constant
from .rootsys import RootSystem, RootSystemId, coroot, inner

F = "F"
F_PRIME = "Fprime"
F_SECOND = "Fsecond"
VARIANTS = (F, F_PRIME, F_SECOND)

MODES = ("exact", "numeric", "both")

PROVED_EXACT = "proved_exact"
NUMERIC_ONLY = "numeric_only"
MISMATCH = "mismatch"
NOT_IN_LATTICE = "not_in_lattice"


def _check_variant(variant: str) -> None:
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; expected one of {', '.join(VARIANTS)}")


def _check_case(system: RootSystem, index: int, variant: str) -> None:
    _check_variant(variant)
    if not 1 <= index <= system.rank:
        raise ValueError(f"index {index} outside 1..{system.rank}")
    if variant == F and not system.simply_laced:
        raise ValueError(
            f"variant F applies only to simply laced systems (families A, D, E); "
            f"{system.ident} has two root lengths, use {F_PRIME} or {F_SECOND}"
        )


def admissible(system: RootSystem, variant: str) -> bool:
    """Whether the variant's hypotheses hold for the system."""
    _check_variant(variant)
    return variant != F or system.simply_laced


def lhs_word(system: RootSystem, index: int, variant: str) -> GammaWord:
    """The definitional product over positive roots, merged on its lcm grid.

    The grid denominator comes from every factor's argument, including those
    whose exponents merge to zero.  No reflection folding is applied; the
    returned word is the product exactly as defined.
    """
    _check_case(system, index, variant)
    alpha_i = system.simple_roots[index - 1]
    if variant == F_SECOND:
        alpha_i = coroot(alpha_i)
    terms = []
    for alpha in system.positive_roots:
        if variant == F:
            argument = inner(alpha, system.rho) / system.coxeter_number
            exponent = -inner(alpha_i, alpha)
        elif variant == F_PRIME:
            argument = inner(alpha, system.rho_check) / system.coxeter_number
            exponent = -inner(alpha_i, coroot(alpha))
        else:
            argument = inner(alpha, system.rho) / system.comark_sum
            exponent = -inner(alpha_i, alpha)
        assert exponent.denominator == 1, "root/coroot pairings must be integral"
        if not 0 < argument < 1:
            raise ValueError(f"argument {argument} outside (0,1)")
        terms.append((argument, int(exponent)))
    return word_from_terms(terms)


def k_constant(system: RootSystem, variant: str) -> FactoredConstant:
    """The product over all nodes 0..r entering the closed-form right side."""
    _check_variant(variant)
    if variant == F:
        pairs = zip(system.marks, system.marks)
    elif variant == F_PRIME:
        pairs = zip(system.comarks, system.marks)
    else:
        pairs = zip(system.double_comarks, system.comarks)
    out = ONE
    for base, exponent in pairs:
        out = const_mul(out, factor_power(base, exponent))
    return out


def rhs_constant(system: RootSystem, index: int, variant: str) -> FactoredConstant:
    """Closed form for one simple root: its node factor times a root of k."""
    _check_case(system, index, variant)
    if variant == F:
        node, grid = Q(system.marks[index]), Q(system.coxeter_number)
    elif variant == F_PRIME:
        node, grid = system.comarks[index], Q(system.coxeter_number)
    else:
        node, grid = system.double_comarks[index], system.comark_sum
    return const_mul(
        factor_power(node, 1), const_pow(k_constant(system, variant), -1 / grid)
    )


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one (system, simple root, variant) check."""

    ident: RootSystemId
    index: int
    variant: str
    mode: str
    status: str
    lhs: GammaWord
    rhs: FactoredConstant
    certificate: Optional[Certificate]
    numeric_residual: Optional[str]
    wall_time_ms: float

    @property
    def passed(self) -> bool:
        """Exact and both modes demand a proof; numeric mode a passing residual."""
        if self.mode == "numeric":
            return self.status == NUMERIC_ONLY
        return self.status == PROVED_EXACT

    def to_json_obj(self) -> dict:
        return {
            "family": self.ident.family,
            "rank": self.ident.rank,
            "index": self.index,
            "variant": self.variant,
            "mode": self.mode,
            "status": self.status,
            "lhs_word": self.lhs.to_json_obj(),
            "rhs_constant": self.rhs.to_json_obj(),
            "certificate": None if self.certificate is None else self.certificate.to_json_obj(),
            "numeric_residual": self.numeric_residual,
            "wall_time_ms": self.wall_time_ms,
        }

    def text_line(self) -> str:
        extra = f" residual={self.numeric_residual}" if self.numeric_residual else ""
        return (
            f"{self.ident} alpha_{self.index} {self.variant}: {self.status} "
            f"{brace_str(self.lhs)} = {self.rhs}{extra} [{self.wall_time_ms:.1f} ms]"
        )


def verify(
    system: RootSystem,
    index: int,
    variant: str,
    mode: str = "both",
    ctx: Optional[PrecisionContext] = None,
) -> VerificationReport:
    """Check one identity instance by exact proof, numeric comparison, or both.

    Numeric comparisons accept |ln lhs - ln rhs| <= 10^(10 - decimal_digits).
    In both mode the numeric route runs as a cross-check of an exact proof
    and as a fallback diagnostic when the word is outside the lattice; the
    report only counts as passed with a proof.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {', '.join(MODES)}")
    ctx = ctx or PrecisionContext.for_digits()
    start = time.perf_counter()
    lhs = lhs_word(system, index, variant)
    rhs = rhs_constant(system, index, variant)
    certificate = None
    residual_str = None
    status = None
    if mode in ("exact", "both"):
        certificate = prove_constant(lhs)
        if certificate is None:
            status = NOT_IN_LATTICE
        else:
            proven = const_mul(lhs.coeff, certificate.derived_constant)
            status = PROVED_EXACT if proven == rhs else MISMATCH
    if mode == "numeric" or (mode == "both" and status in (PROVED_EXACT, NOT_IN_LATTICE)):
        residual = abs(eval_word_ln(lhs, ctx) - const_ln(rhs, ctx.decimal_digits))
        residual_str = mpmath.nstr(residual, 6)
        numeric_ok = residual <= mpmath.mpf(10) ** (10 - ctx.decimal_digits)
        if status is None:
            status = NUMERIC_ONLY if numeric_ok else MISMATCH
        elif status == NOT_IN_LATTICE:
            status = NUMERIC_ONLY if numeric_ok else MISMATCH
        elif not numeric_ok:
            status = MISMATCH
    wall = (time.perf_counter() - start) * 1000.0
    return VerificationReport(
        system.ident, index, variant, mode, status, lhs, rhs, certificate, residual_str, wall
    )


@dataclass(frozen=True)
class VerificationSummary:
    """All reports of one run, ordered by (family, rank, index, variant)."""

    reports: Tuple[VerificationReport, ...]

    @property
    def counts(self) -> dict:
        return dict(sorted(Counter(r.status for r in self.reports).items()))

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.reports)

    def to_json_obj(self) -> dict:
        return {
            "reports": [r.to_json_obj() for r in self.reports],
            "counts": self.counts,
            "passed": self.all_passed,
        }


def verify_all(
    systems: Iterable[RootSystem],
    variants: Optional[Sequence[str]] = None,
    mode: str = "both",
    ctx: Optional[PrecisionContext] = None,
) -> VerificationSummary:
    """Every admissible (system, index, variant) combination, deterministically."""
    chosen = tuple(variants) if variants else VARIANTS
    for variant in chosen:
        _check_variant(variant)
    reports = []
    for system in systems:
        for variant in chosen:
            if not admissible(system, variant):
                continue
            for index in range(1, system.rank + 1):
                reports.append(verify(system, index, variant, mode, ctx))
    reports.sort(key=lambda r: (r.ident, r.index, VARIANTS.index(r.variant)))
    return VerificationSummary(tuple(reports))
