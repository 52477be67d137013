"""Identity words, closed-form constants, and verification reports."""

from fractions import Fraction as Q

import pytest

from gammaroots.exact import ONE, FactoredConstant, factor_power
from gammaroots.fateev import (
    F,
    F_PRIME,
    F_SECOND,
    VARIANTS,
    admissible,
    k_constant,
    lhs_word,
    rhs_constant,
    verify,
    verify_all,
)
from gammaroots.gammaword import GammaWord, reduce_reflection, word_from_terms
from gammaroots.rootsys import coroot, inner


def C(*pairs):
    return FactoredConstant(tuple((b, Q(n, d)) for b, n, d in pairs))


# -- left sides ---------------------------------------------------------------


def test_a2_word(systems):
    w = lhs_word(systems[("A", 2)], 1, F)
    assert (w.denominator, w.exponents) == (3, ((1, -1), (2, -1)))
    assert w.coeff.is_one


def test_a_family_words_closed_form(systems):
    # gamma(i/(n+1))^-1 gamma((n+1-i)/(n+1))^-1 on the full 1/(n+1) grid
    for n in (1, 2, 3, 4, 5, 6):
        s = systems[("A", n)]
        for i in range(1, n + 1):
            if 2 * i == n + 1:
                exps = ((i, -2),)
            else:
                exps = tuple(sorted(((i, -1), (n + 1 - i, -1))))
            assert lhs_word(s, i, F) == GammaWord(n + 1, exps)


def test_a5_middle_word_is_balanced(systems):
    w = lhs_word(systems[("A", 5)], 3, F)
    assert (w.denominator, w.exponents) == (6, ((3, -2),))
    assert reduce_reflection(w).is_empty


def test_b3_word_against_direct_enumeration(systems):
    """Re-derive the B3 first word from scratch with literal root data."""
    e1, e2, e3 = (Q(1), Q(0), Q(0)), (Q(0), Q(1), Q(0)), (Q(0), Q(0), Q(1))

    def sub(u, v):
        return tuple(a - b for a, b in zip(u, v))

    def add(u, v):
        return tuple(a + b for a, b in zip(u, v))

    positive = [
        sub(e1, e2), sub(e2, e3), sub(e1, e3),
        add(e1, e2), add(e2, e3), add(e1, e3),
        e1, e2, e3,
    ]
    rho_check = tuple(
        sum(coroot(a)[k] for a in positive) / 2 for k in range(3)
    )
    assert rho_check == (Q(3), Q(2), Q(1))
    h = 6
    alpha_1 = sub(e1, e2)
    terms = [
        (inner(a, rho_check) / h, -int(inner(alpha_1, coroot(a))))
        for a in positive
        if inner(alpha_1, coroot(a)) != 0
    ]
    expected = word_from_terms(terms)
    assert expected.exponents == ((1, -1), (2, 1), (3, -1), (4, -1))
    assert lhs_word(systems[("B", 3)], 1, F_PRIME) == expected


def test_g2_second_variant_word(systems):
    w = lhs_word(systems[("G", 2)], 1, F_SECOND)
    assert (w.denominator, w.exponents) == (
        12,
        ((1, -2), (3, 3), (4, 1), (5, -1), (6, -3)),
    )


def test_g2_prime_variant_words(systems):
    s = systems[("G", 2)]
    w1 = lhs_word(s, 1, F_PRIME)
    assert (w1.denominator, w1.exponents) == (6, ((1, -1), (2, 1), (3, -1), (4, -1)))
    w2 = lhs_word(s, 2, F_PRIME)
    assert reduce_reflection(w2).exponents == ((1, 2), (2, -4))


def test_d_family_first_words(systems):
    # {n-2} / ({1} {n-1} {2n-4}) on the 1/(2n-2) grid
    for n in (4, 5, 6, 7, 8):
        w = lhs_word(systems[("D", n)], 1, F)
        assert w.denominator == 2 * n - 2
        assert dict(w.exponents) == {1: -1, n - 2: 1, n - 1: -1, 2 * n - 4: -1}


def test_e6_first_word(systems):
    w = lhs_word(systems[("E", 6)], 1, F)
    assert w.denominator == 12
    folded = reduce_reflection(w)
    reference = reduce_reflection(
        word_from_terms([(Q(1, 12), -1), (Q(8, 12), -1), (Q(3, 12), 1)])
    )
    assert folded == reference


def test_e8_first_word(systems):
    w = lhs_word(systems[("E", 8)], 1, F)
    assert w.denominator == 30
    reference = reduce_reflection(
        word_from_terms(
            [
                (Q(1, 30), -1), (Q(23, 30), -1), (Q(3, 30), 1), (Q(5, 30), 1),
                (Q(16, 30), 1), (Q(8, 30), -1), (Q(12, 30), -1), (Q(10, 30), -1),
            ]
        )
    )
    assert reduce_reflection(w) == reference


def test_diagram_symmetry(systems):
    e6 = systems[("E", 6)]
    assert lhs_word(e6, 1, F) == lhs_word(e6, 6, F)
    assert lhs_word(e6, 3, F) == lhs_word(e6, 5, F)
    d5 = systems[("D", 5)]
    assert lhs_word(d5, 4, F) == lhs_word(d5, 5, F)
    a6 = systems[("A", 6)]
    assert lhs_word(a6, 2, F) == lhs_word(a6, 5, F)


def test_b_family_fprime_first_words(systems):
    # gamma(1/2n)^-1 gamma((n-1)/2n) gamma(n/2n)^-1 gamma((2n-2)/2n)^-1
    for n in (3, 4, 5, 8, 12):
        w = lhs_word(systems[("B", n)], 1, F_PRIME)
        assert w.denominator == 2 * n
        assert dict(w.exponents) == {1: -1, n - 1: 1, n: -1, 2 * n - 2: -1}


def test_grid_denominators(systems):
    assert lhs_word(systems[("B", 4)], 1, F_SECOND).denominator == 14
    assert lhs_word(systems[("C", 4)], 1, F_SECOND).denominator == 10
    assert lhs_word(systems[("F", 4)], 1, F_SECOND).denominator == 18
    assert lhs_word(systems[("F", 4)], 1, F_PRIME).denominator == 12
    assert lhs_word(systems[("E", 7)], 1, F).denominator == 18


# -- right sides --------------------------------------------------------------


def test_k_constant_tables(systems):
    assert k_constant(systems[("A", 5)], F).is_one
    assert k_constant(systems[("D", 4)], F) == C((2, 2, 1))
    assert k_constant(systems[("D", 9)], F) == C((2, 12, 1))
    assert k_constant(systems[("E", 6)], F) == C((2, 6, 1), (3, 3, 1))
    assert k_constant(systems[("E", 7)], F) == C((2, 14, 1), (3, 6, 1))
    assert k_constant(systems[("E", 8)], F) == C((2, 26, 1), (3, 12, 1), (5, 5, 1))
    assert k_constant(systems[("B", 5)], F_PRIME) == C((2, 6, 1))
    assert k_constant(systems[("B", 5)], F_SECOND) == C((2, 5, 1))
    assert k_constant(systems[("C", 5)], F_PRIME) == C((2, 10, 1))
    assert k_constant(systems[("C", 5)], F_SECOND) == C((2, 16, 1))
    assert k_constant(systems[("F", 4)], F_PRIME) == C((2, 6, 1), (3, 3, 1))
    assert k_constant(systems[("F", 4)], F_SECOND) == C((2, 1, 1), (3, 3, 1))
    assert k_constant(systems[("G", 2)], F_PRIME) == C((2, 2, 1), (3, 6, 1))
    assert k_constant(systems[("G", 2)], F_SECOND) == C((2, 6, 1), (3, 21, 1))


def test_rhs_spot_values(systems):
    assert rhs_constant(systems[("E", 8)], 5, F) == C((2, -13, 15), (3, -2, 5), (5, 5, 6))
    assert rhs_constant(systems[("E", 7)], 4, F) == C((2, 11, 9), (3, -1, 3))
    assert rhs_constant(systems[("F", 4)], 2, F_PRIME) == C((2, -1, 2), (3, 3, 4))
    assert rhs_constant(systems[("B", 4)], 4, F_SECOND) == C((2, -10, 7))
    assert rhs_constant(systems[("G", 2)], 1, F_SECOND) == C((2, -1, 2), (3, -3, 4))
    assert rhs_constant(systems[("G", 2)], 2, F_PRIME) == C((2, 2, 3))
    for n in (2, 5, 9, 12):
        s = systems[("C", n)]
        for i in range(1, n + 1):
            assert rhs_constant(s, i, F_PRIME).is_one


def test_b_family_rhs_patterns(systems):
    for n in (3, 6, 10):
        s = systems[("B", n)]
        assert rhs_constant(s, 1, F_PRIME) == C((2, 2 - n, n))
        assert rhs_constant(s, 2, F_PRIME) == C((2, 2, n))
        assert rhs_constant(s, n, F_SECOND) == C((2, 6 - 4 * n, 2 * n - 1))


def test_c_family_second_variant_rhs(systems):
    for n in (3, 7, 12):
        s = systems[("C", n)]
        assert rhs_constant(s, 1, F_SECOND) == C((2, -2, n + 1))
        assert rhs_constant(s, n, F_SECOND) == C((2, n - 1, n + 1))


# -- hypotheses and errors ----------------------------------------------------


def test_variant_admissibility(systems):
    assert admissible(systems[("A", 3)], F)
    assert not admissible(systems[("B", 3)], F)
    assert admissible(systems[("B", 3)], F_PRIME)
    with pytest.raises(ValueError):
        admissible(systems[("A", 3)], "Fthird")


def test_f_variant_refused_off_hypothesis(systems):
    with pytest.raises(ValueError, match="simply laced"):
        lhs_word(systems[("B", 3)], 1, F)
    with pytest.raises(ValueError, match="simply laced"):
        rhs_constant(systems[("G", 2)], 1, F)


def test_index_range_checked(systems):
    for bad in (0, 4):
        with pytest.raises(ValueError):
            lhs_word(systems[("A", 3)], bad, F)


# -- verification driver ------------------------------------------------------


def test_verify_exact_mode(systems):
    report = verify(systems[("G", 2)], 1, F_SECOND, mode="exact")
    assert report.status == "proved_exact"
    assert report.passed
    assert report.certificate is not None
    assert report.numeric_residual is None
    assert report.wall_time_ms >= 0


def test_verify_numeric_mode(systems):
    report = verify(systems[("A", 5)], 3, F, mode="numeric")
    assert report.status == "numeric_only"
    assert report.passed
    assert report.certificate is None
    assert report.numeric_residual is not None


def test_verify_both_mode(systems):
    report = verify(systems[("F", 4)], 4, F_SECOND, mode="both")
    assert report.status == "proved_exact"
    assert report.certificate is not None
    assert report.numeric_residual is not None
    assert report.rhs == C((2, -10, 9), (3, -1, 3))


def test_verify_rejects_unknown_mode(systems):
    with pytest.raises(ValueError):
        verify(systems[("A", 2)], 1, F, mode="fast")


def test_verify_all_ordering_and_counts(systems):
    summary = verify_all([systems[("E", 6)]], mode="exact")
    assert len(summary.reports) == 18
    assert summary.counts == {"proved_exact": 18}
    assert summary.all_passed
    keys = [(r.index, r.variant) for r in summary.reports]
    assert keys == sorted(keys, key=lambda t: (t[0], VARIANTS.index(t[1])))


def test_verify_all_skips_inadmissible(systems):
    summary = verify_all([systems[("G", 2)]], mode="exact")
    assert len(summary.reports) == 4
    assert all(r.variant in (F_PRIME, F_SECOND) for r in summary.reports)


def test_verify_all_empty():
    summary = verify_all([])
    assert summary.reports == ()
    assert summary.all_passed
    assert summary.counts == {}


def test_simply_laced_variants_collapse(systems):
    s = systems[("A", 3)]
    for i in (1, 2, 3):
        w = lhs_word(s, i, F)
        assert lhs_word(s, i, F_PRIME) == w
        assert lhs_word(s, i, F_SECOND) == w
        r = rhs_constant(s, i, F)
        assert rhs_constant(s, i, F_PRIME) == r
        assert rhs_constant(s, i, F_SECOND) == r


def test_report_serialization(systems):
    report = verify(systems[("G", 2)], 1, F_PRIME, mode="both")
    obj = report.to_json_obj()
    assert obj["family"] == "G" and obj["rank"] == 2
    assert obj["status"] == "proved_exact"
    assert obj["lhs_word"]["N"] == 6
    assert obj["certificate"] is not None
    line = report.text_line()
    assert "proved_exact" in line and "G2" in line
