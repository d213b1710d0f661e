from fractions import Fraction

import pytest

from koszul import (
    CoefficientTable,
    DifferentialForm,
    Polynomial,
    SymplecticSpace,
    alt_m,
    bracket_coefficient,
    d,
    d_poly,
    l_bracket,
    parse_form,
    series_coefficient,
    symplectic_family,
    tilde_l,
    verify_alt_m_identity,
    verify_chain_identity,
    verify_coefficient_recursions,
    verify_quotient_congruence,
    verify_strict_morphism,
)
from koszul.brackets import m_k

from _util import rand_form, rand_poly


@pytest.fixture(scope="module")
def s1():
    return SymplecticSpace(1)


@pytest.fixture(scope="module")
def s2():
    return SymplecticSpace(2)


# -- alt_m ------------------------------------------------------------------


def test_alt_m_arity_one_is_identity(s1):
    f = rand_poly("am1", 0, 2)
    assert alt_m(s1, [f]) == DifferentialForm.from_polynomial(f)


def test_alt_m_arity_two_formula(s1):
    f = rand_poly("am2-f", 1, 2)
    g = rand_poly("am2-g", 1, 2)
    expected = (d_poly(g) * f - d_poly(f) * g) * Fraction(1, 2)
    assert alt_m(s1, [f, g]) == expected


def test_alt_m_arity_three_formula(s2):
    f, g, h = (rand_poly(f"am3-{i}", 2, 4) for i in range(3))
    expected = (
        d_poly(g).wedge(d_poly(h)) * f
        - d_poly(f).wedge(d_poly(h)) * g
        + d_poly(f).wedge(d_poly(g)) * h
    ) * Fraction(1, 3)
    assert alt_m(s2, [f, g, h]) == expected


def test_alt_m_fully_antisymmetric(s2):
    fs = [rand_poly(f"ama-{i}", 5, 4) for i in range(4)]
    base = alt_m(s2, fs)
    for i in range(3):
        swapped = list(fs)
        swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
        assert alt_m(s2, swapped) == -base


def test_d_alt_m_equals_d_m(s2):
    for k in (2, 3, 4):
        fs = [rand_poly(f"dm-{k}-{i}", k, 4) for i in range(k)]
        assert d(alt_m(s2, fs)) == d(m_k(s2, fs))


# -- coefficients --------------------------------------------------------------


def test_anchored_coefficient_values():
    assert bracket_coefficient(2, 0) == 1
    assert bracket_coefficient(3, 1) == Fraction(1, 2)
    assert bracket_coefficient(4, 1) == Fraction(1, 3)
    assert bracket_coefficient(5, 1) == Fraction(1, 4)
    assert bracket_coefficient(5, 2) == Fraction(1, 24)


def test_coefficient_domain():
    with pytest.raises(ValueError):
        bracket_coefficient(1, 0)
    with pytest.raises(ValueError):
        bracket_coefficient(4, 2)  # 2j > k-1
    with pytest.raises(ValueError):
        bracket_coefficient(3, -1)
    # extended domain for the recursion checks
    assert series_coefficient(4, 2) == Fraction(1, 12)
    with pytest.raises(ValueError):
        series_coefficient(4, 4)


def test_first_recursion_example():
    # 3 a(2,0) = 2 a(3,0) + 2 a(3,1)
    assert 3 * series_coefficient(2, 0) == 2 * series_coefficient(3, 0) + 2 * series_coefficient(3, 1)


def test_inductive_chain_reproduces_one_third():
    a = series_coefficient(2, 0)
    a = Fraction(2 - 0, 2) * a  # -> a(3,0)
    a = a / (1 * (3 - 1))  # -> a(3,1)
    a = Fraction(3 - 1, 3) * a  # -> a(4,1)
    assert a == Fraction(1, 3) == bracket_coefficient(4, 1)


def test_recursions_exact_to_k9():
    report = verify_coefficient_recursions(9)
    assert report.ok
    assert report.k_max == 9
    # every k in 2..9 with the odd-k boundary j = (k-1)/2 included: 88 equalities
    assert report.checked == 88


def test_recursions_reject_small_k():
    with pytest.raises(ValueError):
        verify_coefficient_recursions(1)


# -- tilde_l ---------------------------------------------------------------------


def test_tilde_l_arity_two_is_alt_m(s1):
    f = rand_poly("tl2-f", 0, 2)
    g = rand_poly("tl2-g", 0, 2)
    assert tilde_l(s1, [f, g]) == alt_m(s1, [f, g])


def test_tilde_l_arity_three_operator_form(s2):
    fs = [rand_poly(f"tl3-{i}", 1, 4) for i in range(3)]
    base = alt_m(s2, fs)
    expected = -(base + s2.L(s2.Lam(base)) * Fraction(1, 2))
    assert tilde_l(s2, fs) == expected


def test_tilde_l_frozen_value_on_r2(s1):
    one = Polynomial.constant(2, 1)
    got = tilde_l(s1, [one, s1.coordinate(0), s1.coordinate(1)])
    assert got == parse_form("-1/2 dx1^dx2", 2)


def test_tilde_l_antisymmetric(s2):
    fs = [rand_poly(f"tla-{i}", 3, 4) for i in range(4)]
    base = tilde_l(s2, fs)
    swapped = [fs[1], fs[0], fs[2], fs[3]]
    assert tilde_l(s2, swapped) == -base


def test_tilde_l_requires_arity_two():
    with pytest.raises(ValueError):
        tilde_l(SymplecticSpace(1), [Polynomial.constant(2, 1)])


# -- l_bracket ---------------------------------------------------------------------


def test_l1_is_koszul_differential_below_ground(s2):
    eta = rand_form("l1-eta", 0, 4, 2)
    out = l_bracket(s2, 1, [eta])
    assert out.form == s2.delta(eta)
    assert out.ldegree == 0


def test_l1_truncated_on_ground_layer(s2):
    # the complex stops at 1-forms, so the family differential vanishes there
    alpha = rand_form("l1-alpha", 0, 4, 1)
    assert l_bracket(s2, 1, [alpha]).form.is_zero()


def test_l2_worked_example(s1):
    a = parse_form("v1 dx2", 2)
    b = parse_form("1/2 v1^2 dx2", 2)
    out = l_bracket(s1, 2, [a, b])
    assert out.form == parse_form("1/2 dx1", 2)
    assert out.ldegree == 0


def test_l4_vanishes_on_r2(s1):
    args = [rand_form(f"l4-{i}", i, 2, 1) for i in range(4)]
    assert l_bracket(s1, 4, args).form.is_zero()


def test_l_bracket_repeated_argument_zero(s2):
    a = rand_form("rep", 0, 4, 1)
    b = rand_form("rep-b", 0, 4, 1)
    assert l_bracket(s2, 3, [a, a, b]).form.is_zero()


# -- chain identity ------------------------------------------------------------------


@pytest.mark.parametrize("n,k", [(1, 2), (2, 2), (2, 3), (2, 4)])
def test_chain_identity_random(n, k):
    s = SymplecticSpace(n)
    for t in range(8):
        fs = [rand_poly(f"ch-{n}-{k}-{i}", t, s.dim) for i in range(k + 1)]
        assert verify_chain_identity(s, k, fs).is_zero()


def test_chain_identity_perturbed_coefficient_fails(s1):
    table = CoefficientTable.perturbed(3, 1)  # a(3,1) -> 1/2 + 1
    hit = False
    for t in range(6):
        fs = [rand_poly(f"chp-{i}", t, 2) for i in range(3)]
        if not verify_chain_identity(s1, 2, fs, table).is_zero():
            hit = True
            break
    assert hit


@pytest.mark.parametrize("n", [1, 2])
def test_mutation_sensitivity_every_coefficient(n):
    s = SymplecticSpace(n)
    for k in range(2, 2 * n + 2):
        for j in range(0, (k - 1) // 2 + 1):
            table = CoefficientTable.perturbed(k, j)
            broke = False
            for t in range(6):
                for kk in range(max(2, k - 1), min(2 * n, k) + 1):
                    fs = [rand_poly(f"mut-{n}-{k}-{j}-{kk}-{i}", t, s.dim) for i in range(kk + 1)]
                    if not verify_chain_identity(s, kk, fs, table).is_zero():
                        broke = True
                        break
                if broke:
                    break
            assert broke, f"perturbing a({k},{j}) left every sampled identity intact"


def test_chain_identity_validates_arguments(s1):
    with pytest.raises(ValueError):
        verify_chain_identity(s1, 1, [rand_poly("bad", 0, 2)] * 2)
    with pytest.raises(ValueError):
        verify_chain_identity(s1, 2, [rand_poly("bad2", 0, 2)] * 2)


# -- the alt_m derivative identity ------------------------------------------------------


@pytest.mark.parametrize("n,k", [(1, 1), (1, 2), (1, 4), (2, 2), (2, 3), (2, 5)])
def test_alt_m_identity_random(n, k):
    s = SymplecticSpace(n)
    for t in range(6):
        fs = [rand_poly(f"alt-{n}-{k}-{i}", t, s.dim) for i in range(k + 1)]
        assert verify_alt_m_identity(s, k, fs).is_zero()


def test_alt_m_identity_constants_trivial(s2):
    fs = [Polynomial.constant(4, c) for c in (1, 2, 3)]
    assert verify_alt_m_identity(s2, 2, fs).is_zero()


# -- morphism and quotient congruence -----------------------------------------------------


def test_strict_morphism_random(s2):
    for t in range(10):
        alpha = rand_form("mor-a", t, 4, 1)
        beta = rand_form("mor-b", t, 4, 1)
        assert verify_strict_morphism(s2, alpha, beta).is_zero()


def test_strict_morphism_delta_closed_argument(s2):
    # delta-closed alpha: both sides vanish
    alpha = d_poly(rand_poly("mc", 0, 4))  # delta(df) = 0 since delta d = -d delta
    assert s2.delta(alpha).is_zero()
    beta = rand_form("mc-b", 0, 4, 1)
    assert verify_strict_morphism(s2, alpha, beta).is_zero()


def test_strict_morphism_delta_exact_argument(s2):
    eta = rand_form("me", 0, 4, 2)
    alpha = s2.delta(eta)
    beta = rand_form("me-b", 0, 4, 1)
    assert verify_strict_morphism(s2, alpha, beta).is_zero()


def test_quotient_congruence_random(s1, s2):
    for s in (s1, s2):
        for t in range(8):
            alpha = rand_form("qc-a", t, s.dim, 1)
            beta = rand_form("qc-b", t, s.dim, 1)
            assert verify_quotient_congruence(s, alpha, beta).is_zero()


def test_quotient_congruence_constant_delta(s1):
    # delta(beta) constant: the witness collapses to half d(c f)
    alpha = rand_form("qcc-a", 0, 2, 1)
    beta = DifferentialForm.basis(2, (1,), s1.coordinate(0))  # delta(v1 dx2) = 1
    assert s1.delta(beta) == DifferentialForm.from_polynomial(Polynomial.constant(2, 1))
    assert verify_quotient_congruence(s1, alpha, beta).is_zero()


def test_quotient_congruence_equal_arguments(s1):
    alpha = rand_form("qce", 0, 2, 1)
    assert verify_quotient_congruence(s1, alpha, alpha).is_zero()
