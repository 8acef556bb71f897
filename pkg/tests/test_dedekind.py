import math

import numpy as np
import pytest

import _oracles as orc
from _sampling import fe_sample_points
from zetaline.dedekind import (
    QuadraticFieldData,
    class_number_formula_residue,
    dedekind_tail_estimate,
    dirichlet_l,
    eta_kappa_fe_residual,
    eta_kappa_residue_at_one,
    eta_kappa_truncated,
    field_for_discriminant,
    find_L_zeros,
    h_kappa_truncated,
    ideal_counts,
    is_fundamental_discriminant,
    kronecker_chi,
    l_zero_count_estimate,
    load_field_table,
    make_product_spec,
    merged_zero_list,
    residue_check,
    rotated_completed_L,
    theta_L,
    xi_kappa,
    zeta_kappa,
    zeta_kappa_direct,
)
from zetaline.errors import DomainError, FormatError, PoleError

CATALAN = 0.9159655941772190
ZETA_K_2 = 1.5067030099229850  # zeta(2) * L(2, chi_-4)
PI_OVER_4 = 0.7853981633974483
Q5_RESIDUE = 0.4304089409640040
FIRST_L_ZERO_M4 = 6.0209489046975966


# -------------------------------------------------------------- characters


def test_fundamental_discriminants():
    assert is_fundamental_discriminant(-4)
    assert is_fundamental_discriminant(-3)
    assert is_fundamental_discriminant(5)
    assert is_fundamental_discriminant(8)
    assert is_fundamental_discriminant(12)
    assert not is_fundamental_discriminant(1)
    assert not is_fundamental_discriminant(9)
    assert not is_fundamental_discriminant(20)
    assert not is_fundamental_discriminant(-6)


def test_kronecker_mod_four():
    assert [kronecker_chi(-4, n) for n in (1, 3, 5, 7)] == [1, -1, 1, -1]
    assert kronecker_chi(-4, 2) == 0


def test_kronecker_unit():
    for d in (-4, -3, 5, 8):
        assert kronecker_chi(d, 1) == 1


def test_kronecker_two_mod_five():
    assert kronecker_chi(5, 2) == -1


def test_kronecker_matches_reference_tables():
    for d in (-4, -3, 5, 8):
        for n in range(1, 3 * abs(d)):
            assert kronecker_chi(d, n) == orc._kronecker_ref(d, n)


def test_kronecker_complete_multiplicativity():
    rng = np.random.default_rng(64)
    for d in (-4, 5, 8, -3):
        for _ in range(60):
            m = int(rng.integers(1, 500))
            n = int(rng.integers(1, 500))
            assert kronecker_chi(d, m * n) == kronecker_chi(d, m) * kronecker_chi(d, n)


def test_kronecker_periodicity():
    for d in (-4, 5, -3, 8):
        q = abs(d)
        for n in range(1, 40):
            assert kronecker_chi(d, n) == kronecker_chi(d, n + q)


# ------------------------------------------------------------ ideal counts


def test_ideal_counts_basic(field_qi):
    counts = ideal_counts(field_qi, 30)
    assert [counts.a(n) for n in (1, 2, 3, 5)] == [1, 1, 0, 2]
    assert counts.a(10) == counts.a(2) * counts.a(5) == 2
    assert counts.a(25) == 3


def test_ideal_counts_against_divisor_oracle(field_qi, field_q5):
    for field in (field_qi, field_q5):
        counts = ideal_counts(field, 200)
        for n in range(1, 201):
            assert counts.a(n) == orc.ideal_count_divisor_sum(field.discriminant, n)


def test_ideal_counts_range_guard(field_qi):
    counts = ideal_counts(field_qi, 10)
    with pytest.raises(DomainError):
        counts.a(11)
    with pytest.raises(DomainError):
        counts.a(0)


def test_ideal_counts_nonnegative_and_multiplicative(field_qi, field_q5):
    rng = np.random.default_rng(17)
    for field in (field_qi, field_q5):
        counts = ideal_counts(field, 10_000)
        assert counts.values[1:].min() >= 0
        hits = 0
        while hits < 50:
            m = int(rng.integers(2, 100))
            n = int(rng.integers(2, 100))
            if math.gcd(m, n) != 1:
                continue
            assert counts.a(m * n) == counts.a(m) * counts.a(n)
            hits += 1


# ------------------------------------------------- the factorised function


def test_dirichlet_l_catalan():
    assert dirichlet_l(-4, 2.0).real == pytest.approx(CATALAN, abs=1e-14)


def test_dirichlet_l_against_reference():
    rng = np.random.default_rng(23)
    for d in (-4, 5):
        for _ in range(25):
            s = complex(rng.uniform(0.2, 4.0), rng.uniform(-30.0, 30.0))
            ref = orc.mp_dirichlet_l(d, s)
            assert dirichlet_l(d, s) == pytest.approx(ref, abs=1e-11 * (1 + abs(ref)))


def test_zeta_kappa_at_two(field_qi):
    assert zeta_kappa(field_qi, 2.0).real == pytest.approx(ZETA_K_2, abs=1e-12)


def test_zeta_kappa_pole(field_qi):
    with pytest.raises(PoleError):
        zeta_kappa(field_qi, 1.0)


def test_zeta_kappa_conjugation(field_qi):
    s = complex(2.0, 3.0)
    assert abs(zeta_kappa(field_qi, s.conjugate()) - zeta_kappa(field_qi, s).conjugate()) < 1e-12


def test_zeta_kappa_reflection_against_reference(field_qi, field_q5):
    rng = np.random.default_rng(29)
    for field in (field_qi, field_q5):
        for _ in range(15):
            s = complex(rng.uniform(-4.0, -0.2), rng.uniform(-15.0, 15.0))
            ref = complex(
                orc.mp_zeta(s) * orc.mp_dirichlet_l(field.discriminant, s)
            )
            assert zeta_kappa(field, s) == pytest.approx(
                ref, abs=1e-9 * (1 + abs(ref))
            )


@pytest.mark.parametrize("s", [2.0, 3.0, complex(2.0, 5.0)])
def test_direct_sum_matches_factorisation(field_qi, s):
    assert abs(zeta_kappa_direct(field_qi, s) - zeta_kappa(field_qi, s)) < 1e-8


def test_direct_sum_requires_convergence(field_qi):
    with pytest.raises(DomainError):
        zeta_kappa_direct(field_qi, 0.8)


# ----------------------------------------------------------------- residue


def test_residue_check_gaussian_field(field_qi):
    numeric, formula, rel_err = residue_check(field_qi)
    assert formula == pytest.approx(PI_OVER_4, rel=1e-15)
    assert rel_err < 1e-4


def test_residue_check_real_field(field_q5):
    numeric, formula, rel_err = residue_check(field_q5)
    assert formula == pytest.approx(Q5_RESIDUE, rel=1e-12)
    assert rel_err < 1e-4


def test_residue_formula_degenerate_rational_parameters():
    # r1=1, r2=0, class number 1, regulator 1, w=2, |D|=1 collapses to 1,
    # the residue of the plain zeta function
    assert class_number_formula_residue(1, 0, 1, 1.0, 2, 1.0) == 1.0


def test_field_data_validation():
    with pytest.raises(DomainError):
        QuadraticFieldData(-4, 2, 0, 1, 1.0, 4)  # wrong signature for D<0
    with pytest.raises(DomainError):
        QuadraticFieldData(5, 2, 0, 1, 0.48, 4)  # w must be 2 for D>0
    with pytest.raises(DomainError):
        QuadraticFieldData(9, 0, 1, 1, 1.0, 2)  # not fundamental


def test_field_table_loading(tmp_path):
    path = tmp_path / "fields.json"
    path.write_text(
        '[{"discriminant": -7, "r1": 0, "r2": 1, "class_number": 1,'
        ' "regulator": 1.0, "roots_of_unity": 2}]'
    )
    table = load_field_table(path)
    assert table[-7].conductor == 7
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(FormatError):
        load_field_table(bad)
    bad.write_text('[{"discriminant": -7}]')
    with pytest.raises(FormatError):
        load_field_table(bad)


def test_unknown_discriminant_rejected():
    with pytest.raises(DomainError):
        field_for_discriminant(13)


# ------------------------------------------------------- completed function


def test_xi_kappa_symmetry_point(field_qi):
    s = complex(2.0, 2.0)
    v = xi_kappa(field_qi, s)
    assert abs(v - xi_kappa(field_qi, 1.0 - s)) < 1e-9 * (1.0 + abs(v))


def test_xi_kappa_symmetry_sample(field_qi, field_q5):
    rng = np.random.default_rng(37)
    for field in (field_qi, field_q5):
        for s in fe_sample_points(rng, 25, re_lo=-3.0, re_hi=4.0, im_max=12.0):
            v = xi_kappa(field, s)
            assert abs(v - xi_kappa(field, 1.0 - s)) < 1e-9 * (1.0 + abs(v))


def test_xi_kappa_limit_points(field_qi):
    expected = field_qi.h_leading_constant()
    assert xi_kappa(field_qi, 0.0) == expected
    assert xi_kappa(field_qi, 1.0) == expected


# ------------------------------------------------------ the h/eta analogue


def test_h_kappa_constant_at_one(field_qi, merged_qi):
    for n in (1, 4, 50):
        spec = make_product_spec(field_qi, merged_qi, n)
        assert h_kappa_truncated(field_qi, spec, 1.0) == 0.25


def test_h_kappa_symmetry(field_q5, merged_q5):
    spec = make_product_spec(field_q5, merged_q5, 40)
    rng = np.random.default_rng(41)
    for _ in range(40):
        s = complex(rng.uniform(-10, 10), rng.uniform(-10, 10))
        v = h_kappa_truncated(field_q5, spec, s)
        assert abs(v - h_kappa_truncated(field_q5, spec, 1.0 - s)) <= 1e-12 * (
            1.0 + abs(v)
        )


def test_h_kappa_spec_mismatch_rejected(field_qi, merged_qi):
    from zetaline.eta import TruncatedProductSpec

    wrong = TruncatedProductSpec(merged_qi, 4, leading_constant=0.5)
    with pytest.raises(DomainError):
        h_kappa_truncated(field_qi, wrong, 2.0)


def test_eta_kappa_trivial_zeros(field_qi, field_q5, merged_qi, merged_q5):
    spec_i = make_product_spec(field_qi, merged_qi, 10)
    for s in (-1.0, -2.0, -3.0, -7.0):
        assert eta_kappa_truncated(field_qi, spec_i, s) == 0.0
    spec_r = make_product_spec(field_q5, merged_q5, 10)
    for s in (0.0, -2.0, -4.0):
        assert eta_kappa_truncated(field_q5, spec_r, s) == 0.0
    # 0 is forced for real fields only; for D < 0 it is a regular point
    assert eta_kappa_truncated(field_qi, spec_i, 0.0) != 0.0


def test_eta_kappa_pole(field_qi, merged_qi):
    spec = make_product_spec(field_qi, merged_qi, 5)
    with pytest.raises(PoleError):
        eta_kappa_truncated(field_qi, spec, 1.0)


def test_eta_kappa_fe_residuals(field_qi, field_q5, merged_qi, merged_q5):
    rng = np.random.default_rng(53)
    for field, merged in ((field_qi, merged_qi), (field_q5, merged_q5)):
        for n in (10, 100):
            spec = make_product_spec(field, merged, n)
            for s in fe_sample_points(rng, 25, re_lo=-4.0, re_hi=5.0, im_max=20.0):
                assert eta_kappa_fe_residual(field, spec, s) < 1e-9


def test_eta_kappa_residue_gaussian(field_qi, merged_qi):
    spec = make_product_spec(field_qi, merged_qi, 20)
    assert eta_kappa_residue_at_one(field_qi, spec) == pytest.approx(
        PI_OVER_4, rel=1e-6
    )
    s = 1.0 + 1e-6
    numeric = ((s - 1.0) * eta_kappa_truncated(field_qi, spec, s)).real
    assert numeric == pytest.approx(PI_OVER_4, rel=1e-4)


def test_residue_consistency_chain(field_qi, merged_qi):
    # class-number formula == near-pole residue of zeta_kappa == eta residue
    numeric, formula, rel_err = residue_check(field_qi)
    assert rel_err < 1e-4
    spec = make_product_spec(field_qi, merged_qi, 30)
    assert eta_kappa_residue_at_one(field_qi, spec) == pytest.approx(
        formula, rel=1e-4
    )


def test_eta_kappa_against_high_precision_rebuild(field_qi, field_q5, merged_qi, merged_q5):
    # rebuild from the ungrouped prefactors at 30 digits; validates the
    # grouped-denominator assembly used in double precision
    import mpmath as mp

    mp.mp.dps = 30
    for field, merged in ((field_qi, merged_qi), (field_q5, merged_q5)):
        spec = make_product_spec(field, merged, 40)
        ts = [mp.mpf(float(t)) for t in merged.ordinates[:40]]
        const = mp.mpf(field.h_leading_constant())
        q = mp.mpf(field.conductor)
        for s in (complex(2.0, 0.0), complex(0.4, 3.0), complex(-1.3, 1.5)):
            sm = mp.mpc(s.real, s.imag)
            w = sm - sm * sm
            product = const
            for t in ts:
                product *= 1 - w / (mp.mpf(0.25) + t * t)
            gamma_r = mp.power(mp.pi, -sm / 2) * mp.gamma(sm / 2)
            gamma_c = 2 * mp.power(2 * mp.pi, -sm) * mp.gamma(sm)
            denom = (sm / 2) * (sm - 1) * mp.power(q, sm / 2)
            denom *= gamma_r**field.r1 * gamma_c**field.r2
            reference = complex(product / denom)
            mine = eta_kappa_truncated(field, spec, s)
            assert mine == pytest.approx(reference, rel=1e-12)


def test_dedekind_tail_estimate_positive(field_qi, merged_qi):
    spec = make_product_spec(field_qi, merged_qi, 50)
    assert dedekind_tail_estimate(field_qi, spec) > 0.0


# -------------------------------------------------------------- L zeros


def test_first_L_zero():
    zl = find_L_zeros(-4, 10.2)
    assert len(zl) == 1
    assert zl.ordinates[0] == pytest.approx(FIRST_L_ZERO_M4, abs=1e-8)


def test_L_zero_counts_match_estimate():
    for d, t_max in ((-4, 30.0), (5, 30.0)):
        zl = find_L_zeros(d, t_max)
        assert abs(len(zl) - l_zero_count_estimate(t_max, d)) <= 1


def test_L_zeros_against_reference_list():
    zl = find_L_zeros(-4, 15.0)
    expected = [6.0209489046975966, 10.2437703041665550, 12.9880980123124230]
    assert np.allclose(zl.ordinates, expected, atol=1e-7)


def test_rotated_completed_L_is_real():
    value = rotated_completed_L(-4, 3.0)
    assert abs(value.imag) < 1e-8 * (1.0 + abs(value))


def test_find_L_zeros_guards():
    with pytest.raises(DomainError):
        find_L_zeros(9, 20.0)
    with pytest.raises(DomainError):
        find_L_zeros(-4, 5.0)


def test_L_finder_completeness_error(monkeypatch):
    import zetaline.dedekind as dkmod

    monkeypatch.setattr(
        dkmod, "_z_l_batch", lambda ts, d, cfg: np.ones_like(np.asarray(ts))
    )
    from zetaline.errors import CompletenessError

    with pytest.raises(CompletenessError):
        find_L_zeros(-4, 40.0)


def test_merged_list_gaussian_field(field_qi):
    merged = merged_zero_list(field_qi, 15.0)
    expected = [6.0209489, 10.2437703, 12.9880980, 14.1347251]
    assert len(merged) == 4
    assert np.allclose(merged.ordinates, expected, atol=1e-6)
    assert np.all(np.diff(merged.ordinates) > 0.0)


def test_theta_L_monotone_tail():
    ts = np.linspace(20.0, 120.0, 60)
    vals = [theta_L(float(t), -4) for t in ts]
    assert all(b > a for a, b in zip(vals, vals[1:]))
