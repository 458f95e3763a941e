import math

import pytest

import fockvolt as fv


def test_weight_values():
    w = fv.Weight(0)
    assert w.psi(1.0) == pytest.approx(0.5)
    w1 = fv.Weight(1)
    assert w1.psi(1.0) == pytest.approx(0.5 - math.log(2.0))
    assert w1.psi_prime(0.0) == pytest.approx(-1.0)
    assert w1.normalizer(3.0) == pytest.approx(4.0)
    with pytest.raises(Exception):
        w.psi(-1.0)


def test_volterra_on_polynomials_is_exact():
    g = fv.Poly.monomial(2)  # z^2, so g' = 2z
    one = fv.EntireFunction.constant(1.0)
    image = fv.volterra_apply(g, one)
    assert image.is_poly
    assert image(3.0 + 0.0j) == pytest.approx(9.0 + 0.0j)


def test_norms_match_closed_forms():
    w = fv.Weight(0)
    ident = fv.EntireFunction.identity()
    assert fv.norm_sup(ident, w).value == pytest.approx(math.exp(-0.5), rel=1e-9)
    assert fv.norm_p(ident, w, 2.0).value == pytest.approx(math.sqrt(math.pi), rel=1e-8)
    assert fv.norm_sup_lp(ident, w).value == pytest.approx(1.0, rel=1e-9)


def test_symbolic_divergence_certificate():
    hot = fv.EntireFunction.exp_poly(fv.Poly.constant(1.0), fv.Poly.monomial(2, 0.7))
    res = fv.norm_sup(hot, fv.Weight(0))
    assert not res.finite
    assert "grows" in res.growth_report


def test_kernel_anchor():
    model = fv.KernelModel.build(fv.Weight(0), 60)
    assert model.eval(1.0 + 0.0j, 2.0 + 0.0j) == pytest.approx(math.exp(2.0), rel=1e-9)
    assert model.norm_sq(2.0 + 0.0j) == pytest.approx(math.exp(4.0), rel=1e-9)
    assert model.moments[5] == pytest.approx(120.0, rel=1e-11)


def test_classifier_verdicts():
    w = fv.Weight(0)
    assert fv.classify_into_sup(fv.Poly.monomial(2), w).bounded
    assert not fv.classify_into_sup(fv.Poly.monomial(2), w).compact
    assert not fv.classify_into_sup(fv.Poly.monomial(3), w).bounded
    v = fv.classify_from_sup(fv.Poly.identity(), w, 3.0)
    assert v.bounded and v.compact
    assert v.fitted_limit == pytest.approx(math.pi, rel=0.01)


def test_spectrum_and_membership():
    g = fv.Poly.monomial(2)
    w = fv.Weight(1)
    assert fv.spectrum_of(g, w).radius == 2.0
    inside = fv.in_spectrum(g, w, 1.0 + 0.0j)
    assert inside.status == fv.SpectralStatus.InSpectrum
    assert inside.raw_membership.verdict == fv.MembershipVerdict.NonMember
    outside = fv.in_spectrum(g, w, 3.0 + 0.0j)
    assert outside.status == fv.SpectralStatus.Resolvent
    assert outside.cross_check_ok


def test_resolvent_solves_the_equation():
    g = fv.Poly.monomial(2)
    lam = 3.0 + 0.0j
    h = fv.EntireFunction.identity()
    f = fv.resolvent_apply(g, lam, h)
    assert f.value_at_zero() == pytest.approx(0.0)
    assert fv.resolvent_defect(g, lam, h, f, 1.0 + 1.0j) < 1e-7


def test_resolvent_blowup_direction():
    g = fv.Poly.monomial(2)
    w = fv.Weight(1)
    one = fv.EntireFunction.constant(1.0)
    near = fv.norm_sup_lp(fv.resolvent_apply(g, 2.0625 + 0.0j, one), w).value
    far = fv.norm_sup_lp(fv.resolvent_apply(g, 2.5 + 0.0j, one), w).value
    assert near > far


def test_acceptance_criterion_hook():
    res = fv.run_criterion(7)
    assert res.passed
