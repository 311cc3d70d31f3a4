"""Contour-shift Parseval identities for GL(2) and GL(3)."""

import json

import numpy as np
import pytest

from eisenspec.parseval import (ContourSpec, PaleyWienerGaussian,
                                contribution_A, contribution_B,
                                contribution_C, decomposed_norm_gl2,
                                measure_constants, parseval_check_gl3,
                                shifted_norm_gl2, shifted_norm_gl3,
                                shifted_norm_gl3_terms)
from eisenspec.roots import RootDatum
from eisenspec.zeta import completed_L

GL2 = RootDatum(2)
GL3 = RootDatum(3)


def test_gl2_contour_independence():
    phi = PaleyWienerGaussian(GL2, 0.5)
    a = shifted_norm_gl2(phi, 1.5)
    b = shifted_norm_gl2(phi, 2.0)
    assert abs(a - b) <= 1e-8


def test_gl2_decomposition():
    phi = PaleyWienerGaussian(GL2, 0.5)
    shifted = shifted_norm_gl2(phi, 1.5)
    axis, residue = decomposed_norm_gl2(phi)
    assert abs(shifted - axis - residue) / abs(shifted) <= 1e-6
    # the residue term is |Phi(rho)|^2 / L(2) with rho at coordinate 1
    L2 = complex(completed_L(2.0)).real
    want = abs(phi.value(GL2.weight((1.0,)))) ** 2 / L2
    assert complex(residue).real == pytest.approx(want, rel=1e-13)


def test_gl2_profile_vanishing_at_rho():
    phi = PaleyWienerGaussian(GL2, 0.5, {(0,): -1.0, (1,): 1.0})  # z - 1
    shifted = shifted_norm_gl2(phi, 1.5)
    axis, residue = decomposed_norm_gl2(phi)
    assert residue == 0.0
    assert abs(shifted - axis) <= 1e-10


def test_gl2_axis_term_real_nonnegative_for_real_profile():
    phi = PaleyWienerGaussian(GL2, 0.6, {(0,): 0.4, (2,): 1.0})
    axis, _ = decomposed_norm_gl2(phi)
    assert abs(complex(axis).imag) <= 1e-12
    assert complex(axis).real >= 0.0


def test_gl2_seeded_profiles():
    rng = np.random.default_rng(42)
    for _ in range(5):
        phi = PaleyWienerGaussian.random(GL2, rng)
        shifted = shifted_norm_gl2(phi, 1.5)
        axis, residue = decomposed_norm_gl2(phi)
        assert abs(shifted - axis - residue) / abs(shifted) <= 1e-6


def test_gl3_contour_independence():
    phi = PaleyWienerGaussian(GL3, 0.5)
    a = shifted_norm_gl3(phi, (1.5, 1.5))
    b = shifted_norm_gl3(phi, (1.3, 1.8))
    assert abs(a - b) / abs(a) <= 1e-6


def test_contribution_A_two_forms_agree():
    phi = PaleyWienerGaussian(GL3, 0.5)
    direct, symmetric = contribution_A(phi)
    assert abs(direct - symmetric) / abs(direct) <= 1e-6
    assert abs(complex(direct).imag) / abs(direct) <= 1e-10
    assert complex(symmetric).real >= 0.0


def test_contribution_B_two_forms_agree_and_positive():
    rng = np.random.default_rng(5)
    for _ in range(3):
        phi = PaleyWienerGaussian.random(GL3, rng)
        direct, factored = contribution_B(phi)
        assert abs(direct - factored) <= 1e-8 * max(1.0, abs(direct))
        assert complex(factored).real >= 0.0
        assert abs(complex(direct).imag) <= 1e-10 * max(1.0, abs(direct))


def test_contribution_C_closed_form():
    phi = PaleyWienerGaussian(GL3, 0.5)  # Q = 1
    # <rho, rho> = 2, so Phi(rho) = exp(2 beta) and C = exp(4 beta)/(L2 L3)
    L2 = complex(completed_L(2.0)).real
    L3 = complex(completed_L(3.0)).real
    want = np.exp(4.0 * 0.5) / (L2 * L3)
    assert complex(contribution_C(phi)).real == pytest.approx(want, rel=1e-13)
    phi0 = PaleyWienerGaussian(GL3, 0.5, {(1, 0): 1.0, (0, 0): -1.0})
    assert abs(contribution_C(phi0)) == 0.0


def test_profile_vanishing_on_lines_kills_B_and_C():
    # Q = (z1 - 1)(z2 - 1)(z1 + z2 - 1), expanded
    coeffs = {(2, 1): 1.0, (1, 2): 1.0, (2, 0): -1.0, (0, 2): -1.0,
              (1, 1): -3.0, (1, 0): 2.0, (0, 1): 2.0, (0, 0): -1.0}
    # verify the expansion against the product form on samples first
    rng = np.random.default_rng(1)
    phi = PaleyWienerGaussian(GL3, 0.5, coeffs)
    for _ in range(20):
        z1 = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        z2 = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        want = (z1 - 1) * (z2 - 1) * (z1 + z2 - 1) * np.exp(
            0.5 * (2.0 / 3.0) * (z1 * z1 + z1 * z2 + z2 * z2))
        assert complex(phi.value_coords(z1, z2)) == pytest.approx(want, rel=1e-12)
    b_direct, _ = contribution_B(phi)
    assert abs(b_direct) <= 1e-12
    assert abs(contribution_C(phi)) <= 1e-25
    shifted = shifted_norm_gl3(phi, (1.5, 1.5))
    a_direct, _ = contribution_A(phi)
    assert abs(shifted - a_direct) / abs(shifted) <= 1e-4


def test_measure_constants_are_unity():
    phi = PaleyWienerGaussian(GL3, 0.5)
    kb, kc = measure_constants(phi)
    assert kb == pytest.approx(1.0, abs=1e-9)
    assert kc == pytest.approx(1.0, abs=1e-9)


def test_parseval_gl3_full_report():
    rng = np.random.default_rng(123)
    phi = PaleyWienerGaussian.random(GL3, rng)
    rep = parseval_check_gl3(phi, (1.5, 1.5), (1.3, 1.8))
    assert rep.residual_rel <= 1e-4
    assert abs(rep.shifted_alt - rep.shifted) / abs(rep.shifted) <= 1e-6
    assert abs(rep.kappa_B - 1.0) <= 1e-8
    assert abs(rep.kappa_C - 1.0) <= 1e-8
    # JSON round trip with complex values as [re, im]
    blob = json.loads(rep.to_json())
    assert blob["schema"] == "eisenspec.spectral_report/1"
    assert isinstance(blob["shifted"], list) and len(blob["shifted"]) == 2
    assert blob["residual_rel"] <= 1e-4


def test_identity_term_isolation():
    # the identity term of the shifted sum is the plain pairing
    # integral of Phi(lam) Phi*(-lam), quadratured independently here
    phi = PaleyWienerGaussian(GL3, 0.5, {(0, 0): 0.7, (1, 1): 0.3j})
    lam0 = (1.5, 1.5)
    terms = shifted_norm_gl3_terms(phi, lam0)
    star = phi.star()
    step, width = 0.1, np.sqrt(88.0 / phi.beta)
    n = int(np.ceil(width / step))
    t = step * np.arange(-n, n + 1)
    z1 = (lam0[0] + 1j * t)[:, None]
    z2 = (lam0[1] + 1j * t)[None, :]
    direct = np.sum(phi.value_coords(z1, z2)
                    * star.value_coords(-z1, -z2)) * (step / (2 * np.pi)) ** 2
    assert terms["e"] == pytest.approx(complex(direct), rel=1e-12)


def test_weyl_antisymmetric_profile_sign_bookkeeping():
    # Q = z1 + z2 is antisymmetric under the longest element, whose action
    # sends (z1, z2) to (-z2, -z1); on the axis the longest-element
    # integrand then equals minus m * |Phi|^2 pointwise, while the
    # identity integrand stays |Phi|^2
    from eisenspec.intertwine import m_scalar
    phi = PaleyWienerGaussian(GL3, 0.5, {(1, 0): 1.0, (0, 1): 1.0})
    s1, s2 = GL3.simple_reflection(1), GL3.simple_reflection(2)
    s3 = s1 * s2 * s1
    rng = np.random.default_rng(8)
    for _ in range(10):
        lam = GL3.weight((1j * rng.uniform(-3, 3), 1j * rng.uniform(-3, 3)))
        v = phi.value(lam)
        v_flip = phi.value(s3.act(lam))
        assert v_flip == pytest.approx(-v, rel=1e-13)
        ident_term = v * complex(v).conjugate()
        s3_term = m_scalar(s3, lam) * v * complex(v_flip).conjugate()
        assert s3_term == pytest.approx(-m_scalar(s3, lam) * ident_term,
                                        rel=1e-12)


def test_contour_spec_width_override():
    phi = PaleyWienerGaussian(GL2, 0.5)
    spec = ContourSpec((1.5,), half_width=14.0, step=0.05)
    a = shifted_norm_gl2(phi, 1.5, spec)
    b = shifted_norm_gl2(phi, 1.5)
    assert abs(a - b) <= 1e-9


def test_paley_wiener_star_is_conjugate_on_real_points():
    phi = PaleyWienerGaussian(GL3, 0.4, {(1, 0): 1.0 + 2.0j, (0, 0): 0.3j})
    star = phi.star()
    lam = GL3.weight((0.7, -0.2))
    assert star.value(lam) == pytest.approx(
        complex(phi.value(lam)).conjugate(), rel=1e-14)
