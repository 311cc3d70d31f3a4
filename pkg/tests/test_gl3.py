"""GL(3) residue data: sigma table, N(z) lemmas, transverse and double
residues, volume constants.  Closed forms and contour quadrature verify
each other in both directions."""

from fractions import Fraction

import numpy as np
import pytest

from eisenspec.gl3 import (GL3, delta_weight, double_residue_closed_forms,
                           double_residue_table, lambda_line, line_direction,
                           multiplicativity_residual, n_entry, n_matrix,
                           rank_one_residual, sigma, symmetry_residual,
                           transverse_direction, transverse_residue,
                           volume_constant, volume_factors)
from eisenspec.intertwine import m_scalar
from eisenspec.roots import RHO_CHECK, RootDatum
from eisenspec.zeta import completed_L

# frozen oracle values (mpmath): 1/L(2)^2 and 1/(L(2) L(3))
INV_L2_SQ = 3.6475626111241587
INV_L2_L3 = 9.9828884709684940


def _names():
    s1 = GL3.simple_reflection(1)
    s2 = GL3.simple_reflection(2)
    return {"s1": s1, "s2": s2, "s3": s1 * s2 * s1,
            "r1": s1 * s2, "r2": s2 * s1}


def test_sigma_table_matches_matrix_layout():
    n = _names()
    table = {(1, 1): "s1", (1, 2): "s3", (1, 3): "r2",
             (2, 1): "s3", (2, 2): "s2", (2, 3): "r1",
             (3, 1): "r1", (3, 2): "r2", (3, 3): "s3"}
    for (i, j), name in table.items():
        assert sigma(i, j) == n[name]


def test_sigma_defining_property():
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            img = sigma(i, j).act(delta_weight(i))
            assert img.coeffs == tuple(-c for c in delta_weight(j).coeffs)


def test_sigma_carries_directions():
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            img = sigma(i, j).act(line_direction(i))
            assert img.coeffs == line_direction(j).coeffs


def test_lines_are_orthogonal_pairs():
    for i in (1, 2, 3):
        assert delta_weight(i).inner(line_direction(i)) == 0


def test_lambda_line_invariants():
    for z in (0.0, 0.5j, 1.3j, 0.2 + 0.4j):
        lam1 = lambda_line(1, z)
        assert lam1.pairing(1) == pytest.approx(1.0)
        assert lam1.pairing(2) == pytest.approx(-0.5 - z)
        assert lambda_line(2, z).pairing(2) == pytest.approx(1.0)
        assert lambda_line(3, z).pairing(RHO_CHECK) == pytest.approx(1.0)
    assert lambda_line(3, 0.0).coeffs == (0.5 + 0.0j, 0.5 + 0.0j)  # rho/2


def test_line_pairing_coincidence_exact():
    # the collapse 1 + <lam_1, a2_check> = <lam_1, rho_check> as affine
    # functions of z, in exact rational arithmetic
    d1, e1 = delta_weight(1), line_direction(1)
    assert 1 + d1.pairing(2) == d1.pairing(RHO_CHECK) == Fraction(1, 2)
    assert e1.pairing(2) == e1.pairing(RHO_CHECK) == -1
    d2, e2 = delta_weight(2), line_direction(2)
    assert 1 + d2.pairing(1) == d2.pairing(RHO_CHECK) == Fraction(1, 2)
    assert e2.pairing(1) == e2.pairing(RHO_CHECK) == 1


def test_singular_elements_along_each_line():
    # {sigma_i1, sigma_i2, sigma_i3} are exactly the Weyl elements whose
    # inversion set contains the root cutting out Line_i
    line_root = {1: (1, 2), 2: (2, 3), 3: (1, 3)}
    for i in (1, 2, 3):
        expected = {w for w in GL3.weyl_group()
                    if line_root[i] in w.inversions()}
        assert {sigma(i, j) for j in (1, 2, 3)} == expected


def test_n_entry_closed_forms():
    z = 0.8j
    L = lambda u: complex(completed_L(u))
    assert n_entry(1, 1, z) == 1.0
    assert n_entry(2, 2, z) == 1.0
    assert n_entry(1, 2, z) == pytest.approx(L(-z - 0.5) / L(-z + 1.5), rel=1e-13)
    assert n_entry(1, 3, z) == pytest.approx(L(-z + 0.5) / L(-z + 1.5), rel=1e-13)
    assert n_entry(2, 1, z) == pytest.approx(L(z - 0.5) / L(z + 1.5), rel=1e-13)
    assert n_entry(3, 3, z) == pytest.approx(
        n_entry(3, 1, z) * n_entry(3, 2, z), rel=1e-13)


def test_nmatrix_lemmas_on_axis():
    rng = np.random.default_rng(9)
    pts = 1j * np.concatenate([[0.0, 0.7, 2.3, 1.1], rng.uniform(-3, 3, 16)])
    for z in pts:
        assert rank_one_residual(z) <= 1e-9
        assert symmetry_residual(z) <= 1e-12
        assert multiplicativity_residual(z) <= 1e-9


def test_multiplicativity_k_choice_consistent():
    z = 1.4j
    m = n_matrix(z)
    for i in range(3):
        for j in range(3):
            via_k1 = m[i, 0] * np.conj(m[j, 0])
            via_k2 = m[i, 1] * np.conj(m[j, 1])
            assert abs(via_k1 - via_k2) <= 1e-10


def test_transverse_residue_matches_closed_form():
    L2 = complex(completed_L(2.0))
    rng = np.random.default_rng(21)
    zs = 1j * np.concatenate([[0.5], rng.uniform(-2.5, 2.5, 19)])
    for z in zs:
        for i in (1, 2, 3):
            for j in (1, 2, 3):
                got = transverse_residue(i, j, z)
                want = n_entry(i, j, z) / L2
                assert abs(got - want) / abs(want) <= 1e-6


def test_transverse_residue_diagonal_value():
    got = transverse_residue(1, 1, 0.5j)
    want = 1.0 / complex(completed_L(2.0))
    assert got == pytest.approx(want, rel=1e-10)


def test_transverse_direction_normalization():
    idx = {1: 1, 2: 2, 3: RHO_CHECK}
    for i in (1, 2, 3):
        assert transverse_direction(i).pairing(idx[i]) == 1
        assert transverse_direction(i).inner(line_direction(i)) == 0


def test_double_residue_table_values():
    table = double_residue_table()
    forms = double_residue_closed_forms()
    expected_points = [(0.0, 1.0), (1.0, 0.0), (0.0, 1.0), (1.0, 0.0),
                       (1.0, 1.0)]
    for (w, pt, val), form, want_pt in zip(table, forms, expected_points):
        assert pt.coeffs == want_pt
        assert abs(val - form) / abs(form) <= 1e-6
    # numeric magnitudes against the frozen oracles
    assert table[0][2].real == pytest.approx(INV_L2_SQ, rel=1e-9)
    assert table[2][2].real == pytest.approx(-INV_L2_SQ, rel=1e-9)
    assert table[4][2].real == pytest.approx(INV_L2_L3, rel=1e-9)


def test_double_residue_cancellation():
    table = double_residue_table()
    cancel = sum(v for (_, pt, v) in table if pt.coeffs != (1.0, 1.0))
    assert abs(cancel) <= 1e-8


def test_volume_factors_and_values():
    assert volume_factors(RootDatum(2)) == [2]
    assert volume_factors(RootDatum(3)) == [2, 3]
    assert volume_factors(RootDatum(4)) == [2, 3, 4]
    L2 = float(np.real(completed_L(2.0)))
    L3 = float(np.real(completed_L(3.0)))
    L4 = float(np.real(completed_L(4.0)))
    assert volume_constant(RootDatum(2)) == pytest.approx(np.pi / 6.0, abs=1e-12)
    assert volume_constant(RootDatum(3)) == pytest.approx(L2 * L3, abs=1e-12)
    assert volume_constant(RootDatum(4)) == pytest.approx(L2 * L3 * L4, abs=1e-12)


def test_transverse_residue_consistent_with_m_scalar():
    # independent route: evaluate m on the circle by hand and average
    i, j, z = 2, 3, 0.9j
    w = sigma(i, j)
    base = lambda_line(i, z)
    xi = transverse_direction(i)
    nodes = 256
    theta = 2.0 * np.pi * np.arange(nodes) / nodes
    u = 0.25 * np.exp(1j * theta)
    vals = []
    for uu in u:
        lam = GL3.weight(tuple(complex(a) + uu * complex(b)
                               for a, b in zip(base.coeffs, xi.coeffs)))
        vals.append(m_scalar(w, lam))
    hand = np.mean(np.array(vals) * u)
    assert hand == pytest.approx(transverse_residue(i, j, z), rel=1e-9)
