"""Completed-zeta engine: frozen oracle values, identities, residues.

Expected values were computed with mpmath at 30 digits (the independent
oracle) and frozen; the mpmath cross-checks are kept for the grid tests
where a frozen list would obscure the property being verified.
"""

import math

import mpmath as mp
import numpy as np
import pytest

from eisenspec.errors import NonConvergence, PoleProximity
from eisenspec.zeta import (DEFAULT_CONFIG, EvaluatorConfig, completed_L,
                            gamma_fn, local_L, primes_upto, ratio_L,
                            residue_at, zeta)

mp.mp.dps = 30

# frozen oracle values (mpmath, 30 digits)
ZETA_2 = 1.6449340668482264365
ZETA_3 = 1.2020569031595942854
SQRT_PI = 1.7724538509055160273
L_2 = 0.52359877559829887308      # pi/6
L_3 = 0.19131329801644807620      # zeta(3)/(2 pi)


def test_zeta_at_2():
    assert complex(zeta(2.0)) == pytest.approx(ZETA_2, abs=1e-13)


def test_zeta_at_0():
    assert complex(zeta(0.0)) == pytest.approx(-0.5, abs=1e-13)


def test_zeta_real_axis_is_real():
    val = complex(zeta(2.0 + 0.0j))
    assert abs(val.imag) < 1e-14


def test_zeta_against_oracle_grid():
    rng = np.random.default_rng(7)
    for _ in range(25):
        s = complex(rng.uniform(-6, 6), rng.uniform(-60, 60))
        if abs(s - 1.0) < 0.3:
            continue
        want = complex(mp.zeta(s))
        got = complex(zeta(s))
        assert got == pytest.approx(want, rel=1e-11, abs=1e-13)


def test_zeta_pole_guard():
    with pytest.raises(PoleProximity):
        zeta(1.0 + 1e-9j)


def test_gamma_values():
    assert complex(gamma_fn(1.0)) == pytest.approx(1.0, rel=1e-14)
    assert complex(gamma_fn(0.5)) == pytest.approx(SQRT_PI, rel=1e-13)
    assert complex(gamma_fn(3.0)) == pytest.approx(2.0, rel=1e-14)


def test_gamma_recurrence():
    rng = np.random.default_rng(11)
    for _ in range(20):
        s = complex(rng.uniform(-3, 4), rng.uniform(-30, 30))
        if abs(s.imag) < 0.2 and abs(s - round(s.real)) < 0.2:
            continue
        lhs = complex(gamma_fn(s + 1.0))
        rhs = s * complex(gamma_fn(s))
        assert lhs == pytest.approx(rhs, rel=1e-12)


def test_gamma_pole_guard():
    with pytest.raises(PoleProximity):
        gamma_fn(-2.0 + 1e-9j)


def test_completed_L_values():
    assert complex(completed_L(2.0)) == pytest.approx(L_2, rel=1e-13)
    assert complex(completed_L(3.0)) == pytest.approx(L_3, rel=1e-13)


def test_completed_L_functional_equation_pair():
    a = complex(completed_L(0.3 + 2.0j))
    b = complex(completed_L(0.7 - 2.0j))
    assert abs(a - b) < 1e-12


def test_completed_L_functional_equation_grid():
    rng = np.random.default_rng(3)
    pts = []
    while len(pts) < 200:
        s = complex(rng.uniform(-2, 3), rng.uniform(-40, 40))
        if abs(s) > 0.2 and abs(s - 1.0) > 0.2:
            pts.append(s)
    arr = np.array(pts)
    resid = np.max(np.abs(completed_L(arr) - completed_L(1.0 - arr)))
    assert resid <= 1e-10


def test_completed_L_conjugation():
    rng = np.random.default_rng(5)
    for _ in range(40):
        s = complex(rng.uniform(-2, 3), rng.uniform(0.3, 40))
        if min(abs(s), abs(s - 1.0)) < 0.25:
            continue
        assert abs(complex(completed_L(np.conj(s)))
                   - complex(completed_L(s)).conjugate()) < 1e-12


def test_local_L_value_and_error():
    assert complex(local_L(2, 1.0)) == pytest.approx(2.0, rel=1e-15)
    assert complex(local_L(5, 60.0)) == pytest.approx(1.0, abs=1e-15)
    with pytest.raises(ZeroDivisionError):
        local_L(2, 0.0)


def test_euler_product_converges_monotonically():
    target = complex(zeta(2.0)).real
    prev_err = math.inf
    for n in (100, 200, 400, 800):
        prod = 1.0
        for p in primes_upto(n):
            prod *= complex(local_L(p, 2.0)).real
        err = abs(prod - target)
        assert err <= 2.0 / n
        assert err < prev_err
        prev_err = err


def test_ratio_L_removable_origin():
    assert complex(ratio_L(0.0)) == pytest.approx(-1.0, abs=1e-14)
    # continuity into the series region
    assert complex(ratio_L(1e-7)) == pytest.approx(complex(ratio_L(2e-6)),
                                                   abs=1e-5)


def test_ratio_L_direct_quotient():
    want = complex(completed_L(1.5)) / complex(completed_L(2.5))
    assert complex(ratio_L(1.5)) == pytest.approx(want, rel=1e-14)


def test_ratio_L_unimodular_on_axis():
    t = np.linspace(-40.0, 40.0, 161)
    vals = np.abs(np.asarray(ratio_L(1j * t)))
    assert np.max(np.abs(vals - 1.0)) <= 1e-9


def test_ratio_L_pole_guard():
    with pytest.raises(PoleProximity):
        ratio_L(1.0 + 1e-9j)


def test_residue_of_L_at_1_and_0():
    res1 = residue_at(completed_L, 1.0, 0.3)
    res0 = residue_at(completed_L, 0.0, 0.3)
    assert abs(res1 - 1.0) <= 1e-10
    assert abs(res0 + 1.0) <= 1e-10


def test_residue_of_analytic_function_is_zero():
    res = residue_at(lambda s: ratio_L(s), 0.0, 0.1)
    assert abs(res) <= 1e-12


def test_residue_node_doubling_stable():
    a = residue_at(completed_L, 1.0, 0.3, nodes=64, max_nodes=128)
    b = residue_at(completed_L, 1.0, 0.3, nodes=128, max_nodes=256)
    assert abs(a - b) < 1e-10


def test_residue_nonconvergence_diagnostics():
    # a genuine branch cut defeats circle quadrature at any node count
    with pytest.raises(NonConvergence):
        residue_at(lambda s: np.sqrt(s) if np.ndim(s) else math.sqrt(s),
                   0.0, 0.5, tol=1e-14, max_nodes=256)


def test_config_is_honored():
    loose = EvaluatorConfig(pole_exclusion_radius=0.5)
    with pytest.raises(PoleProximity):
        completed_L(1.3, loose)
    assert complex(completed_L(1.3, DEFAULT_CONFIG)) != 0
