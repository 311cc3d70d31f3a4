"""Scalar intertwining factors for K-invariant data on split GL(n).

On the line of K-invariant constant functions the intertwining operator
attached to a Weyl element w acts by the scalar

    m(w, lam) = prod over {alpha > 0 : w(alpha) < 0} of
                L(<lam, alpha_check>) / L(1 + <lam, alpha_check>),

a product of completed-zeta ratios over the inversion set of w.  The two
structural properties verified numerically downstream are the cocycle
identity m(st, lam) = m(s, t lam) m(t, lam) and unimodularity on the
purely imaginary axis.

The quasi-split SU(3) local factor from the unramified rank-one computation
is included for p != 2 (the p = 2 case is not specified and is rejected).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, PoleProximity
from .roots import RootDatum, Weight, WeylElement
from .zeta import DEFAULT_CONFIG, EvaluatorConfig, ratio_L

__all__ = [
    "ScalarIntertwiner",
    "m_scalar",
    "cocycle_check",
    "unitarity_check",
    "su3_local_factor",
]


@dataclass(frozen=True)
class ScalarIntertwiner:
    """The scalar by which M(w, .) acts on constant K-invariant data."""

    datum: RootDatum
    w: WeylElement

    def factor_arguments(self, lam: Weight):
        """The ratio arguments <lam, alpha_check> over the inversion set."""
        return [lam.pair_root(root) for root in sorted(self.w.inversions())]

    def __call__(self, lam: Weight, config: EvaluatorConfig = DEFAULT_CONFIG):
        value = 1.0 + 0.0j
        for root, arg in zip(sorted(self.w.inversions()),
                             self.factor_arguments(lam)):
            arg = complex(arg)
            if abs(arg - 1.0) < config.pole_exclusion_radius:
                raise PoleProximity(
                    f"m_scalar: factor for root {root} has argument {arg} "
                    f"within exclusion radius of the pole at 1",
                    point=arg, pole=1.0)
            value *= complex(ratio_L(arg, config))
        return value


def m_scalar(w: WeylElement, lam: Weight,
             config: EvaluatorConfig = DEFAULT_CONFIG) -> complex:
    """Product of completed-zeta ratios over the inversion set of w."""
    return ScalarIntertwiner(w.datum, w)(lam, config)


def cocycle_check(s: WeylElement, t: WeylElement, lam: Weight,
                  config: EvaluatorConfig = DEFAULT_CONFIG) -> float:
    """|m(st, lam) - m(s, t lam) m(t, lam)|; zero in exact arithmetic."""
    lhs = m_scalar(s * t, lam, config)
    rhs = m_scalar(s, t.act(lam), config) * m_scalar(t, lam, config)
    return abs(lhs - rhs)


def unitarity_check(w: WeylElement, y, datum: RootDatum | None = None,
                    config: EvaluatorConfig = DEFAULT_CONFIG) -> float:
    """| |m(w, i y)| - 1 | for a real coordinate vector y."""
    datum = datum or w.datum
    lam = datum.weight(tuple(1j * float(c) for c in np.atleast_1d(y)))
    return abs(abs(m_scalar(w, lam, config)) - 1.0)


def su3_local_factor(p: int, sigma) -> complex:
    """Local intertwining factor of quasi-split unramified SU(3), p != 2.

    (1 - p^(-2(sigma+1))) (1 + p^(-2 sigma - 1))
    --------------------------------------------
       (1 - p^(-2 sigma)) (1 + p^(-2 sigma))
    """
    if p == 2:
        raise DomainError("su3_local_factor is specified only for p != 2")
    s = complex(sigma)
    x2 = np.exp(-2.0 * s * np.log(float(p)))  # p^(-2 sigma)
    num = (1.0 - x2 / p ** 2) * (1.0 + x2 / p)
    den = (1.0 - x2) * (1.0 + x2)
    if abs(den) < 1e-15:
        raise ZeroDivisionError(
            f"su3_local_factor: denominator vanishes at sigma = {sigma}")
    return complex(num / den)
