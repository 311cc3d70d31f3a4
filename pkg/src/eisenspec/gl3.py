"""GL(3) residue data: singular lines, the rank-one matrix N(z), and volumes.

For GL(3) the K-invariant intertwining scalars m(w, lam) are singular along
the three affine lines

    Line_i = { lam : <lam, beta_check_i> = 1 },   beta_check = (a1, a2, rho),

parameterized as lam_i(z) = delta_i + z e_i with delta_i half the i-th
positive root and e_i orthogonal to delta_i:

    e_1 = -w_2,   e_2 = w_1,   e_3 = w_2 - w_1.

For each target j there is a unique Weyl element sigma_ij with
sigma_ij(delta_i) = -delta_j, and the transverse residue of m(sigma_ij, .)
along Line_i equals n_ij(z) / L(2).  The 3x3 matrix N(z) = (n_ij(z)) has
closed-form entries in completed-zeta ratios; it is rank one, satisfies
n_ij(z) = n_ji(-z), and on the imaginary axis the Hermitian multiplicativity
n_ij = n_ik conj(n_jk) for k = 1, 2.

Closed forms are the oracles; contour quadrature (transverse circles for the
line residues, iterated circles for the five double residues) is the
independent route to every number.
"""

from __future__ import annotations

import csv
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import PoleProximity
from .roots import RHO_CHECK, RootDatum, Weight, WeylElement
from .zeta import (DEFAULT_CONFIG, EvaluatorConfig, _completed_L_raw,
                   completed_L, ratio_L)

__all__ = [
    "GL3",
    "sigma",
    "delta_weight",
    "line_direction",
    "lambda_line",
    "transverse_direction",
    "n_entry",
    "n_matrix",
    "rank_one_residual",
    "symmetry_residual",
    "multiplicativity_residual",
    "transverse_residue",
    "double_residue_table",
    "double_residue_closed_forms",
    "volume_factors",
    "volume_constant",
    "emit_nmatrix_csv",
]

GL3 = RootDatum(3)

_HALF = Fraction(1, 2)

# Pairing index cutting out Line_i: the simple coroots for i = 1, 2 and
# rho_check for i = 3.
_LINE_COROOT = {1: 1, 2: 2, 3: RHO_CHECK}


@lru_cache(maxsize=None)
def delta_weight(i: int) -> Weight:
    """delta_i = alpha_i / 2 (alpha_3 the highest root), exact coordinates."""
    coords = {1: (Fraction(1), -_HALF), 2: (-_HALF, Fraction(1)),
              3: (_HALF, _HALF)}
    return GL3.weight(coords[i])


@lru_cache(maxsize=None)
def line_direction(i: int) -> Weight:
    """e_i, the direction of Line_i; orthogonal to delta_i."""
    coords = {1: (0, -1), 2: (1, 0), 3: (-1, 1)}
    return GL3.weight(coords[i])


@lru_cache(maxsize=None)
def sigma(i: int, j: int) -> WeylElement:
    """The unique Weyl element with sigma_ij(delta_i) = -delta_j."""
    target = tuple(-c for c in delta_weight(j).coeffs)
    hits = [w for w in GL3.weyl_group() if w.act(delta_weight(i)).coeffs == target]
    if len(hits) != 1:
        raise RuntimeError(f"sigma({i},{j}) not unique: {hits}")
    return hits[0]


def lambda_line(i: int, z) -> Weight:
    """The point delta_i + z e_i on the i-th singular line."""
    d, e = delta_weight(i), line_direction(i)
    return GL3.weight(tuple(complex(a) + complex(z) * complex(b)
                            for a, b in zip(d.coeffs, e.coeffs)))


def transverse_direction(i: int) -> Weight:
    """Direction xi_i used for transverse residues.

    Normalized by <xi_i, beta_check_i> = 1 with zero component along e_i;
    both conditions are met by delta_i itself.
    """
    return delta_weight(i)


def _entry_ratio(a, b, config: EvaluatorConfig) -> complex:
    """L(a)/L(b) with a pole guard on the numerator argument."""
    for arg, pole in ((a, 0.0), (a, 1.0)):
        if abs(arg - pole) < config.pole_exclusion_radius:
            raise PoleProximity(
                f"n_entry: L argument {arg} within exclusion radius of {pole}",
                point=arg, pole=pole)
    return complex(_completed_L_raw(a, config) / _completed_L_raw(b, config))


def n_entry(i: int, j: int, z, config: EvaluatorConfig = DEFAULT_CONFIG) -> complex:
    """Closed-form entry n_ij(z) of the residue matrix N(z).

    The diagonal entries n_11 = n_22 = 1 are exact; the off-diagonal entries
    collapse to single completed-zeta ratios because 1 + <lam_i, a_check> and
    <lam_i, rho_check> coincide along the first two lines.
    """
    z = complex(z)
    if (i, j) in ((1, 1), (2, 2)):
        return 1.0 + 0.0j
    if (i, j) == (1, 2):
        return _entry_ratio(-z - 0.5, -z + 1.5, config)
    if (i, j) == (1, 3):
        return _entry_ratio(-z + 0.5, -z + 1.5, config)
    if (i, j) == (2, 1):
        return _entry_ratio(z - 0.5, z + 1.5, config)
    if (i, j) == (2, 3):
        return _entry_ratio(z + 0.5, z + 1.5, config)
    if (i, j) == (3, 1):
        return _entry_ratio(z + 0.5, z + 1.5, config)
    if (i, j) == (3, 2):
        return _entry_ratio(-z + 0.5, -z + 1.5, config)
    if (i, j) == (3, 3):
        return (_entry_ratio(z + 0.5, z + 1.5, config)
                * _entry_ratio(-z + 0.5, -z + 1.5, config))
    raise ValueError(f"n_entry indices out of range: ({i}, {j})")


def n_matrix(z, config: EvaluatorConfig = DEFAULT_CONFIG) -> np.ndarray:
    return np.array([[n_entry(i, j, z, config) for j in (1, 2, 3)]
                     for i in (1, 2, 3)])


def rank_one_residual(z, config: EvaluatorConfig = DEFAULT_CONFIG) -> float:
    """Max modulus of the nine 2x2 minors of N(z)."""
    m = n_matrix(z, config)
    worst = 0.0
    for r1, r2 in ((0, 1), (0, 2), (1, 2)):
        for c1, c2 in ((0, 1), (0, 2), (1, 2)):
            worst = max(worst, abs(m[r1, c1] * m[r2, c2] - m[r1, c2] * m[r2, c1]))
    return worst


def symmetry_residual(z, config: EvaluatorConfig = DEFAULT_CONFIG) -> float:
    """Max |n_ij(z) - n_ji(-z)|."""
    m = n_matrix(z, config)
    mr = n_matrix(-complex(z), config)
    return float(np.max(np.abs(m - mr.T)))


def multiplicativity_residual(z, config: EvaluatorConfig = DEFAULT_CONFIG) -> float:
    """Max |n_ij(z) - n_ik(z) conj(n_jk(z))| over i, j and k in {1, 2}.

    Requires purely imaginary z (the identity is Hermitian in nature).
    """
    z = complex(z)
    if abs(z.real) > 1e-12:
        raise ValueError("multiplicativity_residual needs purely imaginary z")
    m = n_matrix(z, config)
    worst = 0.0
    for k in (0, 1):
        worst = max(worst, float(np.max(np.abs(
            m - np.outer(m[:, k], np.conj(m[:, k]))))))
    return worst


def _circle_nodes(radius: float, nodes: int) -> np.ndarray:
    theta = 2.0 * np.pi * np.arange(nodes) / nodes
    return radius * np.exp(1j * theta)


def _m_product_on_ray(w: WeylElement, base: Weight, direction: Weight,
                      u: np.ndarray,
                      config: EvaluatorConfig = DEFAULT_CONFIG) -> np.ndarray:
    """m(w, base + u * direction) vectorized over a complex array u."""
    out = np.ones_like(u, dtype=np.complex128)
    for root in sorted(w.inversions()):
        a0 = complex(base.pair_root(root))
        a1 = complex(direction.pair_root(root))
        out = out * np.asarray(ratio_L(a0 + a1 * u, config))
    return out


def transverse_residue(i: int, j: int, z, radius: float = 0.3,
                       nodes: int = 128,
                       config: EvaluatorConfig = DEFAULT_CONFIG) -> complex:
    """Residue of m(sigma_ij, .) across Line_i at lam_i(z), by quadrature.

    Integrates m(sigma_ij, lam_i(z) + u xi_i) around a small u-circle; the
    normalization <xi_i, beta_check_i> = 1 makes the value equal
    n_ij(z)/L(2) independently of the remaining gauge freedom.
    """
    u = _circle_nodes(radius, nodes)
    vals = _m_product_on_ray(sigma(i, j), lambda_line(i, z),
                             transverse_direction(i), u, config)
    return complex(np.mean(vals * u))


def _iterated_double_residue(w: WeylElement, inner_axis: int,
                             inner_center: complex, outer_axis: int,
                             outer_center: complex,
                             r_inner: float = 0.1, r_outer: float = 0.3,
                             nodes: int = 96,
                             config: EvaluatorConfig = DEFAULT_CONFIG) -> complex:
    """Iterated residue of m(w, .) in the chart (z1, z2) = coroot pairings.

    The inner circle is kept strictly smaller than the outer one so that it
    encloses only the coordinate hyperplane through the target point, never
    the moving pole of the z1 + z2 factor.
    """
    u_in = _circle_nodes(r_inner, nodes)
    u_out = _circle_nodes(r_outer, nodes)
    inner_dir = GL3.weight((1, 0) if inner_axis == 1 else (0, 1))

    inner_means = np.empty(nodes, dtype=np.complex128)
    for k, uo in enumerate(u_out):
        outer = outer_center + uo
        base = GL3.weight((inner_center, outer) if inner_axis == 1
                          else (outer, inner_center))
        vals = _m_product_on_ray(w, base, inner_dir, u_in, config)
        inner_means[k] = np.mean(vals * u_in)
    return complex(np.mean(inner_means * u_out))


# Double-residue targets: (weyl element name, point, inner axis/center,
# outer axis/center).  The inner residue is always taken across the
# coordinate hyperplane z_k = 1 through the point.
_DOUBLE_RESIDUE_PLAN = (
    ("r1", (0.0, 1.0), 2, 1.0, 1, 0.0),
    ("r2", (1.0, 0.0), 1, 1.0, 2, 0.0),
    ("s3", (0.0, 1.0), 2, 1.0, 1, 0.0),
    ("s3", (1.0, 0.0), 1, 1.0, 2, 0.0),
    ("s3", (1.0, 1.0), 1, 1.0, 2, 1.0),
)


def _named_weyl() -> dict[str, WeylElement]:
    s1 = GL3.simple_reflection(1)
    s2 = GL3.simple_reflection(2)
    return {"s1": s1, "s2": s2, "s3": s1 * s2 * s1,
            "r1": s1 * s2, "r2": s2 * s1}


def double_residue_closed_forms(config: EvaluatorConfig = DEFAULT_CONFIG) -> list[complex]:
    """Closed-form values for the five double residues, from L(2), L(3)."""
    L2 = complex(completed_L(2.0, config))
    L3 = complex(completed_L(3.0, config))
    return [1.0 / L2 ** 2, 1.0 / L2 ** 2, -1.0 / L2 ** 2, -1.0 / L2 ** 2,
            1.0 / (L2 * L3)]


def double_residue_table(config: EvaluatorConfig = DEFAULT_CONFIG,
                         nodes: int = 96) -> list[tuple[WeylElement, Weight, complex]]:
    """The five double residues of the m-scalars, by iterated quadrature.

    Returns (weyl element, point, value) in the order
    (r1, w2), (r2, w1), (s3, w2), (s3, w1), (s3, rho).
    """
    named = _named_weyl()
    out = []
    for name, point, in_ax, in_c, out_ax, out_c in _DOUBLE_RESIDUE_PLAN:
        w = named[name]
        val = _iterated_double_residue(w, in_ax, in_c, out_ax, out_c,
                                       nodes=nodes, config=config)
        out.append((w, GL3.weight(point), val))
    return out


def volume_factors(datum: RootDatum) -> list[int]:
    """Exponents of the closed-form volume: vol = prod_k L(k), k = 2..n.

    Obtained by cancelling the height products
    1/V = prod'_{alpha>0} L(ht) / prod_{alpha>0} L(1 + ht)  (primed product
    over non-simple positive roots); for type A the heights h = 1..n-1 occur
    with multiplicity n - h and the quotient telescopes to L(2)...L(n).
    """
    num: dict[int, int] = {}
    for root in datum.positive_roots():
        h = datum.root_height(root)
        num[h + 1] = num.get(h + 1, 0) + 1       # denominator of 1/V
        if h > 1:
            num[h] = num.get(h, 0) - 1           # primed numerator of 1/V
    factors = []
    for k in sorted(num):
        if num[k] < 0:
            raise RuntimeError("volume exponent cancellation failed")
        factors.extend([k] * num[k])
    return factors


def volume_constant(datum: RootDatum,
                    config: EvaluatorConfig = DEFAULT_CONFIG) -> float:
    """vol(X_G) for split GL(n) in the normalized measure: L(2)...L(n)."""
    value = 1.0
    for k in volume_factors(datum):
        value *= float(np.real(completed_L(float(k), config)))
    return value


def emit_nmatrix_csv(path, z_values, config: EvaluatorConfig = DEFAULT_CONFIG):
    """Sample N on the imaginary axis: z, Re/Im of each entry, minor residual."""
    header = ["z_imag"]
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            header += [f"re_n{i}{j}", f"im_n{i}{j}"]
    header.append("minor_residual")
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for t in z_values:
            z = 1j * float(t)
            row = [f"{float(t):.17g}"]
            m = n_matrix(z, config)
            for i in range(3):
                for j in range(3):
                    row += [f"{m[i, j].real:.17g}", f"{m[i, j].imag:.17g}"]
            row.append(f"{rank_one_residual(z, config):.17g}")
            writer.writerow(row)
