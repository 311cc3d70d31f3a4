"""SL(2,Z) Eisenstein series, truncation, and the rank-one inner product.

The classical series

    E(z, s) = sum over coprime (c, d) mod units of  y^s / |c z + d|^(2s)

(with (0, 1) contributing y^s) converges for Re(s) > 1 and has constant term
y^s + c(s) y^(1-s) along the cusp, c(s) = L(2s-1)/L(2s).  The truncation
operator subtracts the constant term above height y0 = exp(T), producing a
rapidly decreasing function on the fundamental domain

    D = { |Re z| <= 1/2, |z| >= 1 }.

Two evaluators are provided:

* a direct coprime-pair sum with a certified integral-comparison tail bound
  (the literal definition; its tail decays only like B^(2-2s), so it is the
  cross-check oracle, not the production path near s = 1);
* an exponentially convergent incomplete-gamma representation for real s,
  obtained from the theta integral of the associated unimodular lattice sum:
  with Q(m,n) = |m z + n|^2 / y (determinant one),

      pi^(-s) Gamma(s) zeta(2s) E(z,s) = 1/(2(s-1)) - 1/(2s)
        + (1/2) sum_{(m,n) != 0} [ (pi Q)^(-s) Gamma(s, pi Q)
                                 + (pi Q)^(s-1) Gamma(1-s, pi Q) ],

  every term decaying like exp(-pi Q).

The truncated inner product over D with the hyperbolic measure dx dy / y^2
is computed by adaptive tensor Gauss-Legendre panels and compared against
the closed rank-one formula omega_rank1, which is the Maass-Selberg check.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.special import gammaincc, exp1

from .errors import DomainError, NonConvergence, PoleProximity
from .zeta import DEFAULT_CONFIG, EvaluatorConfig, _zeta_raw, ratio_L

__all__ = [
    "UpperHalfPoint",
    "EisensteinParams",
    "TruncationParam",
    "QuadratureSpec",
    "QuadratureResult",
    "eisenstein",
    "eisenstein_tail_bound",
    "eisenstein_theta",
    "constant_term",
    "truncate",
    "truncated_eisenstein",
    "truncated_eisenstein_direct",
    "inner_product_fd",
    "omega_rank1",
    "maass_selberg_record",
    "maass_selberg_convergence_study",
    "emit_maass_selberg_csv",
]

# Height above which a truncated series (for the s ranges used here) is
# below 1e-30 of scale; evaluators return exactly 0 beyond it.
DECAY_CUTOFF = 12.0


@dataclass(frozen=True)
class UpperHalfPoint:
    """A point x + i y of the upper half plane."""

    x: float
    y: float

    def __post_init__(self):
        if not self.y > 0:
            raise DomainError(f"UpperHalfPoint needs y > 0, got {self.y}")

    @property
    def z(self) -> complex:
        return complex(self.x, self.y)

    def in_fundamental_domain(self, slack: float = 1e-12) -> bool:
        return (abs(self.x) <= 0.5 + slack
                and self.x * self.x + self.y * self.y >= 1.0 - slack)

    def reduce(self, max_iter: int = 200) -> "UpperHalfPoint":
        """Translate/invert into D; NonConvergence if the loop cap is hit."""
        x, y = self.x, self.y
        for _ in range(max_iter):
            x = x - round(x)
            r2 = x * x + y * y
            if r2 >= 1.0 - 1e-15:
                return UpperHalfPoint(x, y)
            x, y = -x / r2, y / r2
        raise NonConvergence(
            "fundamental-domain reduction did not terminate",
            diagnostics={"start": (self.x, self.y), "last": (x, y),
                         "iterations": max_iter})


@dataclass(frozen=True)
class EisensteinParams:
    """Spectral parameter plus direct-sum truncation control."""

    s: complex
    lattice_bound: int = 400
    tail_tolerance: float = 1e-6

    def __post_init__(self):
        if complex(self.s).real <= 1.0:
            raise DomainError(
                f"direct Eisenstein summation needs Re(s) > 1, got {self.s}")
        if self.lattice_bound < 3:
            raise DomainError("lattice_bound must be at least 3")

    @classmethod
    def for_tolerance(cls, s: complex, tol: float, y_max: float = 2.0,
                      kappa_min: float = 0.4,
                      max_bound: int = 4000) -> "EisensteinParams":
        """Pick the smallest lattice bound whose certified tail is <= tol."""
        sigma = complex(s).real
        for b in (50, 100, 200, 400, 800, 1600, 3200, max_bound):
            if _tail_bound_raw(sigma, y_max, kappa_min, b) <= tol:
                return cls(s, b, tol)
        return cls(s, max_bound, tol)


@dataclass(frozen=True)
class TruncationParam:
    """Truncation height parameter T; the cut line sits at y0 = exp(T)."""

    T: float

    def __post_init__(self):
        if self.y0 <= 1.0:
            raise DomainError("truncation line must lie inside D (need T > 0)")

    @property
    def y0(self) -> float:
        return math.exp(self.T)


def _kappa(x: float, y: float) -> float:
    """Smallest eigenvalue of the form (c,d) -> |c z + d|^2 (for tail bounds)."""
    r2 = x * x + y * y
    return 0.5 * ((r2 + 1.0) - math.sqrt((r2 - 1.0) ** 2 + 4.0 * x * x))


def _tail_bound_raw(sigma: float, y: float, kappa: float, bound: int) -> float:
    """Integral-comparison bound on the dropped coprime-pair terms."""
    if bound < 3:
        return math.inf
    b = bound - math.sqrt(2.0)
    geom = 2.0 * math.pi * (1.0 + math.sqrt(2.0) / (2.0 * b))
    return (y ** sigma) * kappa ** (-sigma) * geom * b ** (2.0 - 2.0 * sigma) \
        / (2.0 * sigma - 2.0)


def eisenstein_tail_bound(z: UpperHalfPoint, params: EisensteinParams) -> float:
    """Certified bound on the truncation error of the direct sum at z."""
    sigma = complex(params.s).real
    return _tail_bound_raw(sigma, z.y, _kappa(z.x, z.y), params.lattice_bound)


def eisenstein(z: UpperHalfPoint, params: EisensteinParams) -> complex:
    """Direct coprime-pair sum truncated at max(|c|, |d|) <= lattice_bound.

    Convention: pairs are taken modulo the unit -1 by requiring c >= 0, with
    (0, 1) contributing y^s.
    """
    s = complex(params.s)
    b = params.lattice_bound
    x, y = z.x, z.y
    total = np.complex128(np.exp(s * np.log(y)))  # the (0, 1) term
    d = np.arange(-b, b + 1, dtype=np.int64)
    for c in range(1, b + 1):
        mask = np.gcd(np.int64(c), d) == 1
        dd = d[mask].astype(np.float64)
        q = (c * x + dd) ** 2 + (c * y) ** 2
        total += np.exp(s * np.log(y)) * np.exp(-s * np.log(q)).sum()
    return complex(total)


def _upper_gamma(a: float, x: np.ndarray) -> np.ndarray:
    """Upper incomplete Gamma(a, x) for real a (x > 0), via the recurrence
    Gamma(a, x) = (Gamma(a+1, x) - x^a e^(-x)) / a below a = 0."""
    if a > 0:
        return gammaincc(a, x) * math.gamma(a)
    if a == 0.0:
        return exp1(x)
    return (_upper_gamma(a + 1.0, x) - x ** a * np.exp(-x)) / a


def _lattice_pairs(x_min: float, x_max: float, y_min: float, y_max: float,
                   q_max: float) -> list[tuple[int, int]]:
    """Half-lattice pairs (m, n) that can reach Q = |m z + n|^2 / y <= q_max."""
    pairs = []
    n_top = int(math.ceil(math.sqrt(q_max * y_max))) + 1
    pairs.extend((0, n) for n in range(1, n_top + 1))
    m_top = int(math.ceil(math.sqrt(q_max / y_min))) + 1
    half = max(abs(x_min), abs(x_max))
    for m in range(1, m_top + 1):
        if m * m * y_min > q_max:
            break
        reach = math.sqrt(max(q_max * y_max - 0.0, 0.0))
        n_lo = int(math.floor(-m * half - reach)) - 1
        n_hi = int(math.ceil(m * half + reach)) + 1
        pairs.extend((m, n) for n in range(n_lo, n_hi + 1))
    return pairs


def eisenstein_theta(x, y, s: float,
                     config: EvaluatorConfig = DEFAULT_CONFIG):
    """E(z, s) for real s > 1 via the incomplete-gamma representation.

    Vectorized over arrays x, y; every lattice term decays like exp(-pi Q),
    so the cutoff pi Q <= 38 leaves an error below 1e-16 of scale.
    """
    s = float(s)
    if s <= 1.0:
        raise DomainError(f"eisenstein_theta needs real s > 1, got {s}")
    xa = np.atleast_1d(np.asarray(x, dtype=np.float64))
    ya = np.atleast_1d(np.asarray(y, dtype=np.float64))
    xa, ya = np.broadcast_arrays(xa, ya)
    scalar = np.asarray(x).ndim == 0 and np.asarray(y).ndim == 0

    q_cut = 38.0 / math.pi
    total = np.zeros(xa.shape, dtype=np.float64)
    r2 = xa * xa + ya * ya
    for m, n in _lattice_pairs(float(xa.min()), float(xa.max()),
                               float(ya.min()), float(ya.max()), q_cut):
        q = (m * m * r2 + 2.0 * m * n * xa + n * n) / ya
        mask = q <= q_cut
        if not np.any(mask):
            continue
        a = math.pi * q[mask]
        total[mask] += (a ** (-s) * _upper_gamma(s, a)
                        + a ** (s - 1.0) * _upper_gamma(1.0 - s, a))

    star = 0.5 / (s - 1.0) - 0.5 / s + total
    zeta2s = float(np.real(_zeta_raw(2.0 * s, config)))
    value = star * math.pi ** s / (math.gamma(s) * zeta2s)
    return float(value.reshape(-1)[0]) if scalar else value


def constant_term(y, s, config: EvaluatorConfig = DEFAULT_CONFIG):
    """Cusp constant term y^s + c(s) y^(1-s), c(s) = L(2s-1)/L(2s)."""
    s = complex(s)
    if abs(s - 1.0) < config.pole_exclusion_radius:
        raise PoleProximity("constant_term: c(s) has a pole at s = 1",
                            point=s, pole=1.0)
    c = complex(ratio_L(2.0 * s - 1.0, config))
    ya = np.asarray(y, dtype=np.float64)
    out = np.exp(s * np.log(ya)) + c * np.exp((1.0 - s) * np.log(ya))
    return complex(out[()]) if out.ndim == 0 else out


def truncate(z: UpperHalfPoint, s, trunc: TruncationParam,
             params: EisensteinParams | None = None,
             config: EvaluatorConfig = DEFAULT_CONFIG) -> complex:
    """Truncated series at a reduced point: E below y0, E minus the constant
    term above.  Real s uses the exponentially convergent evaluator; complex
    s falls back to the direct sum controlled by params."""
    if not z.in_fundamental_domain():
        raise DomainError(f"truncate expects a reduced point, got {z.z}")
    sc = complex(s)
    if sc.imag == 0.0:
        val = complex(eisenstein_theta(z.x, z.y, sc.real, config))
    else:
        val = eisenstein(z, params or EisensteinParams(s))
    if z.y > trunc.y0:
        val -= complex(np.asarray(constant_term(z.y, s, config)))
    return val


def _truncated_factory(s: float, trunc: TruncationParam, evaluator: Callable,
                       config: EvaluatorConfig) -> Callable:
    y0 = trunc.y0
    if y0 >= DECAY_CUTOFF:
        raise DomainError(
            f"truncation height {y0} above the decay cutoff {DECAY_CUTOFF}")
    ct = lambda y: np.real(np.asarray(constant_term(y, float(s), config)))

    def evaluate(x: np.ndarray, y: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=np.float64)
        y = np.asarray(y, dtype=np.float64)
        out = np.zeros(np.broadcast(x, y).shape, dtype=np.float64)
        live = y <= DECAY_CUTOFF
        if np.any(live):
            xb, yb = np.broadcast_arrays(x, y)
            vals = evaluator(xb[live], yb[live])
            high = yb[live] > y0
            vals = np.where(high, vals - ct(yb[live]), vals)
            out[live] = vals
        return out

    return evaluate


def truncated_eisenstein(s: float, trunc: TruncationParam,
                         config: EvaluatorConfig = DEFAULT_CONFIG) -> Callable:
    """Vectorized truncated-series evaluator on D for the quadrature engine.

    Returns exactly 0 above DECAY_CUTOFF, where the remaining Fourier tail
    is below 1e-30 of scale; this keeps the top panels cheap and noise-free.
    """
    return _truncated_factory(
        s, trunc, lambda x, y: eisenstein_theta(x, y, float(s), config),
        config)


def _eisenstein_direct_array(x: np.ndarray, y: np.ndarray, s: float,
                             bound: int) -> np.ndarray:
    """Direct coprime sum, vectorized over 1-d point arrays."""
    d = np.arange(-bound, bound + 1, dtype=np.int64)
    total = y ** s
    for c in range(1, bound + 1):
        dd = d[np.gcd(np.int64(c), d) == 1].astype(np.float64)
        q = (c * x[:, None] + dd[None, :]) ** 2 + (c * y[:, None]) ** 2
        total = total + y ** s * (q ** (-s)).sum(axis=1)
    return total


def truncated_eisenstein_direct(s: float, trunc: TruncationParam, bound: int,
                                config: EvaluatorConfig = DEFAULT_CONFIG) -> Callable:
    """Truncated-series evaluator backed by the direct lattice sum.

    Only useful for convergence studies: the direct tail decays like
    bound^(2-2s), far too slowly for tight work near s = 1.
    """
    return _truncated_factory(
        s, trunc, lambda x, y: _eisenstein_direct_array(x, y, float(s), bound),
        config)


@dataclass(frozen=True)
class QuadratureSpec:
    """Controls for the adaptive fundamental-domain quadrature."""

    tol: float = 1e-8
    max_panels: int = 2000
    base_order: int = 10
    y_split: float = 2.0
    y_breaks: tuple[float, ...] = ()
    x_range: tuple[float, float] = (-0.5, 0.5)


@dataclass
class QuadratureResult:
    """Value of an adaptive integral together with its error estimate."""

    value: complex
    error_estimate: float
    panels: int
    evaluations: int = 0

    def __complex__(self) -> complex:
        return complex(self.value)


def _leg_nodes(order: int):
    x, w = np.polynomial.legendre.leggauss(order)
    return 0.5 * (x + 1.0), 0.5 * w  # on [0, 1]


class _Region:
    """A region (x, t) in [x0,x1] x [0,1] mapped onto part of D."""

    def __init__(self, ylo: Callable, yhi: Callable, top: bool = False):
        self.ylo = ylo
        self.yhi = yhi
        self.top = top  # top regions use u = 1/y, du = dy / y^2

    def sample(self, integrand, x0, x1, t0, t1, nodes, weights):
        xs = x0 + (x1 - x0) * nodes
        ts = t0 + (t1 - t0) * nodes
        X, Tt = np.meshgrid(xs, ts, indexing="ij")
        if self.top:
            U = Tt  # t is already u = 1/y on (0, 1/y_split]
            Y = 1.0 / U
            vals = integrand(X, Y)  # measure dy/y^2 = du
        else:
            lo = self.ylo(X)
            Y = lo + (self.yhi(X) - lo) * Tt
            vals = integrand(X, Y) * (self.yhi(X) - lo) / (Y * Y)
        wmat = np.multiply.outer(weights, weights)
        return complex(np.sum(vals * wmat)) * (x1 - x0) * (t1 - t0)


def inner_product_fd(f: Callable, g: Callable,
                     quad: QuadratureSpec = QuadratureSpec()) -> QuadratureResult:
    """Adaptive quadrature of integral over D of f * conj(g) dx dy / y^2.

    f and g must be vectorized callables of (x, y).  The domain is covered
    by the arc-floor region up to y_split, optional rectangular strips cut
    at the supplied y_breaks, and a top region mapped by u = 1/y covering
    [y_split', infinity).  Panels are refined worst-first until the summed
    two-order error estimate meets the tolerance.
    """
    x0, x1 = quad.x_range
    arc = lambda X: np.sqrt(np.maximum(1.0 - X * X, 0.0))

    levels = sorted({float(b) for b in quad.y_breaks if b > 1.0}
                    | {float(quad.y_split)})
    regions: list[_Region] = []
    lo_fn = arc
    for lvl in levels:
        regions.append(_Region(lo_fn, lambda X, l=lvl: np.full_like(X, l)))
        lo_fn = (lambda X, l=lvl: np.full_like(X, l))
    y_top = levels[-1]
    regions.append(_Region(None, None, top=True))

    def integrand(X, Y):
        return f(X, Y) * np.conj(g(X, Y))

    lo_nodes, lo_w = _leg_nodes(quad.base_order)
    hi_nodes, hi_w = _leg_nodes(2 * quad.base_order)
    evals = [0]

    def eval_panel(region: _Region, rect):
        a, b, c, d = rect
        coarse = region.sample(integrand, a, b, c, d, lo_nodes, lo_w)
        fine = region.sample(integrand, a, b, c, d, hi_nodes, hi_w)
        evals[0] += quad.base_order ** 2 + 4 * quad.base_order ** 2
        return fine, abs(fine - coarse)

    panels = []
    for region in regions:
        tmax = 1.0 / y_top if region.top else 1.0
        for (a, b) in ((x0, 0.5 * (x0 + x1)), (0.5 * (x0 + x1), x1)):
            rect = (a, b, 0.0, tmax)
            val, err = eval_panel(region, rect)
            panels.append([err, region, rect, val])

    while True:
        total_err = sum(p[0] for p in panels)
        if total_err <= quad.tol:
            break
        if len(panels) >= quad.max_panels:
            raise NonConvergence(
                "inner_product_fd: panel budget exhausted",
                diagnostics={"panels": len(panels), "error": total_err,
                             "tol": quad.tol})
        panels.sort(key=lambda p: -p[0])
        err, region, (a, b, c, d), _ = panels.pop(0)
        if (b - a) >= (d - c):
            cuts = ((a, 0.5 * (a + b), c, d), (0.5 * (a + b), b, c, d))
        else:
            cuts = ((a, b, c, 0.5 * (c + d)), (a, b, 0.5 * (c + d), d))
        for rect in cuts:
            val, err = eval_panel(region, rect)
            panels.append([err, region, rect, val])

    value = sum(p[3] for p in panels)
    return QuadratureResult(value=value, error_estimate=total_err,
                            panels=len(panels), evaluations=evals[0])


def _c_function(s: float, config: EvaluatorConfig) -> complex:
    return complex(ratio_L(2.0 * s - 1.0, config))


def _c_derivative(s: float, config: EvaluatorConfig, h: float = 1e-4) -> complex:
    return (complex(ratio_L(2.0 * (s + h) - 1.0, config))
            - complex(ratio_L(2.0 * (s - h) - 1.0, config))) / (2.0 * h)


def omega_rank1(s1: float, s2: float, trunc: TruncationParam,
                config: EvaluatorConfig = DEFAULT_CONFIG) -> complex:
    """Closed form for the truncated-series inner product (rank one).

    For real s1, s2 in the convergence range (1, 3/2]:

        y0^(s1+s2-1)/(s1+s2-1) + c(s2) y0^(s1-s2)/(s1-s2)
          + c(s1) y0^(s2-s1)/(s2-s1) + c(s1) c(s2) y0^(1-s1-s2)/(1-s1-s2),

    with the removable s1 = s2 diagonal filled by its limit
    2 T c(s) - c'(s).
    """
    for s in (s1, s2):
        if not (1.0 < s <= 1.5):
            raise DomainError(f"omega_rank1 needs s in (1, 3/2], got {s}")
    if abs(s1 + s2 - 1.0) < 1e-12:
        raise DomainError("omega_rank1: s1 + s2 = 1 is outside the domain")
    y0 = trunc.y0
    c1 = _c_function(s1, config)
    c2 = _c_function(s2, config)
    value = y0 ** (s1 + s2 - 1.0) / (s1 + s2 - 1.0) \
        + c1 * c2 * y0 ** (1.0 - s1 - s2) / (1.0 - s1 - s2)
    if abs(s1 - s2) < 1e-7:
        s = 0.5 * (s1 + s2)
        value += 2.0 * trunc.T * _c_function(s, config) - _c_derivative(s, config)
    else:
        value += c2 * y0 ** (s1 - s2) / (s1 - s2) \
            + c1 * y0 ** (s2 - s1) / (s2 - s1)
    return complex(value)


def maass_selberg_record(s1: float, s2: float, T: float,
                         quad_tol: float = 1e-6,
                         config: EvaluatorConfig = DEFAULT_CONFIG) -> dict:
    """Quadrature inner product vs closed formula for one (s1, s2, T)."""
    trunc = TruncationParam(T)
    f1 = truncated_eisenstein(s1, trunc, config)
    f2 = truncated_eisenstein(s2, trunc, config)
    spec = QuadratureSpec(tol=quad_tol, y_split=trunc.y0,
                          y_breaks=(), max_panels=3000)
    quad = inner_product_fd(f1, f2, spec)
    formula = omega_rank1(s1, s2, trunc, config)
    abs_err = abs(complex(quad.value) - formula)
    return {
        "s1": s1, "s2": s2, "T": T,
        "quadrature_value": complex(quad.value),
        "formula_value": formula,
        "abs_err": abs_err,
        "rel_err": abs_err / abs(formula),
        "tail_bound": 1e-15,  # exp(-38) lattice cutoff of the theta form
        "quad_error_estimate": quad.error_estimate,
    }


def maass_selberg_convergence_study(s1: float, s2: float, T: float,
                                    bounds: tuple[int, ...] = (50, 100, 200),
                                    quad_tol: float = 1e-3,
                                    config: EvaluatorConfig = DEFAULT_CONFIG) -> list[dict]:
    """Residual against the rank-one formula as the lattice bound grows.

    One row per direct-sum lattice bound (tail certified by integral
    comparison), plus a closing row for the exponentially convergent
    evaluator, reported with lattice_bound = 0.
    """
    trunc = TruncationParam(T)
    formula = omega_rank1(s1, s2, trunc, config)
    kappa_min = _kappa(0.5, math.sqrt(3.0) / 2.0)
    rows = []
    for bound in bounds:
        f1 = truncated_eisenstein_direct(s1, trunc, bound, config)
        f2 = truncated_eisenstein_direct(s2, trunc, bound, config)
        spec = QuadratureSpec(tol=quad_tol, y_split=trunc.y0, base_order=8)
        quad = inner_product_fd(f1, f2, spec)
        abs_err = abs(complex(quad.value) - formula)
        tail = max(_tail_bound_raw(s, DECAY_CUTOFF, kappa_min, bound)
                   for s in (s1, s2))
        rows.append({
            "lattice_bound": bound, "s1": s1, "s2": s2, "T": T,
            "quadrature_value": complex(quad.value),
            "formula_value": formula, "abs_err": abs_err,
            "rel_err": abs_err / abs(formula), "tail_bound": tail,
            "quad_error_estimate": quad.error_estimate,
        })
    exact = maass_selberg_record(s1, s2, T, quad_tol=min(quad_tol, 1e-6),
                                 config=config)
    exact["lattice_bound"] = 0
    rows.append(exact)
    return rows


def emit_maass_selberg_csv(path, records: list[dict]):
    """Numeric CSV of Maass-Selberg comparison records.

    Columns: s1, s2, T, quadrature_value, formula_value, abs_err, rel_err,
    tail_bound, quad_error_estimate (with a leading lattice_bound column
    for convergence-study rows).
    """
    cols = ["s1", "s2", "T", "quadrature_value", "formula_value",
            "abs_err", "rel_err", "tail_bound", "quad_error_estimate"]
    if records and "lattice_bound" in records[0]:
        cols = ["lattice_bound"] + cols
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(cols)
        for rec in records:
            row = []
            for c in cols:
                v = rec.get(c, 0)
                if isinstance(v, complex):
                    row.append(f"{v.real:.17g}")
                else:
                    row.append(f"{float(v):.17g}")
            writer.writerow(row)
