"""Command-line verification harness.

One binary, one suite per --command value.  Each suite runs its checks,
prints an aligned table, optionally writes a versioned JSON report and
plot-ready CSV, and exits 0 iff every residual met its tolerance.  All
randomized inputs are drawn from a numpy generator seeded by --seed, so a
given (config, seed) pair reproduces its report byte for byte (modulo the
timestamp field).
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
import time
from dataclasses import dataclass, field

import numpy as np

from . import gl3 as gl3mod
from . import parseval as pv
from .errors import DomainError
from .intertwine import cocycle_check, m_scalar, su3_local_factor, unitarity_check
from .roots import (RHO_CHECK, RootDatum, association_classes, tau_hat,
                    transporters, truncation_terms)
from .truncation import (emit_maass_selberg_csv,
                         maass_selberg_convergence_study,
                         maass_selberg_record)
from .zeta import (completed_L, gamma_fn, local_L, primes_upto, ratio_L,
                   residue_at, zeta)

COMMANDS = ("zeta", "lfn", "m-scalar", "su3", "combinatorics", "nmatrix",
            "residues", "volume", "maass-selberg", "parseval", "all")

TOLERANCES = {
    "functional-equation": 1e-10,
    "residue": 1e-8,
    "conjugation": 1e-12,
    "euler-product": None,  # bound is 2/N, computed per check
    "unitarity": 1e-9,
    "cocycle": 1e-9,
    "su3": 1e-12,
    "combinatorics": 0.0,
    "nmatrix-rank": 1e-9,
    "nmatrix-symmetry": 1e-12,
    "nmatrix-mult": 1e-9,
    "transverse": 1e-6,
    "double-residue": 1e-6,
    "cancellation": 1e-8,
    "volume": 1e-12,
    "maass-selberg": 1e-3,
    "parseval-gl2": 1e-6,
    "parseval-gl3": 1e-4,
    "kappa-spread": 1e-8,
    "a-form": 1e-6,
}


@dataclass
class RunConfig:
    command: str = "all"
    group: str = "gl3"
    seed: int = 42
    json_path: str | None = None
    csv_path: str | None = None
    beta: float = 0.5
    lambda0: tuple[float, float] = (1.5, 1.5)
    T: float = 1.0
    s1: float = 1.2
    s2: float = 1.3
    z: complex = 0.7j
    tolerances: dict = field(default_factory=lambda: dict(TOLERANCES))

    def gln(self) -> int:
        digits = "".join(ch for ch in self.group if ch.isdigit())
        if not digits or not self.group.lower().startswith("gl"):
            raise DomainError(f"unknown group {self.group}")
        return int(digits)


@dataclass
class CheckRecord:
    name: str
    anchor: str
    expected: object
    computed: object
    residual: float
    tolerance: float
    passed: bool
    wall_ms: float


@dataclass
class VerificationReport:
    config: RunConfig
    records: list[CheckRecord] = field(default_factory=list)

    def add(self, name: str, anchor: str, expected, computed,
            residual: float, tolerance: float, wall_ms: float = 0.0):
        self.records.append(CheckRecord(
            name=name, anchor=anchor, expected=expected, computed=computed,
            residual=float(residual), tolerance=float(tolerance),
            passed=bool(residual <= tolerance), wall_ms=wall_ms))

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.records)

    def to_json_dict(self) -> dict:
        def enc(v):
            if isinstance(v, complex):
                return [v.real, v.imag]
            if isinstance(v, (np.floating, np.integer)):
                return float(v)
            if isinstance(v, (list, tuple)):
                return [enc(x) for x in v]
            return v
        return {
            "schema": "eisenspec.verification_report/1",
            "timestamp": time.strftime("%Y-%m-%dT%H:%M:%S"),
            "command": self.config.command,
            "group": self.config.group,
            "seed": self.config.seed,
            "summary": {
                "total": len(self.records),
                "passed": sum(r.passed for r in self.records),
                "failed": sum(not r.passed for r in self.records),
            },
            "checks": [{
                "name": r.name,
                "anchor": r.anchor,
                "expected": enc(r.expected),
                "computed": enc(r.computed),
                "residual": r.residual,
                "tolerance": r.tolerance,
                "pass": r.passed,
                "wall_ms": r.wall_ms,
            } for r in self.records],
        }

    def print_table(self, stream=sys.stdout):
        width = max([len(r.name) for r in self.records] + [10])
        print(f"{'check':<{width}}  {'residual':>12}  {'tolerance':>12}  status",
              file=stream)
        for r in self.records:
            status = "pass" if r.passed else "FAIL"
            print(f"{r.name:<{width}}  {r.residual:>12.3e}  "
                  f"{r.tolerance:>12.3e}  {status}", file=stream)
        summary = ("all checks passed" if self.all_passed
                   else "SOME CHECKS FAILED")
        print(f"-- {len(self.records)} checks: {summary}", file=stream)


def emit_csv(series: dict[str, list], path: str):
    """Numeric CSV with a header row, full double precision, LF endings."""
    cols = list(series)
    lengths = {len(v) for v in series.values()}
    if len(lengths) > 1:
        raise ValueError(f"emit_csv: inconsistent column lengths {lengths}")
    rows = lengths.pop() if lengths else 0
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(cols)
        for k in range(rows):
            writer.writerow([f"{float(series[c][k]):.17g}" for c in cols])


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, 1000.0 * (time.perf_counter() - t0)


# ------------------------------------------------------------ the suites --


def suite_zeta(report: VerificationReport, cfg: RunConfig):
    tol = cfg.tolerances

    def fe_grid():
        rng = np.random.default_rng(cfg.seed)
        pts = []
        while len(pts) < 200:
            s = complex(rng.uniform(-2, 3), rng.uniform(-40, 40))
            if abs(s) > 0.2 and abs(s - 1) > 0.2:
                pts.append(s)
        arr = np.array(pts)
        return float(np.max(np.abs(completed_L(arr) - completed_L(1.0 - arr))))

    worst, ms = _timed(fe_grid)
    report.add("L-functional-equation-grid", "L(s) = L(1-s) on 200 points",
               0.0, worst, worst, tol["functional-equation"], ms)

    res1, ms1 = _timed(lambda: residue_at(completed_L, 1.0, 0.3))
    report.add("L-residue-at-1", "simple pole of L at 1 has residue 1",
               1.0, res1, abs(res1 - 1.0), tol["residue"], ms1)
    res0, ms0 = _timed(lambda: residue_at(completed_L, 0.0, 0.3))
    report.add("L-residue-at-0", "simple pole of L at 0 has residue -1",
               -1.0, res0, abs(res0 + 1.0), tol["residue"], ms0)

    def conj_grid():
        rng = np.random.default_rng(cfg.seed + 1)
        worst = 0.0
        for _ in range(60):
            s = complex(rng.uniform(-2, 3), rng.uniform(0.2, 40))
            if min(abs(s), abs(s - 1)) < 0.25:
                continue
            for f in (zeta, completed_L):
                worst = max(worst, abs(f(np.conj(s)) - np.conj(f(s))))
        return worst

    worst, ms = _timed(conj_grid)
    report.add("conjugation-equivariance", "f(conj s) = conj f(s)",
               0.0, worst, worst, tol["conjugation"], ms)

    def euler(n):
        prod = 1.0 + 0.0j
        for p in primes_upto(n):
            prod *= local_L(p, 2.0)
        return abs(complex(prod) - complex(zeta(2.0)))

    for n in (100, 400):
        err, ms = _timed(lambda n=n: euler(n))
        report.add(f"euler-product-N{n}",
                   "prod_p 1/(1-p^-2) approaches zeta(2) within 2/N",
                   0.0, err, err, 2.0 / n, ms)

    def unimod():
        t = np.linspace(-40, 40, 161)
        vals = np.abs(np.asarray(ratio_L(1j * t)))
        return float(np.max(np.abs(vals - 1.0)))

    worst, ms = _timed(unimod)
    report.add("ratio-unimodular-axis", "|L(it)/L(1+it)| = 1",
               0.0, worst, worst, tol["unitarity"], ms)

    def stability():
        a = residue_at(completed_L, 1.0, 0.3, nodes=64, max_nodes=64 * 2)
        b = residue_at(completed_L, 1.0, 0.3, nodes=128, max_nodes=128 * 2)
        return abs(a - b)

    diff, ms = _timed(stability)
    report.add("residue-node-stability", "doubling contour nodes is stable",
               0.0, diff, diff, 1e-10, ms)


def suite_lfn(report: VerificationReport, cfg: RunConfig):
    tol = cfg.tolerances["volume"]
    checks = [
        ("zeta(2)", complex(zeta(2.0)), np.pi ** 2 / 6.0),
        ("zeta(0)", complex(zeta(0.0)), -0.5),
        ("L(2)", complex(completed_L(2.0)), np.pi / 6.0),
        ("gamma(1/2)", complex(gamma_fn(0.5)), math.sqrt(np.pi)),
        ("ratio_L(0)", complex(ratio_L(0.0)), -1.0),
        ("local_L(2,1)", complex(local_L(2, 1.0)), 2.0),
    ]
    for name, got, want in checks:
        err = abs(got - want)
        report.add(name, f"{name} equals its closed form", want, got, err, tol)
    a = complex(completed_L(0.3 + 2j))
    b = complex(completed_L(0.7 - 2j))
    report.add("L-reflection-pair", "L(0.3+2i) = L(0.7-2i)",
               a, b, abs(a - b), 1e-12)


def suite_m_scalar(report: VerificationReport, cfg: RunConfig):
    datum = RootDatum(3)
    W = datum.weyl_group()
    rng = np.random.default_rng(cfg.seed)

    def cocycle_all():
        worst = 0.0
        for _ in range(5):
            lam = datum.weight((complex(rng.uniform(1.1, 2.0), rng.uniform(-1, 1)),
                                complex(rng.uniform(1.1, 2.0), rng.uniform(-1, 1))))
            for s in W:
                for t_el in W:
                    worst = max(worst, cocycle_check(s, t_el, lam))
        return worst

    worst, ms = _timed(cocycle_all)
    report.add("cocycle-all-pairs", "m(st,.) = m(s,t.) m(t,.), 36 pairs x 5 pts",
               0.0, worst, worst, cfg.tolerances["cocycle"], ms)

    def unit_all():
        worst = 0.0
        ys = rng.uniform(-4.0, 4.0, size=(50, 2))
        for y in ys:
            for w in W:
                worst = max(worst, unitarity_check(w, y, datum))
        return worst

    worst, ms = _timed(unit_all)
    report.add("unitarity-all-elements", "|m(w, iy)| = 1, 6 elements x 50 pts",
               0.0, worst, worst, cfg.tolerances["unitarity"], ms)

    # hand-coded closed forms vs inversion-set product
    sigma = 1.3
    g2 = RootDatum(2)
    lam2 = g2.weight((sigma,))
    w2 = g2.simple_reflection(1)
    got = m_scalar(w2, lam2)
    want = complex(completed_L(sigma) / completed_L(1 + sigma))
    report.add("gl2-m-closed-form", "m(s, sigma rho) = L(sigma)/L(1+sigma)",
               want, got, abs(got - want) / abs(want), 1e-12)

    lam3 = datum.weight((1.4, 1.7))
    s1 = datum.simple_reflection(1)
    s2 = datum.simple_reflection(2)
    got3 = m_scalar(s1 * s2 * s1, lam3)
    want3 = complex(ratio_L(1.4) * ratio_L(1.7) * ratio_L(3.1))
    report.add("gl3-m-closed-form",
               "m(w0, .) = ratio(z1) ratio(z2) ratio(z1+z2)",
               want3, got3, abs(got3 - want3) / abs(want3), 1e-12)

    if cfg.csv_path:
        ys = np.linspace(0.0, 40.0, 201)
        s3 = s1 * s2 * s1
        mods = [abs(m_scalar(s3, datum.weight((1j * y, 1j * y)))) for y in ys]
        emit_csv({"y": list(ys), "abs_m_s3": mods}, cfg.csv_path)


def suite_su3(report: VerificationReport, cfg: RunConfig):
    got = su3_local_factor(3, 1.0)
    want = (1 - 3.0 ** -4) * (1 + 3.0 ** -3) / ((1 - 3.0 ** -2) * (1 + 3.0 ** -2))
    report.add("su3-p3-sigma1", "local factor at p=3, sigma=1 (= 28/27)",
               want, got, abs(got - want), cfg.tolerances["su3"])
    limit = su3_local_factor(3, 60.0)
    report.add("su3-limit", "local factor tends to 1 for large sigma",
               1.0, limit, abs(limit - 1.0), 1e-12)
    try:
        su3_local_factor(3, 0.0)
        report.add("su3-pole-rejected", "sigma = 0 is rejected", True, False,
                   1.0, 0.0)
    except ZeroDivisionError:
        report.add("su3-pole-rejected", "sigma = 0 is rejected", True, True,
                   0.0, 0.0)


def suite_combinatorics(report: VerificationReport, cfg: RunConfig):
    def counting():
        for n in range(2, 6):
            datum = RootDatum(n)
            for cls in association_classes(datum):
                if cls.chamber_count() != cls.w_count() * cls.a_count:
                    return 1.0
            terms = truncation_terms(datum)
            if len(terms) != 2 ** (n - 1):
                return 1.0
            if sum(sign for _, sign in terms) != 0:
                return 1.0
        return 0.0

    bad, ms = _timed(counting)
    report.add("association-counting-gl2-gl5",
               "n(a_P) = w(P) a(class); 2^(n-1) truncation terms",
               0.0, bad, bad, 0.0, ms)

    datum = RootDatum(3)
    rho = datum.rho()
    ok = (rho.pairing(1) == 1 and rho.pairing(RHO_CHECK) == 2
          and float(rho.inner(rho)) == 2.0)
    report.add("rho-pairings", "<rho, a_check> = 1, <rho, rho_check> = 2",
               True, ok, 0.0 if ok else 1.0, 0.0)

    p0 = datum.parabolic([])
    p1 = datum.parabolic([1])
    p2 = datum.parabolic([2])
    ok = (len(transporters(p1, p2)) == 1 and len(transporters(p0, p0)) == 6
          and tau_hat(p0, (1.0, 1.0)) and not tau_hat(p0, (0.0, 0.0)))
    report.add("transporters-and-cone", "transporter sizes and cone tests",
               True, ok, 0.0 if ok else 1.0, 0.0)


def suite_nmatrix(report: VerificationReport, cfg: RunConfig):
    rng = np.random.default_rng(cfg.seed)
    zs = 1j * np.concatenate([[0.0], rng.uniform(-3.0, 3.0, 19)])

    entries = [[gl3mod.n_entry(i, j, cfg.z) for j in (1, 2, 3)]
               for i in (1, 2, 3)]
    resid = gl3mod.rank_one_residual(cfg.z)
    report.add(f"nmatrix-at-z={cfg.z}", "the nine entries of N(z), rank one",
               "rank one", entries, resid, cfg.tolerances["nmatrix-rank"])

    def sweep(fn):
        return max(fn(z) for z in zs)

    worst, ms = _timed(lambda: sweep(gl3mod.rank_one_residual))
    report.add("nmatrix-rank-one", "all 2x2 minors of N(z) vanish",
               0.0, worst, worst, cfg.tolerances["nmatrix-rank"], ms)
    worst, ms = _timed(lambda: sweep(gl3mod.symmetry_residual))
    report.add("nmatrix-symmetry", "n_ij(z) = n_ji(-z)",
               0.0, worst, worst, cfg.tolerances["nmatrix-symmetry"], ms)
    worst, ms = _timed(lambda: sweep(gl3mod.multiplicativity_residual))
    report.add("nmatrix-multiplicativity", "n_ij = n_ik conj(n_jk), k = 1, 2",
               0.0, worst, worst, cfg.tolerances["nmatrix-mult"], ms)

    if cfg.csv_path:
        gl3mod.emit_nmatrix_csv(cfg.csv_path, np.linspace(-3, 3, 121))


def suite_residues(report: VerificationReport, cfg: RunConfig):
    rng = np.random.default_rng(cfg.seed)
    L2 = complex(completed_L(2.0))
    zs = 1j * rng.uniform(-2.5, 2.5, 5)

    def transverse_all():
        worst = 0.0
        for z in zs:
            for i in (1, 2, 3):
                for j in (1, 2, 3):
                    got = gl3mod.transverse_residue(i, j, z)
                    want = gl3mod.n_entry(i, j, z) / L2
                    worst = max(worst, abs(got - want) / abs(want))
        return worst

    worst, ms = _timed(transverse_all)
    report.add("transverse-residues", "circle residue x L(2) = n_ij(z)",
               0.0, worst, worst, cfg.tolerances["transverse"], ms)

    table, ms = _timed(gl3mod.double_residue_table)
    forms = gl3mod.double_residue_closed_forms()
    worst = max(abs(v - f) / abs(f) for (_, _, v), f in zip(table, forms))
    report.add("double-residue-table", "five double residues match closed forms",
               0.0, worst, worst, cfg.tolerances["double-residue"], ms)

    cancel = abs(sum(v for (_, pt, v) in table if pt.coeffs != (1.0, 1.0)))
    report.add("double-residue-cancellation",
               "the four fundamental-weight residues sum to zero",
               0.0, cancel, cancel, cfg.tolerances["cancellation"], 0.0)


def suite_volume(report: VerificationReport, cfg: RunConfig):
    n = max(4, cfg.gln())
    for k in range(2, n + 1):
        datum = RootDatum(k)
        factors = gl3mod.volume_factors(datum)
        ok = factors == list(range(2, k + 1))
        value = gl3mod.volume_constant(datum)
        closed = float(np.prod([float(np.real(completed_L(float(f))))
                                for f in factors]))
        report.add(f"volume-gl{k}",
                   f"vol = {'*'.join('L(%d)' % f for f in factors)}",
                   closed, value,
                   abs(value - closed) + (0.0 if ok else 1.0),
                   cfg.tolerances["volume"], 0.0)


def suite_maass_selberg(report: VerificationReport, cfg: RunConfig):
    triples = [(1.2, 1.3, 1.0), (1.25, 1.25, 1.0), (1.4, 1.1, 0.5)]
    if (cfg.s1, cfg.s2, cfg.T) != (1.2, 1.3, 1.0):
        triples.append((cfg.s1, cfg.s2, cfg.T))
    records = []
    for (s1, s2, T) in triples:
        rec, ms = _timed(lambda a=s1, b=s2, c=T: maass_selberg_record(a, b, c))
        records.append(rec)
        report.add(f"maass-selberg-{s1}-{s2}-T{T}",
                   "truncated inner product matches the rank-one formula",
                   rec["formula_value"], rec["quadrature_value"],
                   rec["rel_err"], cfg.tolerances["maass-selberg"], ms)
    if cfg.csv_path:
        emit_maass_selberg_csv(cfg.csv_path, records)
        study = maass_selberg_convergence_study(cfg.s1, cfg.s2, cfg.T)
        emit_maass_selberg_csv(cfg.csv_path + ".study.csv", study)
        tail = [r["rel_err"] for r in study]
        ok = all(a >= b for a, b in zip(tail, tail[1:]))
        report.add("maass-selberg-convergence",
                   "residual decreases with the lattice bound",
                   True, ok, 0.0 if ok else 1.0, 0.0)


def suite_parseval(report: VerificationReport, cfg: RunConfig):
    rng = np.random.default_rng(cfg.seed)
    g2 = RootDatum(2)

    def gl2_runs():
        worst = 0.0
        for _ in range(5):
            phi = pv.PaleyWienerGaussian.random(g2, rng)
            shifted = pv.shifted_norm_gl2(phi, 1.5)
            axis, res = pv.decomposed_norm_gl2(phi)
            worst = max(worst, abs(shifted - axis - res) / abs(shifted))
        return worst

    worst, ms = _timed(gl2_runs)
    report.add("parseval-gl2", "shifted = axis + |Phi(rho)|^2 / L(2), 5 profiles",
               0.0, worst, worst, cfg.tolerances["parseval-gl2"], ms)

    g3 = RootDatum(3)

    fixed = pv.PaleyWienerGaussian(g3, cfg.beta)
    rep_fixed, ms = _timed(lambda: pv.parseval_check_gl3(
        fixed, cfg.lambda0, None, with_kappa=False))
    report.add("parseval-gl3-fixed-beta",
               f"decomposition at beta={cfg.beta}, lam0={list(cfg.lambda0)}",
               0.0, rep_fixed.residual_rel, rep_fixed.residual_rel,
               cfg.tolerances["parseval-gl3"], ms)

    kappas = []
    json_report = None

    def gl3_runs():
        worst_resid = 0.0
        worst_aform = 0.0
        nonlocal json_report
        for _ in range(3):
            phi = pv.PaleyWienerGaussian.random(g3, rng)
            rep = pv.parseval_check_gl3(phi, cfg.lambda0, (1.3, 1.8))
            kappas.append((rep.kappa_B, rep.kappa_C))
            worst_resid = max(worst_resid, rep.residual_rel)
            worst_resid = max(worst_resid,
                              abs(rep.shifted_alt - rep.shifted) / abs(rep.shifted))
            worst_aform = max(worst_aform,
                              abs(rep.A_direct - rep.A_symmetric)
                              / max(abs(rep.A_direct), 1e-300))
            json_report = rep
        return worst_resid, worst_aform

    (worst_resid, worst_aform), ms = _timed(gl3_runs)
    report.add("parseval-gl3", "shifted = A + kappa_B B + kappa_C C, 3 profiles",
               0.0, worst_resid, worst_resid, cfg.tolerances["parseval-gl3"], ms)
    spread = max(max(k) - min(k) for k in
                 (tuple(k[0] for k in kappas), tuple(k[1] for k in kappas)))
    report.add("parseval-kappa-spread", "kappa_B, kappa_C identical across runs",
               0.0, spread, spread, cfg.tolerances["kappa-spread"], 0.0)
    report.add("a-form-equivalence", "W-sum A equals (1/6) integral |F|^2",
               0.0, worst_aform, worst_aform, cfg.tolerances["a-form"], 0.0)

    if cfg.json_path and json_report is not None:
        with open(cfg.json_path + ".spectral", "w") as fh:
            fh.write(json_report.to_json())


SUITES = {
    "zeta": suite_zeta,
    "lfn": suite_lfn,
    "m-scalar": suite_m_scalar,
    "su3": suite_su3,
    "combinatorics": suite_combinatorics,
    "nmatrix": suite_nmatrix,
    "residues": suite_residues,
    "volume": suite_volume,
    "maass-selberg": suite_maass_selberg,
    "parseval": suite_parseval,
}


def run(config: RunConfig) -> VerificationReport:
    """Execute the selected suite(s) and collect a verification report."""
    report = VerificationReport(config)
    names = list(SUITES) if config.command == "all" else [config.command]
    for name in names:
        SUITES[name](report, config)
    if config.json_path:
        with open(config.json_path, "w") as fh:
            json.dump(report.to_json_dict(), fh, indent=2, sort_keys=True)
            fh.write("\n")
    return report


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eisenspec",
        description="Verification suites for the K-invariant spectral "
                    "decomposition machinery (completed-zeta ratios, root "
                    "combinatorics, residue matrices, truncation formulas).")
    parser.add_argument("--command", choices=COMMANDS, default="all")
    parser.add_argument("--group", default="gl3",
                        help="gl2, gl3, gl4, ... (used by volume and friends)")
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--json", dest="json_path", default=None,
                        help="write the verification report as JSON")
    parser.add_argument("--csv", dest="csv_path", default=None,
                        help="write suite-specific sample CSV")
    parser.add_argument("--beta", type=float, default=0.5)
    parser.add_argument("--lambda0", default="1.5,1.5",
                        help="contour base point, e.g. '1.5,1.5'")
    parser.add_argument("--T", type=float, default=1.0)
    parser.add_argument("--s1", type=float, default=1.2)
    parser.add_argument("--s2", type=float, default=1.3)
    parser.add_argument("--z", type=str, default="0.7j")
    for key, value in TOLERANCES.items():
        if value is not None:
            parser.add_argument(f"--tol-{key}", type=float, default=value,
                                dest=f"tol_{key.replace('-', '_')}")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    lam0 = tuple(float(v) for v in args.lambda0.split(","))
    if len(lam0) == 1:
        lam0 = (lam0[0], lam0[0])
    tols = dict(TOLERANCES)
    for key in TOLERANCES:
        attr = f"tol_{key.replace('-', '_')}"
        if hasattr(args, attr):
            tols[key] = getattr(args, attr)
    return RunConfig(
        command=args.command, group=args.group, seed=args.seed,
        json_path=args.json_path, csv_path=args.csv_path, beta=args.beta,
        lambda0=lam0, T=args.T, s1=args.s1, s2=args.s2,
        z=complex(args.z.replace("i", "j")), tolerances=tols)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    config = config_from_args(args)
    report = run(config)
    report.print_table()
    return 0 if report.all_passed else 1


if __name__ == "__main__":
    sys.exit(main())
