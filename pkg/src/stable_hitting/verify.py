"""Cross-check executive: every formula-vs-oracle, formula-vs-formula and
formula-vs-Monte-Carlo comparison is packaged into named suites that emit
machine-readable reports.

Suites never abort on a failing check; they collect everything so one
quadrature regression cannot mask another.  Monte Carlo checks use 4 standard
errors (two-sided false-alarm rate about 6e-5 per check) or a KS distance of
0.002 at N = 1e6; each check draws from its own (seed, check-index) stream so
reruns are bitwise reproducible.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy import integrate, special

from . import distributions as dist
from . import hitting_laws as hl
from . import sampling as smp
from .errors import UnknownSuite
from .numerics import laplace_invert_cdf
from .resolvent import (StableIndex, as_index, one_minus_cos_integral,
                        potential_kernel, potential_kernel_at_one,
                        resolvent_density, transition_density)


@dataclass(frozen=True)
class VerificationReport:
    """One named check: both sides, the tolerance and the verdict."""

    check_id: str
    lhs: float
    rhs: float
    tolerance: float
    passed: bool
    n_samples: Optional[int] = None
    notes: str = ""


def _check(reports, check_id, lhs, rhs, tol, n_samples=None, relative=False,
           notes=""):
    lhs, rhs = float(lhs), float(rhs)
    bound = tol * max(abs(lhs), abs(rhs), 1.0) if relative else tol
    reports.append(VerificationReport(
        check_id=check_id, lhs=lhs, rhs=rhs, tolerance=float(tol),
        passed=bool(abs(lhs - rhs) <= bound), n_samples=n_samples,
        notes=notes))


def _alphas(idx_grid, default):
    if not idx_grid:
        return [as_index(a) for a in default]
    return [as_index(a) for a in idx_grid]


# ------------------------------------------------------------------- suites

def _suite_brownian_oracle(idx_grid, seed, n_samples):
    """alpha = 2 closed forms: Gaussian resolvent and the six

    hyperbolic hitting/last-exit transforms, all to 1e-8."""
    del idx_grid, seed, n_samples
    reports = []
    tol = 1e-8
    idx = StableIndex(2.0)
    for q in (0.25, 1.0, 4.0):
        rq = math.sqrt(q)
        for x in (0.0, 0.5, 1.0, 2.0):
            _check(reports, f"resolvent/q={q}/x={x}",
                   resolvent_density(idx, q, x),
                   math.exp(-rq * x) / (2 * rq), tol)
        for a in (0.5, 1.0, 2.0):
            z = rq * a
            _check(reports, f"lt_hit/q={q}/a={a}",
                   hl.lt_hit_point(hl.HittingQuery(idx, q, a=a)),
                   math.exp(-z), tol)
            _check(reports, f"lt_last_exit/q={q}/a={a}",
                   hl.lt_last_exit(idx, q, a),
                   (1 - math.exp(-2 * z)) / (2 * z), tol)
            _check(reports, f"lt_post_exit/q={q}/a={a}",
                   hl.lt_post_exit(idx, q, a), z / math.sinh(z), tol)
            _check(reports, f"lt_hit_abs/q={q}/a={a}",
                   hl.lt_hit_abs(idx, q, a), 1 / math.cosh(z), tol)
            _check(reports, f"lt_last_exit_abs/q={q}/a={a}",
                   hl.lt_last_exit_abs(idx, q, a), math.tanh(z) / z, tol)
            _check(reports, f"lt_post_exit_abs/q={q}/a={a}",
                   hl.lt_post_exit_abs(idx, q, a), z / math.sinh(z), tol)
    for t, x in ((0.5, 0.0), (1.0, 0.7), (2.0, 1.5)):
        _check(reports, f"density/t={t}/x={x}",
               transition_density(idx, t, x),
               math.exp(-x * x / (4 * t)) / (2 * math.sqrt(math.pi * t)), tol)
    _check(reports, "potential_kernel/x=3", potential_kernel(idx, 3.0), 1.5, tol)
    return reports


def _suite_formula_algebra(idx_grid, seed, n_samples):
    """Product/sum/chain rules, the leg-decomposition gap, the series
    bracket and scale invariance, over an (alpha, q, a) grid."""
    del seed, n_samples
    reports = []
    for idx in _alphas(idx_grid, (1.2, 1.5, 1.8, 2.0)):
        al = idx.alpha
        for q in (0.5, 1.0, 2.0):
            for a in (0.5, 1.0, 2.0):
                tag = f"alpha={al}/q={q}/a={a}"
                _check(reports, f"product_point/{tag}",
                       hl.lt_last_exit(idx, q, a) * hl.lt_post_exit(idx, q, a),
                       hl.lt_hit_point(hl.HittingQuery(idx, q, a=a)), 1e-12)
                _check(reports, f"product_abs/{tag}",
                       hl.lt_last_exit_abs(idx, q, a) * hl.lt_post_exit_abs(idx, q, a),
                       hl.lt_hit_abs(idx, q, a), 1e-12)
                for c in (0.5, 3.0):
                    _check(reports, f"scale_c={c}/{tag}",
                           hl.lt_hit_abs(idx, q, a),
                           hl.lt_hit_abs(idx, q / c ** al, c * a), 1e-9)
        # two-route agreement for D_n plus its sign
        for n in range(1, 11):
            gap = hl.leg_decomposition_gap(idx, 1.0, 1.0, n)
            if al < 2.0:
                _check(reports, f"dn_positive/alpha={al}/n={n}",
                       min(gap, 0.0), 0.0, 0.0,
                       notes=f"D_n={gap:.3e}")
            else:
                _check(reports, f"dn_zero/alpha={al}/n={n}", gap, 0.0, 1e-12)
        target = hl.lt_hit_abs(idx, 1.0, 1.0)
        ok = True
        for n in range(2, 51):
            _, (lo, hi) = hl.lt_hit_abs_series(idx, 1.0, 1.0, n)
            ok = ok and (lo - 1e-13 <= target <= hi + 1e-13)
        _check(reports, f"series_bracket/alpha={al}", float(ok), 1.0, 0.0)
    return reports


def _suite_mc_vs_formula(idx_grid, seed, n_samples):
    """Monte Carlo of the hitting-time sampler against the resolvent ratio."""
    reports = []
    for i, idx in enumerate(_alphas(idx_grid, (1.2, 1.5, 1.8))):
        stream = smp.RandomStream(seed, i)
        draws = smp.sample_hitting_time(idx, 1.0, stream, size=n_samples)
        for q in (0.5, 1.0, 2.0):
            vals = np.exp(-q * draws)
            mc = float(np.mean(vals))
            se = float(np.std(vals, ddof=1) / math.sqrt(n_samples))
            want = hl.lt_hit_point(hl.HittingQuery(idx, q, a=1.0))
            _check(reports, f"hit_mc/alpha={idx.alpha}/q={q}", mc, want,
                   4 * se, n_samples=n_samples, notes=f"stderr={se:.3e}")
    return reports


def _suite_relation_r(idx_grid, seed, n_samples):
    """alpha-Cauchy char-fn against the Linnik density times
    alpha sin(pi/alpha)."""
    del seed, n_samples
    reports = []
    for idx in _alphas(idx_grid, (1.25, 1.5, 1.8)):
        al = idx.alpha
        const = dist.relation_r_constant(al)
        for theta in (0.25, 0.5, 1.0, 2.0, 4.0):
            _check(reports, f"relation_r/alpha={al}/theta={theta}",
                   dist.alpha_cauchy_charfn(al, theta),
                   const * dist.linnik_density(al, theta), 1e-6)
    return reports


def _stieltjes_reference(p, q, r, g):
    """E[1/(p + q B + r B U^{-1/g})] by nested quadrature over (B, U)."""
    def inner(v):
        fb = v ** (-g) * (1 - v) ** (g - 1) / special.beta(1 - g, g)
        val = integrate.quad(
            lambda u: 1.0 / (p + q * v + r * v * u ** (-1.0 / g)),
            0, 1, limit=200)[0]
        return fb * val
    return integrate.quad(inner, 0, 1, points=[0.0, 1.0], limit=200)[0]


def _suite_excursion(idx_grid, seed, n_samples):
    """Age/duration of the straddling excursion: Stieltjes transform against
    quadrature, and the exponential-time triplet marginals."""
    del idx_grid
    reports = []
    for i, g in enumerate((1.0 / 3.0, 0.5)):
        stream = smp.RandomStream(seed, 100 + i)
        xi, delta = smp.sample_excursion_age_duration(g, stream, size=n_samples)
        for p, q, r in ((1.0, 1.0, 1.0), (2.0, 1.0, 0.5)):
            vals = 1.0 / (p + q * xi + r * delta)
            mc = float(np.mean(vals))
            se = float(np.std(vals, ddof=1) / math.sqrt(n_samples))
            want = _stieltjes_reference(p, q, r, g)
            _check(reports, f"stieltjes/gamma={g:.4f}/pqr={p},{q},{r}",
                   mc, want, 4 * se, n_samples=n_samples,
                   notes=f"stderr={se:.3e}")
        stream = smp.RandomStream(seed, 200 + i)
        gg, age, _ = smp.sample_excursion_at_exp_time(g, stream, size=n_samples)
        for name, draws, want in (("last_zero", gg, g), ("age", age, 1 - g)):
            se = float(np.std(draws, ddof=1) / math.sqrt(n_samples))
            _check(reports, f"exp_triplet_mean/{name}/gamma={g:.4f}",
                   float(np.mean(draws)), want, 4 * se, n_samples=n_samples,
                   notes=f"stderr={se:.3e}")
    return reports


def _suite_appendix(idx_grid, seed, n_samples):
    """Quadrature of (1/pi) int (1-cos x)/x^a dx against the closed form."""
    del idx_grid, seed, n_samples
    reports = []
    for alpha in (1.1, 1.5, 2.0, 2.5, 2.9):
        _check(reports, f"appendix/alpha={alpha}",
               one_minus_cos_integral(alpha),
               potential_kernel_at_one(alpha), 1e-8)
    return reports


def _suite_inversion(idx_grid, seed, n_samples):
    """Gaver-Stehfest inversion: exponential oracle, and the hitting-time CDF
    against empirical quantiles of the exact sampler."""
    del idx_grid
    reports = []
    phi = lambda q: 1.0 / (1.0 + q)
    worst = max(abs(laplace_invert_cdf(phi, float(t), n_terms=20)
                    - (1 - math.exp(-t)))
                for t in np.arange(0.1, 5.01, 0.1))
    _check(reports, "exponential_cdf/n_terms=20", worst, 0.0, 1e-6,
           notes="max abs error over t in 0.1..5")
    idx = StableIndex(1.5)
    stream = smp.RandomStream(seed, 300)
    n = n_samples
    draws = np.sort(smp.sample_hitting_time(idx, 1.0, stream, size=n))
    hit_lt = lambda q: hl.lt_hit_point(hl.HittingQuery(idx, float(q), a=1.0))
    for p in (0.10, 0.25, 0.50, 0.75, 0.90):
        t_emp = float(draws[min(int(p * n), n - 1)])
        inverted = laplace_invert_cdf(hit_lt, t_emp, n_terms=12)
        noise = math.sqrt(p * (1 - p) / n)
        _check(reports, f"hit_cdf_quantile/p={p}", inverted, p,
               1e-3 + 3 * noise, n_samples=n,
               notes=f"t={t_emp:.5f}")
    return reports


_SUITES = {
    "brownian_oracle": _suite_brownian_oracle,
    "formula_algebra": _suite_formula_algebra,
    "mc_vs_formula": _suite_mc_vs_formula,
    "relation_R": _suite_relation_r,
    "excursion": _suite_excursion,
    "appendix": _suite_appendix,
    "inversion": _suite_inversion,
}

SUITE_NAMES = tuple(_SUITES)


def run_suite(suite_name: str, idx_grid=None, seed: int = 0,
              n_samples: int = 1_000_000) -> list[VerificationReport]:
    """Run every check of a named suite; failures collect, never abort."""
    try:
        fn = _SUITES[suite_name]
    except KeyError:
        raise UnknownSuite(
            f"unknown suite {suite_name!r}; choose from {', '.join(_SUITES)}")
    return fn(idx_grid, seed, n_samples)


# ------------------------------------------------------------------ reports

_FIELDS = ("check_id", "lhs", "rhs", "tolerance", "pass", "n_samples", "notes")


def _g17(x: float) -> str:
    return format(float(x), ".17g")


def report_to_json(reports) -> str:
    """Stable field order, floats at 17 significant digits."""
    rows = []
    for r in reports:
        rows.append("{"
                    f"\"check_id\": {json.dumps(r.check_id)}, "
                    f"\"lhs\": {_g17(r.lhs)}, "
                    f"\"rhs\": {_g17(r.rhs)}, "
                    f"\"tolerance\": {_g17(r.tolerance)}, "
                    f"\"pass\": {'true' if r.passed else 'false'}, "
                    f"\"n_samples\": {r.n_samples if r.n_samples is not None else 'null'}, "
                    f"\"notes\": {json.dumps(r.notes)}"
                    "}")
    return "[" + ",\n ".join(rows) + "]" if rows else "[]"


def report_to_csv(reports) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(_FIELDS)
    for r in reports:
        writer.writerow([
            r.check_id, _g17(r.lhs), _g17(r.rhs), _g17(r.tolerance),
            "true" if r.passed else "false",
            "" if r.n_samples is None else str(r.n_samples), r.notes])
    return out.getvalue()


def all_passed(reports) -> bool:
    return all(r.passed for r in reports)
