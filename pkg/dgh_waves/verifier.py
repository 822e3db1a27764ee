# dgh_waves
#
# Copyright (C) 2024 dgh_waves developers
#
# Permission is hereby granted, free of charge, to any person
# obtaining a copy of this software and associated documentation
# files (the "Software"), to deal in the Software without restriction,
# including without limitation the rights to use, copy, modify,
# merge, publish, distribute, sublicense, and/or sell copies
# of the Software, and to permit persons to whom the Software
# is furnished to do so, subject to the following conditions:

# The above copyright notice and this permission notice shall be
# included in all copies or substantial portions of the Software.

# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
# EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
# OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
# NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
# HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
# WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
# OTHER DEALINGS IN THE SOFTWARE.

import math
import logging
from typing import List, Optional, Tuple

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view
from scipy.interpolate import make_interp_spline

from .common import NumUtils
from .logger import EmptyHandler, ArrayFilter
from .exceptions import NoPole, WrongClass
from .model import decay_constant, potential_eval
from .types import ResidualReport, TestFunctionSpec, TravelingWaveProblem, WaveProfile

log = logging.getLogger(__name__)
log.addHandler(EmptyHandler())
log.addFilter(ArrayFilter())


def _five_point_slope(z: np.ndarray, phi: np.ndarray) -> np.ndarray:
    # weights exact for quartics on every 5-sample window, rescaled per window
    offsets = sliding_window_view(z, 5) - z[2:-2, None]
    scale = np.max(np.abs(offsets), axis=1, keepdims=True)
    powers = (offsets / scale)[:, None, :] ** np.arange(5)[None, :, None]
    rhs = np.zeros((offsets.shape[0], 5, 1))
    rhs[:, 1, 0] = 1.0
    weights = np.linalg.solve(powers, rhs)[..., 0] / scale

    return np.sum(weights * sliding_window_view(phi, 5), axis=1)


def _segment_problem(profile: WaveProfile, index: int,
                     problem: Optional[TravelingWaveProblem]) -> TravelingWaveProblem:
    return profile.segments[index].problem or problem or profile.problem


def quadrature_residual(profile: WaveProfile,
                        problem: Optional[TravelingWaveProblem] = None) -> float:
    """Largest normalized defect |phi'^2 - F(phi)| / max(1, |F|) on smooth segments.

    phi' comes from a five-point stencil on the samples. The three samples
    nearest to a singular point or a segment end are skipped, and so are the
    samples within 1% of the segment length from a cusp.

    Args:
        profile (WaveProfile): Profile to check.
        problem (TravelingWaveProblem, optional): Problem of segments that carry none. \
Defaults to `profile.problem`.

    Returns:
        float: Normalized residual.
    """

    singular = [s.z_lo for s in profile.singular_points]
    cusps = [s.z_lo for s in profile.singular_points if s.kind == 'cusp']
    worst = 0.0

    for index, segment in enumerate(profile.segments):
        if segment.kind != 'smooth':
            continue
        rows = np.flatnonzero(profile.segment_ids == index)
        if rows.size < 8:
            log.debug('Segment %s has only %d samples, skipped', segment, rows.size)
            continue
        z, phi = profile.z[rows], profile.phi[rows]
        slope = _five_point_slope(z, phi)

        keep = np.ones(rows.size, dtype=bool)
        keep[:3] = False
        keep[-3:] = False
        for point in singular:
            if segment.z_lo <= point <= segment.z_hi:
                keep[np.argsort(np.abs(z - point))[:3]] = False
        for point in cusps:
            keep[np.abs(z - point) < 0.01 * (segment.z_hi - segment.z_lo)] = False
        keep = keep[2:-2]
        if not np.any(keep):
            continue

        target = potential_eval(_segment_problem(profile, index, problem),
                                phi[2:-2][keep], removable=True)
        residual = np.abs(slope[keep] ** 2 - target) / np.maximum(1.0, np.abs(target))
        worst = max(worst, float(np.max(residual)))

    log.debug('Quadrature residual: %s', worst)

    return worst


class _Chart():
    """Quintic spline of phi on a part of a smooth segment.

    Next to a cusp the spline is taken in tau = |z - z_cusp|^(1/3), where the
    profile is smooth.
    """

    def __init__(self, z: np.ndarray, phi: np.ndarray, lo: float, hi: float,
                 cusp: Optional[float] = None):
        self.lo = lo
        self.hi = hi
        self.cusp = cusp
        if cusp is None:
            self.spline = make_interp_spline(z, phi, k=5)
        else:
            tau = np.cbrt(np.abs(z - cusp))
            order = np.argsort(tau)
            self.spline = make_interp_spline(tau[order], phi[order], k=5)

    def nodes(self, a: float, b: float) -> Tuple[np.ndarray, ...]:
        """Quadrature nodes in z on [a, b] with weights, phi and dphi/dz."""

        if self.cusp is None:
            z, weights = NumUtils.gauss_panels(a, b)
            return z, weights, self.spline(z), self.spline(z, 1)

        side = 1.0 if a + b > 2.0 * self.cusp else -1.0
        ends = sorted((np.cbrt(abs(a - self.cusp)), np.cbrt(abs(b - self.cusp))))
        tau, weights = NumUtils.gauss_panels(*ends)
        jacobian = 3.0 * tau ** 2

        return (self.cusp + side * tau ** 3, weights * jacobian, self.spline(tau),
                side * self.spline(tau, 1) / jacobian)


def _charts(profile: WaveProfile) -> List[_Chart]:
    cusps = [s.z_lo for s in profile.singular_points if s.kind == 'cusp']
    charts = []
    for segment in profile.segments:
        if segment.kind != 'smooth':
            continue
        lo, hi = segment.z_lo, segment.z_hi
        inside = (profile.z >= lo) & (profile.z <= hi)
        z, phi = profile.z[inside], profile.phi[inside]
        at_lo = any(math.isclose(p, lo, abs_tol=1e-12) for p in cusps)
        at_hi = any(math.isclose(p, hi, abs_tol=1e-12) for p in cusps)
        middle = 0.5 * (lo + hi)
        if at_lo and at_hi:
            left = z <= middle
            right = z >= middle
            charts.append(_Chart(z[left], phi[left], lo, middle, lo))
            charts.append(_Chart(z[right], phi[right], middle, hi, hi))
        elif at_lo or at_hi:
            charts.append(_Chart(z, phi, lo, hi, lo if at_lo else hi))
        else:
            charts.append(_Chart(z, phi, lo, hi))

    return charts


def _test_functions(profile: WaveProfile, n_tests: int, seed: int) -> List[TestFunctionSpec]:
    rng = np.random.default_rng(seed)
    z_lo, z_hi = float(profile.z[0]), float(profile.z[-1])
    width = z_hi - z_lo
    tests = []

    for segment in profile.singular_points:
        point = segment.z_lo
        if len(tests) == n_tests or not z_lo < point < z_hi:
            continue
        radius = min(rng.uniform(0.05, 0.2) * width, 0.999 * min(point - z_lo, z_hi - point))
        tests.append(TestFunctionSpec(point, radius, seed=seed))

    while len(tests) < n_tests:
        radius = rng.uniform(0.05, 0.2) * width
        tests.append(TestFunctionSpec(rng.uniform(z_lo + radius, z_hi - radius), radius,
                                      seed=seed))

    return tests


def weak_residual(profile: WaveProfile, problem: Optional[TravelingWaveProblem] = None,
                  n_tests: int = 20, seed: int = 0,
                  tolerance: float = NumUtils.RESIDUAL_TOL) -> ResidualReport:
    """Distributional residual of the once integrated travelling wave equation.

    For every bump psi the integral of
    -D phi' psi' + ((alpha^2/2) phi'^2 + (c0 - c) phi + 1.5 phi^2 - A/2) psi,
    with D = alpha^2 (c - phi) + gamma, must vanish; it is divided by the
    integral of |psi|. The first bumps are centered on the singular points.

    Args:
        profile (WaveProfile): Profile to check.
        problem (TravelingWaveProblem, optional): Constants to test against. \
Defaults to `profile.problem`.
        n_tests (int, optional): Number of bumps. Defaults to `20`.
        seed (int, optional): Seed of the bump placement. Defaults to `0`.
        tolerance (float, optional): Pass threshold. Defaults to `NumUtils.RESIDUAL_TOL`.

    Returns:
        ResidualReport: Strong and weak residuals.
    """

    if n_tests < 1:
        raise ValueError('At least one test function is needed') from None
    problem = problem or profile.problem
    params = problem.params
    alpha2 = params.alpha ** 2
    half_A = 0.5 * problem.A

    def integrand(phi, dphi, psi, dpsi):
        flux = (alpha2 * (problem.c - phi) + params.gamma) * dphi * dpsi
        source = 0.5 * alpha2 * dphi ** 2 + (params.c0 - problem.c) * phi + 1.5 * phi ** 2
        return -flux + (source - half_A) * psi

    charts = _charts(profile)
    plateaus = [s for s in profile.segments if s.kind == 'plateau']
    tests = _test_functions(profile, n_tests, seed)
    singular = [s.z_lo for s in profile.singular_points]
    worst = 0.0

    for test in tests:
        lo, hi = test.support
        total = 0.0
        for chart in charts:
            a, b = max(lo, chart.lo), min(hi, chart.hi)
            if b <= a:
                continue
            z, weights, phi, dphi = chart.nodes(a, b)
            psi, dpsi = test(z)
            total += float(np.sum(weights * integrand(phi, dphi, psi, dpsi)))
        for plateau in plateaus:
            a, b = max(lo, plateau.z_lo), min(hi, plateau.z_hi)
            if b <= a:
                continue
            z, weights = NumUtils.gauss_panels(a, b)
            psi, _ = test(z)
            level = np.full_like(z, profile.wave_class.pole)
            total += float(np.sum(weights * integrand(level, 0.0 * z, psi, 0.0 * z)))
        z, weights = NumUtils.gauss_panels(lo, hi)
        norm = float(np.sum(weights * np.abs(test(z)[0])))
        worst = max(worst, abs(total) / norm)

    straddling = sum(1 for test in tests if any(test.straddles(p) for p in singular))
    report = ResidualReport(quadrature_residual(profile, problem), worst, len(tests),
                            straddling, tolerance)
    log.debug('Weak residual report: %s', report)

    return report


def decay_rate(profile: WaveProfile) -> Tuple[float, float]:
    """Fitted and predicted exponential decay rates of a decaying profile.

    The fit is a log-linear regression of |phi - limit| over the outer half of
    the samples between the extremum and the start of the analytic tail.

    Raises:
        WrongClass: Raises if the profile does not decay.

    Returns:
        tuple: (fitted rate, sqrt(kappa)).
    """

    decay = profile.decay
    if decay is None:
        raise WrongClass('The profile has no decaying tail')

    start = decay.origin + 0.5 * (decay.z_cut - decay.origin)
    rows = np.flatnonzero((profile.z >= start) & (profile.z <= decay.z_cut))
    slope, _ = np.polyfit(profile.z[rows], np.log(np.abs(profile.phi[rows] - decay.limit)), 1)
    problem = _segment_problem(profile, int(profile.segment_ids[rows[-1]]), None)

    return -float(slope), math.sqrt(decay_constant(problem, decay.limit))


def local_exponent(profile: WaveProfile, point: float = 0.0) -> float:
    """Exponent p of |phi - phi(point)| ~ |z - point|^p over the innermost decade to the right.

    Args:
        profile (WaveProfile): Profile.
        point (float, optional): Location of a sample, usually a cusp. Defaults to `0`.

    Returns:
        float: Fitted exponent.
    """

    center = int(np.argmin(np.abs(profile.z - point)))
    offsets = profile.z[center + 1:] - profile.z[center]
    values = np.abs(profile.phi[center + 1:] - profile.phi[center])
    inner = offsets <= 10.0 * offsets[0]
    slope, _ = np.polyfit(np.log(offsets[inner]), np.log(values[inner]), 1)

    return float(slope)


def _one_sided(z: np.ndarray, g: np.ndarray) -> float:
    # derivative at z[0] of the parabola through three samples
    h1, h2 = z[1] - z[0], z[2] - z[0]
    return float(((g[1] - g[0]) * h2 ** 2 - (g[2] - g[0]) * h1 ** 2) / (h1 * h2 * (h2 - h1)))


def _variation(z: np.ndarray, g: np.ndarray) -> float:
    return float(np.sum(np.abs(np.diff(np.gradient(g, z)))))


def regularity_check(profile: WaveProfile, pole: Optional[float] = None,
                     tol: float = 1e-3) -> bool:
    """Checks that (phi - c~)^2 has a continuous derivative at every singular point.

    The one-sided derivatives of g = (phi - c~)^2 may differ by at most `tol`,
    and the total variation of g' around each point (the L1 norm of g'')
    must not grow by more than 10% from every other sample to all samples.

    Args:
        profile (WaveProfile): Profile.
        pole (float, optional): c~. Defaults to the pole of the profile class.
        tol (float, optional): Allowed jump of g'. Defaults to `1e-3`.

    Raises:
        NoPole: Raises if no pole is known.

    Returns:
        bool: `True` if the profile passes.
    """

    pole = profile.wave_class.pole if pole is None else pole
    if pole is None:
        raise NoPole('The regularity check needs the pole c~')

    g = (profile.phi - pole) ** 2
    z = profile.z
    ids = profile.segment_ids

    for index, segment in enumerate(profile.segments):
        if not segment.is_point:
            continue
        k = int(np.flatnonzero(ids == index)[0])
        jump = 0.0
        if 2 <= k <= z.size - 3:
            jump = abs(_one_sided(z[k::-1][:3], g[k::-1][:3]) - _one_sided(z[k:k + 3], g[k:k + 3]))
        if jump > tol:
            log.debug('Derivative of (phi - c~)^2 jumps by %s at z=%s', jump, z[k])
            return False

        window = ((ids == index - 1) | (ids == index) | (ids == index + 1))
        rows = np.flatnonzero(window)
        coarse = rows[(rows - k) % 2 == 0]
        if rows.size < 6 or coarse.size < 3:
            continue
        fine_variation = _variation(z[rows], g[rows])
        coarse_variation = _variation(z[coarse], g[coarse])
        if fine_variation > 1.1 * coarse_variation + tol:
            log.debug('Variation of g\' grows under refinement at z=%s: %s -> %s',
                      z[k], coarse_variation, fine_variation)
            return False

    return True


def verify_profile(profile: WaveProfile, n_tests: int = 20, seed: int = 0,
                   tolerance: float = NumUtils.RESIDUAL_TOL) -> ResidualReport:
    """Runs every applicable check on a profile and collects them in one report."""

    report = weak_residual(profile, None, n_tests, seed, tolerance)
    if profile.singular_points and profile.wave_class.pole is not None:
        report.details['regular'] = regularity_check(profile)
    if profile.decay is not None:
        fitted, predicted = decay_rate(profile)
        report.details['decay_fitted'] = fitted
        report.details['decay_predicted'] = predicted
        report.details['decay_ok'] = abs(fitted - predicted) <= 0.01 * predicted

    return report
