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

import logging
from typing import List, Optional, Tuple, Union

import numpy as np

from .common import NumUtils
from .logger import EmptyHandler, ArrayFilter
from .exceptions import NoPole, PoleEvaluation
from .types import Cubic, ModelParams, PotentialSpectrum, TravelingWaveProblem

log = logging.getLogger(__name__)
log.addHandler(EmptyHandler())
log.addFilter(ArrayFilter())

Number = Union[float, np.ndarray]


def make_problem(params: ModelParams, c: float, A: float, B: float) -> TravelingWaveProblem:
    """Builds a validated travelling wave problem.

    Args:
        params (ModelParams): Physical constants.
        c (float): Wave speed.
        A (float): First integration constant.
        B (float): Second integration constant.

    Raises:
        ValueError: Raises if a value is not finite.

    Returns:
        TravelingWaveProblem: Problem object.
    """

    return TravelingWaveProblem(params, c, A, B)


def cubic_of(problem: TravelingWaveProblem) -> Cubic:
    """Cubic P of the problem, coefficients [-1, c-c0, A, B]."""

    return Cubic([-1.0, problem.c - problem.params.c0, problem.A, problem.B])


def _polish(cubic: Cubic, root: float) -> float:
    # Newton steps are only kept while they decrease |P|
    for _ in range(2):
        slope = cubic.derivative(root)
        value = cubic(root)
        if value == 0 or abs(slope) <= 1e-12 * max(1.0, abs(root)) ** 2:
            break
        candidate = root - value / slope
        if abs(cubic(candidate)) >= abs(value):
            break
        root = candidate
    return root


def solve_cubic(cubic: Cubic, cluster_tol: Optional[float] = None) -> List[Tuple[float, int]]:
    """Real roots of the cubic with multiplicities.

    The depressed cubic is solved in closed form (double-root formula when the
    discriminant vanishes relative to its scale, trigonometric form for three
    real roots, Cardano otherwise). Simple roots get a guarded Newton polish,
    then roots closer than `cluster_tol * max(1, |root|)` are merged at their mean.

    Args:
        cubic (Cubic): Cubic with leading coefficient -1.
        cluster_tol (float, optional): Relative merge distance. Defaults to `NumUtils.CLUSTER_TOL`.

    Returns:
        list: Ascending (value, multiplicity) pairs.
    """

    tol = NumUtils.CLUSTER_TOL if cluster_tol is None else cluster_tol
    if tol <= 0:
        raise ValueError('cluster_tol must be positive') from None

    _, a2, a1, a0 = cubic.coefficients
    a, b, d = -a2, -a1, -a0
    shift = -a / 3.0
    p = b - a * a / 3.0
    q = 2.0 * a ** 3 / 27.0 - a * b / 3.0 + d

    half_q = q / 2.0
    third_p = p / 3.0
    disc = half_q ** 2 + third_p ** 3
    scale = max(half_q ** 2, abs(third_p) ** 3)

    if scale == 0:
        roots = [shift] * 3
        polish = [False] * 3
    elif abs(disc) <= max(tol ** 2, 64 * np.finfo(float).eps) * scale:
        u = float(np.cbrt(-half_q))
        roots = [2 * u + shift, -u + shift, -u + shift]
        polish = [True, False, False]
    elif disc < 0:
        radius = 2.0 * np.sqrt(-third_p)
        angle = np.arccos(np.clip(3.0 * q / (2.0 * p) * np.sqrt(-3.0 / p), -1.0, 1.0)) / 3.0
        roots = [float(radius * np.cos(angle - 2.0 * np.pi * k / 3.0)) + shift for k in range(3)]
        polish = [True] * 3
    else:
        root_disc = np.sqrt(disc)
        roots = [float(np.cbrt(-half_q + root_disc) + np.cbrt(-half_q - root_disc)) + shift]
        polish = [True]

    roots = sorted(_polish(cubic, r) if flag else r for r, flag in zip(roots, polish))

    clusters = []
    for root in roots:
        if clusters:
            mean = sum(clusters[-1]) / len(clusters[-1])
            if abs(root - mean) <= tol * max(1.0, abs(mean)):
                clusters[-1].append(root)
                continue
        clusters.append([root])

    result = [(sum(group) / len(group), len(group)) for group in clusters]
    log.debug('Roots of %s: %s', cubic, result)

    return result


def constants_from_roots(params: ModelParams, c: float, m: float,
                         M: float) -> Tuple[float, float, float]:
    """Integration constants whose cubic has the roots m, M and z0 = c - c0 - M - m.

    Args:
        params (ModelParams): Physical constants.
        c (float): Wave speed.
        m (float): Lower root.
        M (float): Upper root.

    Raises:
        ValueError: Raises if m > M.

    Returns:
        tuple: (A, B, z0).
    """

    if m > M:
        raise ValueError(f"m must not exceed M, got m={m}, M={M}") from None
    z0 = c - params.c0 - M - m
    A = -(M * m + M * z0 + m * z0)
    B = M * m * z0

    return A, B, z0


def ellipse_constant(params: ModelParams, c: float, m: float, M: float) -> float:
    """Constant A as a function of (m, M); its level sets are ellipses in the (m, M) plane."""

    return -M * m - (M + m) * (c - params.c0 - M - m)


def pole_location(params: ModelParams, c: float) -> Optional[float]:
    """Pole c~ = c + gamma/alpha^2 of the potential, `None` when alpha = 0."""

    if params.is_kdv:
        return None
    return c + params.gamma / params.alpha ** 2


def reduced_potential(problem: TravelingWaveProblem) -> Tuple[np.ndarray, float]:
    """Splits P(phi) = (c~ - phi) Q(phi) + R.

    Args:
        problem (TravelingWaveProblem): Problem with alpha != 0.

    Raises:
        NoPole: Raises if alpha = 0.

    Returns:
        tuple: Quadratic Q (descending coefficients) and remainder R = P(c~).
    """

    pole = pole_location(problem.params, problem.c)
    if pole is None:
        raise NoPole('The potential has no pole when alpha = 0')
    # P = (phi - c~) T + P(c~), so Q = -T
    quotient, remainder = np.polydiv(np.array(cubic_of(problem).coefficients), [1.0, -pole])

    return -quotient, float(remainder[-1])


def is_removable(problem: TravelingWaveProblem, tol: Optional[float] = None) -> bool:
    """Returns `True` if a root of P coincides with the pole, so F has no singularity there."""

    pole = pole_location(problem.params, problem.c)
    if pole is None:
        return False

    roots = solve_cubic(cubic_of(problem), tol)

    return any(NumUtils.is_close(root, pole, tol) for root, _ in roots)


def potential_eval(problem: TravelingWaveProblem, phi: Number,
                   removable: bool = False) -> Number:
    """Potential F(phi) of the quadrature form (phi')^2 = F(phi).

    Args:
        problem (TravelingWaveProblem): Problem.
        phi (float|ndarray): Evaluation point(s).
        removable (bool, optional): Use the pole-cancelled form when P(c~) = 0. \
Defaults to `False`.

    Raises:
        PoleEvaluation: Raises if phi hits a pole that is not cancelled.

    Returns:
        float|ndarray: F(phi).
    """

    params = problem.params
    if params.is_kdv:
        return cubic_of(problem)(phi) / params.gamma

    if removable and is_removable(problem):
        quotient, _ = reduced_potential(problem)
        return np.polyval(quotient, phi) / params.alpha ** 2

    pole = pole_location(params, problem.c)
    denominator = params.alpha ** 2 * (pole - np.asarray(phi, dtype=float))
    if np.any(denominator == 0):
        raise PoleEvaluation(f"F evaluated at its pole {pole}")
    result = cubic_of(problem)(np.asarray(phi, dtype=float)) / denominator

    return float(result) if np.ndim(result) == 0 else result


def decay_constant(problem: TravelingWaveProblem, limit: float) -> float:
    """Limit of F(phi)/(phi - d)^2 at a double root d of P.

    With P = -(phi - d)^2 (phi - r) and r = c - c0 - 2d the limit is
    (c - c0 - 3d) divided by alpha^2 (c~ - d), or by gamma when alpha = 0.

    Args:
        problem (TravelingWaveProblem): Problem.
        limit (float): Double root d.

    Returns:
        float: Decay constant kappa, positive for a homoclinic orbit.
    """

    params = problem.params
    numerator = problem.c - params.c0 - 3.0 * limit
    if params.is_kdv:
        return numerator / params.gamma
    return numerator / (params.alpha ** 2 * (pole_location(params, problem.c) - limit))


def mirror_problem(problem: TravelingWaveProblem) -> TravelingWaveProblem:
    """Problem of the reflected wave -phi.

    (c, c0, gamma, A, B) goes to (-c, -c0, -gamma, A, -B) with alpha unchanged,
    which negates the roots of P and the pole and keeps F(-phi) = F(phi).
    """

    params = problem.params
    mirrored = ModelParams(params.alpha, -params.c0, -params.gamma)

    return TravelingWaveProblem(mirrored, -problem.c, problem.A, -problem.B)


def spectrum_of(problem: TravelingWaveProblem,
                cluster_tol: Optional[float] = None) -> PotentialSpectrum:
    """Roots of P with multiplicities and the pole of F."""

    return PotentialSpectrum(
        solve_cubic(cubic_of(problem), cluster_tol),
        pole_location(problem.params, problem.c)
    )
