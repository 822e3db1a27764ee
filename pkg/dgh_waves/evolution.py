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
from typing import Callable, Optional, Tuple

import numpy as np
from scipy.optimize import minimize_scalar

from .logger import EmptyHandler, ArrayFilter
from .exceptions import Blowup, CFLViolation
from .types import EvolutionState, ModelParams, SpectralGrid, WaveProfile

log = logging.getLogger(__name__)
log.addHandler(EmptyHandler())
log.addFilter(ArrayFilter())


def helmholtz_invert(f: np.ndarray, alpha: float, grid: SpectralGrid) -> np.ndarray:
    """Solves (1 - alpha^2 d^2/dx^2) u = f mode by mode.

    Args:
        f (ndarray): Grid values of the right-hand side.
        alpha (float): Length-scale parameter.
        grid (SpectralGrid): Periodic grid.

    Returns:
        ndarray: Grid values of u.
    """

    k = grid.wavenumbers
    return np.fft.irfft(np.fft.rfft(f) / (1.0 + alpha ** 2 * k ** 2), n=grid.n_modes)


class _Operators():
    """Fourier symbols of the equation on one grid.

    With the nonlinear terms in flux form the equation reads
    u_t = L u + N(u), where L has the symbol
    -i(c0 k - gamma k^3)/(1 + alpha^2 k^2) and
    N(u) = -(1 - alpha^2 d_xx)^(-1) d_x [1.5u^2 - alpha^2 (u_x^2/2 + u u_xx)].
    """

    def __init__(self, params: ModelParams, grid: SpectralGrid):
        k = grid.wavenumbers
        self.params = params
        self.grid = grid
        self.ik = 1j * k
        self.helmholtz = 1.0 + params.alpha ** 2 * k ** 2
        self.linear = -1j * (params.c0 * k - params.gamma * k ** 3) / self.helmholtz

    def nonlinear(self, u_hat: np.ndarray) -> np.ndarray:
        n = self.grid.n_modes
        u_hat = u_hat * self.grid.dealias
        u = np.fft.irfft(u_hat, n=n)
        u_x = np.fft.irfft(self.ik * u_hat, n=n)
        u_xx = np.fft.irfft(self.ik ** 2 * u_hat, n=n)
        flux = 1.5 * u ** 2 - self.params.alpha ** 2 * (0.5 * u_x ** 2 + u * u_xx)
        flux_hat = np.fft.rfft(flux) * self.grid.dealias

        return -self.ik * flux_hat / self.helmholtz


def rhs(state: EvolutionState, params: ModelParams, grid: SpectralGrid) -> np.ndarray:
    """Time derivative u_t of the equation at a state.

    Args:
        state (EvolutionState): Current solution.
        params (ModelParams): Physical constants.
        grid (SpectralGrid): Periodic grid.

    Returns:
        ndarray: Grid values of u_t.
    """

    operators = _Operators(params, grid)
    u_hat = np.fft.rfft(state.u)

    return np.fft.irfft(operators.linear * u_hat + operators.nonlinear(u_hat), n=grid.n_modes)


def evolve(u0: np.ndarray, params: ModelParams, T: float, dt: float, grid: SpectralGrid,
           stride: int = 0,
           callback: Optional[Callable[[EvolutionState], None]] = None) -> EvolutionState:
    """Integrates the equation from u0 up to time T.

    The linear part is integrated exactly (integrating factor), the nonlinear
    part with the classical four-stage Runge-Kutta scheme. The step is
    shortened so that T is reached exactly.

    Args:
        u0 (ndarray): Initial grid values.
        params (ModelParams): Physical constants.
        T (float): Final time.
        dt (float): Largest time step.
        grid (SpectralGrid): Periodic grid.
        stride (int, optional): Steps between two `callback` calls, 0 to disable. Defaults to `0`.
        callback (Callable, optional): Func(`state`) receiving snapshots. Defaults to `None`.

    Raises:
        CFLViolation: Raises if dt exceeds domain_length/(n_modes*max|u0 + c0| + 1).
        Blowup: Raises if the solution stops being finite.

    Returns:
        EvolutionState: Solution at time T.
    """

    u0 = np.asarray(u0, dtype=float)
    if u0.shape != (grid.n_modes,):
        raise ValueError('u0 does not match the grid') from None
    if not dt > 0 or T < 0:
        raise ValueError(f"Need dt > 0 and T >= 0, got dt={dt}, T={T}") from None

    limit = grid.domain_length / (grid.n_modes * float(np.max(np.abs(u0 + params.c0))) + 1.0)
    if dt > limit:
        raise CFLViolation(f"Time step {dt} exceeds the stability limit {limit}")

    state = EvolutionState(u0, 0.0)
    if callback is not None and stride:
        callback(state)
    if T == 0:
        return state

    steps = max(1, math.ceil(T / dt - 1e-12))
    dt = T / steps
    operators = _Operators(params, grid)
    half = np.exp(0.5 * dt * operators.linear)
    full = half ** 2
    u_hat = np.fft.rfft(u0)

    for step in range(1, steps + 1):
        k1 = operators.nonlinear(u_hat)
        k2 = operators.nonlinear(half * (u_hat + 0.5 * dt * k1))
        k3 = operators.nonlinear(half * u_hat + 0.5 * dt * k2)
        k4 = operators.nonlinear(full * u_hat + dt * half * k3)
        u_hat = full * u_hat + dt / 6.0 * (full * k1 + 2.0 * half * (k2 + k3) + k4)

        t = step * dt
        if not np.all(np.isfinite(u_hat)):
            log.error('Solution is not finite at t=%s after %d steps', t, step)
            raise Blowup(t)
        if callback is not None and stride and (step % stride == 0 or step == steps):
            callback(EvolutionState(np.fft.irfft(u_hat, n=grid.n_modes), t))

    log.debug('Evolved %d steps of %s up to T=%s', steps, dt, T)

    return EvolutionState(np.fft.irfft(u_hat, n=grid.n_modes), T)


def _periodic_profile(profile: WaveProfile, domain_length: Optional[float]) -> Tuple:
    period = profile.period if profile.period is not None else profile.z[-1] - profile.z[0]
    domain_length = period if domain_length is None else domain_length
    spline = profile.interpolant()
    start = profile.z[0]

    def values(x):
        return spline(np.mod(x - start, period) + start)

    return values, period, domain_length


def sample_profile(profile: WaveProfile, grid: SpectralGrid) -> np.ndarray:
    """Grid values of a profile, repeated with its period (or its sampled extent)."""

    values, _, _ = _periodic_profile(profile, grid.domain_length)

    return values(grid.nodes)


def fit_shift(state: EvolutionState, profile: WaveProfile, c: Optional[float] = None,
              domain_length: Optional[float] = None) -> Tuple[float, float]:
    """Shift s minimizing max|u(x) - phi(x - s)| and the minimum.

    A coarse scan over one period, together with the expected shift cT, picks
    a start that golden-section search then refines.

    Args:
        state (EvolutionState): Solution on a uniform grid starting at x = 0.
        profile (WaveProfile): Travelling wave profile.
        c (float, optional): Expected speed. Defaults to `None`.
        domain_length (float, optional): Length of the grid. Defaults to the profile period.

    Returns:
        tuple: (shape error, shift in [0, period)).
    """

    values, period, domain_length = _periodic_profile(profile, domain_length)
    x = np.arange(state.u.size) * domain_length / state.u.size

    def distance(shift):
        return float(np.max(np.abs(state.u - values(x - shift))))

    candidates = list(np.linspace(0.0, period, 64, endpoint=False))
    if c is not None:
        candidates.append(math.fmod(c * state.t, period) % period)
    start = min(candidates, key=distance)
    step = period / 64.0
    result = minimize_scalar(distance, bracket=(start - step, start + step), method='golden',
                             options={'xtol': 1e-10})
    shift, error = float(result.x), float(result.fun)
    if distance(start) < error:
        shift, error = start, distance(start)

    return error, shift % period


def shape_error(state: EvolutionState, profile: WaveProfile, c: Optional[float] = None,
                domain_length: Optional[float] = None) -> float:
    """Translation-invariant distance min_s max_x |u(x) - phi(x - s)|."""

    error, _ = fit_shift(state, profile, c, domain_length)
    return error
