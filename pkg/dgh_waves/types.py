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

import json
import math
from enum import Enum
from typing import Any, List, Optional, Sequence, Tuple

import numpy as np
from scipy.interpolate import CubicSpline

from .common import NumUtils
from .exceptions import BurgersCaseExcluded


def _frozen(values: Any) -> np.ndarray:
    array = np.array(values, dtype=float)
    array.flags.writeable = False
    return array


class ModelParams():
    """Physical constants of the DGH equation.

    Args:
        alpha (float): Length-scale parameter, may be 0 (KdV limit).
        c0 (float): Linear wave speed.
        gamma (float): Dispersion coefficient, may be 0 (Camassa-Holm limit).

    Raises:
        ValueError: Raises if a field is not finite.
        BurgersCaseExcluded: Raises if alpha = gamma = 0.
    """

    def __init__(self, alpha: float, c0: float, gamma: float):
        self.__alpha = NumUtils.check_finite('alpha', alpha)
        self.__c0 = NumUtils.check_finite('c0', c0)
        self.__gamma = NumUtils.check_finite('gamma', gamma)

        if self.__alpha == 0 and self.__gamma == 0:
            raise BurgersCaseExcluded()

    @property
    def alpha(self) -> float:
        return self.__alpha

    @property
    def c0(self) -> float:
        return self.__c0

    @property
    def gamma(self) -> float:
        return self.__gamma

    @property
    def is_kdv(self) -> bool:
        """Returns `True` for the pole-free case alpha = 0."""

        return self.__alpha == 0

    def to_json(self) -> dict:
        return {"alpha": self.__alpha, "c0": self.__c0, "gamma": self.__gamma}

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, ModelParams):
            return NotImplemented
        return self.to_json() == other.to_json()

    def __hash__(self) -> int:
        return hash((self.__alpha, self.__c0, self.__gamma))

    def __repr__(self) -> str:
        return json.dumps(self.to_json())


class TravelingWaveProblem():
    """Travelling wave problem u(t,x) = phi(x - ct) with its two integration constants.

    Args:
        params (ModelParams): Physical constants.
        c (float): Wave speed.
        A (float): First integration constant (linear coefficient of P).
        B (float): Second integration constant (constant term of P).
    """

    def __init__(self, params: ModelParams, c: float, A: float, B: float):
        if not isinstance(params, ModelParams):
            raise TypeError('Value "params" should be a ModelParams object.') from None
        self.__params = params
        self.__c = NumUtils.check_finite('c', c)
        self.__A = NumUtils.check_finite('A', A)
        self.__B = NumUtils.check_finite('B', B)

    @property
    def params(self) -> ModelParams:
        return self.__params

    @property
    def c(self) -> float:
        return self.__c

    @property
    def A(self) -> float:
        return self.__A

    @property
    def B(self) -> float:
        return self.__B

    def replace(self, **fields: float) -> 'TravelingWaveProblem':
        """Copy of the problem with some of c, A, B replaced."""

        values = {"c": self.__c, "A": self.__A, "B": self.__B}
        values.update(fields)
        return TravelingWaveProblem(self.__params, **values)

    def to_json(self) -> dict:
        result = self.__params.to_json()
        result.update({"c": self.__c, "A": self.__A, "B": self.__B})
        return result

    def __repr__(self) -> str:
        return json.dumps(self.to_json())


class Cubic():
    """Cubic P(phi) = -phi^3 + (c-c0)phi^2 + A phi + B.

    Args:
        coefficients (Sequence[float]): Coefficients ordered by descending degree.

    Raises:
        ValueError: Raises if the leading coefficient is not -1.
    """

    def __init__(self, coefficients: Sequence[float]):
        coefficients = [NumUtils.check_finite('coefficient', v) for v in coefficients]
        if len(coefficients) != 4:
            raise ValueError('A cubic needs exactly 4 coefficients') from None
        if coefficients[0] != -1.0:
            raise ValueError('The leading coefficient of P must be -1') from None
        self.__coefficients = tuple(coefficients)

    @property
    def coefficients(self) -> Tuple[float, float, float, float]:
        return self.__coefficients

    def __call__(self, phi: Any) -> Any:
        a3, a2, a1, a0 = self.__coefficients
        return ((a3 * phi + a2) * phi + a1) * phi + a0

    def derivative(self, phi: Any) -> Any:
        a3, a2, a1, _ = self.__coefficients
        return (3 * a3 * phi + 2 * a2) * phi + a1

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, Cubic):
            return self.__coefficients == other.coefficients
        return list(self.__coefficients) == list(other)

    def __repr__(self) -> str:
        return json.dumps(list(self.__coefficients))


class PotentialSpectrum():
    """Real roots of P with their multiplicities and the pole of the potential.

    Args:
        roots (list): Ascending (value, multiplicity) pairs.
        pole (float, optional): Pole location c~, `None` when alpha = 0. Defaults to `None`.
    """

    leading_sign = -1

    def __init__(self, roots: List[Tuple[float, int]], pole: Optional[float] = None):
        roots = [(float(v), int(k)) for v, k in roots]
        if sum(k for _, k in roots) not in (1, 3):
            raise ValueError('A real cubic has one or three real roots') from None
        if any(k not in (1, 2, 3) for _, k in roots):
            raise ValueError('Root multiplicity must be 1, 2 or 3') from None
        self.__roots = tuple(sorted(roots))
        self.__pole = pole

    @property
    def roots(self) -> Tuple[Tuple[float, int], ...]:
        return self.__roots

    @property
    def pole(self) -> Optional[float]:
        return self.__pole

    @property
    def values(self) -> Tuple[float, ...]:
        """Returns the roots repeated by multiplicity, ascending."""

        return tuple(v for v, k in self.__roots for _ in range(k))

    @property
    def all_real(self) -> bool:
        return len(self.values) == 3

    def multiplicity(self, value: float, tol: float = None) -> int:
        """Multiplicity of `value` as a root, 0 if it is not a root."""

        for root, k in self.__roots:
            if NumUtils.is_close(root, value, tol):
                return k
        return 0

    def __repr__(self) -> str:
        return json.dumps({"roots": [list(r) for r in self.__roots], "pole": self.__pole})


class WaveKind(Enum):
    SMOOTH_PERIODIC = "SmoothPeriodic"
    SMOOTH_DECAY_DOWN = "SmoothDecayDown"
    SMOOTH_DECAY_UP = "SmoothDecayUp"
    PERIODIC_PEAKON = "PeriodicPeakon"
    PEAKON_DECAY = "PeakonDecay"
    PERIODIC_CUSPON = "PeriodicCuspon"
    CUSPON_DECAY = "CusponDecay"
    PERIODIC_ANTI_PEAKON = "PeriodicAntiPeakon"
    ANTI_PEAKON_DECAY = "AntiPeakonDecay"
    PERIODIC_ANTI_CUSPON = "PeriodicAntiCuspon"
    ANTI_CUSPON_DECAY = "AntiCusponDecay"
    CONSTANT = "Constant"
    NO_BOUNDED_WAVE = "NoBoundedWave"

    def __str__(self) -> str:
        return self.value

    @property
    def is_smooth(self) -> bool:
        return self in (WaveKind.SMOOTH_PERIODIC, WaveKind.SMOOTH_DECAY_DOWN,
                        WaveKind.SMOOTH_DECAY_UP)

    @property
    def is_peakon(self) -> bool:
        return self in (WaveKind.PERIODIC_PEAKON, WaveKind.PEAKON_DECAY,
                        WaveKind.PERIODIC_ANTI_PEAKON, WaveKind.ANTI_PEAKON_DECAY)

    @property
    def is_cuspon(self) -> bool:
        return self in (WaveKind.PERIODIC_CUSPON, WaveKind.CUSPON_DECAY,
                        WaveKind.PERIODIC_ANTI_CUSPON, WaveKind.ANTI_CUSPON_DECAY)

    @property
    def is_weak(self) -> bool:
        return self.is_peakon or self.is_cuspon

    @property
    def is_decay(self) -> bool:
        return self in (WaveKind.SMOOTH_DECAY_DOWN, WaveKind.SMOOTH_DECAY_UP,
                        WaveKind.PEAKON_DECAY, WaveKind.ANTI_PEAKON_DECAY,
                        WaveKind.CUSPON_DECAY, WaveKind.ANTI_CUSPON_DECAY)

    @property
    def is_periodic(self) -> bool:
        return self in (WaveKind.SMOOTH_PERIODIC, WaveKind.PERIODIC_PEAKON,
                        WaveKind.PERIODIC_CUSPON, WaveKind.PERIODIC_ANTI_PEAKON,
                        WaveKind.PERIODIC_ANTI_CUSPON)

    @property
    def is_anti(self) -> bool:
        """Returns `True` for weak waves whose singular point is their minimum."""

        return self in (WaveKind.PERIODIC_ANTI_PEAKON, WaveKind.ANTI_PEAKON_DECAY,
                        WaveKind.PERIODIC_ANTI_CUSPON, WaveKind.ANTI_CUSPON_DECAY)

    @property
    def is_bounded(self) -> bool:
        return self is not WaveKind.NO_BOUNDED_WAVE


class WaveClass():
    """Classification outcome of a travelling wave problem.

    Args:
        kind (WaveKind): Wave type.
        interval (tuple): Range (min phi, max phi) of the wave.
        z0 (float): Third root z0 = c - c0 - M - m.
        pole (float, optional): Pole c~, `None` when alpha = 0.
        theorem_case (str): Case label, e.g. "Thm2(iv)".
        roots (tuple, optional): Theorem roots (m, M, z0). Defaults to the interval and z0.
    """

    def __init__(self, kind: WaveKind, interval: Tuple[float, float], z0: float,
                 pole: Optional[float], theorem_case: str,
                 roots: Optional[Tuple[float, float, float]] = None):
        self.kind = kind
        self.interval = (float(interval[0]), float(interval[1]))
        self.z0 = float(z0)
        self.pole = pole
        self.theorem_case = theorem_case
        self.roots = roots if roots is not None else (self.interval[0], self.interval[1], self.z0)

    @property
    def m(self) -> float:
        return self.roots[0]

    @property
    def M(self) -> float:
        return self.roots[1]

    def to_json(self) -> dict:
        return {
            "kind": str(self.kind),
            "theorem_case": self.theorem_case,
            "interval": list(self.interval),
            "roots": list(self.roots),
            "z0": self.z0,
            "pole": self.pole
        }

    def __repr__(self) -> str:
        return json.dumps(self.to_json())


class PhaseDiagram():
    """Classification of a rectangular grid of problems.

    Args:
        axes (str): Swept plane, `'mM'` or `'AB'`.
        axis1 (Sequence[float]): Values of the first axis.
        axis2 (Sequence[float]): Values of the second axis.
        cells (list): Rows (one per axis1 value) of WaveClass objects.
        fixed (dict): Fields of the problem that were not swept.
    """

    def __init__(self, axes: str, axis1: Sequence[float], axis2: Sequence[float],
                 cells: List[List[WaveClass]], fixed: dict):
        if len(cells) != len(axis1) or any(len(row) != len(axis2) for row in cells):
            raise ValueError('Grid dimensions do not match the axes') from None
        self.axes = axes
        self.axis1 = _frozen(axis1)
        self.axis2 = _frozen(axis2)
        self.cells = cells
        self.fixed = fixed

    @property
    def kinds(self) -> List[List[WaveKind]]:
        return [[cell.kind for cell in row] for row in self.cells]

    def rows(self):
        """Yields (axis1, axis2, WaveClass) in row-major order."""

        for i, row in enumerate(self.cells):
            for j, cell in enumerate(row):
                yield float(self.axis1[i]), float(self.axis2[j]), cell


class Segment():
    """Piece of a wave profile.

    Args:
        kind (str): One of `'smooth'`, `'corner'`, `'cusp'`, `'plateau'`.
        z_lo (float): Left end.
        z_hi (float): Right end, equal to `z_lo` for corners and cusps.
        slope (float, optional): One-sided |phi'| at a corner. Defaults to `None`.
        problem (TravelingWaveProblem, optional): Problem of the piece when it differs \
from the profile one. Defaults to `None`.
    """

    KINDS = ('smooth', 'corner', 'cusp', 'plateau')

    def __init__(self, kind: str, z_lo: float, z_hi: float, slope: Optional[float] = None,
                 problem: Optional[TravelingWaveProblem] = None):
        if kind not in self.KINDS:
            raise ValueError(f"Unknown segment kind: {kind}") from None
        if z_hi < z_lo:
            raise ValueError('Segment end precedes its start') from None
        self.kind = kind
        self.z_lo = float(z_lo)
        self.z_hi = float(z_hi)
        self.slope = slope
        self.problem = problem

    @property
    def is_point(self) -> bool:
        return self.kind in ('corner', 'cusp')

    def shifted(self, dz: float) -> 'Segment':
        return Segment(self.kind, self.z_lo + dz, self.z_hi + dz, self.slope, self.problem)

    def __repr__(self) -> str:
        return json.dumps({"kind": self.kind, "z": [self.z_lo, self.z_hi], "slope": self.slope})


class DecayInfo():
    """Exponential tail data of a decaying wave.

    Args:
        limit (float): Value approached as |z| grows (the double root).
        rate (float): Predicted decay rate sqrt(kappa).
        z_cut (float): Position beyond which samples follow the analytic tail.
        origin (float, optional): Extremum or junction of the right tail. Defaults to `0`.
    """

    def __init__(self, limit: float, rate: float, z_cut: float, origin: float = 0.0):
        self.limit = float(limit)
        self.rate = float(rate)
        self.z_cut = float(z_cut)
        self.origin = float(origin)

    def __repr__(self) -> str:
        return json.dumps({"limit": self.limit, "rate": self.rate,
                           "z_cut": self.z_cut, "origin": self.origin})


class WaveProfile():
    """Sampled travelling wave.

    Args:
        z (ndarray): Strictly increasing abscissae.
        phi (ndarray): Wave values.
        segments (list): Ordered Segment objects covering [z[0], z[-1]].
        problem (TravelingWaveProblem): Generating problem.
        wave_class (WaveClass): Classification of the problem.
        period (float, optional): Period 2L of periodic waves. Defaults to `None`.
        decay (DecayInfo, optional): Tail data of decaying waves. Defaults to `None`.

    Raises:
        ValueError: Raises if samples are not strictly increasing or not finite.
    """

    def __init__(self, z: Sequence[float], phi: Sequence[float], segments: List[Segment],
                 problem: TravelingWaveProblem, wave_class: WaveClass,
                 period: Optional[float] = None, decay: Optional[DecayInfo] = None):
        self.__z = _frozen(z)
        self.__phi = _frozen(phi)
        if self.__z.shape != self.__phi.shape or self.__z.ndim != 1:
            raise ValueError('z and phi must be 1-D arrays of equal length') from None
        if np.any(np.diff(self.__z) <= 0):
            raise ValueError('z must be strictly increasing') from None
        if not (np.all(np.isfinite(self.__z)) and np.all(np.isfinite(self.__phi))):
            raise ValueError('Profile samples must be finite') from None
        self.__segments = tuple(segments)
        self.__segment_ids = self.__assign_segments()
        self.problem = problem
        self.wave_class = wave_class
        self.period = period
        self.decay = decay

    def __assign_segments(self) -> np.ndarray:
        ids = np.full(self.__z.size, -1, dtype=int)
        for index, segment in enumerate(self.__segments):
            if segment.is_point:
                continue
            inside = (self.__z >= segment.z_lo) & (self.__z <= segment.z_hi) & (ids < 0)
            ids[inside] = index
        for index, segment in enumerate(self.__segments):
            if segment.is_point:
                ids[int(np.argmin(np.abs(self.__z - segment.z_lo)))] = index
        if np.any(ids < 0):
            raise ValueError('Segments do not cover every sample') from None
        return ids

    @property
    def z(self) -> np.ndarray:
        return self.__z

    @property
    def phi(self) -> np.ndarray:
        return self.__phi

    @property
    def segments(self) -> Tuple[Segment, ...]:
        return self.__segments

    @property
    def segment_ids(self) -> np.ndarray:
        """Returns the index of the segment owning every sample."""

        return self.__segment_ids

    @property
    def singular_points(self) -> List[Segment]:
        return [s for s in self.__segments if s.is_point]

    def with_samples(self, z: Optional[Sequence[float]] = None,
                     phi: Optional[Sequence[float]] = None,
                     scale_segments: float = 1.0) -> 'WaveProfile':
        """Copy of the profile with replaced samples, segments scaled in z if requested.

        Args:
            z (ndarray, optional): New abscissae. Defaults to current ones.
            phi (ndarray, optional): New values. Defaults to current ones.
            scale_segments (float, optional): Factor applied to segment ends. Defaults to `1.0`.

        Returns:
            WaveProfile: New profile object.
        """

        segments = [Segment(s.kind, s.z_lo * scale_segments, s.z_hi * scale_segments,
                            s.slope, s.problem)
                    for s in self.__segments]
        return WaveProfile(
            self.__z if z is None else z,
            self.__phi if phi is None else phi,
            segments, self.problem, self.wave_class, self.period, self.decay
        )

    def interpolant(self) -> CubicSpline:
        """Cubic spline of phi(z), periodic for periodic profiles.

        Returns:
            CubicSpline: Interpolant over [z[0], z[-1]].
        """

        if self.period is not None and math.isclose(
                self.__z[-1] - self.__z[0], self.period, rel_tol=1e-9):
            phi = self.__phi.copy()
            phi[-1] = phi[0]
            return CubicSpline(self.__z, phi, bc_type='periodic')
        return CubicSpline(self.__z, self.__phi)

    def __len__(self) -> int:
        return self.__z.size

    def __repr__(self) -> str:
        return json.dumps({
            "samples": int(self.__z.size),
            "z": [float(self.__z[0]), float(self.__z[-1])],
            "phi": [float(np.min(self.__phi)), float(np.max(self.__phi))],
            "kind": str(self.wave_class.kind),
            "period": self.period
        })


class TestFunctionSpec():
    """Compactly supported test function of the weak residual.

    Args:
        center (float): Center of the support.
        radius (float): Half-width of the support.
        kind (str, optional): `'bump'` (smooth) or `'hat'`. Defaults to `'bump'`.
        seed (int, optional): Seed that placed the function. Defaults to `None`.
    """

    __test__ = False

    def __init__(self, center: float, radius: float, kind: str = 'bump',
                 seed: Optional[int] = None):
        if radius <= 0:
            raise ValueError('Test function radius must be positive') from None
        if kind not in ('bump', 'hat'):
            raise ValueError(f"Unknown test function kind: {kind}") from None
        self.center = float(center)
        self.radius = float(radius)
        self.kind = kind
        self.seed = seed

    @property
    def support(self) -> Tuple[float, float]:
        return self.center - self.radius, self.center + self.radius

    def __call__(self, z: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """Values and derivatives at `z`."""

        s = (np.asarray(z, dtype=float) - self.center) / self.radius
        inside = np.abs(s) < 1
        value = np.zeros_like(s)
        slope = np.zeros_like(s)
        if self.kind == 'bump':
            q = 1.0 - s[inside] ** 2
            value[inside] = np.exp(-1.0 / q)
            slope[inside] = value[inside] * (-2.0 * s[inside] / q ** 2) / self.radius
        else:
            value[inside] = 1.0 - np.abs(s[inside])
            slope[inside] = -np.sign(s[inside]) / self.radius
        return value, slope

    def straddles(self, z: float) -> bool:
        lo, hi = self.support
        return lo < z < hi

    def __repr__(self) -> str:
        return json.dumps({"center": self.center, "radius": self.radius,
                           "kind": self.kind, "seed": self.seed})


class ResidualReport():
    """Outcome of the residual checks of one profile.

    Args:
        max_strong (float): Normalized quadrature residual.
        max_weak (float): Normalized weak residual.
        n_tests (int): Number of test functions.
        straddling_tests (int): Test functions whose support contains a singular point.
        tolerance (float): Pass threshold of both residuals.
    """

    def __init__(self, max_strong: float, max_weak: float, n_tests: int,
                 straddling_tests: int, tolerance: float):
        self.max_strong = float(max_strong)
        self.max_weak = float(max_weak)
        self.n_tests = int(n_tests)
        self.straddling_tests = int(straddling_tests)
        self.tolerance = float(tolerance)
        self.details = {}

    @property
    def passed(self) -> bool:
        checks = [self.max_strong <= self.tolerance, self.max_weak <= self.tolerance]
        checks.extend(bool(v) for k, v in self.details.items() if isinstance(v, bool))
        return all(checks)

    def to_json(self) -> dict:
        result = {
            "max_strong": self.max_strong,
            "max_weak": self.max_weak,
            "n_tests": self.n_tests,
            "straddling_tests": self.straddling_tests,
            "tolerance": self.tolerance
        }
        result.update(self.details)
        result["pass"] = self.passed
        return result

    def __repr__(self) -> str:
        return json.dumps(self.to_json())


class SpectralGrid():
    """Uniform periodic grid of a pseudo-spectral solver.

    Args:
        n_modes (int): Number of grid points, a power of two not below 32.
        domain_length (float): Period of the domain.
    """

    def __init__(self, n_modes: int, domain_length: float):
        n_modes = int(n_modes)
        if n_modes < 32 or n_modes & (n_modes - 1):
            raise ValueError('n_modes must be a power of two not below 32') from None
        domain_length = NumUtils.check_finite('domain_length', domain_length)
        if domain_length <= 0:
            raise ValueError('domain_length must be positive') from None
        self.n_modes = n_modes
        self.domain_length = domain_length
        self.nodes = _frozen(np.arange(n_modes) * domain_length / n_modes)
        self.wavenumbers = _frozen(2 * np.pi * np.fft.rfftfreq(n_modes, d=domain_length / n_modes))
        self.dealias = self.wavenumbers < (2.0 / 3.0) * np.max(self.wavenumbers)

    def __repr__(self) -> str:
        return json.dumps({"n_modes": self.n_modes, "domain_length": self.domain_length})


class EvolutionState():
    """Solution of the evolution at one time.

    Args:
        u (ndarray): Real grid values.
        t (float): Time.
    """

    def __init__(self, u: Sequence[float], t: float):
        self.u = _frozen(u)
        if not np.all(np.isfinite(self.u)):
            raise ValueError('State values must be finite') from None
        self.t = float(t)

    def __repr__(self) -> str:
        return json.dumps({"t": self.t, "size": int(self.u.size)})
