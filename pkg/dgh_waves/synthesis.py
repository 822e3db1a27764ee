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
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.integrate import quad

from .common import NumUtils
from .logger import EmptyHandler, ArrayFilter
from .classifier import classify, composite_compatible, stumpon_constant
from .exceptions import (IncompatibleSegments, InvalidInterval, PoleEvaluation,
                         StumponConstantViolated, WrongClass)
from .model import (cubic_of, decay_constant, is_removable, pole_location, potential_eval,
                    reduced_potential, spectrum_of)
from .types import (DecayInfo, ModelParams, Segment, TravelingWaveProblem, WaveClass,
                    WaveKind, WaveProfile)

log = logging.getLogger(__name__)
log.addHandler(EmptyHandler())
log.addFilter(ArrayFilter())


class _Potential():
    """F in factored form gain * prod(phi - r) / (phi - c~).

    A root equal to the pole is cancelled together with the pole. Calls may
    divide out root factors (`drop`) or multiply by |phi - c~| (`times_pole`);
    `sign` is the product of the signs of the removed factors on the branch.
    """

    def __init__(self, problem: TravelingWaveProblem, wave_class: WaveClass):
        params = problem.params
        self.roots = list(wave_class.roots)
        self.pole = wave_class.pole
        self.has_pole = not params.is_kdv
        if params.is_kdv:
            self.gain = -1.0 / params.gamma
        else:
            self.gain = 1.0 / params.alpha ** 2
            if wave_class.kind.is_peakon:
                self.roots.pop(int(np.argmin([abs(r - self.pole) for r in self.roots])))
                self.has_pole = False

    def __call__(self, phi: np.ndarray, drop: Sequence[float] = (), sign: float = 1.0,
                 times_pole: bool = False) -> np.ndarray:
        roots = list(self.roots)
        for value in drop:
            roots.pop(int(np.argmin([abs(r - value) for r in roots])))

        result = np.full_like(phi, self.gain * sign, dtype=float)
        for root in roots:
            result = result * (phi - root)
        if self.has_pole and not times_pole:
            result = result / (phi - self.pole)

        return result


def _simple_half(potential: _Potential, end: float, other: float,
                 cells: int) -> Tuple[np.ndarray, np.ndarray]:
    # phi = end + side*t^2 removes the inverse square root of a simple zero
    side = math.copysign(1.0, other - end)
    nodes = NumUtils.clustered_nodes(math.sqrt(abs(other - end)), cells)

    def rate(t):
        return 2.0 / np.sqrt(potential(end + side * t ** 2, drop=(end,), sign=side))

    return NumUtils.cumulative_gauss(rate, nodes), end + side * nodes ** 2


def _cusp_half(potential: _Potential, other: float,
               cells: int) -> Tuple[np.ndarray, np.ndarray]:
    # phi = c~ + side*t^2 turns dz = dphi/sqrt(F) into a smooth 2t^2 dt/sqrt(F|phi-c~|)
    pole = potential.pole
    side = math.copysign(1.0, other - pole)
    nodes = NumUtils.clustered_nodes(math.sqrt(abs(other - pole)), cells, geometric=True)

    def rate(t):
        return 2.0 * t ** 2 / np.sqrt(potential(pole + side * t ** 2, sign=side, times_pole=True))

    return NumUtils.cumulative_gauss(rate, nodes), pole + side * nodes ** 2


def _corner_half(potential: _Potential, end: float, other: float,
                 cells: int) -> Tuple[np.ndarray, np.ndarray]:
    side = math.copysign(1.0, other - end)
    nodes = NumUtils.clustered_nodes(abs(other - end), cells)

    def rate(s):
        return 1.0 / np.sqrt(potential(end + side * s))

    return NumUtils.cumulative_gauss(rate, nodes), end + side * nodes


def _double_half(potential: _Potential, limit: float, other: float, cells: int,
                 cut: float) -> Tuple[np.ndarray, np.ndarray]:
    # s = log|other - limit| - log|phi - limit|, z starts at `other`
    side = math.copysign(1.0, other - limit)
    width = abs(other - limit)
    nodes = NumUtils.clustered_nodes(math.log(width / cut), cells)

    def rate(s):
        return 1.0 / np.sqrt(potential(limit + side * width * np.exp(-s), drop=(limit, limit)))

    return NumUtils.cumulative_gauss(rate, nodes), limit + side * width * np.exp(-nodes)


def _theta_half(potential: _Potential, m: float, M: float,
                cells: int) -> Tuple[np.ndarray, np.ndarray]:
    # phi = m + (M-m)cos^2(theta) runs from the crest M to the trough m
    nodes = NumUtils.clustered_nodes(0.5 * math.pi, cells)

    def phi_of(theta):
        return m + (M - m) * np.cos(theta) ** 2

    def rate(theta):
        return 2.0 / np.sqrt(potential(phi_of(theta), drop=(m, M), sign=-1.0))

    return NumUtils.cumulative_gauss(rate, nodes), phi_of(nodes)


def _branch(problem: TravelingWaveProblem, wave_class: WaveClass, center: float,
            center_kind: str, far: float, far_kind: str, n: int,
            tail_tol: float) -> Tuple[np.ndarray, np.ndarray, Optional[DecayInfo]]:
    """One half-branch z >= 0 from the extremum `center` (z = 0) to `far`.

    The range is split at its midpoint and each half is integrated in the
    variable suited to its endpoint. A double root at `far` is approached
    until |phi - far| = tail_tol*|far - center|, then the analytic
    exponential tail takes over.
    """

    potential = _Potential(problem, wave_class)
    cells = max(n // 2, 8)
    mid = 0.5 * (center + far)

    if center_kind == 'simple':
        z_start, phi_start = _simple_half(potential, center, mid, cells)
    elif center_kind == 'cusp':
        z_start, phi_start = _cusp_half(potential, mid, cells)
    else:
        z_start, phi_start = _corner_half(potential, center, mid, cells)

    # the far half starts with the last sample spacing of the first one
    step = abs(phi_start[-1] - phi_start[-2])
    width = abs(far - mid)

    decay = None
    if far_kind == 'simple':
        far_cells = max(cells, math.ceil(2.0 * width / step))
        z_end, phi_end = _simple_half(potential, far, mid, far_cells)
        z_end = z_start[-1] + (z_end[-1] - z_end[::-1])
        phi_end = phi_end[::-1]
    else:
        cut = tail_tol * abs(far - center)
        far_cells = max(cells, math.ceil(width * math.log(width / cut) / step))
        z_end, phi_end = _double_half(potential, far, mid, far_cells, cut)
        z_end = z_start[-1] + z_end

    z = np.concatenate((z_start, z_end[1:]))
    phi = np.concatenate((phi_start, phi_end[1:]))

    if far_kind == 'double':
        kappa = decay_constant(problem, far)
        if not kappa > 0:
            raise WrongClass(f"No exponential approach to {far}: kappa = {kappa}")
        rate = math.sqrt(kappa)
        extra = np.linspace(0.0, NumUtils.TAIL_LENGTH / rate, max(n // 4, 8) + 1)[1:]
        decay = DecayInfo(far, rate, z[-1])
        tail = far + (phi[-1] - far) * np.exp(-rate * extra)
        z = np.concatenate((z, z[-1] + extra))
        phi = np.concatenate((phi, tail))

    log.debug('Branch %s -> %s: z=%s, phi=%s', center_kind, far_kind, z, phi)

    return z, phi, decay


def _check_options(n: int, tail_tol: float = NumUtils.TAIL_TOL) -> None:
    if int(n) < 16:
        raise ValueError(f"At least 16 samples per half-branch are needed, got {n}") from None
    if not 0 < tail_tol < 0.5:
        raise ValueError(f"tail_tol must lie in (0, 0.5), got {tail_tol}") from None


def _symmetric_profile(z: np.ndarray, phi: np.ndarray, problem: TravelingWaveProblem,
                       wave_class: WaveClass, decay: Optional[DecayInfo],
                       point_kind: Optional[str] = None,
                       slope: Optional[float] = None) -> WaveProfile:
    period = None if decay is not None else 2.0 * z[-1]
    z = np.concatenate((-z[:0:-1], z))
    phi = np.concatenate((phi[:0:-1], phi))

    if point_kind is None:
        segments = [Segment('smooth', z[0], z[-1])]
    else:
        segments = [
            Segment('smooth', z[0], 0.0),
            Segment(point_kind, 0.0, 0.0, slope),
            Segment('smooth', 0.0, z[-1])
        ]

    return WaveProfile(z, phi, segments, problem, wave_class, period, decay)


def _constant_profile(problem: TravelingWaveProblem, wave_class: WaveClass,
                      n: int) -> WaveProfile:
    z = np.linspace(-1.0, 1.0, 2 * n + 1)
    phi = np.full_like(z, wave_class.interval[0])

    return WaveProfile(z, phi, [Segment('smooth', z[0], z[-1])], problem, wave_class)


def _far_end(wave_class: WaveClass) -> float:
    return wave_class.interval[1] if wave_class.kind.is_anti else wave_class.interval[0]


def _weak_branch(problem: TravelingWaveProblem, wave_class: WaveClass, n: int,
                 tail_tol: float) -> Tuple[np.ndarray, np.ndarray, Optional[DecayInfo]]:
    kind = wave_class.kind
    center_kind = 'corner' if kind.is_peakon else 'cusp'
    far_kind = 'double' if kind.is_decay else 'simple'

    return _branch(problem, wave_class, wave_class.pole, center_kind,
                   _far_end(wave_class), far_kind, n, tail_tol)


def half_period(problem: TravelingWaveProblem, m: float, M: float,
                method: str = 'theta') -> float:
    """Half-period L = integral of dphi/sqrt(F) over (m, M).

    Args:
        problem (TravelingWaveProblem): Problem.
        m (float): Lower end, a zero of F or the pole.
        M (float): Upper end, a zero of F or the pole.
        method (str, optional): `'theta'` for the substitution \
phi = m + (M-m)sin^2(theta), `'adaptive'` for adaptive quadrature with the \
algebraic end weights. Defaults to `'theta'`.

    Raises:
        InvalidInterval: Raises if F is not positive inside (m, M).

    Returns:
        float: L, `math.inf` when an end is a double zero.
    """

    if not m < M:
        raise InvalidInterval(f"Empty interval ({m}, {M})")
    if method not in ('theta', 'adaptive'):
        raise ValueError(f"Unknown quadrature method: {method}") from None

    spectrum = spectrum_of(problem)
    removable = is_removable(problem)
    pole = spectrum.pole

    def potential(phi):
        return potential_eval(problem, phi, removable=True)

    try:
        inside = potential(NumUtils.chebyshev_nodes(m, M, 64))
    except PoleEvaluation:
        raise InvalidInterval(f"The pole lies inside ({m}, {M})") from None
    if np.any(inside <= 0) or (pole is not None and not removable and m < pole < M):
        raise InvalidInterval(f"F is not positive on ({m}, {M})")

    for end in (m, M):
        cancelled = removable and NumUtils.is_close(end, pole)
        if spectrum.multiplicity(end) >= 2 and not cancelled:
            log.debug('Double zero at %s, the orbit is homoclinic', end)
            return math.inf

    # F / ((phi - m)(M - phi)) with the zeros at the ends divided out of P,
    # finite at the ends where the quadrature rule may evaluate it.
    params = problem.params
    numerator = np.array(cubic_of(problem).coefficients, dtype=float)
    scale = 1.0 / params.gamma if params.is_kdv else -1.0 / params.alpha ** 2
    pole_factor = pole is not None
    if pole_factor and removable:
        numerator = np.polydiv(numerator, [1.0, -pole])[0]
        pole_factor = False
    explicit = []
    for end, sign in ((m, 1.0), (M, -1.0)):
        cancelled = removable and NumUtils.is_close(end, pole)
        if spectrum.multiplicity(end) - int(cancelled) >= 1:
            numerator = np.polydiv(numerator, [1.0, -end])[0]
            scale *= sign
        else:
            explicit.append(end)

    def ratio(phi):
        denominator = 1.0
        if pole_factor:
            denominator *= phi - pole
        if m in explicit:
            denominator *= phi - m
        if M in explicit:
            denominator *= M - phi
        with np.errstate(divide='ignore', invalid='ignore'):
            return float(np.divide(scale * np.polyval(numerator, phi), denominator))

    def integrand(phi):
        value = ratio(phi)
        return 1.0 / math.sqrt(value) if value > 0 else 0.0

    if method == 'theta':
        value, error = quad(lambda th: 2.0 * integrand(m + (M - m) * math.sin(th) ** 2),
                            0.0, 0.5 * math.pi, epsabs=0.0, epsrel=1e-12, limit=200)
    else:
        value, error = quad(integrand, m, M, weight='alg',
                            wvar=(-0.5, -0.5), epsabs=0.0, epsrel=1e-12, limit=200)
    log.debug('Half-period on (%s, %s) by %s: %s (error %s)', m, M, method, value, error)

    return value


def synth_periodic(problem: TravelingWaveProblem, wave_class: Optional[WaveClass] = None,
                   n: int = NumUtils.SAMPLES) -> WaveProfile:
    """Samples one period of a smooth periodic wave, crest at z = 0.

    Args:
        problem (TravelingWaveProblem): Problem.
        wave_class (WaveClass, optional): Classification. Defaults to `classify(problem)`.
        n (int, optional): Samples per half-branch. Defaults to `NumUtils.SAMPLES`.

    Raises:
        WrongClass: Raises if the wave is neither smooth periodic nor constant.

    Returns:
        WaveProfile: Profile on [-L, L] with period 2L.
    """

    _check_options(n)
    wave_class = wave_class or classify(problem)
    if wave_class.kind is WaveKind.CONSTANT:
        return _constant_profile(problem, wave_class, n)
    if wave_class.kind is not WaveKind.SMOOTH_PERIODIC:
        raise WrongClass(f"synth_periodic got a {wave_class.kind} wave")

    m, M = wave_class.interval
    z, phi = _theta_half(_Potential(problem, wave_class), m, M, n)

    return _symmetric_profile(z, phi, problem, wave_class, None)


def synth_decay(problem: TravelingWaveProblem, wave_class: Optional[WaveClass] = None,
                tail_tol: float = NumUtils.TAIL_TOL, n: int = NumUtils.SAMPLES) -> WaveProfile:
    """Samples a smooth wave that decays exponentially to a double root.

    Args:
        problem (TravelingWaveProblem): Problem.
        wave_class (WaveClass, optional): Classification. Defaults to `classify(problem)`.
        tail_tol (float, optional): Relative distance to the limit where the analytic \
tail starts. Defaults to `NumUtils.TAIL_TOL`.
        n (int, optional): Samples per half-branch. Defaults to `NumUtils.SAMPLES`.

    Raises:
        WrongClass: Raises if the wave is not a smooth decaying one.

    Returns:
        WaveProfile: Profile even about its extremum at z = 0.
    """

    _check_options(n, tail_tol)
    wave_class = wave_class or classify(problem)
    kind = wave_class.kind
    if kind not in (WaveKind.SMOOTH_DECAY_DOWN, WaveKind.SMOOTH_DECAY_UP):
        raise WrongClass(f"synth_decay got a {kind} wave")

    m, M = wave_class.interval
    limit, center = (m, M) if kind is WaveKind.SMOOTH_DECAY_DOWN else (M, m)
    if not NumUtils.is_close(limit, wave_class.z0):
        raise WrongClass(f"{limit} is not a double root of P")

    z, phi, decay = _branch(problem, wave_class, center, 'simple', limit, 'double', n, tail_tol)

    return _symmetric_profile(z, phi, problem, wave_class, decay)


def corner_slope(problem: TravelingWaveProblem) -> float:
    """One-sided |phi'| at a peakon corner, the square root of the cancelled F at c~.

    Raises:
        WrongClass: Raises if the pole is not cancelled by a root of P.
    """

    if not is_removable(problem):
        raise WrongClass('The pole is not removable, the wave has no corner')
    quotient, _ = reduced_potential(problem)
    pole = pole_location(problem.params, problem.c)

    return math.sqrt(np.polyval(quotient, pole) / problem.params.alpha ** 2)


def synth_peakon(problem: TravelingWaveProblem, wave_class: Optional[WaveClass] = None,
                 n: int = NumUtils.SAMPLES,
                 tail_tol: float = NumUtils.TAIL_TOL) -> WaveProfile:
    """Samples a peaked wave with its corner at z = 0.

    Args:
        problem (TravelingWaveProblem): Problem.
        wave_class (WaveClass, optional): Classification. Defaults to `classify(problem)`.
        n (int, optional): Samples per half-branch. Defaults to `NumUtils.SAMPLES`.
        tail_tol (float, optional): Tail threshold of decaying peakons. \
Defaults to `NumUtils.TAIL_TOL`.

    Raises:
        WrongClass: Raises if the wave is not a peakon or P(c~) != 0.

    Returns:
        WaveProfile: Profile with one corner segment.
    """

    _check_options(n, tail_tol)
    wave_class = wave_class or classify(problem)
    if not wave_class.kind.is_peakon:
        raise WrongClass(f"synth_peakon got a {wave_class.kind} wave")
    if not is_removable(problem):
        raise WrongClass('P(c~) != 0, the pole is not removable')

    z, phi, decay = _weak_branch(problem, wave_class, n, tail_tol)

    return _symmetric_profile(z, phi, problem, wave_class, decay, 'corner', corner_slope(problem))


def synth_cuspon(problem: TravelingWaveProblem, wave_class: Optional[WaveClass] = None,
                 n: int = NumUtils.SAMPLES,
                 tail_tol: float = NumUtils.TAIL_TOL) -> WaveProfile:
    """Samples a cusped wave with its cusp at z = 0.

    Near the cusp c~ - phi behaves like |z|^(2/3); samples are refined
    geometrically towards it.

    Raises:
        WrongClass: Raises if the wave is not a cuspon or P(c~) = 0.
    """

    _check_options(n, tail_tol)
    wave_class = wave_class or classify(problem)
    if not wave_class.kind.is_cuspon:
        raise WrongClass(f"synth_cuspon got a {wave_class.kind} wave")
    if is_removable(problem):
        raise WrongClass('P(c~) = 0, the wave is a peakon')

    z, phi, decay = _weak_branch(problem, wave_class, n, tail_tol)

    return _symmetric_profile(z, phi, problem, wave_class, decay, 'cusp')


class _Piece():
    """Part of a composite profile, z starts at 0."""

    def __init__(self, z: np.ndarray, phi: np.ndarray, problem: TravelingWaveProblem,
                 junction: Optional[str], role: str, decay: Optional[DecayInfo] = None):
        self.z = z
        self.phi = phi
        self.problem = problem
        self.junction = junction
        self.role = role
        self.decay = decay


def _arc_piece(problem: TravelingWaveProblem, wave_class: WaveClass, n: int,
               tail_tol: float) -> _Piece:
    # junction -> trough -> junction
    z, phi, _ = _weak_branch(problem, wave_class, n, tail_tol)
    length = 2.0 * z[-1]
    z = np.concatenate((z, length - z[-2::-1]))
    phi = np.concatenate((phi, phi[-2::-1]))
    junction = 'corner' if wave_class.kind.is_peakon else 'cusp'

    return _Piece(z, phi, problem, junction, 'arc')


def _tail_piece(problem: TravelingWaveProblem, wave_class: WaveClass, n: int,
                tail_tol: float, length: Optional[float], role: str) -> _Piece:
    z, phi, decay = _weak_branch(problem, wave_class, n, tail_tol)
    if length is not None:
        if not length > 0:
            raise ValueError(f"Decay piece length must be positive, got {length}") from None
        keep = z <= length
        z, phi = z[keep], phi[keep]
    junction = 'corner' if wave_class.kind.is_peakon else 'cusp'
    if role == 'left':
        return _Piece(z[-1] - z[::-1], phi[::-1], problem, junction, role)

    return _Piece(z, phi, problem, junction, role, decay)


def _plateau_piece(problem: TravelingWaveProblem, pole: float, length: float, n: int) -> _Piece:
    z = np.linspace(0.0, length, max(n // 4, 8) + 1)

    return _Piece(z, np.full_like(z, pole), problem, None, 'plateau')


def _distinct(z: np.ndarray, phi: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    # samples refined towards a junction collapse onto it once shifted; only the
    # piece ends are kept within a few ulps of the ends
    tol = 8.0 * np.finfo(float).eps * max(abs(z[0]), abs(z[-1]), 1.0)
    keep = (z - z[0] > tol) & (z[-1] - z > tol)
    keep[0] = keep[-1] = True

    return z[keep], phi[keep]


def _assemble(pieces: List[_Piece], wave_class: WaveClass, case: str) -> WaveProfile:
    """Concatenates pieces and marks the junctions where phi = c~.

    The first junction sits at z = 0.
    """

    offset = -pieces[0].z[-1] if pieces[0].role == 'left' else 0.0
    z_parts, phi_parts, segments, starts = [], [], [], []
    decay = None

    for index, piece in enumerate(pieces):
        z, phi = _distinct(piece.z + offset, piece.phi)
        starts.append(offset)
        kind = 'plateau' if piece.role == 'plateau' else 'smooth'
        segments.append(Segment(kind, z[0], z[-1], problem=piece.problem))
        if index:
            z, phi = z[1:], phi[1:]
        z_parts.append(z)
        phi_parts.append(phi)
        if piece.decay is not None:
            decay = DecayInfo(piece.decay.limit, piece.decay.rate,
                              piece.decay.z_cut + offset, origin=offset)
        offset = offset + piece.z[-1]

    def point(position, neighbours):
        kinds = [p.junction for p in neighbours if p.junction is not None]
        if not kinds:
            return
        if 'cusp' in kinds:
            segments.append(Segment('cusp', position, position))
        else:
            peakon = next(p for p in neighbours if p.junction == 'corner')
            segments.append(Segment('corner', position, position, corner_slope(peakon.problem)))

    if pieces[0].role == 'arc':
        point(starts[0], [pieces[0]])
    for index in range(1, len(pieces)):
        point(starts[index], [pieces[index - 1], pieces[index]])
    if pieces[-1].role == 'arc':
        point(offset, [pieces[-1]])

    z = np.concatenate(z_parts)
    phi = np.concatenate(phi_parts)
    segments.sort(key=lambda s: (s.z_lo, s.z_hi))
    periodic = all(p.role in ('arc', 'plateau') for p in pieces)
    composite = WaveClass(wave_class.kind, (float(np.min(phi)), float(np.max(phi))),
                          wave_class.z0, wave_class.pole, case, wave_class.roots)

    return WaveProfile(z, phi, segments, pieces[0].problem, composite,
                       period=z[-1] - z[0] if periodic else None, decay=decay)


def _pieces_of(problems: List[TravelingWaveProblem], classes: List[WaveClass],
               lengths: Sequence[Optional[float]], n: int, tail_tol: float) -> List[_Piece]:
    pieces = []
    last = len(problems) - 1
    for index, (problem, wave_class, length) in enumerate(zip(problems, classes, lengths)):
        if wave_class.kind.is_periodic:
            if length is not None:
                raise ValueError('Periodic arcs take their own length, use None') from None
            pieces.append(_arc_piece(problem, wave_class, n, tail_tol))
        elif index == 0 and last > 0:
            pieces.append(_tail_piece(problem, wave_class, n, tail_tol, length, 'left'))
        elif index == last:
            pieces.append(_tail_piece(problem, wave_class, n, tail_tol, length, 'right'))
        else:
            raise IncompatibleSegments('Decaying pieces can only open or close a composite')

    return pieces


def glue_composite(segment_problems: List[TravelingWaveProblem],
                   lengths: Sequence[Optional[float]], params: ModelParams, c: float,
                   n: int = NumUtils.SAMPLES, tail_tol: float = NumUtils.TAIL_TOL,
                   strict: bool = True, cluster_tol: Optional[float] = None) -> WaveProfile:
    """Joins peakon and cuspon pieces where phi = c~.

    Periodic pieces contribute a full arc (junction, trough, junction).
    Decaying pieces may only come first (left tail) or last (right tail).

    Args:
        segment_problems (list): Problems of the pieces, in order.
        lengths (Sequence): Extent of each decaying piece, `None` for the natural extent; \
must be `None` for periodic pieces.
        params (ModelParams): Constants shared by every piece.
        c (float): Speed shared by every piece.
        n (int, optional): Samples per half-branch. Defaults to `NumUtils.SAMPLES`.
        tail_tol (float, optional): Tail threshold. Defaults to `NumUtils.TAIL_TOL`.
        strict (bool, optional): Reject pieces with different A. Defaults to `True`.
        cluster_tol (float, optional): Comparison tolerance. Defaults to `NumUtils.CLUSTER_TOL`.

    Raises:
        IncompatibleSegments: Raises if the pieces can not be joined.

    Returns:
        WaveProfile: Composite profile.
    """

    _check_options(n, tail_tol)
    if not segment_problems or len(lengths) != len(segment_problems):
        raise ValueError('One length per piece is needed') from None
    for problem in segment_problems:
        if problem.params != params or problem.c != c:
            raise IncompatibleSegments(f"Piece {problem} does not share constants and speed")

    classes = [classify(problem, cluster_tol) for problem in segment_problems]
    if any(not wave_class.kind.is_weak for wave_class in classes):
        raise IncompatibleSegments('Only peakons and cuspons can be joined')
    if not composite_compatible(segment_problems, classes, cluster_tol):
        if strict:
            raise IncompatibleSegments('Pieces of a composite wave need the same A')
        log.warning('Joining pieces with different A, the result is not a weak solution: %s',
                    [problem.A for problem in segment_problems])

    pieces = _pieces_of(segment_problems, classes, lengths, n, tail_tol)

    return _assemble(pieces, classes[0], 'composite')


def synth_stumpon(problem: TravelingWaveProblem, plateau_lengths: Sequence[float],
                  n: int = NumUtils.SAMPLES, tail_tol: float = NumUtils.TAIL_TOL,
                  cluster_tol: Optional[float] = None) -> WaveProfile:
    """Cuspon arcs separated by plateaus phi = c~.

    A periodic cuspon gives one more arc than there are plateaus. A decaying
    cuspon takes exactly one plateau between its two tails. Plateaus of
    length 0 are left out.

    Args:
        problem (TravelingWaveProblem): Problem with A equal to the stumpon constant.
        plateau_lengths (Sequence): Non-negative plateau lengths.
        n (int, optional): Samples per half-branch. Defaults to `NumUtils.SAMPLES`.
        tail_tol (float, optional): Tail threshold. Defaults to `NumUtils.TAIL_TOL`.
        cluster_tol (float, optional): Comparison tolerance. Defaults to `NumUtils.CLUSTER_TOL`.

    Raises:
        StumponConstantViolated: Raises if A differs from the stumpon constant.
        WrongClass: Raises if the problem is not a cuspon.

    Returns:
        WaveProfile: Stumpon profile.
    """

    _check_options(n, tail_tol)
    expected = stumpon_constant(problem.params, problem.c)
    if not NumUtils.is_close(problem.A, expected, cluster_tol):
        raise StumponConstantViolated(problem.A, expected)

    wave_class = classify(problem, cluster_tol)
    if not wave_class.kind.is_cuspon:
        raise WrongClass(f"Stumpons are built from cuspons, got {wave_class.kind}")

    lengths = [NumUtils.check_finite('plateau length', value) for value in plateau_lengths]
    if not lengths or any(value < 0 for value in lengths):
        raise ValueError('Plateau lengths must be given and non-negative') from None

    pole = wave_class.pole
    pieces = []
    if wave_class.kind.is_decay:
        if len(lengths) != 1:
            raise ValueError('A decaying stumpon has exactly one plateau') from None
        pieces.append(_tail_piece(problem, wave_class, n, tail_tol, None, 'left'))
        if lengths[0] > 0:
            pieces.append(_plateau_piece(problem, pole, lengths[0], n))
        pieces.append(_tail_piece(problem, wave_class, n, tail_tol, None, 'right'))
    else:
        pieces.append(_arc_piece(problem, wave_class, n, tail_tol))
        for length in lengths:
            if length > 0:
                pieces.append(_plateau_piece(problem, pole, length, n))
            pieces.append(_arc_piece(problem, wave_class, n, tail_tol))

    case = 'stumpon' if any(length > 0 for length in lengths) else 'composite'
    log.debug('Stumpon of %s with plateaus %s', problem, lengths)

    return _assemble(pieces, wave_class, case)


def synthesize(problem: TravelingWaveProblem, wave_class: Optional[WaveClass] = None,
               n: int = NumUtils.SAMPLES, tail_tol: float = NumUtils.TAIL_TOL,
               cluster_tol: Optional[float] = None) -> WaveProfile:
    """Builds the profile of any bounded wave type.

    Raises:
        WrongClass: Raises if the problem has no bounded wave.
    """

    wave_class = wave_class or classify(problem, cluster_tol)
    kind = wave_class.kind
    if kind in (WaveKind.SMOOTH_PERIODIC, WaveKind.CONSTANT):
        return synth_periodic(problem, wave_class, n)
    if kind in (WaveKind.SMOOTH_DECAY_DOWN, WaveKind.SMOOTH_DECAY_UP):
        return synth_decay(problem, wave_class, tail_tol, n)
    if kind.is_peakon:
        return synth_peakon(problem, wave_class, n, tail_tol)
    if kind.is_cuspon:
        return synth_cuspon(problem, wave_class, n, tail_tol)

    raise WrongClass(f"No bounded travelling wave for {problem}")
