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
import concurrent.futures
from functools import partial
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .common import NumUtils
from .logger import EmptyHandler, ArrayFilter
from .exceptions import NoPole, PoleEvaluation
from .model import constants_from_roots, pole_location, potential_eval, spectrum_of
from .types import (ModelParams, PhaseDiagram, PotentialSpectrum, TravelingWaveProblem,
                    WaveClass, WaveKind)

log = logging.getLogger(__name__)
log.addHandler(EmptyHandler())
log.addFilter(ArrayFilter())


def _no_wave(values: Sequence[float], pole: Optional[float], case: str = 'none') -> WaveClass:
    z0 = values[0] if len(values) == 1 else values[1]
    return WaveClass(WaveKind.NO_BOUNDED_WAVE, (values[0], values[-1]), z0, pole, case)


def classify(problem: TravelingWaveProblem, cluster_tol: Optional[float] = None) -> WaveClass:
    """Finds the travelling wave type of a problem.

    Args:
        problem (TravelingWaveProblem): Problem to classify.
        cluster_tol (float, optional): Relative tolerance of every equality test. \
Defaults to `NumUtils.CLUSTER_TOL`.

    Returns:
        WaveClass: Classification, `NoBoundedWave` when no case applies.
    """

    spectrum = spectrum_of(problem, cluster_tol)
    if problem.params.is_kdv:
        result = classify_kdv(problem, spectrum)
    else:
        result = classify_dgh(problem, spectrum, spectrum.pole, cluster_tol)

    log.debug('Problem %s classified as %s', problem, result)

    return result


def _constant_or_none(spectrum: PotentialSpectrum) -> Optional[WaveClass]:
    values = spectrum.values
    if not spectrum.all_real:
        return _no_wave(values, spectrum.pole)
    if values[0] == values[2]:
        return WaveClass(WaveKind.CONSTANT, (values[0], values[0]), values[0],
                         spectrum.pole, 'constant')
    return None


def classify_kdv(problem: TravelingWaveProblem, spectrum: PotentialSpectrum) -> WaveClass:
    """Case table of the pole-free equation (alpha = 0).

    For gamma > 0 the wave lives between the two upper roots, for gamma < 0
    between the two lower ones.
    """

    trivial = _constant_or_none(spectrum)
    if trivial is not None:
        return trivial

    r1, r2, r3 = spectrum.values
    if problem.params.gamma > 0:
        if r2 == r3:
            return _no_wave(spectrum.values, None)
        kind, case = ((WaveKind.SMOOTH_DECAY_DOWN, 'Thm1(ii)') if r1 == r2
                      else (WaveKind.SMOOTH_PERIODIC, 'Thm1(i)'))
        return WaveClass(kind, (r2, r3), r1, None, case)

    if r1 == r2:
        return _no_wave(spectrum.values, None)
    kind, case = ((WaveKind.SMOOTH_DECAY_UP, 'Thm1(iv)') if r2 == r3
                  else (WaveKind.SMOOTH_PERIODIC, 'Thm1(iii)'))

    return WaveClass(kind, (r1, r2), r3, None, case, roots=(r1, r2, r3))


def classify_dgh(problem: TravelingWaveProblem, spectrum: PotentialSpectrum,
                 pole: Optional[float], cluster_tol: Optional[float] = None) -> WaveClass:
    """Case table of the equation with a pole (alpha != 0).

    The sign of F is the sign of (phi-r1)(phi-r2)(phi-r3)(phi-c~), so the only
    bounded interval with F > 0 is the middle gap of these four points. A pole
    that coincides with a root is cancelled and leaves a corner.

    Args:
        problem (TravelingWaveProblem): Problem with alpha != 0.
        spectrum (PotentialSpectrum): Roots of P.
        pole (float): Pole c~.
        cluster_tol (float, optional): Tolerance of the pole comparisons. \
Defaults to `NumUtils.CLUSTER_TOL`.

    Returns:
        WaveClass: Classification.
    """

    if pole is None:
        raise NoPole('Pole-free problems are classified by classify_kdv')

    trivial = _constant_or_none(spectrum)
    if trivial is not None:
        return trivial

    r1, r2, r3 = spectrum.values
    low_double = r1 == r2
    high_double = r2 == r3

    def close(root):
        return NumUtils.is_close(pole, root, cluster_tol)

    if close(r3):
        if high_double:
            return _no_wave(spectrum.values, pole)
        kind, case = ((WaveKind.PEAKON_DECAY, 'Thm2(iv)') if low_double
                      else (WaveKind.PERIODIC_PEAKON, 'Thm2(iii)'))
        return WaveClass(kind, (r2, pole), r1, pole, case, roots=(r2, r3, r1))

    if close(r2):
        return _no_wave(spectrum.values, pole)

    if close(r1):
        if low_double:
            return _no_wave(spectrum.values, pole)
        kind, case = ((WaveKind.ANTI_PEAKON_DECAY, "Thm2(iv')") if high_double
                      else (WaveKind.PERIODIC_ANTI_PEAKON, "Thm2(iii')"))
        return WaveClass(kind, (pole, r2), r3, pole, case, roots=(r1, r2, r3))

    if pole > r3:
        if high_double:
            return _no_wave(spectrum.values, pole)
        kind, case = ((WaveKind.SMOOTH_DECAY_DOWN, 'Thm2(ii)') if low_double
                      else (WaveKind.SMOOTH_PERIODIC, 'Thm2(i)'))
        return WaveClass(kind, (r2, r3), r1, pole, case, roots=(r2, r3, r1))

    if pole > r2:
        kind, case = ((WaveKind.CUSPON_DECAY, 'Thm2(vi)') if low_double
                      else (WaveKind.PERIODIC_CUSPON, 'Thm2(v)'))
        return WaveClass(kind, (r2, pole), r1, pole, case, roots=(r2, r3, r1))

    if pole > r1:
        kind, case = ((WaveKind.ANTI_CUSPON_DECAY, "Thm2(vi')") if high_double
                      else (WaveKind.PERIODIC_ANTI_CUSPON, "Thm2(v')"))
        return WaveClass(kind, (pole, r2), r3, pole, case, roots=(r1, r2, r3))

    if low_double:
        return _no_wave(spectrum.values, pole)
    kind, case = ((WaveKind.SMOOTH_DECAY_UP, "Thm2(ii')") if high_double
                  else (WaveKind.SMOOTH_PERIODIC, "Thm2(i')"))

    return WaveClass(kind, (r1, r2), r3, pole, case, roots=(r1, r2, r3))


def stumpon_constant(params: ModelParams, c: float) -> float:
    """Value A* = 3c~^2 + 2(c0 - c)c~ for which a plateau phi = c~ is a weak solution.

    Raises:
        NoPole: Raises if alpha = 0.
    """

    pole = pole_location(params, c)
    if pole is None:
        raise NoPole('Stumpons need a pole, alpha must not be 0')

    return 3.0 * pole ** 2 + 2.0 * (params.c0 - c) * pole


def composite_compatible(problems: List[TravelingWaveProblem], classes: List[WaveClass],
                         tol: Optional[float] = None) -> bool:
    """Checks whether weak waves can be joined at phi = c~.

    All pieces must share the constants and speed, have a peakon or cuspon
    kind that reaches c~ at an end of its range, and have the same A. The B
    values may differ.

    Args:
        problems (list): Problems of the pieces.
        classes (list): Classifications of the pieces.
        tol (float, optional): Relative tolerance of the comparisons. \
Defaults to `NumUtils.CLUSTER_TOL`.

    Returns:
        bool: `True` if the pieces form a composite wave.
    """

    if not problems or len(problems) != len(classes):
        return False

    first = problems[0]
    pole = pole_location(first.params, first.c)
    if pole is None:
        return False

    for problem, wave_class in zip(problems, classes):
        if problem.params != first.params or problem.c != first.c:
            log.debug('Pieces differ in constants or speed: %s, %s', first, problem)
            return False
        if not wave_class.kind.is_weak:
            log.debug('Piece of kind %s can not be joined', wave_class.kind)
            return False
        if not any(NumUtils.is_close(end, pole, tol) for end in wave_class.interval):
            return False
        if not NumUtils.is_close(problem.A, first.A, tol):
            log.debug('Pieces have different A: %s != %s', problem.A, first.A)
            return False

    return True


def _classify_cell(params: ModelParams, c: float, axes: str, cluster_tol: Optional[float],
                   pair: Tuple[float, float]) -> WaveClass:
    first, second = pair
    if axes == 'AB':
        return classify(TravelingWaveProblem(params, c, first, second), cluster_tol)

    m, M = first, second
    pole = pole_location(params, c)
    if m > M and not NumUtils.is_close(m, M, cluster_tol):
        return WaveClass(WaveKind.NO_BOUNDED_WAVE, (m, M), c - params.c0 - M - m, pole, 'none')
    if NumUtils.is_close(m, M, cluster_tol):
        return WaveClass(WaveKind.CONSTANT, (m, m), c - params.c0 - 2 * m, pole, 'constant')
    A, B, _ = constants_from_roots(params, c, m, M)

    return classify(TravelingWaveProblem(params, c, A, B), cluster_tol)


def sweep(params: ModelParams, c: float, axes: str,
          grid_spec: Sequence[Tuple[float, float, int]], workers: int = 1,
          cluster_tol: Optional[float] = None) -> PhaseDiagram:
    """Classifies a rectangular grid of problems.

    Args:
        params (ModelParams): Physical constants.
        c (float): Wave speed.
        axes (str): `'mM'` to sweep the roots (m, M), `'AB'` to sweep the constants.
        grid_spec (Sequence): Two (low, high, count) triples, one per axis.
        workers (int, optional): Number of worker processes. Defaults to `1`.
        cluster_tol (float, optional): Classification tolerance. \
Defaults to `NumUtils.CLUSTER_TOL`.

    Raises:
        ValueError: Raises if the axes or the ranges are invalid.

    Returns:
        PhaseDiagram: Classification of every cell, rows follow the first axis.
    """

    if axes not in ('mM', 'AB'):
        raise ValueError(f"Unknown sweep axes: {axes}") from None
    if len(grid_spec) != 2:
        raise ValueError('grid_spec needs one range per axis') from None

    values = []
    for lo, hi, count in grid_spec:
        lo = NumUtils.check_finite('range start', lo)
        hi = NumUtils.check_finite('range end', hi)
        if int(count) < 2 or not lo < hi:
            raise ValueError(f"Invalid sweep range: {lo}..{hi} with {count} points") from None
        values.append(np.linspace(lo, hi, int(count)))

    pairs = [(float(a), float(b)) for a in values[0] for b in values[1]]
    cell = partial(_classify_cell, params, c, axes, cluster_tol)

    if workers > 1:
        chunksize = max(1, len(pairs) // (4 * workers))
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(cell, pairs, chunksize=chunksize))
    else:
        results = [cell(pair) for pair in pairs]

    width = len(values[1])
    cells = [results[i:i + width] for i in range(0, len(results), width)]
    log.debug('Sweep of %d cells over %s finished', len(pairs), axes)

    return PhaseDiagram(axes, values[0], values[1], cells,
                        {**params.to_json(), "c": c})


def sign_oracle(problem: TravelingWaveProblem, lo: float, hi: float, n: int) -> bool:
    """Checks F > 0 at n Chebyshev points inside (lo, hi), independent of the case tables.

    Args:
        problem (TravelingWaveProblem): Problem.
        lo (float): Lower bound.
        hi (float): Upper bound.
        n (int): Number of points, at least 2.

    Raises:
        ValueError: Raises if lo >= hi or n < 2.

    Returns:
        bool: `True` if F is positive at every point.
    """

    if not lo < hi or n < 2:
        raise ValueError('sign_oracle needs lo < hi and n >= 2') from None

    points = NumUtils.chebyshev_nodes(lo, hi, n)
    pole = pole_location(problem.params, problem.c)
    if pole is not None:
        points = points[points != pole]
    try:
        values = potential_eval(problem, points, removable=True)
    except PoleEvaluation:
        return False

    return bool(np.all(values > 0))
