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

import unittest

import numpy as np

from dgh_waves.exceptions import NoPole
from dgh_waves.types import ModelParams, TravelingWaveProblem, WaveKind
from dgh_waves.model import constants_from_roots, mirror_problem, potential_eval, spectrum_of
from dgh_waves.classifier import (classify, stumpon_constant, composite_compatible, sweep,
                                  sign_oracle)

from tests import common

MIRRORED_KINDS = {
    WaveKind.SMOOTH_PERIODIC: WaveKind.SMOOTH_PERIODIC,
    WaveKind.SMOOTH_DECAY_DOWN: WaveKind.SMOOTH_DECAY_UP,
    WaveKind.SMOOTH_DECAY_UP: WaveKind.SMOOTH_DECAY_DOWN,
    WaveKind.PERIODIC_PEAKON: WaveKind.PERIODIC_ANTI_PEAKON,
    WaveKind.PERIODIC_ANTI_PEAKON: WaveKind.PERIODIC_PEAKON,
    WaveKind.PEAKON_DECAY: WaveKind.ANTI_PEAKON_DECAY,
    WaveKind.ANTI_PEAKON_DECAY: WaveKind.PEAKON_DECAY,
    WaveKind.PERIODIC_CUSPON: WaveKind.PERIODIC_ANTI_CUSPON,
    WaveKind.PERIODIC_ANTI_CUSPON: WaveKind.PERIODIC_CUSPON,
    WaveKind.CUSPON_DECAY: WaveKind.ANTI_CUSPON_DECAY,
    WaveKind.ANTI_CUSPON_DECAY: WaveKind.CUSPON_DECAY,
    WaveKind.CONSTANT: WaveKind.CONSTANT,
    WaveKind.NO_BOUNDED_WAVE: WaveKind.NO_BOUNDED_WAVE
}


def _random_problem(rng: np.random.Generator) -> TravelingWaveProblem:
    alpha = rng.choice([0.0, rng.uniform(0.5, 2.0)])
    gamma = rng.uniform(-1.0, 1.0)
    params = ModelParams(alpha, rng.uniform(-1.0, 1.0), gamma)
    c = rng.uniform(-2.0, 2.0)
    m, M = np.sort(rng.uniform(-2.0, 2.0, 2))
    A, B, _ = constants_from_roots(params, c, m, M)
    return TravelingWaveProblem(params, c, A, B)


def _separated_problem(rng: np.random.Generator) -> tuple:
    # three simple roots and the pole at least 1e-3 apart
    while True:
        alpha = float(rng.choice([0.0, rng.uniform(0.5, 2.0)]))
        gamma = float(rng.uniform(-1.0, 1.0))
        c = float(rng.uniform(-2.0, 2.0))
        roots = np.sort(rng.uniform(-2.0, 2.0, 3))
        pole = c + gamma / alpha ** 2 if alpha else None
        ends = np.sort(np.append(roots, [] if pole is None else [pole]))
        if abs(gamma) > 1e-3 and np.min(np.diff(ends)) > 1e-3:
            break
    r1, r2, r3 = (float(r) for r in roots)
    params = ModelParams(alpha, c - (r1 + r2 + r3), gamma)
    problem = TravelingWaveProblem(params, c, -(r1 * r2 + r1 * r3 + r2 * r3), r1 * r2 * r3)

    return problem, (r1, r2, r3), pole


def _positive_intervals(problem: TravelingWaveProblem, roots: tuple, pole) -> list:
    # F from the roots themselves, sampled on 512 Chebyshev points of every gap
    params = problem.params
    ends = sorted(roots + (() if pole is None else (pole,)))
    nodes = 0.5 * (1.0 - np.cos(np.pi * (np.arange(512) + 0.5) / 512))
    found = []
    for lo, hi in zip(ends[:-1], ends[1:]):
        phi = lo + (hi - lo) * nodes
        value = -(phi - roots[0]) * (phi - roots[1]) * (phi - roots[2])
        if params.is_kdv:
            value = value / params.gamma
        else:
            value = value / (params.alpha ** 2 * (pole - phi))
        if np.all(value > 0):
            found.append((lo, hi))

    return found


class TestClassify(unittest.TestCase):
    """Test cases for classify function"""

    def test_cases(self):
        """Tests classification of known waves"""

        composite = common.COMPOSITE_DEFAULTS
        test_cases = [
            {'input': common.problem_of(common.PEAKON_DEFAULTS),
             'output': (WaveKind.PEAKON_DECAY, 'Thm2(iv)', (0.0, 3.0))},
            {'input': common.problem_of(common.CUSPON_DEFAULTS),
             'output': (WaveKind.CUSPON_DECAY, 'Thm2(vi)', (-0.5, 1.0))},
            {'input': common.problem_of(common.SOLITON_DEFAULTS),
             'output': (WaveKind.SMOOTH_DECAY_DOWN, 'Thm1(ii)', (0.0, 1.0))},
            {'input': common.problem_of(common.PERIODIC_DEFAULTS),
             'output': (WaveKind.SMOOTH_PERIODIC, 'Thm2(i)', (1.0, 2.0))},
            {'input': common.problem_of(common.STUMPON_DEFAULTS),
             'output': (WaveKind.CUSPON_DECAY, 'Thm2(vi)', (-1.0 / 3.0, 1.0))},
            {'input': common.problem_from_roots(composite, *composite['peakon']),
             'output': (WaveKind.PERIODIC_PEAKON, 'Thm2(iii)', (0.5, 1.0))},
            {'input': common.problem_from_roots(composite, *composite['cuspon']),
             'output': (WaveKind.PERIODIC_CUSPON, 'Thm2(v)', (composite['cuspon'][0], 1.0))},
            {'input': TravelingWaveProblem(ModelParams(0.0, 0.0, 1.0), 3.0, -2.0, 0.0),
             'output': (WaveKind.SMOOTH_PERIODIC, 'Thm1(i)', (1.0, 2.0))},
            {'input': TravelingWaveProblem(ModelParams(1.0, 0.0, 0.0), 3.0, -10.0, 0.0),
             'output': (WaveKind.NO_BOUNDED_WAVE, 'none', None)},
            {'input': TravelingWaveProblem(ModelParams(1.0, 0.0, 0.0), 3.0, -3.0, 1.0),
             'output': (WaveKind.CONSTANT, 'constant', (1.0, 1.0))}
        ]

        for case in test_cases:
            result = classify(case['input'])
            kind, theorem_case, interval = case['output']
            self.assertEqual((result.kind, result.theorem_case), (kind, theorem_case),
                             f"unexpected output with input data: {case['input']}")
            if interval is not None:
                self.assertTrue(np.allclose(result.interval, interval, atol=1e-7),
                                f"unexpected output with input data: {case['input']}")

    def test_theorem_roots(self):
        """Tests that the theorem roots keep the (m, M, z0) naming"""

        result = classify(common.problem_of(common.CUSPON_DEFAULTS))
        self.assertTrue(np.allclose(result.roots, (-0.5, 2.0, -0.5), atol=1e-7))
        self.assertAlmostEqual(result.pole, 1.0, places=12)
        self.assertTrue(np.allclose((result.m, result.M), (-0.5, 2.0), atol=1e-7))

    def test_mirror(self):
        """Tests that reflected problems give the reflected wave"""

        rng = np.random.default_rng(11)
        problems = [common.problem_of(d) for d in (common.PEAKON_DEFAULTS,
                                                   common.CUSPON_DEFAULTS,
                                                   common.SOLITON_DEFAULTS,
                                                   common.PERIODIC_DEFAULTS)]
        problems.extend(_random_problem(rng) for _ in range(100))

        for problem in problems:
            result = classify(problem)
            mirrored = classify(mirror_problem(problem))
            self.assertEqual(mirrored.kind, MIRRORED_KINDS[result.kind],
                             f"unexpected output with input data: {problem}")
            if result.kind.is_bounded:
                self.assertTrue(np.allclose(mirrored.interval, [-v for v in result.interval[::-1]],
                                            atol=1e-7),
                                f"unexpected output with input data: {problem}")

    def test_brute_force(self):
        """Tests classify against sign sampling of F between consecutive roots and pole"""

        rng = np.random.default_rng(11)
        for _ in range(10000):
            problem, roots, pole = _separated_problem(rng)
            msg = f"unexpected output with input data: {problem}"
            spectrum = spectrum_of(problem)
            self.assertEqual([spectrum.multiplicity(r) for r in roots], [1, 1, 1], msg)

            result = classify(problem)
            found = _positive_intervals(problem, roots, pole)
            if result.kind is WaveKind.NO_BOUNDED_WAVE:
                self.assertEqual(found, [], msg)
                continue
            self.assertEqual(len(found), 1, msg)
            self.assertTrue(np.allclose(result.interval, found[0], rtol=1e-7, atol=1e-9), msg)

    def test_sign_oracle(self):
        """Tests every bounded classification against direct sampling of F"""

        rng = np.random.default_rng(3)
        checked = 0
        for _ in range(10000):
            problem = _random_problem(rng)
            result = classify(problem)
            if not result.kind.is_bounded or result.kind is WaveKind.CONSTANT:
                continue
            lo, hi = result.interval
            self.assertTrue(sign_oracle(problem, lo, hi, 512),
                            f"unexpected output with input data: {problem}")

            spectrum = spectrum_of(problem)
            ends = list(spectrum.values) + ([spectrum.pole] if spectrum.pole is not None else [])
            for end in (lo, hi):
                self.assertTrue(any(abs(end - v) <= 1e-7 * max(1.0, abs(v)) for v in ends),
                                f"unexpected output with input data: {problem}")

            width = hi - lo
            outside = np.array([lo - 1e-6 * width, hi + 1e-6 * width])
            self.assertFalse(np.all(potential_eval(problem, outside, removable=True) > 0),
                             f"unexpected output with input data: {problem}")
            checked += 1

        self.assertGreater(checked, 1000)

        with self.assertRaises(ValueError):
            sign_oracle(common.problem_of(common.PEAKON_DEFAULTS), 1.0, 0.0, 8)


class TestStumponConstant(unittest.TestCase):
    """Test cases for stumpon_constant function"""

    def test_value(self):
        """Tests A* = 3c~^2 + 2(c0 - c)c~"""

        test_cases = [
            {'input': (ModelParams(1.0, 0.0, 0.0), 1.0), 'output': 1.0},
            {'input': (ModelParams(1.0, 0.0, 0.0), 3.0), 'output': 9.0},
            {'input': (ModelParams(1.0, 0.5, 1.0), 1.0), 'output': 10.0}
        ]

        for case in test_cases:
            self.assertAlmostEqual(stumpon_constant(*case['input']), case['output'], places=12,
                                   msg=f"unexpected output with input data: {case['input']}")

        with self.assertRaises(NoPole):
            stumpon_constant(ModelParams(0.0, 0.0, 1.0), 1.0)


class TestCompositeCompatible(unittest.TestCase):
    """Test cases for composite_compatible function"""

    def test_compatible(self):
        """Tests joining of peakon and cuspon pieces"""

        composite = common.COMPOSITE_DEFAULTS
        peakon = common.problem_from_roots(composite, *composite['peakon'])
        cuspon = common.problem_from_roots(composite, *composite['cuspon'])
        mismatched = common.problem_from_roots(composite, *composite['mismatched'])
        smooth = common.problem_of(common.PERIODIC_DEFAULTS)

        self.assertAlmostEqual(peakon.A, composite['A'], places=12)
        self.assertAlmostEqual(cuspon.A, composite['A'], places=12)

        test_cases = [
            {'input': [peakon, cuspon], 'output': True},
            {'input': [cuspon, peakon, cuspon], 'output': True},
            {'input': [peakon, mismatched], 'output': False},
            {'input': [peakon, smooth], 'output': False},
            {'input': [], 'output': False}
        ]

        for case in test_cases:
            classes = [classify(problem) for problem in case['input']]
            self.assertEqual(composite_compatible(case['input'], classes), case['output'],
                             f"unexpected output with input data: {case['input']}")


class TestSweep(unittest.TestCase):
    """Test cases for sweep function"""

    def test_roots_plane(self):
        """Tests the (m, M) phase diagram of the Camassa-Holm equation"""

        params = common.params_of(common.PEAKON_DEFAULTS)
        diagram = sweep(params, 3.0, 'mM', ((-1.0, 4.0, 11), (-1.0, 4.0, 11)))
        self.assertEqual(len(diagram.cells), 11)
        self.assertEqual(diagram.fixed, {'alpha': 1.0, 'c0': 0.0, 'gamma': 0.0, 'c': 3.0})

        cells = {(a1, a2): cell for a1, a2, cell in diagram.rows()}
        self.assertEqual(cells[(0.0, 3.0)].kind, WaveKind.PEAKON_DECAY)
        self.assertEqual(cells[(1.0, 2.0)].kind, WaveKind.SMOOTH_PERIODIC)
        self.assertEqual(cells[(1.0, 1.0)].kind, WaveKind.CONSTANT)
        for (m, M), cell in cells.items():
            if m > M:
                self.assertEqual(cell.kind, WaveKind.NO_BOUNDED_WAVE,
                                 f"unexpected output with input data: {(m, M)}")

    def test_workers(self):
        """Tests that parallel sweeps match serial ones"""

        params = ModelParams(1.0, 0.2, 0.3)
        spec = ((-2.0, 2.0, 7), (-1.0, 3.0, 6))
        serial = sweep(params, 1.5, 'AB', spec)
        parallel = sweep(params, 1.5, 'AB', spec, workers=2)
        self.assertEqual(serial.kinds, parallel.kinds)
        self.assertEqual([c.theorem_case for _, _, c in serial.rows()],
                         [c.theorem_case for _, _, c in parallel.rows()])

    def test_invalid(self):
        """Tests rejection of malformed sweep ranges"""

        params = ModelParams(1.0, 0.0, 0.0)
        test_cases = [
            {'input': ('mM', ((1.0, 1.0, 5), (0.0, 1.0, 5)))},
            {'input': ('mM', ((0.0, 1.0, 1), (0.0, 1.0, 5)))},
            {'input': ('mM', ((0.0, 1.0, 5),))},
            {'input': ('xy', ((0.0, 1.0, 5), (0.0, 1.0, 5)))}
        ]

        for case in test_cases:
            with self.assertRaises(ValueError, msg=f"input data={case['input']}"):
                sweep(params, 1.0, *case['input'])


if __name__ == '__main__':
    unittest.main()
