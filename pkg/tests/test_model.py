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

from dgh_waves.exceptions import NoPole, PoleEvaluation
from dgh_waves.types import Cubic, ModelParams, TravelingWaveProblem
from dgh_waves.model import (cubic_of, solve_cubic, constants_from_roots, ellipse_constant,
                             pole_location, reduced_potential, is_removable, potential_eval,
                             decay_constant, mirror_problem, spectrum_of)

from tests import common


class TestSolveCubic(unittest.TestCase):
    """Test cases for solve_cubic function"""

    def test_roots(self):
        """Tests roots and multiplicities of cubics"""

        test_cases = [
            {'input': [-1, 3, -2, 0], 'output': [(0.0, 1), (1.0, 1), (2.0, 1)]},
            {'input': [-1, 1, 1.75, 0.5], 'output': [(-0.5, 2), (2.0, 1)]},
            {'input': [-1, 3, 0, 0], 'output': [(0.0, 2), (3.0, 1)]},
            {'input': [-1, 3, -3, 1], 'output': [(1.0, 3)]},
            {'input': [-1, 0, -1, 0], 'output': [(0.0, 1)]},
            {'input': [-1, 1, 1, 5 / 27], 'output': [(-1 / 3, 2), (5 / 3, 1)]},
            {'input': [-1, 0, 0, 0], 'output': [(0.0, 3)]}
        ]

        for case in test_cases:
            roots = solve_cubic(Cubic(case['input']))
            self.assertEqual([k for _, k in roots], [k for _, k in case['output']],
                             f"unexpected output with input data: {case['input']}")
            for (value, _), (expected, _) in zip(roots, case['output']):
                self.assertAlmostEqual(value, expected, places=7,
                                       msg=f"unexpected output with input data: {case['input']}")

    def test_cluster_tol(self):
        """Tests that the clustering tolerance decides between simple and double roots"""

        # roots 1 - 1e-4, 1 + 1e-4 and 2
        a, b, d = 1 - 1e-4, 1 + 1e-4, 2.0
        cubic = Cubic([-1, a + b + d, -(a * b + a * d + b * d), a * b * d])
        self.assertEqual(len(solve_cubic(cubic)), 3)
        self.assertEqual([k for _, k in solve_cubic(cubic, 1e-3)], [2, 1])

        with self.assertRaises(ValueError):
            solve_cubic(cubic, 0.0)

    def test_random(self):
        """Tests recovery of random separated roots through the integration constants"""

        rng = np.random.default_rng(7)
        checked = 0
        while checked < 10000:
            c, c0, gamma = rng.uniform(-3.0, 3.0, 3)
            m, M = np.sort(rng.uniform(-5.0, 5.0, 2))
            params = ModelParams(1.0, float(c0), float(gamma))
            A, B, z0 = constants_from_roots(params, float(c), float(m), float(M))
            expected = np.sort([m, M, z0])
            if np.min(np.diff(expected)) <= 1e-3:
                continue
            checked += 1

            found = solve_cubic(cubic_of(TravelingWaveProblem(params, float(c), A, B)))
            self.assertEqual([k for _, k in found], [1, 1, 1],
                             f"unexpected output with input data: {(c, c0, m, M)}")
            values = np.array([v for v, _ in found])
            tolerance = 1e-8 * np.maximum(1.0, np.abs(expected))
            self.assertTrue(np.all(np.abs(values - expected) <= tolerance),
                            f"unexpected output with input data: {(c, c0, m, M)}")


class TestConstants(unittest.TestCase):
    """Test cases for the integration constant maps"""

    def test_constants_from_roots(self):
        """Tests Vieta maps from (m, M) to (A, B)"""

        params = ModelParams(1.0, 0.0, 0.0)
        test_cases = [
            {'input': (3.0, 1.0, 2.0), 'output': (-2.0, 0.0, 0.0)},
            {'input': (3.0, 0.0, 3.0), 'output': (0.0, 0.0, 0.0)},
            {'input': (1.0, 0.5, 1.0), 'output': (0.25, -0.25, -0.5)}
        ]

        for case in test_cases:
            result = constants_from_roots(params, *case['input'])
            self.assertTrue(np.allclose(result, case['output']),
                            f"unexpected output with input data: {case['input']}")
            c, m, M = case['input']
            self.assertAlmostEqual(ellipse_constant(params, c, m, M), result[0], places=12)

            problem = TravelingWaveProblem(params, c, result[0], result[1])
            values = spectrum_of(problem).values
            self.assertTrue(np.allclose(sorted(values), sorted((m, M, result[2])), atol=1e-6),
                            f"unexpected output with input data: {case['input']}")

        with self.assertRaises(ValueError):
            constants_from_roots(params, 3.0, 2.0, 1.0)

    def test_pole_location(self):
        """Tests the pole c~ = c + gamma/alpha^2"""

        test_cases = [
            {'input': (ModelParams(1.0, 0.0, 2.0), 3.0), 'output': 5.0},
            {'input': (ModelParams(2.0, 1.0, 2.0), 1.0), 'output': 1.5},
            {'input': (ModelParams(0.0, 0.0, 1.0), 1.0), 'output': None}
        ]

        for case in test_cases:
            self.assertEqual(pole_location(*case['input']), case['output'],
                             f"unexpected output with input data: {case['input']}")


class TestPotential(unittest.TestCase):
    """Test cases for the potential F"""

    def test_potential_eval(self):
        """Tests F against closed forms"""

        peakon = common.problem_of(common.PEAKON_DEFAULTS)
        soliton = common.problem_of(common.SOLITON_DEFAULTS)
        test_cases = [
            {'input': (peakon, 1.5, False), 'output': 2.25},
            {'input': (peakon, 3.0, True), 'output': 9.0},
            {'input': (peakon, -1.0, False), 'output': 1.0},
            {'input': (soliton, 0.5, False), 'output': 0.125},
            {'input': (soliton, 1.0, False), 'output': 0.0}
        ]

        for case in test_cases:
            self.assertAlmostEqual(potential_eval(*case['input']), case['output'], places=12,
                                   msg=f"unexpected output with input data: {case['input']}")

        values = potential_eval(peakon, np.array([0.5, 1.0, 2.0]))
        self.assertTrue(np.allclose(values, [0.25, 1.0, 4.0]))

        with self.assertRaises(PoleEvaluation):
            potential_eval(peakon, 3.0)
        with self.assertRaises(PoleEvaluation):
            potential_eval(common.problem_of(common.CUSPON_DEFAULTS), 1.0, removable=True)

    def test_scaling(self):
        """Tests that alpha -> s*alpha, gamma -> s^2*gamma divides F by s^2"""

        problem = TravelingWaveProblem(ModelParams(1.0, 0.2, 0.5), 2.0, 0.3, 0.1)
        phi = np.array([-1.0, 0.0, 0.7, 1.9, 3.1])
        for s in (0.5, 2.0, 3.0):
            scaled = TravelingWaveProblem(ModelParams(s, 0.2, 0.5 * s ** 2), 2.0, 0.3, 0.1)
            self.assertTrue(np.allclose(potential_eval(scaled, phi) * s ** 2,
                                        potential_eval(problem, phi)),
                            f"unexpected output with input data: {s}")
            self.assertEqual(np.sign(potential_eval(scaled, phi)).tolist(),
                             np.sign(potential_eval(problem, phi)).tolist())

    def test_reduced_potential(self):
        """Tests cancellation of the pole by a root"""

        peakon = common.problem_of(common.PEAKON_DEFAULTS)
        quotient, remainder = reduced_potential(peakon)
        self.assertTrue(np.allclose(quotient, [1.0, 0.0, 0.0]))
        self.assertAlmostEqual(remainder, 0.0, places=12)
        self.assertTrue(is_removable(peakon))
        self.assertFalse(is_removable(common.problem_of(common.CUSPON_DEFAULTS)))
        self.assertFalse(is_removable(common.problem_of(common.SOLITON_DEFAULTS)))

        with self.assertRaises(NoPole):
            reduced_potential(common.problem_of(common.SOLITON_DEFAULTS))

    def test_decay_constant(self):
        """Tests kappa of known homoclinic orbits"""

        test_cases = [
            {'input': (common.SOLITON_DEFAULTS, 0.0), 'output': 1.0},
            {'input': (common.PEAKON_DEFAULTS, 0.0), 'output': 1.0},
            {'input': (common.CUSPON_DEFAULTS, -0.5), 'output': 5.0 / 3.0},
            {'input': (common.STUMPON_DEFAULTS, -1.0 / 3.0), 'output': 1.5}
        ]

        for case in test_cases:
            defaults, limit = case['input']
            self.assertAlmostEqual(decay_constant(common.problem_of(defaults), limit),
                                   case['output'], places=12,
                                   msg=f"unexpected output with input data: {case['input']}")


class TestMirror(unittest.TestCase):
    """Test cases for mirror_problem function"""

    def test_mirror(self):
        """Tests that reflection negates roots and pole and keeps F"""

        for defaults in (common.PEAKON_DEFAULTS, common.CUSPON_DEFAULTS,
                         common.SOLITON_DEFAULTS, common.PERIODIC_DEFAULTS):
            problem = common.problem_of(defaults)
            mirrored = mirror_problem(problem)
            spectrum = spectrum_of(problem)
            reflected = spectrum_of(mirrored)
            self.assertTrue(np.allclose(reflected.values, [-v for v in spectrum.values[::-1]]),
                            f"unexpected output with input data: {defaults}")
            if spectrum.pole is not None:
                self.assertAlmostEqual(reflected.pole, -spectrum.pole, places=12)

            phi = np.array([-0.25, 0.4, 1.3])
            self.assertTrue(np.allclose(potential_eval(mirrored, -phi),
                                        potential_eval(problem, phi)),
                            f"unexpected output with input data: {defaults}")
            self.assertEqual(mirror_problem(mirrored).to_json(), problem.to_json())

    def test_cubic_of(self):
        """Tests coefficients of P"""

        problem = TravelingWaveProblem(ModelParams(1.0, 0.5, 0.0), 2.0, 0.3, -0.1)
        self.assertEqual(cubic_of(problem), [-1.0, 1.5, 0.3, -0.1])


if __name__ == '__main__':
    unittest.main()
