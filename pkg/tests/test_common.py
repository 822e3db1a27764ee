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
import unittest

import numpy as np

from dgh_waves.common import NumUtils


class TestNumUtils(unittest.TestCase):
    """Test cases for NumUtils object"""

    def test_check_finite(self):
        """Tests check_finite in different cases"""

        test_cases = [
            {'input': 1, 'output': 1.0, 'raised': False},
            {'input': '2.5', 'output': 2.5, 'raised': False},
            {'input': float('nan'), 'output': None, 'raised': True},
            {'input': math.inf, 'output': None, 'raised': True},
            {'input': 'abc', 'output': None, 'raised': True},
            {'input': None, 'output': None, 'raised': True}
        ]

        for case in test_cases:
            try:
                value = NumUtils.check_finite('value', case['input'])
            except ValueError:
                if not case['raised']:
                    self.fail(f"raised unexpected Exception with input data: {case['input']}")
            else:
                if case['raised']:
                    self.fail(f"not raised expected Exception with input data: {case['input']}")
                self.assertEqual(value, case['output'],
                                 f"unexpected output with input data: {case['input']}")

    def test_is_close(self):
        """Tests relative comparison of values"""

        test_cases = [
            {'input': (1.0, 1.0 + 1e-10), 'tol': None, 'output': True},
            {'input': (1.0, 1.0 + 1e-8), 'tol': None, 'output': False},
            {'input': (1e6, 1e6 + 1e-4), 'tol': None, 'output': True},
            {'input': (0.0, 1e-10), 'tol': None, 'output': True},
            {'input': (0.0, 1e-4), 'tol': 1e-3, 'output': True}
        ]

        for case in test_cases:
            self.assertEqual(NumUtils.is_close(*case['input'], tol=case['tol']), case['output'],
                             f"unexpected output with input data: {case['input']}")

    def test_chebyshev_nodes(self):
        """Tests that Chebyshev nodes are interior and ascending"""

        nodes = NumUtils.chebyshev_nodes(-1.0, 3.0, 16)
        self.assertEqual(nodes.size, 16)
        self.assertTrue(np.all(np.diff(nodes) > 0))
        self.assertTrue(nodes[0] > -1.0 and nodes[-1] < 3.0)
        self.assertAlmostEqual(float(np.mean(nodes)), 1.0, places=12)

    def test_clustered_nodes(self):
        """Tests uniform and geometrically refined nodes"""

        test_cases = [
            {'input': (2.0, 10, False), 'output': 11},
            {'input': (2.0, 10, True), 'output': 11 + NumUtils.GEOMETRIC_LEVELS}
        ]

        for case in test_cases:
            nodes = NumUtils.clustered_nodes(*case['input'])
            self.assertEqual(nodes.size, case['output'],
                             f"unexpected output with input data: {case['input']}")
            self.assertEqual(nodes[0], 0.0)
            self.assertAlmostEqual(nodes[-1], 2.0, places=14)
            self.assertTrue(np.all(np.diff(nodes) > 0),
                            f"unexpected output with input data: {case['input']}")

        nodes = NumUtils.clustered_nodes(1.0, 4, True)
        ratios = nodes[2:NumUtils.GEOMETRIC_LEVELS + 1] / nodes[1:NumUtils.GEOMETRIC_LEVELS]
        self.assertTrue(np.allclose(ratios, NumUtils.GEOMETRIC_RATIO))

    def test_cumulative_gauss(self):
        """Tests cumulative integration of polynomials and smooth functions"""

        nodes = np.linspace(0.0, 2.0, 5)
        result = NumUtils.cumulative_gauss(lambda x: x ** 2, nodes)
        self.assertTrue(np.allclose(result, nodes ** 3 / 3.0, rtol=0, atol=1e-14))

        nodes = np.linspace(0.0, math.pi, 9)
        result = NumUtils.cumulative_gauss(np.sin, nodes)
        self.assertTrue(np.allclose(result, 1.0 - np.cos(nodes), rtol=0, atol=1e-12))

    def test_gauss_panels(self):
        """Tests composite Gauss-Legendre quadrature"""

        nodes, weights = NumUtils.gauss_panels(-1.0, 2.0, 4)
        self.assertEqual(nodes.size, 4 * NumUtils.GAUSS_ORDER)
        self.assertAlmostEqual(float(np.sum(weights)), 3.0, places=13)
        self.assertAlmostEqual(float(np.sum(weights * np.exp(nodes))),
                               math.exp(2.0) - math.exp(-1.0), places=12)
        self.assertTrue(np.all((nodes > -1.0) & (nodes < 2.0)))

    def test_format_float(self):
        """Tests round-trip formatting of floats"""

        test_cases = [
            {'input': 0.1, 'output': '0.1'},
            {'input': 3, 'output': '3.0'},
            {'input': 1 / 3, 'output': '0.3333333333333333'},
            {'input': -2.5e-12, 'output': '-2.5e-12'}
        ]

        for case in test_cases:
            text = NumUtils.format_float(case['input'])
            self.assertEqual(text, case['output'],
                             f"unexpected output with input data: {case['input']}")
            self.assertEqual(float(text), float(case['input']))


if __name__ == '__main__':
    unittest.main()
