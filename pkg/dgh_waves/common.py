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
from typing import Callable, Tuple, Union

import numpy as np
from scipy.special import roots_legendre


class NumUtils():

    # Relative distance under which two roots are one root of higher multiplicity
    CLUSTER_TOL = 1e-9

    # Relative distance to a double root where quadrature hands over to the exponential tail
    TAIL_TOL = 1e-6

    # Pass threshold of the residual checks
    RESIDUAL_TOL = 1e-5

    # Samples per half-branch of a profile
    SAMPLES = 512

    # Ratio and depth of the geometric sample refinement towards singular endpoints
    GEOMETRIC_RATIO = 1.5
    GEOMETRIC_LEVELS = 20

    # Length of the analytic exponential tail, in decay lengths 1/sqrt(kappa)
    TAIL_LENGTH = 20.0

    # Gauss-Legendre nodes per quadrature panel and panels per piece of a weak integral
    GAUSS_ORDER = 8
    WEAK_PANELS = 256

    @classmethod
    def check_finite(cls, name: str, value: Union[int, float]) -> float:
        """Convert a number to float and make sure it is finite.

        Args:
            name (str): Name of the value used in the error message.
            value (int|float): Raw value.

        Raises:
            ValueError: Raises if the value is not a finite real number.

        Returns:
            float: Checked value.
        """

        try:
            result = float(value)
        except (TypeError, ValueError):
            raise ValueError(f"{name} must be a real number, got {value!r}") from None
        if not math.isfinite(result):
            raise ValueError(f"{name} must be finite, got {value!r}") from None

        return result

    @classmethod
    def is_close(cls, a: float, b: float, tol: float = None) -> bool:
        """Compare two values with the relative clustering tolerance.

        Args:
            a (float): First value.
            b (float): Second value.
            tol (float, optional): Relative tolerance. Defaults to `CLUSTER_TOL`.

        Returns:
            bool: `True` if |a-b| <= tol*max(1, |a|, |b|).
        """

        tol = cls.CLUSTER_TOL if tol is None else tol
        return abs(a - b) <= tol * max(1.0, abs(a), abs(b))

    @classmethod
    def chebyshev_nodes(cls, lo: float, hi: float, n: int) -> np.ndarray:
        """Chebyshev points of the first kind inside (lo, hi), ascending.

        Args:
            lo (float): Lower bound.
            hi (float): Upper bound.
            n (int): Number of points.

        Returns:
            ndarray: Interior points.
        """

        k = np.arange(n, 0, -1)
        return 0.5 * (lo + hi) + 0.5 * (hi - lo) * np.cos((2 * k - 1) * np.pi / (2 * n))

    @classmethod
    def clustered_nodes(cls, length: float, n: int, geometric: bool = False) -> np.ndarray:
        """Nodes on [0, length] starting at 0, uniform with an optional geometric
        refinement of the first cell.

        Args:
            length (float): Length of the interval.
            n (int): Number of uniform cells.
            geometric (bool, optional): Refine towards 0 with ratio `GEOMETRIC_RATIO`. \
Defaults to `False`.

        Returns:
            ndarray: Strictly increasing nodes, first node is 0 and last is `length`.
        """

        nodes = np.linspace(0.0, length, n + 1)
        if geometric:
            first = nodes[1] * cls.GEOMETRIC_RATIO ** -np.arange(cls.GEOMETRIC_LEVELS, 0, -1)
            nodes = np.concatenate(([0.0], first, nodes[1:]))

        return nodes

    @classmethod
    def cumulative_gauss(cls, func: Callable, nodes: np.ndarray) -> np.ndarray:
        """Cumulative integral of a smooth function over consecutive nodes.

        Every cell is integrated with a fixed Gauss-Legendre rule, the function
        is called once with all quadrature points.

        Args:
            func (Callable): Vectorized integrand.
            nodes (ndarray): Increasing nodes.

        Returns:
            ndarray: Integral from nodes[0] to each node, first value is 0.
        """

        x, w = roots_legendre(cls.GAUSS_ORDER)
        left = nodes[:-1, None]
        half = 0.5 * np.diff(nodes)[:, None]
        values = func(left + half * (x + 1.0))
        cells = np.sum(values * w, axis=1) * half[:, 0]

        return np.concatenate(([0.0], np.cumsum(cells)))

    @classmethod
    def gauss_panels(cls, lo: float, hi: float,
                     panels: int = None) -> Tuple[np.ndarray, np.ndarray]:
        """Nodes and weights of composite Gauss-Legendre quadrature on [lo, hi].

        Args:
            lo (float): Lower bound.
            hi (float): Upper bound.
            panels (int, optional): Number of equal panels. Defaults to `WEAK_PANELS`.

        Returns:
            tuple: Flat arrays of nodes and weights.
        """

        panels = cls.WEAK_PANELS if panels is None else panels
        x, w = roots_legendre(cls.GAUSS_ORDER)
        edges = np.linspace(lo, hi, panels + 1)
        half = 0.5 * np.diff(edges)[:, None]
        nodes = edges[:-1, None] + half * (x + 1.0)

        return nodes.ravel(), (half * w).ravel()

    @classmethod
    def format_float(cls, value: float) -> str:
        """Shortest decimal string that reads back to the same double.

        Args:
            value (float): Number to format.

        Returns:
            str: Round-trip representation.
        """

        return repr(float(value))
