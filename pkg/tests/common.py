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

from dgh_waves.types import ModelParams, TravelingWaveProblem
from dgh_waves.model import constants_from_roots


# Camassa-Holm peakon 3 exp(-|z|)
PEAKON_DEFAULTS = {
    'alpha': 1.0,
    'c0': 0.0,
    'gamma': 0.0,
    'c': 3.0,
    'A': 0.0,
    'B': 0.0
}

# Cusped wave decaying to the double root -1/2, kappa = 5/3
CUSPON_DEFAULTS = {
    'alpha': 1.0,
    'c0': 0.0,
    'gamma': 0.0,
    'c': 1.0,
    'A': 1.75,
    'B': 0.5
}

# KdV soliton sech^2(z/2)
SOLITON_DEFAULTS = {
    'alpha': 0.0,
    'c0': 0.0,
    'gamma': 1.0,
    'c': 1.0,
    'A': 0.0,
    'B': 0.0
}

# Smooth periodic wave between the roots 1 and 2
PERIODIC_DEFAULTS = {
    'alpha': 1.0,
    'c0': 0.0,
    'gamma': 0.0,
    'c': 3.0,
    'A': -2.0,
    'B': 0.0
}

# Decaying cuspon with A equal to the stumpon constant, double root -1/3
STUMPON_DEFAULTS = {
    'alpha': 1.0,
    'c0': 0.0,
    'gamma': 0.0,
    'c': 1.0,
    'A': 1.0,
    'B': 5.0 / 27.0
}

# Periodic peakon and periodic cuspon sharing A = 0.25 at c~ = 1
COMPOSITE_DEFAULTS = {
    'alpha': 1.0,
    'c0': 0.0,
    'gamma': 0.0,
    'c': 1.0,
    'peakon': (0.5, 1.0),
    'cuspon': (-0.1 + math.sqrt(0.02), 1.2),
    'mismatched': (0.05, 1.2),
    'A': 0.25
}


def params_of(defaults: dict) -> ModelParams:
    return ModelParams(defaults['alpha'], defaults['c0'], defaults['gamma'])


def problem_of(defaults: dict) -> TravelingWaveProblem:
    return TravelingWaveProblem(params_of(defaults), defaults['c'], defaults['A'], defaults['B'])


def problem_from_roots(defaults: dict, m: float, M: float) -> TravelingWaveProblem:
    params = params_of(defaults)
    A, B, _ = constants_from_roots(params, defaults['c'], m, M)
    return TravelingWaveProblem(params, defaults['c'], A, B)


def cli_flags(defaults: dict) -> list:
    flags = []
    for key in ('alpha', 'c0', 'gamma', 'c', 'A', 'B'):
        flags.extend([f"--{key}", repr(defaults[key])])
    return flags
