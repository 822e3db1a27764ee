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

from .types import (ModelParams, TravelingWaveProblem, Cubic, PotentialSpectrum, WaveKind,
                    WaveClass, PhaseDiagram, Segment, WaveProfile, TestFunctionSpec,
                    ResidualReport, SpectralGrid, EvolutionState)
from .exceptions import (ModuleBaseException, ProcessingError, BurgersCaseExcluded,
                         PoleEvaluation, NoPole, InvalidInterval, WrongClass,
                         IncompatibleSegments, StumponConstantViolated, CFLViolation,
                         Blowup, ConfigError)
from .model import (make_problem, cubic_of, solve_cubic, constants_from_roots, ellipse_constant,
                    pole_location, reduced_potential, potential_eval, decay_constant,
                    mirror_problem)
from .classifier import classify, stumpon_constant, composite_compatible, sweep, sign_oracle
from .synthesis import (half_period, synth_periodic, synth_decay, corner_slope, synth_peakon,
                        synth_cuspon, glue_composite, synth_stumpon, synthesize)
from .verifier import (quadrature_residual, weak_residual, decay_rate, local_exponent,
                       regularity_check, verify_profile)
from .evolution import helmholtz_invert, rhs, evolve, sample_profile, fit_shift, shape_error

__all__ = (
    'ModelParams',
    'TravelingWaveProblem',
    'Cubic',
    'PotentialSpectrum',
    'WaveKind',
    'WaveClass',
    'PhaseDiagram',
    'Segment',
    'WaveProfile',
    'TestFunctionSpec',
    'ResidualReport',
    'SpectralGrid',
    'EvolutionState',
    'ModuleBaseException',
    'ProcessingError',
    'BurgersCaseExcluded',
    'PoleEvaluation',
    'NoPole',
    'InvalidInterval',
    'WrongClass',
    'IncompatibleSegments',
    'StumponConstantViolated',
    'CFLViolation',
    'Blowup',
    'ConfigError',
    'make_problem',
    'cubic_of',
    'solve_cubic',
    'constants_from_roots',
    'ellipse_constant',
    'pole_location',
    'reduced_potential',
    'potential_eval',
    'decay_constant',
    'mirror_problem',
    'classify',
    'stumpon_constant',
    'composite_compatible',
    'sweep',
    'sign_oracle',
    'half_period',
    'synth_periodic',
    'synth_decay',
    'corner_slope',
    'synth_peakon',
    'synth_cuspon',
    'glue_composite',
    'synth_stumpon',
    'synthesize',
    'quadrature_residual',
    'weak_residual',
    'decay_rate',
    'local_exponent',
    'regularity_check',
    'verify_profile',
    'helmholtz_invert',
    'rhs',
    'evolve',
    'sample_profile',
    'fit_shift',
    'shape_error'
)
