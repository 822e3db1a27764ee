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

import os
import csv
import sys
import json
import math
import logging
import argparse
from typing import Any, Callable, Dict, List, Optional, TextIO

from .version import __version__
from .common import NumUtils
from .logger import EmptyHandler, ArrayFilter
from .exceptions import (ModuleBaseException, BurgersCaseExcluded, StumponConstantViolated,
                         CFLViolation, Blowup, ConfigError)
from .types import ModelParams, SpectralGrid, TravelingWaveProblem, WaveClass, WaveProfile
from .model import make_problem, constants_from_roots
from .classifier import classify, stumpon_constant, sweep
from .synthesis import synthesize, synth_stumpon
from .verifier import weak_residual, verify_profile
from .evolution import evolve, fit_shift, sample_profile

log = logging.getLogger(__name__)
log.addHandler(EmptyHandler())
log.addFilter(ArrayFilter())

EXIT_PASS = 0
EXIT_USAGE = 1
EXIT_NO_WAVE = 2
EXIT_FAILED = 3
EXIT_UNSUPPORTED = 4
EXIT_BLOWUP = 5

CONFIG_ENV = 'DGH_CONFIG'


def _floats(count: Optional[int] = None) -> Callable[[Any], List[float]]:
    def convert(value):
        if isinstance(value, str):
            value = value.replace(',', ' ').split()
        if not isinstance(value, (list, tuple)):
            raise TypeError(f"expected a list, got {value!r}") from None
        result = [float(item) for item in value]
        if count is not None and len(result) != count:
            raise ValueError(f"expected {count} values, got {len(result)}") from None
        return result
    return convert


def _text(value: Any) -> str:
    if not isinstance(value, str):
        raise TypeError(f"expected a string, got {value!r}") from None
    return value


def _integer(value: Any) -> int:
    if isinstance(value, float) and not value.is_integer():
        raise ValueError(f"expected an integer, got {value!r}") from None
    return int(value)


class RunConfig():
    """Resolved settings of one command line run.

    Values come from the built-in defaults, then a JSON config file (the
    `--config` flag, or the file named by the DGH_CONFIG environment
    variable when the flag is absent), then the command line flags.

    Args:
        values (dict, optional): Settings overriding the defaults. Defaults to `None`.

    Raises:
        ConfigError: Raises on unknown keys or values of the wrong type.
    """

    FIELDS = {
        'alpha': (float, 1.0, 'length scale alpha'),
        'c0': (float, 0.0, 'linear dispersion speed c0'),
        'gamma': (float, 0.0, 'third order dispersion gamma'),
        'c': (float, 3.0, 'wave speed'),
        'A': (float, None, 'first integration constant'),
        'B': (float, None, 'second integration constant'),
        'm': (float, None, 'lower root of the wave'),
        'M': (float, None, 'upper root of the wave'),
        'cluster_tol': (float, NumUtils.CLUSTER_TOL, 'relative root clustering tolerance'),
        'tail_tol': (float, NumUtils.TAIL_TOL, 'distance to the limit where tails stop'),
        'residual_tol': (float, NumUtils.RESIDUAL_TOL, 'pass threshold of the checks'),
        'n_samples': (_integer, NumUtils.SAMPLES, 'samples per half-branch'),
        'plateau_lengths': (_floats(), None, 'plateau lengths of a stumpon'),
        'axes': (_text, 'mM', 'swept plane, mM or AB'),
        'range1': (_floats(3), [-1.0, 4.0, 11.0], 'low, high, count of the first axis'),
        'range2': (_floats(3), [-1.0, 4.0, 11.0], 'low, high, count of the second axis'),
        'workers': (_integer, 1, 'worker processes of a sweep'),
        'n_modes': (_integer, 256, 'grid points of the evolution'),
        'dt': (float, 0.005, 'largest evolution time step'),
        'T': (float, 1.0, 'final evolution time'),
        'stride': (_integer, 0, 'steps between two snapshots, 0 to disable'),
        'n_tests': (_integer, 20, 'number of weak test functions'),
        'seed': (_integer, 0, 'seed of the test function placement'),
        'output': (_text, None, 'path of the CSV output, stdout when missing'),
        'snapshots': (_text, None, 'path of the evolution snapshot CSV')
    }

    def __init__(self, values: Optional[Dict[str, Any]] = None):
        self.__values = {key: field[1] for key, field in self.FIELDS.items()}
        self.update(values or {})

    def update(self, values: Dict[str, Any]) -> None:
        for key, value in values.items():
            if key not in self.FIELDS:
                raise ConfigError(f"Unknown config key: {key}")
            if value is None:
                continue
            try:
                value = self.FIELDS[key][0](value)
            except (TypeError, ValueError) as err:
                raise ConfigError(f"Invalid value of {key}:", err)
            if isinstance(value, float) and not math.isfinite(value):
                raise ConfigError(f"Value of {key} must be finite")
            self.__values[key] = value

    @classmethod
    def from_file(cls, path: str) -> Dict[str, Any]:
        try:
            with open(path, 'r', encoding='utf-8') as handle:
                values = json.load(handle)
        except (OSError, ValueError) as err:
            raise ConfigError(f"Can't read config file {path}:", err)
        if not isinstance(values, dict):
            raise ConfigError(f"Config file {path} must hold a JSON object")

        return values

    @classmethod
    def resolve(cls, path: Optional[str], flags: Dict[str, Any]) -> 'RunConfig':
        """Builds the config of a run from a config file and command line flags."""

        config = cls()
        path = path or os.environ.get(CONFIG_ENV)
        if path:
            log.debug('Reading config file %s', path)
            config.update(cls.from_file(path))
        config.update(flags)

        return config

    def __getattr__(self, name: str) -> Any:
        values = self.__dict__.get('_RunConfig__values', {})
        if name in values:
            return values[name]
        raise AttributeError(name)

    def to_json(self) -> dict:
        return dict(self.__values)

    @property
    def params(self) -> ModelParams:
        return ModelParams(self.alpha, self.c0, self.gamma)

    def problem(self) -> TravelingWaveProblem:
        """Problem given either by (A, B) or by the roots (m, M).

        Raises:
            ConfigError: Raises unless exactly one of the pairs is complete.
        """

        constants = [self.A is not None, self.B is not None]
        roots = [self.m is not None, self.M is not None]
        if any(constants) and any(roots):
            raise ConfigError('Give either (A, B) or (m, M), not both')
        if all(constants):
            return make_problem(self.params, self.c, self.A, self.B)
        if all(roots):
            try:
                A, B, _ = constants_from_roots(self.params, self.c, self.m, self.M)
            except ValueError as err:
                raise ConfigError(err)
            return make_problem(self.params, self.c, A, B)
        raise ConfigError('The problem needs both A and B, or both m and M')

    def header(self, command: str) -> List[str]:
        """Lines echoing the resolved config, defaults included."""

        lines = [f"# dgh_waves={__version__}", f"# command={command}"]
        lines.extend(f"# {key}={_format(value)}" for key, value in self.__values.items())
        return lines

    def __repr__(self) -> str:
        return json.dumps(self.to_json())


def _format(value: Any) -> str:
    if value is None:
        return 'none'
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return NumUtils.format_float(value)
    if isinstance(value, (list, tuple)):
        return ' '.join(_format(item) for item in value)
    return str(value)


def _write_lines(lines: List[str], stream: Optional[TextIO]) -> None:
    stream = stream or sys.stdout
    for line in lines:
        stream.write(line + '\n')


def _write_csv(path: Optional[str], header: List[str], columns: List[str], rows,
               stdout: Optional[TextIO]) -> None:
    def dump(stream):
        _write_lines(header, stream)
        writer = csv.writer(stream, lineterminator='\n')
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_format(item) for item in row])

    if path is None:
        dump(stdout or sys.stdout)
        return
    with open(path, 'w', encoding='utf-8', newline='\n') as handle:
        dump(handle)
    log.debug('Wrote %s', path)


def _class_report(problem: TravelingWaveProblem, wave_class: WaveClass) -> List[str]:
    try:
        a_star = _format(stumpon_constant(problem.params, problem.c))
    except ModuleBaseException:
        a_star = 'none'
    m, M, z0 = wave_class.roots

    return [
        f"kind={wave_class.kind}",
        f"theorem_case={wave_class.theorem_case}",
        f"m={_format(m)}",
        f"M={_format(M)}",
        f"z0={_format(z0)}",
        f"c_tilde={_format(wave_class.pole)}",
        f"A={_format(problem.A)}",
        f"B={_format(problem.B)}",
        f"A_star={a_star}"
    ]


def _report_lines(report) -> List[str]:
    return [f"{key}={_format(value)}" for key, value in report.to_json().items()]


def _profile_rows(profile: WaveProfile):
    ids = profile.segment_ids
    for z, phi, index in zip(profile.z, profile.phi, ids):
        yield float(z), float(phi), int(index), profile.segments[index].kind


def _profile_header(config: RunConfig, command: str, profile: WaveProfile) -> List[str]:
    lines = config.header(command)
    lines.append(f"# kind={profile.wave_class.kind}")
    lines.append(f"# theorem_case={profile.wave_class.theorem_case}")
    lines.append(f"# periodic={_format(profile.period)}")
    return lines


def _synthesize(config: RunConfig, problem: TravelingWaveProblem,
                wave_class: WaveClass) -> Optional[WaveProfile]:
    if config.plateau_lengths is not None:
        return synth_stumpon(problem, config.plateau_lengths, config.n_samples,
                             config.tail_tol, config.cluster_tol)
    if not wave_class.kind.is_bounded:
        return None
    return synthesize(problem, wave_class, config.n_samples, config.tail_tol, config.cluster_tol)


def cmd_classify(config: RunConfig, stdout: Optional[TextIO] = None) -> int:
    """Prints the classification of the configured problem.

    Returns:
        int: 0 for a bounded wave, 2 when there is none.
    """

    problem = config.problem()
    wave_class = classify(problem, config.cluster_tol)
    _write_lines(config.header('classify') + _class_report(problem, wave_class), stdout)

    return EXIT_PASS if wave_class.kind.is_bounded else EXIT_NO_WAVE


def cmd_synth(config: RunConfig, stdout: Optional[TextIO] = None) -> int:
    """Writes the profile CSV and prints its residual report.

    Returns:
        int: 0 if the residual checks pass, 2 without a bounded wave, 3 otherwise.
    """

    problem = config.problem()
    wave_class = classify(problem, config.cluster_tol)
    profile = _synthesize(config, problem, wave_class)
    if profile is None:
        _write_lines(config.header('synth') + _class_report(problem, wave_class), stdout)
        return EXIT_NO_WAVE

    report = weak_residual(profile, None, config.n_tests, config.seed, config.residual_tol)
    _write_csv(config.output, _profile_header(config, 'synth', profile),
               ['z', 'phi', 'segment_id', 'segment_kind'], _profile_rows(profile), stdout)
    if config.output is not None:
        _write_lines(config.header('synth'), stdout)
    _write_lines(_report_lines(report), stdout)

    return EXIT_PASS if report.passed else EXIT_FAILED


def cmd_sweep(config: RunConfig, stdout: Optional[TextIO] = None) -> int:
    """Writes the phase diagram CSV of the configured plane."""

    grid_spec = []
    for low, high, count in (config.range1, config.range2):
        if not float(count).is_integer():
            raise ConfigError(f"Grid counts must be integers, got {count!r}")
        grid_spec.append((low, high, int(count)))
    try:
        diagram = sweep(config.params, config.c, config.axes, grid_spec, config.workers,
                        config.cluster_tol)
    except ValueError as err:
        raise ConfigError(err)

    rows = ((a1, a2, str(cell.kind), cell.theorem_case) for a1, a2, cell in diagram.rows())
    _write_csv(config.output, config.header('sweep'),
               ['axis1', 'axis2', 'kind', 'theorem_case'], rows, stdout)

    return EXIT_PASS


def cmd_verify(config: RunConfig, stdout: Optional[TextIO] = None) -> int:
    """Synthesizes the configured wave and prints every applicable check."""

    problem = config.problem()
    wave_class = classify(problem, config.cluster_tol)
    lines = config.header('verify') + _class_report(problem, wave_class)
    profile = _synthesize(config, problem, wave_class)
    if profile is None:
        _write_lines(lines, stdout)
        return EXIT_NO_WAVE

    report = verify_profile(profile, config.n_tests, config.seed, config.residual_tol)
    _write_lines(lines + _report_lines(report), stdout)

    return EXIT_PASS if report.passed else EXIT_FAILED


def cmd_evolve(config: RunConfig, stdout: Optional[TextIO] = None) -> int:
    """Evolves a smooth wave and compares the result with the shifted profile.

    Returns:
        int: 0 if the shape error is within residual_tol, 3 if not,
        4 for non-smooth waves, 5 on blow-up or a rejected time step.
    """

    problem = config.problem()
    wave_class = classify(problem, config.cluster_tol)
    lines = config.header('evolve') + _class_report(problem, wave_class)
    if not wave_class.kind.is_bounded:
        _write_lines(lines, stdout)
        return EXIT_NO_WAVE
    if not wave_class.kind.is_smooth:
        _write_lines(lines + ['error=evolution restricted to smooth classes'], stdout)
        return EXIT_UNSUPPORTED

    profile = synthesize(problem, wave_class, config.n_samples, config.tail_tol,
                         config.cluster_tol)
    length = profile.period if profile.period is not None else profile.z[-1] - profile.z[0]
    grid = SpectralGrid(config.n_modes, length)
    snapshots = []

    def keep(state):
        snapshots.extend((state.t, x, u) for x, u in zip(grid.nodes, state.u))

    try:
        state = evolve(sample_profile(profile, grid), problem.params, config.T, config.dt, grid,
                       config.stride, keep if config.snapshots else None)
    except (Blowup, CFLViolation) as err:
        _write_lines(lines + [f"error={err}"], stdout)
        return EXIT_BLOWUP

    if config.snapshots:
        _write_csv(config.snapshots, config.header('evolve'), ['t', 'x', 'u'],
                   ((float(t), float(x), float(u)) for t, x, u in snapshots), stdout)

    error, shift = fit_shift(state, profile, problem.c, length)
    speed = problem.c
    if config.T > 0:
        lag = math.remainder(shift - problem.c * config.T, length)
        speed = problem.c + lag / config.T
    lines.extend([f"shape_error={_format(error)}", f"speed={_format(speed)}",
                  f"pass={_format(error <= config.residual_tol)}"])
    _write_lines(lines, stdout)

    return EXIT_PASS if error <= config.residual_tol else EXIT_FAILED


COMMANDS = {
    'classify': cmd_classify,
    'synth': cmd_synth,
    'sweep': cmd_sweep,
    'verify': cmd_verify,
    'evolve': cmd_evolve
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog='dgh', allow_abbrev=False,
                     description='Travelling waves of the Dullin-Gottwald-Holm equation.')
    parser.add_argument('--version', action='version', version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    for name, func in COMMANDS.items():
        sub = commands.add_parser(name, help=func.__doc__.splitlines()[0], allow_abbrev=False)
        sub.add_argument('--config', default=None, help='JSON config file')
        sub.add_argument('--debug', action='store_true', help='log to stderr')
        for key, (_, default, text) in RunConfig.FIELDS.items():
            nargs = None
            if key in ('range1', 'range2'):
                nargs = 3
            elif key == 'plateau_lengths':
                nargs = '+'
            sub.add_argument(f"--{key}", dest=key, default=None, nargs=nargs, metavar='VALUE',
                             help=f"{text} (default: {_format(default)})")

    return parser


def main(argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None) -> int:
    """Runs the `dgh` command line and returns its exit code."""

    stdout = stdout or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except ConfigError as err:
        sys.stderr.write(f"dgh: {err}\n")
        return EXIT_USAGE

    if args.debug:
        logging.basicConfig(level=logging.DEBUG,
                            format='%(asctime)s %(name)s %(levelname)s: %(message)s')

    flags = {key: getattr(args, key) for key in RunConfig.FIELDS}
    try:
        config = RunConfig.resolve(args.config, flags)
        return COMMANDS[args.command](config, stdout)
    except (ConfigError, BurgersCaseExcluded, ValueError, TypeError) as err:
        sys.stderr.write(f"dgh: {err}\n")
        return EXIT_USAGE
    except StumponConstantViolated as err:
        sys.stderr.write(f"dgh: {err}\n")
        return EXIT_FAILED
    except ModuleBaseException as err:
        log.error('%s failed: %s', args.command, err)
        sys.stderr.write(f"dgh: {err}\n")
        return EXIT_FAILED
