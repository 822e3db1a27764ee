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

from typing import Optional


class ModuleBaseException(Exception):
    pass


class ProcessingError(ModuleBaseException):
    def __init__(self, *args):
        super().__init__(" ".join(map(str, args)))
        return


class BurgersCaseExcluded(ModuleBaseException):
    """Exception class when both alpha and gamma vanish (inviscid Burgers equation)."""

    def __init__(self, message: str = "alpha = gamma = 0 (Burgers case) is not supported"):
        super().__init__(message)


class PoleEvaluation(ProcessingError):
    """Exception class when the potential is evaluated at a non-removable pole."""


class NoPole(ProcessingError):
    """Exception class when a pole-dependent quantity is requested for alpha = 0."""


class InvalidInterval(ProcessingError):
    """Exception class when the potential is not positive inside a requested interval."""


class WrongClass(ProcessingError):
    """Exception class when a wave class doesn't fit the requested construction."""


class IncompatibleSegments(ProcessingError):
    """Exception class when composite wave segments can't be joined."""


class StumponConstantViolated(ProcessingError):
    """Exception class when plateaus are requested with A different from the stumpon constant.

    Args:
        A (float): Integration constant of the problem.
        expected (float): Stumpon constant for the problem parameters.
    """

    def __init__(self, A: float, expected: float):
        super().__init__(
            f"plateaus phi = c~ need A = {expected!r}, got A = {A!r}"
        )
        self.A = A
        self.expected = expected


class CFLViolation(ProcessingError):
    """Exception class when the time step is above the stability guard."""


class Blowup(ModuleBaseException):
    """Exception class when an evolution produces non-finite values.

    Args:
        t (float): Time of the first non-finite state.
        message (str, optional): Additional message. Defaults to `None`.
    """

    def __init__(self, t: float, message: Optional[str] = None):
        text = f"non-finite values at t={t!r}"
        if message:
            text = f"{text}: {message}"
        super().__init__(text)
        self.t = t


class ConfigError(ProcessingError):
    """Exception class for malformed run configuration."""
