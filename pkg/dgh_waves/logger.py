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

import numpy as np


class EmptyHandler(logging.Handler):
    """Empty logging handler."""

    def emit(self, *args, **kwargs):
        pass


class ArrayFilter(logging.Filter):
    """Filter to shorten numpy arrays in log records to a one-line summary"""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)

    def __summary(self, value):
        if value.size == 0:
            return f"array(shape={value.shape})"
        finite = value[np.isfinite(value)] if value.dtype.kind in 'fc' else value
        if finite.size == 0:
            return f"array(shape={value.shape}, all non-finite)"
        return "array(shape={}, min={:.6g}, max={:.6g})".format(
            value.shape, float(np.min(np.real(finite))), float(np.max(np.real(finite)))
        )

    def filter(self, record):
        if isinstance(record.args, tuple):
            record.args = tuple(self.__summary(arg)
                                if isinstance(arg, np.ndarray) else arg for arg in record.args)

        return 1
