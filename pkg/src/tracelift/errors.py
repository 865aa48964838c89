#  Copyright (c) 2024. Davi Pereira dos Santos
#  This file is part of the tracelift project.
#  Please respect the license - more about this in the section (*) below.
#
#  tracelift is free software: you can redistribute it and/or modify
#  it under the terms of the GNU General Public License as published by
#  the Free Software Foundation, either version 3 of the License, or
#  (at your option) any later version.
#
#  tracelift is distributed in the hope that it will be useful,
#  but WITHOUT ANY WARRANTY; without even the implied warranty of
#  MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#  GNU General Public License for more details.
#
#  You should have received a copy of the GNU General Public License
#  along with tracelift.  If not, see <http://www.gnu.org/licenses/>.
#
#  (*) Removing authorship by any means, e.g. by distribution of derived
#  works or verbatim, obfuscated, compiled or rewritten versions of any
#  part of this work is illegal and it is unethical regarding the effort and
#  time spent here.
#

class TraceliftError(Exception):
    """Base class for every error raised by this library."""


class DomainError(TraceliftError):
    """
    Invalid mathematical input

    >>> raise DomainError("Square discriminant: 9")
    Traceback (most recent call last):
    ...
    tracelift.errors.DomainError: Square discriminant: 9
    """


class TruncationError(TraceliftError):
    """
    A series cannot meet its tolerance at the configured order

    >>> e = TruncationError("J_1 at y=0.87", required_order=80)
    >>> e.required_order
    80
    """

    def __init__(self, msg, required_order: int | None = None):
        super().__init__(msg)
        self.required_order = required_order


class ConvergenceError(TraceliftError):
    """A quadrature or a series tail failed; `achieved` is the error actually reached."""

    def __init__(self, msg, achieved=None):
        super().__init__(msg)
        self.achieved = achieved


class CacheError(TraceliftError):
    pass


class ConfigError(TraceliftError):
    pass
