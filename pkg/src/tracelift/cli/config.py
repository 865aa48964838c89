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

import os
from dataclasses import dataclass, fields

from tracelift.arith import is_fundamental
from tracelift.errors import ConfigError
from tracelift.lift import SOURCES
from tracelift.traces import DEFAULT_DPS, DEFAULT_TOL

FORMATS = ("text", "json", "csv")
ENVIRONMENT = {"cache_path": "TRACELIFT_CACHE", "threads": "TRACELIFT_THREADS", "dps": "TRACELIFT_DPS"}


@dataclass(frozen=True)
class RunConfig:
    """
    Every tunable of a run; precedence is flag > environment variable > default

    >>> RunConfig.from_env({"TRACELIFT_THREADS": "4"}, delta=8)
    RunConfig(delta=8, tol=1e-09, trunc=64, cache_path=None, format='text', threads=4, dps=30, order=64, source='twisted')
    >>> RunConfig.from_env({"TRACELIFT_THREADS": "4"}, threads=2).threads
    2
    >>> RunConfig.from_env({"TRACELIFT_DPS": "many"})
    Traceback (most recent call last):
    ...
    tracelift.errors.ConfigError: TRACELIFT_DPS='many' is not an integer.
    """

    delta: int = 5
    tol: float = DEFAULT_TOL
    trunc: int = 64
    cache_path: str | None = None
    format: str = "text"
    threads: int = 1
    dps: int = DEFAULT_DPS
    order: int = 64
    source: str = "twisted"

    @classmethod
    def from_env(cls, environ=None, **flags) -> "RunConfig":
        """Defaults, overridden by the environment, overridden by the flags that are not None"""
        environ = os.environ if environ is None else environ
        values = {}
        for name, var in ENVIRONMENT.items():
            if (text := environ.get(var)) is None:
                continue
            if name == "cache_path":
                values[name] = text
                continue
            try:
                values[name] = int(text)
            except ValueError:
                raise ConfigError(f"{var}={text!r} is not an integer.")
        names = {f.name for f in fields(cls)}
        values.update({k: v for k, v in flags.items() if k in names and v is not None})
        return cls(**values)

    def validate(self, lift: bool = False) -> "RunConfig":
        """
        >>> RunConfig(tol=1.0).validate()
        Traceback (most recent call last):
        ...
        tracelift.errors.ConfigError: Tolerance 1.0 is outside [1e-12, 1e-2].
        >>> RunConfig(delta=4).validate(lift=True)
        Traceback (most recent call last):
        ...
        tracelift.errors.ConfigError: Δ=4 must be a fundamental discriminant > 1.
        Hint: try 5, 8, 12 or 13.
        """
        if not 1e-12 <= self.tol <= 1e-2:
            raise ConfigError(f"Tolerance {self.tol} is outside [1e-12, 1e-2].")
        if not 4 <= self.trunc <= 512:
            raise ConfigError(f"Truncation order {self.trunc} is outside [4, 512].")
        if self.threads < 1:
            raise ConfigError(f"Thread count must be at least 1, not {self.threads}.")
        if self.dps < 15:
            raise ConfigError(f"Working precision of {self.dps} digits is below double precision.\nHint: use --dps 15 or more.")
        if self.format not in FORMATS:
            raise ConfigError(f"Unknown output format {self.format!r}.\nHint: use one of {', '.join(FORMATS)}.")
        if self.source not in SOURCES:
            raise ConfigError(f"Unknown coefficient source {self.source!r}.\nHint: use one of {', '.join(SOURCES)}.")
        if lift and (self.delta <= 1 or not is_fundamental(self.delta)):
            raise ConfigError(f"Δ={self.delta} must be a fundamental discriminant > 1.\nHint: try 5, 8, 12 or 13.")
        return self
