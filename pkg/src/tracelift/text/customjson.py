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

import json
import re
from json import JSONEncoder

import mpmath

DIGITS = 18


def decimal(x, digits: int = DIGITS) -> str:
    """
    Decimal text of a real number at `digits` significant digits

    >>> decimal(mpmath.mpf(-248)), decimal(mpmath.pi, 6)
    ('-248.0', '3.14159')
    """
    return mpmath.nstr(mpmath.mpf(x), digits)


class CustomJSONEncoder(JSONEncoder):
    """
    Renders mpmath numbers, forms, series and identifiers

    >>> from tracelift.qforms import QuadForm
    >>> json.dumps({"q": QuadForm(1, 1, -1), "v": mpmath.mpf(1) / 4, "z": mpmath.mpc(1, -2)}, cls=CustomJSONEncoder)
    '{"q": {"a": 1, "b": 1, "c": -1, "disc": 5}, "v": "0.25", "z": {"re": "1.0", "im": "-2.0"}}'
    >>> stringfy({"check": "period", "residual": mpmath.mpf("0.125"), "pass": True})
    '{check: "period", residual: "0.125", pass: true}'
    """

    def default(self, obj):
        if isinstance(obj, mpmath.mpf):
            return decimal(obj)
        if isinstance(obj, mpmath.mpc):
            return {"re": decimal(obj.real), "im": decimal(obj.imag)}
        if hasattr(obj, "asdict"):
            return obj.asdict()
        if type(obj).__name__ == "Hosh":
            return obj.id
        return JSONEncoder.default(self, obj)


def stringfy(obj):
    """Compact JSON without quotes around single-word strings, for terminal output"""
    res = json.dumps(obj, ensure_ascii=False, cls=CustomJSONEncoder)
    return re.sub(r'(?<!: )"(\S*?)"', "\\1", res)
