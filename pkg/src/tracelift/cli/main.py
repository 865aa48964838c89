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

"""
Command line front end

    tracelift forms --disc 5 12 --period
    tracelift forms --disc 5 --z=-0.4+0.6i
    tracelift faber --m 2 --order 5 --format json
    tracelift trace --disc -3 -4 ... -40
    tracelift trace --kind cycle --F J2 --disc 5 8 12
    tracelift integral --delta 5 --z i
    tracelift lift --delta 5 --grid -0.5 0.5 0.5 2 21 31 --out phi.csv
    tracelift verify --suite all --delta 5 --cache traces.json

Exit codes: 0 success, 1 usage, configuration or computation error, 2 failed verification.
"""
import argparse
import json
import logging
import re
import sys

import mpmath
from lange.tricks import list2progression
from pandas import DataFrame, json_normalize

from tracelift.arith import Discriminant
from tracelift.cli.config import FORMATS, RunConfig
from tracelift.errors import ConfigError, DomainError, TraceliftError
from tracelift.lift import KINDS, SOURCES, SUITES, HarmonicCoefficients, eval_F, eval_phi, eval_phi_prime, eval_product, grid, run_suites
from tracelift.modfun import faber
from tracelift.qforms import class_representatives, forms_containing, forms_S_period
from tracelift.specfun import class_number_check
from tracelift.text import CustomJSONEncoder, stringfy
from tracelift.traces import SCHEMA, TraceKey, TraceTable, example_constants

log = logging.getLogger(__name__)

LEVELS = [logging.WARNING, logging.INFO, logging.DEBUG]


class Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(f"{message}\nHint: see '{self.prog} --help'.")


def parse_point(text: str):
    """
    "a+bi" with decimal components

    >>> parse_point("0.3+0.9i"), parse_point("i"), parse_point("-0.5 - 2i")
    (mpc(real='0.29999999999999999', imag='0.90000000000000002'), mpc(real='0.0', imag='1.0'), mpc(real='-0.5', imag='-2.0'))
    >>> parse_point("1+x")
    Traceback (most recent call last):
    ...
    tracelift.errors.ConfigError: Cannot read '1+x' as a complex number.
    Hint: write it as a+bi, e.g. 0.3+0.9i.
    """
    s = text.strip().replace(" ", "").lower().replace("i", "j")
    s = re.sub(r"(?<![\d.])j", "1j", s)
    try:
        return mpmath.mpc(mpmath.mpmathify(s))
    except (ValueError, TypeError, AttributeError):
        raise ConfigError(f"Cannot read {text!r} as a complex number.\nHint: write it as a+bi, e.g. 0.3+0.9i.")


def parse_discs(tokens) -> list[int]:
    """
    Discriminants given literally or as a progression with "...", keeping those ≡ 0, 1 (mod 4)

    >>> parse_discs(["5", "8", "...", "32"])
    [5, 8, 17, 20, 29, 32]
    >>> parse_discs(["-3", "-4"])
    [-3, -4]
    """
    values = []
    for t in tokens:
        if t == "...":
            values.append(Ellipsis)
            continue
        try:
            values.append(int(t))
        except ValueError:
            raise ConfigError(f"Cannot read {t!r} as a discriminant.\nHint: use integers, optionally with '...' such as 5 8 ... 32.")
    discs = list(list2progression(values)) if Ellipsis in values else values
    kept = []
    for d in map(int, discs):
        try:
            Discriminant(d)
            kept.append(d)
        except DomainError:
            log.warning(f"Skipping {d}: not ≡ 0 or 1 (mod 4)")
    return kept


def build_parser() -> Parser:
    from tracelift import __version__

    # SUPPRESS keeps subcommand defaults from overwriting flags given before the subcommand
    common = Parser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("-v", "--verbose", action="count", help="INFO with -v, DEBUG with -vv.")
    common.add_argument("--cache", dest="cache_path", help="Trace cache file (default: $TRACELIFT_CACHE).")
    common.add_argument("--threads", type=int, help="Worker processes (default: $TRACELIFT_THREADS or 1).")
    common.add_argument("--dps", type=int, help="Working precision floor in digits (default: $TRACELIFT_DPS or 30).")
    common.add_argument("--format", choices=FORMATS, help="Output format (default: text).")
    common.add_argument("--tol", type=float, help="Absolute tolerance (default: 1e-9).")
    common.add_argument("--trunc", type=int, help="Maximal series order (default: 64).")

    parser = Parser(prog="tracelift", description=__doc__.split("\n\n")[0].strip(), parents=[common])
    parser.add_argument("--version", action="version", version=f"tracelift {__version__} (cache schema {SCHEMA})")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=Parser)

    p = sub.add_parser("forms", parents=[common], help="Class representatives of discriminants, one record per form.")
    p.add_argument("--disc", nargs="+", required=True)
    listing = p.add_mutually_exclusive_group()
    listing.add_argument("--period", action="store_true", help="Also list the forms with c < 0 < a.")
    listing.add_argument("--z", type=parse_point, help="List instead the forms whose semicircle contains this point.")

    p = sub.add_parser("trace", parents=[common], help="CM or cycle traces.")
    p.add_argument("--disc", nargs="+", required=True)
    p.add_argument("--kind", choices=["cm", "cycle"], help="Default: cm for D < 0, cycle for D > 0.")
    p.add_argument("--F", default="J", help="one, J or J<m> (default: J).")
    p.add_argument("--method", choices=["trapezoid", "quad"], default="trapezoid", help="Cycle quadrature.")

    p = sub.add_parser("faber", parents=[common], help="q-expansion of J_m.")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--order", type=int, default=8)
    p.add_argument("--method", choices=["newton", "elimination"], default="newton")

    for name, text in zip(KINDS, ["Φ_Δ(h, z).", "Φ′_Δ(h, z).", "F_Δ(z).", "Ψ_Δ(z)."]):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--delta", type=int)
        target = p.add_mutually_exclusive_group(required=True)
        target.add_argument("--z", type=parse_point, help="Point a+bi of the upper half plane.")
        target.add_argument("--grid", nargs=6, metavar=("XMIN", "XMAX", "YMIN", "YMAX", "NX", "NY"))
        p.add_argument("--out", help="CSV file for --grid (default: stdout).")
        if name in ("integral", "verify"):
            p.add_argument("--source", choices=SOURCES)

    p = sub.add_parser("verify", parents=[common], help="Numerical identities; exit 2 on failure.")
    p.add_argument("--delta", type=int)
    p.add_argument("--suite", nargs="+", choices=list(SUITES) + ["all"], default=["all"])
    p.add_argument("--source", choices=SOURCES)

    p = sub.add_parser("cache", parents=[common], help="Show or export the trace cache.")
    p.add_argument("action", choices=["show", "export"])
    p.add_argument("--out", help="CSV file for export (default: stdout).")

    p = sub.add_parser("constants", parents=[common], help="Example constants and class number data.")
    p.add_argument("--delta", type=int)
    return parser


def render(rows, fmt: str) -> str:
    """
    >>> print(render([{"disc": 5, "value": mpmath.mpf(1) / 4}], "json"))
    [
      {
        "disc": 5,
        "value": "0.25"
      }
    ]
    >>> print(render([{"disc": 5, "value": mpmath.mpc(1, 2)}], "csv"), end="")
    disc,value.re,value.im
    5,1.0,2.0
    """
    match fmt:
        case "json":
            return json.dumps(rows, cls=CustomJSONEncoder, indent=2, ensure_ascii=False)
        case "csv":
            return json_normalize(json.loads(json.dumps(rows, cls=CustomJSONEncoder))).to_csv(index=False)
    return "\n".join(stringfy(r) for r in rows)


def open_table(cfg: RunConfig, method: str = "trapezoid") -> TraceTable:
    kwargs = dict(tol=cfg.tol, dps=cfg.dps, method=method)
    return TraceTable.load(cfg.cache_path, **kwargs) if cfg.cache_path else TraceTable(**kwargs)


def cmd_forms(args, cfg, table):
    z = getattr(args, "z", None)
    rows = []
    for d in parse_discs(args.disc):
        if z is not None:
            rows.extend(q.asdict() | {"set": "containing"} for q in forms_containing(d, z))
            continue
        rows.extend(q.asdict() | {"set": "class"} for q in class_representatives(d))
        if getattr(args, "period", False) and d > 0:
            rows.extend(q.asdict() | {"set": "S-period"} for q in forms_S_period(d))
    return rows, 0


def cmd_trace(args, cfg, table):
    keys = [TraceKey(args.kind or ("cm" if d < 0 else "cycle"), args.F, d) for d in parse_discs(args.disc)]
    table.ensure(keys, cfg.threads)
    return [table.get(k).asdict() for k in keys], 0


def cmd_faber(args, cfg, table):
    series = faber(args.m, args.order, args.method)
    if cfg.format == "text":
        return [{"m": args.m, "series": repr(series)}], 0
    return [{"m": args.m, "coeffs": series.asdict()}], 0


def evaluate_point(command, cfg, table, z):
    match command:
        case "lift":
            return eval_phi(cfg.delta, HarmonicCoefficients.h(table), z, cfg.trunc, cfg.tol).asdict()
        case "deriv":
            return eval_phi_prime(cfg.delta, HarmonicCoefficients.h(table), z, cfg.trunc, cfg.tol).asdict()
        case "integral":
            return {"total": eval_F(cfg.delta, table, z, cfg.trunc, cfg.tol, cfg.source)}
        case "product":
            return {"total": eval_product(cfg.delta, table, z, cfg.trunc, cfg.tol)}


def cmd_evaluate(args, cfg, table):
    if args.z is not None:
        return [{"delta": cfg.delta, "z": args.z} | evaluate_point(args.command, cfg, table, args.z)], 0
    xmin, xmax, ymin, ymax, nx, ny = args.grid
    try:
        box, nx, ny = tuple(float(v) for v in (xmin, xmax, ymin, ymax)), int(nx), int(ny)
    except ValueError:
        raise ConfigError(f"Cannot read the grid {' '.join(args.grid)}.\nHint: --grid XMIN XMAX YMIN YMAX NX NY, e.g. -0.5 0.5 0.5 2 21 31.")
    df = grid(args.command, cfg.delta, box, nx, ny, table, cfg.trunc, cfg.tol, cfg.source, cfg.threads)
    if args.out:
        df.to_csv(args.out, index=False)
        log.info(f"Wrote {len(df)} grid points to {args.out}")
        return [{"out": args.out, "points": len(df)}], 0
    sys.stdout.write(df.to_csv(index=False))
    return [], 0


def cmd_verify(args, cfg, table):
    checks = run_suites(args.suite, cfg.delta, table, cfg.trunc, cfg.tol, cfg.source)
    return [c.asdict() for c in checks], 0 if all(c.passed for c in checks) else 2


def cmd_cache(args, cfg, table):
    if not cfg.cache_path:
        raise ConfigError("No cache to show.\nHint: pass --cache or set TRACELIFT_CACHE.")
    if args.action == "export":
        text = table.to_csv(args.out)
        if text is not None:
            sys.stdout.write(text)
        return [], 0
    return [{"path": cfg.cache_path, "schema": SCHEMA, "id": table.id, "entries": len(table)}] + [e.asdict() for e in table.entries], 0


def cmd_constants(args, cfg, table):
    h, eps, lhs, rhs = class_number_check(cfg.delta)
    return [example_constants() | {"delta": cfg.delta, "class_number": h, "epsilon": eps, "L1": lhs, "h·log ε/√Δ": rhs}], 0


COMMANDS = {
    "forms": (cmd_forms, False),
    "trace": (cmd_trace, False),
    "faber": (cmd_faber, False),
    "lift": (cmd_evaluate, True),
    "deriv": (cmd_evaluate, True),
    "integral": (cmd_evaluate, True),
    "product": (cmd_evaluate, True),
    "verify": (cmd_verify, True),
    "cache": (cmd_cache, False),
    "constants": (cmd_constants, True),
}


def main(argv=None) -> int:
    """
    Runs one command and returns its exit code

    >>> main(["trace", "--disc", "-3", "--format", "text"])  # doctest: +ELLIPSIS
    {kind: "cm", F: "J", disc: -3, value: "-248.0", abs_err: ..., provenance: "cm:tol=1e-09", id: "..."}
    0
    >>> main(["lift", "--delta", "4", "--z", "i"])
    1
    """
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code or 0
    except ConfigError as e:
        print(f"tracelift: {e}", file=sys.stderr)
        return 1
    logging.basicConfig(level=LEVELS[min(getattr(args, "verbose", 0), 2)], format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr, force=True)
    handler, lifts = COMMANDS[args.command]
    try:
        flags = {k: getattr(args, k, None) for k in ("delta", "tol", "trunc", "cache_path", "format", "threads", "dps", "source")}
        cfg = RunConfig.from_env(**flags).validate(lift=lifts)
        table = open_table(cfg, getattr(args, "method", "trapezoid") if args.command == "trace" else "trapezoid")
        before = table.id
        rows, code = handler(args, cfg, table)
        if cfg.cache_path and table.id != before:
            table.save(cfg.cache_path)
    except TraceliftError as e:
        print(f"tracelift: {e}", file=sys.stderr)
        return 1
    if rows:
        print(render(rows, cfg.format))
    return code


def run():  # pragma: no cover
    sys.exit(main())
