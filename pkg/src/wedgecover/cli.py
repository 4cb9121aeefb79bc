"""Command-line front end: one JSON document in, one canonical JSON document out.

    wedgecover [--tol T] [--steps N] [--e0 JSON] COMMAND [INPUT]

INPUT is a file path or ``-`` (default) for stdin. Errors are written to
stderr as ``{"error": code, "detail": ...}`` with exit status 2 (parse),
3 (precondition) or 4 (numeric failure).
"""
import argparse
import json
import sys

import numpy as np

from . import cover, jsonio
from .errors import NUMERIC_CODES, CoverError
from .lorentz import boost_direction_rapidity, polar_decompose, reflect_at_plane, reflecting_plane, rotation_axis_angle
from .minkowski import E0
from .sl2c import lift
from .spin import spin_statistics_sign

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_NUMERIC = 0, 2, 3, 4
DEMO_STEPS = 1024


def _two(payload, keys):
    """Accept either an object with ``keys`` or a two-element list."""
    if isinstance(payload, list) and len(payload) == 2:
        return payload
    return [jsonio._require(payload, k) for k in keys]


def cmd_polar(payload, opts):
    mu = jsonio.lorentz_map(payload)
    rho, beta, e0 = polar_decompose(mu, opts.e0)
    axis, angle = rotation_axis_angle(rho, e0)
    direction, rapidity = boost_direction_rapidity(beta, e0)
    return {"rho": jsonio.encode_lorentz(rho), "beta": jsonio.encode_lorentz(beta), "e0": jsonio.encode_vector(e0),
            "axis": jsonio.encode_vector(axis), "angle": angle,
            "direction": jsonio.encode_vector(direction), "rapidity": rapidity}


def cmd_project(payload, opts):
    return jsonio.encode_cover(cover.project(jsonio.pair_element(payload), opts.steps))


def cmd_equiv(payload, opts):
    m, n = (jsonio.pair_element(p) for p in _two(payload, ("m", "n")))
    return {"equivalent": cover.equivalent(m, n, opts.steps, opts.tol)}


def cmd_compose(payload, opts):
    g, h = (jsonio.cover_element(p) for p in _two(payload, ("g", "h")))
    return jsonio.encode_cover(cover.product(g, h))


def cmd_reflect_plane(payload, opts):
    a, b = (jsonio.spacelike_plane(p) for p in _two(payload, ("A", "B")))
    c = reflecting_plane(a, b)
    return {"plane": jsonio.encode_plane(c), "reflection": jsonio.encode_lorentz(reflect_at_plane(c))}


def cmd_lift(payload, opts):
    lf = lift(jsonio.lorentz_map(payload), opts.e0)
    return {"plus": jsonio.encode_complex_matrix(lf.plus), "minus": jsonio.encode_complex_matrix(lf.minus)}


def cmd_spin_sign(payload, opts):
    return {"sign": spin_statistics_sign(jsonio.spin_rep(payload))}


def cmd_demo_sheet(payload, opts):
    angle = payload if not isinstance(payload, dict) else jsonio._require(payload, "total_angle")
    if isinstance(angle, bool) or not isinstance(angle, (int, float)) or not np.isfinite(angle):
        raise jsonio.ParseError("total_angle must be a finite number")
    steps = opts.steps if opts.steps_given else DEMO_STEPS
    rep = cover.demo_sheet(float(angle), steps)
    return {"total_angle": float(angle), "steps": steps, "rep": jsonio.encode_complex_matrix(rep)}


COMMANDS = {
    "polar": cmd_polar,
    "project": cmd_project,
    "equiv": cmd_equiv,
    "compose": cmd_compose,
    "reflect-plane": cmd_reflect_plane,
    "lift": cmd_lift,
    "spin-sign": cmd_spin_sign,
    "demo-sheet": cmd_demo_sheet,
}


def build_parser():
    parser = argparse.ArgumentParser(prog="wedgecover", description=__doc__.splitlines()[0])
    parser.add_argument("--tol", type=float, default=cover.COVER_EQ_TOL, help="equality tolerance in the cover")
    parser.add_argument("--steps", type=int, default=None, help="initial path-lifting steps")
    parser.add_argument("--e0", default=None, help="JSON four-vector defining the rest frame")
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("input", nargs="?", default="-", help="JSON file, or - for stdin")
    return parser


def _fail(code, detail, status):
    sys.stderr.write(jsonio.canonical_dumps({"error": code, "detail": detail}) + "\n")
    return status


def main(argv=None):
    parser = build_parser()
    try:
        opts = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        text = sys.stdin.read() if opts.input == "-" else open(opts.input).read()
        payload = json.loads(text)
        opts.e0 = E0 if opts.e0 is None else jsonio.four_vector(json.loads(opts.e0))
        opts.steps_given = opts.steps is not None
        if opts.steps is None:
            opts.steps = cover.DEFAULT_STEPS
        if opts.steps < cover.MIN_STEPS:
            raise jsonio.ParseError(f"--steps must be at least {cover.MIN_STEPS}")
        result = COMMANDS[opts.command](payload, opts)
    except OSError as exc:
        return _fail("parse-error", str(exc), EXIT_PARSE)
    except json.JSONDecodeError as exc:
        return _fail("parse-error", str(exc), EXIT_PARSE)
    except jsonio.ParseError as exc:
        return _fail("parse-error", exc.detail, EXIT_PARSE)
    except CoverError as exc:
        status = EXIT_NUMERIC if exc.code in NUMERIC_CODES else EXIT_PRECONDITION
        return _fail(exc.code, exc.detail, status)
    except (ValueError, TypeError) as exc:
        return _fail("parse-error", str(exc), EXIT_PARSE)
    except (np.linalg.LinAlgError, FloatingPointError, ArithmeticError) as exc:
        return _fail("numeric-failure", str(exc), EXIT_NUMERIC)
    sys.stdout.write(jsonio.canonical_dumps(result) + "\n")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
