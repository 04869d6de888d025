"""Command-line front end.

Subcommands: h (invariant query), curve (graph-curve CSV export),
regions (invariant heat map as CSV or SVG), sigma (signature of a user
Seifert system), verify (identity sweeps).  Angles are rational multiples
of pi by default ("1/2" means pi/2); pass --radians for decimal radians.

Exit codes: 0 success, 1 verification failure, 2 undefined invariant
(angles on the Alexander root locus), 3 zero linking number, 64 usage
error, 65 data-format error.  Output is byte-deterministic for fixed
flags; floats print with 17 significant digits.
"""

from __future__ import annotations

import argparse
import cmath
import json
import math
import re
import sys
import warnings
from fractions import Fraction

from . import pillowcase, signature, verify
from .errors import (
    BadSystemError,
    NotDefinedError,
    NullityWarning,
    ZeroLinkingError,
)
from .signature import sigma_torus_closed
from .torus_rep import AnglePair, RationalAngle, h_invariant, is_defined

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_UNDEFINED = 2
EXIT_ZERO_LINKING = 3
EXIT_USAGE = 64
EXIT_DATA = 65

UNDEFINED_MESSAGE = "undefined: alpha on Alexander root locus"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _parse_angle(parser: _Parser, text: str, radians: bool):
    if radians:
        if "/" in text:
            parser.error("rational angles cannot be mixed with --radians")
        try:
            value = float(text)
        except ValueError:
            parser.error(f"bad radian angle {text!r}")
        if not 0.0 < value < math.pi:
            parser.error(f"angle {text} is outside (0, pi)")
        return value
    if "/" not in text:
        parser.error(
            f"angle {text!r} is not of the form p/q (use --radians for decimals)"
        )
    num, _, den = text.partition("/")
    try:
        frac = Fraction(int(num), int(den))
    except (ValueError, ZeroDivisionError):
        parser.error(f"bad rational angle {text!r}")
    if not 0 < frac < 1:
        parser.error(f"angle {text} is outside (0, pi)")
    return RationalAngle.from_fraction(frac)


def _angle_pair(parser: _Parser, texts, radians: bool) -> AnglePair:
    a1 = _parse_angle(parser, texts[0], radians)
    a2 = _parse_angle(parser, texts[1], radians)
    return AnglePair(a1, a2)


def _write_output(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_h(parser: _Parser, args) -> int:
    alpha = _angle_pair(parser, args.alpha, args.radians)
    h = h_invariant(args.ell, alpha)
    s1 = sigma_torus_closed(args.ell, alpha)
    s2 = sigma_torus_closed(args.ell, alpha.flip_alpha2())
    print(f"h={h} sigma=({s1},{s2})")
    return EXIT_OK


def _cmd_curve(parser: _Parser, args) -> int:
    if args.samples < 1:
        parser.error("samples must be positive")
    alpha = _angle_pair(parser, args.alpha, args.radians)
    if not is_defined(args.ell, alpha):
        raise NotDefinedError(UNDEFINED_MESSAGE)
    curves = []
    footer = None
    if args.path in ("quat", "both"):
        curves.append(
            pillowcase.sample_curve(args.ell, alpha, args.samples, pillowcase.QUAT_PATH)
        )
    if args.path in ("cheb", "both"):
        curves.append(
            pillowcase.sample_curve(args.ell, alpha, args.samples, pillowcase.CHEB_PATH)
        )
    if args.path == "both":
        max_dtheta = max(
            abs(a.theta - b.theta)
            for a, b in zip(curves[0].points, curves[1].points)
        )
        footer = f"max_abs_dtheta={max_dtheta:.17g}"
    _write_output(pillowcase.curves_to_csv(curves, footer), args.out)
    return EXIT_OK


def _region_csv(grid: verify.RegionGrid) -> str:
    lines = [f"# ell={grid.ell} res={grid.resolution}"]
    lines.extend(",".join(str(v) for v in row) for row in grid.values)
    return "\n".join(lines) + "\n"


def _region_svg(grid: verify.RegionGrid) -> str:
    """Heat map by direct tag emission; root-locus lines drawn on top."""
    res = grid.resolution
    cell = 6
    size = (res - 1) * cell
    values = sorted(
        {v for row in grid.values for v in row if v != verify.SENTINEL}
    )
    palette = {}
    for v in values:
        if v == 0:
            palette[v] = "#e8e8e8"
        elif v > 0:
            shade = max(0, 215 - 40 * v)
            palette[v] = f"rgb({shade},{shade},255)"
        else:
            shade = max(0, 215 + 40 * v)
            palette[v] = f"rgb(255,{shade},{shade})"
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    for i, row in enumerate(grid.values):
        for j, v in enumerate(row):
            fill = "#000000" if v == verify.SENTINEL else palette[v]
            x = i * cell
            y = size - (j + 1) * cell
            parts.append(
                f'<rect x="{x}" y="{y}" width="{cell}" height="{cell}" fill="{fill}"/>'
            )
    # alpha1 + alpha2 = pi*m/L and alpha1 - alpha2 = pi*(m/L - 1) in cell units
    big_l = abs(grid.ell)
    for m in range(1, 2 * big_l):
        if m == big_l:
            continue
        c = res * m / big_l  # p + q = c
        x0, x1 = max(0.0, c - res), min(float(res), c)
        if x0 < x1:
            parts.append(
                f'<line x1="{(x0 - 1) * cell:.2f}" y1="{size - (c - x0 - 1) * cell:.2f}" '
                f'x2="{(x1 - 1) * cell:.2f}" y2="{size - (c - x1 - 1) * cell:.2f}" '
                'stroke="black" stroke-width="1"/>'
            )
        d = res * (m / big_l - 1.0)  # p - q = d
        x0, x1 = max(0.0, d), min(float(res), res + d)
        if x0 < x1:
            parts.append(
                f'<line x1="{(x0 - 1) * cell:.2f}" y1="{size - (x0 - d - 1) * cell:.2f}" '
                f'x2="{(x1 - 1) * cell:.2f}" y2="{size - (x1 - d - 1) * cell:.2f}" '
                'stroke="black" stroke-width="1"/>'
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _cmd_regions(parser: _Parser, args) -> int:
    grid = verify.region_grid(args.ell, args.res)
    text = _region_csv(grid) if args.format == "csv" else _region_svg(grid)
    _write_output(text, args.out)
    return EXIT_OK


def _cmd_sigma(parser: _Parser, args) -> int:
    try:
        with open(args.system, "r", encoding="utf-8") as fh:
            system = signature.seifert_from_json(fh.read())
    except OSError as exc:
        print(f"cannot read {args.system}: {exc}", file=sys.stderr)
        return EXIT_DATA
    if len(args.alpha) != system.mu:
        parser.error(
            f"system has {system.mu} color(s) but {len(args.alpha)} angle(s) were given"
        )
    omegas = []
    for text in args.alpha:
        a = _parse_angle(parser, text, args.radians)
        rad = a.radians if isinstance(a, RationalAngle) else a
        omegas.append(cmath.exp(2j * rad))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", NullityWarning)
        ine = signature.inertia(signature.build_H(system, omegas))
    print(f"signature={ine.signature} nullity={ine.n_zero}")
    if ine.n_zero > 0:
        print(
            "warning: nullity > 0, omega lies on or near the Alexander root locus",
            file=sys.stderr,
        )
    return EXIT_OK


def _parse_ell_range(parser: _Parser, text: str) -> list[int]:
    try:
        if ".." in text:
            lo_text, hi_text = text.split("..", 1)
            lo, hi = int(lo_text), int(hi_text)
        else:
            lo = hi = int(text)
    except ValueError:
        parser.error(f"bad ell range {text!r} (use e.g. 3 or -6..6)")
    if hi < lo:
        parser.error(f"empty ell range {text!r}")
    values = [ell for ell in range(lo, hi + 1) if ell != 0]
    if not values:
        raise ZeroLinkingError("ell range contains only 0")
    return values


def _cmd_verify(parser: _Parser, args) -> int:
    ells = _parse_ell_range(parser, args.ell)
    reports = [
        verify.sweep_main_identity(ell, args.res, verbose=args.verbose) for ell in ells
    ]
    payload = {
        "resolution": args.res,
        "reports": [r.to_json() for r in reports],
        "failed_total": sum(r.failed for r in reports),
    }
    _write_output(json.dumps(payload, indent=2) + "\n", args.out)
    return EXIT_OK if payload["failed_total"] == 0 else EXIT_VERIFY_FAIL


def _build_parser() -> _Parser:
    parser = _Parser(prog="linksig", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_angle_flags(p):
        p.add_argument(
            "--alpha",
            nargs=2,
            required=True,
            metavar="A",
            help='angles as rational multiples of pi ("p/q"), or radians with --radians',
        )
        p.add_argument("--radians", action="store_true", help="angles are decimal radians")

    p_h = sub.add_parser("h", help="invariant and signature values at one angle pair")
    p_h.add_argument("--ell", type=int, required=True)
    add_angle_flags(p_h)

    p_curve = sub.add_parser("curve", help="export the graph curve as CSV")
    p_curve.add_argument("--ell", type=int, required=True)
    add_angle_flags(p_curve)
    p_curve.add_argument("--samples", type=int, default=pillowcase.DEFAULT_SAMPLES)
    p_curve.add_argument("--path", choices=("quat", "cheb", "both"), default="both")
    p_curve.add_argument("--out", default=None)

    p_regions = sub.add_parser("regions", help="invariant heat map over the angle square")
    p_regions.add_argument("--ell", type=int, required=True)
    p_regions.add_argument("--res", type=int, default=100)
    p_regions.add_argument("--format", choices=("csv", "svg"), default="csv")
    p_regions.add_argument("--out", default=None)

    p_sigma = sub.add_parser("sigma", help="signature of a Seifert system from JSON")
    p_sigma.add_argument("--system", required=True, help="path to Seifert JSON")
    p_sigma.add_argument("--alpha", nargs="+", required=True, metavar="A")
    p_sigma.add_argument("--radians", action="store_true")

    p_verify = sub.add_parser("verify", help="run identity sweeps over ell ranges")
    p_verify.add_argument("--ell", required=True, help="single value or range a..b (0 skipped)")
    p_verify.add_argument("--res", type=int, default=120)
    p_verify.add_argument("--verbose", action="store_true", help="include per-point records")
    p_verify.add_argument("--out", default=None)

    return parser


_DISPATCH = {
    "h": _cmd_h,
    "curve": _cmd_curve,
    "regions": _cmd_regions,
    "sigma": _cmd_sigma,
    "verify": _cmd_verify,
}


_ELL_VALUE = re.compile(r"-?\d+(\.\.-?\d+)?$")


def _normalize_argv(argv: list[str]) -> list[str]:
    # argparse mistakes "--ell -6..6" for a missing value; glue such pairs
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if (
            tok == "--ell"
            and i + 1 < len(argv)
            and argv[i + 1].startswith("-")
            and _ELL_VALUE.match(argv[i + 1])
        ):
            out.append(f"--ell={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(_normalize_argv(sys.argv[1:] if argv is None else list(argv)))
    try:
        return _DISPATCH[args.command](parser, args)
    except NotDefinedError:
        print(UNDEFINED_MESSAGE, file=sys.stderr)
        return EXIT_UNDEFINED
    except ZeroLinkingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ZERO_LINKING
    except BadSystemError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
