"""Command-line front end for the rational-unknot classifier.

One-shot queries only; every output is deterministic for a given argv.
Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from pathlib import Path

from . import render
from .cables import (
    CableError,
    CableSpec,
    LegendrianInvariants,
    divide_cable_tb,
    cable_rot,
    negative_cable_tb,
    positive_cable,
    ruling_cable_tb,
    self_linking,
    transnonsimple_family,
)
from .cfrac import FareyPath, expand, minimal_path
from .decorated import (
    DecoratedPath,
    DecorationError,
    Lens,
    LowerSolidTorus,
    Sign,
    ThickenedTorus,
    UpperSolidTorus,
    count_tight,
    is_tight,
)
from .farey import FareyError, Slope, dot, farey_sum, has_edge
from .unknots import (
    ClassificationError,
    Flavor,
    KnotId,
    LensSpace,
    TopologyFacts,
    admits_nonloose,
    classify,
)

FORMATS = ("table", "json", "csv", "svg")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # raise instead of exiting so run() controls streams and codes
    def error(self, message):
        raise _UsageError(message)

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let negative slopes like -5/2 parse as positional arguments
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$")


def _build_parser(default_format: str) -> _Parser:
    top = _Parser(prog="nonloose", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    cl = sub.add_parser("classify", help="mountain ranges of a rational unknot")
    cl.add_argument("p", type=int)
    cl.add_argument("q", type=int)
    cl.add_argument("--knot", default="K0", choices=["K0", "K1", "-K0", "-K1"])
    cl.add_argument("--kmax", type=int, default=5)
    cl.add_argument("--format", default=default_format, choices=FORMATS)
    cl.add_argument("--cache-dir", default=None)

    tc = sub.add_parser("tight-count", help="count tight contact structures")
    tsub = tc.add_subparsers(dest="space", required=True)
    t_lens = tsub.add_parser("lens")
    t_lens.add_argument("p", type=int)
    t_lens.add_argument("q", type=int)
    t_torus = tsub.add_parser("torus")
    t_torus.add_argument("s0")
    t_torus.add_argument("s1")
    t_solid = tsub.add_parser("solid")
    t_solid.add_argument("side", choices=["upper", "lower"])
    t_solid.add_argument("meridian")
    t_solid.add_argument("boundary")

    fa = sub.add_parser("farey", help="Farey-circle utilities")
    fsub = fa.add_subparsers(dest="op", required=True)
    for name in ("sum", "dot", "edge"):
        p = fsub.add_parser(name)
        p.add_argument("x")
        p.add_argument("y")
    f_path = fsub.add_parser("path")
    f_path.add_argument("start")
    f_path.add_argument("end")
    f_cf = fsub.add_parser("cf")
    f_cf.add_argument("slope")

    pa = sub.add_parser("path", help="decorated path queries")
    psub = pa.add_subparsers(dest="op", required=True)
    p_check = psub.add_parser("check")
    p_check.add_argument("--context", required=True, choices=["torus", "upper", "lower"])
    p_check.add_argument("--signs", required=True, help='e.g. "-8/3:- -5/2:+ -2:- -1"')

    ca = sub.add_parser("cable", help="cable invariant calculators")
    csub = ca.add_subparsers(dest="op", required=True)
    c_tb = csub.add_parser("tb")
    c_tb.add_argument("p", type=int)
    c_tb.add_argument("q", type=int)
    c_tb.add_argument("--dividing", default=None, help="dividing slope q'/p'")
    c_rot = csub.add_parser("rot")
    c_rot.add_argument("p", type=int)
    c_rot.add_argument("q", type=int)
    c_rot.add_argument("r_disk", type=int)
    c_rot.add_argument("r_seifert", type=int)
    c_pos = csub.add_parser("positive")
    c_pos.add_argument("p", type=int)
    c_pos.add_argument("q", type=int)
    c_pos.add_argument("tb", type=int)
    c_pos.add_argument("rot", type=int)
    c_pos.add_argument("--format", default=default_format, choices=["table", "json"])
    c_neg = csub.add_parser("negative")
    c_neg.add_argument("p", type=int)
    c_neg.add_argument("q", type=int)
    c_neg.add_argument("tb", type=int)
    c_fam = csub.add_parser("family")
    c_fam.add_argument("n", type=int)
    c_fam.add_argument("--format", default=default_format, choices=["table", "json"])

    ex = sub.add_parser("exists", help="non-loose existence oracle")
    ex.add_argument("--flavor", required=True, choices=["legendrian", "transverse"])
    ex.add_argument("--sphere-once", action="store_true")
    ex.add_argument("--rational-unknot", action="store_true")
    ex.add_argument("--unknot-s3", action="store_true")
    ex.add_argument("--in-ball", action="store_true")
    ex.add_argument("--ambient", default=None)
    ex.add_argument("--summand-tight", default=None, choices=["yes", "no"])
    return top


def _parse_decorated(text: str) -> DecoratedPath:
    vertices = []
    signs = []
    tokens = text.split()
    for i, tok in enumerate(tokens):
        sign = Sign.UNSIGNED
        if tok.endswith(":+"):
            sign, tok = Sign.PLUS, tok[:-2]
        elif tok.endswith(":-"):
            sign, tok = Sign.MINUS, tok[:-2]
        vertices.append(Slope.parse(tok))
        if i < len(tokens) - 1:
            signs.append(sign)
    return DecoratedPath(FareyPath(tuple(vertices)), tuple(signs))


def _run_classify(args, out) -> None:
    lens = LensSpace(args.p, args.q)
    knot = KnotId.parse(args.knot)
    payload = None
    cache_file = None
    if args.cache_dir:
        cache_dir = Path(args.cache_dir)
        cache_dir.mkdir(parents=True, exist_ok=True)
        cache_file = cache_dir / f"classify-{args.p}-{args.q}-{knot}-{args.kmax}.json"
        if cache_file.exists():
            payload = json.loads(cache_file.read_text())
    if payload is None:
        ranges = classify(lens, knot, args.kmax)
        payload = render.classification_dict(lens, knot, args.kmax, ranges)
        if cache_file is not None:
            cache_file.write_text(json.dumps(payload, indent=2))
    if args.format == "json":
        out.write(render.classification_json(payload))
    elif args.format == "csv":
        out.write(render.classification_csv(payload))
    elif args.format == "svg":
        out.write(render.classification_svg(payload))
    else:
        out.write(render.classification_table(payload))


def _run_tight_count(args, out) -> None:
    if args.space == "lens":
        ctx = Lens(args.p, args.q)
    elif args.space == "torus":
        ctx = ThickenedTorus(Slope.parse(args.s0), Slope.parse(args.s1))
    else:
        kind = UpperSolidTorus if args.side == "upper" else LowerSolidTorus
        ctx = kind(Slope.parse(args.meridian), Slope.parse(args.boundary))
    out.write(f"{count_tight(ctx)}\n")


def _run_farey(args, out) -> None:
    if args.op == "sum":
        out.write(f"{farey_sum(Slope.parse(args.x), Slope.parse(args.y))}\n")
    elif args.op == "dot":
        out.write(f"{dot(Slope.parse(args.x), Slope.parse(args.y))}\n")
    elif args.op == "edge":
        out.write(f"{str(has_edge(Slope.parse(args.x), Slope.parse(args.y))).lower()}\n")
    elif args.op == "path":
        path = minimal_path(Slope.parse(args.start), Slope.parse(args.end))
        out.write(json.dumps([str(v) for v in path.vertices]) + "\n")
    else:
        out.write(f"{expand(Slope.parse(args.slope))}\n")


def _run_path_check(args, out) -> None:
    d = _parse_decorated(args.signs)
    v = d.vertices
    if args.context == "torus":
        ctx = ThickenedTorus(v[0], v[-1])
    elif args.context == "upper":
        ctx = UpperSolidTorus(meridian=v[-1], boundary=v[0])
    else:
        ctx = LowerSolidTorus(meridian=v[0], boundary=v[-1])
    out.write("tight\n" if is_tight(d, ctx) else "overtwisted\n")


def _run_cable(args, out) -> None:
    if args.op == "tb":
        spec = CableSpec(args.p, args.q)
        if args.dividing is None:
            out.write(f"{divide_cable_tb(spec)}\n")
        else:
            out.write(f"{ruling_cable_tb(spec, Slope.parse(args.dividing))}\n")
    elif args.op == "rot":
        out.write(f"{cable_rot(CableSpec(args.p, args.q), args.r_disk, args.r_seifert)}\n")
    elif args.op == "positive":
        inv = positive_cable(LegendrianInvariants(args.tb, args.rot), CableSpec(args.p, args.q))
        sl = self_linking(inv)
        if args.format == "json":
            out.write(json.dumps({"tb": inv.tb, "rot": inv.rot, "sl": sl}) + "\n")
        else:
            out.write(f"tb={inv.tb} rot={inv.rot} sl={sl}\n")
    elif args.op == "negative":
        tb = negative_cable_tb(LegendrianInvariants(args.tb, 0), CableSpec(args.p, args.q))
        out.write(f"tb={tb}\n")
    else:
        fam = transnonsimple_family(args.n)
        if args.format == "json":
            out.write(
                json.dumps({"tb": fam.tb, "rot": fam.rot, "sl": fam.sl, "count": fam.count})
                + "\n"
            )
        else:
            out.write(f"tb={fam.tb} rot={fam.rot} sl={fam.sl} count={fam.count}\n")


def _run_exists(args, out) -> None:
    summand = None
    if args.summand_tight is not None:
        summand = args.summand_tight == "yes"
    facts = TopologyFacts(
        intersects_essential_sphere_once=args.sphere_once,
        summand_admits_tight=summand,
        is_rational_unknot=args.rational_unknot or args.unknot_s3,
        is_unknot_in_s3=args.unknot_s3,
        contained_in_ball=args.in_ball,
        ambient=args.ambient,
    )
    flavor = Flavor.LEGENDRIAN if args.flavor == "legendrian" else Flavor.TRANSVERSE
    out.write(f"{admits_nonloose(facts, flavor)}\n")


def run(argv: list[str], stdout=None, stderr=None) -> int:
    """Execute one command line; returns the process exit status."""
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    default_format = os.environ.get("NONLOOSE_FORMAT", "table")
    if default_format not in FORMATS:
        default_format = "table"
    parser = _build_parser(default_format)
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return 2
    try:
        if args.command == "classify":
            _run_classify(args, out)
        elif args.command == "tight-count":
            _run_tight_count(args, out)
        elif args.command == "farey":
            _run_farey(args, out)
        elif args.command == "path":
            _run_path_check(args, out)
        elif args.command == "cable":
            _run_cable(args, out)
        else:
            _run_exists(args, out)
    except (FareyError, DecorationError, ClassificationError, CableError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return 1
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
