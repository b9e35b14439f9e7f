"""Output formatting: tables, JSON, CSV and static SVG mountain ranges.

Every renderer consumes the same JSON-ready payload dictionary, so
cached atlases and fresh classifications produce byte-identical output.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .unknots import KnotId, LensSpace, MountainRange


def _frac(x: Fraction) -> str:
    # exact "a/b" text, integers printed bare; never decimals
    return str(x)


def classification_dict(
    lens: LensSpace, knot: KnotId, k_max: int, ranges: list[MountainRange]
) -> dict:
    return {
        "lens": {"p": lens.p, "q": lens.q},
        "knot": str(knot),
        "k_max": k_max,
        "ranges": [
            {
                "kind": str(mr.kind),
                "base": [_frac(mr.base_rot), _frac(mr.base_tb)],
                "euler": mr.euler,
                "members": [
                    {
                        "id": m.member_id,
                        "arm": m.arm,
                        "index": m.index,
                        "tb": _frac(m.cls.tb_q),
                        "rot": _frac(m.cls.rot_q),
                        "slope": str(m.cls.dividing_slope),
                        "complement": m.cls.complement.to_json_dict(),
                    }
                    for m in mr.members
                ],
                "stabilizations": [
                    {
                        "source": e.source,
                        "sign": "+" if e.sign > 0 else "-",
                        "target": e.target if e.target is not None else "loose",
                    }
                    for e in mr.edges
                ],
            }
            for mr in ranges
        ],
    }


def classification_json(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


def classification_csv(payload: dict) -> str:
    lines = ["kind,rot_base,tb_base,euler"]
    for r in payload["ranges"]:
        lines.append(f"{r['kind']},{r['base'][0]},{r['base'][1]},{r['euler']}")
    return "\n".join(lines) + "\n"


def classification_table(payload: dict) -> str:
    lens, knot = payload["lens"], payload["knot"]
    head = (
        f"L({lens['p']},{lens['q']}) {knot}: {len(payload['ranges'])} mountain "
        f"ranges (k_max={payload['k_max']})"
    )
    lines = [head, "-" * len(head)]
    for r in payload["ranges"]:
        lines.append(
            f"{r['kind']:<14} base=({r['base'][0]}, {r['base'][1]})  euler={r['euler']}"
        )
        for m in r["members"]:
            tag = "base" if m["arm"] == "base" else f"{m['arm']}{m['index']}"
            lines.append(
                f"    {tag:<6} tb={m['tb']:<8} rot={m['rot']:<8}"
                f" slope={m['slope']} [{m['id']}]"
            )
    return "\n".join(lines) + "\n"


def classification_svg(payload: dict) -> str:
    """Static mountain-range plot: rotation on x, tb on y, one marker per
    member, stabilization arms drawn as segments."""
    ranges = payload["ranges"]
    members = [(ri, m) for ri, r in enumerate(ranges) for m in r["members"]]
    rots = [float(Fraction(m["rot"])) for _, m in members]
    tbs = [float(Fraction(m["tb"])) for _, m in members]
    lo_r, hi_r = min(rots) - 0.5, max(rots) + 0.5
    lo_t, hi_t = min(tbs) - 0.5, max(tbs) + 0.5
    width, height, margin = 640, 480, 48

    def x(rot: float) -> float:
        return margin + (rot - lo_r) / (hi_r - lo_r) * (width - 2 * margin)

    def y(tb: float) -> float:
        return height - margin - (tb - lo_t) / (hi_t - lo_t) * (height - 2 * margin)

    def pos(m: dict) -> tuple[float, float]:
        return x(float(Fraction(m["rot"]))), y(float(Fraction(m["tb"])))

    lens, knot = payload["lens"], payload["knot"]
    colors = ["#1f6feb", "#d2322d", "#2c8a3d", "#8250df", "#b08800", "#0b7285"]
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f"<title>L({lens['p']},{lens['q']}) {knot} non-loose mountain ranges</title>",
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    if lo_r < 0 < hi_r:
        parts.append(
            f'<line x1="{x(0):.1f}" y1="{margin}" x2="{x(0):.1f}" '
            f'y2="{height - margin}" stroke="#cccccc"/>'
        )
    for ri, r in enumerate(ranges):
        color = colors[ri % len(colors)]
        base = r["members"][0]
        for arm in ("+", "-"):
            chain = [base] + [m for m in r["members"] if m["arm"] == arm]
            for a, b in zip(chain, chain[1:]):
                (x1, y1), (x2, y2) = pos(a), pos(b)
                parts.append(
                    f'<line x1="{x1:.1f}" y1="{y1:.1f}" x2="{x2:.1f}" y2="{y2:.1f}" '
                    f'stroke="{color}" stroke-width="1.5"/>'
                )
        for m in r["members"]:
            cx, cy = pos(m)
            parts.append(
                f'<circle class="member" cx="{cx:.1f}" cy="{cy:.1f}" r="4" '
                f'fill="{color}"><title>rot={m["rot"]} tb={m["tb"]}</title></circle>'
            )
        bx, by = pos(base)
        parts.append(
            f'<text x="{bx:.1f}" y="{by + 16:.1f}" font-size="11" '
            f'text-anchor="middle" fill="{color}">({r["base"][0]}, {r["base"][1]})</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
