"""Acceptance suite: the project's exit checklist, one test per criterion.

Each test prints a single [PASS] line when its criterion holds; every
comparison is exact (integer or Fraction equality, no tolerances).
"""

import io
import random
from fractions import Fraction
from itertools import product
from math import gcd

from nonloose.cables import (
    CableSpec,
    LegendrianInvariants,
    divide_cable_tb,
    negative_cable_tb,
    positive_cable,
    ruling_cable_tb,
    self_linking,
    stab_count_relation,
    transnonsimple_family,
)
from nonloose.cfrac import FareyPath, expand, minimal_path
from nonloose.cli import run
from nonloose.decorated import (
    DecoratedPath,
    Lens,
    LowerSolidTorus,
    Sign,
    ThickenedTorus,
    UpperSolidTorus,
    count_tight,
    enumerate_tight,
    is_tight,
)
from nonloose.farey import Slope
from nonloose.unknots import (
    K0,
    K1,
    Existence,
    Flavor,
    LensSpace,
    RangeKind,
    TopologyFacts,
    admits_nonloose,
    classify,
    measured_counts,
    range_counts,
)
from oracles import bounded_slopes, count_by_orbits, tight_by_search

P, M, U = Sign.PLUS, Sign.MINUS, Sign.UNSIGNED


def _report(number: int, detail: str) -> None:
    print(f"[PASS] acceptance {number}: {detail}")


def _cli_csv_rows(p: int, q: int, knot: str):
    out = io.StringIO()
    code = run(
        ["classify", str(p), str(q), "--knot", knot, "--format", "csv"], stdout=out
    )
    assert code == 0
    rows = []
    for line in out.getvalue().strip().splitlines()[1:]:
        kind, rot, tb, euler = line.split(",")
        rows.append((kind, Fraction(rot), Fraction(tb), int(euler)))
    return rows


def test_acceptance_1_integer_surgery_family():
    for p in range(2, 31):
        rows = _cli_csv_rows(p, 1, "K0")
        want = {("V", Fraction(0), Fraction(1, p), 0)} | {
            ("V", Fraction(p - 2 * k, p), Fraction(p + 1, p), 2 * k - p)
            for k in range(1, p)
        }
        assert len(rows) == p, p
        assert set(rows) == want, p
    _report(1, "L(p,1) emits exactly p Vs with exact bases and Euler classes, p=2..30")


def test_acceptance_2_dual_integer_family():
    for p in range(3, 31):
        rows = _cli_csv_rows(p, p - 1, "K0")
        assert len(rows) == 3, p
        by_kind = {kind: (rot, tb, eu) for kind, rot, tb, eu in rows}
        assert by_kind["V"] == (Fraction(0), Fraction(2 * p - 1, p), 0)
        rot, tb, eu = by_kind["back-slash"]
        assert (rot, tb) == (Fraction(-1) + Fraction(2, p), Fraction(p - 1, p))
        assert eu % p == -(2 - p) % p
        rot, tb, eu = by_kind["forward-slash"]
        assert (rot, tb) == (Fraction(1) - Fraction(2, p), Fraction(p - 1, p))
        assert eu % p == (2 - p) % p
    _report(2, "L(p,p-1) emits one V and two slashes at the exact bases, p=3..30")


def test_acceptance_3_odd_over_two_family():
    for n in range(2, 11):
        p = 2 * n + 1
        lens = LensSpace(p, 2)

        got = {
            (mr.kind, mr.base_rot, mr.base_tb) for mr in classify(lens, K0, 3)
        }
        want = {
            (RangeKind.BACK_SLASH, Fraction(-n, p), Fraction(n + 1, p)),
            (RangeKind.FORWARD_SLASH, Fraction(n, p), Fraction(n + 1, p)),
        }
        want |= {
            (RangeKind.V, Fraction(n - 2 * k, p), Fraction(n + 1, p))
            for k in range(1, n)
        }
        want |= {
            (RangeKind.V, Fraction(n - 1 - 2 * k, p), Fraction(3 * n + 2, p))
            for k in range(n)
        }
        assert len(got) == 2 * n + 1, n
        assert got == want, n

        got1 = {
            (mr.kind, mr.base_rot, mr.base_tb) for mr in classify(lens, K1, 3)
        }
        want1 = {
            (RangeKind.BACK_SLASH, Fraction(-1, p), Fraction(2, p)),
            (RangeKind.FORWARD_SLASH, Fraction(1, p), Fraction(2, p)),
        }
        want1 |= {
            (RangeKind.V, Fraction(2 * n - 2 * k, p), Fraction(2 * n + 3, p))
            for k in range(1, 2 * n, 2)
        }
        assert len(got1) == n + 2, n
        assert got1 == want1, n
    _report(3, "L(2n+1,2) range counts and bases exact for both cores, n=2..10")


def test_acceptance_4_counting_formulas_match_construction():
    lenses = 0
    for p in range(2, 61):
        for q in range(2, p):
            if gcd(p, q) != 1:
                continue
            lens = LensSpace(p, q)
            for knot in (K0, K1):
                ranges = classify(lens, knot, 3)
                assert range_counts(lens, knot) == measured_counts(ranges, lens), (
                    p,
                    q,
                    str(knot),
                )
                eulers = {mr.euler % p for mr in ranges}
                assert len(eulers) >= 2, (p, q, str(knot))
            lenses += 1
    _report(4, f"formula counts equal constructed counts on {lenses} lens spaces, both cores")


def _context_signs(kind, edges):
    if kind == "torus":
        signable, unsigned = list(range(edges)), []
    elif kind == "upper":
        signable, unsigned = list(range(edges - 1)), [edges - 1]
    else:
        signable, unsigned = list(range(1, edges)), [0]
    for combo in product((P, M), repeat=len(signable)):
        signs = [U] * edges
        for e, sg in zip(signable, combo):
            signs[e] = sg
        yield tuple(signs)


def test_acceptance_5_engine_matches_exhaustive_search():
    rng = random.Random(0xC0FFEE)
    pool = bounded_slopes(6)
    contexts = 0
    decisions = 0
    while contexts < 520:
        r, s = rng.sample(pool, 2)
        base = minimal_path(r, s).vertices
        if len(base) - 1 > 6:
            continue
        kind = ("torus", "upper", "lower")[contexts % 3]

        # counting: closed form against orbit enumeration
        if kind == "torus":
            ctx = ThickenedTorus(r, s)
            unsigned = frozenset()
        elif kind == "upper":
            ctx = UpperSolidTorus(meridian=s, boundary=r)
            unsigned = frozenset({len(base) - 2})
        else:
            ctx = LowerSolidTorus(meridian=r, boundary=s)
            unsigned = frozenset({0})
        assert count_tight(ctx) == count_by_orbits(base, unsigned), (r, s, kind)

        # tightness: all decorations of a one-step extension of the path
        exts = []
        for u in pool:
            if u in base:
                continue
            try:
                FareyPath((u,) + base)
            except Exception:
                continue
            exts.append((u,) + base)
        if exts:
            verts = exts[rng.randrange(len(exts))]
            edges = len(verts) - 1
            if edges <= 7:
                if kind == "torus":
                    ectx = ThickenedTorus(verts[0], verts[-1])
                elif kind == "upper":
                    ectx = UpperSolidTorus(meridian=verts[-1], boundary=verts[0])
                else:
                    ectx = LowerSolidTorus(meridian=verts[0], boundary=verts[-1])
                target = minimal_path(verts[0], verts[-1]).vertices
                for signs in _context_signs(kind, edges):
                    d = DecoratedPath(FareyPath(verts), signs)
                    want = tight_by_search(
                        verts, tuple(int(x) for x in signs), target
                    )
                    assert is_tight(d, ectx) == want, (verts, signs, kind)
                    decisions += 1
        contexts += 1
    assert decisions >= 2000
    _report(5, f"{contexts} contexts: counts and {decisions} tightness verdicts match search")


def test_acceptance_6_lens_tight_structure_counts():
    total = 0
    for p in range(1, 41):
        for q in range(1, p + 1):
            if q == p and p != 1:
                continue
            if gcd(p, q) != 1:
                continue
            lens = Lens(p, q)
            if (p, q) == (1, 1):
                want = 1
            else:
                want = 1
                for a in expand(Slope(-p, q)).coeffs:
                    want *= abs(a + 1)
            classes = enumerate_tight(lens)
            assert count_tight(lens) == want == len(classes) == len(set(classes)), (p, q)
            total += 1
    _report(6, f"tight-structure counts equal the coefficient product on {total} lens spaces")


def test_acceptance_7_cable_arithmetic():
    for n in range(1, 21):
        spec = CableSpec(2 * n + 1, 2)
        assert divide_cable_tb(spec) == 4 * n + 2
        fam = transnonsimple_family(n)
        assert (fam.tb, fam.rot, fam.sl, fam.count) == (
            4 * n + 2,
            2 * n - 1,
            2 * n + 3,
            n,
        )
        assert self_linking(LegendrianInvariants(fam.tb, fam.rot)) == 2 * n + 3
        # positive cable of the maximal unknot as a ruling curve
        assert ruling_cable_tb(CableSpec(2, 2 * n + 1), Slope(1, 1)) == 2 * n + 3
        assert positive_cable(
            LegendrianInvariants(1, 0), CableSpec(2, 2 * n + 1)
        ) == LegendrianInvariants(2 * n + 3, 0)
    grid = 0
    for tb in range(-10, 11):
        for p in range(2, 13):
            for q in range((tb - 1) * p + 1, tb * p):
                if gcd(p, q) != 1:
                    continue
                inv = LegendrianInvariants(tb, 0)
                spec = CableSpec(p, q)
                n = stab_count_relation(inv, spec)
                down = positive_cable(LegendrianInvariants(tb - 1, 0), spec)
                assert negative_cable_tb(inv, spec) - n == down.tb
                grid += 1
    _report(7, f"cable formulas exact for n<=20 and the stabilization identity on {grid} grid points")


def test_acceptance_8_existence_oracle_fixture():
    LEG, TR = Flavor.LEGENDRIAN, Flavor.TRANSVERSE
    NONE, ONE, TWO = (
        Existence.NONE,
        Existence.EXACTLY_ONE_STRUCTURE_KNOWN,
        Existence.AT_LEAST_TWO,
    )
    unknot = TopologyFacts(is_rational_unknot=True, is_unknot_in_s3=True, ambient="S3")
    s1s2_core = TopologyFacts(intersects_essential_sphere_once=True, ambient="S1xS2")
    rational = TopologyFacts(is_rational_unknot=True, ambient="lens")
    balled_mn = TopologyFacts(contained_in_ball=True, ambient="M_n")
    seifert = TopologyFacts(ambient="seifert")
    sphere_once = TopologyFacts(
        intersects_essential_sphere_once=True, summand_admits_tight=True
    )
    no_tight_summand = TopologyFacts(summand_admits_tight=False)
    balled_in_lens = TopologyFacts(contained_in_ball=True, ambient="lens")

    fixture = [
        (unknot, LEG, ONE),
        (unknot, TR, NONE),
        (s1s2_core, LEG, NONE),
        (s1s2_core, TR, NONE),
        (rational, LEG, TWO),
        (rational, TR, NONE),
        (balled_mn, LEG, NONE),
        (balled_mn, TR, NONE),
        (seifert, LEG, TWO),
        (seifert, TR, TWO),
        (sphere_once, LEG, NONE),
        (no_tight_summand, LEG, NONE),
        (balled_in_lens, LEG, TWO),
    ]
    assert len(fixture) >= 12
    for facts, flavor, want in fixture:
        assert admits_nonloose(facts, flavor) is want, (facts, flavor)
    _report(8, f"existence oracle reproduces all {len(fixture)} fixture verdicts")
