"""Classification of non-loose Legendrian rational unknots in lens spaces.

The core of one Heegaard solid torus of L(p, q) is a rational unknot; a
non-loose Legendrian representative is determined, for each admissible
dividing slope of its standard neighborhood, by a tight structure on the
complementary solid torus.  Those structures are shuffle classes of
decorated Farey paths, which this module enumerates, equips with exact
classical invariants, links by stabilization, and assembles into
mountain ranges.

Conventions.  Positive stabilization lowers both tb and rot by one;
negative stabilization lowers tb and raises rot.  A mountain range based
at (a, b) is a V when both arms (a + i, b + i) and (a - i, b + i) are
present, a forward slash when only the ascending arm is, and a back
slash when only the descending arm is.  The second core K1 is classified
through the lens space L(p, qbar) whose Heegaard tori are swapped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .cfrac import _block_ranges, ancestor, expand
from .decorated import (
    ShuffleClass,
    Sign,
    UpperSolidTorus,
    enumerate_tight,
    shorten_to_minimal,
    shuffle_euler_on_disk,
)
from .farey import INFINITY, ZERO, Slope, dot, farey_sum, has_edge


class ClassificationError(ValueError):
    """Raised when inputs are invalid or an arm pattern cannot be certified."""


@dataclass(frozen=True)
class LensSpace:
    """L(p, q), the result of -p/q surgery on the unknot; (1, 1) is S^3."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p == 1 and self.q == 1:
            return
        if self.p < 1 or not (0 < self.q < self.p) or math.gcd(self.p, self.q) != 1:
            raise ClassificationError(
                f"lens space needs 0 < q < p coprime, or (1, 1); got ({self.p}, {self.q})"
            )

    @property
    def qbar(self) -> int:
        """The inverse of q mod p, normalized to 1 <= qbar <= p."""
        if self.p == 1:
            return 1
        return pow(self.q, -1, self.p)

    def __str__(self) -> str:
        return f"L({self.p},{self.q})"


@dataclass(frozen=True)
class KnotId:
    """One oriented rational unknot: a Heegaard core with an orientation."""

    core: str  # "K0" or "K1"
    positive: bool = True

    def __post_init__(self) -> None:
        if self.core not in ("K0", "K1"):
            raise ClassificationError("knot core must be K0 or K1")

    @classmethod
    def parse(cls, text: str) -> "KnotId":
        text = text.strip()
        positive = not text.startswith("-")
        return cls(text.lstrip("-"), positive)

    def __str__(self) -> str:
        return ("" if self.positive else "-") + self.core


K0 = KnotId("K0")
K1 = KnotId("K1")


def smooth_knot_classes(lens: LensSpace) -> list[KnotId]:
    """The distinct smooth isotopy classes of rational unknots in a lens space.

    One class for p <= 2, the two orientations of K0 when q = +-1 mod p,
    and all four oriented cores otherwise.
    """
    p, q = lens.p, lens.q
    if p <= 2:
        return [K0]
    if q % p in (1 % p, (p - 1) % p):
        return [K0, KnotId("K0", False)]
    return [K0, KnotId("K0", False), K1, KnotId("K1", False)]


def _work_meridian(lens: LensSpace, knot: KnotId) -> Slope:
    # K1 is classified as the first core of the Heegaard-swapped lens space
    q_eff = lens.q if knot.core == "K0" else lens.qbar
    return Slope(-lens.p, q_eff)


@lru_cache(maxsize=None)
def _slope_walk(meridian: Slope, k: int) -> Slope:
    s0 = INFINITY if meridian == Slope(-1, 1) else ancestor(meridian)
    if k == 0:
        return s0
    return farey_sum(_slope_walk(meridian, k - 1), meridian)


def slope_k(lens: LensSpace, knot: KnotId, k: int) -> Slope:
    """Dividing slope of the k-th standard neighborhood of the knot.

    The mediant walk from the meridian's anticlockwise Farey neighbor
    toward the meridian itself: s_0 is that neighbor and each step takes
    the mediant with the meridian once more.
    """
    if k < 0:
        raise ClassificationError("k must be non-negative")
    return _slope_walk(_work_meridian(lens, knot), k)


@dataclass(frozen=True)
class NonLooseClass:
    """One coarse class of non-loose Legendrian representative."""

    lens: LensSpace
    knot: KnotId
    dividing_slope: Slope
    complement: ShuffleClass
    tb_q: Fraction
    rot_q: Fraction
    euler: int
    k: int

    @property
    def key(self) -> tuple:
        return (self.k, self.complement.minus_counts)

    @property
    def class_id(self) -> str:
        counts = ",".join(str(c) for c in self.complement.minus_counts)
        return f"s{self.k}[{counts}]"


def _euler_rep(x: int, p: int) -> int:
    # representative of x mod p in (-p, p], moved by whole multiples of p
    # only when x starts outside that window
    while x > p:
        x -= p
    while x <= -p:
        x += p
    return x


def _class_from_shuffle(
    lens: LensSpace, knot: KnotId, k: int, s: Slope, sc: ShuffleClass
) -> NonLooseClass:
    p = lens.p
    e_disk = shuffle_euler_on_disk(sc, ZERO)
    tb_q = Fraction(abs(dot(ZERO, s)), p)
    rot_q = Fraction(e_disk, p)
    euler = _euler_rep(-e_disk, p)
    return NonLooseClass(lens, knot, s, sc, tb_q, rot_q, euler, k)


def classes_at_slope(lens: LensSpace, knot: KnotId, k: int) -> list[NonLooseClass]:
    """All non-loose classes of the knot with dividing slope s_k.

    One class per tight structure on the complementary solid torus with
    meridian 0 and boundary slope s_k, carrying exact tb, rot, and the
    Euler class of the ambient structure.
    """
    s = slope_k(lens, knot, k)
    ctx = UpperSolidTorus(meridian=ZERO, boundary=s)
    return [_class_from_shuffle(lens, knot, k, s, sc) for sc in enumerate_tight(ctx)]


def stabilize(c: NonLooseClass, sign: Sign) -> Optional[NonLooseClass]:
    """Stabilize a non-loose class once; None means the result is loose.

    The complement gains the basic slice between s_{k-1} and s_k with the
    stabilization sign; the class survives exactly when the extended path
    consistently shortens to the minimal one, and is then read off from
    the shortened shuffle class.
    """
    if sign not in (Sign.PLUS, Sign.MINUS):
        raise ClassificationError("stabilization sign must be PLUS or MINUS")
    if c.k == 0:
        return None
    s_prev = slope_k(c.lens, c.knot, c.k - 1)
    vertices = (s_prev,) + c.complement.path
    assert has_edge(s_prev, vertices[1])
    # the new edge never joins the leading block of the old path: s_{k-1}
    # is adjacent to the old second vertex, so the triple has determinant 1
    assert _block_ranges(vertices)[0] == (0,)
    counts = ((1 if sign is Sign.MINUS else 0),) + c.complement.minus_counts
    unsigned = frozenset(u + 1 for u in c.complement.unsigned_positions)
    finals = shorten_to_minimal((vertices, unsigned, counts))
    if not finals:
        return None
    if len(finals) != 1:
        raise ClassificationError(
            f"ambiguous shortening of {c.class_id} with sign {sign}"
        )
    fv, fu, fc = next(iter(finals))
    sc = ShuffleClass(fv, fc, tuple(sorted(fu)))
    return _class_from_shuffle(c.lens, c.knot, c.k - 1, fv[0], sc)


class RangeKind(Enum):
    V = "V"
    BACK_SLASH = "back-slash"
    FORWARD_SLASH = "forward-slash"

    def __str__(self) -> str:
        return self.value


_KIND_SWAP = {
    RangeKind.V: RangeKind.V,
    RangeKind.BACK_SLASH: RangeKind.FORWARD_SLASH,
    RangeKind.FORWARD_SLASH: RangeKind.BACK_SLASH,
}


@dataclass(frozen=True)
class RangeMember:
    """One Legendrian class inside a mountain range.

    arm is "base", "+" (ascending-rot arm, descended by positive
    stabilization) or "-" (descending-rot arm, descended by negative
    stabilization); index is the height above the base.
    """

    cls: NonLooseClass
    arm: str
    index: int

    @property
    def member_id(self) -> str:
        return self.cls.class_id


@dataclass(frozen=True)
class StabEdge:
    source: str
    sign: Sign
    target: Optional[str]  # None encodes a loose result


@dataclass(frozen=True)
class MountainRange:
    kind: RangeKind
    base_rot: Fraction
    base_tb: Fraction
    euler: int
    members: tuple[RangeMember, ...]
    edges: tuple[StabEdge, ...]

    @property
    def base(self) -> tuple[Fraction, Fraction]:
        return (self.base_rot, self.base_tb)


def _assemble_range(
    base: NonLooseClass,
    arms: dict[Sign, list[NonLooseClass]],
    k_max: int,
    problems: list[str],
) -> Optional[MountainRange]:
    plus_arm = arms[Sign.PLUS]
    minus_arm = arms[Sign.MINUS]
    expected = k_max - base.k
    for sign, arm in ((Sign.PLUS, plus_arm), (Sign.MINUS, minus_arm)):
        if arm and len(arm) != expected:
            problems.append(
                f"{base.class_id}: {sign!s} arm stops at depth {len(arm)} < {expected}"
            )
            return None
    if plus_arm and minus_arm:
        kind = RangeKind.V
    elif plus_arm:
        kind = RangeKind.FORWARD_SLASH
    elif minus_arm:
        kind = RangeKind.BACK_SLASH
    else:
        problems.append(f"{base.class_id}: base with no arms at k_max={k_max}")
        return None
    members = [RangeMember(base, "base", 0)]
    edges = [
        StabEdge(base.class_id, Sign.PLUS, None),
        StabEdge(base.class_id, Sign.MINUS, None),
    ]
    for sign, arm, label in ((Sign.PLUS, plus_arm, "+"), (Sign.MINUS, minus_arm, "-")):
        below = base
        for i, member in enumerate(arm, start=1):
            want_rot = base.rot_q + (i if sign is Sign.PLUS else -i)
            if member.tb_q != base.tb_q + i or member.rot_q != want_rot:
                problems.append(
                    f"{member.class_id}: invariants off the {label} arm pattern"
                )
                return None
            if member.euler % base.lens.p != base.euler % base.lens.p:
                problems.append(f"{member.class_id}: Euler class leaves the structure")
                return None
            members.append(RangeMember(member, label, i))
            edges.append(StabEdge(member.class_id, sign, below.class_id))
            other = Sign.MINUS if sign is Sign.PLUS else Sign.PLUS
            edges.append(StabEdge(member.class_id, other, None))
            below = member
    return MountainRange(
        kind,
        base.rot_q,
        base.tb_q,
        base.euler,
        tuple(members),
        tuple(edges),
    )


def _flip_orientation(mr: MountainRange) -> MountainRange:
    """Reverse the knot orientation: negate rotations and swap slash kinds.

    The recorded complement data stays that of the positively-oriented
    representative at the opposite rotation number.
    """
    members = tuple(
        RangeMember(
            replace(m.cls, rot_q=-m.cls.rot_q, knot=replace(m.cls.knot, positive=False)),
            {"+": "-", "-": "+", "base": "base"}[m.arm],
            m.index,
        )
        for m in mr.members
    )
    flip = {Sign.PLUS: Sign.MINUS, Sign.MINUS: Sign.PLUS}
    edges = tuple(StabEdge(e.source, flip[e.sign], e.target) for e in mr.edges)
    return MountainRange(
        _KIND_SWAP[mr.kind], -mr.base_rot, mr.base_tb, mr.euler, members, edges
    )


def classify(lens: LensSpace, knot: KnotId = K0, k_max: int = 5) -> list[MountainRange]:
    """All mountain ranges of non-loose representatives of one rational unknot.

    Builds the stabilization graph over the classes with dividing slope
    s_k for k <= k_max and pattern-matches it into Vs and slashes.  Arms
    are verified member by member up to k_max; a pattern that cannot be
    certified raises instead of guessing.
    """
    if k_max < 3:
        raise ClassificationError("k_max must be at least 3 to certify arm patterns")
    base_knot = replace(knot, positive=True)
    levels = [classes_at_slope(lens, base_knot, k) for k in range(k_max + 1)]
    by_key = {c.key: c for level in levels for c in level}
    succ: dict[tuple, dict[Sign, Optional[tuple]]] = {}
    preds: dict[tuple, dict[Sign, list[tuple]]] = {c.key: {Sign.PLUS: [], Sign.MINUS: []} for c in by_key.values()}
    problems: list[str] = []
    for k in range(1, k_max + 1):
        for c in levels[k]:
            succ[c.key] = {}
            for sign in (Sign.PLUS, Sign.MINUS):
                r = stabilize(c, sign)
                succ[c.key][sign] = r.key if r is not None else None
                if r is not None:
                    preds[r.key][sign].append(c.key)
            if all(succ[c.key][s] is not None for s in (Sign.PLUS, Sign.MINUS)):
                problems.append(f"{c.class_id}: two tight stabilizations")
    for c in levels[0]:
        succ[c.key] = {Sign.PLUS: None, Sign.MINUS: None}
    bases = [
        c
        for level in levels
        for c in level
        if succ[c.key][Sign.PLUS] is None and succ[c.key][Sign.MINUS] is None
    ]
    ranges: list[MountainRange] = []
    claimed: set[tuple] = set()
    for base in bases:
        if base.k > 1:
            problems.append(
                f"{base.class_id}: unexpected base above the first two slopes"
            )
            continue
        arms: dict[Sign, list[NonLooseClass]] = {Sign.PLUS: [], Sign.MINUS: []}
        for sign in (Sign.PLUS, Sign.MINUS):
            cur = base.key
            for _ in range(base.k + 1, k_max + 1):
                sources = preds[cur][sign]
                if not sources:
                    break
                if len(sources) > 1:
                    problems.append(f"{base.class_id}: branching {sign!s} arm")
                    sources = []
                    break
                cur = sources[0]
                arms[sign].append(by_key[cur])
        mr = _assemble_range(base, arms, k_max, problems)
        if mr is not None:
            ranges.append(mr)
            claimed.update(m.cls.key for m in mr.members)
    unclaimed = set(by_key) - claimed
    if unclaimed:
        problems.append(f"{len(unclaimed)} classes outside every certified range")
    if problems:
        raise ClassificationError("; ".join(sorted(problems)))
    if not knot.positive:
        ranges = [_flip_orientation(mr) for mr in ranges]
    ranges.sort(key=lambda mr: (mr.base_tb, mr.base_rot, mr.kind.value))
    return ranges


@dataclass(frozen=True)
class RangeCounts:
    """Closed-form mountain-range counts for one knot.

    v_low counts Vs at the lower tb level, slashes the number of back
    slashes (equal to the number of forward slashes), v_high the Vs one
    level up.
    """

    v_low: int
    slashes: int
    v_high: int

    @property
    def total(self) -> int:
        return self.v_low + 2 * self.slashes + self.v_high


def _counts_from_cf(coeffs: tuple[int, ...]) -> RangeCounts:
    n = len(coeffs) - 1
    if n == 0:
        # integer surgery: one low V and |a_0 + 1| high Vs, no slashes
        return RangeCounts(1, 0, abs(coeffs[0] + 1))
    v_high = 1
    for a in coeffs:
        v_high *= abs(a + 1)
    if n == 1:
        return RangeCounts(abs(coeffs[0] + 2), 1, v_high)
    slashes = 1
    for a in coeffs[:-2]:
        slashes *= abs(a + 1)
    v_low = slashes * abs(coeffs[-2] + 2)
    return RangeCounts(v_low, slashes, v_high)


def range_counts(lens: LensSpace, knot: KnotId = K0) -> RangeCounts:
    """Mountain-range counts from the continued fraction expansion.

    Must agree with the counts measured from classify; K1 uses the
    expansion of the swapped lens space, which reverses the coefficients.
    """
    m = _work_meridian(lens, knot)
    if m == Slope(-1, 1):
        return RangeCounts(1, 0, 0)
    return _counts_from_cf(expand(m).coeffs)


def measured_counts(ranges: list[MountainRange], lens: LensSpace) -> RangeCounts:
    """Tally a classification result into the closed-form count format."""
    tb_low = min(mr.base_tb for mr in ranges)
    v_low = sum(
        1 for mr in ranges if mr.kind is RangeKind.V and mr.base_tb == tb_low
    )
    back = sum(1 for mr in ranges if mr.kind is RangeKind.BACK_SLASH)
    forward = sum(1 for mr in ranges if mr.kind is RangeKind.FORWARD_SLASH)
    if back != forward:
        raise ClassificationError("slash kinds out of balance")
    v_high = sum(
        1 for mr in ranges if mr.kind is RangeKind.V and mr.base_tb == tb_low + 1
    )
    return RangeCounts(v_low, back, v_high)


class Flavor(Enum):
    LEGENDRIAN = "legendrian"
    TRANSVERSE = "transverse"


class Existence(Enum):
    NONE = "none"
    EXACTLY_ONE_STRUCTURE_KNOWN = "exactly-one"
    AT_LEAST_TWO = "at-least-two"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class TopologyFacts:
    """Caller-asserted smooth facts feeding the existence oracle.

    The engine does not compute 3-manifold topology; it only applies the
    decision rules to facts the caller vouches for.  summand_admits_tight
    refers to the summand M' in the splitting M = M' # M'' with the knot
    in M'' and M'' minus the knot irreducible; when omitted it is derived
    from the ambient descriptor where possible.
    """

    intersects_essential_sphere_once: bool = False
    summand_admits_tight: Optional[bool] = None
    is_rational_unknot: bool = False
    is_unknot_in_s3: bool = False
    contained_in_ball: bool = False
    ambient: Optional[str] = None


# manifolds that admit no tight contact structure: surgeries on torus
# knots making the small Seifert fibered spaces usually written M_n
_TIGHTLESS_AMBIENTS = {"M_n", "Mn"}


def _resolve_summand(f: TopologyFacts) -> bool:
    if f.summand_admits_tight is not None:
        return f.summand_admits_tight
    if not f.contained_in_ball:
        # the splitting then has M' = S^3 for the ambient kinds we model
        return True
    if f.ambient is None:
        raise ClassificationError(
            "ball-contained knot needs an ambient descriptor or an explicit "
            "summand tightness flag"
        )
    return f.ambient not in _TIGHTLESS_AMBIENTS


def admits_nonloose(f: TopologyFacts, flavor: Flavor) -> Existence:
    """Whether a knot type admits non-loose representatives, and how many
    overtwisted structures are known to carry them.

    Legendrian representatives exist exactly when the knot does not meet
    an essential sphere transversely once and the complementary summand
    admits a tight structure; transverse ones additionally require the
    knot not to be a rational unknot.  Whenever representatives exist
    there are at least two such structures, except for the unknot in S^3
    which has exactly one.
    """
    if f.is_unknot_in_s3 and not f.is_rational_unknot:
        raise ClassificationError("the unknot in S^3 is a rational unknot")
    if f.is_rational_unknot and f.intersects_essential_sphere_once:
        raise ClassificationError(
            "rational unknots live in irreducible manifolds and cannot meet "
            "an essential sphere once"
        )
    if f.is_unknot_in_s3 and f.ambient not in (None, "S3"):
        raise ClassificationError("unknot-in-S^3 flag contradicts the ambient")
    summand = _resolve_summand(f)
    if f.is_unknot_in_s3 and not summand:
        raise ClassificationError("S^3 admits a tight structure")
    if f.intersects_essential_sphere_once:
        return Existence.NONE
    if not summand:
        return Existence.NONE
    if flavor is Flavor.TRANSVERSE and f.is_rational_unknot:
        return Existence.NONE
    if flavor is Flavor.LEGENDRIAN and f.is_unknot_in_s3:
        return Existence.EXACTLY_ONE_STRUCTURE_KNOWN
    return Existence.AT_LEAST_TWO
