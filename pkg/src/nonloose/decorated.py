"""Decorated Farey paths and the tightness calculus built on them.

A decorated path encodes a contact structure on a thickened torus, a
solid torus, or a lens space as a clockwise Farey path whose edges carry
basic-slice signs.  Tightness is decided by searching for a sequence of
consistent shortenings (sign-matched vertex removals, with shuffling of
signs inside continued fraction blocks allowed between steps) that
reaches the minimal path; structures are counted and enumerated up to
shuffle equivalence.

The search works on shuffle classes directly - a path together with the
number of minus signs carried by each continued fraction block - rather
than on concrete sign tuples, so paths with long blocks stay tractable.
All values are immutable and all procedures pure; the shared memo tables
are lock-guarded caches of deterministic results, so concurrent calls
are race-free and always agree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum
from functools import lru_cache
from itertools import product
from typing import Union

from .cfrac import FareyPath, _block_ranges, _minimal_vertices
from .farey import (
    ZERO,
    SignedVector,
    Slope,
    cross,
    farey_diff,
    has_edge,
)


class Sign(IntEnum):
    MINUS = -1
    UNSIGNED = 0
    PLUS = 1

    def __str__(self) -> str:
        return {Sign.MINUS: "-", Sign.UNSIGNED: "", Sign.PLUS: "+"}[self]


class DecorationError(ValueError):
    """A decorated path or context violated its construction rules."""


@dataclass(frozen=True)
class DecoratedPath:
    """A clockwise Farey path with one basic-slice sign per edge.

    At most one edge may be unsigned, and only the first or last edge;
    fully signed paths are allowed.
    """

    path: FareyPath
    signs: tuple[Sign, ...]

    def __post_init__(self) -> None:
        edges = len(self.path)
        if len(self.signs) != edges:
            raise DecorationError("need exactly one sign per edge")
        unsigned = [i for i, s in enumerate(self.signs) if s is Sign.UNSIGNED]
        if len(unsigned) > 1:
            raise DecorationError("at most one edge may be unsigned")
        if unsigned and unsigned[0] not in (0, edges - 1):
            raise DecorationError("an unsigned edge must be first or last")

    @property
    def vertices(self) -> tuple[Slope, ...]:
        return self.path.vertices


@dataclass(frozen=True)
class ThickenedTorus:
    """T^2 x I with dividing slopes s0 (back face) and s1, s1 clockwise of s0."""

    s0: Slope
    s1: Slope


@dataclass(frozen=True)
class LowerSolidTorus:
    """Solid torus whose meridian is collapsed on the anticlockwise side.

    Structures correspond to minimal paths from the meridian clockwise to
    the boundary slope, signed on every edge except the first.
    """

    meridian: Slope
    boundary: Slope


@dataclass(frozen=True)
class UpperSolidTorus:
    """Solid torus whose meridian is collapsed on the clockwise side.

    Structures correspond to minimal paths from the boundary slope
    clockwise to the meridian, signed on every edge except the last.
    """

    meridian: Slope
    boundary: Slope


@dataclass(frozen=True)
class Lens:
    """The lens space obtained by -p/q surgery on the unknot."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p == 1 and self.q == 1:
            return
        if not (0 < self.q < self.p) or math.gcd(self.p, self.q) != 1:
            raise DecorationError("lens space needs 0 < q < p coprime, or (1, 1)")


Context = Union[ThickenedTorus, LowerSolidTorus, UpperSolidTorus, Lens]


@dataclass(frozen=True)
class ShuffleClass:
    """A decorated path up to shuffling: per-block minus counts.

    minus_counts is aligned with the continued fraction blocks of the
    path and counts minus signs among the signed edges of each block;
    unsigned_positions lists the terminal edges carrying no sign (two of
    them for lens spaces, at most one otherwise).
    """

    path: tuple[Slope, ...]
    minus_counts: tuple[int, ...]
    unsigned_positions: tuple[int, ...] = ()

    def to_json_dict(self) -> dict:
        return {
            "path": [str(s) for s in self.path],
            "minus": list(self.minus_counts),
        }


# internal search state: (vertices, frozenset of unsigned edges, minus counts)
_State = tuple[tuple[Slope, ...], frozenset, tuple[int, ...]]


def _context_data(c: Context) -> tuple[tuple[Slope, ...], frozenset]:
    """Minimal path and unsigned edge set realizing a context."""
    if isinstance(c, ThickenedTorus):
        return _minimal_vertices(c.s0, c.s1), frozenset()
    if isinstance(c, LowerSolidTorus):
        return _minimal_vertices(c.meridian, c.boundary), frozenset({0})
    if isinstance(c, UpperSolidTorus):
        verts = _minimal_vertices(c.boundary, c.meridian)
        return verts, frozenset({len(verts) - 2})
    if isinstance(c, Lens):
        verts = _minimal_vertices(Slope(-c.p, c.q), ZERO)
        return verts, frozenset({0, len(verts) - 2})
    raise DecorationError(f"unknown context {c!r}")


@lru_cache(maxsize=None)
def _signed_sizes(
    vertices: tuple[Slope, ...], unsigned: frozenset
) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    blocks = _block_ranges(vertices)
    sizes = tuple(sum(1 for e in blk if e not in unsigned) for blk in blocks)
    return blocks, sizes


def _can_supply(minus: int, size: int, sign: Sign) -> bool:
    return minus >= 1 if sign is Sign.MINUS else size - minus >= 1


@dataclass(frozen=True)
class _MergePlan:
    """Sign-independent geometry of one vertex removal.

    consumed lists the blocks that must supply the matched signs (empty
    when both removed edges are unsigned, one block when absorbing into
    an unsigned edge, two otherwise).  The removed edges end their
    blocks, so the surviving signed edges of each old block stay
    together; moved maps each old block with survivors to its block in
    the shortened path (several old blocks may land in one).
    """

    new_vertices: tuple[Slope, ...]
    new_unsigned: frozenset
    consumed: tuple[int, ...]
    merged_unsigned: bool
    merged_block: int
    n_new_blocks: int
    moved: tuple[tuple[int, int], ...]  # (old block, new block) pairs
    drained: tuple[int, ...]  # old blocks left with no signed edges


@lru_cache(maxsize=None)
def _merge_plans(vertices: tuple[Slope, ...], unsigned: frozenset) -> tuple[_MergePlan, ...]:
    blocks, _ = _signed_sizes(vertices, unsigned)
    block_of = {e: bi for bi, blk in enumerate(blocks) for e in blk}
    plans = []
    for i in range(1, len(vertices) - 1):
        if not has_edge(vertices[i - 1], vertices[i + 1]):
            continue
        e_l, e_r = i - 1, i
        u_l, u_r = e_l in unsigned, e_r in unsigned
        if u_l and u_r:
            consumed: tuple[int, ...] = ()
        elif u_l or u_r:
            consumed = (block_of[e_r if u_l else e_l],)
        else:
            # a removable vertex always separates its edges into distinct
            # blocks: the outer pair has determinant 1 there, not 2
            assert block_of[e_l] != block_of[e_r]
            consumed = (block_of[e_l], block_of[e_r])
        new_vertices = vertices[:i] + vertices[i + 1 :]
        new_blocks = _block_ranges(new_vertices)
        new_block_of = {e: bi for bi, blk in enumerate(new_blocks) for e in blk}

        def remap(e: int) -> int:
            return e if e < e_l else e - 1

        merged_unsigned = u_l or u_r
        new_unsigned = frozenset(remap(e) for e in unsigned if e not in (e_l, e_r))
        if merged_unsigned:
            new_unsigned |= {e_l}
        moved = []
        drained = []
        for bi, blk in enumerate(blocks):
            targets = {
                new_block_of[remap(e)]
                for e in blk
                if e not in (e_l, e_r) and e not in unsigned
            }
            # the removed edges terminate their blocks, so survivors of one
            # old block always land in a single block of the new path
            assert len(targets) <= 1
            if targets:
                moved.append((bi, next(iter(targets))))
            else:
                drained.append(bi)
        plans.append(
            _MergePlan(
                new_vertices,
                new_unsigned,
                consumed,
                merged_unsigned,
                new_block_of[e_l],
                len(new_blocks),
                tuple(moved),
                tuple(drained),
            )
        )
    return tuple(plans)


def _successor_states(state: _State) -> list[_State]:
    """All shuffle classes reachable by one consistent shortening.

    For each removable interior vertex, every way of presenting its two
    incident edges with matching signs (or absorbing into an unsigned
    edge) is tried; the surviving minus counts carry over block by block,
    accumulating where the shortened path merges old blocks.
    """
    vertices, unsigned, counts = state
    _, sizes = _signed_sizes(vertices, unsigned)
    out: set[_State] = set()
    for plan in _merge_plans(vertices, unsigned):
        for sg in (Sign.PLUS, Sign.MINUS) if plan.consumed else (Sign.UNSIGNED,):
            if any(not _can_supply(counts[b], sizes[b], sg) for b in plan.consumed):
                continue
            rem = list(counts)
            if sg is Sign.MINUS:
                for b in plan.consumed:
                    rem[b] -= 1
            assert all(rem[bi] == 0 for bi in plan.drained)
            new_counts = [0] * plan.n_new_blocks
            for bi, nb in plan.moved:
                new_counts[nb] += rem[bi]
            if not plan.merged_unsigned and sg is Sign.MINUS:
                new_counts[plan.merged_block] += 1
            out.add((plan.new_vertices, plan.new_unsigned, tuple(new_counts)))
    return sorted(out, key=_state_sort_key)


def _state_sort_key(state: _State):
    vertices, unsigned, counts = state
    return (
        tuple((s.num, s.den) for s in vertices),
        tuple(sorted(unsigned)),
        counts,
    )


@lru_cache(maxsize=262144)
def shorten_to_minimal(state: _State) -> frozenset:
    """All minimal-path shuffle classes reachable by consistent shortenings.

    Memoized globally: shortening only ever shrinks the path, so results
    are context-free and shared across calls (stabilization chains hit
    the same intermediate states over and over).
    """
    vertices = state[0]
    target = _minimal_vertices(vertices[0], vertices[-1])
    if len(vertices) == len(target):
        assert vertices == target
        return frozenset({state})
    found: frozenset = frozenset()
    for nxt in _successor_states(state):
        found |= shorten_to_minimal(nxt)
    return found


def _state_of(d: DecoratedPath) -> _State:
    vertices = d.vertices
    unsigned = frozenset(i for i, s in enumerate(d.signs) if s is Sign.UNSIGNED)
    blocks = _block_ranges(vertices)
    counts = tuple(
        sum(1 for e in blk if d.signs[e] is Sign.MINUS) for blk in blocks
    )
    return vertices, unsigned, counts


def canonicalize(d: DecoratedPath) -> ShuffleClass:
    """Shuffle class of a decorated minimal path.

    Two decorations of the same minimal path are shuffle equivalent
    exactly when they canonicalize to the same value.  Non-minimal paths
    are rejected; their canonical form is not defined.
    """
    vertices = d.vertices
    if vertices != _minimal_vertices(vertices[0], vertices[-1]):
        raise DecorationError("canonical form is defined on minimal paths only")
    _, unsigned, counts = _state_of(d)
    return ShuffleClass(vertices, counts, tuple(sorted(unsigned)))


@dataclass(frozen=True)
class ShorteningResult:
    path: DecoratedPath
    consistent: bool


def shorten_once(d: DecoratedPath, i: int) -> ShorteningResult:
    """Remove interior vertex i, merging its two edges.

    The merge is consistent when the removed edges carry a common sign,
    which the new edge inherits, or when one of them is unsigned, in
    which case it absorbs the other and the new edge is unsigned.  An
    inconsistent merge (opposite signs) is reported through the flag; the
    returned path then carries the earlier edge's sign, a choice with no
    meaning since the structure is overtwisted.
    """
    vertices = d.vertices
    if not 1 <= i <= len(vertices) - 2:
        raise DecorationError("only interior vertices can be removed")
    if not has_edge(vertices[i - 1], vertices[i + 1]):
        raise DecorationError("the neighbors of the removed vertex must be adjacent")
    s_l, s_r = d.signs[i - 1], d.signs[i]
    if Sign.UNSIGNED in (s_l, s_r):
        merged, consistent = Sign.UNSIGNED, True
    elif s_l == s_r:
        merged, consistent = s_l, True
    else:
        merged, consistent = s_l, False
    new_path = FareyPath(vertices[:i] + vertices[i + 1 :])
    new_signs = d.signs[: i - 1] + (merged,) + d.signs[i + 1 :]
    return ShorteningResult(DecoratedPath(new_path, new_signs), consistent)


def _check_against_context(d: DecoratedPath, c: Context) -> None:
    vertices = d.vertices
    unsigned = [i for i, s in enumerate(d.signs) if s is Sign.UNSIGNED]
    if isinstance(c, ThickenedTorus):
        if unsigned:
            raise DecorationError("thickened torus paths carry a sign on every edge")
        if vertices[0] != c.s0 or vertices[-1] != c.s1:
            raise DecorationError("path endpoints do not match the boundary slopes")
    elif isinstance(c, LowerSolidTorus):
        if unsigned != [0]:
            raise DecorationError("a lower solid torus leaves exactly the first edge unsigned")
        if vertices[0] != c.meridian or vertices[-1] != c.boundary:
            raise DecorationError("path endpoints do not match the torus data")
    elif isinstance(c, UpperSolidTorus):
        if unsigned != [len(vertices) - 2]:
            raise DecorationError("an upper solid torus leaves exactly the last edge unsigned")
        if vertices[0] != c.boundary or vertices[-1] != c.meridian:
            raise DecorationError("path endpoints do not match the torus data")
    else:
        # a lens-space structure needs both terminal edges unsigned, which
        # a DecoratedPath cannot carry; tightness there is a counting
        # question answered by count_tight/enumerate_tight
        raise DecorationError("tightness of decorated paths is not defined on lens contexts")


def is_tight(d: DecoratedPath, c: Context) -> bool:
    """Decide tightness of the structure a decorated path describes.

    True exactly when some sequence of consistent shortenings, shuffling
    within continued fraction blocks between steps, reaches the minimal
    path for the given boundary data.
    """
    _check_against_context(d, c)
    return bool(shorten_to_minimal(_state_of(d)))


def count_tight(c: Context) -> int:
    """Number of tight structures on a context, up to isotopy.

    Product over the continued fraction blocks of the context's minimal
    path of (number of signed edges in the block + 1).
    """
    vertices, unsigned = _context_data(c)
    _, sizes = _signed_sizes(vertices, unsigned)
    total = 1
    for s in sizes:
        total *= s + 1
    return total


def enumerate_tight(c: Context) -> list[ShuffleClass]:
    """All tight structures on a context as shuffle classes."""
    vertices, unsigned = _context_data(c)
    _, sizes = _signed_sizes(vertices, unsigned)
    pos = tuple(sorted(unsigned))
    return [
        ShuffleClass(vertices, counts, pos)
        for counts in product(*(range(s + 1) for s in sizes))
    ]


def relative_euler(d: DecoratedPath) -> SignedVector:
    """Curve class Poincare dual to the relative Euler class.

    Sum over the signed edges of sign times the unreduced difference of
    the edge's endpoints; unsigned edges contribute nothing.
    """
    total = SignedVector(0, 0)
    vertices = d.vertices
    for e, sg in enumerate(d.signs):
        if sg is Sign.UNSIGNED:
            continue
        total = total + farey_diff(vertices[e + 1], vertices[e]).scaled(int(sg))
    return total


def euler_on_disk(d: DecoratedPath, meridian: Slope) -> int:
    """Relative Euler class evaluated on the meridian disk.

    Pairing of the relative Euler curve with the meridian class,
    normalized so that a single positive edge from -2 to -1 evaluated on
    the 0-meridian gives +1.
    """
    return cross(relative_euler(d), meridian)


@lru_cache(maxsize=None)
def _block_pairings(
    vertices: tuple[Slope, ...], unsigned: frozenset, meridian: Slope
) -> tuple[tuple[int, int], ...]:
    blocks, sizes = _signed_sizes(vertices, unsigned)
    out = []
    for blk, size in zip(blocks, sizes):
        diffs = {
            (d.a, d.b)
            for d in (farey_diff(vertices[e + 1], vertices[e]) for e in blk)
        }
        if len(diffs) != 1:
            raise DecorationError("block crosses an infinity representative change")
        a, b = next(iter(diffs))
        out.append((cross(SignedVector(a, b), meridian), size))
    return tuple(out)


def shuffle_euler_on_disk(sc: ShuffleClass, meridian: Slope) -> int:
    """euler_on_disk computed from a shuffle class.

    Well defined because all edges of one continued fraction block share
    the same endpoint difference, so only the per-block sign totals
    matter.
    """
    pairings = _block_pairings(sc.path, frozenset(sc.unsigned_positions), meridian)
    return sum(
        pairing * (size - 2 * minus)
        for (pairing, size), minus in zip(pairings, sc.minus_counts)
    )
