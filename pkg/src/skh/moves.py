"""Local moves on Morse tangle diagrams.

Each move rewrites a short window of the slice list and leaves the underlying
tangle unchanged up to planar isotopy, so the homology computed downstream is
unchanged as well (at fixed boundary orientations).  Moves come in five
families:

* Reidemeister 1: insert or remove a one-crossing kink on a strand.
* Reidemeister 2: insert or remove a cancelling pair of opposite crossings.
* Reidemeister 3: slide a strand across a crossing (the braid-like triple
  rewrite), legal only when the middle crossing matches one of the outer two.
* Cup-cap cancellation: insert or remove a zigzag (a cup immediately capped
  off against a neighbouring strand).
* Commutation: swap two adjacent slices whose supports are disjoint.

``apply_move`` validates the location and raises :class:`MoveError` when the
pattern does not match; ``legal_moves`` enumerates every applicable move on a
diagram, which the verification suites use to drive random walks.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .diagram import MorseSlice, SliceKind, TangleDiagram
from .errors import MoveError

__all__ = ["MoveKind", "MorseMove", "apply_move", "legal_moves"]


class MoveKind(enum.Enum):
    R1_INSERT = "r1-insert"
    R1_REMOVE = "r1-remove"
    R2_INSERT = "r2-insert"
    R2_REMOVE = "r2-remove"
    R3 = "r3"
    CUPCAP_INSERT = "cupcap-insert"
    CUPCAP_REMOVE = "cupcap-remove"
    COMMUTE = "commute"


@dataclass(frozen=True)
class MorseMove:
    """A move instance: what to do and where.

    ``index`` addresses the slice list: for inserts it is the insertion point
    (0..len), for removals and rewrites the index of the first slice of the
    pattern.  ``pos`` is the strand position parameter used by inserts.
    ``sign`` selects the crossing flavour (+1 for X+, -1 for X-); for R2 it
    selects the order of the pair.  ``side`` distinguishes the left and right
    variants of kinks and zigzags.
    """

    kind: MoveKind
    index: int
    pos: int = 0
    sign: int = 1
    side: str = "r"


def _cross(sign: int, pos: int) -> MorseSlice:
    kind = SliceKind.CROSS_POS if sign > 0 else SliceKind.CROSS_NEG
    return MorseSlice(kind, pos)


def _rebuild(d: TangleDiagram, slices: list[MorseSlice]) -> TangleDiagram:
    return TangleDiagram(d.n_bottom, tuple(slices), d.orient)


def _width_at(d: TangleDiagram, index: int) -> int:
    if not 0 <= index <= len(d.slices):
        raise MoveError(f"slice index {index} out of range")
    return d.widths[index]


# ---------------------------------------------------------------------------
# Individual move implementations
# ---------------------------------------------------------------------------


def _r1_insert(d: TangleDiagram, m: MorseMove) -> TangleDiagram:
    w = _width_at(d, m.index)
    if not 1 <= m.pos <= w:
        raise MoveError(f"no strand at position {m.pos} for R1 insert")
    if m.side == "r":
        window = [
            MorseSlice(SliceKind.CUP, m.pos + 1),
            _cross(m.sign, m.pos),
            MorseSlice(SliceKind.CAP, m.pos + 1),
        ]
    elif m.side == "l":
        window = [
            MorseSlice(SliceKind.CUP, m.pos),
            _cross(m.sign, m.pos + 1),
            MorseSlice(SliceKind.CAP, m.pos),
        ]
    else:
        raise MoveError(f"unknown R1 side {m.side!r}")
    slices = list(d.slices)
    slices[m.index : m.index] = window
    return _rebuild(d, slices)


def _match_r1(slices: tuple[MorseSlice, ...], i: int) -> bool:
    if i + 3 > len(slices):
        return False
    a, b, c = slices[i : i + 3]
    if a.kind is not SliceKind.CUP or c.kind is not SliceKind.CAP:
        return False
    if not b.kind.is_crossing or a.pos != c.pos:
        return False
    # Right kink: cup at p+1, crossing at p.  Left kink: cup at p, crossing
    # at p+1.
    return b.pos in (a.pos - 1, a.pos + 1)


def _r1_remove(d: TangleDiagram, m: MorseMove) -> TangleDiagram:
    if not _match_r1(d.slices, m.index):
        raise MoveError(f"no R1 kink at slice index {m.index}")
    slices = list(d.slices)
    del slices[m.index : m.index + 3]
    return _rebuild(d, slices)


def _r2_insert(d: TangleDiagram, m: MorseMove) -> TangleDiagram:
    w = _width_at(d, m.index)
    if not 1 <= m.pos <= w - 1:
        raise MoveError(f"need two adjacent strands at position {m.pos} for R2")
    window = [_cross(m.sign, m.pos), _cross(-m.sign, m.pos)]
    slices = list(d.slices)
    slices[m.index : m.index] = window
    return _rebuild(d, slices)


def _match_r2(slices: tuple[MorseSlice, ...], i: int) -> bool:
    if i + 2 > len(slices):
        return False
    a, b = slices[i : i + 2]
    if not (a.kind.is_crossing and b.kind.is_crossing):
        return False
    return a.pos == b.pos and a.kind is not b.kind


def _r2_remove(d: TangleDiagram, m: MorseMove) -> TangleDiagram:
    if not _match_r2(d.slices, m.index):
        raise MoveError(f"no cancelling crossing pair at slice index {m.index}")
    slices = list(d.slices)
    del slices[m.index : m.index + 2]
    return _rebuild(d, slices)


def _match_r3(slices: tuple[MorseSlice, ...], i: int) -> tuple[MorseSlice, ...] | None:
    """Return the rewritten triple if an R3 slide applies at ``i``."""
    if i + 3 > len(slices):
        return None
    a, b, c = slices[i : i + 3]
    if not (a.kind.is_crossing and b.kind.is_crossing and c.kind.is_crossing):
        return None
    if a.pos != c.pos or abs(b.pos - a.pos) != 1:
        return None
    # The slide is only an isotopy when the middle crossing agrees with one
    # of the outer ones (the mixed case changes the braid element: compare
    # exponent sums of s1 s2^-1 s1 and s2^-1 s1 s2^-1).
    if b.kind is not a.kind and b.kind is not c.kind:
        return None
    return (
        MorseSlice(c.kind, b.pos),
        MorseSlice(b.kind, a.pos),
        MorseSlice(a.kind, b.pos),
    )


def _r3(d: TangleDiagram, m: MorseMove) -> TangleDiagram:
    new = _match_r3(d.slices, m.index)
    if new is None:
        raise MoveError(f"no R3 triple at slice index {m.index}")
    slices = list(d.slices)
    slices[m.index : m.index + 3] = new
    return _rebuild(d, slices)


def _cupcap_insert(d: TangleDiagram, m: MorseMove) -> TangleDiagram:
    w = _width_at(d, m.index)
    if not 1 <= m.pos <= w:
        raise MoveError(f"no strand at position {m.pos} for zigzag insert")
    if m.side == "r":
        window = [MorseSlice(SliceKind.CUP, m.pos), MorseSlice(SliceKind.CAP, m.pos + 1)]
    elif m.side == "l":
        window = [MorseSlice(SliceKind.CUP, m.pos + 1), MorseSlice(SliceKind.CAP, m.pos)]
    else:
        raise MoveError(f"unknown zigzag side {m.side!r}")
    slices = list(d.slices)
    slices[m.index : m.index] = window
    return _rebuild(d, slices)


def _match_cupcap(slices: tuple[MorseSlice, ...], i: int) -> bool:
    if i + 2 > len(slices):
        return False
    a, b = slices[i : i + 2]
    if a.kind is not SliceKind.CUP or b.kind is not SliceKind.CAP:
        return False
    return b.pos in (a.pos - 1, a.pos + 1)


def _cupcap_remove(d: TangleDiagram, m: MorseMove) -> TangleDiagram:
    if not _match_cupcap(d.slices, m.index):
        raise MoveError(f"no zigzag at slice index {m.index}")
    slices = list(d.slices)
    del slices[m.index : m.index + 2]
    return _rebuild(d, slices)


def _shift_after(first: MorseSlice, pos: int) -> int | None:
    """Map a position through the width change of ``first``, or None on overlap.

    ``pos`` is the left leg of a two-strand support expressed in the
    coordinates *after* ``first`` acts; the result is the same support in the
    coordinates *before* ``first`` acts.
    """
    lo, hi = pos, pos + 1
    q = first.pos
    if first.kind is SliceKind.CUP:
        # first created strands at q, q+1; the support may not touch them.
        if hi < q:
            return pos
        if lo > q + 1:
            return pos - 2
        return None
    if first.kind is SliceKind.CAP:
        # first consumed strands at q, q+1; a support straddling the gap
        # (lo == q-1, hi == q) is not contiguous before the cap acts.
        if hi < q:
            return pos
        if lo >= q:
            return pos + 2
        return None
    # Crossing: widths unchanged, supports must simply be disjoint.
    if hi < q or lo > q + 1:
        return pos
    return None


def _shift_before(second: MorseSlice, pos: int) -> int:
    """Map a position forward through the width change of ``second``."""
    q = second.pos
    if second.kind is SliceKind.CUP:
        return pos + 2 if pos >= q else pos
    if second.kind is SliceKind.CAP:
        return pos - 2 if pos > q + 1 else pos
    return pos


def _commute(d: TangleDiagram, m: MorseMove) -> TangleDiagram:
    i = m.index
    if i + 2 > len(d.slices):
        raise MoveError(f"no slice pair at index {i}")
    s, t = d.slices[i], d.slices[i + 1]
    t_pos = _shift_after(s, t.pos)
    if t_pos is None:
        raise MoveError(f"slices at index {i} overlap and do not commute")
    t_new = MorseSlice(t.kind, t_pos)
    s_new = MorseSlice(s.kind, _shift_before(t_new, s.pos))
    slices = list(d.slices)
    slices[i], slices[i + 1] = t_new, s_new
    return _rebuild(d, slices)


_APPLY = {
    MoveKind.R1_INSERT: _r1_insert,
    MoveKind.R1_REMOVE: _r1_remove,
    MoveKind.R2_INSERT: _r2_insert,
    MoveKind.R2_REMOVE: _r2_remove,
    MoveKind.R3: _r3,
    MoveKind.CUPCAP_INSERT: _cupcap_insert,
    MoveKind.CUPCAP_REMOVE: _cupcap_remove,
    MoveKind.COMMUTE: _commute,
}


def apply_move(d: TangleDiagram, move: MorseMove) -> TangleDiagram:
    """Apply a local move, returning a new diagram.

    Raises :class:`MoveError` if the move is not legal at its location.
    """
    return _APPLY[move.kind](d, move)


def legal_moves(
    d: TangleDiagram, kinds: set[MoveKind] | None = None
) -> list[MorseMove]:
    """Enumerate every legal move on ``d``, optionally filtered by kind."""
    want = kinds if kinds is not None else set(MoveKind)
    out: list[MorseMove] = []
    n = len(d.slices)

    if MoveKind.R1_INSERT in want or MoveKind.R2_INSERT in want or MoveKind.CUPCAP_INSERT in want:
        for i in range(n + 1):
            w = d.widths[i]
            if MoveKind.R1_INSERT in want:
                for p in range(1, w + 1):
                    for sign in (1, -1):
                        for side in ("l", "r"):
                            out.append(MorseMove(MoveKind.R1_INSERT, i, p, sign, side))
            if MoveKind.R2_INSERT in want:
                for p in range(1, w):
                    for sign in (1, -1):
                        out.append(MorseMove(MoveKind.R2_INSERT, i, p, sign))
            if MoveKind.CUPCAP_INSERT in want:
                for p in range(1, w + 1):
                    for side in ("l", "r"):
                        out.append(MorseMove(MoveKind.CUPCAP_INSERT, i, p, side=side))

    for i in range(n):
        if MoveKind.R1_REMOVE in want and _match_r1(d.slices, i):
            out.append(MorseMove(MoveKind.R1_REMOVE, i))
        if MoveKind.R2_REMOVE in want and _match_r2(d.slices, i):
            out.append(MorseMove(MoveKind.R2_REMOVE, i))
        if MoveKind.R3 in want and _match_r3(d.slices, i) is not None:
            out.append(MorseMove(MoveKind.R3, i))
        if MoveKind.CUPCAP_REMOVE in want and _match_cupcap(d.slices, i):
            out.append(MorseMove(MoveKind.CUPCAP_REMOVE, i))
        if MoveKind.COMMUTE in want and i + 1 < n:
            if _shift_after(d.slices[i], d.slices[i + 1].pos) is not None:
                out.append(MorseMove(MoveKind.COMMUTE, i))
    return out
