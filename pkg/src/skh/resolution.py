"""Complete resolutions of a diagram and the saddles between them.

A diagram with c crossings has 2^c complete resolutions, indexed by a bit
per crossing in slice order. Bit conventions: for an ``X+`` crossing bit 0
keeps the two strands vertical and bit 1 replaces them by a turnback (cap
below, cup above); for ``X-`` the roles are swapped, so that bit 0 is always
the smoothing that matches the braid-like picture of a positive crossing.

Resolving replaces every crossing by one of its two smoothings, leaving a
crossingless diagram whose components are closed circles and boundary arcs.
Arcs are classified by where their endpoints lie: both on the bottom, both
on the top, or one on each. A resolution *backtracks* when it contains an
arc with both endpoints on the top boundary; such resolutions contribute
nothing to the complex. For balanced tangles the counts of bottom-bottom
and top-top arcs agree in every resolution, so backtracking can be detected
from bottom-bottom arcs as well, which the sweep exploits to abort early.

For an annular closure the top boundary is glued back to the bottom; arcs
concatenate into circles that wind around the annulus. A circle is
*essential* when its signed number of passes through the glue (top i to
bottom i counts +1, the reverse -1) is nonzero.

Components carry a stable *anchor*: the smallest birth tag among the wires
they contain, where wires are born at bottom endpoints, cup slices, and
turnback smoothings. Two resolutions that differ at a single crossing agree
on all wires except the turnback's own, so anchors identify corresponding
components across a cube edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from .diagram import AnnularDiagram, Endpoint, SliceKind, TangleDiagram
from .errors import UnbalancedError

__all__ = [
    "ComponentKind",
    "ResolvedComponent",
    "Resolution",
    "SaddleKind",
    "SaddleType",
    "resolve",
    "backtracks",
    "saddle_classify",
]


class ComponentKind(Enum):
    CLOSED_TRIVIAL = "closed-trivial"
    CLOSED_ESSENTIAL = "closed-essential"
    ARC_VERTICAL = "arc-vertical"
    ARC_BOTTOM = "arc-bottom"
    ARC_TOP = "arc-top"

    @property
    def is_closed(self) -> bool:
        return self in (ComponentKind.CLOSED_TRIVIAL, ComponentKind.CLOSED_ESSENTIAL)


# A wire birth tag: ("b", endpoint) < ("c", slice) < ("x", slice), total order.
Tag = tuple[str, int]

# A component reference inside one resolution: ("circle"|"arc", index).
CompRef = tuple[str, int]


@dataclass(frozen=True)
class ResolvedComponent:
    kind: ComponentKind
    anchor: Tag
    endpoints: tuple[Endpoint, ...] = ()
    winding: int = 0

    @property
    def essential(self) -> bool:
        return self.winding != 0


class Resolution:
    """One complete resolution, with component structure and saddle sites.

    ``circles`` and ``arcs`` are each sorted by anchor; generator wedge
    subsets index into ``circles``. For annular resolutions the arcs have
    been concatenated through the glue, so ``arcs`` is empty and ``circles``
    includes the essential ones.
    """

    __slots__ = (
        "bits",
        "annular",
        "backtracking",
        "circles",
        "arcs",
        "_parent",
        "_wire_of_tag",
        "_root_ref",
    )

    def __init__(
        self,
        bits: int,
        annular: bool,
        backtracking: bool,
        circles: tuple[ResolvedComponent, ...],
        arcs: tuple[ResolvedComponent, ...],
        parent: list[int],
        wire_of_tag: dict[Tag, int],
        root_ref: dict[int, CompRef],
    ):
        self.bits = bits
        self.annular = annular
        self.backtracking = backtracking
        self.circles = circles
        self.arcs = arcs
        self._parent = parent
        self._wire_of_tag = wire_of_tag
        self._root_ref = root_ref

    @property
    def n_circles(self) -> int:
        return len(self.circles)

    @property
    def components(self) -> tuple[ResolvedComponent, ...]:
        return self.circles + self.arcs

    def comp_of_tag(self, tag: Tag) -> CompRef:
        """Component containing the wire born with ``tag``."""
        w = self._wire_of_tag[tag]
        parent = self._parent
        while parent[w] != w:
            parent[w] = parent[parent[w]]
            w = parent[w]
        return self._root_ref[w]

    def circle_index_by_anchor(self) -> dict[Tag, int]:
        return {c.anchor: i for i, c in enumerate(self.circles)}


def resolve(
    d: TangleDiagram | AnnularDiagram,
    bits: int,
    *,
    early_exit: bool = False,
) -> Resolution | None:
    """Resolve every crossing of ``d`` according to ``bits``.

    Tangle input must be balanced. With ``early_exit`` the sweep returns
    None as soon as the resolution is known to backtrack (tangle mode only);
    otherwise the full component census is produced, with ``backtracking``
    set accordingly.
    """
    annular = isinstance(d, AnnularDiagram)
    core = d.core if annular else d
    if not core.balanced:
        raise UnbalancedError(
            f"resolutions are defined for balanced tangles, got "
            f"{core.n_bottom} bottom vs {core.n_top} top endpoints"
        )
    if not 0 <= bits < (1 << core.n_crossings):
        raise ValueError(f"bits {bits:#x} out of range for {core.n_crossings} crossings")
    return _sweep(core, bits, annular=annular, early_exit=early_exit and not annular)


def backtracks(d: TangleDiagram, bits: int) -> bool:
    """True when resolution ``bits`` of ``d`` has a top-top arc."""
    res = resolve(d, bits, early_exit=True)
    return res is None or res.backtracking


def _sweep(
    core: TangleDiagram,
    bits: int,
    *,
    annular: bool,
    early_exit: bool,
) -> Resolution | None:
    """Single bottom-to-top pass tracking live wires with a union-find."""
    parent: list[int] = []
    min_tag: list[Tag] = []
    open_ends: list[int] = []
    eps: list[list[Endpoint]] = []
    wire_of_tag: dict[Tag, int] = {}

    circle_roots: list[tuple[Tag, int]] = []  # (anchor, root) closed during sweep
    arc_roots: list[tuple[Tag, int, tuple[Endpoint, ...]]] = []
    dead = False  # early-exit flag

    def new_wire(tag: Tag, ends: int, endpoints: list[Endpoint]) -> int:
        w = len(parent)
        parent.append(w)
        min_tag.append(tag)
        open_ends.append(ends)
        eps.append(endpoints)
        wire_of_tag[tag] = w
        return w

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def complete(r: int) -> None:
        nonlocal dead
        e = eps[r]
        if not e:
            circle_roots.append((min_tag[r], r))
            return
        assert len(e) == 2, "a finished component has 0 or 2 endpoints"
        arc_roots.append((min_tag[r], r, tuple(sorted(e))))
        if early_exit and (e[0][0] == e[1][0]):
            # both endpoints on the same boundary: for a balanced tangle a
            # bottom-bottom arc forces a top-top arc, so either way the
            # resolution backtracks
            dead = True

    def join(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra == rb:
            open_ends[ra] -= 2
            if open_ends[ra] == 0:
                complete(ra)
            return
        parent[rb] = ra
        open_ends[ra] += open_ends[rb] - 2
        if min_tag[rb] < min_tag[ra]:
            min_tag[ra] = min_tag[rb]
        eps[ra].extend(eps[rb])
        if open_ends[ra] == 0:
            complete(ra)

    active = [new_wire(("b", i), 1, [("b", i)]) for i in range(1, core.n_bottom + 1)]
    xi = 0
    for idx, s in enumerate(core.slices):
        q = s.pos
        if s.kind is SliceKind.CUP:
            w = new_wire(("c", idx), 2, [])
            active[q - 1 : q - 1] = [w, w]
        elif s.kind is SliceKind.CAP:
            a, b = active[q - 1], active[q]
            del active[q - 1 : q + 1]
            join(a, b)
            if dead:
                return None
        else:
            bit = (bits >> xi) & 1
            xi += 1
            turn = bit == (1 if s.kind is SliceKind.CROSS_POS else 0)
            if turn:
                a, b = active[q - 1], active[q]
                join(a, b)
                if dead:
                    return None
                w = new_wire(("x", idx), 2, [])
                active[q - 1] = w
                active[q] = w

    for i, w in enumerate(active):
        r = find(w)
        open_ends[r] -= 1
        eps[r].append(("t", i + 1))
        if open_ends[r] == 0:
            complete(r)
            if dead:
                return None

    # census
    root_ref: dict[int, CompRef] = {}
    backtracking = False
    circles: list[ResolvedComponent] = []
    arcs: list[ResolvedComponent] = []

    circle_roots.sort()
    trivial = [
        ResolvedComponent(ComponentKind.CLOSED_TRIVIAL, anchor, (), 0)
        for anchor, _ in circle_roots
    ]

    if not annular:
        n_bb = n_tt = 0
        arc_roots.sort()
        for anchor, _, endpoints in arc_roots:
            kinds = {endpoints[0][0], endpoints[1][0]}
            if kinds == {"b"}:
                kind = ComponentKind.ARC_BOTTOM
                n_bb += 1
            elif kinds == {"t"}:
                kind = ComponentKind.ARC_TOP
                n_tt += 1
                backtracking = True
            else:
                kind = ComponentKind.ARC_VERTICAL
            arcs.append(ResolvedComponent(kind, anchor, endpoints, 0))
        assert n_bb == n_tt, "balanced tangles pair bottom-bottom with top-top arcs"
        circles = trivial
        for i, (_, r) in enumerate(circle_roots):
            root_ref[r] = ("circle", i)
        for i, (_, r, _) in enumerate(arc_roots):
            root_ref[r] = ("arc", i)
    else:
        # glue top i to bottom i and walk the resulting cycles
        ep_root: dict[Endpoint, int] = {}
        other_end: dict[tuple[int, Endpoint], Endpoint] = {}
        for _, r, endpoints in arc_roots:
            e0, e1 = endpoints
            ep_root[e0] = r
            ep_root[e1] = r
            other_end[(r, e0)] = e1
            other_end[(r, e1)] = e0
        seen: set[int] = set()
        closure: list[tuple[Tag, int, list[int]]] = []  # (anchor, winding, roots)
        for _, start_root, endpoints in arc_roots:
            if start_root in seen:
                continue
            members: list[int] = []
            winding = 0
            anchor: Tag | None = None
            r, ep = start_root, endpoints[0]
            while r not in seen:
                seen.add(r)
                members.append(r)
                if anchor is None or min_tag[r] < anchor:
                    anchor = min_tag[r]
                out = other_end[(r, ep)]
                if out[0] == "t":
                    winding += 1
                    ep = ("b", out[1])
                else:
                    winding -= 1
                    ep = ("t", out[1])
                r = ep_root[ep]
            assert anchor is not None
            closure.append((anchor, winding, members))

        allc: list[tuple[Tag, ResolvedComponent, list[int]]] = []
        for comp, (_, r) in zip(trivial, circle_roots):
            allc.append((comp.anchor, comp, [r]))
        for anchor, winding, members in closure:
            kind = (
                ComponentKind.CLOSED_ESSENTIAL
                if winding != 0
                else ComponentKind.CLOSED_TRIVIAL
            )
            allc.append((anchor, ResolvedComponent(kind, anchor, (), winding), members))
        allc.sort(key=lambda t: t[0])
        for i, (_, comp, members) in enumerate(allc):
            circles.append(comp)
            for r in members:
                root_ref[r] = ("circle", i)

    return Resolution(
        bits=bits,
        annular=annular,
        backtracking=backtracking,
        circles=tuple(circles),
        arcs=tuple(arcs),
        parent=parent,
        wire_of_tag=wire_of_tag,
        root_ref=root_ref,
    )


# ---------------------------------------------------------------------------
# saddles
# ---------------------------------------------------------------------------


class SaddleKind(Enum):
    MERGE_CLOSED_CLOSED = "merge-closed-closed"
    MERGE_CLOSED_ARC = "merge-closed-arc"
    SPLIT_INTO_CLOSED_CLOSED = "split-into-closed-closed"
    SPLIT_INTO_CLOSED_ARC = "split-into-closed-arc"
    ZERO_MAP = "zero-map"


@dataclass(frozen=True)
class SaddleType:
    """Classification of one cube edge at crossing ordinal ``crossing``.

    ``sources`` are component references in the lower resolution and
    ``targets`` in the upper one; both are empty for ZERO_MAP.
    """

    kind: SaddleKind
    crossing: int
    sources: tuple[CompRef, ...] = ()
    targets: tuple[CompRef, ...] = ()


def _site_tags(core: TangleDiagram, bits: int, ordinal: int) -> tuple[Tag, Tag]:
    """Birth tags of the two wires entering crossing ``ordinal`` from below.

    These depend only on the slices and bits strictly below the crossing, so
    they agree between the two resolutions of a cube edge at that crossing.
    """
    slice_idx = core.crossings[ordinal]
    # cheap replay of the sweep's active-list bookkeeping, tags only
    active: list[Tag] = [("b", i) for i in range(1, core.n_bottom + 1)]
    xi = 0
    for idx, s in enumerate(core.slices[:slice_idx]):
        q = s.pos
        if s.kind is SliceKind.CUP:
            active[q - 1 : q - 1] = [("c", idx), ("c", idx)]
        elif s.kind is SliceKind.CAP:
            del active[q - 1 : q + 1]
        else:
            bit = (bits >> xi) & 1
            xi += 1
            if bit == (1 if s.kind is SliceKind.CROSS_POS else 0):
                active[s.pos - 1] = ("x", idx)
                active[s.pos] = ("x", idx)
    q = core.slices[slice_idx].pos
    return active[q - 1], active[q]


def classify_edge(
    core: TangleDiagram,
    res_lo: Resolution,
    res_hi: Resolution,
    ordinal: int,
) -> SaddleType:
    """Classify the cube edge lo -> hi differing at crossing ``ordinal``."""
    if res_lo.backtracking or res_hi.backtracking:
        return SaddleType(SaddleKind.ZERO_MAP, ordinal)

    slice_idx = core.crossings[ordinal]
    t1, t2 = _site_tags(core, res_lo.bits, ordinal)
    turn_hi = core.slices[slice_idx].kind is SliceKind.CROSS_POS
    vert, turn = (res_lo, res_hi) if turn_hi else (res_hi, res_lo)

    a, b = vert.comp_of_tag(t1), vert.comp_of_tag(t2)
    cap_c = turn.comp_of_tag(t1)
    assert cap_c == turn.comp_of_tag(t2)
    cup_c = turn.comp_of_tag(("x", slice_idx))

    if turn_hi:
        if a != b:
            assert cap_c == cup_c, "merge produces a single component"
            src, tgt = (a, b), (cap_c,)
        else:
            assert cap_c != cup_c, "split produces two components"
            src, tgt = (a,), (cap_c, cup_c)
    else:
        if cap_c != cup_c:
            assert a == b, "merge produces a single component"
            src, tgt = (cap_c, cup_c), (a,)
        else:
            assert a != b, "split produces two components"
            src, tgt = (cap_c,), (a, b)

    if len(src) == 2:
        src_kinds = sorted(ref[0] for ref in src)
        assert src_kinds != ["arc", "arc"], (
            "an arc-arc saddle always has a backtracking side"
        )
        if src_kinds == ["circle", "circle"]:
            assert tgt[0][0] == "circle"
            kind = SaddleKind.MERGE_CLOSED_CLOSED
        else:
            assert tgt[0][0] == "arc"
            kind = SaddleKind.MERGE_CLOSED_ARC
    else:
        tgt_kinds = sorted(ref[0] for ref in tgt)
        if src[0][0] == "circle":
            assert tgt_kinds == ["circle", "circle"]
            kind = SaddleKind.SPLIT_INTO_CLOSED_CLOSED
        else:
            assert tgt_kinds == ["arc", "circle"]
            kind = SaddleKind.SPLIT_INTO_CLOSED_ARC
    return SaddleType(kind, ordinal, src, tgt)


def saddle_classify(
    d: TangleDiagram | AnnularDiagram,
    bits_lo: int,
    bits_hi: int,
) -> SaddleType:
    """Classify the saddle between two resolutions differing in one bit."""
    diff = bits_lo ^ bits_hi
    if bits_hi <= bits_lo or diff & (diff - 1) or not (bits_hi & diff):
        raise ValueError("resolutions must differ by setting exactly one bit")
    ordinal = diff.bit_length() - 1
    core = d.core if isinstance(d, AnnularDiagram) else d
    res_lo = resolve(d, bits_lo)
    res_hi = resolve(d, bits_hi)
    assert res_lo is not None and res_hi is not None
    return classify_edge(core, res_lo, res_hi, ordinal)
