"""Morse-presented tangle diagrams in the thickened disk.

A diagram is a vertical stack of elementary slices read bottom to top. Each
slice acts at a 1-based horizontal position on the strands currently alive:

* ``X+ p``  - crossing of strands p, p+1; the strand entering at p (the "/"
  pass) goes over,
* ``X- p``  - crossing of strands p, p+1; the strand entering at p+1 (the
  "\\" pass) goes over,
* ``CUP p`` - a new adjacent pair of strands is born at positions p, p+1,
* ``CAP p`` - strands p and p+1 are joined and die.

A diagram with ``n_bottom`` endpoints on the lower boundary is *balanced*
when the number of surviving endpoints on the upper boundary equals
``n_bottom``. Balanced diagrams can be closed around the annulus by gluing
top endpoint i to bottom endpoint i, which is what :class:`AnnularDiagram`
represents.

Orientations: every strand carries a direction. Explicit directions are
declared per bottom endpoint (``u`` into the diagram, ``d`` out of it);
undeclared components default to "up at the first endpoint met when tracing
from the lower-left", and closed components to "up at the left leg of their
lowest cup". Crossing signs follow the right-handed convention in which a
braid generator with all strands upward is positive.
"""

from __future__ import annotations

import hashlib
from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    CompositionError,
    DiagramParseError,
    DiagramStructureError,
    OrientationError,
    UnbalancedError,
)

__all__ = [
    "SliceKind",
    "MorseSlice",
    "TangleDiagram",
    "AnnularDiagram",
    "ValidationReport",
    "parse",
    "parse_tangle",
    "to_text",
    "input_digest",
    "validate",
    "compose",
    "juxtapose",
    "annular_closure",
    "identity_tangle",
    "braid_word_diagram",
    "turnback_tangle",
    "cut_braid_closure",
    "unknot_cut",
    "trefoil_cut",
    "figure_eight_cut",
]


class SliceKind(Enum):
    """The four elementary Morse slices."""

    CROSS_POS = "X+"
    CROSS_NEG = "X-"
    CUP = "CUP"
    CAP = "CAP"

    @property
    def is_crossing(self) -> bool:
        return self in (SliceKind.CROSS_POS, SliceKind.CROSS_NEG)


_TOKEN_TO_KIND = {k.value: k for k in SliceKind}


@dataclass(frozen=True)
class MorseSlice:
    """One elementary slice acting at 1-based position ``pos``."""

    kind: SliceKind
    pos: int

    def __post_init__(self) -> None:
        if self.pos < 1:
            raise DiagramStructureError(f"slice position must be >= 1, got {self.pos}")

    @property
    def token(self) -> str:
        return f"{self.kind.value} {self.pos}"


# A boundary endpoint: ("b", i) on the bottom, ("t", i) on the top, 1-based.
Endpoint = tuple[str, int]


@dataclass(frozen=True)
class _Strand:
    """One traced component of the underlying 4-valent diagram.

    ``endpoints`` is empty for closed components, otherwise the pair in
    traversal order. ``passes`` records, per crossing visit, the slice index,
    which diagonal was used ("slash" enters at p and leaves at p+1, "back"
    the other), and whether the pass went upward as traversed.
    """

    endpoints: tuple[Endpoint, ...]
    passes: tuple[tuple[int, str, bool], ...]
    or_dir: int  # +1 = as traversed, -1 = reversed

    @property
    def closed(self) -> bool:
        return not self.endpoints


@dataclass(frozen=True)
class TangleDiagram:
    """An admissible tangle diagram given by a slice presentation.

    Construction validates the geometry (every slice must act inside the
    current width) and, when explicit orientation flags are present, their
    consistency. Diagrams may be unbalanced; operations that need a balanced
    tangle raise :class:`UnbalancedError` themselves.
    """

    n_bottom: int
    slices: tuple[MorseSlice, ...] = ()
    orient: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if self.n_bottom < 0:
            raise DiagramStructureError("n_bottom must be >= 0")
        if not isinstance(self.slices, tuple):
            object.__setattr__(self, "slices", tuple(self.slices))
        if self.orient is not None:
            if not isinstance(self.orient, tuple):
                object.__setattr__(self, "orient", tuple(self.orient))
            if len(self.orient) != self.n_bottom:
                raise OrientationError(
                    f"orient declares {len(self.orient)} flags for "
                    f"{self.n_bottom} bottom endpoints"
                )
            bad = [f for f in self.orient if f not in ("u", "d")]
            if bad:
                raise OrientationError(f"orientation flags must be 'u' or 'd', got {bad!r}")
        self.widths  # validate slice geometry eagerly
        if self.orient is not None:
            self._paths  # surface inconsistent flags eagerly

    # -- geometry -----------------------------------------------------------

    @cached_property
    def widths(self) -> tuple[int, ...]:
        """Strand count at every level, from below slice 0 to above the last."""
        w = self.n_bottom
        out = [w]
        for idx, s in enumerate(self.slices):
            if s.kind is SliceKind.CUP:
                if s.pos > w + 1:
                    raise DiagramStructureError(
                        f"slice {idx}: CUP {s.pos} outside width {w}"
                    )
                w += 2
            elif s.kind is SliceKind.CAP:
                if s.pos + 1 > w:
                    raise DiagramStructureError(
                        f"slice {idx}: CAP {s.pos} needs strands {s.pos},{s.pos + 1} "
                        f"but width is {w}"
                    )
                w -= 2
            else:
                if s.pos + 1 > w:
                    raise DiagramStructureError(
                        f"slice {idx}: {s.kind.value} {s.pos} needs strands "
                        f"{s.pos},{s.pos + 1} but width is {w}"
                    )
            out.append(w)
        return tuple(out)

    @property
    def n_top(self) -> int:
        return self.widths[-1]

    @property
    def balanced(self) -> bool:
        return self.n_top == self.n_bottom

    @cached_property
    def crossings(self) -> tuple[int, ...]:
        """Slice indices of the crossings, in order."""
        return tuple(i for i, s in enumerate(self.slices) if s.kind.is_crossing)

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    # -- strand tracing and orientations -------------------------------------

    @cached_property
    def _paths(self) -> tuple[tuple[_Strand, ...], dict[int, int]]:
        return _trace_paths(self)

    @property
    def strands(self) -> tuple[_Strand, ...]:
        return self._paths[0]

    @cached_property
    def crossing_signs(self) -> dict[int, int]:
        """Sign (+1/-1) per crossing slice index, under the strand orientations."""
        return self._paths[1]

    @property
    def n_plus(self) -> int:
        return sum(1 for v in self.crossing_signs.values() if v > 0)

    @property
    def n_minus(self) -> int:
        return sum(1 for v in self.crossing_signs.values() if v < 0)

    @property
    def has_closed_components(self) -> bool:
        return any(s.closed for s in self.strands)

    @cached_property
    def is_string_link_shape(self) -> bool:
        """True when every component runs bottom to top and none is closed."""
        for s in self.strands:
            if s.closed:
                return False
            kinds = sorted(kind for kind, _ in s.endpoints)
            if kinds != ["b", "t"]:
                return False
        return True

    @cached_property
    def derived_orient(self) -> tuple[str, ...]:
        """Effective 'u'/'d' direction at each bottom endpoint after defaults."""
        flags: dict[int, str] = {}
        for s in self.strands:
            if s.closed:
                continue
            for at_start, (kind, pos) in ((True, s.endpoints[0]), (False, s.endpoints[-1])):
                if kind != "b":
                    continue
                as_traversed = "u" if at_start else "d"
                if s.or_dir < 0:
                    as_traversed = "d" if as_traversed == "u" else "u"
                flags[pos] = as_traversed
        return tuple(flags[i] for i in range(1, self.n_bottom + 1))

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True)
class AnnularDiagram:
    """A balanced tangle closed around the annulus (top i glued to bottom i).

    ``wrapping`` is an optional user assertion that the closed link realizes
    wrapping number equal to the cut size m; nothing is verified beyond
    m >= wrapping.
    """

    core: TangleDiagram
    wrapping: int | None = None

    def __post_init__(self) -> None:
        if not self.core.balanced:
            raise UnbalancedError(
                f"annular closure needs a balanced tangle, got "
                f"{self.core.n_bottom} bottom vs {self.core.n_top} top endpoints"
            )
        if self.wrapping is not None and self.wrapping > self.m:
            raise DiagramStructureError(
                f"asserted wrapping {self.wrapping} exceeds cut size m={self.m}"
            )

    @property
    def m(self) -> int:
        """Number of times the closed diagram meets the annulus cut."""
        return self.core.n_bottom

    def __str__(self) -> str:
        return to_text(self)


@dataclass
class ValidationReport:
    """Structural summary of a diagram; ``errors`` empty means all checks pass."""

    n_bottom: int
    n_top: int
    balanced: bool
    n_crossings: int
    n_plus: int
    n_minus: int
    has_closed_components: bool
    is_string_link_shape: bool
    annular: bool
    errors: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.errors


# ---------------------------------------------------------------------------
# strand tracing
# ---------------------------------------------------------------------------


def _trace_paths(d: TangleDiagram) -> tuple[tuple[_Strand, ...], dict[int, int]]:
    """Walk the underlying 4-valent graph of the diagram.

    Returns the traced components and the crossing signs induced by the
    effective orientations. Raises OrientationError when declared flags
    conflict along a component.
    """
    n_levels = len(d.slices)
    if n_levels == 0:
        strands = tuple(
            _Strand(endpoints=(("b", p), ("t", p)), passes=(), or_dir=_or_dir_open(d, (("b", p), ("t", p))))
            for p in range(1, d.n_bottom + 1)
        )
        return strands, {}

    # Build the port graph. A port is (level, position); levels run 0..n_levels.
    edges: list[tuple[tuple[int, int], tuple[int, int], str, tuple | None]] = []
    adj: dict[tuple[int, int], list[int]] = defaultdict(list)

    def add(a: tuple[int, int], b: tuple[int, int], kind: str, data: tuple | None = None) -> None:
        adj[a].append(len(edges))
        adj[b].append(len(edges))
        edges.append((a, b, kind, data))

    w = d.n_bottom
    for idx, s in enumerate(d.slices):
        lo, hi, q = idx, idx + 1, s.pos
        if s.kind is SliceKind.CUP:
            for p in range(1, w + 1):
                add((lo, p), (hi, p if p < q else p + 2), "thru")
            add((hi, q), (hi, q + 1), "turn", ("cup", idx))
            w += 2
        elif s.kind is SliceKind.CAP:
            add((lo, q), (lo, q + 1), "turn", ("cap", idx))
            for p in range(1, w + 1):
                if p != q and p != q + 1:
                    add((lo, p), (hi, p if p < q else p - 2), "thru")
            w -= 2
        else:
            add((lo, q), (hi, q + 1), "cross", (idx, "slash"))
            add((lo, q + 1), (hi, q), "cross", (idx, "back"))
            for p in range(1, w + 1):
                if p != q and p != q + 1:
                    add((lo, p), (hi, p), "thru")

    used = [False] * len(edges)

    def boundary_endpoint(port: tuple[int, int]) -> Endpoint | None:
        level, pos = port
        if level == 0:
            return ("b", pos)
        if level == n_levels:
            return ("t", pos)
        return None

    def walk(start: tuple[int, int], first_eid: int) -> tuple[list[Endpoint], list[tuple[int, str, bool]]]:
        endpoints: list[Endpoint] = []
        ep = boundary_endpoint(start)
        if ep is not None and len(adj[start]) == 1:
            endpoints.append(ep)
        passes: list[tuple[int, str, bool]] = []
        port, eid = start, first_eid
        while True:
            a, b, kind, data = edges[eid]
            used[eid] = True
            forward = port == a
            port = b if forward else a
            if kind == "cross":
                assert data is not None
                passes.append((data[0], data[1], forward))
            nxt = next((e for e in adj[port] if not used[e]), None)
            if nxt is None:
                ep = boundary_endpoint(port)
                if ep is not None and len(adj[port]) == 1:
                    endpoints.append(ep)
                return endpoints, passes
            eid = nxt

    raw: list[tuple[list[Endpoint], list[tuple[int, str, bool]]]] = []

    # Open components first, from the bottom boundary left to right, then top.
    starts = [(0, p) for p in range(1, d.n_bottom + 1)]
    starts += [(n_levels, p) for p in range(1, d.n_top + 1)]
    for port in starts:
        pending = [e for e in adj[port] if not used[e]]
        if pending:
            raw.append(walk(port, pending[0]))

    # Remaining components are closed. Scanning ports in (level, pos) order
    # starts each circle at the left leg of its lowest cup; preferring a
    # non-turn first edge makes the canonical direction "up at that leg".
    for port in sorted(adj):
        pending = [e for e in adj[port] if not used[e]]
        if not pending:
            continue
        non_turn = [e for e in pending if edges[e][2] != "turn"]
        raw.append(walk(port, (non_turn or pending)[0]))

    strands = tuple(
        _Strand(
            endpoints=tuple(eps),
            passes=tuple(passes),
            or_dir=_or_dir_open(d, tuple(eps)) if eps else 1,
        )
        for eps, passes in raw
    )

    # Crossing signs from the oriented passes.
    sense: dict[int, dict[str, bool]] = defaultdict(dict)
    for s in strands:
        for idx, diag, up in s.passes:
            sense[idx][diag] = up if s.or_dir > 0 else not up
    signs: dict[int, int] = {}
    for idx in d.crossings:
        ds = sense[idx]
        assert set(ds) == {"slash", "back"}, "each crossing has exactly two passes"
        base = 1 if ds["slash"] == ds["back"] else -1
        signs[idx] = base if d.slices[idx].kind is SliceKind.CROSS_POS else -base
    return strands, signs


def _or_dir_open(d: TangleDiagram, endpoints: tuple[Endpoint, ...]) -> int:
    """Traversal direction (+1/-1) for an open strand under declared flags."""
    if d.orient is None:
        return 1
    wanted: list[int] = []
    for at_start, (kind, pos) in ((True, endpoints[0]), (False, endpoints[-1])):
        if kind != "b":
            continue
        flag = d.orient[pos - 1]
        as_traversed = "u" if at_start else "d"
        wanted.append(1 if flag == as_traversed else -1)
    if not wanted:
        return 1
    if len(set(wanted)) > 1:
        raise OrientationError(
            f"orientation flags conflict along the strand with endpoints {endpoints}"
        )
    return wanted[0]


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------


def parse(text: str) -> TangleDiagram | AnnularDiagram:
    """Parse the line-oriented diagram format.

    Directives, one per line, ``#`` starts a comment: ``tangle v1`` header,
    ``strands <n>``, optional ``orient <u|d> ...`` (one flag per bottom
    endpoint), slice lines ``X+ <pos>`` / ``X- <pos>`` / ``CUP <pos>`` /
    ``CAP <pos>``, and optional ``closure annular``.
    """
    header_seen = False
    n_bottom: int | None = None
    strands_line = 0
    orient: tuple[str, ...] | None = None
    orient_line = 0
    slices: list[MorseSlice] = []
    closure = False
    closure_line = 0
    width = 0

    for lineno, rawline in enumerate(text.splitlines(), start=1):
        line = rawline.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        head = tokens[0]

        if not header_seen:
            if tokens != ["tangle", "v1"]:
                raise DiagramParseError("expected header 'tangle v1'", lineno, rawline.find(head) + 1)
            header_seen = True
            continue

        if head == "tangle":
            raise DiagramParseError("duplicate header", lineno)

        if head == "strands":
            if n_bottom is not None:
                raise DiagramParseError("duplicate 'strands' directive", lineno)
            if len(tokens) != 2 or not _is_int(tokens[1]):
                raise DiagramParseError("usage: strands <n>", lineno)
            n_bottom = int(tokens[1])
            if n_bottom < 0:
                raise DiagramParseError("strand count must be >= 0", lineno)
            width = n_bottom
            strands_line = lineno
            continue

        if n_bottom is None:
            raise DiagramParseError("'strands <n>' must come before other directives", lineno)

        if head == "orient":
            if slices:
                raise DiagramParseError("'orient' must come before slice directives", lineno)
            if orient is not None:
                raise DiagramParseError("duplicate 'orient' directive", lineno)
            flags = tokens[1:]
            if len(flags) != n_bottom:
                raise DiagramParseError(
                    f"orient needs {n_bottom} flags, got {len(flags)}", lineno
                )
            if any(f not in ("u", "d") for f in flags):
                raise DiagramParseError("orient flags must be 'u' or 'd'", lineno)
            orient = tuple(flags)
            orient_line = lineno
            continue

        if head == "closure":
            if tokens[1:] != ["annular"]:
                raise DiagramParseError("usage: closure annular", lineno)
            if closure:
                raise DiagramParseError("duplicate 'closure' directive", lineno)
            closure = True
            closure_line = lineno
            continue

        if head in _TOKEN_TO_KIND:
            if len(tokens) != 2 or not _is_int(tokens[1]):
                raise DiagramParseError(f"usage: {head} <pos>", lineno)
            pos = int(tokens[1])
            if pos < 1:
                raise DiagramParseError("positions are 1-based", lineno)
            kind = _TOKEN_TO_KIND[head]
            # validate against the running width so errors carry line numbers
            if kind is SliceKind.CUP:
                if pos > width + 1:
                    raise DiagramParseError(f"CUP {pos} outside width {width}", lineno)
                width += 2
            else:
                if pos + 1 > width:
                    raise DiagramParseError(
                        f"{head} {pos} needs strands {pos},{pos + 1} but width is {width}",
                        lineno,
                    )
                if kind is SliceKind.CAP:
                    width -= 2
            slices.append(MorseSlice(kind, pos))
            continue

        raise DiagramParseError(f"unknown directive {head!r}", lineno, rawline.find(head) + 1)

    if not header_seen:
        raise DiagramParseError("empty input: missing 'tangle v1' header", 1)
    if n_bottom is None:
        raise DiagramParseError("missing 'strands <n>' directive", strands_line or 1)

    try:
        d = TangleDiagram(n_bottom=n_bottom, slices=tuple(slices), orient=orient)
    except OrientationError as exc:
        raise DiagramParseError(str(exc), orient_line or strands_line) from exc

    if closure:
        if not d.balanced:
            raise DiagramParseError(
                f"closure declared but tangle is unbalanced "
                f"({d.n_bottom} bottom vs {d.n_top} top endpoints)",
                closure_line,
            )
        return AnnularDiagram(core=d)
    return d


def parse_tangle(text: str) -> TangleDiagram:
    """Parse, requiring a plain (non-closed) tangle."""
    d = parse(text)
    if isinstance(d, AnnularDiagram):
        raise DiagramParseError("expected a tangle, got an annular closure")
    return d


def to_text(d: TangleDiagram | AnnularDiagram) -> str:
    """Render a diagram back to the input format (parse/to_text round-trips)."""
    core = d.core if isinstance(d, AnnularDiagram) else d
    lines = ["tangle v1", f"strands {core.n_bottom}"]
    if core.orient is not None:
        lines.append("orient " + " ".join(core.orient))
    lines.extend(s.token for s in core.slices)
    if isinstance(d, AnnularDiagram):
        lines.append("closure annular")
    return "\n".join(lines) + "\n"


def input_digest(d: TangleDiagram | AnnularDiagram) -> str:
    """Stable hex digest of the canonical text form."""
    return hashlib.sha256(to_text(d).encode()).hexdigest()


def _is_int(tok: str) -> bool:
    try:
        int(tok)
    except ValueError:
        return False
    return True


# ---------------------------------------------------------------------------
# structural operations
# ---------------------------------------------------------------------------


def validate(d: TangleDiagram | AnnularDiagram) -> ValidationReport:
    """Summarize a constructed diagram; lists problems instead of raising."""
    core = d.core if isinstance(d, AnnularDiagram) else d
    errors: list[str] = []
    if not core.balanced:
        errors.append(
            f"unbalanced: {core.n_bottom} bottom vs {core.n_top} top endpoints"
        )
    return ValidationReport(
        n_bottom=core.n_bottom,
        n_top=core.n_top,
        balanced=core.balanced,
        n_crossings=core.n_crossings,
        n_plus=core.n_plus,
        n_minus=core.n_minus,
        has_closed_components=core.has_closed_components,
        is_string_link_shape=core.is_string_link_shape,
        annular=isinstance(d, AnnularDiagram),
        errors=errors,
    )


def compose(lower: TangleDiagram, upper: TangleDiagram) -> TangleDiagram:
    """Stack ``upper`` on top of ``lower``.

    The interface widths must agree. The composite keeps the lower diagram's
    declared orientation flags; everything else is re-derived (the upper
    diagram's bottom endpoints become interior points of the composite).
    """
    if lower.n_top != upper.n_bottom:
        raise CompositionError(
            f"cannot stack: lower has {lower.n_top} top endpoints, "
            f"upper expects {upper.n_bottom}"
        )
    return TangleDiagram(
        n_bottom=lower.n_bottom,
        slices=lower.slices + upper.slices,
        orient=lower.orient,
    )


def juxtapose(left: TangleDiagram, right: TangleDiagram) -> TangleDiagram:
    """Place ``right`` beside ``left`` (disjoint horizontal union).

    The right diagram's strands idle to the right of the left zone while the
    left slices run, so left slice positions are unchanged and right slice
    positions shift by the left top width.
    """
    shift = left.n_top
    slices = list(left.slices)
    slices += [MorseSlice(s.kind, s.pos + shift) for s in right.slices]
    orient: tuple[str, ...] | None = None
    if left.orient is not None or right.orient is not None:
        orient = left.derived_orient + right.derived_orient
    return TangleDiagram(
        n_bottom=left.n_bottom + right.n_bottom,
        slices=tuple(slices),
        orient=orient,
    )


def annular_closure(d: TangleDiagram, wrapping: int | None = None) -> AnnularDiagram:
    """Close a balanced tangle around the annulus."""
    return AnnularDiagram(core=d, wrapping=wrapping)


# ---------------------------------------------------------------------------
# stock diagrams
# ---------------------------------------------------------------------------


def identity_tangle(n: int) -> TangleDiagram:
    """n vertical strands, no slices."""
    return TangleDiagram(n_bottom=n)


def braid_word_diagram(n: int, word: Iterable[int]) -> TangleDiagram:
    """Braid word on n strands; letter +i is ``X+ i``, letter -i is ``X- i``."""
    slices = []
    for letter in word:
        if letter == 0 or abs(letter) >= n:
            raise DiagramStructureError(
                f"braid letter {letter} out of range for {n} strands"
            )
        kind = SliceKind.CROSS_POS if letter > 0 else SliceKind.CROSS_NEG
        slices.append(MorseSlice(kind, abs(letter)))
    return TangleDiagram(n_bottom=n, slices=tuple(slices))


def turnback_tangle() -> TangleDiagram:
    """Two strands joined by a cap with a fresh cup above: balanced, not a braid."""
    return TangleDiagram(
        n_bottom=2,
        slices=(MorseSlice(SliceKind.CAP, 1), MorseSlice(SliceKind.CUP, 1)),
    )


def cut_braid_closure(n: int, word: Sequence[int]) -> TangleDiagram:
    """(1,1)-tangle whose annular/ordinary closure is the closure of the braid.

    Strand 1 of the braid is left open; strands 2..n are closed off to the
    right with nested return arcs: cups ``CUP 2 .. CUP n`` below the braid
    word and caps ``CAP n .. CAP 2`` above it.
    """
    slices = [MorseSlice(SliceKind.CUP, p) for p in range(2, n + 1)]
    for letter in word:
        if letter == 0 or abs(letter) >= n:
            raise DiagramStructureError(
                f"braid letter {letter} out of range for {n} strands"
            )
        kind = SliceKind.CROSS_POS if letter > 0 else SliceKind.CROSS_NEG
        slices.append(MorseSlice(kind, abs(letter)))
    slices += [MorseSlice(SliceKind.CAP, p) for p in range(n, 1, -1)]
    return TangleDiagram(n_bottom=1, slices=tuple(slices))


def unknot_cut() -> TangleDiagram:
    """(1,1)-tangle for the unknot: a bare strand."""
    return identity_tangle(1)


def trefoil_cut() -> TangleDiagram:
    """(1,1)-tangle for the right-handed trefoil (closure of sigma_1^3)."""
    return cut_braid_closure(2, [1, 1, 1])


def figure_eight_cut() -> TangleDiagram:
    """(1,1)-tangle for the figure-eight knot (closure of (s1 s2^-1)^2)."""
    return cut_braid_closure(3, [1, -2, 1, -2])
