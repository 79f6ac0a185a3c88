"""Seeded random diagram generators for the verification suites.

Everything here is driven by a caller-supplied :class:`random.Random`, so a
suite run is reproducible from its seed alone.  Generators only ever return
balanced diagrams; the tangle generator produces arbitrary cup/cap/crossing
words and then rebalances the top boundary, which covers closed components,
turnbacks, and string links alike.
"""

from __future__ import annotations

import random

from .diagram import (
    AnnularDiagram,
    TangleDiagram,
    annular_closure,
    braid_word_diagram,
    cut_braid_closure,
    identity_tangle,
)
from .moves import MoveKind, MorseMove, apply_move, legal_moves

__all__ = [
    "random_annular",
    "random_braid_word",
    "random_balanced_tangle",
    "random_knot_cut",
    "random_move_walk",
]

_CROSSING_ADDERS = {MoveKind.R1_INSERT: 1, MoveKind.R2_INSERT: 2}
_SHRINKERS = {
    MoveKind.R1_REMOVE,
    MoveKind.R2_REMOVE,
    MoveKind.CUPCAP_REMOVE,
    MoveKind.R3,
    MoveKind.COMMUTE,
}


def random_braid_word(
    rng: random.Random,
    *,
    min_strands: int = 2,
    max_strands: int = 5,
    max_letters: int = 12,
) -> TangleDiagram:
    """A random braid word diagram on 2..max_strands strands."""
    n = rng.randint(min_strands, max_strands)
    length = rng.randint(0, max_letters)
    word = []
    for _ in range(length):
        i = rng.randint(1, n - 1)
        word.append(i if rng.random() < 0.5 else -i)
    return braid_word_diagram(n, word)


def random_balanced_tangle(
    rng: random.Random,
    *,
    max_strands: int = 4,
    max_steps: int = 10,
    max_crossings: int = 8,
) -> TangleDiagram:
    """A random balanced tangle built from a width-respecting slice walk.

    The walk adds cups, caps, and crossings subject to the running width,
    then caps or cups the top back down to the strand count.  Output may
    contain closed components, turnbacks, or neither.
    """
    n = rng.randint(0, max_strands)
    width = n
    crossings = 0
    slices: list[tuple[str, int]] = []
    for _ in range(rng.randint(0, max_steps)):
        ops: list[str] = []
        if width <= n + 4:
            ops += ["CUP"] * 2
        if width >= 2:
            ops.append("CAP")
            if crossings < max_crossings:
                ops += ["X+", "X-"] * 2
        if not ops:
            ops = ["CUP"]
        op = rng.choice(ops)
        if op == "CUP":
            slices.append(("CUP", rng.randint(1, width + 1)))
            width += 2
        elif op == "CAP":
            slices.append(("CAP", rng.randint(1, width - 1)))
            width -= 2
        else:
            slices.append((op, rng.randint(1, width - 1)))
            crossings += 1
    while width > n:
        slices.append(("CAP", rng.randint(1, width - 1)))
        width -= 2
    while width < n:
        slices.append(("CUP", rng.randint(1, width + 1)))
        width += 2
    text = "tangle v1\n" + f"strands {n}\n" + "".join(f"{t} {p}\n" for t, p in slices)
    from .diagram import parse_tangle

    return parse_tangle(text)


def random_knot_cut(
    rng: random.Random,
    *,
    max_strands: int = 3,
    max_letters: int = 5,
) -> TangleDiagram:
    """A random (1,1)-tangle: a braid closure cut open along one strand."""
    n = rng.randint(1, max_strands)
    if n == 1:
        return identity_tangle(1)
    word = []
    for _ in range(rng.randint(1, max_letters)):
        i = rng.randint(1, n - 1)
        word.append(i if rng.random() < 0.5 else -i)
    return cut_braid_closure(n, word)


def random_annular(
    rng: random.Random,
    *,
    max_strands: int = 4,
    max_steps: int = 8,
    max_crossings: int = 8,
) -> AnnularDiagram:
    """A random annular link presented as a balanced tangle closure."""
    core = random_balanced_tangle(
        rng,
        max_strands=max_strands,
        max_steps=max_steps,
        max_crossings=max_crossings,
    )
    return annular_closure(core)


def random_move_walk(
    rng: random.Random,
    d: TangleDiagram,
    *,
    steps: int = 6,
    max_crossings: int = 10,
    max_slices: int = 18,
) -> tuple[TangleDiagram, list[MorseMove]]:
    """Apply a random sequence of legal moves, bounding the diagram size.

    Crossing-adding inserts are suppressed once the crossing budget is
    reached, and shrinking moves are preferred once the slice list grows
    long, so walks cannot blow up the downstream cube.
    """
    cur = d
    trace: list[MorseMove] = []
    for _ in range(steps):
        candidates = legal_moves(cur)
        candidates = [
            m
            for m in candidates
            if cur.n_crossings + _CROSSING_ADDERS.get(m.kind, 0) <= max_crossings
        ]
        if len(cur.slices) >= max_slices:
            shrink = [m for m in candidates if m.kind in _SHRINKERS]
            candidates = shrink or candidates
        if not candidates:
            break
        move = rng.choice(candidates)
        cur = apply_move(cur, move)
        trace.append(move)
    return cur, trace
