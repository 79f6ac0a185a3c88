"""Independent dense reference pipeline for small diagrams.

This module re-derives the homology from scratch along a deliberately
different route than the main pipeline, for cross-checking:

* resolutions are built as explicit cell graphs ((level, position) nodes
  with smoothing adjacency) and their components found by graph walks,
  not by the incremental union-find sweep;
* generators carry explicit '+'/'-' labels per circle instead of wedge
  bitmasks, and the saddle maps are implemented in that label algebra;
* boundary matrices are dense numpy arrays reduced mod 2, not packed-int
  bitsets.

Components are identified across a cube edge by their exact cell sets: the
four cells at the flipped crossing always belong to the saddle participants,
so unaffected components have equal cell sets on both sides.

The oracle is quadratic-ish and capped at ORACLE_MAX_CROSSINGS crossings.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

import numpy as np

from .diagram import AnnularDiagram, SliceKind, TangleDiagram
from .errors import IncompatibleInputError, SizeCapError, UnbalancedError

__all__ = ["oracle_homology", "ORACLE_MAX_CROSSINGS"]

ORACLE_MAX_CROSSINGS = 10

Cell = tuple[int, int]


@dataclass(frozen=True)
class _OComp:
    """One component of a resolved cell graph.

    Parameters
    ----------
    cells : frozenset of (level, pos)
        Exact set of cells the component occupies; the cross-edge identity.
    ends : tuple
        Boundary endpoints ("b"/"t", pos) for arcs; empty for circles.
    winding : int
        Signed number of glue passes (annular circles only).
    """

    cells: frozenset
    ends: tuple
    winding: int

    @property
    def closed(self) -> bool:
        return not self.ends

    @property
    def essential(self) -> bool:
        return self.winding != 0


def _resolved_components(
    core: TangleDiagram, bits: int, annular: bool
) -> list[_OComp]:
    """Components of one complete resolution, via an explicit cell graph.

    Cells have degree at most 2, so components are simple paths (arcs) or
    cycles. Edges carry ids so parallel edges (a two-cell circle, or a
    strand glued straight back to itself) are walked correctly, and glue
    edges carry the winding sign for the direction of traversal.
    """
    n_levels = len(core.slices)
    if n_levels == 0:
        out = []
        for p in range(1, core.n_bottom + 1):
            if annular:
                out.append(_OComp(frozenset({(0, p)}), (), 1))
            else:
                out.append(_OComp(frozenset({(0, p)}), (("b", p), ("t", p)), 0))
        return out

    edges: list[tuple[Cell, Cell, int]] = []
    adj: dict[Cell, list[int]] = defaultdict(list)

    def link(a: Cell, b: Cell, glue: int = 0) -> None:
        adj[a].append(len(edges))
        adj[b].append(len(edges))
        edges.append((a, b, glue))

    w = core.n_bottom
    xi = 0
    for idx, s in enumerate(core.slices):
        q = s.pos
        if s.kind is SliceKind.CUP:
            for p in range(1, w + 1):
                link((idx, p), (idx + 1, p if p < q else p + 2))
            link((idx + 1, q), (idx + 1, q + 1))
            w += 2
        elif s.kind is SliceKind.CAP:
            link((idx, q), (idx, q + 1))
            for p in range(1, w + 1):
                if p != q and p != q + 1:
                    link((idx, p), (idx + 1, p if p < q else p - 2))
            w -= 2
        else:
            bit = (bits >> xi) & 1
            xi += 1
            vertical = bit == (0 if s.kind is SliceKind.CROSS_POS else 1)
            if vertical:
                link((idx, q), (idx + 1, q))
                link((idx, q + 1), (idx + 1, q + 1))
            else:
                link((idx, q), (idx, q + 1))
                link((idx + 1, q), (idx + 1, q + 1))
            for p in range(1, w + 1):
                if p != q and p != q + 1:
                    link((idx, p), (idx + 1, p))

    if annular:
        for p in range(1, core.n_bottom + 1):
            link((n_levels, p), (0, p), glue=1)

    used = [False] * len(edges)
    comps: list[_OComp] = []

    def boundary(cell: Cell):
        level, pos = cell
        if not annular and len(adj[cell]) == 1:
            if level == 0:
                return ("b", pos)
            if level == n_levels:
                return ("t", pos)
        return None

    def walk(start: Cell) -> None:
        cells = {start}
        ends = []
        winding = 0
        b = boundary(start)
        if b:
            ends.append(b)
        cur = start
        while True:
            eid = next((e for e in adj[cur] if not used[e]), None)
            if eid is None:
                break
            a, bb, glue = edges[eid]
            used[eid] = True
            if cur == a:
                cur, winding = bb, winding + glue
            else:
                cur, winding = a, winding - glue
            if cur not in cells:
                cells.add(cur)
                b = boundary(cur)
                if b:
                    ends.append(b)
        comps.append(_OComp(frozenset(cells), tuple(sorted(ends)), winding))

    # arcs first (walks must start at a degree-1 cell), then cycles
    for start in sorted(c for c in adj if len(adj[c]) == 1):
        if not used[adj[start][0]]:
            walk(start)
    for start in sorted(adj):
        if any(not used[e] for e in adj[start]):
            walk(start)
    return comps


def _backtracking(comps: list[_OComp]) -> bool:
    return any(
        (not c.closed) and all(kind == "t" for kind, _ in c.ends) for c in comps
    )


def _circles(comps: list[_OComp]) -> list[_OComp]:
    return sorted((c for c in comps if c.closed), key=lambda c: min(c.cells))


def oracle_homology(
    d: TangleDiagram | AnnularDiagram, mode: str
) -> dict[tuple, int]:
    """Graded homology dimensions computed by the dense reference pipeline.

    Parameters
    ----------
    d : TangleDiagram or AnnularDiagram
        Balanced tangle for "skh-tangle"/"khr"; annular closure for
        "skh-annular"/"kh-total".
    mode : str
        One of "skh-tangle", "khr", "skh-annular", "kh-total".

    Returns
    -------
    dict
        {(i, j): dim} for bigraded modes, {(i, j, k): dim} for "skh-annular".
    """
    annular_in = isinstance(d, AnnularDiagram)
    if mode in ("skh-tangle", "khr"):
        if annular_in:
            raise IncompatibleInputError(f"{mode} needs a plain tangle")
        core = d
        annular = False
    elif mode in ("skh-annular", "kh-total"):
        if not annular_in:
            raise IncompatibleInputError(f"{mode} needs an annular closure")
        core = d.core
        annular = True
    else:
        raise ValueError(f"unknown oracle mode {mode!r}")

    if not core.balanced:
        raise UnbalancedError("oracle needs a balanced tangle")
    if mode == "khr" and not (core.n_bottom == 1 and core.n_top == 1):
        raise IncompatibleInputError("khr needs a (1,1)-tangle")

    c = core.n_crossings
    if c > ORACLE_MAX_CROSSINGS:
        raise SizeCapError(f"oracle cap is {ORACLE_MAX_CROSSINGS} crossings, got {c}")

    np_, nm = core.n_plus, core.n_minus

    # resolve the whole cube
    comps_of: dict[int, list[_OComp]] = {}
    circles_of: dict[int, list[_OComp]] = {}
    for bits in range(1 << c):
        comps = _resolved_components(core, bits, annular)
        if not annular and _backtracking(comps):
            continue
        comps_of[bits] = comps
        circles_of[bits] = _circles(comps)

    # generators: (bits, labels) with labels a '+'/'-' tuple per circle
    gens_by_bucket: dict[tuple, list[tuple[int, tuple[str, ...]]]] = defaultdict(list)
    index: dict[tuple[int, tuple[str, ...]], tuple] = {}

    def grading(bits: int, labels: tuple[str, ...]) -> tuple[int, int, int]:
        w = bin(bits).count("1")
        i = w - nm
        j = sum(1 if s == "+" else -1 for s in labels) + w + np_ - 2 * nm
        k = 0
        for comp, lab in zip(circles_of[bits], labels):
            if comp.essential:
                k += 1 if lab == "+" else -1
        return i, j, k

    def bucket_key(i: int, j: int, k: int) -> tuple:
        return (i, j, k) if mode == "skh-annular" else (i, j)

    for bits, circles in sorted(circles_of.items()):
        labelings = [()]
        for _ in circles:
            labelings = [lab + (s,) for lab in labelings for s in ("+", "-")]
        for labels in labelings:
            i, j, k = grading(bits, labels)
            key = bucket_key(i, j, k)
            index[(bits, labels)] = (key, len(gens_by_bucket[key]))
            gens_by_bucket[key].append((bits, labels))

    # boundary matrices, dense
    mats: dict[tuple, np.ndarray] = {}

    def mat_for(key: tuple) -> np.ndarray | None:
        up = (key[0] + 1,) + key[1:]
        if up not in gens_by_bucket:
            return None
        return mats.setdefault(
            key,
            np.zeros((len(gens_by_bucket[key]), len(gens_by_bucket[up])), dtype=np.uint8),
        )

    for bits in sorted(comps_of):
        src_comps = comps_of[bits]
        src_circles = circles_of[bits]
        for x in range(c):
            if bits & (1 << x):
                continue
            hi = bits | (1 << x)
            if hi not in comps_of:
                continue
            tgt_comps = comps_of[hi]
            tgt_circles = circles_of[hi]
            src_sets = {cc.cells for cc in src_comps}
            tgt_sets = {cc.cells for cc in tgt_comps}
            src_part = [cc for cc in src_comps if cc.cells not in tgt_sets]
            tgt_part = [cc for cc in tgt_comps if cc.cells not in src_sets]

            for labels in _all_labelings(len(src_circles)):
                lab_of = {comp.cells: lab for comp, lab in zip(src_circles, labels)}
                for out in _saddle_images(src_part, tgt_part, lab_of):
                    tgt_labels = tuple(out.get(comp.cells, lab_of.get(comp.cells)) for comp in tgt_circles)
                    assert all(s in ("+", "-") for s in tgt_labels)
                    si, sj, sk = grading(bits, labels)
                    ti, tj, tk = grading(hi, tgt_labels)
                    assert ti == si + 1 and tj == sj
                    assert tk <= sk, "no entry may raise the annular grading"
                    if mode == "skh-annular" and tk != sk:
                        continue
                    skey, srow = index[(bits, labels)]
                    tkey, tcol = index[(hi, tgt_labels)]
                    m = mat_for(skey)
                    assert m is not None and tkey == (skey[0] + 1,) + skey[1:]
                    m[srow, tcol] ^= 1

    # homology dimension per bucket
    ranks = {key: _rank_mod2(m) for key, m in mats.items()}
    out: dict[tuple, int] = {}
    for key, gens in gens_by_bucket.items():
        below = (key[0] - 1,) + key[1:]
        dim = len(gens) - ranks.get(key, 0) - ranks.get(below, 0)
        assert dim >= 0
        if dim:
            out[key] = dim
    return out


def _all_labelings(n: int) -> list[tuple[str, ...]]:
    labelings: list[tuple[str, ...]] = [()]
    for _ in range(n):
        labelings = [lab + (s,) for lab in labelings for s in ("+", "-")]
    return labelings


def _saddle_images(src_part, tgt_part, lab_of) -> list[dict]:
    """Images of one saddle in the label algebra.

    Returns a list of {target cell set: label} dicts, one per summand; labels
    of unaffected circles are filled in by the caller from ``lab_of``.
    """
    src_circ = [cc for cc in src_part if cc.closed]
    tgt_circ = [cc for cc in tgt_part if cc.closed]

    if len(src_part) == 2:  # merge
        if len(src_circ) == 2:
            a, b = (lab_of[cc.cells] for cc in src_circ)
            assert len(tgt_circ) == 1
            t = tgt_circ[0].cells
            if a == "-" and b == "-":
                return []
            return [{t: "-" if "-" in (a, b) else "+"}]
        assert len(src_circ) == 1, "a merge involves at least one circle"
        # circle merges into an arc: '-' kills, '+' is dropped
        if lab_of[src_circ[0].cells] == "-":
            return []
        assert not tgt_circ
        return [{}]

    assert len(src_part) == 1 and len(tgt_part) == 2  # split
    if src_circ:
        assert len(tgt_circ) == 2
        t1, t2 = (cc.cells for cc in tgt_circ)
        if lab_of[src_circ[0].cells] == "+":
            return [{t1: "+", t2: "-"}, {t1: "-", t2: "+"}]
        return [{t1: "-", t2: "-"}]
    # arc splits off a circle, which is born labelled '-'
    assert len(tgt_circ) == 1
    return [{tgt_circ[0].cells: "-"}]


def _rank_mod2(a: np.ndarray) -> int:
    """Rank of a 0/1 matrix over F2 by dense row reduction."""
    m = (a % 2).astype(np.uint8).copy()
    rank = 0
    n_rows, n_cols = m.shape
    for col in range(n_cols):
        if rank == n_rows:
            break
        piv = np.nonzero(m[rank:, col])[0]
        if piv.size == 0:
            continue
        p = rank + int(piv[0])
        if p != rank:
            m[[rank, p]] = m[[p, rank]]
        hits = np.nonzero(m[:, col])[0]
        hits = hits[hits != rank]
        if hits.size:
            m[hits] ^= m[rank]
        rank += 1
    return rank
