"""GF(2) linear algebra on bit-packed rows, and graded homology dimensions."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable

if TYPE_CHECKING:  # pragma: no cover
    from .complexes import GradedComplex

__all__ = ["SparseF2Matrix", "GradedDims", "rank_f2", "homology_dims"]


@dataclass(frozen=True)
class SparseF2Matrix:
    """A matrix over F2; row r is a python int with bit c set iff M[r,c] = 1."""

    n_rows: int
    n_cols: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        assert len(self.rows) == self.n_rows
        mask = (1 << self.n_cols) - 1
        assert all(0 <= r <= mask for r in self.rows), "row exceeds column count"

    @classmethod
    def from_entries(cls, n_rows: int, n_cols: int, entries: Iterable[tuple[int, int]]) -> "SparseF2Matrix":
        rows = [0] * n_rows
        for r, c in entries:
            rows[r] ^= 1 << c
        return cls(n_rows, n_cols, tuple(rows))

    @property
    def n_entries(self) -> int:
        return sum(r.bit_count() for r in self.rows)

    def is_zero(self) -> bool:
        return not any(self.rows)

    def then(self, other: "SparseF2Matrix") -> "SparseF2Matrix":
        """Composite map: self (X -> Y) followed by other (Y -> Z)."""
        assert self.n_cols == other.n_rows
        out = []
        for row in self.rows:
            acc = 0
            r = row
            while r:
                low = r & -r
                acc ^= other.rows[low.bit_length() - 1]
                r ^= low
            out.append(acc)
        return SparseF2Matrix(self.n_rows, other.n_cols, tuple(out))


def rank_f2(m: SparseF2Matrix) -> int:
    """Rank over F2 by Gaussian elimination; ``m`` is not mutated.

    Rows are processed shortest first: sparse pivots cause less fill-in when
    later rows reduce against them, which matters on cube differentials.
    """
    pivots: dict[int, int] = {}  # lowest set bit -> reduced row
    rank = 0
    for row in sorted(m.rows, key=int.bit_length):
        cur = row
        while cur:
            low = cur & -cur
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = cur
                rank += 1
                break
            cur ^= piv
    return rank


@dataclass(frozen=True)
class GradedDims:
    """Nonzero homology dimensions keyed by grading tuple ((i,j) or (i,j,k))."""

    table: dict[tuple[int, ...], int]

    @property
    def total(self) -> int:
        return sum(self.table.values())

    def items_sorted(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.table.items())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GradedDims):
            return self.table == other.table
        return NotImplemented

    def __hash__(self) -> int:  # pragma: no cover - dims rarely hashed
        return hash(tuple(self.items_sorted()))


def homology_dims(cx: "GradedComplex", threads: int | None = None) -> GradedDims:
    """Homology dimensions of a graded complex, bucket by bucket.

    dim H(bucket) = (#generators) - rank(d out of bucket) - rank(d into
    bucket). Bucket ranks are independent, so they may be computed on a
    thread pool; results do not depend on the thread count.
    """
    mats = cx.mats
    keys = list(mats)
    if threads and threads > 1 and len(keys) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            ranks = dict(zip(keys, pool.map(lambda k: rank_f2(mats[k]), keys)))
    else:
        ranks = {k: rank_f2(mats[k]) for k in keys}

    table: dict[tuple[int, ...], int] = {}
    for key, gens in cx.buckets.items():
        r_out = ranks.get(key, 0)
        r_in = ranks.get(cx.key_below(key), 0)
        dim = len(gens) - r_out - r_in
        assert dim >= 0, "rank bookkeeping produced a negative dimension"
        if dim:
            table[key] = dim
    return GradedDims(table)
