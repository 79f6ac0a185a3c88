"""Top-level invariants and the structural checks that back them.

The compute functions wrap the cube construction and F2 linear algebra into
the four invariant flavours:

* ``skh_tangle``     bigraded (i, j) homology of a balanced tangle,
* ``skh_annular``    trigraded (i, j, k) homology of an annular closure,
* ``kh_total``       bigraded homology of the underlying link in the solid
                     torus, forgetting the annular filtration,
* ``khr_link``       reduced Khovanov homology of a (1,1)-tangle closure.

``detect_braid`` applies the rank criterion: a balanced tangle is isotopic to
a braid exactly when its total homology rank is 1.

The ``*_check`` functions implement relations between invariants that hold
for structural reasons and therefore make good end-to-end tests: parity of
the total rank, multiplicativity under stacking a (1,1)-tangle, the
cut-and-reglue comparison at the top filtration level, and the spectral
bound relating the filtered and total homologies.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .complexes import (
    ComplexMode,
    DEFAULT_MAX_CROSSINGS,
    GradedComplex,
    associated_graded,
    build_complex,
)
from .diagram import AnnularDiagram, TangleDiagram, annular_closure, compose, identity_tangle, juxtapose
from .errors import IncompatibleInputError, InternalCheckError
from .f2 import GradedDims, homology_dims
from .resolution import resolve

__all__ = [
    "BraidVerdict",
    "CutReport",
    "ParityReport",
    "SpectralReport",
    "TensorReport",
    "cut_check",
    "detect_braid",
    "kh_total",
    "khr_link",
    "parity_check",
    "skh_annular",
    "skh_tangle",
    "spectral_bound_check",
    "tensor_check",
]


def _require_tangle(d: object) -> TangleDiagram:
    if isinstance(d, AnnularDiagram):
        raise IncompatibleInputError(
            "this invariant takes a tangle diagram, not an annular closure"
        )
    if not isinstance(d, TangleDiagram):
        raise IncompatibleInputError(f"expected a tangle diagram, got {type(d).__name__}")
    return d


def _as_annular(d: object) -> AnnularDiagram:
    if isinstance(d, AnnularDiagram):
        return d
    if isinstance(d, TangleDiagram):
        return annular_closure(d)
    raise IncompatibleInputError(f"expected an annular diagram, got {type(d).__name__}")


def skh_tangle(
    d: TangleDiagram,
    *,
    max_crossings: int = DEFAULT_MAX_CROSSINGS,
    threads: int | None = None,
) -> GradedDims:
    """Bigraded homology of a balanced tangle, keys (i, j)."""
    d = _require_tangle(d)
    cx = build_complex(d, max_crossings=max_crossings)
    return homology_dims(cx, threads=threads)


def skh_annular(
    d: AnnularDiagram | TangleDiagram,
    *,
    max_crossings: int = DEFAULT_MAX_CROSSINGS,
    threads: int | None = None,
) -> GradedDims:
    """Trigraded homology of an annular link, keys (i, j, k)."""
    a = _as_annular(d)
    total = build_complex(a, max_crossings=max_crossings)
    graded = associated_graded(total)
    return homology_dims(graded, threads=threads)


def kh_total(
    d: AnnularDiagram | TangleDiagram,
    *,
    max_crossings: int = DEFAULT_MAX_CROSSINGS,
    threads: int | None = None,
) -> GradedDims:
    """Bigraded homology of the annular total complex, keys (i, j)."""
    a = _as_annular(d)
    cx = build_complex(a, max_crossings=max_crossings)
    return homology_dims(cx, threads=threads)


def khr_link(
    d: TangleDiagram,
    *,
    max_crossings: int = DEFAULT_MAX_CROSSINGS,
    threads: int | None = None,
) -> GradedDims:
    """Reduced Khovanov homology of a link cut open to a (1,1)-tangle."""
    d = _require_tangle(d)
    if d.n_bottom != 1 or d.n_top != 1:
        raise IncompatibleInputError(
            "reduced homology needs a (1,1)-tangle presentation, "
            f"got ({d.n_bottom},{d.n_top})"
        )
    return skh_tangle(d, max_crossings=max_crossings, threads=threads)


@dataclass(frozen=True)
class BraidVerdict:
    """Outcome of the rank-1 braid test."""

    is_braid: bool
    total: int
    dims: GradedDims

    @property
    def label(self) -> str:
        return "BRAID" if self.is_braid else "NOT-BRAID"


def detect_braid(
    d: TangleDiagram,
    *,
    max_crossings: int = DEFAULT_MAX_CROSSINGS,
    threads: int | None = None,
) -> BraidVerdict:
    """Decide whether a balanced tangle is isotopic to a braid.

    The homology of a braid has total rank 1, and conversely a balanced
    tangle whose homology has total rank 1 is a braid, so the verdict is
    exact rather than heuristic.
    """
    dims = skh_tangle(d, max_crossings=max_crossings, threads=threads)
    return BraidVerdict(is_braid=dims.total == 1, total=dims.total, dims=dims)


# ---------------------------------------------------------------------------
# Structural checks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ParityReport:
    """Total rank parity against the string-link predicate."""

    ok: bool
    total: int
    string_link: bool

    @property
    def detail(self) -> str:
        par = "odd" if self.total % 2 else "even"
        return f"total={self.total} ({par}), string_link={self.string_link}"


def parity_check(
    d: TangleDiagram,
    *,
    max_crossings: int = DEFAULT_MAX_CROSSINGS,
    threads: int | None = None,
) -> ParityReport:
    """Total rank is odd exactly for string links (every strand runs
    bottom to top and nothing is closed)."""
    d = _require_tangle(d)
    dims = skh_tangle(d, max_crossings=max_crossings, threads=threads)
    sl = d.is_string_link_shape
    return ParityReport(ok=(dims.total % 2 == 1) == sl, total=dims.total, string_link=sl)


def _table_shift(
    got: dict[tuple[int, ...], int], want: dict[tuple[int, ...], int]
) -> tuple[int, ...] | None:
    """The global grading shift delta with got == shift(want), or None."""
    if len(got) != len(want):
        return None
    if not got:
        return (0, 0)
    gmin = min(got)
    wmin = min(want)
    delta = tuple(g - w for g, w in zip(gmin, wmin))
    shifted = {tuple(k + s for k, s in zip(key, delta)): v for key, v in want.items()}
    return delta if shifted == got else None


@dataclass(frozen=True)
class TensorReport:
    """Stacking a (1,1)-tangle onto a strand multiplies homology."""

    ok: bool
    shift: tuple[int, int] | None
    left: GradedDims
    right: GradedDims
    product: GradedDims
    composite: GradedDims

    @property
    def detail(self) -> str:
        if self.ok:
            return f"composite matches product at shift {self.shift}"
        return (
            f"composite total {self.composite.total} vs product total "
            f"{self.product.total}, no global shift aligns the tables"
        )


def tensor_check(
    t: TangleDiagram,
    k: TangleDiagram,
    *,
    max_crossings: int = DEFAULT_MAX_CROSSINGS,
    threads: int | None = None,
) -> TensorReport:
    """Compare SKh(t stacked with k on the first strand) with the graded
    tensor product SKh(t) (x) Khr(k).

    ``t`` is any balanced tangle with at least one strand, ``k`` a
    (1,1)-tangle.  Over F2 the homology of the composite is the convolution
    of the two tables; the expected global shift is (0, 0) and the report
    records whichever shift (if any) aligns them.
    """
    t = _require_tangle(t)
    k = _require_tangle(k)
    if t.n_bottom < 1:
        raise IncompatibleInputError("tensor check needs a tangle with at least one strand")
    if k.n_bottom != 1 or k.n_top != 1:
        raise IncompatibleInputError("tensor factor must be a (1,1)-tangle")

    padded = juxtapose(k, identity_tangle(t.n_bottom - 1)) if t.n_bottom > 1 else k
    composite = compose(t, padded)

    left = skh_tangle(t, max_crossings=max_crossings, threads=threads)
    right = khr_link(k, max_crossings=max_crossings, threads=threads)
    product: dict[tuple[int, int], int] = {}
    for (i1, j1), d1 in left.table.items():
        for (i2, j2), d2 in right.table.items():
            key = (i1 + i2, j1 + j2)
            product[key] = product.get(key, 0) + d1 * d2
    got = skh_tangle(composite, max_crossings=max_crossings, threads=threads)

    shift = _table_shift(got.table, product)
    return TensorReport(
        ok=shift == (0, 0),
        shift=shift,  # type: ignore[arg-type]
        left=left,
        right=right,
        product=GradedDims(product),
        composite=got,
    )


@dataclass(frozen=True)
class CutReport:
    """Chain-level comparison of a tangle complex with the top filtration
    level of its annular closure."""

    ok: bool
    m: int
    shift: tuple[int, int]
    generators_match: bool
    matrices_match: bool
    homology_match: bool
    detail: str = ""


def _closure_circle_map(
    core: TangleDiagram, a: AnnularDiagram, vertex: int
) -> tuple[dict[int, int], int] | None:
    """Match tangle circles to trivial closure circles by anchor.

    Returns (tangle index -> closure index, essential count) or None when
    the correspondence fails.
    """
    res_t = resolve(core, vertex)
    res_a = resolve(a, vertex)
    by_anchor = {
        c.anchor: idx for idx, c in enumerate(res_a.circles) if not c.essential
    }
    mapping: dict[int, int] = {}
    for idx, c in enumerate(res_t.circles):
        j = by_anchor.get(c.anchor)
        if j is None:
            return None
        mapping[idx] = j
    if len(by_anchor) != len(mapping):
        return None
    n_ess = sum(1 for c in res_a.circles if c.essential)
    return mapping, n_ess


def cut_check(
    a: AnnularDiagram | TangleDiagram,
    *,
    max_crossings: int = DEFAULT_MAX_CROSSINGS,
    threads: int | None = None,
) -> CutReport:
    """Cutting an annular link along a fiber disk and regluing.

    At the top annular level k = m the associated graded complex of the
    closure is the tangle complex of the cut-open diagram on the nose: the
    same generators (circles match by their birth anchors), the same
    differentials, and homology shifted by (0, m) in (i, j).  The comparison
    is chain level, not just on ranks.
    """
    a = _as_annular(a)
    core = a.core
    m = a.m

    tc = build_complex(core, max_crossings=max_crossings)
    ag = associated_graded(build_complex(a, max_crossings=max_crossings))

    # Per-vertex translation of tangle generators into closure generators.
    vmaps: dict[int, dict[int, int]] = {}
    vertices = {g[0] for gens in tc.buckets.values() for g in gens}
    gens_ok = True
    notes: list[str] = []
    for v in sorted(vertices):
        got = _closure_circle_map(core, a, v)
        if got is None:
            gens_ok = False
            notes.append(f"vertex {v}: circle anchors do not match the closure")
            break
        mapping, n_ess = got
        if n_ess != m:
            gens_ok = False
            notes.append(f"vertex {v}: {n_ess} essential circles, expected {m}")
            break
        vmaps[v] = mapping

    def translate(gen: tuple[int, int]) -> tuple[int, int]:
        v, mask = gen
        out = 0
        mapping = vmaps[v]
        b = 0
        while mask >> b:
            if (mask >> b) & 1:
                out |= 1 << mapping[b]
            b += 1
        return (v, out)

    mats_ok = True
    hom_ok = False
    if gens_ok:
        # Generator sets per bucket.
        ag_keys_at_m = {key for key in ag.buckets if key[2] == m}
        seen: set[tuple[int, int, int]] = set()
        for (i, j), gens in tc.buckets.items():
            key = (i, j + m, m)
            other = ag.buckets.get(key)
            if other is None or {translate(g) for g in gens} != set(other):
                gens_ok = False
                notes.append(f"bucket ({i},{j}): generators disagree at {key}")
                break
            seen.add(key)
        if gens_ok and seen != ag_keys_at_m:
            gens_ok = False
            notes.append("closure has k=m generators outside the image of the cut tangle")

    if gens_ok:
        def entry_set(cx: GradedComplex, key: tuple, tr) -> set[tuple]:
            mat = cx.mats.get(key)
            if mat is None:
                return set()
            nxt_key = cx.key_above(key)
            src = cx.buckets[key]
            tgt = cx.buckets[nxt_key]
            out = set()
            for r, row in enumerate(mat.rows):
                c = 0
                while row >> c:
                    if (row >> c) & 1:
                        out.add((tr(src[r]), tr(tgt[c])))
                    c += 1
            return out
        for (i, j) in tc.buckets:
            here = entry_set(tc, (i, j), translate)
            there = entry_set(ag, (i, j + m, m), lambda g: g)
            if here != there:
                mats_ok = False
                notes.append(f"bucket ({i},{j}): differential entries disagree")
                break
    else:
        mats_ok = False

    dims_t = homology_dims(tc, threads=threads)
    dims_a = homology_dims(ag, threads=threads)
    slice_m = {
        (i, j - m): dim for (i, j, k), dim in dims_a.table.items() if k == m
    }
    hom_ok = dims_t.table == slice_m
    if not hom_ok:
        notes.append("homology tables disagree at the top level")

    ok = gens_ok and mats_ok and hom_ok
    return CutReport(
        ok=ok,
        m=m,
        shift=(0, m),
        generators_match=gens_ok,
        matrices_match=mats_ok,
        homology_match=hom_ok,
        detail="; ".join(notes) if notes else "chain-level match at k=m",
    )


@dataclass(frozen=True)
class SpectralReport:
    """Rank bound and Euler match between filtered and total homology."""

    ok: bool
    bound_ok: bool
    euler_ok: bool
    violations: tuple[str, ...] = ()

    @property
    def detail(self) -> str:
        return "; ".join(self.violations) if self.violations else "bound and Euler characteristics agree"


def spectral_bound_check(
    a: AnnularDiagram | TangleDiagram,
    *,
    max_crossings: int = DEFAULT_MAX_CROSSINGS,
    threads: int | None = None,
) -> SpectralReport:
    """The filtered homology dominates the total homology.

    Collapsing the annular grading gives, for each (i, j), a rank at least
    that of the total homology (the filtration spectral sequence can only
    kill classes), while the Euler characteristics per j-column agree
    exactly.
    """
    a = _as_annular(a)
    total_cx = build_complex(a, max_crossings=max_crossings)
    kh = homology_dims(total_cx, threads=threads)
    skh = homology_dims(associated_graded(total_cx), threads=threads)

    collapsed: dict[tuple[int, int], int] = {}
    for (i, j, _k), dim in skh.table.items():
        collapsed[(i, j)] = collapsed.get((i, j), 0) + dim

    violations: list[str] = []
    bound_ok = True
    for key, dim in kh.table.items():
        if collapsed.get(key, 0) < dim:
            bound_ok = False
            violations.append(
                f"rank bound fails at (i,j)={key}: filtered {collapsed.get(key, 0)} < total {dim}"
            )

    euler_ok = True
    js = {j for _, j in collapsed} | {j for _, j in kh.table}
    for j in sorted(js):
        e_f = sum((-1) ** i * d for (i, jj), d in collapsed.items() if jj == j)
        e_t = sum((-1) ** i * d for (i, jj), d in kh.table.items() if jj == j)
        if e_f != e_t:
            euler_ok = False
            violations.append(f"Euler mismatch at j={j}: filtered {e_f} vs total {e_t}")

    return SpectralReport(
        ok=bound_ok and euler_ok,
        bound_ok=bound_ok,
        euler_ok=euler_ok,
        violations=tuple(violations),
    )
