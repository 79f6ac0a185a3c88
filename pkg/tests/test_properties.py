"""Property-based checks of the structural laws the pipeline must satisfy."""

from hypothesis import given, settings
from hypothesis import strategies as st

from skh.complexes import associated_graded, build_complex
from skh.diagram import annular_closure, braid_word_diagram, parse, parse_tangle, to_text
from skh.invariants import parity_check, skh_tangle
from skh.moves import apply_move, legal_moves
from skh.oracle import oracle_homology


@st.composite
def braid_words(draw, max_strands: int = 4, max_letters: int = 6):
    n = draw(st.integers(2, max_strands))
    letters = draw(
        st.lists(st.tuples(st.integers(1, n - 1), st.booleans()), max_size=max_letters)
    )
    return braid_word_diagram(n, [i if up else -i for i, up in letters])


@st.composite
def balanced_tangles(draw, max_strands: int = 3, max_crossings: int = 5):
    """A balanced tangle grown slice by slice, then rebalanced at the top.

    Mirrors the seeded generator in skh.randgen, but draws every choice from
    hypothesis so failures shrink to small diagrams.
    """
    n = draw(st.integers(0, max_strands))
    width = n
    crossings = 0
    slices: list[str] = []
    for _ in range(draw(st.integers(0, 8))):
        ops = []
        if width <= n + 2:
            ops.append("CUP")
        if width >= 2:
            ops.append("CAP")
            if crossings < max_crossings:
                ops += ["X+", "X-"]
        op = draw(st.sampled_from(ops))
        if op == "CUP":
            slices.append(f"CUP {draw(st.integers(1, width + 1))}")
            width += 2
        elif op == "CAP":
            slices.append(f"CAP {draw(st.integers(1, width - 1))}")
            width -= 2
        else:
            slices.append(f"{op} {draw(st.integers(1, width - 1))}")
            crossings += 1
    while width > n:
        slices.append(f"CAP {draw(st.integers(1, width - 1))}")
        width -= 2
    while width < n:
        slices.append(f"CUP {draw(st.integers(1, width + 1))}")
        width += 2
    return parse_tangle("tangle v1\n" + f"strands {n}\n" + "".join(s + "\n" for s in slices))


@given(balanced_tangles())
@settings(deadline=None)
def test_text_roundtrip(d):
    assert parse(to_text(d)) == d


@given(braid_words())
@settings(deadline=None)
def test_annular_text_roundtrip(d):
    a = annular_closure(d)
    assert parse(to_text(a)) == a


@given(balanced_tangles())
@settings(deadline=None)
def test_d_squared_zero(d):
    # build_complex(check=True) raises InternalCheckError on any violation
    build_complex(d, check=True)
    cx = build_complex(annular_closure(d), check=True)
    associated_graded(cx, check=True)


@given(balanced_tangles())
@settings(deadline=None, max_examples=40)
def test_threads_invariance(d):
    assert skh_tangle(d, threads=1).table == skh_tangle(d, threads=4).table


@given(balanced_tangles(max_strands=4, max_crossings=6))
@settings(deadline=None)
def test_parity_law(d):
    rep = parity_check(d)
    assert rep.ok, rep.detail


@given(braid_words(max_strands=3, max_letters=4), st.data())
@settings(deadline=None, max_examples=40)
def test_move_invariance(d, data):
    moves = legal_moves(d)
    if not moves:
        return
    move = data.draw(st.sampled_from(moves))
    moved = apply_move(d, move)
    assert skh_tangle(moved).table == skh_tangle(d).table


@given(balanced_tangles(max_strands=3, max_crossings=5))
@settings(deadline=None, max_examples=30)
def test_oracle_agreement(d):
    assert skh_tangle(d).table == oracle_homology(d, "skh-tangle")


@given(balanced_tangles(max_strands=3, max_crossings=5))
@settings(deadline=None, max_examples=40)
def test_euler_characteristic(d):
    """Per j, the chain-level and homology-level Euler numbers agree."""
    cx = build_complex(d)
    chain: dict[int, int] = {}
    for (i, j), gens in cx.buckets.items():
        chain[j] = chain.get(j, 0) + (-1) ** i * len(gens)
    hom: dict[int, int] = {}
    for (i, j), dim in skh_tangle(d).table.items():
        hom[j] = hom.get(j, 0) + (-1) ** i * dim
    assert {j: v for j, v in chain.items() if v} == {j: v for j, v in hom.items() if v}
