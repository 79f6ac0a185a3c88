"""Seeded generators: determinism, bounds, and structural guarantees."""

import random

from skh.diagram import AnnularDiagram, braid_word_diagram, to_text
from skh.randgen import (
    random_annular,
    random_balanced_tangle,
    random_braid_word,
    random_knot_cut,
    random_move_walk,
)


def test_seed_determinism():
    for gen in (random_braid_word, random_balanced_tangle, random_knot_cut):
        a = gen(random.Random(7))
        b = gen(random.Random(7))
        assert to_text(a) == to_text(b)
    wa, ta = random_move_walk(random.Random(3), braid_word_diagram(2, [1]))
    wb, tb = random_move_walk(random.Random(3), braid_word_diagram(2, [1]))
    assert to_text(wa) == to_text(wb) and ta == tb


def test_braid_word_bounds(rng):
    for _ in range(100):
        d = random_braid_word(rng, max_strands=5, max_letters=12)
        assert 2 <= d.n_bottom <= 5
        assert d.n_crossings <= 12
        assert d.balanced
        assert d.is_string_link_shape
        assert all(s.kind.name.startswith("CROSS") for s in d.slices)


def test_balanced_tangle_bounds(rng):
    for _ in range(100):
        d = random_balanced_tangle(rng, max_strands=4, max_crossings=8)
        assert d.balanced
        assert d.n_bottom <= 4
        assert d.n_crossings <= 8


def test_knot_cut_is_one_one(rng):
    for _ in range(50):
        d = random_knot_cut(rng)
        assert d.n_bottom == 1 and d.n_top == 1
        # a multi-cycle braid permutation leaves closed components after the
        # cut, so string-link shape is not guaranteed here, balance is
        assert d.balanced


def test_annular_is_closure(rng):
    for _ in range(20):
        a = random_annular(rng, max_crossings=6)
        assert isinstance(a, AnnularDiagram)
        assert a.core.balanced


def test_move_walk_respects_budgets(rng):
    for _ in range(30):
        base = random_braid_word(rng, max_strands=4, max_letters=6)
        walked, trace = random_move_walk(rng, base, steps=8, max_crossings=10)
        assert walked.balanced
        assert walked.n_crossings <= 10
        # moves preserve the string-link shape of a braid word
        assert walked.is_string_link_shape
        assert len(trace) <= 8
