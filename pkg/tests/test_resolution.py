"""Cube resolutions: component tracing, backtracking, saddle classification."""

import pytest

from skh.diagram import annular_closure, braid_word_diagram, parse, trefoil_cut
from skh.resolution import (
    ComponentKind,
    SaddleKind,
    resolve,
    saddle_classify,
)


class TestResolve:
    def test_sigma1_vertical(self, sigma1):
        r = resolve(sigma1, 0b0)
        assert r.n_circles == 0
        assert len(r.arcs) == 2
        assert all(c.kind is ComponentKind.ARC_VERTICAL for c in r.arcs)
        assert not r.backtracking

    def test_sigma1_turnback(self, sigma1):
        r = resolve(sigma1, 0b1)
        kinds = sorted(c.kind.name for c in r.arcs)
        assert kinds == ["ARC_BOTTOM", "ARC_TOP"]
        assert r.backtracking

    def test_negative_crossing_bits_swap(self):
        neg = braid_word_diagram(2, [-1])
        assert resolve(neg, 0b0).backtracking
        assert not resolve(neg, 0b1).backtracking

    def test_circle(self, circle):
        r = resolve(circle, 0)
        assert r.n_circles == 1
        assert r.circles[0].kind is ComponentKind.CLOSED_TRIVIAL
        assert not r.backtracking

    def test_braid_keeps_single_vertex(self):
        d = braid_word_diagram(2, [1, 1, 1])
        kept = [bits for bits in range(8) if not resolve(d, bits).backtracking]
        assert kept == [0]

    def test_balanced_arc_counting(self, rng):
        from skh.randgen import random_balanced_tangle

        for _ in range(25):
            d = random_balanced_tangle(rng, max_crossings=5)
            for bits in range(1 << d.n_crossings):
                r = resolve(d, bits)
                n_bb = sum(1 for c in r.arcs if c.kind is ComponentKind.ARC_BOTTOM)
                n_tt = sum(1 for c in r.arcs if c.kind is ComponentKind.ARC_TOP)
                assert n_bb == n_tt

    def test_early_exit_matches_full(self, rng):
        from skh.randgen import random_balanced_tangle

        for _ in range(25):
            d = random_balanced_tangle(rng, max_crossings=5)
            for bits in range(1 << d.n_crossings):
                full = resolve(d, bits)
                fast = resolve(d, bits, early_exit=True)
                assert (fast is None or fast.backtracking) == full.backtracking

    def test_bits_out_of_range(self, sigma1):
        with pytest.raises(ValueError):
            resolve(sigma1, 0b10)

    def test_circles_sorted_by_anchor(self, rng):
        from skh.randgen import random_balanced_tangle

        for _ in range(10):
            d = random_balanced_tangle(rng, max_crossings=4)
            for bits in range(1 << d.n_crossings):
                r = resolve(d, bits)
                anchors = [c.anchor for c in r.circles]
                assert anchors == sorted(anchors)


class TestAnnular:
    def test_identity_closure_essential(self):
        a = annular_closure(braid_word_diagram(2, []))
        r = resolve(a, 0)
        assert r.n_circles == 2
        assert all(c.kind is ComponentKind.CLOSED_ESSENTIAL for c in r.circles)
        assert all(c.winding in (1, -1) for c in r.circles)

    def test_sigma1_closure_vertical(self, sigma1_closure):
        # the vertical smoothing erases the strand exchange, so each strand
        # closes onto itself: two essential circles winding once each
        r = resolve(sigma1_closure, 0b0)
        assert r.n_circles == 2
        assert all(c.essential and abs(c.winding) == 1 for c in r.circles)

    def test_sigma1_closure_turnback(self, sigma1_closure):
        # the bottom and top arcs of the turnback glue into a single circle
        # whose two closure passes cancel: trivial
        r = resolve(sigma1_closure, 0b1)
        assert r.n_circles == 1
        assert not r.circles[0].essential
        assert r.circles[0].winding == 0

    def test_turnback_closure_trivial(self, turnback):
        a = annular_closure(turnback)
        r = resolve(a, 0)
        assert r.n_circles == 1
        assert not r.circles[0].essential

    def test_no_backtracking_in_annular_mode(self, sigma1_closure):
        for bits in (0, 1):
            assert not resolve(sigma1_closure, bits).backtracking


class TestSaddles:
    def test_immediate_successor_required(self, sigma1):
        d = braid_word_diagram(2, [1, 1, 1])
        with pytest.raises(ValueError):
            saddle_classify(d, 0b000, 0b011)
        with pytest.raises(ValueError):
            saddle_classify(d, 0b001, 0b000)

    def test_zero_map_on_backtracking(self):
        d = braid_word_diagram(2, [1])
        s = saddle_classify(d, 0b0, 0b1)
        assert s.kind is SaddleKind.ZERO_MAP

    def test_merge_closed_closed(self):
        # two nested circles merged by a crossing between them
        d = parse("tangle v1\nstrands 0\nCUP 1\nCUP 2\nX+ 2\nCAP 2\nCAP 1\n")
        lo = resolve(d, 0b0)
        hi = resolve(d, 0b1)
        if lo.n_circles == 2 and hi.n_circles == 1:
            s = saddle_classify(d, 0b0, 0b1)
            assert s.kind is SaddleKind.MERGE_CLOSED_CLOSED
        else:
            s = saddle_classify(d, 0b0, 0b1)
            assert s.kind is SaddleKind.SPLIT_INTO_CLOSED_CLOSED

    def test_split_into_closed_arc(self, trefoil):
        # resolving one crossing of the cut trefoil splits a circle off the
        # through-strand at some cube edge
        kinds = set()
        c = trefoil.n_crossings
        for bits in range(1 << c):
            for x in range(c):
                if bits & (1 << x):
                    continue
                s = saddle_classify(trefoil, bits, bits | (1 << x))
                kinds.add(s.kind)
        assert SaddleKind.SPLIT_INTO_CLOSED_ARC in kinds
        assert SaddleKind.MERGE_CLOSED_ARC in kinds

    def test_component_count_changes_by_one(self, rng):
        from skh.randgen import random_balanced_tangle

        for _ in range(15):
            d = random_balanced_tangle(rng, max_crossings=5)
            c = d.n_crossings
            for bits in range(1 << c):
                lo = resolve(d, bits)
                if lo.backtracking:
                    continue
                for x in range(c):
                    if bits & (1 << x):
                        continue
                    hi_bits = bits | (1 << x)
                    hi = resolve(d, hi_bits)
                    s = saddle_classify(d, bits, hi_bits)
                    if s.kind is SaddleKind.ZERO_MAP:
                        continue
                    lo_n = lo.n_circles + len(lo.arcs)
                    hi_n = hi.n_circles + len(hi.arcs)
                    assert abs(lo_n - hi_n) == 1
