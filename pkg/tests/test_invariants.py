"""Invariant values and the structural checks relating them."""

import pytest

from skh.diagram import (
    annular_closure,
    braid_word_diagram,
    identity_tangle,
    juxtapose,
    parse,
)
from skh.errors import IncompatibleInputError
from skh.invariants import (
    cut_check,
    detect_braid,
    kh_total,
    khr_link,
    parity_check,
    skh_annular,
    skh_tangle,
    spectral_bound_check,
    tensor_check,
)

# Frozen graded tables.  The dense oracle pipeline fixed these values
# independently of the sparse pipeline under test; see test_oracle.py for
# the oracle side of the same tables.
KHR_UNKNOT = {(0, 0): 1}
KHR_TREFOIL = {(0, 2): 1, (2, 6): 1, (3, 8): 1}
KHR_FIGURE_EIGHT = {(-2, -4): 1, (-1, -2): 1, (0, 0): 1, (1, 2): 1, (2, 4): 1}
SKH_SIGMA1_CLOSURE = {(0, 3, 2): 1, (0, 1, 0): 1, (1, 3, 0): 1, (0, -1, -2): 1}


class TestTangleInvariants:
    def test_khr_unknot(self, unknot):
        assert khr_link(unknot).table == KHR_UNKNOT

    def test_khr_trefoil(self, trefoil):
        assert khr_link(trefoil).table == KHR_TREFOIL

    def test_khr_figure_eight(self, figure_eight):
        assert khr_link(figure_eight).table == KHR_FIGURE_EIGHT

    def test_khr_needs_one_one(self, id2):
        with pytest.raises(IncompatibleInputError):
            khr_link(id2)

    def test_turnback_vanishes(self, turnback):
        assert skh_tangle(turnback).table == {}

    def test_braid_generator_grading(self, sigma1):
        assert skh_tangle(sigma1).table == {(0, 1): 1}
        inv = braid_word_diagram(2, [-1])
        assert skh_tangle(inv).table == {(0, -1): 1}

    def test_circle_tangle(self, circle):
        assert skh_tangle(circle).table == {(0, 1): 1, (0, -1): 1}

    def test_tangle_rejects_annular(self, sigma1_closure):
        with pytest.raises(IncompatibleInputError):
            skh_tangle(sigma1_closure)


class TestAnnularInvariants:
    def test_sigma1_closure(self, sigma1_closure):
        assert skh_annular(sigma1_closure).table == SKH_SIGMA1_CLOSURE

    def test_sigma1_closure_total_is_unknot(self, sigma1_closure):
        assert kh_total(sigma1_closure).table == {(0, 1): 1, (0, -1): 1}

    def test_identity_closures(self):
        a1 = annular_closure(identity_tangle(1))
        assert skh_annular(a1).table == {(0, 1, 1): 1, (0, -1, -1): 1}
        a2 = annular_closure(identity_tangle(2))
        assert skh_annular(a2).table == {(0, 2, 2): 1, (0, 0, 0): 2, (0, -2, -2): 1}

    def test_trivial_circle_closure_concentrated_at_k0(self, circle):
        a = annular_closure(circle)
        table = skh_annular(a).table
        assert table == {(0, 1, 0): 1, (0, -1, 0): 1}

    def test_tangle_promoted_to_closure(self, sigma1):
        # passing a bare balanced tangle closes it implicitly
        assert skh_annular(sigma1).table == SKH_SIGMA1_CLOSURE


class TestDetectBraid:
    @pytest.mark.parametrize(
        "n,word",
        [(2, []), (2, [1]), (3, [1, -2, 1, -2]), (4, [1, 2, 3, -1]), (2, [1] * 7)],
    )
    def test_braid_words_are_braids(self, n, word):
        v = detect_braid(braid_word_diagram(n, word))
        assert v.is_braid and v.total == 1 and v.label == "BRAID"

    def test_trefoil_strand_is_not(self, trefoil):
        v = detect_braid(trefoil)
        assert not v.is_braid and v.total == 3 and v.label == "NOT-BRAID"

    def test_turnback_is_not(self, turnback):
        v = detect_braid(turnback)
        assert not v.is_braid and v.total == 0

    def test_circle_beside_strand_is_not(self, circle):
        d = juxtapose(identity_tangle(1), circle)
        v = detect_braid(d)
        assert not v.is_braid and v.total == 2


class TestParity:
    def test_string_links_odd(self, trefoil, sigma1):
        assert parity_check(trefoil).ok and parity_check(trefoil).total % 2 == 1
        assert parity_check(sigma1).ok

    def test_non_string_links_even(self, turnback, circle):
        for d in (turnback, circle):
            rep = parity_check(d)
            assert rep.ok and rep.total % 2 == 0 and not rep.string_link


class TestTensor:
    def test_braid_times_trefoil(self, trefoil):
        rep = tensor_check(braid_word_diagram(2, [1]), trefoil)
        assert rep.ok and rep.shift == (0, 0)
        assert rep.composite.total == rep.left.total * rep.right.total == 3

    def test_turnback_annihilates(self, turnback, trefoil):
        rep = tensor_check(turnback, trefoil)
        assert rep.ok and rep.composite.total == 0

    def test_figure_eight_factor(self, figure_eight):
        rep = tensor_check(braid_word_diagram(3, [2, -1]), figure_eight)
        assert rep.ok and rep.composite.total == 5

    def test_factor_must_be_one_one(self, sigma1, id2):
        with pytest.raises(IncompatibleInputError):
            tensor_check(sigma1, id2)


class TestCut:
    @pytest.mark.parametrize(
        "text",
        [
            "tangle v1\nstrands 1\n",
            "tangle v1\nstrands 2\nX+ 1\n",
            "tangle v1\nstrands 2\nCAP 1\nCUP 1\n",
            "tangle v1\nstrands 0\nCUP 1\nCAP 1\n",
            "tangle v1\nstrands 3\nX+ 1\nX- 2\nX+ 1\n",
        ],
    )
    def test_chain_level_match(self, text):
        a = annular_closure(parse(text))
        rep = cut_check(a)
        assert rep.ok, rep.detail
        assert rep.generators_match and rep.matrices_match and rep.homology_match
        assert rep.shift == (0, a.m)

    def test_trefoil_closure(self, trefoil):
        rep = cut_check(annular_closure(trefoil))
        assert rep.ok, rep.detail


class TestSpectralBound:
    def test_fixed_cases(self, sigma1, turnback, circle, id2):
        for d in (sigma1, turnback, circle, id2):
            rep = spectral_bound_check(annular_closure(d))
            assert rep.ok, rep.detail
            assert rep.bound_ok and rep.euler_ok

    def test_bound_is_strict_somewhere(self, sigma1):
        # for the sigma_1 closure the filtered rank exceeds the total rank,
        # so the inequality direction genuinely matters
        a = annular_closure(sigma1)
        filtered = skh_annular(a).total
        total = kh_total(a).total
        assert filtered > total
