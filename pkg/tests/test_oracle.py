"""Dense reference pipeline: frozen values and agreement with the main one."""

import pytest

from skh.diagram import annular_closure, braid_word_diagram, parse
from skh.errors import IncompatibleInputError, SizeCapError
from skh.invariants import kh_total, khr_link, skh_annular, skh_tangle
from skh.oracle import ORACLE_MAX_CROSSINGS, oracle_homology


class TestFrozenValues:
    """Pin the reference values with the oracle alone.

    These are the same tables test_invariants.py checks through the sparse
    pipeline; keeping an independent copy here means a regression in either
    pipeline shows up as a disagreement, not as two tests drifting together.
    """

    def test_unknot(self, unknot):
        assert oracle_homology(unknot, "khr") == {(0, 0): 1}

    def test_trefoil(self, trefoil):
        assert oracle_homology(trefoil, "khr") == {(0, 2): 1, (2, 6): 1, (3, 8): 1}

    def test_figure_eight(self, figure_eight):
        assert oracle_homology(figure_eight, "khr") == {
            (-2, -4): 1,
            (-1, -2): 1,
            (0, 0): 1,
            (1, 2): 1,
            (2, 4): 1,
        }

    def test_sigma1_closure(self, sigma1_closure):
        assert oracle_homology(sigma1_closure, "skh-annular") == {
            (0, 3, 2): 1,
            (0, 1, 0): 1,
            (1, 3, 0): 1,
            (0, -1, -2): 1,
        }
        assert oracle_homology(sigma1_closure, "kh-total") == {(0, 1): 1, (0, -1): 1}

    def test_turnback(self, turnback):
        assert oracle_homology(turnback, "skh-tangle") == {}


class TestAgreement:
    """Main pipeline and oracle must agree on every mode."""

    @pytest.mark.parametrize(
        "text",
        [
            "tangle v1\nstrands 1\n",
            "tangle v1\nstrands 0\nCUP 1\nCAP 1\n",
            "tangle v1\nstrands 2\nX+ 1\nX- 1\n",
            "tangle v1\nstrands 2\nCAP 1\nCUP 1\n",
            "tangle v1\nstrands 3\nX+ 1\nX+ 2\nX- 1\n",
            "tangle v1\nstrands 2\nCUP 2\nX+ 3\nCAP 2\n",
        ],
    )
    def test_tangle_modes(self, text):
        d = parse(text)
        assert skh_tangle(d).table == oracle_homology(d, "skh-tangle")
        if d.n_bottom == 1 and d.n_top == 1:
            assert khr_link(d).table == oracle_homology(d, "khr")

    @pytest.mark.parametrize(
        "n,word",
        [(1, []), (2, [1, 1]), (3, [1, -2]), (2, [-1, -1, -1])],
    )
    def test_annular_modes(self, n, word):
        a = annular_closure(braid_word_diagram(n, word))
        assert skh_annular(a).table == oracle_homology(a, "skh-annular")
        assert kh_total(a).table == oracle_homology(a, "kh-total")


class TestGuards:
    def test_size_cap(self):
        d = braid_word_diagram(2, [1] * (ORACLE_MAX_CROSSINGS + 1))
        with pytest.raises(SizeCapError):
            oracle_homology(d, "skh-tangle")

    def test_khr_needs_one_one(self, id2):
        with pytest.raises(IncompatibleInputError):
            oracle_homology(id2, "khr")

    def test_mode_input_compat(self, sigma1, sigma1_closure):
        with pytest.raises(IncompatibleInputError):
            oracle_homology(sigma1_closure, "skh-tangle")
        with pytest.raises(IncompatibleInputError):
            oracle_homology(sigma1, "skh-annular")

    def test_unknown_mode(self, sigma1):
        with pytest.raises(ValueError):
            oracle_homology(sigma1, "kh")
