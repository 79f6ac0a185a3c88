"""Diagram parsing, tracing, and structural operations."""

import pytest

from skh.diagram import (
    AnnularDiagram,
    MorseSlice,
    SliceKind,
    TangleDiagram,
    annular_closure,
    braid_word_diagram,
    compose,
    cut_braid_closure,
    identity_tangle,
    input_digest,
    juxtapose,
    parse,
    parse_tangle,
    to_text,
    trefoil_cut,
    validate,
)
from skh.errors import (
    CompositionError,
    DiagramParseError,
    DiagramStructureError,
    OrientationError,
    UnbalancedError,
)


class TestParse:
    def test_minimal(self):
        d = parse("tangle v1\nstrands 2\n")
        assert isinstance(d, TangleDiagram)
        assert d.n_bottom == 2 and d.n_top == 2 and d.balanced
        assert d.slices == ()

    def test_slices_and_comments(self):
        text = (
            "# a braid with a wiggle\n"
            "tangle v1\n"
            "strands 2\n"
            "X+ 1  # crossing\n"
            "CUP 2\n"
            "CAP 3\n"
        )
        d = parse(text)
        assert [s.token for s in d.slices] == ["X+ 1", "CUP 2", "CAP 3"]
        assert d.n_top == 2

    def test_closure_directive(self):
        a = parse("tangle v1\nstrands 2\nX+ 1\nclosure annular\n")
        assert isinstance(a, AnnularDiagram)
        assert a.m == 2
        assert a.core.n_crossings == 1

    def test_orient_flags(self):
        d = parse("tangle v1\nstrands 2\norient u d\nX+ 1\n")
        assert d.orient == ("u", "d")
        # antiparallel strands flip the crossing sign
        assert d.crossing_signs == {0: -1}
        assert (d.n_plus, d.n_minus) == (0, 1)

    def test_header_required_first(self):
        with pytest.raises(DiagramParseError):
            parse("strands 2\ntangle v1\n")

    def test_unknown_version(self):
        with pytest.raises(DiagramParseError):
            parse("tangle v2\nstrands 2\n")

    def test_missing_strands(self):
        with pytest.raises(DiagramParseError):
            parse("tangle v1\nX+ 1\n")

    def test_orient_after_slices_rejected(self):
        with pytest.raises(DiagramParseError):
            parse("tangle v1\nstrands 2\nX+ 1\norient u u\n")

    def test_width_errors_carry_line_numbers(self):
        with pytest.raises(DiagramParseError) as exc:
            parse("tangle v1\nstrands 2\nX+ 1\nX- 2\n")
        assert exc.value.line == 4

    def test_cap_below_width_two(self):
        with pytest.raises(DiagramParseError):
            parse("tangle v1\nstrands 0\nCAP 1\n")

    def test_cup_position_bound(self):
        with pytest.raises(DiagramParseError):
            parse("tangle v1\nstrands 0\nCUP 3\n")

    def test_positions_one_based(self):
        with pytest.raises(DiagramParseError):
            parse("tangle v1\nstrands 2\nX+ 0\n")

    def test_unknown_directive(self):
        with pytest.raises(DiagramParseError) as exc:
            parse("tangle v1\nstrands 2\nTWIST 1\n")
        assert exc.value.line == 3

    def test_parse_tangle_rejects_closure(self):
        with pytest.raises(DiagramParseError):
            parse_tangle("tangle v1\nstrands 2\nclosure annular\n")


class TestRoundTrip:
    @pytest.mark.parametrize(
        "text",
        [
            "tangle v1\nstrands 2\n",
            "tangle v1\nstrands 2\nX+ 1\n",
            "tangle v1\nstrands 2\norient u d\nX- 1\n",
            "tangle v1\nstrands 0\nCUP 1\nCAP 1\n",
            "tangle v1\nstrands 2\nX+ 1\nclosure annular\n",
            "tangle v1\nstrands 3\nCUP 2\nX+ 1\nCAP 2\nX- 2\n",
        ],
    )
    def test_text_round_trips(self, text):
        d = parse(text)
        assert to_text(d) == text
        assert parse(to_text(d)) == d

    def test_digest_stable_and_distinct(self, sigma1, turnback):
        assert input_digest(sigma1) == input_digest(sigma1)
        assert input_digest(sigma1) != input_digest(turnback)
        assert len(input_digest(sigma1)) == 64


class TestStructure:
    def test_widths(self):
        d = parse("tangle v1\nstrands 2\nCUP 1\nX+ 2\nCAP 3\n")
        assert d.widths == (2, 4, 4, 2)

    def test_balanced_and_unbalanced(self):
        d = parse("tangle v1\nstrands 2\nCAP 1\n")
        assert d.n_top == 0
        assert not d.balanced

    def test_closed_component_detection(self, circle, sigma1):
        assert circle.has_closed_components
        assert not sigma1.has_closed_components

    def test_string_link_shape(self, sigma1, turnback, circle, trefoil):
        assert sigma1.is_string_link_shape
        assert trefoil.is_string_link_shape
        assert not turnback.is_string_link_shape
        assert not circle.is_string_link_shape

    def test_orientation_conflict_at_parse(self):
        # a turnback arc forces opposite flags at its two bottom endpoints;
        # the parser reports the conflict against the orient line
        with pytest.raises(DiagramParseError) as exc:
            parse("tangle v1\nstrands 2\norient u u\nCAP 1\nCUP 1\n")
        assert exc.value.line == 3

    def test_orientation_conflict_direct(self):
        with pytest.raises(OrientationError):
            TangleDiagram(
                n_bottom=2,
                slices=(MorseSlice(SliceKind.CAP, 1), MorseSlice(SliceKind.CUP, 1)),
                orient=("u", "u"),
            )

    def test_crossing_signs_parallel(self):
        assert braid_word_diagram(2, [1]).crossing_signs == {0: 1}
        assert braid_word_diagram(2, [-1]).crossing_signs == {0: -1}

    def test_kink_sign_orientation_independent(self):
        # one strand with a positive kink: flipping the strand keeps the
        # sign (signs are keyed by slice index; the crossing is slice 1)
        kink = "tangle v1\nstrands 1\n{o}CUP 2\nX+ 1\nCAP 2\n"
        up = parse(kink.format(o="orient u\n"))
        down = parse(kink.format(o="orient d\n"))
        assert up.crossing_signs == down.crossing_signs == {1: 1}

    def test_validate_report(self, trefoil):
        rep = validate(trefoil)
        assert rep.errors == []
        assert rep.balanced and rep.n_bottom == rep.n_top == 1
        assert rep.n_crossings == 3
        assert (rep.n_plus, rep.n_minus) == (3, 0)
        assert rep.is_string_link_shape and not rep.annular


class TestOperations:
    def test_compose(self, sigma1):
        d = compose(sigma1, sigma1)
        assert d.n_crossings == 2
        assert d.n_bottom == d.n_top == 2

    def test_compose_width_mismatch(self, sigma1):
        with pytest.raises(CompositionError):
            compose(sigma1, identity_tangle(3))

    def test_juxtapose_shifts_positions(self, sigma1):
        d = juxtapose(identity_tangle(1), sigma1)
        assert d.n_bottom == 3
        assert [s.token for s in d.slices] == ["X+ 2"]

    def test_juxtapose_identity_neutral(self, sigma1):
        d = juxtapose(sigma1, identity_tangle(0))
        assert d.slices == sigma1.slices and d.n_bottom == 2

    def test_annular_closure_requires_balanced(self):
        lopsided = parse("tangle v1\nstrands 2\nCAP 1\n")
        with pytest.raises(UnbalancedError):
            annular_closure(lopsided)

    def test_annular_m(self, circle):
        assert annular_closure(circle).m == 0
        assert annular_closure(identity_tangle(3)).m == 3


class TestBuilders:
    def test_identity(self):
        d = identity_tangle(4)
        assert d.widths == (4,)

    def test_braid_word(self):
        d = braid_word_diagram(3, [1, -2, 1])
        assert [s.token for s in d.slices] == ["X+ 1", "X- 2", "X+ 1"]
        assert (d.n_plus, d.n_minus) == (2, 1)

    def test_braid_word_letter_range(self):
        with pytest.raises(DiagramStructureError):
            braid_word_diagram(2, [2])
        with pytest.raises(DiagramStructureError):
            braid_word_diagram(2, [0])

    def test_cut_braid_closure_shape(self):
        d = cut_braid_closure(3, [1, 2])
        assert d.n_bottom == d.n_top == 1
        assert d.is_string_link_shape

    def test_trefoil_cut_is_three_crossings(self):
        assert trefoil_cut().n_crossings == 3

    def test_slice_token_repr(self):
        s = MorseSlice(SliceKind.CROSS_NEG, 2)
        assert s.token == "X- 2"
