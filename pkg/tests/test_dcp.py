"""DCP parsing, canonical emission, diagnostics, and DOT rendering."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dclat import (
    EdgeColoredPoset,
    ParseError,
    ValidationError,
    boolean_lattice,
    cartesian_product,
    dual,
    random_poset,
)
from dclat.dcp import emit, parse, parse_document, render_dot


class TestParse:
    def test_one_vertex_poset(self):
        p = parse("type vertex-poset\nvertex a color 1\n")
        assert p.vertices == ("a",) and p.colors == {"a": 1}

    def test_fig_poset_file(self, fig_poset, data_dir):
        assert len(fig_poset) == 6 and len(fig_poset.covers) == 6

    def test_comments_and_blank_lines(self):
        text = "# heading\n\ntype edge-lattice\nvertex a\nvertex b # trailing\nedge a b color 3\n"
        p = parse(text)
        assert set(p.covers) == {("a", "b", 3)}

    def test_missing_type(self):
        with pytest.raises(ParseError, match="type"):
            parse("vertex a color 1\n")

    def test_unknown_kind(self):
        with pytest.raises(ParseError):
            parse("type mystery\n")

    def test_bad_token(self):
        with pytest.raises(ParseError) as exc:
            parse("type vertex-poset\nvortex a color 1\n")
        assert exc.value.line == 2

    def test_bad_name(self):
        with pytest.raises(ParseError):
            parse("type vertex-poset\nvertex a! color 1\n")

    def test_undeclared_edge_vertex_line(self):
        with pytest.raises(ValidationError) as exc:
            parse("type vertex-poset\nvertex a color 1\nedge a b\n")
        assert exc.value.line == 3

    def test_missing_vertex_color_in_poset(self):
        with pytest.raises(ValidationError):
            parse("type vertex-poset\nvertex a\n")

    def test_edge_color_in_poset_rejected(self):
        with pytest.raises(ValidationError):
            parse("type vertex-poset\nvertex a color 1\nvertex b color 1\nedge a b color 1\n")

    def test_missing_edge_color_in_lattice(self):
        with pytest.raises(ValidationError):
            parse("type edge-lattice\nvertex a\nvertex b\nedge a b\n")

    def test_cycle_is_validation_error(self):
        with pytest.raises(ValidationError):
            parse("type edge-lattice\nvertex a\nvertex b\nedge a b color 1\nedge b a color 1\n")


class TestEmit:
    def test_round_trip_golden_files(self, data_dir):
        for name in ("fig1P.dcp", "fig1L.dcp", "fig5Q.dcp", "m3.dcp", "n5.dcp"):
            text = (data_dir / name).read_text()
            structure = parse(text)
            assert parse(emit(structure)) == structure
            assert emit(parse(emit(structure))) == emit(structure)

    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 10**6))
    def test_round_trip_random(self, seed):
        p = random_poset(6, 0.4, seed)
        assert parse(emit(p)) == p

    def test_product_labels_are_sanitized(self):
        a = EdgeColoredPoset(["x0", "x1"], [("x0", "x1", 1)])
        prod = cartesian_product(a, a)
        text = emit(prod)
        out = parse(text)
        assert len(out) == 4 and parse(emit(out)) == out

    def test_dual_labels_are_sanitized(self, fig_lattice):
        text = emit(dual(fig_lattice))
        assert parse(text) is not None


class TestRenderDot:
    def test_b2_render_counts(self):
        dot = render_dot(boolean_lattice(2))
        assert dot.count("->") == 4
        assert dot.count("[label=") >= 8  # 4 nodes + 4 edges

    def test_rank_groups_present(self, fig_lattice):
        dot = render_dot(fig_lattice)
        assert dot.count("rank=same") == 7  # levels 0..6

    def test_deterministic(self, fig_poset, fig_lattice):
        assert render_dot(fig_poset) == render_dot(fig_poset)
        assert render_dot(fig_lattice) == render_dot(fig_lattice)
