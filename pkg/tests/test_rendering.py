"""
Tests for the Rendering Service
"""
import pytest

from spherical_arcs.models.schemas import Boundary, RenderFormat
from spherical_arcs.services.arc_core import Arc
from spherical_arcs.services.configurations import Diagram
from spherical_arcs.services.rendering import DiagramRenderer, RenderRangeError, RenderSpec, render

ASCII = RenderSpec(format=RenderFormat.ASCII)


@pytest.fixture
def sealed_w1():
    return Diagram.in_window(-1, -1, 2, [(1, 0), (2, -1)], Boundary.SEALED)


class TestAsciiRendering:
    """Test suite for the bracket-row pictures."""

    def test_sealed_window(self, sealed_w1):
        """Test rows from the longest arc down, with the wrap arc dotted."""
        text = render(sealed_w1, ASCII).decode("utf-8")
        assert text.splitlines() == [
            "[..............]",
            "   [--------]",
            "      [--]",
            "+--+--+--+--+--+",
            "-2 -1 0  1  2  3",
        ]

    def test_empty_diagram_is_only_a_ruler(self):
        """Test that no arcs leave the ruler and labels."""
        text = render(Diagram.in_window(-1, 0, 2, []), ASCII).decode("utf-8")
        assert text == "+-+-+\n0 1 2\n"

    def test_without_labels(self):
        """Test that labels can be switched off."""
        spec = RenderSpec(format=RenderFormat.ASCII, labels=False)
        text = render(Diagram.in_window(-1, 0, 1, [(1, 0)]), spec).decode("utf-8")
        assert text.splitlines() == ["[-]", "+-+"]

    def test_derived_arcs_are_dotted(self):
        """Test that extra arcs are drawn but not as solid."""
        text = render(Diagram.in_window(-1, 0, 1, [(1, 0)]), ASCII, derived=[Arc(3, 0)]).decode("utf-8")
        assert text.splitlines()[0] == "[.....]"

    def test_deterministic(self, sealed_w1):
        """Test byte-identical output across calls."""
        assert render(sealed_w1, ASCII) == render(sealed_w1, ASCII)


class TestSvgRendering:
    """Test suite for the matplotlib pictures."""

    def test_arc_groups(self, sealed_w1):
        """Test that every arc carries a stable group id."""
        svg = render(sealed_w1, derived=[Arc(4, 1)]).decode("utf-8")
        assert svg.startswith("<?xml")
        for gid in ("arc-solid-0", "arc-solid-1", "arc-virtual-0", "arc-derived-0", "number-line"):
            assert f'id="{gid}"' in svg

    def test_svg_deterministic(self, sealed_w1):
        """Test that the hash salt and missing date make output stable."""
        assert render(sealed_w1) == render(sealed_w1)

    def test_periodic_is_drawn_over_three_periods(self):
        """Test that a periodic diagram is drawn through a restriction."""
        svg = render(Diagram.periodic(-1, 2, [(1, 0)])).decode("utf-8")
        assert 'id="arc-solid-2"' in svg


class TestRenderLimits:
    """Test suite for render size limits."""

    def test_range_too_large(self):
        """Test that huge windows are refused."""
        renderer = DiagramRenderer()
        renderer.settings = renderer.settings.model_copy(update={"render_max_vertices": 5})
        with pytest.raises(RenderRangeError) as exc:
            renderer.render(Diagram.in_window(-1, 0, 9, []), ASCII)
        assert exc.value.size == 10
        assert exc.value.limit == 5
