"""
Tests for Diagram I/O
"""
import json

import pytest

from spherical_arcs.models.schemas import Boundary, DiagramMode
from spherical_arcs.services.arc_core import Arc
from spherical_arcs.services.configurations import Diagram
from spherical_arcs.services.diagram_io import DiagramParseError, load_diagram, parse_diagram, serialize_diagram


def document(**fields):
    base = {"format": 1, "w": -2, "mode": "window", "window": {"lo": -1, "hi": 5, "boundary": "sealed"},
            "arcs": [[2, 0], [4, -1]]}
    base.update(fields)
    return json.dumps(base)


class TestParseDiagram:
    """Test suite for parse_diagram."""

    def test_window_document(self):
        """Test a sealed window document."""
        diagram = parse_diagram(document())
        assert diagram.mode is DiagramMode.WINDOW
        assert diagram.is_sealed
        assert diagram.arcs == {Arc(2, 0), Arc(4, -1)}
        assert int(diagram.w) == -2

    def test_periodic_document(self):
        """Test a periodic document without a window."""
        diagram = parse_diagram(json.dumps({"w": -1, "mode": "periodic", "period": 2, "arcs": [[1, 0]]}))
        assert diagram.is_periodic
        assert diagram.period == 2

    def test_default_weight(self):
        """Test that --w fills a missing weight."""
        raw = json.dumps({"mode": "window", "window": {"lo": 0, "hi": 1}, "arcs": [[1, 0]]})
        assert int(parse_diagram(raw, default_w=-1).w) == -1
        with pytest.raises(DiagramParseError) as exc:
            parse_diagram(raw)
        assert exc.value.errors[0].pointer == "/w"

    def test_not_json(self):
        """Test that broken JSON points at the root."""
        with pytest.raises(DiagramParseError) as exc:
            parse_diagram("{not json")
        assert exc.value.errors[0].pointer == ""

    def test_source_must_exceed_target(self):
        """Test the pointer into the arc list."""
        with pytest.raises(DiagramParseError) as exc:
            parse_diagram(document(arcs=[[0, 2]]))
        detail = exc.value.errors[0]
        assert detail.pointer == "/arcs/0"
        assert detail.message == "source must exceed target"

    def test_every_problem_is_reported(self):
        """Test that errors are collected rather than stopping at the first."""
        with pytest.raises(DiagramParseError) as exc:
            parse_diagram(document(arcs=[[3, 0], [2, 0], [2, 0], [8, 0]]))
        pointers = [e.pointer for e in exc.value.errors]
        assert pointers == ["/arcs/0", "/arcs/2", "/arcs/3"]
        assert "not admissible" in exc.value.errors[0].message
        assert "duplicate of /arcs/1" in exc.value.errors[1].message
        assert "leaves the window" in exc.value.errors[2].message

    def test_sealed_window_rejects_crossing(self):
        """Test that a sealed window names both crossing arcs."""
        with pytest.raises(DiagramParseError) as exc:
            parse_diagram(document(window={"lo": 0, "hi": 6, "boundary": "sealed"}, arcs=[[2, 0], [3, 1]]))
        assert exc.value.errors[0].pointer == "/arcs"
        assert "cross" in exc.value.errors[0].message

    def test_free_window_accepts_crossing(self):
        """Test that crossing arcs parse in free windows so check can report them."""
        diagram = parse_diagram(document(window={"lo": 0, "hi": 6}, arcs=[[2, 0], [3, 1]]))
        assert diagram.window.boundary is Boundary.FREE

    def test_periodic_translates_crossing(self):
        """Test that an arc crossing its own translate is rejected."""
        raw = json.dumps({"w": -1, "mode": "periodic", "period": 2, "arcs": [[1, -2]]})
        with pytest.raises(DiagramParseError) as exc:
            parse_diagram(raw)
        assert "translates" in exc.value.errors[0].message

    def test_periodic_source_range(self):
        """Test that periodic sources lie in one period."""
        raw = json.dumps({"w": -1, "mode": "periodic", "period": 2, "arcs": [[3, 2]]})
        with pytest.raises(DiagramParseError) as exc:
            parse_diagram(raw)
        assert exc.value.errors[0].pointer == "/arcs/0"

    def test_schema_errors_carry_pointers(self):
        """Test that pydantic locations become pointers."""
        with pytest.raises(DiagramParseError) as exc:
            parse_diagram(json.dumps({"w": -1, "mode": "window", "arcs": []}))
        assert exc.value.errors

        with pytest.raises(DiagramParseError) as exc:
            parse_diagram(json.dumps({"w": 1, "mode": "window", "window": {"lo": 0, "hi": 1}}))
        assert exc.value.errors[0].pointer == "/w"


class TestSerializeDiagram:
    """Test suite for writing documents."""

    def test_round_trip(self):
        """Test that parse undoes serialize."""
        diagram = Diagram.in_window(-3, -3, 10, [(3, 0), (7, 4), (8, -3)], Boundary.SEALED)
        again = parse_diagram(serialize_diagram(diagram))
        assert again == diagram

    def test_periodic_omits_window(self):
        """Test that absent fields are left out."""
        payload = json.loads(serialize_diagram(Diagram.periodic(-1, 2, [(1, 0)])))
        assert "window" not in payload
        assert payload["arcs"] == [[1, 0]]
        assert payload["format"] == 1

    def test_load_from_file(self, tmp_path):
        """Test reading a document from disk."""
        path = tmp_path / "diagram.json"
        path.write_bytes(serialize_diagram(Diagram.in_window(-1, 0, 3, [(3, 0), (2, 1)], Boundary.SEALED)))
        assert load_diagram(path).arcs == {Arc(3, 0), Arc(2, 1)}
