"""
Tests for Diagrams and the Configuration Service
"""
import pytest

from spherical_arcs.models.schemas import Boundary, ConfigClassValue, DiagramMode, VertexKind
from spherical_arcs.services.arc_core import Arc
from spherical_arcs.services.configurations import (
    ConfigurationService,
    CrossingError,
    Diagram,
    DiagramError,
    check_orthogonal_homological,
    riedtmann_witnesses,
    vertex_report,
)
from spherical_arcs.services.ptolemy_closure import PreconditionError


@pytest.fixture
def sealed_w2():
    """w = -2 simple-minded system on the sealed window [-1,5]."""
    return Diagram.in_window(-2, -1, 5, [(2, 0), (4, -1)], Boundary.SEALED)


@pytest.fixture
def sealed_w1():
    """w = -1 simple-minded system on the sealed window [-1,2]."""
    return Diagram.in_window(-1, -1, 2, [(1, 0), (2, -1)], Boundary.SEALED)


@pytest.fixture
def minimal_chain():
    """Periodic w = -1 configuration of all arcs (2k+1, 2k)."""
    return Diagram.periodic(-1, 2, [(1, 0)])


class TestDiagram:
    """Test suite for Diagram construction and helpers."""

    def test_window_diagram(self, sealed_w2):
        """Test the basic shape of a window diagram."""
        assert sealed_w2.mode is DiagramMode.WINDOW
        assert sealed_w2.is_sealed
        assert sealed_w2.window.span == 7
        assert sealed_w2.virtual_overarc == Arc(6, -2)
        assert sealed_w2.key() == ((2, 0), (4, -1))

    def test_free_window_has_no_virtual_overarc(self):
        """Test that only sealed windows carry a wrap arc."""
        diagram = Diagram.in_window(-2, 0, 7, [(2, 0), (7, 5)])
        assert diagram.virtual_overarc is None

    def test_rejects_inadmissible_arc(self):
        """Test admissibility checking at construction."""
        with pytest.raises(DiagramError, match="not admissible"):
            Diagram.in_window(-2, 0, 5, [(3, 0)])

    def test_rejects_arc_outside_window(self):
        """Test that arcs must lie inside the window."""
        with pytest.raises(DiagramError, match="leaves the window"):
            Diagram.in_window(-1, 0, 3, [(5, 0)])

    def test_rejects_crossing_in_sealed_window(self):
        """Test that sealed windows are crossing-free by construction."""
        with pytest.raises(CrossingError) as exc:
            Diagram.in_window(-1, 0, 5, [(3, 0), (5, 2)], Boundary.SEALED)
        assert set(exc.value.pair) == {Arc(3, 0), Arc(5, 2)}

    def test_free_window_may_cross(self):
        """Test that free windows defer crossing to classification."""
        diagram = Diagram.in_window(-1, 0, 5, [(3, 0), (5, 2)])
        assert len(diagram.arcs) == 2

    def test_periodic_source_range(self):
        """Test that periodic representatives start in the fundamental domain."""
        with pytest.raises(DiagramError, match="source"):
            Diagram.periodic(-1, 2, [(3, 2)])

    def test_periodic_translates_must_not_cross(self):
        """Test crossing detection between translates."""
        with pytest.raises(CrossingError):
            Diagram.periodic(-1, 2, [(1, -2)])

    def test_needs_window_or_period(self):
        """Test that exactly one presentation is given."""
        with pytest.raises(DiagramError):
            Diagram(-1, frozenset())

    def test_materialize(self, minimal_chain):
        """Test translates by whole periods."""
        assert minimal_chain.materialize(1) == [Arc(-1, -2), Arc(1, 0), Arc(3, 2)]

    def test_restrict(self, minimal_chain):
        """Test restriction of a periodic diagram to a free window."""
        window = minimal_chain.restrict(0, 5)
        assert window.mode is DiagramMode.WINDOW
        assert not window.is_sealed
        assert window.sorted_arcs == [Arc(1, 0), Arc(3, 2), Arc(5, 4)]

    def test_reflected(self, sealed_w2):
        """Test mirroring a sealed window through 0."""
        mirror = sealed_w2.reflected()
        assert (mirror.window.lo, mirror.window.hi) == (-5, 1)
        assert mirror.arcs == {Arc(0, -2), Arc(1, -4)}
        assert mirror.is_sealed

    def test_replace(self, sealed_w2):
        """Test swapping one arc."""
        swapped = sealed_w2.replace(Arc(2, 0), Arc(3, 1))
        assert swapped.arcs == {Arc(3, 1), Arc(4, -1)}
        assert swapped.window == sealed_w2.window


class TestVertexReport:
    """Test suite for vertex classification."""

    def test_sealed_w2(self, sealed_w2):
        """Test inner- and outer-isolated vertices by nesting."""
        report = vertex_report(sealed_w2)
        kinds = {s.vertex: s.kind for s in report.statuses}
        assert kinds[1] is VertexKind.INNER_ISOLATED
        assert kinds[3] is VertexKind.INNER_ISOLATED
        assert kinds[5] is VertexKind.OUTER_ISOLATED
        assert report.inner == {Arc(2, 0): [1], Arc(4, -1): [3]}
        assert report.outer == [5]
        assert report.smallest_overarc(1) == Arc(2, 0)
        assert report.smallest_overarc(3) == Arc(4, -1)
        assert report.virtual_inner == [5]

    def test_no_isolated_vertices(self, sealed_w1):
        """Test a window where every vertex is an endpoint."""
        assert vertex_report(sealed_w1).isolated() == []

    def test_periodic(self, minimal_chain):
        """Test that periodic minimal arcs leave nothing isolated."""
        report = vertex_report(minimal_chain)
        assert report.isolated() == []
        assert report.outer == []

    def test_crossing_input(self):
        """Test that crossing arcs cannot be swept."""
        with pytest.raises(CrossingError):
            vertex_report(Diagram.in_window(-1, 0, 5, [(3, 0), (5, 2)]))


class TestOrthogonality:
    """Test suite for the homological checks."""

    def test_disjoint_pair_passes(self):
        """Test a w = -2 orthogonal pair."""
        report = check_orthogonal_homological(Diagram.in_window(-2, 0, 7, [(2, 0), (7, 5)]))
        assert report.passed
        assert report.agrees

    def test_crossing_pair_fails(self):
        """Test that a crossing w = -1 pair has a nonzero Hom."""
        report = check_orthogonal_homological(Diagram.in_window(-1, 0, 5, [(3, 0), (5, 2)]))
        assert not report.passed
        assert not report.crossing_free
        assert report.agrees
        assert any("Hom((5,2),(3,0))" in failure for failure in report.failures)

    def test_single_arc(self):
        """Test that any single arc is orthogonal."""
        assert check_orthogonal_homological(Diagram.in_window(-3, 0, 10, [(10, 3)])).passed

    def test_riedtmann_witnesses_are_new_arcs(self):
        """Test that witnesses are admissible arcs outside the diagram."""
        diagram = Diagram.in_window(-2, 0, 7, [(2, 0), (7, 5)])
        witnesses = riedtmann_witnesses(diagram)
        assert all(w not in diagram.arcs for w in witnesses)
        assert all(0 <= w.target and w.source <= 7 for w in witnesses)


class TestClassification:
    """Test suite for ConfigurationService.classify."""

    @pytest.fixture
    def service(self):
        return ConfigurationService()

    def test_sms(self, service, sealed_w2):
        """Test a sealed simple-minded system."""
        result = service.classify(sealed_w2)
        assert result.value is ConfigClassValue.SMS
        assert result.violations == []
        assert result.vertices.outer == [5]

    def test_periodic_riedtmann_not_sms(self, service, minimal_chain):
        """Test the periodic Riedtmann configuration with outer-arcs."""
        result = service.classify(minimal_chain)
        assert result.value is ConfigClassValue.RIEDTMANN
        assert [v.code for v in result.violations] == ["outer_arcs"]

    def test_hom_config_not_riedtmann(self, service):
        """Test two outer-isolated vertices for w = -2."""
        result = service.classify(Diagram.in_window(-2, 0, 7, [(2, 0), (7, 5)]))
        assert result.value is ConfigClassValue.HOM_CONFIG
        assert result.vertices.outer == [3, 4]
        assert "riedtmann_outer_isolated" in [v.code for v in result.violations]

    def test_crossing_is_invalid(self, service):
        """Test that crossing arcs are reported as a violation."""
        result = service.classify(Diagram.in_window(-1, 0, 5, [(3, 0), (5, 2)]))
        assert result.value is ConfigClassValue.INVALID
        assert result.violations[0].code == "crossing"

    def test_orthogonal_only(self, service):
        """Test an orthogonal set with too many outer-isolated vertices."""
        result = service.classify(Diagram.in_window(-2, 0, 9, [(2, 0)]))
        assert result.value is ConfigClassValue.ORTHOGONAL
        assert "outer_isolated_excess" in [v.code for v in result.violations]

    def test_inner_count_violation(self, service):
        """Test an arc with too many inner-isolated vertices."""
        result = service.classify(Diagram.in_window(-2, 0, 5, [(5, 0)]))
        assert result.value is ConfigClassValue.ORTHOGONAL
        assert result.violations[0].code == "inner_isolated_count"
        assert result.violations[0].vertices == [1, 2, 3, 4]

    def test_sealed_wrong_outer_count(self, service):
        """Test a sealed Riedtmann window without the right outer count."""
        result = service.classify(Diagram.in_window(-2, 0, 2, [(2, 0)], Boundary.SEALED))
        assert result.value is ConfigClassValue.RIEDTMANN
        assert "sealed_outer_isolated" in [v.code for v in result.violations]

    def test_at_least(self, service, sealed_w2):
        """Test class ordering."""
        result = service.classify(sealed_w2)
        assert result.at_least(ConfigClassValue.RIEDTMANN)
        assert result.at_least(ConfigClassValue.HOM_CONFIG)


class TestUnfoldAndCoverage:
    """Test suite for unfolding sealed windows and minimal-arc coverage."""

    @pytest.fixture
    def service(self):
        return ConfigurationService()

    def test_unfold_w1(self, service, sealed_w1):
        """Test one wrap around the w = -1 window."""
        grown = service.unfold(sealed_w1, 1)
        assert grown.arcs == {Arc(1, 0), Arc(2, -1), Arc(3, -2)}
        assert (grown.window.lo, grown.window.hi) == (-2, 3)
        assert vertex_report(grown).outer == []

    def test_unfold_w2(self, service, sealed_w2):
        """Test one wrap around the w = -2 window."""
        grown = service.unfold(sealed_w2, 1)
        assert Arc(6, -2) in grown.arcs
        assert (grown.window.lo, grown.window.hi) == (-2, 7)
        assert vertex_report(grown).outer == [7]
        assert service.is_sealed_valid(grown)

    def test_unfold_depth_zero(self, service, sealed_w2):
        """Test that depth zero changes nothing."""
        assert service.unfold(sealed_w2, 0) == sealed_w2

    def test_unfold_needs_sealed_window(self, service):
        """Test that free windows cannot be unfolded."""
        with pytest.raises(PreconditionError):
            service.unfold(Diagram.in_window(-1, 0, 3, [(1, 0), (3, 2)]), 1)

    def test_unfold_needs_sealed_validity(self, service):
        """Test that sealed windows must hold a simple-minded system."""
        with pytest.raises(DiagramError):
            service.unfold(Diagram.in_window(-2, 0, 3, [], Boundary.SEALED), 1)

    def test_sealed_validity(self, service, sealed_w1, sealed_w2):
        """Test the sealed-valid predicate."""
        assert service.is_sealed_valid(sealed_w1)
        assert service.is_sealed_valid(sealed_w2)
        assert not service.is_sealed_valid(Diagram.in_window(-2, 0, 7, [(2, 0), (7, 5)]))

    def test_coverage_w1(self, service, sealed_w1):
        """Test coverage of the w = -1 sealed window."""
        assert service.minimal_arc_coverage(sealed_w1)

    def test_coverage_w2(self, service, sealed_w2):
        """Test coverage of the w = -2 sealed window."""
        assert service.minimal_arc_coverage(sealed_w2)

    def test_periodic_restriction_fails_coverage(self, service, minimal_chain):
        """Test that odd sources never produce even-source minimal arcs."""
        window = minimal_chain.restrict(0, 9)
        uncovered = service.uncovered_minimal_arcs(window)
        assert uncovered
        assert all(a.source % 2 == 0 for a in uncovered)
        assert not service.minimal_arc_coverage(window)

    def test_coverage_rejects_periodic(self, service, minimal_chain):
        """Test that periodic diagrams must be restricted first."""
        with pytest.raises(PreconditionError):
            service.minimal_arc_coverage(minimal_chain)
