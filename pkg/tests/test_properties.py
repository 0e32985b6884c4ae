"""
Property-based tests for the Hom calculus, closures and classification
"""
from hypothesis import given, settings
from hypothesis import strategies as st

from spherical_arcs.models.schemas import ClosurePolicy
from spherical_arcs.services.arc_core import Arc, Weight, arcs_cross
from spherical_arcs.services.configurations import ConfigurationService, Diagram
from spherical_arcs.services.hom_calculus import hom_dim
from spherical_arcs.services.ptolemy_closure import ClosureService

weights = st.integers(min_value=-4, max_value=-1).map(Weight)


@st.composite
def admissible_arc(draw, weight, lo=-20, hi=20, max_winding=3):
    target = draw(st.integers(min_value=lo, max_value=hi))
    length = weight.size + weight.modulus * draw(st.integers(min_value=0, max_value=max_winding))
    return Arc(target + length, target)


@st.composite
def weighted_pair(draw):
    weight = draw(weights)
    return weight, draw(admissible_arc(weight)), draw(admissible_arc(weight))


@st.composite
def noncrossing_set(draw, lo=0, hi=11):
    weight = draw(weights)
    candidates = draw(st.lists(admissible_arc(weight, lo, hi, max_winding=1), max_size=6, unique=True))
    chosen = []
    for arc in candidates:
        if arc.source <= hi and not any(arcs_cross(arc, other) for other in chosen):
            chosen.append(arc)
    return weight, chosen


class TestHomProperties:
    """Properties of Hom dimensions on random admissible pairs."""

    @given(weighted_pair())
    def test_serre_duality(self, case):
        """Test Hom(x, y) = Hom(y, Sigma^w x)."""
        weight, x, y = case
        assert hom_dim(weight, x, y) == hom_dim(weight, y, x.shifted(weight.w))

    @given(weighted_pair(), st.integers(min_value=-15, max_value=15))
    def test_shift_invariance(self, case, k):
        """Test that Sigma^k acts by an autoequivalence."""
        weight, x, y = case
        assert hom_dim(weight, x, y) == hom_dim(weight, x.shifted(k), y.shifted(k))

    @given(weighted_pair())
    def test_dimensions_are_small(self, case):
        """Test that Hom spaces between indecomposables have dimension at most one."""
        weight, x, y = case
        assert hom_dim(weight, x, y) in (0, 1)


class TestClosureProperties:
    """Properties of extension closures on random arc sets."""

    @settings(max_examples=60, deadline=None)
    @given(noncrossing_set())
    def test_idempotent(self, case):
        """Test that closing twice adds nothing."""
        weight, arcs = case
        service = ClosureService()
        once = service.closure(weight, arcs).arcs
        assert service.closure(weight, once).arcs == once

    @settings(max_examples=60, deadline=None)
    @given(noncrossing_set())
    def test_contains_input_and_keeps_endpoints(self, case):
        """Test that derived arcs only join endpoints of input arcs."""
        weight, arcs = case
        result = ClosureService().closure(weight, arcs)
        endpoints = {v for a in arcs for v in (a.source, a.target)}
        assert set(arcs) <= result.arcs
        assert all(a.source in endpoints and a.target in endpoints for a in result.arcs)

    @settings(max_examples=60, deadline=None)
    @given(noncrossing_set())
    def test_every_derived_arc_has_parents(self, case):
        """Test that levels above one carry their parents."""
        weight, arcs = case
        result = ClosureService().closure(weight, arcs)
        for arc in result.derived():
            assert result.level[arc] >= 2
            assert arc in result.parents

    @settings(max_examples=60, deadline=None)
    @given(noncrossing_set())
    def test_policies_agree_on_noncrossing_input(self, case):
        """Test that class II closure already saturates noncrossing sets."""
        weight, arcs = case
        service = ClosureService()
        assert service.closure(weight, arcs, ClosurePolicy.BOTH).arcs == \
            service.closure(weight, arcs, ClosurePolicy.CLASS_II_ONLY).arcs


class TestClassificationProperties:
    """Properties of the classifier."""

    @settings(max_examples=60, deadline=None)
    @given(noncrossing_set(), st.integers(min_value=-10, max_value=10))
    def test_translation_invariance(self, case, k):
        """Test that shifting a window and its arcs keeps the class."""
        weight, arcs = case
        service = ConfigurationService()
        here = service.classify(Diagram.in_window(weight, 0, 11, arcs))
        moved = service.classify(Diagram.in_window(weight, k, 11 + k, [a.shifted(-k) for a in arcs]))
        assert here.value is moved.value
