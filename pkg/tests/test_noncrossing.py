"""
Tests for Noncrossing Partitions and the Kreweras Complement
"""
import pytest

from spherical_arcs.models.schemas import Boundary
from spherical_arcs.services.configurations import CrossingError, Diagram
from spherical_arcs.services.noncrossing import (
    NoncrossingService,
    kreweras_complement,
    maximal_complements_brute_force,
    partition_crosses,
)
from spherical_arcs.services.ptolemy_closure import PreconditionError


class TestPartitionHelpers:
    """Test suite for the partition primitives."""

    def test_interleaved_blocks_cross(self):
        """Test a < b < c < d with alternating blocks."""
        assert partition_crosses([(1, 5), (3, 7)])

    def test_nested_blocks_do_not_cross(self):
        """Test that nesting is allowed."""
        assert not partition_crosses([(1, 7), (3, 5)])
        assert not partition_crosses([(1,), (3,), (5,)])

    def test_kreweras_of_single_pair(self):
        """Test the complement of one two-point block."""
        assert kreweras_complement([(1, 5)], [-1, 3, 7]) == [(-1, 7), (3,)]

    def test_kreweras_of_singletons_is_one_block(self):
        """Test that singletons leave the dual points free to merge."""
        assert kreweras_complement([(1,), (5,)], [-1, 3, 7]) == [(-1, 3, 7)]

    @pytest.mark.parametrize("blocks,dual", [
        ([(1, 5)], [-1, 3, 7]),
        ([(1,), (5, 9)], [-1, 3, 7, 11]),
        ([(1, 9), (5,)], [-1, 3, 7, 11]),
        ([(1, 5, 9), (13,)], [-1, 3, 7, 11, 15]),
    ])
    def test_kreweras_matches_brute_force(self, blocks, dual):
        """Test maximality against every noncrossing complement."""
        assert maximal_complements_brute_force(blocks, dual) == [kreweras_complement(blocks, dual)]


class TestNoncrossingService:
    """Test suite for NoncrossingService."""

    @pytest.fixture
    def service(self):
        return NoncrossingService()

    def test_chain_through_nested_arcs(self, service):
        """Test a chain via target 1 and source 2."""
        result = service.nc_partition(Diagram.in_window(-1, 0, 3, [(2, 1), (3, 0)]))
        assert result.nc.halves() == [[0.5, 2.5]]
        assert result.kreweras.halves() == [[-0.5, 3.5], [1.5]]
        assert result.nc.finite

    def test_single_arc(self, service):
        """Test that an arc with an even target gives no primal chain."""
        result = service.nc_partition(Diagram.in_window(-1, 0, 1, [(1, 0)]))
        assert result.nc.halves() == [[0.5]]
        assert result.kreweras.halves() == [[-0.5, 1.5]]

    def test_empty_diagram(self, service):
        """Test that no arcs give singletons and nothing escapes."""
        result = service.nc_partition(Diagram.in_window(-1, 0, 3, []))
        assert result.nc.halves() == [[0.5], [2.5]]
        assert result.nc.escaping == frozenset()

    def test_sealed_system_closes_through_wrap(self, service):
        """Test that the chain from border to border is closed by the wrap arc."""
        result = service.nc_partition(Diagram.in_window(-1, -1, 2, [(1, 0), (2, -1)], Boundary.SEALED))
        assert result.nc.halves() == [[-1.5, 2.5], [0.5]]
        assert result.kreweras.halves() == [[-0.5, 1.5]]
        assert result.nc.finite
        assert result.kreweras.finite

    def test_sealed_empty_window_is_open(self, service):
        """Test that an unrealized complement block is flagged in a sealed window."""
        result = service.nc_partition(Diagram.in_window(-1, 0, 3, [], Boundary.SEALED))
        assert result.nc.finite
        assert result.kreweras.halves() == [[-0.5, 1.5, 3.5]]
        assert result.kreweras.escaping == frozenset({0})

    def test_sealed_odd_span_is_open(self, service):
        """Test that the border points of an odd span never share a block."""
        result = service.nc_partition(Diagram.in_window(-1, 0, 2, [(1, 0)], Boundary.SEALED))
        assert result.nc.halves() == [[0.5], [2.5]]
        assert result.nc.escaping == frozenset({1})

    def test_sms_agreement_sealed(self, service):
        """Test agreement on a sealed simple-minded system."""
        agreement = service.sms_iff_finite_blocks(Diagram.in_window(-1, -1, 2, [(1, 0), (2, -1)], Boundary.SEALED))
        assert agreement.is_sms
        assert agreement.all_blocks_finite
        assert agreement.agree

    def test_sms_agreement_second_sealed(self, service):
        """Test agreement on the other sealed system of [0,3]."""
        agreement = service.sms_iff_finite_blocks(Diagram.in_window(-1, 0, 3, [(1, 0), (3, 2)], Boundary.SEALED))
        assert agreement.is_sms
        assert agreement.all_blocks_finite
        assert agreement.agree

    def test_sms_agreement_nested_sealed(self, service):
        """Test agreement on the nested system of [0,3]."""
        agreement = service.sms_iff_finite_blocks(Diagram.in_window(-1, 0, 3, [(3, 0), (2, 1)], Boundary.SEALED))
        assert agreement.is_sms
        assert agreement.all_blocks_finite
        assert agreement.result.kreweras.halves() == [[-0.5, 3.5], [1.5]]

    @pytest.mark.parametrize("lo,hi,arcs", [
        (0, 3, []),
        (0, 3, [(1, 0)]),
        (0, 3, [(3, 0)]),
        (0, 2, [(1, 0)]),
        (-1, 2, [(2, -1)]),
    ])
    def test_sealed_non_systems_have_open_blocks(self, service, lo, hi, arcs):
        """Test that sealed diagrams short of a system have a block that is not finite."""
        agreement = service.sms_iff_finite_blocks(Diagram.in_window(-1, lo, hi, arcs, Boundary.SEALED))
        assert not agreement.is_sms
        assert not agreement.all_blocks_finite
        assert agreement.agree

    def test_periodic_restriction_escapes(self, service):
        """Test that the Riedtmann restriction has an infinite block."""
        window = Diagram.periodic(-1, 2, [(1, 0)]).restrict(0, 9)
        agreement = service.sms_iff_finite_blocks(window)
        assert agreement.riedtmann
        assert not agreement.is_sms
        assert not agreement.all_blocks_finite
        assert agreement.agree

    def test_requires_w_minus_one(self, service):
        """Test that other weights are rejected."""
        with pytest.raises(PreconditionError):
            service.nc_partition(Diagram.in_window(-2, 0, 3, [(2, 0)]))

    def test_requires_window(self, service):
        """Test that periodic diagrams are rejected."""
        with pytest.raises(PreconditionError):
            service.nc_partition(Diagram.periodic(-1, 2, [(1, 0)]))

    def test_rejects_crossing(self, service):
        """Test that crossing arcs have no partition."""
        with pytest.raises(CrossingError):
            service.nc_partition(Diagram.in_window(-1, 0, 5, [(3, 0), (5, 2)]))
