"""
Tests for the acceptance sweeps
"""
import pytest

from spherical_arcs.services.arc_core import Weight
from spherical_arcs.workers import sweeps


def assert_clean(result):
    assert result["status"] == "completed", result.get("message")
    assert result["failures"] == 0, result["rows"][~result["rows"]["ok"]].to_string()
    assert not result["rows"].empty


class TestSmallSweeps:
    """Small-parameter runs of every sweep."""

    def test_mutation_laws(self):
        """Test fan sizes and oracle agreement on short windows."""
        assert_clean(sweeps.mutation_law_sweep(weights=[-2, -3], max_span_periods=2))

    def test_iteration(self):
        """Test iterated mutation on short sealed windows."""
        assert_clean(sweeps.iteration_sweep(weights=[-2, -3], max_span_periods=2))

    def test_serre(self):
        """Test Serre duality on a narrow range."""
        assert_clean(sweeps.serre_duality_sweep(weights=[-1, -2], lo=-8, hi=8))

    def test_closure_policies(self):
        """Test policy agreement and splits on a few samples."""
        assert_clean(sweeps.closure_policy_sweep(weights=[-1, -2], samples=25, seed=7))

    def test_sms_coverage(self):
        """Test coverage of minimal arcs before and after unfolding."""
        assert_clean(sweeps.sms_coverage_sweep(weights=[-1, -2], max_span_periods=2, unfold_depth=2))

    def test_counts(self):
        """Test enumerated counts against the closed form."""
        result = sweeps.enumeration_count_table(weights=[-1, -2], max_span_periods=3)
        assert_clean(result)
        assert list(result["rows"][result["rows"]["w"] == -1]["count"]) == [1, 2, 5]

    def test_nc(self):
        """Test the noncrossing agreement on small windows, systems and non-systems alike."""
        result = sweeps.nc_agreement_sweep(max_span=6)
        assert_clean(result)
        rows = result["rows"]
        assert rows["is_sms"].any()
        assert (~rows["is_sms"] & ~rows["all_blocks_finite"]).any()
        assert list(rows[rows["is_sms"]].groupby("span").size()) == [1, 2, 5]

    def test_graphs(self):
        """Test outer-isolated invariance along graph edges."""
        assert_clean(sweeps.graph_invariance_sweep(weights=[-2], max_span_periods=2))

    def test_failure_is_reported(self):
        """Test that exceptions become a failed status."""
        result = sweeps.serre_duality_sweep(weights=[0])
        assert result["status"] == "failed"
        assert result["error"] == "InvalidWeightError"


class TestFussCatalan:
    """Test suite for the closed-form counts."""

    @pytest.mark.parametrize("w,counts", [
        (-1, [1, 1, 2, 5, 14]),
        (-2, [1, 2, 7, 30]),
        (-3, [1, 3, 15, 91]),
    ])
    def test_first_values(self, w, counts):
        """Test the first Fuss-Catalan numbers for each weight."""
        assert [sweeps.fuss_catalan(Weight(w), k) for k in range(len(counts))] == counts


@pytest.mark.slow
class TestFullSweeps:
    """Full-size runs; deselect with -m 'not slow'."""

    @pytest.mark.parametrize("name", sorted(sweeps.SWEEPS))
    def test_sweep(self, name):
        """Test a sweep at its default parameters."""
        assert_clean(sweeps.SWEEPS[name]())
