"""Tests for sweep configuration and the cross-checking sweep itself."""

import pytest

from figurate.verify import (
    CHECK_NAMES,
    Counterexample,
    VerifySweepConfig,
    run_verify_sweep,
)


class TestConfig:
    def test_defaults(self):
        config = VerifySweepConfig()
        assert config.m_from == 3
        assert config.m_to == 50
        assert config.n_max == 2000
        assert config.checks == CHECK_NAMES
        assert config.delta_offset == 2

    def test_checks_normalized_to_canonical_order(self):
        config = VerifySweepConfig(checks=("bounds", "cross-formula"))
        assert config.checks == ("cross-formula", "bounds")

    def test_rejects_order_below_three(self):
        with pytest.raises(ValueError):
            VerifySweepConfig(m_from=2)

    def test_rejects_reversed_order_range(self):
        with pytest.raises(ValueError):
            VerifySweepConfig(m_from=6, m_to=5)

    def test_rejects_unknown_check(self):
        with pytest.raises(ValueError, match="bogus"):
            VerifySweepConfig(checks=("bogus",))

    def test_rejects_bad_offset(self):
        with pytest.raises(ValueError):
            VerifySweepConfig(delta_offset=0)

    def test_rejects_tiny_index_cap(self):
        with pytest.raises(ValueError):
            VerifySweepConfig(n_max=2)


class TestSweep:
    def test_narrow_sweep_passes_cleanly(self):
        report = run_verify_sweep(VerifySweepConfig(m_to=8, n_max=60))
        assert report.passed
        assert report.first_counterexample is None
        assert [s.check for s in report.summaries] == list(CHECK_NAMES)
        for summary in report.summaries:
            assert summary.passed
            assert summary.counterexample is None
            assert summary.notes == ()

    def test_summary_lookup(self):
        report = run_verify_sweep(VerifySweepConfig(m_to=5, n_max=30))
        assert report.summary_for("bounds").check == "bounds"
        with pytest.raises(KeyError):
            report.summary_for("nonsense")

    def test_subset_runs_only_selected_checks(self):
        report = run_verify_sweep(
            VerifySweepConfig(m_to=5, n_max=30, checks=("margins",))
        )
        assert [s.check for s in report.summaries] == ["margins"]

    def test_corruption_is_caught_by_cross_formula(self):
        report = run_verify_sweep(
            VerifySweepConfig(m_to=8, n_max=60), corrupt_at=(4, 7)
        )
        assert not report.passed
        failing = report.summary_for("cross-formula")
        assert not failing.passed
        counterexample = failing.counterexample
        assert isinstance(counterexample, Counterexample)
        assert (counterexample.m, counterexample.n) == (4, 7)
        assert counterexample.witness
        assert report.first_counterexample is counterexample

    def test_corruption_outside_window_is_invisible(self):
        report = run_verify_sweep(
            VerifySweepConfig(m_to=5, n_max=30), corrupt_at=(9, 3)
        )
        assert report.passed

    def test_lag_one_sweep_passes(self):
        report = run_verify_sweep(
            VerifySweepConfig(m_to=8, n_max=60, delta_offset=1)
        )
        assert report.passed
