"""End-to-end tests for the command-line interface."""

import pytest
from click.testing import CliRunner

from figurate.cli import cli
from figurate.seqio import parse_bfile


@pytest.fixture
def runner():
    return CliRunner()


class TestGen:
    def test_plain(self, runner):
        result = runner.invoke(cli, ["gen", "--m", "3", "--count", "10"])
        assert result.exit_code == 0
        assert result.output == "1 3 6 10 15 21 28 36 45 55\n"

    def test_bfile(self, runner):
        result = runner.invoke(
            cli, ["gen", "--m", "6", "--count", "5", "--format", "bfile"]
        )
        assert result.exit_code == 0
        assert result.output == "1 1\n2 6\n3 15\n4 28\n5 45\n"

    def test_bfile_reparses_losslessly(self, runner):
        result = runner.invoke(
            cli, ["gen", "--m", "7", "--count", "20", "--format", "bfile"]
        )
        records = parse_bfile(result.output)
        assert [r.index for r in records] == list(range(1, 21))
        plain = runner.invoke(cli, ["gen", "--m", "7", "--count", "20"])
        assert [str(r.value) for r in records] == plain.output.split()

    def test_csv(self, runner):
        result = runner.invoke(
            cli, ["gen", "--m", "3", "--count", "2", "--format", "csv"]
        )
        assert result.exit_code == 0
        assert result.output == "n,S\n1,1\n2,3\n"

    def test_missing_order_is_usage_error(self, runner):
        result = runner.invoke(cli, ["gen", "--count", "3"])
        assert result.exit_code == 2

    def test_order_below_three_is_usage_error(self, runner):
        result = runner.invoke(cli, ["gen", "--m", "2", "--count", "3"])
        assert result.exit_code == 2
        assert "--m" in result.stderr

    def test_zero_count_is_usage_error(self, runner):
        result = runner.invoke(cli, ["gen", "--m", "3", "--count", "0"])
        assert result.exit_code == 2

    def test_unknown_format_is_usage_error(self, runner):
        result = runner.invoke(
            cli, ["gen", "--m", "3", "--count", "3", "--format", "json"]
        )
        assert result.exit_code == 2


class TestQuotients:
    def test_plain(self, runner):
        result = runner.invoke(cli, ["quotients", "--m", "3", "--count", "3"])
        assert result.exit_code == 0
        assert result.output == "3 2 5/3\n"

    def test_csv(self, runner):
        result = runner.invoke(
            cli, ["quotients", "--m", "4", "--count", "2", "--format", "csv"]
        )
        assert result.exit_code == 0
        assert result.output == "n,x\n1,4\n2,9/4\n"

    def test_bfile_is_refused(self, runner):
        result = runner.invoke(
            cli, ["quotients", "--m", "3", "--count", "3", "--format", "bfile"]
        )
        assert result.exit_code == 2
        assert "integer" in result.stderr


class TestAnalyze:
    def test_log_concave_from_stdin(self, runner):
        result = runner.invoke(cli, ["analyze"], input="1 3 6 10 15\n")
        assert result.exit_code == 0
        assert "classification: log-concave" in result.output
        assert "quotient direction: non-increasing" in result.output

    def test_log_convex(self, runner):
        result = runner.invoke(cli, ["analyze"], input="1 1 2 6 24\n")
        assert result.exit_code == 0
        assert "classification: log-convex" in result.output
        assert "quotient direction: non-decreasing" in result.output

    def test_geometric(self, runner):
        result = runner.invoke(cli, ["analyze"], input="2 4 8 16\n")
        assert result.exit_code == 0
        assert "classification: geometric (both)" in result.output
        assert "quotient direction: constant" in result.output

    def test_neither_exits_one_with_witnesses(self, runner):
        result = runner.invoke(cli, ["analyze"], input="1 1 2 3 5 8\n")
        assert result.exit_code == 1
        assert "classification: neither" in result.output
        assert "first concavity violation: j=2" in result.output
        assert "first convexity violation: j=3" in result.output
        assert "first monotonicity break" in result.output

    def test_rational_input(self, runner):
        # 2^2 - 3*(5/3) = -1 and (5/3)^2 - 2*(3/2) = -2/9, both negative.
        result = runner.invoke(cli, ["analyze"], input="3 2 5/3 3/2\n")
        assert result.exit_code == 0
        assert "classification: log-convex" in result.output

    def test_short_input_is_indeterminate(self, runner):
        result = runner.invoke(cli, ["analyze"], input="5 7\n")
        assert result.exit_code == 0
        assert "classification: indeterminate" in result.output

    def test_file_input(self, runner, tmp_path):
        path = tmp_path / "seq.txt"
        path.write_text("1 2 4 8\n")
        result = runner.invoke(cli, ["analyze", "--input", str(path)])
        assert result.exit_code == 0
        assert "geometric" in result.output

    def test_non_positive_term_exits_two(self, runner):
        result = runner.invoke(cli, ["analyze"], input="1 0 2\n")
        assert result.exit_code == 2
        assert "term 2 is not positive" in result.stderr

    def test_unparseable_token_exits_two(self, runner):
        result = runner.invoke(cli, ["analyze"], input="1 2 x\n")
        assert result.exit_code == 2
        assert "cannot parse" in result.stderr

    def test_empty_input_exits_two(self, runner):
        result = runner.invoke(cli, ["analyze"], input="")
        assert result.exit_code == 2


class TestVerify:
    NARROW = ["verify", "--m-to", "6", "--n-max", "50"]

    def test_narrow_sweep_passes(self, runner):
        result = runner.invoke(cli, self.NARROW)
        assert result.exit_code == 0
        assert "all checks passed" in result.output

    def test_plain_report_lists_every_check(self, runner):
        result = runner.invoke(cli, self.NARROW)
        for check in ("cross-formula", "bounds", "monotonicity", "margins", "doslic"):
            assert check in result.output

    def test_csv_report(self, runner):
        result = runner.invoke(cli, self.NARROW + ["--format", "csv"])
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert lines[0] == "check,m_from,m_to,n_max,result,detail"
        assert len(lines) == 6
        assert all(line.endswith(",pass,") for line in lines[1:])

    def test_check_subset_runs_in_canonical_order(self, runner):
        result = runner.invoke(
            cli, self.NARROW + ["--checks", "bounds,cross-formula"]
        )
        assert result.exit_code == 0
        body = result.output
        assert "cross-formula" in body and "bounds" in body
        assert "monotonicity" not in body
        assert body.index("cross-formula") < body.index("bounds")

    def test_unknown_check_is_usage_error(self, runner):
        result = runner.invoke(cli, self.NARROW + ["--checks", "bogus"])
        assert result.exit_code == 2
        assert "bogus" in result.stderr

    def test_reversed_order_range_is_usage_error(self, runner):
        result = runner.invoke(cli, ["verify", "--m-from", "6", "--m-to", "5"])
        assert result.exit_code == 2

    def test_bad_delta_offset_is_usage_error(self, runner):
        result = runner.invoke(cli, self.NARROW + ["--delta-offset", "3"])
        assert result.exit_code == 2

    def test_lag_one_sweep_passes(self, runner):
        result = runner.invoke(cli, self.NARROW + ["--delta-offset", "1"])
        assert result.exit_code == 0

    def test_injected_corruption_is_reported(self, runner):
        result = runner.invoke(
            cli, self.NARROW + ["--inject-corruption", "4,7"]
        )
        assert result.exit_code == 1
        assert "counterexample" in result.output
        assert "m=4" in result.output and "n=7" in result.output

    def test_malformed_injection_is_usage_error(self, runner):
        result = runner.invoke(cli, self.NARROW + ["--inject-corruption", "4;7"])
        assert result.exit_code == 2


class TestEntryPoints:
    def test_module_invocation(self, runner):
        import subprocess
        import sys

        proc = subprocess.run(
            [sys.executable, "-m", "figurate", "gen", "--m", "3", "--count", "3"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout == "1 3 6\n"

    def test_help_shows_subcommands(self, runner):
        result = runner.invoke(cli, ["--help"])
        assert result.exit_code == 0
        for name in ("gen", "quotients", "analyze", "verify"):
            assert name in result.output
