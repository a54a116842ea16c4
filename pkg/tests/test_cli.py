import json

import pytest
from click.testing import CliRunner

from boolsum import DegreeSet, exp_sum, full_charpoly, to_recurrence
from boolsum.cli import DegreeParseError, cli, format_degree, parse_degrees


def run(*args, env=None):
    return CliRunner().invoke(cli, list(args), env=env, catch_exceptions=False)


def payload(result):
    report = json.loads(result.output)
    return report, report["result"]


class TestParseDegrees:
    def test_basic(self):
        assert parse_degrees("3,5") == DegreeSet.of(3, 5)

    def test_sorting(self):
        assert parse_degrees("5,3") == DegreeSet.of(3, 5)

    def test_power_sums(self):
        K = parse_degrees("31,2^10000+64,2^10000+32+128")
        assert K.degrees == (
            (0, 1, 2, 3, 4),
            (6, 10000),
            (5, 7, 10000),
        )

    def test_mixed_terms(self):
        assert parse_degrees("2^1000000+5").degrees == ((0, 2, 1000000),)
        assert parse_degrees("6+1") == DegreeSet.of(7)

    @pytest.mark.parametrize(
        "expr",
        ["", "3,", "3,,5", "3,3", "x", "2^", "2^-1", "0", "3+1", "2^2+4", "-3"],
    )
    def test_rejects_bad_expressions(self, expr):
        with pytest.raises(DegreeParseError):
            parse_degrees(expr)

    def test_canonical_form_round_trips(self):
        K = parse_degrees("31,2^10000+64,2^10000+32+128")
        rendered = ",".join(format_degree(bits) for bits in K.degrees)
        assert parse_degrees(rendered) == K
        assert format_degree(K.degrees[0]) == "31"
        assert format_degree(K.degrees[1]) == "2^10000+2^6"


class TestSumCommand:
    def test_oracle_agreement(self):
        report, result = payload(run("sum", "--degrees", "3", "--n", "4", "--oracle"))
        assert result == {
            "n": 4,
            "exponential_sum": 8,
            "correlation": "1/2",
            "oracle": 8,
            "match": True,
        }
        assert report["command"] == "sum"
        assert report["degrees"] == ["3"]
        assert report["precision_bits"] is None

    def test_big_values_serialize_as_strings(self):
        _, result = payload(run("sum", "--degrees", "3", "--n", "200"))
        assert isinstance(result["exponential_sum"], str)
        assert int(result["exponential_sum"]) == exp_sum(200, DegreeSet.of(3))

    def test_negative_n_is_input_error(self):
        result = run("sum", "--degrees", "3", "--n", "-1")
        assert result.exit_code == 2

    def test_brute_cap_is_a_resource_error(self):
        result = run("sum", "--degrees", "3", "--n", "30", "--oracle")
        assert result.exit_code == 3


class TestRecurrenceCommand:
    def test_pair_6_17(self):
        _, result = payload(run("recurrence", "--degrees", "6,17"))
        assert result["minimal"] == {
            "x_minus_2": True,
            "levels": [1, 2, 4],
            "degree": 23,
        }
        assert result["degree_bounds"] == {"lower": 16, "upper": 23}
        assert len(result["recurrence"]) == 23

    def test_full_and_verify(self):
        _, result = payload(
            run("recurrence", "--degrees", "3,5", "--full", "--verify", "40")
        )
        assert result["recurrence"] == [6, -14, 16, -10, 4]
        assert result["valid_from"] == 6
        assert result["verify"] == {"through": 40, "ok": True}
        expected_full = list(to_recurrence(full_charpoly(3)).coefficients)
        assert result["full_recurrence"] == expected_full

    def test_infeasible_period_is_exit_3(self):
        result = run("recurrence", "--degrees", "2^25")
        assert result.exit_code == 3

    def test_r_max_override(self):
        assert run("recurrence", "--degrees", "33", "--r-max", "5").exit_code == 3
        assert run("recurrence", "--degrees", "33", "--r-max", "6").exit_code == 0

    def test_degenerate_degree_is_exit_2(self):
        result = run("recurrence", "--degrees", "1")
        assert result.exit_code == 2


class TestC0Command:
    def test_huge_example(self):
        _, result = payload(
            run("c0", "--degrees", "7,9,2^100000+2^10000,2^1000000+5")
        )
        assert result == {"c0": "1/4", "asymptotically_balanced": False}

    def test_balanced_example(self):
        _, result = payload(run("c0", "--degrees", "5,9,12"))
        assert result == {"c0": "0", "asymptotically_balanced": True}


class TestAsymCommand:
    def test_error_term_reported_when_limit_vanishes(self):
        report, result = payload(
            run("asym", "--degrees", "5,9,12", "--n", "100", "--precision", "1024")
        )
        assert report["precision_bits"] == 1024
        assert result["c0"] == "0"
        assert abs(float(result["error_term"]) - 0.001530582098) < 1e-9

    def test_no_error_term_when_limit_is_nonzero(self):
        _, result = payload(run("asym", "--degrees", "3,5", "--n", "40"))
        assert result["c0"] == "1/2"
        assert "error_term" not in result

    def test_env_precision(self):
        report, _ = payload(
            run("asym", "--degrees", "3,5", "--n", "10",
                env={"BOOLSUM_PRECISION": "256"})
        )
        assert report["precision_bits"] == 256

    def test_precision_guard_is_exit_3(self):
        result = run(
            "asym", "--degrees", "5,9,12", "--n", "5000", "--precision", "256"
        )
        assert result.exit_code == 3


class TestErrorTableCommand:
    def test_csv_default(self):
        result = run(
            "error-table", "--degrees", "5,9,12", "--rows", "100,200",
            "--precision", "1024",
        )
        lines = result.output.strip().splitlines()
        assert lines[0] == "n,error"
        assert lines[1].startswith("100,0.0015305820975")
        assert lines[2].startswith("200,-1.6077603870")

    def test_json_format(self):
        report, result = payload(
            run("error-table", "--degrees", "5,9,12", "--rows", "100",
                "--precision", "1024", "--format", "json")
        )
        assert result["rows"][0]["n"] == 100
        assert result["rows"][0]["error"].startswith("0.0015305820975")

    def test_bad_rows_exit_2(self):
        assert run("error-table", "--degrees", "5,9,12", "--rows", "a,b").exit_code == 2

    def test_nonvanishing_limit_exit_2(self):
        assert run("error-table", "--degrees", "3,5", "--rows", "100").exit_code == 2


class TestBalancedCommand:
    def test_degree_two(self):
        _, result = payload(run("balanced", "--degrees", "2", "--max-n", "20"))
        assert result == {"max_n": 20, "balanced": [3, 7, 11, 15, 19]}

    def test_csv_format(self):
        result = run("balanced", "--degrees", "2", "--max-n", "10", "--format", "csv")
        assert result.output.strip().splitlines() == ["n", "3", "7"]


class TestReportDiscipline:
    def test_output_is_deterministic(self):
        first = run("recurrence", "--degrees", "6,17").output
        second = run("recurrence", "--degrees", "6,17").output
        assert first == second

    def test_keys_sorted(self):
        output = run("c0", "--degrees", "3,5").output
        report = json.loads(output)
        assert list(report) == sorted(report)
        assert output == json.dumps(report, sort_keys=True, indent=2) + "\n"

    def test_version_echoed(self):
        report, _ = payload(run("c0", "--degrees", "3"))
        from boolsum import __version__

        assert report["version"] == __version__

    def test_scalar_csv_flattening(self):
        result = run("c0", "--degrees", "3,5", "--format", "csv")
        lines = result.output.strip().splitlines()
        assert lines == ["asymptotically_balanced,false", "c0,1/2"]
