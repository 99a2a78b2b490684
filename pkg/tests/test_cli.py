import json
from fractions import Fraction

import pytest

from hurwitz import closedform
from hurwitz.cli import main
from hurwitz.closedform import from_json_dict, to_json_dict
from hurwitz.partitions import Partition, partitions_of


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestClosedFormCommand:
    def test_json_three_three(self, capsys):
        code, out, _ = run(
            capsys, "closed-form", "--kind", "monotone", "--mu", "3,3",
            "--format", "json",
        )
        assert code == 0
        data = json.loads(out)
        assert data["mu"] == [3, 3]
        assert len(data["terms"]) == 7
        assert {"k": 5, "i": 1, "coeff": "125/1728"} in data["terms"]
        assert from_json_dict(data) == closedform.monotone_closed_form(
            Partition((3, 3))
        )

    def test_text_format(self, capsys):
        code, out, _ = run(capsys, "closed-form", "--kind", "simple", "--mu", "5")
        assert code == 0
        assert "normalization: 1/300" in out
        assert "k=10 i=1 coeff=1" in out

    def test_csv_format(self, capsys):
        code, out, _ = run(
            capsys, "closed-form", "--kind", "simple", "--mu", "5", "--format", "csv"
        )
        assert code == 0
        assert out.splitlines() == ["k,i,coeff", "10,1,1", "5,1,-4"]

    def test_deterministic_output(self, capsys):
        _, first, _ = run(
            capsys, "closed-form", "--kind", "monotone", "--mu", "3,3",
            "--format", "json",
        )
        _, second, _ = run(
            capsys, "closed-form", "--kind", "monotone", "--mu", "3,3",
            "--format", "json",
        )
        assert first == second

    def test_unsorted_mu_canonicalized(self, capsys):
        _, a, _ = run(capsys, "closed-form", "--kind", "simple", "--mu", "1,2,3")
        _, b, _ = run(capsys, "closed-form", "--kind", "simple", "--mu", "3,2,1")
        assert a == b

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "form.json"
        code, out, _ = run(
            capsys, "closed-form", "--kind", "simple", "--mu", "5",
            "--format", "json", "--output", str(target),
        )
        assert code == 0
        assert out == ""
        assert json.loads(target.read_text())["mu"] == [5]


class TestEvalCommand:
    def test_monotone_two_large_genus(self, capsys):
        code, out, _ = run(
            capsys, "eval", "--kind", "monotone", "--mu", "2", "--genus", "100"
        )
        assert code == 0
        assert out == "1/2\n"

    def test_simple_five(self, capsys):
        code, out, _ = run(
            capsys, "eval", "--kind", "simple", "--mu", "5", "--genus", "0"
        )
        assert code == 0
        assert out == "25\n"

    def test_json_payload(self, capsys):
        code, out, _ = run(
            capsys, "eval", "--kind", "simple", "--mu", "5", "--genus", "1",
            "--format", "json",
        )
        data = json.loads(out)
        assert data == {"kind": "simple", "mu": [5], "genus": 1, "b": 6, "value": "3125"}


class TestTableCommand:
    def test_text_rows(self, capsys):
        code, out, _ = run(
            capsys, "table", "--kind", "simple", "--mu", "5", "--genus-max", "2"
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[-3:] == ["0  4  25  25", "1  6  3125  3125", "2  8  328125  328125"]

    def test_single_row(self, capsys):
        code, out, _ = run(
            capsys, "table", "--kind", "monotone", "--mu", "5", "--genus-max", "0",
            "--format", "csv",
        )
        assert code == 0
        rows = out.splitlines()
        assert len(rows) == 2  # header + one row
        # vecH_{0;(5)} = (8/45*4^4 - 9/20*3^4 + 14/45*2^4 - 7/180)/5
        value = (
            Fraction(8, 45) * 256 - Fraction(9, 20) * 81
            + Fraction(14, 45) * 16 - Fraction(7, 180)
        ) / 5
        assert rows[1].split(",")[2] == str(value)

    def test_decimal_is_six_significant_digits(self, capsys):
        _, out, _ = run(
            capsys, "table", "--kind", "simple", "--mu", "5", "--genus-max", "4",
            "--format", "csv",
        )
        last = out.splitlines()[-1].split(",")
        # H_{4;(5)} = (10^12 - 4 * 5^12)/300
        assert last[2] == "3330078125"
        assert last[3] == "3.33008E+9"


class TestOracleCommand:
    def test_text(self, capsys):
        code, out, _ = run(
            capsys, "oracle", "--kind", "simple", "--mu", "3", "--genus", "0"
        )
        assert code == 0
        assert "count=6" in out
        assert "hurwitz=1" in out

    def test_guard_exit_one(self, capsys):
        code, _, err = run(
            capsys, "oracle", "--kind", "simple", "--mu", "7", "--genus", "0"
        )
        assert code == 1
        assert "too large" in err


class TestVerifyCommand:
    def test_matches_exit_zero(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--kind", "simple", "--mu", "3", "--genus-max", "1"
        )
        assert code == 0
        assert "2/2 genera match" in out

    def test_monotone_matches(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--kind", "monotone", "--mu", "2,1", "--genus-max", "1"
        )
        assert code == 0
        assert "2/2 genera match" in out

    def test_injected_fault_exits_two(self, capsys, monkeypatch):
        # corrupt a single coefficient on the closed-form side
        real = closedform.evaluate

        def corrupted(form, g):
            return real(form, g) + 1

        monkeypatch.setattr(closedform, "evaluate", corrupted)
        code, out, _ = run(
            capsys, "verify", "--kind", "simple", "--mu", "3", "--genus-max", "1"
        )
        assert code == 2
        assert "MISMATCH" in out


class TestChecksCommand:
    def test_simple_sweep(self, capsys):
        code, out, _ = run(capsys, "checks", "--kind", "simple", "--d-max", "5")
        assert code == 0
        assert "partitions conform" in out

    def test_monotone_sweep_json(self, capsys):
        code, out, _ = run(
            capsys, "checks", "--kind", "monotone", "--d-max", "4", "--format", "json"
        )
        assert code == 0
        data = json.loads(out)
        assert data["all_pass"] is True
        assert len(data["rows"]) == sum(len(partitions_of(d)) for d in range(2, 5))

    def test_fault_exits_two(self, capsys, monkeypatch):
        real = closedform.structure_checks

        def corrupted(form):
            report = real(form)
            object.__setattr__(report, "gap_all_zero", False)
            return report

        monkeypatch.setattr(closedform, "structure_checks", corrupted)
        code, _, _ = run(capsys, "checks", "--kind", "simple", "--d-max", "3")
        assert code == 2


class TestAsymptoticsCommand:
    def test_monotone_five_three(self, capsys):
        code, out, _ = run(
            capsys, "asymptotics", "--kind", "monotone", "--mu", "5,3",
            "--format", "json",
        )
        assert code == 0
        data = json.loads(out)
        head = data["terms"][0]
        assert head == {"k": 7, "i": 1, "coeff": "16807/2073600", "leading": True}


class TestUsageErrors:
    def test_unknown_command(self, capsys):
        assert run(capsys, "frobnicate")[0] == 1

    def test_missing_mu(self, capsys):
        assert run(capsys, "eval", "--kind", "simple", "--genus", "0")[0] == 1

    def test_bad_kind(self, capsys):
        assert run(capsys, "eval", "--kind", "orbifold", "--mu", "3", "--genus", "0")[0] == 1

    def test_bad_mu(self, capsys):
        code, _, err = run(capsys, "eval", "--kind", "simple", "--mu", "x", "--genus", "0")
        assert code == 1
        assert "cannot parse partition" in err

    def test_engine_guard(self, capsys):
        code, _, err = run(
            capsys, "closed-form", "--kind", "simple", "--mu", ",".join(["1"] * 13)
        )
        assert code == 1
        assert "engine guard" in err

    def test_negative_genus(self, capsys):
        code, _, _ = run(
            capsys, "eval", "--kind", "simple", "--mu", "3", "--genus", "-1"
        )
        assert code == 1


class TestJsonRoundTripInvariant:
    def test_round_trips_through_emitted_document(self):
        for d in range(2, 9):
            for mu in partitions_of(d):
                for build in (
                    closedform.monotone_closed_form,
                    closedform.simple_closed_form,
                ):
                    form = build(mu)
                    emitted = json.dumps(to_json_dict(form))
                    assert from_json_dict(json.loads(emitted)) == form
