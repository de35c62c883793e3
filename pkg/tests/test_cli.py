"""Tests for the command-line interface: dispatch, formats, exit codes."""

import json

import pytest

from milnor_jump import cli
from milnor_jump.errors import IntegralityError


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


class TestMu:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "mu", "11,6,5")
        assert code == 0
        assert out.strip() == "200"

    def test_json(self, capsys):
        payload = run_json(capsys, "mu", "11,6,5", "--json")
        assert payload == {"exponents": [11, 6, 5], "milnor_number": 200}

    def test_big_integers_become_strings(self, capsys):
        payload = run_json(capsys, "mu", "100000007,100000037,100000039", "--json")
        value = int(payload["milnor_number"])
        assert isinstance(payload["milnor_number"], str)
        assert value == 100000006 * 100000036 * 100000038

    def test_small_exponent_rejected(self, capsys):
        code, _, err = run(capsys, "mu", "1,3")
        assert code == 2
        assert "error" in err

    def test_garbage_rejected(self, capsys):
        code, _, err = run(capsys, "mu", "3,x")
        assert code == 2
        assert "error" in err


class TestNu:
    def test_axis_support(self, capsys, tmp_path):
        path = tmp_path / "support.json"
        path.write_text("[[11,0,0],[0,6,0],[0,0,5]]")
        code, out, _ = run(capsys, "nu", "--support", str(path))
        assert code == 0
        assert out.strip() == "200"

    def test_json_payload(self, capsys, tmp_path):
        path = tmp_path / "support.json"
        path.write_text("[[3,0],[0,2],[1,1]]")
        payload = run_json(capsys, "nu", "--support", str(path), "--json")
        assert payload == {"dimension": 2, "points": 3, "newton_number": 2}

    def test_non_convenient_rejected(self, capsys, tmp_path):
        path = tmp_path / "support.json"
        path.write_text("[[3,0],[1,1]]")
        code, _, err = run(capsys, "nu", "--support", str(path))
        assert code == 2
        assert "convenient" in err

    def test_malformed_file_rejected(self, capsys, tmp_path):
        path = tmp_path / "support.json"
        path.write_text("{\"not\": \"a support\"}")
        code, _, err = run(capsys, "nu", "--support", str(path))
        assert code == 2

    def test_missing_file_rejected(self, capsys, tmp_path):
        code, _, err = run(capsys, "nu", "--support", str(tmp_path / "absent.json"))
        assert code == 2


class TestJump:
    def test_paper_example_json(self, capsys):
        payload = run_json(capsys, "jump", "11,6,5", "--json")
        assert payload == {
            "lambda_nd": 3,
            "realizer": [1, 3, 2],
            "lambda_hyp": 4,
            "source": "interior",
        }

    def test_trace_json(self, capsys):
        payload = run_json(capsys, "jump", "11,6,5", "--json", "--trace")
        assert [e["l"] for e in payload["interior_trace"]] == [1, 2, 3]
        assert payload["interior_trace"][0]["solution"]["i_tilde"] == 6
        assert payload["interior_trace"][0]["admissible"] is False
        assert payload["interior_trace"][1]["solution"]["i_tilde"] == 7
        assert payload["interior_trace"][2]["admissible"] is True
        assert payload["hyperplane_jumps"] == [
            {"axis": 1, "truncation_jump": 1, "contribution": 10},
            {"axis": 2, "truncation_jump": 1, "contribution": 5},
            {"axis": 3, "truncation_jump": 1, "contribution": 4},
        ]

    def test_trace_text_is_stable(self, capsys):
        code, out, _ = run(capsys, "jump", "11,6,5", "--trace")
        assert code == 0
        lines = out.splitlines()
        assert "lambda_nd  = 3" in lines
        assert "  l=1: i_low=4,5 i_tilde=6 inadmissible" in lines
        assert "  l=2: i_low=8,4 i_tilde=7 inadmissible" in lines
        assert "  l=3: i_low=1,3 i_tilde=3 admissible" in lines

    def test_hyperplane_source(self, capsys):
        payload = run_json(capsys, "jump", "3,3", "--json")
        assert payload["lambda_nd"] == 2
        assert payload["source"] == "hyperplane"

    def test_single_variable(self, capsys):
        payload = run_json(capsys, "jump", "7", "--json")
        assert payload == {
            "lambda_nd": 1,
            "realizer": [6],
            "lambda_hyp": None,
            "source": "interior",
        }

    def test_check_oracle_passes(self, capsys):
        code, out, _ = run(capsys, "jump", "4,6", "--check-oracle")
        assert code == 0
        assert "agrees" in out

    def test_check_oracle_guard(self, capsys):
        code, _, err = run(capsys, "jump", "11,6,5", "--check-oracle", "--max-product", "10")
        assert code == 2
        assert "guard" in err

    def test_dimension_guard(self, capsys):
        code, _, err = run(capsys, "jump", "2,2,2,2,2,2,2")
        assert code == 2
        assert "guard" in err
        code, out, _ = run(capsys, "jump", "2,2,2,2,2,2,2", "--max-dim", "7")
        assert code == 0

    def test_exponent_below_two_rejected(self, capsys):
        code, _, err = run(capsys, "jump", "3,1")
        assert code == 2


class TestDeformation:
    def test_interior_monomial(self, capsys):
        payload = run_json(capsys, "deformation", "11,6,5", "--monomial", "1,3,2", "--json")
        assert payload["jump"] == 3
        assert payload["method"] == "interior"
        assert payload["newton_number_difference"] == 3
        assert payload["interior_formula"] == 3
        assert payload["truncation_recursion"] is None
        assert payload["agree"] is True

    def test_boundary_monomial(self, capsys):
        payload = run_json(capsys, "deformation", "11,6,5", "--monomial", "0,3,2", "--json")
        assert payload["jump"] == 30
        assert payload["method"] == "truncation"
        assert payload["truncation_recursion"] == 30
        assert payload["interior_formula"] is None
        assert payload["agree"] is True

    def test_monomial_on_the_diagram_rejected(self, capsys):
        code, _, err = run(capsys, "deformation", "2,2", "--monomial", "1,1")
        assert code == 2
        assert "below" in err

    def test_monomial_above_the_diagram_rejected(self, capsys):
        code, _, err = run(capsys, "deformation", "3,3", "--monomial", "4,0")
        assert code == 2

    def test_zero_monomial_rejected(self, capsys):
        code, _, err = run(capsys, "deformation", "3,3", "--monomial", "0,0")
        assert code == 2


class TestOracle:
    def test_paper_example(self, capsys):
        payload = run_json(capsys, "oracle", "11,6,5", "--json")
        assert payload == {"lambda_nd": 3, "realizer": [1, 3, 2]}

    def test_text(self, capsys):
        code, out, _ = run(capsys, "oracle", "4,4")
        assert code == 0
        assert "lambda_nd = 3" in out

    def test_guard(self, capsys):
        code, _, err = run(capsys, "oracle", "7,7,7", "--max-product", "10")
        assert code == 2


class TestVerify:
    def test_small_run_passes(self, capsys):
        payload = run_json(capsys, "verify", "--n", "2", "--pmax", "4", "--json")
        assert payload["ok"] is True
        assert all(s["failed"] == 0 for s in payload["suites"])

    def test_failure_exits_4(self, capsys, monkeypatch):
        from milnor_jump.verification import SuiteResult

        def fake_run_all(**kwargs):
            return [SuiteResult("broken", 0, 1, ["boom"])]

        monkeypatch.setattr(cli, "run_all", lambda **kwargs: fake_run_all())
        code, out, _ = run(capsys, "verify")
        assert code == 4
        assert "failed=1" in out


class TestTable:
    def test_two_variable_matrix(self, capsys):
        code, out, _ = run(capsys, "table", "--n", "2", "--pmax", "6")
        assert code == 0
        rows = [line.split("\t") for line in out.strip().splitlines()]
        assert rows[0][0] == "p1\\p2"
        # lambda_nd(4, 6) == 2 sits at row p1=4, column p2=6
        assert rows[3][0] == "4"
        assert rows[3][5] == "2"
        # the diagonal carries p - 1
        assert [rows[i][i] for i in range(1, 6)] == ["1", "2", "3", "4", "5"]

    def test_three_variable_rows(self, capsys):
        payload = run_json(capsys, "table", "--n", "3", "--pmax", "3", "--json")
        entries = {tuple(e["exponents"]): e["lambda_nd"] for e in payload["entries"]}
        assert len(entries) == 8
        assert entries[(2, 2, 2)] == 1
        assert entries[(3, 3, 3)] == nondegenerate_jump_value((3, 3, 3))

    def test_pmax_validated(self, capsys):
        code, _, err = run(capsys, "table", "--pmax", "1")
        assert code == 2


def nondegenerate_jump_value(exps):
    from milnor_jump import BrieskornPham, nondegenerate_jump

    return nondegenerate_jump(BrieskornPham(exps)).lambda_nd


class TestErrorMapping:
    def test_unknown_command(self, capsys):
        code, _, _ = run(capsys, "frobnicate")
        assert code == 2

    def test_integrality_error_exits_3(self, capsys, monkeypatch):
        def boom(*args, **kwargs):
            raise IntegralityError("forced failure")

        monkeypatch.setattr(cli, "nondegenerate_jump", boom)
        code, _, err = run(capsys, "jump", "3,3")
        assert code == 3
        assert "internal error" in err

    def test_env_guard_override(self, capsys, monkeypatch):
        monkeypatch.setenv(cli.ENV_MAX_DIM, "2")
        code, _, err = run(capsys, "jump", "2,2,2")
        assert code == 2
        monkeypatch.setenv(cli.ENV_MAX_DIM, "4")
        code, _, _ = run(capsys, "jump", "2,2,2")
        assert code == 0
