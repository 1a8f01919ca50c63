"""Command-line contract: exit codes, frozen JSON schemas, error routing."""

import json

import pytest

from bcf.cli import run


def run_json(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    assert code == 0, captured.err
    return json.loads(captured.out)


def run_lines(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    assert code == 0, captured.err
    return [json.loads(line) for line in captured.out.splitlines()]


# -- expand ---------------------------------------------------------------------


def test_expand_rational_json(capsys):
    payload = run_json(
        capsys, ["expand", "--alpha", "rat:7/4", "--beta", "rat:3/2"]
    )
    assert payload["a"] == [1, 2]
    assert payload["b"] == [1, 1, 0]
    assert payload["terminated"] is True
    assert payload["preperiod"] is None and payload["period"] is None
    assert payload["convergents"][1] == {
        "n": 1,
        "A": "3",
        "B": "3",
        "C": "2",
        "alpha": "3/2",
        "beta": "3/2",
        "alpha_dec": "1.500000000000",
    }
    assert "terminal" not in payload
    assert "heuristic" not in payload


def test_expand_output_is_deterministic(capsys):
    argv = ["expand", "--alpha", "rat:7/4", "--beta", "rat:3/2"]
    assert run(argv) == 0
    first = capsys.readouterr().out
    assert run(argv) == 0
    second = capsys.readouterr().out
    assert first == second
    # keys sorted, compact separators
    assert first.startswith('{"a":[1,2],"b":[1,1,0],')


def test_expand_tribonacci_literals(capsys):
    payload = run_json(
        capsys,
        [
            "expand",
            "--alpha", "alg:1,-1,-1,-1@1,2",
            "--beta", "ratfunc:1,1/1,0",
            "--terms", "32",
        ],
    )
    assert payload["a"] == [1] * 32
    assert payload["b"] == [1] * 32
    assert payload["preperiod"] == 0 and payload["period"] == 1


def test_expand_text_shows_terminal(capsys):
    code = run(
        ["expand", "--alpha", "rat:7/4", "--beta", "rat:3/2",
         "--format", "text"]
    )
    out = capsys.readouterr().out
    assert code == 0
    assert "terminal: 2/1" in out
    assert "terminated: true" in out


def test_expand_ratfunc_only_for_beta(capsys):
    code = run(
        ["expand", "--alpha", "ratfunc:1/1,0", "--beta", "rat:2"]
    )
    captured = capsys.readouterr()
    assert code == 2
    assert "beta" in captured.err


def test_expand_rejects_bad_literal(capsys):
    assert run(["expand", "--alpha", "rat:x", "--beta", "rat:1"]) == 2
    assert "rat:<int>" in capsys.readouterr().err


def test_expand_rejects_nonpositive(capsys):
    assert run(["expand", "--alpha", "rat:-1", "--beta", "rat:2"]) == 2
    capsys.readouterr()


def test_expand_ratfunc_pole_is_input_error(capsys):
    # beta = 1/(alpha - 2) evaluated at alpha = 2 divides by zero
    code = run(["expand", "--alpha", "rat:2", "--beta", "ratfunc:1/1,-2"])
    assert code == 2
    capsys.readouterr()


def test_expand_dec_requires_approx(capsys):
    assert run(["expand", "--alpha", "dec:1.75", "--beta", "rat:2"]) == 2
    capsys.readouterr()


def test_expand_approx_labeled(capsys):
    payload = run_json(
        capsys,
        ["expand", "--alpha", "dec:1.75", "--beta", "dec:1.5", "--approx"],
    )
    assert payload["heuristic"] is True
    assert payload["a"] == [1, 2]
    assert payload["b"] == [1, 1, 0]


def test_expand_approx_precision_exhausted_is_exit_3(capsys):
    code = run(
        ["expand", "--approx",
         "--alpha", "dec:2.5",
         "--beta", "dec:1.0000000000000001"]
    )
    captured = capsys.readouterr()
    assert code == 3
    assert captured.err


def test_expand_approx_rejects_alg_literals(capsys):
    code = run(
        ["expand", "--approx",
         "--alpha", "alg:1,-1,-1,-1@1,2", "--beta", "dec:2.8"]
    )
    assert code == 2
    capsys.readouterr()


# -- eval -----------------------------------------------------------------------


def test_eval_example(capsys):
    payload = run_json(capsys, ["eval", "--a", "1,1,1", "--b", "1,1,1"])
    assert payload == {
        "n": 2,
        "A": "4",
        "B": "3",
        "C": "2",
        "alpha": "2/1",
        "beta": "3/2",
        "alpha_dec": "2.000000000000",
        "beta_dec": "1.500000000000",
    }


def test_eval_interior_index(capsys):
    payload = run_json(
        capsys, ["eval", "--a", "1,1,1", "--b", "1,1,1", "--n", "1"]
    )
    assert (payload["A"], payload["B"], payload["C"]) == ("2", "2", "1")


def test_eval_length_mismatch(capsys):
    assert run(["eval", "--a", "1,2", "--b", "1"]) == 2
    capsys.readouterr()


def test_eval_index_out_of_range(capsys):
    assert run(["eval", "--a", "1,2", "--b", "1,0", "--n", "5"]) == 2
    capsys.readouterr()


# -- render ---------------------------------------------------------------------


def test_render_text_matches_library(capsys):
    from bcf import SequencePair, render_tree

    code = run(["render", "--a", "2,2,3", "--b", "2,0,0", "--depth", "2"])
    out = capsys.readouterr().out
    assert code == 0
    expected = render_tree(SequencePair((2, 2, 3), (2, 0, 0)), 2)
    assert out == expected + "\n"


def test_render_latex_json(capsys):
    payload = run_json(
        capsys,
        ["render", "--a", "2,2,3", "--b", "2,0,0", "--depth", "1",
         "--style", "latex", "--format", "json"],
    )
    assert payload["alpha"].startswith("\\alpha = ")
    assert payload["beta"].startswith("\\beta = ")


def test_render_depth_beyond_digits(capsys):
    assert run(["render", "--a", "1,1", "--b", "1,1", "--depth", "5"]) == 2
    capsys.readouterr()


def test_render_periodic_extension(capsys):
    code = run(
        ["render", "--a", "1", "--b", "1", "--period", "1", "--depth", "4"]
    )
    assert code == 0
    capsys.readouterr()


# -- validate --------------------------------------------------------------------


def test_validate_rule_two_example(capsys):
    payload = run_json(capsys, ["validate", "--a", "3,2,2,1", "--b", "0,2,0,1"])
    assert payload["valid"] is False
    assert payload["violations"] == [
        {"index": 1, "rule": "equal_then_b_zero"}
    ]
    assert payload["indeterminate"] == [3]
    assert payload["last_checked"] == 3


def test_validate_invalid_still_exits_zero(capsys):
    assert run(["validate", "--a", "5,2,2", "--b", "1,2,3"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["valid"] is False


def test_validate_with_terminal_digit(capsys):
    payload = run_json(
        capsys,
        ["validate", "--a", "1,2", "--b", "1,1,0", "--terminal", "rat:2"],
    )
    assert payload["valid"] is True


def test_validate_shape_error(capsys):
    assert run(["validate", "--a", "1,2", "--b", "1"]) == 2
    capsys.readouterr()


# -- recover ---------------------------------------------------------------------


def test_recover_pure_json(capsys):
    payload = run_json(
        capsys, ["recover", "--period-a", "1", "--period-b", "1"]
    )
    assert payload["min_poly"] == [1, -1, -1, -1]
    assert payload["beta_expr"] == "1,-1,0/1"
    assert payload["method"] == "pure"
    assert payload["alpha_dec"] == "1.839286755214"
    lo, hi = payload["interval"]
    assert "/" in lo and "/" in hi


def test_recover_eventual_json(capsys):
    payload = run_json(
        capsys,
        ["recover", "--preperiod-a", "2", "--preperiod-b", "2",
         "--period-a", "2,3", "--period-b", "0,0"],
    )
    assert payload["min_poly"] == [1, -1, -2, -1]
    assert payload["method"] == "eventual"
    assert payload["alpha_dec"] == "2.147899035705"
    assert payload["beta_dec"] == "2.465571231877"


def test_recover_rejects_invalid_digits(capsys):
    assert run(["recover", "--period-a", "1,2", "--period-b", "1,3"]) == 2
    capsys.readouterr()


def test_recover_requires_period(capsys):
    assert run(["recover", "--period-a", "", "--period-b", ""]) == 2
    capsys.readouterr()


# -- scan ------------------------------------------------------------------------


def test_scan_ldjson_records(capsys):
    records = run_lines(
        capsys,
        ["scan", "--c2=-1:-1", "--c1=-1:-1", "--c0=-1:-1",
         "--horizon", "16"],
    )
    assert len(records) == 4  # four default beta candidates
    by_beta = {record["beta_expr"]: record for record in records}
    tribonacci = by_beta["1,-1,0/1"]
    assert tribonacci["status"] == "periodic"
    assert tribonacci["preperiod"] == 0
    assert tribonacci["period"] == 1
    assert tribonacci["min_poly"] == [1, -1, -1, -1]
    assert tribonacci["digits_preview"]["a"] == [1] * 8
    for record in records:
        assert set(record) == {
            "min_poly", "interval", "beta_expr", "status",
            "preperiod", "period", "digits_preview",
        }


def test_scan_custom_beta(capsys):
    records = run_lines(
        capsys,
        ["scan", "--c2=-1:-1", "--c1", "0:0", "--c0=-1:-1",
         "--beta", "ratfunc:1/1,0", "--horizon", "12"],
    )
    assert len(records) == 1
    assert records[0]["min_poly"] == [1, -1, 0, -1]
    assert records[0]["status"] == "periodic"
    assert records[0]["period"] == 1


def test_scan_bad_range(capsys):
    assert run(["scan", "--c2", "2:-2"]) == 2
    assert run(["scan", "--c2", "x:2"]) == 2
    capsys.readouterr()


def test_scan_bad_beta_literal(capsys):
    assert run(["scan", "--beta", "rat:1/2"]) == 2
    capsys.readouterr()


# -- argparse plumbing --------------------------------------------------------------


def test_usage_error_is_exit_2(capsys):
    assert run([]) == 2
    assert run(["expand"]) == 2  # missing required flags
    assert run(["no-such-command"]) == 2
    capsys.readouterr()


def test_help_is_exit_0(capsys):
    assert run(["--help"]) == 0
    out = capsys.readouterr().out
    assert "expand" in out and "recover" in out
