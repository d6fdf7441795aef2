import pytest

from cycleswap.cli import main

PI_TEXT = "(8 3 4 5)(9)(11 1 10)(15 7 2 6 12 14 13)"
DELTA_TEXT = "(7 2 6)(8 3 4)(11 5 9)(14 13 12)(15 1 10)"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_apply_f(capsys):
    code, out, _ = run(capsys, "apply-f", "--k", "3", "--n", "5", "--pi", PI_TEXT)
    assert code == 0
    assert DELTA_TEXT in out
    assert "x=(0,1,0,2,1); tau=(2)(3)(5 1 4)" in out


def test_apply_f_structured(capsys):
    code, out, _ = run(
        capsys, "apply-f", "--k", "3", "--n", "5", "--pi", PI_TEXT, "--format", "structured"
    )
    assert code == 0
    assert f"delta={DELTA_TEXT}" in out
    assert "x=(0,1,0,2,1)" in out
    assert "tau=(2)(3)(5 1 4)" in out
    assert "k_cycles=1" in out and "fixed_points=1" in out


def test_invert_f(capsys):
    code, out, _ = run(
        capsys,
        "invert-f",
        "--k", "3", "--n", "5",
        "--delta", DELTA_TEXT,
        "--x", "0,1,0,2,1",
        "--tau", "(2)(3)(5 1 4)",
    )
    assert code == 0
    assert PI_TEXT in out


def test_invert_f_sigma_prime(capsys):
    code, out, _ = run(
        capsys,
        "invert-f",
        "--k", "3", "--n", "5",
        "--delta", DELTA_TEXT,
        "--x", "2,0,0,1,0",
        "--tau", "(2)(3 1)(4)(5)",
    )
    assert code == 0
    assert "(8 3 4)(11 5 9 6 7 2)(13 12)(14)(15 1 10)" in out


def test_invert_f_input_file(tmp_path, capsys):
    doc = tmp_path / "input.txt"
    doc.write_text(
        "# running example\n"
        "k=3\nn=5\n"
        f"delta={DELTA_TEXT}\n"
        "x=0,1,0,2,1\n"
        "tau=(2)(3)(5 1 4)\n"
    )
    code, out, _ = run(capsys, "invert-f", "--input", str(doc))
    assert code == 0
    assert PI_TEXT in out


def test_involute(capsys):
    code, out, _ = run(
        capsys,
        "involute",
        "--k", "3", "--n", "5",
        "--x", "2,0,0,1,0",
        "--tau", "(2)(3 1)(4)(5)",
        "--pi", PI_TEXT,
    )
    assert code == 0
    assert "x=(0,1,0,2,1); tau=(2)(3)(5 1 4)" in out
    assert "(8 3 4)(11 5 9 6 7 2)(13 12)(14)(15 1 10)" in out


def test_table(capsys):
    code, out, _ = run(capsys, "table", "--k", "2", "--n", "3")
    assert code == 0
    for value in ("435", "225", "45", "15", "720", "29", "3", "1", "48"):
        assert value in out


def test_table_structured(capsys):
    code, out, _ = run(capsys, "table", "--k", "2", "--n", "3", "--format", "structured")
    assert code == 0
    assert "cyc_count_0=435" in out
    assert "fxpt_count_0=29" in out
    assert "cyc_total=720" in out and "fxpt_total=48" in out


def test_verify_pass(capsys):
    code, out, _ = run(capsys, "verify", "--k", "2", "--n", "2", "--which", "all")
    assert code == 0
    assert out.count("PASS") >= 3


def test_verify_structured(capsys):
    code, out, _ = run(
        capsys, "verify", "--k", "2", "--n", "2", "--which", "theorem1",
        "--format", "structured",
    )
    assert code == 0
    assert "passed=true" in out


def test_verify_jobs(capsys):
    code, out, _ = run(
        capsys, "verify", "--k", "2", "--n", "2", "--which", "theorem1", "--jobs", "2"
    )
    assert code == 0


def test_sample_deterministic(capsys):
    code, first, _ = run(
        capsys, "sample", "--k", "2", "--n", "3", "--trials", "200", "--seed", "5"
    )
    assert code == 0
    code, second, _ = run(
        capsys, "sample", "--k", "2", "--n", "3", "--trials", "200", "--seed", "5"
    )
    assert first == second


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "apply-f", "--k", "3", "--n", "5", "--pi", "(1 2")
    assert code == 2
    assert "position" in err


def test_missing_k_n_exit_code(capsys):
    code, _, err = run(capsys, "apply-f", "--pi", "1,2")
    assert code == 2


def test_capacity_exit_code(capsys):
    code, _, err = run(capsys, "table", "--k", "2", "--n", "7")
    assert code == 3
    assert "capacity" in err


def test_usage_error_from_argparse():
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
