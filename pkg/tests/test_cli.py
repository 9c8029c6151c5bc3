import json

import pytest

from gapfree import cli
from gapfree.cli import (
    BFileEntry,
    BFileError,
    RunConfig,
    main,
    parse_bfile,
    table_rows,
)
from gapfree.identities import CheckReport
from gapfree.series import Mismatch


# -- b-file parsing -----------------------------------------------------------


def write(tmp_path, text, name="b034296.txt"):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_parse_bfile_basic(tmp_path):
    path = write(tmp_path, "# comment\n\n1 1\n2 2\n  3   3\n")
    assert parse_bfile(path) == [
        BFileEntry(1, 1), BFileEntry(2, 2), BFileEntry(3, 3),
    ]


def test_parse_bfile_huge_values(tmp_path):
    path = write(tmp_path, f"1 {10**40}\n")
    assert parse_bfile(path)[0].value == 10**40


def test_parse_bfile_malformed_line_number(tmp_path):
    path = write(tmp_path, "1 1\nnot a pair\n")
    with pytest.raises(BFileError, match=":2:"):
        parse_bfile(path)


def test_parse_bfile_non_integer(tmp_path):
    path = write(tmp_path, "1 x\n")
    with pytest.raises(BFileError, match="non-integer"):
        parse_bfile(path)


def test_parse_bfile_requires_increasing_indices(tmp_path):
    path = write(tmp_path, "3 3\n2 2\n")
    with pytest.raises(BFileError, match="strictly increasing"):
        parse_bfile(path)


# -- verify ---------------------------------------------------------------------


def test_verify_single_check_exit_zero(capsys):
    rc = main(["verify", "--checks", "theorem_1", "--order", "50", "--jobs", "1"])
    out = capsys.readouterr().out
    assert rc == 0
    assert out.startswith("PASS theorem_1")


def test_verify_all_prints_eleven_lines(capsys):
    rc = main([
        "verify", "--checks", "all", "--order", "60", "--zdeg", "6", "--jobs", "1",
    ])
    out = capsys.readouterr().out.strip().splitlines()
    assert rc == 0
    assert len(out) == 11
    assert all(line.startswith("PASS") for line in out)
    # name-sorted deterministic order
    names = [line.split()[1] for line in out]
    assert names == sorted(names)


def test_verify_unknown_check_exit_two(capsys):
    rc = main(["verify", "--checks", "bogus"])
    err = capsys.readouterr().err
    assert rc == 2
    assert "theorem_1" in err  # lists the valid names


def test_verify_json_schema(capsys):
    rc = main([
        "verify", "--checks", "euler_sum,logderiv", "--zdeg", "6",
        "--format", "json", "--jobs", "1",
    ])
    payload = json.loads(capsys.readouterr().out)
    assert rc == 0
    assert [d["name"] for d in payload] == ["euler_sum", "logderiv"]
    for d in payload:
        assert set(d) <= {"name", "passed", "order", "zdeg", "mismatch"}
        assert d["passed"] is True


def test_verify_csv_unquoted(capsys):
    rc = main([
        "verify", "--checks", "finite_identity", "--order", "40",
        "--format", "csv", "--jobs", "1",
    ])
    out = capsys.readouterr().out.strip().splitlines()
    assert rc == 0
    assert out[0] == "name,passed,order,zdeg,mismatch_exponent,mismatch_lhs,mismatch_rhs"
    assert out[1].startswith("finite_identity,true,40")
    assert '"' not in out[1]


def test_verify_markdown(capsys):
    rc = main([
        "verify", "--checks", "euler_sum", "--zdeg", "4",
        "--format", "markdown", "--jobs", "1",
    ])
    out = capsys.readouterr().out
    assert rc == 0
    assert out.splitlines()[0].startswith("| check")


def test_verify_mismatch_exit_one(monkeypatch, capsys):
    failed = CheckReport(
        "euler_sum", False, 8, 4, Mismatch(3, 1, 2), "forced", 0.0
    )
    monkeypatch.setattr(cli, "run_checks", lambda *a, **k: [failed])
    rc = main(["verify", "--checks", "euler_sum"])
    out = capsys.readouterr().out
    assert rc == 1
    assert "FAIL" in out and "lhs=1 rhs=2" in out


def test_verify_rejects_bad_order(capsys):
    rc = main(["verify", "--order", "1"])
    assert rc == 2
    assert "max_order" in capsys.readouterr().err


# -- table ----------------------------------------------------------------------


def test_table_rows_golden():
    assert table_rows(6) == [
        (1, 1, 1, 1), (2, 2, 2, 2), (3, 3, 3, 3),
        (4, 4, 4, 4), (5, 5, 5, 5), (6, 7, 7, 7),
    ]


def test_table_row_5_paper_value():
    assert table_rows(5)[4] == (5, 5, 5, 5)


def test_table_oracle_columns_capped():
    rows = table_rows(8, cap=5)
    assert rows[4] == (5, 5, 5, 5)
    assert rows[6][2] is None  # a_direct beyond its cap
    assert rows[6][3] == rows[6][1]  # b_direct still fine


def test_table_markdown_and_csv_same_numbers(capsys):
    rc = main(["table", "--max", "6"])
    md = capsys.readouterr().out
    assert rc == 0
    rc = main(["table", "--max", "6", "--format", "csv"])
    csv_out = capsys.readouterr().out
    assert rc == 0
    md_numbers = [
        [c.strip() for c in line.strip("|").split("|")]
        for line in md.strip().splitlines()[2:]
    ]
    csv_numbers = [line.split(",") for line in csv_out.strip().splitlines()[1:]]
    assert md_numbers == csv_numbers


def test_table_json(capsys):
    rc = main(["table", "--max", "3", "--format", "json"])
    rows = json.loads(capsys.readouterr().out)
    assert rc == 0
    assert rows[2] == {"n": 3, "a_series": 3, "a_direct": 3, "b_direct": 3}


def test_table_marker_beyond_cap(capsys):
    rc = main(["table", "--max", "7", "--cap", "4", "--format", "csv"])
    out = capsys.readouterr().out.strip().splitlines()
    assert rc == 0
    assert out[7].split(",") == ["7", "8", "-", "8"]


# -- oeis -----------------------------------------------------------------------


def test_oeis_matching_file(tmp_path, capsys):
    path = write(tmp_path, "# A034296\n1 1\n2 2\n3 3\n5 5\n")
    rc = main(["oeis", "--bfile", path, "--order", "30"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "compared 4 entries" in out
    assert "all compared entries match" in out


def test_oeis_single_line(tmp_path, capsys):
    path = write(tmp_path, "5 5\n")
    assert main(["oeis", "--bfile", path, "--order", "30"]) == 0
    capsys.readouterr()


def test_oeis_mismatch_exit_one(tmp_path, capsys):
    path = write(tmp_path, "5 6\n")
    rc = main(["oeis", "--bfile", path, "--order", "30"])
    out = capsys.readouterr().out
    assert rc == 1
    assert "MISMATCH at n=5" in out


def test_oeis_malformed_exit_two(tmp_path, capsys):
    path = write(tmp_path, "1 1\n2\n")
    rc = main(["oeis", "--bfile", path])
    err = capsys.readouterr().err
    assert rc == 2
    assert ":2:" in err


def test_oeis_missing_file_exit_two(capsys):
    rc = main(["oeis", "--bfile", "/nonexistent/bfile.txt"])
    assert rc == 2
    assert "error" in capsys.readouterr().err


def test_oeis_skips_indices_outside_window(tmp_path, capsys):
    # offset-0 b-files list a(0) = 1 for the empty partition; the series
    # starts at q^1, so index 0 is outside the comparison domain
    path = write(tmp_path, "0 1\n1 1\n2 2\n")
    rc = main(["oeis", "--bfile", path, "--order", "30"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "compared 2 entries" in out
    assert "skipped" in out


def test_oeis_non_contiguous_indices(tmp_path, capsys):
    path = write(tmp_path, "2 2\n9 13\n")
    rc = main(["oeis", "--bfile", path, "--order", "30"])
    assert rc == 0
    capsys.readouterr()


# -- top level ---------------------------------------------------------------------


def test_no_command_prints_catalog(capsys):
    rc = main([])
    out = capsys.readouterr().out
    assert rc == 0
    assert "identity catalog" in out
    for name in ["eq_1_1", "theorem_1", "heine_instance"]:
        assert name in out


def test_runconfig_invariants():
    with pytest.raises(ValueError):
        RunConfig(max_order=1)
    with pytest.raises(ValueError):
        RunConfig(jobs=0)
    cfg = RunConfig()
    assert cfg.checks == ["all"]
    assert cfg.output_format == "text"
