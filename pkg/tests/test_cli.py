"""Command line behaviour: golden replays, exit codes, and output shapes.

Each ``tests/golden/*.cmd`` file holds one command line (paths relative to
the golden directory) and the matching ``.out`` file holds its exact
stdout.
"""

import json
import shlex
from pathlib import Path

import pytest

from aicrepair import cli

GOLDEN = Path(__file__).parent / "golden"
REPLAYS = sorted(GOLDEN.glob("*.cmd"))


def run(argv, capsys):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.mark.parametrize("cmd_file", REPLAYS, ids=lambda p: p.stem)
def test_golden_replay(cmd_file, capsys, monkeypatch):
    monkeypatch.chdir(GOLDEN)
    argv = shlex.split(cmd_file.read_text().strip())
    expected = cmd_file.with_suffix(".out").read_text()
    code, out, _ = run(argv, capsys)
    assert code == 0
    assert out == expected


def test_missing_file_is_an_input_error(capsys):
    code, out, err = run(
        ["repair", str(GOLDEN / "no_such.aic"), "--class", "repair"], capsys
    )
    assert code == 2
    assert out == ""
    assert err.startswith("error: cannot read")


def test_kind_mismatch_is_an_input_error(capsys):
    code, _, err = run(
        ["repair", str(GOLDEN / "choice_pair.rev"), "--class", "repair"], capsys
    )
    assert code == 2
    assert "needs a aic: program, found rev:" in err


def test_class_must_match_the_instance_kind(capsys):
    code, _, err = run(
        [
            "check",
            str(GOLDEN / "choice_pair.rev"),
            "--class",
            "weak-repair",
            "--set=in(a)",
        ],
        capsys,
    )
    assert code == 2
    assert "class 'weak-repair' does not apply to a rev: program" in err


def test_lp_instances_are_rejected_where_they_make_no_sense(capsys):
    lp = str(GOLDEN / "split_choice.lp")
    for argv in (
        ["check", lp, "--class", "weak-repair", "--set=+a"],
        ["translate", lp, "--to", "rev"],
        ["normalize", lp],
        ["cqa", lp, "--class", "repair", "--query", "a"],
        ["lattice", lp],
    ):
        code, _, err = run(argv, capsys)
        assert code == 2, argv
        assert "error:" in err, argv


def test_jobs_must_be_positive(capsys):
    code, _, err = run(
        ["repair", str(GOLDEN / "pair_delete.aic"), "--class", "repair", "--jobs", "0"],
        capsys,
    )
    assert code == 2
    assert "--jobs must be at least 1" in err


def test_atom_bound_refusal(capsys):
    code, _, err = run(
        [
            "repair",
            str(GOLDEN / "pair_delete.aic"),
            "--class",
            "repair",
            "--max-atoms",
            "1",
        ],
        capsys,
    )
    assert code == 1
    assert err.startswith("refused:")
    assert "--max-atoms" in err


def test_atom_bound_env_override(capsys, monkeypatch):
    monkeypatch.setenv("AICREPAIR_MAX_ATOMS", "1")
    code, _, err = run(
        ["repair", str(GOLDEN / "pair_delete.aic"), "--class", "repair"], capsys
    )
    assert code == 1
    assert err.startswith("refused:")
    monkeypatch.setenv("AICREPAIR_MAX_ATOMS", "many")
    code, _, err = run(
        ["repair", str(GOLDEN / "pair_delete.aic"), "--class", "repair"], capsys
    )
    assert code == 2
    assert err.startswith("error:")


def test_check_reports_nonmembers_without_refusing(capsys):
    code, out, _ = run(
        [
            "check",
            str(GOLDEN / "pair_delete.aic"),
            "--class",
            "weak-repair",
            "--set=+a,-a",
        ],
        capsys,
    )
    assert code == 0
    assert out == "false\n"


def test_check_json_payload(capsys):
    code, out, _ = run(
        [
            "check",
            str(GOLDEN / "pair_delete.aic"),
            "--class",
            "repair",
            "--set=-a",
            "--format",
            "json",
        ],
        capsys,
    )
    assert code == 0
    assert json.loads(out) == {"schema": 1, "member": True}


def test_cqa_json_payload(capsys):
    code, out, _ = run(
        [
            "cqa",
            str(GOLDEN / "pair_delete.aic"),
            "--class",
            "repair",
            "--query",
            "a",
            "--format",
            "json",
        ],
        capsys,
    )
    assert code == 0
    payload = json.loads(out)
    assert payload == {"schema": 1, "status": "unknown", "holding": 1, "total": 2}


def test_shift_verify_reports_class_count_on_stderr(capsys):
    code, _, err = run(
        ["shift", str(GOLDEN / "pair_delete.aic"), "--by", "a", "--verify"], capsys
    )
    assert code == 0
    assert err == "shift-verify: ok (8 classes)\n"
    code, _, err = run(
        ["shift", str(GOLDEN / "mutual_pair_chain.rev"), "--by", "a", "--verify"],
        capsys,
    )
    assert code == 0
    assert err == "shift-verify: ok (9 classes)\n"
    code, _, err = run(
        ["shift", str(GOLDEN / "choice_pair.rev"), "--by", "a", "--verify"], capsys
    )
    assert code == 0
    assert err == "shift-verify: ok (8 classes)\n"


def test_lattice_verify_text_summary(capsys):
    code, out, _ = run(
        ["lattice", str(GOLDEN / "mutual_pair_chain.rev"), "--verify"], capsys
    )
    assert code == 0
    assert out.rstrip().endswith("lattice: ok (15 relations)")


def test_lattice_json_includes_supported_only_for_normal_programs(capsys):
    code, out, _ = run(
        [
            "lattice",
            str(GOLDEN / "mutual_pair_chain.rev"),
            "--verify",
            "--format",
            "json",
        ],
        capsys,
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == 1
    assert "supported-revision" in payload["classes"]
    assert len(payload["relations"]) == 15
    assert all(row["holds"] for row in payload["relations"])

    code, out, _ = run(
        ["lattice", str(GOLDEN / "choice_pair.rev"), "--verify", "--format", "json"],
        capsys,
    )
    assert code == 0
    payload = json.loads(out)
    assert "supported-revision" not in payload["classes"]
    assert len(payload["relations"]) == 14
    assert all(row["holds"] for row in payload["relations"])
