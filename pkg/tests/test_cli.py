import io
import re
import json

import pytest

from ograph import cp
from ograph.cli import main
from ograph.ecore import parse

TREF = "[1, 2, -2, -1; 1, 1]"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_cp(capsys):
    code, out, _ = run(capsys, "verify-cp", "--audit")
    assert code == 0
    assert out.strip().splitlines()[-1] == "PASS"
    numbered = [line for line in out.splitlines() if re.match(r"\s*\d+\. ", line)]
    assert len(numbered) == 20


def test_canon_identifies_rhs_encodings(capsys):
    _, a, _ = run(capsys, "canon", cp.CP_RHS)
    _, b, _ = run(capsys, "canon", cp.CP_RHS_ALT)
    assert a == b


def test_homology_non_closed_exit_3(capsys):
    code, _, err = run(capsys, "homology", "[[1], [-1, 2], [-2]; [1, 1]]")
    assert code == 3
    assert "suture" in err


def test_homology_output(capsys):
    code, out, _ = run(capsys, "homology", TREF)
    assert code == 0 and out.strip() == "H0=Z; H1=Z/2; H2=0; H3=Z"


def test_syntax_error_exit_2(capsys):
    code, _, err = run(capsys, "parse", "[1, 2; 1")
    assert code == 2 and "syntax" in err


def test_invariant_error_exit_3(capsys):
    code, _, _ = run(capsys, "parse", "[1, 1; 1]")
    assert code == 3


def test_search_exhausted_exit_4(capsys):
    code, out, _ = run(capsys, "search", "[1, -1; 1]", "[1, -1; -1]", "--moves", "psI",
                       "--max-depth", "1", "--max-vertices", "3")
    assert code == 4


def test_search_found(capsys):
    code, out, _ = run(capsys, "search", "[1, -1; 1]", "[1, -1; 1]")
    assert code == 0 and "0 moves" in out


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--max-n", "2", "--closed-only")
    assert code == 0 and len(out.split("\n")) - 1 == 11
    code, _, _ = run(capsys, "enumerate", "--max-n", "9", "--closed-only")
    assert code == 4


def test_json_graph_output_parses(capsys):
    for cmd in ("parse", "canon"):
        code, out, _ = run(capsys, cmd, cp.CP_RHS, "--json")
        data = json.loads(out)
        assert parse(data["edatum"]) is not None
    code, out, _ = run(capsys, "apply", cp.CP_LHS, "--step", "C3[2,1]", "--json")
    assert parse(json.loads(out)["edatum"], connected=False).n == 4


def test_json_run_script_states_parse(capsys, tmp_path):
    script = tmp_path / "s.txt"
    script.write_text("\n".join(s for s, _ in cp.LHS_SCRIPT[:2]) + "\n")
    code, out, _ = run(capsys, "run-script", cp.CP_LHS, str(script), "--json")
    data = json.loads(out)
    assert code == 0 and data["ok"]
    for s in data["states"]:
        parse(s, connected=False)


def test_run_script_failure_exit_1(capsys):
    code, out, _ = run(capsys, "run-script", cp.CP_LHS, "C3[2,1]; A1[1,2]")
    assert code == 1 and "FAIL" in out


def test_stdin_and_file_input(capsys, monkeypatch, tmp_path):
    monkeypatch.setattr("sys.stdin", io.StringIO(TREF + "\n"))
    code, out, _ = run(capsys, "components", "-")
    assert code == 0 and out.strip() == "1"
    f = tmp_path / "g.txt"
    f.write_text(TREF)
    code, out, _ = run(capsys, "edges", str(f))
    assert code == 0 and len(out.split()) == 4


def test_apply_lists_matches(capsys):
    code, out, _ = run(capsys, "apply", TREF, "--moves", "A1")
    assert code == 0 and out.split() == ["A1[1,2]"]


def test_check_cond(capsys):
    code, out, _ = run(capsys, "check-cond", TREF, "--kind", "ps4", "--left=1->2", "--right=-1->1")
    assert out.strip() in ("holds", "fails")
    assert code == (0 if out.strip() == "holds" else 1)
    code, _, _ = run(capsys, "check-cond", TREF, "--kind", "ps4", "--left=1->-1", "--right=-1->1")
    assert code == 2


def test_check_closed(capsys):
    assert run(capsys, "check-closed", TREF)[0] == 0
    assert run(capsys, "check-closed", "[[1], [-1]; [1]]")[0] == 1


def test_triangulate(capsys):
    code, out, _ = run(capsys, "triangulate", TREF)
    assert code == 0 and len(out.strip().splitlines()) == 4 and "<->" in out
    assert run(capsys, "triangulate", cp.CP_LHS)[0] == 3


def test_export_dot(capsys):
    code, out, _ = run(capsys, "export-dot", cp.CP_LHS)
    assert code == 0 and out.startswith("digraph")
    assert out.count("->") == 7


def test_verify_relations(capsys):
    code, out, _ = run(capsys, "verify-relations")
    assert code == 0 and out.strip().endswith("PASS")


def test_move_error_exit_1(capsys):
    code, _, err = run(capsys, "apply", TREF, "--step", "C1[1,2]")
    assert code == 1 and "move error" in err


def test_unknown_subcommand_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
