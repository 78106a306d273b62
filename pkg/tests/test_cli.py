from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path

from braidcleft.cli import main

CONFIGS = Path(__file__).resolve().parent.parent / "configs"


def write(tmp_path, text, name="d.cfg"):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_verify_hopf_taft(capsys):
    assert main(["verify-hopf", str(CONFIGS / "taft3.cfg")]) == 0
    out = capsys.readouterr().out
    assert "PASS: 0 failing checks" in out


def test_dump_structure_is_stable(capsys):
    path = str(CONFIGS / "taft3.cfg")
    assert main(["dump-structure", path]) == 0
    first = capsys.readouterr().out
    assert main(["dump-structure", path]) == 0
    assert capsys.readouterr().out == first


def test_verify_comodule_algebra_machine_out(tmp_path):
    out = tmp_path / "r.json"
    assert main(["verify-comodule-algebra", str(CONFIGS / "c2cubed_regular.cfg"), "--machine-out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["ok"] is True
    assert data["reports"]


def test_cleft_tables(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["cleft", str(CONFIGS / "c6_regular.cfg"), "--machine-out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["tables"]["coinvariant basis"] == ["c0 = [rat(1) * 1]"]
    assert len(data["tables"]["rho"]) == 18
    assert len(data["tables"]["sigma"]) == 324
    assert "(x^2,x) -> []" in data["tables"]["sigma"]


def test_group_algebra_source(tmp_path):
    text = (CONFIGS / "c2cubed_regular.cfg").read_text().replace('"regular"', '"group_algebra"')
    assert main(["verify-comodule-algebra", write(tmp_path, text)]) == 0


def test_missing_config_exit_code(capsys):
    assert main(["cleft"]) == 2
    assert main(["cleft", "/nonexistent/x.cfg"]) == 2


def test_parse_error_exit_code(tmp_path, capsys):
    path = write(tmp_path, "[datum]\ngroup = cyclic([6)\n")
    assert main(["verify-hopf", path]) == 2
    err = capsys.readouterr().err
    assert err.startswith(f"{path}: line 2, column 18:")


def test_semantic_error_exit_code(tmp_path, capsys):
    path = write(tmp_path, '[datum]\ngroup = cyclic([2])\ncharacter = exponents([1])\nz = word("g9")\n'
                           'lambda = 0\nq = 1\n')
    assert main(["verify-hopf", path]) == 2
    assert "line 4" in capsys.readouterr().err


def test_non_central_z_fails(tmp_path, capsys):
    path = write(tmp_path, '[datum]\ngroup = symmetric(3)\ncharacter = exponents([0, 0, 0, 0, 0, 0])\n'
                           'z = word("021")\nlambda = 1\nq = -1\n')
    assert main(["verify-hopf", path]) == 1
    assert "datum_valid" in capsys.readouterr().out


def test_group_bound(tmp_path, capsys):
    assert main(["verify-hopf", str(CONFIGS / "c6_regular.cfg"), "--max-group-order", "4"]) == 1
    assert "group_order_within_bound" in capsys.readouterr().out


def test_bad_cleft_datum_fails(tmp_path, capsys):
    text = (CONFIGS / "c6_regular.cfg").read_text().replace('b_x = vec("x")', 'b_x = vec("x") * 2')
    assert main(["cleft", write(tmp_path, text)]) == 1
    assert "b_x_ladder_one" in capsys.readouterr().out


def test_fixtures_command_subprocess(tmp_path):
    out = tmp_path / "f.json"
    proc = subprocess.run([sys.executable, "-m", "braidcleft", "fixtures", "--experimental-diagram-checks",
                           "--machine-out", str(out)], capture_output=True, text=True, timeout=600)
    assert proc.returncode == 0, proc.stdout[-2000:]
    titles = [r["title"] for r in json.loads(out.read_text())["reports"]]
    assert titles[:2] == ["C2^3 datum", "C6 datum"]
    assert len(titles) == 6


def test_explicit_comodule_algebra_cleft(capsys):
    assert main(["cleft", str(CONFIGS / "sweedler_explicit.cfg")]) == 0
    out = capsys.readouterr().out
    assert "(x,x) -> []" in out


def test_explicit_broken_leibniz(tmp_path, capsys):
    # x*g = -gx is replaced by +gx, which breaks the twisted Leibniz rule
    text = (CONFIGS / "sweedler_explicit.cfg").read_text().replace('mul.x.g = -vec("gx")', 'mul.x.g = vec("gx")')
    assert main(["verify-comodule-algebra", write(tmp_path, text)]) == 1
    assert "[fail] twisted_leibniz  witness=('x', 'g')" in capsys.readouterr().out
