import json
import subprocess
import sys

import pytest

from b3geodesics.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_geodesic(capsys):
    code, out, _ = run(capsys, "geodesic", "abAB")
    assert code == 0
    assert out.splitlines()[0] == "false"
    assert "conflict" in out
    assert run(capsys, "geodesic", "aBaBaB")[1] == "true\n"


def test_normalize(capsys):
    assert run(capsys, "normalize", "--form", "tf", "ab")[1] == "B(aba)^1\n"
    assert run(capsys, "normalize", "--form", "cf", "aB")[1] == "a^2b(aba)^-1\n"
    assert run(capsys, "normalize", "--form", "rg", "AA")[1] == "ba^2b(aba)^-2\n"
    assert run(capsys, "normalize", "--form", "sl", "a^2b^2A^2B^2")[1] == "aBaBaB\n"


def test_equal_length_translation(capsys):
    assert run(capsys, "equal", "aba", "bab")[1] == "true\n"
    assert run(capsys, "equal", "ab", "ba")[1] == "false\n"
    assert run(capsys, "length", "a^2b^2A^2B^2")[1] == "6\n"
    assert run(capsys, "translation-length", "(aba)^2")[1] == "6\n"


def test_domain_errors(capsys):
    code, _, err = run(capsys, "geodesic", "abx")
    assert code == 1 and "position 2" in err
    assert run(capsys, "normalize", "--form", "zz", "a")[0] == 1


def test_unknown_flag_is_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["geodesic", "--bogus", "a"])
    assert info.value.code != 0
    assert "usage" in capsys.readouterr().err


def test_growth(capsys):
    out = run(capsys, "growth", "--kind", "geodesic", "--terms", "4", "--source", "formula")[1]
    assert out.split() == ["1", "4", "12", "36", "96"]
    for source in ("dfa", "bruteforce"):
        out = run(capsys, "growth", "--kind", "spherical", "--terms", "3", "--source", source)[1]
        assert out.split() == ["1", "4", "12", "30"]
    out = run(capsys, "growth", "--kind", "spherical", "--terms", "2", "--csv")[1]
    assert out.splitlines() == ["n,count", "0,1", "1,4", "2,12"]


def test_growth_verify(capsys):
    code, out, _ = run(capsys, "growth", "--kind", "spherical", "--terms", "8", "--verify")
    assert code == 0 and out.strip().endswith("agree")


def test_fsa_export(capsys, tmp_path):
    code, out, _ = run(capsys, "fsa", "--language", "geodesic", "--export", "json")
    data = json.loads(out)
    assert data["states"] == 28 and len(data["accepting"]) == 27 and data["start"] == 0
    assert set(data["transitions"]["0"]) == {"a", "A", "b", "B"}
    target = tmp_path / "sl.dot"
    assert run(capsys, "fsa", "--language", "shortlex", "--export", "dot", "-o", str(target))[0] == 0
    assert target.read_text().startswith("digraph")


def test_cayley_ball(capsys, tmp_path):
    dot = tmp_path / "ball.dot"
    code, out, _ = run(capsys, "cayley-ball", "--radius", "3", "--dot", str(dot))
    assert code == 0 and "vertices 47" in out
    assert dot.read_text().count("->") > 0


def test_output_is_stable(capsys):
    first = run(capsys, "fsa", "--export", "dot")[1]
    assert run(capsys, "fsa", "--export", "dot")[1] == first


def test_selftest_small(capsys):
    code, out, _ = run(capsys, "selftest", "--max-len", "6", "--only", "1,2,4,7")
    assert code == 0
    assert out.count("PASS") == 4


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "b3geodesics", "length", "abaB"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "2\n"
