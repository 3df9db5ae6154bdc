from __future__ import annotations

import json
from pathlib import Path

import pytest

from tensorcat import symfunc
from tensorcat.cli import main, parse_simple_index
from tensorcat.errors import ParseError
from tensorcat.grothendieck import simple

SCHEMA_PATH = Path(__file__).resolve().parents[1] / "schema" / "output.json"


@pytest.fixture(autouse=True)
def _no_disk_cache():
    yield
    symfunc.set_disk_cache(None)


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_simple_index():
    assert parse_simple_index("[1],[],[],[1]") == simple(lam=[1], pi=[1])
    assert parse_simple_index("[2,1],[1],[],[3]") == simple([2, 1], [1], [], [3])
    with pytest.raises(ParseError):
        parse_simple_index("[1],[],[]")
    with pytest.raises(ParseError):
        parse_simple_index("[1],[],[],[1")


def test_spec_command_lines(capsys):
    code, out, err = run(capsys, "lr", "[2,1]", "[1]", "[2]")
    assert (code, out, err) == (0, "1\n", "")
    code, out, err = run(capsys, "defect", "1,0,0,1", "0,1,1,0")
    assert (code, out, err) == (0, "2\n", "")
    code, out, err = run(capsys, "ext-trivial", "[1],[],[],[1]", "--degree", "1")
    assert (code, out, err) == (0, "1\n", "")


def test_product_and_plethysm_output(capsys):
    code, out, _ = run(capsys, "product", "[1]", "[1]")
    assert code == 0
    assert out == "1 [1,1]\n1 [2]\n"
    code, out, _ = run(capsys, "plethysm", "ext-ext2", "2")
    assert code == 0
    assert out == "1 [2,1,1]\n"
    code, out, _ = run(capsys, "plethysm", "cauchy-ext", "2")
    assert code == 0
    assert out == "1 [1,1],[2]\n1 [2],[1,1]\n"


def test_decompose_socle_layers(capsys):
    code, out, _ = run(capsys, "decompose", "0,1,1,0")
    assert code == 0
    assert out.splitlines() == [
        "1 [],[],[],[]",
        "1 [],[1],[],[1]",
        "1 [],[1],[1],[]",
        "1 [1],[],[],[1]",
        "1 [1],[],[1],[]",
    ]
    code, out, _ = run(capsys, "socle", "0,1,1,0")
    assert out == "1 [],[1],[1],[]\n"
    code, out, _ = run(capsys, "layers", "1")
    assert out.splitlines() == ["layer 0:", "  1 [],[],[],[]", "layer 1:", "  1 [1],[],[],[1]"]


def test_chains_and_covers(capsys):
    code, out, _ = run(capsys, "chains", "1,0,0,1", "0,1,1,0")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 4
    assert all(line.count("->") == 2 for line in lines)
    code, out, _ = run(capsys, "covers", "0,0,0,0", "--bound", "2")
    assert out == "0,1,1,0\n"


def test_defect_undefined(capsys):
    code, out, _ = run(capsys, "defect", "0,1,0,0", "1,0,0,0")
    assert (code, out) == (0, "undefined\n")


def test_ext_commands(capsys):
    code, out, _ = run(capsys, "ext-thick", "[2],[],[],[1,1]", "[1]", "[1]", "--degree", "1")
    assert (code, out) == (0, "1\n")
    code, out, _ = run(capsys, "ext-vanishes", "[1],[],[],[1]", "[],[],[],[]", "--degree", "2")
    assert (code, out) == (0, "true\n")
    code, out, _ = run(capsys, "resolution", "2")
    assert out.splitlines() == [
        "body: Lambda^2(F) (x) I",
        "1 [1,1],[],[],[2]",
        "1 [2],[],[],[1,1]",
    ]
    code, out, _ = run(capsys, "kernel-layer", "1", "1")
    assert out == "1 [1,1],[],[],[1,1]\n1 [2],[],[],[2]\n"
    code, out, _ = run(capsys, "kernel-layer", "0", "3")
    assert out == "0\n"


def test_homdim_and_quadkernel(capsys):
    code, out, _ = run(capsys, "homdim", "2,2,1,1", "end")
    assert out == "4\n"
    code, out, _ = run(capsys, "homdim", "1,2,1,0", "shift-left")
    assert out == "4\n"
    code, out, _ = run(capsys, "quadkernel", "0,2,2,0")
    assert out == "2\n"
    code, out, _ = run(capsys, "quadkernel", "0,2,2,0", "--check")
    assert out == "2\ncheck: ok\n"


def test_osp_commands(capsys):
    code, out, _ = run(capsys, "osp", "--kind", "o", "defect", "1,0", "0,1")
    assert out == "1\n"
    code, out, _ = run(capsys, "osp", "--kind", "o", "layers", "1")
    assert out.splitlines() == ["layer 0:", "  1 []", "layer 1:", "  1 [2]"]
    code, out, _ = run(capsys, "osp", "--kind", "sp", "ext-trivial", "[2,1,1]", "[]", "--degree", "2")
    assert out == "1\n"
    code, out, _ = run(capsys, "osp", "--kind", "o", "conjugate", "[2]", "[]")
    assert out == "sp [1,1],[]\n"


def test_exit_codes(capsys):
    code, out, err = run(capsys, "lr", "bogus", "[1]", "[2]")
    assert code == 1 and out == "" and "position 0" in err
    code, out, err = run(capsys, "--degree-cap", "3", "decompose", "2,2,2,2")
    assert code == 2 and "cap" in err
    code, out, err = run(capsys, "homdim", "0,0,1,0", "contract")
    assert code == 1 and "m" in err


def test_argparse_usage_errors_exit_one():
    with pytest.raises(SystemExit) as err:
        main(["plethysm", "not-a-family", "2"])
    assert err.value.code == 1


def test_output_determinism(capsys):
    first = run(capsys, "decompose", "0,2,1,0")
    second = run(capsys, "decompose", "0,2,1,0")
    assert first == second


def test_json_outputs_validate_against_schema(capsys):
    jsonschema = pytest.importorskip("jsonschema")
    schema = json.loads(SCHEMA_PATH.read_text(encoding="utf-8"))
    commands = [
        ["lr", "[2,1]", "[1]", "[2]"],
        ["product", "[2,1]", "[1]"],
        ["plethysm", "cauchy-sym", "2"],
        ["plethysm", "sym-sym2", "2"],
        ["decompose", "0,1,1,0"],
        ["socle", "1,0,0,1"],
        ["layers", "2"],
        ["defect", "1,0,0,1", "0,1,1,0"],
        ["defect", "0,1,0,0", "1,0,0,0"],
        ["chains", "1,0,0,1", "0,1,1,0"],
        ["covers", "0,0,0,0", "--bound", "2"],
        ["ext-trivial", "[1],[],[],[1]", "--degree", "1"],
        ["ext-thick", "[2],[],[],[1,1]", "[1]", "[1]", "--degree", "1"],
        ["ext-vanishes", "[],[],[],[]", "[],[],[],[]", "--degree", "0"],
        ["resolution", "2"],
        ["kernel-layer", "0", "2"],
        ["homdim", "1,2,1,0", "contract"],
        ["quadkernel", "0,2,2,0", "--check"],
        ["osp", "--kind", "o", "leq", "1,0", "0,1"],
        ["osp", "--kind", "sp", "layers", "1"],
        ["osp", "--kind", "o", "conjugate", "[2]", "[]"],
        ["cache", "info"],
    ]
    for argv in commands:
        code = main(["--output", "json"] + argv)
        captured = capsys.readouterr()
        assert code == 0, (argv, captured.err)
        document = json.loads(captured.out)
        jsonschema.validate(document, schema)


def test_config_precedence(tmp_path, capsys, monkeypatch):
    config = tmp_path / "tensorcat.conf"
    config.write_text("degree_cap = 4\n# comment\n", encoding="utf-8")
    # file alone: cap 4 refuses degree 8
    code, _, err = run(capsys, "--config", str(config), "decompose", "2,2,2,2")
    assert code == 2
    # env overrides file
    monkeypatch.setenv("TENSORCAT_DEGREE_CAP", "8")
    code, out, _ = run(capsys, "--config", str(config), "decompose", "2,2,2,2")
    assert code == 0 and out
    # flag overrides env
    code, _, err = run(capsys, "--config", str(config), "--degree-cap", "5", "decompose", "2,2,2,2")
    assert code == 2
    monkeypatch.delenv("TENSORCAT_DEGREE_CAP")
    monkeypatch.setenv("TENSORCAT_CONFIG", str(config))
    code, _, err = run(capsys, "decompose", "2,2,2,2")
    assert code == 2
    monkeypatch.delenv("TENSORCAT_CONFIG")


def test_cache_cli(tmp_path, capsys):
    cache_dir = tmp_path / "cache"
    code, out, _ = run(capsys, "--cache-dir", str(cache_dir), "lr", "[2,1]", "[1]", "[2]")
    assert code == 0
    records = cache_dir / "lr.records"
    assert records.exists()
    code, out, _ = run(capsys, "--cache-dir", str(cache_dir), "cache", "info")
    assert "records:" in out
    assert str(records) in out
    code, out, _ = run(capsys, "--cache-dir", str(cache_dir), "cache", "clear")
    assert out == "cache cleared\n"
    assert not records.exists()
    code, out, _ = run(capsys, "cache", "info")
    assert "disabled" in out


def test_missing_subcommand(capsys):
    code, out, err = run(capsys)
    assert code == 1 and "subcommand" in err


def test_verify_mode(capsys):
    code, out, err = run(capsys, "--verify")
    assert code == 0
    lines = out.splitlines()
    assert lines and all(line.endswith(": ok") for line in lines)


def test_subprocess_byte_determinism():
    import subprocess
    import sys

    argv = [sys.executable, "-m", "tensorcat", "--output", "json", "decompose", "0,2,1,0"]
    first = subprocess.run(argv, capture_output=True)
    second = subprocess.run(argv, capture_output=True)
    assert first.returncode == 0
    assert first.stdout == second.stdout
    assert first.stdout.endswith(b"\n")
