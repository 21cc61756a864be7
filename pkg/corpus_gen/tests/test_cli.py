import json

from corpus_gen import cli

from conftest import CORPUS_FILE


def test_generate_only_one_fixture(tmp_path, capsys):
    code = cli.main(["generate", "--corpus", str(CORPUS_FILE),
                     "--out", str(tmp_path), "--only", "bar"])
    assert code == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert len(out) == 1
    assert (tmp_path / "matplotlib" / "bar" / "chart.svg").exists()
    sidecar = json.loads(
        (tmp_path / "matplotlib" / "bar" / "sidecar.json").read_text())
    assert sidecar["chartType"] == "bar"


def test_generate_unknown_name_fails(tmp_path, capsys):
    code = cli.main(["generate", "--corpus", str(CORPUS_FILE),
                     "--out", str(tmp_path), "--only", "nope"])
    assert code == 1
    assert "nothing matched" in capsys.readouterr().err


def test_generate_missing_corpus_fails(tmp_path, capsys):
    code = cli.main(["generate", "--corpus", str(tmp_path / "absent.yaml"),
                     "--out", str(tmp_path)])
    assert code == 1


def test_check_passes_on_fresh_output(tmp_path, capsys):
    assert cli.main(["generate", "--corpus", str(CORPUS_FILE),
                     "--out", str(tmp_path), "--only", "histogram"]) == 0
    capsys.readouterr()
    assert cli.main(["check", "--dir", str(tmp_path)]) == 0
    out = capsys.readouterr().out
    assert "ok" in out and "FAIL" not in out


def test_check_flags_tampered_svg(tmp_path, capsys):
    assert cli.main(["generate", "--corpus", str(CORPUS_FILE),
                     "--out", str(tmp_path), "--only", "bar"]) == 0
    svg = tmp_path / "matplotlib" / "bar" / "chart.svg"
    svg.write_bytes(svg.read_bytes().replace(b'id="mark-0"', b'id="mark-9"'))
    capsys.readouterr()
    assert cli.main(["check", "--dir", str(tmp_path)]) == 1
    assert "FAIL" in capsys.readouterr().out


def test_check_empty_dir_fails(tmp_path, capsys):
    assert cli.main(["check", "--dir", str(tmp_path)]) == 1
    assert "no fixtures" in capsys.readouterr().err


def test_usage_error_maps_to_exit_one(capsys):
    assert cli.main(["bogus"]) != 0
