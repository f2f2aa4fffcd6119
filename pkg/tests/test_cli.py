import json

import pytest

from qorbit.cli import main


AR = ["--target", "Ar", "--intensity", "9e13", "--lambda-um", "0.99"]


def test_saddle_command(tmp_path):
    out = tmp_path / "saddle.json"
    rc = main(["saddle", *AR, "--px", "0.05", "--pz", "0.4",
               "--output", str(out)])
    assert rc == 0
    doc = json.loads(out.read_text())
    assert doc["ts"][0] == pytest.approx(5.611874009199043, rel=1e-9)
    assert doc["ts"][1] == pytest.approx(19.346158662546085, rel=1e-9)
    man = doc["manifest"]
    assert man["command"] == "saddle"
    assert man["params_human"]["Ip_eV"] == pytest.approx(15.76, rel=1e-9)
    assert man["params_au"]["gamma"] == pytest.approx(0.978, abs=1e-3)


def test_classical_sr_table(tmp_path, capsys):
    out = tmp_path / "sr.json"
    rc = main(["classical-sr", *AR, "--n", "1..3", "--output", str(out)])
    assert rc == 0
    text = capsys.readouterr().out
    assert "odd" in text and "even" in text
    doc = json.loads(out.read_text())
    assert [r["n"] for r in doc["recollisions"]] == [1, 2, 3]
    assert doc["recollisions"][0]["pz_sr"] == pytest.approx(
        0.06986742993333617, rel=1e-9)


def test_tca_command(tmp_path):
    out = tmp_path / "tca.json"
    rc = main(["tca", *AR, "--px", "0.05", "--pz", "0.4",
               "--output", str(out)])
    assert rc == 0
    doc = json.loads(out.read_text())
    assert len(doc["roots"]) == 11
    assert all(r["residual"] < 1e-10 for r in doc["roots"])


def test_contour_command(tmp_path):
    out = tmp_path / "contour.json"
    rc = main(["contour", *AR, "--px", "0.001", "--pz", "0.0699",
               "--output", str(out)])
    assert rc == 0
    doc = json.loads(out.read_text())
    assert doc["validation"]["continuous"] is True
    assert len(doc["contour"]["nodes"]) >= 3


def test_amp_command(tmp_path):
    out = tmp_path / "amp.json"
    rc = main(["amp", *AR, "--px", "0.05", "--pz", "0.4",
               "--output", str(out)])
    assert rc == 0
    doc = json.loads(out.read_text())
    assert doc["log_amplitude"] == pytest.approx(-4.421317, rel=1e-4)
    assert doc["sfa_log_amplitude"] == pytest.approx(-7.9154189, rel=1e-6)


def test_spectrum_command(tmp_path):
    out = tmp_path / "spec.csv"
    rc = main(["spectrum", *AR, "--px-min", "0.02", "--px-max", "0.04",
               "--pz-min", "0.2", "--pz-max", "0.3", "--nx", "2", "--nz", "2",
               "--jobs", "1", "--output", str(out)])
    assert rc == 0
    lines = out.read_text().splitlines()
    assert "px,pz,log10_yield" in lines
    assert (tmp_path / "spec.csv.manifest.json").exists()


def test_gamma_flag_sets_frequency(tmp_path):
    out = tmp_path / "s.json"
    rc = main(["saddle", "--target", "Ar", "--intensity", "9e13",
               "--gamma", "0.31", "--px", "0.05", "--pz", "0.4",
               "--output", str(out)])
    assert rc == 0
    doc = json.loads(out.read_text())
    assert doc["manifest"]["params_au"]["gamma"] == pytest.approx(0.31,
                                                                  rel=1e-12)


def test_missing_field_args_exit_code():
    with pytest.raises(SystemExit):
        main(["saddle", "--px", "0.1", "--pz", "0.1"])


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
