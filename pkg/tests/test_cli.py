import json
import subprocess
import sys

import pytest

from divstab import catalog, cli, jsonio


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_catalog_round_trip_byte_identical():
    for path in sorted(catalog.catalog_dir().glob("*.json")):
        text = path.read_text()
        entry = catalog.load_entry(path.stem)
        obj = entry.parse()
        payload = jsonio.PARSERS[entry.kind][1](obj)
        doc = {**entry.to_json(), "payload": payload}
        assert jsonio.dumps(doc) == text, path.name


def test_catalog_has_no_floats():
    for path in catalog.catalog_dir().glob("*.json"):
        jsonio.loads(path.read_text())  # parse_float raises on any float literal


def test_every_expected_value_matches(capsys):
    command = {"fan": "toric", "sequence": "modelseq", "curve_blowup_params": "modelseq", "okounkov_body": "okounkov"}
    checked = 0
    for entry in catalog.entries():
        if not entry.expected:
            continue
        code, out = run(capsys, command[entry.kind], "--catalog", entry.id)
        assert code == 0
        assert len(out["checks"]) == len(entry.expected)
        for c in out["checks"]:
            assert c["match"], (entry.id, c)
            checked += 1
    assert checked > 40


def test_toric_bl1(capsys):
    code, out = run(capsys, "toric", "--catalog", "bl1-p2")
    assert code == 0
    assert out["verdict"] == "NotSemistable"
    assert out["witness_ray"] == [1, 1]
    assert out["per_ray"][out["witness"]]["eta"] == "-4/3"


def test_toric_p1xp1(capsys):
    _, out = run(capsys, "toric", "--catalog", "p1xp1")
    assert out["verdict"] == "SemistableNotStable"
    assert out["barycenter"] == ["0", "0"]
    assert out["witness"] is None


def test_toric_slice_volume(capsys, tmp_path):
    fan = tmp_path / "fan.json"
    fan.write_text(jsonio.dumps({"name": "P2", "dim": 2, "rays": [[1, 0], [0, 1], [-1, -1]]}))
    _, out = run(capsys, "toric", str(fan), "--ray", "2", "--at", "1/2")
    # (3 - x)^2 at x = 1/2
    assert out["selected"]["volume_at"] == "25/4"


def test_modelseq_curve_cases(capsys):
    _, out = run(capsys, "modelseq", "--catalog", "mm2-15")
    assert out["eta_over_3"] == "7/6"
    assert out["closed_form_agrees"] and out["engines_agree"]
    _, out = run(capsys, "modelseq", "--catalog", "mm2-26-v5")
    assert out["eta_over_3"] == "0"
    assert out["verdict"] == "SemistableNotStable"


def test_modelseq_sequence_report(capsys):
    _, out = run(capsys, "modelseq", "--catalog", "bl2-p2-E0", "--r", "1", "--kn", "7")
    assert out["eta_intersection"] == out["eta_volume"] == "-4/3"
    assert out["xi"] == "4/3"
    assert out["tau"] == "3"
    assert out["df"] == "-7/6"
    assert out["verdict"] == "NotSemistable"


def test_modelseq_bad_sequence(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(jsonio.dumps({"n": 2, "segments": [
        {"tau_lo": "0", "tau_hi": "1", "m": ["7", "1", "-1"]},
        {"tau_lo": "1", "tau_hi": "3", "m": ["10", "3", "1"]},
    ]}))
    code, out = run(capsys, "modelseq", str(bad))
    assert code == 2
    assert out["error"] == "InvalidSequence"
    assert any("V discontinuous at x=1" in i for i in out["issues"])


def test_okounkov(capsys, tmp_path):
    _, out = run(capsys, "okounkov", "--catalog", "w6-flag")
    assert out["b1"] == "5/6"
    assert out["obstruction"] == "ConsistentWithKStable"
    _, out = run(capsys, "okounkov", "--catalog", "shifted-cube")
    assert out["obstruction"] == "ObstructsKSemistability"
    body = tmp_path / "body.json"
    body.write_text((catalog.catalog_dir() / "w6-flag.json").read_text())
    _, out = run(capsys, "okounkov", str(body), "--moment", "0,1,0")
    # volume 8 times second barycenter coordinate 7/6
    assert out["moment"]["value"] == "28/3"


@pytest.mark.parametrize("entry,ray", [("p2", 0), ("bl1-p2", 3), ("bl2-p2", 0)])
def test_weights_agree(capsys, entry, ray):
    code, out = run(capsys, "weights", "--catalog", entry, "--ray", str(ray), "--r", "1")
    assert code == 0
    assert out["comparison"] == "AGREE"
    assert out["eta"] == out["toric_eta"]
    assert out["df_from_weights"] == out["df_from_eta"]


def test_exit_codes(capsys, tmp_path):
    nf = tmp_path / "nf.json"
    nf.write_text('{"dim": 2, "rays": [[1, 0], [0, 1]]}')
    assert run(capsys, "toric", str(nf))[0] == 3
    junk = tmp_path / "junk.json"
    junk.write_text("{not json")
    assert run(capsys, "toric", str(junk))[0] == 2
    fl = tmp_path / "float.json"
    fl.write_text('{"dim": 2, "rays": [[1, 0], [0, 1], [-1, -1.0]]}')
    assert run(capsys, "toric", str(fl))[0] == 2
    unb = tmp_path / "unb.json"
    unb.write_text('{"dim": 2, "halfspaces": [{"normal": ["1", "0"], "offset": "0"}]}')
    assert run(capsys, "okounkov", str(unb))[0] == 2
    assert run(capsys, "toric", "--catalog", "no-such-entry")[0] == 2
    assert run(capsys, "modelseq", "--catalog", "p2")[0] == 2


def test_fit_mismatch_exit_code(capsys, monkeypatch):
    from divstab.weights import WeightSeries

    def never_fits(X, ray, r=1, ks=None, kmax=None):
        ks = tuple(ks) if ks is not None else (1, 2, 3, 4, 5)
        return WeightSeries(2, r, 3, ks, (), (), (), None, None)

    monkeypatch.setattr(cli, "weight_series", never_fits)
    code, out = run(capsys, "weights", "--catalog", "p2")
    assert code == 4
    assert out["error"] == "FitMismatch"
    assert out["suggested_k0"] == 4


def test_catalog_dir_override(capsys, tmp_path, monkeypatch):
    src = catalog.catalog_dir() / "p2.json"
    (tmp_path / "mine.json").write_text(src.read_text().replace('"id": "p2"', '"id": "mine"'))
    monkeypatch.setenv("DIVSTAB_CATALOG_DIR", str(tmp_path))
    assert catalog.entry_ids() == ["mine"]
    _, out = run(capsys, "toric", "--catalog", "mine")
    assert out["name"] == "P2"


def test_human_rendering():
    report = cli.cmd_toric(cli.build_parser().parse_args(["toric", "--catalog", "bl1-p2"]))
    text = "\n".join(cli._render(report))
    assert "verdict: NotSemistable" in text
    assert "." not in text.split("barycenter:")[1].splitlines()[0]


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "divstab", "toric", "--catalog", "p2", "--json"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["verdict"] == "SemistableNotStable"
