import io
import json
import math

import pytest

from zetaline.cli import cache_directory, run
from zetaline.uniqueness import LOG4_OVER_PI
from zetaline.zeros import load_zeros


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("ZETA_CACHE_DIR", str(tmp_path / "cache"))
    return tmp_path


def invoke(argv):
    buf = io.StringIO()
    code = run(argv, out=buf)
    return code, buf.getvalue()


def test_eval_zeta_plain():
    code, out = invoke(["eval", "--fn", "zeta", "--s", "2,0"])
    assert code == 0
    assert out.startswith("1.6449340668")


def test_eval_gamma_json():
    code, out = invoke(["eval", "--fn", "gamma", "--s", "0.5,0", "--format", "json"])
    assert code == 0
    (rec,) = json.loads(out)
    assert rec["value_re"] == pytest.approx(math.sqrt(math.pi), rel=1e-13)


def test_eval_eta_uses_cache(tmp_path):
    code, out = invoke(["eval", "--fn", "eta", "--s", "2,0", "--nzeros", "50"])
    assert code == 0
    cache = cache_directory() / "zeta-zeros-n50.txt"
    assert cache.exists()
    # second run hits the cache and reproduces the value
    code2, out2 = invoke(["eval", "--fn", "eta", "--s", "2,0", "--nzeros", "50"])
    assert out2 == out


def test_zeros_roundtrip(tmp_path):
    target = tmp_path / "zeros.txt"
    code, out = invoke(["zeros", "--tmax", "30", "--out", str(target)])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "index,t"
    assert len(lines) == 4
    loaded = load_zeros(target)
    assert len(loaded.ordinates) == 3


def test_zeros_validation_failure():
    code, _ = invoke(["zeros", "--tmax", "5"])
    assert code == 2


def test_usage_error_exit_code():
    code, _ = invoke(["nonsense"])
    assert code == 3
    code, _ = invoke(["zeros"])  # missing required --tmax
    assert code == 3


def test_eta_scan_schema_and_figure(tmp_path):
    fig = tmp_path / "scan.png"
    code, out = invoke(
        [
            "eta-scan",
            "--sigma-from", "2",
            "--sigma-to", "4",
            "--step", "1",
            "--nzeros", "50",
            "--figure", str(fig),
        ]
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "sigma,re,im,tail_bound,n_terms"
    assert len(lines) == 4
    assert fig.exists() and fig.stat().st_size > 0


def test_fe_check_eta_passes():
    code, out = invoke(
        ["fe-check", "--case", "eta", "--samples", "20", "--seed", "7",
         "--nzeros", "60", "--format", "json"]
    )
    assert code == 0
    records = json.loads(out)
    assert len(records) == 20
    assert all(r["ok"] for r in records)
    assert max(r["residual"] for r in records) < 1e-9


@pytest.mark.parametrize("case", ["zeta", "xi", "counterexample"])
def test_fe_check_cases(case):
    code, out = invoke(
        ["fe-check", "--case", case, "--samples", "8", "--seed", "3",
         "--format", "json"]
    )
    assert code == 0
    assert all(r["ok"] for r in json.loads(out))


def test_fe_check_figure(tmp_path):
    fig = tmp_path / "residuals.png"
    code, _ = invoke(["fe-check", "--case", "zeta", "--samples", "5",
                      "--seed", "2", "--figure", str(fig)])
    assert code == 0
    assert fig.exists() and fig.stat().st_size > 0


def test_fe_check_dedekind():
    code, out = invoke(
        ["fe-check", "--case", "dedekind", "--samples", "6", "--seed", "11",
         "--tmax", "40", "--format", "json"]
    )
    assert code == 0
    records = json.loads(out)
    assert {r["case"] for r in records} == {
        "dedekind:eta_kappa:D=-4",
        "dedekind:xi_kappa:D=-4",
    }
    assert all(r["ok"] for r in records)


def test_fe_check_determinism():
    argv = ["fe-check", "--case", "zeta", "--samples", "10", "--seed", "3",
            "--format", "json"]
    _, first = invoke(argv)
    _, second = invoke(argv)
    assert first == second


def test_uniqueness_sharpness_report(tmp_path):
    report = tmp_path / "report.json"
    code, out = invoke(
        ["uniqueness", "--case", "sharpness", "--report", str(report)]
    )
    assert code == 0
    records = json.loads(report.read_text())
    assert all(r["verdict"] == "ok" for r in records)
    by_sample = {r["sample"]: r for r in records}
    witness = by_sample["witness:|f1-L|(2)"]
    assert witness["lhs"] == pytest.approx(0.5625, abs=1e-12)
    for r in (100, 200, 400):
        rec = by_sample[f"density@r={r}"]
        assert rec["lhs"] == pytest.approx(LOG4_OVER_PI, rel=0.02)


@pytest.mark.parametrize("case", ["order2", "limit0"])
def test_uniqueness_other_cases(case, tmp_path):
    fig = tmp_path / "fig.png"
    code, out = invoke(["uniqueness", "--case", case, "--figure", str(fig)])
    assert code == 0
    assert fig.exists()


def test_dedekind_residue():
    code, out = invoke(["dedekind", "--disc", "-4", "--action", "residue",
                        "--format", "json"])
    assert code == 0
    (rec,) = json.loads(out)
    assert rec["formula"] == pytest.approx(math.pi / 4.0, rel=1e-12)
    assert rec["rel_err"] < 1e-4


def test_dedekind_zeros():
    code, out = invoke(["dedekind", "--disc", "-4", "--action", "zeros",
                        "--tmax", "15", "--format", "json"])
    assert code == 0
    records = json.loads(out)
    assert len(records) == 4
    assert records[0]["t"] == pytest.approx(6.0209489, abs=1e-5)
    # the merged list went to a tagged cache file; the rerun reloads it
    cache = cache_directory() / "dedekind-D-4-t15.txt"
    assert cache.exists()
    assert "tag=dedekind D=-4" in cache.read_text().splitlines()[0]
    code2, out2 = invoke(["dedekind", "--disc", "-4", "--action", "zeros",
                          "--tmax", "15", "--format", "json"])
    assert out2 == out


def test_dedekind_coeffs():
    code, out = invoke(["dedekind", "--disc", "-4", "--action", "coeffs",
                        "--limit", "10"])
    assert code == 0
    rows = out.strip().splitlines()
    assert rows[0] == "n,a"
    values = [int(r.split(",")[1]) for r in rows[1:]]
    assert values == [1, 1, 0, 1, 2, 0, 0, 1, 1, 2]


def test_dedekind_field_table_override(tmp_path):
    table = tmp_path / "fields.json"
    table.write_text(json.dumps([
        {"discriminant": -7, "r1": 0, "r2": 1, "class_number": 1,
         "regulator": 1.0, "roots_of_unity": 2},
    ]))
    code, out = invoke(["dedekind", "--disc", "-7", "--action", "residue",
                        "--field-table", str(table), "--format", "json"])
    assert code == 0
    (rec,) = json.loads(out)
    # pi / sqrt(7)
    assert rec["formula"] == pytest.approx(math.pi / math.sqrt(7.0), rel=1e-12)
    assert rec["rel_err"] < 1e-4


def test_density_counterexample():
    code, out = invoke(["density", "--set", "counterexample", "--rmax", "200",
                        "--format", "json"])
    assert code == 0
    records = json.loads(out)
    assert records[-1]["slope"] == pytest.approx(LOG4_OVER_PI, rel=0.02)


def test_density_zeta_set(tmp_path):
    fig = tmp_path / "density.png"
    code, out = invoke(["density", "--set", "zeta", "--rmax", "60",
                        "--figure", str(fig), "--format", "json"])
    assert code == 0
    records = json.loads(out)
    assert records[-1]["count"] >= 1
    assert fig.exists()


def test_json_csv_consistency():
    _, csv_out = invoke(["dedekind", "--disc", "-4", "--action", "coeffs",
                         "--limit", "4"])
    _, json_out = invoke(["dedekind", "--disc", "-4", "--action", "coeffs",
                          "--limit", "4", "--format", "json"])
    csv_rows = [r.split(",") for r in csv_out.strip().splitlines()[1:]]
    json_rows = json.loads(json_out)
    for (n_txt, a_txt), rec in zip(csv_rows, json_rows):
        assert int(n_txt) == rec["n"]
        assert int(a_txt) == rec["a"]
