import json
import math
import subprocess
import sys


from linksig.signature import seifert_to_json, torus_seifert

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_UNDEFINED = 2
EXIT_ZERO_LINKING = 3
EXIT_USAGE = 64
EXIT_DATA = 65


def run(*args):
    return subprocess.run(
        [sys.executable, "-m", "linksig", *args], capture_output=True, text=True
    )


def test_h_values():
    r = run("h", "--ell", "3", "--alpha", "1/2", "1/2")
    assert r.returncode == EXIT_OK
    assert r.stdout == "h=2 sigma=(-2,-2)\n"
    r = run("h", "--ell", "1", "--alpha", "1/3", "1/4")
    assert r.returncode == EXIT_OK
    assert r.stdout == "h=0 sigma=(0,0)\n"


def test_h_undefined_and_zero_linking():
    r = run("h", "--ell", "3", "--alpha", "1/6", "1/6")
    assert r.returncode == EXIT_UNDEFINED
    assert "undefined: alpha on Alexander root locus" in r.stderr
    r = run("h", "--ell", "0", "--alpha", "1/3", "1/4")
    assert r.returncode == EXIT_ZERO_LINKING


def test_usage_errors():
    assert run("h", "--ell", "3").returncode == EXIT_USAGE
    assert run("nonsense").returncode == EXIT_USAGE
    # decimals require --radians; rationals forbid it
    assert run("h", "--ell", "2", "--alpha", "0.5", "0.5").returncode == EXIT_USAGE
    assert (
        run("h", "--ell", "2", "--alpha", "1/2", "1/2", "--radians").returncode
        == EXIT_USAGE
    )
    assert (
        run("curve", "--ell", "2", "--alpha", "1/2", "1/2", "--samples", "0").returncode
        == EXIT_USAGE
    )
    assert run("regions", "--ell", "2", "--res", "1").returncode == EXIT_USAGE


def test_h_radians_flag():
    r = run("h", "--ell", "2", "--alpha", "1.0471975511965976", "0.5", "--radians")
    assert r.returncode == EXIT_OK
    assert r.stdout.startswith("h=")


def test_curve_reference_and_footer():
    r = run("curve", "--ell", "1", "--alpha", "1/2", "1/2", "--samples", "5")
    assert r.returncode == EXIT_OK
    lines = r.stdout.strip().splitlines()
    assert lines[0] == "phi,theta,provenance"
    body = [ln for ln in lines[1:] if not ln.startswith("#")]
    assert len(body) == 10  # both paths, interleaved
    for ln in body:
        phi_s, theta_s, prov = ln.split(",")
        phi, theta = float(phi_s), float(theta_s)
        reduced = math.acos(math.cos(2 * phi))  # 2*phi folded into [0, pi]
        assert abs(theta - reduced) < 1e-9
        assert prov in ("quaternion-path", "chebyshev-path")
    footer = lines[-1]
    assert footer.startswith("# max_abs_dtheta=")
    assert float(footer.split("=", 1)[1]) < 1e-8


def test_curve_single_path_and_undefined(tmp_path):
    out = tmp_path / "curve.csv"
    r = run(
        "curve", "--ell", "-2", "--alpha", "1/3", "1/5",
        "--samples", "9", "--path", "cheb", "--out", str(out),
    )
    assert r.returncode == EXIT_OK
    lines = out.read_text().strip().splitlines()
    assert len(lines) == 10 and lines[0] == "phi,theta,provenance"
    assert all("chebyshev-path" in ln for ln in lines[1:])
    r = run("curve", "--ell", "3", "--alpha", "1/6", "1/6")
    assert r.returncode == EXIT_UNDEFINED


def test_regions_csv():
    r = run("regions", "--ell", "2", "--res", "20", "--format", "csv")
    assert r.returncode == EXIT_OK
    lines = r.stdout.strip().splitlines()
    assert lines[0] == "# ell=2 res=20"
    rows = [list(map(int, ln.split(","))) for ln in lines[1:]]
    assert len(rows) == 19 and all(len(row) == 19 for row in rows)
    assert rows[9][9] == 1
    assert rows[0][0] == 0
    assert rows[4][4] == -999
    r = run("regions", "--ell", "-2", "--res", "20")
    assert "-1" in r.stdout
    assert run("regions", "--ell", "0", "--res", "20").returncode == EXIT_ZERO_LINKING


def test_regions_svg(tmp_path):
    out = tmp_path / "regions.svg"
    r = run("regions", "--ell", "4", "--res", "40", "--format", "svg", "--out", str(out))
    assert r.returncode == EXIT_OK
    text = out.read_text()
    assert text.startswith("<svg")
    assert "<rect" in text and "<line" in text and text.rstrip().endswith("</svg>")


def test_sigma_subcommand(tmp_path):
    path = tmp_path / "system.json"
    path.write_text(json.dumps(seifert_to_json(torus_seifert(2))))
    r = run("sigma", "--system", str(path), "--alpha", "1/2", "1/2")
    assert r.returncode == EXIT_OK
    assert r.stdout == "signature=-1 nullity=0\n"

    # nullity warning on the root line
    path3 = tmp_path / "system3.json"
    path3.write_text(json.dumps(seifert_to_json(torus_seifert(3))))
    r = run("sigma", "--system", str(path3), "--alpha", "1/6", "1/6")
    assert r.returncode == EXIT_OK
    assert "nullity=1" in r.stdout
    assert "root locus" in r.stderr


def test_sigma_data_errors(tmp_path):
    path = tmp_path / "bad.json"
    data = seifert_to_json(torus_seifert(2))
    del data["matrices"]["--"]
    path.write_text(json.dumps(data))
    r = run("sigma", "--system", str(path), "--alpha", "1/2", "1/2")
    assert r.returncode == EXIT_DATA

    data = seifert_to_json(torus_seifert(3))
    data["matrices"]["--"][0][1] = 9
    path.write_text(json.dumps(data))
    r = run("sigma", "--system", str(path), "--alpha", "1/2", "1/2")
    assert r.returncode == EXIT_DATA
    assert "transpose" in r.stderr and "--" in r.stderr

    path.write_text("{broken")
    assert run("sigma", "--system", str(path), "--alpha", "1/2", "1/2").returncode == EXIT_DATA
    r = run("sigma", "--system", str(tmp_path / "missing.json"), "--alpha", "1/2", "1/2")
    assert r.returncode == EXIT_DATA


def test_verify_subcommand(tmp_path):
    r = run("verify", "--ell", "3", "--res", "7")
    assert r.returncode == EXIT_OK
    payload = json.loads(r.stdout)
    assert payload["failed_total"] == 0
    assert payload["reports"][0]["ell"] == 3
    assert set(payload["reports"][0]) == {
        "ell", "resolution", "checked", "failed", "skipped_on_roots",
    }

    r = run("verify", "--ell", "-2..2", "--res", "12")
    assert r.returncode == EXIT_OK
    payload = json.loads(r.stdout)
    assert [rep["ell"] for rep in payload["reports"]] == [-2, -1, 1, 2]

    assert run("verify", "--ell", "0..0", "--res", "7").returncode == EXIT_ZERO_LINKING
    assert run("verify", "--ell", "5..3", "--res", "7").returncode == EXIT_USAGE

    out = tmp_path / "report.json"
    r = run("verify", "--ell", "2", "--res", "10", "--verbose", "--out", str(out))
    assert r.returncode == EXIT_OK
    payload = json.loads(out.read_text())
    assert payload["reports"][0]["points"][0]["pass"] is True


def test_outputs_are_byte_deterministic():
    for args in (
        ("curve", "--ell", "2", "--alpha", "2/7", "3/8", "--samples", "50"),
        ("regions", "--ell", "3", "--res", "30"),
        ("verify", "--ell", "2..3", "--res", "13"),
        ("h", "--ell", "-4", "--alpha", "1/2", "1/3"),
    ):
        first = run(*args)
        second = run(*args)
        assert first.stdout == second.stdout
        assert first.returncode == second.returncode
