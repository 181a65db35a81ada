import json

from weylpath import Parabolic, build, catalog_certificate, dump_certificate
from weylpath.cli import main
from weylpath.vanishing import Certificate


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_list_minuscule_markdown(capsys):
    code, out, _ = run(capsys, "list-minuscule", "--family", "D", "--rank", "7")
    assert code == 0
    assert "1, 6, 7" in out


def test_list_minuscule_json_empty(capsys):
    code, out, _ = run(capsys, "list-minuscule", "--family", "G", "--rank", "2",
                       "--format", "json")
    assert code == 0
    assert json.loads(out)["minuscule"] == []


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--family", "E", "--rank", "6",
                       "--parabolic", "1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["sum_m"] == data["dim_gp"] == 16
    assert [r["m_dijkstra"] for r in data["rows"]] == [2, 2, 3, 4, 3, 2]


def test_verify_formats_agree(capsys):
    code, js, _ = run(capsys, "verify", "--family", "D", "--rank", "5",
                      "--parabolic", "5", "--format", "json")
    assert code == 0
    code, md, _ = run(capsys, "verify", "--family", "D", "--rank", "5",
                      "--parabolic", "5", "--format", "markdown")
    assert code == 0
    data = json.loads(js)
    for row in data["rows"]:
        assert f"| {row['d']} | {row['m_dijkstra']} |" in md


def test_verify_expect_minuscule_failure(capsys):
    code, _, err = run(capsys, "verify", "--family", "C", "--rank", "3",
                       "--parabolic", "1", "--expect-minuscule")
    assert code == 1
    assert "expectation failed" in err


def test_verify_expect_minuscule_success(capsys):
    code, _, _ = run(capsys, "verify", "--family", "D", "--rank", "5",
                     "--parabolic", "5", "--expect-minuscule")
    assert code == 0


def test_verify_relaxed_and_witnesses(capsys):
    code, out, _ = run(capsys, "verify", "--family", "A", "--rank", "3",
                       "--parabolic", "2", "--relaxed-edges", "--witnesses",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["witnesses"] is not None
    assert all(r["m_dijkstra_relaxed"] is not None for r in data["rows"])


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify-all", "--max-rank", "5", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["ok"] is True


def test_verify_all_markdown(capsys):
    code, out, _ = run(capsys, "verify-all", "--max-rank", "4")
    assert code == 0
    assert "overall: ok" in out


def test_tau_action_table(capsys):
    code, out, _ = run(capsys, "tau", "--family", "E", "--rank", "7", "--parabolic", "7")
    assert code == 0
    assert "tau(alpha_7) = (2, 2, 3, 4, 3, 2, 1)" in out


def test_check_cert_good(tmp_path, capsys):
    cert = catalog_certificate(build("E7"), Parabolic.maximal(7, 7), 7)
    path = tmp_path / "good.json"
    dump_certificate(cert, path)
    code, out, _ = run(capsys, "check-cert", str(path), "--format", "json")
    assert code == 0
    assert json.loads(out)["valid"] is True


def test_check_cert_bad(tmp_path, capsys):
    rs = build("D5")
    bad = Certificate(rst=rs.rst, omitted=1, d=2,
                      entries=((rs.simple_root(3), 1), (rs.simple_root(1), 1)))
    path = tmp_path / "bad.json"
    dump_certificate(bad, path)
    code, out, _ = run(capsys, "check-cert", str(path))
    assert code == 1
    assert "FAIL" in out


def test_bad_configuration_is_usage_error(capsys):
    code, _, err = run(capsys, "verify", "--family", "E", "--rank", "9",
                       "--parabolic", "1")
    assert code == 2
    assert "error:" in err


def test_missing_file_is_error(capsys):
    code, _, err = run(capsys, "check-cert", "/nonexistent/cert.json")
    assert code == 2
    assert "error:" in err
