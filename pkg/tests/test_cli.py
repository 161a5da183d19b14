import json
from pathlib import Path

import pytest

from rootix import cli
from rootix.graphs import format_edge_list, path_graph

DATA = Path(__file__).parent / "data"
PHENANTHRENE = DATA / "phenanthrene.edges"


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCompute:
    def test_fixture_pretty_report(self, capsys):
        code, out, _ = run(capsys, "compute", "--input", str(PHENANTHRENE))
        assert code == 0
        assert "x^7 + 4x^6 + 10x^5 + 16x^4 + 22x^3 + 22x^2 + 16x" in out
        assert "0.05765" in out
        assert "0.01292" in out
        assert "271" in out and "1342" in out

    def test_fixture_json_report(self, capsys, tmp_path):
        out_path = tmp_path / "report.json"
        code, _, _ = run(capsys, "compute", "--input", str(PHENANTHRENE),
                         "--format", "json", "--out", str(out_path))
        assert code == 0
        payload = json.loads(out_path.read_text())
        assert payload["polynomials"]["gutman"]["coefficients"] == [91, 126, 117, 76, 44, 16, 4]
        assert payload["roots"]["delta-Sc"]["lower_bound"] == 1 / 107
        assert payload["roots"]["delta-H"]["bracket_width"] <= 1e-13
        assert payload["classic"]["We"] == 337

    def test_single_edge_graph_flags_exact_root(self, capsys, tmp_path):
        path = tmp_path / "p2.edges"
        path.write_text(format_edge_list(path_graph(2)))
        code, out, _ = run(capsys, "compute", "--input", str(path))
        assert code == 0
        assert "(exact)" in out
        assert "undefined" in out  # no edge pairs on a single edge

    def test_graph6_input(self, capsys, tmp_path):
        path = tmp_path / "one.g6"
        path.write_text("D?{\n")
        code, out, _ = run(capsys, "compute", "--input", str(path))
        assert code == 0

    def test_four_leaf_star(self, capsys, tmp_path):
        from rootix.graphs import star_graph

        path = tmp_path / "s4.edges"
        path.write_text(format_edge_list(star_graph(4)))
        code, out, _ = run(capsys, "compute", "--input", str(path))
        assert code == 0
        lines = {ln.split()[0]: ln for ln in out.splitlines() if ln}
        assert lines["edge-hosoya"].endswith("6x")  # all edge pairs meet at the hub
        assert "0.16667" in lines["delta-He"]  # root of 6x = 1

    def test_missing_file_is_input_error(self, capsys):
        code, _, err = run(capsys, "compute", "--input", "/no/such/file")
        assert code == 1
        assert "error" in err

    def test_disconnected_input_is_input_error(self, capsys, tmp_path):
        path = tmp_path / "disc.edges"
        path.write_text("4 1\n0 1\n")
        code, _, err = run(capsys, "compute", "--input", str(path))
        assert code == 1
        assert "connected" in err

    def test_multi_record_graph6_rejected(self, capsys, tmp_path):
        path = tmp_path / "two.g6"
        path.write_text("A_\nA_\n")
        code, _, err = run(capsys, "compute", "--input", str(path))
        assert code == 1
        assert "exactly one" in err


class TestDiscriminate:
    def test_t8_pretty(self, capsys):
        code, out, _ = run(capsys, "discriminate", "--family", "trees", "--n", "8")
        assert code == 0
        lines = [ln for ln in out.splitlines() if ln.startswith("T_8")]
        assert len(lines) == 8
        for ln in lines:
            if ln.split()[1].startswith("delta-"):
                assert " 0 " in ln and "1.0000" in ln

    def test_csv_is_rounded_view_of_json(self, capsys, tmp_path):
        csv_path = tmp_path / "r.csv"
        json_path = tmp_path / "r.json"
        run(capsys, "discriminate", "--family", "trees", "--n", "9",
            "--index", "W", "--format", "csv", "--out", str(csv_path))
        run(capsys, "discriminate", "--family", "trees", "--n", "9",
            "--index", "W", "--format", "json", "--out", str(json_path))
        header, row = csv_path.read_text().splitlines()
        assert header == "family,index,N,ND,Dis"
        payload = json.loads(json_path.read_text())[0]
        assert row == f"T_9,W,47,39,{payload['Dis']:.4f}"
        assert payload["ND"] == 39

    def test_worker_count_never_changes_output(self, capsys, tmp_path):
        out1 = tmp_path / "w1.json"
        out2 = tmp_path / "w2.json"
        run(capsys, "discriminate", "--family", "trees", "--n", "10",
            "--format", "json", "--workers", "1", "--out", str(out1))
        run(capsys, "discriminate", "--family", "trees", "--n", "10",
            "--format", "json", "--workers", "2", "--out", str(out2))
        assert out1.read_bytes() == out2.read_bytes()

    def test_eps_override_is_plumbed_through(self, capsys, tmp_path):
        loose = tmp_path / "loose.json"
        tight = tmp_path / "tight.json"
        run(capsys, "discriminate", "--family", "trees", "--n", "12",
            "--index", "delta-Sc", "--format", "json",
            "--eps-eq", "1e-8", "--out", str(loose))
        run(capsys, "discriminate", "--family", "trees", "--n", "12",
            "--index", "delta-Sc", "--format", "json", "--out", str(tight))
        assert json.loads(loose.read_text())[0]["ND"] > json.loads(tight.read_text())[0]["ND"]

    def test_family_and_input_conflict(self, capsys):
        code, _, err = run(capsys, "discriminate", "--family", "trees", "--n", "8",
                           "--input", "x.g6")
        assert code == 1
        assert "mutually exclusive" in err

    def test_missing_family_args(self, capsys):
        code, _, err = run(capsys, "discriminate")
        assert code == 1


class TestCorrelate:
    def test_matrix_shape_and_diagonal(self, capsys, tmp_path):
        out_path = tmp_path / "corr.json"
        run(capsys, "correlate", "--family", "trees", "--n", "9",
            "--index", "delta-H", "--index", "W", "--format", "json",
            "--out", str(out_path))
        payload = json.loads(out_path.read_text())
        assert payload["indices"] == ["delta-H", "W"]
        mat = payload["matrix"]
        assert mat[0][0] == 1.0 and mat[1][1] == 1.0
        assert mat[0][1] == mat[1][0]

    def test_pretty_runs(self, capsys):
        code, out, _ = run(capsys, "correlate", "--family", "conn", "--n", "5")
        assert code == 0
        assert "delta-H" in out


class TestSensitivity:
    def test_single_graph_mode(self, capsys, tmp_path):
        path = tmp_path / "p3.edges"
        path.write_text(format_edge_list(path_graph(3)))
        code, out, _ = run(capsys, "sensitivity", "--input", str(path),
                           "--index", "delta-H")
        assert code == 0
        row = out.splitlines()[-1].split()
        ss1, abr1 = float(row[3]), float(row[4])
        assert ss1 == abr1  # singleton neighbourhood

    def test_family_csv(self, capsys, tmp_path):
        out_path = tmp_path / "sens.csv"
        run(capsys, "sensitivity", "--family", "trees", "--n", "9",
            "--index", "delta-H", "--format", "csv", "--out", str(out_path))
        header, row = out_path.read_text().splitlines()
        assert header == "family,index,N,SS1,Abr1,SA1,SS2,Abr2,SA2"
        cells = row.split(",")
        assert cells[:3] == ["T_9", "delta-H", "47"]
        assert cells[3] == "0.0977" and cells[4] == "0.1161" and cells[5] == "0.8417"


class TestEnumerate:
    def test_count_trees(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--family", "trees", "--n", "10", "--count")
        assert code == 0 and out.strip() == "106"

    def test_count_connected(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--family", "conn", "--n", "5", "--count")
        assert code == 0 and out.strip() == "21"

    def test_graph6_dump_round_trips(self, capsys, tmp_path):
        out_path = tmp_path / "t7.g6"
        code, _, _ = run(capsys, "enumerate", "--family", "trees", "--n", "7",
                         "--out", str(out_path))
        assert code == 0
        lines = out_path.read_text().splitlines()
        assert len(lines) == 11
        code, out, _ = run(capsys, "enumerate", "--input", str(out_path), "--count")
        assert code == 0 and out.strip() == "11"

    def test_cap_is_input_error(self, capsys):
        code, _, err = run(capsys, "enumerate", "--family", "trees", "--n", "17", "--count")
        assert code == 1
        assert "16" in err


class TestSelftest:
    def test_passes(self, capsys):
        code, out, _ = run(capsys, "selftest")
        assert code == 0
        assert "all suites passed" in out

    def test_fault_injection_fails(self, capsys, monkeypatch):
        from rootix import polynomials

        real = polynomials.closed_form

        def wrong(fam, kind):
            poly = real(fam, kind)
            if fam.family == "cycle" and fam.n == 7 and kind == "hosoya":
                return polynomials.polynomial([c + 1 for c in poly.coefficients])
            return poly

        monkeypatch.setattr(cli, "closed_form", wrong)
        code, out, err = run(capsys, "selftest")
        assert code == 3
        assert "FAILED" in out
        assert "cycle n=7" in err


class TestWorkersEnv:
    def test_env_default(self, monkeypatch):
        from rootix import metrics

        monkeypatch.setenv("ROOTIX_WORKERS", "3")
        assert metrics.default_workers() == 3
        monkeypatch.delenv("ROOTIX_WORKERS")
        assert metrics.default_workers() == 1


class TestExitCodes:
    def test_internal_faults_exit_2(self, capsys, monkeypatch):
        def boom(args):
            raise RuntimeError("invariant violated")

        monkeypatch.setitem(cli._COMMANDS, "selftest", boom)
        code, _, err = run(capsys, "selftest")
        assert code == 2
        assert "internal error" in err

    def test_usage_errors_exit_1(self, capsys):
        with pytest.raises(SystemExit) as info:
            cli.main(["discriminate", "--family", "lattice", "--n", "5"])
        assert info.value.code == 1
