"""CLI surface: subcommands, exit codes, CSV bytes, JSON, figure files."""

import json
import math
import os

import pytest

from entiregamma import cli, core, entire, grids


def run_cli(args, capsys):
    code = cli.main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEval:
    def test_k_at_zero_17_digits(self, capsys):
        code, out, _ = run_cli(["eval", "--fn", "k", "--z", "0"], capsys)
        assert code == 0
        assert out.strip() == "%.17g" % entire.k(0.0)
        assert float(out) == entire.k(0.0)  # bit-for-bit round trip
        assert abs(float(out) + 0.5772156649015329) < 1e-12

    def test_gamma_pole_exits_2(self, capsys):
        code, _, err = run_cli(["eval", "--fn", "gamma", "--z", "-3"], capsys)
        assert code == 2
        assert "pole" in err
        assert "-3" in err

    def test_k_at_pole_matches_limit(self, capsys):
        code, out, _ = run_cli(["eval", "--fn", "k", "--z", "-3"], capsys)
        assert code == 0
        from entiregamma import oracle
        assert abs(float(out) - oracle.oracle_limit_at_pole("k", 3)) <= 1e-9

    def test_json_fields_and_paths(self, capsys):
        code, out, _ = run_cli(["eval", "--fn", "k", "--z", "-3", "--format", "json"], capsys)
        assert code == 0
        payload = json.loads(out)
        assert payload["function"] == "k"
        assert payload["z"] == -3.0
        assert payload["value"] == entire.k(-3.0)
        assert payload["path"] == "limit"

        _, out, _ = run_cli(["eval", "--fn", "k", "--z", "-2.95", "--format", "json"], capsys)
        assert json.loads(out)["path"] == "nearpole"
        _, out, _ = run_cli(["eval", "--fn", "k", "--z", "1.5", "--format", "json"], capsys)
        assert json.loads(out)["path"] == "direct"
        _, out, _ = run_cli(["eval", "--fn", "gamma", "--z", "1.5", "--format", "json"], capsys)
        assert json.loads(out)["path"] == "direct"

    def test_every_function_id(self, capsys):
        for fid in ("gamma", "loggamma", "digamma", "trigamma", "q",
                    "hadamard", "k", "kprime", "extra"):
            code, out, _ = run_cli(["eval", "--fn", fid, "--z", "1.25"], capsys)
            assert code == 0, fid
            float(out)  # parses

    def test_family_with_coefficients(self, capsys):
        code, out, _ = run_cli(["eval", "--fn", "family", "--z", "3", "--g", "0,0,1"], capsys)
        assert code == 0
        assert float(out) == 2.0
        code, out2, _ = run_cli(["eval", "--fn", "family(0,0,1)", "--z", "3"], capsys)
        assert code == 0
        assert out2 == out

    def test_unknown_function_exits_2(self, capsys):
        code, _, err = run_cli(["eval", "--fn", "zeta", "--z", "1"], capsys)
        assert code == 2
        assert "unknown function" in err

    def test_usage_error_exits_64(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["eval", "--fn", "k", "--z", "not-a-number"])
        assert exc.value.code == 64
        capsys.readouterr()


class TestGrid:
    def test_stated_values(self, tmp_path, capsys):
        out = tmp_path / "g.csv"
        code, _, _ = run_cli(["grid", "--fn", "k", "--from", "0", "--to", "1",
                              "--points", "3", "--out", str(out)], capsys)
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "z,k"
        zs = [float(line.split(",")[0]) for line in lines[1:]]
        assert zs == [0.0, 0.5, 1.0]
        vals = [float(line.split(",")[1]) for line in lines[1:]]
        assert abs(vals[0] + 0.5772156649015329) < 1e-12
        assert abs(vals[1] - 1.7724538509055160) < 1e-12
        assert vals[2] == 1.0

    def test_pole_cells_are_nan_literals(self, tmp_path, capsys):
        out = tmp_path / "g.csv"
        code, _, _ = run_cli(["grid", "--fn", "gamma", "--from", "-1", "--to", "0",
                              "--points", "2", "--out", str(out)], capsys)
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[1] == "-1,nan"
        assert lines[2] == "0,nan"

    def test_row_at_one_reads_ones(self, tmp_path, capsys):
        out = tmp_path / "g.csv"
        code, _, _ = run_cli(["grid", "--fn", "k,gamma,hadamard", "--from", "-4.2",
                              "--to", "4.2", "--points", "841", "--out", str(out)], capsys)
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "z,k,gamma,hadamard"
        assert len(lines) == 842
        row = [line for line in lines[1:] if line.startswith("1,")]
        assert row == ["1,1,1,1"]

    def test_byte_deterministic(self, tmp_path, capsys):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        for path in (a, b):
            run_cli(["grid", "--fn", "k,hadamard", "--from", "-3.3", "--to", "2.1",
                     "--points", "257", "--out", str(path)], capsys)
        assert a.read_bytes() == b.read_bytes()

    def test_lf_line_endings_no_trailing_delimiter(self, tmp_path, capsys):
        out = tmp_path / "g.csv"
        run_cli(["grid", "--fn", "k", "--from", "0", "--to", "1",
                 "--points", "3", "--out", str(out)], capsys)
        blob = out.read_bytes()
        assert b"\r" not in blob
        assert blob.endswith(b"\n")
        assert b",\n" not in blob

    def test_values_match_library_bit_for_bit(self, tmp_path, capsys):
        out = tmp_path / "g.csv"
        run_cli(["grid", "--fn", "k,q,kprime", "--from", "-2.05", "--to", "1.9",
                 "--points", "101", "--out", str(out)], capsys)
        for line in out.read_text().splitlines()[1:]:
            cells = line.split(",")
            z = float(cells[0])
            assert float(cells[1]) == entire.k(z)
            assert float(cells[2]) == entire.q_factor(z)
            assert float(cells[3]) == entire.k_prime(z)

    def test_unwritable_path_exits_73(self, tmp_path, capsys):
        dest = tmp_path / "missing" / "g.csv"
        code, _, err = run_cli(["grid", "--fn", "k", "--from", "0", "--to", "1",
                                "--points", "3", "--out", str(dest)], capsys)
        assert code == 73
        assert "cannot write" in err

    def test_bad_spec_exits_64(self, capsys):
        code, _, _ = run_cli(["grid", "--fn", "k", "--from", "1", "--to", "0",
                              "--points", "3", "--out", "x.csv"], capsys)
        assert code == 64
        code, _, _ = run_cli(["grid", "--fn", "nope", "--from", "0", "--to", "1",
                              "--points", "3", "--out", "x.csv"], capsys)
        assert code == 64


class TestZeros:
    def test_first_zero_report(self, capsys):
        code, out, _ = run_cli(["zeros", "--fn", "k", "--from", "0.05", "--to", "0.10",
                                "--step", "0.001"], capsys)
        assert code == 0
        assert "1 zero(s)" in out
        root = float(out.splitlines()[1].split()[2])
        assert abs(root - 0.06958) < 5e-5

    def test_no_zeros_exit_zero(self, capsys):
        code, out, _ = run_cli(["zeros", "--fn", "k", "--from", "1", "--to", "100",
                                "--step", "0.01"], capsys)
        assert code == 0
        assert "no zeros found" in out

    def test_normalized_flag(self, capsys):
        code, out, _ = run_cli(["zeros", "--fn", "k", "--normalized", "--from", "535",
                                "--to", "538", "--step", "0.005"], capsys)
        assert code == 0
        assert "normalized_k" in out
        lines = out.splitlines()
        assert len(lines) - 1 >= 2
        first = float(lines[1].split()[2])
        assert 530.0 <= first <= 540.0

    def test_invalid_range_exits_64(self, capsys):
        code, _, _ = run_cli(["zeros", "--fn", "k", "--from", "2", "--to", "1",
                              "--step", "0.001"], capsys)
        assert code == 64


class TestVerifyCommand:
    def test_exit_codes_follow_results(self, capsys, monkeypatch):
        from entiregamma import verify

        def fake_pass(fast):
            return verify.SuiteResult("fake.pass", True, 0.0, 1.0)

        def fake_fail(fast):
            return verify.SuiteResult("fake.fail", False, 2.0, 1.0)

        monkeypatch.setattr(verify, "SUITES", [fake_pass])
        code, out, _ = run_cli(["verify", "--tier", "fast"], capsys)
        assert code == 0
        assert "fake.pass" in out and "PASS" in out

        monkeypatch.setattr(verify, "SUITES", [fake_pass, fake_fail])
        code, out, _ = run_cli(["verify", "--tier", "fast"], capsys)
        assert code == 1
        assert "FAIL" in out


class TestFigure:
    def test_left_panel(self, tmp_path, capsys):
        out = tmp_path / "left.csv"
        code, _, _ = run_cli(["figure", "--panel", "left", "--out", str(out)], capsys)
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "z,gamma,hadamard,k"
        assert len(lines) == 1682
        assert (tmp_path / "left.png").exists()

        by_z = {line.split(",")[0]: line.split(",") for line in lines[1:]}
        half = by_z["0.5"]
        assert float(half[1]) == core.gamma(0.5)
        assert float(half[2]) == entire.hadamard(0.5)
        assert float(half[3]) == entire.k(0.5)
        assert abs(float(half[2]) - 0.8862269254527580) < 1e-12

        minus2 = by_z["-2"]
        assert minus2[1] == "nan"
        assert float(minus2[3]) == entire.k(-2.0)
        assert abs(float(minus2[3]) - 0.4613921675492336) < 1e-12

    def test_right_panel(self, tmp_path, capsys):
        out = tmp_path / "right.csv"
        code, _, _ = run_cli(["figure", "--panel", "right", "--out", str(out),
                              "--no-render"], capsys)
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "z,gamma,k"
        assert len(lines) == 802
        assert not (tmp_path / "right.png").exists()

        rows = [line.split(",") for line in lines[1:]]
        by_z = {cells[0]: cells for cells in rows}
        row = by_z["-1.5"]
        assert float(row[1]) == core.gamma(-1.5)
        assert float(row[2]) == entire.k(-1.5)
        assert float(row[1]) == float(row[2])  # K = gamma at the shared extremum

        # central difference of the k column vanishes at the extremum up to
        # the h^2 truncation of the stencil itself (h = 1e-3)
        idx = [i for i, cells in enumerate(rows) if cells[0] == "-1.5"][0]
        h = float(rows[idx + 1][0]) - float(rows[idx][0])
        fd = (float(rows[idx + 1][2]) - float(rows[idx - 1][2])) / (2.0 * h)
        assert abs(fd) < 1e-4

    def test_matches_grid_byte_for_byte(self, tmp_path, capsys):
        fig = tmp_path / "fig.csv"
        grid = tmp_path / "grid.csv"
        run_cli(["figure", "--panel", "right", "--out", str(fig), "--no-render"], capsys)
        run_cli(["grid", "--fn", "gamma,k", "--from", "-1.9", "--to", "-1.1",
                 "--points", "801", "--out", str(grid)], capsys)
        assert fig.read_bytes() == grid.read_bytes()

    def test_deterministic_across_runs(self, tmp_path, capsys):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        run_cli(["figure", "--panel", "left", "--out", str(a), "--no-render"], capsys)
        run_cli(["figure", "--panel", "left", "--out", str(b), "--no-render"], capsys)
        assert a.read_bytes() == b.read_bytes()

    def test_bad_panel_exits_64(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["figure", "--panel", "top", "--out", "x.csv"])
        assert exc.value.code == 64
        capsys.readouterr()


class TestFormatValue:
    def test_integral_strips_point_zero(self):
        assert grids.format_value(1.0) == "1"
        assert grids.format_value(-3.0) == "-3"
        assert grids.format_value(24.0) == "24"

    def test_negative_zero_normalized(self):
        assert grids.format_value(-0.0) == "0"

    def test_nan_literal(self):
        assert grids.format_value(math.nan) == "nan"

    def test_shortest_roundtrip(self):
        for x in (0.1, -0.5772156649015329, 1.7724538509055160, 6.283185307179586e-07):
            assert float(grids.format_value(x)) == x
            assert len(grids.format_value(x).lstrip("-").replace(".", "").replace("e", "")) <= 21
