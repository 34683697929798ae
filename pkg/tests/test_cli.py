import json

import pytest

from antibunch.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_csv(text):
    meta, columns, rows = {}, None, []
    for line in text.splitlines():
        if line.startswith("# "):
            key, _, value = line[2:].partition(": ")
            meta[key] = value
        elif columns is None:
            columns = line.split(",")
        elif line:
            rows.append(line.split(","))
    return meta, columns, rows


def test_bare_incoherent_csv(capsys):
    code, out, _ = run(capsys, "bare", "--drive", "incoherent", "--P", "1",
                       "--points", "5", "--no-timestamp")
    assert code == 0
    meta, columns, rows = parse_csv(out)
    assert columns == ["tau", "g2"]
    assert len(rows) == 5
    assert float(rows[0][1]) == pytest.approx(0.0)
    assert "timestamp" not in meta


def test_bare_coherent_has_envelopes(capsys):
    code, out, _ = run(capsys, "bare", "--drive", "coherent", "--omega", "2",
                       "--points", "5", "--no-timestamp")
    assert code == 0
    _, columns, rows = parse_csv(out)
    assert columns == ["tau", "g2", "envelope_lo", "envelope_hi"]
    for _, g2, lo, hi in rows:
        assert float(lo) - 1e-9 <= float(g2) <= float(hi) + 1e-9


def test_json_format(capsys):
    code, out, _ = run(capsys, "noise", "--xi", "0.5", "--model", "coherent",
                       "--points", "4", "--format", "json", "--no-timestamp")
    assert code == 0
    payload = json.loads(out)
    assert payload["columns"] == ["tau", "g2"]
    assert len(payload["rows"]) == 4
    assert payload["meta"]["xi"] == 0.5


def test_out_file(tmp_path, capsys):
    target = tmp_path / "curve.csv"
    code, out, _ = run(capsys, "bare", "--points", "3", "--out", str(target),
                       "--no-timestamp")
    assert code == 0
    assert out == ""
    assert target.read_text().startswith("# artifact: antibunch")


def test_no_timestamp_is_deterministic(capsys):
    argv = ("bare", "--points", "4", "--no-timestamp")
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_config_overlay(tmp_path, capsys):
    config = tmp_path / "run.cfg"
    config.write_text("points = 6\ntau-max = 4.0  # comment\nxi = 0.25\n")
    code, out, _ = run(capsys, "noise", "--xi", "0.5", "--config", str(config),
                       "--no-timestamp")
    assert code == 0
    meta, _, rows = parse_csv(out)
    assert len(rows) == 6            # config supplies the default
    assert meta["xi"] == "0.5"       # explicit flag wins over config


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "bare", "--gamma", "-1")[0] == 2
    assert run(capsys, "bare", "--points", "1")[0] == 2
    assert run(capsys, "noise", "--xi", "-0.1")[0] == 2
    assert run(capsys, "bare", "--no-such-flag")[0] == 2
    assert run(capsys, "scan", "nope")[0] == 2


def test_runtime_error_exit_3(tmp_path, capsys):
    code, _, err = run(capsys, "bare", "--points", "3",
                       "--out", str(tmp_path / "missing" / "x.csv"))
    assert code == 3
    assert "runtime error" in err


def test_jitter_both_within_tolerance(capsys):
    code, out, _ = run(capsys, "jitter", "--kind", "gaussian", "--Gamma", "1",
                       "--method", "both", "--points", "9", "--tau-max", "6",
                       "--no-timestamp")
    assert code == 0
    meta, columns, _ = parse_csv(out)
    assert columns == ["tau", "g2", "g2_oracle"]
    assert float(meta["max_abs_deviation"]) < 1e-5


def test_unreachable_tolerance_exit_4(capsys):
    code, _, err = run(capsys, "jitter", "--kind", "exponential",
                       "--method", "both", "--points", "9", "--tau-max", "6",
                       "--tolerance", "1e-308")
    assert code == 4
    assert "validation failure" in err


def test_filter_both_coherent(capsys):
    code, out, _ = run(capsys, "filter", "--drive", "coherent", "--omega", "2",
                       "--Gamma", "0.7", "--method", "both", "--points", "7",
                       "--no-timestamp")
    assert code == 0
    meta, _, _ = parse_csv(out)
    assert float(meta["max_abs_deviation"]) < 1e-5


def test_filter_gamma_zero_proxy(capsys):
    code, out, _ = run(capsys, "filter", "--drive", "incoherent", "--Gamma",
                       "0", "--points", "5", "--no-timestamp")
    assert code == 0
    meta, _, _ = parse_csv(out)
    assert "narrow-filter proxy" in meta["note"]


def test_scan_fig2c_zero_jitter_rows(capsys):
    code, out, _ = run(capsys, "scan", "fig2c", "--no-timestamp")
    assert code == 0
    _, columns, rows = parse_csv(out)
    assert columns == ["x", "y", "value"]
    zero_rows = [r for r in rows if float(r[1]) == 0.0]
    assert len(zero_rows) == 4
    assert all(float(r[2]) == 0.0 for r in zero_rows)


def test_scan_fig4c_contains_unit_crossing(capsys):
    code, out, _ = run(capsys, "scan", "fig4c", "--no-timestamp")
    assert code == 0
    _, columns, rows = parse_csv(out)
    assert columns == ["x", "value"]
    # Gamma_sigma = 2 for P = gamma, so the crossing sits at 2/3
    crossing = [float(v) for x, v in rows
                if abs(float(x) - 2.0 / 3.0) < 1e-12]
    assert crossing == [pytest.approx(1.0)]


def test_version(capsys):
    code, out, _ = run(capsys, "--version")
    assert code == 0
    assert out.strip() == "1.0.0"
