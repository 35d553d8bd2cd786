import numpy as np
import pytest

from qwsearch.cli import main
from qwsearch.evolve import first_peak

FIG_FLAGS = ["--n1", "512", "--n2", "256", "--k1", "3", "--k2", "5"]


def run_cli(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_csv(text):
    lines = text.strip().splitlines()
    header = lines[0].split(",")
    rows = [line.split(",") for line in lines[1:]]
    return header, rows


def parse_floats(text):
    header, rows = parse_csv(text)
    return header, np.array([[float(x) for x in row] for row in rows])


# ---------------------------------------------------------------------------
# exit statuses and validation


def test_missing_subcommand_is_usage_error(capsys):
    code, _, err = run_cli(capsys, [])
    assert code == 1
    assert "usage error" in err


def test_simulate_requires_instance(capsys):
    code, _, err = run_cli(capsys, ["simulate", "--gamma", "0.1"])
    assert code == 1
    assert "bipartite layout" in err


def test_partial_layout_is_rejected(capsys):
    code, _, err = run_cli(
        capsys, ["simulate", "--n1", "4", "--n2", "4", "--gamma", "0.1"]
    )
    assert code == 1
    assert "--k1" in err or "needs all" in err


def test_layout_and_graph_conflict(capsys, tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("2 1\n0 1\n")
    code, _, err = run_cli(
        capsys,
        ["simulate", *FIG_FLAGS, "--graph", str(path), "--gamma", "0.1"],
    )
    assert code == 1


def test_invalid_spec_is_validation_error(capsys):
    code, _, err = run_cli(
        capsys,
        ["simulate", "--n1", "4", "--n2", "4", "--k1", "0", "--k2", "0", "--gamma", "0.1"],
    )
    assert code == 1
    assert "marked" in err


def test_full_mode_cap(capsys):
    code, _, err = run_cli(
        capsys,
        [
            "simulate",
            "--n1", "2000", "--n2", "200", "--k1", "1", "--k2", "1",
            "--mode", "full", "--gamma", "0.001", "--tmax", "1", "--samples", "4",
        ],
    )
    assert code == 1
    assert "full mode caps" in err


def test_verify_spin_exit_codes(capsys):
    code, out, _ = run_cli(capsys, ["verify-spin", "--jz-ratio", "-1", "--gamma", "0.3"])
    assert code == 0
    assert "classification=signless" in out
    assert "result=PASS" in out

    code, out, _ = run_cli(capsys, ["verify-spin", "--jz-ratio", "1"])
    assert code == 0
    assert "classification=laplacian" in out

    code, out, _ = run_cli(capsys, ["verify-spin", "--jz-ratio", "0"])
    assert code == 0
    assert "classification=adjacency" in out

    code, out, _ = run_cli(capsys, ["verify-spin", "--jz-ratio", "0.37"])
    assert code == 2
    assert "classification=other" in out
    assert "result=FAIL" in out


# ---------------------------------------------------------------------------
# simulate


def test_simulate_header_and_gamma_zero_flat(capsys):
    code, out, _ = run_cli(
        capsys,
        ["simulate", *FIG_FLAGS, "--gamma", "0", "--tmax", "10", "--samples", "50"],
    )
    assert code == 0
    header, data = parse_floats(out)
    assert header == ["t", "p_success", "p_a", "p_b", "p_c", "p_d"]
    assert np.max(np.abs(data[:, 1] - 8.0 / 768.0)) <= 1e-10


def test_simulate_uniform_peak_near_prediction(capsys):
    code, out, _ = run_cli(
        capsys,
        [
            "simulate", *FIG_FLAGS,
            "--walk", "signless", "--init", "s",
            "--gamma", "0.002", "--tmax", "80",
        ],
    )
    assert code == 0
    _, data = parse_floats(out)
    t_peak, p_peak = first_peak(data[:, 0], data[:, 1])
    assert abs(t_peak - 35.54) <= 1.5
    assert abs(p_peak - 0.889) <= 0.02


def test_simulate_signless_eigenvector_approaches_one(capsys):
    code, out, _ = run_cli(
        capsys,
        [
            "simulate", *FIG_FLAGS,
            "--walk", "signless", "--init", "sq",
            "--gamma", "0.004", "--tmax", "40",
        ],
    )
    assert code == 0
    _, data = parse_floats(out)
    t_peak, p_peak = first_peak(data[:, 0], data[:, 1])
    assert p_peak >= 0.95
    assert abs(t_peak - 13.77) <= 1.0


def test_simulate_full_mode_matches_reduced(capsys):
    argv = [
        "simulate",
        "--n1", "9", "--n2", "5", "--k1", "4", "--k2", "2",
        "--walk", "adjacency", "--gamma", "0.1", "--tmax", "10", "--samples", "40",
    ]
    code, out_reduced, _ = run_cli(capsys, argv + ["--mode", "reduced"])
    assert code == 0
    code, out_full, _ = run_cli(capsys, argv + ["--mode", "full"])
    assert code == 0
    _, reduced = parse_floats(out_reduced)
    _, full = parse_floats(out_full)
    assert np.max(np.abs(reduced - full)) <= 1e-9


def test_simulate_edge_list_instance(capsys, tmp_path):
    path = tmp_path / "path4.txt"
    path.write_text("4 3\n0 1\n1 2\n2 3\n")
    code, out, _ = run_cli(
        capsys,
        [
            "simulate", "--graph", str(path), "--marked", "0,2",
            "--walk", "laplacian", "--gamma", "0.5", "--tmax", "5", "--samples", "20",
        ],
    )
    assert code == 0
    header, data = parse_floats(out)
    assert header == ["t", "p_success"]
    assert data[0, 1] == pytest.approx(0.5)  # uniform start, two of four marked


def test_simulate_edge_list_needs_tmax_and_uniform_start(capsys, tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("3 2\n0 1\n1 2\n")
    code, _, err = run_cli(capsys, ["simulate", "--graph", str(path), "--gamma", "0.1"])
    assert code == 1
    assert "--tmax" in err
    code, _, err = run_cli(
        capsys,
        ["simulate", "--graph", str(path), "--gamma", "0.1", "--tmax", "2",
         "--init", "sq"],
    )
    assert code == 1
    assert "--init s" in err


def test_simulate_reduced_mode_requires_layout(capsys, tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("3 2\n0 1\n1 2\n")
    code, _, err = run_cli(
        capsys,
        ["simulate", "--graph", str(path), "--gamma", "0.1", "--tmax", "2",
         "--mode", "reduced"],
    )
    assert code == 1
    assert "full mode" in err


# ---------------------------------------------------------------------------
# sweep-gamma


def test_sweep_gamma_two_critical_maxima(capsys):
    code, out, _ = run_cli(
        capsys,
        [
            "sweep-gamma", *FIG_FLAGS, "--walk", "signless", "--init", "s",
            "--gamma-min", "0.001", "--gamma-max", "0.0055", "--gamma-count", "60",
        ],
    )
    assert code == 0
    header, data = parse_floats(out)
    assert header == ["gamma", "t_peak", "p_peak"]
    gammas, peaks = data[:, 0], data[:, 2]
    assert np.array_equal(gammas, np.sort(gammas))
    crests = [
        (gammas[i], peaks[i])
        for i in range(1, len(peaks) - 1)
        if peaks[i] >= peaks[i - 1] and peaks[i] > peaks[i + 1] and peaks[i] > 0.5
    ]
    assert len(crests) == 2
    assert 0.0017 <= crests[0][0] <= 0.0023
    assert 0.0035 <= crests[1][0] <= 0.0043
    assert crests[0][1] > 0.8 and crests[1][1] > 0.8


def test_sweep_gamma_signless_eigenvector_reaches_one(capsys):
    code, out, _ = run_cli(
        capsys,
        [
            "sweep-gamma", *FIG_FLAGS, "--walk", "signless", "--init", "sq",
            "--gamma-min", "0.0018", "--gamma-max", "0.0042", "--gamma-count", "25",
        ],
    )
    assert code == 0
    _, data = parse_floats(out)
    assert np.max(data[:, 2]) >= 0.95


def test_sweep_gamma_single_point(capsys):
    code, out, _ = run_cli(
        capsys,
        [
            "sweep-gamma", *FIG_FLAGS,
            "--gamma-min", "0.002", "--gamma-max", "0.002", "--gamma-count", "1",
        ],
    )
    assert code == 0
    _, rows = parse_csv(out)
    assert len(rows) == 1


def test_sweep_gamma_rejects_bad_range(capsys):
    code, _, err = run_cli(
        capsys,
        ["sweep-gamma", *FIG_FLAGS, "--gamma-min", "0", "--gamma-max", "0.01"],
    )
    assert code == 1
    assert "log-spaced" in err


# ---------------------------------------------------------------------------
# overlaps


def test_overlaps_low_gamma_concentrates_in_second_excited(capsys):
    code, out, _ = run_cli(
        capsys,
        [
            "overlaps", *FIG_FLAGS, "--walk", "signless", "--probe", "s",
            "--gamma-min", "0.001", "--gamma-max", "0.001", "--gamma-count", "1",
        ],
    )
    assert code == 0
    header, data = parse_floats(out)
    assert header == ["gamma", "n", "S_n", "L_n", "R_n"]
    s = {int(row[1]): row[2] for row in data}
    assert s[2] > 0.8
    assert s[3] > 0.05
    assert s[2] > s[3] > max(s[0], s[1])
    assert sum(s.values()) <= 1.0 + 1e-10


def test_overlaps_signless_probe_avoids_top_eigenvector(capsys):
    code, out, _ = run_cli(
        capsys,
        [
            "overlaps", *FIG_FLAGS, "--walk", "signless", "--probe", "sq",
            "--gamma-min", "0.001", "--gamma-max", "0.0055", "--gamma-count", "40",
        ],
    )
    assert code == 0
    _, data = parse_floats(out)
    top = data[data[:, 1] == 3]
    assert np.max(top[:, 2]) < 0.01


def test_overlaps_full_mode_matches_reduced_on_singleton_classes(capsys):
    # with one vertex per class the full space IS the class space, so both
    # modes must report identical eigenpair overlaps
    argv = [
        "overlaps",
        "--n1", "2", "--n2", "2", "--k1", "1", "--k2", "1",
        "--walk", "signless", "--probe", "s",
        "--gamma-min", "0.05", "--gamma-max", "0.3", "--gamma-count", "5",
    ]
    code, out_reduced, _ = run_cli(capsys, argv + ["--mode", "reduced"])
    assert code == 0
    code, out_full, _ = run_cli(capsys, argv + ["--mode", "full"])
    assert code == 0
    _, reduced = parse_floats(out_reduced)
    _, full = parse_floats(out_full)
    assert np.max(np.abs(reduced - full)) <= 1e-9


def test_overlaps_full_mode_reports_whole_spectrum_order(capsys):
    # with multi-vertex classes the full spectrum interleaves eigenvectors
    # that are antisymmetric inside a class; they carry no probe overlap
    code, out, _ = run_cli(
        capsys,
        [
            "overlaps",
            "--n1", "9", "--n2", "5", "--k1", "4", "--k2", "2",
            "--walk", "signless", "--probe", "s", "--mode", "full",
            "--gamma-min", "0.05", "--gamma-max", "0.3", "--gamma-count", "5",
        ],
    )
    assert code == 0
    _, data = parse_floats(out)
    for gamma in np.unique(data[:, 0]):
        block = data[data[:, 0] == gamma]
        assert block.shape[0] == 4
        assert np.sum(block[:, 2]) <= 1.0 + 1e-10


def test_overlaps_requires_layout(capsys, tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("2 1\n0 1\n")
    code, _, err = run_cli(
        capsys,
        ["overlaps", "--graph", str(path), "--gamma-min", "0.1", "--gamma-max", "0.2"],
    )
    assert code == 1


# ---------------------------------------------------------------------------
# runtimes


def test_runtimes_single_row_and_header(capsys):
    code, out, _ = run_cli(
        capsys, ["runtimes", "--n1", "1024", "--n2", "256", "--k1", "8", "--k2", "5"]
    )
    assert code == 0
    header, rows = parse_csv(out)
    assert header == [
        "sweep_key", "t_La", "t_Lb", "t_A", "t_Qa", "t_Qb", "fastest",
        "near_regular_flag",
    ]
    assert len(rows) == 1
    assert rows[0][0] == "8"
    assert rows[0][6] == "signless_right"
    assert rows[0][7] == "0"


def test_runtimes_sweep_reproduces_transitions(capsys):
    code, out, _ = run_cli(
        capsys,
        [
            "runtimes", "--n1", "1024", "--n2", "256", "--k1", "1", "--k2", "5",
            "--sweep", "k1", "--sweep-min", "1", "--sweep-max", "60",
        ],
    )
    assert code == 0
    _, rows = parse_csv(out)
    labels = {int(row[0]): row[6] for row in rows}
    assert labels[11] == "signless_right"
    assert labels[12] == "adjacency"
    assert labels[33] == "adjacency"
    assert labels[34] == "laplacian_left"


def test_runtimes_skips_unmarked_rows_with_warning(capsys):
    code, out, err = run_cli(
        capsys,
        [
            "runtimes", "--n1", "8", "--n2", "4", "--k1", "1", "--k2", "0",
            "--sweep", "k1", "--sweep-min", "0", "--sweep-max", "2",
        ],
    )
    assert code == 0
    _, rows = parse_csv(out)
    assert [row[0] for row in rows] == ["1", "2"]
    assert "skipping sweep_key=0" in err
    # absent runtimes show as empty fields (k2 = 0 leaves t_Lb and t_Qb blank)
    assert rows[0][2] == "" and rows[0][5] == ""


def test_runtimes_near_regular_flag(capsys):
    code, out, _ = run_cli(
        capsys, ["runtimes", "--n1", "100", "--n2", "101", "--k1", "3", "--k2", "5"]
    )
    assert code == 0
    _, rows = parse_csv(out)
    assert rows[0][7] == "1"


def test_runtimes_rejects_out_of_range_sweep(capsys):
    code, _, err = run_cli(
        capsys,
        [
            "runtimes", "--n1", "8", "--n2", "4", "--k1", "1", "--k2", "1",
            "--sweep", "k1", "--sweep-min", "0", "--sweep-max", "9",
        ],
    )
    assert code == 1


# ---------------------------------------------------------------------------
# config files and reproducibility


def test_config_file_with_flag_override(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text(
        "# base layout\n"
        "n1=1024\n"
        "n2=256\n"
        "k1=8\n"
        "k2=5\n"
    )
    code, out_base, _ = run_cli(capsys, ["runtimes", "--config", str(cfg)])
    assert code == 0
    _, rows = parse_csv(out_base)
    assert rows[0][0] == "8" and rows[0][6] == "signless_right"
    code, out_override, _ = run_cli(
        capsys, ["runtimes", "--config", str(cfg), "--k1", "40"]
    )
    assert code == 0
    _, rows = parse_csv(out_override)
    assert rows[0][0] == "40" and rows[0][6] == "laplacian_left"


def test_config_rejects_unknown_key(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("n1=4\nbogus=1\n")
    code, _, err = run_cli(capsys, ["runtimes", "--config", str(cfg)])
    assert code == 1
    assert "unknown config key" in err


def test_csv_output_is_byte_identical_across_runs(capsys, tmp_path):
    out1 = tmp_path / "a.csv"
    out2 = tmp_path / "b.csv"
    argv = [
        "sweep-gamma", *FIG_FLAGS, "--walk", "signless", "--init", "s",
        "--gamma-min", "0.001", "--gamma-max", "0.0055", "--gamma-count", "20",
    ]
    assert main(argv + ["--out", str(out1)]) == 0
    assert main(argv + ["--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_single_header_row_everywhere(capsys):
    for argv in (
        ["simulate", *FIG_FLAGS, "--gamma", "0.002", "--tmax", "5", "--samples", "10"],
        ["sweep-gamma", *FIG_FLAGS, "--gamma-min", "0.002", "--gamma-max", "0.004",
         "--gamma-count", "3", "--tmax", "20", "--samples", "200"],
        ["overlaps", *FIG_FLAGS, "--gamma-min", "0.002", "--gamma-max", "0.004",
         "--gamma-count", "3"],
        ["runtimes", *FIG_FLAGS],
    ):
        code, out, _ = run_cli(capsys, argv)
        assert code == 0
        lines = out.strip().splitlines()
        assert len([ln for ln in lines if any(c.isalpha() for c in ln.split(",")[0])]) == 1
