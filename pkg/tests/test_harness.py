"""Monte-Carlo risk harness: cells, tables, exports, reproducibility."""

import json
import os

import numpy as np
import pytest

from tvarseq.harness import REPORT_COLUMNS, export_report, run_cell, run_table
from tvarseq.io import config_hash


class TestRunCell:
    def test_reproducible(self, s1, gaussian):
        c1 = run_cell(s1, gaussian, 200, 5, base_seed=99, signal_id="s1")
        c2 = run_cell(s1, gaussian, 200, 5, base_seed=99, signal_id="s1")
        assert c1.rbar == c2.rbar
        assert c1.rbar_star == c2.rbar_star
        np.testing.assert_array_equal(c1.mean_estimate, c2.mean_estimate)

    def test_seed_matters(self, s1, gaussian):
        c1 = run_cell(s1, gaussian, 200, 5, base_seed=99)
        c2 = run_cell(s1, gaussian, 200, 5, base_seed=100)
        assert c1.rbar != c2.rbar

    def test_noiseless_debug_deterministic(self, s1, gaussian):
        c1 = run_cell(s1, gaussian, 500, 1, base_seed=0, debug_noiseless=True)
        c2 = run_cell(s1, gaussian, 500, 1, base_seed=7, debug_noiseless=True)
        assert c1.rbar == c2.rbar  # squared bias only, independent of seed
        assert c1.gamma_frequency == 1.0

    def test_m_validation(self, s1, gaussian):
        with pytest.raises(ValueError):
            run_cell(s1, gaussian, 200, 0, base_seed=1)

    def test_cell_fields(self, s1, uniform_noise):
        c = run_cell(s1, uniform_noise, 200, 3, base_seed=5, signal_id="s1")
        assert c.noise_family == "uniform_unit_variance"
        assert c.rbar >= 0.0
        assert c.rbar_star == pytest.approx(c.rbar / 0.125, rel=0.05)
        assert len(c.z) == len(c.S_grid) == len(c.mean_estimate) == 15
        assert 0.0 <= c.gamma_frequency <= 1.0


class TestRunTable:
    @staticmethod
    @pytest.fixture(scope="class")
    def small_report(s1, gaussian, uniform_noise):
        return run_table(s1, [gaussian, uniform_noise], [200, 500], M=5,
                         base_seed=42, signal_id="s1")

    def test_layout(self, small_report):
        assert len(small_report.cells) == 4
        rows = list(small_report.rows())
        assert len(rows[0]) == len(REPORT_COLUMNS)

    def test_robust_column(self, small_report):
        for n in (200, 500):
            per_noise = [c.rbar for c in small_report.cells if c.n == n]
            assert small_report.robust[n] == max(per_noise)

    def test_single_cell_table(self, s1, gaussian):
        rep = run_table(s1, [gaussian], [200], M=2, base_seed=1, signal_id="s1")
        assert len(rep.cells) == 1

    def test_empty_inputs_rejected(self, s1, gaussian):
        with pytest.raises(ValueError):
            run_table(s1, [gaussian], [], M=2, base_seed=1)
        with pytest.raises(ValueError):
            run_table(s1, [], [200], M=2, base_seed=1)


class TestExport:
    def test_export_files(self, s1, gaussian, tmp_path):
        rep = run_table(s1, [gaussian], [200], M=2, base_seed=3, signal_id="s1")
        cfg = {"signal": "s1", "seed": 3}
        paths = export_report(rep, cfg, str(tmp_path))
        names = sorted(os.path.basename(p) for p in paths)
        assert "risk_table.csv" in names
        assert "risk_table.json" in names
        assert "risk_table_s1_n200_gaussian_std.csv" in names
        head = open(paths[0]).readline()
        assert head.startswith("# config_hash=")
        assert config_hash(cfg) in head
        payload = json.load(open(os.path.join(tmp_path, "risk_table.json")))
        assert payload["config"] == cfg
        assert payload["robust_rbar"]["200"] == rep.robust[200]

    def test_byte_identical_reruns(self, s1, gaussian, tmp_path):
        cfg = {"signal": "s1", "seed": 3}
        out = []
        for sub in ("one", "two"):
            d = tmp_path / sub
            d.mkdir()
            rep = run_table(s1, [gaussian], [200], M=2, base_seed=3, signal_id="s1")
            export_report(rep, cfg, str(d))
            out.append((d / "risk_table.csv").read_bytes())
        assert out[0] == out[1]
