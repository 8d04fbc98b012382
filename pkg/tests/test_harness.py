import csv
import json
from pathlib import Path

import pytest

from netwalk.harness import (
    ConfigError,
    ExperimentConfig,
    RECORDS_HEADER,
    run_experiment,
    topology_name,
)

SAMPLE = Path(__file__).resolve().parent.parent / "src" / "netwalk" / "data" / "sample_social.txt"


def desk_config(tmp_path, **overrides):
    base = dict(
        topologies=[
            {"model": "ER", "n": 60, "k_avg": 4.0, "seed": 1},
            {"model": "LFR", "n": 60, "k_avg": 6.0, "mu": 0.1, "seed": 2, "n_communities": 3},
        ],
        dynamics=["rw", "rwd"],
        w_grid=[10, 40],
        realizations=2,
        metrics=["degree", "clustering"],
        communities=True,
        master_seed=7,
        output_dir=str(tmp_path / "out"),
        parallelism=1,
    )
    base.update(overrides)
    return ExperimentConfig(**base)


def read_csv(path):
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))


class TestConfig:
    def test_defaults_mirror_protocol(self):
        cfg = ExperimentConfig()
        assert cfg.w_grid == [100, 200, 400, 500, 600, 800, 1000, 2000, 5000, 20000, 50000]
        assert cfg.realizations == 20
        assert len(cfg.dynamics) == 5
        assert len(cfg.metrics) == 6
        assert len(cfg.topologies) == 6  # 3 models + 3 LFR mixing values

    def test_w_grid_sorted(self):
        cfg = ExperimentConfig(w_grid=[50, 10, 30])
        assert cfg.w_grid == [10, 30, 50]

    def test_invalid_keys_rejected(self):
        with pytest.raises(ConfigError):
            ExperimentConfig.from_json(json.dumps({"walk_lengths": [1]}))

    def test_invalid_values_rejected(self):
        with pytest.raises(ConfigError):
            ExperimentConfig(realizations=0)
        with pytest.raises(ConfigError):
            ExperimentConfig(metrics=["pagerank"])
        with pytest.raises(ConfigError):
            ExperimentConfig(dynamics=["levy"])

    def test_topology_names(self):
        assert topology_name({"model": "ER"}) == "ER"
        assert topology_name({"model": "LFR", "mu": 0.2}) == "LFR_mu0.2"
        assert topology_name({"edge_list": "/x/social.txt"}) == "social"
        assert topology_name({"model": "ER", "name": "mine"}) == "mine"


class TestRunExperiment:
    def test_row_count_and_header(self, tmp_path):
        cfg = desk_config(tmp_path)
        records_path, summary_path = run_experiment(cfg)
        with open(records_path) as fh:
            header = fh.readline().strip()
        assert header == RECORDS_HEADER
        rows = read_csv(records_path)
        # |topologies| * |dynamics| * |w_grid| * realizations * |metrics|
        assert len(rows) == 2 * 2 * 2 * 2 * 2

    def test_summary_means_match_records(self, tmp_path):
        cfg = desk_config(tmp_path)
        records_path, summary_path = run_experiment(cfg)
        records = read_csv(records_path)
        summary = read_csv(summary_path)
        for srow in summary:
            cell = [
                r for r in records
                if r["topology"] == srow["topology"]
                and r["dynamics"] == srow["dynamics"]
                and r["w"] == srow["w"]
                and r["metric"] == srow["metric"]
            ]
            assert len(cell) == int(srow["realizations"])
            values = [float(r["pearson"]) for r in cell if r["pearson"] != ""]
            if not values:
                assert srow["pearson_mean"] == ""
            else:
                assert float(srow["pearson_mean"]) == pytest.approx(
                    sum(values) / len(values), abs=1e-12
                )

    def test_undefined_cells_are_empty_fields(self, tmp_path):
        # a cycle is 2-regular: degree correlation undefined at full coverage
        cfg = desk_config(
            tmp_path,
            topologies=[{"model": "ER", "n": 60, "k_avg": 4.0, "seed": 1}],
            metrics=["eccentricity"],
            communities=False,
        )
        records_path, _ = run_experiment(cfg)
        text = Path(records_path).read_text()
        assert ",nan" not in text.lower()

    def test_real_network_topology(self, tmp_path):
        cfg = desk_config(
            tmp_path,
            topologies=[{"edge_list": str(SAMPLE), "name": "social_sample"}],
            communities=True,
        )
        records_path, _ = run_experiment(cfg)
        rows = read_csv(records_path)
        assert all(r["topology"] == "social_sample" for r in rows)
        assert any(r["nmi"] != "" for r in rows)

    def test_missing_edge_list_aborts(self, tmp_path):
        cfg = desk_config(tmp_path, topologies=[{"edge_list": "/nonexistent.txt"}])
        with pytest.raises(FileNotFoundError):
            run_experiment(cfg)

    def test_byte_identical_across_jobs(self, tmp_path):
        cfg1 = desk_config(tmp_path, output_dir=str(tmp_path / "a"), parallelism=1)
        cfg2 = desk_config(tmp_path, output_dir=str(tmp_path / "b"), parallelism=3)
        r1, s1 = run_experiment(cfg1)
        r2, s2 = run_experiment(cfg2)
        assert Path(r1).read_bytes() == Path(r2).read_bytes()
        assert Path(s1).read_bytes() == Path(s2).read_bytes()

    def test_rerun_byte_identical(self, tmp_path):
        cfg1 = desk_config(tmp_path, output_dir=str(tmp_path / "a"))
        cfg2 = desk_config(tmp_path, output_dir=str(tmp_path / "b"))
        r1, _ = run_experiment(cfg1)
        r2, _ = run_experiment(cfg2)
        assert Path(r1).read_bytes() == Path(r2).read_bytes()

    def test_nmi_extension_mode(self, tmp_path):
        cfg = desk_config(tmp_path, nmi_on_recovered_only=False)
        records_path, _ = run_experiment(cfg)
        rows = read_csv(records_path)
        assert any(r["nmi"] != "" for r in rows)
