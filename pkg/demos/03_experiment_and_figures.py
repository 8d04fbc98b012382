"""Run a small end-to-end experiment sweep and render figures from its CSVs.

Equivalent CLI:
    netwalk experiment --config config.json --output out/
    plots --input out/summary.csv --kind corr-vs-length --out out/figs/
"""

from netwalk.harness import ExperimentConfig, run_experiment

config = ExperimentConfig(
    topologies=[
        {"model": "ER", "n": 200, "k_avg": 4.0, "seed": 1},
        {"model": "BA", "n": 200, "k_avg": 4.0, "seed": 2},
        {"model": "LFR", "n": 200, "k_avg": 6.0, "mu": 0.1, "seed": 3,
         "n_communities": 4},
    ],
    dynamics=["rw", "rwd", "rwid", "tsaw-edge"],
    w_grid=[100, 400, 1600],
    realizations=5,
    metrics=["degree", "clustering", "closeness"],
    communities=True,
    master_seed=2024,
    output_dir="demo_out",
    parallelism=2,
)
records, summary = run_experiment(config)
print(f"wrote {records}\nwrote {summary}")

try:
    from netwalk_plots import FigureSpec, render
except ImportError:
    print("netwalk-plots not installed; skipping figure rendering")
else:
    for kind, source in (("corr-vs-length", summary),
                         ("corr-vs-knowledge", summary),
                         ("scatter-grid", records)):
        for path in render(FigureSpec(source, kind, "demo_out/figs")):
            print(f"wrote {path}")
