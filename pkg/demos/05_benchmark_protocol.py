"""The sweep protocol: repeats x presets x loads x schedulers.

Runs a small end-to-end benchmark sweep on a four-endpoint topology (so it
finishes in about a minute), aggregates repeats into means with 95%
confidence intervals, and prints the winner table: the best scheduler per
load and KPI with its margin over the worst.

Run:  python demos/05_benchmark_protocol.py
"""

from dctraffic import (GenConfig, ProtocolConfig, SimConfig, build_spine_leaf,
                       run_protocol, winner_table)

topo = build_spine_leaf(servers_per_rack=2, racks=2, cores=1,
                        server_link=1250.0, core_link=10_000.0)

cfg = ProtocolConfig(
    presets=("rack_sensitivity_uniform",),
    loads=(0.1, 0.5, 0.9),
    repeats=3,
    schedulers=("srpt", "fair_share"),
    gen=GenConfig(target_load=0.1, jsd_threshold=0.4, initial_n=2000,
                  grid_samples=30_000, min_duration=1e5),
    sim=SimConfig(slot_size=500.0),
)

results = run_protocol(cfg, topo, base_seed=2)
print(f"{len(results['rows'])} runs -> {len(results['cells'])} cells, "
      f"{len(results['failures'])} failures\n")

print(f"{'load':>5} {'scheduler':<12} {'mean FCT':>12} {'ci95':>8} "
      f"{'thru rel':>9} {'ci95':>8}")
for cell in results["cells"]:
    print(f"{cell['load']:>5} {cell['scheduler']:<12} "
          f"{cell['mean_mean_fct']:>12.1f} {cell['ci95_mean_fct']:>8.1f} "
          f"{cell['mean_throughput_rel']:>9.3f} {cell['ci95_throughput_rel']:>8.4f}")

print("\nwinner table (best scheduler per load and KPI, margin vs worst):")
print(f"{'load':>5} {'KPI':<22} winner")
for row in winner_table(results):
    print(f"{row['load']:>5} {row['kpi']:<22} {row['display']}")
