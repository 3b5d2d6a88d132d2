"""Replaying one trace under the four schedulers.

Generates a single uniform-node trace and feeds the identical flows to
shortest-remaining-processing-time, fair-share, first-fit and random
scheduling in the slot-driven simulator, then tabulates the key
performance indicators side by side.

Run:  python demos/04_simulate_schedulers.py     (about two minutes)
"""

import os
import time

from dctraffic import (GenConfig, REFERENCE_TOPOLOGY_PARAMS, SCHEDULERS,
                       SimConfig, build_spine_leaf, generate_trace, preset, run)

topo = build_spine_leaf(**REFERENCE_TOPOLOGY_PARAMS)
bench = preset("skewed_nodes_sensitivity_uniform", topo)

config = GenConfig(target_load=0.5, jsd_threshold=0.45, initial_n=20_000,
                   min_duration=3.2e5, seed=11)
print("generating trace at load 0.5 ...")
trace = generate_trace(bench.size_spec, bench.time_spec, bench.node_spec,
                       topo, config)
print(f"  {len(trace):,} flows over {trace.duration / 1e3:.0f} ms "
      f"(replication x{trace.report.replication})\n")

header = (f"{'scheduler':<12} {'mean FCT':>10} {'p99 FCT':>10} {'max FCT':>10} "
          f"{'thru rel':>9} {'flows acc':>10} {'info acc':>9}")
print(header)
print("-" * len(header))
for scheduler in SCHEDULERS:
    started = time.time()
    m = run(trace, topo, SimConfig(slot_size=1000.0, warmup_frac=0.1,
                                   scheduler=scheduler, seed=3))
    print(f"{scheduler:<12} {m.mean_fct:>10.1f} {m.p99_fct:>10.1f} "
          f"{m.max_fct:>10.0f} {m.throughput_rel:>9.3f} "
          f"{m.frac_flows_accepted:>10.4f} {m.frac_info_accepted:>9.3f}"
          f"   ({time.time() - started:.1f}s)")

print("\nFCT in microseconds; throughput relative to arrived bytes.")
print("Identical flows, identical links: only the scheduling rule differs.")
