"""Node-pair load matrices: hot nodes, rack splits, and skew feasibility.

Shows how high-level knobs (how many endpoints are hot, how much load they
request, how much traffic crosses racks) turn into a concrete directed
pair-fraction matrix on a topology, and how the feasibility of a requested
skew collapses as the overall network load rises.

Run:  python demos/02_node_matrices.py
"""

import os

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from dctraffic import (NodeDistSpec, REFERENCE_TOPOLOGY_PARAMS, build_node_dist,
                       build_spine_leaf, endpoint_loads, skew_factor, skew_table)

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

topo = build_spine_leaf(**REFERENCE_TOPOLOGY_PARAMS)

# ---------------------------------------------------------------------------
# Three matrices: uniform, 5% hot nodes carrying 55%, and a rack split where
# only 12.9% of traffic crosses racks.
uniform = build_node_dist(NodeDistSpec(), topo.endpoints, seed=0)

hot = build_node_dist(
    NodeDistSpec(num_skewed_nodes=3, skewed_node_probs=(0.55 / 3,) * 3),
    topo.endpoints, seed=0)

racky = build_node_dist(
    NodeDistSpec(rack_config={"racks": {r: list(eps) for r, eps in topo.racks.items()},
                              "prob_inter_rack": 0.129}),
    topo.endpoints, seed=0)

for name, nd in [("uniform", uniform), ("3 hot nodes @ 55%", hot),
                 ("12.9% inter-rack", racky)]:
    loads = endpoint_loads(nd)
    src = np.array([v["src_frac"] for v in loads.values()])
    print(f"{name:>18}: max pair frac {nd.matrix.max():.5f}, "
          f"endpoint src load range [{src.min():.4f}, {src.max():.4f}]")

# ---------------------------------------------------------------------------
# Skew feasibility: raw skewed-endpoint load rho*y/x clips at 1.0 and the
# excess spreads over everyone else, so the achievable skew factor decays
# towards 1.0 (uniform) as the load grows.
print("\nskew factor for 5% of endpoints requesting 55% of traffic:")
for rho in (0.1, 0.3, 0.5, 0.7, 0.9):
    report = skew_factor(0.05, 0.55, rho)
    print(f"  load {rho:.1f}: factor {report.skew_factor:7.3f}  "
          f"(skewed {report.load_per_skewed:.3f}, other {report.load_per_other:.3f},"
          f" feasible={report.feasible})")

rhos = [round(0.1 * i, 1) for i in range(1, 10)]
table = skew_table([0.05, 0.1, 0.2, 0.4], [0.55], rhos)

fig, axes = plt.subplots(1, 3, figsize=(13, 3.8))
axes[0].imshow(np.log10(hot.matrix + 1e-9), cmap="viridis")
axes[0].set_title("hot-node matrix (log frac)")
axes[1].imshow(np.log10(racky.matrix + 1e-9), cmap="viridis")
axes[1].set_title("rack-split matrix (log frac)")
for i, x in enumerate((0.05, 0.1, 0.2, 0.4)):
    axes[2].plot(rhos, table[i, 0, :], "o-", label=f"{int(x * 100)}% hot")
axes[2].set_xlabel("network load")
axes[2].set_ylabel("skew factor")
axes[2].set_title("achievable skew vs load")
axes[2].legend()
fig.tight_layout()
fig.savefig(os.path.join(OUT, "02_node_matrices.png"), dpi=110)
print(f"\nwrote {OUT}/02_node_matrices.png")
