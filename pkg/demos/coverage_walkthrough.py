"""How well does a train set cover a test set, before and after canonization?"""

import numpy as np

from canoncover import canonize_dataset, coverage, greedy_net, synthetic_split

train, test = synthetic_split(60, 30, clusters=3, d=3, n_points=16, seed=1)

raw = coverage(train, test, "mean-euclidean")
print(f"raw euclidean      mean {raw.mean_coverage:.4f}  max {raw.max_coverage:.4f}")

for spec in ("lexsort", "hilbert:8"):
    ctr = canonize_dataset(train, spec)
    cte = canonize_dataset(test, spec)
    rep = coverage(ctr, cte, "mean-euclidean")
    print(f"{spec:<18} mean {rep.mean_coverage:.4f}  max {rep.max_coverage:.4f}")

quot = coverage(train, test, "perm-sum")
print(f"permutation quotient mean {quot.mean_coverage:.4f}  max {quot.max_coverage:.4f}")

# the quotient is a floor for any canonized distance, item by item
canon = coverage(canonize_dataset(train, "hilbert:8"),
                 canonize_dataset(test, "hilbert:8"), "mean-euclidean")
print("quotient <= hilbert-canonized on every test item:",
      bool(np.all(quot.q <= canon.q + 1e-9)))

# greedy nets of the train set at a few radii
clouds = [item.coords for item in train.items]
for eps in (0.05, 0.1, 0.2):
    net = greedy_net(clouds, "perm-sum", eps)
    print(f"greedy net at eps={eps}: {net.size} centers")
