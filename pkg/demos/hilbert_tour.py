"""Walk the space-filling curve: cells, adjacency, nesting, snapping."""

import numpy as np

from canoncover import HilbertParams, decode, encode, centroid, snap_to_centroids

p1 = HilbertParams(d=2, m=1)
print("order 1 in the unit square:")
for k in range(p1.n_cells):
    cell = decode(p1, k)
    print(f"  index {k} -> cell {cell} -> centroid {centroid(p1, cell)}")

# consecutive indices always land in edge-adjacent cells
p3 = HilbertParams(d=2, m=3)
cells = [decode(p3, k) for k in range(p3.n_cells)]
steps = {tuple(abs(a - b) for a, b in zip(u, v)) for u, v in zip(cells, cells[1:])}
print(f"\norder 3: {p3.n_cells} cells, step set {sorted(steps)}")

# halving the resolution of a cell recovers the parent curve's cell
p2 = HilbertParams(d=2, m=2)
child = decode(p3, 37)
parent = decode(p2, 37 >> 2)
print(f"cell {child} at order 3 sits inside {parent} at order 2:",
      tuple(c >> 1 for c in child) == parent)

# round trip
assert all(encode(p3, c) == k for k, c in enumerate(cells))

rng = np.random.default_rng(0)
X = rng.random((2, 5))
snapped = snap_to_centroids(p2, X)
print("\ncloud snapped to order-2 centroids (max move "
      f"{np.max(np.abs(snapped - X)):.4f}, bound {2.0 ** -3}):")
print(np.round(snapped, 4))
