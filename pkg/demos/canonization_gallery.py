"""Apply each canonization to a small cloud and replay the recorded group element."""

import numpy as np

from canoncover import apply_canon

rng = np.random.default_rng(7)
X = rng.random((2, 5))
print("input cloud:")
print(np.round(X, 3))

for spec in ("lexsort", "hilbert:4", "centralize"):
    cloud, record = apply_canon(X, spec)
    print(f"\n{spec}: record keys {sorted(record)}")
    print(np.round(cloud, 3))
    if "perm" in record:
        assert np.array_equal(cloud, X[:, record["perm"]])
    if spec == "centralize":
        assert np.array_equal(cloud, X - np.array(record["shift"])[:, None])
    # canonizing twice changes nothing
    again, _ = apply_canon(cloud, spec)
    assert np.array_equal(again, cloud)

# the pca route also fixes rotation, then signs by third moments
Y = rng.normal(size=(3, 40)) * np.array([[2.5], [1.0], [0.3]])
cloud, record = apply_canon(Y, "pca-skew")
frame = np.array(record["frame"])
print("\npca-skew: frame @ frame.T == I:",
      np.allclose(frame @ frame.T, np.eye(3), atol=1e-9))
print("row third moments:", np.round((cloud ** 3).sum(axis=1), 3))
replay = np.array(record["signs"])[:, None] * (frame @ Y - np.array(record["shift"])[:, None])
assert np.array_equal(cloud, replay)

# a permuted copy of the cloud canonizes to the same representative
perm = rng.permutation(5)
same, _ = apply_canon(X[:, perm], "lexsort")
assert np.array_equal(same, apply_canon(X, "lexsort")[0])
print("\npermutation of the input leaves the lexsort representative unchanged")
