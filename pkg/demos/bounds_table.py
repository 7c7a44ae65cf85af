"""Print the covering-number bound table and a generalization-bound value."""

from fractions import Fraction

from canoncover import (bounds_table, generalization_rhs, sci_string,
                        bound_hilbert_upper, TABLE_FORMULAS)

entries = bounds_table(n_list=(250, 500, 750, 1000, 2000), d=3, eps=Fraction(1, 6))
by_key = {(e.formula, e.n): sci_string(e.value) for e in entries}

print("d=3, eps=1/6, Hilbert column at grid order 10")
print(f"{'n':>6} " + " ".join(f"{f:>16}" for f in TABLE_FORMULAS))
for n in (250, 500, 750, 1000, 2000):
    print(f"{n:>6} " + " ".join(f"{by_key[(f, n)]:>16}" for f in TABLE_FORMULAS))

# the Hilbert bound keeps improving as the grid refines; the limit order
# drops roughly one decade at n=250
finite = bound_hilbert_upper(250, 3, "1/6", m=10)
limit = bound_hilbert_upper(250, 3, "1/6")
print()
print("hilbert n=250, m=10: ", sci_string(finite))
print("hilbert n=250, limit:", sci_string(limit))

# plugging a covering number into the generalization right-hand side
rhs = generalization_rhs(c_ell=1.0, c_h=1.0, c_f=1.0, eps=0.1,
                         loss_bound=1.0, covering_number=100.0,
                         confidence=0.05, samples=10_000)
print()
print(f"rhs with N=100, delta=0.05, 10^4 samples: {rhs:.6f}")
