"""How many ancillas does a random draw need?

Evaluates the failure-probability bound for a random draw (the chance
that some low-weight error becomes undetectable in some intermediate
code), scans for the smallest ancilla count driving it below a target,
and cross-checks the masking probability that powers the bound.
"""

import numpy as np

from stabswitch import analysis

n, d = 9, 3
print(f"failure bound for n={n}, d={d}, taking gc = m:")
for m in range(0, 26, 5):
    b = analysis.failure_bound(n, m, d, gc=m)
    print(f"  m={m:2d}: raw {b.raw:12.4e}  clamped {b.effective:.4f}")

for eps in (1.0, 0.1, 0.01):
    res = analysis.min_ancilla(n, d, eps)
    print(
        f"smallest m with bound < {eps}: {res.m} "
        f"(scale d*ln(n/d)+ln(1/eps) = {res.asymptotic_reference:.2f})"
    )

# The bound's sequential-substitution term: the probability that a random
# invertible remix hides an error between the outgoing and incoming
# syndromes.  Exact enumeration is feasible through dimension 4.
print("\nmasking probability by dimension:")
for dim in (2, 3, 4):
    v = np.zeros(dim, dtype=np.uint8)
    w = np.zeros(dim, dtype=np.uint8)
    v[0] = w[-1] = 1
    exact = analysis.masking_exact(dim)
    enum = analysis.masking_enumerate(dim, v, w)
    ref = (dim - 1) / 2**dim
    note = "  (exceeds the reference value!)" if float(exact) > ref else ""
    print(f"  dim {dim}: closed form {exact} = {float(exact):.5f}, "
          f"enumeration {enum}, reference {ref:.5f}{note}")

est = analysis.masking_mc(5, [1, 0, 0, 0, 0], [0, 0, 0, 0, 1], 200_000, np.random.default_rng(0))
print(f"  dim 5: Monte Carlo {est.estimate:.5f} +- {est.stderr:.5f} "
      f"(closed form {float(analysis.masking_exact(5)):.5f})")
