"""
Diversity of two bird censuses
==============================

One census is dominated by a single species (99 to 1), the other is an even
split. The antilog of Shannon entropy reads as a count of equally common
species. The logical entropy (Gini-Simpson index) agrees with it on which
census is more diverse.
"""

import numpy as np

from logent import approx as ap
from logent import measures as pm

censuses = {"skewed": pm.Dist([0.99, 0.01]), "even": pm.Dist([0.5, 0.5])}
for name, p in censuses.items():
    print(f"{name:>6}: H_e = {pm.shannon_entropy(p, 'e'):.4f}, "
          f"E = {pm.numbers_equivalent_entropy(p):.3f}, h = {pm.logical_entropy(p):.4f}")

# %%
# The numbers-equivalent is multiplicative over independent combinations.
p, q = censuses["skewed"], censuses["even"]
both = pm.Dist(np.outer(p.probs, q.probs).ravel())
print("E(p x q) =", pm.numbers_equivalent_entropy(both),
      " E(p) E(q) =", pm.numbers_equivalent_entropy(p) * pm.numbers_equivalent_entropy(q))

# %%
# Rao's quadratic entropy with the 0/1 distance is the logical entropy.
print("Rao with logical distances:", pm.rao_quadratic_entropy(q, pm.logical_distances(2)))

# %%
# Expanding ln(1/p) in powers of (p - 1), the first term alone gives logical
# entropy and more terms approach Shannon entropy from below.
d = pm.Dist([0.2, 0.3, 0.5])
for k in (1, 2, 5, 20, 80):
    print(f"k = {k:>2}: {ap.mercator_entropy_approx(d, k):.8f}")
print(f"H_e     {pm.shannon_entropy(d, 'e'):.8f}")

# %%
# Comparing the censuses pairwise.
print("h(p||q) =", pm.cross_entropy_logical(p, q), " d(p||q) =", pm.logical_divergence(p, q))
print("mixing chain:", pm.mixing_check(p, q))
