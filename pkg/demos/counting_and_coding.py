"""
From counting arrangements to counting bits
===========================================

The normalized log of a multinomial coefficient is Boltzmann's entropy.
Stirling's two-term approximation turns it into Shannon entropy, and one more
Stirling term closes most of the remaining gap.
"""

import math

from logent import approx as ap
from logent import measures as pm
from logent import partitions as pc

for counts in ([50, 50], [99, 1], [10, 20, 70]):
    r = ap.stirling_report(counts)
    print(f"{counts}: exact {r['exact']:.6f}  two-term {r['two_term']:.6f}  "
          f"three-term {r['three_term']:.6f}")

# %%
# The closed form sometimes quoted for the three-term correction is further
# from the exact value than the plain two-term estimate.
r = ap.stirling_report([50, 50])
print("closed form:", round(r["three_term_printed_form"], 6), " error:", round(r["abs_error_printed_form"], 6))

# %%
# A typical message of length N has probability P^N with P = prod p^p, and
# log2(1/P) is the Shannon entropy in bits per letter.
stats = ap.typical_set_stats([0.5, 0.25, 0.25], 100)
print("P =", stats.per_letter_prob, " bits/letter =", stats.bits_per_letter,
      " bits for the message =", stats.message_bits)

# %%
# Thirty-two equiprobable messages need five binary questions. Each binary
# partition splits on one digit and together they make every distinction.
bits = ap.binary_partition_decomposition(5)
top = bits[0]
for b in bits[1:]:
    top = pc.join(top, b)
print(len(bits), "binary partitions; join is discrete:", top == pc.discrete(32))
print("H = log2(32) =", pm.hartley_entropy(32), " h =", pm.logical_entropy_partition(top),
      "=", 1 - 1 / 32, " check:", math.isclose(pm.logical_entropy_partition(top), 1 - 1 / 32))
