"""
Three bits with negative Shannon co-information
===============================================

With ``z = x xor y`` for fair independent bits the three variables are
pairwise independent but jointly dependent. The logical triple mutual
information is the measure of an actual set of pairs and is 0. The Shannon
value obtained from the same formula by the dit-bit transform is -1 bit.
"""

import itertools

from logent import ditbit as db
from logent import joint as ji

j = ji.abramson()
names = "XYZ"

for k in (1, 2, 3):
    for axes in itertools.combinations(range(3), k):
        label = ",".join(names[a] for a in axes)
        print(f"h({label}) = {ji.joint_logical_entropy(j, axes):.4f}   "
              f"H({label}) = {ji.shannon_joint(j, axes):.4f}")

print("m(X,Y,Z) =", ji.mutual_logical_info(j, (0, 1, 2)))
print("I(X,Y,Z) =", ji.shannon_mutual(j, (0, 1, 2)))

# %%
# Pairwise independence without mutual independence.
print("X,Y independent:", ji.is_independent(j, 0, 1))
print("X | Y,Z independent:", ji.is_independent(j, 0, (1, 2)))

# %%
# The triple mutual information as an average form: one term per cell,
# seven signed (1 - p) atoms each. Swapping every atom for log(1/p) gives
# the Shannon value.
form = db.build_avg_form(db.FormKind.MUTUAL3, j)
print(str(form).splitlines()[0])
print("dit value:", db.eval_avg_form(form))
print("bit value:", db.eval_avg_form(db.dit_bit_transform(form)))
