"""
Partitions, distinctions and the failure of excluded middle
===========================================================

A partition is known here by its distinctions: the ordered pairs of points
that land in different blocks. Refinement becomes inclusion of these dit
sets, and the partition operations become "interior of the subset operation".
"""

import itertools

from logent import formulas as lf
from logent import measures as pm
from logent import partitions as pc

# two 2-block partitions of a 4-point set
rows = pc.make_partition(4, [[0, 1], [2, 3]])
cols = pc.make_partition(4, [[0, 2], [1, 3]])
print("rows:", rows, " cols:", cols)
print("dit(rows):", pc.ditset(rows).sorted_pairs())

# %%
# Join keeps every distinction either partition makes, so here it reaches
# the discrete partition. Meet merges overlapping blocks until nothing is left.
print("join:", pc.join(rows, cols))
print("meet:", pc.meet(rows, cols))
print("rows => cols:", pc.implication(rows, cols))

# %%
# Refinement is ditset inclusion, checked over all 15 x 15 pairs at n = 4.
parts = lf.enumerate_partitions(4)
agree = all(pc.refines(s, p) == (pc.ditset(s) <= pc.ditset(p))
            for s, p in itertools.product(parts, repeat=2))
print(f"{len(parts)} partitions of a 4-set; refinement == dit inclusion: {agree}")

# %%
# A relation that is not a ditset has an interior: the largest ditset inside
# it. Dropping one symmetric pair from the discrete ditset on 3 points merges
# exactly that pair.
s = pc.ditset(pc.discrete(3)) - pc.BinRel.from_pairs(3, [(0, 1), (1, 0)])
print("interior:", pc.partition_of_relation(pc.interior(s)))

# %%
# Logical entropy is the probability that two independent draws are
# distinguished, i.e. the normalized number of dits.
print("h(rows) =", pm.logical_entropy_partition(rows), "=", len(pc.ditset(rows)), "/ 16")

# %%
# "x or not x" holds for every subset but not for every partition.
report = lf.check_validity("x | (x -> 0)", 3, lf.Mode.PARTITION)
print("partition-valid:", report.valid, " first counterexample:", report.to_dict()["counterexample"])
print("subset-valid:", lf.check_validity("x | (x -> 0)", 3, lf.Mode.SUBSET).valid)
