"""Seeded random inputs for property checks.

Distributions are normalized exponentials (a flat Dirichlet draw). ``sparsity``
zeroes entries at random so support-restricted cases get exercised; at least
one entry always survives.
"""
from __future__ import annotations

import numpy as np

from . import partitions as pc
from .joint import JointDist
from .measures import Dist


def rng(seed=None) -> np.random.Generator:
    return np.random.default_rng(seed)


def _simplex(gen, size, sparsity):
    w = gen.exponential(size=size)
    if sparsity:
        keep = gen.random(size) >= sparsity
        if not keep.any():
            keep.flat[gen.integers(keep.size)] = True
        w = np.where(keep, w, 0.0)
    return w / w.sum()


def random_dist(gen, n: int, sparsity: float = 0.0) -> Dist:
    return Dist(_simplex(gen, n, sparsity))


def random_joint(gen, axes, sparsity: float = 0.0) -> JointDist:
    return JointDist(_simplex(gen, tuple(axes), sparsity))


def random_universe(gen, n: int, sparsity: float = 0.0) -> pc.Universe:
    return pc.Universe(n, tuple(_simplex(gen, n, sparsity).tolist()))


def random_partition(gen, universe) -> pc.Partition:
    universe = pc._as_universe(universe)
    k = int(gen.integers(1, universe.size + 1))
    return pc.from_labels(universe, gen.integers(0, k, size=universe.size).tolist())
