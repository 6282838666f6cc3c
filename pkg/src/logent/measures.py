"""Single-distribution entropies, cross entropies and divergences.

Logical entropy is the product measure of a set of ordered pairs: the
probability that two independent draws land on a distinction. Shannon
counterparts use ``base=2`` (bits) unless told otherwise; ``base="e"`` gives
nats.

Closed forms are used by default. Inside :func:`logent.oracle_checks` every
logical closed form is recomputed from its pair-set materialization and an
:class:`~logent.errors.OracleMismatch` is raised if they disagree by more
than ``1e-12``.
"""
from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from . import partitions as pc
from ._checks import agree, checks_enabled
from .errors import (
    AsymmetricDistance,
    InvariantViolation,
    NonzeroDiagonal,
    SizeMismatch,
)

PROB_TOL = 1e-9


class Dist:
    """Validated finite probability distribution (never renormalized)."""

    __slots__ = ("probs",)

    def __init__(self, probs):
        if isinstance(probs, Dist):
            probs = probs.probs
        p = np.array(probs, dtype=float).ravel()
        if p.size == 0:
            raise InvariantViolation("probs: distribution must have at least one entry")
        if not np.all(np.isfinite(p)) or np.any(p < 0):
            raise InvariantViolation("probs: entries must be finite and non-negative")
        total = math.fsum(p)
        if abs(total - 1.0) > PROB_TOL:
            raise InvariantViolation(f"probs sum: {total!r} is not 1 within {PROB_TOL}")
        p.setflags(write=False)
        self.probs = p

    def __len__(self):
        return self.probs.size

    def __array__(self, dtype=None, copy=None):
        return self.probs if dtype is None else self.probs.astype(dtype)

    def __eq__(self, other):
        return isinstance(other, Dist) and np.array_equal(self.probs, other.probs)

    def __hash__(self):
        return hash(self.probs.tobytes())

    def __repr__(self):
        return f"Dist({self.probs.tolist()})"

    @classmethod
    def uniform(cls, n: int) -> "Dist":
        return cls(np.full(n, 1.0 / n))


def as_dist(d) -> Dist:
    if isinstance(d, Dist):
        return d
    if isinstance(d, pc.Universe):
        return Dist(d.p)
    return Dist(d)


def normalize(weights) -> Dist:
    """Scale non-negative weights to a distribution (the only place this happens)."""
    w = np.asarray(weights, dtype=float).ravel()
    if np.any(w < 0) or not np.all(np.isfinite(w)):
        raise InvariantViolation("weights must be finite and non-negative")
    total = math.fsum(w)
    if total <= 0:
        raise InvariantViolation("weights must have a positive sum")
    return Dist(w / total)


def _pair(p, q):
    p, q = as_dist(p), as_dist(q)
    if len(p) != len(q):
        raise SizeMismatch(f"distributions have {len(p)} and {len(q)} entries")
    return p.probs, q.probs


def _log(x, base):
    if base in ("e", math.e):
        return np.log(x)
    if base == 2:
        return np.log2(x)
    return np.log(x) / math.log(float(base))


def _check_base(base):
    if base in ("e", 2):
        return base
    b = float(base)
    if not b > 0 or b == 1:
        raise ValueError(f"invalid logarithm base {base!r}")
    return b


def pair_mass(p) -> float:
    """``sum_i p_i (T - p_i)`` with ``T = sum p``: the mass of the off-diagonal pairs.

    Equal to ``1 - sum p_i^2`` when ``T = 1``, but exactly zero for a point
    mass even when rounding leaves ``T`` an ulp away from one.
    """
    p = np.asarray(p, dtype=float).ravel()
    total = math.fsum(p)
    return math.fsum(p * (total - p))


def product_measure(d, s) -> float:
    """``sum(p_j p_k for (j, k) in s)``: the brute-force oracle for logical entropy.

    ``s`` is a :class:`~logent.partitions.BinRel` or an ``n x n`` boolean mask.
    """
    p = as_dist(d).probs
    mask = s.matrix if isinstance(s, pc.BinRel) else np.asarray(s, dtype=bool)
    if mask.shape != (p.size, p.size):
        raise SizeMismatch(f"pair set is {mask.shape}, distribution has {p.size} points")
    return math.fsum(np.outer(p, p)[mask])


def logical_entropy_partition(pi: pc.Partition) -> float:
    """``1 - sum p(B)^2`` over the blocks of ``pi``."""
    h = pair_mass(pi.block_probs())
    if checks_enabled():
        agree("h(pi)", h, product_measure(pi.universe.p, pc.ditset(pi)))
    return h


def logical_entropy(d) -> float:
    """Logical entropy ``1 - sum p_i^2`` (the Gini-Simpson index)."""
    p = as_dist(d).probs
    h = pair_mass(p)
    if checks_enabled():
        off = ~np.eye(p.size, dtype=bool)
        agree("h(p)", h, product_measure(p, off))
    return h


def repeat_rate(d) -> float:
    """Probability ``sum p_i^2`` that two independent draws coincide."""
    p = as_dist(d).probs
    return math.fsum(p * p)


def shannon_entropy(d, base=2) -> float:
    """``sum p_i log(1/p_i)`` with ``0 log 0 = 0``."""
    base = _check_base(base)
    p = as_dist(d).probs
    nz = p[p > 0]
    return math.fsum(-nz * _log(nz, base)) + 0.0


def hartley_entropy(n: int, base=2) -> float:
    """Shannon-Hartley entropy ``log n`` of ``n`` equiprobable points."""
    return float(_log(float(n), _check_base(base)))


def cross_entropy_logical(p, q) -> float:
    """Probability ``1 - sum p_i q_i`` that a p-draw and a q-draw differ."""
    p, q = _pair(p, q)
    return 1.0 - math.fsum(p * q)


def _cross_shannon(p, q, base):
    mask = p > 0
    if np.any(q[mask] == 0):
        return math.inf
    return math.fsum(-p[mask] * _log(q[mask], base)) + 0.0


def cross_entropy_shannon(p, q, symmetrized: bool = False, base=2) -> float:
    """``H(p||q) = sum p_i log(1/q_i)``, or its average with ``H(q||p)``.

    Returns ``inf`` when ``p`` puts mass where ``q`` has none.
    """
    base = _check_base(base)
    p, q = _pair(p, q)
    h_pq = _cross_shannon(p, q, base)
    if not symmetrized:
        return h_pq
    return (h_pq + _cross_shannon(q, p, base)) / 2


def _kl(p, q, base):
    mask = p > 0
    if np.any(q[mask] == 0):
        return math.inf
    return max(math.fsum(p[mask] * (_log(p[mask], base) - _log(q[mask], base))), 0.0)


def kl_divergence(p, q, symmetrized: bool = False, base=2) -> float:
    """Kullback-Leibler divergence ``sum p_i log(p_i/q_i)``; ``inf`` on support violation."""
    base = _check_base(base)
    p, q = _pair(p, q)
    d_pq = _kl(p, q, base)
    if not symmetrized:
        return d_pq
    return (d_pq + _kl(q, p, base)) / 2


def logical_divergence(p, q) -> float:
    """Half the squared Euclidean distance between ``p`` and ``q``."""
    p, q = _pair(p, q)
    d = 0.5 * math.fsum((p - q) ** 2)
    if checks_enabled():
        jensen = cross_entropy_logical(p, q) - (logical_entropy(p) + logical_entropy(q)) / 2
        agree("d(p||q) Jensen difference", d, jensen)
    return d


class MixingChain(NamedTuple):
    cross: float  # h(p||q)
    mixture: float  # h((p+q)/2)
    average: float  # (h(p)+h(q))/2


def mixing_check(p, q) -> MixingChain:
    """Return ``h(p||q) >= h((p+q)/2) >= (h(p)+h(q))/2``."""
    p, q = _pair(p, q)
    return MixingChain(
        cross_entropy_logical(p, q),
        logical_entropy((p + q) / 2),
        (logical_entropy(p) + logical_entropy(q)) / 2,
    )


def numbers_equivalent_entropy(d) -> float:
    """Multiplicative average ``prod (1/p_i)^p_i``: the effective number of equiprobable outcomes.

    Zero entries contribute a factor of one.
    """
    p = as_dist(d).probs
    nz = p[p > 0]
    # each factor as exp(-p ln p) so that tiny p cannot overflow 1/p
    return float(np.prod(np.exp(-nz * np.log(nz))))


def logical_distances(n: int) -> np.ndarray:
    """The 0/1 metric ``1 - delta_ij``."""
    return 1.0 - np.eye(n)


def rao_quadratic_entropy(d, distances) -> float:
    """Rao's quadratic entropy ``sum_{i != j} d_ij p_i p_j``."""
    p = as_dist(d).probs
    dm = np.asarray(distances, dtype=float)
    if dm.shape != (p.size, p.size):
        raise SizeMismatch(f"distance matrix is {dm.shape}, distribution has {p.size} points")
    if np.any(dm.diagonal() != 0):
        raise NonzeroDiagonal("distance matrix must have a zero diagonal")
    if not np.array_equal(dm, dm.T):
        raise AsymmetricDistance("distance matrix must be symmetric")
    return math.fsum((dm * np.outer(p, p)).ravel())


def rescaled_logical_entropy(pi: pc.Partition) -> float:
    """``n/(n-1) h(pi)``, which is 1 for the discrete partition under uniform probabilities."""
    n = pi.n
    if n == 1:
        return 0.0
    return n / (n - 1) * logical_entropy_partition(pi)
