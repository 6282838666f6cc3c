"""Partitions on finite universes and the partition algebra.

A partition is stored in canonical form (blocks ordered by least element,
indices ascending inside each block), so structural equality is partition
equality. Binary relations over ``U x U`` are dense boolean matrices.

The lattice convention follows the refinement order by distinctions: the
discrete partition (all singletons) is the top ``1`` and the indiscrete
partition ``{U}`` is the bottom ``0``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    CapExceeded,
    CoverageError,
    EmptyBlockError,
    InvariantViolation,
    OverlapError,
    UniverseMismatch,
)

MAX_UNIVERSE = 4096
PROB_TOL = 1e-9


@dataclass(frozen=True)
class Universe:
    """Finite labelled sample space with point probabilities.

    Parameters
    ----------
    size : int
        Number of points ``n``.
    probs : sequence of float or Fraction, optional
        Point probabilities; uniform when omitted. Exact rationals are summed
        exactly, floats must sum to one within ``1e-9``.
    labels : sequence of str, optional
        Pairwise distinct point names.
    """

    size: int
    probs: tuple = None
    labels: tuple | None = None
    _p: np.ndarray = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        n = self.size
        if not isinstance(n, (int, np.integer)) or n < 1:
            raise InvariantViolation(f"size: must be a positive integer, got {n!r}")
        if n > MAX_UNIVERSE:
            raise CapExceeded(f"size: {n} exceeds the universe cap {MAX_UNIVERSE}")
        object.__setattr__(self, "size", int(n))

        probs = self.probs
        if probs is None:
            probs = (Fraction(1, n),) * n
        probs = tuple(probs)
        if len(probs) != n:
            raise InvariantViolation(f"probs: expected {n} entries, got {len(probs)}")
        if any(p < 0 for p in probs):
            raise InvariantViolation("probs: entries must be non-negative")
        if all(isinstance(p, Rational) for p in probs):
            if sum(Fraction(p) for p in probs) != 1:
                raise InvariantViolation("probs sum: exact probabilities must sum to 1")
        elif abs(math.fsum(float(p) for p in probs) - 1.0) > PROB_TOL:
            raise InvariantViolation(
                f"probs sum: {math.fsum(float(p) for p in probs)!r} is not 1 within {PROB_TOL}"
            )
        object.__setattr__(self, "probs", tuple(float(p) for p in probs))

        if self.labels is not None:
            labels = tuple(str(s) for s in self.labels)
            if len(labels) != n:
                raise InvariantViolation(f"labels: expected {n} entries, got {len(labels)}")
            if len(set(labels)) != n:
                raise InvariantViolation("labels: must be pairwise distinct")
            object.__setattr__(self, "labels", labels)

        p = np.array(self.probs, dtype=float)
        p.setflags(write=False)
        object.__setattr__(self, "_p", p)

    @classmethod
    def uniform(cls, n: int, labels=None) -> "Universe":
        return cls(n, None, labels)

    @property
    def p(self) -> np.ndarray:
        """Point probabilities as a read-only float array."""
        return self._p

    def __len__(self):
        return self.size


def _as_universe(universe) -> Universe:
    if isinstance(universe, Universe):
        return universe
    return Universe.uniform(universe)


@dataclass(frozen=True)
class Partition:
    """Disjoint, exhaustive blocks over a :class:`Universe` (canonical form).

    Build with :func:`make_partition` rather than calling the constructor.
    """

    universe: Universe
    blocks: tuple

    @property
    def n(self) -> int:
        return self.universe.size

    @property
    def labels(self) -> np.ndarray:
        """Block index of every point (restricted-growth labelling)."""
        lab = np.empty(self.n, dtype=np.intp)
        for b, block in enumerate(self.blocks):
            lab[list(block)] = b
        return lab

    def block_probs(self) -> np.ndarray:
        p = self.universe.p
        return np.array([math.fsum(p[list(b)]) for b in self.blocks])

    def is_discrete(self) -> bool:
        return len(self.blocks) == self.n

    def is_indiscrete(self) -> bool:
        return len(self.blocks) == 1

    def __len__(self):
        return len(self.blocks)

    def __str__(self):
        return "{" + ", ".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) + "}"


def make_partition(universe, raw_blocks: Iterable[Iterable[int]]) -> Partition:
    """Validate raw blocks and return the canonical :class:`Partition`.

    ``universe`` may be a :class:`Universe` or an integer ``n`` (uniform).

    Raises
    ------
    EmptyBlockError, OverlapError, CoverageError
        When the blocks are not a partition of ``{0..n-1}``.
    """
    universe = _as_universe(universe)
    n = universe.size
    owner = [-1] * n
    blocks = []
    for b, raw in enumerate(raw_blocks):
        block = sorted(int(i) for i in raw)
        if not block:
            raise EmptyBlockError(f"block {b} is empty")
        for i in block:
            if not 0 <= i < n:
                raise InvariantViolation(f"index {i} out of range for n={n}")
            if owner[i] != -1:
                raise OverlapError(f"index {i} appears in blocks {owner[i]} and {b}")
            owner[i] = b
        blocks.append(tuple(block))
    missing = [i for i in range(n) if owner[i] == -1]
    if missing:
        raise CoverageError(f"indices {missing} are in no block")
    blocks.sort(key=lambda blk: blk[0])
    return Partition(universe, tuple(blocks))


def from_labels(universe, labels: Sequence[int]) -> Partition:
    """Partition whose blocks are the level sets of ``labels``."""
    universe = _as_universe(universe)
    if len(labels) != universe.size:
        raise InvariantViolation("labels: length must equal the universe size")
    groups: dict = {}
    for i, lab in enumerate(labels):
        groups.setdefault(lab, []).append(i)
    return make_partition(universe, groups.values())


def discrete(universe) -> Partition:
    """The top partition ``1``: all singletons."""
    universe = _as_universe(universe)
    return Partition(universe, tuple((i,) for i in range(universe.size)))


def indiscrete(universe) -> Partition:
    """The bottom partition ``0``: a single block."""
    universe = _as_universe(universe)
    return Partition(universe, (tuple(range(universe.size)),))


class BinRel:
    """Binary relation on a universe, stored as a read-only ``n x n`` bool matrix."""

    __slots__ = ("universe", "matrix")

    def __init__(self, universe, matrix):
        universe = _as_universe(universe)
        m = np.array(matrix, dtype=bool)
        n = universe.size
        if m.shape != (n, n):
            raise InvariantViolation(f"relation matrix must be {n}x{n}, got {m.shape}")
        m.setflags(write=False)
        self.universe = universe
        self.matrix = m

    @classmethod
    def from_pairs(cls, universe, pairs) -> "BinRel":
        universe = _as_universe(universe)
        n = universe.size
        m = np.zeros((n, n), dtype=bool)
        for j, k in pairs:
            if not (0 <= j < n and 0 <= k < n):
                raise InvariantViolation(f"pair {(j, k)} out of range for n={n}")
            m[j, k] = True
        return cls(universe, m)

    @classmethod
    def empty(cls, universe) -> "BinRel":
        universe = _as_universe(universe)
        return cls(universe, np.zeros((universe.size,) * 2, dtype=bool))

    @classmethod
    def full(cls, universe) -> "BinRel":
        universe = _as_universe(universe)
        return cls(universe, np.ones((universe.size,) * 2, dtype=bool))

    @classmethod
    def diagonal(cls, universe) -> "BinRel":
        universe = _as_universe(universe)
        return cls(universe, np.eye(universe.size, dtype=bool))

    @property
    def n(self) -> int:
        return self.universe.size

    @property
    def pairs(self) -> frozenset:
        return frozenset(zip(*map(lambda a: a.tolist(), np.nonzero(self.matrix))))

    def sorted_pairs(self) -> list:
        return [tuple(x) for x in np.argwhere(self.matrix).tolist()]

    def _check(self, other):
        if not isinstance(other, BinRel):
            return NotImplemented
        if other.universe != self.universe:
            raise UniverseMismatch("relations live on different universes")
        return other

    def __or__(self, other):
        other = self._check(other)
        return BinRel(self.universe, self.matrix | other.matrix)

    def __and__(self, other):
        other = self._check(other)
        return BinRel(self.universe, self.matrix & other.matrix)

    def __sub__(self, other):
        other = self._check(other)
        return BinRel(self.universe, self.matrix & ~other.matrix)

    def __invert__(self):
        return BinRel(self.universe, ~self.matrix)

    def __le__(self, other):
        other = self._check(other)
        return bool(np.all(other.matrix[self.matrix]))

    def __eq__(self, other):
        if not isinstance(other, BinRel):
            return NotImplemented
        return self.universe == other.universe and np.array_equal(self.matrix, other.matrix)

    def __hash__(self):
        return hash((self.universe, self.matrix.tobytes()))

    def __len__(self):
        return int(self.matrix.sum())

    def __contains__(self, pair):
        j, k = pair
        return bool(self.matrix[j, k])

    def __iter__(self):
        return iter(self.sorted_pairs())

    def __bool__(self):
        return bool(self.matrix.any())

    def __repr__(self):
        return f"BinRel(n={self.n}, pairs={self.sorted_pairs()})"


def _same_universe(a: Partition, b: Partition) -> Universe:
    if a.universe != b.universe:
        raise UniverseMismatch("partitions live on different universes")
    return a.universe


def ditset(pi: Partition) -> BinRel:
    """Ordered pairs whose elements lie in different blocks of ``pi``."""
    lab = pi.labels
    return BinRel(pi.universe, lab[:, None] != lab[None, :])


def inditset(pi: Partition) -> BinRel:
    """The equivalence relation of ``pi``: the union of ``B x B`` over blocks."""
    lab = pi.labels
    return BinRel(pi.universe, lab[:, None] == lab[None, :])


def refines(sigma: Partition, pi: Partition) -> bool:
    """True iff ``sigma <= pi``: every block of ``pi`` sits inside a block of ``sigma``.

    Equivalently ``dit(sigma)`` is a subset of ``dit(pi)``.
    """
    _same_universe(sigma, pi)
    lab = sigma.labels
    return all(len({lab[i] for i in block}) == 1 for block in pi.blocks)


def join(pi: Partition, sigma: Partition) -> Partition:
    """Partition whose blocks are the non-empty intersections ``B & C``."""
    u = _same_universe(pi, sigma)
    a, b = pi.labels, sigma.labels
    return from_labels(u, list(zip(a.tolist(), b.tolist())))


class UnionFind:
    """Disjoint sets over ``0..n-1`` with path compression and union by size."""

    def __init__(self, n):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]
        return True


def meet(pi: Partition, sigma: Partition) -> Partition:
    """Blocks of the equivalence relation generated by both partitions' blocks."""
    u = _same_universe(pi, sigma)
    uf = UnionFind(u.size)
    for part in (pi, sigma):
        for block in part.blocks:
            for i in block[1:]:
                uf.union(block[0], i)
    return from_labels(u, [uf.find(i) for i in range(u.size)])


def implication(sigma: Partition, pi: Partition) -> Partition:
    """The partition ``sigma => pi``.

    A block of ``pi`` contained in some block of ``sigma`` is broken into
    singletons; every other block of ``pi`` is kept whole.
    """
    u = _same_universe(sigma, pi)
    lab = sigma.labels
    blocks = []
    for block in pi.blocks:
        if len({lab[i] for i in block}) == 1:
            blocks.extend((i,) for i in block)
        else:
            blocks.append(block)
    return make_partition(u, blocks)


def rst_closure(r: BinRel) -> BinRel:
    """Least equivalence relation containing ``r`` (Warshall closure)."""
    m = r.matrix | r.matrix.T | np.eye(r.n, dtype=bool)
    for k in range(r.n):
        m |= m[:, k, None] & m[None, k, :]
    return BinRel(r.universe, m)


def interior(s: BinRel) -> BinRel:
    """Largest partition relation contained in ``s``."""
    return ~rst_closure(~s)


def is_partition_relation(r: BinRel) -> bool:
    """Irreflexive, symmetric and anti-transitive, i.e. the ditset of some partition."""
    m = r.matrix
    if m.diagonal().any() or not np.array_equal(m, m.T):
        return False
    # anti-transitivity of m is transitivity of its complement
    q = ~m
    composed = (q.astype(np.int32) @ q.astype(np.int32)) > 0
    return bool(np.all(q[composed]))


def partition_of_relation(r: BinRel) -> Partition:
    """The partition whose ditset is ``interior(r)``."""
    eq = rst_closure(~r).matrix
    return from_labels(r.universe, [int(np.argmax(row)) for row in eq])


def is_equivalence_relation(r: BinRel) -> bool:
    m = r.matrix
    if not m.diagonal().all() or not np.array_equal(m, m.T):
        return False
    composed = (m.astype(np.int32) @ m.astype(np.int32)) > 0
    return bool(np.all(m[composed]))
