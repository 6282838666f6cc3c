"""Joint distributions, infosets and compound entropies.

An infoset is a set of ordered pairs of cells ``(x, x')`` of a product space
``X_1 x ... x X_n``, described symbolically by per-axis conditions
(``differs(i)``: ``x_i != x'_i``, ``equals(i)``: ``x_i == x'_i``) combined with
``|``, ``&``, ``-`` and ``~``. Its logical measure is the product measure
``sum p(x) p(x')`` over its pairs; every compound logical entropy is the
measure of one such set:

=====================  =================================
``h(I)``               ``differs_any(I)``
``h(I | J)``           ``differs_any(I) - differs_any(J)``
``m(I)``               ``differs_all(I)``
``m(I | J)``           ``differs_all(I) & equals_all(J)``
=====================  =================================

Axes are referred to by integer index. Shannon quantities default to bits.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import partitions as pc
from ._checks import agree, checks_enabled
from .errors import (
    AxisMismatch,
    CapExceeded,
    EmptyAxisSet,
    InvariantViolation,
    OverlappingAxisSets,
)
from .measures import _check_base, _log, as_dist, pair_mass

PROB_TOL = 1e-9
PAIR_CAP = 10**8
INDEPENDENCE_TOL = 1e-12
_DEFAULT_NAMES = "XYZW"


class JointDist:
    """Probability table over a product of finite axes.

    Parameters
    ----------
    table : array_like
        Non-negative entries summing to one; its shape gives the axis sizes.
    labels : list of list of str, optional
        Value labels per axis.
    names : list of str, optional
        Axis names, used only for display. Defaults to ``X, Y, Z, W``.
    """

    __slots__ = ("table", "labels", "names")

    def __init__(self, table, labels=None, names=None):
        t = np.array(table, dtype=float)
        if t.ndim == 0:
            raise InvariantViolation("table: needs at least one axis")
        if not np.all(np.isfinite(t)) or np.any(t < 0):
            raise InvariantViolation("table: entries must be finite and non-negative")
        total = math.fsum(t.ravel())
        if abs(total - 1.0) > PROB_TOL:
            raise InvariantViolation(f"table: total {total!r} is not 1 within {PROB_TOL}")
        t.setflags(write=False)
        self.table = t
        if labels is not None:
            labels = [[str(v) for v in axis] for axis in labels]
            if [len(a) for a in labels] != list(t.shape):
                raise InvariantViolation("labels: must give one label per value on every axis")
        self.labels = labels
        if names is None:
            names = list(_DEFAULT_NAMES[: t.ndim]) if t.ndim <= 4 else [f"X{i}" for i in range(t.ndim)]
        if len(names) != t.ndim:
            raise InvariantViolation("names: one name per axis")
        self.names = list(names)

    @property
    def axes(self) -> tuple:
        return self.table.shape

    @property
    def ndim(self) -> int:
        return self.table.ndim

    @property
    def cells(self) -> int:
        return self.table.size

    def flat(self) -> np.ndarray:
        return self.table.ravel()

    def coords(self) -> np.ndarray:
        """``(ndim, cells)`` array of the axis values of every flattened cell."""
        return np.indices(self.axes).reshape(self.ndim, -1)

    def universe(self) -> pc.Universe:
        """The cells as a :class:`~logent.partitions.Universe`."""
        labels = [",".join(map(str, c)) for c in self.coords().T.tolist()]
        return pc.Universe(self.cells, tuple(self.flat().tolist()), labels)

    def __repr__(self):
        return f"JointDist(axes={self.axes})"


def _axis_set(j: JointDist, axes, allow_empty=False) -> tuple:
    if axes is None:
        axes = ()
    elif isinstance(axes, (int, np.integer)):
        axes = (axes,)
    out = tuple(sorted({int(a) for a in axes}))
    if not out and not allow_empty:
        raise EmptyAxisSet("axis set must be non-empty")
    for a in out:
        if not 0 <= a < j.ndim:
            raise AxisMismatch(f"axis {a} does not exist in a {j.ndim}-axis joint")
    return out


def _disjoint(I, J):
    if set(I) & set(J):
        raise OverlappingAxisSets(f"axis sets {I} and {J} overlap")


def marginal_table(j: JointDist, axes) -> np.ndarray:
    axes = _axis_set(j, axes)
    drop = tuple(a for a in range(j.ndim) if a not in axes)
    return j.table.sum(axis=drop) if drop else j.table


def marginal(j: JointDist, axes) -> JointDist:
    """Marginal on the given axes (kept in ascending order)."""
    axes = _axis_set(j, axes)
    t = marginal_table(j, axes)
    labels = [j.labels[a] for a in axes] if j.labels else None
    return JointDist(t, labels, [j.names[a] for a in axes])


def product_joint(*dists) -> JointDist:
    """Joint of independent marginals."""
    t = np.array(1.0)
    for d in dists:
        t = np.multiply.outer(t, as_dist(d).probs)
    return JointDist(t)


def abramson() -> JointDist:
    """Three pairwise-independent fair bits with ``z = x xor y``."""
    t = np.zeros((2, 2, 2))
    for cell in [(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)]:
        t[cell] = 0.25
    return JointDist(t, [["0", "1"]] * 3, ["X", "Y", "Z"])


# ---------------------------------------------------------------- infosets


class InfoSet:
    """Symbolic subset of ``(X_1 x ... x X_n)^2``; materialized on demand."""

    def __or__(self, other):
        return Union(self, other)

    def __and__(self, other):
        return Intersect(self, other)

    def __sub__(self, other):
        return Difference(self, other)

    def __invert__(self):
        return Complement(self)

    def axes_used(self) -> set:
        raise NotImplementedError

    def _mask(self, coords) -> np.ndarray:
        raise NotImplementedError

    def materialize(self, j: JointDist) -> np.ndarray:
        """Boolean ``cells x cells`` matrix of the pairs in the set."""
        if j.cells**2 > PAIR_CAP:
            raise CapExceeded(f"{j.cells**2} pair cells exceed the cap {PAIR_CAP}")
        bad = [a for a in self.axes_used() if not 0 <= a < j.ndim]
        if bad:
            raise AxisMismatch(f"infoset references axes {bad} absent from a {j.ndim}-axis joint")
        m = self._mask(j.coords())
        if m.ndim == 0:
            m = np.full((j.cells, j.cells), bool(m))
        return m


@dataclass(frozen=True)
class Everything(InfoSet):
    def axes_used(self):
        return set()

    def _mask(self, coords):
        return np.array(True)

    def __str__(self):
        return "ALL"


@dataclass(frozen=True)
class Nothing(InfoSet):
    def axes_used(self):
        return set()

    def _mask(self, coords):
        return np.array(False)

    def __str__(self):
        return "NONE"


@dataclass(frozen=True)
class Differs(InfoSet):
    axis: int

    def axes_used(self):
        return {self.axis}

    def _mask(self, coords):
        c = coords[self.axis]
        return c[:, None] != c[None, :]

    def __str__(self):
        return f"S{self.axis}"


@dataclass(frozen=True)
class Equals(InfoSet):
    axis: int

    def axes_used(self):
        return {self.axis}

    def _mask(self, coords):
        c = coords[self.axis]
        return c[:, None] == c[None, :]

    def __str__(self):
        return f"~S{self.axis}"


@dataclass(frozen=True)
class Union(InfoSet):
    a: InfoSet
    b: InfoSet

    def axes_used(self):
        return self.a.axes_used() | self.b.axes_used()

    def _mask(self, coords):
        return self.a._mask(coords) | self.b._mask(coords)

    def __str__(self):
        return f"({self.a} | {self.b})"


@dataclass(frozen=True)
class Intersect(InfoSet):
    a: InfoSet
    b: InfoSet

    def axes_used(self):
        return self.a.axes_used() | self.b.axes_used()

    def _mask(self, coords):
        return self.a._mask(coords) & self.b._mask(coords)

    def __str__(self):
        return f"({self.a} & {self.b})"


@dataclass(frozen=True)
class Difference(InfoSet):
    a: InfoSet
    b: InfoSet

    def axes_used(self):
        return self.a.axes_used() | self.b.axes_used()

    def _mask(self, coords):
        return self.a._mask(coords) & ~self.b._mask(coords)

    def __str__(self):
        return f"({self.a} - {self.b})"


@dataclass(frozen=True)
class Complement(InfoSet):
    a: InfoSet

    def axes_used(self):
        return self.a.axes_used()

    def _mask(self, coords):
        return ~self.a._mask(coords)

    def __str__(self):
        return f"~{self.a}"


def differs(axis: int) -> InfoSet:
    return Differs(int(axis))


def equals(axis: int) -> InfoSet:
    return Equals(int(axis))


def differs_any(axes: Iterable[int]) -> InfoSet:
    """Pairs differing on at least one axis: ``S_{vI}``."""
    out: InfoSet = Nothing()
    for a in sorted(axes):
        out = Differs(a) if isinstance(out, Nothing) else out | Differs(a)
    return out


def differs_all(axes: Iterable[int]) -> InfoSet:
    """Pairs differing on every axis: ``S_{^I}``."""
    out: InfoSet = Everything()
    for a in sorted(axes):
        out = Differs(a) if isinstance(out, Everything) else out & Differs(a)
    return out


def equals_all(axes: Iterable[int]) -> InfoSet:
    out: InfoSet = Everything()
    for a in sorted(axes):
        out = Equals(a) if isinstance(out, Everything) else out & Equals(a)
    return out


def measure_infoset(j: JointDist, s: InfoSet) -> float:
    """Product measure of an infoset, by materializing every pair of cells."""
    p = j.flat()
    m = s.materialize(j)
    return math.fsum(np.outer(p, p)[m])


# ------------------------------------------------------ logical entropies


def _h(j, axes) -> float:
    return pair_mass(marginal_table(j, axes))


def joint_logical_entropy(j: JointDist, I) -> float:
    """``h(I) = 1 - sum p_I(x)^2``, the measure of pairs differing somewhere on ``I``."""
    I = _axis_set(j, I)
    h = _h(j, I)
    if checks_enabled():
        agree(f"h{I}", h, measure_infoset(j, differs_any(I)))
    return h


def conditional_logical_entropy(j: JointDist, I, J) -> float:
    """``h(I | J) = h(I u J) - h(J)``: differ somewhere on ``I``, agree on all of ``J``."""
    I, J = _axis_set(j, I), _axis_set(j, J)
    _disjoint(I, J)
    h = _h(j, I + J) - _h(j, J)
    if checks_enabled():
        agree(f"h{I}|{J}", h, measure_infoset(j, differs_any(I) - differs_any(J)))
    return h


def _nonempty_subsets(axes):
    for r in range(1, len(axes) + 1):
        yield from itertools.combinations(axes, r)


def mutual_logical_info(j: JointDist, I, J=None) -> float:
    """``m(I)`` or ``m(I | J)``: pairs differing on every axis of ``I`` (and agreeing on ``J``).

    Computed by inclusion-exclusion over the joint entropies of subsets of ``I``.
    """
    I = _axis_set(j, I)
    J = _axis_set(j, J, allow_empty=True)
    _disjoint(I, J)
    hJ = _h(j, J) if J else 0.0
    m = math.fsum(
        (-1) ** (len(K) + 1) * (_h(j, tuple(sorted(K + J))) - hJ) for K in _nonempty_subsets(I)
    )
    if checks_enabled():
        s = differs_all(I) & equals_all(J) if J else differs_all(I)
        agree(f"m{I}|{J}", m, measure_infoset(j, s))
    return m


# ------------------------------------------------------ Shannon entropies


def _H(j, axes, base) -> float:
    t = marginal_table(j, axes).ravel()
    nz = t[t > 0]
    return math.fsum(-nz * _log(nz, base)) + 0.0


def shannon_joint(j: JointDist, I, base=2) -> float:
    """``H(I) = sum p_I(x) log(1/p_I(x))``."""
    return _H(j, _axis_set(j, I), _check_base(base))


def _aligned(j, outer, inner):
    """Marginal on ``inner`` broadcast against the marginal table on ``outer``."""
    t = marginal_table(j, inner)
    shape = [j.axes[a] if a in inner else 1 for a in outer]
    return np.broadcast_to(t.reshape(shape), [j.axes[a] for a in outer])


def shannon_conditional(j: JointDist, I, J, base=2) -> float:
    """``H(I | J) = sum p(x, y) log(p(y) / p(x, y))``."""
    base = _check_base(base)
    I, J = _axis_set(j, I), _axis_set(j, J)
    _disjoint(I, J)
    K = tuple(sorted(I + J))
    pxy = marginal_table(j, K)
    py = _aligned(j, K, J)
    mask = pxy > 0
    return math.fsum((pxy[mask] * (_log(py[mask], base) - _log(pxy[mask], base))).ravel()) + 0.0


def shannon_mutual(j: JointDist, I, J=None, base=2) -> float:
    """Shannon (co-)information of the axes in ``I``, optionally conditioned on ``J``.

    Evaluated cell by cell as ``sum p(x) sum_K (-1)^(|K|+1) log(1/p_K(x))`` over
    the non-empty ``K`` subsets of ``I`` (with ``p_K`` replaced by ``p_{K|J}``
    under conditioning). For two axes this is ``sum p(x,y) log(p(x,y)/(p(x)p(y)))``.
    For three or more axes it can be negative.
    """
    base = _check_base(base)
    I = _axis_set(j, I)
    J = _axis_set(j, J, allow_empty=True)
    _disjoint(I, J)
    outer = tuple(sorted(I + J))
    p = marginal_table(j, outer)
    mask = p > 0
    pj = _aligned(j, outer, J)[mask] if J else None
    acc = []
    for K in _nonempty_subsets(I):
        pk = _aligned(j, outer, tuple(sorted(K + J)))[mask]
        cond = pk / pj if J else pk
        acc.append((-1) ** (len(K) + 1) * -_log(cond, base))
    total = np.sum(acc, axis=0) if acc else np.zeros(mask.sum())
    return math.fsum((p[mask] * total).ravel()) + 0.0


# ------------------------------------------------------ independence, ditsets


def is_independent(j: JointDist, left=None, right=None, tol=INDEPENDENCE_TOL) -> bool:
    """Whether ``p(x, y) = p(x) p(y)`` for the bipartition ``left | right``.

    ``left`` and ``right`` may cover only some axes (the rest are marginalized
    out). With no arguments, tests mutual independence of all axes.
    """
    if left is None and right is None:
        return all(independence_report(j, tol).values())
    L, R = _axis_set(j, left), _axis_set(j, right)
    _disjoint(L, R)
    outer = tuple(sorted(L + R))
    p = marginal_table(j, outer)
    return bool(np.all(np.abs(p - _aligned(j, outer, L) * _aligned(j, outer, R)) <= tol))


def independence_report(j: JointDist, tol=INDEPENDENCE_TOL) -> dict:
    """``{(left, right): bool}`` for every bipartition of the full axis set."""
    axes = tuple(range(j.ndim))
    out = {}
    for r in range(1, j.ndim):
        for L in itertools.combinations(axes, r):
            if 0 not in L:
                continue
            R = tuple(a for a in axes if a not in L)
            out[(L, R)] = is_independent(j, L, R, tol)
    return out


def variable_ditset(j: JointDist, axis: int) -> pc.BinRel:
    """Support-restricted ditset: pairs of positive cells differing on ``axis``."""
    (axis,) = _axis_set(j, axis)
    p = j.flat()
    support = p > 0
    m = Differs(axis).materialize(j) & support[:, None] & support[None, :]
    return pc.BinRel(j.universe(), m)


@dataclass(frozen=True)
class IntersectionRecord:
    axes: tuple
    h_first: float
    h_second: float
    mutual: float
    premise: bool
    holds: bool
    witness: tuple | None


def ditsets_intersect_check(j: JointDist) -> list[IntersectionRecord]:
    """Check ``h(X) h(Y) > 0  =>  m(X, Y) > 0`` for every pair of axes.

    When both support-restricted ditsets are non-empty, the witness is the first
    pair of cells (in flattened order) distinguished on both axes.
    """
    coords = j.coords().T
    records = []
    for a, b in itertools.combinations(range(j.ndim), 2):
        ha = joint_logical_entropy(j, a)
        hb = joint_logical_entropy(j, b)
        m = mutual_logical_info(j, (a, b))
        both = (variable_ditset(j, a).matrix & variable_ditset(j, b).matrix)
        hits = np.argwhere(both)
        witness = None
        if hits.size:
            s, t = hits[0]
            witness = (tuple(coords[s].tolist()), tuple(coords[t].tolist()))
        premise = ha * hb > 0
        holds = (not premise) or (m > 0 and witness is not None)
        records.append(IntersectionRecord((a, b), ha, hb, m, premise, holds, witness))
    return records
