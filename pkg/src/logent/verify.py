"""Seeded identity suite: closed forms against oracles, plus the Venn identities.

``run_suite(seed, cases)`` draws ``cases`` random inputs per family and returns
one :class:`IdentityResult` per identity, carrying the worst discrepancy seen.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import ditbit as db
from . import joint as ji
from . import measures as pm
from . import partitions as pc
from . import sampling

TOL = 1e-12


@dataclass
class IdentityResult:
    name: str
    lhs: float
    rhs: float
    diff: float
    passed: bool
    cases: int

    def as_dict(self):
        return {"name": self.name, "lhs": self.lhs, "rhs": self.rhs, "diff": self.diff,
                "pass": self.passed, "cases": self.cases}


class _Tracker:
    def __init__(self, tol):
        self.tol = tol
        self.results: dict[str, IdentityResult] = {}

    def eq(self, name, lhs, rhs):
        diff = abs(lhs - rhs)
        r = self.results.get(name)
        if r is None:
            r = self.results[name] = IdentityResult(name, lhs, rhs, diff, True, 0)
        r.cases += 1
        if diff > r.diff or r.cases == 1:
            r.lhs, r.rhs, r.diff = lhs, rhs, diff
        r.passed = r.passed and diff <= self.tol

    def holds(self, name, flag):
        self.eq(name, float(bool(flag)), 1.0)


def _joint_axes(gen):
    k = int(gen.integers(2, 4))
    return tuple(int(a) for a in gen.integers(2, 5, size=k))


def check_partition_case(t: _Tracker, gen):
    u = sampling.random_universe(gen, int(gen.integers(1, 9)), sparsity=0.2)
    pi = sampling.random_partition(gen, u)
    t.eq("h(pi) = mu(dit(pi))", pm.logical_entropy_partition(pi), pm.product_measure(u, pc.ditset(pi)))
    p = pm.Dist(u.p)
    off = ~np.eye(u.size, dtype=bool)
    t.eq("h(p) = mu(U^2 - diag)", pm.logical_entropy(p), pm.product_measure(p, off))
    t.eq("h(p) = 1 - repeat rate", pm.logical_entropy(p), 1 - pm.repeat_rate(p))


def check_pair_case(t: _Tracker, gen):
    n = int(gen.integers(2, 9))
    p = sampling.random_dist(gen, n, sparsity=0.2)
    q = sampling.random_dist(gen, n)
    jensen = pm.cross_entropy_logical(p, q) - (pm.logical_entropy(p) + pm.logical_entropy(q)) / 2
    t.eq("d(p||q) = h(p||q) - (h(p)+h(q))/2", pm.logical_divergence(p, q), jensen)
    chain = pm.mixing_check(p, q)
    t.eq("h((p+q)/2) = h(p||q)/2 + (h(p)+h(q))/4", chain.mixture, chain.cross / 2 + chain.average / 2)
    t.holds("h(p||q) >= h((p+q)/2) >= (h(p)+h(q))/2",
            chain.cross >= chain.mixture - TOL and chain.mixture >= chain.average - TOL)
    t.eq("log2 E(p) = H2(p)", math.log2(pm.numbers_equivalent_entropy(p)), pm.shannon_entropy(p, 2))
    t.eq("D(p||q) = H(p||q) - H(p)", pm.kl_divergence(p, q), pm.cross_entropy_shannon(p, q) - pm.shannon_entropy(p))
    # symmetrized Shannon forms need mutual support
    p = sampling.random_dist(gen, n)
    for kind, logical, shannon in [
        (db.FormKind.CROSS, pm.cross_entropy_logical(q, p), pm.cross_entropy_shannon(q, p, True)),
        (db.FormKind.DIVERGENCE, pm.logical_divergence(q, p), pm.kl_divergence(q, p, True)),
    ]:
        f = db.build_avg_form(kind, (q, p))
        t.eq(f"dit form {kind.value} = logical", db.eval_avg_form(f), logical)
        t.eq(f"bit form {kind.value} = Shannon", db.eval_avg_form(db.dit_bit_transform(f)), shannon)
    f = db.build_avg_form(db.FormKind.ENTROPY, p)
    t.eq("dit form entropy = logical", db.eval_avg_form(f), pm.logical_entropy(p))
    t.eq("bit form entropy = Shannon", db.eval_avg_form(db.dit_bit_transform(f)), pm.shannon_entropy(p))


def check_joint_case(t: _Tracker, gen):
    j = sampling.random_joint(gen, _joint_axes(gen), sparsity=0.25)
    mu = lambda s: ji.measure_infoset(j, s)  # noqa: E731
    X, Y = 0, 1
    hX, hY = ji.joint_logical_entropy(j, X), ji.joint_logical_entropy(j, Y)
    hXY = ji.joint_logical_entropy(j, (X, Y))
    hX_Y = ji.conditional_logical_entropy(j, X, Y)
    hY_X = ji.conditional_logical_entropy(j, Y, X)
    mXY = ji.mutual_logical_info(j, (X, Y))
    t.eq("h(X,Y) = mu(S_X | S_Y)", hXY, mu(ji.differs(X) | ji.differs(Y)))
    t.eq("h(X|Y) = mu(S_X - S_Y)", hX_Y, mu(ji.differs(X) - ji.differs(Y)))
    t.eq("m(X,Y) = mu(S_X & S_Y)", mXY, mu(ji.differs(X) & ji.differs(Y)))
    t.eq("h(X,Y) = h(X|Y) + h(Y)", hXY, hX_Y + hY)
    t.eq("m(X,Y) = h(X) + h(Y) - h(X,Y)", mXY, hX + hY - hXY)
    t.eq("h(X,Y) = h(X|Y) + h(Y|X) + m(X,Y)", hXY, hX_Y + hY_X + mXY)
    t.eq("H(X,Y) = H(X|Y) + H(Y)", ji.shannon_joint(j, (X, Y)),
         ji.shannon_conditional(j, X, Y) + ji.shannon_joint(j, Y))
    t.eq("I(X,Y) = H(X) + H(Y) - H(X,Y)", ji.shannon_mutual(j, (X, Y)),
         ji.shannon_joint(j, X) + ji.shannon_joint(j, Y) - ji.shannon_joint(j, (X, Y)))
    for kind, logical, shannon in [
        (db.FormKind.CONDITIONAL, hX_Y, ji.shannon_conditional(j, X, Y)),
        (db.FormKind.MUTUAL, mXY, ji.shannon_mutual(j, (X, Y))),
    ]:
        f = db.build_avg_form(kind, j)
        t.eq(f"dit form {kind.value} = logical", db.eval_avg_form(f), logical)
        t.eq(f"bit form {kind.value} = Shannon", db.eval_avg_form(db.dit_bit_transform(f)), shannon)
    if j.ndim >= 3:
        Z = 2
        h = lambda *a: ji.joint_logical_entropy(j, a)  # noqa: E731
        mXYZ = ji.mutual_logical_info(j, (X, Y, Z))
        mXY_Z = ji.mutual_logical_info(j, (X, Y), Z)
        t.eq("m(X,Y,Z) = mu(S_X & S_Y & S_Z)", mXYZ, mu(ji.differs(X) & ji.differs(Y) & ji.differs(Z)))
        t.eq("m(X,Y|Z) = mu(S_X & S_Y - S_Z)", mXY_Z, mu(ji.differs(X) & ji.differs(Y) & ji.equals(Z)))
        t.eq("m(X,Y,Z) inclusion-exclusion", mXYZ,
             h(X) + h(Y) + h(Z) - h(X, Y) - h(X, Z) - h(Y, Z) + h(X, Y, Z))
        t.eq("m(X,Y,Z) = m(X,Y) - m(X,Y|Z)", mXYZ, mXY - mXY_Z)
        f = db.build_avg_form(db.FormKind.MUTUAL3, j)
        t.eq("dit form mutual3 = logical", db.eval_avg_form(f), mXYZ)
        t.eq("bit form mutual3 = Shannon", db.eval_avg_form(db.dit_bit_transform(f)),
             ji.shannon_mutual(j, (X, Y, Z)))


def check_independent_case(t: _Tracker, gen):
    p = sampling.random_dist(gen, int(gen.integers(2, 5)))
    q = sampling.random_dist(gen, int(gen.integers(2, 5)))
    j = ji.product_joint(p, q)
    hX, hY = ji.joint_logical_entropy(j, 0), ji.joint_logical_entropy(j, 1)
    t.eq("independent: m(X,Y) = h(X) h(Y)", ji.mutual_logical_info(j, (0, 1)), hX * hY)
    t.eq("independent: h(X|Y) = h(X)(1 - h(Y))", ji.conditional_logical_entropy(j, 0, 1), hX * (1 - hY))
    t.eq("independent: I(X,Y) = 0", ji.shannon_mutual(j, (0, 1)), 0.0)


def run_suite(seed=42, cases=1000, tol=TOL) -> list[IdentityResult]:
    gen = sampling.rng(seed)
    t = _Tracker(tol)
    for _ in range(cases):
        check_partition_case(t, gen)
        check_pair_case(t, gen)
        check_joint_case(t, gen)
        check_independent_case(t, gen)
    return list(t.results.values())
