import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from logent import measures as pm
from logent import partitions as pc
from logent._checks import checks_enabled, oracle_checks
from logent.errors import AsymmetricDistance, InvariantViolation, NonzeroDiagonal, OracleMismatch, SizeMismatch

HALF = (0.5, 0.5)
SKEW = (0.99, 0.01)


def dists(max_n=8):
    weights = st.lists(st.floats(0, 1, allow_nan=False), min_size=1, max_size=max_n)
    return weights.filter(lambda w: sum(w) > 1e-3).map(pm.normalize)


def pair_dists(max_n=8):
    return st.integers(1, max_n).flatmap(lambda n: st.tuples(
        *[st.lists(st.floats(0, 1), min_size=n, max_size=n).filter(lambda w: sum(w) > 1e-3).map(pm.normalize)] * 2))


# ---------------------------------------------------------------- Dist

def test_dist_validation():
    assert pm.Dist([0.25, 0.75]).probs.tolist() == [0.25, 0.75]
    with pytest.raises(InvariantViolation, match="probs sum"):
        pm.Dist([0.5, 0.4])
    with pytest.raises(InvariantViolation, match="non-negative"):
        pm.Dist([1.5, -0.5])
    with pytest.raises(InvariantViolation):
        pm.Dist([])
    assert pm.normalize([1, 3]).probs.tolist() == [0.25, 0.75]


# ---------------------------------------------------------------- product measure

def test_product_measure_examples():
    u2 = pm.Dist.uniform(2)
    assert pm.product_measure(u2, pc.BinRel.empty(2)) == 0
    assert pm.product_measure(u2, pc.BinRel.full(2)) == 1
    assert pm.product_measure(u2, ~pc.BinRel.diagonal(2)) == 0.5
    with pytest.raises(SizeMismatch):
        pm.product_measure(u2, pc.BinRel.full(3))


def test_logical_entropy_partition_examples():
    assert pm.logical_entropy_partition(pc.indiscrete(5)) == 0
    for n in range(1, 9):
        assert pm.logical_entropy_partition(pc.discrete(n)) == pytest.approx(1 - 1 / n, abs=1e-15)
    assert pm.logical_entropy_partition(pc.make_partition(4, [[0, 1], [2, 3]])) == 0.5


def test_logical_entropy_examples():
    assert pm.logical_entropy((1.0, 0.0, 0.0)) == 0
    assert pm.logical_entropy(HALF) == 0.5
    assert pm.logical_entropy(SKEW) == pytest.approx(0.0198, abs=1e-12)
    assert pm.repeat_rate(pm.Dist.uniform(5)) == pytest.approx(0.2, abs=1e-15)
    assert pm.repeat_rate((1.0, 0.0)) == 1
    assert pm.repeat_rate(SKEW) == pytest.approx(0.9802, abs=1e-12)


def test_logical_entropy_as_normalized_dit_count():
    # under equiprobable points h(pi) = |dit(pi)| / n^2
    gen = np.random.default_rng(1)
    for n in range(1, 9):
        pi = pc.from_labels(n, gen.integers(0, 3, n).tolist())
        assert pm.logical_entropy_partition(pi) == pytest.approx(len(pc.ditset(pi)) / n**2, abs=1e-12)


def test_shannon_examples():
    assert pm.shannon_entropy(SKEW, "e") == pytest.approx(0.0560, abs=5e-4)
    assert pm.shannon_entropy(HALF, "e") == pytest.approx(0.693, abs=5e-4)
    assert pm.shannon_entropy(pm.Dist.uniform(4), 2) == pytest.approx(2, abs=1e-15)
    assert pm.shannon_entropy((1.0, 0.0)) == 0
    assert pm.hartley_entropy(8) == 3
    with pytest.raises(ValueError):
        pm.shannon_entropy(HALF, 1)


# ---------------------------------------------------------------- cross entropy and divergences

def test_cross_entropy_examples():
    assert pm.cross_entropy_logical(HALF, HALF) == 0.5
    assert pm.cross_entropy_logical((1, 0), (0, 1)) == 1
    assert pm.cross_entropy_logical(SKEW, HALF) == pytest.approx(0.5, abs=1e-12)
    assert pm.cross_entropy_shannon(SKEW, SKEW) == pm.shannon_entropy(SKEW)
    assert pm.cross_entropy_shannon((1, 0), (0, 1)) == math.inf
    assert pm.cross_entropy_shannon(HALF, (0.25, 0.75)) == pytest.approx(1.207518749639422, abs=1e-12)
    with pytest.raises(SizeMismatch):
        pm.cross_entropy_logical(HALF, (1, 0, 0))


def test_divergence_examples():
    assert pm.kl_divergence(SKEW, SKEW) == 0
    assert pm.kl_divergence(HALF, (0.25, 0.75)) == pytest.approx(0.20751874963942196, abs=1e-12)
    assert pm.kl_divergence((1, 0), HALF) == pytest.approx(1, abs=1e-15)
    assert pm.kl_divergence(HALF, (1, 0)) == math.inf
    assert pm.logical_divergence(SKEW, SKEW) == 0
    assert pm.logical_divergence((1, 0), (0, 1)) == 1
    assert pm.logical_divergence(SKEW, HALF) == pytest.approx(0.2401, abs=1e-12)


def test_kl_is_asymmetric():
    p, q = HALF, (0.25, 0.75)
    assert pm.kl_divergence(p, q) != pytest.approx(pm.kl_divergence(q, p), abs=1e-6)
    assert pm.logical_divergence(p, q) == pm.logical_divergence(q, p)
    sym = pm.kl_divergence(p, q, symmetrized=True)
    assert sym == pytest.approx((pm.kl_divergence(p, q) + pm.kl_divergence(q, p)) / 2, abs=1e-15)


def test_mixing_examples():
    assert pm.mixing_check(HALF, HALF) == (0.5, 0.5, 0.5)
    assert pm.mixing_check((1, 0), (0, 1)) == (1, 0.5, 0)
    c = pm.mixing_check(SKEW, HALF)
    assert c.cross > c.mixture > c.average


# ---------------------------------------------------------------- E(p), Rao, rescaled

def test_numbers_equivalent_examples():
    assert pm.numbers_equivalent_entropy(SKEW) == pytest.approx(1.057, abs=1e-3)
    assert pm.numbers_equivalent_entropy(HALF) == pytest.approx(2.000, abs=1e-3)
    for n in range(1, 10):
        assert pm.numbers_equivalent_entropy(pm.Dist.uniform(n)) == pytest.approx(n, rel=1e-12)
    assert pm.numbers_equivalent_entropy((0.5, 0.5, 0.0)) == pytest.approx(2, abs=1e-15)


def test_numbers_equivalent_is_multiplicative():
    p, q = pm.Dist((0.2, 0.8)), pm.Dist((0.1, 0.3, 0.6))
    pq = pm.Dist(np.outer(p.probs, q.probs).ravel())
    assert pm.numbers_equivalent_entropy(pq) == pytest.approx(
        pm.numbers_equivalent_entropy(p) * pm.numbers_equivalent_entropy(q), rel=1e-12)


def test_rao_examples():
    assert pm.rao_quadratic_entropy(HALF, pm.logical_distances(2)) == 0.5
    assert pm.rao_quadratic_entropy(HALF, np.zeros((2, 2))) == 0
    assert pm.rao_quadratic_entropy(HALF, [[0, 2], [2, 0]]) == 1
    with pytest.raises(NonzeroDiagonal):
        pm.rao_quadratic_entropy(HALF, [[1, 1], [1, 0]])
    with pytest.raises(AsymmetricDistance):
        pm.rao_quadratic_entropy(HALF, [[0, 1], [2, 0]])


def test_rescaled_examples():
    for n in range(2, 9):
        assert pm.rescaled_logical_entropy(pc.discrete(n)) == pytest.approx(1, abs=1e-14)
    assert pm.rescaled_logical_entropy(pc.indiscrete(4)) == 0
    assert pm.rescaled_logical_entropy(pc.make_partition(4, [[0, 1], [2, 3]])) == pytest.approx(2 / 3, abs=1e-15)


# ---------------------------------------------------------------- checked mode

def test_checked_mode_catches_a_bad_closed_form(monkeypatch):
    assert checks_enabled()
    monkeypatch.setattr(pm, "product_measure", lambda d, s: 0.123)
    with pytest.raises(OracleMismatch):
        pm.logical_entropy(HALF)
    with oracle_checks(False):
        assert pm.logical_entropy(HALF) == 0.5


# ---------------------------------------------------------------- properties

@settings(max_examples=200)
@given(dists())
def test_entropy_bounds(p):
    n = len(p)
    h, H = pm.logical_entropy(p), pm.shannon_entropy(p)
    assert -1e-15 <= h <= 1 - 1 / n + 1e-12
    assert -1e-12 <= H <= math.log2(n) + 1e-12
    assert h == pytest.approx(1 - pm.repeat_rate(p), abs=1e-15)
    assert math.log2(pm.numbers_equivalent_entropy(p)) == pytest.approx(H, abs=1e-9)


@settings(max_examples=200)
@given(pair_dists())
def test_pair_properties(pq):
    p, q = pq
    assert pm.cross_entropy_logical(p, q) == pm.cross_entropy_logical(q, p)
    jensen = pm.cross_entropy_logical(p, q) - (pm.logical_entropy(p) + pm.logical_entropy(q)) / 2
    assert pm.logical_divergence(p, q) == pytest.approx(jensen, abs=1e-12)
    c = pm.mixing_check(p, q)
    assert c.cross >= c.mixture - 1e-12 >= c.average - 2e-12
    assert c.mixture == pytest.approx(c.cross / 2 + c.average / 2, abs=1e-12)
    d = pm.kl_divergence(p, q)
    assert d >= 0
    if math.isfinite(d):
        assert d == pytest.approx(pm.cross_entropy_shannon(p, q) - pm.shannon_entropy(p), abs=1e-9)
