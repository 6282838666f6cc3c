import math

import numpy as np
import pytest

from logent import ditbit as db
from logent import joint as ji
from logent import measures as pm
from logent import sampling
from logent.errors import AlreadyBitKind, InvariantViolation, UnsupportedKind

A = ji.abramson()


def test_entropy_form_examples():
    f = db.build_avg_form("entropy", (0.5, 0.5))
    assert len(f.terms) == 2 and f.kind is db.AtomKind.DIT
    assert db.eval_avg_form(f) == 0.5
    assert db.eval_avg_form(db.dit_bit_transform(f)) == 1
    assert db.eval_avg_form(db.EMPTY_FORM) == 0
    assert db.eval_avg_form(db.entropy_form((1.0, 0.0))) == 0
    assert db.eval_avg_form(db.dit_bit_transform(db.entropy_form(pm.Dist.uniform(4))), 2) == 2
    assert db.eval_avg_form(db.dit_bit_transform(db.entropy_form(pm.Dist.uniform(4))), "e") == pytest.approx(math.log(4))


def test_abramson_forms():
    f = db.build_avg_form(db.FormKind.MUTUAL3, A)
    assert (db.eval_avg_form(f), db.eval_avg_form(db.dit_bit_transform(f))) == (0.0, -1.0)
    c = db.build_avg_form(db.FormKind.CONDITIONAL, A)
    assert db.eval_avg_form(c) == 0.25
    assert db.eval_avg_form(db.dit_bit_transform(c)) == 1.0


def test_transform_is_structural():
    f = db.build_avg_form(db.FormKind.MUTUAL3, A)
    g = db.dit_bit_transform(f)
    assert g.kind is db.AtomKind.BIT
    assert [t.weight for t in g.terms] == [t.weight for t in f.terms]
    assert [t.coef for t in g.terms] == [t.coef for t in f.terms]
    assert [[(a.sign, a.ref) for a in t.atoms] for t in g.terms] == [[(a.sign, a.ref) for a in t.atoms] for t in f.terms]
    assert g.slots is not f.slots and dict(g.slots).keys() == dict(f.slots).keys()
    with pytest.raises(AlreadyBitKind):
        db.dit_bit_transform(g)
    assert "log(1/" in str(g) and "1-p(" in str(f)


def test_errors():
    with pytest.raises(UnsupportedKind):
        db.build_avg_form("quartic", A)
    with pytest.raises(UnsupportedKind):
        db.build_avg_form(db.FormKind.MUTUAL3, ji.product_joint((0.5, 0.5), (0.5, 0.5)))
    with pytest.raises(UnsupportedKind):
        db.build_avg_form(db.FormKind.MUTUAL, (0.5, 0.5))
    with pytest.raises(InvariantViolation):
        db.AvgForm((db.Term(db.ProbRef("p", (0,)), (
            db.Atom(1, db.ProbRef("p", (0,)), db.AtomKind.DIT),
            db.Atom(1, db.ProbRef("p", (0,)), db.AtomKind.BIT))),), {"p": np.array([1.0])})


def test_weights_are_a_distribution():
    gen = sampling.rng(2)
    j = sampling.random_joint(gen, (2, 3, 4))
    p, q = sampling.random_dist(gen, 5), sampling.random_dist(gen, 5)
    for f in [db.build_avg_form(k, j) for k in ("conditional", "mutual", "mutual3")] + [
        db.build_avg_form("cross", (p, q)), db.build_avg_form("divergence", (p, q)),
        db.build_avg_form("cross", (p, q), symmetrized=False), db.build_avg_form("entropy", p),
    ]:
        assert f.total_weight() == pytest.approx(1, abs=1e-12)


@pytest.mark.parametrize("seed", range(20))
def test_every_kind_against_logical_and_shannon(seed):
    gen = sampling.rng(seed)
    j = sampling.random_joint(gen, tuple(gen.integers(2, 5, 3)), sparsity=0.2)
    n = int(gen.integers(2, 7))
    p = sampling.random_dist(gen, n, sparsity=0.2)
    q, r = sampling.random_dist(gen, n), sampling.random_dist(gen, n)
    cases = [
        (db.build_avg_form("entropy", p), pm.logical_entropy(p), pm.shannon_entropy(p)),
        (db.build_avg_form("conditional", j, ((0, 2), 1)), ji.conditional_logical_entropy(j, (0, 2), 1),
         ji.shannon_conditional(j, (0, 2), 1)),
        (db.build_avg_form("mutual", j, (1, 2)), ji.mutual_logical_info(j, (1, 2)), ji.shannon_mutual(j, (1, 2))),
        (db.build_avg_form("mutual3", j), ji.mutual_logical_info(j, (0, 1, 2)), ji.shannon_mutual(j, (0, 1, 2))),
        (db.build_avg_form("cross", (q, r)), pm.cross_entropy_logical(q, r), pm.cross_entropy_shannon(q, r, True)),
        (db.build_avg_form("cross", (p, q), symmetrized=False), pm.cross_entropy_logical(p, q),
         pm.cross_entropy_shannon(p, q)),
        (db.build_avg_form("divergence", (q, r)), pm.logical_divergence(q, r), pm.kl_divergence(q, r, True)),
    ]
    for f, logical, shannon in cases:
        assert db.eval_avg_form(f) == pytest.approx(logical, abs=1e-12)
        assert db.eval_avg_form(db.dit_bit_transform(f)) == pytest.approx(shannon, abs=1e-12)


def test_concat_linearity():
    gen = sampling.rng(8)
    for _ in range(20):
        j = sampling.random_joint(gen, (3, 2, 2), sparsity=0.2)
        f = db.joint_form(j, [(1, (0,)), (-1, (0, 1))], over=(0, 1, 2))
        g = db.joint_form(j, [(1, (2,))], over=(0, 1, 2))
        fg = db.concat(f, g)
        assert db.eval_avg_form(fg) == pytest.approx(db.eval_avg_form(f) + db.eval_avg_form(g), abs=1e-14)
        T = db.dit_bit_transform
        assert db.eval_avg_form(T(fg)) == pytest.approx(db.eval_avg_form(T(f)) + db.eval_avg_form(T(g)), abs=1e-13)
        assert db.eval_avg_form(db.negate(f)) == pytest.approx(-db.eval_avg_form(f), abs=1e-15)
    with pytest.raises(InvariantViolation):
        db.concat(db.joint_form(A, [(1, (0,))], over=(0,)), db.joint_form(A, [(1, (1,))], over=(1, 2)))


def test_venn_identity_preserved():
    # h(X,Y) = h(X|Y) + h(Y) as a concatenation, and its transform H(X,Y) = H(X|Y) + H(Y)
    gen = sampling.rng(9)
    for _ in range(30):
        j = sampling.random_joint(gen, tuple(gen.integers(2, 5, 2)), sparsity=0.25)
        cond = db.build_avg_form("conditional", j)
        hy = db.joint_form(j, [(1, (1,))], over=(0, 1))
        lhs = db.concat(cond, hy)
        assert db.eval_avg_form(lhs) == pytest.approx(ji.joint_logical_entropy(j, (0, 1)), abs=1e-12)
        assert db.eval_avg_form(db.dit_bit_transform(lhs)) == pytest.approx(ji.shannon_joint(j, (0, 1)), abs=1e-12)
        assert db.eval_avg_form(db.dit_bit_transform(lhs)) == pytest.approx(
            ji.shannon_conditional(j, 0, 1) + ji.shannon_joint(j, 1), abs=1e-12)


def test_sign_not_preserved():
    f = db.build_avg_form("mutual3", A)
    assert db.eval_avg_form(f) >= 0 > db.eval_avg_form(db.dit_bit_transform(f))


def test_zero_weight_terms_skipped():
    f = db.dit_bit_transform(db.entropy_form((0.5, 0.5, 0.0)))
    assert db.eval_avg_form(f) == 1
    g = db.dit_bit_transform(db.cross_form((1.0, 0.0), (0.0, 1.0), symmetrized=False))
    assert db.eval_avg_form(g) == math.inf
