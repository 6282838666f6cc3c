import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from logent import formulas as lf
from logent import partitions as pc
from logent.errors import BudgetExceeded, CapExceeded, ParseError, UnboundVariable
from logent.formulas import BOTTOM, IMPLIES, JOIN, MEET, TOP, Var

x, y, z = Var("x"), Var("y"), Var("z")


# ---------------------------------------------------------------- parser

@pytest.mark.parametrize("text, tree", [
    ("x -> x", IMPLIES(x, x)),
    ("(x | y) & z", MEET(JOIN(x, y), z)),
    ("x | y -> z", IMPLIES(JOIN(x, y), z)),
    ("x | y & z", JOIN(x, MEET(y, z))),
    ("x -> y -> z", IMPLIES(x, IMPLIES(y, z))),
    ("x | y | z", JOIN(JOIN(x, y), z)),
    ("x | (x -> 0)", JOIN(x, IMPLIES(x, BOTTOM))),
    ("1", TOP),
    ("  a_1&b2 ", MEET(Var("a_1"), Var("b2"))),
])
def test_parse(text, tree):
    assert lf.parse_formula(text) == tree


@pytest.mark.parametrize("text, pos", [("x |", 3), ("(x", 2), ("x y", 2), ("x # y", 2), ("", 0), ("-> x", 0)])
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as info:
        lf.parse_formula(text)
    assert info.value.position == pos


def formulas(depth=3):
    leaves = st.sampled_from([x, y, z, TOP, BOTTOM])
    return st.recursive(
        leaves,
        lambda sub: st.builds(lf.BinOp, st.sampled_from(list(lf.Op)), sub, sub),
        max_leaves=2 ** depth,
    )


@settings(max_examples=300)
@given(formulas())
def test_print_parse_round_trip(f):
    assert lf.parse_formula(lf.to_text(f)) == f


def test_variables():
    assert lf.variables(lf.parse_formula("z -> (x | z) & 1")) == ["x", "z"]


# ---------------------------------------------------------------- evaluation

def test_eval_partition_examples():
    pi = pc.make_partition(3, [[0, 1], [2]])
    for q in lf.enumerate_partitions(3):
        assert lf.eval_partition(lf.parse_formula("x -> x"), {"x": q}) == pc.discrete(3)
        assert lf.eval_partition(lf.parse_formula("0 -> x"), {"x": q}) == pc.discrete(3)
    assert lf.eval_partition(lf.parse_formula("x | (x -> 0)"), {"x": pi}) == pi


def test_eval_partition_closed_and_unbound():
    assert lf.eval_partition_on(lf.parse_formula("0 -> 0"), {}, 3) == pc.discrete(3)
    assert lf.eval_partition_on(lf.parse_formula("1 & 0"), {}, 3) == pc.indiscrete(3)
    with pytest.raises(UnboundVariable):
        lf.eval_partition(lf.parse_formula("x | y"), {"x": pc.discrete(2)})
    with pytest.raises(UnboundVariable):
        lf.eval_partition(lf.parse_formula("1"), {})


def test_eval_subset_examples():
    U = frozenset(range(3))
    for mask in range(8):
        s = frozenset(i for i in range(3) if mask >> i & 1)
        assert lf.eval_subset(lf.parse_formula("x -> x"), {"x": s}, 3) == U
        assert lf.eval_subset(lf.parse_formula("x | (x -> 0)"), {"x": s}, 3) == U
    assert lf.eval_subset(lf.parse_formula("x & y"), {"x": {0, 1}, "y": {1, 2}}, 3) == {1}


# ---------------------------------------------------------------- enumeration

def test_enumeration_counts():
    assert [len(lf.enumerate_partitions(n)) for n in range(1, 8)] == [1, 2, 5, 15, 52, 203, 877]
    assert [lf.bell(n) for n in range(8)] == [1, 1, 2, 5, 15, 52, 203, 877]
    assert len(set(lf.enumerate_partitions(5))) == 52
    with pytest.raises(CapExceeded):
        lf.enumerate_partitions(11)


def test_rgs_order():
    assert list(lf.restricted_growth_strings(3)) == [(0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (0, 1, 2)]
    for n in range(1, 7):
        strings = list(lf.restricted_growth_strings(n))
        assert strings == sorted(strings)
        # brute force: all label strings with the restricted-growth property
        brute = [s for s in itertools.product(range(n), repeat=n)
                 if all(s[i] <= max(s[:i], default=-1) + 1 for i in range(n))]
        assert strings == brute


def test_enumeration_keeps_universe():
    u = pc.Universe(3, (0.2, 0.3, 0.5))
    assert all(p.universe == u for p in lf.enumerate_partitions(u))


# ---------------------------------------------------------------- validity

def test_validity_examples():
    assert lf.check_validity("x -> x", 4, lf.Mode.PARTITION).valid
    r = lf.check_validity("x | (x -> 0)", 3, lf.Mode.PARTITION)
    assert not r.valid
    assert r.counterexample == {"x": pc.make_partition(3, [[0, 1], [2]])}
    assert lf.eval_partition(r.formula, r.counterexample) != pc.discrete(3)
    assert lf.check_validity("x | (x -> 0)", 3, "subset").valid
    assert r.to_dict()["counterexample"] == {"x": [[0, 1], [2]]}


def test_validity_subset_counterexample():
    r = lf.check_validity("x | y", 2, lf.Mode.SUBSET)
    assert not r.valid and r.counterexample == {"x": frozenset(), "y": frozenset()}


def test_validity_budget():
    with pytest.raises(BudgetExceeded):
        lf.check_validity("x | y | z", 6, lf.Mode.PARTITION, budget=1000)
    r = lf.check_validity("x -> (y -> x)", 3, lf.Mode.PARTITION)
    assert r.valid and r.evaluations == 25


# tautologies of classical logic over the three connectives, and one law that
# survives in partition logic (modus ponens form) versus the ones that do not
SAMPLE = [
    "x -> x", "x -> (y -> x)", "(x & (x -> y)) -> y", "x | (x -> 0)",
    "((x -> y) -> x) -> x", "(x -> y) | (y -> x)", "(x & y) -> (x | y)",
    "((x -> 0) -> 0) -> x", "x", "x & y -> z", "0 -> x",
]


@pytest.mark.parametrize("text", SAMPLE)
def test_partition_valid_implies_subset_valid(text):
    # n=1 has a one-element partition lattice where everything is valid
    assert lf.check_validity(text, 1, lf.Mode.PARTITION).valid
    for n in (2, 3):
        if lf.check_validity(text, n, lf.Mode.PARTITION).valid:
            assert lf.check_validity(text, n, lf.Mode.SUBSET).valid


def test_modus_ponens_valid_in_both():
    for n in (2, 3):
        assert lf.check_validity("(x & (x -> y)) -> y", n, "partition").valid
        assert lf.check_validity("(x & (x -> y)) -> y", n, "subset").valid


def test_peirce_fails_for_partitions():
    assert lf.check_validity("((x -> y) -> x) -> x", 3, "subset").valid
    assert not lf.check_validity("((x -> y) -> x) -> x", 3, "partition").valid


def test_ops_via_interior_recipe():
    # the partition operations are the interiors of the subset operations on ditsets
    for a, b in itertools.product(lf.enumerate_partitions(4), repeat=2):
        assert pc.ditset(pc.join(a, b)) == pc.interior(pc.ditset(a) | pc.ditset(b))
        assert pc.ditset(pc.meet(a, b)) == pc.interior(pc.ditset(a) & pc.ditset(b))
        assert pc.ditset(pc.implication(a, b)) == pc.interior(~pc.ditset(a) & ~pc.BinRel.diagonal(4) | pc.ditset(b))
