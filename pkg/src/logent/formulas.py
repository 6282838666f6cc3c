"""Formulas of subset logic and partition logic.

Concrete syntax::

    formula := imp
    imp     := join ('->' imp)?          # right associative, lowest precedence
    join    := meet ('|' meet)*          # left associative
    meet    := atom ('&' atom)*          # left associative, highest precedence
    atom    := IDENT | '0' | '1' | '(' formula ')'

``1`` is the top of the algebra (``U`` for subsets, the discrete partition for
partitions) and ``0`` is the bottom.
"""
from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass, field
from typing import Iterator, Mapping

from . import partitions as pc
from .errors import BudgetExceeded, CapExceeded, ParseError, UnboundVariable, UniverseMismatch

PARTITION_CAP = 10
VALIDITY_BUDGET = 10**6


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    top: bool


TOP = Const(True)
BOTTOM = Const(False)


class Op(enum.Enum):
    JOIN = "|"
    MEET = "&"
    IMPLIES = "->"


_PREC = {Op.IMPLIES: 1, Op.JOIN: 2, Op.MEET: 3}


@dataclass(frozen=True)
class BinOp:
    op: Op
    left: "Formula"
    right: "Formula"


Formula = Var | Const | BinOp


def JOIN(a, b):
    return BinOp(Op.JOIN, a, b)


def MEET(a, b):
    return BinOp(Op.MEET, a, b)


def IMPLIES(a, b):
    return BinOp(Op.IMPLIES, a, b)


_TOKEN = re.compile(r"\s*(?:(->)|([|&()])|([01])(?![A-Za-z0-9_])|([A-Za-z_][A-Za-z0-9_]*))")


def _tokenize(text):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", start)
        kind = next(i for i in range(1, 5) if m.group(i) is not None)
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append((0, "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def imp(self):
        left = self.join()
        if self.peek()[1] == "->":
            self.take()
            return IMPLIES(left, self.imp())
        return left

    def join(self):
        left = self.meet()
        while self.peek()[1] == "|":
            self.take()
            left = JOIN(left, self.meet())
        return left

    def meet(self):
        left = self.atom()
        while self.peek()[1] == "&":
            self.take()
            left = MEET(left, self.atom())
        return left

    def atom(self):
        kind, value, pos = self.take()
        if kind == 4:
            return Var(value)
        if kind == 3:
            return Const(value == "1")
        if value == "(":
            inner = self.imp()
            kind, value, pos = self.take()
            if value != ")":
                raise ParseError("expected ')'", pos)
            return inner
        raise ParseError("expected a variable, constant or '('" if kind else "unexpected end of input", pos)


def parse_formula(text: str) -> Formula:
    """Parse ``text`` into a formula AST; raises :class:`ParseError` with a position."""
    parser = _Parser(text)
    tree = parser.imp()
    kind, value, pos = parser.peek()
    if kind != 0:
        raise ParseError(f"unexpected token {value!r}", pos)
    return tree


def to_text(f: Formula) -> str:
    """Render with the minimal parentheses needed to parse back to ``f``."""

    def go(node, ctx_prec, right_side):
        if isinstance(node, Var):
            return node.name
        if isinstance(node, Const):
            return "1" if node.top else "0"
        prec = _PREC[node.op]
        if node.op is Op.IMPLIES:
            s = f"{go(node.left, prec + 1, False)} -> {go(node.right, prec, True)}"
        else:
            s = f"{go(node.left, prec, False)} {node.op.value} {go(node.right, prec + 1, True)}"
        return f"({s})" if prec < ctx_prec else s

    return go(f, 0, False)


def variables(f: Formula) -> list[str]:
    """Sorted distinct variable names."""
    out = set()
    stack = [f]
    while stack:
        node = stack.pop()
        if isinstance(node, Var):
            out.add(node.name)
        elif isinstance(node, BinOp):
            stack += [node.left, node.right]
    return sorted(out)


def eval_partition(f: Formula, env: Mapping[str, pc.Partition]) -> pc.Partition:
    """Evaluate ``f`` with partition operations."""
    universes = {p.universe for p in env.values()}
    if len(universes) > 1:
        raise UniverseMismatch("all partitions in the environment must share one universe")
    universe = universes.pop() if universes else None

    def go(node):
        if isinstance(node, Var):
            try:
                return env[node.name]
            except KeyError:
                raise UnboundVariable(node.name) from None
        if isinstance(node, Const):
            if universe is None:
                raise UnboundVariable("constants need a universe; bind at least one variable")
            return pc.discrete(universe) if node.top else pc.indiscrete(universe)
        a, b = go(node.left), go(node.right)
        if node.op is Op.JOIN:
            return pc.join(a, b)
        if node.op is Op.MEET:
            return pc.meet(a, b)
        return pc.implication(a, b)

    return go(f)


def eval_partition_on(f: Formula, env: Mapping[str, pc.Partition], universe) -> pc.Partition:
    """Like :func:`eval_partition` but usable for closed formulas."""
    universe = pc._as_universe(universe)
    probe = dict(env)
    probe.setdefault("\0", pc.indiscrete(universe))
    return eval_partition(f, probe)


def eval_subset(f: Formula, env: Mapping[str, frozenset], n: int) -> frozenset:
    """Evaluate ``f`` in the Boolean algebra of subsets of ``{0..n-1}``."""
    universe = frozenset(range(n))

    def go(node):
        if isinstance(node, Var):
            try:
                return frozenset(env[node.name])
            except KeyError:
                raise UnboundVariable(node.name) from None
        if isinstance(node, Const):
            return universe if node.top else frozenset()
        a, b = go(node.left), go(node.right)
        if node.op is Op.JOIN:
            return a | b
        if node.op is Op.MEET:
            return a & b
        return (universe - a) | b

    return go(f)


def restricted_growth_strings(n: int) -> Iterator[tuple]:
    """All restricted-growth strings of length ``n`` in lexicographic order."""
    if n == 0:
        yield ()
        return
    a = [0] * n
    m = [0] * n  # m[i] = max(a[0..i])
    while True:
        yield tuple(a)
        i = n - 1
        while i > 0 and a[i] > m[i - 1]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        m[i] = max(m[i - 1], a[i])
        for j in range(i + 1, n):
            a[j] = 0
            m[j] = m[i]


def enumerate_partitions(n, cap: int = PARTITION_CAP) -> list[pc.Partition]:
    """Every partition of ``{0..n-1}``, in restricted-growth-string order.

    ``n`` may also be a :class:`Universe`, whose probabilities are kept.
    """
    universe = pc._as_universe(n)
    if universe.size > cap:
        raise CapExceeded(f"n={universe.size} exceeds the enumeration cap {cap}")
    return [pc.from_labels(universe, rgs) for rgs in restricted_growth_strings(universe.size)]


def bell(n: int) -> int:
    # Bell triangle
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


class Mode(enum.Enum):
    SUBSET = "subset"
    PARTITION = "partition"


@dataclass(frozen=True)
class ValidityReport:
    formula: Formula
    universe_size: int
    mode: Mode
    valid: bool
    counterexample: dict | None = None
    evaluations: int = field(default=0, compare=False)

    def to_dict(self) -> dict:
        if self.counterexample is None:
            cex = None
        elif self.mode is Mode.PARTITION:
            cex = {k: [list(b) for b in v.blocks] for k, v in self.counterexample.items()}
        else:
            cex = {k: sorted(v) for k, v in self.counterexample.items()}
        return {
            "formula": to_text(self.formula),
            "universe_size": self.universe_size,
            "mode": self.mode.value,
            "valid": self.valid,
            "counterexample": cex,
            "evaluations": self.evaluations,
        }


def _subsets(n):
    for mask in range(2**n):
        yield frozenset(i for i in range(n) if mask >> i & 1)


def check_validity(f, n: int, mode=Mode.PARTITION, budget: int = VALIDITY_BUDGET) -> ValidityReport:
    """Exhaustively decide whether ``f`` evaluates to top for every assignment.

    Assignments are enumerated as the product of per-variable domains taken in
    sorted-variable order (restricted-growth order for partitions, bitmask order
    for subsets); the first failing one is returned as the counterexample.
    """
    if isinstance(f, str):
        f = parse_formula(f)
    mode = Mode(mode)
    names = variables(f)
    domain_size = bell(n) if mode is Mode.PARTITION else 2**n
    total = domain_size ** len(names)
    if total > budget:
        raise BudgetExceeded(f"{total} assignments exceed the budget of {budget}")

    if mode is Mode.PARTITION:
        universe = pc.Universe.uniform(n)
        domain = enumerate_partitions(universe)
        top = pc.discrete(universe)

        def holds(env):
            return eval_partition_on(f, env, universe) == top
    else:
        domain = list(_subsets(n))
        top = frozenset(range(n))

        def holds(env):
            return eval_subset(f, env, n) == top

    count = 0
    for values in itertools.product(domain, repeat=len(names)):
        env = dict(zip(names, values))
        count += 1
        if not holds(env):
            return ValidityReport(f, n, mode, False, env, count)
    return ValidityReport(f, n, mode, True, None, count)
