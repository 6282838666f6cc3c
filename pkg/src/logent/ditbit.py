"""Average-form expressions and the dit-bit transform.

Every compound logical entropy can be written as a probabilistic average

    sum_t  c_t w_t  sum_a  s_a (1 - q_a)

where each ``w_t`` and ``q_a`` is a probability looked up symbolically from a
named slot (``p(x,y)[0, 1]`` say) and ``s_a`` is a sign. The dit-bit transform
swaps every dit atom ``1 - q`` for the bit atom ``log(1/q)`` and leaves the
weights alone; evaluating the result gives the Shannon counterpart.

>>> from logent import joint
>>> f = build_avg_form(FormKind.MUTUAL3, joint.abramson())
>>> eval_avg_form(f), eval_avg_form(dit_bit_transform(f))
(0.0, -1.0)
"""
from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, replace
from types import MappingProxyType
from typing import Mapping

import numpy as np

from . import joint as ji
from .errors import AlreadyBitKind, InvariantViolation, UnsupportedKind
from .measures import _check_base, _log, as_dist


class AtomKind(enum.Enum):
    DIT = "dit"
    BIT = "bit"


class FormKind(enum.Enum):
    ENTROPY = "entropy"
    CONDITIONAL = "conditional"
    MUTUAL = "mutual"
    MUTUAL3 = "mutual3"
    CROSS = "cross"
    DIVERGENCE = "divergence"


@dataclass(frozen=True)
class ProbRef:
    slot: str
    index: tuple

    def __str__(self):
        return f"{self.slot}[{','.join(map(str, self.index))}]"


@dataclass(frozen=True)
class Atom:
    sign: int
    ref: ProbRef
    kind: AtomKind = AtomKind.DIT

    def __str__(self):
        body = f"1-{self.ref}" if self.kind is AtomKind.DIT else f"log(1/{self.ref})"
        return f"{'+' if self.sign > 0 else '-'}({body})"


@dataclass(frozen=True)
class Term:
    weight: ProbRef
    atoms: tuple
    coef: float = 1.0


@dataclass(frozen=True)
class AvgForm:
    """A signed average of dit (or bit) atoms over symbolic probability slots."""

    terms: tuple
    slots: Mapping[str, np.ndarray]

    def __post_init__(self):
        kinds = {a.kind for t in self.terms for a in t.atoms}
        if len(kinds) > 1:
            raise InvariantViolation("an average form cannot mix dit and bit atoms")
        object.__setattr__(self, "slots", MappingProxyType(dict(self.slots)))

    @property
    def kind(self) -> AtomKind | None:
        for t in self.terms:
            for a in t.atoms:
                return a.kind
        return None

    def lookup(self, ref: ProbRef) -> float:
        return float(self.slots[ref.slot][ref.index])

    def total_weight(self) -> float:
        return math.fsum(t.coef * self.lookup(t.weight) for t in self.terms)

    def __str__(self):
        lines = []
        for t in self.terms:
            coef = "" if t.coef == 1 else f"{t.coef:g}*"
            lines.append(f"{coef}{t.weight} * [{' '.join(map(str, t.atoms))}]")
        return "\n".join(lines) if lines else "0"


EMPTY_FORM = AvgForm((), {})


def dit_bit_transform(f: AvgForm) -> AvgForm:
    """Rewrite every ``1 - q`` atom as ``log(1/q)``; weights and structure are unchanged."""
    if f.kind is AtomKind.BIT:
        raise AlreadyBitKind("form is already in bit atoms")
    terms = tuple(
        replace(t, atoms=tuple(replace(a, kind=AtomKind.BIT) for a in t.atoms)) for t in f.terms
    )
    return AvgForm(terms, f.slots)


def eval_avg_form(f: AvgForm, base=2) -> float:
    """Evaluate; terms of zero weight are skipped (``0 log 0 = 0``)."""
    base = _check_base(base)
    parts = []
    for t in f.terms:
        w = t.coef * f.lookup(t.weight)
        if w == 0:
            continue
        vals = []
        for a in t.atoms:
            q = f.lookup(a.ref)
            if a.kind is AtomKind.DIT:
                vals.append(a.sign * (1.0 - q))
            elif q == 0:
                vals.append(a.sign * math.inf)
            else:
                vals.append(a.sign * -float(_log(q, base)))
        parts.append(w * math.fsum(vals))
    return math.fsum(parts) + 0.0


def concat(f: AvgForm, g: AvgForm) -> AvgForm:
    """Per-term concatenation of atom lists (the sum ``f + g`` under a shared average)."""
    if len(f.terms) != len(g.terms) or any(
        (a.weight, a.coef) != (b.weight, b.coef) for a, b in zip(f.terms, g.terms)
    ):
        raise InvariantViolation("forms must share the same weighted terms to be concatenated")
    slots = dict(f.slots)
    for k, v in g.slots.items():
        if k in slots and not np.array_equal(slots[k], v):
            raise InvariantViolation(f"slot {k!r} differs between the forms")
        slots[k] = v
    terms = tuple(replace(a, atoms=a.atoms + b.atoms) for a, b in zip(f.terms, g.terms))
    return AvgForm(terms, slots)


def negate(f: AvgForm) -> AvgForm:
    terms = tuple(
        replace(t, atoms=tuple(replace(a, sign=-a.sign) for a in t.atoms)) for t in f.terms
    )
    return AvgForm(terms, f.slots)


# ---------------------------------------------------------------- builders


def _slot_name(j, axes):
    return "p(" + ",".join(j.names[a].lower() for a in axes) + ")"


def joint_form(j: ji.JointDist, atoms, over=None) -> AvgForm:
    """Average over the cells of the marginal on ``over`` of signed dit atoms.

    ``atoms`` is a list of ``(sign, axes)``; each contributes ``sign * (1 - p_axes(cell))``.
    """
    atoms = [(int(s), ji._axis_set(j, K)) for s, K in atoms]
    if over is None:
        over = sorted({a for _, K in atoms for a in K})
    over = ji._axis_set(j, over)
    for _, K in atoms:
        if not set(K) <= set(over):
            raise InvariantViolation(f"atom axes {K} are not inside the averaging axes {over}")
    slots = {_slot_name(j, over): ji.marginal_table(j, over)}
    for _, K in atoms:
        slots[_slot_name(j, K)] = ji.marginal_table(j, K)
    terms = []
    for cell in itertools.product(*(range(j.axes[a]) for a in over)):
        pos = dict(zip(over, cell))
        terms.append(
            Term(
                ProbRef(_slot_name(j, over), cell),
                tuple(Atom(s, ProbRef(_slot_name(j, K), tuple(pos[a] for a in K))) for s, K in atoms),
            )
        )
    return AvgForm(tuple(terms), slots)


def entropy_form(p) -> AvgForm:
    """``sum p_i (1 - p_i)``."""
    p = as_dist(p).probs
    terms = tuple(Term(ProbRef("p", (i,)), (Atom(1, ProbRef("p", (i,))),)) for i in range(p.size))
    return AvgForm(terms, {"p": p})


def cross_form(p, q, symmetrized=True) -> AvgForm:
    """``1/2 [sum p_i (1 - q_i) + sum q_i (1 - p_i)]``, or just ``sum p_i (1 - q_i)``."""
    p, q = as_dist(p).probs, as_dist(q).probs
    if p.size != q.size:
        raise InvariantViolation("distributions must have equal length")
    idx = range(p.size)
    if not symmetrized:
        terms = [Term(ProbRef("p", (i,)), (Atom(1, ProbRef("q", (i,))),)) for i in idx]
    else:
        terms = [Term(ProbRef("p", (i,)), (Atom(1, ProbRef("q", (i,))),), 0.5) for i in idx]
        terms += [Term(ProbRef("q", (i,)), (Atom(1, ProbRef("p", (i,))),), 0.5) for i in idx]
    return AvgForm(tuple(terms), {"p": p, "q": q})


def divergence_form(p, q) -> AvgForm:
    """``h(p||q) - [h(p) + h(q)] / 2`` written under the symmetric ``(p + q)/2`` average."""
    p, q = as_dist(p).probs, as_dist(q).probs
    if p.size != q.size:
        raise InvariantViolation("distributions must have equal length")
    idx = range(p.size)
    terms = [
        Term(ProbRef("p", (i,)), (Atom(1, ProbRef("q", (i,))), Atom(-1, ProbRef("p", (i,)))), 0.5)
        for i in idx
    ]
    terms += [
        Term(ProbRef("q", (i,)), (Atom(1, ProbRef("p", (i,))), Atom(-1, ProbRef("q", (i,)))), 0.5)
        for i in idx
    ]
    return AvgForm(tuple(terms), {"p": p, "q": q})


def _inclusion_exclusion_atoms(axes):
    out = []
    for r in range(1, len(axes) + 1):
        for K in itertools.combinations(axes, r):
            out.append(((-1) ** (r + 1), K))
    return out


def build_avg_form(kind, data, axes=None, symmetrized=True) -> AvgForm:
    """Dit-atom average form for one row of the dit-bit correspondence.

    Parameters
    ----------
    kind : FormKind or str
    data : Dist-like, JointDist, or ``(p, q)`` pair
        A distribution for ``ENTROPY``; a joint for ``CONDITIONAL``, ``MUTUAL`` and
        ``MUTUAL3``; a pair of distributions for ``CROSS`` and ``DIVERGENCE``.
    axes : tuple, optional
        For ``CONDITIONAL`` an ``(I, J)`` pair (default ``(0, 1)``: X given Y); for
        ``MUTUAL`` / ``MUTUAL3`` the axes involved (default the first two / three).
    symmetrized : bool
        ``CROSS`` only: the unsymmetrized form transforms to ``H(p||q)``.
    """
    try:
        kind = FormKind(kind.lower() if isinstance(kind, str) else kind)
    except ValueError:
        raise UnsupportedKind(f"unknown form kind {kind!r}") from None

    if kind is FormKind.ENTROPY:
        if isinstance(data, ji.JointDist):
            I = ji._axis_set(data, axes if axes is not None else range(data.ndim))
            return joint_form(data, [(1, I)])
        return entropy_form(data)
    if kind in (FormKind.CROSS, FormKind.DIVERGENCE):
        p, q = data
        return cross_form(p, q, symmetrized) if kind is FormKind.CROSS else divergence_form(p, q)

    if not isinstance(data, ji.JointDist):
        raise UnsupportedKind(f"{kind.name} needs a joint distribution")
    if kind is FormKind.CONDITIONAL:
        I, J = axes if axes is not None else (0, 1)
        I, J = ji._axis_set(data, I), ji._axis_set(data, J)
        ji._disjoint(I, J)
        return joint_form(data, [(1, I + J), (-1, J)], over=I + J)
    want = 2 if kind is FormKind.MUTUAL else 3
    if data.ndim < want:
        raise UnsupportedKind(f"{kind.name} needs a joint with at least {want} axes")
    axes = ji._axis_set(data, axes if axes is not None else range(want))
    if len(axes) != want:
        raise UnsupportedKind(f"{kind.name} needs exactly {want} axes")
    singles = [(1, (a,)) for a in axes]
    if kind is FormKind.MUTUAL:
        return joint_form(data, singles + [(-1, axes)], over=axes)
    return joint_form(data, _inclusion_exclusion_atoms(axes), over=axes)
