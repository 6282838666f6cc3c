"""Numeric bridges between logical and Shannon entropy.

* Boltzmann entropy ``(1/N) ln W`` of an occupancy vector against its two- and
  three-term Stirling approximations.
* The Newton-Mercator series for ``ln(1/p)``, whose first term turns Shannon's
  formula into logical entropy.
* Typical-message statistics and the binary-partition decomposition behind
  bit counts.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import partitions as pc
from .errors import InvariantViolation, NotPowerOfTwo, ZeroProbability
from .measures import as_dist, numbers_equivalent_entropy, shannon_entropy

_LOG_2PI = math.log(2 * math.pi)


@dataclass(frozen=True)
class Occupancy:
    """Block sizes ``N_1..N_n`` of a partition of ``N`` individuals."""

    counts: tuple

    def __post_init__(self):
        counts = tuple(int(c) for c in self.counts)
        if not counts or any(c < 1 for c in counts):
            raise InvariantViolation("counts: need at least one block, every count >= 1")
        object.__setattr__(self, "counts", counts)

    @property
    def N(self) -> int:
        return sum(self.counts)

    @property
    def probs(self) -> np.ndarray:
        return np.array(self.counts, dtype=float) / self.N


def _occ(o) -> Occupancy:
    return o if isinstance(o, Occupancy) else Occupancy(tuple(o))


@lru_cache(maxsize=64)
def _log_terms(n: int) -> tuple:
    return tuple(math.log(k) for k in range(2, n + 1))


def exact_boltzmann_entropy(o) -> float:
    """``(1/N) ln(N! / prod N_i!)`` by compensated summation of integer logs."""
    o = _occ(o)
    terms = list(_log_terms(o.N))
    for c in o.counts:
        terms.extend(-t for t in _log_terms(c))
    return math.fsum(terms) / o.N


def _stirling2(x):
    return x * math.log(x) - x


def _stirling3(x):
    return x * (math.log(x) - 1) + 0.5 * (_LOG_2PI + math.log(x))


def stirling_two_term(o) -> float:
    """``ln x! ~ x ln x - x`` applied to every factorial; equals ``H_e(N_i/N)``."""
    o = _occ(o)
    return (_stirling2(o.N) - math.fsum(_stirling2(c) for c in o.counts)) / o.N


def stirling_three_term(o) -> float:
    """``ln x! ~ x(ln x - 1) + ln(2 pi x)/2`` applied to every factorial."""
    o = _occ(o)
    return (_stirling3(o.N) - math.fsum(_stirling3(c) for c in o.counts)) / o.N


def stirling_three_term_printed(o) -> float:
    """The closed form ``H_e(p) + ln(2 pi N^n / ((2 pi)^n prod p_i)) / 2N``.

    Kept for comparison only: it does not match the per-factorial expansion,
    which has ``N^(1-n)`` where this has ``N^n``.
    """
    o = _occ(o)
    n, N, p = len(o.counts), o.N, o.probs
    log_ratio = _LOG_2PI + n * math.log(N) - n * _LOG_2PI - math.fsum(np.log(p))
    return shannon_entropy(p, "e") + log_ratio / (2 * N)


def stirling_report(o) -> dict:
    o = _occ(o)
    exact = exact_boltzmann_entropy(o)
    two, three, printed = stirling_two_term(o), stirling_three_term(o), stirling_three_term_printed(o)
    return {
        "counts": list(o.counts),
        "exact": exact,
        "two_term": two,
        "three_term": three,
        "three_term_printed_form": printed,
        "abs_error_two_term": abs(two - exact),
        "abs_error_three_term": abs(three - exact),
        "abs_error_printed_form": abs(printed - exact),
    }


def mercator_entropy_approx(d, terms: int) -> float:
    """Truncate ``ln(1/p) = (1-p) + (p-1)^2/2 - (p-1)^3/3 + ...`` after ``terms`` terms.

    With one term this is the logical entropy; the partial sums increase to the
    natural-log Shannon entropy.
    """
    if terms < 1:
        raise ValueError("terms must be at least 1")
    p = as_dist(d).probs
    if np.any(p == 0):
        raise ZeroProbability("the series needs every p_i > 0")
    x = p - 1.0
    series = -x.copy()  # 1 - p
    power = x.copy()
    for k in range(2, terms + 1):
        power = power * x
        series = series + (-1) ** k * power / k
    return math.fsum(p * series)


@dataclass(frozen=True)
class TypicalSetStats:
    per_letter_prob: float  # P = prod p_k^p_k
    typical_message_prob: float  # P^N
    bits_per_letter: float  # H_2(p)
    message_bits: float  # N H_2(p)
    n_letters: int


def typical_set_stats(d, N: int) -> TypicalSetStats:
    """Statistics of a length-``N`` message whose letter counts match ``p``.

    Such a message has probability ``P^N`` with ``P = prod p_k^p_k``; coding one
    of the ``P^-N`` equiprobable typical messages needs ``N H(p)`` bits.
    """
    if N < 1:
        raise ValueError("N must be a positive integer")
    p = as_dist(d)
    P = 1.0 / numbers_equivalent_entropy(p)
    bits = shannon_entropy(p, 2)
    return TypicalSetStats(P, P**N, bits, N * bits, int(N))


def binary_partition_decomposition(m) -> list[pc.Partition]:
    """The ``m`` binary partitions of a ``2^m``-point universe by binary digit.

    ``beta_i`` separates points whose ``i``-th most significant digit is 0
    from those where it is 1; together they distinguish every pair of points.
    ``m`` may instead be a :class:`~logent.partitions.Universe` whose size is a
    power of two.
    """
    if isinstance(m, pc.Universe):
        universe = m
        size = universe.size
        if size & (size - 1):
            raise NotPowerOfTwo(f"universe size {size} is not a power of two")
        m = size.bit_length() - 1
    else:
        m = int(m)
        if m < 0:
            raise NotPowerOfTwo("m must be non-negative")
        universe = pc.Universe.uniform(2**m)
    out = []
    for i in range(m):
        shift = m - 1 - i
        out.append(pc.from_labels(universe, [(u >> shift) & 1 for u in range(universe.size)]))
    return out
