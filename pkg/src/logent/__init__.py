"""Partition logic and logical information theory.

Submodules
----------
partitions  partitions, ditsets and the partition algebra
formulas    formula parser, evaluators and exhaustive validity checks
measures    single-distribution logical and Shannon measures
joint       joint distributions, infosets and compound entropies
ditbit      average forms and the dit-bit transform
approx      Stirling, Newton-Mercator, typical sets, binary partitions
"""
from . import approx, ditbit, formulas, io, joint, measures, partitions, sampling
from ._checks import oracle_checks, set_oracle_checks
from .ditbit import FormKind, build_avg_form, dit_bit_transform, eval_avg_form
from .formulas import check_validity, enumerate_partitions, parse_formula
from .joint import JointDist, abramson
from .measures import Dist
from .partitions import BinRel, Partition, Universe, make_partition

__version__ = "0.1.0"

__all__ = [
    "approx", "ditbit", "formulas", "io", "joint", "measures", "partitions", "sampling",
    "oracle_checks", "set_oracle_checks",
    "FormKind", "build_avg_form", "dit_bit_transform", "eval_avg_form",
    "check_validity", "enumerate_partitions", "parse_formula",
    "JointDist", "abramson", "Dist", "BinRel", "Partition", "Universe", "make_partition",
]
