"""Binary linear codes from order ideals of posets, with exact weight
distributions, closed-form tables and optimality/minimality certificates."""

from .analysis import Certificate, certify, griesmer_sum
from .codes import CodeReport, CodeSpec, Kind, WeightDistribution, analytic_code, oracle_code
from .genfun import eval_H_direct, eval_H_family, eval_H_ideal
from .poset import IdealFamily, Poset, PosetError, make_hierarchical, mask_of, parse_family, parse_poset

__all__ = [
    "Certificate", "CodeReport", "CodeSpec", "IdealFamily", "Kind", "Poset", "PosetError",
    "WeightDistribution", "analytic_code", "certify", "eval_H_direct", "eval_H_family",
    "eval_H_ideal", "griesmer_sum", "make_hierarchical", "mask_of", "oracle_code", "parse_family",
    "parse_poset",
]

__version__ = "0.1.0"
