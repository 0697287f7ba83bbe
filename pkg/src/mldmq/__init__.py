"""Polynomial-time reductions between syndrome decoding and quadratic systems.

The library pairs two NP-complete decision problems over GF(2): maximum
likelihood decoding of a binary linear code (is there a vector of bounded
weight with a given syndrome?) and satisfiability of a quadratic Boolean
polynomial system.  It provides explicit reductions in both directions,
witness transport along each reduction, brute-force oracles for small
instances, seeded generators, and text formats with a CLI driver.
"""

from .boolpoly import BoolPoly, MqInstance, VariableRegistry, mq_size
from .gf2 import BitMatrix, BitVector, WeightBits
from .generators import GenSpec, gen_mld, gen_mq
from .mld_to_mq import MldInstance, MldToMqReduction, mld_size, reduce_mld_to_mq
from .mq_to_mld import GadgetCode, MqToMldReduction, build_gadget, reduce_mq_to_mld
from .normalize import StandardFormSystem, TransformLog, to_standard_form
from .oracles import SolveReport, solve_mld_exhaustive, solve_mq_exhaustive

__all__ = [
    "BitMatrix", "BitVector", "WeightBits",
    "BoolPoly", "MqInstance", "VariableRegistry", "mq_size",
    "StandardFormSystem", "TransformLog", "to_standard_form",
    "MldInstance", "MldToMqReduction", "mld_size", "reduce_mld_to_mq",
    "GadgetCode", "MqToMldReduction", "build_gadget", "reduce_mq_to_mld",
    "GenSpec", "gen_mld", "gen_mq",
    "SolveReport", "solve_mld_exhaustive", "solve_mq_exhaustive",
]

__version__ = "0.1.0"
