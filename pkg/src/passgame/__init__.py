"""Sprague-Grundy values for impartial games with a one-time pass."""
from .core import BudgetExceeded, CyclicRuleset, PositionKey, Ruleset, SGCache, mex, outcome, sg
from .chocolate import F1, F2, LOG_STEP, Choco2, Choco3, HFunction, FFunction, floor_div
from .compound import CompoundState, Hypergraph, one_pass_sg_fast, one_pass_sg_oracle
from .games import NIM, NIM2, NIM_PASS
from .nimpass import gp, gp_table
from .stair import Stair, in_A, in_B, in_C, stair_sg, stair_sg_fast

__all__ = [
    "BudgetExceeded", "CyclicRuleset", "PositionKey", "Ruleset", "SGCache", "mex", "outcome", "sg",
    "F1", "F2", "LOG_STEP", "Choco2", "Choco3", "HFunction", "FFunction", "floor_div",
    "CompoundState", "Hypergraph", "one_pass_sg_fast", "one_pass_sg_oracle",
    "NIM", "NIM2", "NIM_PASS", "gp", "gp_table",
    "Stair", "in_A", "in_B", "in_C", "stair_sg", "stair_sg_fast",
]
