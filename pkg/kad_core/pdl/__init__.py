from .syntax import Program, Formula, Atomic, Test, Comp, Union, Star, Top, Bottom, Not, And, Or, Diamond, Box, \
    render_program, render_formula, translate_program, translate, nnf, nnf_program, negate
from .satisfiability import PDLModel, SatisfiabilityResult, atomic_labels, check_satisfiability, satisfiable, holds
from .decision import Verdict, VerdictStatus, witness_search, decide_full
