from .term import Term, Var, Zero, One, Comp, Union, Star, Dom, Antidom, Fragment, Signature, TermSyntaxError, \
    FragmentError, parse, render, classify, require_fragment, signature, subterms, variables, size, operator_count, \
    guard_atoms, substitute, mk_comp, mk_union, mk_star, mk_comp_all, mk_union_all, CD1_OPERATORS, \
    CD1_WITH_ZERO_OPERATORS
from .generation import random_term, random_term_pairs
