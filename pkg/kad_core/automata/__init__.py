from .condition import ConditionAutomaton, GuardAtom, compile_term, epsilon_closure, guard_domains, accepts, dump
from .guarded import GuardedNFA, GuardError, Valuation, all_valuations, to_guarded, determinize, universe, product, \
    complement, difference, trim, is_empty, accepts_word, path_word, valuation_term, extract_term
