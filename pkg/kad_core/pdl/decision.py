"""
Description
===========

The decision procedure for equations between terms with star. Both sides are compiled into condition automata,
turned into guarded automata over a common guard list, and subtracted from each other. State elimination turns each
difference back into a term; the equation is valid iff neither term is satisfiable, which is decided in PDL. For an
invalid equation a smallest discriminating tree is searched for and verified.
"""

from collections import OrderedDict
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, Optional, Union
import time

from kad_core.automata import compile_term, difference, extract_term, to_guarded, trim
from kad_core.freealg import member_down
from kad_core.relstruct import satisfies, tree_to_struct
from kad_core.terms import Fragment, Term, guard_atoms, render, require_fragment, size, variables
from kad_core.trees import PointedTree, edge_count, enumerate_exact
from kad_core.util import get_logger, get_settings

from .satisfiability import check_satisfiability
from .syntax import translate

__author__ = 'KAD Team'

LOG = get_logger(__name__)


class VerdictStatus(Enum):
    VALID = 'valid'
    INVALID = 'invalid'
    UNKNOWN_AT_SCALE = 'unknown-at-scale'


@dataclass(frozen=True)
class Verdict(object):
    status: VerdictStatus
    witness: Optional[PointedTree] = None
    stage_metrics: Dict[str, Union[int, float]] = field(default_factory=OrderedDict)

    def __post_init__(self):
        if (self.witness is not None) != (self.status == VerdictStatus.INVALID):
            raise ValueError(f'A verdict carries a witness iff it is invalid, got {self.status.value} '
                             f'with{"out" if self.witness is None else ""} witness')

    @property
    def valid(self) -> bool:
        return self.status == VerdictStatus.VALID


def _discriminates(tree: PointedTree, s: Term, t: Term) -> bool:
    return member_down(tree, s) != member_down(tree, t)


def witness_search(s: Term, t: Term, max_edges: Optional[int] = None,
                   alphabet: Optional[Iterable[str]] = None) -> Optional[PointedTree]:
    """
    Enumerates reduced pointed trees by size and returns the first one satisfying exactly one of s and t. Without a
    bound on the number of edges the search only terminates if s = t is invalid.
    :return: the tree, or None if none exists within ``max_edges`` edges
    """
    labels = sorted(set(variables(s)) | set(variables(t)) | set(alphabet or []))
    edges = 0
    while max_edges is None or edges <= max_edges:
        trees = enumerate_exact(labels, edges)
        if len(trees) == 0:
            # without labels there is only the one-vertex tree
            return None
        for tree in trees:
            if _discriminates(tree, s, t):
                return tree
        edges += 1
    LOG.warning(f'No tree with at most {max_edges} edges discriminates {render(s)} and {render(t)}')
    return None


def _verify_witness(tree: PointedTree, s: Term, t: Term):
    struct, root, point = tree_to_struct(tree)
    if satisfies(root, point, s, struct, strict=False) == satisfies(root, point, t, struct, strict=False):
        raise RuntimeError(f'Witness {tree} does not discriminate {render(s)} and {render(t)}')


def decide_full(s: Term, t: Term, max_witness_edges: Optional[int] = None) -> Verdict:
    """
    Decides s = t for terms over ``;``, ``+``, ``*``, ``0``, ``1`` and ``D``.
    :param s: The left hand side
    :param t: The right hand side
    :param max_witness_edges: Bound for the witness search; defaults to the ``witness_max_edges`` setting
    :return: the verdict with the metrics of every stage
    :raises FragmentError: if a term contains antidomain
    """
    require_fragment(s, Fragment.FULL, 'decide_full')
    require_fragment(t, Fragment.FULL, 'decide_full')
    if max_witness_edges is None:
        max_witness_edges = get_settings().witness_max_edges
    metrics = OrderedDict()
    guards = sorted(set(guard_atoms(s)) | set(guard_atoms(t)), key=render)
    alphabet = sorted(set(variables(s)) | set(variables(t)))
    metrics['guards'] = len(guards)

    started = time.perf_counter()
    condition_s = compile_term(s)
    condition_t = compile_term(t)
    guarded_s = to_guarded(condition_s, guards, alphabet)
    guarded_t = to_guarded(condition_t, guards, alphabet)
    metrics['condition_states_s'] = condition_s.state_count
    metrics['condition_states_t'] = condition_t.state_count
    metrics['guarded_states_s'] = guarded_s.state_count
    metrics['guarded_states_t'] = guarded_t.state_count
    metrics['seconds_compile'] = time.perf_counter() - started

    started = time.perf_counter()
    s_minus_t = trim(difference(guarded_s, guarded_t))
    t_minus_s = trim(difference(guarded_t, guarded_s))
    metrics['difference_states_s_t'] = s_minus_t.state_count
    metrics['difference_states_t_s'] = t_minus_s.state_count
    metrics['seconds_difference'] = time.perf_counter() - started

    started = time.perf_counter()
    tau_s_t = extract_term(s_minus_t)
    tau_t_s = extract_term(t_minus_s)
    metrics['term_size_s_t'] = size(tau_s_t)
    metrics['term_size_t_s'] = size(tau_t_s)
    metrics['seconds_extract'] = time.perf_counter() - started

    started = time.perf_counter()
    result_s_t = check_satisfiability(translate(tau_s_t))
    result_t_s = check_satisfiability(translate(tau_t_s))
    metrics['types_s_t'] = result_s_t.type_count
    metrics['types_t_s'] = result_t_s.type_count
    metrics['seconds_satisfiability'] = time.perf_counter() - started

    if not result_s_t.satisfiable and not result_t_s.satisfiable:
        LOG.info(f'{render(s)} = {render(t)} is valid')
        return Verdict(VerdictStatus.VALID, None, metrics)

    started = time.perf_counter()
    witness = witness_search(s, t, max_witness_edges)
    metrics['seconds_witness'] = time.perf_counter() - started
    if witness is None:
        LOG.warning(f'{render(s)} = {render(t)} is invalid, but no witness was found within '
                    f'{max_witness_edges} edges')
        return Verdict(VerdictStatus.UNKNOWN_AT_SCALE, None, metrics)
    _verify_witness(witness, s, t)
    metrics['witness_edges'] = edge_count(witness)
    LOG.info(f'{render(s)} = {render(t)} is invalid')
    return Verdict(VerdictStatus.INVALID, witness, metrics)
