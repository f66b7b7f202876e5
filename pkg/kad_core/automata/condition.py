"""
Description
===========

Condition automata: nondeterministic automata reading the edge labels along a path of a structure, whose states carry
conditions that must hold at the vertex where the state is visited. A condition is a set of signed guard atoms; the
atom ``u`` with a positive sign requires ``D(u)``, with a negative sign ``A(u)``.
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from kad_core.relstruct import RelStruct, StructPath, relation_matrix
from kad_core.terms import Antidom, Comp, Dom, One, Star, Term, Union, Var, Zero, render

__author__ = 'KAD Team'

Transition = Tuple[int, Optional[str], int]


@dataclass(frozen=True)
class GuardAtom(object):
    term: Term
    positive: bool

    def render(self) -> str:
        return f'+D({render(self.term)})' if self.positive else f'-A({render(self.term)})'


class ConditionAutomaton(object):

    def __init__(self, state_count: int, initial: Iterable[int], final: Iterable[int],
                 transitions: Iterable[Transition], conditions: Optional[Dict[int, Iterable[GuardAtom]]] = None):
        self._state_count = state_count
        self._initial = frozenset(initial)
        self._final = frozenset(final)
        self._transitions = frozenset(transitions)
        conditions = conditions or {}
        self._conditions = {state: frozenset(conditions.get(state, ())) for state in range(state_count)}
        self._alphabet = frozenset(label for _, label, _ in self._transitions if label is not None)
        self._successors = {state: [] for state in range(state_count)}
        for source, label, target in sorted(self._transitions, key=_transition_order):
            self._successors[source].append((label, target))

    @property
    def state_count(self) -> int:
        return self._state_count

    @property
    def initial(self) -> FrozenSet[int]:
        return self._initial

    @property
    def final(self) -> FrozenSet[int]:
        return self._final

    @property
    def transitions(self) -> FrozenSet[Transition]:
        return self._transitions

    @property
    def alphabet(self) -> FrozenSet[str]:
        return self._alphabet

    def condition(self, state: int) -> FrozenSet[GuardAtom]:
        return self._conditions[state]

    def successors(self, state: int) -> List[Tuple[Optional[str], int]]:
        return self._successors[state]

    def guard_terms(self) -> List[Term]:
        terms = []
        for state in range(self._state_count):
            for atom in sorted(self._conditions[state], key=lambda atom: (render(atom.term), atom.positive)):
                if atom.term not in terms:
                    terms.append(atom.term)
        return terms

    def __repr__(self):
        return f'ConditionAutomaton({self._state_count} states, {len(self._transitions)} transitions)'


def _transition_order(transition: Transition):
    source, label, target = transition
    return source, '' if label is None else label, target


class _Builder(object):

    def __init__(self):
        self.state_count = 0
        self.transitions = []
        self.conditions = {}

    def new_state(self) -> int:
        self.state_count += 1
        return self.state_count - 1

    def build(self, t: Term) -> Tuple[int, int]:
        if isinstance(t, Var):
            start, end = self.new_state(), self.new_state()
            self.transitions.append((start, t.name, end))
            return start, end
        if isinstance(t, One):
            state = self.new_state()
            return state, state
        if isinstance(t, Zero):
            return self.new_state(), self.new_state()
        if isinstance(t, (Dom, Antidom)):
            state = self.new_state()
            self.conditions[state] = {GuardAtom(t.body, isinstance(t, Dom))}
            return state, state
        if isinstance(t, Comp):
            left_start, left_end = self.build(t.left)
            right_start, right_end = self.build(t.right)
            self.transitions.append((left_end, None, right_start))
            return left_start, right_end
        if isinstance(t, Union):
            start, end = self.new_state(), self.new_state()
            for branch in (t.left, t.right):
                branch_start, branch_end = self.build(branch)
                self.transitions.append((start, None, branch_start))
                self.transitions.append((branch_end, None, end))
            return start, end
        if isinstance(t, Star):
            start, end = self.new_state(), self.new_state()
            body_start, body_end = self.build(t.body)
            self.transitions.append((start, None, body_start))
            self.transitions.append((start, None, end))
            self.transitions.append((body_end, None, body_start))
            self.transitions.append((body_end, None, end))
            return start, end
        raise TypeError(f'Not a term: {t!r}')


def compile_term(t: Term) -> ConditionAutomaton:
    """
    Builds a condition automaton for a term, Thompson style. ``D(u)`` and ``A(u)`` become a single state that is
    entered and left without reading a letter and carries the corresponding condition.
    """
    builder = _Builder()
    start, end = builder.build(t)
    return ConditionAutomaton(builder.state_count, [start], [end], builder.transitions, builder.conditions)


def epsilon_closure(automaton: ConditionAutomaton, states: Iterable[int], admissible) -> Set[int]:
    """
    :param admissible: A predicate telling whether a state's condition holds where the closure is taken
    :return: the admissible states reachable from the admissible ones among ``states`` by epsilon transitions
    """
    closure = set(state for state in states if admissible(state))
    pending = list(closure)
    while len(pending) > 0:
        state = pending.pop()
        for label, target in automaton.successors(state):
            if label is None and target not in closure and admissible(target):
                closure.add(target)
                pending.append(target)
    return closure


def guard_domains(atoms: Iterable[Term], m: RelStruct) -> Dict[Term, List[bool]]:
    """
    :return: for every atom, which vertices of m have a successor under it
    """
    return {atom: relation_matrix(atom, m, strict=False).any(axis=1).tolist() for atom in atoms}


def accepts(automaton: ConditionAutomaton, m: RelStruct, path: StructPath) -> bool:
    """
    Decides whether the automaton has an accepting run along the path in which every visited state's condition
    holds at the vertex it is visited at.
    """
    domains = guard_domains(automaton.guard_terms(), m)

    def _admissible_at(vertex: int):
        return lambda state: all(domains[atom.term][vertex] == atom.positive for atom in automaton.condition(state))

    vertices = path.vertices
    current = epsilon_closure(automaton, automaton.initial, _admissible_at(vertices[0]))
    for label, vertex in path.steps:
        targets = [target for state in current for step_label, target in automaton.successors(state)
                   if step_label == label]
        current = epsilon_closure(automaton, targets, _admissible_at(vertex))
        if len(current) == 0:
            return False
    return len(current & automaton.final) > 0


def dump(automaton: ConditionAutomaton) -> str:
    """
    A line oriented listing of an automaton, meant for debugging.
    """
    lines = [f'initial {" ".join(str(state) for state in sorted(automaton.initial))}',
             f'final {" ".join(str(state) for state in sorted(automaton.final))}']
    for source, label, target in sorted(automaton.transitions, key=_transition_order):
        lines.append(f'{source} --{"ε" if label is None else label}--> {target}')
    for state in range(automaton.state_count):
        condition = automaton.condition(state)
        if len(condition) > 0:
            atoms = sorted(atom.render() for atom in condition)
            lines.append(f'{state} ? {" ".join(atoms)}')
    return '\n'.join(lines) + '\n'
