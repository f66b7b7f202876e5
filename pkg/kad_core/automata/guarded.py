"""
Description
===========

Guarded automata: ordinary nondeterministic automata over an alphabet of edge labels and guard valuations. A
valuation assigns true or false to each atom of a fixed guard list. Well-formed words alternate valuations and
labels, starting and ending with a valuation: ``V0 a1 V1 ... ak Vk``. Because conditions have become symbols, the
classical constructions (subset construction, complement, product) apply unchanged, and state elimination yields a
term again, with valuations written as compositions of ``D(u)`` and ``A(u)``.
"""

from collections import deque
from dataclasses import dataclass
from itertools import product as cartesian_product
from typing import Dict, FrozenSet, Hashable, Iterable, List, Optional, Sequence, Tuple, Union

from kad_core.relstruct import RelStruct, StructPath
from kad_core.terms import Antidom, Dom, One, Term, Var, Zero, mk_comp, mk_comp_all, mk_star, mk_union, render
from kad_core.util import get_logger

from .condition import ConditionAutomaton, epsilon_closure, guard_domains

__author__ = 'KAD Team'

LOG = get_logger(__name__)


class GuardError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Valuation(object):
    values: Tuple[bool, ...]

    def __str__(self):
        return 'val(' + ','.join('+' if value else '-' for value in self.values) + ')'


Symbol = Union[str, Valuation]
Word = List[Symbol]


def all_valuations(guard_count: int) -> List[Valuation]:
    return [Valuation(values) for values in cartesian_product((False, True), repeat=guard_count)]


class GuardedNFA(object):

    def __init__(self, guards: Sequence[Term], alphabet: Iterable[str], state_count: int, initial: Iterable[int],
                 final: Iterable[int], transitions: Dict[int, Dict[Symbol, Iterable[int]]]):
        self._guards = tuple(guards)
        self._alphabet = tuple(sorted(set(alphabet)))
        self._state_count = state_count
        self._initial = frozenset(initial)
        self._final = frozenset(final)
        self._transitions = {}
        for state, moves in transitions.items():
            cleaned = {symbol: frozenset(targets) for symbol, targets in moves.items() if len(targets) > 0}
            if len(cleaned) > 0:
                self._transitions[state] = cleaned

    @property
    def guards(self) -> Tuple[Term, ...]:
        return self._guards

    @property
    def alphabet(self) -> Tuple[str, ...]:
        return self._alphabet

    @property
    def state_count(self) -> int:
        return self._state_count

    @property
    def initial(self) -> FrozenSet[int]:
        return self._initial

    @property
    def final(self) -> FrozenSet[int]:
        return self._final

    def symbols(self) -> List[Symbol]:
        return list(all_valuations(len(self._guards))) + list(self._alphabet)

    def moves(self, state: int) -> Dict[Symbol, FrozenSet[int]]:
        return self._transitions.get(state, {})

    def step(self, states: Iterable[int], symbol: Symbol) -> FrozenSet[int]:
        targets = set()
        for state in states:
            targets.update(self.moves(state).get(symbol, ()))
        return frozenset(targets)

    def transition_count(self) -> int:
        return sum(len(targets) for moves in self._transitions.values() for targets in moves.values())

    def __repr__(self):
        return f'GuardedNFA({self._state_count} states, {len(self._guards)} guards, {self._alphabet})'


class _StateTable(object):
    """
    Numbers states of a construction in order of discovery.
    """

    def __init__(self):
        self._numbers = {}
        self._pending = deque()

    def number(self, key: Hashable) -> int:
        if key not in self._numbers:
            self._numbers[key] = len(self._numbers)
            self._pending.append(key)
        return self._numbers[key]

    def next_pending(self) -> Optional[Hashable]:
        return self._pending.popleft() if len(self._pending) > 0 else None

    def __len__(self):
        return len(self._numbers)


def _check_compatible(first: GuardedNFA, second: GuardedNFA):
    if first.guards != second.guards:
        raise GuardError('Automata have different guard lists')
    if first.alphabet != second.alphabet:
        raise GuardError(f'Automata have different alphabets: {first.alphabet} and {second.alphabet}')


def to_guarded(automaton: ConditionAutomaton, guards: Sequence[Term],
               alphabet: Optional[Iterable[str]] = None) -> GuardedNFA:
    """
    Translates a condition automaton into a guarded automaton over the given guard list. A run reading
    ``V0 a1 V1 ...`` corresponds to a run of the condition automaton whose state at the i-th vertex is consistent
    with ``Vi``.
    :raises GuardError: if a condition uses an atom missing from the guard list
    """
    guards = tuple(guards)
    index = {guard: position for position, guard in enumerate(guards)}
    for guard in automaton.guard_terms():
        if guard not in index:
            raise GuardError(f'Guard atom {render(guard)} is missing from the guard list')
    letters = sorted(set(alphabet if alphabet is not None else automaton.alphabet) | set(automaton.alphabet))
    valuations = all_valuations(len(guards))

    def _consistent(state: int, valuation: Valuation) -> bool:
        return all(valuation.values[index[atom.term]] == atom.positive for atom in automaton.condition(state))

    table = _StateTable()
    initial = [table.number(('pending', state)) for state in sorted(automaton.initial)]
    final = []
    transitions = {}
    key = table.next_pending()
    while key is not None:
        number = table.number(key)
        moves = {}
        if key[0] == 'pending':
            state = key[1]
            for valuation in valuations:
                if _consistent(state, valuation):
                    moves[valuation] = {table.number(('ready', state, valuation))}
        else:
            _, state, valuation = key
            closure = epsilon_closure(automaton, [state], lambda candidate: _consistent(candidate, valuation))
            if len(closure & automaton.final) > 0:
                final.append(number)
            for member in sorted(closure):
                for label, target in automaton.successors(member):
                    if label is not None:
                        moves.setdefault(label, set()).add(table.number(('pending', target)))
        transitions[number] = moves
        key = table.next_pending()
    return GuardedNFA(guards, letters, len(table), initial, final, transitions)


def determinize(automaton: GuardedNFA) -> GuardedNFA:
    """
    The subset construction. The result is complete: every state has a move on every symbol.
    """
    table = _StateTable()
    table.number(automaton.initial)
    final = []
    transitions = {}
    symbols = automaton.symbols()
    subset = table.next_pending()
    while subset is not None:
        number = table.number(subset)
        if len(subset & automaton.final) > 0:
            final.append(number)
        transitions[number] = {symbol: {table.number(automaton.step(subset, symbol))} for symbol in symbols}
        subset = table.next_pending()
    LOG.debug(f'Subset construction: {automaton.state_count} states became {len(table)}')
    return GuardedNFA(automaton.guards, automaton.alphabet, len(table), [0], final, transitions)


def universe(guards: Sequence[Term], alphabet: Iterable[str]) -> GuardedNFA:
    """
    The automaton accepting exactly the well-formed words.
    """
    letters = sorted(set(alphabet))
    valuations = all_valuations(len(guards))
    transitions = {0: {valuation: {1} for valuation in valuations},
                   1: {letter: {2} for letter in letters},
                   2: {valuation: {1} for valuation in valuations}}
    return GuardedNFA(guards, letters, 3, [0], [1], transitions)


def product(first: GuardedNFA, second: GuardedNFA) -> GuardedNFA:
    """
    Accepts the words accepted by both automata.
    """
    _check_compatible(first, second)
    table = _StateTable()
    initial = [table.number(pair) for pair in cartesian_product(sorted(first.initial), sorted(second.initial))]
    final = []
    transitions = {}
    symbols = first.symbols()
    pair = table.next_pending()
    while pair is not None:
        number = table.number(pair)
        left, right = pair
        if left in first.final and right in second.final:
            final.append(number)
        moves = {}
        for symbol in symbols:
            targets = cartesian_product(sorted(first.moves(left).get(symbol, ())),
                                        sorted(second.moves(right).get(symbol, ())))
            moves[symbol] = {table.number(target) for target in targets}
        transitions[number] = moves
        pair = table.next_pending()
    return GuardedNFA(first.guards, first.alphabet, len(table), initial, final, transitions)


def complement(automaton: GuardedNFA) -> GuardedNFA:
    """
    Accepts the well-formed words the automaton rejects.
    """
    deterministic = determinize(automaton)
    flipped = GuardedNFA(deterministic.guards, deterministic.alphabet, deterministic.state_count,
                         deterministic.initial, set(range(deterministic.state_count)) - deterministic.final,
                         {state: deterministic.moves(state) for state in range(deterministic.state_count)})
    return product(flipped, universe(automaton.guards, automaton.alphabet))


def difference(first: GuardedNFA, second: GuardedNFA) -> GuardedNFA:
    _check_compatible(first, second)
    return product(first, complement(second))


def _reachable(starts: Iterable[int], successors: Dict[int, set]) -> set:
    reached = set(starts)
    pending = list(reached)
    while len(pending) > 0:
        state = pending.pop()
        for target in successors.get(state, ()):
            if target not in reached:
                reached.add(target)
                pending.append(target)
    return reached


def trim(automaton: GuardedNFA) -> GuardedNFA:
    """
    Removes the states that are unreachable or cannot reach a final state.
    """
    forward = {}
    backward = {}
    for state in range(automaton.state_count):
        for targets in automaton.moves(state).values():
            for target in targets:
                forward.setdefault(state, set()).add(target)
                backward.setdefault(target, set()).add(state)
    useful = _reachable(automaton.initial, forward) & _reachable(automaton.final, backward)
    numbers = {state: number for number, state in enumerate(sorted(useful))}
    transitions = {}
    for state in sorted(useful):
        transitions[numbers[state]] = {symbol: {numbers[target] for target in targets if target in useful}
                                       for symbol, targets in automaton.moves(state).items()}
    return GuardedNFA(automaton.guards, automaton.alphabet, len(numbers),
                      [numbers[state] for state in automaton.initial if state in useful],
                      [numbers[state] for state in automaton.final if state in useful], transitions)


def is_empty(automaton: GuardedNFA) -> bool:
    return trim(automaton).state_count == 0


def accepts_word(automaton: GuardedNFA, word: Word) -> bool:
    current = automaton.initial
    for symbol in word:
        current = automaton.step(current, symbol)
        if len(current) == 0:
            return False
    return len(current & automaton.final) > 0


def path_word(m: RelStruct, path: StructPath, guards: Sequence[Term]) -> Word:
    """
    The guarded word a path spells: the valuation of every visited vertex, with the edge labels in between.
    """
    domains = guard_domains(guards, m)

    def _valuation(vertex: int) -> Valuation:
        return Valuation(tuple(domains[guard][vertex] for guard in guards))

    word = [_valuation(path.start)]
    for label, vertex in path.steps:
        word.append(label)
        word.append(_valuation(vertex))
    return word


def valuation_term(guards: Sequence[Term], valuation: Valuation) -> Term:
    return mk_comp_all([Dom(guard) if value else Antidom(guard) for guard, value in zip(guards, valuation.values)])


def _symbol_term(guards: Sequence[Term], symbol: Symbol) -> Term:
    if isinstance(symbol, Valuation):
        return valuation_term(guards, symbol)
    return Var(symbol)


def extract_term(automaton: GuardedNFA) -> Term:
    """
    Converts a guarded automaton into a term by state elimination. An automaton without accepting runs yields 0.
    """
    trimmed = trim(automaton)
    if trimmed.state_count == 0:
        return Zero()
    start, end = trimmed.state_count, trimmed.state_count + 1
    edges = {}

    def _add(source: int, target: int, term: Term):
        edges[(source, target)] = mk_union(edges.get((source, target), Zero()), term)

    for state in range(trimmed.state_count):
        for symbol in sorted(trimmed.moves(state).keys(), key=_symbol_order):
            for target in sorted(trimmed.moves(state)[symbol]):
                _add(state, target, _symbol_term(trimmed.guards, symbol))
    for state in sorted(trimmed.initial):
        _add(start, state, One())
    for state in sorted(trimmed.final):
        _add(state, end, One())
    remaining = set(range(trimmed.state_count))
    while len(remaining) > 0:
        # fewest new edges first
        state = min(remaining, key=lambda candidate: (_degree(edges, candidate), candidate))
        remaining.remove(state)
        loop = edges.pop((state, state), None)
        middle = One() if loop is None else mk_star(loop)
        incoming = sorted((source, term) for (source, target), term in edges.items() if target == state)
        outgoing = sorted((target, term) for (source, target), term in edges.items() if source == state)
        for source, _ in incoming:
            del edges[(source, state)]
        for target, _ in outgoing:
            del edges[(state, target)]
        for source, in_term in incoming:
            for target, out_term in outgoing:
                _add(source, target, mk_comp(mk_comp(in_term, middle), out_term))
    return edges.get((start, end), Zero())


def _degree(edges: Dict[Tuple[int, int], Term], state: int) -> int:
    incoming = sum(1 for source, target in edges if target == state and source != state)
    outgoing = sum(1 for source, target in edges if source == state and target != state)
    return incoming * outgoing


def _symbol_order(symbol: Symbol):
    if isinstance(symbol, Valuation):
        return 0, symbol.values, ''
    return 1, (), symbol
