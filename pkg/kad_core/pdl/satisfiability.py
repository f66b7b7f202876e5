"""
Description
===========

Satisfiability of variable-free PDL formulas by type elimination. Types are saturated, clash-free sets of formulas in
negation normal form, generated on demand from the goal formula and from the successor requirements of atomic
diamonds. Types are then deleted in rounds: a type goes when one of its formulas cannot be fulfilled by the surviving
types. Fulfilment is a least fixpoint, so an eventuality ``<a*>p`` has to be reached after finitely many steps.
"""

from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Set, Tuple
import numpy as np

from kad_core.relstruct import RelStruct, reflexive_transitive_closure
from kad_core.util import get_logger

from .syntax import And, Atomic, Bottom, Box, Comp, Diamond, Formula, Not, Or, Program, Star, Test, Top, Union, \
    negate, nnf

__author__ = 'KAD Team'

LOG = get_logger(__name__)


@dataclass(frozen=True)
class PDLModel(object):
    struct: RelStruct
    world: int


@dataclass(frozen=True)
class SatisfiabilityResult(object):
    satisfiable: bool
    model: Optional[PDLModel]
    type_count: int
    rounds: int


def _is_elementary(formula: Formula) -> bool:
    return isinstance(formula, (Top, Bottom)) or \
           (isinstance(formula, (Diamond, Box)) and isinstance(formula.program, Atomic))


def _decompose(formula: Formula) -> Formula:
    """
    The equivalent formula one step closer to atomic modalities.
    """
    program = formula.program
    body = formula.body
    if isinstance(formula, Diamond):
        if isinstance(program, Comp):
            return Diamond(program.first, Diamond(program.second, body))
        if isinstance(program, Union):
            return Or(Diamond(program.left, body), Diamond(program.right, body))
        if isinstance(program, Star):
            return Or(body, Diamond(program.body, formula))
        if isinstance(program, Test):
            return And(program.formula, body)
    else:
        if isinstance(program, Comp):
            return Box(program.first, Box(program.second, body))
        if isinstance(program, Union):
            return And(Box(program.left, body), Box(program.right, body))
        if isinstance(program, Star):
            return And(body, Box(program.body, formula))
        if isinstance(program, Test):
            return Or(negate(program.formula), body)
    raise TypeError(f'Cannot decompose {formula!r}')


class _TypeElimination(object):

    def __init__(self, goal: Formula):
        self._goal = nnf(goal)
        self._types = []
        self._type_numbers = {}
        self._expansions = {}
        self._successors = {}

    def _expand(self, seed: FrozenSet[Formula]) -> List[int]:
        if seed not in self._expansions:
            saturated = set()
            self._saturate(frozenset(seed), list(seed), saturated)
            numbers = []
            for formula_type in sorted(saturated, key=lambda candidate: (len(candidate), sorted(map(repr, candidate)))):
                if formula_type not in self._type_numbers:
                    self._type_numbers[formula_type] = len(self._types)
                    self._types.append(formula_type)
                numbers.append(self._type_numbers[formula_type])
            self._expansions[seed] = numbers
        return self._expansions[seed]

    def _saturate(self, current: FrozenSet[Formula], todo: List[Formula], saturated: Set[FrozenSet[Formula]]):
        todo = list(todo)
        while len(todo) > 0:
            formula = todo.pop()
            if isinstance(formula, Bottom):
                return
            if isinstance(formula, And):
                added = [part for part in (formula.left, formula.right) if part not in current]
                current = current | frozenset(added)
                todo.extend(added)
            elif isinstance(formula, Or):
                if formula.left in current or formula.right in current:
                    continue
                for option in (formula.left, formula.right):
                    self._saturate(current | {option}, todo + [option], saturated)
                return
            elif not _is_elementary(formula):
                decomposed = _decompose(formula)
                if decomposed not in current:
                    current = current | {decomposed}
                    todo.append(decomposed)
        saturated.add(current)

    def _explore(self) -> List[int]:
        roots = self._expand(frozenset([self._goal]))
        pending = list(roots)
        seen = set(pending)
        while len(pending) > 0:
            number = pending.pop()
            formula_type = self._types[number]
            successors = {}
            for formula in formula_type:
                if isinstance(formula, Diamond) and isinstance(formula.program, Atomic):
                    label = formula.program.label
                    seed = frozenset([formula.body] + [box.body for box in formula_type
                                                       if isinstance(box, Box) and isinstance(box.program, Atomic)
                                                       and box.program.label == label])
                    successors[formula] = self._expand(seed)
                    for successor in successors[formula]:
                        if successor not in seen:
                            seen.add(successor)
                            pending.append(successor)
            self._successors[number] = successors
        return roots

    def _fulfilled(self, alive: Set[int]) -> Set[Tuple[int, Formula]]:
        fulfilled = set()
        changed = True
        while changed:
            changed = False
            for number in sorted(alive):
                for formula in self._types[number]:
                    if (number, formula) not in fulfilled and self._holds_now(number, formula, alive, fulfilled):
                        fulfilled.add((number, formula))
                        changed = True
        return fulfilled

    def _holds_now(self, number: int, formula: Formula, alive: Set[int], fulfilled: Set[Tuple[int, Formula]]) \
            -> bool:
        if isinstance(formula, (Top, Box)):
            return True
        if isinstance(formula, Bottom):
            return False
        if isinstance(formula, And):
            return (number, formula.left) in fulfilled and (number, formula.right) in fulfilled
        if isinstance(formula, Or):
            return (number, formula.left) in fulfilled or (number, formula.right) in fulfilled
        if isinstance(formula.program, Atomic):
            return any(successor in alive and (successor, formula.body) in fulfilled
                       for successor in self._successors[number][formula])
        return (number, _decompose(formula)) in fulfilled

    def solve(self) -> SatisfiabilityResult:
        roots = self._explore()
        alive = set(self._successors.keys())
        rounds = 0
        while True:
            rounds += 1
            fulfilled = self._fulfilled(alive)
            doomed = {number for number in alive
                      if any((number, formula) not in fulfilled for formula in self._types[number])}
            if len(doomed) == 0:
                break
            alive -= doomed
        LOG.debug(f'Type elimination: {len(self._types)} types, {len(alive)} survive after {rounds} rounds')
        surviving_roots = [root for root in roots if root in alive]
        if len(surviving_roots) == 0:
            return SatisfiabilityResult(False, None, len(self._types), rounds)
        return SatisfiabilityResult(True, self._model(surviving_roots[0], alive), len(self._types), rounds)

    def _model(self, root: int, alive: Set[int]) -> PDLModel:
        worlds = {root: 0}
        order = [root]
        edges = {label: set() for label in atomic_labels(self._goal)}
        index = 0
        while index < len(order):
            number = order[index]
            index += 1
            for formula, successors in self._successors[number].items():
                for successor in successors:
                    if successor not in alive:
                        continue
                    if successor not in worlds:
                        worlds[successor] = len(order)
                        order.append(successor)
                    edges[formula.program.label].add((worlds[number], worlds[successor]))
        return PDLModel(RelStruct(len(order), edges), 0)


def atomic_labels(formula: Formula) -> List[str]:
    labels = set()

    def _visit_program(program: Program):
        if isinstance(program, Atomic):
            labels.add(program.label)
        elif isinstance(program, Test):
            _visit_formula(program.formula)
        elif isinstance(program, Comp):
            _visit_program(program.first)
            _visit_program(program.second)
        elif isinstance(program, Union):
            _visit_program(program.left)
            _visit_program(program.right)
        elif isinstance(program, Star):
            _visit_program(program.body)

    def _visit_formula(current: Formula):
        if isinstance(current, Not):
            _visit_formula(current.body)
        elif isinstance(current, (And, Or)):
            _visit_formula(current.left)
            _visit_formula(current.right)
        elif isinstance(current, (Diamond, Box)):
            _visit_program(current.program)
            _visit_formula(current.body)

    _visit_formula(formula)
    return sorted(labels)


def check_satisfiability(formula: Formula) -> SatisfiabilityResult:
    return _TypeElimination(formula).solve()


def satisfiable(formula: Formula) -> Tuple[bool, Optional[PDLModel]]:
    """
    Decides whether a formula holds at some world of some model.
    :return: the answer and, if it is positive, a finite model together with a world where the formula holds
    """
    result = check_satisfiability(formula)
    return result.satisfiable, result.model


def _program_matrix(program: Program, struct: RelStruct) -> np.ndarray:
    if isinstance(program, Atomic):
        return struct.matrix(program.label)
    if isinstance(program, Test):
        return np.diag(_formula_vector(program.formula, struct))
    if isinstance(program, Comp):
        product = np.matmul(_program_matrix(program.first, struct).astype(np.int32),
                            _program_matrix(program.second, struct).astype(np.int32))
        return product > 0
    if isinstance(program, Union):
        return _program_matrix(program.left, struct) | _program_matrix(program.right, struct)
    if isinstance(program, Star):
        return reflexive_transitive_closure(_program_matrix(program.body, struct))
    raise TypeError(f'Not a program: {program!r}')


def _formula_vector(formula: Formula, struct: RelStruct) -> np.ndarray:
    n = struct.vertex_count
    if isinstance(formula, Top):
        return np.ones(n, dtype=bool)
    if isinstance(formula, Bottom):
        return np.zeros(n, dtype=bool)
    if isinstance(formula, Not):
        return ~_formula_vector(formula.body, struct)
    if isinstance(formula, And):
        return _formula_vector(formula.left, struct) & _formula_vector(formula.right, struct)
    if isinstance(formula, Or):
        return _formula_vector(formula.left, struct) | _formula_vector(formula.right, struct)
    if isinstance(formula, Diamond):
        relation = _program_matrix(formula.program, struct)
        return (relation & _formula_vector(formula.body, struct)[None, :]).any(axis=1)
    if isinstance(formula, Box):
        relation = _program_matrix(formula.program, struct)
        return ~(relation & ~_formula_vector(formula.body, struct)[None, :]).any(axis=1)
    raise TypeError(f'Not a formula: {formula!r}')


def holds(formula: Formula, struct: RelStruct) -> FrozenSet[int]:
    """
    Model checking: the worlds of the structure where the formula is true.
    """
    return frozenset(np.nonzero(_formula_vector(formula, struct))[0].tolist())
