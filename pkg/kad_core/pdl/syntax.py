"""
Description
===========

Propositional dynamic logic without propositional variables, and the translation of terms into it. A term ``t`` is
translated into the program ``P(t)``; the pairs satisfying ``t`` are exactly those connected by ``P(t)``, so ``t`` is
satisfiable somewhere iff ``<P(t)>T`` is.
"""

from dataclasses import dataclass

from kad_core import terms

__author__ = 'KAD Team'


class Program(object):

    def __str__(self):
        return render_program(self)


class Formula(object):

    def __str__(self):
        return render_formula(self)


@dataclass(frozen=True, repr=False)
class Atomic(Program):
    label: str

    def __repr__(self):
        return f'Atomic({self.label})'


@dataclass(frozen=True, repr=False)
class Test(Program):
    __test__ = False

    formula: Formula

    def __repr__(self):
        return f'Test({self.formula!r})'


@dataclass(frozen=True, repr=False)
class Comp(Program):
    first: Program
    second: Program

    def __repr__(self):
        return f'Comp({self.first!r}, {self.second!r})'


@dataclass(frozen=True, repr=False)
class Union(Program):
    left: Program
    right: Program

    def __repr__(self):
        return f'Union({self.left!r}, {self.right!r})'


@dataclass(frozen=True, repr=False)
class Star(Program):
    body: Program

    def __repr__(self):
        return f'Star({self.body!r})'


@dataclass(frozen=True, repr=False)
class Top(Formula):

    def __repr__(self):
        return 'Top'


@dataclass(frozen=True, repr=False)
class Bottom(Formula):

    def __repr__(self):
        return 'Bottom'


@dataclass(frozen=True, repr=False)
class Not(Formula):
    body: Formula

    def __repr__(self):
        return f'Not({self.body!r})'


@dataclass(frozen=True, repr=False)
class And(Formula):
    left: Formula
    right: Formula

    def __repr__(self):
        return f'And({self.left!r}, {self.right!r})'


@dataclass(frozen=True, repr=False)
class Or(Formula):
    left: Formula
    right: Formula

    def __repr__(self):
        return f'Or({self.left!r}, {self.right!r})'


@dataclass(frozen=True, repr=False)
class Diamond(Formula):
    program: Program
    body: Formula

    def __repr__(self):
        return f'Diamond({self.program!r}, {self.body!r})'


@dataclass(frozen=True, repr=False)
class Box(Formula):
    program: Program
    body: Formula

    def __repr__(self):
        return f'Box({self.program!r}, {self.body!r})'


def render_program(program: Program) -> str:
    if isinstance(program, Atomic):
        return program.label
    if isinstance(program, Test):
        return f'{render_formula(program.formula)}?'
    if isinstance(program, Comp):
        return f'({render_program(program.first)} ; {render_program(program.second)})'
    if isinstance(program, Union):
        return f'({render_program(program.left)} ∪ {render_program(program.right)})'
    if isinstance(program, Star):
        return f'{render_program(program.body)}*'
    raise TypeError(f'Not a program: {program!r}')


def render_formula(formula: Formula) -> str:
    if isinstance(formula, Top):
        return '⊤'
    if isinstance(formula, Bottom):
        return '⊥'
    if isinstance(formula, Not):
        return f'¬{render_formula(formula.body)}'
    if isinstance(formula, And):
        return f'({render_formula(formula.left)} ∧ {render_formula(formula.right)})'
    if isinstance(formula, Or):
        return f'({render_formula(formula.left)} ∨ {render_formula(formula.right)})'
    if isinstance(formula, Diamond):
        return f'⟨{render_program(formula.program)}⟩{render_formula(formula.body)}'
    if isinstance(formula, Box):
        return f'[{render_program(formula.program)}]{render_formula(formula.body)}'
    raise TypeError(f'Not a formula: {formula!r}')


def translate_program(t: terms.Term) -> Program:
    if isinstance(t, terms.Var):
        return Atomic(t.name)
    if isinstance(t, terms.Zero):
        return Test(Bottom())
    if isinstance(t, terms.One):
        return Test(Top())
    if isinstance(t, terms.Comp):
        return Comp(translate_program(t.left), translate_program(t.right))
    if isinstance(t, terms.Union):
        return Union(translate_program(t.left), translate_program(t.right))
    if isinstance(t, terms.Star):
        return Star(translate_program(t.body))
    if isinstance(t, terms.Dom):
        return Test(Diamond(translate_program(t.body), Top()))
    if isinstance(t, terms.Antidom):
        return Test(Not(Diamond(translate_program(t.body), Top())))
    raise TypeError(f'Not a term: {t!r}')


def translate(t: terms.Term) -> Formula:
    return Diamond(translate_program(t), Top())


def nnf_program(program: Program) -> Program:
    if isinstance(program, Atomic):
        return program
    if isinstance(program, Test):
        return Test(nnf(program.formula))
    if isinstance(program, Comp):
        return Comp(nnf_program(program.first), nnf_program(program.second))
    if isinstance(program, Union):
        return Union(nnf_program(program.left), nnf_program(program.right))
    if isinstance(program, Star):
        return Star(nnf_program(program.body))
    raise TypeError(f'Not a program: {program!r}')


def nnf(formula: Formula) -> Formula:
    """
    Pushes negations inwards until none are left; boxes and disjunctions take their place.
    """
    if isinstance(formula, (Top, Bottom)):
        return formula
    if isinstance(formula, Not):
        return negate(formula.body)
    if isinstance(formula, And):
        return And(nnf(formula.left), nnf(formula.right))
    if isinstance(formula, Or):
        return Or(nnf(formula.left), nnf(formula.right))
    if isinstance(formula, Diamond):
        return Diamond(nnf_program(formula.program), nnf(formula.body))
    if isinstance(formula, Box):
        return Box(nnf_program(formula.program), nnf(formula.body))
    raise TypeError(f'Not a formula: {formula!r}')


def negate(formula: Formula) -> Formula:
    """
    :return: the negation normal form of the negation of the formula
    """
    if isinstance(formula, Top):
        return Bottom()
    if isinstance(formula, Bottom):
        return Top()
    if isinstance(formula, Not):
        return nnf(formula.body)
    if isinstance(formula, And):
        return Or(negate(formula.left), negate(formula.right))
    if isinstance(formula, Or):
        return And(negate(formula.left), negate(formula.right))
    if isinstance(formula, Diamond):
        return Box(nnf_program(formula.program), negate(formula.body))
    if isinstance(formula, Box):
        return Diamond(nnf_program(formula.program), negate(formula.body))
    raise TypeError(f'Not a formula: {formula!r}')
