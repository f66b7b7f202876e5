"""
Description
===========

Terms of Kleene algebra with domain: composition (written ``;``), union (``+``), reflexive transitive closure (``*``),
the constants ``0`` and ``1``, domain ``D(...)`` and antidomain ``A(...)`` over lowercase variables.

Terms are immutable values. Equality is literal equality of syntax trees.
"""

from dataclasses import dataclass
from enum import IntEnum
from typing import Dict, FrozenSet, List, Optional, Tuple
import re

__author__ = 'KAD Team'


class TermSyntaxError(ValueError):

    def __init__(self, message: str, position: int):
        super().__init__(f'{message} at position {position}')
        self._position = position

    @property
    def position(self) -> int:
        return self._position


class FragmentError(ValueError):
    pass


class Fragment(IntEnum):
    CD1 = 0
    STAR_FREE = 1
    FULL = 2
    WITH_ANTIDOMAIN = 3

    @property
    def label(self) -> str:
        return _FRAGMENT_LABELS[self]

    @classmethod
    def from_label(cls, label: str) -> 'Fragment':
        for fragment, fragment_label in _FRAGMENT_LABELS.items():
            if fragment_label == label:
                return fragment
        raise ValueError(f'Unknown fragment: {label}')


_FRAGMENT_LABELS = {
    Fragment.CD1: 'cd1',
    Fragment.STAR_FREE: 'star-free',
    Fragment.FULL: 'full',
    Fragment.WITH_ANTIDOMAIN: 'with-antidomain',
}


class Term(object):

    def __str__(self):
        return render(self)


@dataclass(frozen=True, repr=False)
class Var(Term):
    name: str

    def __repr__(self):
        return f'Var({self.name})'


@dataclass(frozen=True, repr=False)
class Zero(Term):

    def __repr__(self):
        return 'Zero'


@dataclass(frozen=True, repr=False)
class One(Term):

    def __repr__(self):
        return 'One'


@dataclass(frozen=True, repr=False)
class Comp(Term):
    left: Term
    right: Term

    def __repr__(self):
        return f'Comp({self.left!r}, {self.right!r})'


@dataclass(frozen=True, repr=False)
class Union(Term):
    left: Term
    right: Term

    def __repr__(self):
        return f'Union({self.left!r}, {self.right!r})'


@dataclass(frozen=True, repr=False)
class Star(Term):
    body: Term

    def __repr__(self):
        return f'Star({self.body!r})'


@dataclass(frozen=True, repr=False)
class Dom(Term):
    body: Term

    def __repr__(self):
        return f'Dom({self.body!r})'


@dataclass(frozen=True, repr=False)
class Antidom(Term):
    body: Term

    def __repr__(self):
        return f'Antidom({self.body!r})'


@dataclass(frozen=True)
class Signature(object):
    """
    The operators occurring in a term. Operator names are ``;``, ``+``, ``*``, ``0``, ``1``, ``D`` and ``A``.
    """
    operators: FrozenSet[str]

    @property
    def has_zero(self) -> bool:
        return '0' in self.operators

    @property
    def has_one(self) -> bool:
        return '1' in self.operators

    def within(self, allowed: FrozenSet[str]) -> bool:
        return self.operators <= allowed


CD1_OPERATORS = frozenset([';', '1', 'D'])
CD1_WITH_ZERO_OPERATORS = frozenset([';', '1', 'D', '0'])

_TOKEN_PATTERN = re.compile(r'(?P<ident>[a-z][a-z0-9_]*)|(?P<const>[01])|(?P<guard>[DA])|(?P<symbol>[()+;*])|'
                            r'(?P<space>\s+)')

# binding strength used by render
_UNION_LEVEL = 1
_COMP_LEVEL = 2
_STAR_LEVEL = 3
_ATOM_LEVEL = 4


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    position = 0
    while position < len(text):
        match = _TOKEN_PATTERN.match(text, position)
        if match is None:
            raise TermSyntaxError(f"unknown operator '{text[position]}'", position)
        if match.lastgroup != 'space':
            tokens.append((match.lastgroup, match.group(), position))
        position = match.end()
    return tokens


class _TermParser(object):

    def __init__(self, text: str):
        self._text = text
        self._tokens = _tokenize(text)
        self._index = 0

    def parse(self) -> Term:
        if len(self._tokens) == 0:
            raise TermSyntaxError('syntax error: empty term', 0)
        term = self._parse_sum()
        if self._index < len(self._tokens):
            kind, value, position = self._tokens[self._index]
            if value == ')':
                raise TermSyntaxError("unbalanced parentheses: unexpected ')'", position)
            raise TermSyntaxError(f"syntax error: unexpected '{value}'", position)
        return term

    def _peek(self) -> Optional[str]:
        if self._index < len(self._tokens):
            return self._tokens[self._index][1]
        return None

    def _position(self) -> int:
        if self._index < len(self._tokens):
            return self._tokens[self._index][2]
        return len(self._text)

    def _parse_sum(self) -> Term:
        term = self._parse_prod()
        while self._peek() == '+':
            self._index += 1
            term = Union(term, self._parse_prod())
        return term

    def _parse_prod(self) -> Term:
        term = self._parse_star()
        while self._peek() == ';':
            self._index += 1
            term = Comp(term, self._parse_star())
        return term

    def _parse_star(self) -> Term:
        term = self._parse_atom()
        while self._peek() == '*':
            self._index += 1
            term = Star(term)
        return term

    def _parse_atom(self) -> Term:
        if self._index >= len(self._tokens):
            raise TermSyntaxError('syntax error: unexpected end of input', len(self._text))
        kind, value, position = self._tokens[self._index]
        self._index += 1
        if kind == 'ident':
            return Var(value)
        if kind == 'const':
            return Zero() if value == '0' else One()
        if kind == 'guard':
            if self._peek() != '(':
                raise TermSyntaxError(f"syntax error: expected '(' after '{value}'", self._position())
            self._index += 1
            body = self._parse_enclosed(position)
            return Dom(body) if value == 'D' else Antidom(body)
        if value == '(':
            return self._parse_enclosed(position)
        if value == ')':
            raise TermSyntaxError("unbalanced parentheses: unexpected ')'", position)
        raise TermSyntaxError(f"syntax error: unexpected '{value}'", position)

    def _parse_enclosed(self, opening_position: int) -> Term:
        body = self._parse_sum()
        if self._peek() != ')':
            if self._index >= len(self._tokens):
                raise TermSyntaxError("unbalanced parentheses: missing ')' for '('", opening_position)
            raise TermSyntaxError(f"syntax error: expected ')' but found '{self._peek()}'", self._position())
        self._index += 1
        return body


def parse(text: str) -> Term:
    """
    Parses a term. ``*`` binds tightest, then ``;``, then ``+``; both binary operators associate to the left.
    :param text: The term text
    :return: The abstract syntax tree
    :raises TermSyntaxError: if the text does not conform to the term grammar
    """
    return _TermParser(text).parse()


def _level(t: Term) -> int:
    if isinstance(t, Union):
        return _UNION_LEVEL
    if isinstance(t, Comp):
        return _COMP_LEVEL
    if isinstance(t, Star):
        return _STAR_LEVEL
    return _ATOM_LEVEL


def _wrap(t: Term, needs_parentheses: bool) -> str:
    rendered = render(t)
    return f'({rendered})' if needs_parentheses else rendered


def render(t: Term) -> str:
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Zero):
        return '0'
    if isinstance(t, One):
        return '1'
    if isinstance(t, Union):
        return f'{_wrap(t.left, _level(t.left) < _UNION_LEVEL)} + {_wrap(t.right, _level(t.right) <= _UNION_LEVEL)}'
    if isinstance(t, Comp):
        return f'{_wrap(t.left, _level(t.left) < _COMP_LEVEL)};{_wrap(t.right, _level(t.right) <= _COMP_LEVEL)}'
    if isinstance(t, Star):
        return f'{_wrap(t.body, _level(t.body) < _STAR_LEVEL)}*'
    if isinstance(t, Dom):
        return f'D({render(t.body)})'
    if isinstance(t, Antidom):
        return f'A({render(t.body)})'
    raise TypeError(f'Not a term: {t!r}')


def _operator(t: Term) -> Optional[str]:
    if isinstance(t, Zero):
        return '0'
    if isinstance(t, One):
        return '1'
    if isinstance(t, Comp):
        return ';'
    if isinstance(t, Union):
        return '+'
    if isinstance(t, Star):
        return '*'
    if isinstance(t, Dom):
        return 'D'
    if isinstance(t, Antidom):
        return 'A'
    return None


def subterms(t: Term) -> List[Term]:
    """
    :return: the direct subterms of t
    """
    if isinstance(t, (Comp, Union)):
        return [t.left, t.right]
    if isinstance(t, (Star, Dom, Antidom)):
        return [t.body]
    return []


def signature(t: Term) -> Signature:
    operators = set()
    pending = [t]
    while len(pending) > 0:
        current = pending.pop()
        operator = _operator(current)
        if operator is not None:
            operators.add(operator)
        pending.extend(subterms(current))
    return Signature(frozenset(operators))


def classify(t: Term) -> Fragment:
    operators = signature(t).operators
    if 'A' in operators:
        return Fragment.WITH_ANTIDOMAIN
    if '*' in operators:
        return Fragment.FULL
    if '+' in operators or '0' in operators:
        return Fragment.STAR_FREE
    return Fragment.CD1


def require_fragment(t: Term, fragment: Fragment, operation: str):
    actual = classify(t)
    if actual > fragment:
        raise FragmentError(f'{operation} needs a term in fragment {fragment.label}, '
                            f'but {render(t)} is in fragment {actual.label}')


def variables(t: Term) -> List[str]:
    names = set()
    pending = [t]
    while len(pending) > 0:
        current = pending.pop()
        if isinstance(current, Var):
            names.add(current.name)
        pending.extend(subterms(current))
    return sorted(names)


def size(t: Term) -> int:
    return 1 + sum(size(subterm) for subterm in subterms(t))


def operator_count(t: Term) -> int:
    if isinstance(t, (Var, Zero, One)):
        return 0
    return 1 + sum(operator_count(subterm) for subterm in subterms(t))


def guard_atoms(t: Term) -> List[Term]:
    """
    Collects the bodies of the outermost domain and antidomain subterms, in order of first occurrence.
    Guards nested inside another guard are part of that guard's atom.
    """
    atoms = []

    def _collect(current: Term):
        if isinstance(current, (Dom, Antidom)):
            if current.body not in atoms:
                atoms.append(current.body)
            return
        for subterm in subterms(current):
            _collect(subterm)

    _collect(t)
    return atoms


def substitute(t: Term, mapping: Dict[str, Term]) -> Term:
    if isinstance(t, Var):
        return mapping.get(t.name, t)
    if isinstance(t, Comp):
        return Comp(substitute(t.left, mapping), substitute(t.right, mapping))
    if isinstance(t, Union):
        return Union(substitute(t.left, mapping), substitute(t.right, mapping))
    if isinstance(t, Star):
        return Star(substitute(t.body, mapping))
    if isinstance(t, Dom):
        return Dom(substitute(t.body, mapping))
    if isinstance(t, Antidom):
        return Antidom(substitute(t.body, mapping))
    return t


def mk_comp(left: Term, right: Term) -> Term:
    if isinstance(left, Zero) or isinstance(right, Zero):
        return Zero()
    if isinstance(left, One):
        return right
    if isinstance(right, One):
        return left
    return Comp(left, right)


def mk_union(left: Term, right: Term) -> Term:
    if isinstance(left, Zero):
        return right
    if isinstance(right, Zero):
        return left
    if left == right:
        return left
    return Union(left, right)


def mk_star(body: Term) -> Term:
    if isinstance(body, (Zero, One)):
        return One()
    if isinstance(body, Star):
        return body
    return Star(body)


def mk_comp_all(factors: List[Term]) -> Term:
    result = One()
    for factor in factors:
        result = mk_comp(result, factor)
    return result


def mk_union_all(summands: List[Term]) -> Term:
    result = Zero()
    for summand in summands:
        result = mk_union(result, summand)
    return result
