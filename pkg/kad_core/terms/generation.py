"""
Description
===========

Seeded random generation of terms, used by the self test and by the larger test suites.
"""

from typing import List, Tuple
import numpy as np

from .term import Antidom, Comp, Dom, Fragment, One, Star, Term, Union, Var, Zero

__author__ = 'KAD Team'

_UNARY = {
    Fragment.CD1: ['D'],
    Fragment.STAR_FREE: ['D'],
    Fragment.FULL: ['D', '*'],
    Fragment.WITH_ANTIDOMAIN: ['D', '*', 'A'],
}
_BINARY = {
    Fragment.CD1: [';'],
    Fragment.STAR_FREE: [';', '+'],
    Fragment.FULL: [';', '+'],
    Fragment.WITH_ANTIDOMAIN: [';', '+'],
}


def _leaves(alphabet: List[str], fragment: Fragment) -> List[Term]:
    leaves = [Var(label) for label in alphabet]
    leaves.append(One())
    if fragment >= Fragment.STAR_FREE:
        leaves.append(Zero())
    return leaves


def _random_term_with_operators(rng: np.random.Generator, leaves: List[Term], unary: List[str], binary: List[str],
                                operators: int) -> Term:
    if operators == 0:
        # variables are drawn twice as often as constants
        weights = np.array([2.0 if isinstance(leaf, Var) else 1.0 for leaf in leaves])
        return leaves[rng.choice(len(leaves), p=weights / weights.sum())]
    if rng.random() < 0.3:
        symbol = unary[rng.integers(len(unary))]
        body = _random_term_with_operators(rng, leaves, unary, binary, operators - 1)
        if symbol == 'D':
            return Dom(body)
        if symbol == 'A':
            return Antidom(body)
        return Star(body)
    symbol = binary[rng.integers(len(binary))]
    left_operators = int(rng.integers(operators))
    left = _random_term_with_operators(rng, leaves, unary, binary, left_operators)
    right = _random_term_with_operators(rng, leaves, unary, binary, operators - 1 - left_operators)
    if symbol == ';':
        return Comp(left, right)
    return Union(left, right)


def random_term(rng: np.random.Generator, alphabet: List[str], max_operators: int,
                fragment: Fragment = Fragment.STAR_FREE) -> Term:
    """
    Draws a random term with at most ``max_operators`` operators whose operators all lie in ``fragment``.
    :param rng: A numpy random generator
    :param alphabet: The variables to draw from
    :param max_operators: Upper bound on the number of operator nodes
    :param fragment: The fragment the term must lie in
    :return: The term
    """
    if len(alphabet) == 0:
        raise ValueError('Alphabet must not be empty')
    operators = int(rng.integers(max_operators + 1))
    return _random_term_with_operators(rng, _leaves(alphabet, fragment), _UNARY[fragment], _BINARY[fragment],
                                       operators)


def random_term_pairs(seed: int, alphabet: List[str], max_operators: int, count: int,
                      fragment: Fragment = Fragment.STAR_FREE) -> List[Tuple[Term, Term]]:
    rng = np.random.default_rng(seed)
    return [(random_term(rng, alphabet, max_operators, fragment), random_term(rng, alphabet, max_operators, fragment))
            for _ in range(count)]
