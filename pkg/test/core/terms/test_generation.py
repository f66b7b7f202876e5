import numpy as np

from kad_core.terms import Fragment, classify, operator_count, random_term, random_term_pairs, variables

__author__ = 'KAD Team'


def test_random_term_respects_fragment_and_size():
    rng = np.random.default_rng(7)
    for fragment in Fragment:
        for _ in range(50):
            t = random_term(rng, ['a', 'b'], 6, fragment)
            assert classify(t) <= fragment
            assert operator_count(t) <= 6
            assert set(variables(t)) <= {'a', 'b'}


def test_random_term_pairs_are_reproducible():
    first = random_term_pairs(3, ['a', 'b'], 5, 10)
    second = random_term_pairs(3, ['a', 'b'], 5, 10)

    assert 10 == len(first)
    assert first == second
