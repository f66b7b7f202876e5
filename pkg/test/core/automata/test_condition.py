import numpy as np

from kad_core.automata import GuardAtom, accepts, compile_term, dump
from kad_core.freealg import member_down
from kad_core.relstruct import RelStruct, StructPath, tree_path, tree_to_struct
from kad_core.terms import Fragment, Var, parse, random_term, render
from kad_core.trees import enumerate_trees, point_path

__author__ = 'KAD Team'


def _accepts_tree(automaton, tree) -> bool:
    struct, _, _ = tree_to_struct(tree, ['a', 'b'])
    return accepts(automaton, struct, tree_path(tree))


def test_compile_variable():
    automaton = compile_term(parse('a'))

    assert frozenset(['a']) == automaton.alphabet
    for tree in enumerate_trees(['a', 'b'], 2):
        assert _accepts_tree(automaton, tree) == (['a'] == point_path(tree))


def test_compile_domain():
    automaton = compile_term(parse('D(a)'))

    assert 1 == automaton.state_count
    assert frozenset([GuardAtom(Var('a'), True)]) == automaton.condition(0)
    assert [Var('a')] == automaton.guard_terms()
    m = RelStruct(2, {'a': [(0, 1)]})
    assert accepts(automaton, m, StructPath(0))
    assert not accepts(automaton, m, StructPath(1))


def test_compile_zero_and_one():
    zero = compile_term(parse('0'))
    one = compile_term(parse('1'))
    m = RelStruct(2, {'a': [(0, 1)]})

    for x in range(2):
        assert not accepts(zero, m, StructPath(x))
        assert accepts(one, m, StructPath(x))
    assert not accepts(one, m, StructPath(0, (('a', 1),)))


def test_accepts_checks_conditions():
    automaton = compile_term(parse('D(b);a'))
    path = StructPath(0, (('a', 1),))

    assert accepts(automaton, RelStruct(3, {'a': [(0, 1)], 'b': [(0, 2)]}), path)
    assert not accepts(automaton, RelStruct(3, {'a': [(0, 1)], 'b': []}), path)


def test_compile_agrees_with_member_down():
    rng = np.random.default_rng(41)
    trees = list(enumerate_trees(['a', 'b'], 3))
    for _ in range(40):
        t = random_term(rng, ['a', 'b'], 6, Fragment.WITH_ANTIDOMAIN)
        automaton = compile_term(t)
        for tree in trees:
            assert _accepts_tree(automaton, tree) == member_down(tree, t), f'{render(t)} on {tree}'


def test_dump():
    expected = 'initial 0\n' \
               'final 2\n' \
               '0 --ε--> 1\n' \
               '1 --a--> 2\n' \
               '0 ? +D(b)\n'

    assert expected == dump(compile_term(parse('D(b);a')))
    assert '0 ? -A(a;b)\n' == dump(compile_term(parse('A(a;b)'))).splitlines(keepends=True)[-1]
