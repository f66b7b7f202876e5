import pytest

from kad_core.deciders import CD1Decider, FullDecider, StarFreeDecider, decider_for, get_decider, get_decider_names
from kad_core.pdl import VerdictStatus
from kad_core.terms import Fragment, FragmentError, parse
from kad_core.trees import parse_tree, trivial

__author__ = 'KAD Team'


def test_get_decider_names():
    names = get_decider_names()

    assert 'cd1' in names
    assert 'star_free' in names
    assert 'full' in names


def test_get_decider():
    assert get_decider('') is None
    assert get_decider('regular') is None
    decider = get_decider('star_free')
    assert Fragment.STAR_FREE == decider.fragment()


def test_decider_for():
    assert isinstance(decider_for(parse('D(a;b)'), parse('D(a)')), CD1Decider)
    assert isinstance(decider_for(parse('D(a);0'), parse('0')), CD1Decider)
    assert isinstance(decider_for(parse('a + b'), parse('a')), StarFreeDecider)
    assert isinstance(decider_for(parse('a*'), parse('1')), FullDecider)
    with pytest.raises(FragmentError):
        decider_for(parse('A(a)'), parse('1'))


def test_cd1_decider():
    decider = CD1Decider()

    assert VerdictStatus.VALID == decider.decide(parse('D(a);a'), parse('a')).status
    verdict = decider.decide(parse('a;b'), parse('b;a'))
    assert VerdictStatus.INVALID == verdict.status
    assert verdict.witness in (parse_tree('{a:{b:{}!}}'), parse_tree('{b:{a:{}!}}'))
    assert VerdictStatus.VALID == decider.decide(parse('a;0'), parse('0')).status
    assert trivial() == decider.decide(parse('D(a);0'), parse('1')).witness


def test_star_free_decider():
    decider = StarFreeDecider()

    assert decider.decide(parse('D(a + b)'), parse('D(a) + D(b)')).valid
    verdict = decider.decide(parse('D(a)'), parse('1'))
    assert trivial() == verdict.witness
    assert decider.can_decide(parse('a + 0'), parse('a'))
    assert not decider.can_decide(parse('a*'), parse('a'))


def test_full_decider():
    decider = FullDecider()

    assert decider.decide(parse('a*'), parse('1 + a*;a')).valid
    assert not decider.decide(parse('a*'), parse('a')).valid
