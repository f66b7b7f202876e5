import pytest

from kad_core.freealg import decide_star_free, member_down
from kad_core.pdl import Verdict, VerdictStatus, decide_full, witness_search
from kad_core.relstruct import refute
from kad_core.terms import Comp, Dom, Fragment, FragmentError, One, Star, Union, parse, random_term_pairs, render
from kad_core.trees import edge, parse_tree, trivial

__author__ = 'KAD Team'


def _decide(s: str, t: str, **kwargs) -> Verdict:
    return decide_full(parse(s), parse(t), **kwargs)


def test_decide_full_valid():
    assert VerdictStatus.VALID == _decide('a*', '1 + a;a*').status
    assert VerdictStatus.VALID == _decide('(a*)*', 'a*').status
    assert VerdictStatus.VALID == _decide('a*;a*', 'a*').status
    assert VerdictStatus.VALID == _decide('D(a*)', '1').status
    assert VerdictStatus.VALID == _decide('a', 'a;1').status
    assert _decide('(a + b)*', '(a*;b*)*').valid


def test_decide_full_invalid():
    verdict = _decide('D(a)', '1')

    assert VerdictStatus.INVALID == verdict.status
    assert trivial() == verdict.witness
    verdict = _decide('a*', '1 + a')
    assert VerdictStatus.INVALID == verdict.status
    assert member_down(verdict.witness, parse('a*')) != member_down(verdict.witness, parse('1 + a'))
    assert parse_tree('{a:{a:{}!}}') == verdict.witness


def test_decide_full_unknown_at_scale():
    verdict = _decide('a;a', 'a;a;a', max_witness_edges=1)

    assert VerdictStatus.UNKNOWN_AT_SCALE == verdict.status
    assert verdict.witness is None


def test_decide_full_metrics():
    metrics = _decide('D(a);b*', 'b*;D(a)').stage_metrics

    assert 1 == metrics['guards']
    assert 0 < metrics['condition_states_s']
    assert 0 <= metrics['seconds_satisfiability']


def test_decide_full_rejects_antidomain():
    with pytest.raises(FragmentError):
        _decide('A(a)', '1')


def test_decide_full_agrees_with_decide_star_free():
    for s, t in random_term_pairs(53, ['a', 'b'], 8, 200):
        verdict = decide_full(s, t, max_witness_edges=4)
        assert decide_star_free(s, t) == verdict.valid, f'{render(s)} = {render(t)}'
        if VerdictStatus.INVALID == verdict.status:
            assert member_down(verdict.witness, s) != member_down(verdict.witness, t)


def test_decide_full_valid_is_not_refuted():
    for s, t in random_term_pairs(59, ['a', 'b'], 3, 40, Fragment.FULL):
        verdict = decide_full(s, t, max_witness_edges=3)
        if verdict.valid:
            assert refute(s, t, 3) is None, f'{render(s)} = {render(t)}'
        elif VerdictStatus.INVALID == verdict.status:
            assert member_down(verdict.witness, s) != member_down(verdict.witness, t)
        star = Star(s)
        for left, right in [(star, Union(One(), Comp(s, star))), (Comp(star, star), star), (Comp(Dom(s), s), s)]:
            assert decide_full(left, right).valid, f'{render(left)} = {render(right)}'
            assert refute(left, right, 3) is None, f'{render(left)} = {render(right)}'


def test_witness_search():
    assert trivial() == witness_search(parse('D(a)'), parse('1'))
    assert witness_search(parse('a;b'), parse('b;a')) in (parse_tree('{a:{b:{}!}}'), parse_tree('{b:{a:{}!}}'))
    assert edge('b') == witness_search(parse('a'), parse('a + b'), 1)
    assert witness_search(parse('a'), parse('a;1'), 2) is None
    assert witness_search(parse('1'), parse('1 + 0')) is None


def test_verdict():
    with pytest.raises(ValueError):
        Verdict(VerdictStatus.INVALID)
    with pytest.raises(ValueError):
        Verdict(VerdictStatus.VALID, trivial())
    assert not Verdict(VerdictStatus.UNKNOWN_AT_SCALE).valid
