import pytest
from hypothesis import given, strategies as st

from kad_core.terms import Antidom, Comp, Dom, Fragment, FragmentError, One, Star, TermSyntaxError, Union, Var, Zero
from kad_core.terms import CD1_OPERATORS, classify, guard_atoms, mk_comp, mk_star, mk_union, operator_count, parse, \
    render, require_fragment, signature, size, substitute, subterms, variables

__author__ = 'KAD Team'

_leaves = st.one_of(st.sampled_from(['a', 'b', 'c1', 'x_y']).map(Var), st.just(Zero()), st.just(One()))
terms = st.recursive(_leaves, lambda children: st.one_of(st.builds(Comp, children, children),
                                                          st.builds(Union, children, children),
                                                          children.map(Star),
                                                          children.map(Dom),
                                                          children.map(Antidom)), max_leaves=12)


def test_parse_constants():
    assert One() == parse('1')
    assert Zero() == parse('0')
    assert Var('a') == parse('a')
    assert Var('foo_2') == parse(' foo_2 ')


def test_parse_precedence():
    assert Union(Dom(Comp(Var('a'), Var('b'))), One()) == parse('D(a;b) + 1')
    assert Comp(Star(Var('a')), Var('b')) == parse('a*;b')
    assert Union(Var('a'), Comp(Var('b'), Var('c'))) == parse('a + b;c')
    assert Star(Star(Var('a'))) == parse('a**')


def test_parse_left_associative():
    assert Comp(Comp(Var('a'), Var('b')), Var('c')) == parse('a;b;c')
    assert Union(Union(Var('a'), Var('b')), Var('c')) == parse('a+b+c')


def test_parse_errors():
    with pytest.raises(TermSyntaxError, match='empty term'):
        parse('  ')
    with pytest.raises(TermSyntaxError, match="unknown operator 'X'") as error:
        parse('a;X')
    assert 2 == error.value.position
    with pytest.raises(TermSyntaxError, match="missing '\\)'") as error:
        parse('(a;b')
    assert 0 == error.value.position
    with pytest.raises(TermSyntaxError, match="unexpected '\\)'"):
        parse('a)')
    with pytest.raises(TermSyntaxError, match="expected '\\(' after 'D'"):
        parse('D a')
    with pytest.raises(TermSyntaxError, match='end of input'):
        parse('a;')
    with pytest.raises(ValueError):
        parse('a;;b')


def test_render():
    assert '1' == render(One())
    assert 'a;(b + 1)' == render(Comp(Var('a'), Union(Var('b'), One())))
    assert 'D(a)*' == render(Star(Dom(Var('a'))))
    assert '(a;b)*' == render(Star(Comp(Var('a'), Var('b'))))
    assert 'a + (b + c)' == render(Union(Var('a'), Union(Var('b'), Var('c'))))
    assert 'a;b + c' == render(parse('(a;b) + c'))
    assert 'A(a + b)' == str(Antidom(Union(Var('a'), Var('b'))))


@given(terms)
def test_parse_render_round_trip(t):
    assert t == parse(render(t))


@given(terms)
def test_classify_is_monotone(t):
    for subterm in subterms(t):
        assert classify(subterm) <= classify(t)


def test_classify():
    assert Fragment.CD1 == classify(Dom(Comp(Var('a'), Var('b'))))
    assert Fragment.STAR_FREE == classify(Union(Var('a'), Zero()))
    assert Fragment.STAR_FREE == classify(parse('D(a);0'))
    assert Fragment.FULL == classify(parse('a*'))
    assert Fragment.WITH_ANTIDOMAIN == classify(Antidom(Var('a')))


def test_fragment_labels():
    assert 'star-free' == Fragment.STAR_FREE.label
    assert Fragment.FULL == Fragment.from_label('full')
    with pytest.raises(ValueError):
        Fragment.from_label('regular')


def test_require_fragment():
    require_fragment(parse('a;b'), Fragment.CD1, 'test')
    with pytest.raises(FragmentError, match='star-free'):
        require_fragment(parse('a + b'), Fragment.CD1, 'test')


def test_signature():
    operators = signature(parse('D(a;1) + 0')).operators

    assert frozenset(['D', ';', '1', '+', '0']) == operators
    assert signature(parse('D(a);1')).within(CD1_OPERATORS)
    assert signature(parse('0')).has_zero
    assert not signature(parse('a')).has_one


def test_variables_and_sizes():
    t = parse('D(b;a) + a*')

    assert ['a', 'b'] == variables(t)
    assert 7 == size(t)
    assert 4 == operator_count(t)


def test_guard_atoms():
    t = parse('D(a);A(b;D(c));D(a)')

    assert [Var('a'), Comp(Var('b'), Dom(Var('c')))] == guard_atoms(t)
    assert [] == guard_atoms(parse('a;b*'))


def test_substitute():
    t = substitute(parse('D(x);x'), {'x': parse('a + b')})

    assert parse('D(a + b);(a + b)') == t


def test_smart_constructors():
    assert Zero() == mk_comp(Var('a'), Zero())
    assert Var('a') == mk_comp(One(), Var('a'))
    assert Var('a') == mk_union(Zero(), Var('a'))
    assert Var('a') == mk_union(Var('a'), Var('a'))
    assert One() == mk_star(Zero())
    assert Star(Var('a')) == mk_star(Star(Var('a')))
