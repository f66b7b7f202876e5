import numpy as np
import pytest

from kad_core.trees import PointedTree, TreeSyntaxError, canonical_key, concat, depth, dom, edge, edge_count, \
    enumerate_exact, enumerate_trees, hom_search, is_reduced, leq, point_path, preorder, random_tree, reduce, \
    render_tree, parse_tree, subtree_at, to_dot, trivial, vertex_count

__author__ = 'KAD Team'

PATH_TO_UNREDUCED = './test/test_data/unreduced.tree'
PATH_TO_UNREDUCED_REDUCED = './test/test_data/unreduced_reduced.tree'
PATH_TO_REDUCED = './test/test_data/reduced.tree'


def _read_tree(path: str) -> PointedTree:
    with open(path, 'r') as tree_file:
        return parse_tree(tree_file.read().strip())


def _read_text(path: str) -> str:
    with open(path, 'r') as tree_file:
        return tree_file.read()


def test_trivial():
    assert 0 == edge_count(trivial())
    assert 1 == vertex_count(trivial())
    assert trivial().point_here
    assert dom(trivial()) == trivial()
    assert '{}!' == render_tree(trivial())


def test_edge():
    a = edge('a')

    assert '{a:{}!}' == render_tree(a)
    assert 2 == vertex_count(a)
    assert a != dom(a)
    assert not leq(edge('a'), edge('b'))
    assert ['a'] == point_path(a)


def test_canonical_key():
    assert b'()*' == canonical_key(trivial())
    assert canonical_key(edge('a')) != canonical_key(dom(edge('a')))
    keyed = [trivial(), dom(edge('a')), parse_tree('{a:{}, a:{b:{}}}!')]
    assert 3 == len(set(canonical_key(t) for t in keyed))
    for t in enumerate_trees(['a', 'b'], 2):
        assert canonical_key(trivial()) <= canonical_key(t)


def test_children_are_a_set():
    t = PointedTree(True, [('b', trivial()), ('a', PointedTree(False)), ('a', PointedTree(False))])

    assert 2 == len(t.children)
    assert 'a' == t.children[0][0]
    assert PointedTree(True, [('a', PointedTree(False)), ('b', trivial())]) == t


def test_parse_tree():
    t = parse_tree(' { a : {}, a:{ b:{} } } ! ')

    assert '{a:{}, a:{b:{}}}!' == render_tree(t)
    assert t == parse_tree(render_tree(t))


def test_parse_tree_errors():
    with pytest.raises(TreeSyntaxError, match="exactly one '!'"):
        parse_tree('{a:{}}')
    with pytest.raises(TreeSyntaxError, match="exactly one '!'"):
        parse_tree('{a:{}!}!')
    with pytest.raises(TreeSyntaxError):
        parse_tree('{a{}}!')
    with pytest.raises(TreeSyntaxError):
        parse_tree('{A:{}}!')
    with pytest.raises(TreeSyntaxError):
        parse_tree('{}! x')


def test_leq():
    left = _read_tree(PATH_TO_UNREDUCED)
    middle = _read_tree(PATH_TO_UNREDUCED_REDUCED)

    assert leq(left, left)
    assert leq(left, middle)
    assert leq(middle, left)
    assert leq(dom(edge('a')), trivial())
    assert not leq(trivial(), dom(edge('a')))
    assert not leq(trivial(), edge('a'))


def test_hom_search():
    left = _read_tree(PATH_TO_UNREDUCED)
    middle = _read_tree(PATH_TO_UNREDUCED_REDUCED)

    identity = hom_search(middle, middle)
    assert {vertex.path: vertex.path for vertex in preorder(middle)} == identity
    assert hom_search(edge('a'), trivial()) is None
    collapsing = hom_search(left, middle)
    assert collapsing is not None
    assert collapsing[(0,)] == collapsing[(1,)] == (0,)


def test_hom_search_agrees_with_leq():
    trees = list(enumerate_trees(['a', 'b'], 2))
    for t1 in trees:
        for t2 in trees:
            assert leq(t1, t2) == (hom_search(t2, t1) is not None)


def test_homomorphisms_preserve_depth():
    trees = list(enumerate_trees(['a', 'b'], 3))
    for t1 in trees:
        for t2 in trees:
            mapping = hom_search(t2, t1)
            if mapping is not None:
                for source_path, target_path in mapping.items():
                    assert len(source_path) == len(target_path)
                    assert subtree_at(t1, target_path).point_here or not subtree_at(t2, source_path).point_here


def test_reduce_golden_files():
    left = _read_tree(PATH_TO_UNREDUCED)
    right = _read_tree(PATH_TO_REDUCED)

    assert _read_text(PATH_TO_UNREDUCED_REDUCED) == render_tree(reduce(left)) + '\n'
    assert _read_text(PATH_TO_REDUCED) == render_tree(reduce(right)) + '\n'
    assert reduce(right) == right
    assert reduce(trivial()) == trivial()
    assert is_reduced(right)
    assert not is_reduced(left)


def test_reduce_random_trees():
    rng = np.random.default_rng(11)
    for _ in range(1000):
        t = random_tree(rng, ['a', 'b'], 6)
        reduced = reduce(t)
        assert leq(t, reduced)
        assert leq(reduced, t)
        assert reduce(reduced) == reduced
        assert is_reduced(reduced)
        assert 1 == sum(1 for vertex in preorder(reduced) if vertex.subtree.point_here)


def test_concat():
    a = edge('a')
    b = edge('b')

    assert '{a:{b:{}!}}' == render_tree(concat(a, b))
    assert concat(a, trivial()) == a
    assert concat(trivial(), a) == a
    assert concat(dom(a), a) == a


def test_concat_is_associative():
    trees = list(enumerate_trees(['a', 'b'], 2))
    for t1 in trees:
        for t2 in trees:
            for t3 in trees:
                assert concat(concat(t1, t2), t3) == concat(t1, concat(t2, t3))


def test_concat_and_dom_are_monotone():
    trees = list(enumerate_trees(['a', 'b'], 2))
    for s in trees:
        for s_prime in trees:
            if not leq(s, s_prime):
                continue
            assert leq(dom(s), dom(s_prime))
            for t in trees:
                for t_prime in trees:
                    if leq(t, t_prime):
                        assert leq(concat(s, t), concat(s_prime, t_prime))


def test_dom():
    a = edge('a')

    assert '{a:{}}!' == render_tree(dom(a))
    assert dom(dom(a)) == dom(a)
    assert dom(a) == reduce(parse_tree('{a:{}}!'))
    for t in enumerate_trees(['a', 'b'], 3):
        assert dom(dom(t)) == dom(t)
        assert concat(dom(t), dom(t)) == dom(t)


def test_enumerate():
    assert [trivial()] == list(enumerate_trees(['a'], 0))
    assert {trivial(), edge('a'), dom(edge('a'))} == set(enumerate_trees(['a'], 1))
    trees = list(enumerate_trees(['a', 'b'], 3))
    assert len(trees) == len(set(trees))
    assert [edge_count(t) for t in trees] == sorted(edge_count(t) for t in trees)
    assert all(is_reduced(t) for t in trees)
    with pytest.raises(ValueError):
        enumerate_exact(['a'], -1)


def test_enumerate_is_complete():
    expected = set()
    rng = np.random.default_rng(5)
    for _ in range(2000):
        t = reduce(random_tree(rng, ['a', 'b'], 3))
        if edge_count(t) <= 2:
            expected.add(t)
    assert expected <= set(enumerate_trees(['a', 'b'], 2))


def test_order_axioms():
    trees = list(enumerate_trees(['a', 'b'], 4))
    for t1 in trees:
        assert leq(t1, t1)
        for t2 in trees:
            if t1 != t2:
                assert not (leq(t1, t2) and leq(t2, t1))
    small = list(enumerate_trees(['a', 'b'], 3))
    for t1 in small:
        for t2 in small:
            if not leq(t1, t2):
                continue
            for t3 in small:
                if leq(t2, t3):
                    assert leq(t1, t3)


def test_depth():
    assert 0 == depth(trivial())
    assert 2 == depth(_read_tree(PATH_TO_UNREDUCED))


def test_to_dot():
    t = reduce(parse_tree('{a:{b:{}}}!'))
    expected = 'digraph tree {\n' \
               '  n0 [label="", shape=doublecircle, style=filled];\n' \
               '  n1 [label="", shape=circle];\n' \
               '  n2 [label="", shape=circle];\n' \
               '  n0 -> n1 [label="a"];\n' \
               '  n1 -> n2 [label="b"];\n' \
               '}\n'

    assert expected == to_dot(t)
