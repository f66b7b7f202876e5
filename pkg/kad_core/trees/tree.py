"""
Description
===========

Pointed labelled rooted trees. A tree is encoded recursively as a set of ``(label, child)`` pairs plus a flag telling
whether the vertex carries the point. Children are kept sorted by ``(label, canonical key)`` and free of duplicates,
so two trees are identical exactly when their canonical keys are.

``T1 <= T2`` holds iff there is a homomorphism ``T2 -> T1`` mapping root to root and point to point. On reduced trees
this preorder is a partial order.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Optional, Tuple
import numpy as np

__author__ = 'KAD Team'

Path = Tuple[int, ...]

_CACHE_SIZE = 1 << 20


class TreeSyntaxError(ValueError):

    def __init__(self, message: str, position: int):
        super().__init__(f'{message} at position {position}')
        self._position = position

    @property
    def position(self) -> int:
        return self._position


class PointedTree(object):
    """
    A vertex together with the subtree below it. Subtrees of a pointed tree may or may not contain the point; a
    complete tree built by the functions of this module contains exactly one.
    """

    __slots__ = ('_point_here', '_children', '_key', '_hash', '_has_point', '_edge_count')

    def __init__(self, point_here: bool, children: Iterable[Tuple[str, 'PointedTree']] = ()):
        unique = {}
        for label, child in children:
            unique[(label, child.canonical_key)] = (label, child)
        self._point_here = bool(point_here)
        self._children = tuple(unique[entry_key] for entry_key in sorted(unique.keys()))
        self._key = b'(' + b''.join(label.encode('ascii') + b'=' + child.canonical_key
                                    for label, child in self._children) + b')' + (b'*' if self._point_here else b'')
        self._hash = hash(self._key)
        self._has_point = self._point_here or any(child.has_point for _, child in self._children)
        self._edge_count = sum(1 + child.edge_count for _, child in self._children)

    @property
    def point_here(self) -> bool:
        return self._point_here

    @property
    def children(self) -> Tuple[Tuple[str, 'PointedTree'], ...]:
        return self._children

    @property
    def canonical_key(self) -> bytes:
        return self._key

    @property
    def has_point(self) -> bool:
        return self._has_point

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def __eq__(self, other):
        return isinstance(other, PointedTree) and self._key == other._key

    def __ne__(self, other):
        return not self.__eq__(other)

    def __lt__(self, other: 'PointedTree'):
        return self._key < other._key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f'PointedTree({render_tree(self)})'

    def __str__(self):
        return render_tree(self)


@dataclass(frozen=True)
class TreeVertex(object):
    index: int
    path: Path
    parent: Optional[int]
    label: Optional[str]
    subtree: PointedTree


def canonical_key(t: PointedTree) -> bytes:
    return t.canonical_key


def trivial() -> PointedTree:
    return PointedTree(True)


def edge(label: str) -> PointedTree:
    return PointedTree(False, [(label, PointedTree(True))])


def point_count(t: PointedTree) -> int:
    return int(t.point_here) + sum(point_count(child) for _, child in t.children)


def vertex_count(t: PointedTree) -> int:
    return t.edge_count + 1


def edge_count(t: PointedTree) -> int:
    return t.edge_count


def depth(t: PointedTree) -> int:
    if len(t.children) == 0:
        return 0
    return 1 + max(depth(child) for _, child in t.children)


def preorder(t: PointedTree) -> List[TreeVertex]:
    """
    Numbers the vertices of a tree in preorder, children visited in canonical order. The root gets index 0.
    """
    vertices = []

    def _visit(subtree: PointedTree, path: Path, parent: Optional[int], label: Optional[str]):
        index = len(vertices)
        vertices.append(TreeVertex(index, path, parent, label, subtree))
        for child_index, (child_label, child) in enumerate(subtree.children):
            _visit(child, path + (child_index,), index, child_label)

    _visit(t, (), None, None)
    return vertices


def subtree_at(t: PointedTree, path: Path) -> PointedTree:
    for child_index in path:
        t = t.children[child_index][1]
    return t


def point_path(t: PointedTree) -> List[str]:
    """
    :return: the labels along the path from the root to the point
    """
    labels = []
    while not t.point_here:
        for label, child in t.children:
            if child.has_point:
                labels.append(label)
                t = child
                break
        else:
            raise ValueError('Tree has no point')
    return labels


@lru_cache(maxsize=_CACHE_SIZE)
def leq(t1: PointedTree, t2: PointedTree) -> bool:
    """
    Decides ``t1 <= t2`` by the recursive characterisation: a point at the root of ``t2`` needs a point at the root of
    ``t1``, and every child of ``t2`` needs an equally labelled child of ``t1`` below it.
    """
    if t2.point_here and not t1.point_here:
        return False
    if t2.has_point and not t1.has_point:
        return False
    for label, child2 in t2.children:
        if not any(label == label1 and leq(child1, child2) for label1, child1 in t1.children):
            return False
    return True


def hom_search(source: PointedTree, target: PointedTree) -> Optional[Dict[Path, Path]]:
    """
    Looks for a homomorphism from source to target preserving root and point.
    :return: a map from vertex paths of source to vertex paths of target, or None if there is none
    """
    if not leq(target, source):
        return None
    mapping = {}

    def _map(source_subtree: PointedTree, target_subtree: PointedTree, source_path: Path, target_path: Path):
        mapping[source_path] = target_path
        for source_index, (label, source_child) in enumerate(source_subtree.children):
            for target_index, (target_label, target_child) in enumerate(target_subtree.children):
                if label == target_label and leq(target_child, source_child):
                    _map(source_child, target_child, source_path + (source_index,), target_path + (target_index,))
                    break

    _map(source, target, (), ())
    return mapping


@lru_cache(maxsize=_CACHE_SIZE)
def reduce(t: PointedTree) -> PointedTree:
    reduced_children = {(label, reduce(child)) for label, child in t.children}
    kept = []
    for label, child in reduced_children:
        dominated = any(other_label == label and other != child and leq(other, child)
                        for other_label, other in reduced_children)
        if not dominated:
            kept.append((label, child))
    return PointedTree(t.point_here, kept)


def is_reduced(t: PointedTree) -> bool:
    for label, child in t.children:
        if not is_reduced(child):
            return False
        for other_label, other in t.children:
            if other_label == label and other != child and leq(other, child):
                return False
    return True


def _glue(t: PointedTree, s: PointedTree) -> PointedTree:
    if t.point_here:
        return PointedTree(s.point_here, t.children + s.children)
    return PointedTree(False, [(label, _glue(child, s) if child.has_point else child) for label, child in t.children])


def _strip_point(t: PointedTree) -> PointedTree:
    if not t.has_point:
        return t
    return PointedTree(False, [(label, _strip_point(child)) for label, child in t.children])


@lru_cache(maxsize=_CACHE_SIZE)
def concat(t: PointedTree, s: PointedTree) -> PointedTree:
    """
    Identifies the point of t with the root of s; the point of the result is the point of s.
    """
    return reduce(_glue(t, s))


@lru_cache(maxsize=_CACHE_SIZE)
def dom(t: PointedTree) -> PointedTree:
    return reduce(PointedTree(True, [(label, _strip_point(child)) for label, child in t.children]))


@lru_cache(maxsize=None)
def _reduced_trees(alphabet: Tuple[str, ...], edges: int, pointed: bool) -> Tuple[PointedTree, ...]:
    if edges == 0:
        return (PointedTree(pointed),)
    entries = []
    for child_edges in range(edges):
        for label in alphabet:
            for child_pointed in (False, True):
                for child in _reduced_trees(alphabet, child_edges, child_pointed):
                    entries.append((label, child))
    entries.sort(key=lambda entry: (entry[0], entry[1].canonical_key))
    trees = set()
    for root_pointed in ((False, True) if pointed else (False,)):
        for chosen in _entry_sets(entries, 0, edges, 0 if root_pointed or not pointed else 1):
            if _siblings_incomparable(chosen):
                trees.add(PointedTree(root_pointed, chosen))
    return tuple(sorted(trees))


def _entry_sets(entries: List[Tuple[str, PointedTree]], start: int, budget: int, points: int) \
        -> Iterator[List[Tuple[str, PointedTree]]]:
    if budget == 0:
        if points == 0:
            yield []
        return
    for index in range(start, len(entries)):
        label, child = entries[index]
        cost = child.edge_count + 1
        child_points = 1 if child.has_point else 0
        if cost > budget or child_points > points:
            continue
        for rest in _entry_sets(entries, index + 1, budget - cost, points - child_points):
            yield [(label, child)] + rest


def _siblings_incomparable(children: List[Tuple[str, PointedTree]]) -> bool:
    for (label1, child1), (label2, child2) in combinations(children, 2):
        if label1 == label2 and (leq(child1, child2) or leq(child2, child1)):
            return False
    return True


def enumerate_exact(alphabet: Iterable[str], edges: int) -> List[PointedTree]:
    """
    :return: all reduced pointed trees over the alphabet with exactly the given number of edges, sorted by key
    """
    if edges < 0:
        raise ValueError(f'Number of edges must not be negative, got {edges}')
    return list(_reduced_trees(tuple(sorted(set(alphabet))), edges, True))


def enumerate_trees(alphabet: Iterable[str], max_edges: int) -> Iterator[PointedTree]:
    """
    Yields every reduced pointed tree with at most ``max_edges`` edges exactly once, in nondecreasing edge count.
    """
    if max_edges < 0:
        raise ValueError(f'Maximum number of edges must not be negative, got {max_edges}')
    labels = sorted(set(alphabet))
    for edges in range(max_edges + 1):
        yield from enumerate_exact(labels, edges)


def random_tree(rng: np.random.Generator, alphabet: List[str], max_edges: int) -> PointedTree:
    """
    Grows a random, possibly unreduced, pointed tree by attaching each new vertex to a uniformly chosen one.
    """
    edges = int(rng.integers(max_edges + 1))
    parents = [None]
    labels = [None]
    for vertex in range(1, edges + 1):
        parents.append(int(rng.integers(vertex)))
        labels.append(alphabet[int(rng.integers(len(alphabet)))])
    point = int(rng.integers(edges + 1))

    def _build(vertex: int) -> PointedTree:
        children = [(labels[child], _build(child)) for child in range(1, edges + 1) if parents[child] == vertex]
        return PointedTree(vertex == point, children)

    return _build(0)


def render_tree(t: PointedTree) -> str:
    entries = ', '.join(f'{label}:{render_tree(child)}' for label, child in t.children)
    return '{' + entries + '}' + ('!' if t.point_here else '')


class _TreeParser(object):

    def __init__(self, text: str):
        self._text = text
        self._position = 0

    def parse(self) -> PointedTree:
        tree = self._parse_node()
        self._skip_whitespace()
        if self._position < len(self._text):
            raise TreeSyntaxError(f"unexpected '{self._text[self._position]}'", self._position)
        points = point_count(tree)
        if points != 1:
            raise TreeSyntaxError(f"expected exactly one '!' but found {points}", 0)
        return tree

    def _skip_whitespace(self):
        while self._position < len(self._text) and self._text[self._position].isspace():
            self._position += 1

    def _expect(self, symbol: str):
        self._skip_whitespace()
        if self._position >= len(self._text):
            raise TreeSyntaxError(f"expected '{symbol}' but input ended", self._position)
        if self._text[self._position] != symbol:
            raise TreeSyntaxError(f"expected '{symbol}' but found '{self._text[self._position]}'", self._position)
        self._position += 1

    def _peek(self) -> Optional[str]:
        self._skip_whitespace()
        if self._position < len(self._text):
            return self._text[self._position]
        return None

    def _parse_label(self) -> str:
        self._skip_whitespace()
        start = self._position
        if start >= len(self._text) or not ('a' <= self._text[start] <= 'z'):
            raise TreeSyntaxError('expected a label', start)
        self._position += 1
        while self._position < len(self._text) and (self._text[self._position].islower() or
                                                    self._text[self._position].isdigit() or
                                                    self._text[self._position] == '_'):
            self._position += 1
        return self._text[start:self._position]

    def _parse_node(self) -> PointedTree:
        self._expect('{')
        children = []
        if self._peek() != '}':
            children.append(self._parse_entry())
            while self._peek() == ',':
                self._position += 1
                children.append(self._parse_entry())
        self._expect('}')
        point_here = False
        if self._peek() == '!':
            self._position += 1
            point_here = True
        return PointedTree(point_here, children)

    def _parse_entry(self) -> Tuple[str, PointedTree]:
        label = self._parse_label()
        self._expect(':')
        return label, self._parse_node()


def parse_tree(text: str) -> PointedTree:
    """
    Parses the textual tree format, e.g. ``{a:{}, a:{b:{}}}!``. The tree is not reduced.
    :raises TreeSyntaxError: on malformed input or if the number of points is not one
    """
    return _TreeParser(text).parse()


def to_dot(t: PointedTree, name: str = 'tree') -> str:
    """
    Renders a tree in the DOT language. The root is drawn as a double circle, the point as a filled node.
    """
    lines = [f'digraph {name} {{']
    vertices = preorder(t)
    for vertex in vertices:
        shape = 'doublecircle' if vertex.parent is None else 'circle'
        style = ', style=filled' if vertex.subtree.point_here else ''
        lines.append(f'  n{vertex.index} [label="", shape={shape}{style}];')
    for vertex in vertices:
        if vertex.parent is not None:
            lines.append(f'  n{vertex.parent} -> n{vertex.index} [label="{vertex.label}"];')
    lines.append('}')
    return '\n'.join(lines) + '\n'
