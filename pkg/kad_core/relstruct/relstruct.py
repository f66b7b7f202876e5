"""
Description
===========

Finite relational structures and the relational semantics of terms. A structure assigns each label a binary relation
on ``{0, ..., n - 1}``. Terms are evaluated on stacks of boolean adjacency matrices, so that many structures can be
model checked at once; the brute-force refuter relies on this.
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple
import numpy as np

from kad_core.terms import Antidom, Comp, Dom, One, Star, Term, Union, Var, Zero, variables
from kad_core.trees import PointedTree, preorder
from kad_core.util import get_logger, get_settings

__author__ = 'KAD Team'

LOG = get_logger(__name__)

Pair = Tuple[int, int]
EvalRelation = FrozenSet[Pair]

# refute enumerates 2 ** (n * n * labels) structures, encoded as int64 indices
MAX_REFUTE_BITS = 62


class UnknownLabelError(ValueError):
    pass


class StructSyntaxError(ValueError):

    def __init__(self, message: str, line_number: int):
        super().__init__(f'{message} in line {line_number}')
        self._line_number = line_number

    @property
    def line_number(self) -> int:
        return self._line_number


class RelStruct(object):

    def __init__(self, vertex_count: int, edges: Mapping[str, Iterable[Pair]]):
        if vertex_count < 1:
            raise ValueError(f'A structure needs at least one vertex, got {vertex_count}')
        self._vertex_count = vertex_count
        self._edges = {}
        for label, pairs in edges.items():
            pairs = frozenset((int(x), int(y)) for x, y in pairs)
            for x, y in pairs:
                if not (0 <= x < vertex_count and 0 <= y < vertex_count):
                    raise ValueError(f'Edge {label}: {x} {y} leaves the vertex range 0..{vertex_count - 1}')
            self._edges[label] = pairs

    @property
    def vertex_count(self) -> int:
        return self._vertex_count

    @property
    def edges(self) -> Dict[str, FrozenSet[Pair]]:
        return dict(self._edges)

    @property
    def labels(self) -> List[str]:
        return sorted(self._edges.keys())

    def matrix(self, label: str) -> np.ndarray:
        matrix = np.zeros((self._vertex_count, self._vertex_count), dtype=bool)
        for x, y in self._edges.get(label, ()):
            matrix[x, y] = True
        return matrix

    def successors(self, label: str, vertex: int) -> List[int]:
        return sorted(y for x, y in self._edges.get(label, ()) if x == vertex)

    def __eq__(self, other):
        if not isinstance(other, RelStruct) or self._vertex_count != other._vertex_count:
            return False
        labels = set(self._edges.keys()) | set(other._edges.keys())
        return all(self._edges.get(label, frozenset()) == other._edges.get(label, frozenset()) for label in labels)

    def __hash__(self):
        return hash((self._vertex_count, frozenset((label, pairs) for label, pairs in self._edges.items() if pairs)))

    def __repr__(self):
        return f'RelStruct({self._vertex_count}, {self.labels})'

    def __str__(self):
        return render_struct(self)


@dataclass(frozen=True)
class StructPath(object):
    """
    A path in a structure: a start vertex followed by ``(label, vertex)`` steps.
    """
    start: int
    steps: Tuple[Tuple[str, int], ...] = ()

    @property
    def vertices(self) -> List[int]:
        return [self.start] + [vertex for _, vertex in self.steps]

    @property
    def labels(self) -> List[str]:
        return [label for label, _ in self.steps]

    @property
    def end(self) -> int:
        return self.vertices[-1]


@dataclass(frozen=True)
class Refutation(object):
    struct: RelStruct
    x: int
    y: int
    left_holds: bool

    def render(self) -> str:
        return f'{render_struct(self.struct)}pair {self.x} {self.y}\n'


def _identity(batch: int, n: int) -> np.ndarray:
    return np.broadcast_to(np.eye(n, dtype=bool), (batch, n, n)).copy()


def _compose(left: np.ndarray, right: np.ndarray) -> np.ndarray:
    return np.matmul(left.astype(np.int32), right.astype(np.int32)) > 0


def reflexive_transitive_closure(matrix: np.ndarray) -> np.ndarray:
    """
    Computes the reflexive transitive closure of a (stack of) boolean adjacency matrices by iterated squaring.
    """
    n = matrix.shape[-1]
    closure = matrix | np.eye(n, dtype=bool)
    while True:
        squared = closure | _compose(closure, closure)
        if np.array_equal(squared, closure):
            return closure
        closure = squared


def _domain_diagonal(relation: np.ndarray, negate: bool) -> np.ndarray:
    n = relation.shape[-1]
    has_successor = relation.any(axis=-1)
    if negate:
        has_successor = ~has_successor
    return np.eye(n, dtype=bool) & has_successor[..., :, None]


def evaluate_batch(t: Term, matrices: Mapping[str, np.ndarray], batch: int, n: int, strict: bool = True) \
        -> np.ndarray:
    """
    Evaluates a term on a stack of structures.
    :param t: The term
    :param matrices: For each label, a boolean array of shape (batch, n, n)
    :param batch: The number of structures
    :param n: The number of vertices of every structure
    :param strict: Whether a variable without a relation is an error; otherwise it denotes the empty relation
    :return: a boolean array of shape (batch, n, n)
    """
    memo = {}

    def _eval(term: Term) -> np.ndarray:
        if term in memo:
            return memo[term]
        if isinstance(term, Var):
            if term.name in matrices:
                result = matrices[term.name]
            elif strict:
                raise UnknownLabelError(f"unknown label '{term.name}'")
            else:
                result = np.zeros((batch, n, n), dtype=bool)
        elif isinstance(term, Zero):
            result = np.zeros((batch, n, n), dtype=bool)
        elif isinstance(term, One):
            result = _identity(batch, n)
        elif isinstance(term, Comp):
            result = _compose(_eval(term.left), _eval(term.right))
        elif isinstance(term, Union):
            result = _eval(term.left) | _eval(term.right)
        elif isinstance(term, Star):
            result = reflexive_transitive_closure(_eval(term.body))
        elif isinstance(term, Dom):
            result = _domain_diagonal(_eval(term.body), False)
        elif isinstance(term, Antidom):
            result = _domain_diagonal(_eval(term.body), True)
        else:
            raise TypeError(f'Not a term: {term!r}')
        memo[term] = result
        return result

    return _eval(t)


def relation_matrix(t: Term, m: RelStruct, strict: bool = True) -> np.ndarray:
    matrices = {label: m.matrix(label)[None] for label in m.labels}
    return evaluate_batch(t, matrices, 1, m.vertex_count, strict)[0]


def evaluate(t: Term, m: RelStruct, strict: bool = True) -> EvalRelation:
    """
    The relational interpretation of t in m.
    :raises UnknownLabelError: if strict and t has a variable m has no relation for
    """
    xs, ys = np.nonzero(relation_matrix(t, m, strict))
    return frozenset(zip(xs.tolist(), ys.tolist()))


def satisfies(x: int, y: int, t: Term, m: RelStruct, strict: bool = True) -> bool:
    return bool(relation_matrix(t, m, strict)[x, y])


def tree_to_struct(t: PointedTree, alphabet: Optional[Iterable[str]] = None) -> Tuple[RelStruct, int, int]:
    """
    Views a tree as a structure. Vertices are numbered in preorder with the root as 0.
    :param t: The tree
    :param alphabet: Labels to include even if the tree has no edge carrying them
    :return: the structure, the root vertex and the point vertex
    """
    vertices = preorder(t)
    edges = {label: set() for label in (alphabet or [])}
    point = None
    for vertex in vertices:
        if vertex.parent is not None:
            edges.setdefault(vertex.label, set()).add((vertex.parent, vertex.index))
        if vertex.subtree.point_here:
            point = vertex.index
    if point is None:
        raise ValueError('Tree has no point')
    return RelStruct(len(vertices), edges), 0, point


def tree_path(t: PointedTree) -> StructPath:
    """
    :return: the root-to-point path of a tree, numbered as in tree_to_struct
    """
    steps = []
    for vertex in preorder(t):
        if vertex.parent is not None and vertex.subtree.has_point:
            steps.append((vertex.label, vertex.index))
    return StructPath(0, tuple(steps))


def hom_into(t: PointedTree, m: RelStruct, x: int, y: int) -> bool:
    """
    Decides whether there is a homomorphism from t into m sending the root to x and the point to y.
    """
    memo = {}

    def _maps_to(subtree: PointedTree, vertex: int) -> bool:
        key = (subtree.canonical_key, vertex)
        if key not in memo:
            if subtree.point_here and vertex != y:
                memo[key] = False
            else:
                memo[key] = all(any(_maps_to(child, successor) for successor in m.successors(label, vertex))
                                for label, child in subtree.children)
        return memo[key]

    return _maps_to(t, x)


def _structures_from_indices(indices: np.ndarray, labels: List[str], n: int) -> Dict[str, np.ndarray]:
    pair_bits = n * n
    bit_positions = np.arange(pair_bits, dtype=np.int64)
    matrices = {}
    for label_index, label in enumerate(labels):
        shift = (len(labels) - 1 - label_index) * pair_bits
        bitmaps = (indices >> shift) & ((1 << pair_bits) - 1)
        bits = (bitmaps[:, None] >> bit_positions[None, :]) & 1
        matrices[label] = bits.astype(bool).reshape(len(indices), n, n)
    return matrices


def structure_at(index: int, labels: List[str], n: int) -> RelStruct:
    """
    :return: the structure with the given position in the enumeration of structures with n vertices
    """
    matrices = _structures_from_indices(np.array([index], dtype=np.int64), labels, n)
    edges = {}
    for label in labels:
        xs, ys = np.nonzero(matrices[label][0])
        edges[label] = set(zip(xs.tolist(), ys.tolist()))
    return RelStruct(n, edges)


def refute(s: Term, t: Term, max_vertices: int, batch_size: Optional[int] = None,
           alphabet: Optional[Iterable[str]] = None) -> Optional[Refutation]:
    """
    Searches all structures with at most ``max_vertices`` vertices for one on which s and t differ. Structures are
    visited by vertex count, then by their edge bitmaps, the first label being the most significant. A result of
    None does not mean that s = t is valid.
    :return: the first refuting structure and pair, or None
    """
    if max_vertices < 1:
        raise ValueError(f'max_vertices must be at least 1, got {max_vertices}')
    if batch_size is None:
        batch_size = get_settings().refute_batch_size
    labels = sorted(set(variables(s)) | set(variables(t)) | set(alphabet or []))
    for n in range(1, max_vertices + 1):
        bit_count = n * n * len(labels)
        if bit_count > MAX_REFUTE_BITS:
            raise ValueError(f'Too many structures to enumerate: {n} vertices and {len(labels)} labels')
        total = 1 << bit_count
        LOG.debug(f'Checking {total} structures with {n} vertices')
        for start in range(0, total, batch_size):
            indices = np.arange(start, min(start + batch_size, total), dtype=np.int64)
            matrices = _structures_from_indices(indices, labels, n)
            left = evaluate_batch(s, matrices, len(indices), n)
            right = evaluate_batch(t, matrices, len(indices), n)
            differing = (left ^ right).reshape(len(indices), n * n)
            hits = np.nonzero(differing.any(axis=1))[0]
            if len(hits) > 0:
                first = int(hits[0])
                pair_index = int(np.argmax(differing[first]))
                x, y = divmod(pair_index, n)
                return Refutation(structure_at(int(indices[first]), labels, n), x, y, bool(left[first, x, y]))
    return None


def render_struct(m: RelStruct) -> str:
    lines = [f'vertices {m.vertex_count}']
    for label in m.labels:
        for x, y in sorted(m.edges[label]):
            lines.append(f'{label}: {x} {y}')
    return '\n'.join(lines) + '\n'


def parse_struct(text: str) -> RelStruct:
    """
    Parses the structure format: a line ``vertices N`` followed by lines ``label: i j``.
    """
    vertex_count = None
    edges = {}
    for line_number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if len(line) == 0 or line.startswith('#'):
            continue
        if vertex_count is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != 'vertices' or not parts[1].isdigit():
                raise StructSyntaxError("expected 'vertices N'", line_number)
            vertex_count = int(parts[1])
            continue
        if line.startswith('pair'):
            continue
        label, separator, rest = line.partition(':')
        parts = rest.split()
        if separator != ':' or len(parts) != 2 or not all(part.isdigit() for part in parts):
            raise StructSyntaxError("expected 'label: i j'", line_number)
        edges.setdefault(label.strip(), set()).add((int(parts[0]), int(parts[1])))
    if vertex_count is None:
        raise StructSyntaxError("expected 'vertices N'", 1)
    try:
        return RelStruct(vertex_count, edges)
    except ValueError as e:
        raise StructSyntaxError(str(e), 1)
