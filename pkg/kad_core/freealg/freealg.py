"""
Description
===========

Interpretations of terms in free algebras of relations. Terms over ``;``, ``1`` and ``D`` denote a single reduced
pointed tree; adding ``+`` and ``0`` gives finite antichains of such trees. A pair of terms is valid in all algebras
of relations exactly when the interpretations coincide. Stars are handled by bounded iteration only.
"""

from typing import Iterable, Iterator, Optional, Tuple

from kad_core.relstruct import satisfies, tree_to_struct
from kad_core.terms import Comp, Dom, FragmentError, Fragment, One, Star, Term, Union, Var, Zero, \
    CD1_WITH_ZERO_OPERATORS, classify, mk_comp, mk_comp_all, render, require_fragment, signature
from kad_core.trees import PointedTree, concat, dom, edge, leq, parse_tree, point_path, reduce, render_tree, trivial
from kad_core.util import get_logger, get_settings

__author__ = 'KAD Team'

LOG = get_logger(__name__)


class Antichain(object):
    """
    A finite set of pairwise incomparable reduced pointed trees, kept sorted by canonical key.
    """

    def __init__(self, trees: Iterable[PointedTree]):
        self._trees = tuple(sorted(set(trees)))

    @property
    def trees(self) -> Tuple[PointedTree, ...]:
        return self._trees

    def __iter__(self) -> Iterator[PointedTree]:
        return iter(self._trees)

    def __len__(self):
        return len(self._trees)

    def __contains__(self, tree):
        return tree in self._trees

    def __eq__(self, other):
        return isinstance(other, Antichain) and self._trees == other._trees

    def __hash__(self):
        return hash(self._trees)

    def __repr__(self):
        return f'Antichain([{", ".join(render_tree(tree) for tree in self._trees)}])'

    def to_text(self) -> str:
        return ''.join(f'{render_tree(tree)}\n' for tree in self._trees)


def parse_antichain(text: str) -> Antichain:
    """
    Reads one tree per line. The trees are reduced and only the maximal ones are kept.
    """
    return maximal(reduce(parse_tree(line)) for line in text.splitlines() if len(line.strip()) > 0)


def maximal(trees: Iterable[PointedTree]) -> Antichain:
    candidates = set(trees)
    return Antichain(tree for tree in candidates
                     if not any(other != tree and leq(tree, other) for other in candidates))


def in_downset(tree: PointedTree, antichain: Iterable[PointedTree]) -> bool:
    return any(leq(tree, member) for member in antichain)


def single_interp(t: Term) -> PointedTree:
    """
    The single-tree interpretation of a term built from variables, ``1``, ``;`` and ``D``.
    :raises FragmentError: for any other operator
    """
    require_fragment(t, Fragment.CD1, 'single_interp')
    return _single_interp(t)


def _single_interp(t: Term) -> PointedTree:
    if isinstance(t, Var):
        return edge(t.name)
    if isinstance(t, One):
        return trivial()
    if isinstance(t, Comp):
        return concat(_single_interp(t.left), _single_interp(t.right))
    if isinstance(t, Dom):
        return dom(_single_interp(t.body))
    raise FragmentError(f'single_interp is undefined for {render(t)}')


def realize(t: PointedTree) -> Term:
    """
    A term whose single-tree interpretation is the given reduced tree: the root's branches off the point path become
    domain factors, the branch towards the point is continued by composition.
    """
    factors = []
    pointed_branch = None
    for label, child in t.children:
        if child.has_point:
            pointed_branch = (label, child)
        else:
            factors.append(Dom(mk_comp(Var(label), realize(child))))
    if pointed_branch is not None:
        label, child = pointed_branch
        factors.append(Var(label))
        factors.append(realize(child))
    return mk_comp_all(factors)


def _lift_concat(left: Antichain, right: Antichain) -> Antichain:
    return maximal(concat(x, y) for x in left for y in right)


def _lift_dom(antichain: Antichain) -> Antichain:
    return maximal(dom(x) for x in antichain)


def star_iter(antichain: Antichain, cap: int) -> Tuple[Antichain, bool]:
    """
    Approximates the star of an antichain by the maximal elements of its powers 0 to k for growing k.
    :param antichain: The antichain
    :param cap: The number of iterations after which to give up
    :return: the approximation and whether it reached its fixpoint
    """
    if cap < 1:
        raise ValueError(f'cap must be at least 1, got {cap}')
    accumulated = Antichain([trivial()])
    for iteration in range(cap):
        extended = maximal(list(accumulated) + list(_lift_concat(accumulated, antichain)))
        if extended == accumulated:
            return accumulated, True
        accumulated = extended
    LOG.debug(f'Star iteration stopped after {cap} iterations with {len(accumulated)} trees')
    return accumulated, False


def _interp(t: Term, cap: int) -> Tuple[Antichain, bool]:
    if isinstance(t, Var):
        return Antichain([edge(t.name)]), True
    if isinstance(t, One):
        return Antichain([trivial()]), True
    if isinstance(t, Zero):
        return Antichain([]), True
    if isinstance(t, Union):
        left, left_exact = _interp(t.left, cap)
        right, right_exact = _interp(t.right, cap)
        return maximal(list(left) + list(right)), left_exact and right_exact
    if isinstance(t, Comp):
        left, left_exact = _interp(t.left, cap)
        right, right_exact = _interp(t.right, cap)
        return _lift_concat(left, right), left_exact and right_exact
    if isinstance(t, Dom):
        body, exact = _interp(t.body, cap)
        return _lift_dom(body), exact
    if isinstance(t, Star):
        body, exact = _interp(t.body, cap)
        iterated, converged = star_iter(body, cap)
        return iterated, exact and converged
    raise FragmentError(f'No tree interpretation for {render(t)}')


def interp_star_free(t: Term) -> Antichain:
    """
    The standard tree interpretation of a term without star and antidomain; always a finite antichain.
    """
    require_fragment(t, Fragment.STAR_FREE, 'interp_star_free')
    return _interp(t, 1)[0]


def interp_bounded(t: Term, cap: Optional[int] = None) -> Tuple[Antichain, bool]:
    """
    The standard tree interpretation with every star truncated after ``cap`` iterations.
    :return: the antichain and whether every star reached its fixpoint, in which case the antichain is exact
    """
    require_fragment(t, Fragment.FULL, 'interp_bounded')
    if cap is None:
        cap = get_settings().star_cap
    antichain, exact = _interp(t, cap)
    if not exact:
        LOG.warning(f'Interpretation of {render(t)} truncated after {cap} star iterations')
    return antichain, exact


def _require_cd1_with_zero(t: Term, operation: str):
    if not signature(t).within(CD1_WITH_ZERO_OPERATORS):
        raise FragmentError(f'{operation} needs a term over ;, 1, 0 and D, but {render(t)} is in fragment '
                            f'{classify(t).label}')


def decide_cd1(s: Term, t: Term) -> bool:
    """
    Decides s = t over composition, identity and domain. A term that also contains 0 denotes the empty relation.
    """
    _require_cd1_with_zero(s, 'decide_cd1')
    _require_cd1_with_zero(t, 'decide_cd1')
    s_zero = signature(s).has_zero
    t_zero = signature(t).has_zero
    if s_zero or t_zero:
        return s_zero and t_zero
    return single_interp(s) == single_interp(t)


def decide_star_free(s: Term, t: Term) -> bool:
    require_fragment(s, Fragment.STAR_FREE, 'decide_star_free')
    require_fragment(t, Fragment.STAR_FREE, 'decide_star_free')
    return interp_star_free(s) == interp_star_free(t)


def discriminating_tree(left: Antichain, right: Antichain) -> Optional[PointedTree]:
    """
    :return: a tree in one antichain that lies below no tree of the other, or None if the antichains are equal
    """
    for tree in left:
        if not in_downset(tree, right):
            return tree
    for tree in right:
        if not in_downset(tree, left):
            return tree
    return None


def member_down(tree: PointedTree, t: Term) -> bool:
    """
    Decides whether root and point of the tree, viewed as a structure, satisfy t. Equivalently, the tree lies below
    some tree of the interpretation of t.
    """
    struct, root, point = tree_to_struct(tree)
    return satisfies(root, point, t, struct, strict=False)


def _glue_point_paths(t1: PointedTree, t2: PointedTree) -> PointedTree:
    if t1.point_here:
        return PointedTree(True, t1.children + t2.children)
    children = [(label, child) for label, child in t1.children + t2.children if not child.has_point]
    label1, child1 = next((label, child) for label, child in t1.children if child.has_point)
    child2 = next(child for label, child in t2.children if child.has_point)
    children.append((label1, _glue_point_paths(child1, child2)))
    return PointedTree(False, children)


def meet_trees(t1: PointedTree, t2: PointedTree) -> Optional[PointedTree]:
    """
    The greatest common lower bound of two trees. It exists iff both have the same labels from root to point.
    """
    if point_path(t1) != point_path(t2):
        return None
    return reduce(_glue_point_paths(t1, t2))


def meet_finite(left: Antichain, right: Antichain) -> Antichain:
    meets = []
    for t1 in left:
        for t2 in right:
            meet = meet_trees(t1, t2)
            if meet is not None:
                meets.append(meet)
    return maximal(meets)
