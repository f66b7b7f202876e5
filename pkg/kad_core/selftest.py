"""
Description
===========

A quick, seeded self test of the engine, cross-checking the tree algebra, the free-algebra interpretations, the
relational semantics, the automata and the PDL decision procedure against each other at small scale.
"""

from itertools import product as cartesian_product
from typing import Callable, List, Optional, Tuple
import numpy as np

from kad_core.automata import accepts, compile_term
from kad_core.freealg import decide_star_free, in_downset, interp_star_free, meet_finite, member_down, realize, \
    single_interp
from kad_core.pdl import decide_full, satisfiable, translate
from kad_core.pdl import Atomic, Bottom, Comp, Diamond, Not, Test, Top
from kad_core.relstruct import RelStruct, hom_into, refute, satisfies, tree_path, tree_to_struct
from kad_core.terms import Fragment, Term, parse, random_term, substitute
from kad_core.trees import enumerate_trees, leq, random_tree, reduce
from kad_core.util import Settings, get_logger, get_settings

__author__ = 'KAD Team'

LOG = get_logger(__name__)

DOMAIN_SEMIRING_AXIOMS = [
    ('x + (y + z)', '(x + y) + z'),
    ('x + y', 'y + x'),
    ('x + 0', 'x'),
    ('x + x', 'x'),
    ('x;(y;z)', '(x;y);z'),
    ('1;x', 'x'),
    ('x;1', 'x'),
    ('x;(y + z)', 'x;y + x;z'),
    ('(x + y);z', 'x;z + y;z'),
    ('0;x', '0'),
    ('x;0', '0'),
    ('D(x);x', 'x'),
    ('D(x;y)', 'D(x;D(y))'),
    ('D(x + y)', 'D(x) + D(y)'),
    ('D(x) + 1', '1'),
    ('D(0)', '0'),
    ('D(1)', '1'),
]

CheckResult = Tuple[bool, str]


def axiom_instances(rng: np.random.Generator, alphabet: List[str], count: int, max_operators: int = 3) \
        -> List[Tuple[Term, Term]]:
    """
    Instances of the domain semiring axioms with random star-free terms substituted for x, y and z.
    """
    instances = []
    for _ in range(count):
        mapping = {name: random_term(rng, alphabet, max_operators, Fragment.STAR_FREE) for name in ('x', 'y', 'z')}
        for left, right in DOMAIN_SEMIRING_AXIOMS:
            instances.append((substitute(parse(left), mapping), substitute(parse(right), mapping)))
    return instances


def random_struct(rng: np.random.Generator, alphabet: List[str], max_vertices: int,
                  edge_probability: float = 0.4) -> RelStruct:
    n = int(rng.integers(1, max_vertices + 1))
    edges = {label: [(x, y) for x, y in cartesian_product(range(n), range(n)) if rng.random() < edge_probability]
             for label in alphabet}
    return RelStruct(n, edges)


def _check_order(settings: Settings, rng: np.random.Generator) -> CheckResult:
    trees = list(enumerate_trees(settings.selftest_alphabet, 2))
    for t1 in trees:
        if not leq(t1, t1):
            return False, f'{t1} is not below itself'
        for t2 in trees:
            if t1 != t2 and leq(t1, t2) and leq(t2, t1):
                return False, f'{t1} and {t2} are equivalent'
            for t3 in trees:
                if leq(t1, t2) and leq(t2, t3) and not leq(t1, t3):
                    return False, f'transitivity fails for {t1}, {t2}, {t3}'
    return True, f'{len(trees)} trees'


def _check_reduction(settings: Settings, rng: np.random.Generator) -> CheckResult:
    for _ in range(settings.selftest_samples):
        tree = random_tree(rng, settings.selftest_alphabet, 5)
        reduced = reduce(tree)
        if not (leq(tree, reduced) and leq(reduced, tree) and reduce(reduced) == reduced):
            return False, f'reduction of {tree} gives {reduced}'
    return True, f'{settings.selftest_samples} random trees'


def _check_realize(settings: Settings, rng: np.random.Generator) -> CheckResult:
    trees = list(enumerate_trees(settings.selftest_alphabet, 2))
    for tree in trees:
        if single_interp(realize(tree)) != tree:
            return False, f'{tree} is realised by {realize(tree)}'
    return True, f'{len(trees)} trees'


def _check_homomorphisms(settings: Settings, rng: np.random.Generator) -> CheckResult:
    for _ in range(settings.selftest_samples):
        t = random_term(rng, settings.selftest_alphabet, 6, Fragment.CD1)
        m = random_struct(rng, settings.selftest_alphabet, 3)
        tree = single_interp(t)
        for x, y in cartesian_product(range(m.vertex_count), repeat=2):
            if satisfies(x, y, t, m) != hom_into(tree, m, x, y):
                return False, f'{t} at ({x}, {y}) of\n{m}'
    return True, f'{settings.selftest_samples} terms'


def _check_axioms(settings: Settings, rng: np.random.Generator) -> CheckResult:
    instances = axiom_instances(rng, settings.selftest_alphabet, max(1, settings.selftest_samples // 5))
    for s, t in instances:
        if not decide_star_free(s, t):
            return False, f'{s} = {t} is not decided valid'
    return True, f'{len(instances)} instances'


def _check_meet(settings: Settings, rng: np.random.Generator) -> CheckResult:
    trees = list(enumerate_trees(settings.selftest_alphabet, 3))
    for _ in range(settings.selftest_samples):
        left = interp_star_free(random_term(rng, settings.selftest_alphabet, 4, Fragment.STAR_FREE))
        right = interp_star_free(random_term(rng, settings.selftest_alphabet, 4, Fragment.STAR_FREE))
        meet = meet_finite(left, right)
        for tree in trees:
            if in_downset(tree, meet) != (in_downset(tree, left) and in_downset(tree, right)):
                return False, f'membership of {tree} in the meet of {left} and {right}'
    return True, f'{settings.selftest_samples} pairs'


def _check_compile(settings: Settings, rng: np.random.Generator) -> CheckResult:
    trees = list(enumerate_trees(settings.selftest_alphabet, 2))
    for _ in range(settings.selftest_samples):
        t = random_term(rng, settings.selftest_alphabet, 5, Fragment.WITH_ANTIDOMAIN)
        automaton = compile_term(t)
        for tree in trees:
            struct, _, _ = tree_to_struct(tree, settings.selftest_alphabet)
            if accepts(automaton, struct, tree_path(tree)) != member_down(tree, t):
                return False, f'automaton of {t} on {tree}'
    return True, f'{settings.selftest_samples} terms'


def _check_pdl(settings: Settings, rng: np.random.Generator) -> CheckResult:
    if not satisfiable(translate(parse('1')))[0]:
        return False, 'translation of 1 is unsatisfiable'
    if satisfiable(translate(parse('0')))[0]:
        return False, 'translation of 0 is satisfiable'
    blocked = Diamond(Comp(Test(Not(Diamond(Atomic('a'), Top()))), Atomic('a')), Top())
    if satisfiable(blocked)[0]:
        return False, f'{blocked} is satisfiable'
    if satisfiable(Diamond(Test(Bottom()), Top()))[0]:
        return False, 'a false test is satisfiable'
    return True, '4 formulas'


def _check_full(settings: Settings, rng: np.random.Generator) -> CheckResult:
    samples = max(1, settings.selftest_samples // 5)
    for _ in range(samples):
        s = random_term(rng, settings.selftest_alphabet, 3, Fragment.STAR_FREE)
        t = random_term(rng, settings.selftest_alphabet, 3, Fragment.STAR_FREE)
        if decide_full(s, t).valid != decide_star_free(s, t):
            return False, f'{s} = {t}'
    for s, t in [('a*', '1 + a;a*'), ('(a*)*', 'a*'), ('D(a*)', '1'), ('a*;a*', 'a*')]:
        if not decide_full(parse(s), parse(t)).valid:
            return False, f'{s} = {t} is not decided valid'
    return True, f'{samples} random pairs and 4 star laws'


def _check_refuter(settings: Settings, rng: np.random.Generator) -> CheckResult:
    if refute(parse('a;b'), parse('b;a'), 2) is None:
        return False, 'a;b = b;a is not refuted'
    if refute(parse('D(a);a'), parse('a'), 2) is not None:
        return False, 'D(a);a = a is refuted'
    return True, '2 equations'


CHECKS = [
    ('order axioms', _check_order),
    ('reduction', _check_reduction),
    ('realisation round trip', _check_realize),
    ('homomorphism characterisation', _check_homomorphisms),
    ('domain semiring axioms', _check_axioms),
    ('meet membership', _check_meet),
    ('condition automata', _check_compile),
    ('pdl satisfiability', _check_pdl),
    ('full decision procedure', _check_full),
    ('refuter', _check_refuter),
]


def run_selftest(settings: Optional[Settings] = None,
                 checks: Optional[List[Tuple[str, Callable[[Settings, np.random.Generator], CheckResult]]]] = None) \
        -> Tuple[List[str], bool]:
    """
    Runs the self test.
    :return: one report line per check and whether all checks passed
    """
    settings = settings or get_settings()
    rng = np.random.default_rng(settings.selftest_seed)
    lines = []
    passed = True
    for name, check in checks or CHECKS:
        try:
            ok, detail = check(settings, rng)
        except Exception as e:
            LOG.exception(f'Check {name} raised an error')
            ok, detail = False, f'{type(e).__name__}: {e}'
        passed = passed and ok
        lines.append(f'{"PASS" if ok else "FAIL"} {name}: {detail}')
    return lines, passed
