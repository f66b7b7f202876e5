"""
Description
===========

Registry of the decision procedures for equations. Every procedure handles one fragment of the term language.
Procedures are registered through the ``kad_deciders`` entry point group, so other packages may contribute their own.
"""

from abc import ABCMeta, abstractmethod
from importlib.metadata import entry_points
from typing import List, Optional

from kad_core.freealg import Antichain, decide_cd1, discriminating_tree, interp_star_free, single_interp
from kad_core.pdl import Verdict, VerdictStatus, decide_full
from kad_core.terms import CD1_WITH_ZERO_OPERATORS, Fragment, FragmentError, Term, classify, render, signature
from kad_core.util import get_logger

__author__ = 'KAD Team'

LOG = get_logger(__name__)

DECIDERS = []
DECIDER_ENTRY_POINT_GROUP = 'kad_deciders'


class EquationDecider(metaclass=ABCMeta):

    @classmethod
    @abstractmethod
    def name(cls) -> str:
        """
        :return: The name under which the decider is registered.
        """

    @classmethod
    @abstractmethod
    def fragment(cls) -> Fragment:
        """
        :return: The largest fragment this decider handles.
        """

    @abstractmethod
    def decide(self, s: Term, t: Term) -> Verdict:
        """
        Decides whether s = t holds in all algebras of relations.
        :param s: The left hand side
        :param t: The right hand side
        :return: A verdict; invalid verdicts carry a discriminating tree
        """

    def can_decide(self, s: Term, t: Term) -> bool:
        return classify(s) <= self.fragment() and classify(t) <= self.fragment()


class CD1Decider(EquationDecider):

    @classmethod
    def name(cls) -> str:
        return 'cd1'

    @classmethod
    def fragment(cls) -> Fragment:
        return Fragment.CD1

    def can_decide(self, s: Term, t: Term) -> bool:
        return signature(s).within(CD1_WITH_ZERO_OPERATORS) and signature(t).within(CD1_WITH_ZERO_OPERATORS)

    def decide(self, s: Term, t: Term) -> Verdict:
        if decide_cd1(s, t):
            return Verdict(VerdictStatus.VALID)
        # a side containing 0 is empty, the tree of the other side discriminates
        if signature(s).has_zero:
            return Verdict(VerdictStatus.INVALID, single_interp(t))
        if signature(t).has_zero:
            return Verdict(VerdictStatus.INVALID, single_interp(s))
        witness = discriminating_tree(Antichain([single_interp(s)]), Antichain([single_interp(t)]))
        return Verdict(VerdictStatus.INVALID, witness)


class StarFreeDecider(EquationDecider):

    @classmethod
    def name(cls) -> str:
        return 'star_free'

    @classmethod
    def fragment(cls) -> Fragment:
        return Fragment.STAR_FREE

    def decide(self, s: Term, t: Term) -> Verdict:
        witness = discriminating_tree(interp_star_free(s), interp_star_free(t))
        if witness is None:
            return Verdict(VerdictStatus.VALID)
        return Verdict(VerdictStatus.INVALID, witness)


class FullDecider(EquationDecider):

    @classmethod
    def name(cls) -> str:
        return 'full'

    @classmethod
    def fragment(cls) -> Fragment:
        return Fragment.FULL

    def decide(self, s: Term, t: Term) -> Verdict:
        return decide_full(s, t)


def _set_up_decider_registry():
    if len(DECIDERS) > 0:
        return
    for decider_entry_point in entry_points(group=DECIDER_ENTRY_POINT_GROUP):
        try:
            DECIDERS.append(decider_entry_point.load())
        except ImportError as e:
            LOG.warning(f'Could not load decider {decider_entry_point.name}: {e}')
    if len(DECIDERS) == 0:
        # not installed, e.g. when run from a source checkout
        DECIDERS.extend([CD1Decider, StarFreeDecider, FullDecider])


def _add_decider(decider: type):
    _set_up_decider_registry()
    DECIDERS.append(decider)


def get_decider_names() -> List[str]:
    _set_up_decider_registry()
    return [decider.name() for decider in DECIDERS]


def get_decider(name: str) -> Optional[EquationDecider]:
    _set_up_decider_registry()
    for decider in DECIDERS:
        if decider.name() == name:
            return decider()
    return None


def decider_for(s: Term, t: Term) -> EquationDecider:
    """
    :return: the decider of the smallest fragment containing both terms
    :raises FragmentError: if no registered decider handles the terms
    """
    _set_up_decider_registry()
    candidates = sorted(DECIDERS, key=lambda decider: decider.fragment())
    for decider in candidates:
        instance = decider()
        if instance.can_decide(s, t):
            return instance
    raise FragmentError(f'No decider handles {render(s)} = {render(t)}')
