# coding: utf-8
"""
Description:
    Deferred acceptance (Gale-Shapley) with incomplete lists, from either side, and blocking pairs.
    Works on any MarriageInstance, base or reduced: critical vertices play no role here.
Functions:
    blocking_pairs: Lists the edges both of whose endpoints prefer each other to their partners
    is_stable: Checks that a matching has no blocking pair
    propose_man_optimal: Returns the man-optimal stable matching
    propose_woman_optimal: Returns the woman-optimal stable matching
"""


# --------------------------------------------------------------------------------
# > Imports
# --------------------------------------------------------------------------------
# Built-in
import logging
from collections import deque

# Third-party

# Local
from .models import Matching
from .voting import label_edge


# --------------------------------------------------------------------------------
# > Constants
# --------------------------------------------------------------------------------
log = logging.getLogger(__name__)


# --------------------------------------------------------------------------------
# > Functions
# --------------------------------------------------------------------------------
def propose_man_optimal(inst):
    """
    Description:
        Runs men-proposing deferred acceptance. Men are queued in declared order,
        a man who exhausts his list stays unmatched.
    Args:
        inst (MarriageInstance): The instance
    Returns:
        Matching: The man-optimal stable matching
    """
    engaged = _deferred_acceptance(inst, inst.men)
    return Matching(engaged.items())


def propose_woman_optimal(inst):
    """Same as 'propose_man_optimal' with the women proposing"""
    engaged = _deferred_acceptance(inst, inst.women)
    return Matching((man, woman) for woman, man in engaged.items())


def blocking_pairs(inst, matching):
    """Returns the edges labelled (+1,+1) w.r.t. the matching, in lexicographic order"""
    return [
        edge for edge in inst.edges()
        if edge not in matching and label_edge(inst, matching, edge).is_plus_plus
    ]


def is_stable(inst, matching):
    return not blocking_pairs(inst, matching)


# --------------------------------------------------------------------------------
# > Helpers
# --------------------------------------------------------------------------------
def _deferred_acceptance(inst, proposers):
    """Returns the {proposer: receiver} map produced by deferred acceptance"""
    queue = deque(proposers)
    next_choice = {proposer: 0 for proposer in proposers}
    holder = {}
    while queue:
        proposer = queue.popleft()
        choices = inst.pref(proposer)
        if next_choice[proposer] >= len(choices):
            continue
        receiver = choices[next_choice[proposer]]
        next_choice[proposer] += 1
        current = holder.get(receiver)
        if current is None:
            holder[receiver] = proposer
        elif inst.rank(receiver, proposer) < inst.rank(receiver, current):
            log.debug("%s leaves %s for %s", receiver, current, proposer)
            holder[receiver] = proposer
            queue.append(current)
        else:
            queue.appendleft(proposer)
    return {proposer: receiver for receiver, proposer in holder.items()}
