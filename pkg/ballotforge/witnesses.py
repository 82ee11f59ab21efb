# -*- coding: utf-8 -*-

"""
Stored counterexamples, at least one for every published violation.
Candidates are ids, ``a, b, c, d = 0, 1, 2, 3``.
"""

from ballotforge import constants
from ballotforge.core import Profile
from ballotforge.criteria import Counterexample

A, B, C, D = 0, 1, 2, 3


def repeat(*groups):
    """
    Expand ``(count, ballot)`` pairs to a profile.

    :rtype: Profile
    """
    ballots = []
    for count, ballot in groups:
        ballots.extend([ballot] * count)
    return Profile(ballots)


def beverages():
    """
    Four voters rank milk first, three beer and two wine; milk is the
    Condorcet loser. ``milk, beer, wine = 0, 1, 2``.
    """
    return repeat(
        (4, (A, C, B)),
        (3, (B, C, A)),
        (2, (C, B, A)),
    )


def cycle():
    return repeat((1, (A, B, C)), (1, (B, C, A)), (1, (C, A, B)))


def borda_tie():
    return repeat((2, (A, B, C)), (2, (C, B, A)))


def four_way_pairwise():
    return repeat(
        (2, (D, A, B, C)),
        (1, (D, C, A, B)),
        (1, (C, A, B, D)),
        (2, (B, C, A, D)),
    )


def hare_blocks():
    return repeat((4, (A, B, C)), (3, (C, B, A)), (3, (B, C, A)))


def least_unpopular_pareto():
    return repeat(
        (2, (A, B, C, D)),
        (1, (C, A, B, D)),
        (1, (D, A, B, C)),
    )


def least_unpopular_condorcet():
    return repeat((2, (A, B, C)), (1, (B, C, A)))


def least_unpopular_independence():
    return repeat((2, (A, B, C)), (1, (B, A, C)))


def condorcet_loser_elected():
    return repeat((32, (B, A, C)), (38, (C, A, B)), (10, (B, C, A)))


def _catalogue():
    # (rule, criterion): (profiles, candidates, narrative)
    mono_hare_before = repeat(
        (3, (A, B, C)), (1, (B, A, C)), (2, (B, C, A)), (3, (C, A, B))
    )
    mono_coombs_before = repeat((1, (C, B, A)), (2, (C, A, B)),
                                (2, (A, B, C)))
    lu_loser = repeat((2, (A, C, B)), (2, (B, C, A)), (1, (A, B, C)))
    return {
        (constants.RULE_CONDORCET, constants.CRITERION_AAW):
            ([cycle()], [], {}),
        (constants.RULE_CONDORCET, constants.CRITERION_SDC):
            ([repeat((1, (A, B, C)), (1, (B, C, A)))], [A], {}),

        (constants.RULE_PLURALITY, constants.CRITERION_CWC):
            ([repeat((2, (A, B, C)), (2, (C, B, A)), (1, (B, A, C)))],
             [B], {}),
        (constants.RULE_PLURALITY, constants.CRITERION_IIA):
            ([repeat((1, (A, B, C)), (1, (C, B, A))),
              repeat((1, (A, B, C)), (1, (B, C, A)))], [A, B],
             {'voters': [1]}),
        (constants.RULE_PLURALITY, constants.CRITERION_SDC):
            ([beverages()], [A], {}),
        (constants.RULE_PLURALITY, constants.CRITERION_CLC):
            ([beverages()], [A], {}),

        (constants.RULE_BORDA, constants.CRITERION_CWC):
            ([repeat((3, (A, B, C)), (2, (B, C, A)))], [A], {}),
        (constants.RULE_BORDA, constants.CRITERION_IIA):
            ([repeat((1, (A, B, C)), (1, (B, C, A))),
              repeat((1, (A, C, B)), (1, (B, A, C)))], [B, A],
             {'voters': [0, 1]}),
        (constants.RULE_BORDA, constants.CRITERION_SDC):
            ([borda_tie()], [A], {}),

        (constants.RULE_HARE, constants.CRITERION_CWC):
            ([repeat((2, (B, A, C)), (2, (C, A, B)), (1, (A, B, C)))],
             [A], {}),
        (constants.RULE_HARE, constants.CRITERION_MONO):
            ([mono_hare_before, mono_hare_before.replace(3, (A, B, C))],
             [A, B], {'voter': 3}),
        (constants.RULE_HARE, constants.CRITERION_IIA):
            ([repeat((1, (A, B, C)), (1, (B, C, A))),
              repeat((1, (A, B, C)), (1, (C, B, A)))], [A, C],
             {'voters': [1]}),
        (constants.RULE_HARE, constants.CRITERION_SDC):
            ([hare_blocks()], [A], {}),
        (constants.RULE_HARE, constants.CRITERION_CLC):
            ([repeat((1, (C, A, B)), (1, (A, B, C)), (1, (B, A, C)))],
             [C], {}),

        (constants.RULE_SEQPAIRS, constants.CRITERION_PARETO):
            ([repeat((1, (A, B, D, C)), (1, (C, A, B, D)),
                     (1, (B, D, C, A)))], [B, D], {}),
        (constants.RULE_SEQPAIRS, constants.CRITERION_IIA):
            ([repeat((1, (A, B, C)), (1, (C, A, B))),
              repeat((1, (B, A, C)), (1, (C, A, B)))], [C, B],
             {'voters': [0]}),
        (constants.RULE_SEQPAIRS, constants.CRITERION_SDC):
            ([four_way_pairwise()], [D], {}),

        (constants.RULE_COPELAND, constants.CRITERION_IIA):
            ([repeat((1, (A, C, B)), (1, (C, B, A))),
              repeat((1, (A, C, B)), (1, (B, C, A)))], [A, B],
             {'voters': [1]}),
        (constants.RULE_COPELAND, constants.CRITERION_SDC):
            ([four_way_pairwise()], [D], {}),

        (constants.RULE_COOMBS, constants.CRITERION_CWC):
            ([repeat((2, (B, C, A)), (2, (A, B, C)), (1, (A, C, B)))],
             [A], {}),
        (constants.RULE_COOMBS, constants.CRITERION_MONO):
            ([mono_coombs_before, mono_coombs_before.replace(0, (C, A, B))],
             [A, B], {'voter': 0}),
        (constants.RULE_COOMBS, constants.CRITERION_IIA):
            ([repeat((1, (A, B, C)), (1, (B, C, A))),
              repeat((1, (A, B, C)), (1, (B, A, C)))], [B, A],
             {'voters': [1]}),
        (constants.RULE_COOMBS, constants.CRITERION_CLC):
            ([lu_loser], [C], {}),

        (constants.RULE_LU, constants.CRITERION_CWC):
            ([least_unpopular_condorcet()], [A], {}),
        (constants.RULE_LU, constants.CRITERION_PARETO):
            ([least_unpopular_pareto()], [A, B], {}),
        (constants.RULE_LU, constants.CRITERION_IIA):
            ([least_unpopular_condorcet(), least_unpopular_independence()],
             [B, A], {'voters': [2]}),
        (constants.RULE_LU, constants.CRITERION_CLC):
            ([condorcet_loser_elected()], [A], {}),

        (constants.RULE_LUR, constants.CRITERION_CWC):
            ([least_unpopular_condorcet()], [A], {}),
        (constants.RULE_LUR, constants.CRITERION_IIA):
            ([least_unpopular_condorcet(), least_unpopular_independence()],
             [B, A], {'voters': [2]}),
        (constants.RULE_LUR, constants.CRITERION_CLC):
            ([condorcet_loser_elected()], [A], {}),
    }


def catalogue():
    """
    Every stored counterexample keyed by ``(rule, criterion)``.

    :rtype: dict
    """
    entries = {}
    for (rule, criterion), (profiles, candidates, narrative) in \
            _catalogue().items():
        entries[(rule, criterion)] = Counterexample(
            rule, criterion, profiles, candidates, narrative,
            source=constants.SOURCE_CATALOGUE,
        )
    return entries


def known_counterexample(rule, criterion):
    """
    The stored counterexample of the pair or None.

    :rtype: Counterexample or None
    """
    return catalogue().get((rule, criterion))
