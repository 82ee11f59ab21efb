# -*- coding: utf-8 -*-

"""
Voting rules. Every rule is a function ``rule(profile, config=None)``
returning a :class:`~ballotforge.core.WinnerSet`; no tie is ever broken
inside a rule.
"""

from ballotforge import constants
from ballotforge.core import WinnerSet
from ballotforge.core import bottom_counts
from ballotforge.core import first_place_counts
from ballotforge.core import restrict
from ballotforge.core import tally_pairwise
from ballotforge.errors import RuleConfigError
from ballotforge.errors import UnknownNameError


class RuleConfig(object):
    """
    Rule parameters that are not part of the profile: the agenda of the
    sequential pairwise rule and the dictator of the dictatorship.
    """

    def __init__(self, agenda=None, dictator=None):
        """
        :param agenda: Candidate ordering, ascending ids if not given
        :type agenda: list or None
        :param dictator: Voter index, voter 0 if not given
        :type dictator: int or None
        """
        self.agenda = None if agenda is None else \
            tuple(int(c) for c in agenda)
        self.dictator = None if dictator is None else int(dictator)

    def agenda_for(self, profile):
        """
        The agenda used on this profile.

        :type profile: Profile
        :rtype: tuple
        :raises RuleConfigError: the agenda is not a permutation
        """
        if self.agenda is None:
            return tuple(profile.candidates)
        if sorted(self.agenda) != list(profile.candidates):
            raise RuleConfigError(
                'agenda %s is not a permutation of 0..%d' % (
                    ' '.join(map(str, self.agenda)),
                    profile.num_candidates - 1,
                )
            )
        return self.agenda

    def dictator_for(self, profile):
        """
        The dictator's voter index on this profile.

        :type profile: Profile
        :rtype: int
        :raises RuleConfigError: the index is not a voter
        """
        dictator = self.dictator
        if dictator is None:
            dictator = constants.DEFAULT_DICTATOR
        if not 0 <= dictator < profile.num_voters:
            raise RuleConfigError(
                'dictator %d is not a voter index in 0..%d' % (
                    dictator, profile.num_voters - 1
                )
            )
        return dictator

    def restricted(self, mapping):
        """
        The same configuration on a restricted profile.

        :param mapping: Old to new candidate id map
        :type mapping: dict
        :rtype: RuleConfig
        """
        agenda = self.agenda
        if agenda is not None:
            agenda = [mapping[c] for c in agenda if c in mapping]
        return RuleConfig(agenda=agenda, dictator=self.dictator)

    def echo(self):
        return {
            'agenda': None if self.agenda is None else list(self.agenda),
            'dictator': self.dictator,
        }

    def __eq__(self, other):
        if not isinstance(other, RuleConfig):
            return NotImplemented
        return self.echo() == other.echo()

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __repr__(self):
        return 'RuleConfig(agenda=%r, dictator=%r)' % (
            self.agenda, self.dictator
        )


DEFAULT_CONFIG = RuleConfig()


def argmax_set(scores):
    best = scores.max()
    return WinnerSet(c for c in range(len(scores)) if scores[c] == best)


def argmin_set(scores):
    best = scores.min()
    return WinnerSet(c for c in range(len(scores)) if scores[c] == best)


###############################################################################


def plurality_scores(profile):
    return first_place_counts(profile)


def borda_scores(profile):
    """
    Rank ``r`` on a ballot is worth ``m-1-r`` points.

    :type profile: Profile
    :rtype: numpy.ndarray
    """
    return (profile.num_candidates - 1 - profile.positions).sum(axis=0)


def copeland_scores(profile, tally=None):
    """
    Number of rivals that do not beat the candidate strictly: a pairwise
    win and a pairwise tie are both worth a point. This is Copeland with
    ties scored as wins, not wins minus losses.

    :type profile: Profile
    :type tally: TallyMatrix or None
    :rtype: numpy.ndarray
    """
    if tally is None:
        tally = tally_pairwise(profile)
    return profile.num_candidates - 1 - tally.losses


def plurality(profile, config=None):
    return argmax_set(plurality_scores(profile))


def borda(profile, config=None):
    return argmax_set(borda_scores(profile))


def condorcet(profile, config=None):
    """
    Every candidate no rival beats strictly. Ties are allowed, so the set
    can hold several candidates, and it is empty on a majority cycle.
    """
    losses = tally_pairwise(profile).losses
    return WinnerSet(c for c in profile.candidates if losses[c] == 0)


def copeland(profile, config=None):
    return argmax_set(copeland_scores(profile))


###############################################################################


def retain_most_first_places(profile):
    counts = first_place_counts(profile)
    fewest = counts.min()
    return [c for c in profile.candidates if counts[c] > fewest]


def retain_fewest_last_places(profile):
    counts = bottom_counts(profile)
    most = counts.max()
    return [c for c in profile.candidates if counts[c] < most]


def retain_least_unpopular(profile):
    return list(argmin_set(bottom_counts(profile)))


def elimination_rounds(profile, retain):
    """
    Run the fixed-point elimination engine and keep the trace.

    Each round ``retain`` gets the profile restricted to the survivors and
    returns the candidates (in that profile's ids) to keep. The run stops
    with one survivor, when a round keeps everyone, or when a round would
    keep nobody, in which case the whole tied field wins.

    :param profile: The profile
    :type profile: Profile
    :param retain: Round selector
    :type retain: func
    :return: Candidates eliminated per round (original ids) and the winners
    :rtype: tuple
    """
    survivors = list(profile.candidates)
    current = profile
    rounds = []
    while len(survivors) > 1:
        retained = sorted(set(retain(current)))
        if not retained or len(retained) == len(survivors):
            break
        kept = set(retained)
        rounds.append(tuple(
            survivors[c] for c in range(len(survivors)) if c not in kept
        ))
        current = restrict(current, retained).profile
        survivors = [survivors[c] for c in retained]
    return rounds, WinnerSet(survivors)


def eliminate(profile, retain):
    """
    The winners of the fixed-point elimination engine.

    :type profile: Profile
    :type retain: func
    :rtype: WinnerSet
    """
    return elimination_rounds(profile, retain)[1]


def hare(profile, config=None):
    return eliminate(profile, retain_most_first_places)


def coombs(profile, config=None):
    return eliminate(profile, retain_fewest_last_places)


def lur(profile, config=None):
    return eliminate(profile, retain_least_unpopular)


def lu(profile, config=None):
    return argmin_set(bottom_counts(profile))


###############################################################################


def seq_pairs_rounds(profile, config=None):
    """
    Walk the agenda. The field of each contest is the current survivors
    plus the next agenda candidate, and only the members no one else in
    the field beats strictly survive. Tied candidates advance together.

    :type profile: Profile
    :type config: RuleConfig or None
    :return: The agenda step each loser dropped out at, and the winners
    :rtype: tuple
    """
    config = config or DEFAULT_CONFIG
    agenda = config.agenda_for(profile)
    strict = tally_pairwise(profile).strict
    survivors = [agenda[0]]
    dropped = {}
    for step, challenger in enumerate(agenda[1:], 1):
        field = survivors + [challenger]
        survivors = [
            c for c in field if not any(strict[o, c] for o in field)
        ]
        for candidate in field:
            if candidate not in survivors:
                dropped[candidate] = step
    return dropped, WinnerSet(survivors)


def seq_pairs(profile, config=None):
    return seq_pairs_rounds(profile, config)[1]


def dictatorship(profile, config=None):
    config = config or DEFAULT_CONFIG
    return WinnerSet([profile.top(config.dictator_for(profile))])


def ucc(profile, config=None):
    """
    The Condorcet winner when it is unique, the Coombs winners otherwise.
    """
    winners = condorcet(profile)
    if len(winners) == 1:
        return winners
    return coombs(profile)


RULES = {
    constants.RULE_PLURALITY: plurality,
    constants.RULE_BORDA: borda,
    constants.RULE_CONDORCET: condorcet,
    constants.RULE_COPELAND: copeland,
    constants.RULE_HARE: hare,
    constants.RULE_COOMBS: coombs,
    constants.RULE_SEQPAIRS: seq_pairs,
    constants.RULE_DICTATOR: dictatorship,
    constants.RULE_LU: lu,
    constants.RULE_LUR: lur,
    constants.RULE_UCC: ucc,
}


def get_rule(name):
    """
    The rule function registered under the name.

    :type name: str
    :rtype: func
    :raises UnknownNameError: the name is not a rule
    """
    if name not in RULES:
        raise UnknownNameError('rule', name, constants.RULE_NAMES)
    return RULES[name]


def evaluate(rule, profile, config=None):
    """
    Shortcut to run a rule by its name.

    :type rule: str
    :type profile: Profile
    :type config: RuleConfig or None
    :rtype: WinnerSet
    """
    return get_rule(rule)(profile, config)
