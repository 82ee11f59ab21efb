# -*- coding: utf-8 -*-

"""
Manipulation scenarios. Each one transforms a profile using the ranking
the rule gives on the untouched profile (the poll) and an explicit
random generator, so equal inputs always give equal outputs.
"""

import numpy

from ballotforge import constants
from ballotforge.core import Profile
from ballotforge.core import Restriction
from ballotforge.core import WinnerSet
from ballotforge.core import bottom_counts
from ballotforge.core import inverse_mapping
from ballotforge.core import restrict
from ballotforge.errors import ScenarioError
from ballotforge.errors import UnknownNameError
from ballotforge.helpers import ceil_share
from ballotforge.helpers import string_to_fraction
from ballotforge import rules
from ballotforge.rules import RuleConfig


def _round_scores(profile, rounds, winners):
    scores = numpy.zeros(profile.num_candidates, dtype=numpy.int64)
    for index, eliminated in enumerate(rounds):
        for candidate in eliminated:
            scores[candidate] = index
    for candidate in winners:
        scores[candidate] = len(rounds)
    return scores


def _elimination_scores(retain):
    def scores(profile, config):
        rounds, winners = rules.elimination_rounds(profile, retain)
        return _round_scores(profile, rounds, winners)
    return scores


def _seq_pairs_scores(profile, config):
    dropped, winners = rules.seq_pairs_rounds(profile, config)
    scores = numpy.zeros(profile.num_candidates, dtype=numpy.int64)
    for candidate, step in dropped.items():
        scores[candidate] = step
    for candidate in winners:
        scores[candidate] = profile.num_candidates
    return scores


def _dictator_scores(profile, config):
    ballot = profile[config.dictator_for(profile)]
    scores = numpy.zeros(profile.num_candidates, dtype=numpy.int64)
    for rank, candidate in enumerate(ballot):
        scores[candidate] = profile.num_candidates - rank
    return scores


def _ucc_scores(profile, config):
    if len(rules.condorcet(profile)) == 1:
        return rules.copeland_scores(profile)
    return POLL_SCORES[constants.RULE_COOMBS](profile, config)


POLL_SCORES = {
    constants.RULE_PLURALITY:
        lambda profile, config: rules.plurality_scores(profile),
    constants.RULE_BORDA:
        lambda profile, config: rules.borda_scores(profile),
    constants.RULE_CONDORCET:
        lambda profile, config: rules.copeland_scores(profile),
    constants.RULE_COPELAND:
        lambda profile, config: rules.copeland_scores(profile),
    constants.RULE_LU:
        lambda profile, config: -bottom_counts(profile),
    constants.RULE_HARE: _elimination_scores(rules.retain_most_first_places),
    constants.RULE_COOMBS:
        _elimination_scores(rules.retain_fewest_last_places),
    constants.RULE_LUR: _elimination_scores(rules.retain_least_unpopular),
    constants.RULE_SEQPAIRS: _seq_pairs_scores,
    constants.RULE_DICTATOR: _dictator_scores,
    constants.RULE_UCC: _ucc_scores,
}


def poll_ranking(profile, rule, config=None):
    """
    All candidates ordered by the rule's own score: positional counts for
    the scoring rules, Copeland scores for the Condorcet method, ascending
    last places for LU, the elimination round (later is better) for the
    elimination rules and the agenda step for sequential pairs. Ties go
    to the lower candidate id.

    :type profile: Profile
    :type rule: str
    :type config: RuleConfig or None
    :rtype: tuple
    """
    rules.get_rule(rule)
    scores = POLL_SCORES[rule](profile, config or RuleConfig())
    return tuple(sorted(
        profile.candidates, key=lambda candidate: (-scores[candidate],
                                                   candidate)
    ))


def check_fraction(fraction):
    """
    :raises ScenarioError: the fraction is not inside (0, 1)
    """
    value = string_to_fraction(fraction)
    if value is None or not 0 < value < 1:
        raise ScenarioError(
            'fraction %s is not strictly between 0 and 1' % fraction
        )
    return value


def _check_candidates(profile, minimum, scenario):
    if profile.num_candidates < minimum:
        raise ScenarioError(
            '%s needs at least %d candidates, got %d' % (
                scenario, minimum, profile.num_candidates
            )
        )


def choose_voters(profile, fraction, rng):
    """
    ``ceil(fraction * n)`` distinct voters drawn uniformly.

    :rtype: list
    """
    count = ceil_share(check_fraction(fraction), profile.num_voters)
    count = min(count, profile.num_voters)
    chosen = rng.choice(profile.num_voters, size=count, replace=False)
    return sorted(int(voter) for voter in chosen)


def random_ballot(num_candidates, rng):
    return tuple(int(c) for c in rng.permutation(num_candidates))


def scenario_ballot_replace(profile, fraction, injected, rng):
    """
    Replace the ballots of a random share of the voters with one fixed
    ballot.

    :param profile: Base profile
    :type profile: Profile
    :param fraction: Share of the voters in (0, 1)
    :type fraction: float
    :param injected: The ballot every chosen voter gets
    :type injected: tuple
    :param rng: Random generator
    :type rng: numpy.random.Generator
    :rtype: Profile
    """
    injected = tuple(injected)
    ballots = list(profile.ballots)
    for voter in choose_voters(profile, fraction, rng):
        ballots[voter] = injected
    return Profile(ballots, profile.num_candidates)


def scenario_candidate_delete(profile, rule, config=None):
    """
    Remove the candidate ranked third by the poll.

    :rtype: Restriction
    :raises ScenarioError: fewer than three candidates
    """
    _check_candidates(profile, 3, constants.SCENARIO_DELETE3RD)
    third = poll_ranking(profile, rule, config)[2]
    return restrict(
        profile, [c for c in profile.candidates if c != third]
    )


def scenario_bribery(profile, rule, config=None):
    """
    Voters whose favourite is neither the poll winner nor the runner-up
    and who rank the runner-up second swap their first two choices.

    :rtype: Profile
    :raises ScenarioError: fewer than three candidates
    """
    _check_candidates(profile, 3, constants.SCENARIO_BRIBERY)
    poll = poll_ranking(profile, rule, config)
    winner, runner_up = poll[0], poll[1]
    ballots = []
    for ballot in profile.ballots:
        if ballot[0] not in (winner, runner_up) and ballot[1] == runner_up:
            ballot = (ballot[1], ballot[0]) + ballot[2:]
        ballots.append(ballot)
    return Profile(ballots, profile.num_candidates, validate=False)


def scenario_social_influence(profile, fraction, rule, rng, config=None):
    """
    A random share of the voters move the poll runner-up to the top of
    their ballots, keeping the order of everyone else.

    :rtype: Profile
    :raises ScenarioError: fewer than two candidates
    """
    _check_candidates(profile, 2, constants.SCENARIO_INFLUENCE)
    runner_up = poll_ranking(profile, rule, config)[1]
    ballots = list(profile.ballots)
    for voter in choose_voters(profile, fraction, rng):
        ballot = ballots[voter]
        ballots[voter] = (runner_up,) + tuple(
            c for c in ballot if c != runner_up
        )
    return Profile(ballots, profile.num_candidates, validate=False)


def check_comparison(compare):
    """
    :raises UnknownNameError: not a known comparison
    """
    if compare not in constants.COMPARISONS:
        raise UnknownNameError('comparison', compare, constants.COMPARISONS)
    return compare


def affected(rule, base, manipulated, mapping=None, config=None,
             before=None, compare=constants.DEFAULT_COMPARISON):
    """
    Whether the manipulation changed the outcome. With the ``elected``
    comparison only the candidate chosen after the ascending id tie-break
    counts; ``set`` compares the whole winner sets. After a candidate
    deletion the new winners are mapped back to the old ids, so deleting
    the compared winner always counts as a change.

    :param rule: Rule name
    :type rule: str
    :param base: Profile before the manipulation
    :type base: Profile
    :param manipulated: Profile after the manipulation
    :type manipulated: Profile
    :param mapping: Old to new ids if candidates were removed
    :type mapping: dict or None
    :type config: RuleConfig or None
    :param before: The winners on the base profile if already known
    :type before: WinnerSet or None
    :param compare: 'elected' or 'set'
    :type compare: str
    :rtype: bool
    :raises UnknownNameError: the comparison is not known
    """
    check_comparison(compare)
    config = config or RuleConfig()
    if before is None:
        before = rules.evaluate(rule, base, config)
    if mapping is None:
        after = rules.evaluate(rule, manipulated, config)
    else:
        back = inverse_mapping(mapping)
        after = WinnerSet(
            back[c] for c in rules.evaluate(
                rule, manipulated, config.restricted(mapping)
            )
        )
    if compare == constants.COMPARE_ELECTED:
        return WinnerSet(before).elected != WinnerSet(after).elected
    return set(before) != set(after)


class Scenario(object):
    """
    A named scenario with its fraction.
    """

    def __init__(self, name, kind, fraction=None):
        self.name = name
        self.kind = kind
        self.fraction = fraction
        if fraction is not None:
            check_fraction(fraction)

    @property
    def needs_injected_ballot(self):
        return self.kind == constants.KIND_REPLACE

    def apply(self, profile, rule, rng, injected=None, config=None):
        """
        Run the scenario.

        :return: The manipulated profile, with the id map after a deletion
        :rtype: Restriction
        """
        if self.kind == constants.KIND_REPLACE:
            if injected is None:
                injected = random_ballot(profile.num_candidates, rng)
            return Restriction(scenario_ballot_replace(
                profile, self.fraction, injected, rng
            ), None)
        if self.kind == constants.KIND_DELETE:
            return scenario_candidate_delete(profile, rule, config)
        if self.kind == constants.KIND_BRIBERY:
            return Restriction(
                scenario_bribery(profile, rule, config), None
            )
        return Restriction(scenario_social_influence(
            profile, self.fraction, rule, rng, config
        ), None)

    def echo(self):
        return {
            'name': self.name,
            'kind': self.kind,
            'fraction': self.fraction,
        }

    def __repr__(self):
        return 'Scenario(%r, %r, %r)' % (self.name, self.kind, self.fraction)


def get_scenario(name, fraction=None):
    """
    A scenario by its name. The generic ``replace`` and ``influence``
    names take the fraction argument, the default share otherwise.

    :type name: str
    :type fraction: float or None
    :rtype: Scenario
    :raises UnknownNameError: the name is not a scenario
    """
    if name in constants.SCENARIOS:
        kind, share = constants.SCENARIOS[name]
        return Scenario(name, kind, share)
    if name in constants.GENERIC_SCENARIO_NAMES:
        if fraction is None:
            fraction = constants.DEFAULT_FRACTION
        return Scenario(name, name, fraction)
    raise UnknownNameError(
        'scenario', name,
        constants.SCENARIO_NAMES + constants.GENERIC_SCENARIO_NAMES,
    )
