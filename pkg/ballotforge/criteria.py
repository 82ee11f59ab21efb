# -*- coding: utf-8 -*-

"""
Single election detectors (Condorcet loser, social frustration, social
disappointment) and the bounded counterexample search of the axioms.
"""

import itertools
import logging
import math
from contextlib import closing

from ballotforge import constants
from ballotforge.core import Profile
from ballotforge.core import all_ballots
from ballotforge.core import bottom_counts
from ballotforge.core import tally_pairwise
from ballotforge.errors import BudgetExceededError
from ballotforge.errors import CriterionDomainError
from ballotforge.errors import UnknownNameError
from ballotforge.modules.workers import Workers
from ballotforge.profile_text import format_profile
from ballotforge.rules import RuleConfig
from ballotforge.rules import get_rule

log = logging.getLogger(__name__)


def condorcet_loser(profile, tally=None):
    """
    The candidate every rival beats strictly, if there is one.

    :type profile: Profile
    :type tally: TallyMatrix or None
    :rtype: int or None
    """
    if profile.num_candidates < 2:
        return None
    if tally is None:
        tally = tally_pairwise(profile)
    losses = tally.losses
    for candidate in profile.candidates:
        if losses[candidate] == profile.num_candidates - 1:
            return candidate
    return None


def sf_occurred(profile, winners):
    """
    Social frustration: the Condorcet loser is among the winners.

    :type profile: Profile
    :type winners: WinnerSet
    :rtype: bool
    """
    if not winners:
        return False
    loser = condorcet_loser(profile)
    return loser is not None and loser in winners


def _check_domain(profile):
    if profile.num_candidates < constants.MIN_SEARCH_CANDIDATES:
        raise CriterionDomainError(
            'social disappointment needs at least %d candidates, got %d' % (
                constants.MIN_SEARCH_CANDIDATES, profile.num_candidates
            )
        )


def sd_occurred(profile, winners):
    """
    Social disappointment: some winner is ranked last by at least half of
    the voters, ``2 * lp(x) >= n``.

    :type profile: Profile
    :type winners: WinnerSet
    :rtype: bool
    :raises CriterionDomainError: fewer than three candidates
    """
    _check_domain(profile)
    last = bottom_counts(profile)
    return any(2 * last[x] >= profile.num_voters for x in winners)


def strict_sd_occurred(profile, winners):
    """
    Strict social disappointment, ``2 * lp(x) > n``.

    :type profile: Profile
    :type winners: WinnerSet
    :rtype: bool
    :raises CriterionDomainError: fewer than three candidates
    """
    _check_domain(profile)
    last = bottom_counts(profile)
    return any(2 * last[x] > profile.num_voters for x in winners)


###############################################################################


class Counterexample(object):
    """
    A witness that a rule violates a criterion: one or two profiles, the
    candidates involved and a machine readable description.
    """

    def __init__(self, rule, criterion, profiles, candidates,
                 narrative=None, config=None, source=constants.SOURCE_SEARCH):
        self.rule = rule
        self.criterion = criterion
        self.profiles = tuple(profiles)
        self.candidates = tuple(int(c) for c in candidates)
        self.narrative = narrative or {}
        self.config = config or RuleConfig()
        self.source = source

    witness_profiles = property(lambda self: self.profiles)
    witness_candidates = property(lambda self: self.candidates)

    def __eq__(self, other):
        if not isinstance(other, Counterexample):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __repr__(self):
        return 'Counterexample(%s, %s, %r, %r)' % (
            self.rule, self.criterion, self.profiles, self.candidates
        )

    def to_dict(self):
        """
        JSON friendly form with the profiles in the text format.

        :rtype: dict
        """
        return {
            'rule': self.rule,
            'criterion': self.criterion,
            'profiles': [format_profile(p) for p in self.profiles],
            'candidates': list(self.candidates),
            'narrative': self.narrative,
            'config': self.config.echo(),
            'source': self.source,
        }


class Criterion(object):
    """
    A criterion checker bound to one rule. ``search`` looks for a violation
    around one base profile, ``confirm`` replays a stored witness.
    """
    NAME = None

    def __init__(self, rule, config=None, cache=None):
        """
        :param rule: Rule name
        :type rule: str
        :param config: Rule configuration
        :type config: RuleConfig or None
        :param cache: Shared dictionary of already evaluated profiles
        :type cache: dict or None
        """
        self.rule = rule
        self.function = get_rule(rule)
        self.config = config or RuleConfig()
        self.cache = cache if cache is not None else {}

    def winners(self, profile):
        key = profile.ballots
        if self.rule in constants.ANONYMOUS_RULES:
            key = tuple(sorted(key))
        winners = self.cache.get(key)
        if winners is None:
            if len(self.cache) >= constants.EVALUATION_CACHE_SIZE:
                self.cache.clear()
            winners = self.function(profile, self.config)
            self.cache[key] = winners
        return winners

    def counterexample(self, profiles, candidates, **narrative):
        return Counterexample(
            self.rule, self.NAME, profiles, candidates, narrative,
            self.config,
        )

    def search(self, profile):
        raise NotImplementedError

    def confirm(self, counterexample):
        """
        Check the stored witness by re-running the search on its first
        profile with the candidates fixed.

        :type counterexample: Counterexample
        :rtype: bool
        """
        return self.violated(
            counterexample.profiles[0], counterexample.candidates
        )

    def violated(self, profile, candidates):
        raise NotImplementedError


class AlwaysAWinner(Criterion):
    NAME = constants.CRITERION_AAW

    def violated(self, profile, candidates=()):
        return len(self.winners(profile)) == 0

    def search(self, profile):
        if self.violated(profile):
            return self.counterexample([profile], [])


class CondorcetWinner(Criterion):
    """
    A candidate beating every rival strictly must be the only winner.

    A lone Condorcet method winner that ties a rival is not a Condorcet
    winner here.
    """
    NAME = constants.CRITERION_CWC

    @staticmethod
    def strong_winner(profile):
        victories = tally_pairwise(profile).victories
        for candidate in profile.candidates:
            if victories[candidate] == profile.num_candidates - 1:
                return candidate
        return None

    def violated(self, profile, candidates):
        winner = self.strong_winner(profile)
        return winner is not None and winner == candidates[0] and \
            tuple(self.winners(profile)) != (winner,)

    def search(self, profile):
        winner = self.strong_winner(profile)
        if winner is None:
            return None
        winners = self.winners(profile)
        if tuple(winners) != (winner,):
            return self.counterexample(
                [profile], [winner], winners=list(winners)
            )


class Pareto(Criterion):
    """
    A candidate every voter ranks below some rival must not win.
    """
    NAME = constants.CRITERION_PARETO

    def violated(self, profile, candidates):
        better, worse = candidates
        wins = tally_pairwise(profile).wins
        return wins[better, worse] == profile.num_voters and \
            worse in self.winners(profile)

    def search(self, profile):
        winners = self.winners(profile)
        if not winners:
            return None
        wins = tally_pairwise(profile).wins
        for worse in winners:
            for better in profile.candidates:
                if better != worse and \
                        wins[better, worse] == profile.num_voters:
                    return self.counterexample(
                        [profile], [better, worse], winners=list(winners)
                    )


class Monotonicity(Criterion):
    """
    Lifting a winner one place on a single ballot must keep it winning.
    """
    NAME = constants.CRITERION_MONO

    @staticmethod
    def lift(profile, voter, candidate):
        """
        Swap the candidate with the one right above it on the ballot.

        :rtype: tuple or None
        :return: The new ballot and the passed candidate or None if the
            candidate is already on top
        """
        ballot = list(profile[voter])
        position = ballot.index(candidate)
        if position == 0:
            return None
        passed = ballot[position - 1]
        ballot[position - 1], ballot[position] = candidate, passed
        return tuple(ballot), passed

    def search(self, profile):
        winners = self.winners(profile)
        seen = set()
        for winner in winners:
            seen.clear()
            for voter, ballot in enumerate(profile.ballots):
                if ballot in seen and \
                        self.rule in constants.ANONYMOUS_RULES:
                    continue
                seen.add(ballot)
                lifted = self.lift(profile, voter, winner)
                if lifted is None:
                    continue
                ballot, passed = lifted
                changed = Profile(
                    profile.ballots[:voter] + (ballot,) +
                    profile.ballots[voter + 1:],
                    profile.num_candidates,
                    validate=False,
                )
                after = self.winners(changed)
                if winner not in after:
                    return self.counterexample(
                        [profile, changed], [winner, passed],
                        voter=voter,
                        winners=list(winners),
                        winners_after=list(after),
                    )

    def confirm(self, counterexample):
        before, after = counterexample.profiles
        winner, passed = counterexample.candidates
        voter = counterexample.narrative.get('voter')
        if voter is None or before.num_voters != after.num_voters:
            return False
        lifted = self.lift(before, voter, winner)
        if lifted is None or lifted[1] != passed:
            return False
        expected = before.ballots[:voter] + (lifted[0],) + \
            before.ballots[voter + 1:]
        return expected == after.ballots and \
            winner in self.winners(before) and \
            winner not in self.winners(after)


class Independence(Criterion):
    """
    Independence of irrelevant alternatives. The search only visits
    profiles that differ from the base one in at most two ballots, each
    keeping the voter's order of the two candidates.
    """
    NAME = constants.CRITERION_IIA
    MAX_CHANGED_BALLOTS = 2

    @staticmethod
    def same_order(first, second, x, y):
        return (first.index(x) < first.index(y)) == \
            (second.index(x) < second.index(y))

    def alternatives(self, ballot, x, y):
        return [
            other for other in all_ballots(len(ballot))
            if other != ballot and self.same_order(ballot, other, x, y)
        ]

    def voters(self, profile):
        """
        Voter indices worth changing, one per distinct ballot for the
        anonymous rules.
        """
        if self.rule not in constants.ANONYMOUS_RULES:
            return list(range(profile.num_voters))
        seen = set()
        voters = []
        for voter, ballot in enumerate(profile.ballots):
            if ballot not in seen:
                seen.add(ballot)
                voters.append(voter)
        return voters

    def variants(self, profile, x, y):
        ballots = profile.ballots
        voters = self.voters(profile)
        for voter in voters:
            for ballot in self.alternatives(ballots[voter], x, y):
                yield (voter,), ballots[:voter] + (ballot,) + \
                    ballots[voter + 1:]
        pairs = itertools.combinations(range(profile.num_voters), 2)
        seen = set()
        for first, second in pairs:
            key = (ballots[first], ballots[second])
            if self.rule in constants.ANONYMOUS_RULES:
                if key in seen:
                    continue
                seen.add(key)
            for one in self.alternatives(ballots[first], x, y):
                for two in self.alternatives(ballots[second], x, y):
                    changed = list(ballots)
                    changed[first] = one
                    changed[second] = two
                    yield (first, second), tuple(changed)

    def search(self, profile):
        winners = self.winners(profile)
        losers = [c for c in profile.candidates if c not in winners]
        if not winners or not losers:
            return None
        for x in winners:
            for y in losers:
                for voters, ballots in self.variants(profile, x, y):
                    changed = Profile(
                        ballots, profile.num_candidates, validate=False
                    )
                    after = self.winners(changed)
                    if y in after:
                        return self.counterexample(
                            [profile, changed], [x, y],
                            voters=list(voters),
                            winners=list(winners),
                            winners_after=list(after),
                            changed_ballots_limit=self.MAX_CHANGED_BALLOTS,
                        )

    def confirm(self, counterexample):
        before, after = counterexample.profiles
        x, y = counterexample.candidates
        if before.num_voters != after.num_voters or \
                before.num_candidates != after.num_candidates:
            return False
        for first, second in zip(before.ballots, after.ballots):
            if not self.same_order(first, second, x, y):
                return False
        winners = self.winners(before)
        return x in winners and y not in winners and \
            y in self.winners(after)


class Disappointment(Criterion):
    """
    No winner may be ranked last by half of the voters or more.
    """
    NAME = constants.CRITERION_SDC

    def disappointing(self, last, num_voters):
        return 2 * last >= num_voters

    def violated(self, profile, candidates):
        last = bottom_counts(profile)
        candidate = candidates[0]
        return candidate in self.winners(profile) and \
            self.disappointing(last[candidate], profile.num_voters)

    def search(self, profile):
        winners = self.winners(profile)
        last = bottom_counts(profile)
        for candidate in winners:
            if self.disappointing(last[candidate], profile.num_voters):
                return self.counterexample(
                    [profile], [candidate],
                    winners=list(winners),
                    last_places=int(last[candidate]),
                )


class StrictDisappointment(Disappointment):
    NAME = constants.CRITERION_STRICT_SDC

    def disappointing(self, last, num_voters):
        return 2 * last > num_voters


class CondorcetLoser(Criterion):
    NAME = constants.CRITERION_CLC

    def violated(self, profile, candidates):
        loser = condorcet_loser(profile)
        return loser is not None and loser == candidates[0] and \
            loser in self.winners(profile)

    def search(self, profile):
        loser = condorcet_loser(profile)
        if loser is None:
            return None
        winners = self.winners(profile)
        if loser in winners:
            return self.counterexample(
                [profile], [loser], winners=list(winners)
            )


CRITERIA = dict(
    (checker.NAME, checker) for checker in [
        AlwaysAWinner,
        CondorcetWinner,
        Pareto,
        Monotonicity,
        Independence,
        Disappointment,
        StrictDisappointment,
        CondorcetLoser,
    ]
)


def get_criterion(name):
    """
    The checker class registered under the name.

    :type name: str
    :raises UnknownNameError: the name is not a criterion
    """
    if name not in CRITERIA:
        raise UnknownNameError('criterion', name, constants.CRITERION_NAMES)
    return CRITERIA[name]


def holds_by_definition(rule, criterion):
    """
    The Condorcet method elects exactly the strong Condorcet winner when
    there is one, so it cannot violate the Condorcet winner criterion.
    """
    return rule == constants.RULE_CONDORCET and \
        criterion == constants.CRITERION_CWC


def replay(counterexample):
    """
    Re-run the checker on a stored witness.

    :type counterexample: Counterexample
    :return: True if the witness still shows the violation
    :rtype: bool
    """
    checker = get_criterion(counterexample.criterion)(
        counterexample.rule, counterexample.config
    )
    return bool(checker.confirm(counterexample))


###############################################################################


def space_size(num_candidates, num_voters, anonymous=True):
    """
    Number of base profiles the search visits for one cell.

    :rtype: int
    """
    ballots = math.factorial(num_candidates)
    if anonymous:
        return _combinations(ballots + num_voters - 1, num_voters)
    return ballots * _combinations(ballots + num_voters - 2, num_voters - 1)


def _combinations(total, chosen):
    return math.factorial(total) // (
        math.factorial(chosen) * math.factorial(total - chosen)
    )


def estimate(max_m, max_n, anonymous=True,
             min_m=constants.MIN_SEARCH_CANDIDATES):
    """
    Number of base profiles within the bounds.

    :rtype: int
    """
    return sum(
        space_size(m, n, anonymous)
        for m in range(min_m, max_m + 1)
        for n in range(1, max_n + 1)
    )


def shards(max_m, max_n, min_m=constants.MIN_SEARCH_CANDIDATES):
    """
    Independent slices of the enumeration in canonical order, one per
    cell and first ballot.

    :rtype: list
    """
    return [
        (m, n, first)
        for m in range(min_m, max_m + 1)
        for n in range(1, max_n + 1)
        for first in range(math.factorial(m))
    ]


def shard_profiles(m, n, first, anonymous=True, dictator=0):
    """
    Profiles of one shard. Anonymous rules get sorted multisets starting
    with the ``first`` ballot. Otherwise the ``first`` ballot belongs to
    the dictator and the others are a multiset.
    """
    ballots = all_ballots(m)
    head = ballots[first]
    if anonymous:
        for rest in itertools.combinations_with_replacement(
                ballots[first:], n - 1):
            yield Profile((head,) + rest, m, validate=False)
        return
    if dictator >= n:
        return
    for rest in itertools.combinations_with_replacement(ballots, n - 1):
        yield Profile(
            rest[:dictator] + (head,) + rest[dictator:], m, validate=False
        )


def search_shard(task):
    """
    Worker entry point: the first counterexample of one shard.

    :param task: Rule, criterion, configuration and the shard
    :type task: tuple
    :rtype: Counterexample or None
    """
    rule, criterion, config, (m, n, first) = task
    checker = get_criterion(criterion)(rule, config)
    anonymous = rule in constants.ANONYMOUS_RULES
    dictator = config.dictator or constants.DEFAULT_DICTATOR
    for profile in shard_profiles(m, n, first, anonymous, dictator):
        found = checker.search(profile)
        if found is not None:
            return found
    return None


def check_axiom(rule, criterion, max_m, max_n, config=None,
                budget=constants.DEFAULT_BUDGET, workers=None):
    """
    Search all profiles with 3 to ``max_m`` candidates and 1 to ``max_n``
    voters, fewer voters and candidates first, for a violation.

    :param rule: Rule name
    :type rule: str
    :param criterion: Criterion name
    :type criterion: str
    :param max_m: Largest number of candidates
    :type max_m: int
    :param max_n: Largest number of voters
    :type max_n: int
    :param config: Rule configuration
    :type config: RuleConfig or None
    :param budget: Largest number of base profiles to visit
    :type budget: int
    :param workers: Worker pool, inline if not given
    :type workers: Workers or None
    :return: The first counterexample in the canonical order
    :rtype: Counterexample or None
    :raises BudgetExceededError: the bounds are too large
    """
    get_rule(rule)
    get_criterion(criterion)
    config = config or RuleConfig()
    if holds_by_definition(rule, criterion):
        return None
    size = estimate(max_m, max_n, rule in constants.ANONYMOUS_RULES)
    if size > budget:
        raise BudgetExceededError(size, budget)
    log.debug('searching %s x %s over %d profiles', rule, criterion, size)
    workers = workers or Workers(1)
    tasks = [
        (rule, criterion, config, shard) for shard in shards(max_m, max_n)
    ]
    with closing(workers.map(search_shard, tasks)) as results:
        for found in results:
            if found is not None:
                return found
    return None


class TableCell(object):
    """
    The outcome of one rule and criterion pair.
    """

    def __init__(self, rule, criterion, status, counterexample=None,
                 estimate=None):
        self.rule = rule
        self.criterion = criterion
        self.status = status
        self.counterexample = counterexample
        self.estimate = estimate

    @property
    def source(self):
        if self.counterexample is None:
            return None
        return self.counterexample.source

    @property
    def published(self):
        """
        The published verdict, True if the rule satisfies the criterion,
        None for pairs outside the published table.
        """
        row = constants.PUBLISHED_TABLE.get(self.rule)
        if row is None or self.criterion not in constants.TABLE_CRITERIA:
            return None
        return row[constants.TABLE_CRITERIA.index(self.criterion)]

    @property
    def agrees(self):
        if self.published is None or \
                self.status == constants.STATUS_SKIPPED:
            return None
        if self.published:
            return self.status in (
                constants.STATUS_CLEAR, constants.STATUS_BY_DEFINITION
            )
        return self.status == constants.STATUS_VIOLATED

    def to_dict(self):
        record = {
            'rule': self.rule,
            'criterion': self.criterion,
            'status': self.status,
            'source': self.source,
            'published': self.published,
            'agrees': self.agrees,
        }
        if self.criterion == constants.CRITERION_IIA:
            record['bounded'] = 'at most %d changed ballots' % \
                Independence.MAX_CHANGED_BALLOTS
        if self.estimate is not None:
            record['estimate'] = self.estimate
        if self.counterexample is not None:
            record['witness'] = self.counterexample.to_dict()
        return record


def check_cell(rule, criterion, max_m, max_n, config=None,
               budget=constants.DEFAULT_BUDGET, workers=None,
               catalogue=True):
    """
    Classify one rule and criterion pair. When the bounded search finds
    nothing, a stored witness that replays still confirms the violation.

    :rtype: TableCell
    """
    from ballotforge.witnesses import known_counterexample

    if holds_by_definition(rule, criterion):
        return TableCell(rule, criterion, constants.STATUS_BY_DEFINITION)
    status = constants.STATUS_CLEAR
    found = None
    size = None
    try:
        found = check_axiom(
            rule, criterion, max_m, max_n, config, budget, workers
        )
    except BudgetExceededError as error:
        log.warning('%s x %s skipped: %s', rule, criterion, error)
        status = constants.STATUS_SKIPPED
        size = error.estimate
    if found is None and catalogue:
        stored = known_counterexample(rule, criterion)
        if stored is not None and replay(stored):
            found = stored
    if found is not None:
        status = constants.STATUS_VIOLATED
    return TableCell(rule, criterion, status, found, size)


def verify_table(max_m=constants.DEFAULT_MAX_M,
                  max_n=constants.DEFAULT_MAX_N,
                  budget=constants.DEFAULT_BUDGET, workers=None,
                  rules=None, criteria=None, catalogue=True, config=None):
    """
    Regenerate the rule by criterion comparison table.

    :return: Cells in row order
    :rtype: list
    """
    rules = rules or constants.TABLE_RULES
    criteria = criteria or constants.TABLE_CRITERIA
    cells = []
    for rule in rules:
        for criterion in criteria:
            cell = check_cell(
                rule, criterion, max_m, max_n, config, budget=budget,
                workers=workers, catalogue=catalogue,
            )
            log.info('%s x %s: %s', rule, criterion, cell.status)
            cells.append(cell)
    return cells
