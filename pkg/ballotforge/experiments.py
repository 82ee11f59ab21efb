# -*- coding: utf-8 -*-

"""
Seeded profile generation and the two Monte-Carlo sweeps: how often the
rules elect a socially disappointing candidate, and how often each
manipulation scenario changes the winners.

Every record seed is derived from the master seed and the record's
``(m, n, profile_index)`` position, so any record can be recomputed on
its own and the output does not depend on the order the cells ran in.
"""

import csv
import io
import json
import logging
from collections import namedtuple

import numpy

from ballotforge import constants
from ballotforge.core import Profile
from ballotforge.criteria import sd_occurred
from ballotforge.criteria import sf_occurred
from ballotforge.errors import CriterionDomainError
from ballotforge.errors import ExperimentConfigError
from ballotforge.manipulation import affected
from ballotforge.manipulation import check_comparison
from ballotforge.manipulation import get_scenario
from ballotforge.manipulation import random_ballot
from ballotforge.modules.workers import Workers
from ballotforge.rules import RuleConfig
from ballotforge import rules

log = logging.getLogger(__name__)

SEED_MASK = (1 << constants.SEED_BITS) - 1
SCENARIO_KEYS = dict(
    (name, index) for index, name in enumerate(
        constants.SCENARIO_NAMES + constants.GENERIC_SCENARIO_NAMES
    )
)


def derive_seed(master_seed, *key):
    """
    A 63 bit seed derived from the master seed and the spawn key.

    :rtype: int
    """
    sequence = numpy.random.SeedSequence(int(master_seed), spawn_key=key)
    return int(sequence.generate_state(1, numpy.uint64)[0]) & SEED_MASK


def record_seed(master_seed, num_candidates, num_voters, index):
    """
    The seed of one generated profile.

    :type master_seed: int
    :type num_candidates: int
    :type num_voters: int
    :type index: int
    :rtype: int
    """
    return derive_seed(
        master_seed, constants.STREAM_PROFILE,
        num_candidates, num_voters, index,
    )


def generator(seed, *key):
    """
    :rtype: numpy.random.Generator
    """
    sequence = numpy.random.SeedSequence(int(seed), spawn_key=key)
    return numpy.random.Generator(numpy.random.PCG64(sequence))


def random_profile(num_candidates, num_voters, rng):
    """
    Uniform random profile, every ballot an independent uniform
    permutation of the candidates.

    :type num_candidates: int
    :type num_voters: int
    :type rng: numpy.random.Generator
    :rtype: Profile
    """
    identity = numpy.tile(
        numpy.arange(num_candidates), (num_voters, 1)
    )
    rankings = rng.permuted(identity, axis=1)
    return Profile(
        [tuple(int(c) for c in row) for row in rankings],
        num_candidates, validate=False,
    )


def profile_for(master_seed, num_candidates, num_voters, index):
    """
    Regenerate the profile of a single record.

    :rtype: Profile
    """
    seed = record_seed(master_seed, num_candidates, num_voters, index)
    return random_profile(num_candidates, num_voters, generator(seed))


def paradox_profile(size):
    """
    The profile of ``size + 1`` candidates and ``2 * size`` voters where
    the last candidate is the only Condorcet winner and is ranked last by
    exactly half of the voters.

    The first ``size`` ballots put the last candidate on top of a cyclic
    shift of the others, the next ``size`` ballots put it at the bottom
    of the same shifts.

    :type size: int
    :rtype: Profile
    :raises CriterionDomainError: size below three
    """
    if size < constants.MIN_PARADOX_SIZE:
        raise CriterionDomainError(
            'the paradox profile needs n >= %d, got %d' % (
                constants.MIN_PARADOX_SIZE, size
            )
        )
    others = list(range(size))
    shifts = [tuple(others[k:] + others[:k]) for k in range(size)]
    ballots = [(size,) + shift for shift in shifts]
    ballots.extend(shift + (size,) for shift in shifts)
    return Profile(ballots, size + 1)


def paradox_names(size):
    """
    Labels ``x1 .. x{size+1}`` of the paradox profile candidates.

    :rtype: dict
    """
    return dict(
        (c, '%s%d' % (constants.PARADOX_NAME_PREFIX, c + 1))
        for c in range(size + 1)
    )


class ExperimentRecord(
        namedtuple('ExperimentRecord', constants.RECORD_FIELDS)):
    """
    One evaluated profile. ``scenario`` and ``affected`` are None in the
    social disappointment sweep.
    """

    @property
    def sort_key(self):
        return (self.rule, self.scenario or '', self.m, self.n,
                self.profile_index)

    def row(self):
        """
        The CSV row with booleans as 0/1 and missing values empty.

        :rtype: list
        """
        values = []
        for value in self:
            if value is None:
                values.append('')
            elif isinstance(value, bool):
                values.append(int(value))
            else:
                values.append(value)
        return values


class SummaryRow(namedtuple('SummaryRow', constants.SUMMARY_FIELDS)):

    def row(self):
        return [self.rule, self.scenario or '', self.m, self.count]


ExperimentResult = namedtuple('ExperimentResult', ['records', 'summary'])


class ExperimentConfig(object):
    """
    One sweep: the candidate range, the voter counts, the number of
    profiles per cell, the rules and, for the manipulation sweep, the
    scenarios.
    """

    def __init__(self, kind, candidates, voters, profiles, rule_names,
                 master_seed, scenarios=None, fraction=None,
                 rule_config=None,
                 comparison=constants.DEFAULT_COMPARISON):
        """
        :param kind: 'sd' or 'manipulation'
        :type kind: str
        :param candidates: Inclusive candidate count range (low, high)
        :type candidates: tuple
        :param voters: Voter counts
        :type voters: list
        :param profiles: Profiles per (m, n) cell
        :type profiles: int
        :param rule_names: Rule names
        :type rule_names: list
        :param master_seed: Master seed
        :type master_seed: int
        :param scenarios: Scenario names of the manipulation sweep
        :type scenarios: list or None
        :param fraction: The share used by the generic scenarios
        :type fraction: float or None
        :param rule_config: Agenda and dictator
        :type rule_config: RuleConfig or None
        :param comparison: How the manipulation sweep judges a change
        :type comparison: str
        """
        self.kind = kind
        self.candidates = tuple(candidates)
        self.voters = tuple(voters)
        self.profiles = profiles
        self.rule_names = list(rule_names)
        self.master_seed = master_seed
        self.scenario_names = list(scenarios or [])
        self.fraction = fraction
        self.rule_config = rule_config or RuleConfig()
        self.comparison = comparison
        self.validate()

    @classmethod
    def sd_defaults(cls, master_seed, rule_names=None):
        """
        Three to six candidates, six to ten voters, a thousand profiles
        per cell.

        :rtype: ExperimentConfig
        """
        return cls(
            constants.KIND_SD,
            constants.SD_CANDIDATES,
            constants.SD_VOTERS,
            constants.SD_PROFILES,
            constants.SD_RULES if rule_names is None else rule_names,
            master_seed,
        )

    @classmethod
    def manipulation_defaults(cls, master_seed, rule_names=None,
                              scenarios=None, full=False):
        """
        Three to ten candidates, ten and a hundred voters (and a thousand
        with ``full``), thirty profiles per cell.

        :rtype: ExperimentConfig
        """
        voters = constants.MANIPULATION_VOTERS
        if full:
            voters = constants.MANIPULATION_VOTERS_FULL
        return cls(
            constants.KIND_MANIPULATION,
            constants.MANIPULATION_CANDIDATES,
            voters,
            constants.MANIPULATION_PROFILES,
            constants.SD_RULES if rule_names is None else rule_names,
            master_seed,
            constants.SCENARIO_NAMES if scenarios is None else scenarios,
        )

    @property
    def candidate_counts(self):
        return list(range(self.candidates[0], self.candidates[1] + 1))

    @property
    def scenarios(self):
        return [
            get_scenario(name, self.fraction) for name in self.scenario_names
        ]

    @property
    def cells(self):
        """
        Every (m, n) pair of the grid in ascending order.

        :rtype: list
        """
        return [
            (m, n) for m in self.candidate_counts for n in sorted(self.voters)
        ]

    def validate(self):
        """
        :raises ExperimentConfigError: the grid is malformed
        :raises UnknownNameError: a rule, scenario or comparison is not known
        """
        if self.kind not in (constants.KIND_SD, constants.KIND_MANIPULATION):
            raise ExperimentConfigError(
                "unknown experiment kind '%s'" % self.kind
            )
        if len(self.candidates) != 2 or \
                self.candidates[0] > self.candidates[1]:
            raise ExperimentConfigError(
                'the candidate range must be (low, high) with low <= high'
            )
        if self.candidates[0] < constants.MIN_SEARCH_CANDIDATES:
            raise ExperimentConfigError(
                'the experiments need at least %d candidates' % (
                    constants.MIN_SEARCH_CANDIDATES
                )
            )
        if not self.voters or min(self.voters) < 1:
            raise ExperimentConfigError('voter counts must be positive')
        if self.profiles < 0:
            raise ExperimentConfigError(
                'the number of profiles per cell cannot be negative'
            )
        if self.master_seed is None or self.master_seed < 0:
            raise ExperimentConfigError(
                'the master seed must be a non-negative integer'
            )
        for name in self.rule_names:
            rules.get_rule(name)
        if self.kind == constants.KIND_MANIPULATION:
            for name in self.scenario_names:
                get_scenario(name, self.fraction)
            check_comparison(self.comparison)

    def echo(self):
        """
        :rtype: dict
        """
        echo = {
            'kind': self.kind,
            'candidates': list(self.candidates),
            'voters': list(self.voters),
            'profiles': self.profiles,
            'rules': list(self.rule_names),
            'rule_config': self.rule_config.echo(),
        }
        if self.kind == constants.KIND_MANIPULATION:
            echo['scenarios'] = [
                scenario.echo() for scenario in self.scenarios
            ]
            echo['comparison'] = self.comparison
        return echo


def injected_ballot(master_seed, num_candidates, num_voters, scenario):
    """
    The ballot a replacement scenario injects in one cell. It is the same
    for every profile and rule of the cell.

    :rtype: tuple
    """
    rng = generator(
        master_seed, constants.STREAM_INJECTED,
        num_candidates, num_voters, SCENARIO_KEYS[scenario],
    )
    return random_ballot(num_candidates, rng)


def sd_cell(task):
    """
    Evaluate one (m, n) cell of the social disappointment sweep.

    :param task: (config, m, n)
    :type task: tuple
    :rtype: list
    """
    config, m, n = task
    records = []
    for index in range(config.profiles):
        seed = record_seed(config.master_seed, m, n, index)
        profile = random_profile(m, n, generator(seed))
        for rule in config.rule_names:
            winners = rules.evaluate(rule, profile, config.rule_config)
            records.append(ExperimentRecord(
                rule, None, m, n, index, seed,
                sd_occurred(profile, winners),
                sf_occurred(profile, winners),
                None,
            ))
    return records


def manipulation_cell(task):
    """
    Evaluate one (m, n) cell of the manipulation sweep. Every rule sees
    the same voters drawn for a scenario.

    :param task: (config, m, n)
    :type task: tuple
    :rtype: list
    """
    config, m, n = task
    scenarios = config.scenarios
    injected = dict(
        (scenario.name, injected_ballot(config.master_seed, m, n,
                                        scenario.name))
        for scenario in scenarios if scenario.needs_injected_ballot
    )
    records = []
    for index in range(config.profiles):
        seed = record_seed(config.master_seed, m, n, index)
        profile = random_profile(m, n, generator(seed))
        for rule in config.rule_names:
            before = rules.evaluate(rule, profile, config.rule_config)
            sd = sd_occurred(profile, before)
            sf = sf_occurred(profile, before)
            for scenario in scenarios:
                rng = generator(
                    seed, constants.STREAM_SCENARIO,
                    SCENARIO_KEYS[scenario.name],
                )
                manipulated, mapping = scenario.apply(
                    profile, rule, rng, injected.get(scenario.name),
                    config.rule_config,
                )
                records.append(ExperimentRecord(
                    rule, scenario.name, m, n, index, seed, sd, sf,
                    affected(rule, profile, manipulated, mapping,
                             config.rule_config, before, config.comparison),
                ))
    return records


def summarize(config, records):
    """
    Count the flagged records per (rule, scenario, m), summed over the
    voter counts. Pairs without a flagged record get a zero row.

    :rtype: list
    """
    if config.kind == constants.KIND_SD:
        scenarios = [None]
        flag = 'sd'
    else:
        scenarios = config.scenario_names
        flag = 'affected'
    counts = dict(
        ((rule, scenario, m), 0)
        for rule in config.rule_names
        for scenario in scenarios
        for m in config.candidate_counts
    )
    for record in records:
        if getattr(record, flag):
            counts[(record.rule, record.scenario, record.m)] += 1
    return [
        SummaryRow(rule, scenario, m, counts[(rule, scenario, m)])
        for rule, scenario, m in sorted(
            counts, key=lambda key: (key[0], key[1] or '', key[2])
        )
    ]


def run_experiment(config, workers=None):
    """
    Run the sweep the config describes, one work item per cell.

    :type config: ExperimentConfig
    :type workers: Workers or None
    :rtype: ExperimentResult
    """
    workers = workers or Workers()
    if config.kind == constants.KIND_SD:
        function = sd_cell
    else:
        function = manipulation_cell
    if not config.rule_names:
        return ExperimentResult([], [])
    cells = config.cells
    log.info(
        "running the '%s' sweep: %d cells, %d profiles each, seed %d",
        config.kind, len(cells), config.profiles, config.master_seed,
    )
    records = []
    for (m, n), cell in zip(cells, workers.map(
            function, [(config, m, n) for m, n in cells])):
        log.debug('cell m=%d n=%d: %d records', m, n, len(cell))
        records.extend(cell)
    records.sort(key=lambda record: record.sort_key)
    return ExperimentResult(records, summarize(config, records))


def run_sd_experiment(config, workers=None):
    """
    Social disappointment and frustration flags of every rule on every
    generated profile.

    :type config: ExperimentConfig
    :type workers: Workers or None
    :rtype: ExperimentResult
    """
    if config.kind != constants.KIND_SD:
        raise ExperimentConfigError('not a social disappointment config')
    return run_experiment(config, workers)


def run_manipulation_experiment(config, workers=None):
    """
    Whether each scenario changes the winners of each rule on every
    generated profile.

    :type config: ExperimentConfig
    :type workers: Workers or None
    :rtype: ExperimentResult
    """
    if config.kind != constants.KIND_MANIPULATION:
        raise ExperimentConfigError('not a manipulation config')
    return run_experiment(config, workers)


def metadata(config):
    """
    The sidecar describing how the records were produced.

    :rtype: dict
    """
    return {
        'master_seed': config.master_seed,
        'default_seed': constants.DEFAULT_SEED,
        'generator': constants.GENERATOR_NAME,
        'seed_bits': constants.SEED_BITS,
        'poll_tie_break': constants.POLL_TIE_BREAK,
        'config': config.echo(),
    }


def to_csv(fields, rows):
    """
    Render rows as CSV text with a header and ``\\n`` line ends.

    :type fields: list
    :type rows: list
    :rtype: str
    """
    stream = io.StringIO()
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(fields)
    for row in rows:
        writer.writerow(row.row())
    return stream.getvalue()


def records_csv(records):
    return to_csv(constants.RECORD_FIELDS, records)


def summary_csv(summary):
    return to_csv(constants.SUMMARY_FIELDS, summary)


def metadata_json(config):
    return json.dumps(metadata(config), indent=2, sort_keys=True) + '\n'
