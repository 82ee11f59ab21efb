# -*- coding: utf-8 -*-

"""
The ``ballotforge`` command line::

    ballotforge tally profile.txt --rule plurality
    ballotforge detect profile.txt --rule all
    ballotforge check --rule hare --criterion mono --max-m 3 --max-n 5
    ballotforge paradox 3 | ballotforge tally --rule condorcet
    ballotforge sim-sd --seed 1 --out results/sd
    ballotforge sim-manip --seed 1 --scenario bribery,delete3rd
"""

import sys

from ballotforge import constants
from ballotforge import criteria
from ballotforge import experiments
from ballotforge import rules
from ballotforge.application import Application
from ballotforge.command import Command
from ballotforge.errors import ProfileFormatError
from ballotforge.errors import RuleConfigError
from ballotforge.helpers import memoization
from ballotforge.helpers import string_to_integer
from ballotforge.parameter import BooleanParameter
from ballotforge.parameter import FloatParameter
from ballotforge.parameter import IntegerParameter
from ballotforge.parameter import ListParameter
from ballotforge.parameter import StringParameter
from ballotforge.profile_text import format_profile
from ballotforge.profile_text import parse_candidates
from ballotforge.profile_text import read_profile
from ballotforge.rules import RuleConfig

TALLY_FIELDS = ['rule', 'winners']
DETECT_FIELDS = ['rule', 'winners', 'condorcet_loser', 'sd', 'strict_sd',
                 'sf']
CHECK_FIELDS = ['rule', 'criterion', 'status', 'source', 'published',
                'agrees']


class BallotForge(Application):
    NAME = constants.LOGGER_NAME
    SHORTDESC = 'Voting rules, criterion checks and election experiments'

    class Parameter_input(StringParameter):
        POSITIONAL = True
        SHORTDESC = 'Profile file, - for the standard input, or the ' \
                    'paradox size'

    class Parameter_rule(ListParameter):
        SHORTDESC = "Rule names separated by commas, or 'all'"

    class Parameter_agenda(ListParameter):
        SHORTDESC = 'Sequential pairs agenda, ids or labels'

    class Parameter_dictator(IntegerParameter):
        SHORTDESC = 'Voter index of the dictatorship rule'

    class Parameter_criterion(ListParameter):
        SHORTDESC = "Criterion names separated by commas, or 'all'"

    class Parameter_max_m(IntegerParameter):
        SHORTDESC = 'Largest number of candidates of the search'
        DEFAULT = constants.DEFAULT_MAX_M

    class Parameter_max_n(IntegerParameter):
        SHORTDESC = 'Largest number of voters of the search'
        DEFAULT = constants.DEFAULT_MAX_N

    class Parameter_budget(IntegerParameter):
        SHORTDESC = 'Largest number of profiles the search may visit'
        DEFAULT = constants.DEFAULT_BUDGET

    class Parameter_search_only(BooleanParameter):
        SHORTDESC = 'Do not fall back to the stored counterexamples'

    class Parameter_scenario(ListParameter):
        SHORTDESC = 'Manipulation scenario names separated by commas'

    class Parameter_fraction(FloatParameter):
        SHORTDESC = "Voter share of the 'replace' and 'influence' scenarios"

    class Parameter_profiles(IntegerParameter):
        SHORTDESC = 'Profiles per (candidates, voters) cell'

    class Parameter_candidates(StringParameter):
        SHORTDESC = "Candidate range of the experiments, 'low-high'"

    class Parameter_voters(ListParameter):
        SHORTDESC = 'Voter counts of the experiments'

    class Parameter_full(BooleanParameter):
        SHORTDESC = 'Add the thousand voter cells to the manipulation sweep'

    class Parameter_seed(IntegerParameter):
        SHORTDESC = 'Master seed of the experiments'
        ENV = constants.VAR_SEED
        DEFAULT = constants.DEFAULT_SEED

    class Parameter_compare(StringParameter):
        SHORTDESC = 'What a manipulation must change: the elected ' \
                    'candidate or the winner set'
        DEFAULT = constants.DEFAULT_COMPARISON
        CHOICES = constants.COMPARISONS

    class Parameter_out(StringParameter):
        SHORTDESC = 'Results directory of the experiments'

    class Parameter_format(StringParameter):
        SHORTDESC = 'Output format: table, csv or json'
        DEFAULT = constants.FORMAT_TABLE
        CHOICES = constants.FORMATS

    class Parameter_jobs(IntegerParameter):
        SHORTDESC = 'Number of worker processes, all cores by default'
        ENV = constants.VAR_JOBS

    ###########################################################################

    class Command_tally(Command):
        SHORTDESC = 'Winners of one rule on a profile'

    class Command_detect(Command):
        SHORTDESC = 'Winners, Condorcet loser, disappointment and ' \
                    'frustration flags'

    class Command_check(Command):
        SHORTDESC = 'Bounded counterexample search of rules and criteria'
        PARALLEL = True

    class Command_paradox(Command):
        SHORTDESC = 'The profile whose Condorcet winner is last for half ' \
                    'of the voters'

    class Command_sim_sd(Command):
        SHORTDESC = 'Social disappointment sweep over random profiles'
        PARALLEL = True

    class Command_sim_manip(Command):
        SHORTDESC = 'Manipulation sweep over random profiles'
        PARALLEL = True

    ###########################################################################

    @property
    @memoization
    def document(self):
        """
        The profile read from the input file or the standard input.

        :rtype: ProfileDocument
        """
        return read_profile(self.param('input'))

    def rule_names(self, everything):
        """
        The rules of the 'rule' parameter. 'all' or no value selects the
        given list.

        :type everything: list
        :rtype: list
        """
        names = self.param('rule')
        if not names or constants.VALUE_ALL in names:
            return list(everything)
        for name in names:
            rules.get_rule(name)
        return names

    def criterion_names(self):
        names = self.param('criterion')
        if not names or constants.VALUE_ALL in names:
            return list(constants.TABLE_CRITERIA)
        for name in names:
            criteria.get_criterion(name)
        return names

    @property
    def single_rule(self):
        names = self.param('rule')
        if not names or len(names) != 1 or names[0] == constants.VALUE_ALL:
            self.exit.error_arguments(
                "Command '%s' needs exactly one rule, for example "
                "'--rule plurality'" % self.command
            )
        rules.get_rule(names[0])
        return names[0]

    def rule_config(self, names=None):
        """
        The agenda and the dictator given on the command line.

        :param names: Candidate labels the agenda may use
        :type names: dict or None
        :rtype: RuleConfig
        """
        agenda = self.param('agenda')
        if agenda is not None:
            try:
                agenda = parse_candidates(agenda, names, '--agenda')
            except ProfileFormatError as error:
                raise RuleConfigError(str(error))
        return RuleConfig(agenda, self.param('dictator'))

    def notes(self, rule, config, document):
        """
        Comment lines saying which defaults a rule used.

        :rtype: list
        """
        profile = document.profile
        if rule == constants.RULE_SEQPAIRS and config.agenda is None:
            return ['# agenda: %s (default, ascending ids)' % ' '.join(
                document.labels(config.agenda_for(profile))
            )]
        if rule == constants.RULE_DICTATOR and config.dictator is None:
            return ['# dictator: voter %d (default)' %
                    config.dictator_for(profile)]
        return []

    @property
    def master_seed(self):
        """
        The seed parameter, the shipped default unless the flag or the
        environment gives one.

        :rtype: int
        """
        seed = self.param('seed')
        self.log.info('master seed: %d', seed)
        return seed

    def candidate_range(self, default):
        value = self.param('candidates')
        if value is None:
            return default
        bounds = [string_to_integer(item) for item in value.split('-')]
        if len(bounds) == 1:
            bounds = bounds * 2
        if len(bounds) != 2 or None in bounds:
            self.exit.error_arguments(
                "The candidate range '%s' is not 'low-high'" % value
            )
        return tuple(bounds)

    def voter_counts(self, default):
        values = self.param('voters')
        if values is None:
            return default
        counts = [string_to_integer(value) for value in values]
        if None in counts:
            self.exit.error_arguments(
                "The voter counts '%s' are not integers" % ','.join(values)
            )
        return counts

    def experiment_rule_config(self):
        if self.param('agenda') is not None:
            self.exit.error_configuration(
                'The experiments use the default agenda, every cell has '
                'its own candidates'
            )
        return self.rule_config()

    def write_results(self, config, result):
        """
        Write the records, the summary and the metadata into the results
        directory, or print the summary if there is none.
        """
        if self.output.enabled:
            self.output.write(
                constants.RECORDS_FILE,
                experiments.records_csv(result.records),
            )
            self.output.write(
                constants.SUMMARY_FILE,
                experiments.summary_csv(result.summary),
            )
            self.output.write(
                constants.METADATA_FILE,
                experiments.metadata_json(config),
            )
            return
        self.report.show(
            constants.SUMMARY_FIELDS,
            [row._asdict() for row in result.summary],
        )

    ###########################################################################

    def command_tally(self):
        document = self.document
        rule = self.single_rule
        config = self.rule_config(document.names)
        winners = rules.evaluate(rule, document.profile, config)
        labels = document.labels(winners)
        if self.report.format == constants.FORMAT_TABLE:
            lines = self.notes(rule, config, document) + [' '.join(labels)]
            self.log.output('\n'.join(lines) + '\n')
            return
        self.report.show(TALLY_FIELDS, [{
            'rule': rule,
            'winners': labels,
        }])

    def command_detect(self):
        document = self.document
        profile = document.profile
        config = self.rule_config(document.names)
        loser = criteria.condorcet_loser(profile)
        rows = []
        for rule in self.rule_names(constants.RULE_NAMES):
            winners = rules.evaluate(rule, profile, config)
            rows.append({
                'rule': rule,
                'winners': document.labels(winners),
                'condorcet_loser':
                    None if loser is None else document.label(loser),
                'sd': criteria.sd_occurred(profile, winners),
                'strict_sd': criteria.strict_sd_occurred(profile, winners),
                'sf': criteria.sf_occurred(profile, winners),
            })
        self.report.show(DETECT_FIELDS, rows)

    def command_check(self):
        max_m = self.param('max_m')
        max_n = self.param('max_n')
        if max_m < constants.MIN_SEARCH_CANDIDATES or max_n < 1:
            self.exit.error_arguments(
                'The search needs --max-m >= %d and --max-n >= 1' %
                constants.MIN_SEARCH_CANDIDATES
            )
        rule_names = self.rule_names(constants.TABLE_RULES)
        criterion_names = self.criterion_names()
        cells = criteria.verify_table(
            max_m, max_n, self.param('budget'), self.workers,
            rule_names, criterion_names,
            catalogue=not self.param('search_only'),
            config=self.rule_config(),
        )
        if self.report.format == constants.FORMAT_JSON:
            self.report.show(None, [cell.to_dict() for cell in cells])
        else:
            self.report.show(CHECK_FIELDS, [
                dict((field, getattr(cell, field)) for field in CHECK_FIELDS)
                for cell in cells
            ])
        if len(cells) == 1 and cells[0].status == constants.STATUS_SKIPPED:
            self.exit.error_budget(
                'enumeration of %d profiles exceeds the budget of %d' % (
                    cells[0].estimate, self.param('budget')
                )
            )

    def command_paradox(self):
        size = string_to_integer(self.param('input'))
        if size is None:
            self.exit.error_arguments(
                "Command 'paradox' needs the size, for example 'paradox 3'"
            )
        profile = experiments.paradox_profile(size)
        self.log.output(
            format_profile(profile, experiments.paradox_names(size))
        )

    def command_sim_sd(self):
        config = experiments.ExperimentConfig(
            constants.KIND_SD,
            self.candidate_range(constants.SD_CANDIDATES),
            self.voter_counts(constants.SD_VOTERS),
            self.param_or('profiles', constants.SD_PROFILES),
            self.rule_names(constants.SD_RULES),
            self.master_seed,
            rule_config=self.experiment_rule_config(),
        )
        result = experiments.run_sd_experiment(config, self.workers)
        self.write_results(config, result)

    def command_sim_manip(self):
        voters = constants.MANIPULATION_VOTERS
        if self.param('full'):
            voters = constants.MANIPULATION_VOTERS_FULL
        config = experiments.ExperimentConfig(
            constants.KIND_MANIPULATION,
            self.candidate_range(constants.MANIPULATION_CANDIDATES),
            self.voter_counts(voters),
            self.param_or('profiles', constants.MANIPULATION_PROFILES),
            self.rule_names(constants.SD_RULES),
            self.master_seed,
            self.param('scenario') or constants.SCENARIO_NAMES,
            self.param('fraction'),
            self.experiment_rule_config(),
            self.param('compare'),
        )
        result = experiments.run_manipulation_experiment(config, self.workers)
        self.write_results(config, result)

    def param_or(self, name, default):
        value = self.param(name)
        if value is None:
            return default
        return value


def main(argv=None):
    """
    Run the command line and return the exit status.

    :param argv: Arguments without the program name
    :type argv: list or None
    :rtype: int
    """
    application = BallotForge()
    try:
        application.call(sys.argv[1:] if argv is None else argv)
    except SystemExit as error:
        if error.code is None:
            return constants.EXIT_SUCCESS
        return error.code
    return constants.EXIT_SUCCESS


def run():
    sys.exit(main())
