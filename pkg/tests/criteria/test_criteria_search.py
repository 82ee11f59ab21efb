# -*- coding: utf-8 -*-

from unittest import TestCase

from ballotforge import constants
from ballotforge import criteria
from ballotforge import rules
from ballotforge.criteria import Counterexample
from ballotforge.criteria import TableCell
from ballotforge.errors import BudgetExceededError
from ballotforge.errors import UnknownNameError
from ballotforge.modules.workers import Workers
from ballotforge.witnesses import catalogue
from ballotforge.witnesses import known_counterexample
from tests.fixtures.profiles import A, B, C
from tests.fixtures.profiles import beverages
from tests.fixtures.profiles import repeat


class CatalogueTest(TestCase):
    def test_every_published_violation_has_a_witness(self):
        entries = catalogue()
        for rule, row in constants.PUBLISHED_TABLE.items():
            for criterion, satisfied in zip(constants.TABLE_CRITERIA, row):
                if not satisfied:
                    self.assertIn((rule, criterion), entries)

    def test_witness_of_another_rule_does_not_replay(self):
        witness = Counterexample('borda', 'clc', [beverages()], [A])
        self.assertFalse(criteria.replay(witness))

    def test_unknown_pair_has_no_witness(self):
        self.assertIsNone(known_counterexample('lur', 'pareto'))

    def test_to_dict(self):
        record = known_counterexample('plurality', 'clc').to_dict()
        self.assertEqual(record['rule'], 'plurality')
        self.assertEqual(record['criterion'], 'clc')
        self.assertEqual(record['candidates'], [A])
        self.assertEqual(record['source'], constants.SOURCE_CATALOGUE)
        self.assertTrue(record['profiles'][0].startswith('3 9\n0 2 1\n'))


for (rule, criterion), witness in sorted(catalogue().items()):
    def function_test(self, witness=witness):
        self.assertTrue(criteria.replay(witness))

    function_name = 'test_%s_%s_witness_replays' % (rule, criterion)
    function_test.__name__ = function_name
    setattr(CatalogueTest, function_name, function_test)


class CriterionRegistryTest(TestCase):
    def test_every_name_has_a_checker(self):
        for name in constants.CRITERION_NAMES:
            self.assertEqual(criteria.get_criterion(name).NAME, name)

    def test_unknown_criterion(self):
        with self.assertRaises(UnknownNameError) as context:
            criteria.get_criterion('sincerity')
        self.assertEqual(context.exception.kind, 'criterion')

    def test_condorcet_winner_holds_by_definition(self):
        self.assertTrue(criteria.holds_by_definition('condorcet', 'cwc'))
        self.assertFalse(criteria.holds_by_definition('condorcet', 'aaw'))
        self.assertFalse(criteria.holds_by_definition('copeland', 'cwc'))


class SearchSpaceTest(TestCase):
    def test_space_size(self):
        self.assertEqual(criteria.space_size(3, 1), 6)
        self.assertEqual(criteria.space_size(3, 2), 21)
        self.assertEqual(criteria.space_size(3, 2, anonymous=False), 36)

    def test_estimate_sums_the_cells(self):
        self.assertEqual(criteria.estimate(3, 2), 27)

    def test_one_shard_per_first_ballot(self):
        self.assertEqual(len(criteria.shards(3, 2)), 12)
        self.assertEqual(criteria.shards(3, 2)[0], (3, 1, 0))

    def test_anonymous_shards_cover_the_multisets(self):
        total = sum(
            len(list(criteria.shard_profiles(m, n, first)))
            for m, n, first in criteria.shards(3, 2)
        )
        self.assertEqual(total, criteria.estimate(3, 2))

    def test_dictator_shards_cover_the_space(self):
        total = sum(
            len(list(criteria.shard_profiles(m, n, first, anonymous=False)))
            for m, n, first in criteria.shards(3, 2)
        )
        self.assertEqual(total, criteria.estimate(3, 2, anonymous=False))


class CheckAxiomTest(TestCase):
    def test_least_unpopular_never_disappoints(self):
        self.assertIsNone(criteria.check_axiom('lu', 'sdc', 4, 3))

    def test_coombs_is_not_monotone(self):
        found = criteria.check_axiom('coombs', 'mono', 3, 5)
        self.assertIsNotNone(found)
        self.assertEqual(found.source, constants.SOURCE_SEARCH)
        self.assertEqual(len(found.profiles), 2)
        self.assertTrue(criteria.replay(found))

    def test_condorcet_method_always_cycles_somewhere(self):
        found = criteria.check_axiom('condorcet', 'aaw', 3, 3)
        self.assertIsNotNone(found)
        self.assertEqual(found.profiles[0].num_voters, 3)
        self.assertTrue(criteria.replay(found))

    def test_plurality_elects_a_condorcet_loser(self):
        found = criteria.check_axiom('plurality', 'clc', 3, 3)
        self.assertIsNotNone(found)
        self.assertTrue(criteria.replay(found))

    def test_two_voters_break_condorcet_independence(self):
        found = criteria.check_axiom('condorcet', 'iia', 3, 2)
        self.assertIsNotNone(found)
        self.assertTrue(criteria.replay(found))

    def test_ucc_on_three_candidates(self):
        self.assertIsNone(criteria.check_axiom('ucc', 'sdc', 3, 6))
        self.assertIsNone(criteria.check_axiom('ucc', 'cwc', 3, 6))

    def test_condorcet_winner_is_not_searched(self):
        self.assertIsNone(
            criteria.check_axiom('condorcet', 'cwc', 9, 9, budget=1)
        )

    def test_budget(self):
        with self.assertRaises(BudgetExceededError) as context:
            criteria.check_axiom('plurality', 'sdc', 4, 5, budget=10)
        self.assertEqual(context.exception.budget, 10)
        self.assertEqual(context.exception.estimate,
                         criteria.estimate(4, 5))

    def test_unknown_names(self):
        with self.assertRaises(UnknownNameError):
            criteria.check_axiom('approval', 'sdc', 3, 3)
        with self.assertRaises(UnknownNameError):
            criteria.check_axiom('plurality', 'sincerity', 3, 3)

    def test_inline_workers(self):
        found = criteria.check_axiom('hare', 'sdc', 3, 4,
                                     workers=Workers(1))
        self.assertIsNotNone(found)


class CondorcetWinnerTest(TestCase):
    def setUp(self):
        # A ties C, so A is the only Condorcet method winner but beats
        # nobody else strictly
        self.profile = repeat(
            (2, (A, B, C)), (1, (B, C, A)), (1, (C, A, B))
        )

    def tearDown(self):
        del self.profile

    def test_unique_weak_winner_is_not_a_condorcet_winner(self):
        self.assertEqual(list(rules.condorcet(self.profile)), [A])
        self.assertIsNone(
            criteria.CondorcetWinner.strong_winner(self.profile)
        )

    def test_sequential_pairs_keeps_the_published_verdict(self):
        self.assertEqual(list(rules.seq_pairs(self.profile)), [A, C])
        self.assertIsNone(criteria.check_axiom('seqpairs', 'cwc', 3, 4))


class TableCellTest(TestCase):
    def test_published_verdicts(self):
        self.assertTrue(TableCell('lu', 'sdc', 'x').published)
        self.assertFalse(TableCell('plurality', 'sdc', 'x').published)
        self.assertIsNone(TableCell('ucc', 'sdc', 'x').published)
        self.assertIsNone(TableCell('lu', 'strictsdc', 'x').published)

    def test_agreement(self):
        clear = constants.STATUS_CLEAR
        violated = constants.STATUS_VIOLATED
        self.assertTrue(TableCell('lu', 'sdc', clear).agrees)
        self.assertFalse(TableCell('lu', 'sdc', violated).agrees)
        self.assertTrue(TableCell('plurality', 'sdc', violated).agrees)
        self.assertFalse(TableCell('plurality', 'sdc', clear).agrees)
        self.assertIsNone(
            TableCell('plurality', 'sdc', constants.STATUS_SKIPPED).agrees
        )

    def test_independence_cells_are_bounded(self):
        record = TableCell('borda', 'iia', constants.STATUS_CLEAR).to_dict()
        self.assertIn('bounded', record)
        self.assertIsNone(record['source'])

    def test_by_definition(self):
        cell = criteria.check_cell('condorcet', 'cwc', 4, 5)
        self.assertEqual(cell.status, constants.STATUS_BY_DEFINITION)
        self.assertTrue(cell.agrees)

    def test_skipped_without_a_witness(self):
        cell = criteria.check_cell('plurality', 'pareto', 4, 5, budget=10)
        self.assertEqual(cell.status, constants.STATUS_SKIPPED)
        self.assertEqual(cell.estimate, criteria.estimate(4, 5))
        self.assertEqual(cell.to_dict()['estimate'], cell.estimate)

    def test_witness_rescues_a_skipped_search(self):
        cell = criteria.check_cell('plurality', 'clc', 4, 5, budget=10)
        self.assertEqual(cell.status, constants.STATUS_VIOLATED)
        self.assertEqual(cell.source, constants.SOURCE_CATALOGUE)
        self.assertIn('witness', cell.to_dict())

    def test_catalogue_can_be_disabled(self):
        cell = criteria.check_cell('plurality', 'clc', 4, 5, budget=10,
                                   catalogue=False)
        self.assertEqual(cell.status, constants.STATUS_SKIPPED)


class VerifyTableTest(TestCase):
    def test_small_bounds(self):
        cells = criteria.verify_table(3, 3)
        self.assertEqual(
            len(cells),
            len(constants.TABLE_RULES) * len(constants.TABLE_CRITERIA),
        )
        disagreements = [
            (cell.rule, cell.criterion) for cell in cells
            if cell.agrees is False
        ]
        self.assertEqual(disagreements, [('condorcet', 'iia')])

    def test_selected_rows_and_columns(self):
        cells = criteria.verify_table(3, 3, rules=['lu'],
                                      criteria=['pareto', 'sdc'])
        self.assertEqual([cell.criterion for cell in cells],
                         ['pareto', 'sdc'])
        self.assertEqual(cells[0].status, constants.STATUS_VIOLATED)
        self.assertEqual(cells[1].status, constants.STATUS_CLEAR)
