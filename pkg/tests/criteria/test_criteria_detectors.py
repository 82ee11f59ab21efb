# -*- coding: utf-8 -*-

from unittest import TestCase

from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st

from ballotforge import criteria
from ballotforge import rules
from ballotforge.core import Profile
from ballotforge.core import WinnerSet
from ballotforge.errors import CriterionDomainError
from tests.fixtures.profiles import A, D
from tests.fixtures.profiles import MILK, WINE
from tests.fixtures.profiles import beverages
from tests.fixtures.profiles import borda_tie
from tests.fixtures.profiles import cycle
from tests.fixtures.profiles import disappointed_but_not_frustrated
from tests.fixtures.profiles import four_way_pairwise
from tests.fixtures.profiles import frustrated_but_not_disappointed


def profiles(min_candidates=3, max_candidates=5, max_voters=9):
    return st.integers(min_candidates, max_candidates).flatmap(
        lambda m: st.lists(
            st.permutations(list(range(m))),
            min_size=1, max_size=max_voters,
        )
    ).map(Profile)


class CondorcetLoserTest(TestCase):
    def test_frustrating_profile(self):
        self.assertEqual(
            criteria.condorcet_loser(frustrated_but_not_disappointed()), A
        )

    def test_cycle_has_none(self):
        self.assertIsNone(criteria.condorcet_loser(cycle()))

    def test_milk(self):
        self.assertEqual(criteria.condorcet_loser(beverages()), MILK)

    def test_single_candidate_has_none(self):
        self.assertIsNone(criteria.condorcet_loser(Profile([(0,)])))


class SocialFrustrationTest(TestCase):
    def test_plurality_elects_milk(self):
        self.assertTrue(criteria.sf_occurred(beverages(), WinnerSet([MILK])))

    def test_empty_winners(self):
        self.assertFalse(criteria.sf_occurred(beverages(), WinnerSet()))

    def test_least_unpopular_elects_the_loser(self):
        profile = frustrated_but_not_disappointed()
        self.assertTrue(criteria.sf_occurred(profile, rules.lu(profile)))

    def test_no_loser_no_frustration(self):
        profile = disappointed_but_not_frustrated()
        self.assertFalse(
            criteria.sf_occurred(profile, rules.plurality(profile))
        )


class SocialDisappointmentTest(TestCase):
    def test_half_of_the_voters_is_enough(self):
        profile = disappointed_but_not_frustrated()
        winners = rules.plurality(profile)
        self.assertEqual(list(winners), [A])
        self.assertTrue(criteria.sd_occurred(profile, winners))
        self.assertFalse(criteria.strict_sd_occurred(profile, winners))

    def test_frustration_without_disappointment(self):
        profile = frustrated_but_not_disappointed()
        self.assertFalse(criteria.sd_occurred(profile, WinnerSet([A])))

    def test_borda_all_tie(self):
        profile = borda_tie()
        self.assertTrue(criteria.sd_occurred(profile, rules.borda(profile)))

    def test_milk_is_strictly_disappointing(self):
        profile = beverages()
        self.assertTrue(criteria.sd_occurred(profile, WinnerSet([MILK])))
        self.assertTrue(
            criteria.strict_sd_occurred(profile, WinnerSet([MILK]))
        )
        self.assertFalse(criteria.sd_occurred(profile, WinnerSet([WINE])))

    def test_empty_winners(self):
        self.assertFalse(criteria.sd_occurred(cycle(), WinnerSet()))
        self.assertFalse(criteria.strict_sd_occurred(cycle(), WinnerSet()))

    def test_pairwise_tie_winner(self):
        profile = four_way_pairwise()
        self.assertTrue(criteria.sd_occurred(profile, WinnerSet([D])))
        self.assertFalse(criteria.strict_sd_occurred(profile,
                                                     WinnerSet([D])))

    def test_needs_three_candidates(self):
        profile = Profile([(0, 1), (1, 0)])
        with self.assertRaises(CriterionDomainError):
            criteria.sd_occurred(profile, WinnerSet([0]))
        with self.assertRaises(CriterionDomainError):
            criteria.strict_sd_occurred(profile, WinnerSet([0]))

    @settings(max_examples=60, deadline=None)
    @given(profiles(), st.data())
    def test_detectors_are_monotone_in_the_winners(self, profile, data):
        small = data.draw(st.sets(st.sampled_from(list(profile.candidates))))
        extra = data.draw(st.sets(st.sampled_from(list(profile.candidates))))
        smaller = WinnerSet(small)
        larger = WinnerSet(small | extra)
        if criteria.sd_occurred(profile, smaller):
            self.assertTrue(criteria.sd_occurred(profile, larger))
        if criteria.strict_sd_occurred(profile, larger):
            self.assertTrue(criteria.sd_occurred(profile, larger))

    @settings(max_examples=60, deadline=None)
    @given(profiles())
    def test_strictly_disappointing_loser_is_frustrating(self, profile):
        loser = criteria.condorcet_loser(profile)
        if loser is None:
            return
        winners = WinnerSet([loser])
        if criteria.strict_sd_occurred(profile, winners):
            self.assertTrue(criteria.sf_occurred(profile, winners))

    @settings(max_examples=100, deadline=None)
    @given(profiles())
    def test_least_unpopular_rules_never_disappoint(self, profile):
        for name in ('coombs', 'lu', 'lur'):
            winners = rules.evaluate(name, profile)
            self.assertFalse(criteria.sd_occurred(profile, winners))

    @settings(max_examples=100, deadline=None)
    @given(profiles())
    def test_borda_and_copeland_never_frustrate(self, profile):
        for name in ('borda', 'copeland', 'condorcet', 'seqpairs'):
            winners = rules.evaluate(name, profile)
            self.assertFalse(criteria.sf_occurred(profile, winners))
