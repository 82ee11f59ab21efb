# -*- coding: utf-8 -*-

from unittest import TestCase

from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st

from ballotforge.core import Profile
from ballotforge.core import bottom_counts
from ballotforge.core import first_place_counts
from ballotforge.core import restrict
from ballotforge.core import tally_pairwise
from tests.fixtures.profiles import A, B, C
from tests.fixtures.profiles import BEER, MILK, WINE
from tests.fixtures.profiles import beverages
from tests.fixtures.profiles import frustrated_but_not_disappointed
from tests.fixtures.profiles import hare_blocks
from tests.fixtures.profiles import reselection
from tests.fixtures.profiles import unanimous


def profiles(min_candidates=1, max_candidates=5, max_voters=8):
    """
    Random profiles as lists of permutations of a common candidate set.
    """
    return st.integers(min_candidates, max_candidates).flatmap(
        lambda m: st.lists(
            st.permutations(list(range(m))),
            min_size=1, max_size=max_voters,
        )
    ).map(Profile)


class PairwiseTallyTest(TestCase):
    def test_milk_loses_every_contest(self):
        tally = tally_pairwise(beverages())
        self.assertEqual(tally[WINE, MILK], 5)
        self.assertEqual(tally[BEER, MILK], 5)
        self.assertTrue(tally.beats(WINE, MILK))
        self.assertTrue(tally.beats(BEER, MILK))
        self.assertEqual(tally.losses[MILK], 2)
        self.assertEqual(tally.victories[WINE], 2)

    def test_single_voter(self):
        tally = tally_pairwise(Profile([(A, B, C)]))
        self.assertEqual(tally[A, B], 1)
        self.assertEqual(tally[A, C], 1)
        self.assertEqual(tally[B, C], 1)
        self.assertEqual(tally[B, A], 0)
        self.assertEqual(tally[C, A], 0)
        self.assertEqual(tally[C, B], 0)

    def test_condorcet_loser_profile(self):
        tally = tally_pairwise(frustrated_but_not_disappointed())
        self.assertEqual(tally[B, A], 42)
        self.assertEqual(tally[C, A], 48)
        self.assertEqual(tally.num_voters, 80)
        self.assertEqual(tally.num_candidates, 3)

    def test_ties(self):
        tally = tally_pairwise(Profile([(A, B, C), (C, B, A)]))
        self.assertTrue(tally.ties(A, C))
        self.assertFalse(tally.beats(A, C))
        self.assertEqual(tally.losses.tolist(), [0, 0, 0])

    @settings(max_examples=50, deadline=None)
    @given(profiles())
    def test_complement_identity(self, profile):
        tally = tally_pairwise(profile)
        for x in profile.candidates:
            self.assertEqual(tally[x, x], 0)
            for y in profile.candidates:
                if x != y:
                    self.assertEqual(tally[x, y] + tally[y, x],
                                     profile.num_voters)

    @settings(max_examples=50, deadline=None)
    @given(profiles())
    def test_statistics_ignore_the_voter_order(self, profile):
        reversed_profile = Profile(profile.ballots[::-1])
        self.assertEqual(tally_pairwise(profile).wins.tolist(),
                         tally_pairwise(reversed_profile).wins.tolist())
        self.assertEqual(bottom_counts(profile).tolist(),
                         bottom_counts(reversed_profile).tolist())
        self.assertEqual(first_place_counts(profile).tolist(),
                         first_place_counts(reversed_profile).tolist())

    @settings(max_examples=50, deadline=None)
    @given(profiles(min_candidates=2), st.data())
    def test_restrict_then_tally_drops_rows_and_columns(self, profile, data):
        keep = data.draw(st.lists(
            st.sampled_from(list(profile.candidates)),
            min_size=1, unique=True,
        ))
        restricted, mapping = restrict(profile, keep)
        full = tally_pairwise(profile)
        small = tally_pairwise(restricted)
        for x in keep:
            for y in keep:
                self.assertEqual(small[mapping[x], mapping[y]], full[x, y])


class PositionalCountsTest(TestCase):
    def test_reselection_last_places(self):
        self.assertEqual(bottom_counts(reselection()).tolist(), [2, 1, 1])

    def test_condorcet_loser_profile_last_places(self):
        self.assertEqual(
            bottom_counts(frustrated_but_not_disappointed()).tolist(),
            [10, 38, 32],
        )

    def test_unanimous_last_places(self):
        self.assertEqual(
            bottom_counts(unanimous((A, B, C), 5)).tolist(), [0, 0, 5]
        )

    def test_beverages_first_places(self):
        self.assertEqual(
            first_place_counts(beverages()).tolist(), [4, 3, 2]
        )

    def test_unanimous_first_places(self):
        self.assertEqual(
            first_place_counts(unanimous((B, A, C), 4)).tolist(), [0, 4, 0]
        )

    def test_hare_blocks_first_places(self):
        counts = first_place_counts(hare_blocks())
        self.assertEqual(counts[A], 4)
        self.assertEqual(counts[B], 3)
        self.assertEqual(counts[C], 3)

    @settings(max_examples=50, deadline=None)
    @given(profiles())
    def test_counts_sum_to_the_voters(self, profile):
        self.assertEqual(int(bottom_counts(profile).sum()),
                         profile.num_voters)
        self.assertEqual(int(first_place_counts(profile).sum()),
                         profile.num_voters)
