# -*- coding: utf-8 -*-

"""
The data model every rule consumes: ballots, profiles, pairwise tallies
and positional counts. Candidates are dense integer ids ``0 .. m-1``;
names live in :mod:`ballotforge.profile_text` only.
"""

import itertools
from collections import namedtuple

import numpy

from ballotforge.errors import ProfileError
from ballotforge.helpers import memoization


def check_ballot(ballot, num_candidates, voter=None):
    """
    Make sure the ballot is a permutation of the candidate ids.

    :param ballot: Candidate ids, most preferred first
    :type ballot: tuple
    :param num_candidates: Number of candidates
    :type num_candidates: int
    :param voter: Voter index used in the error message
    :type voter: int or None
    :raises ProfileError: the ballot is not a permutation
    """
    if len(ballot) != num_candidates:
        raise ProfileError(
            'ballot has %d candidates, expected %d' % (
                len(ballot), num_candidates
            ),
            voter,
        )
    if sorted(ballot) != list(range(num_candidates)):
        raise ProfileError(
            'ballot %s is not a permutation of 0..%d' % (
                ' '.join(map(str, ballot)), num_candidates - 1
            ),
            voter,
        )


def all_ballots(num_candidates):
    """
    Every linear ballot over the candidates in lexicographic order.

    :type num_candidates: int
    :rtype: list
    """
    return list(itertools.permutations(range(num_candidates)))


class Profile(object):
    """
    An immutable ordered collection of linear ballots. The voter index is
    the position of the ballot.
    """

    def __init__(self, ballots, num_candidates=None, validate=True):
        """
        :param ballots: Sequence of ballots, each a sequence of candidate ids
        :type ballots: list or tuple
        :param num_candidates: Number of candidates, taken from the first
            ballot if not given
        :type num_candidates: int or None
        :param validate: Check every ballot. Internal callers building
            a profile from an already valid one skip it.
        :type validate: bool
        :raises ProfileError: the profile is empty or a ballot is malformed
        """
        ballots = tuple(tuple(int(c) for c in ballot) for ballot in ballots)
        if not ballots:
            raise ProfileError('a profile needs at least one ballot')
        if num_candidates is None:
            num_candidates = len(ballots[0])
        if num_candidates < 1:
            raise ProfileError('a profile needs at least one candidate')
        if validate:
            for voter, ballot in enumerate(ballots):
                check_ballot(ballot, num_candidates, voter)
        self._ballots = ballots
        self._num_candidates = int(num_candidates)

    @property
    def ballots(self):
        return self._ballots

    @property
    def num_candidates(self):
        return self._num_candidates

    m = num_candidates

    @property
    def num_voters(self):
        return len(self._ballots)

    n = num_voters

    @property
    def candidates(self):
        return range(self._num_candidates)

    def __len__(self):
        return len(self._ballots)

    def __iter__(self):
        return iter(self._ballots)

    def __getitem__(self, voter):
        return self._ballots[voter]

    def __eq__(self, other):
        if not isinstance(other, Profile):
            return NotImplemented
        return self.num_candidates == other.num_candidates and \
            self.ballots == other.ballots

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.num_candidates, self.ballots))

    def __repr__(self):
        return 'Profile(%r)' % (self.ballots,)

    def top(self, voter):
        return self._ballots[voter][0]

    def bottom(self, voter):
        return self._ballots[voter][-1]

    @property
    @memoization
    def rankings(self):
        """
        Ballots as an ``n x m`` array, ``rankings[i][r]`` is the candidate
        at rank ``r`` of voter ``i``.

        :rtype: numpy.ndarray
        """
        rankings = numpy.array(self._ballots, dtype=numpy.int64)
        rankings.setflags(write=False)
        return rankings

    @property
    @memoization
    def positions(self):
        """
        Inverse of the rankings, ``positions[i][c]`` is the rank voter ``i``
        gives to candidate ``c``.

        :rtype: numpy.ndarray
        """
        positions = numpy.empty_like(self.rankings)
        rows = numpy.arange(self.num_voters)[:, None]
        positions[rows, self.rankings] = numpy.arange(self.num_candidates)
        positions.setflags(write=False)
        return positions

    def replace(self, voter, ballot):
        """
        A new profile with one ballot replaced.

        :type voter: int
        :type ballot: tuple
        :rtype: Profile
        """
        ballot = tuple(ballot)
        check_ballot(ballot, self.num_candidates, voter)
        ballots = list(self._ballots)
        ballots[voter] = ballot
        return Profile(ballots, self.num_candidates, validate=False)

    def canonical(self):
        """
        The same multiset of ballots in sorted voter order.

        :rtype: Profile
        """
        return Profile(
            sorted(self._ballots), self.num_candidates, validate=False
        )


class TallyMatrix(object):
    """
    Pairwise majority counts, ``wins[x][y]`` voters rank ``x`` above ``y``.
    """

    def __init__(self, wins, num_voters):
        wins = numpy.asarray(wins, dtype=numpy.int64)
        wins.setflags(write=False)
        self.wins = wins
        self.num_voters = num_voters

    @property
    def num_candidates(self):
        return self.wins.shape[0]

    def __getitem__(self, item):
        return self.wins[item]

    def beats(self, x, y):
        return self.wins[x, y] > self.wins[y, x]

    def ties(self, x, y):
        return self.wins[x, y] == self.wins[y, x]

    @property
    @memoization
    def strict(self):
        """
        Boolean matrix of strict pairwise victories.

        :rtype: numpy.ndarray
        """
        return self.wins > self.wins.T

    @property
    @memoization
    def losses(self):
        """
        Number of rivals beating each candidate strictly.

        :rtype: numpy.ndarray
        """
        return self.strict.sum(axis=0)

    @property
    @memoization
    def victories(self):
        """
        Number of rivals each candidate beats strictly.

        :rtype: numpy.ndarray
        """
        return self.strict.sum(axis=1)


class WinnerSet(tuple):
    """
    A possibly empty set of candidates kept in ascending id order.
    """

    def __new__(cls, winners=()):
        return super(WinnerSet, cls).__new__(
            cls, sorted(set(int(winner) for winner in winners))
        )

    def __repr__(self):
        return 'WinnerSet(%s)' % list(self)

    @property
    def elected(self):
        """
        The single candidate chosen after breaking ties by ascending id,
        None for an empty set.

        :rtype: int or None
        """
        if not self:
            return None
        return self[0]


Restriction = namedtuple('Restriction', ['profile', 'mapping'])


def tally_pairwise(profile):
    """
    Count, for every ordered pair of candidates, the voters ranking the
    first above the second.

    :type profile: Profile
    :rtype: TallyMatrix
    """
    positions = profile.positions
    wins = (positions[:, :, None] < positions[:, None, :]).sum(axis=0)
    return TallyMatrix(wins, profile.num_voters)


def bottom_counts(profile):
    """
    Last-place counts, the ``lp`` vector.

    :type profile: Profile
    :rtype: numpy.ndarray
    """
    return numpy.bincount(
        profile.rankings[:, -1], minlength=profile.num_candidates
    )


def first_place_counts(profile):
    """
    First-place counts.

    :type profile: Profile
    :rtype: numpy.ndarray
    """
    return numpy.bincount(
        profile.rankings[:, 0], minlength=profile.num_candidates
    )


def restrict(profile, keep):
    """
    Strike every candidate outside ``keep`` from all ballots and renumber
    the survivors densely in ascending order of their old ids.

    :param profile: The profile to restrict
    :type profile: Profile
    :param keep: Candidates to keep
    :type keep: iterable
    :return: The restricted profile and the old to new id map
    :rtype: Restriction
    :raises ProfileError: nothing to keep or an unknown candidate
    """
    survivors = sorted(set(int(candidate) for candidate in keep))
    if not survivors:
        raise ProfileError('cannot restrict a profile to no candidates')
    if survivors[0] < 0 or survivors[-1] >= profile.num_candidates:
        raise ProfileError(
            'cannot keep candidates outside 0..%d' % (
                profile.num_candidates - 1
            )
        )
    mapping = dict((old, new) for new, old in enumerate(survivors))
    ballots = [
        tuple(mapping[c] for c in ballot if c in mapping)
        for ballot in profile.ballots
    ]
    return Restriction(
        Profile(ballots, len(survivors), validate=False),
        mapping,
    )


def inverse_mapping(mapping):
    """
    New to old id lookup of a restriction map.

    :type mapping: dict
    :rtype: dict
    """
    return dict((new, old) for old, new in mapping.items())
