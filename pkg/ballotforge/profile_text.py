# -*- coding: utf-8 -*-

"""
The profile text format::

    # name 0 Milk
    # name 1 Beer
    # name 2 Wine
    3 9
    0 2 1
    ...

The first non-comment line holds ``m n``, the next ``n`` lines hold one
ballot each, most preferred candidate first. Ballot entries are ids or
labels declared by ``# name <id> <label>`` lines. Other lines starting
with ``#`` and blank lines are ignored.
"""

import sys
from collections import namedtuple

from ballotforge import constants
from ballotforge.core import Profile
from ballotforge.errors import ProfileError
from ballotforge.errors import ProfileFormatError

TIE_MARKS = ('=', '~', '(', ')', '{', '}')


class ProfileDocument(namedtuple('ProfileDocument', ['profile', 'names'])):
    """
    A parsed profile and its candidate name table.
    """

    def label(self, candidate):
        return label(self.names, candidate)

    def labels(self, candidates):
        return [self.label(candidate) for candidate in candidates]


def label(names, candidate):
    """
    The display name of a candidate, its id if it has no name.

    :type names: dict or None
    :type candidate: int
    :rtype: str
    """
    if names and candidate in names:
        return names[candidate]
    return str(candidate)


def _decode(text, source):
    if isinstance(text, bytes):
        try:
            text = text.decode(constants.TEXT_ENCODING)
        except UnicodeDecodeError as error:
            raise ProfileFormatError(
                'the profile is not ASCII text (%s)' % error, source
            )
    return text


def _name_header(tokens, number, source, names):
    if len(tokens) != 4:
        raise ProfileFormatError(
            "expected '# name <id> <label>'", source, number
        )
    try:
        candidate = int(tokens[2])
    except ValueError:
        raise ProfileFormatError(
            "candidate id '%s' is not an integer" % tokens[2], source, number
        )
    if candidate in names:
        raise ProfileFormatError(
            "candidate id %d is named twice" % candidate, source, number
        )
    if tokens[3] in names.values():
        raise ProfileFormatError(
            "label '%s' is used twice" % tokens[3], source, number
        )
    names[candidate] = tokens[3]


def _candidate(token, ids, number, source):
    if token in ids:
        return ids[token]
    try:
        return int(token)
    except ValueError:
        raise ProfileFormatError(
            "unknown candidate '%s'" % token, source, number
        )


def parse_candidates(tokens, names=None, source='<candidates>'):
    """
    Resolve a list of candidate ids or labels.

    :type tokens: list
    :type names: dict or None
    :type source: str
    :rtype: list
    """
    ids = dict((name, c) for c, name in (names or {}).items())
    return [_candidate(token, ids, None, source) for token in tokens]


def parse_profile(text, source='<profile>'):
    """
    Parse the profile text.

    :param text: Profile text
    :type text: str or bytes
    :param source: File name used in error messages
    :type source: str
    :rtype: ProfileDocument
    :raises ProfileFormatError: the text is malformed, the message cites
        the line
    """
    text = _decode(text, source)
    names = {}
    size = None
    ballots = []
    lines = []
    for number, line in enumerate(text.splitlines(), 1):
        try:
            line.encode(constants.TEXT_ENCODING)
        except UnicodeEncodeError:
            raise ProfileFormatError('non-ASCII character', source, number)
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith(constants.COMMENT_PREFIX):
            tokens = stripped.split()
            if len(tokens) > 1 and tokens[0] == constants.COMMENT_PREFIX \
                    and tokens[1] == constants.NAME_HEADER:
                _name_header(tokens, number, source, names)
            continue
        lines.append((number, stripped))

    ids = dict((name, c) for c, name in names.items())
    for number, stripped in lines:
        if any(mark in stripped for mark in TIE_MARKS):
            raise ProfileFormatError(
                'tied or grouped ballots are not supported', source, number
            )
        tokens = stripped.split()
        if size is None:
            if len(tokens) != 2:
                raise ProfileFormatError(
                    "expected the header 'm n'", source, number
                )
            try:
                size = int(tokens[0]), int(tokens[1])
            except ValueError:
                raise ProfileFormatError(
                    "header values must be integers", source, number
                )
            if size[0] < 1 or size[1] < 1:
                raise ProfileFormatError(
                    'a profile needs at least one candidate and one voter',
                    source, number,
                )
            continue
        if len(ballots) == size[1]:
            raise ProfileFormatError(
                'more than %d ballots' % size[1], source, number
            )
        if len(tokens) != size[0]:
            raise ProfileFormatError(
                'ballot has %d candidates, expected %d' % (
                    len(tokens), size[0]
                ),
                source, number,
            )
        ballot = [_candidate(token, ids, number, source) for token in tokens]
        if sorted(ballot) != list(range(size[0])):
            raise ProfileFormatError(
                'voter %d: ballot is not a permutation of 0..%d' % (
                    len(ballots), size[0] - 1
                ),
                source, number,
            )
        ballots.append(ballot)

    if size is None:
        raise ProfileFormatError("missing the header 'm n'", source)
    if len(ballots) != size[1]:
        raise ProfileFormatError(
            'expected %d ballots, found %d' % (size[1], len(ballots)), source
        )
    for candidate in names:
        if not 0 <= candidate < size[0]:
            raise ProfileFormatError(
                'name given to unknown candidate %d' % candidate, source
            )
    try:
        profile = Profile(ballots, size[0])
    except ProfileError as error:
        raise ProfileFormatError(str(error), source)
    return ProfileDocument(profile, names)


def read_profile(path=None):
    """
    Read and parse a profile file, the standard input if the path is
    None or '-'.

    :type path: str or None
    :rtype: ProfileDocument
    :raises ProfileFormatError: the file cannot be read or parsed
    """
    if path is None or path == '-':
        return parse_profile(sys.stdin.read(), '<stdin>')
    try:
        with open(path, 'rb') as stream:
            text = stream.read()
    except (IOError, OSError) as error:
        raise ProfileFormatError(
            'cannot read the file (%s)' % error.strerror, path
        )
    return parse_profile(text, path)


def format_profile(profile, names=None):
    """
    Render a profile in the text format.

    :type profile: Profile
    :type names: dict or None
    :rtype: str
    """
    lines = []
    for candidate in sorted(names or {}):
        lines.append('%s %s %d %s' % (
            constants.COMMENT_PREFIX, constants.NAME_HEADER,
            candidate, names[candidate],
        ))
    lines.append('%d %d' % (profile.num_candidates, profile.num_voters))
    for ballot in profile.ballots:
        lines.append(' '.join(map(str, ballot)))
    return '\n'.join(lines) + '\n'
