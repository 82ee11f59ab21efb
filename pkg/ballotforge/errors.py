# -*- coding: utf-8 -*-


class BallotForgeError(Exception):
    """
    Base class of all errors raised by the engine.
    """


class ProfileError(BallotForgeError, ValueError):
    """
    A ballot or a profile does not satisfy the data model invariants.
    """

    def __init__(self, message, voter=None):
        if voter is not None:
            message = 'voter %d: %s' % (voter, message)
        super(ProfileError, self).__init__(message)
        self.voter = voter


class ProfileFormatError(BallotForgeError, ValueError):
    """
    The profile text cannot be parsed. The message cites the source
    and the line number.
    """

    def __init__(self, message, source='<profile>', line=None):
        if line is not None:
            message = '%s:%d: %s' % (source, line, message)
        else:
            message = '%s: %s' % (source, message)
        super(ProfileFormatError, self).__init__(message)
        self.source = source
        self.line = line


class RuleConfigError(BallotForgeError, ValueError):
    """
    The agenda or the dictator does not fit the profile.
    """


class UnknownNameError(BallotForgeError, ValueError):
    """
    A rule, criterion or scenario name is not known.
    """

    def __init__(self, kind, name, valid):
        self.kind = kind
        self.name = name
        self.valid = list(valid)
        super(UnknownNameError, self).__init__(
            "unknown %s '%s', valid options: %s" % (
                kind, name, ', '.join(self.valid)
            )
        )


class CriterionDomainError(BallotForgeError, ValueError):
    """
    The operation is not defined for the given number of candidates.
    """


class BudgetExceededError(BallotForgeError):
    """
    The bounded enumeration would be larger than the configured budget.
    """

    def __init__(self, estimate, budget):
        self.estimate = estimate
        self.budget = budget
        super(BudgetExceededError, self).__init__(
            'enumeration of %d profiles exceeds the budget of %d' % (
                estimate, budget
            )
        )


class ScenarioError(BallotForgeError, ValueError):
    """
    A manipulation scenario cannot run on the profile or its fraction
    is out of range.
    """


class ExperimentConfigError(BallotForgeError, ValueError):
    """
    The experiment grid, rule list or scenario list is not usable.
    """
