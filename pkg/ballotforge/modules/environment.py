# -*- coding: utf-8 -*-

import os
from ballotforge import constants
from ballotforge.helpers import memoization
from ballotforge.helpers import string_to_bool
from ballotforge.helpers import string_to_list


class Environment(object):
    def __init__(self, application):
        self.application = application

    @property
    @memoization
    def environment(self):
        """
        Returns the dictionary of all relevant environment variables and
        their values

        :rtype: dict
        """
        environment = {}
        for variable in os.environ.keys():
            if variable.startswith(constants.VAR_PREFIX):
                environment[variable] = os.environ[variable]
        return environment

    all = environment

    get = staticmethod(os.getenv)

    @property
    def seed(self):
        return os.getenv(constants.VAR_SEED, None)

    @property
    def jobs(self):
        return os.getenv(constants.VAR_JOBS, None)

    @property
    @memoization
    def is_debug(self):
        return string_to_bool(
            os.getenv(
                constants.VAR_DEBUG,
                False,
            ),
            False,
        )

    @property
    def log_handlers(self):
        """
        Log handler names from the environment or None.

        :rtype: list or None
        """
        value = os.getenv(constants.VAR_LOG_HANDLERS, None)
        if not value:
            return None
        return string_to_list(value)
