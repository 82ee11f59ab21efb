# -*- coding: utf-8 -*-

import sys
from ballotforge import constants
from ballotforge.helpers import docstring_format


class Exit(object):
    """
    The exit object handles the application's exit conditions, exit codes
    and logging.
    """

    def __init__(self, application):
        """
        The Exit object should be created with the Application parent object
        as the first argument.

        :param application: Parent Application
        :type application: Application
        """
        self.application = application

    def output(self, event, message, code):
        """
        Output the exit message to the application's logger. Errors are
        logged at the error level, success at the info level.

        :param event: Exit event name
        :type event: str
        :param message: Exit event message
        :type message: str
        :param code: Exit code
        :type code: int
        """
        line = '%s: %s - exit code: %d' % (event, message, code)
        if code == constants.EXIT_SUCCESS:
            self.application.log.info(line)
        else:
            self.application.log.error(line)

    def exit(self, event, message, code):
        self.output(event, message, code)
        sys.exit(code)

    @docstring_format(constants.EXIT_SUCCESS)
    def success(self, message):
        """
        The command has completed successfully. The application will exit
        with code **{0}**.

        :param message: Event message
        :type message: str
        """
        self.exit('success', message, constants.EXIT_SUCCESS)

    @docstring_format(constants.EXIT_ERR_GENERIC)
    def error_generic(self, message):
        """
        Generic or unspecified error. This return code **{0}** should be used
        if other error codes cannot describe the problem.

        :param message: Event message
        :type message: str
        """
        self.exit('error_generic', message, constants.EXIT_ERR_GENERIC)

    @docstring_format(constants.EXIT_ERR_ARGS)
    def error_arguments(self, message):
        """
        The application has been called without a command, with a flag it
        does not know or with a value of a wrong type. The exit code is
        **{0}**.

        :param message: Event message
        :type message: str
        """
        self.exit('error_arguments', message, constants.EXIT_ERR_ARGS)

    @docstring_format(constants.EXIT_ERR_UNIMPLEMENTED)
    def error_unimplemented(self, message):
        """
        The application has been called with a command that is not
        implemented or the command method is missing. The exit code
        is **{0}**.

        :param message: Event message
        :type message: str
        """
        self.exit(
            'error_unimplemented', message, constants.EXIT_ERR_UNIMPLEMENTED
        )

    @docstring_format(constants.EXIT_ERR_INPUT)
    def error_input(self, message):
        """
        The profile file is missing, cannot be read or is malformed. The
        message cites the file and the line. The exit code is **{0}**.

        :param message: Event message
        :type message: str
        """
        self.exit('error_input', message, constants.EXIT_ERR_INPUT)

    @docstring_format(constants.EXIT_ERR_BUDGET)
    def error_budget(self, message):
        """
        The bounded search would visit more profiles than the budget
        allows. The exit code is **{0}**.

        :param message: Event message
        :type message: str
        """
        self.exit('error_budget', message, constants.EXIT_ERR_BUDGET)

    @docstring_format(constants.EXIT_ERR_CONFIGURED)
    def error_configuration(self, message):
        """
        The configuration is not usable: an unknown rule, criterion or
        scenario name, an agenda that is not a permutation, a dictator out
        of range or an empty experiment grid. The exit code is **{0}**.

        :param message: Event message
        :type message: str
        """
        self.exit(
            'error_configuration', message, constants.EXIT_ERR_CONFIGURED
        )
