# -*- coding: utf-8 -*-

import sys
from ballotforge import VERSION
from ballotforge import constants
from ballotforge.errors import BallotForgeError
from ballotforge.errors import BudgetExceededError
from ballotforge.errors import CriterionDomainError
from ballotforge.errors import ExperimentConfigError
from ballotforge.errors import ProfileError
from ballotforge.errors import ProfileFormatError
from ballotforge.errors import RuleConfigError
from ballotforge.errors import ScenarioError
from ballotforge.errors import UnknownNameError
from ballotforge.helpers import docstring_format
from ballotforge.helpers import memoization
from ballotforge.modules.commands import Commands
from ballotforge.modules.environment import Environment
from ballotforge.modules.exit import Exit
from ballotforge.modules.log import Log
from ballotforge.modules.output import Output
from ballotforge.modules.parameters import Parameters
from ballotforge.modules.report import Report
from ballotforge.modules.workers import Workers

# the exit event of each engine error, most specific first
ERROR_EVENTS = [
    ((ProfileFormatError, ProfileError), 'error_input'),
    ((BudgetExceededError,), 'error_budget'),
    ((UnknownNameError, RuleConfigError, ExperimentConfigError,
      ScenarioError), 'error_configuration'),
    ((CriterionDomainError,), 'error_arguments'),
    ((BallotForgeError, IOError, OSError), 'error_generic'),
]


class Application(object):
    """
    The command line application: a set of commands and parameters
    declared as nested classes and the collaborators that parse, log,
    run and report.
    """
    _command = None

    @property
    @docstring_format(constants.CONST_NAME)
    def name(self):
        """
        Name of this application. It's either taken from the class name
        or can be manually set by the *{0}* constant.

        :rtype: str
        """
        return getattr(
            self,
            constants.CONST_NAME,
            self.__class__.__name__,
        )

    @property
    def version(self):
        return VERSION

    @property
    @docstring_format(constants.CONST_SHORT_DESCRIPTION)
    def short_description(self):
        """
        Short description string of this application. Can be manually set
        by the *{0}* constant. Will default to name if not set.

        :rtype: str
        """
        return getattr(
            self,
            constants.CONST_SHORT_DESCRIPTION,
            self.name,
        )

    @property
    def command(self):
        """
        Returns the command name the application has been called with or
        None if no command was given.

        :rtype: str or None
        """
        return self._command

    @command.setter
    def command(self, value=None):
        """
        Set the command, resolving aliases.

        :type value: str
        :param value: The command name
        """
        if value is None:
            self._command = None
            return
        if value in constants.ALIAS_COMMANDS:
            value = constants.ALIAS_COMMANDS[value]
        self._command = value

    def call(self, arguments=None):
        """
        Parse the arguments and run the command. Always ends with an exit
        event.

        :param arguments: Command line arguments without the program name
        :type arguments: list or None
        """
        if arguments is None:
            arguments = sys.argv[1:]
        command = self.parameters.parse(list(arguments))
        if command is not None:
            self.command = command
        self.validate()
        if self.command == 'usage':
            self.usage()
            self.exit.success('Usage output')
        self.run(self.commands.current)
        self.exit.success("Command '%s' completed" % self.command)

    __call__ = call

    def run(self, command):
        """
        Run a command and turn engine errors into exit events.

        :type command: Command
        """
        try:
            command()
        except Exception as error:
            for classes, event in ERROR_EVENTS:
                if isinstance(error, classes):
                    getattr(self.exit, event)(str(error))
            raise

    def validate(self):
        """
        Validate the application's configuration and the configuration of
        all commands and parameters.
        """
        if self.command is None:
            self.usage()
            self.exit.error_arguments('No command specified')
        if self.command not in self.commands.names:
            self.usage()
            self.exit.error_unimplemented(
                "Specified command: '%s' is neither a built-in "
                "nor a defined command" % self.command
            )

        self.parameters.validate()
        self.commands.validate()

    def usage(self):
        """
        Prints the usage information to the standard error output with
        all commands and flags.
        """
        names = sorted(
            [command.name for command in self.commands.all] +
            constants.BUILTIN_COMMANDS
        )
        lines = ['usage: %s {%s} [input] [flags]' % (
            self.name, '|'.join(names)
        )]
        for command in self.commands.all:
            lines.append('  %-12s %s' % (
                command.name, command.short_description
            ))
        lines.append('flags:')
        for name in sorted(self.parameters.all):
            parameter = self.parameters.all[name]
            if parameter.positional:
                continue
            lines.append('  %-14s %s' % (
                parameter.flag, parameter.short_description
            ))
        sys.stderr.write('\n'.join(lines) + '\n')

    def param(self, name):
        """
        Shortcut to get a parameter value by its name. Returns None
        if the parameter is not found.

        :param name: Parameter name
        :type name: str
        :return: Parameter value
        """
        return self.parameters.value(name)

    ###########################################################################

    @property
    @memoization
    def exit(self):
        """
        The Exit object handles different exit conditions, exit codes
        and logging.

        :rtype: Exit
        """
        return Exit(self)

    @property
    @memoization
    def parameters(self):
        """
        Application's parameters object. It deals with the command line,
        parameter values, defaults, types and validation.

        :rtype: Parameters
        """
        return Parameters(self)

    @property
    @memoization
    def commands(self):
        """
        Returns the commands object. It collects the commands and chooses
        the one to run.

        :rtype: Commands
        """
        return Commands(self)

    @property
    @memoization
    def environment(self):
        """
        The environment object reads the application's environment
        variables.

        :rtype: Environment
        """
        return Environment(self)

    env = environment

    @property
    @memoization
    def log(self):
        """
        The Log object handles all application's logging and output
        functions.

        :rtype: Log
        """
        return Log(self)

    @property
    @memoization
    def output(self):
        """
        The Output object writes result files into the results directory.

        :rtype: Output
        """
        return Output(self)

    @property
    @memoization
    def report(self):
        """
        The Report object renders result rows as a table, CSV or JSON.

        :rtype: Report
        """
        return Report(self)

    @property
    @memoization
    def workers(self):
        """
        The Workers object runs independent work items in parallel.

        :rtype: Workers
        """
        return Workers(self.param('jobs'))
