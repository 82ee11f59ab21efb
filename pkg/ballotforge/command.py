# -*- coding: utf-8 -*-

from ballotforge import constants
from ballotforge.helpers import docstring_format
from ballotforge.helpers import string_to_bool


class Command(object):
    """
    The Command object represents a subcommand the application can be
    called with. It selects the application method to run.
    """
    _name = None

    def __init__(self, commands=None):
        """
        The Command object should be created with the parent Commands object
        as the first argument.

        :param commands: Parent Commands object
        :type commands: Commands
        """
        self.commands = commands
        self.application = self.commands.application

    def validate(self):
        """
        Validate if this Command object is configured correctly.
        """
        if not self.__class__.__name__.startswith(
                constants.COMMAND_CLASS_PREFIX
        ):
            self.application.exit.error_configuration(
                "Command class '%s' name does not start with '%s'" %
                (self.__class__.__name__, constants.COMMAND_CLASS_PREFIX)
            )

    @property
    @docstring_format(constants.CONST_ACTION)
    def name(self):
        """
        Returns the name of this command. It is taken from the class name
        after the prefix, with underscores turned to dashes, or set by the
        *{0}* constant.

        :return: Command name
        :rtype: str
        """
        if self._name is not None:
            return self._name
        if hasattr(self, constants.CONST_ACTION):
            name = getattr(self, constants.CONST_ACTION)
        else:
            name = str(
                self.__class__.__name__[len(constants.COMMAND_CLASS_PREFIX):]
            ).replace('_', '-')
        self._name = name
        return self._name

    action = name

    @property
    @docstring_format(constants.CONST_SHORT_DESCRIPTION)
    def short_description(self):
        """
        Short description string of this command, shown by the usage
        output. Defined by the *{0}* constant or defaults to the name.

        :return: Short description string
        :rtype: str
        """
        return getattr(
            self,
            constants.CONST_SHORT_DESCRIPTION,
            self.name
        )

    @property
    @docstring_format(constants.CONST_PARALLEL)
    def parallel(self):
        """
        Commands that use the worker pool set the *{0}* constant.

        :rtype: bool
        """
        return string_to_bool(getattr(self, constants.CONST_PARALLEL, False))

    @property
    @docstring_format(constants.CONST_METHOD)
    def default_method_name(self):
        """
        This is the name of the application method called by this command
        if no other method name is defined by the *{0}* constant.

        :return: Default command method name
        :rtype: str
        """
        return constants.COMMAND_METHOD_PREFIX + self.name.replace('-', '_')

    @property
    def method_name(self):
        return getattr(
            self,
            constants.CONST_METHOD,
            self.default_method_name
        )

    @property
    def method(self):
        """
        Returns the application's method object of this command or None
        if the method is not found.

        :rtype: func or None
        """
        return getattr(self.application, self.method_name, None)

    def call(self):
        """
        Run the application's method of this command. If there is no such
        method the application exits with an error message.
        """
        if self.method is not None and hasattr(self.method, '__call__'):
            self.method()
        else:
            self.application.exit.error_unimplemented(
                "Application does not have method: '%s'" % self.method_name
            )

    __call__ = call
