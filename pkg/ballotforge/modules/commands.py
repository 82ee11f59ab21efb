# -*- coding: utf-8 -*-
from ballotforge import constants
from ballotforge.helpers import memoization


class Commands(object):
    """
    The Commands object is a collection of command objects.
    It can collect them and find the one to run.
    """

    def __init__(self, application):
        """
        The Commands object should be created with the parent Application
        object as the first argument.

        :param application: Parent Application object
        :type application: Application
        """
        self.application = application

    @property
    @memoization
    def commands(self):
        """
        Returns the list of defined Command instances in name order.

        :rtype: list
        """
        commands = []
        for entry in dir(self.application):
            if not entry.startswith(constants.COMMAND_CLASS_PREFIX):
                continue
            command_class = getattr(self.application, entry)
            commands.append(command_class(self))
        return sorted(commands, key=lambda command: command.name)

    all = commands
    __call__ = commands

    @property
    @memoization
    def names(self):
        """
        Returns a set of all implemented command names with the
        built-in commands and aliases.

        :rtype: set
        """
        names = set(command.name for command in self.commands)
        names.update(constants.BUILTIN_COMMANDS)
        names.update(constants.ALIAS_COMMANDS.keys())
        return names

    @property
    def current(self):
        """
        Find the Command instance of the application's command. Exits with
        an error if the command is not found.

        :rtype: Command
        """
        command = self.get(self.application.command)
        if command is not None:
            return command
        self.application.exit.error_unimplemented(
            "Command '%s' is not found" % self.application.command
        )

    def get(self, name):
        """
        The Command instance by its name or None.

        :param name: Command name
        :type name: str
        :rtype: Command or None
        """
        for command in self.commands:
            if command.name == name:
                return command
        return None

    def validate(self):
        """
        Validate if the commands are configured correctly.
        """
        for command in self.commands:
            command.validate()
