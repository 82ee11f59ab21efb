# -*- coding: utf-8 -*-
import argparse

from ballotforge import constants
from ballotforge.helpers import memoization


class ArgumentParser(argparse.ArgumentParser):
    """
    The argument parser reports errors through the application's Exit
    object instead of printing its own usage.
    """

    def __init__(self, application, **kwargs):
        self.application = application
        super(ArgumentParser, self).__init__(**kwargs)

    def error(self, message):
        self.application.exit.error_arguments(message)


class Parameters(object):
    """
    The Parameters object is a collection of Parameter objects.
    It can collect Parameters, parse the command line and work with
    their values.
    """

    def __init__(self, application):
        """
        The Parameters object should be created with the parent Application
        object as the first argument.

        :param application: Parent Application object
        :type application: Application
        """
        self.application = application

    @property
    @memoization
    def parameters(self):
        """
        Returns the dictionary of all defined parameter names
        and their object instances.

        :rtype: dict
        :return: Dictionary of parameter names and objects
        """
        parameters = {}
        for entry in dir(self.application):
            if not entry.startswith(constants.PARAMETER_CLASS_PREFIX):
                continue
            parameter_class = getattr(self.application, entry)
            parameter_class_instance = parameter_class(self)
            parameters[parameter_class_instance.name] = \
                parameter_class_instance
        return parameters

    all = parameters
    __call__ = parameters

    def get(self, name):
        """
        Get the parameter instance by its name.

        :param name: Parameter name
        :type name: str
        :return: Parameter instance
        :type: Parameter or None
        """
        if name in self.parameters:
            return self.parameters[name]
        return None

    def value(self, name):
        """
        Get the parameter value by the parameter name.

        :param name: Parameter name
        :type name: str
        :return: Parameter value
        :rtype: int or bool or str or float or list or None
        """
        parameter = self.get(name)
        if parameter is None:
            return None
        return parameter.value

    @property
    def values(self):
        """
        Get a dictionary of parameter names and their values.

        :return: Parameter name and values
        :rtype: dict
        """
        values = {}
        for parameter_name, parameter in self.parameters.items():
            values[parameter_name] = parameter.value
        return values

    @property
    @memoization
    def parser(self):
        """
        The command line parser: the command name followed by the
        positional parameter and the flags of all parameters.

        :rtype: ArgumentParser
        """
        parser = ArgumentParser(
            self.application,
            prog=self.application.name,
            description=self.application.short_description,
            add_help=False,
        )
        parser.add_argument('command', nargs='?', default=None)
        for name in sorted(self.parameters):
            parameter = self.parameters[name]
            if parameter.positional:
                parameter.add_argument(parser)
        for name in sorted(self.parameters):
            parameter = self.parameters[name]
            if not parameter.positional:
                parameter.add_argument(parser)
        return parser

    def parse(self, arguments):
        """
        Parse the command line arguments and set the given values.

        :param arguments: Arguments without the program name
        :type arguments: list
        :return: The command name or None
        :rtype: str or None
        """
        namespace = self.parser.parse_args(arguments)
        for name, parameter in self.parameters.items():
            given = getattr(namespace, name, None)
            if given is not None:
                parameter.value = given
        return namespace.command

    def validate(self):
        """
        Validate if the parameters are configured correctly.
        """
        for parameter in self.parameters.values():
            parameter.validate()
