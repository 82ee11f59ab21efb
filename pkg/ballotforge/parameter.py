# -*- coding: utf-8 -*-

from ballotforge import constants
from ballotforge.helpers import docstring_format
from ballotforge.helpers import memoization
from ballotforge.helpers import string_to_bool
from ballotforge.helpers import string_to_fraction
from ballotforge.helpers import string_to_integer
from ballotforge.helpers import string_to_list


class BaseParameter(object):
    def __init__(self, parameters=None):
        """
        A parameter should be created with its parent Parameters
        object provided as the first argument.

        :param parameters: The parent parameters object
        :type parameters: Parameters
        """
        self.parameters = parameters
        self.application = self.parameters.application
        self._value = None

    def validate(self):
        """
        Validate if this Parameter object is configured correctly
        """
        if not self.__class__.__name__.startswith(
                constants.PARAMETER_CLASS_PREFIX
        ):
            self.application.exit.error_configuration(
                "Parameter class name does not start with '%s'" %
                constants.PARAMETER_CLASS_PREFIX
            )

    @property
    @docstring_format(constants.CONST_NAME)
    def name(self):
        """
        The parameter's name can be taken from the parameter class' name
        or manually defined in the parameter class by the *{0}* constant.

        :return: Parameter's name
        :rtype: str
        """
        if hasattr(self, constants.CONST_NAME):
            return getattr(self, constants.CONST_NAME)
        return str(
            self.__class__.__name__[len(constants.PARAMETER_CLASS_PREFIX):]
        )

    @property
    @docstring_format(constants.CONST_FLAG)
    def flag(self):
        """
        The command line flag of this parameter. Underscores of the name
        become dashes unless the flag is set by the *{0}* constant.

        :rtype: str
        """
        return getattr(
            self,
            constants.CONST_FLAG,
            '--' + self.name.replace('_', '-'),
        )

    @property
    @docstring_format(constants.CONST_POSITIONAL)
    def positional(self):
        """
        Positional parameters are given without a flag. Set by the *{0}*
        constant, **False** by default.

        :rtype: bool
        """
        return string_to_bool(
            getattr(self, constants.CONST_POSITIONAL, False)
        )

    @property
    @docstring_format(constants.CONST_SHORT_DESCRIPTION)
    def short_description(self):
        """
        Short description of this parameter. Will default to the parameter's
        name unless defined by the *{0}* constant.

        :return: Short description
        :rtype: str
        """
        return getattr(
            self,
            constants.CONST_SHORT_DESCRIPTION,
            self.name
        )

    @property
    @docstring_format(constants.CONST_LONG_DESCRIPTION)
    def long_description(self):
        """
        Long description of this parameter. It will be taken from the constant
        *{0}* in the parameter's class or will default to the short
        description.

        :return: Long description
        :rtype: str
        """
        return getattr(
            self,
            constants.CONST_LONG_DESCRIPTION,
            self.short_description
        )

    @property
    @docstring_format(constants.CONST_CHOICES)
    def choices(self):
        """
        The list of accepted values from the *{0}* constant or None if
        any value of the type is accepted.

        :rtype: list or None
        """
        return getattr(self, constants.CONST_CHOICES, None)

    @property
    def type(self):
        """
        Returns the Python type which the value of this parameter should
        belong to. This method should be redefined by the inherited classes.

        :return: Expected type of the value
        """
        self.application.exit.error_unimplemented(
            '%s is an abstract class and cannot be used directly' %
            self.__class__.__name__
        )

    @property
    def type_name(self):
        """
        Returns the string name of the expected type

        :rtype: str
        :return: Type name
        """
        return {
            int: 'integer',
            str: 'string',
            bool: 'boolean',
            float: 'number',
            list: 'list',
        }.get(self.type)

    @property
    @memoization
    @docstring_format(constants.CONST_DEFAULT)
    def default(self):
        """
        The default value of this parameter. Can be defined by the *{0}*
        constant inside the parameter class definition.

        :return: The default value
        """
        return self.process_value(
            getattr(
                self,
                constants.CONST_DEFAULT,
                None)
        )

    @property
    @docstring_format(constants.CONST_ENV)
    def env_variable_name(self):
        """
        The environment variable that can provide the value of this
        parameter, set by the *{0}* constant. Parameters without it can be
        given only on the command line.

        :rtype: str or None
        """
        return getattr(self, constants.CONST_ENV, None)

    @property
    def value(self):
        """
        Returns this parameter's value. The value given on the command
        line wins, then the value of the environment variable, and,
        finally, the default value is returned.

        :return: The parameter's value or the default value
        """
        if self._value is not None:
            return self._value
        variable = self.env_variable_name
        if variable is not None:
            env_value = self.application.environment.get(variable)
            if env_value not in (None, ''):
                self.value = env_value
        if self._value is not None:
            return self._value
        return self.default

    @value.setter
    def value(self, new_value):
        """
        Manually set the current parameter value and run the value processing.

        :param new_value: The new value
        :type new_value: object
        """
        self._value = self.process_value(new_value)

    @property
    def is_set(self):
        """
        True if the value was given explicitly or by the environment.

        :rtype: bool
        """
        return self.value is not None and self._value is not None

    def process_value(self, value):
        """
        Convert and validate a new value either for the default or for
        the current parameter value.

        :type value: object
        :param value: a new value
        :rtype: object
        :return: processed value
        """
        original = value
        value = self.modify_value(value)
        if original is not None and value is None or \
                not self.validate_value(value):
            self.application.exit.error_arguments(
                "The value: '%s' of the parameter: '%s' is not correct!" % (
                    original, self.name))
        return value

    def validate_value(self, value):
        """
        Validates the value of this parameter. Returns True if the value
        has the expected type and is one of the choices, if the choices
        are defined.

        :type value: object
        :param value: a new value
        :rtype: bool
        """
        if value is None:
            return True
        if not isinstance(value, self.type):
            return False
        if self.choices is not None:
            return value in self.choices
        return True

    def modify_value(self, value):
        """
        This function is used to somehow modify the new value.
        It should be redefined by a child class for a specific
        action. Does nothing by default.

        :type value: object
        :param value: the new value
        :rtype: object
        """
        return value

    def add_argument(self, parser):
        """
        Register this parameter in the argument parser. Values are kept
        as strings, the parameter converts them itself.

        :type parser: argparse.ArgumentParser
        """
        if self.positional:
            parser.add_argument(
                self.name, nargs='?', default=None,
                help=self.short_description,
            )
            return
        parser.add_argument(
            self.flag, dest=self.name, default=None,
            help=self.long_description,
        )


###############################################################################


class StringParameter(BaseParameter):
    @property
    def type(self):
        return str

    def modify_value(self, value):
        if value is None:
            return value
        return str(value)


###############################################################################


class IntegerParameter(BaseParameter):
    @property
    def type(self):
        return int

    def modify_value(self, value):
        """
        Convert the value to an integer or to None if it is not an
        integer.

        :param value: input value
        :type value: str
        :return: integer value
        """
        return string_to_integer(value)


###############################################################################


class BooleanParameter(BaseParameter):
    """
    Boolean parameters are flags without a value on the command line.
    """

    @property
    def type(self):
        return bool

    def modify_value(self, value):
        return string_to_bool(value)

    def add_argument(self, parser):
        parser.add_argument(
            self.flag, dest=self.name, action='store_true', default=None,
            help=self.long_description,
        )


###############################################################################


class FloatParameter(BaseParameter):
    """
    A number kept as a float. Shares are turned into exact fractions
    from the text the user typed.
    """

    @property
    def type(self):
        return float

    def modify_value(self, value):
        if value is None:
            return None
        fraction = string_to_fraction(value)
        if fraction is None:
            return None
        return float(fraction)


###############################################################################


class ListParameter(BaseParameter):
    """
    A comma or space separated list of strings. Choices, if defined,
    apply to every item.
    """

    @property
    def type(self):
        return list

    def modify_value(self, value):
        return string_to_list(value)

    def validate_value(self, value):
        if value is None:
            return True
        if not isinstance(value, list):
            return False
        if self.choices is not None:
            return all(item in self.choices for item in value)
        return True
