# -*- coding: utf-8 -*-

from unittest import TestCase
from tests.fixtures.application import UnitTestApplication
from ballotforge.modules.parameters import Parameters
from ballotforge.parameter import StringParameter
from ballotforge.application import Application
from mock import patch


class Parameter_configured_parameter(StringParameter):
    DEFAULT = 'default test value'
    LONGDESC = "Test long description"
    SHORTDESC = "Test short description"
    ENV = 'BALLOTFORGE_CONFIGURED'
    CHOICES = ['default test value', 'other value']


class Parameter_empty_parameter(StringParameter):
    pass


class Parameter_input(StringParameter):
    POSITIONAL = True


class MisnamedParameter(StringParameter):
    pass


class ParameterConfiguredBasicPropertiesTest(TestCase):
    def setUp(self):
        self.application = UnitTestApplication()
        self.parameters = self.application.parameters
        self.parameter = Parameter_configured_parameter(self.parameters)

    def tearDown(self):
        del self.parameter
        del self.parameters
        del self.application

    def test_has_parameters(self):
        self.assertEqual(self.parameter.parameters, self.parameters)
        self.assertIsInstance(self.parameter.parameters, Parameters)

    def test_has_application(self):
        self.assertEqual(self.parameter.application, self.application)
        self.assertIsInstance(self.parameter.application, Application)

    def test_has_name(self):
        self.assertEqual(self.parameter.name, 'configured_parameter')

    def test_has_flag(self):
        self.assertEqual(self.parameter.flag, '--configured-parameter')

    def test_has_short_description(self):
        self.assertEqual(self.parameter.short_description,
                         'Test short description')

    def test_has_long_description(self):
        self.assertEqual(self.parameter.long_description,
                         'Test long description')

    def test_has_type(self):
        self.assertIs(self.parameter.type, str)

    def test_has_type_name(self):
        self.assertEqual(self.parameter.type_name, 'string')

    def test_has_default(self):
        self.assertEqual(self.parameter.default, 'default test value')

    def test_has_choices(self):
        self.assertEqual(self.parameter.choices,
                         ['default test value', 'other value'])

    def test_has_env_variable_name(self):
        self.assertEqual(self.parameter.env_variable_name,
                         'BALLOTFORGE_CONFIGURED')

    def test_is_not_positional(self):
        self.assertFalse(self.parameter.positional)


class ParameterEmptyBasicPropertiesTest(TestCase):
    def setUp(self):
        self.application = UnitTestApplication()
        self.parameters = self.application.parameters
        self.parameter = Parameter_empty_parameter(self.parameters)

    def tearDown(self):
        del self.parameter
        del self.parameters
        del self.application

    def test_has_name(self):
        self.assertEqual(self.parameter.name, 'empty_parameter')

    def test_has_short_description(self):
        self.assertEqual(self.parameter.short_description, 'empty_parameter')

    def test_has_long_description(self):
        self.assertEqual(self.parameter.long_description, 'empty_parameter')

    def test_has_default(self):
        self.assertEqual(self.parameter.default, None)

    def test_has_no_choices(self):
        self.assertIsNone(self.parameter.choices)

    def test_has_no_env_variable(self):
        self.assertIsNone(self.parameter.env_variable_name)

    def test_is_not_set(self):
        self.assertFalse(self.parameter.is_set)


class ParameterLogicTest(TestCase):
    def setUp(self):
        self.application = UnitTestApplication()
        self.parameters = self.application.parameters
        self.parameter = Parameter_configured_parameter(self.parameters)

    def tearDown(self):
        del self.parameter
        del self.parameters
        del self.application

    @patch('ballotforge.modules.exit.Exit.output')
    def test_fails_if_parameter_is_misnamed(self, mock1):
        with self.assertRaises(SystemExit) as context:
            parameter = MisnamedParameter(self.parameters)
            parameter.validate()
        self.assertEqual(context.exception.code, 6)
        self.assertTrue(mock1.called)

    @patch.dict('os.environ', {}, clear=True)
    def test_uses_the_default_if_no_value(self):
        self.parameter.value = None
        self.assertEqual(self.parameter.value, self.parameter.default)
        self.assertEqual(self.parameter.value, 'default test value')
        self.assertFalse(self.parameter.is_set)

    @patch.dict('os.environ', {'BALLOTFORGE_CONFIGURED': 'other value'})
    def test_can_get_value_from_environment(self):
        self.parameter.value = None
        self.assertEqual(self.parameter.value, 'other value')
        self.assertTrue(self.parameter.is_set)

    @patch.dict('os.environ', {'BALLOTFORGE_CONFIGURED': ''})
    def test_empty_variable_is_ignored(self):
        self.assertEqual(self.parameter.value, 'default test value')

    @patch.dict('os.environ', {'BALLOTFORGE_CONFIGURED': 'other value'})
    def test_will_use_manually_set_value(self):
        self.parameter.value = 'default test value'
        self.assertEqual(self.parameter.value, 'default test value')

    @patch('ballotforge.modules.exit.Exit.output')
    def test_rejects_a_value_outside_the_choices(self, mock1):
        with self.assertRaises(SystemExit) as context:
            self.parameter.value = 'third value'
        self.assertEqual(context.exception.code, 2)


class ParametersCollectionTest(TestCase):
    def setUp(self):
        self.application = UnitTestApplication()
        self.parameters = self.application.parameters

    def tearDown(self):
        del self.parameters
        del self.application

    def test_collects_the_parameters(self):
        self.assertEqual(sorted(self.parameters.all), ['count', 'test'])

    def test_get(self):
        self.assertEqual(self.parameters.get('test').name, 'test')
        self.assertIsNone(self.parameters.get('missing'))

    @patch.dict('os.environ', {}, clear=True)
    def test_values(self):
        self.assertEqual(self.parameters.values,
                         {'count': 3, 'test': 'test default value'})

    def test_parse_returns_the_command(self):
        self.assertEqual(
            self.parameters.parse(['run', '--test', 'given']), 'run'
        )
        self.assertEqual(self.parameters.value('test'), 'given')

    def test_parse_without_a_command(self):
        self.assertIsNone(self.parameters.parse([]))

    def test_positional_parameter(self):
        class PositionalApplication(UnitTestApplication):
            Parameter_input = Parameter_input

        application = PositionalApplication()
        command = application.parameters.parse(['tally', 'profile.txt'])
        self.assertEqual(command, 'tally')
        self.assertEqual(application.param('input'), 'profile.txt')
        self.assertTrue(application.parameters.get('input').positional)
