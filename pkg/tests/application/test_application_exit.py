# -*- coding: utf-8 -*-

from unittest import TestCase
from mock import patch
from ballotforge.application import Application
from tests.fixtures.application import UnitTestApplication


class ApplicationExitTest(TestCase):
    def setUp(self):
        self.application = UnitTestApplication()
        self.exit = self.application.exit

    def tearDown(self):
        del self.application
        del self.exit

    def test_has_application(self):
        self.assertEqual(self.exit.application, self.application)
        self.assertIsInstance(self.exit.application, Application)

    @patch('ballotforge.modules.log.Log.info')
    def test_success_goes_to_the_info_level(self, mock1):
        self.exit.output('test event', 'test message', 0)
        mock1.assert_called_once_with(
            'test event: test message - exit code: 0'
        )

    @patch('ballotforge.modules.log.Log.error')
    def test_errors_go_to_the_error_level(self, mock1):
        self.exit.output('test event', 'test message', 4)
        mock1.assert_called_once_with(
            'test event: test message - exit code: 4'
        )


exit_events = {
    'success': 0,
    'error_generic': 1,
    'error_arguments': 2,
    'error_unimplemented': 3,
    'error_input': 4,
    'error_budget': 5,
    'error_configuration': 6,
}

for event, return_code in exit_events.items():
    @patch('ballotforge.modules.exit.Exit.output')
    def function_test(self, mock1, event=event, return_code=return_code):
        message = '%s message' % event
        with self.assertRaises(SystemExit) as context:
            method = getattr(self.exit, event)
            method(message)
        mock1.assert_called_once_with(
            event,
            message,
            return_code,
        )
        self.assertEqual(context.exception.code, return_code)

    function_name = 'test_can_exit_with_%s' % event
    function_test.__name__ = function_name
    setattr(ApplicationExitTest, function_name, function_test)
