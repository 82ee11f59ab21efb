# -*- coding: utf-8 -*-

import os
from ballotforge import constants


class Output(object):
    """
    The Output object writes result files into the results directory
    given by the 'out' parameter.
    """

    def __init__(self, application):
        """
        The Output object should have the Application object as the first
        argument.

        :param application: The parent Application
        :type application: Application
        """
        self.application = application

    @property
    def directory(self):
        """
        The results directory or None if results go to the standard output.

        :return: Results directory path
        :rtype: str or None
        """
        return self.application.param('out')

    @property
    def enabled(self):
        return bool(self.directory)

    def file_path(self, file_name):
        """
        The full path to a result file.

        :param file_name: File name
        :type file_name: str
        :return: File path
        :rtype: str
        """
        return os.path.join(self.directory, file_name)

    def make_directory(self):
        """
        Create the results directory if it's not present.
        """
        if not os.path.isdir(self.directory):
            os.makedirs(self.directory)

    def file_is_present(self, file_name):
        return os.path.isfile(self.file_path(file_name))

    def write(self, file_name, text):
        """
        Write a result file with '\\n' line ends.

        :param file_name: File name
        :type file_name: str
        :param text: File content
        :type text: str
        :return: File path
        :rtype: str
        """
        self.make_directory()
        path = self.file_path(file_name)
        with open(path, 'w', encoding=constants.DEFAULT_ENCODING,
                  newline='') as result_file:
            result_file.write(text)
        self.application.log.info("written '%s'", path)
        return path
