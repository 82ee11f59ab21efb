# -*- coding: utf-8 -*-
import logging
import sys
from ballotforge import constants
from ballotforge.helpers import memoization


class Log(object):
    """
    The Log object is a wrapper of the Python's logger class.
    It configures the package logger and uses it to log messages.
    The engine modules log to its children so the same handlers get
    their messages too.
    """
    def __init__(self, application):
        """
        The Log object requires the Application object as the first argument.

        :param application: Parent Application.
        :type application: Application
        """
        self.application = application

    @property
    @memoization
    def logger(self):
        """
        Returns the configured Logger class instance. It can be used by
        logging methods or can be used directly.

        :return: Logger object
        :rtype: Logger
        """
        logger = logging.getLogger(self.tag)
        logger.setLevel(self.level)
        logger.propagate = False
        for handler in list(logger.handlers):
            logger.removeHandler(handler)
            handler.close()
        if 'console' in self.enabled_handlers:
            logger.addHandler(self.handler_console)
        if 'file' in self.enabled_handlers and self.log_file_path:
            logger.addHandler(self.handler_file)
        return logger

    @property
    def enabled_handlers(self):
        """
        Get the list of enabled handler types. The environment wins over
        the application's constant. The file handler is added when the
        results directory is set.

        :return: List of handler names
        :rtype: list
        """
        handlers = self.application.environment.log_handlers
        if handlers is None:
            handlers = list(getattr(
                self.application,
                constants.CONST_HANDLERS,
                constants.DEFAULT_LOG_HANDLERS,
            ))
            if self.application.output.enabled:
                handlers.append('file')
        return handlers

    @property
    def level(self):
        """
        Returns the current maximum log level. Debug mode is enabled by the
        debug environment variable.

        :return: Debug level
        :rtype: int
        """
        if self.application.environment.is_debug:
            return logging.DEBUG
        else:
            return logging.INFO

    @property
    def tag(self):
        """
        Returns the log tag, the package logger name.

        :return: Log Tag
        :rtype: str
        """
        return constants.LOGGER_NAME

    @property
    def log_file_path(self):
        """
        Path to the log file in the results directory. Used by the 'file'
        handler.

        :return: Path to log file
        :rtype: str or None
        """
        if not self.application.output.enabled:
            return None
        return self.application.output.file_path(constants.LOG_FILE)

    # log formats #

    @property
    def format_date(self):
        """
        Date format string

        :rtype: str
        """
        return '%Y-%m-%d %H:%M:%S'

    @property
    def format_date_prefix(self):
        return '%(asctime)s.%(msecs)03d'

    @property
    def format_suffix(self):
        return '%(name)s %(levelname)s %(message)s'

    @property
    def formatter(self):
        """
        The formatter with the date prefix. Used for file and console logger.

        :return: Formatter object
        :rtype: Formatter
        """
        line_format = '%s %s' % (
            self.format_date_prefix,
            self.format_suffix,
        )
        return logging.Formatter(line_format, self.format_date)

    # log handlers #

    @property
    def handler_console(self):
        """
        The Console handler sends the messages to the standard error output.

        :return: Console Handler
        :rtype: Handler
        """
        handler = logging.StreamHandler(
            stream=sys.stderr,
        )
        handler.setFormatter(self.formatter)
        return handler

    @property
    def handler_file(self):
        """
        The File handler sends the messages directly to a log file.

        :return: File Handler
        :rtype: Handler
        """
        self.application.output.make_directory()
        handler = logging.FileHandler(
            filename=self.log_file_path,
            encoding=constants.DEFAULT_ENCODING,
        )
        handler.setFormatter(self.formatter)
        return handler

    # logging methods #

    def log(self, level, msg, *args, **kwargs):
        self.logger.log(level, msg, *args, **kwargs)

    def debug(self, msg, *args, **kwargs):
        self.logger.debug(msg, *args, **kwargs)

    def info(self, msg, *args, **kwargs):
        self.logger.info(msg, *args, **kwargs)

    def warning(self, msg, *args, **kwargs):
        self.logger.warning(msg, *args, **kwargs)

    warn = warning

    def error(self, msg, *args, **kwargs):
        self.logger.error(msg, *args, **kwargs)

    err = error

    def critical(self, msg, *args, **kwargs):
        self.logger.critical(msg, *args, **kwargs)

    def exception(self, msg, *args, **kwargs):
        self.logger.exception(msg, *args, **kwargs)

    @staticmethod
    def output(msg):
        """
        Directly write the message to the standard output.

        :param msg: Text
        :type: msg: str
        """
        sys.stdout.write(msg)
