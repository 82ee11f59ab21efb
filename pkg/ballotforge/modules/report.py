# -*- coding: utf-8 -*-

import csv
import io
import json

from ballotforge import constants


class Report(object):
    """
    The Report object renders result rows in the format chosen by the
    'format' parameter: an aligned text table, CSV or JSON lines.
    """

    def __init__(self, application):
        """
        The Report object requires the parent Application object as the
        first argument.

        :param application: Parent Application
        :type application: Application
        """
        self.application = application

    @property
    def format(self):
        return self.application.param('format') or constants.FORMAT_TABLE

    @staticmethod
    def format_value(value):
        """
        Text form of a cell: booleans as 0/1, None as an empty string,
        lists joined by spaces.

        :rtype: str
        """
        if value is None:
            return ''
        if isinstance(value, bool):
            return str(int(value))
        if isinstance(value, (list, tuple)):
            return ' '.join(str(item) for item in value)
        return str(value)

    def format_line(self, widths, values):
        """
        One table line with every column padded to its width.

        :rtype: str
        """
        cells = [
            self.format_value(value).ljust(width)
            for width, value in zip(widths, values)
        ]
        return '  '.join(cells).rstrip() + '\n'

    def table(self, fields, rows):
        """
        :param fields: Column names
        :type fields: list
        :param rows: Dictionaries with the column values
        :type rows: list
        :rtype: str
        """
        widths = [len(field) for field in fields]
        for row in rows:
            for index, field in enumerate(fields):
                widths[index] = max(
                    widths[index], len(self.format_value(row.get(field)))
                )
        text = self.format_line(widths, fields)
        for row in rows:
            text += self.format_line(
                widths, [row.get(field) for field in fields]
            )
        return text

    def csv(self, fields, rows):
        stream = io.StringIO()
        writer = csv.writer(stream, lineterminator='\n')
        writer.writerow(fields)
        for row in rows:
            writer.writerow(
                [self.format_value(row.get(field)) for field in fields]
            )
        return stream.getvalue()

    @staticmethod
    def json(rows):
        """
        One JSON object per line with sorted keys.

        :rtype: str
        """
        return ''.join(
            json.dumps(row, sort_keys=True) + '\n' for row in rows
        )

    def render(self, fields, rows):
        """
        Rows in the current format.

        :param fields: Column names of the table and CSV formats
        :type fields: list
        :param rows: Dictionaries
        :type rows: list
        :rtype: str
        """
        if self.format == constants.FORMAT_CSV:
            return self.csv(fields, rows)
        if self.format == constants.FORMAT_JSON:
            return self.json(rows)
        return self.table(fields, rows)

    def show(self, fields, rows):
        """
        Write the rendered rows to the standard output.
        """
        self.application.log.output(self.render(fields, rows))
