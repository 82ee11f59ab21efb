# -*- coding: utf-8 -*-

import logging
import multiprocessing

import psutil

log = logging.getLogger(__name__)


class Workers(object):
    """
    The Workers object runs a function over independent work items,
    either in the current process or in a pool of processes. Results
    always come back in the order of the items.
    """

    def __init__(self, jobs=None):
        """
        :param jobs: Number of worker processes, all cores if not given
        :type jobs: int or None
        """
        self._jobs = jobs

    @staticmethod
    def cpu_count():
        """
        Number of usable cores.

        :rtype: int
        """
        return psutil.cpu_count(logical=True) or 1

    @property
    def jobs(self):
        if self._jobs is None:
            return self.cpu_count()
        return max(1, int(self._jobs))

    def map(self, function, items):
        """
        Lazily apply the function to every item. Closing the generator
        early stops the pool.

        :param function: A picklable module level function
        :type function: func
        :param items: Work items
        :type items: iterable
        :return: Results in item order
        :rtype: generator
        """
        items = list(items)
        processes = min(self.jobs, len(items))
        if processes <= 1:
            for item in items:
                yield function(item)
            return
        log.debug('starting %d workers for %d items', processes, len(items))
        pool = multiprocessing.Pool(processes=processes)
        try:
            for result in pool.imap(function, items):
                yield result
        finally:
            pool.terminate()
            pool.join()

    def run(self, function, items):
        """
        Apply the function to every item and collect the results.

        :rtype: list
        """
        return list(self.map(function, items))
