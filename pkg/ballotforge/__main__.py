# -*- coding: utf-8 -*-

from ballotforge.cli import run

if __name__ == '__main__':
    run()
