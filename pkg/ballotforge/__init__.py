# -*- coding: utf-8 -*-

PROJECT = 'ballotforge'
VERSION = '1.0'
AUTHOR = 'BallotForge developers'
EMAIL = 'ballotforge@users.noreply.github.com'
COPYRIGHT = 'BallotForge developers'
LICENSE = 'Apache v2.0'
