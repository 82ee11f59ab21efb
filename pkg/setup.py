#!/usr/bin/env python
# -*- coding: utf-8 -*-

from ballotforge import AUTHOR, LICENSE, VERSION, EMAIL, PROJECT
from setuptools import setup


def requirements(path):
    with open(path) as requirements_file:
        return [
            line.strip() for line in requirements_file
            if line.strip() and not line.startswith('#')
        ]


setup(
    name=PROJECT,
    version=VERSION,
    author=AUTHOR,
    author_email=EMAIL,
    packages=['ballotforge', 'ballotforge.modules'],
    install_requires=requirements('install_requirements.txt'),
    entry_points={
        'console_scripts': [
            'ballotforge = ballotforge.cli:run',
        ],
    },
    python_requires='>=3.8',
    license=LICENSE,
)
