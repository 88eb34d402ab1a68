#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
    Crossings and Nestings of Random Matchings (Python version)
    ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~

    Exact and Poissonized distributions of the maximal crossing and the
    maximal nesting of random complete matchings, determinant formulas at
    arbitrary precision, Tracy-Widom distributions from Painleve II, and
    numerical checks of the finite-t correction formulas.
"""

import io

from setuptools import setup, find_packages

__version__ = '0.1.0'
__author__ = 'Matchstat Developers'

with io.open('README.md', 'r', encoding='utf-8') as fh:
    readme = fh.read()

setup(
    name='matchstat',
    version=__version__,
    license='MIT',
    author=__author__,
    description='Crossings and nestings of random matchings',
    long_description=readme,
    long_description_content_type='text/markdown',
    packages=find_packages(exclude=['tests', 'tests.*']),
    classifiers=[
        'Programming Language :: Python :: 3',
        'License :: OSI Approved :: MIT License',
        'Operating System :: OS Independent',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    entry_points={
        'console_scripts': [
            'matchstat=matchstat.cli.run:main',
        ]
    },
    python_requires='>=3.8',
    install_requires=[
        'dimsdk>=2.2.1,<2.3',
        'dimp>=2.2.1,<2.3',
        'dkd>=2.2.1,<2.3',
        'mkm>=2.2.1,<2.3',

        'startrek>=2.2.1,<2.3',

        'aiou>=0.3.0,<1.0',

        'mpmath>=1.3.0',
        'numpy>=1.22',
        'scipy>=1.9',
    ],
    extras_require={
        'tests': [
            'pytest>=7.0',
        ]
    },
)
