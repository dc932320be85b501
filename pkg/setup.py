#!/usr/bin/python

from setuptools import setup

# Obtain version but don't import directly to avoid circular dependencies
exec(open('version.py').read())

setup(
    name='ivff_md',
    version=__version__,
    install_requires=['numpy'],
    py_modules=[
        'ivff/__init__',
        'ivff/aggregation',
        'ivff/base',
        'ivff/copras',
        'ivff/deviation',
        'ivff/lp',
        'ivff/number',
        'ivff/pipeline',
        'ivff/problem',
        'ivff/report',
        'ivff/robustness',
        'ivff/scale',
        '__main__',
        'case_study',
        'ivff_md',
        'version'
        ]
      )
