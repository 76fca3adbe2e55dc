#!/usr/bin/env python
# -*- coding: utf-8 -*-
import os
import sys

try:
    from setuptools import setup, find_packages
except ImportError:
    print('Please install or upgrade setuptools or pip to continue')
    sys.exit(1)

sys.path.insert(0, os.path.abspath('.'))
from warpedpy.version import __version__


def read(filename):
    with open(filename, 'rb') as f:
        return f.read().decode('utf8')


requirements = ['atom', 'numpy', 'scipy']

test_requirements = ['pytest', 'hypothesis']


setup(name='warpedpy',
      description='Numerical verification of the geometry of warped products '
                  'and conformal warped product submersions',
      long_description=read('README.md'),
      version=__version__,
      license='BSD-3 License',
      python_requires='>=3.6',
      install_requires=requirements,
      extras_require={'test': test_requirements},
      packages=find_packages(exclude=['tests']),
      package_data={'warpedpy': ['default_config.json']},
      zip_safe=False,
      entry_points={'console_scripts':
                    'warpedpy-verify = warpedpy.__main__:main'},)
