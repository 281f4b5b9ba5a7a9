#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Copyright (c) 2024 The swipt-ddf developers

# Author(s):

#   The swipt-ddf developers

# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.

# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

"""Set up the swipt-ddf package."""

from setuptools import setup
from setuptools import find_packages

try:
    # HACK: https://github.com/pypa/setuptools_scm/issues/190#issuecomment-351181286
    # Stop setuptools_scm from including all repository files
    import setuptools_scm.integration
    setuptools_scm.integration.find_files = lambda _: []
except ImportError:
    pass

with open('./README.md', 'r') as fd:
    long_description = fd.read()

description = 'Link-level simulation and analysis of SWIPT differential decode-and-forward relaying'

requires = ['numpy', 'scipy', 'pandas', 'pyyaml', 'pint', 'setuptools_scm']
test_requires = ['pytest']

setup(name="swipt_ddf",
      description=description,
      author='The swipt-ddf developers',
      classifiers=["Development Status :: 3 - Alpha",
                   "Intended Audience :: Science/Research",
                   "License :: OSI Approved :: GNU General Public License v3 " +
                   "or later (GPLv3+)",
                   "Operating System :: OS Independent",
                   "Programming Language :: Python",
                   "Topic :: Scientific/Engineering"],
      packages=find_packages(),
      long_description=long_description,
      long_description_content_type='text/markdown',
      license='GPLv3',
      scripts=['bin/swipt_ddf_runner.py', ],
      zip_safe=False,
      install_requires=requires,
      tests_require=test_requires,
      extras_require={'test': test_requires + ['pytest-cov']},
      keywords=['SWIPT', 'relay', 'decode-and-forward', 'DPSK', 'energy harvesting', 'Monte-Carlo'],
      python_requires='>=3.9',
      use_scm_version=True
      )
