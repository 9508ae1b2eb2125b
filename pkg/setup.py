#!/usr/bin/env python
# -*- coding: utf-8 -*-

from setuptools import setup, find_packages

from qlattice import __version__ as version

with open('README.md') as f:
    long_description = f.read()

setup(name='qlattice',
      version=version,
      description='Congruence lattices of semilattices with operators and '
                  'lattices of quasi-equational theories',
      long_description=long_description,
      long_description_content_type='text/markdown',
      classifiers=[
          'Development Status :: 3 - Alpha',
          'License :: OSI Approved :: MIT License',
          'Operating System :: OS Independent',
          'Programming Language :: Python :: 3 :: Only',
          'Intended Audience :: Science/Research',
          'Topic :: Scientific/Engineering :: Mathematics',
      ],
      packages=find_packages(exclude=('docs', '*.tests')),
      install_requires=[
          'ruamel.yaml>=0.15.45,<0.17.29', 'numpy', 'scipy', 'networkx', 'graphviz'],
      extras_require={
          'dev': [
              'pytest-flake8', 'pytest-cov', 'Sphinx', 'sphinx_rtd_theme',
              'setuptools>=30'],
      },
      entry_points={
          'console_scripts': ['qlattice = qlattice.cli:main'],
      },
      )
