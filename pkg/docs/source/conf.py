#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Sphinx configuration for the qlattice documentation."""
import os
import re
import sys

sys.path.insert(0, os.path.abspath('.'))  # doc_extensions
sys.path.insert(0, os.path.abspath('../../'))

import qlattice  # noqa: E402

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.napoleon',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'doc_extensions',
]
napoleon_google_docstring = False
autodoc_default_options = {'members': True}
autodoc_member_order = 'bysource'

master_doc = 'index'
project = 'qlattice'
author = 'qlattice contributors'
copyright = '2026, ' + author

release = qlattice.__version__
version = re.match(r'\d+\.\d+', release).group(0)

pygments_style = 'sphinx'
html_theme = 'sphinx_rtd_theme'
htmlhelp_basename = 'qlatticedoc'
