#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# metamap documentation build configuration file.
#

import sys
import os

sys.path.insert(0, os.path.abspath('..'))

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.mathjax',
    'sphinx.ext.autosummary',
    'sphinx.ext.napoleon',
    'sphinx.ext.viewcode']

# Napoleon settings
napoleon_google_docstring = False
napoleon_numpy_docstring = True
napoleon_include_private_with_doc = False
napoleon_include_special_with_doc = False
napoleon_use_param = False
napoleon_use_rtype = False

autodoc_mock_imports = ['numpy', 'scipy', 'h5py', 'matplotlib', 'jsonschema']

source_suffix = '.rst'
master_doc = 'index'

Affiliation = u'metamap developers'
project = u'metamap'
copyright = u'2026, ' + Affiliation

version = open(os.path.join('..', 'VERSION')).read().strip()
release = version

exclude_patterns = ['_build']
pygments_style = 'sphinx'

# -- Options for HTML output ----------------------------------------------

html_theme = 'default'
htmlhelp_basename = project + 'doc'

# -- Options for LaTeX output ---------------------------------------------

latex_documents = [
    ('index', 'metamap.tex', u'metamap Documentation', Affiliation, 'manual'),
]

# -- Options for manual page output ---------------------------------------

man_pages = [
    ('index', 'metamap', u'metamap Documentation', [Affiliation], 1)
]

# -- Options for Texinfo output -------------------------------------------

texinfo_documents = [
    ('index', 'metamap', u'metamap Documentation', Affiliation, 'metamap',
     'Transfer-operator studies of metastable piecewise expanding interval maps.',
     'Miscellaneous'),
]
