# Configuration file for the Sphinx documentation builder.
#
# This file does only contain a selection of the most common options. For a
# full list see the documentation:
# http://www.sphinx-doc.org/en/master/config

import datetime
import os
import sys

sys.path.insert(0, os.path.abspath('../..'))

import polygrpd

# -- Project information -----------------------------------------------------

project = 'polygrpd'
author = 'polygrpd developers'
copyright = f'{datetime.datetime.now().year}, {author}'

version = polygrpd.__version__
release = polygrpd.__version__

# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.todo',
    'sphinx.ext.viewcode',
    'sphinx.ext.autodoc',
    'sphinx.ext.mathjax',
    'sphinxcontrib.programoutput',
]

templates_path = ['templates']
source_suffix = '.rst'
master_doc = 'index'
language = None
exclude_patterns = []
pygments_style = 'sphinx'
todo_include_todos = True

# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'
htmlhelp_basename = 'polygrpddoc'

# -- Options for LaTeX output ------------------------------------------------

latex_documents = [
    (master_doc, 'polygrpd.tex', 'polygrpd Documentation', author, 'manual'),
]

man_pages = [
    (master_doc, 'polygrpd', 'polygrpd Documentation', [author], 1)
]

autoclass_content = "both"
autodoc_member_order = "bysource"
