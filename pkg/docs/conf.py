# Sphinx configuration of the InfluNet documentation.

import os
import sys
sys.path.insert(0, os.path.abspath('..'))

import influnet

project = influnet.__projectname__
copyright = '2024, ' + influnet.__author__
author = influnet.__author__
version = influnet.__version__
release = influnet.__version__

extensions = [
    'sphinx.ext.viewcode',
    'sphinx.ext.autodoc',
    'sphinx.ext.intersphinx',
    'sphinx_autodoc_typehints',
]
exclude_patterns = ['_build']
master_doc = 'index'

html_theme = 'sphinx_rtd_theme'

# internal helpers of the pipelines are part of the reference
autodoc_default_options = {
    'private-members': True,
    'undoc-members': True,
    'ignore-module-all': True
}

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable', None),
}
