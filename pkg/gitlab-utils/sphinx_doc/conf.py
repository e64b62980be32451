# Configuration file for the Sphinx documentation builder of pylinked_queues.

import os
import sys
sys.path.insert(0, os.path.abspath('../../src'))


# -- Project information -----------------------------------------------------

project = 'pylinked_queues'
copyright = '2021, The pylinked_queues developers'
version = 'v1.0.0'
release = 'v1.0.0'


# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.intersphinx',
    'sphinx.ext.coverage',
    'sphinx.ext.githubpages',
    'sphinx.ext.napoleon',
    'numpydoc'
]

autodoc_default_options = {'members': True, 'inherited-members': True}
modindex_common_prefix = ['pylinked_queues.']
templates_path = ['_templates']
language = 'en'
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']


# -- Options for HTML output -------------------------------------------------

html_theme = 'classic'
html_static_path = ['_static']


# -- Extension configuration -------------------------------------------------

numpydoc_show_inherited_class_members = False

intersphinx_mapping = {'python': ('https://docs.python.org/3/', None),
                       'numpy': ('https://numpy.org/doc/stable/', None),
                       'matplotlib': ('https://matplotlib.org/stable/', None)}

napoleon_google_docstring = False
napoleon_numpy_docstring = True
napoleon_include_special_with_doc = True
napoleon_use_param = True
napoleon_use_rtype = True
