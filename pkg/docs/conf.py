# -*- coding: utf-8 -*-
#
# juddian documentation build configuration file
#
# This file is execfile()d with the current directory set to its
# containing dir.

# -- General configuration ------------------------------------------------

extensions = []

templates_path = ['source/_templates']

source_suffix = '.rst'

master_doc = 'index'

project = u'juddian'
copyright = u'2024, The Juddian developers'
author = u'The Juddian developers'

version = u'0.3.0'
release = u'0.3.0'

language = None

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

pygments_style = 'sphinx'

todo_include_todos = False

# -- Options for HTML output ----------------------------------------------

html_theme = 'sphinx_rtd_theme'

html_static_path = ['source/_static']

htmlhelp_basename = 'juddiandoc'

# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'juddian', u'juddian Documentation',
     [author], 1)
]
