# -*- coding: utf-8 -*-
#
# coxaut documentation build configuration file.

import sys, os

sys.path.insert(0, os.path.abspath('..'))

extensions = ['sphinx.ext.autodoc']

source_suffix = '.rst'
master_doc = 'index'

project = u'coxaut'
copyright = u'2026, the coxaut developers'

# The short X.Y version.
version = '0.3'
# The full version, including alpha/beta/rc tags.
release = '0.3.0'

exclude_patterns = ['_build']

pygments_style = 'sphinx'

# autodoc keeps the source order, which follows the module sections
autodoc_member_order = 'bysource'

html_theme = 'default'
htmlhelp_basename = 'coxautdoc'

latex_documents = [
  ('index', 'coxaut.tex', u'coxaut Documentation',
   u'the coxaut developers', 'manual'),
]

man_pages = [
    ('index', 'coxaut', u'coxaut Documentation',
     [u'the coxaut developers'], 1)
]
