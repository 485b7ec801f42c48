# -*- coding: utf-8 -*-
from __future__ import division
from __future__ import print_function
from __future__ import absolute_import
from __future__ import unicode_literals

import io
import os
import json


SECTIONS = ['errors', 'findings']


# Internal

def _load_catalog():
    path = os.path.join(os.path.dirname(__file__), 'catalog.json')
    with io.open(path, encoding='utf-8') as file:
        catalog = json.load(file)
    missing = [section for section in SECTIONS if section not in catalog]
    if missing:
        raise RuntimeError('Catalog %s lacks sections: %s' % (path, ', '.join(missing)))
    return catalog


# Module API

catalog = _load_catalog()
