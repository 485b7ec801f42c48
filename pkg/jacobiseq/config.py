# -*- coding: utf-8 -*-
from __future__ import division
from __future__ import print_function
from __future__ import absolute_import
from __future__ import unicode_literals

import io
import os


# General

VERSION = io.open(os.path.join(os.path.dirname(__file__), 'VERSION')).read().strip()
DEFAULT_TERMS = 24
DEFAULT_WITNESS_DEPTH = 12
DEFAULT_SCAN_LENGTH = 12
DEFAULT_WORKERS = 1
MAX_RESIDUE_STATES = 288

# Periods

# Candidate certificates L = d * l, smallest first
CERTIFICATE_MULTIPLIERS = [1, 2, 3, 4, 6, 8, 12, 24]
# Minimal periods of purely periodic digit streams divide 8*l or 12*l
PERIOD_BOUND_FACTORS = [8, 12]

# Streams

STREAMS = [
    'jacobiseq.streams.euler',
    'jacobiseq.streams.euler_root',
    'jacobiseq.streams.euler_squared',
    'jacobiseq.streams.coth',
]

STREAM_ALIASES = {
    'e2': 'e_squared',
    'coth': 'coth_family',
}

# Constructions

CONSTRUCTIONS = [
    'jacobiseq.constructions.constant_plus',
    'jacobiseq.constructions.minus_marker',
    'jacobiseq.constructions.star_marker',
]

THEOREM_CONSTRUCTIONS = {
    '3': 'theorem3',
    '7': 'theorem7',
    '8': 'theorem8',
}
