# -*- coding: utf-8 -*-
from __future__ import division
from __future__ import print_function
from __future__ import absolute_import
from __future__ import unicode_literals
from . import config
__version__ = config.VERSION


# Module API

from .jacobi import JacobiValue, jacobi_symbol, epsilon2, epsilon3
from .digits import DigitStream, FiniteStream, PeriodicStream, RuleStream
from .convergents import Convergent, convergents, determinant
from .surds import QuadraticSurd, eval_eventually_periodic
from .named import named_stream
from .transducer import ResidueState, TransducerTable, build_transducer
from .sequences import jacobi_sequence, jacobi_sequence_oracle, jacobi_sequence_fast
from .sequences import four_representative, congruent_mod4
from .periodicity import PeriodDescriptor, detect_period, minimal_period
from .periodicity import verify_certificate, is_skew_symmetric
from .constructions.gaps import GapSequence
from .constructions.constant_plus import theorem3_stream
from .constructions.minus_marker import theorem7_stream, theorem7_periodic
from .constructions.star_marker import theorem8_stream
from .constructions.patterns import lemma1_predict, residue_pattern_check
from .scanner import scan_forbidden, scan_near_misses, scan_exhaustive
from .registry import stream, construction
from .finding import Finding
from .catalog import catalog
from .exceptions import JacobiSeqException

# Register

import importlib
from . import config
for module in config.STREAMS:
    importlib.import_module(module)
for module in config.CONSTRUCTIONS:
    importlib.import_module(module)
