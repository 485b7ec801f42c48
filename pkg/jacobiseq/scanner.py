# -*- coding: utf-8 -*-
from __future__ import division
from __future__ import print_function
from __future__ import absolute_import
from __future__ import unicode_literals

import datetime
from multiprocessing.pool import ThreadPool
from six.moves import range
from .jacobi import format_word, parse_word, STAR
from .transducer import DIGIT_CLASSES
from .digits import format_digits
from .finding import Finding
from . import exceptions
from . import config


FORBIDDEN_PATTERNS = ('-++-', '+--+')


# Module API

def scan_forbidden(symbols, word=None):
    """Every contiguous occurrence of -++- or +--+ in a symbol word

    `*` is a wall: an occurrence may not contain it.

    # Raises
        DomainError: a character is not one of +, - or *.

    # Returns
        List[Finding]: sorted by position.

    """
    text = format_word(parse_word(symbols))
    findings = []
    for position in range(len(text) - 3):
        pattern = text[position:position + 4]
        if pattern in FORBIDDEN_PATTERNS:
            findings.append(Finding('forbidden-pattern', position, pattern, word=word))
    return sorted(findings)


def scan_near_misses(symbols, word=None):
    """Occurrences that only appear once `*` symbols are skipped."""
    text = format_word(parse_word(symbols))
    indices = [index for index, symbol in enumerate(text) if symbol != STAR.value]
    findings = []
    for first in range(len(indices) - 3):
        window = indices[first:first + 4]
        pattern = ''.join(text[index] for index in window)
        if pattern in FORBIDDEN_PATTERNS and window[-1] - window[0] != 3:
            findings.append(Finding('near-miss', window[0], pattern, word=word))
    return sorted(findings)


def scan_exhaustive(table, max_len=config.DEFAULT_SCAN_LENGTH, workers=config.DEFAULT_WORKERS):
    """Scan the Jacobi sequences of all digit words of length 1 ... max_len

    # Returns
        dict: the scan report.

    """
    return Scanner(table, workers=workers).scan(max_len)


class Scanner(object):
    """Exhaustive forbidden-pattern scanner over digit words in {1, 2, 3, 4}

    Words sharing a transducer state, the last three raw symbols, the last
    three non-* symbols and the remaining length have identical futures,
    so the word tree is folded into a memo over those keys. Work fans out
    over the first digit; results are merged in digit order.

    # Arguments
        table (TransducerTable): a closed transducer.
        workers (int): threads used for the fan-out.

    """

    # Public

    def __init__(self, table, workers=config.DEFAULT_WORKERS):
        if workers < 1:
            raise exceptions.PreconditionError('At least one worker is required, got %s' % workers)
        self.__table = table
        self.__workers = workers
        self.__memo = {}

    def scan(self, max_len):

        if max_len < 1:
            raise exceptions.PreconditionError('Maximum word length must be at least 1, got %s' % max_len)

        # Start timer
        start = datetime.datetime.now()

        # Fan out over the first digit
        results = []
        pool = ThreadPool(processes=self.__workers)
        try:
            tasks = [pool.apply_async(self.__scan_root, (digit, max_len)) for digit in DIGIT_CLASSES]
            for task in tasks:
                results.append(task.get())
        finally:
            pool.terminate()

        # Merge in digit order
        hits, near_misses = 0, 0
        hit_word, near_word = None, None
        for hit_count, near_count, first_hit, first_near in results:
            hits += hit_count
            near_misses += near_count
            if hit_word is None and first_hit is not None:
                hit_word = first_hit
            if near_word is None and first_near is not None:
                near_word = first_near

        # Warnings
        warnings = []
        if hits:
            warnings.append(
                '%s word(s) produce a forbidden pattern, first %s' % (hits, format_digits(hit_word)))
        if near_misses:
            warnings.append(
                '%s word(s) contain a forbidden pattern interrupted by *' % near_misses)

        # Stop timer
        stop = datetime.datetime.now()

        # Compose report
        report = {
            'time': round((stop - start).total_seconds(), 3),
            'max_len': max_len,
            'words_checked': sum(4 ** length for length in range(1, max_len + 1)),
            'hits': hits,
            'near_misses': near_misses,
            'witnesses': {
                'hit': self.__describe(hit_word, scan_forbidden),
                'near_miss': self.__describe(near_word, scan_near_misses),
            },
            'warnings': warnings,
        }

        return report

    # Internal

    def __scan_root(self, digit, max_len):
        state = self.__table.start(digit)
        hit, near, raw, clean = _advance('', '', False, False, state.j_st.value)
        hits, nears, first_hit, first_near = int(hit), int(near), None, None
        if hit:
            first_hit = (digit,)
        if near:
            first_near = (digit,)
        if max_len > 1:
            sub = self.__explore(state, raw, clean, hit, near, max_len - 1)
            hits += sub[0]
            nears += sub[1]
            if first_hit is None and sub[2] is not None:
                first_hit = (digit,) + sub[2]
            if first_near is None and sub[3] is not None:
                first_near = (digit,) + sub[3]
        return hits, nears, first_hit, first_near

    def __explore(self, state, raw, clean, hit, near, remaining):
        key = (state, raw, clean, hit, near, remaining)
        if key in self.__memo:
            return self.__memo[key]
        hits, nears, first_hit, first_near = 0, 0, None, None
        for digit in DIGIT_CLASSES:
            child = self.__table.step(state, digit)
            child_hit, child_near, child_raw, child_clean = _advance(
                raw, clean, hit, near, child.j_st.value)
            hits += int(child_hit)
            nears += int(child_near)
            if first_hit is None and child_hit:
                first_hit = (digit,)
            if first_near is None and child_near:
                first_near = (digit,)
            if remaining > 1:
                sub = self.__explore(child, child_raw, child_clean, child_hit, child_near, remaining - 1)
                hits += sub[0]
                nears += sub[1]
                if first_hit is None and sub[2] is not None:
                    first_hit = (digit,) + sub[2]
                if first_near is None and sub[3] is not None:
                    first_near = (digit,) + sub[3]
        result = (hits, nears, first_hit, first_near)
        self.__memo[key] = result
        return result

    def __describe(self, word, scan):
        if word is None:
            return None
        state = self.__table.start(word[0])
        symbols = [state.j_st]
        for digit in word[1:]:
            state = self.__table.step(state, digit)
            symbols.append(state.j_st)
        label = format_digits(word)
        return {
            'word': label,
            'symbols': format_word(symbols),
            'findings': [dict(finding) for finding in scan(symbols, word=label)],
        }


# Internal

def _advance(raw, clean, hit, near, symbol):
    raw = raw + symbol
    if symbol != STAR.value:
        clean = clean + symbol
        if clean[-4:] in FORBIDDEN_PATTERNS:
            if raw[-4:] == clean[-4:]:
                hit = True
            else:
                near = True
    return hit, near, raw[-3:], clean[-3:]
