# -*- coding: utf-8 -*-
from __future__ import division
from __future__ import print_function
from __future__ import absolute_import
from __future__ import unicode_literals

from collections import namedtuple, deque, OrderedDict
from .jacobi import JacobiValue, jacobi_symbol, epsilon2, STAR
from .convergents import SEEDS, next_convergent
from . import exceptions
from . import config


DIGIT_CLASSES = (1, 2, 3, 4)


# Module API

class ResidueState(namedtuple('ResidueState', [
    's_mod4', 't_mod4', 's_prev_mod4', 't_prev_mod4', 'k_parity', 'j_st', 'j_ts',
])):
    """Mod-4 fingerprint of a convergent pair

    Holds s_k, t_k, s_{k-1}, t_{k-1} mod 4, the parity of k and both
    symbols J(s_k/t_k) and J(t_k/s_k).

    """
    __slots__ = ()

    def to_dict(self):
        return {
            's_mod4': self.s_mod4,
            't_mod4': self.t_mod4,
            's_prev_mod4': self.s_prev_mod4,
            't_prev_mod4': self.t_prev_mod4,
            'k_parity': self.k_parity,
            'j_st': self.j_st.value,
            'j_ts': self.j_ts.value,
        }


class Witness(namedtuple('Witness', ['word', 'prev', 'current'])):
    """Concrete digit word with its last two big-integer convergents."""
    __slots__ = ()

    @classmethod
    def start(cls, digit):
        prev2, prev1 = SEEDS
        return cls((digit,), prev1, next_convergent(prev2, prev1, digit))

    def extend(self, digit):
        current = next_convergent(self.prev, self.current, digit)
        return Witness(self.word + (digit,), self.current, current)

    def state(self):
        s, t = self.current.s, self.current.t
        j_st = jacobi_symbol(s, t)
        if s % 2 == 0:
            j_ts = STAR
        elif t % 2 == 0:
            j_ts = jacobi_symbol(t, s)
        else:
            j_ts = j_st * JacobiValue.from_sign(epsilon2(s, t))
        return ResidueState(
            s % 4, t % 4, self.prev.s % 4, self.prev.t % 4,
            self.current.k % 2, j_st, j_ts)


class TransducerTable(object):
    """Finite-state machine from digit classes mod 4 to Jacobi symbols

    # Arguments
        initial (dict): digit class of a_0 -> ResidueState.
        transitions (dict): (ResidueState, digit class) -> ResidueState.
        witnesses (dict, optional): ResidueState -> shortest digit word.

    """

    # Public

    def __init__(self, initial, transitions, witnesses=None):
        self.__initial = dict(initial)
        self.__transitions = dict(transitions)
        self.__witnesses = dict(witnesses or {})

    @property
    def initial(self):
        return dict(self.__initial)

    @property
    def transitions(self):
        return dict(self.__transitions)

    @property
    def states(self):
        states = set(self.__initial.values())
        for (state, _), target in self.__transitions.items():
            states.add(state)
            states.add(target)
        return states

    def witness(self, state):
        return self.__witnesses.get(state)

    def start(self, digit):
        try:
            return self.__initial[(digit - 1) % 4 + 1]
        except KeyError:
            raise exceptions.IncompleteTableError(state='start', digit=digit)

    def step(self, state, digit):
        digit_class = (digit - 1) % 4 + 1
        try:
            return self.__transitions[(state, digit_class)]
        except KeyError:
            raise exceptions.IncompleteTableError(state=_format_state(state), digit=digit_class)

    def is_closed(self):
        return all(
            (state, digit) in self.__transitions
            for state in self.states for digit in DIGIT_CLASSES)

    def to_json(self):
        """List of {state, digit_class, next_state} records."""
        records = []
        for (state, digit), target in sorted(self.__transitions.items(), key=_transition_key):
            records.append({
                'state': state.to_dict(),
                'digit_class': digit,
                'next_state': target.to_dict(),
            })
        return records


def build_transducer(witness_depth=config.DEFAULT_WITNESS_DEPTH):
    """Synthesize the mod-4 transducer from big-integer witnesses

    States are explored breadth first from the four initial digit classes,
    digits in increasing order, so every state's first witness is the
    shortest, lexicographically smallest word reaching it. Up to
    `witness_depth` witnesses are kept per state and every transition is
    re-derived from each of them.

    # Raises
        PreconditionError: `witness_depth` < 1.
        TheoremFalsifiedError: two witnesses of one state disagree.

    # Returns
        TransducerTable

    """
    if witness_depth < 1:
        raise exceptions.PreconditionError('Witness depth must be at least 1, got %s' % witness_depth)

    initial = OrderedDict()
    transitions = {}
    witnesses = OrderedDict()
    queue = deque()

    # Seed
    for digit in DIGIT_CLASSES:
        witness = Witness.start(digit)
        state = witness.state()
        initial[digit] = state
        if _add_witness(witnesses, state, witness, witness_depth):
            queue.append((state, witness))

    # Explore
    while queue:
        state, witness = queue.popleft()
        for digit in DIGIT_CLASSES:
            successor_witness = witness.extend(digit)
            successor = successor_witness.state()
            known = transitions.setdefault((state, digit), successor)
            if known != successor:
                raise exceptions.TheoremFalsifiedError(
                    state=_format_state(state), digit=digit,
                    first=_format_state(known), second=_format_state(successor))
            if _add_witness(witnesses, successor, successor_witness, witness_depth):
                queue.append((successor, successor_witness))

    shortest = dict((state, items[0].word) for state, items in witnesses.items())
    table = TransducerTable(initial, transitions, shortest)
    if len(table.states) > config.MAX_RESIDUE_STATES:
        message = 'Transducer has %s states, more than %s'
        message = message % (len(table.states), config.MAX_RESIDUE_STATES)
        raise exceptions.TheoremFalsifiedError(message=message)
    return table


# Internal

def _add_witness(witnesses, state, witness, limit):
    items = witnesses.setdefault(state, [])
    if len(items) >= limit:
        return False
    items.append(witness)
    return True


def _format_state(state):
    return '(%s,%s,%s,%s,%s,%s,%s)' % (
        state.s_mod4, state.t_mod4, state.s_prev_mod4, state.t_prev_mod4,
        state.k_parity, state.j_st.value, state.j_ts.value)


def _transition_key(item):
    (state, digit), _ = item
    return (_format_state(state), digit)
