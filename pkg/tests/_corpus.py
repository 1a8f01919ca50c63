"""Shared random-corpus generators used across the test modules.

Everything is seeded by the caller so each test module owns its stream;
the generators only promise admissibility, not any particular
distribution.
"""

from __future__ import annotations

from fractions import Fraction

from bcf import SequencePair, validate


def random_valid_digits(rng, length):
    """A digit pair satisfying the admissibility rules at every index.

    a_i is drawn from [1, 9]; b_i from [0, a_i], bumped to [1, a_i] when
    the previous pair was equal so the zero-lookahead rule can never fire.
    Index 0 uses the same scheme, which keeps the pair admissible under
    any periodic extension as well.
    """
    a, b = [], []
    previous_equal = False
    for _ in range(length):
        a_i = rng.randint(1, 9)
        low = 1 if previous_equal else 0
        b_i = rng.randint(low, a_i)
        previous_equal = a_i == b_i
        a.append(a_i)
        b.append(b_i)
    return tuple(a), tuple(b)


def random_valid_pair(rng, length=None):
    if length is None:
        length = rng.randint(9, 30)
    a, b = random_valid_digits(rng, length)
    pair = SequencePair(a, b)
    assert validate(pair).valid or validate(pair).indeterminate
    return pair


def random_cyclic_pair(rng, max_period=4, max_digit=3):
    """A purely periodic pair valid as an infinite periodic sequence."""
    while True:
        m = rng.randint(1, max_period)
        a = tuple(rng.randint(1, max_digit) for _ in range(m))
        b = tuple(rng.randint(0, a[i]) for i in range(m))
        pair = SequencePair(a, b, periodicity=(0, m))
        if validate(pair).valid:
            return pair


def random_rational_pair(rng, max_den=10**6):
    """A pair of positive rationals with denominators up to max_den."""
    alpha_den = rng.randint(1, max_den)
    beta_den = rng.randint(1, max_den)
    alpha = Fraction(rng.randint(1, 4 * alpha_den), alpha_den)
    beta = Fraction(rng.randint(1, 4 * beta_den), beta_den)
    return alpha, beta
