"""SequencePair container semantics: shapes, digit extension, equality."""

from fractions import Fraction

import pytest

from bcf import SequencePair
from bcf.errors import IndexOutOfRange, InvalidSequence


def test_open_pair_shape():
    pair = SequencePair((1, 2), (1, 0))
    assert pair.a == (1, 2) and pair.b == (1, 0)
    assert not pair.terminated
    assert pair.terminal is None and pair.periodicity is None


def test_terminated_pair_shape():
    pair = SequencePair((1, 2), (1, 1, 0), terminal=2)
    assert pair.terminated
    assert pair.terminal == Fraction(2)
    assert isinstance(pair.terminal, Fraction)


def test_shape_errors():
    with pytest.raises(InvalidSequence):
        SequencePair((1, 2), (1,))  # open pair needs equal lengths
    with pytest.raises(InvalidSequence):
        SequencePair((1,), (1, 0, 0), terminal=2)  # needs len(b) = len(a)+1
    with pytest.raises(InvalidSequence):
        SequencePair((1,), (1, 0), terminal=2, periodicity=(0, 1))
    with pytest.raises(InvalidSequence):
        SequencePair((1, 2), (1, 0), periodicity=(0, 3))  # k+m > len
    with pytest.raises(InvalidSequence):
        SequencePair((1, 2), (1, 0), periodicity=(0, 0))  # m >= 1
    with pytest.raises(InvalidSequence):
        SequencePair((1, 2), (1, 0), periodicity=(-1, 2))


def test_digit_type_checks():
    with pytest.raises(InvalidSequence):
        SequencePair((1.0, 2), (1, 0))
    with pytest.raises(InvalidSequence):
        SequencePair((True, 2), (1, 0))
    with pytest.raises(InvalidSequence):
        SequencePair((-1, 2), (1, 0))


def test_periodic_extension():
    pair = SequencePair((9, 2, 3), (9, 0, 0), periodicity=(1, 2))
    assert [pair.digit_a(i) for i in range(7)] == [9, 2, 3, 2, 3, 2, 3]
    assert [pair.digit_b(i) for i in range(7)] == [9, 0, 0, 0, 0, 0, 0]
    assert pair.preperiod == 1 and pair.period == 2


def test_open_pair_extension_stops():
    pair = SequencePair((1, 2), (1, 0))
    assert pair.digit_a(1) == 2
    with pytest.raises(IndexOutOfRange):
        pair.digit_a(2)
    with pytest.raises(IndexOutOfRange):
        pair.digit_b(2)
    with pytest.raises(IndexOutOfRange):
        pair.digit_a(-1)


def test_terminated_extension_has_extra_b():
    pair = SequencePair((1, 2), (1, 1, 0), terminal=2)
    assert pair.digit_b(2) == 0
    with pytest.raises(IndexOutOfRange):
        pair.digit_a(2)
    with pytest.raises(IndexOutOfRange):
        pair.digit_b(3)


def test_equality_and_hash():
    p1 = SequencePair((1, 1), (1, 1), periodicity=(0, 1))
    p2 = SequencePair((1, 1), (1, 1), periodicity=(0, 1))
    p3 = SequencePair((1, 1), (1, 1))
    assert p1 == p2 and hash(p1) == hash(p2)
    assert p1 != p3
    assert p1 != ((1, 1), (1, 1))


def test_tuple_construction_helper():
    from bcf.sequences import as_pair

    pair = as_pair(((1, 2), (1, 0)))
    assert isinstance(pair, SequencePair)
    assert as_pair(pair) is pair
