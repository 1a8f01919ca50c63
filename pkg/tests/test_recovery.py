"""Periodicity detection, cubic recovery, transfer matrices, the scanner."""

import random
from fractions import Fraction

import pytest

from bcf import (
    ExpansionState,
    NumberField,
    SequencePair,
    bcf_expand,
    bcf_step,
    conjecture_scan,
    detect_period,
    polys,
    recover_cubic_eventual,
    recover_cubic_pure,
    transfer_matrix,
    validate,
)
from bcf.errors import InvalidSequence, MixedFields
from bcf.recovery import (
    NotFound,
    PeriodicityResult,
    STATUS_EXHAUSTED,
    STATUS_PERIODIC,
    STATUS_SKIPPED_NO_POSITIVE_ROOT,
    STATUS_SKIPPED_REDUCIBLE,
    STATUS_TERMINATED,
)

from _corpus import random_cyclic_pair

TRIBONACCI = NumberField((1, -1, -1, -1), (1, 2))
PERIOD_TWO = NumberField((1, -1, -2, -1), (2, 3))


def _states(alpha, beta, count):
    state = ExpansionState(alpha, beta, 0)
    out = [state]
    for _ in range(count):
        _, _, nxt = bcf_step(state)
        if not isinstance(nxt, ExpansionState):
            break
        state = nxt
        out.append(state)
    return out


# -- periodicity detection ---------------------------------------------------------


def test_detect_period_tribonacci():
    t = TRIBONACCI.generator()
    states = _states(t, 1 + 1 / t, 6)
    result = detect_period(states)
    assert isinstance(result, PeriodicityResult)
    assert (result.preperiod, result.period) == (0, 1)


def test_detect_period_eventually_periodic():
    r = PERIOD_TWO.generator()
    states = _states(r, 2 + 1 / r, 8)
    result = detect_period(states)
    assert (result.preperiod, result.period) == (1, 2)


def test_detect_period_not_found_on_rationals():
    states = _states(Fraction(7, 4), Fraction(3, 2), 10)
    result = detect_period(states)
    assert isinstance(result, NotFound)
    assert result.terminated


def test_detect_period_open_prefix():
    r = PERIOD_TWO.generator()
    states = _states(r, 2 + 1 / r, 1)  # truncated before the first repeat
    result = detect_period(states)
    assert isinstance(result, NotFound)
    assert not result.terminated


def test_detect_period_rejects_mixed_fields():
    t = TRIBONACCI.generator()
    r = PERIOD_TWO.generator()
    states = [
        ExpansionState(t, 1 + 1 / t, 0),
        ExpansionState(r, 2 + 1 / r, 1),
    ]
    with pytest.raises(MixedFields):
        detect_period(states)


# -- pure recovery ------------------------------------------------------------------


def test_recover_period_one_closed_forms():
    cases = {
        ((1,), (1,)): (1, -1, -1, -1),
        ((1,), (0,)): (1, -1, 0, -1),
        ((2,), (2,)): (1, -2, -2, -1),
        ((3,), (1,)): (1, -3, -1, -1),
    }
    for (a, b), poly in cases.items():
        result = recover_cubic_pure((a, b))
        assert result.poly == poly
        assert result.quartic[0] == 0


def test_recover_tribonacci_pair():
    result = recover_cubic_pure(((1,), (1,)))
    assert result.poly == (1, -1, -1, -1)
    assert result.alpha.approximate(12).text == "1.839286755214"
    # beta = alpha^2 - alpha = 1 + 1/alpha
    assert result.beta_expr == ((1, -1, 0), (1,))
    t = result.alpha
    assert result.beta == 1 + 1 / t


def test_recover_moore_pair():
    result = recover_cubic_pure(((1,), (0,)))
    assert result.poly == (1, -1, 0, -1)
    assert result.alpha.approximate(4).text == "1.4656"
    assert result.beta == 1 / result.alpha


def test_recover_two_two_pair():
    result = recover_cubic_pure(((2,), (2,)))
    assert result.poly == (1, -2, -2, -1)
    assert result.alpha.approximate(6).text == "2.831177"
    assert result.beta == 2 + 1 / result.alpha


def test_recover_certified_interval():
    result = recover_cubic_pure(((1,), (1,)))
    lo, hi = result.field.root_interval
    chain = polys.sturm_chain(result.poly)
    assert polys.count_roots(chain, lo, hi) == 1
    assert lo < Fraction(18392, 10000) < hi


def test_recover_accepts_marked_periodic_pair():
    pair = SequencePair((1, 1, 1), (1, 1, 1), periodicity=(0, 1))
    result = recover_cubic_pure(pair)
    assert result.poly == (1, -1, -1, -1)


def test_recover_rejects_bad_input():
    with pytest.raises(InvalidSequence):
        recover_cubic_pure(SequencePair((1, 2), (1, 1, 0), terminal=2))
    with pytest.raises(InvalidSequence):
        recover_cubic_pure(((), ()))
    with pytest.raises(InvalidSequence):
        recover_cubic_pure(((1, 2), (1, 3)))  # a_1 < b_1
    with pytest.raises(InvalidSequence):
        recover_cubic_pure(
            SequencePair((2, 2, 3), (2, 0, 0), periodicity=(1, 2))
        )  # preperiod: wrong entry point


def test_recover_round_trip_small():
    rng = random.Random(909)
    for _ in range(20):
        pair = random_cyclic_pair(rng)
        result = recover_cubic_pure(pair)
        m = pair.period
        need = 3 * m
        again = bcf_expand(result.alpha, result.beta, max_terms=need)
        assert again.a[:need] == tuple(pair.digit_a(i) for i in range(need))
        assert again.b[:need] == tuple(pair.digit_b(i) for i in range(need))


# -- transfer matrix and eventual recovery --------------------------------------------


def test_transfer_matrix_worked_example():
    matrix = transfer_matrix(((2,), (2,)), ((2, 3), (0, 0)))
    assert matrix == ((4, 5, 2), (2, 2, 1), (1, 1, 0))


def test_transfer_matrix_unimodular():
    rng = random.Random(111)
    for _ in range(30):
        pre = random_cyclic_pair(rng)
        per = random_cyclic_pair(rng)
        matrix = transfer_matrix(
            SequencePair(pre.a, pre.b), SequencePair(per.a, per.b)
        )
        det = (
            matrix[0][0] * (matrix[1][1] * matrix[2][2] - matrix[1][2] * matrix[2][1])
            - matrix[0][1] * (matrix[1][0] * matrix[2][2] - matrix[1][2] * matrix[2][0])
            + matrix[0][2] * (matrix[1][0] * matrix[2][1] - matrix[1][1] * matrix[2][0])
        )
        assert det == 1


def test_recover_eventual_period_two():
    result = recover_cubic_eventual(((2,), (2,)), ((2, 3), (0, 0)))
    assert result.poly == (1, -1, -2, -1)
    assert result.alpha.approximate(10).text == "2.1478990357"
    assert result.matrix == ((4, 5, 2), (2, 2, 1), (1, 1, 0))
    assert result.quartic[0] == 0
    # beta = 2 + 1/alpha recovered as a rational function of alpha
    assert result.beta == 2 + 1 / result.alpha


def test_recover_eventual_empty_preperiod_matches_pure():
    eventual = recover_cubic_eventual(((), ()), ((1,), (1,)))
    pure = recover_cubic_pure(((1,), (1,)))
    assert eventual.poly == pure.poly
    assert eventual.alpha == pure.alpha
    assert eventual.beta == pure.beta


def test_recover_eventual_matches_pure_on_tail():
    eventual = recover_cubic_eventual(((2,), (2,)), ((2, 3), (0, 0)))
    # the periodic tail's own expansion lives in the same field: its pure
    # recovery returns the same minimal polynomial
    pure = recover_cubic_pure(((2, 3), (0, 0)))
    assert pure.poly == eventual.poly


def test_recover_eventual_rejects_bad_digits():
    with pytest.raises(InvalidSequence):
        recover_cubic_eventual(((2,), (2,)), ((), ()))
    with pytest.raises(InvalidSequence):
        recover_cubic_eventual(((1,), (2,)), ((1, 2), (1, 3)))


def test_recover_eventual_rejects_inadmissible_cycle():
    # a_i = 0 inside the cycle breaks the admissibility rules outright
    with pytest.raises(InvalidSequence):
        recover_cubic_eventual(((0,), (0,)), ((0,), (0,)))


# -- longer periods -------------------------------------------------------------------


def test_recover_longer_period_consistency():
    rng = random.Random(222)
    for _ in range(10):
        pair = random_cyclic_pair(rng, max_period=4)
        result = recover_cubic_pure(pair)
        # alpha must satisfy its minimal polynomial exactly
        assert polys.evaluate(result.poly, result.alpha) == 0
        assert polys.degree(result.poly) in (2, 3)
        # the quartic elimination certificate
        assert result.quartic[0] == 0


# -- scanner ---------------------------------------------------------------------------


def test_scan_finds_tribonacci_periodicity():
    records = conjecture_scan(
        [(1, -1, -1, -1)],
        [((1, -1, 0), (1,))],  # beta = alpha^2 - alpha = 1 + 1/alpha
        horizon=16,
    )
    assert len(records) == 1
    record = records[0]
    assert record.status == STATUS_PERIODIC
    assert (record.preperiod, record.period) == (0, 1)
    assert record.digits_preview[0] == (1,) * 8
    assert record.min_poly == (1, -1, -1, -1)


def test_scan_skips_reducible_and_rootless():
    records = conjecture_scan(
        [(1, 0, 0, -1), (1, 0, 0, 1), (1, 2, 2, 1)],
        [((1, 0, 0), (1,))],
        horizon=8,
    )
    statuses = {tuple(r.min_poly): r.status for r in records}
    assert statuses[(1, 0, 0, -1)] == STATUS_SKIPPED_REDUCIBLE  # x^3 - 1
    # x^3 + 1 is also reducible; x^3 + 2x^2 + 2x + 1 too ((x+1) factor)
    assert statuses[(1, 0, 0, 1)] == STATUS_SKIPPED_REDUCIBLE
    assert statuses[(1, 2, 2, 1)] == STATUS_SKIPPED_REDUCIBLE


def test_scan_no_positive_root():
    # x^3 + x + 1 has its only real root near -0.68
    records = conjecture_scan(
        [(1, 0, 1, 1)], [((1, 0, 0), (1,))], horizon=8
    )
    assert records[0].status == STATUS_SKIPPED_NO_POSITIVE_ROOT


def test_scan_statuses_cover_horizon_exhaustion():
    # a beta with no special relation to alpha typically exhausts the horizon
    records = conjecture_scan(
        [(1, -1, -1, -1)], [((1, 0, 0, 7), (1,))], horizon=6
    )
    assert records[0].status in {STATUS_EXHAUSTED, STATUS_PERIODIC}


def test_scan_parallel_matches_serial():
    family = [(1, c2, -1, -1) for c2 in range(-2, 3)]
    betas = [((1, 0, 0), (1,)), ((1, -1, 0), (1,))]
    serial = conjecture_scan(family, betas, horizon=10, jobs=1)
    parallel = conjecture_scan(family, betas, horizon=10, jobs=2)
    assert serial == parallel


def test_scan_validates_arguments():
    with pytest.raises(ValueError):
        conjecture_scan([(1, 0, 0, -2)], [((1, 0, 0), (1,))], horizon=0)
    with pytest.raises(ValueError):
        conjecture_scan([(1, 0, 0, -2)], [], horizon=8)
