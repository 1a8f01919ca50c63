"""Periodicity detection and cubic recovery from periodic digit pairs.

An eventually periodic expansion pins down its source pair algebraically.
Each digit pair contributes a unimodular matrix R_i = [[a_i, b_i, 1],
[1, 0, 0], [0, 1, 0]]; one full period (conjugated past the preperiod)
yields an integer transfer matrix M with the row eigen-relation
(alpha, beta, 1) M = lambda (alpha, beta, 1).  Eliminating lambda gives
beta as a rational function of alpha and, after substitution, an integer
polynomial relation for alpha whose degree-4 coefficient cancels
identically — so alpha is at most cubic.  The recovery functions extract
that relation, certify it, isolate alpha's root, and rebuild the exact
(alpha, beta) pair.  A scanner then probes cubic fields for periodic
expansions experimentally.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from . import _kernels, polys
from .errors import BcfError, DegenerateSystem, InvalidSequence, MixedFields
from .expansion import _is_integral, bcf_expand
from .fields import AlgebraicNumber, NumberField
from .sequences import SequencePair, as_pair
from .treeval import convergent, gap_diagnostics
from .validation import validate

# (A, B, C) at the notional indices -1 and -2 that seed the recurrences.
_NOTIONAL_MINUS_1 = (1, 0, 0)
_NOTIONAL_MINUS_2 = (0, 1, 0)


@dataclass(frozen=True)
class PeriodicityResult:
    """First exact state repeat: preperiod k, period m, and the state seen
    at both index k and index k + m."""

    preperiod: int
    period: int
    witness: tuple


@dataclass(frozen=True)
class NotFound:
    """No state repeat within the supplied run; ``terminated`` records
    whether the run had in fact reached a terminating (integral-beta)
    state, which rules a period out entirely."""

    terminated: bool


def detect_period(states):
    """Find the first exact repeat among expansion states.

    States must all live over one number field (rational states are
    field-agnostic and mix freely).  Returns a PeriodicityResult for the
    first pair of equal states, else NotFound.
    """
    states = list(states)
    field = None
    for s in states:
        for value in (s.alpha, s.beta):
            if isinstance(value, AlgebraicNumber):
                if field is None:
                    field = value.field
                elif field != value.field:
                    raise MixedFields(
                        "states span more than one number field: "
                        f"{field!r} and {value.field!r}"
                    )
    seen = {}
    for i, s in enumerate(states):
        key = (s.alpha, s.beta)
        if key in seen:
            k = seen[key]
            return PeriodicityResult(preperiod=k, period=i - k, witness=key)
        seen[key] = i
    terminated = bool(states) and _is_integral(states[-1].beta)
    return NotFound(terminated=terminated)


@dataclass(frozen=True)
class RecoveredCubic:
    """Recovered algebraic description of a periodic expansion's source.

    ``poly`` is the minimal polynomial of alpha: integer coefficients in
    descending order, content 1, positive leading coefficient, degree 2 or
    3.  ``beta_expr`` is (numerator, denominator) integer coefficient
    tuples expressing beta as a rational function of alpha.  ``field``,
    ``alpha``, and ``beta`` carry the reconstructed exact values;
    ``quartic`` is the degree-4 elimination polynomial as a 5-tuple whose
    leading entry is certified zero; ``matrix`` is the integer transfer
    matrix (None for the pure-period route, which never forms one).
    """

    poly: tuple
    beta_expr: tuple
    field: NumberField
    alpha: AlgebraicNumber
    beta: AlgebraicNumber
    quartic: tuple
    matrix: Optional[tuple]


def _pad5(coeffs):
    coeffs = polys.trim(coeffs)
    if len(coeffs) > 5:
        raise DegenerateSystem(
            f"elimination produced degree {len(coeffs) - 1} > 4"
        )
    return (0,) * (5 - len(coeffs)) + tuple(coeffs)


def _canonical_ratfunc(num, den):
    num = polys.trim(num)
    den = polys.trim(den)
    g = math.gcd(polys.content(num), polys.content(den))
    if g > 1:
        num = tuple(c // g for c in num)
        den = tuple(c // g for c in den)
    if den and den[0] < 0:
        num = polys.negate(num)
        den = polys.negate(den)
    return num, den


def _strip_rational_roots(relation):
    """Divide out every rational root, leaving the irrational-root factor."""
    h = polys.primitive(relation)
    while polys.degree(h) >= 1:
        roots = polys.rational_roots(h)
        if not roots:
            break
        r = roots[0]
        quotient, remainder = polys.divmod_q(h, (r.denominator, -r.numerator))
        assert not remainder, "claimed rational root does not divide"
        h = polys.clear_denominators(quotient)
    return h


def _certified_root_interval(poly, pair):
    """A rational interval around the pair's limit alpha isolating one root.

    The convergent alpha_N sits within 144 * D_{N+1} of the limit: the gap
    series Delta is dominated by the monotone D-series, which contracts by
    35/36 every four indices, so the tail sum is at most 4 * 36 * D.  The
    horizon doubles until the certified ball isolates exactly one root of
    the polynomial.
    """
    chain = polys.sturm_chain(poly)
    horizon = 8
    while True:
        diagnostics = gap_diagnostics(pair, horizon + 1)
        radius = 144 * diagnostics.dmax_at(horizon + 1)
        center = convergent(pair, horizon).alpha
        lo, hi = center - radius, center + radius
        if polys.count_roots(chain, lo, hi) == 1:
            return lo, hi
        horizon *= 2


def _build_result(relation, beta_num, beta_den, ball_pair, quartic5, matrix):
    relation = polys.primitive(relation)
    if polys.degree(relation) < 1:
        raise DegenerateSystem("elimination produced a constant relation")
    min_poly = _strip_rational_roots(relation)
    if polys.degree(min_poly) < 2:
        raise DegenerateSystem(
            "no irrational root remains after removing rational factors"
        )
    assert polys.is_irreducible(min_poly), "residual factor must be irreducible"
    interval = _certified_root_interval(min_poly, ball_pair)
    field = NumberField(min_poly, interval)
    alpha = field.generator()
    beta = polys.evaluate(beta_num, alpha) / polys.evaluate(beta_den, alpha)
    return RecoveredCubic(
        poly=min_poly,
        beta_expr=_canonical_ratfunc(beta_num, beta_den),
        field=field,
        alpha=alpha,
        beta=beta,
        quartic=quartic5,
        matrix=matrix,
    )


def _validated_periodic_pair(a, b, preperiod, period):
    pair = SequencePair(a, b, periodicity=(preperiod, period))
    report = validate(pair)
    if not report.valid:
        raise InvalidSequence(
            f"digits fail the admissibility rules at {list(report.violations)}"
        )
    return pair


def _triples_with_notional(a, b, n):
    triples = _kernels.convergent_triples(list(a), list(b), n)

    def triple(i):
        if i >= 0:
            return triples[i]
        return _NOTIONAL_MINUS_1 if i == -1 else _NOTIONAL_MINUS_2

    return triple(n), triple(n - 1), triple(n - 2)


def recover_cubic_pure(seqs):
    """Recover (alpha, beta) from one full period of a purely periodic pair.

    With period length n+1, the convergent triples at n, n-1, n-2 (using
    notional values at negative indices) give the bilinear relation
    C_n a^2 + C_{n-1} ab + (C_{n-2} - A_n) a - A_{n-1} b - A_{n-2} = 0;
    solving it for beta and substituting into its B-row companion yields
    the elimination quartic whose alpha^4 term cancels.  The surviving
    irreducible factor containing the expansion's limit is alpha's
    minimal polynomial.
    """
    pair = as_pair(seqs)
    if pair.terminated:
        raise InvalidSequence("a terminated pair has no period to recover")
    if pair.periodicity is not None:
        k, m = pair.periodicity
        if k != 0:
            raise InvalidSequence(
                "pair has a preperiod; use recover_cubic_eventual"
            )
        a, b = pair.a[:m], pair.b[:m]
    else:
        a, b = pair.a, pair.b
    m = len(a)
    if m < 1:
        raise InvalidSequence("period must contain at least one digit pair")
    periodic = _validated_periodic_pair(a, b, 0, m)

    n = m - 1
    (A_n, B_n, C_n), (A_n1, B_n1, C_n1), (A_n2, B_n2, C_n2) = (
        _triples_with_notional(a, b, n)
    )
    beta_num = polys.trim((C_n, C_n2 - A_n, -A_n2))
    beta_den = polys.trim((-C_n1, A_n1))
    if not beta_den:
        raise DegenerateSystem("beta denominator vanished in the pure route")
    quartic = polys.sub(
        polys.add(
            polys.scale(polys.multiply(beta_num, beta_num), C_n1),
            polys.multiply(
                polys.multiply(polys.trim((C_n, C_n2 - B_n1)), beta_num),
                beta_den,
            ),
        ),
        polys.multiply(
            polys.trim((B_n, B_n2)), polys.multiply(beta_den, beta_den)
        ),
    )
    quartic5 = _pad5(quartic)
    assert quartic5[0] == 0, "alpha^4 coefficient must vanish"
    return _build_result(quartic, beta_num, beta_den, periodic, quartic5, None)


def _digit_matrix(a, b):
    return ((a, b, 1), (1, 0, 0), (0, 1, 0))


def _digit_matrix_inverse(a, b):
    return ((0, 1, 0), (0, 0, 1), (1, -a, -b))


_IDENTITY = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def _mat_mul(x, y):
    return tuple(
        tuple(sum(x[i][k] * y[k][j] for k in range(3)) for j in range(3))
        for i in range(3)
    )


def _mat_det(m):
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def transfer_matrix(preperiod, period):
    """Integer matrix M = P^-1 Q P for the given preperiod and period digits.

    P multiplies the preperiod digit matrices in decreasing index order
    (identity for an empty preperiod) and Q does the same over one period;
    every factor has determinant 1, so M is integral and unimodular.
    """
    pre = as_pair(preperiod)
    per = as_pair(period)
    forward = _IDENTITY
    backward = _IDENTITY
    for a_i, b_i in zip(pre.a, pre.b):
        forward = _mat_mul(_digit_matrix(a_i, b_i), forward)
        backward = _mat_mul(backward, _digit_matrix_inverse(a_i, b_i))
    cycle = _IDENTITY
    for a_i, b_i in zip(per.a, per.b):
        cycle = _mat_mul(_digit_matrix(a_i, b_i), cycle)
    return _mat_mul(backward, _mat_mul(cycle, forward))


def recover_cubic_eventual(preperiod, period):
    """Recover (alpha, beta) from preperiod plus period digit pairs.

    Builds the transfer matrix M and eliminates the eigenvalue from the
    row relation (alpha, beta, 1) M = lambda (alpha, beta, 1): beta =
    (-M13 a^2 + (M11 - M33) a + M31) / (M23 a - M21), and substitution
    into the middle column yields the elimination quartic.  If both
    denominator entries vanish the relation degenerates to the (at most
    quadratic) numerator itself, with beta read from the middle column
    instead.
    """
    pre = as_pair(preperiod)
    per = as_pair(period)
    if pre.terminated or per.terminated:
        raise InvalidSequence("terminated pairs have no period to recover")
    k, m = len(pre.a), len(per.a)
    if m < 1:
        raise InvalidSequence("period must contain at least one digit pair")
    pair = _validated_periodic_pair(pre.a + per.a, pre.b + per.b, k, m)

    matrix = transfer_matrix(pre, per)
    assert _mat_det(matrix) == 1, "transfer matrix must be unimodular"
    (m11, m12, m13), (m21, m22, m23), (m31, m32, m33) = matrix
    beta_num = polys.trim((-m13, m11 - m33, m31))
    beta_den = polys.trim((m23, -m21))
    if beta_den:
        quartic = polys.sub(
            polys.add(
                polys.multiply(
                    polys.trim((m12, m32)),
                    polys.multiply(beta_den, beta_den),
                ),
                polys.multiply(
                    polys.trim((-m13, m22 - m33)),
                    polys.multiply(beta_num, beta_den),
                ),
            ),
            polys.scale(polys.multiply(beta_num, beta_num), m23),
        )
        relation = quartic
    else:
        # M21 = M23 = 0: the first column already constrains alpha alone.
        relation = beta_num
        beta_num = polys.trim((m12, m32))
        beta_den = polys.trim((m13, m33 - m22))
        if not beta_den:
            raise DegenerateSystem(
                "transfer matrix determines neither beta relation"
            )
    quartic5 = _pad5(relation)
    assert quartic5[0] == 0, "alpha^4 coefficient must vanish"
    return _build_result(relation, beta_num, beta_den, pair, quartic5, matrix)


# -- experimental scanner ----------------------------------------------------

STATUS_PERIODIC = "periodic"
STATUS_TERMINATED = "terminated"
STATUS_EXHAUSTED = "exhausted"
STATUS_SKIPPED_REDUCIBLE = "skipped-reducible"
STATUS_SKIPPED_NO_POSITIVE_ROOT = "skipped-no-positive-root"
STATUS_SKIPPED_NONPOSITIVE_BETA = "skipped-nonpositive-beta"
STATUS_ERROR = "error"


@dataclass(frozen=True)
class ScanRecord:
    """One scanner observation: a field/beta candidate and what happened."""

    min_poly: tuple
    interval: Optional[tuple]
    beta_expr: Optional[tuple]
    status: str
    preperiod: Optional[int]
    period: Optional[int]
    digits_preview: Optional[tuple]


def _scan_single_poly(task):
    coeffs, candidates, horizon, preview = task
    records = []

    def record(status, interval=None, beta_expr=None, preperiod=None,
               period=None, digits=None):
        records.append(
            ScanRecord(
                min_poly=coeffs,
                interval=interval,
                beta_expr=beta_expr,
                status=status,
                preperiod=preperiod,
                period=period,
                digits_preview=digits,
            )
        )

    if polys.degree(coeffs) != 3:
        record(STATUS_ERROR)
        return records
    if not polys.is_irreducible(coeffs):
        record(STATUS_SKIPPED_REDUCIBLE)
        return records
    roots = []
    for lo, hi in polys.isolating_intervals(coeffs):
        field = NumberField(coeffs, (lo, hi))
        alpha = field.generator()
        if alpha > 0:
            roots.append(((lo, hi), alpha))
    if not roots:
        record(STATUS_SKIPPED_NO_POSITIVE_ROOT)
        return records
    for interval, alpha in roots:
        for num, den in candidates:
            beta_expr = _canonical_ratfunc(num, den)
            try:
                den_value = polys.evaluate(den, alpha)
                if den_value == 0:
                    record(STATUS_ERROR, interval, beta_expr)
                    continue
                beta = polys.evaluate(num, alpha) / den_value
                if not beta > 0:
                    record(
                        STATUS_SKIPPED_NONPOSITIVE_BETA, interval, beta_expr
                    )
                    continue
                pair = bcf_expand(alpha, beta, max_terms=horizon)
            except (BcfError, ZeroDivisionError):
                record(STATUS_ERROR, interval, beta_expr)
                continue
            digits = (pair.a[:preview], pair.b[:preview])
            if pair.terminated:
                record(STATUS_TERMINATED, interval, beta_expr, digits=digits)
            elif pair.periodicity is not None:
                k, m = pair.periodicity
                record(
                    STATUS_PERIODIC, interval, beta_expr, k, m, digits
                )
            else:
                record(STATUS_EXHAUSTED, interval, beta_expr, digits=digits)
    return records


def conjecture_scan(field_family, beta_candidates, horizon, jobs=None,
                    preview_digits=8):
    """Probe cubic fields for eventually periodic expansions.

    ``field_family`` iterates integer coefficient tuples of cubic
    polynomials; ``beta_candidates`` iterates (numerator, denominator)
    coefficient tuples defining beta as a rational function of alpha;
    ``horizon`` bounds each expansion.  Every (positive root, candidate)
    combination yields one ScanRecord; reducible polynomials, rootless
    families, nonpositive betas, and per-candidate failures are recorded
    as skips or errors, never raised.  A hit only reports what was found
    within the horizon; a miss proves nothing.  ``jobs`` > 1 distributes
    polynomials over a process pool.
    """
    if horizon < 1:
        raise ValueError(f"horizon must be at least 1, got {horizon}")
    family = [tuple(int(c) for c in coeffs) for coeffs in field_family]
    candidates = [
        (tuple(int(c) for c in num), tuple(int(c) for c in den))
        for num, den in beta_candidates
    ]
    if not candidates:
        raise ValueError("beta_candidates must be nonempty")
    tasks = [
        (coeffs, candidates, horizon, preview_digits) for coeffs in family
    ]
    if jobs is not None and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_scan_single_poly, tasks))
    else:
        chunks = [_scan_single_poly(task) for task in tasks]
    return [record for chunk in chunks for record in chunk]
