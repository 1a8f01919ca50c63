"""The bifurcating expansion: paired digit sequences from a pair of numbers.

One step floors both coordinates and rotates: given (alpha_i, beta_i) with
beta_i non-integral,

    a_i = floor(alpha_i),  b_i = floor(beta_i),
    alpha_{i+1} = 1 / (beta_i - b_i),
    beta_{i+1}  = (alpha_i - a_i) / (beta_i - b_i).

The run ends when some beta_n is an integer; the exact alpha_n is kept as the
terminal value rather than floored.  Rational inputs always terminate and
have an integer-only fast path; algebraic inputs are tracked exactly and
recurring states are detected on the fly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import ROUND_FLOOR, ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from typing import Union

from ._kernels import rational_digits
from .errors import FieldMismatch, NonPositiveInput, PrecisionExhausted
from .fields import AlgebraicNumber, floor_of
from .sequences import SequencePair

ExactNumber = Union[Fraction, AlgebraicNumber]


@dataclass(frozen=True)
class ExpansionState:
    """One point of the expansion orbit: the pair (alpha_i, beta_i) at step i."""

    alpha: ExactNumber
    beta: ExactNumber
    index: int


@dataclass(frozen=True)
class Terminated:
    """End-of-expansion marker carrying the exact final alpha."""

    terminal: ExactNumber


def _normalize(value, name):
    if isinstance(value, bool):
        raise TypeError(f"{name} must be an exact number, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, (Fraction, AlgebraicNumber)):
        return value
    raise TypeError(
        f"{name} must be a Fraction or AlgebraicNumber, got {type(value).__name__}"
    )


def _is_integral(value):
    if isinstance(value, AlgebraicNumber):
        return value.is_rational() and value.as_fraction().denominator == 1
    return value.denominator == 1


def _unify_pair(alpha, beta):
    """Normalize two exact numbers into a common arithmetic domain."""
    alpha = _normalize(alpha, "alpha")
    beta = _normalize(beta, "beta")
    alpha_algebraic = isinstance(alpha, AlgebraicNumber)
    beta_algebraic = isinstance(beta, AlgebraicNumber)
    if alpha_algebraic and beta_algebraic:
        if alpha.field != beta.field:
            raise FieldMismatch(
                "alpha and beta must live in the same field; got "
                f"{alpha.field!r} and {beta.field!r}"
            )
    elif alpha_algebraic:
        beta = alpha.field.element(beta)
    elif beta_algebraic:
        alpha = beta.field.element(alpha)
    return alpha, beta


def bcf_step(state):
    """Advance one step: returns (a_i, b_i, next state or Terminated)."""
    alpha = _normalize(state.alpha, "alpha")
    beta = _normalize(state.beta, "beta")
    if state.index == 0 and (alpha <= 0 or beta <= 0):
        raise NonPositiveInput("expansion requires alpha > 0 and beta > 0")
    b_i = floor_of(beta)
    a_i = floor_of(alpha)
    if _is_integral(beta):
        return a_i, b_i, Terminated(alpha)
    den = beta - b_i
    next_alpha = 1 / den
    next_beta = (alpha - a_i) / den
    return a_i, b_i, ExpansionState(next_alpha, next_beta, state.index + 1)


def bcf_expand(alpha, beta, max_terms=64):
    """Expand a positive pair into digit sequences, up to max_terms steps.

    The exact orbit is tracked as it is generated; if a state recurs before
    the budget is used up, the remaining digits are read off the cycle and
    the result's periodicity field records (preperiod, period).  Rational
    inputs terminate instead, with the exact final alpha in ``terminal``.
    """
    if max_terms < 1:
        raise ValueError(f"max_terms must be at least 1, got {max_terms}")
    alpha, beta = _unify_pair(alpha, beta)
    if alpha <= 0 or beta <= 0:
        raise NonPositiveInput("expansion requires alpha > 0 and beta > 0")

    a_digits = []
    b_digits = []
    seen = {}
    terminal = None
    periodicity = None
    state = ExpansionState(alpha, beta, 0)
    for i in range(max_terms):
        key = (state.alpha, state.beta)
        if key in seen:
            k = seen[key]
            m = i - k
            periodicity = (k, m)
            for j in range(i, max_terms):
                idx = k + (j - k) % m
                a_digits.append(a_digits[idx])
                b_digits.append(b_digits[idx])
            break
        seen[key] = i
        a_i, b_i, nxt = bcf_step(state)
        b_digits.append(b_i)
        if isinstance(nxt, Terminated):
            terminal = nxt.terminal
            break
        a_digits.append(a_i)
        state = nxt
    return SequencePair(a_digits, b_digits, terminal=terminal, periodicity=periodicity)


def _common_denominator_form(alpha, beta):
    alpha, beta = Fraction(alpha), Fraction(beta)
    if alpha <= 0 or beta <= 0:
        raise NonPositiveInput("expansion requires alpha > 0 and beta > 0")
    w = math.lcm(alpha.denominator, beta.denominator)
    return int(alpha * w), int(beta * w), w


def bcf_expand_rational(alpha, beta):
    """Expand a positive rational pair with the integer triple recurrence.

    Writing alpha_i = u_i/w_i and beta_i = v_i/w_i over one denominator, a
    step is u' = w, v' = u - a*w, w' = v - b*w with a = u//w, b = v//w; the
    denominators strictly decrease, so the run always terminates.  The
    result is digit-for-digit identical to bcf_expand on the same inputs.
    """
    u, v, w = _common_denominator_form(alpha, beta)
    a, b, term_num, term_den, done = rational_digits(u, v, w, -1)
    assert done, "unlimited rational expansion cannot exhaust its budget"
    return SequencePair(a, b, terminal=Fraction(term_num, term_den))


def rational_expansion_trace(alpha, beta):
    """All (u, v, w) triples visited by the rational fast path, in order."""
    u, v, w = _common_denominator_form(alpha, beta)
    trace = [(u, v, w)]
    while v % w != 0:
        a_i, b_i = u // w, v // w
        u, v, w = w, u - a_i * w, v - b_i * w
        trace.append((u, v, w))
    return trace


def bcf_expand_heuristic(alpha, beta, max_terms=64, guard_digits=12):
    """Best-effort decimal expansion for inputs only known approximately.

    Arithmetic is carried at guard_digits + 30 significant digits.  A beta
    that lands exactly on an integer terminates the run; a beta within
    10**-guard_digits of an integer (but not on it) is indistinguishable
    from actual termination at this precision and raises PrecisionExhausted.
    Results are heuristic and excluded from the exact-arithmetic contracts.
    """
    if max_terms < 1:
        raise ValueError(f"max_terms must be at least 1, got {max_terms}")
    if guard_digits < 1:
        raise ValueError(f"guard_digits must be at least 1, got {guard_digits}")
    threshold = Decimal(1).scaleb(-guard_digits)
    a_digits = []
    b_digits = []
    with localcontext() as ctx:
        ctx.prec = guard_digits + 30
        alpha = +Decimal(alpha)
        beta = +Decimal(beta)
        if alpha <= 0 or beta <= 0:
            raise NonPositiveInput("expansion requires alpha > 0 and beta > 0")
        for i in range(max_terms):
            nearest = beta.to_integral_value(rounding=ROUND_HALF_EVEN)
            distance = abs(beta - nearest)
            if distance == 0:
                b_digits.append(int(beta))
                return SequencePair(a_digits, b_digits, terminal=Fraction(alpha))
            if distance < threshold:
                raise PrecisionExhausted(
                    f"at step {i}, beta is within {distance} of an integer; "
                    f"termination is undecidable with {guard_digits} guard digits"
                )
            a_i = int(alpha.to_integral_value(rounding=ROUND_FLOOR))
            b_i = int(beta.to_integral_value(rounding=ROUND_FLOOR))
            a_digits.append(a_i)
            b_digits.append(b_i)
            den = beta - b_i
            alpha, beta = 1 / den, (alpha - a_i) / den
    return SequencePair(a_digits, b_digits)
