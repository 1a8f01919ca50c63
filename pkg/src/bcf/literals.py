"""Textual literals for exact numbers, and small formatting helpers.

Grammar (one kind per literal, chosen by its prefix):

    rat:<int>[/<int>]                       exact rational, e.g. rat:7/4
    alg:<c_d>,...,<c_0>@<lo>,<hi>           root of an integer polynomial
                                            (descending coefficients) inside
                                            the open interval (lo, hi),
                                            e.g. alg:1,-1,-1,-1@1,2
    ratfunc:<n_k>,...,<n_0>/<d_j>,...,<d_0> rational function of alpha with
                                            integer coefficients, only
                                            meaningful for beta,
                                            e.g. ratfunc:1,1/1,0 = (a+1)/a
    dec:<decimal>                           decimal literal, only valid in
                                            approximate mode

Parse failures raise ParseError naming the offending token, its position,
and the expected grammar fragment.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from fractions import Fraction

from . import polys
from .errors import ParseError
from .fields import NumberField

RAT_GRAMMAR = "rat:<int>[/<int>]"
ALG_GRAMMAR = "alg:<c_d>,...,<c_0>@<lo>,<hi>"
RATFUNC_GRAMMAR = "ratfunc:<n_k>,...,<n_0>/<d_j>,...,<d_0>"
DEC_GRAMMAR = "dec:<decimal>"


@dataclass(frozen=True)
class RatFunc:
    """A rational function of alpha: integer coefficients, descending."""

    num: tuple
    den: tuple

    def evaluate(self, alpha):
        """Exact value at alpha (a Fraction or field element)."""
        den_value = polys.evaluate(self.den, alpha)
        if den_value == 0:
            raise ZeroDivisionError(
                "rational-function denominator vanishes at alpha"
            )
        return polys.evaluate(self.num, alpha) / den_value


def _parse_int(token, position, grammar):
    try:
        return int(token, 10)
    except ValueError:
        raise ParseError(
            f"expected an integer at position {position}, got {token!r} "
            f"(grammar: {grammar})"
        ) from None


def _parse_fraction(token, position, grammar):
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(
            f"expected a rational at position {position}, got {token!r} "
            f"(grammar: {grammar})"
        ) from None


def _parse_int_csv(text, position, grammar):
    if not text:
        raise ParseError(
            f"expected a comma-separated integer list at position {position} "
            f"(grammar: {grammar})"
        )
    values = []
    cursor = position
    for token in text.split(","):
        values.append(_parse_int(token.strip(), cursor, grammar))
        cursor += len(token) + 1
    return tuple(values)


def _parse_rat(body, position):
    head, sep, tail = body.partition("/")
    p = _parse_int(head, position, RAT_GRAMMAR)
    if not sep:
        return Fraction(p)
    q = _parse_int(tail, position + len(head) + 1, RAT_GRAMMAR)
    if q == 0:
        raise ParseError(
            f"zero denominator at position {position + len(head) + 1} "
            f"(grammar: {RAT_GRAMMAR})"
        )
    return Fraction(p, q)


def _parse_alg(body, position):
    coeff_text, sep, interval_text = body.partition("@")
    if not sep:
        raise ParseError(
            f"missing '@' in algebraic literal at position {position} "
            f"(grammar: {ALG_GRAMMAR})"
        )
    coeffs = _parse_int_csv(coeff_text, position, ALG_GRAMMAR)
    endpoints = interval_text.split(",")
    if len(endpoints) != 2:
        raise ParseError(
            f"expected two interval endpoints at position "
            f"{position + len(coeff_text) + 1}, got {interval_text!r} "
            f"(grammar: {ALG_GRAMMAR})"
        )
    cursor = position + len(coeff_text) + 1
    lo = _parse_fraction(endpoints[0].strip(), cursor, ALG_GRAMMAR)
    cursor += len(endpoints[0]) + 1
    hi = _parse_fraction(endpoints[1].strip(), cursor, ALG_GRAMMAR)
    return NumberField(coeffs, (lo, hi)).generator()


def _parse_ratfunc(body, position):
    parts = body.split("/")
    if len(parts) != 2:
        raise ParseError(
            f"expected exactly one '/' in rational-function literal at "
            f"position {position}, got {body!r} (grammar: {RATFUNC_GRAMMAR})"
        )
    num = _parse_int_csv(parts[0], position, RATFUNC_GRAMMAR)
    den = _parse_int_csv(
        parts[1], position + len(parts[0]) + 1, RATFUNC_GRAMMAR
    )
    if not polys.trim(den):
        raise ParseError(
            f"denominator is the zero polynomial at position "
            f"{position + len(parts[0]) + 1} (grammar: {RATFUNC_GRAMMAR})"
        )
    return RatFunc(num, den)


def _parse_dec(body, position, allow_decimal):
    if not allow_decimal:
        raise ParseError(
            "dec: literals are only valid in approximate mode "
            f"(grammar: {DEC_GRAMMAR})"
        )
    try:
        value = Decimal(body)
    except InvalidOperation:
        raise ParseError(
            f"expected a decimal at position {position}, got {body!r} "
            f"(grammar: {DEC_GRAMMAR})"
        ) from None
    if not value.is_finite():
        raise ParseError(
            f"decimal literal must be finite, got {body!r} "
            f"(grammar: {DEC_GRAMMAR})"
        )
    return value


def parse_number(literal, allow_decimal=False):
    """Parse a number literal into its exact (or decimal) value.

    Returns a Fraction for rat:, a field element for alg:, a RatFunc for
    ratfunc:, and a Decimal for dec: (the latter only when allow_decimal
    is set).  Field-construction failures (reducible polynomial, bad root
    interval, degree out of range) propagate as their own error types.
    """
    if not isinstance(literal, str):
        raise ParseError(f"number literal must be text, got {literal!r}")
    kind, sep, body = literal.partition(":")
    if not sep:
        raise ParseError(
            f"number literal needs a '<kind>:' prefix, got {literal!r} "
            f"(kinds: rat, alg, ratfunc, dec)"
        )
    position = len(kind) + 1
    if kind == "rat":
        return _parse_rat(body, position)
    if kind == "alg":
        return _parse_alg(body, position)
    if kind == "ratfunc":
        return _parse_ratfunc(body, position)
    if kind == "dec":
        return _parse_dec(body, position, allow_decimal)
    raise ParseError(
        f"unknown literal kind {kind!r} at position 0 "
        f"(kinds: rat, alg, ratfunc, dec)"
    )


def parse_digits(text):
    """Parse a comma-separated digit list; empty text means no digits."""
    if text is None or not text.strip():
        return ()
    return tuple(
        _parse_int(token.strip(), i, "<int>,<int>,...")
        for i, token in enumerate(text.split(","))
    )


def fraction_str(value):
    """Render a rational as 'p/q' with the denominator always explicit."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"
