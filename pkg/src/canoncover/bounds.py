"""Exact covering-number bound calculators and the generalization-bound RHS.

Every bound is computed as an exact arbitrary-precision integer (values
reach beyond 10^2862) together with a float log10 obtained from
log-gamma/logarithms, never from the integer itself, so the two routes
cross-check each other.

epsilon is handled as an exact rational throughout: with float
arithmetic, 1/(2 * float(1/6)) lands at 3.0000000000000004 and its
ceiling corrupts k. Floats passed in are snapped to the nearest simple
fraction; strings like "1/6" are parsed exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction

__all__ = [
    "LogValue",
    "as_exact_ratio",
    "bound_quotient_upper",
    "bound_lexsort_lower",
    "bound_hilbert_upper",
    "bound_hypercube_exact",
    "bound_group_cardinality",
    "multiset_count",
    "generalization_rhs",
    "bounds_table",
    "TableEntry",
    "TABLE_FORMULAS",
    "DEFAULT_TABLE_M",
    "DEFAULT_TABLE_N",
    "mantissa_exponent",
    "sci_string",
    "digit_count",
]

_LN10 = math.log(10.0)

# Grid order used for the Hilbert column of the reference table
# (tests freeze the resulting magnitudes); pass m=None for the
# limit-order variant.
DEFAULT_TABLE_M = 10
DEFAULT_TABLE_N = (250, 500, 750, 1000, 2000)


@dataclass(frozen=True)
class LogValue:
    """A bound magnitude: float log10 plus the exact integer when available."""

    log10: float
    exact: int | None
    formula: str


def as_exact_ratio(eps) -> Fraction:
    """Coerce an epsilon into an exact Fraction.

    Fractions and ints pass through; strings parse exactly ("1/6",
    "0.25"); floats snap to the nearest fraction with denominator up to
    1e9, which recovers the intended value of literals like 1/6.
    """
    if isinstance(eps, Fraction):
        return eps
    if isinstance(eps, int):
        return Fraction(eps)
    if isinstance(eps, str):
        return Fraction(eps.strip())
    if isinstance(eps, float):
        return Fraction(eps).limit_denominator(10**9)
    raise TypeError(f"cannot interpret {eps!r} as an exact ratio")


def _check_eps_open_unit(eps: Fraction) -> Fraction:
    if not 0 < eps < 1:
        raise ValueError(f"epsilon must lie in (0, 1), got {eps}")
    return eps


def _half_integer_k(eps: Fraction, context: str) -> int:
    """k such that eps = 1/(2k); rejects epsilons not of that form."""
    inv = 1 / eps
    if inv.denominator != 1 or inv.numerator % 2 != 0:
        raise ValueError(
            f"{context} requires epsilon = 1/(2k) for integer k, got {eps}"
        )
    return inv.numerator // 2


def _binom_logvalue(top: int, bottom: int, formula: str) -> LogValue:
    exact = math.comb(top, bottom)
    log10 = (
        math.lgamma(top + 1) - math.lgamma(bottom + 1) - math.lgamma(top - bottom + 1)
    ) / _LN10
    return LogValue(log10=log10, exact=exact, formula=formula)


def _power_logvalue(base: int, exponent: int, formula: str) -> LogValue:
    return LogValue(
        log10=exponent * math.log10(base) if base > 1 else 0.0,
        exact=base**exponent,
        formula=formula,
    )


def bound_quotient_upper(n: int, d: int, eps) -> LogValue:
    """Covering bound for the permutation quotient: C(n + k^d - 1, n),
    k = ceil(1/(2 eps))."""
    if n < 1 or d < 1:
        raise ValueError("n and d must be >= 1")
    eps = _check_eps_open_unit(as_exact_ratio(eps))
    k = math.ceil(1 / (2 * eps))
    return _binom_logvalue(n + k**d - 1, n, "quotient-upper")


def bound_lexsort_lower(n: int, d: int, eps) -> LogValue:
    """Covering lower bound for the lexicographically sorted image:
    k^((d-1)n + 1) with eps = 1/(2k)."""
    if n < 2 or d < 2:
        raise ValueError("the lexsort lower bound needs n >= 2 and d >= 2")
    eps = _check_eps_open_unit(as_exact_ratio(eps))
    k = _half_integer_k(eps, "the lexsort lower bound")
    return _power_logvalue(k, (d - 1) * n + 1, "lexsort-lower")


def bound_hilbert_upper(n: int, d: int, eps, m: int | None = None) -> LogValue:
    """Covering bound for the Hilbert-ordered image: C(n + K - 1, n) with
    K = ceil(1/(2 delta)), delta = (eps - 2^(-m-1))^d / 4.

    With m omitted, delta takes its large-m limit eps^d / 4. A finite m
    requires eps > 2^(-m-1).
    """
    if n < 1 or d < 1:
        raise ValueError("n and d must be >= 1")
    eps = _check_eps_open_unit(as_exact_ratio(eps))
    if m is None:
        delta = eps**d / 4
    else:
        if m < 1:
            raise ValueError(f"curve order must be >= 1, got {m}")
        gap = eps - Fraction(1, 2 ** (m + 1))
        if gap <= 0:
            raise ValueError(
                f"epsilon = {eps} must exceed 2^-(m+1) = {Fraction(1, 2**(m+1))}"
            )
        delta = gap**d / 4
    K = math.ceil(1 / (2 * delta))
    return _binom_logvalue(n + K - 1, n, "hilbert-upper")


def bound_hypercube_exact(n: int, d: int, eps) -> LogValue:
    """Exact covering number of the raw hypercube: k^(n d) with eps = 1/(2k)."""
    if n < 1 or d < 1:
        raise ValueError("n and d must be >= 1")
    eps = _check_eps_open_unit(as_exact_ratio(eps))
    k = _half_integer_k(eps, "the hypercube covering number")
    return _power_logvalue(k, n * d, "hypercube-exact")


def bound_group_cardinality(quotient: LogValue, group_size: int) -> LogValue:
    """Lift a quotient-space bound back to the raw space: multiply by |G|."""
    if group_size < 1:
        raise ValueError(f"group size must be >= 1, got {group_size}")
    exact = None if quotient.exact is None else quotient.exact * group_size
    return LogValue(
        log10=quotient.log10 + math.log10(group_size),
        exact=exact,
        formula=f"{quotient.formula}*group",
    )


def multiset_count(n: int, m: int) -> int:
    """Number of multisets of size n over m symbols: C(n + m - 1, n)."""
    if n < 1 or m < 1:
        raise ValueError("n and m must be >= 1")
    return math.comb(n + m - 1, n)


def generalization_rhs(c_ell: float, c_h: float, c_f: float, eps: float,
                       loss_bound: float, covering_number: float,
                       confidence: float, samples: int) -> float:
    """Right-hand side of the covering-based generalization bound:

        2 c_ell (c_h + c_f) eps
        + loss_bound * sqrt((2 N ln 2 + 2 ln(1/confidence)) / samples)

    with N the covering number (entering without a log, exactly as the
    formula is stated) and confidence in (0, 1].
    """
    if samples < 1:
        raise ValueError("sample count must be >= 1")
    if not 0 < confidence <= 1:
        raise ValueError(f"confidence must lie in (0, 1], got {confidence}")
    if min(c_ell, c_h, c_f, loss_bound, covering_number) < 0 or eps < 0:
        raise ValueError("constants must be non-negative")
    inner = (2.0 * covering_number * math.log(2.0)
             + 2.0 * math.log(1.0 / confidence)) / samples
    return 2.0 * c_ell * (c_h + c_f) * eps + loss_bound * math.sqrt(inner)


TABLE_FORMULAS = ("quotient-upper", "hilbert-upper", "lexsort-lower", "hypercube-exact")


@dataclass(frozen=True)
class TableEntry:
    formula: str
    n: int
    value: LogValue


def bounds_table(n_list=DEFAULT_TABLE_N, d: int = 3, eps=Fraction(1, 6),
                 m: int | None = DEFAULT_TABLE_M) -> list[TableEntry]:
    """All four bound formulas across a list of n values.

    `m` sets the grid order for the Hilbert column (None = limit order).
    Entries are ordered formula-major, matching TABLE_FORMULAS.
    """
    eps = as_exact_ratio(eps)
    entries = []
    for formula in TABLE_FORMULAS:
        for n in n_list:
            if formula == "quotient-upper":
                value = bound_quotient_upper(n, d, eps)
            elif formula == "hilbert-upper":
                value = bound_hilbert_upper(n, d, eps, m=m)
            elif formula == "lexsort-lower":
                value = bound_lexsort_lower(n, d, eps)
            else:
                value = bound_hypercube_exact(n, d, eps)
            entries.append(TableEntry(formula=formula, n=int(n), value=value))
    return entries


def digit_count(x: int) -> int:
    """Decimal digits of a positive integer.

    Goes through Decimal: int-to-str conversion is capped (around 4300
    digits) on current interpreters, and these values reach 10^2862 and
    beyond.
    """
    if x <= 0:
        raise ValueError("digit count needs a positive integer")
    return Decimal(x).adjusted() + 1


def mantissa_exponent(value: LogValue) -> tuple[float, int]:
    """Two-significant-figure mantissa and exact exponent.

    Uses the exact integer when present (decimal rounding, no float
    error); falls back to the log10 field otherwise.
    """
    if value.exact is not None:
        if value.exact <= 0:
            raise ValueError("mantissa/exponent form needs a positive value")
        quantized = f"{Decimal(value.exact):.1E}"  # e.g. "5.3E+193"
        mant, _, exp = quantized.partition("E")
        return float(mant), int(exp)
    exponent = math.floor(value.log10)
    mant = round(10.0 ** (value.log10 - exponent), 1)
    if mant >= 10.0:
        mant, exponent = 1.0, exponent + 1
    return mant, exponent


def sci_string(value: LogValue) -> str:
    """Render as 'm.me+XX', e.g. 2.1e+36."""
    mant, exp = mantissa_exponent(value)
    return f"{mant:.1f}e{exp:+d}"
