"""Growth constants for the extension counts, and the special functions behind them.

The number of linear extensions of the glued-chain poset grows like
exp((m-b+a-1) n log n + c n) with an explicit constant c built from log-gamma
and log-beta values.  This module evaluates that constant, certifies the
strict ordering of constants for parameter pairs with the same gap b - a,
and fits the constant empirically from exact integer counts.

log_gamma and trigamma are implemented directly (argument shift plus a
Stirling-type tail) so the package carries no numeric dependency here; the
tests cross-check them against independent references.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import DomainError, InternalConsistencyError, InvalidInputError
from .exact_counts import exact_count, exact_count_sweep
from .posets import ClusterParams

# Stirling correction coefficients B_2k / (2k (2k-1)), k = 1..7
_STIRLING = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
)

# Bernoulli numbers B_2k, k = 1..7, for the trigamma tail
_TRIGAMMA_TAIL = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
)

_HALF_LOG_TWO_PI = 0.5 * math.log(2.0 * math.pi)


def log_gamma(x: float) -> float:
    """Natural log of the gamma function for x > 0.

    Shifts the argument above 8 with log Gamma(x) = log Gamma(x+1) - log x,
    then applies the Stirling series with seven correction terms.
    """
    if x <= 0:
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    shift = 0.0
    while x < 8.0:
        shift += math.log(x)
        x += 1.0
    inv = 1.0 / x
    inv2 = inv * inv
    tail = 0.0
    for coeff in reversed(_STIRLING):
        tail = tail * inv2 + coeff
    return (x - 0.5) * math.log(x) - x + _HALF_LOG_TWO_PI + tail * inv - shift


def log_beta(alpha: float, beta: float) -> float:
    """log B(alpha, beta) = log Gamma(alpha) + log Gamma(beta) - log Gamma(alpha+beta)."""
    if alpha <= 0 or beta <= 0:
        raise DomainError("log_beta requires strictly positive arguments")
    return log_gamma(alpha) + log_gamma(beta) - log_gamma(alpha + beta)


def trigamma(x: float) -> float:
    """Sum of 1/(x+k)^2 over k >= 0, for x > 0.

    Uses the recurrence to shift the argument above 10, then the asymptotic
    tail 1/x + 1/(2x^2) + sum B_2k / x^(2k+1).
    """
    if x <= 0:
        raise DomainError(f"trigamma requires x > 0, got {x}")
    acc = 0.0
    while x < 10.0:
        acc += 1.0 / (x * x)
        x += 1.0
    inv = 1.0 / x
    inv2 = inv * inv
    tail = 0.0
    for coeff in reversed(_TRIGAMMA_TAIL):
        tail = tail * inv2 + coeff
    return acc + inv + 0.5 * inv2 + tail * inv2 * inv


@dataclass(frozen=True)
class AsymptoticConstant:
    """Leading coefficient and linear-term constant of log e(P_n) growth."""

    m: int
    a: int
    b: int
    leading: int
    value: float


def growth_constant(m: int, a: int, b: int) -> AsymptoticConstant:
    """The constant c(m, a, b) in log e(P_n) = (m-b+a-1) n log n + c n + O(log n).

    c = (b-a) log B((a-1)/(b-a)+1, (m-b)/(b-a)+1) - log B(a, m-b+1)
        - log Gamma(m-b+a+1) + (m-1) log(m-1) - (b-a) log(b-a) - m + b - a + 1
    """
    params = ClusterParams(m, a, b, 1)
    d = b - a
    alpha = (a - 1) / d + 1.0
    beta = (m - b) / d + 1.0
    value = (d * log_beta(alpha, beta)
             - log_beta(float(a), float(m - b + 1))
             - log_gamma(float(m - b + a + 1))
             + (m - 1) * math.log(m - 1)
             - d * math.log(d)
             - m + b - a + 1)
    return AsymptoticConstant(m, a, b, params.leading, value)


def constant_concavity(t: float, d: int) -> float:
    """(1/d) trigamma(t/d + 1) - trigamma(t + 1); strictly negative for d >= 2.

    This is the second derivative in t of d log Gamma(t/d + 1) - log Gamma(t+1),
    the t-dependent part of the growth constant along fixed gap d, and its
    negativity is what makes the constant strictly concave in the glue position.
    """
    if t < 0:
        raise DomainError(f"need t >= 0, got {t}")
    if d < 2:
        raise DomainError(f"need d >= 2, got {d}")
    return trigamma(t / d + 1.0) / d - trigamma(t + 1.0)


def _check_gap_hypotheses(m: int, a: int, b: int, a2: int, b2: int) -> None:
    ClusterParams(m, a, b, 1)
    ClusterParams(m, a2, b2, 1)
    if b - a != b2 - a2:
        raise InvalidInputError("the two parameter pairs must have equal gap b - a")
    if b - a <= 1:
        raise InvalidInputError("the ordering statement requires gap b - a > 1")
    if not (a + b < a2 + b2 <= m + 1):
        raise InvalidInputError(
            f"need a + b < a2 + b2 <= m + 1, got {a + b}, {a2 + b2}, m + 1 = {m + 1}")


def constant_gap(m: int, a: int, b: int, a2: int, b2: int) -> float:
    """Certified positive gap c(m, a2, b2) - c(m, a, b) under the ordering hypotheses.

    Requires b - a = b2 - a2 > 1 and a + b < a2 + b2 <= m + 1; the returned
    difference is checked to exceed 1e-9.
    """
    _check_gap_hypotheses(m, a, b, a2, b2)
    gap = growth_constant(m, a2, b2).value - growth_constant(m, a, b).value
    if not gap > 1e-9:
        raise InternalConsistencyError(
            f"constant gap {gap} not certifiably positive for "
            f"({m},{a},{b}) vs ({m},{a2},{b2})")
    return gap


def log_integer(value: int) -> float:
    """Natural log of a positive arbitrary-precision integer.

    Extracts the binary exponent and converts the top 64 bits, so the result
    is accurate to relative 1e-12 regardless of magnitude.
    """
    if value <= 0:
        raise DomainError("log_integer requires a positive integer")
    nbits = value.bit_length()
    if nbits <= 900:
        return math.log(value)
    shift = nbits - 64
    return math.log(value >> shift) + shift * math.log(2.0)


def empirical_constant(m: int, a: int, b: int, n: int) -> float:
    """(log e(P_n) - (m-b+a-1) n log n) / n, from the exact integer count."""
    params = ClusterParams(m, a, b, n)
    count = exact_count(params, "p")
    return (log_integer(count) - params.leading * n * math.log(n)) / n


def crossover_search(m: int, a: int, b: int, a2: int, b2: int,
                     n_max: int) -> Optional[int]:
    """Smallest n0 with e(P_n^{m,a,b}) < e(P_n^{m,a2,b2}) for all n0 <= n <= n_max.

    Returns None when even n = n_max fails.  Hypotheses as in constant_gap.
    """
    _check_gap_hypotheses(m, a, b, a2, b2)
    if n_max < 1:
        raise InvalidInputError("n_max must be >= 1")
    first = exact_count_sweep(m, a, b, n_max, "p")
    second = exact_count_sweep(m, a2, b2, n_max, "p")
    ordered = [x < y for x, y in zip(first, second)]
    if not ordered[-1]:
        return None
    n0 = n_max
    for n in range(n_max, 0, -1):
        if ordered[n - 1]:
            n0 = n
        else:
            break
    return n0
