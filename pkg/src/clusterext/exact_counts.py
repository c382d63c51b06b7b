"""Exact linear-extension counts via iterated polynomial integration.

Writing the count of a glued-chain poset as the probability that a uniform
labeling is order-preserving turns it into an iterated integral over the
ordered values x_0 < ... < x_n at the glue elements: each chain contributes
a weight x^(a-1) below its first glue point, (1-x)^(m-b) above its second,
and a kernel (x_{i+1} - x_i)^(b-a-1) in between.  Integrating out one
variable at a time keeps a single univariate polynomial whose coefficients
stay exact rationals, so the final factorial-scaled value is an exact
integer for any n.

Everything here is exact; no floating point is used anywhere.  The working
representation stores integer coefficients c_k of x^k/k! (each kernel pass
then becomes a pure index shift and weight multiplication stays integral),
which is the common-denominator layout with the per-degree factorials folded
into the basis.  The plain rational-polynomial form is exposed as
:class:`RationalPoly` and :func:`step_integral` and is cross-checked against
the fast path in the tests.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator, List, Sequence, Tuple

from .errors import InternalConsistencyError, InvalidInputError, ResourceLimitError
from .posets import ClusterParams

#: Degree guard for the iterated integral (degree grows like (m-1)n).
MAX_INTEGRAL_DEGREE = 6000


class RationalPoly:
    """Dense univariate polynomial with exact rational coefficients."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[Fraction | int] = ()):
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients: Tuple[Fraction, ...] = tuple(coeffs)

    @classmethod
    def constant(cls, value: Fraction | int) -> "RationalPoly":
        return cls((value,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RationalPoly) and self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __add__(self, other: "RationalPoly") -> "RationalPoly":
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RationalPoly(out)

    def __mul__(self, other: "RationalPoly | Fraction | int") -> "RationalPoly":
        if isinstance(other, (int, Fraction)):
            return RationalPoly(c * other for c in self.coefficients)
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients))
        for i, ci in enumerate(self.coefficients):
            if ci:
                for j, cj in enumerate(other.coefficients):
                    if cj:
                        out[i + j] += ci * cj
        return RationalPoly(out)

    __rmul__ = __mul__

    def evaluate(self, x: Fraction | int) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def integral_unit(self) -> Fraction:
        """Exact definite integral over [0, 1]."""
        return sum((c / (k + 1) for k, c in enumerate(self.coefficients)),
                   Fraction(0))

    def __repr__(self) -> str:
        return f"RationalPoly({list(self.coefficients)!r})"


def step_integral(g: RationalPoly, kernel_exponent: int) -> RationalPoly:
    """H(x) = integral of (x - t)^e * g(t) dt from 0 to x, exactly.

    Monomial rule: t^k maps to k! e! / (k+e+1)! * x^(k+e+1), so the degree
    rises by e + 1.
    """
    e = kernel_exponent
    if e < 0:
        raise InvalidInputError("kernel exponent must be >= 0")
    fe = math.factorial(e)
    out = [Fraction(0)] * (len(g.coefficients) + e + 1)
    for k, c in enumerate(g.coefficients):
        if c:
            out[k + e + 1] = c * Fraction(math.factorial(k) * fe,
                                          math.factorial(k + e + 1))
    return RationalPoly(out)


# ---------------------------------------------------------------------------
# fast integer pipeline (coefficients of x^k/k!)

def _weight_terms(x_exp: int, one_minus_exp: int) -> List[Tuple[int, int]]:
    """x^x_exp (1-x)^one_minus_exp expanded as [(power, integer coefficient)]."""
    return [(x_exp + r, (-1) ** r * math.comb(one_minus_exp, r))
            for r in range(one_minus_exp + 1)]


def _initial_state(terms: Sequence[Tuple[int, int]]) -> List[int]:
    top = max(s for s, _ in terms)
    c = [0] * (top + 1)
    for s, w in terms:
        c[s] += w * math.factorial(s)
    return c


def _apply_weight(c: Sequence[int], terms: Sequence[Tuple[int, int]]) -> List[int]:
    """Multiply an x^k/k!-basis polynomial by a plain integer polynomial."""
    top = max(s for s, _ in terms)
    out = [0] * (len(c) + top)
    for s, w in terms:
        if s == 0:
            for k, ck in enumerate(c):
                if ck:
                    out[k] += w * ck
        else:
            for k, ck in enumerate(c):
                if ck:
                    # (x^k/k!) * x^s = (k+s)!/k! * x^(k+s)/(k+s)!
                    out[k + s] += w * math.perm(k + s, s) * ck
    return out


def _scaled_tail_sum(coeffs: Sequence[int]) -> int:
    """Sum of c_k * (K+1)!/(k+1)! for K = deg; equals (K+1)! * integral over [0,1]."""
    total = 0
    running = 1
    for k in range(len(coeffs) - 1, -1, -1):
        if coeffs[k]:
            total += coeffs[k] * running
        running *= k + 1
    return total


def _finalize_count(coeffs: Sequence[int], divisor: int) -> int:
    total = _scaled_tail_sum(coeffs)
    count, rem = divmod(total, divisor)
    if rem != 0 or count < 0:
        raise InternalConsistencyError(
            "factorial-scaled integral is not a nonnegative integer")
    return count


def _check_degree(coeffs: Sequence[int], expected: int) -> None:
    degree = len(coeffs) - 1
    while degree >= 0 and coeffs[degree] == 0:
        degree -= 1
    if degree != expected:
        raise InternalConsistencyError(
            f"working polynomial has degree {degree}, expected {expected}")


def _normalize_variant(variant: str) -> str:
    v = str(variant).lower()
    if v not in ("p", "q"):
        raise InvalidInputError(f"variant must be 'p' or 'q', got {variant!r}")
    return v


def iter_exact_counts(m: int, a: int, b: int, variant: str = "p") -> Iterator[int]:
    """Yield the exact extension counts for n = 1, 2, 3, ... in one sweep.

    The integration state is shared between successive n, so a full sweep to
    n_max costs little more than the single largest evaluation.
    """
    ClusterParams(m, a, b, 1)  # validate (m, a, b)
    v = _normalize_variant(variant)
    fa, fb = math.factorial(a - 1), math.factorial(m - b)
    full = _weight_terms(a - 1, m - b)
    shift = b - a  # kernel exponent b-a-1, degree step e+1

    if v == "q":
        c = _initial_state(full)
        k = 0
        while True:
            k += 1
            c = _apply_weight([0] * shift + c, full)
            expected = k * (m - 1) + (a - 1) + (m - b)
            if expected > MAX_INTEGRAL_DEGREE:
                raise ResourceLimitError("iterated integral degree cap exceeded")
            _check_degree(c, expected)
            yield _finalize_count(c, (fa * fb) ** (k + 1))
    else:
        end = _weight_terms(0, m - b)
        c = _initial_state(_weight_terms(a - 1, 0))
        k = 0
        while True:
            k += 1
            shifted = [0] * shift + c
            final = _apply_weight(shifted, end)
            expected = k * (m - 1)
            if expected > MAX_INTEGRAL_DEGREE:
                raise ResourceLimitError("iterated integral degree cap exceeded")
            _check_degree(final, expected)
            yield _finalize_count(final, (fa * fb) ** k)
            c = _apply_weight(shifted, full)


def _check_degree_budget(m: int, a: int, b: int, n: int, variant: str) -> None:
    expected = (m - 1) * n + ((a - 1) + (m - b) if variant == "q" else 0)
    if expected > MAX_INTEGRAL_DEGREE:
        raise ResourceLimitError(
            f"iterated integral degree {expected} exceeds the cap "
            f"{MAX_INTEGRAL_DEGREE}")


def exact_count(params: ClusterParams, variant: str = "p") -> int:
    """Exact number of linear extensions of the chosen poset variant.

    The factorial-scaled iterated integral is divided by its weight
    normalizers; a non-integer result raises InternalConsistencyError.
    """
    v = _normalize_variant(variant)
    _check_degree_budget(params.m, params.a, params.b, params.n, v)
    it = iter_exact_counts(params.m, params.a, params.b, v)
    count = 0
    for _ in range(params.n):
        count = next(it)
    return count


def exact_count_sweep(m: int, a: int, b: int, n_max: int,
                      variant: str = "p") -> List[int]:
    """Exact counts for n = 1..n_max, sharing the integration state."""
    if n_max < 1:
        raise InvalidInputError("n_max must be >= 1")
    v = _normalize_variant(variant)
    _check_degree_budget(m, a, b, n_max, v)
    it = iter_exact_counts(m, a, b, v)
    return [next(it) for _ in range(n_max)]


def iterated_integral(params: ClusterParams, variant: str = "p") -> Fraction:
    """The raw iterated integral (factorial normalizers excluded).

    For the padded variant this is the integral over x_0 < ... < x_n of
    prod x_i^(a-1) (1-x_i)^(m-b) * prod (x_{i+1}-x_i)^(b-a-1); the plain
    variant drops the (1-x)^(m-b) factor at index 0 and the x^(a-1) factor
    at index n.
    """
    m, a, b, n = params.m, params.a, params.b, params.n
    v = _normalize_variant(variant)
    _check_degree_budget(m, a, b, n, v)
    full = _weight_terms(a - 1, m - b)
    shift = b - a

    if v == "q":
        c = _initial_state(full)
        for _ in range(n):
            c = _apply_weight([0] * shift + c, full)
        final = c
    else:
        c = _initial_state(_weight_terms(a - 1, 0))
        end = _weight_terms(0, m - b)
        for k in range(1, n + 1):
            shifted = [0] * shift + c
            if k == n:
                final = _apply_weight(shifted, end)
            else:
                c = _apply_weight(shifted, full)
    degree = len(final) - 1
    # the x^k/k! basis absorbed one 1/(b-a-1)! per kernel pass; restore it
    value = Fraction(_scaled_tail_sum(final), math.factorial(degree + 1))
    return value * Fraction(math.factorial(b - a - 1)) ** n
