import math
from fractions import Fraction

import pytest

from clusterext.errors import InvalidInputError
from clusterext.exact_counts import (RationalPoly, exact_count,
                                     exact_count_sweep, iter_exact_counts,
                                     iterated_integral, step_integral)
from clusterext.posets import (ClusterParams, cluster_poset,
                               count_linear_extensions_bruteforce,
                               modified_cluster_poset)

F = Fraction


def reference_integral(params, variant):
    """Independent slow route: raw kernels and weights on RationalPoly.

    Builds the iterated integral directly from step_integral and polynomial
    products, with no factorial bookkeeping anywhere.
    """
    m, a, b, n = params.m, params.a, params.b, params.n
    e = b - a - 1

    def weight(x_exp, one_exp):
        poly = RationalPoly([1])
        poly = poly * RationalPoly([0] * x_exp + [1])
        onemx = RationalPoly([1, -1])
        for _ in range(one_exp):
            poly = poly * onemx
        return poly

    if variant == "q":
        current = weight(a - 1, m - b)
        for _ in range(n):
            current = step_integral(current, e) * weight(a - 1, m - b)
    else:
        current = weight(a - 1, 0)
        for k in range(1, n + 1):
            stepped = step_integral(current, e)
            current = stepped * (weight(0, m - b) if k == n
                                 else weight(a - 1, m - b))
    return current.integral_unit()


def test_rational_poly_basics():
    p = RationalPoly([1, 0, F(1, 2), 0])  # trailing zero trimmed
    assert p.degree == 2
    assert p.coefficients == (F(1), F(0), F(1, 2))
    q = RationalPoly([0, 1])
    assert (p + q).coefficients == (F(1), F(1), F(1, 2))
    assert (q * q).coefficients == (F(0), F(0), F(1))
    assert (2 * q).coefficients == (F(0), F(2))
    assert p.evaluate(F(2)) == F(1) + F(1, 2) * 4
    assert q.integral_unit() == F(1, 2)
    assert RationalPoly([]).degree == -1


def test_step_integral_examples():
    one = RationalPoly([1])
    t = RationalPoly([0, 1])
    assert step_integral(one, 0) == RationalPoly([0, 1])            # x
    assert step_integral(one, 1) == RationalPoly([0, 0, F(1, 2)])   # x^2/2
    assert step_integral(t, 1) == RationalPoly([0, 0, 0, F(1, 6)])  # x^3/6
    with pytest.raises(InvalidInputError):
        step_integral(one, -1)


def test_step_integral_degree_bump():
    g = RationalPoly([1, 2, 3])
    for e in range(4):
        assert step_integral(g, e).degree == g.degree + e + 1


def test_iterated_integral_examples():
    assert iterated_integral(ClusterParams(3, 1, 2, 1), "p") == F(1, 6)
    assert iterated_integral(ClusterParams(3, 1, 2, 2), "p") == F(1, 40)
    assert iterated_integral(ClusterParams(3, 1, 2, 1), "q") == F(1, 8)


def test_iterated_integral_matches_reference_route():
    for (m, a, b) in [(3, 1, 2), (4, 1, 3), (4, 2, 3), (5, 2, 4), (5, 1, 4)]:
        for n in range(1, 4):
            params = ClusterParams(m, a, b, n)
            for variant in ("p", "q"):
                assert (iterated_integral(params, variant)
                        == reference_integral(params, variant)), (m, a, b, n, variant)


def test_exact_count_examples():
    assert exact_count(ClusterParams(3, 1, 2, 2), "p") == 3
    assert exact_count(ClusterParams(3, 1, 2, 2), "q") == 15
    for m in range(2, 8):
        for n in (1, 3, 9):
            assert exact_count(ClusterParams(m, 1, m, n), "p") == 1


def test_exact_count_worked_values():
    # frozen from the brute-force oracle
    assert exact_count(ClusterParams(4, 1, 2, 2), "p") == 10
    assert exact_count(ClusterParams(4, 2, 3, 2), "p") == 9
    assert exact_count(ClusterParams(4, 1, 3, 2), "p") == 4
    assert exact_count(ClusterParams(3, 1, 2, 4), "p") == 105
    assert exact_count(ClusterParams(4, 1, 3, 2), "q") == 28


def test_exact_count_matches_bruteforce_everywhere_small():
    # every parameter set with m <= 7 and every n keeping the padded poset
    # within 20 elements: both variants agree with the order-ideal oracle
    checked = 0
    for m in range(2, 8):
        for a in range(1, m):
            for b in range(a + 1, m + 1):
                n = 1
                while (m - 1) * n + m - b + a <= 20:
                    params = ClusterParams(m, a, b, n)
                    assert exact_count(params, "p") == \
                        count_linear_extensions_bruteforce(cluster_poset(params))
                    assert exact_count(params, "q") == \
                        count_linear_extensions_bruteforce(
                            modified_cluster_poset(params))
                    checked += 1
                    n += 1
    assert checked > 200


def test_count_equals_normalized_integral():
    # the documented bridge between the two public surfaces: the factorial
    # of the poset size times the raw integral, divided by the per-chain
    # weight and kernel factorials, is exactly the count
    for (m, a, b, n) in [(3, 1, 2, 3), (5, 2, 4, 2), (6, 2, 5, 2), (4, 1, 3, 4)]:
        params = ClusterParams(m, a, b, n)
        fa = math.factorial(a - 1)
        fb = math.factorial(m - b)
        fe = math.factorial(b - a - 1)
        value_q = (math.factorial(params.q_size) * iterated_integral(params, "q")
                   / (fa ** (n + 1) * fb ** (n + 1) * fe ** n))
        value_p = (math.factorial(params.p_size) * iterated_integral(params, "p")
                   / (fa ** n * fb ** n * fe ** n))
        assert value_q == exact_count(params, "q")
        assert value_p == exact_count(params, "p")


def test_exact_count_symmetry():
    for (m, a, b) in [(5, 1, 3), (6, 2, 4), (7, 2, 5), (8, 3, 5)]:
        for n in (1, 2, 5, 11):
            lhs = exact_count(ClusterParams(m, a, b, n), "p")
            rhs = exact_count(ClusterParams(m, m + 1 - b, m + 1 - a, n), "p")
            assert lhs == rhs


def test_counts_nondecreasing_in_n():
    for (m, a, b) in [(3, 1, 2), (5, 2, 4), (6, 1, 4)]:
        counts = exact_count_sweep(m, a, b, 12, "p")
        assert all(x <= y for x, y in zip(counts, counts[1:]))


def test_sweep_matches_single_calls():
    sweep_p = exact_count_sweep(5, 2, 4, 6, "p")
    sweep_q = exact_count_sweep(5, 2, 4, 6, "q")
    for n in range(1, 7):
        assert sweep_p[n - 1] == exact_count(ClusterParams(5, 2, 4, n), "p")
        assert sweep_q[n - 1] == exact_count(ClusterParams(5, 2, 4, n), "q")


def test_generator_is_lazy_and_consistent():
    it = iter_exact_counts(3, 1, 2, "p")
    assert [next(it) for _ in range(4)] == [1, 3, 15, 105]


def test_variant_validation():
    with pytest.raises(InvalidInputError):
        exact_count(ClusterParams(3, 1, 2, 1), "x")
    with pytest.raises(InvalidInputError):
        exact_count_sweep(3, 1, 2, 0, "p")


def test_degree_budget_raises_upfront():
    from clusterext.errors import ResourceLimitError

    with pytest.raises(ResourceLimitError):
        exact_count(ClusterParams(8, 3, 5, 10_000), "p")
    with pytest.raises(ResourceLimitError):
        iterated_integral(ClusterParams(8, 3, 5, 10_000), "q")


@pytest.mark.slow
def test_large_case_budget_and_symmetry():
    # degree ~ 707 at (8,3,5,100); must run well within a few minutes
    counts = exact_count_sweep(8, 3, 5, 100, "p")
    mirror = exact_count_sweep(8, 4, 6, 100, "p")
    assert counts == mirror
    assert len(str(counts[-1])) > 900
