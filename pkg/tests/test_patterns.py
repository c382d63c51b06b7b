import math
import random
from fractions import Fraction
from itertools import permutations

import pytest

from clusterext import patterns
from clusterext.errors import InvalidInputError, ResourceLimitError


def test_standardize_examples():
    assert patterns.standardize((5, 2, 8)) == (2, 1, 3)
    assert patterns.standardize((1, 2, 3)) == (1, 2, 3)
    assert patterns.standardize((9, 3, 7, 4)) == (4, 1, 3, 2)


def test_standardize_idempotent():
    rng = random.Random(11)
    for _ in range(200):
        k = rng.randint(1, 9)
        word = tuple(rng.sample(range(1, 100), k))
        once = patterns.standardize(word)
        assert patterns.standardize(once) == once


def test_standardize_rejects_duplicates():
    with pytest.raises(InvalidInputError):
        patterns.standardize((3, 3, 1))
    with pytest.raises(InvalidInputError):
        patterns.standardize(())


def test_occurrences_examples():
    assert patterns.occurrences((1, 3, 2), (1, 4, 2, 5, 3)) == [1, 3]
    assert patterns.occurrences((1, 2), (2, 1)) == []
    assert patterns.occurrences((1, 2, 3), (1, 2, 3, 4)) == [1, 2]
    # pattern longer than text: no occurrences, not an error
    assert patterns.occurrences((1, 2, 3), (1, 2)) == []


def test_reverse_complement_examples():
    assert patterns.reverse((1, 3, 4, 2)) == (2, 4, 3, 1)
    assert patterns.complement((1, 3, 4, 2)) == (4, 2, 1, 3)
    assert patterns.reverse(patterns.complement((1, 3, 4, 2))) == (3, 1, 2, 4)


def test_reverse_complement_involutions_commute():
    for m in range(1, 7):
        for p in permutations(range(1, m + 1)):
            assert patterns.reverse(patterns.reverse(p)) == p
            assert patterns.complement(patterns.complement(p)) == p
            assert (patterns.reverse(patterns.complement(p))
                    == patterns.complement(patterns.reverse(p)))


def test_is_standard_examples():
    assert patterns.is_standard((1, 3, 4, 2))
    assert not patterns.is_standard((2, 3, 1))
    assert patterns.is_standard((1, 4, 3, 2))


def test_standard_representative_in_symmetry_class():
    # at least one of p, pR, pC, pRC is standard; exactly one when
    # p1 != pm and p1 + pm != m + 1
    for m in range(2, 7):
        for p in permutations(range(1, m + 1)):
            variants = [p, patterns.reverse(p), patterns.complement(p),
                        patterns.reverse(patterns.complement(p))]
            standard = [v for v in variants if patterns.is_standard(v)]
            assert standard, p
            if p[0] != p[-1] and p[0] + p[-1] != m + 1:
                assert len(set(standard)) == 1, p


def test_is_nonoverlapping_examples():
    assert not patterns.is_nonoverlapping((1, 2, 3))
    assert patterns.is_nonoverlapping((1, 3, 4, 2))
    assert patterns.is_nonoverlapping((1, 3, 2))
    assert patterns.is_nonoverlapping((1, 2))  # nothing to check
    with pytest.raises(InvalidInputError):
        patterns.is_nonoverlapping((1,))


def test_nonoverlapping_fraction_small():
    assert patterns.nonoverlapping_fraction(2) == 1.0
    assert patterns.nonoverlapping_fraction(3) == pytest.approx(4 / 6)
    # frozen values from direct enumeration
    assert patterns.nonoverlapping_fraction(4) == pytest.approx(Fraction(12, 24))
    assert patterns.nonoverlapping_fraction(5) == pytest.approx(Fraction(48, 120))
    assert patterns.nonoverlapping_fraction(6) == pytest.approx(Fraction(280, 720))
    assert patterns.nonoverlapping_fraction(7) == pytest.approx(Fraction(1864, 5040))


def test_nonoverlapping_fraction_range_errors():
    with pytest.raises(ResourceLimitError):
        patterns.nonoverlapping_fraction(1)
    with pytest.raises(ResourceLimitError):
        patterns.nonoverlapping_fraction(12)


@pytest.mark.slow
def test_nonoverlapping_fraction_limit_diagnostic():
    assert abs(patterns.nonoverlapping_fraction(10) - 0.36409) < 0.02


def test_occurrence_histogram_examples():
    assert patterns.occurrence_histogram((1, 2, 3), 3).counts == {0: 5, 1: 1}
    assert patterns.occurrence_histogram((1, 2), 2).counts == {0: 1, 1: 1}


def test_occurrence_histogram_totals():
    rng = random.Random(5)
    for _ in range(20):
        m = rng.randint(2, 4)
        n = rng.randint(1, 7)
        p = tuple(rng.sample(range(1, m + 1), m))
        hist = patterns.occurrence_histogram(p, n)
        assert hist.total() == math.factorial(n)
        assert all(k >= 0 and v >= 0 for k, v in hist.counts.items())


def test_occurrence_histogram_resource_error():
    with pytest.raises(ResourceLimitError):
        patterns.occurrence_histogram((1, 2), 11)


def test_histogram_symmetries_small():
    for p in permutations(range(1, 4)):
        for n in range(1, 7):
            h = patterns.occurrence_histogram(p, n).counts
            assert h == patterns.occurrence_histogram(patterns.reverse(p), n).counts
            assert h == patterns.occurrence_histogram(patterns.complement(p), n).counts


def test_cwilf_evidence_examples():
    assert patterns.cwilf_evidence((1, 3, 4, 2), (1, 4, 3, 2), 7, strong=True)
    # avoidance counts differ at n = 4 (17 vs 16 avoiders)
    assert not patterns.cwilf_evidence((1, 2, 3), (1, 3, 2), 5, strong=False)
    assert patterns.occurrence_histogram((1, 2, 3), 4).avoiders() == 17
    assert patterns.occurrence_histogram((1, 3, 2), 4).avoiders() == 16


def test_cwilf_evidence_reverse_always_strong():
    for p in permutations(range(1, 5)):
        assert patterns.cwilf_evidence(p, patterns.reverse(p), 7, strong=True)


def test_cwilf_evidence_validation():
    with pytest.raises(InvalidInputError):
        patterns.cwilf_evidence((1, 2, 3), (1, 2), 5)
    with pytest.raises(ResourceLimitError):
        patterns.cwilf_evidence((1, 2), (2, 1), 11)


def test_evidence_classes_s3():
    classes = patterns.evidence_classes(3, 6)
    assert classes == [
        [(1, 2, 3), (3, 2, 1)],
        [(1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2)],
    ]


def test_evidence_classes_resource_guard():
    with pytest.raises(ResourceLimitError):
        patterns.evidence_classes(8, 5)
