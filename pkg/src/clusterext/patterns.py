"""Consecutive permutation patterns.

Permutations are plain tuples of the integers 1..m.  A pattern occurs in a
text permutation when some window of adjacent entries has the same relative
order as the pattern.  Besides the basic operators (standardization,
occurrence search, reverse/complement, the standard and non-overlapping
predicates) this module provides brute-force occurrence histograms over all
of S_n, which yield finite evidence for (strong) c-Wilf equivalence.

Equivalence results obtained here are evidence up to a stated text length,
never proofs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as _permutations
from typing import Dict, List, Sequence, Tuple

from .errors import InvalidInputError, ResourceLimitError

Pattern = Tuple[int, ...]

#: Largest text length for the n! occurrence enumerations.
MAX_TEXT_LENGTH = 10
#: Largest pattern length for the m! non-overlap census.
MAX_CENSUS_LENGTH = 11
#: Largest pattern length for whole-S_m classification (m! histogram keys).
MAX_CLASSIFY_LENGTH = 7


def standardize(word: Sequence[int]) -> Pattern:
    """Relabel distinct values order-isomorphically onto 1..m.

    >>> standardize((5, 2, 8))
    (2, 1, 3)
    >>> standardize((9, 3, 7, 4))
    (4, 1, 3, 2)
    """
    if not word:
        raise InvalidInputError("cannot standardize an empty word")
    if len(set(word)) != len(word):
        raise InvalidInputError(f"entries must be distinct: {tuple(word)!r}")
    order = sorted(range(len(word)), key=word.__getitem__)
    ranks = [0] * len(word)
    for rank, idx in enumerate(order, start=1):
        ranks[idx] = rank
    return tuple(ranks)


def as_pattern(word: Sequence[int]) -> Pattern:
    """Validate that ``word`` is a permutation of 1..m and return it as a tuple."""
    p = tuple(word)
    if not p or sorted(p) != list(range(1, len(p) + 1)):
        raise InvalidInputError(f"not a permutation of 1..m: {p!r}")
    return p


def occurrences(pattern: Sequence[int], text: Sequence[int]) -> List[int]:
    """1-based start indices of the consecutive occurrences of ``pattern`` in ``text``.

    >>> occurrences((1, 3, 2), (1, 4, 2, 5, 3))
    [1, 3]
    >>> occurrences((1, 2, 3), (1, 2, 3, 4))
    [1, 2]
    """
    p = as_pattern(pattern)
    t = as_pattern(text)
    m, n = len(p), len(t)
    return [i + 1 for i in range(n - m + 1) if _window_pattern(t[i:i + m]) == p]


def reverse(pattern: Sequence[int]) -> Pattern:
    """Read the pattern right-to-left."""
    return as_pattern(pattern)[::-1]


def complement(pattern: Sequence[int]) -> Pattern:
    """Replace each value v by m+1-v."""
    p = as_pattern(pattern)
    m = len(p)
    return tuple(m + 1 - v for v in p)


def symmetry_class(pattern: Sequence[int]) -> Tuple[Pattern, ...]:
    """The (up to four distinct) trivially equivalent patterns p, pR, pC, pRC."""
    p = as_pattern(pattern)
    variants = {p, reverse(p), complement(p), reverse(complement(p))}
    return tuple(sorted(variants))


def is_standard(pattern: Sequence[int]) -> bool:
    """True when the first entry is below the last and their sum is at most m+1."""
    p = as_pattern(pattern)
    return p[0] < p[-1] and p[0] + p[-1] <= len(p) + 1


def is_nonoverlapping(pattern: Sequence[int]) -> bool:
    """True when no proper prefix and suffix of equal length share a standardization.

    Only lengths 2..m-1 matter; length-1 ends always agree trivially.

    >>> is_nonoverlapping((1, 2, 3))
    False
    >>> is_nonoverlapping((1, 3, 2))
    True
    """
    p = as_pattern(pattern)
    m = len(p)
    if m < 2:
        raise InvalidInputError("non-overlap is defined for length >= 2")
    for i in range(2, m):
        if standardize(p[:i]) == standardize(p[m - i:]):
            return False
    return True


def nonoverlapping_fraction(m: int) -> float:
    """Fraction of non-overlapping permutations in S_m (full enumeration)."""
    if not 2 <= m <= MAX_CENSUS_LENGTH:
        raise ResourceLimitError(f"census supported for 2 <= m <= {MAX_CENSUS_LENGTH}")
    count = sum(1 for p in _permutations(range(1, m + 1)) if is_nonoverlapping(p))
    return count / math.factorial(m)


@dataclass(frozen=True)
class OccurrenceHistogram:
    """Distribution of consecutive-occurrence counts of one pattern over S_n.

    ``counts[k]`` is the number of permutations in S_n with exactly k
    occurrences; the values sum to n!.
    """

    n: int
    counts: Dict[int, int]

    def total(self) -> int:
        return sum(self.counts.values())

    def avoiders(self) -> int:
        return self.counts.get(0, 0)


def _window_pattern(window: Sequence[int]) -> Pattern:
    # rank-by-comparison; O(m^2) but branch-free and allocation-light
    return tuple(sum(1 for w in window if w < x) + 1 for x in window)


@lru_cache(maxsize=None)
def _histograms_for_length(m: int, n: int) -> Dict[Pattern, Dict[int, int]]:
    """Occurrence histograms of every length-m pattern over S_n, in one sweep."""
    if n > MAX_TEXT_LENGTH:
        raise ResourceLimitError(f"text enumeration supported for n <= {MAX_TEXT_LENGTH}")
    hist: Dict[Pattern, Dict[int, int]] = {
        p: {} for p in _permutations(range(1, m + 1))
    }
    for text in _permutations(range(1, n + 1)):
        seen: Dict[Pattern, int] = {}
        for i in range(n - m + 1):
            w = _window_pattern(text[i:i + m])
            seen[w] = seen.get(w, 0) + 1
        for p, d in hist.items():
            k = seen.get(p, 0)
            d[k] = d.get(k, 0) + 1
    return hist


def occurrence_histogram(pattern: Sequence[int], n: int) -> OccurrenceHistogram:
    """Histogram of occurrence counts of ``pattern`` over all of S_n.

    >>> occurrence_histogram((1, 2, 3), 3).counts == {0: 5, 1: 1}
    True
    """
    p = as_pattern(pattern)
    if n < 1:
        raise InvalidInputError("text length must be >= 1")
    if n > MAX_TEXT_LENGTH:
        raise ResourceLimitError(f"text enumeration supported for n <= {MAX_TEXT_LENGTH}")
    return OccurrenceHistogram(n, dict(_histograms_for_length(len(p), n)[p]))


def cwilf_evidence(p: Sequence[int], q: Sequence[int], n_max: int,
                   strong: bool = True) -> bool:
    """Bounded-evidence comparison of two same-length patterns.

    With ``strong`` the full occurrence histograms must agree for every
    n = 1..n_max; otherwise only the avoider counts (k = 0) are compared.
    A True result is evidence up to n_max, not a proof of equivalence.
    """
    pp, qq = as_pattern(p), as_pattern(q)
    if len(pp) != len(qq):
        raise InvalidInputError("patterns must have the same length")
    if n_max > MAX_TEXT_LENGTH:
        raise ResourceLimitError(f"text enumeration supported for n <= {MAX_TEXT_LENGTH}")
    m = len(pp)
    for n in range(1, n_max + 1):
        hist = _histograms_for_length(m, n)
        hp, hq = hist[pp], hist[qq]
        if strong:
            if hp != hq:
                return False
        elif hp.get(0, 0) != hq.get(0, 0):
            return False
    return True


def evidence_classes(m: int, n_max: int, strong: bool = True) -> List[List[Pattern]]:
    """Partition S_m by histogram evidence up to text length ``n_max``.

    Classes are keyed on the full sequence of histograms (strong) or the
    avoider counts (weak) for n = 1..n_max, then sorted lexicographically.
    """
    if m < 1:
        raise InvalidInputError("pattern length must be >= 1")
    if m > MAX_CLASSIFY_LENGTH:
        raise ResourceLimitError(
            f"classification supported for m <= {MAX_CLASSIFY_LENGTH}")
    if n_max > MAX_TEXT_LENGTH:
        raise ResourceLimitError(f"text enumeration supported for n <= {MAX_TEXT_LENGTH}")
    keys: Dict[Pattern, tuple] = {p: () for p in _permutations(range(1, m + 1))}
    for n in range(1, n_max + 1):
        hist = _histograms_for_length(m, n)
        for p in keys:
            h = hist[p]
            sig = tuple(sorted(h.items())) if strong else h.get(0, 0)
            keys[p] = keys[p] + (sig,)
    groups: Dict[tuple, List[Pattern]] = {}
    for p, key in keys.items():
        groups.setdefault(key, []).append(p)
    return sorted(sorted(g) for g in groups.values())
