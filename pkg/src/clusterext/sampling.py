"""Uniform random linear extensions via lazy adjacent transpositions.

One chain step picks a position uniformly and, with probability 1/2, swaps
the adjacent pair there when the two elements are incomparable.  The walk is
lazy (aperiodic), irreducible on the set of linear extensions, and symmetric,
so its stationary distribution is uniform.  Mixing is governed by the known
cubic bound for this chain, hence the default burn-in of |P|^3 ln |P| steps
and thinning of |P|^2 steps between recorded samples.

The height experiment records, for each glue element X_i of a glued-chain
poset, the fraction of the other elements that precede it; for large n these
fractions concentrate around the limit profile of
:mod:`clusterext.profiles` evaluated at (i+1)/(n+2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from .errors import InvalidInputError
from .posets import ClusterParams, FinitePoset, cluster_poset, glue_labels
from .profiles import limit_profile

_CHUNK = 1 << 15


def default_burnin(size: int) -> int:
    """ceil(|P|^3 ln |P|), the default number of discarded initial steps."""
    if size <= 1:
        return 0
    return math.ceil(size ** 3 * math.log(size))


def default_thinning(size: int) -> int:
    """|P|^2 steps between recorded samples."""
    return max(1, size * size)


class ExtensionChain:
    """Mutable Markov-chain state over the linear extensions of a poset.

    Deterministic given (poset, seed): one PCG64 stream drives every step.
    ``validate=True`` re-checks the extension property after every step and
    is meant for tests on small posets.
    """

    def __init__(self, poset: FinitePoset, seed: int, validate: bool = False):
        self.poset = poset
        self.order: List[int] = list(poset.topological_order())
        self.position: List[int] = [0] * len(poset)
        for idx, elem in enumerate(self.order):
            self.position[elem] = idx
        self._less = poset.less_matrix()
        self._rng = np.random.default_rng(seed)
        self.validate = validate

    def run(self, steps: int) -> None:
        """Advance the chain by ``steps`` lazy adjacent-transposition moves."""
        if steps < 0:
            raise InvalidInputError("step count must be >= 0")
        size = len(self.order)
        if size < 2:
            return
        order = self.order
        position = self.position
        less = self._less
        span = 2 * (size - 1)  # position choice and lazy coin drawn together
        remaining = steps
        while remaining > 0:
            chunk = min(remaining, _CHUNK)
            draws = self._rng.integers(0, span, size=chunk).tolist()
            for r in draws:
                if r & 1:
                    j = r >> 1
                    u = order[j]
                    v = order[j + 1]
                    if not less[u][v]:
                        order[j] = v
                        order[j + 1] = u
                        position[u] = j + 1
                        position[v] = j
                if self.validate:
                    self._assert_valid()
            remaining -= chunk

    def _assert_valid(self) -> None:
        for x, y in self.poset.covers:
            if self.position[x] > self.position[y]:
                raise InvalidInputError("chain state is not a linear extension")

    def state(self) -> Tuple[int, ...]:
        return tuple(self.order)


def sample_linear_extension(poset: FinitePoset, steps: int,
                            seed: int) -> Tuple[int, ...]:
    """Final state after ``steps`` chain moves from the canonical start order.

    Returns element indices in order; deterministic given (poset, steps, seed).
    """
    chain = ExtensionChain(poset, seed)
    chain.run(steps)
    return chain.state()


def enumerate_linear_extensions(poset: FinitePoset,
                                limit: Optional[int] = None) -> List[Tuple[int, ...]]:
    """All linear extensions by backtracking; optional cap on the count."""
    n = len(poset)
    indeg = [0] * n
    children: List[List[int]] = [[] for _ in range(n)]
    for x, y in poset.covers:
        indeg[y] += 1
        children[x].append(y)
    out: List[Tuple[int, ...]] = []
    prefix: List[int] = []
    available = sorted(i for i in range(n) if indeg[i] == 0)

    def backtrack(avail: List[int]) -> bool:
        if limit is not None and len(out) >= limit:
            return False
        if len(prefix) == n:
            out.append(tuple(prefix))
            return limit is None or len(out) < limit
        for x in list(avail):
            nxt = [y for y in avail if y != x]
            opened = []
            for y in children[x]:
                indeg[y] -= 1
                if indeg[y] == 0:
                    opened.append(y)
            prefix.append(x)
            keep_going = backtrack(sorted(nxt + opened))
            prefix.pop()
            for y in children[x]:
                indeg[y] += 1
            if not keep_going:
                return False
        return True

    backtrack(available)
    return out


def sample_distribution(poset: FinitePoset, num_samples: int, thinning: int,
                        burnin: int, seed: int) -> Dict[Tuple[int, ...], int]:
    """Empirical distribution over extensions from one thinned chain."""
    if num_samples < 1 or thinning < 1 or burnin < 0:
        raise InvalidInputError("need num_samples >= 1, thinning >= 1, burnin >= 0")
    chain = ExtensionChain(poset, seed)
    chain.run(burnin)
    counts: Dict[Tuple[int, ...], int] = {}
    for _ in range(num_samples):
        chain.run(thinning)
        state = chain.state()
        counts[state] = counts.get(state, 0) + 1
    return counts


@dataclass(frozen=True)
class HeightProfile:
    """Mean normalized heights of the glue elements, with the limit reference.

    mean_heights[i] is the sample mean over the recorded draws of the
    fraction of the other elements preceding X_i; reference[i] is the limit
    profile at (i+1)/(n+2).
    """

    params: ClusterParams
    mean_heights: np.ndarray
    reference: np.ndarray
    samples: int
    burnin: int
    thinning: int
    seed: int


def height_profile(params: ClusterParams, samples: int,
                   burnin: Optional[int] = None,
                   thinning: Optional[int] = None,
                   seed: int = 0) -> HeightProfile:
    """Estimate the mean normalized height of each glue element by MCMC."""
    if samples < 1:
        raise InvalidInputError("need samples >= 1")
    poset = cluster_poset(params)
    size = len(poset)
    if burnin is None:
        burnin = default_burnin(size)
    if thinning is None:
        thinning = default_thinning(size)
    if burnin < 0 or thinning < 1:
        raise InvalidInputError("need burnin >= 0 and thinning >= 1")
    glue = [poset.index(lab) for lab in glue_labels(params)]

    chain = ExtensionChain(poset, seed)
    chain.run(burnin)
    totals = np.zeros(len(glue), dtype=float)
    for _ in range(samples):
        chain.run(thinning)
        totals += [chain.position[x] for x in glue]
    mean_heights = totals / (samples * (size - 1))
    n = params.n
    reference = np.array([limit_profile(params.m, params.a, params.b,
                                        (i + 1) / (n + 2))
                          for i in range(n + 1)])
    return HeightProfile(params, mean_heights, reference,
                         samples, burnin, thinning, seed)


@dataclass(frozen=True)
class ConcentrationReport:
    """Per-element deviations of the sampled heights from the limit profile."""

    params: ClusterParams
    rows: Tuple[Tuple[int, float, float, float], ...]
    max_deviation: float
    mean_deviation: float


def concentration_report(profile: HeightProfile) -> ConcentrationReport:
    """Aggregate a height profile into per-index and summary deviations."""
    rows = []
    for i, (mh, ref) in enumerate(zip(profile.mean_heights, profile.reference)):
        rows.append((i, float(mh), float(ref), abs(float(mh) - float(ref))))
    deviations = [r[3] for r in rows]
    return ConcentrationReport(profile.params, tuple(rows),
                               max(deviations), sum(deviations) / len(deviations))


def height_profile_csv(profile: HeightProfile) -> str:
    """CSV export with columns i, mean_height, reference_f, abs_deviation."""
    report = concentration_report(profile)
    lines = ["i,mean_height,reference_f,abs_deviation"]
    for i, mh, ref, dev in report.rows:
        lines.append(f"{i},{mh:.12g},{ref:.12g},{dev:.12g}")
    return "\n".join(lines) + "\n"
