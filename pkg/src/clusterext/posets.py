"""Finite posets built from glued chains, and an exact brute-force extension counter.

The family studied here glues n chains of length m so that the b-th element
of each chain is the a-th element of the next.  A modified variant pads the
first and last chain with short boundary chains so that every glue element
carries the same weight profile.  Both are ordinary finite posets; the
brute-force counter below works for any poset of at most 24 elements and is
the independent oracle for the integral-based counts in
:mod:`clusterext.exact_counts`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Sequence, Tuple

from .errors import InvalidInputError, ResourceLimitError

#: Cap for the order-ideal dynamic program (bitmask-indexed).
MAX_BRUTEFORCE_ELEMENTS = 24


@dataclass(frozen=True)
class ClusterParams:
    """Parameters (m, a, b, n) of a glued-chain poset, with 1 <= a < b <= m, n >= 1."""

    m: int
    a: int
    b: int
    n: int

    def __post_init__(self) -> None:
        for name in ("m", "a", "b", "n"):
            v = getattr(self, name)
            if not isinstance(v, int):
                raise InvalidInputError(f"{name} must be an integer, got {v!r}")
        if not (1 <= self.a < self.b <= self.m):
            raise InvalidInputError(
                f"need 1 <= a < b <= m, got a={self.a}, b={self.b}, m={self.m}")
        if self.n < 1:
            raise InvalidInputError(f"need n >= 1, got n={self.n}")

    @property
    def d(self) -> int:
        """Gap b - a between the two glue positions."""
        return self.b - self.a

    @property
    def leading(self) -> int:
        """Exponent m - b + a - 1 of the leading n log n growth term."""
        return self.m - self.b + self.a - 1

    @property
    def p_size(self) -> int:
        return (self.m - 1) * self.n + 1

    @property
    def q_size(self) -> int:
        return (self.m - 1) * self.n + self.m - self.b + self.a


class FinitePoset:
    """Immutable finite poset given by labeled elements and cover relations.

    Covers are pairs of element indices (x, y) meaning x is covered by y.
    Construction validates acyclicity; the full order relation is derived
    lazily as bitmask up-sets.
    """

    __slots__ = ("labels", "covers", "_index", "__dict__")

    def __init__(self, labels: Sequence[str], covers: Iterable[Tuple[int, int]]):
        self.labels: Tuple[str, ...] = tuple(labels)
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise InvalidInputError("element labels must be distinct")
        cov = sorted(set((int(x), int(y)) for x, y in covers))
        for x, y in cov:
            if not (0 <= x < n and 0 <= y < n):
                raise InvalidInputError(f"cover ({x},{y}) out of range")
            if x == y:
                raise InvalidInputError(f"self-loop at element {x}")
        self.covers: Tuple[Tuple[int, int], ...] = tuple(cov)
        self._index: Dict[str, int] = {lab: i for i, lab in enumerate(self.labels)}
        self.topological_order()  # raises on cycles

    def __len__(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        return self._index[label]

    @cached_property
    def _children(self) -> Tuple[Tuple[int, ...], ...]:
        adj: List[List[int]] = [[] for _ in self.labels]
        for x, y in self.covers:
            adj[x].append(y)
        return tuple(tuple(a) for a in adj)

    def topological_order(self) -> Tuple[int, ...]:
        """Deterministic linear extension: Kahn's algorithm, smallest index first."""
        import heapq

        n = len(self.labels)
        indeg = [0] * n
        for _, y in self.covers:
            indeg[y] += 1
        heap = [i for i in range(n) if indeg[i] == 0]
        heapq.heapify(heap)
        out: List[int] = []
        while heap:
            x = heapq.heappop(heap)
            out.append(x)
            for y in self._children[x]:
                indeg[y] -= 1
                if indeg[y] == 0:
                    heapq.heappush(heap, y)
        if len(out) != n:
            raise InvalidInputError("cover relations contain a cycle")
        return tuple(out)

    @cached_property
    def strict_upsets(self) -> Tuple[int, ...]:
        """Bitmask of the elements strictly above each element."""
        n = len(self.labels)
        up = [0] * n
        for x in reversed(self.topological_order()):
            acc = 0
            for y in self._children[x]:
                acc |= (1 << y) | up[y]
            up[x] = acc
        return tuple(up)

    def less(self, x: int, y: int) -> bool:
        """Strict order comparison."""
        return (self.strict_upsets[x] >> y) & 1 == 1

    def less_matrix(self) -> List[bytes]:
        """Row-major strict-order lookup table; row[x][y] == 1 iff x < y."""
        n = len(self.labels)
        rows = []
        for x in range(n):
            mask = self.strict_upsets[x]
            rows.append(bytes((mask >> y) & 1 for y in range(n)))
        return rows


def _canonical_key(i: int, j: int, a: int, b: int) -> Tuple[int, int]:
    # the shared element of chains i-1 and i keeps the lower chain's label (i-1, b)
    return (i - 1, b) if (j == a and i > 1) else (i, j)


def _label(key: Tuple[int, int]) -> str:
    return f"A({key[0]},{key[1]})"


def cluster_poset(params: ClusterParams) -> FinitePoset:
    """The poset of n length-m chains glued at positions b -> a.

    Elements are A(i,j) for 1 <= i <= n, 1 <= j <= m with A(i,b) = A(i+1,a);
    relations are generated by A(i,1) <= ... <= A(i,m).  Size (m-1)n + 1.
    """
    m, a, b, n = params.m, params.a, params.b, params.n
    index: Dict[Tuple[int, int], int] = {}
    labels: List[str] = []
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            key = _canonical_key(i, j, a, b)
            if key not in index:
                index[key] = len(labels)
                labels.append(_label(key))
    covers = []
    for i in range(1, n + 1):
        for j in range(1, m):
            covers.append((index[_canonical_key(i, j, a, b)],
                           index[_canonical_key(i, j + 1, a, b)]))
    poset = FinitePoset(labels, covers)
    if len(poset) != params.p_size:
        raise InvalidInputError("internal size mismatch in cluster_poset")
    return poset


def modified_cluster_poset(params: ClusterParams) -> FinitePoset:
    """The padded variant: adds a chain A(0,b+1..m) above the first glue element
    and a chain A(n+1,1..a-1) below the last one.  Size (m-1)n + m - b + a.
    """
    m, a, b, n = params.m, params.a, params.b, params.n
    base = cluster_poset(params)
    labels = list(base.labels)
    covers = list(base.covers)
    index = {lab: i for i, lab in enumerate(labels)}

    prev = index[_label((1, a))]
    for j in range(b + 1, m + 1):
        index[_label((0, j))] = len(labels)
        labels.append(_label((0, j)))
        covers.append((prev, index[_label((0, j))]))
        prev = index[_label((0, j))]

    below = []
    for j in range(1, a):
        index[_label((n + 1, j))] = len(labels)
        labels.append(_label((n + 1, j)))
        below.append(index[_label((n + 1, j))])
    for x, y in zip(below, below[1:]):
        covers.append((x, y))
    if below:
        covers.append((below[-1], index[_label((n, b))]))

    poset = FinitePoset(labels, covers)
    if len(poset) != params.q_size:
        raise InvalidInputError("internal size mismatch in modified_cluster_poset")
    return poset


def glue_labels(params: ClusterParams) -> List[str]:
    """Labels of the glue elements X_0..X_n (X_0 = A(1,a), X_i = A(i,b) for i >= 1)."""
    return [_label((1, params.a))] + [_label((i, params.b))
                                      for i in range(1, params.n + 1)]


def count_linear_extensions_bruteforce(poset: FinitePoset) -> int:
    """Exact number of linear extensions via dynamic programming over down-sets.

    Counts maximal chains in the lattice of order ideals; memoized on the
    ideal bitmask.  Limited to MAX_BRUTEFORCE_ELEMENTS elements.
    """
    n = len(poset)
    if n > MAX_BRUTEFORCE_ELEMENTS:
        raise ResourceLimitError(
            f"brute-force counting supports at most {MAX_BRUTEFORCE_ELEMENTS} elements")
    if n == 0:
        return 1
    up = poset.strict_upsets
    memo: Dict[int, int] = {0: 1}

    def count(mask: int) -> int:
        cached = memo.get(mask)
        if cached is not None:
            return cached
        total = 0
        mm = mask
        while mm:
            low = mm & -mm
            mm ^= low
            x = low.bit_length() - 1
            if up[x] & mask == 0:  # x is maximal in the ideal
                total += count(mask ^ low)
        memo[mask] = total
        return total

    return count((1 << n) - 1)


def sandwich_check(params: ClusterParams) -> bool:
    """Exact-integer check that the padded count sits between the plain count
    and |Q|^(m-b+a-1) times it."""
    from . import exact_counts  # deferred: exact_counts imports ClusterParams

    e_p = exact_counts.exact_count(params, "p")
    e_q = exact_counts.exact_count(params, "q")
    return e_p <= e_q <= params.q_size ** params.leading * e_p


def poset_to_dot(poset: FinitePoset, name: str = "poset") -> str:
    """Hasse diagram as DOT text (edges point from lower to upper covers)."""
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for i, lab in enumerate(poset.labels):
        lines.append(f'  n{i} [label="{lab}"];')
    for x, y in poset.covers:
        lines.append(f"  n{x} -> n{y};")
    lines.append("}")
    return "\n".join(lines) + "\n"
