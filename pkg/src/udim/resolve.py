"""Resolving sets and partitions: representations, checkers, exact solvers.

The checkers are deliberately simple and independent of the solvers; every
construction in the package is post-verified through them.  The exact
partition-dimension solver enumerates unordered set partitions with exactly
t blocks as restricted-growth strings (resolvability is invariant under
reordering blocks, so unordered enumeration is sound) and evaluates them in
vectorized batches.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import InvalidPartitionError, SolverCapError
from .graphs import DistanceMatrix

DEFAULT_DIM_CAP = 16
DEFAULT_PD_CAP = 12

# Full restricted-growth-string arrays are cached per (n, t) because the
# enumeration is graph independent; the budget keeps the cache modest.
_RGS_CACHE: dict[tuple[int, int], np.ndarray] = {}
_RGS_CACHE_BUDGET = 192 * 1024 * 1024
_VECTOR_ROW_LIMIT = 4_000_000
_CHUNK = 8192
_SENTINEL = np.int16(32000)


@dataclass(frozen=True)
class OrderedPartition:
    """An ordered partition of the vertex set 0..n-1 into nonempty parts."""

    parts: tuple[frozenset[int], ...]

    @property
    def t(self) -> int:
        return len(self.parts)

    @property
    def n(self) -> int:
        return sum(len(p) for p in self.parts)

    def to_lists(self) -> list[list[int]]:
        return [sorted(p) for p in self.parts]

    @classmethod
    def from_parts(cls, parts: Iterable[Iterable[int]]) -> "OrderedPartition":
        frozen = tuple(frozenset(p) for p in parts)
        if not frozen or any(not p for p in frozen):
            raise InvalidPartitionError("parts must be nonempty")
        total = sum(len(p) for p in frozen)
        union = frozenset().union(*frozen)
        if len(union) != total:
            raise InvalidPartitionError("parts overlap")
        if union != frozenset(range(total)):
            raise InvalidPartitionError(
                f"parts must cover exactly the vertex ids 0..{total - 1}"
            )
        return cls(parts=frozen)


@dataclass(frozen=True)
class ResolutionWitness:
    """Outcome of a resolving check; twins holds an offending pair on failure."""

    resolving: bool
    twins: tuple[int, int] | None = None


def _check_partition_shape(dm: DistanceMatrix, p: OrderedPartition) -> None:
    n = len(dm)
    union: set[int] = set()
    total = 0
    for part in p.parts:
        if not part:
            raise InvalidPartitionError("parts must be nonempty")
        union.update(part)
        total += len(part)
    if total != len(union):
        raise InvalidPartitionError("parts overlap")
    if union != set(range(n)):
        raise InvalidPartitionError(
            f"partition covers {sorted(union)} but the graph has vertices 0..{n - 1}"
        )


def partition_representation(
    dm: DistanceMatrix, p: OrderedPartition, v: int
) -> tuple[int, ...]:
    """The vector of distances from v to each part, in part order."""
    n = len(dm)
    if not 0 <= v < n:
        raise InvalidPartitionError(f"vertex {v} outside 0..{n - 1}")
    _check_partition_shape(dm, p)
    row = dm[v]
    return tuple(min(row[u] for u in part) for part in p.parts)


def set_representation(
    dm: DistanceMatrix, landmarks: Sequence[int], v: int
) -> tuple[int, ...]:
    """The vector of distances from v to each landmark, in the given order."""
    row = dm[v]
    return tuple(row[u] for u in landmarks)


def _first_twin(vectors: Sequence[tuple[int, ...]]) -> tuple[int, int]:
    n = len(vectors)
    for u in range(n):
        vu = vectors[u]
        for v in range(u + 1, n):
            if vu == vectors[v]:
                return (u, v)
    raise AssertionError("no twin pair found although vectors collide")


def check_resolving_partition(dm: DistanceMatrix, p: OrderedPartition) -> ResolutionWitness:
    """Decide whether the partition resolves the graph of this distance matrix.

    On failure the lexicographically first pair with equal representations is
    reported.
    """
    _check_partition_shape(dm, p)
    n = len(dm)
    parts = [tuple(part) for part in p.parts]
    vectors = []
    for v in range(n):
        row = dm[v]
        vectors.append(tuple(min(row[u] for u in part) for part in parts))
    if len(set(vectors)) == n:
        return ResolutionWitness(resolving=True)
    return ResolutionWitness(resolving=False, twins=_first_twin(vectors))


def check_resolving_set(dm: DistanceMatrix, s: Iterable[int]) -> ResolutionWitness:
    """Decide whether the vertex set resolves the graph of this distance matrix."""
    n = len(dm)
    landmarks = sorted(set(s))
    if landmarks and not (0 <= landmarks[0] and landmarks[-1] < n):
        raise InvalidPartitionError(f"landmark outside 0..{n - 1}")
    vectors = [tuple(dm[v][u] for u in landmarks) for v in range(n)]
    if len(set(vectors)) == n:
        return ResolutionWitness(resolving=True)
    return ResolutionWitness(resolving=False, twins=_first_twin(vectors))


def metric_dimension_exact(
    dm: DistanceMatrix, cap: int = DEFAULT_DIM_CAP
) -> tuple[int, tuple[int, ...]]:
    """Smallest resolving set, searching cardinalities ascending.

    Subsets of each size are tried in lexicographic order and the first
    resolving one is returned, so witnesses are deterministic.
    """
    n = len(dm)
    if n > cap:
        raise SolverCapError(f"n={n} exceeds the metric-dimension cap {cap}")
    if n == 1:
        return (0, ())
    rows = [tuple(r) for r in dm]
    for m in range(1, n + 1):
        for subset in combinations(range(n), m):
            seen: set[tuple[int, ...]] = set()
            for v in range(n):
                row = rows[v]
                key = tuple(row[u] for u in subset)
                if key in seen:
                    break
                seen.add(key)
            else:
                return (m, subset)
    raise AssertionError("the full vertex set always resolves")


# -- exact partition dimension -------------------------------------------------


@lru_cache(maxsize=None)
def _stirling2(n: int, t: int) -> int:
    if t <= 0 or t > n:
        return 0
    if t == n or t == 1:
        return 1
    return t * _stirling2(n - 1, t) + _stirling2(n - 1, t - 1)


def _pd_lower_bound(dm: DistanceMatrix) -> int:
    """Sound lower bound on pd from twin classes.

    Vertices with identical open (or closed) neighbourhoods have identical
    distances to every other vertex, so no part may contain two of them; the
    largest such class therefore forces at least that many parts.
    """
    n = len(dm)
    open_groups: dict[frozenset[int], int] = {}
    closed_groups: dict[frozenset[int], int] = {}
    for v in range(n):
        nb = frozenset(u for u in range(n) if dm[v][u] == 1)
        open_groups[nb] = open_groups.get(nb, 0) + 1
        cl = nb | {v}
        closed_groups[cl] = closed_groups.get(cl, 0) + 1
    biggest = max(max(open_groups.values()), max(closed_groups.values()))
    return max(2, biggest)


def _rgs_stream(n: int, t: int) -> Iterator[list[int]]:
    """Lexicographic restricted-growth strings of length n with exactly t blocks.

    Yields one shared buffer; consumers must copy anything they keep.
    """
    a = [0] * n

    def rec(i: int, mx: int) -> Iterator[list[int]]:
        if i == n:
            yield a
            return
        remaining = n - 1 - i
        hi = min(mx + 1, t - 1)
        for val in range(hi + 1):
            new_mx = mx if val <= mx else val
            if t - 1 - new_mx <= remaining:
                a[i] = val
                yield from rec(i + 1, new_mx)

    yield from rec(1, 0)


def _rgs_array(n: int, t: int) -> np.ndarray:
    """Vectorized construction of all exactly-t-block RGS, in lexicographic order."""
    key = (n, t)
    cached = _RGS_CACHE.get(key)
    if cached is not None:
        return cached
    arr = np.zeros((1, 1), dtype=np.uint8)
    mx = np.zeros(1, dtype=np.int64)
    for i in range(1, n):
        remaining = n - 1 - i
        opts = np.minimum(mx + 2, t)
        total = int(opts.sum())
        rep = np.repeat(np.arange(arr.shape[0]), opts)
        starts = np.repeat(np.cumsum(opts) - opts, opts)
        vals = np.arange(total, dtype=np.int64) - starts
        new_mx = np.maximum(mx[rep], vals)
        keep = (t - 1 - new_mx) <= remaining
        rep = rep[keep]
        arr = np.concatenate([arr[rep], vals[keep, None].astype(np.uint8)], axis=1)
        mx = new_mx[keep]
    size = arr.nbytes
    if size <= _RGS_CACHE_BUDGET:
        while _RGS_CACHE and sum(a.nbytes for a in _RGS_CACHE.values()) + size > _RGS_CACHE_BUDGET:
            _RGS_CACHE.pop(next(iter(_RGS_CACHE)))
        _RGS_CACHE[key] = arr
    return arr


def _eval_rgs_chunk(chunk: np.ndarray, dist: np.ndarray, t: int, base: int) -> int:
    """Index of the first resolving partition in the chunk, or -1.

    Each row's block-distance vectors are packed into integers base^j per
    coordinate; a partition resolves iff its n packed codes are distinct.
    """
    m, n = chunk.shape
    codes = np.zeros((m, n), dtype=np.int64)
    for j in range(t):
        mask = chunk == j
        spread = np.where(mask[:, :, None], dist[None, :, :], _SENTINEL)
        codes = codes * base + spread.min(axis=1)
    codes.sort(axis=1)
    ok = (codes[:, 1:] != codes[:, :-1]).all(axis=1)
    if not ok.any():
        return -1
    return int(np.argmax(ok))


def _blocks_from_rgs(rgs: Sequence[int], t: int) -> list[list[int]]:
    blocks: list[list[int]] = [[] for _ in range(t)]
    for v, b in enumerate(rgs):
        blocks[int(b)].append(v)
    return blocks


def _first_resolving_python(dm: DistanceMatrix, n: int, t: int) -> list[list[int]] | None:
    rows = [tuple(r) for r in dm]
    for rgs in _rgs_stream(n, t):
        blocks = _blocks_from_rgs(rgs, t)
        seen: set[tuple[int, ...]] = set()
        for v in range(n):
            row = rows[v]
            key = tuple(min(row[u] for u in blk) for blk in blocks)
            if key in seen:
                break
            seen.add(key)
        else:
            return blocks
    return None


def _first_resolving_vectorized(
    dm_np: np.ndarray, n: int, t: int, base: int
) -> list[list[int]] | None:
    arr = _rgs_array(n, t)
    for start in range(0, arr.shape[0], _CHUNK):
        chunk = arr[start : start + _CHUNK]
        idx = _eval_rgs_chunk(chunk, dm_np, t, base)
        if idx >= 0:
            return _blocks_from_rgs(chunk[idx], t)
    return None


def partition_dimension_exact(
    dm: DistanceMatrix, cap: int = DEFAULT_PD_CAP
) -> tuple[int, OrderedPartition]:
    """Smallest resolving partition, enumerating block counts ascending.

    The returned partition is the first resolving one in restricted-growth
    order for the minimal t, with parts ordered by smallest element.  Block
    counts below the twin-class lower bound are provably infeasible and
    skipped without enumeration.
    """
    n = len(dm)
    if n > cap:
        raise SolverCapError(f"n={n} exceeds the partition-dimension cap {cap}")
    if n == 1:
        return (1, OrderedPartition(parts=(frozenset({0}),)))
    dm_np = np.array(dm, dtype=np.int16)
    base = int(dm_np.max()) + 1
    for t in range(_pd_lower_bound(dm), n + 1):
        packable = t * max(1, (base - 1).bit_length()) <= 62
        if (
            packable
            and 512 < _stirling2(n, t)
            and _stirling2(n, t) <= _VECTOR_ROW_LIMIT
        ):
            blocks = _first_resolving_vectorized(dm_np, n, t, base)
        else:
            blocks = _first_resolving_python(dm, n, t)
        if blocks is not None:
            return (t, OrderedPartition(parts=tuple(frozenset(b) for b in blocks)))
    raise AssertionError("the singleton partition always resolves")
