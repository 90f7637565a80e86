"""Finite posets, set partitions, and the open-partition predicate.

Vertices are always the integers 0..n-1.  Reachability is kept as one
bitmask per vertex, so the openness test is a handful of integer ops
per block pair.
"""

import os
from typing import Iterable, Iterator

from .errors import CycleError, InvalidPartition, LimitExceeded, RangeError

DEFAULT_BRUTEFORCE_CAP = 12


def bruteforce_cap() -> int:
    """Vertex limit for exhaustive enumeration; env var OPENPART_CAP overrides."""
    value = os.environ.get("OPENPART_CAP")
    return int(value) if value else DEFAULT_BRUTEFORCE_CAP


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    """A finite poset with precomputed reachability.

    ``covers`` holds the transitive reduction of the order (the Hasse
    diagram edges), ``reach(x, y)`` answers x <= y.  Instances are
    immutable; build them with :func:`build_poset`.
    """

    __slots__ = ("n", "covers", "_up")

    def __init__(self, n: int, covers: tuple, up_masks: tuple):
        self.n = n
        self.covers = covers
        self._up = up_masks

    def reach(self, x: int, y: int) -> bool:
        """True iff x <= y (x = y or a directed cover path x -> y exists)."""
        self._check_vertex(x)
        self._check_vertex(y)
        return bool(self._up[x] >> y & 1)

    def upset_mask(self, vertices: Iterable[int]) -> int:
        """Bitmask of every vertex above-or-equal to some element of ``vertices``."""
        mask = 0
        for v in vertices:
            self._check_vertex(v)
            mask |= self._up[v]
        return mask

    def _check_vertex(self, v) -> None:
        if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < self.n:
            raise RangeError(f"vertex {v!r} not in 0..{self.n - 1}")

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.n == other.n and self.covers == other.covers

    def __hash__(self):
        return hash((self.n, self.covers))

    def __repr__(self):
        return f"Poset(n={self.n}, covers={list(self.covers)})"


def build_poset(n_vertices: int, edges: Iterable[tuple]) -> Poset:
    """Build a poset from cover edges (lower, upper).

    Transitive edges in the input are allowed; the stored cover set is
    the transitive reduction.  Raises RangeError for out-of-range ids
    and CycleError if the edge digraph has a directed cycle.
    """
    if n_vertices < 0:
        raise RangeError(f"vertex count must be nonnegative, got {n_vertices}")
    n = n_vertices
    edge_set = set()
    for lo, hi in edges:
        for v in (lo, hi):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise RangeError(f"vertex {v!r} not in 0..{n - 1}")
        edge_set.add((lo, hi))

    succ = [[] for _ in range(n)]
    indegree = [0] * n
    for lo, hi in edge_set:
        succ[lo].append(hi)
        indegree[hi] += 1

    # Kahn's algorithm; a leftover vertex means a cycle (self-loops included).
    queue = [v for v in range(n) if indegree[v] == 0]
    order = []
    while queue:
        v = queue.pop()
        order.append(v)
        for w in succ[v]:
            indegree[w] -= 1
            if indegree[w] == 0:
                queue.append(w)
    if len(order) != n:
        raise CycleError("cover edges contain a directed cycle")

    # Reflexive-transitive closure, processing above vertices first.
    up = [0] * n
    for v in reversed(order):
        mask = 1 << v
        for w in succ[v]:
            mask |= up[w]
        up[v] = mask

    # Transitive reduction: keep x -> y only if no z lies strictly between.
    covers = []
    for x in range(n):
        strict = up[x] & ~(1 << x)
        for y in _iter_bits(strict):
            others = strict & ~(1 << y)
            if not any(up[z] >> y & 1 for z in _iter_bits(others)):
                covers.append((x, y))
    covers.sort()

    return Poset(n, tuple(covers), tuple(up))


class Partition:
    """A set partition in canonical form.

    Within each block vertices ascend; blocks are ordered by their
    minimum element.  Construction rejects empty or overlapping blocks.
    """

    __slots__ = ("blocks",)

    def __init__(self, blocks: Iterable[Iterable[int]]):
        seen = set()
        cleaned = []
        for raw in blocks:
            block = tuple(sorted(raw))
            if not block:
                raise InvalidPartition("blocks must be nonempty")
            as_set = set(block)
            if len(as_set) != len(block) or seen & as_set:
                raise InvalidPartition("blocks must be pairwise disjoint")
            seen |= as_set
            cleaned.append(block)
        cleaned.sort()
        self.blocks = tuple(cleaned)

    def support(self) -> frozenset:
        """All vertices appearing in some block."""
        return frozenset(v for block in self.blocks for v in block)

    def to_doc(self) -> list:
        """JSON document form: a list of blocks, each a list of vertex ids."""
        return [list(block) for block in self.blocks]

    @classmethod
    def from_doc(cls, doc) -> "Partition":
        if not isinstance(doc, list) or not all(isinstance(b, list) for b in doc):
            raise InvalidPartition("partition document must be a list of lists")
        for block in doc:
            for v in block:
                if not isinstance(v, int) or isinstance(v, bool):
                    raise InvalidPartition(f"vertex {v!r} is not an integer")
        return cls(doc)

    def __iter__(self):
        return iter(self.blocks)

    def __len__(self):
        return len(self.blocks)

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def __repr__(self):
        return f"Partition({self.to_doc()})"


class BlockRelation:
    """Comparability between blocks: rel[i][j] iff some b in block i has b <= c for some c in block j."""

    __slots__ = ("size", "rel")

    def __init__(self, rel: Iterable[Iterable[bool]]):
        self.rel = tuple(tuple(bool(x) for x in row) for row in rel)
        self.size = len(self.rel)

    def __getitem__(self, i):
        return self.rel[i]

    def __repr__(self):
        return f"BlockRelation(size={self.size})"


def _block_masks(p: Poset, pi: Partition) -> list:
    """Validate pi as a partition of p's vertices and return one bitmask per block."""
    masks = []
    total = 0
    for block in pi.blocks:
        mask = 0
        for v in block:
            if not 0 <= v < p.n:
                raise InvalidPartition(f"vertex {v} not in 0..{p.n - 1}")
            mask |= 1 << v
        masks.append(mask)
        total |= mask
    if total != (1 << p.n) - 1:
        raise InvalidPartition("blocks do not cover the vertex set")
    return masks


def upset(p: Poset, s: Iterable[int]) -> frozenset:
    """The upset of s: every vertex y with x <= y for some x in s."""
    return frozenset(_iter_bits(p.upset_mask(s)))


def is_open(p: Poset, pi: Partition) -> bool:
    """True iff the upset of every block of pi is a union of blocks of pi.

    Equivalent splitting criterion: for blocks B, C the intersection of
    C with the upset of B is either empty or all of C.
    """
    masks = _block_masks(p, pi)
    ups = [p.upset_mask(block) for block in pi.blocks]
    for up in ups:
        for mask in masks:
            hit = up & mask
            if hit and hit != mask:
                return False
    return True


def quotient_relation(p: Poset, pi: Partition) -> BlockRelation:
    """The relation induced on blocks: block i relates to block j iff some
    b in block i and c in block j satisfy b <= c.  Reflexive by construction;
    not forced to be antisymmetric."""
    masks = _block_masks(p, pi)
    ups = [p.upset_mask(block) for block in pi.blocks]
    rel = [[bool(ups[i] & masks[j]) for j in range(len(masks))] for i in range(len(masks))]
    return BlockRelation(rel)


def enumerate_set_partitions(n: int, cap: int | None = None) -> Iterator[Partition]:
    """Yield every set partition of {0..n-1} exactly once.

    Order is lexicographic in the restricted growth string: position i
    carries the index of the block containing i, and block indices are
    assigned by first appearance.  The one-block partition comes first,
    the all-singletons partition last.
    """
    limit = bruteforce_cap() if cap is None else cap
    if n > limit:
        raise LimitExceeded(f"{n} vertices exceeds the brute-force cap of {limit}")
    if n == 0:
        yield Partition([])
        return

    labels = [0] * n

    def walk(i: int, used: int) -> Iterator[Partition]:
        if i == n:
            blocks = [[] for _ in range(used)]
            for v, label in enumerate(labels):
                blocks[label].append(v)
            yield Partition(blocks)
            return
        for label in range(used + 1):
            labels[i] = label
            yield from walk(i + 1, max(used, label + 1))

    yield from walk(1, 1)


def enumerate_open_partitions(p: Poset, cap: int | None = None) -> Iterator[Partition]:
    """Yield the open partitions of p, in enumerate_set_partitions order."""
    for pi in enumerate_set_partitions(p.n, cap):
        if is_open(p, pi):
            yield pi


def count_open_partitions(p: Poset, cap: int | None = None) -> int:
    """Number of open partitions of p, by exhaustive filtering."""
    return sum(1 for _ in enumerate_open_partitions(p, cap))


def poset_to_doc(p: Poset) -> dict:
    """JSON document form: {"n": vertex count, "covers": [[lo, hi], ...]}."""
    return {"n": p.n, "covers": [list(edge) for edge in p.covers]}


def poset_from_doc(doc) -> Poset:
    if not isinstance(doc, dict) or "n" not in doc or "covers" not in doc:
        raise RangeError('poset document must be {"n": ..., "covers": [...]}')
    n = doc["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise RangeError(f"vertex count {n!r} is not an integer")
    covers = [tuple(edge) for edge in doc["covers"]]
    if not all(len(edge) == 2 for edge in covers):
        raise RangeError("covers must be pairs [lo, hi]")
    return build_poset(n, covers)
