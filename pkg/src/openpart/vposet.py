"""V-posets (two chains sharing a root) and the triple encoding of their
open partitions.

Every open partition of a V-poset is determined by an interval partition
of each chain plus a join level: the number of bottom block pairs merged
across the two chains.  The root sits in both bottom blocks, so the join
level is at least 1 and at most the smaller block count.
"""

from typing import Iterator, NamedTuple, Sequence

from .errors import InvalidTriple, NotDecodable, NotOpen, RangeError
from .poset import Partition, Poset, build_poset, is_open


class VPoset:
    """Two chains of m and n vertices sharing a minimal root.

    Labeling: 0 is the root, 1..m-1 the rest of the left chain bottom-up,
    m..m+n-2 the rest of the right chain bottom-up.
    """

    __slots__ = ("m", "n", "underlying")

    def __init__(self, m: int, n: int, underlying: Poset):
        self.m = m
        self.n = n
        self.underlying = underlying

    @property
    def left_chain(self) -> tuple:
        """Left chain vertices bottom-up, root included."""
        return tuple(range(self.m))

    @property
    def right_chain(self) -> tuple:
        """Right chain vertices bottom-up, root included."""
        return (0,) + tuple(range(self.m, self.m + self.n - 1))

    def __eq__(self, other):
        if not isinstance(other, VPoset):
            return NotImplemented
        return self.m == other.m and self.n == other.n

    def __hash__(self):
        return hash((self.m, self.n))

    def __repr__(self):
        return f"VPoset(m={self.m}, n={self.n})"


class VTriple(NamedTuple):
    """(left block sizes bottom-up, right block sizes bottom-up, join level)."""

    left: tuple
    right: tuple
    t: int

    def to_doc(self) -> dict:
        """JSON document form: {"left": [...], "right": [...], "t": ...}."""
        return {"left": list(self.left), "right": list(self.right), "t": self.t}

    @classmethod
    def from_doc(cls, doc) -> "VTriple":
        if (
            not isinstance(doc, dict)
            or not isinstance(doc.get("left"), list)
            or not isinstance(doc.get("right"), list)
            or not isinstance(doc.get("t"), int)
        ):
            raise InvalidTriple('triple document must be {"left": [...], "right": [...], "t": ...}')
        return cls(tuple(doc["left"]), tuple(doc["right"]), doc["t"])


def build_vposet(m: int, n: int) -> VPoset:
    """The V-poset with chain lengths m and n (each counting the root)."""
    if m < 1 or n < 1:
        raise RangeError(f"chain lengths must be >= 1, got ({m}, {n})")
    covers = [(i, i + 1) for i in range(m - 1)]
    if n > 1:
        covers.append((0, m))
        covers.extend((m + i, m + i + 1) for i in range(n - 2))
    return VPoset(m, n, build_poset(m + n - 1, covers))


def compositions(total: int) -> Iterator[tuple]:
    """All ordered sequences of positive integers summing to ``total``,
    in lexicographic order.  Each one cuts a chain into consecutive blocks."""
    parts = []

    def walk(remaining: int) -> Iterator[tuple]:
        if remaining == 0:
            yield tuple(parts)
            return
        for first in range(1, remaining + 1):
            parts.append(first)
            yield from walk(remaining - first)
            parts.pop()

    yield from walk(total)


def _check_triple(v: VPoset, tr: VTriple) -> None:
    for name, sizes, total in (("left", tr.left, v.m), ("right", tr.right, v.n)):
        if not sizes or any(not isinstance(s, int) or s < 1 for s in sizes):
            raise InvalidTriple(f"{name} sizes must be positive integers, got {sizes}")
        if sum(sizes) != total:
            raise InvalidTriple(f"{name} sizes {sizes} do not sum to {total}")
    if not 1 <= tr.t <= min(len(tr.left), len(tr.right)):
        raise InvalidTriple(
            f"join level {tr.t} not in 1..{min(len(tr.left), len(tr.right))}"
        )


def _cut(chain: Sequence[int], sizes: Sequence[int]) -> list:
    """Consecutive blocks of ``chain`` with the given sizes, bottom-up."""
    blocks = []
    start = 0
    for size in sizes:
        blocks.append(set(chain[start:start + size]))
        start += size
    return blocks


def decode(v: VPoset, tr: VTriple) -> Partition:
    """The open partition encoded by a triple.

    Cut each chain into consecutive blocks per the size lists (the root
    lies in both bottom blocks), then merge the bottom t left blocks
    with the bottom t right blocks pairwise.
    """
    _check_triple(v, tr)
    left_blocks = _cut(v.left_chain, tr.left)
    right_blocks = _cut(v.right_chain, tr.right)
    merged = [left_blocks[i] | right_blocks[i] for i in range(tr.t)]
    return Partition(merged + left_blocks[tr.t:] + right_blocks[tr.t:])


def encode(v: VPoset, pi: Partition) -> VTriple:
    """The unique triple with decode(v, encode(v, pi)) == pi.

    The join level is the number of blocks meeting both chains (the root
    counts as lying on both).  Raises NotOpen if pi is not open, and
    NotDecodable if the rebuilt partition differs from pi, which cannot
    happen for a V-poset.
    """
    if not is_open(v.underlying, pi):
        raise NotOpen(f"{pi!r} is not an open partition of {v!r}")
    left_set = set(v.left_chain)
    right_set = set(v.right_chain)
    left_parts = []
    right_parts = []
    t = 0
    for block in pi.blocks:
        on_left = [x for x in block if x in left_set]
        on_right = [x for x in block if x in right_set]
        if on_left and on_right:
            t += 1
        if on_left:
            left_parts.append(on_left)
        if on_right:
            right_parts.append(on_right)
    left_parts.sort(key=min)
    right_parts.sort(key=min)
    tr = VTriple(
        tuple(len(part) for part in left_parts),
        tuple(len(part) for part in right_parts),
        t,
    )
    try:
        _check_triple(v, tr)
        rebuilt = decode(v, tr)
    except InvalidTriple as exc:
        raise NotDecodable(f"{pi!r} yields malformed triple {tr}: {exc}") from exc
    if rebuilt != pi:
        raise NotDecodable(f"{pi!r} does not round-trip through {tr}")
    return tr


def enumerate_triples(v: VPoset) -> Iterator[VTriple]:
    """Every valid triple exactly once: left composition lexicographically,
    then right composition, then join level ascending."""
    for left in compositions(v.m):
        for right in compositions(v.n):
            for t in range(1, min(len(left), len(right)) + 1):
                yield VTriple(left, right, t)
