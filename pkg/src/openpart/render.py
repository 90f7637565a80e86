"""Deterministic DOT export of Hasse diagrams with per-block coloring."""

from dataclasses import dataclass, field

from .errors import InvalidPartition
from .poset import Partition, Poset, _block_masks

DEFAULT_PALETTE = (
    "red", "blue", "green", "yellow", "orange", "purple",
    "cyan", "magenta", "brown", "pink", "gray", "olive",
)


@dataclass(frozen=True)
class RenderSpec:
    """What to draw: a poset, an optional partition, and a color palette."""

    poset: Poset
    partition: Partition | None = None
    palette: tuple = field(default=DEFAULT_PALETTE)

    def __post_init__(self):
        if not self.palette:
            raise ValueError("palette must have at least one color")


def _heights(p: Poset) -> list:
    """Longest cover-path length from a minimal element, per vertex."""
    preds = [[] for _ in range(p.n)]
    for lo, hi in p.covers:
        preds[hi].append(lo)
    heights = [-1] * p.n

    def height(v: int) -> int:
        if heights[v] < 0:
            heights[v] = max((height(u) + 1 for u in preds[v]), default=0)
        return heights[v]

    for v in range(p.n):
        height(v)
    return heights


def to_dot(spec: RenderSpec) -> str:
    """DOT text for the Hasse diagram, bottom-to-top, one rank per height.

    Nodes in the same partition block share a fill color, assigned by
    cycling the palette over blocks in canonical order.  Output is
    byte-identical for identical inputs.
    """
    p = spec.poset
    fills = None
    if spec.partition is not None:
        _block_masks(p, spec.partition)  # raises InvalidPartition if not a partition of p
        fills = [""] * p.n
        for index, block in enumerate(spec.partition.blocks):
            color = spec.palette[index % len(spec.palette)]
            for v in block:
                fills[v] = color

    lines = [
        "digraph poset {",
        "  rankdir=BT;",
        '  node [shape=circle, style=filled, fillcolor="white"];',
    ]
    heights = _heights(p)
    for level in range(max(heights, default=-1) + 1):
        members = [str(v) for v in range(p.n) if heights[v] == level]
        lines.append("  { rank=same; " + "; ".join(members) + "; }")
    for v in range(p.n):
        if fills is None:
            lines.append(f"  {v};")
        else:
            lines.append(f'  {v} [fillcolor="{fills[v]}"];')
    for lo, hi in p.covers:
        lines.append(f"  {lo} -> {hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"
