"""Weight-preserving bijection between 2-colored RR partitions and D_{2,2}.

Both families live on sets of distinct values, and the only free bit per
maximal run of consecutive values is carried by the run's smallest
element: its color on one side, its overline on the other.  Every other
element is forced (colors alternate up the run; the larger member of a
gap-1 pair must be overlined).  The free bit is matched as
black <-> overlined, which sends "no red 1" onto "no plain 1".
"""
from __future__ import annotations

from typing import Iterable

from qpart.partitions import (
    Color,
    ColoredPartition,
    Overpartition,
    PreconditionError,
    is_valid_2crr,
    is_valid_D,
)

__all__ = ["runs", "colored_to_over", "over_to_colored"]


def runs(values: Iterable[int]) -> list[list[int]]:
    """Maximal blocks of consecutive integers, each listed decreasing.

    >>> runs({5, 4, 3, 1})
    [[5, 4, 3], [1]]
    """
    ordered = sorted(values, reverse=True)
    if len(set(ordered)) != len(ordered):
        raise PreconditionError(f"values must be distinct: {ordered}")
    blocks: list[list[int]] = []
    for v in ordered:
        if blocks and blocks[-1][-1] == v + 1:
            blocks[-1].append(v)
        else:
            blocks.append([v])
    return blocks


def colored_to_over(p: ColoredPartition) -> Overpartition:
    if not is_valid_2crr(p):
        raise PreconditionError(f"not a 2-colored RR partition: {p}")
    color = dict(p.parts)
    parts = []
    for block in runs(color):
        for v in block[:-1]:
            parts.append((v, True))
        smallest = block[-1]
        parts.append((smallest, color[smallest] is Color.BLACK))
    return Overpartition(tuple(parts))


def over_to_colored(p: Overpartition) -> ColoredPartition:
    if not is_valid_D(p, 2, 2):
        raise PreconditionError(f"not a D_(2,2) overpartition: {p}")
    overlined = dict(p.parts)
    parts = []
    for block in runs(overlined):
        c = Color.BLACK if overlined[block[-1]] else Color.RED
        colored = []
        for v in reversed(block):
            colored.append((v, c))
            c = c.swap()
        parts.extend(reversed(colored))
    return ColoredPartition(tuple(parts))
