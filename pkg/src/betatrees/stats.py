"""Scalar statistics on β(1,0)-trees and their distribution tables."""

from __future__ import annotations

import json
from collections import Counter
from typing import Iterable, NamedTuple, Sequence

from .core import Tree, right_path

__all__ = ["STAT_NAMES", "SWAP", "StatTuple", "stats", "swap", "DistTable", "dist_table"]

STAT_NAMES = ("leaves", "internal", "root", "rpath", "sub", "rsub")

# statistic -> the statistic h exchanges it with
SWAP = {
    "leaves": "internal",
    "internal": "leaves",
    "root": "rpath",
    "rpath": "root",
    "sub": "rsub",
    "rsub": "sub",
}


class StatTuple(NamedTuple):
    leaves: int
    internal: int
    root: int
    rpath: int
    sub: int
    rsub: int


def stats(t: Tree) -> StatTuple:
    """All six statistics of ``t``.

    ``rsub`` counts the label-1 nodes strictly below the root on the right
    path, the rightmost leaf included. The single-node tree gives
    ``(1, 0, 1, 0, 0, 0)``.
    """
    leaves = internal = 0
    for node in t.preorder():
        if node.children:
            internal += 1
        else:
            leaves += 1
    path = right_path(t)
    rsub = sum(1 for node in path[1:] if node.label == 1)
    return StatTuple(leaves, internal, t.label, len(path) - 1, len(t.children), rsub)


def swap(s: StatTuple) -> StatTuple:
    """Exchange leaves/internal, root/rpath and sub/rsub."""
    return StatTuple(s.internal, s.leaves, s.rpath, s.root, s.rsub, s.sub)


def _check_names(projection: Sequence[str]) -> tuple[str, ...]:
    names = tuple(projection)
    if not names:
        raise ValueError("projection needs at least one statistic")
    unknown = [name for name in names if name not in STAT_NAMES]
    if unknown:
        raise ValueError(f"unknown statistic(s): {', '.join(unknown)}; choose from {', '.join(STAT_NAMES)}")
    return names


class DistTable:
    """Histogram of projected statistic tuples over a finite family of trees."""

    def __init__(self, names: Sequence[str], counts: Counter):
        self.names = tuple(names)
        self.counts = Counter(counts)

    def rows(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.counts.items())

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def __eq__(self, other):
        if not isinstance(other, DistTable):
            return NotImplemented
        return self.counts == other.counts

    def merge(self, other: DistTable) -> DistTable:
        return DistTable(self.names, self.counts + other.counts)

    def to_tsv(self, header: bool = True) -> str:
        lines = ["\t".join(self.names + ("count",))] if header else []
        for key, count in self.rows():
            lines.append("\t".join(map(str, key + (count,))))
        return "".join(line + "\n" for line in lines)

    def to_json(self) -> str:
        rows = [dict(zip(self.names + ("count",), key + (count,))) for key, count in self.rows()]
        return json.dumps({"stats": list(self.names), "rows": rows})

    def __repr__(self):
        return f"DistTable({self.names}, {dict(self.rows())})"


def dist_table(family: Iterable[Tree], projection: Sequence[str]) -> DistTable:
    names = _check_names(projection)
    indices = [STAT_NAMES.index(name) for name in names]
    counts: Counter = Counter()
    for t in family:
        s = stats(t)
        counts[tuple(s[i] for i in indices)] += 1
    return DistTable(names, counts)
