"""Exhaustive generation of β(1,0)-trees.

Trees on ``n`` nodes come in a fixed order: first the indecomposable ones,
``λ_i t`` for ``t`` in level ``n - 1`` order and ``i = 1..root(t)``; then the
decomposable ones, ``u ⊕ v`` with ``u`` an indecomposable tree on ``j`` nodes
(``j`` ascending, ``u`` in level order) and ``v`` any non-leaf tree on
``n - j + 1`` nodes (in level order).

:func:`oracle_enumerate` is an independent brute force over every plane tree
shape and every labeling, kept for cross-checking the generator.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

import numpy as np

from .core import LEAF, Tree, TreeError, lambda_, oplus, validate

__all__ = [
    "FamilySpec",
    "CapExceeded",
    "generate",
    "trees",
    "levels",
    "count_levels",
    "oracle_enumerate",
    "plane_shapes",
    "ORACLE_CAP",
]

ORACLE_CAP = 7


class CapExceeded(TreeError):
    """The brute-force oracle was asked for a size beyond its cap."""


@dataclass(frozen=True)
class FamilySpec:
    """A slice of ``B_n``: all trees on ``nodes`` nodes, optionally filtered."""

    nodes: int
    root_label: Optional[int] = None
    indecomposable_only: bool = False

    def __post_init__(self):
        if self.nodes < 1:
            raise ValueError(f"nodes must be >= 1, got {self.nodes}")
        if self.root_label is not None:
            top = 1 if self.nodes == 1 else self.nodes - 1
            if not 1 <= self.root_label <= top:
                raise ValueError(f"root label must lie in 1..{top} for {self.nodes} nodes")
        if self.indecomposable_only and self.nodes == 1:
            raise ValueError("the single-node tree is not indecomposable")


class _Level:
    __slots__ = ("trees", "n_indecomposable")

    def __init__(self, trees: list[Tree], n_indecomposable: int):
        self.trees = trees
        self.n_indecomposable = n_indecomposable

    @property
    def indecomposables(self):
        return self.trees[: self.n_indecomposable]


def _indecomposables(prev: _Level) -> Iterator[Tree]:
    for t in prev.trees:
        for i in range(1, t.label + 1):
            yield lambda_(i, t)


def _decomposables(n: int, built: list[_Level]) -> Iterator[Tree]:
    # built[m] is level m; the remainder has n - j + 1 >= 2 nodes
    for j in range(2, n):
        rest = built[n - j + 1].trees
        for u in built[j].indecomposables:
            for v in rest:
                yield oplus(u, v)


def _stream_level(n: int, built: list[_Level], indecomposable_only=False) -> Iterator[Tree]:
    if n == 1:
        yield LEAF
        return
    yield from _indecomposables(built[n - 1])
    if not indecomposable_only:
        yield from _decomposables(n, built)


def _lower_levels(n: int) -> list[_Level]:
    """Levels ``1..n-1`` materialized (index 0 unused)."""
    built: list = [None]
    for m in range(1, n):
        if m == 1:
            built.append(_Level([LEAF], 0))
            continue
        indec = list(_indecomposables(built[m - 1]))
        built.append(_Level(indec + list(_decomposables(m, built)), len(indec)))
    return built


def generate(spec: FamilySpec) -> Iterator[Tree]:
    """Stream every tree of ``spec`` exactly once, in canonical order.

    Only the levels below ``spec.nodes`` are kept in memory.
    """
    built = _lower_levels(spec.nodes)
    stream = _stream_level(spec.nodes, built, spec.indecomposable_only)
    if spec.root_label is None:
        yield from stream
    else:
        k = spec.root_label
        yield from (t for t in stream if t.label == k)


def trees(nodes: int, root_label: Optional[int] = None, indecomposable_only: bool = False) -> list[Tree]:
    return list(generate(FamilySpec(nodes, root_label, indecomposable_only)))


def levels(max_nodes: int) -> Iterator[tuple[int, list[Tree]]]:
    """Yield ``(n, B_n)`` for ``n = 1..max_nodes``, reusing lower levels."""
    built = _lower_levels(max_nodes + 1)
    for n in range(1, max_nodes + 1):
        yield n, built[n].trees


def count_levels(max_nodes: int) -> list[int]:
    """``[|B_1|, ..., |B_max_nodes|]``."""
    if max_nodes < 1:
        raise ValueError("max_nodes must be >= 1")
    built = _lower_levels(max_nodes)
    counts = [len(level.trees) for level in built[1:]]
    counts.append(sum(1 for _ in _stream_level(max_nodes, built)))
    return counts


# --------------------------------------------------------------------------
# brute-force oracle


@lru_cache(maxsize=None)
def plane_shapes(n: int) -> tuple[tuple, ...]:
    """All unlabeled rooted plane trees on ``n`` nodes, as nested tuples."""
    if n == 1:
        return ((),)
    return _forests(n - 1)


@lru_cache(maxsize=None)
def _forests(m: int) -> tuple[tuple, ...]:
    if m == 0:
        return ((),)
    out = []
    for k in range(1, m + 1):
        for first in plane_shapes(k):
            for rest in _forests(m - k):
                out.append((first,) + rest)
    return tuple(out)


def _parents(shape) -> list[int]:
    parents: list[int] = []
    stack = [(shape, -1)]
    while stack:
        node, parent = stack.pop()
        me = len(parents)
        parents.append(parent)
        stack.extend((c, me) for c in reversed(node))
    return parents


def _nest(labels, parents):
    nodes = [(int(label), []) for label in labels]
    for child, parent in enumerate(parents):
        if parent >= 0:
            nodes[parent][1].append(nodes[child])
    return nodes[0]


def oracle_enumerate(n: int, cap: int = ORACLE_CAP) -> set[Tree]:
    """Every β(1,0)-tree on ``n`` nodes by exhaustive filtering.

    Each plane tree shape is paired with each assignment of labels from
    ``1..n``; the three defining conditions are checked over all labelings
    at once with numpy, and survivors are confirmed by :func:`validate`.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > cap:
        raise CapExceeded(f"oracle capped at {cap} nodes, asked for {n}")
    grid = np.indices((n,) * n, dtype=np.int32).reshape(n, -1).T + 1
    found: set[Tree] = set()
    for shape in plane_shapes(n):
        parents = _parents(shape)
        incidence = np.zeros((n, n), dtype=np.int32)
        for child, parent in enumerate(parents):
            if parent >= 0:
                incidence[child, parent] = 1
        sums = grid @ incidence
        is_leaf = incidence.sum(axis=0) == 0
        ok = np.all(grid[:, is_leaf] == 1, axis=1)
        inner = ~is_leaf
        inner[0] = False
        ok &= np.all(grid[:, inner] <= sums[:, inner], axis=1)
        if n > 1:
            ok &= grid[:, 0] == sums[:, 0]
        for row in grid[ok]:
            found.add(validate(_nest(row, parents)))
    return found
