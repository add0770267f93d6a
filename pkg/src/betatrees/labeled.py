"""Labeled β(1,0)-trees: every node also carries a unique identity token.

Serialized as ``(label:id child child ...)``, e.g. ``(2:a (1:b (1:c)) (1:d (1:e)))``.

The compositions carry identities as follows:

* ``lambda_(i, x, t)``: the new root is ``x``;
* ``gamma(i, x, t)``: the new rightmost leaf is ``x``;
* ``oplus(u, v)``: the merged root keeps ``u``'s id;
* ``obslash(u, v)``: the join node keeps ``v``'s root id.

Decomposing goes the other way and duplicates the shared node: both parts of
a ⊕-split carry the root's id, and in a ⊘-split the upper tree's new
rightmost leaf carries the id of the lower tree's root.

A *word* is a tuple of ids.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from . import core
from .core import (
    DualSum,
    IndexOutOfRangeError,
    LeafCase,
    LeafOperandError,
    Sum,
    Tree,
    TreeError,
    _PlaneTree,
    right_path,
)
from .involution import apply_h

__all__ = [
    "LabeledTree",
    "DuplicateIdError",
    "validate",
    "parse",
    "render",
    "canonical_labeling",
    "forget",
    "lambda_",
    "gamma",
    "oplus",
    "obslash",
    "LambdaCase",
    "GammaCase",
    "decompose_sum",
    "decompose_dual",
    "recompose",
    "greedy_root",
    "WordStats",
    "words",
    "words_by_recursion",
    "swap_words",
    "labeled_h",
    "labeled_h_reference",
    "render_word",
    "words_tsv_row",
    "WORD_COLUMNS",
]


class DuplicateIdError(TreeError):
    """Two nodes of one labeled tree share an id."""


class LabeledTree(_PlaneTree):
    """A β(1,0)-tree node with an identity token ``id``."""

    __slots__ = ("id",)

    def __init__(self, label: int, id: str, children: Sequence[LabeledTree] = ()):
        children = tuple(children)
        set_ = object.__setattr__
        set_(self, "label", label)
        set_(self, "id", id)
        set_(self, "children", children)
        set_(self, "_size", 1 + sum(c._size for c in children))
        set_(self, "_hash", None)

    def _head(self):
        return self.label, self.id

    def __str__(self) -> str:
        return render(self)

    def ids(self) -> tuple[str, ...]:
        """The preorder word of ids."""
        return tuple(node.id for node in self.preorder())


_ID = re.compile(r"[A-Za-z0-9_]+\Z")


def _check_ids(t: LabeledTree) -> None:
    counts = Counter(t.ids())
    dup = [ident for ident, c in counts.items() if c > 1]
    if dup:
        raise DuplicateIdError(f"duplicate id(s): {', '.join(sorted(dup))}")


def validate(candidate) -> LabeledTree:
    """Validate a ``LabeledTree`` or nested ``(label, [children], id)`` triple."""
    core.check_conditions(candidate)

    def make(node, kids):
        if isinstance(node, LabeledTree):
            label, ident = node.label, node.id
        else:
            label, ident = node[0], node[2] if len(node) > 2 else None
        if not isinstance(ident, str) or not _ID.match(ident):
            raise TreeError(f"invalid id {ident!r}")
        return LabeledTree(label, ident, kids)

    t = core._build(candidate, make)
    _check_ids(t)
    return t


def parse(text: str) -> LabeledTree:
    stripped = text.strip()
    offset = len(text) - len(text.lstrip())
    try:
        nested = core._parse_nested(stripped, labeled=True)
    except core.TreeSyntaxError as exc:
        raise core.TreeSyntaxError(str(exc).rsplit(" at position", 1)[0], exc.position + offset) from None
    return validate(nested)


def render(t: LabeledTree) -> str:
    return core._render(t, lambda node: f"{node.label}:{node.id}")


def canonical_labeling(t: Tree) -> LabeledTree:
    """Attach ids ``"1", "2", ...`` in preorder."""
    counter = iter(range(1, t.size + 1))
    ids = {}
    for node in t.preorder():
        ids.setdefault(id(node), []).append(str(next(counter)))
    # a subtree object may occur at several positions; occurrences are
    # disjoint, so they are rebuilt in the same order they were numbered
    pending = {key: iter(values) for key, values in ids.items()}

    def make(node, kids):
        return LabeledTree(node.label, next(pending[id(node)]), kids)

    return core._build(t, make)


def forget(t: LabeledTree) -> Tree:
    return core._build(t, lambda node, kids: Tree(node.label, kids))


# --------------------------------------------------------------------------
# compositions


def _leaf(ident: str) -> LabeledTree:
    return LabeledTree(1, ident)


def _restored(node: LabeledTree) -> LabeledTree:
    if not node.children:
        return node
    total = sum(c.label for c in node.children)
    return node if total == node.label else LabeledTree(total, node.id, node.children)


def _rebuild_up(path, bottom, bump=0):
    new = bottom
    for node in reversed(path[:-1]):
        new = LabeledTree(node.label + bump, node.id, node.children[:-1] + (new,))
    return new


def lambda_(i: int, x: str, t: LabeledTree) -> LabeledTree:
    if not 1 <= i <= t.label:
        raise IndexOutOfRangeError(f"lambda index {i} outside 1..{t.label}")
    out = LabeledTree(i, x, (LabeledTree(i, t.id, t.children),))
    _check_ids(out)
    return out


def gamma(i: int, x: str, t: LabeledTree) -> LabeledTree:
    if t.is_leaf:
        if i != 1:
            raise IndexOutOfRangeError(f"gamma index {i} on the single-node tree")
        out = LabeledTree(1, t.id, (_leaf(x),))
    else:
        path = right_path(t)
        if not 1 <= i < len(path):
            raise IndexOutOfRangeError(f"gamma index {i} outside 1..{len(path) - 1}")
        node = path[i - 1]
        bottom = LabeledTree(node.label + 1, node.id, node.children + (_leaf(x),))
        out = _rebuild_up(path[:i], bottom, bump=1)
    _check_ids(out)
    return out


def oplus(u: LabeledTree, v: LabeledTree) -> LabeledTree:
    if u.is_leaf or v.is_leaf:
        raise LeafOperandError("oplus is undefined on the single-node tree")
    out = LabeledTree(u.label + v.label, u.id, u.children + v.children)
    _check_ids(out)
    return out


def obslash(u: LabeledTree, v: LabeledTree) -> LabeledTree:
    if u.is_leaf or v.is_leaf:
        raise LeafOperandError("obslash is undefined on the single-node tree")
    out = _rebuild_up(right_path(u), LabeledTree(1, v.id, v.children))
    _check_ids(out)
    return out


# --------------------------------------------------------------------------
# decompositions


@dataclass(frozen=True)
class LambdaCase:
    i: int
    x: str
    body: LabeledTree


@dataclass(frozen=True)
class GammaCase:
    i: int
    x: str
    body: LabeledTree


def decompose_sum(t: LabeledTree):
    kids = t.children
    if not kids:
        return LeafCase()
    if len(kids) == 1:
        return LambdaCase(t.label, t.id, _restored(kids[0]))
    first = kids[0]
    return Sum(
        LabeledTree(first.label, t.id, (first,)),
        LabeledTree(t.label - first.label, t.id, kids[1:]),
    )


def _splits(path):
    return [j for j in range(1, len(path) - 1) if path[j].label == 1]


def decompose_dual(t: LabeledTree):
    if t.is_leaf:
        return LeafCase()
    path = right_path(t)
    splits = _splits(path)
    if splits:
        j = splits[-1]
        join = path[j]
        return DualSum(_rebuild_up(path[: j + 1], _leaf(join.id)), _restored(join))
    k = len(path) - 1
    parent, x = path[k - 1], path[k].id
    if k == 1 and len(parent.children) == 1:
        return GammaCase(1, x, _leaf(parent.id))
    bottom = LabeledTree(parent.label - 1, parent.id, parent.children[:-1])
    return GammaCase(k, x, _rebuild_up(path[:k], bottom, bump=-1))


def recompose(view) -> LabeledTree:
    if isinstance(view, LambdaCase):
        return lambda_(view.i, view.x, view.body)
    if isinstance(view, GammaCase):
        return gamma(view.i, view.x, view.body)
    if isinstance(view, Sum):
        return oplus(view.first, view.rest)
    if isinstance(view, DualSum):
        return obslash(view.upper, view.lower)
    raise TypeError(f"cannot recompose {view!r}")


# --------------------------------------------------------------------------
# the involution


def labeled_h(t: LabeledTree) -> LabeledTree:
    """h on labeled trees; ids travel with the nodes they were attached to."""
    return apply_h(t, lambda label, ident, kids: LabeledTree(label, ident, kids), lambda node: node.id)


def labeled_h_reference(t: LabeledTree) -> LabeledTree:
    """Labeled h from its defining clauses over the canonical decompositions."""
    view = decompose_sum(t)
    if isinstance(view, LeafCase):
        return t
    if isinstance(view, LambdaCase):
        return gamma(view.i, view.x, labeled_h_reference(view.body))
    return obslash(labeled_h_reference(view.rest), labeled_h_reference(view.first))


# --------------------------------------------------------------------------
# word statistics

WORD_COLUMNS = ("nodes", "leaves", "internal", "root", "rpath", "sub", "rsub")

Word = tuple


class WordStats(NamedTuple):
    nodes: Word
    leaves: Word
    internal: Word
    root: Word
    rpath: Word
    sub: tuple
    rsub: tuple


def greedy_root(t: LabeledTree) -> frozenset:
    """Leaves picked by the greedy search for ``root(t)`` leaves.

    Starting with quota ``root(t)`` at the root, each node hands its quota
    to its subtrees from the rightmost one leftwards, never giving a subtree
    more than that subtree's root label.
    """
    chosen = set()
    stack = [(t, t.label)]
    while stack:
        node, quota = stack.pop()
        if not node.children:
            chosen.add(node.id)
            continue
        for child in reversed(node.children):
            if quota == 0:
                break
            share = min(quota, child.label)
            stack.append((child, share))
            quota -= share
    return frozenset(chosen)


def words(t: LabeledTree) -> WordStats:
    order = [node for node in t.preorder()]
    nodes = tuple(node.id for node in order)
    leaves = tuple(node.id for node in order if not node.children)
    internal = tuple(node.id for node in reversed(order) if node.children)
    picked = greedy_root(t)
    root = tuple(ident for ident in leaves if ident in picked)
    path = right_path(t)
    if t.is_leaf:
        rpath = (t.id,)
    else:
        rpath = tuple(node.id for node in reversed(path[:-1]))
    sub = tuple(child.ids() for child in t.children)
    rsub = _rsub(path) if not t.is_leaf else ()
    return WordStats(nodes, leaves, internal, root, rpath, sub, rsub)


def _segment_word(top: LabeledTree, cut: LabeledTree) -> Word:
    """Preorder ids of the subtree at ``top`` with the node ``cut`` pruned away."""
    out = []
    stack = [top]
    while stack:
        node = stack.pop()
        if node is cut:
            continue
        out.append(node.id)
        stack.extend(reversed(node.children))
    return tuple(out)


def _rsub(path) -> tuple:
    cuts = _splits(path) + [len(path) - 1]
    segments = []
    top = 0
    for cut in cuts:
        segments.append(_segment_word(path[top], path[cut]))
        top = cut
    return tuple(tuple(reversed(w)) for w in reversed(segments))


def _keep_last(i: int, word: Word) -> Word:
    return word[len(word) - i:] if i else ()


def _sum_side(t: LabeledTree) -> tuple[Word, Word, tuple]:
    """``(leaves, root, sub)`` through the ⊕/λ decomposition."""
    view = decompose_sum(t)
    if isinstance(view, LeafCase):
        return (t.id,), (t.id,), ()
    if isinstance(view, LambdaCase):
        leaves, root, _ = _sum_side(view.body)
        return leaves, _keep_last(view.i, root), (view.body.ids(),)
    a, b = _sum_side(view.first), _sum_side(view.rest)
    return a[0] + b[0], a[1] + b[1], a[2] + b[2]


def _dual_side(t: LabeledTree) -> tuple[Word, Word, tuple]:
    """``(internal, rpath, rsub)`` through the ⊘/γ decomposition."""
    view = decompose_dual(t)
    if isinstance(view, LeafCase):
        return (t.id,), (t.id,), ()
    if isinstance(view, GammaCase):
        internal, rpath, _ = _dual_side(view.body)
        return internal, _keep_last(view.i, rpath), (tuple(reversed(view.body.ids())),)
    u, v = _dual_side(view.upper), _dual_side(view.lower)
    return v[0] + u[0], v[1] + u[1], v[2] + u[2]


def words_by_recursion(t: LabeledTree) -> WordStats:
    """The six words computed through the ⊕/λ and ⊘/γ decompositions.

    Base cases give the bare id for leaves, internal, root and rpath, so
    this agrees with :func:`words` on every tree with at least one edge.
    """
    leaves, root, sub = _sum_side(t)
    internal, rpath, rsub = _dual_side(t)
    return WordStats(t.ids(), leaves, internal, root, rpath, sub, rsub)


def swap_words(w: WordStats) -> WordStats:
    """The word statistics h is predicted to produce: pairs exchanged, preorder reversed."""
    return WordStats(
        tuple(reversed(w.nodes)), w.internal, w.leaves, w.rpath, w.root, w.rsub, w.sub
    )


def render_word(word: Word) -> str:
    return " ".join(word)


def words_tsv_row(w: WordStats) -> str:
    cells = [render_word(x) for x in w[:5]]
    cells += [",".join(render_word(x) for x in w.sub), ",".join(render_word(x) for x in w.rsub)]
    return "\t".join(cells)
