"""β(1,0)-trees and their two composition algebras.

A β(1,0)-tree is a rooted plane tree with positive integer labels where

* every leaf has label 1,
* the root label equals the sum of its children's labels,
* every other node has a label no greater than the sum of its children's labels.

Trees are immutable values. Two ways of building them are provided:

* the *sum* algebra: ``oplus`` (merge roots) and ``lambda_`` (adjoin a root),
* the *dual* algebra: ``obslash`` (graft onto the rightmost leaf) and
  ``gamma`` (adjoin a rightmost leaf and bump the right path).

Every traversal in this module is iterative, so trees with very deep right
paths (thousands of nodes) are handled without touching the recursion limit.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Sequence, Union

__all__ = [
    "Tree",
    "LEAF",
    "EDGE",
    "TreeError",
    "InvalidTreeError",
    "NonPositiveLabel",
    "LeafLabelNotOne",
    "RootSumMismatch",
    "InternalLabelTooLarge",
    "LeafOperandError",
    "IndexOutOfRangeError",
    "TreeSyntaxError",
    "validate",
    "parse",
    "render",
    "root_label",
    "rpath_length",
    "right_path",
    "oplus",
    "lambda_",
    "obslash",
    "gamma",
    "LeafCase",
    "Indecomposable",
    "Sum",
    "Gamma",
    "DualSum",
    "decompose_sum",
    "decompose_dual",
    "recompose",
    "sum_factors",
    "dual_factors",
    "sum_splits",
    "dual_splits",
]


# --------------------------------------------------------------------------
# errors


class TreeError(ValueError):
    """Base class for every error raised by this package."""


class InvalidTreeError(TreeError):
    """A candidate tree breaks one of the β(1,0) conditions.

    ``path`` is the sequence of child indices leading from the root to the
    offending node, ``index`` its 0-based preorder position.
    """

    condition = "invalid"

    def __init__(self, path: tuple[int, ...], index: int, label, detail: str):
        self.path = path
        self.index = index
        self.label = label
        where = "root" if not path else "node at path " + ".".join(map(str, path))
        super().__init__(f"{self.condition}: {where} (preorder #{index}): {detail}")


class NonPositiveLabel(InvalidTreeError):
    condition = "NonPositiveLabel"


class LeafLabelNotOne(InvalidTreeError):
    condition = "LeafLabelNotOne"


class RootSumMismatch(InvalidTreeError):
    condition = "RootSumMismatch"


class InternalLabelTooLarge(InvalidTreeError):
    condition = "InternalLabelTooLarge"


class LeafOperandError(TreeError):
    """A composition was asked to take the single-node tree as an operand."""


class IndexOutOfRangeError(TreeError):
    """The index of ``lambda_`` or ``gamma`` is outside its legal range."""


class TreeSyntaxError(TreeError):
    """Malformed serialized tree. ``position`` is a 0-based character offset."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at position {position}")


# --------------------------------------------------------------------------
# value types


class _PlaneTree:
    """Immutable rooted plane tree node with iterative equality and hashing."""

    __slots__ = ("label", "children", "_size", "_hash")

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __delattr__(self, name):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def _head(self):
        return self.label

    @property
    def is_leaf(self) -> bool:
        return not self.children

    @property
    def size(self) -> int:
        """Number of nodes."""
        return self._size

    def __len__(self) -> int:
        return self._size

    def preorder(self) -> Iterator:
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def __hash__(self) -> int:
        if self._hash is None:
            stack = [self]
            while stack:
                node = stack[-1]
                if node._hash is not None:
                    stack.pop()
                    continue
                pending = [c for c in node.children if c._hash is None]
                if pending:
                    stack.extend(pending)
                    continue
                stack.pop()
                value = hash((node._head(), tuple(c._hash for c in node.children)))
                object.__setattr__(node, "_hash", value)
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        if type(other) is not type(self):
            return NotImplemented
        stack = [(self, other)]
        while stack:
            a, b = stack.pop()
            if a is b:
                continue
            if a._size != b._size or len(a.children) != len(b.children):
                return False
            if a._hash is not None and b._hash is not None and a._hash != b._hash:
                return False
            if a._head() != b._head():
                return False
            stack.extend(zip(a.children, b.children))
        return True

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __str__(self) -> str:
        return _render(self, lambda node: str(node.label))

    def __repr__(self) -> str:
        return f"{type(self).__name__}<{self}>"


class Tree(_PlaneTree):
    """A β(1,0)-tree node: a positive ``label`` and a tuple of ``children``.

    The constructor trusts its arguments; untrusted input should go through
    :func:`validate` or :func:`parse`.
    """

    __slots__ = ()

    def __init__(self, label: int, children: Sequence[Tree] = ()):
        children = tuple(children)
        set_ = object.__setattr__
        set_(self, "label", label)
        set_(self, "children", children)
        set_(self, "_size", 1 + sum(c._size for c in children))
        set_(self, "_hash", None)

    @classmethod
    def from_text(cls, text: str) -> Tree:
        return parse(text)


LEAF = Tree(1)
EDGE = Tree(1, (LEAF,))


# --------------------------------------------------------------------------
# validation and serialization

Candidate = Union[_PlaneTree, Sequence]


def _unpack(candidate) -> tuple[object, Sequence]:
    if isinstance(candidate, _PlaneTree):
        return candidate.label, candidate.children
    if isinstance(candidate, (tuple, list)) and 1 <= len(candidate) <= 3:
        label = candidate[0]
        children = candidate[1] if len(candidate) >= 2 else ()
        return label, children
    raise TypeError(f"cannot interpret {candidate!r} as a tree node")


def check_conditions(candidate: Candidate) -> None:
    """Raise the first β(1,0) violation found in preorder, if any."""
    stack = [(candidate, 0, -1)]
    path: list[int] = []
    index = 0
    while stack:
        node, depth, k = stack.pop()
        del path[max(depth - 1, 0):]
        if depth:
            path.append(k)
        label, children = _unpack(node)
        if not isinstance(label, int) or isinstance(label, bool) or label < 1:
            raise NonPositiveLabel(tuple(path), index, label, f"label {label!r} is not a positive integer")
        if not children:
            if label != 1:
                raise LeafLabelNotOne(tuple(path), index, label, f"leaf has label {label}")
        else:
            child_labels = [_unpack(c)[0] for c in children]
            if all(isinstance(x, int) for x in child_labels):
                total = sum(child_labels)
                if not depth and label != total:
                    raise RootSumMismatch((), index, label, f"{label} != {total}")
                if depth and label > total:
                    raise InternalLabelTooLarge(tuple(path), index, label, f"{label} > {total}")
        index += 1
        stack.extend((c, depth + 1, j) for j, c in reversed(list(enumerate(children))))


def _build(candidate, make):
    """Rebuild a nested candidate bottom-up with ``make(node, children)``."""
    out: list = []
    stack = [(candidate, False)]
    while stack:
        node, done = stack.pop()
        _, children = _unpack(node)
        if done:
            k = len(children)
            kids = out[len(out) - k:] if k else []
            del out[len(out) - k:]
            out.append(make(node, kids))
        else:
            stack.append((node, True))
            stack.extend((c, False) for c in reversed(children))
    return out[0]


def validate(candidate: Candidate) -> Tree:
    """Check ``candidate`` against the β(1,0) conditions and return it as a Tree.

    ``candidate`` is a ``Tree`` or a nested ``(label, [child, ...])`` pair
    (a third element, if present, is ignored).
    Raises a subclass of :class:`InvalidTreeError` naming the first
    violating node in preorder.
    """
    check_conditions(candidate)
    if type(candidate) is Tree:
        return candidate
    return _build(candidate, lambda node, kids: Tree(_unpack(node)[0], kids))


_LABEL = re.compile(r"[1-9][0-9]*")
_IDENT = re.compile(r"[A-Za-z0-9_]+")


def _parse_nested(text: str, labeled: bool):
    """Parse the strict grammar into nested ``[label, children, ident]`` lists."""
    n = len(text)
    if n == 0 or text[0] != "(":
        raise TreeSyntaxError("expected '('", 0)
    pos = 0
    stack: list[list] = []
    root = None
    while True:
        # pos points at "("
        pos += 1
        m = _LABEL.match(text, pos)
        if not m:
            raise TreeSyntaxError("expected a label", pos)
        label = int(m.group())
        pos = m.end()
        ident = None
        if labeled:
            if pos >= n or text[pos] != ":":
                raise TreeSyntaxError("expected ':'", pos)
            m = _IDENT.match(text, pos + 1)
            if not m:
                raise TreeSyntaxError("expected an id", pos + 1)
            ident = m.group()
            pos = m.end()
        node = [label, [], ident]
        if stack:
            stack[-1][1].append(node)
        else:
            root = node
        stack.append(node)
        while True:
            if pos >= n:
                raise TreeSyntaxError("unexpected end of input", pos)
            ch = text[pos]
            if ch == ")":
                stack.pop()
                pos += 1
                if not stack:
                    if pos != n:
                        raise TreeSyntaxError("trailing characters", pos)
                    return root
                continue
            if ch == " ":
                if pos + 1 >= n:
                    raise TreeSyntaxError("unexpected end of input", pos + 1)
                if text[pos + 1] != "(":
                    raise TreeSyntaxError("expected '('", pos + 1)
                pos += 1
                break
            raise TreeSyntaxError(f"unexpected character {ch!r}", pos)


def parse(text: str) -> Tree:
    """Parse canonical text such as ``"(2 (1) (1))"`` into a validated Tree.

    Surrounding whitespace (e.g. a trailing newline) is ignored; inside the
    tree the grammar is strict: exactly one space between siblings.
    """
    stripped = text.strip()
    offset = len(text) - len(text.lstrip())
    try:
        nested = _parse_nested(stripped, labeled=False)
    except TreeSyntaxError as exc:
        raise TreeSyntaxError(str(exc).rsplit(" at position", 1)[0], exc.position + offset) from None
    check_conditions(nested)
    return _build(nested, lambda node, kids: Tree(node[0], kids))


def _render(t: _PlaneTree, head) -> str:
    out: list[str] = []
    stack: list = [t]
    while stack:
        item = stack.pop()
        if type(item) is str:
            out.append(item)
            continue
        out.append("(" + head(item))
        stack.append(")")
        for child in reversed(item.children):
            stack.append(child)
            stack.append(" ")
    return "".join(out)


def render(t: Tree) -> str:
    """Canonical text form; ``parse(render(t)) == t``."""
    return _render(t, lambda node: str(node.label))


# --------------------------------------------------------------------------
# basic statistics used by the algebras


def root_label(t: Tree) -> int:
    return t.label


def right_path(t: _PlaneTree) -> list:
    """Nodes from the root down to the rightmost leaf, both included."""
    path = [t]
    while t.children:
        t = t.children[-1]
        path.append(t)
    return path


def rpath_length(t: _PlaneTree) -> int:
    """Number of edges on the path from the root to the rightmost leaf."""
    length = 0
    while t.children:
        t = t.children[-1]
        length += 1
    return length


def _restored(node: Tree) -> Tree:
    """``node`` as a standalone tree: root label reset to its children's sum."""
    if not node.children:
        return LEAF
    total = sum(c.label for c in node.children)
    return node if total == node.label else Tree(total, node.children)


def _rebuild_up(path: Sequence[Tree], bottom: Tree, bump: int = 0) -> Tree:
    """Replace ``path[-1]`` by ``bottom`` and rebuild its ancestors ``path[:-1]``.

    Every rebuilt ancestor has ``bump`` added to its label.
    """
    new = bottom
    for node in reversed(path[:-1]):
        new = Tree(node.label + bump, node.children[:-1] + (new,))
    return new


# --------------------------------------------------------------------------
# sum algebra


def oplus(u: Tree, v: Tree) -> Tree:
    """Merge the roots of ``u`` and ``v``: labels add, child lists concatenate."""
    if u.is_leaf or v.is_leaf:
        raise LeafOperandError("oplus is undefined on the single-node tree")
    return Tree(u.label + v.label, u.children + v.children)


def lambda_(i: int, t: Tree) -> Tree:
    """Adjoin a new root above ``t``; the new and old root both get label ``i``."""
    if not 1 <= i <= t.label:
        raise IndexOutOfRangeError(f"lambda index {i} outside 1..{t.label}")
    return Tree(i, (Tree(i, t.children),))


# --------------------------------------------------------------------------
# dual algebra


def obslash(u: Tree, v: Tree) -> Tree:
    """Identify the rightmost leaf of ``u`` with the root of ``v``; that node gets label 1."""
    if u.is_leaf or v.is_leaf:
        raise LeafOperandError("obslash is undefined on the single-node tree")
    return _rebuild_up(right_path(u), Tree(1, v.children))


def gamma(i: int, t: Tree) -> Tree:
    """Hang a new rightmost leaf under the ``i``-th right-path node (root is 1).

    The first ``i`` right-path nodes each gain 1. ``gamma(1, LEAF)`` is the edge.
    """
    if t.is_leaf:
        if i != 1:
            raise IndexOutOfRangeError(f"gamma index {i} on the single-node tree")
        return EDGE
    path = right_path(t)
    if not 1 <= i < len(path):
        raise IndexOutOfRangeError(f"gamma index {i} outside 1..{len(path) - 1}")
    x = path[i - 1]
    return _rebuild_up(path[:i], Tree(x.label + 1, x.children + (LEAF,)), bump=1)


# --------------------------------------------------------------------------
# canonical decompositions


@dataclass(frozen=True)
class LeafCase:
    pass


@dataclass(frozen=True)
class Indecomposable:
    i: int
    body: Tree


@dataclass(frozen=True)
class Sum:
    first: Tree
    rest: Tree


@dataclass(frozen=True)
class Gamma:
    i: int
    body: Tree


@dataclass(frozen=True)
class DualSum:
    upper: Tree
    lower: Tree


SumView = Union[LeafCase, Indecomposable, Sum]
DualView = Union[LeafCase, Gamma, DualSum]


def decompose_sum(t: Tree) -> SumView:
    """Write ``t`` as the leaf, ``lambda_(i, body)``, or ``first ⊕ rest``.

    ``first`` is the indecomposable summand carrying the first root child.
    """
    kids = t.children
    if not kids:
        return LeafCase()
    if len(kids) == 1:
        return Indecomposable(t.label, _restored(kids[0]))
    first = kids[0]
    return Sum(Tree(first.label, (first,)), Tree(t.label - first.label, kids[1:]))


def _dual_split_points(path: Sequence[Tree]) -> list[int]:
    """Indices of internal right-path nodes strictly below the root with label 1."""
    return [j for j in range(1, len(path) - 1) if path[j].label == 1]


def decompose_dual(t: Tree) -> DualView:
    """Write ``t`` as the leaf, ``gamma(i, body)``, or ``upper ⊘ lower``.

    The split is taken at the bottommost eligible node, so ``lower`` is
    always a ``Gamma`` shape.
    """
    if t.is_leaf:
        return LeafCase()
    path = right_path(t)
    splits = _dual_split_points(path)
    if splits:
        j = splits[-1]
        return DualSum(_rebuild_up(path[: j + 1], LEAF), _restored(path[j]))
    k = len(path) - 1
    parent = path[k - 1]
    if k == 1 and len(parent.children) == 1:
        return Gamma(1, LEAF)
    body = _rebuild_up(path[:k], Tree(parent.label - 1, parent.children[:-1]), bump=-1)
    return Gamma(k, body)


def recompose(view) -> Tree:
    """Inverse of :func:`decompose_sum` and :func:`decompose_dual`."""
    if isinstance(view, LeafCase):
        return LEAF
    if isinstance(view, Indecomposable):
        return lambda_(view.i, view.body)
    if isinstance(view, Sum):
        return oplus(view.first, view.rest)
    if isinstance(view, Gamma):
        return gamma(view.i, view.body)
    if isinstance(view, DualSum):
        return obslash(view.upper, view.lower)
    raise TypeError(f"not a decomposition view: {view!r}")


def sum_factors(t: Tree) -> list[Tree]:
    """The ⊕-indecomposable summands of ``t``, one per root child."""
    if t.is_leaf:
        raise LeafOperandError("the single-node tree has no summands")
    return [Tree(c.label, (c,)) for c in t.children]


def dual_factors(t: Tree) -> list[Tree]:
    """The ⊘-indecomposable factors of ``t``, top to bottom.

    There is one factor per label-1 node below the root on the right path,
    the rightmost leaf included.
    """
    if t.is_leaf:
        raise LeafOperandError("the single-node tree has no factors")
    path = right_path(t)
    cuts = _dual_split_points(path) + [len(path) - 1]
    factors = []
    top = 0
    for cut in cuts:
        segment = path[top: cut + 1]
        factor = _rebuild_up(segment, LEAF)
        factors.append(factor if top == 0 else _restored(factor))
        top = cut
    return factors


def sum_splits(t: Tree) -> Iterator[tuple[Tree, Tree]]:
    """Every ``(u, v)`` with ``u ⊕ v == t``: one per gap between root children."""
    kids = t.children
    for m in range(1, len(kids)):
        left = sum(c.label for c in kids[:m])
        yield Tree(left, kids[:m]), Tree(t.label - left, kids[m:])


def dual_splits(t: Tree) -> Iterator[tuple[Tree, Tree]]:
    """Every ``(u, v)`` with ``u ⊘ v == t``: one per eligible right-path node."""
    if t.is_leaf:
        return
    path = right_path(t)
    for j in _dual_split_points(path):
        yield _rebuild_up(path[: j + 1], LEAF), _restored(path[j])
