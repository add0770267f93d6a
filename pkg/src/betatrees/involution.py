"""The involution h on β(1,0)-trees.

    h(leaf)     = leaf
    h(λ_i t)    = γ_i h(t)
    h(u ⊕ v)    = h(v) ⊘ h(u)

When ``t`` has root children ``c_1, ..., c_k`` the canonical ⊕-split peels off
one summand per child, ``λ_{c_j}(body_j)`` with ``body_j`` the subtree at
``c_j`` as a standalone tree, and the recursion unrolls to

    h(t) = γ_{c_k} h(body_k) ⊘ ... ⊘ γ_{c_1} h(body_1)

folded from the left. :func:`h` evaluates exactly this, bottom-up over an
explicit work-list on scratch mutable nodes, so it needs no recursion and
runs in time close to linear in the size of the tree. :func:`h_reference`
is the three-clause definition written down literally on top of the
immutable core operations; it is slower and recursive, and exists to
cross-check :func:`h`.
"""

from __future__ import annotations

from typing import Callable

from . import core
from .core import IndexOutOfRangeError, Tree, _PlaneTree

__all__ = ["h", "h_reference", "h_dual_check", "apply_h"]


class _Scratch:
    __slots__ = ("label", "ident", "children")

    def __init__(self, label, ident, children):
        self.label = label
        self.ident = ident
        self.children = children


def _gamma(i: int, ident, part):
    """In-place γ on a scratch tree ``(root, right_path)``."""
    root, rpath = part
    leaf = _Scratch(1, ident, [])
    if len(rpath) == 1:
        if i != 1:
            raise IndexOutOfRangeError(f"gamma index {i} on the single-node tree")
        root.children.append(leaf)
        rpath.append(leaf)
        return part
    if not 1 <= i < len(rpath):
        raise IndexOutOfRangeError(f"gamma index {i} outside 1..{len(rpath) - 1}")
    rpath[i - 1].children.append(leaf)
    for node in rpath[:i]:
        node.label += 1
    del rpath[i:]
    rpath.append(leaf)
    return part


def _obslash(upper, lower):
    """In-place ⊘; the join node takes the lower root's identity."""
    join = upper[1][-1]
    join.label = 1
    join.ident = lower[0].ident
    join.children = lower[0].children
    upper[1].extend(lower[1][1:])
    return upper


def _freeze(root: _Scratch, make: Callable):
    out: list = []
    stack = [(root, False)]
    while stack:
        node, done = stack.pop()
        if done:
            k = len(node.children)
            kids = out[len(out) - k:] if k else []
            del out[len(out) - k:]
            out.append(make(node.label, node.ident, kids))
        else:
            stack.append((node, True))
            stack.extend((c, False) for c in reversed(node.children))
    return out[0]


def apply_h(t: _PlaneTree, make: Callable, ident: Callable = lambda node: None):
    """Run h on any plane tree, building the result with ``make(label, id, children)``.

    ``ident(node)`` supplies the identity token carried through the
    computation; the unlabeled h ignores it.
    """
    results: list = []
    stack = [(t, False)]
    while stack:
        node, done = stack.pop()
        kids = node.children
        if not kids:
            leaf = _Scratch(1, ident(node), [])
            results.append((leaf, [leaf]))
            continue
        if not done:
            stack.append((node, True))
            stack.extend((c, False) for c in reversed(kids))
            continue
        k = len(kids)
        parts = results[len(results) - k:]
        del results[len(results) - k:]
        x = ident(node)
        acc = _gamma(kids[-1].label, x, parts[-1])
        for child, part in zip(reversed(kids[:-1]), reversed(parts[:-1])):
            acc = _obslash(acc, _gamma(child.label, x, part))
        results.append(acc)
    return _freeze(results[0][0], make)


def h(t: Tree) -> Tree:
    """Apply the involution h. Stack-safe for arbitrarily deep trees."""
    return apply_h(t, lambda label, _ident, kids: Tree(label, kids))


def h_reference(t: Tree) -> Tree:
    """h straight from its defining clauses, over the canonical ⊕-split."""
    view = core.decompose_sum(t)
    if isinstance(view, core.LeafCase):
        return core.LEAF
    if isinstance(view, core.Indecomposable):
        return core.gamma(view.i, h_reference(view.body))
    return core.obslash(h_reference(view.rest), h_reference(view.first))


def h_dual_check(t: Tree) -> tuple[bool, bool, bool]:
    """Evaluate the three dual clauses of h on ``t``.

    Returns ``(leaf clause, gamma clause, obslash clause)``:
    ``h(leaf) == leaf`` when ``t`` is the leaf; ``h(γ_i t) == λ_i h(t)`` for
    every legal ``i``; ``h(u ⊘ v) == h(v) ⊕ h(u)`` for every way of writing
    ``t = u ⊘ v``. Clauses with nothing to check are ``True``.
    """
    leaf_ok = h(t) == t if t.is_leaf else True
    ht = h(t)
    top = 1 if t.is_leaf else core.rpath_length(t)
    gamma_ok = all(h(core.gamma(i, t)) == core.lambda_(i, ht) for i in range(1, top + 1))
    split_ok = all(core.oplus(h(v), h(u)) == ht for u, v in core.dual_splits(t))
    return leaf_ok, gamma_ok, split_ok
