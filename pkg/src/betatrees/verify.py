"""Exhaustive property suites over all small β(1,0)-trees.

Each suite is a generator of ``(ok, witness)`` pairs; :func:`run_suites`
counts cases and stops a suite at its first failure, reporting the witness.
Size bounds refer to the node count of the largest tree a check builds.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from . import core, labeled
from .core import EDGE, LEAF, Tree
from .enumeration import levels, oracle_enumerate
from .involution import h, h_dual_check, h_reference
from .stats import dist_table, stats, swap

__all__ = ["SuiteResult", "Family", "SUITES", "run_suites"]


@dataclass
class SuiteResult:
    name: str
    cases: int
    counterexample: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def line(self) -> str:
        if self.passed:
            return f"PASS\t{self.name}\t{self.cases} cases"
        return f"FAIL\t{self.name}\tcounterexample: {self.counterexample}"


class Family:
    """All trees up to ``max_nodes`` nodes, generated once and shared by the suites."""

    def __init__(self, max_nodes: int, oracle_max: int):
        self.max_nodes = max_nodes
        self.oracle_max = oracle_max
        self.by_size = dict(levels(max_nodes))

    def restricted(self, max_nodes: int) -> "Family":
        """A view of the same trees capped at a smaller size."""
        view = Family.__new__(Family)
        view.max_nodes = min(max_nodes, self.max_nodes)
        view.oracle_max = self.oracle_max
        view.by_size = self.by_size
        return view

    def level(self, n: int) -> list[Tree]:
        return self.by_size.get(n, [])

    def upto(self, m: int, start: int = 1) -> Iterator[Tree]:
        for n in range(start, min(m, self.max_nodes) + 1):
            yield from self.by_size[n]

    def nonleaf(self, m: int) -> Iterator[Tree]:
        return self.upto(m, start=2)

    def pairs(self, result_max: int, overlap: int = 1) -> Iterator[tuple[Tree, Tree]]:
        """Non-leaf ``(u, v)`` with ``|u| + |v| - overlap <= result_max``."""
        for a in range(2, self.max_nodes + 1):
            for b in range(2, result_max + overlap - a + 1):
                if b > self.max_nodes:
                    break
                for u in self.by_size[a]:
                    for v in self.by_size[b]:
                        yield u, v


SUITES: dict[str, Callable[[Family], Iterator]] = {}


def suite(name):
    def register(fn):
        SUITES[name] = fn
        return fn

    return register


def _fmt(witness) -> str:
    if isinstance(witness, tuple):
        return " ; ".join(_fmt(w) for w in witness)
    return str(witness)


# --------------------------------------------------------------------------
# core


@suite("round-trip")
def _round_trip(fam):
    for t in fam.upto(fam.max_nodes):
        yield core.parse(core.render(t)) == t, t


@suite("validate-closure")
def _closure(fam):
    for t in fam.upto(fam.max_nodes):
        try:
            core.check_conditions(t)
            yield True, t
        except core.InvalidTreeError:
            yield False, t


@suite("decomposition-inverses")
def _inverses(fam):
    for t in fam.upto(fam.max_nodes):
        sv, dv = core.decompose_sum(t), core.decompose_dual(t)
        ok = core.recompose(sv) == t and core.recompose(dv) == t
        if isinstance(sv, core.Sum):
            ok &= len(sv.first.children) == 1
        if isinstance(dv, core.DualSum):
            ok &= isinstance(core.decompose_dual(dv.lower), core.Gamma)
        if isinstance(dv, core.Gamma):
            ok &= dv.i == core.rpath_length(t)
        if not t.is_leaf:
            s = stats(t)
            sf, df = core.sum_factors(t), core.dual_factors(t)
            folded_sum = sf[0]
            for f in sf[1:]:
                folded_sum = core.oplus(folded_sum, f)
            folded_dual = df[0]
            for f in df[1:]:
                folded_dual = core.obslash(folded_dual, f)
            ok &= folded_sum == t and folded_dual == t
            ok &= len(sf) == s.sub and len(df) == s.rsub
        yield ok, t


@suite("eq-identities")
def _eq_identities(fam):
    rp = core.rpath_length
    for u, v in fam.pairs(fam.max_nodes):
        s, d = core.oplus(u, v), core.obslash(u, v)
        ok = (
            s.label == u.label + v.label
            and rp(s) == rp(v)
            and d.label == u.label
            and rp(d) == rp(u) + rp(v)
        )
        yield ok, (u, v)


@suite("lemma-LG")
def _lemma_lg_assoc(fam):
    m = fam.max_nodes
    for u, v in fam.pairs(m - 1):
        uv = core.obslash(u, v)
        for t in fam.nonleaf(m - uv.size + 1):
            yield core.oplus(t, uv) == core.obslash(core.oplus(t, u), v), (t, u, v)


@suite("lemma-lG&gL")
def _lemma_mixed(fam):
    m = fam.max_nodes
    for u, v in fam.pairs(m - 1):
        uv = core.obslash(u, v)
        for i in range(1, u.label + 1):
            yield core.lambda_(i, uv) == core.obslash(core.lambda_(i, u), v), (i, u, v)
        w = core.oplus(u, v)
        for i in range(1, core.rpath_length(v) + 1):
            yield core.gamma(i, w) == core.oplus(u, core.gamma(i, v)), (i, u, v)


@suite("lemma-lg")
def _lemma_lg(fam):
    m = fam.max_nodes
    for t in fam.nonleaf(m - 1):
        yield core.gamma(1, t) == core.oplus(t, EDGE), t
        yield core.lambda_(1, t) == core.obslash(EDGE, t), t
    for t in fam.upto(m - 2):
        for j in range(1, t.label + 1):
            for i in range(1, core.rpath_length(t) + 1):
                lhs = core.gamma(i + 1, core.lambda_(j, t))
                rhs = core.lambda_(j + 1, core.gamma(i, t))
                yield lhs == rhs, (i, j, t)


@suite("lambda-bijection")
def _lambda_bijection(fam):
    for n in range(2, fam.max_nodes + 1):
        images = [core.lambda_(i, t) for t in fam.level(n - 1) for i in range(1, t.label + 1)]
        indecomposable = {t for t in fam.level(n) if len(t.children) == 1}
        yield len(set(images)) == len(images) and set(images) == indecomposable, f"level {n}"


# --------------------------------------------------------------------------
# enumeration


@suite("oracle-equivalence")
def _oracle(fam):
    for n in range(1, min(fam.oracle_max, fam.max_nodes) + 1):
        yield set(fam.level(n)) == oracle_enumerate(n), f"level {n}"


@suite("no-duplicates")
def _no_duplicates(fam):
    for n in range(1, fam.max_nodes + 1):
        trees = fam.level(n)
        yield len({core.render(t) for t in trees}) == len(trees), f"level {n}"


@suite("partition")
def _partition(fam):
    for n in range(2, fam.max_nodes + 1):
        trees = fam.level(n)
        indec = sum(1 for t in trees if len(t.children) == 1)
        dec = sum(1 for t in trees if len(t.children) > 1)
        expected = sum(t.label for t in fam.level(n - 1))
        yield indec == expected and indec + dec == len(trees), f"level {n}"


# --------------------------------------------------------------------------
# involution


@suite("involution")
def _involution(fam):
    for t in fam.upto(fam.max_nodes):
        ht = h(t)
        yield ht.size == t.size and h(ht) == t and h_reference(t) == ht, t


@suite("split-independence")
def _split_independence(fam):
    for t in fam.upto(fam.max_nodes):
        ht = h(t)
        for u, v in core.sum_splits(t):
            yield core.obslash(h(v), h(u)) == ht, t


@suite("h-dual")
def _h_dual(fam):
    for t in fam.upto(fam.max_nodes - 1):
        yield all(h_dual_check(t)), t


@suite("h-bijection")
def _h_bijection(fam):
    for n in range(1, fam.max_nodes + 1):
        trees = fam.level(n)
        yield Counter(map(h, trees)) == Counter(trees), f"level {n}"


@suite("h-indecomposable")
def _h_indecomposable(fam):
    for t in fam.nonleaf(fam.max_nodes):
        indec = isinstance(core.decompose_sum(t), core.Indecomposable)
        gamma_shape = isinstance(core.decompose_dual(h(t)), core.Gamma)
        yield indec == gamma_shape, t


# --------------------------------------------------------------------------
# statistics


@suite("thm-h")
def _thm_h(fam):
    for t in fam.nonleaf(fam.max_nodes):
        yield stats(h(t)) == swap(stats(t)), t


@suite("equidistribution")
def _equidistribution(fam):
    # B_1 is excluded: the swap only holds on trees with an edge
    for n in range(2, fam.max_nodes + 1):
        a = dist_table(fam.level(n), ("leaves", "root", "sub"))
        b = dist_table(fam.level(n), ("internal", "rpath", "rsub"))
        yield a.to_tsv(header=False) == b.to_tsv(header=False), f"level {n}"


@suite("stat-consistency")
def _stat_consistency(fam):
    rp = core.rpath_length
    for t in fam.upto(fam.max_nodes - 1):
        for i in range(1, t.label + 1):
            lt = core.lambda_(i, t)
            yield lt.label == i and rp(lt) == rp(t) + 1, (i, t)
        for i in range(1, max(rp(t), 1) + 1):
            yield rp(core.gamma(i, t)) == i, (i, t)
    for t in fam.nonleaf(fam.max_nodes):
        s = stats(t)
        ok = s.leaves + s.internal == t.size and 1 <= s.root <= s.leaves and s.rpath <= s.internal
        yield ok, t
    yield stats(LEAF) == (1, 0, 1, 0, 0, 0), LEAF


# --------------------------------------------------------------------------
# labeled


def _labeled(fam):
    for t in fam.nonleaf(fam.max_nodes):
        yield labeled.canonical_labeling(t)


@suite("thm-h2")
def _thm_h2(fam):
    for lt in _labeled(fam):
        w, hw = labeled.words(lt), labeled.words(labeled.labeled_h(lt))
        yield hw[1:] == labeled.swap_words(w)[1:], lt


@suite("preorder-reversal")
def _preorder_reversal(fam):
    for lt in _labeled(fam):
        yield labeled.labeled_h(lt).ids() == lt.ids()[::-1], lt


@suite("labeled-involution")
def _labeled_involution(fam):
    for lt in _labeled(fam):
        hl = labeled.labeled_h(lt)
        ok = labeled.labeled_h(hl) == lt and labeled.labeled_h_reference(lt) == hl
        ok &= labeled.forget(hl) == h(labeled.forget(lt))
        yield ok, lt


@suite("greedy-root")
def _greedy_root(fam):
    for lt in _labeled(fam):
        yield labeled.words(lt) == labeled.words_by_recursion(lt), lt


@suite("scalar-shadows")
def _scalar_shadows(fam):
    for lt in _labeled(fam):
        w, s = labeled.words(lt), stats(labeled.forget(lt))
        yield tuple(map(len, w[1:])) == tuple(s), lt


def run_suites(
    max_nodes: int,
    oracle_max: int = 6,
    names: Optional[list[str]] = None,
    on_result: Optional[Callable[[SuiteResult], None]] = None,
) -> list[SuiteResult]:
    fam = Family(max_nodes, oracle_max)
    results = []
    for name in names or list(SUITES):
        cases = 0
        bad = None
        for ok, witness in SUITES[name](fam):
            cases += 1
            if not ok:
                bad = _fmt(witness)
                break
        result = SuiteResult(name, cases, bad)
        results.append(result)
        if on_result:
            on_result(result)
    return results
