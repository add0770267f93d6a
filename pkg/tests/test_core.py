import itertools

import pytest
from hypothesis import given

from betatrees import core
from betatrees.core import (
    EDGE,
    LEAF,
    DualSum,
    Gamma,
    Indecomposable,
    LeafCase,
    Sum,
    Tree,
    decompose_dual,
    decompose_sum,
    dual_factors,
    gamma,
    lambda_,
    obslash,
    oplus,
    parse,
    render,
    rpath_length,
    sum_factors,
    validate,
)
from betatrees.enumeration import trees

from conftest import beta_trees, nonleaf_trees

P = parse
EXAMPLE = "(4 (1 (2 (1) (1)) (1)) (3 (1) (1) (1)))"
EXAMPLE_IMAGE = "(2 (2 (2 (1) (1 (1 (2 (1) (1))) (1)))))"


def upto(m, start=1):
    for n in range(start, m + 1):
        yield from trees(n)


class TestValidate:
    def test_leaf(self):
        assert validate((1, [])) == LEAF

    def test_cherry(self):
        assert validate((2, [(1, []), (1, [])])) == Tree(2, (LEAF, LEAF))

    @pytest.mark.parametrize(
        "candidate, error, path",
        [
            ((3, [(1, []), (1, [])]), core.RootSumMismatch, ()),
            ((2, []), core.LeafLabelNotOne, ()),
            ((1, [(1, [(2, [])])]), core.LeafLabelNotOne, (0, 0)),
            ((2, [(2, [(1, [])]), (0, [])]), core.InternalLabelTooLarge, (0,)),
            ((0, []), core.NonPositiveLabel, ()),
            ((2, [(1, [(1, []), (0, [])]), (1, [])]), core.NonPositiveLabel, (0, 1)),
            ((3, [(2, [(1, [])]), (1, [])]), core.InternalLabelTooLarge, (0,)),
            ((2, [(1, [(1, [])]), (1, [(2, [(1, [])])])]), core.InternalLabelTooLarge, (1, 0)),
        ],
    )
    def test_errors_name_first_violation(self, candidate, error, path):
        with pytest.raises(error) as info:
            validate(candidate)
        assert info.value.path == path

    def test_preorder_index_reported(self):
        with pytest.raises(core.LeafLabelNotOne) as info:
            validate((2, [(1, [(1, [])]), (1, [(3, [])])]))
        assert info.value.index == 4

    def test_accepts_exactly_the_generated_trees(self):
        # every labeling of every shape on 5 nodes, filtered by validate
        from betatrees.enumeration import plane_shapes, _parents, _nest

        n = 5
        accepted = set()
        for shape in plane_shapes(n):
            parents = _parents(shape)
            for labels in itertools.product(range(1, n + 1), repeat=n):
                try:
                    accepted.add(validate(_nest(labels, parents)))
                except core.InvalidTreeError:
                    pass
        assert accepted == set(trees(n))


class TestParseRender:
    def test_edge(self):
        assert P("(1 (1))") == EDGE

    def test_nested(self):
        t = P("(2 (2 (1) (1)))")
        assert t.label == 2 and len(t.children) == 1
        assert t.children[0] == Tree(2, (LEAF, LEAF))
        assert t == lambda_(2, oplus(lambda_(1, LEAF), lambda_(1, LEAF)))

    @pytest.mark.parametrize(
        "text, position",
        [("(2 (1)", 6), ("", 0), ("(1 )", 3), ("(1  (1))", 3), ("(01)", 1), ("(1)(1)", 3), ("(1 x)", 3)],
    )
    def test_syntax_errors(self, text, position):
        with pytest.raises(core.TreeSyntaxError) as info:
            P(text)
        assert info.value.position == position

    def test_validation_error_through_parse(self):
        with pytest.raises(core.RootSumMismatch):
            P("(3 (1) (1))")

    def test_render(self):
        assert render(LEAF) == "(1)"
        assert render(EDGE) == "(1 (1))"
        t = oplus(
            lambda_(1, oplus(lambda_(2, oplus(EDGE, EDGE)), EDGE)),
            lambda_(3, oplus(oplus(EDGE, EDGE), EDGE)),
        )
        assert render(t) == EXAMPLE

    def test_surrounding_whitespace(self):
        assert P("  (1 (1))\n") == EDGE

    def test_round_trip_exhaustive(self):
        for t in upto(8):
            text = render(t)
            assert P(text) == t
            assert render(P(text)) == text

    @given(beta_trees)
    def test_round_trip_random(self, t):
        assert P(render(t)) == t


class TestValueSemantics:
    def test_immutable(self):
        with pytest.raises(AttributeError):
            EDGE.label = 5

    def test_equality_and_hash(self):
        a, b = P(EXAMPLE), P(EXAMPLE)
        assert a == b and hash(a) == hash(b) and a is not b
        assert a != P(EXAMPLE_IMAGE)
        assert len({a, b}) == 1

    def test_size(self):
        assert P(EXAMPLE).size == 10

    def test_deep_tree_is_fine(self):
        t = LEAF
        for _ in range(20000):
            t = lambda_(1, t)
        text = render(t)
        assert P(text) == t
        assert rpath_length(t) == 20000
        assert hash(t) == hash(P(text))


class TestBasics:
    def test_root_label(self):
        assert core.root_label(LEAF) == 1
        assert core.root_label(P("(2 (1) (1))")) == 2
        assert core.root_label(P(EXAMPLE)) == 4

    def test_rpath_length(self):
        assert rpath_length(LEAF) == 0
        assert rpath_length(P("(1 (1 (1)))")) == 2
        assert rpath_length(P(EXAMPLE)) == 2


class TestSumAlgebra:
    @pytest.mark.parametrize(
        "u, v, expected",
        [
            ("(1 (1))", "(2 (1) (1))", "(3 (1) (1) (1))"),
            ("(2 (1) (1))", "(1 (1))", "(3 (1) (1) (1))"),
            ("(1 (1))", "(1 (1))", "(2 (1) (1))"),
        ],
    )
    def test_oplus(self, u, v, expected):
        assert oplus(P(u), P(v)) == P(expected)

    def test_oplus_rejects_leaf(self):
        with pytest.raises(core.LeafOperandError):
            oplus(LEAF, EDGE)
        with pytest.raises(core.LeafOperandError):
            oplus(EDGE, LEAF)

    def test_oplus_associative(self):
        small = list(upto(5, start=2))
        for a, b, c in itertools.product(small, repeat=3):
            assert oplus(oplus(a, b), c) == oplus(a, oplus(b, c))

    @pytest.mark.parametrize(
        "i, t, expected",
        [
            (1, "(1)", "(1 (1))"),
            (2, "(2 (1) (1))", "(2 (2 (1) (1)))"),
            (1, "(2 (1) (1))", "(1 (1 (1) (1)))"),
        ],
    )
    def test_lambda(self, i, t, expected):
        out = lambda_(i, P(t))
        assert out == P(expected)
        assert validate(out) == out

    @pytest.mark.parametrize("i, t", [(0, "(1)"), (2, "(1)"), (3, "(2 (1) (1))")])
    def test_lambda_range(self, i, t):
        with pytest.raises(core.IndexOutOfRangeError):
            lambda_(i, P(t))


class TestDualAlgebra:
    @pytest.mark.parametrize(
        "u, v, expected",
        [
            ("(1 (1))", "(1 (1))", "(1 (1 (1)))"),
            ("(1 (1))", "(2 (2 (1) (1)))", "(1 (1 (2 (1) (1))))"),
            ("(2 (2 (2 (1) (1))))", "(2 (1 (2 (1) (1))) (1))", EXAMPLE_IMAGE),
        ],
    )
    def test_obslash(self, u, v, expected):
        assert obslash(P(u), P(v)) == P(expected)

    def test_obslash_rejects_leaf(self):
        with pytest.raises(core.LeafOperandError):
            obslash(EDGE, LEAF)

    def test_obslash_associative(self):
        small = list(upto(5, start=2))
        for a, b, c in itertools.product(small, repeat=3):
            assert obslash(obslash(a, b), c) == obslash(a, obslash(b, c))

    @pytest.mark.parametrize(
        "i, t, expected",
        [
            (1, "(1 (1))", "(2 (1) (1))"),
            (2, "(1 (1 (1)))", "(2 (2 (1) (1)))"),
            (3, "(1 (1 (1 (1))))", "(2 (2 (2 (1) (1))))"),
            (1, "(1)", "(1 (1))"),
        ],
    )
    def test_gamma(self, i, t, expected):
        out = gamma(i, P(t))
        assert out == P(expected)
        assert rpath_length(out) == i

    @pytest.mark.parametrize("i, t", [(2, "(1)"), (0, "(1 (1))"), (2, "(1 (1))"), (3, "(1 (1 (1)))")])
    def test_gamma_range(self, i, t):
        with pytest.raises(core.IndexOutOfRangeError):
            gamma(i, P(t))

    def test_results_valid(self):
        for u in upto(5, start=2):
            for v in upto(5, start=2):
                validate(obslash(u, v))
                validate(oplus(u, v))
            for i in range(1, rpath_length(u) + 1):
                validate(gamma(i, u))


class TestDecompositions:
    def test_sum_examples(self):
        assert decompose_sum(LEAF) == LeafCase()
        assert decompose_sum(P("(2 (2 (1) (1)))")) == Indecomposable(2, P("(2 (1) (1))"))
        assert decompose_sum(P("(3 (1) (1) (1))")) == Sum(EDGE, P("(2 (1) (1))"))

    def test_dual_examples(self):
        assert decompose_dual(LEAF) == LeafCase()
        assert decompose_dual(EDGE) == Gamma(1, LEAF)
        assert decompose_dual(P("(2 (2 (1) (1)))")) == Gamma(2, P("(1 (1 (1)))"))
        assert decompose_dual(P("(1 (1 (1)))")) == DualSum(EDGE, EDGE)

    def test_factor_examples(self):
        assert sum_factors(P("(3 (1) (1) (1))")) == [EDGE, EDGE, EDGE]
        assert dual_factors(P("(1 (1 (1 (1))))")) == [EDGE, EDGE, EDGE]
        assert sum_factors(P("(2 (1) (1))")) == [EDGE, EDGE]
        assert dual_factors(P("(2 (1) (1))")) == [P("(2 (1) (1))")]

    def test_factors_reject_leaf(self):
        with pytest.raises(core.LeafOperandError):
            sum_factors(LEAF)
        with pytest.raises(core.LeafOperandError):
            dual_factors(LEAF)

    def test_inverses_exhaustive(self):
        for t in upto(9):
            sv, dv = decompose_sum(t), decompose_dual(t)
            assert core.recompose(sv) == t
            assert core.recompose(dv) == t
            if len(t.children) == 1:
                assert isinstance(sv, Indecomposable) and sv.i == t.label
            elif t.children:
                assert isinstance(sv, Sum) and len(sv.first.children) == 1
            if isinstance(dv, Gamma):
                assert dv.i == rpath_length(t)
            if isinstance(dv, DualSum):
                assert isinstance(decompose_dual(dv.lower), Gamma)

    def test_factor_folds_exhaustive(self):
        for t in upto(8, start=2):
            sf, df = sum_factors(t), dual_factors(t)
            folded = sf[0]
            for f in sf[1:]:
                folded = oplus(folded, f)
            assert folded == t
            folded = df[0]
            for f in df[1:]:
                folded = obslash(folded, f)
            assert folded == t
            assert all(isinstance(decompose_dual(f), Gamma) for f in df)
            assert all(len(f.children) == 1 for f in sf)

    def test_all_splits_recompose(self):
        for t in upto(7, start=2):
            for u, v in core.sum_splits(t):
                assert oplus(u, v) == t
            for u, v in core.dual_splits(t):
                assert obslash(u, v) == t

    @given(nonleaf_trees)
    def test_inverses_random(self, t):
        assert core.recompose(decompose_sum(t)) == t
        assert core.recompose(decompose_dual(t)) == t


def _pairs(result_max):
    by = {n: trees(n) for n in range(2, result_max)}
    for a in by:
        for b in by:
            if a + b - 1 <= result_max:
                for u in by[a]:
                    for v in by[b]:
                        yield u, v


class TestIdentities:
    def test_eq_identities(self):
        for u, v in _pairs(8):
            assert oplus(u, v).label == u.label + v.label
            assert rpath_length(oplus(u, v)) == rpath_length(v)
            assert obslash(u, v).label == u.label
            assert rpath_length(obslash(u, v)) == rpath_length(u) + rpath_length(v)

    def test_lemma_oplus_obslash_associate(self):
        for u, v in _pairs(6):
            for t in upto(8 - (u.size + v.size - 1) + 1, start=2):
                assert oplus(t, obslash(u, v)) == obslash(oplus(t, u), v)

    def test_lemma_lambda_gamma_commute_with_other_sum(self):
        for u, v in _pairs(7):
            for i in range(1, u.label + 1):
                assert lambda_(i, obslash(u, v)) == obslash(lambda_(i, u), v)
            for i in range(1, rpath_length(v) + 1):
                assert gamma(i, oplus(u, v)) == oplus(u, gamma(i, v))

    def test_lemma_lambda_gamma_shift(self):
        for t in upto(7):
            if not t.is_leaf:
                assert gamma(1, t) == oplus(t, EDGE)
                assert lambda_(1, t) == obslash(EDGE, t)
            for j in range(1, t.label + 1):
                for i in range(1, rpath_length(t) + 1):
                    assert gamma(i + 1, lambda_(j, t)) == lambda_(j + 1, gamma(i, t))

    def test_lambda_bijection(self):
        for n in range(2, 9):
            level = trees(n)
            images = [lambda_(i, t) for t in trees(n - 1) for i in range(1, t.label + 1)]
            assert len(set(images)) == len(images)
            assert set(images) == {t for t in level if len(t.children) == 1}
