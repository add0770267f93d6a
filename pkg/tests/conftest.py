import pytest
from hypothesis import strategies as st

from betatrees.core import LEAF, lambda_, oplus

ACCEPTANCE_LINES: list[str] = []


def _grow(children):
    lam = st.tuples(children, st.integers(1, 64)).map(lambda p: lambda_(1 + (p[1] - 1) % p[0].label, p[0]))
    summed = st.tuples(children, children).map(
        lambda p: oplus(p[0], p[1]) if not (p[0].is_leaf or p[1].is_leaf) else lambda_(1, p[0])
    )
    return st.one_of(lam, summed)


# random β(1,0)-trees of moderate size, built through λ and ⊕ only
beta_trees = st.recursive(st.just(LEAF), _grow, max_leaves=40)
nonleaf_trees = beta_trees.filter(lambda t: not t.is_leaf)


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
