import random

from hypothesis import strategies as st

from latcut import Poset

_ACCEPTANCE_LINES = []


def record_criterion(line):
    _ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


@st.composite
def posets(draw, max_n=6):
    """Random poset via upper-triangle relation bits plus transitive closure.

    Keeping the relation upper-triangular guarantees acyclicity; closure is
    done here so the strategy never depends on the package's own closure.
    """
    n = draw(st.integers(min_value=0, max_value=max_n))
    up = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if draw(st.booleans()):
                up[i] |= 1 << j
    for i in range(n - 2, -1, -1):
        for j in range(i + 1, n):
            if up[i] >> j & 1:
                up[i] |= up[j]
    return Poset([str(i + 1) for i in range(n)], tuple(up), _trusted=True)


def shuffled_relabeling(p, seed):
    """The same abstract poset with permuted element indices and fresh labels."""
    rng = random.Random(seed)
    perm = list(range(p.n))
    rng.shuffle(perm)
    up = [0] * p.n
    labels = [None] * p.n
    for i in range(p.n):
        labels[perm[i]] = "r%d" % i
        for j in range(p.n):
            if p.up[i] >> j & 1:
                up[perm[i]] |= 1 << perm[j]
    return Poset(labels, tuple(up), _trusted=True), perm
