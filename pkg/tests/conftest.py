"""Shared fixtures and independent brute-force oracles.

The oracles here deliberately avoid the package's own search code: they
loop over raw Python lists so that agreement is meaningful.
"""

import itertools
import re
import sys

import numpy as np
import pytest

from tribracket import Tribracket
from tribracket.enumeration import enumerate_tables
from tribracket.fixtures import fixture_path, load_tensor_fixture


def naive_is_tribracket(t) -> bool:
    """Axioms checked literally on a 1-based nested list."""
    n = len(t)
    E = range(1, n + 1)

    def br(a, b, c):
        return t[a - 1][b - 1][c - 1]

    for a in E:
        for b in E:
            if sorted(br(a, b, x) for x in E) != list(E):
                return False
            if sorted(br(a, y, b) for y in E) != list(E):
                return False
            if sorted(br(z, a, b) for z in E) != list(E):
                return False
    for a, b, c, d in itertools.product(E, repeat=4):
        p, q, r = br(a, b, c), br(a, c, d), br(a, b, d)
        v1, v2, v3 = br(c, p, q), br(b, p, r), br(d, r, q)
        if not v1 == v2 == v3:
            return False
    return True


def naive_closed_subsets(X: Tribracket) -> list:
    """Every nonempty closed subset, by scanning the power set (1-based)."""
    out = []
    for r in range(1, X.n + 1):
        for S in itertools.combinations(range(1, X.n + 1), r):
            s = set(S)
            if all(X.eval(a, b, c) in s for a in S for b in S for c in S):
                out.append(S)
    return out


def naive_closure(X: Tribracket, seed) -> tuple:
    """Intersection of all closed supersets of the seed."""
    seed = set(seed)
    sups = [set(S) for S in naive_closed_subsets(X) if seed <= set(S)]
    return tuple(sorted(set.intersection(*sups)))


def naive_colorings(X: Tribracket, d) -> list:
    """All region assignments satisfying every relation, 1-based, sorted."""
    rels = [tuple(r) for r in d.relations()]
    out = []
    for col in itertools.product(range(1, X.n + 1), repeat=d.n_regions):
        if all(X.eval(col[a], col[b], col[c]) == col[e] for a, b, c, e in rels):
            out.append(col)
    return out


_X = re.compile(r"X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]")


def raw_crossings(name: str) -> list:
    """Crossing tuples exactly as written in a fixture file."""
    text = fixture_path(name, ".pd").read_text()
    text = "\n".join(ln.split("#", 1)[0] for ln in text.splitlines())
    return [tuple(int(v) for v in m) for m in _X.findall(text)]


@pytest.fixture(scope="session")
def small_tribrackets():
    """Every tribracket of order 1..4 (183 structures)."""
    out = []
    for n in range(1, 5):
        out += [Tribracket(t.astype(np.int64)) for t in enumerate_tables(n)]
    return out


@pytest.fixture(scope="session")
def order5_tribrackets():
    return [Tribracket(t.astype(np.int64)) for t in enumerate_tables(5)]


@pytest.fixture(scope="session")
def tensors():
    names = ["example3", "example5a", "example5b", "example6", "example7",
             "example10", "order4", "order5"]
    return {name: load_tensor_fixture(name) for name in names}


def pytest_terminal_summary(terminalreporter):
    """Repeat the acceptance lines after the run."""
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(results):
        terminalreporter.write_line(results[k])
