"""Finite Niebrzydowski tribrackets.

A tribracket on ``X = {1..n}`` is a ternary operation ``[a, b, c]`` which is
bijective in each argument when the other two are fixed, and which satisfies

    [c, [a,b,c], [a,c,d]] = [b, [a,b,c], [a,b,d]] = [d, [a,b,d], [a,c,d]]

for all ``a, b, c, d``.  Elements are 1-based at every public boundary and
0-based inside the arrays.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Optional, Sequence

import numpy as np

__all__ = [
    "FAILURE_CAP",
    "InvalidTribracket",
    "Tribracket",
    "ValidationReport",
    "alexander_tribracket",
    "all_subtribrackets",
    "dehn_tribracket",
    "evaluate",
    "find_isomorphism",
    "generated_subtribracket",
    "is_closed",
    "is_homomorphism",
    "make_tribracket",
    "relabel",
    "validate",
]

#: maximum number of witnesses recorded per axiom family
FAILURE_CAP = 16

SUBSET_GUARD = 20


class InvalidTribracket(ValueError):
    """Raised when a tensor fails the axioms; carries the full report."""

    def __init__(self, report: "ValidationReport"):
        self.report = report
        super().__init__(report.summary())


@dataclass
class ValidationReport:
    """Outcome of :func:`validate`.

    ``failures`` holds ``(axiom_id, witness)`` pairs with 1-based witnesses.
    Axiom ids are ``range``, ``uniqueness-right``, ``uniqueness-center``,
    ``uniqueness-left`` and ``compatibility``.  Uniqueness witnesses are
    ``(p, q, v)`` where ``(p, q)`` fixes the line and ``v`` is a value seen
    twice on it.
    """

    n: int
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def by_axiom(self) -> dict:
        out: dict = {}
        for axiom, witness in self.failures:
            out.setdefault(axiom, []).append(witness)
        return out

    def summary(self) -> str:
        if self.ok:
            return f"valid tribracket of order {self.n}"
        lines = [f"invalid tensor of order {self.n}"]
        for axiom, ws in self.by_axiom().items():
            shown = ", ".join(str(w) for w in ws)
            lines.append(f"  {axiom}: {shown}")
        return "\n".join(lines)


def _as_table(t) -> np.ndarray:
    """1-based nested lists or array -> 0-based int64 array, shape-checked."""
    arr = np.asarray(t, dtype=np.int64)
    if arr.ndim != 3 or not (arr.shape[0] == arr.shape[1] == arr.shape[2]) or arr.shape[0] == 0:
        raise ValueError(f"expected an n x n x n tensor, got shape {arr.shape}")
    return arr - 1


def _line_failures(table: np.ndarray, axis: int) -> list:
    """Witnesses of repeated values along ``axis``, as 0-based (p, q, v)."""
    n = table.shape[0]
    moved = np.moveaxis(table, axis, -1)
    srt = np.sort(moved, axis=-1)
    dup = srt[..., 1:] == srt[..., :-1]
    out = []
    for p, q in zip(*np.nonzero(dup.any(axis=-1))):
        v = int(srt[p, q, 1:][dup[p, q]][0])
        out.append((int(p), int(q), v))
        if len(out) >= FAILURE_CAP:
            break
    return out


def _compatibility_failures(table: np.ndarray) -> list:
    n = table.shape[0]
    a = np.arange(n)[:, None, None, None]
    b = np.arange(n)[None, :, None, None]
    c = np.arange(n)[None, None, :, None]
    d = np.arange(n)[None, None, None, :]
    p = table[a, b, c]
    q = table[a, c, d]
    r = table[a, b, d]
    lhs = table[c, p, q]
    mid = table[b, p, r]
    rhs = table[d, r, q]
    bad = (lhs != mid) | (mid != rhs)
    out = []
    for w in zip(*np.nonzero(bad)):
        out.append(tuple(int(x) for x in w))
        if len(out) >= FAILURE_CAP:
            break
    return out


_LINE_AXES = (("uniqueness-right", 2), ("uniqueness-center", 1), ("uniqueness-left", 0))


def validate(t) -> ValidationReport:
    """Check the tribracket axioms on a 1-based n x n x n tensor.

    Never raises on malformed content: problems are listed in the report.
    Compatibility is only examined when the entries are in range.
    """
    table = _as_table(t)
    n = table.shape[0]
    report = ValidationReport(n)
    out_of_range = np.argwhere((table < 0) | (table >= n))
    if len(out_of_range):
        for w in out_of_range[:FAILURE_CAP]:
            report.failures.append(("range", tuple(int(x) + 1 for x in w)))
        return report
    for name, axis in _LINE_AXES:
        for p, q, v in _line_failures(table, axis):
            report.failures.append((name, (p + 1, q + 1, v + 1)))
    for w in _compatibility_failures(table):
        report.failures.append(("compatibility", tuple(x + 1 for x in w)))
    return report


class Tribracket:
    """A validated finite tribracket.

    ``table[a, b, c]`` is ``[a+1, b+1, c+1] - 1``.  The inverse tables satisfy

    * ``table[a, b, right_inv[a, b, c]] == c``
    * ``table[a, center_inv[a, c, b], b] == c``
    * ``table[left_inv[c, a, b], a, b] == c``

    Instances are immutable and safe to share between threads.
    """

    __slots__ = ("n", "table", "right_inv", "center_inv", "left_inv")

    def __init__(self, table: np.ndarray):
        table = np.array(table, dtype=np.int64)
        table.setflags(write=False)
        n = table.shape[0]
        idx = np.arange(n)
        a = idx[:, None, None]
        b = idx[None, :, None]
        x = idx[None, None, :]
        right = np.empty_like(table)
        center = np.empty_like(table)
        left = np.empty_like(table)
        right[a, b, table] = x
        # table[a, x, b] as array indexed [a, b, x]
        tc = np.transpose(table, (0, 2, 1))
        center[a, tc, b] = x
        # table[x, a, b] as array indexed [a, b, x]
        tl = np.transpose(table, (1, 2, 0))
        left[tl, a, b] = x
        for arr in (right, center, left):
            arr.setflags(write=False)
        self.n = n
        self.table = table
        self.right_inv = right
        self.center_inv = center
        self.left_inv = left

    @classmethod
    def from_lists(cls, t) -> "Tribracket":
        """Build from a 1-based nested list, validating first."""
        return make_tribracket(t)

    def eval(self, a: int, b: int, c: int) -> int:
        """``[a, b, c]`` with 1-based arguments and result."""
        n = self.n
        for e in (a, b, c):
            if not 1 <= e <= n:
                raise IndexError(f"element {e} not in 1..{n}")
        return int(self.table[a - 1, b - 1, c - 1]) + 1

    __call__ = eval

    def tensor(self) -> list:
        """1-based nested-list tensor, matrix i, row j, column k."""
        return (self.table + 1).tolist()

    def elements(self) -> range:
        return range(1, self.n + 1)

    def __eq__(self, other) -> bool:
        return isinstance(other, Tribracket) and np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        return hash(self.table.tobytes())

    def __repr__(self) -> str:
        return f"Tribracket(n={self.n})"


def make_tribracket(t) -> Tribracket:
    """Validate a 1-based tensor and return a :class:`Tribracket`.

    Raises :class:`InvalidTribracket` carrying the report on failure.
    """
    report = validate(t)
    if not report.ok:
        raise InvalidTribracket(report)
    return Tribracket(_as_table(t))


def evaluate(X: Tribracket, a: int, b: int, c: int) -> int:
    """``[a, b, c]`` in X (1-based)."""
    return X.eval(a, b, c)


def alexander_tribracket(n: int, t: int, s: int) -> Tribracket:
    """``[a, b, c] = t b + s c - t s a`` over Z_n.

    Residue ``r`` is element ``r + 1``.
    """
    if n < 1:
        raise ValueError("modulus must be positive")
    if gcd(t, n) != 1 or gcd(s, n) != 1:
        raise ValueError(f"t={t} and s={s} must be units mod {n}")
    a = np.arange(n)
    table = (t * a[None, :, None] + s * a[None, None, :] - t * s * a[:, None, None]) % n
    return Tribracket(table)


def _check_group(g: np.ndarray) -> int:
    """Return the 0-based identity of a Cayley table or raise."""
    n = g.shape[0]
    if g.ndim != 2 or g.shape[1] != n:
        raise ValueError("Cayley table must be square")
    if g.min() < 0 or g.max() >= n:
        raise ValueError("Cayley table entries out of range")
    idx = np.arange(n)
    ids = [e for e in range(n) if np.array_equal(g[e], idx) and np.array_equal(g[:, e], idx)]
    if not ids:
        raise ValueError("Cayley table has no identity")
    e = ids[0]
    if not all((g[a] == e).any() and (g[:, a] == e).any() for a in range(n)):
        raise ValueError("Cayley table lacks inverses")
    # (ab)c == a(bc)
    if not np.array_equal(g[g[:, :, None], idx[None, None, :]], g[idx[:, None, None], g[None, :, :]]):
        raise ValueError("Cayley table is not associative")
    return e


def dehn_tribracket(cayley) -> Tribracket:
    """Dehn tribracket ``[a, b, c] = b a^{-1} c`` of a group.

    ``cayley`` is a 1-based multiplication table: entry (i, j) is i*j.
    """
    g = np.asarray(cayley, dtype=np.int64) - 1
    e = _check_group(g)
    inv = np.argmax(g == e, axis=1)
    n = g.shape[0]
    idx = np.arange(n)
    # b * a^{-1}, then * c
    ba = g[idx[None, :], inv[:, None]]
    table = g[ba[:, :, None], idx[None, None, :]]
    return Tribracket(table)


def cyclic_cayley(n: int) -> list:
    """1-based Cayley table of Z_n."""
    a = np.arange(n)
    return ((a[:, None] + a[None, :]) % n + 1).tolist()


def relabel(X: Tribracket, sigma: Sequence[int]) -> Tribracket:
    """Transport X along the bijection ``i -> sigma[i-1]`` (1-based)."""
    s = np.asarray(sigma, dtype=np.int64) - 1
    if sorted(s.tolist()) != list(range(X.n)):
        raise ValueError("sigma is not a permutation")
    table = np.empty_like(X.table)
    a = s[:, None, None]
    b = s[None, :, None]
    c = s[None, None, :]
    table[a, b, c] = s[X.table]
    return Tribracket(table)


def is_homomorphism(f: Sequence[int], X: Tribracket, Y: Tribracket) -> bool:
    """True iff ``[f(a), f(b), f(c)] = f([a, b, c])`` for all triples."""
    m = np.asarray(f, dtype=np.int64) - 1
    if m.shape != (X.n,) or m.min() < 0 or m.max() >= Y.n:
        raise ValueError("f must map 1..n_X into 1..n_Y")
    lhs = Y.table[m[:, None, None], m[None, :, None], m[None, None, :]]
    return bool(np.array_equal(lhs, m[X.table]))


def find_isomorphism(X: Tribracket, Y: Tribracket) -> Optional[tuple]:
    """A bijection ``f`` (as a 1-based tuple, ``f[i-1]`` is the image of i)
    with ``f([a,b,c]) = [f(a),f(b),f(c)]``, or None.

    Candidate images are restricted to elements with the same profile.
    """
    from .polynomial import profile_array

    if X.n != Y.n:
        return None
    n = X.n
    px = [tuple(r) for r in profile_array(X)]
    py = [tuple(r) for r in profile_array(Y)]
    if sorted(px) != sorted(py):
        return None
    cands = [[j for j in range(n) if py[j] == px[i]] for i in range(n)]
    f = [-1] * n
    used = [False] * n
    tx, ty = X.table, Y.table

    def consistent(k: int) -> bool:
        # every triple among 0..k, with k involved, must map correctly
        for a in range(k + 1):
            for b in range(k + 1):
                for c in range(k + 1):
                    if k not in (a, b, c):
                        continue
                    v = tx[a, b, c]
                    w = ty[f[a], f[b], f[c]]
                    if v <= k:
                        if f[v] != w:
                            return False
                    elif used[w]:
                        # f(v) is still unassigned, so w must be free
                        return False
        return True

    def rec(k: int) -> bool:
        if k == n:
            return True
        for j in cands[k]:
            if used[j]:
                continue
            f[k] = j
            used[j] = True
            if consistent(k) and rec(k + 1):
                return True
            used[j] = False
            f[k] = -1
        return False

    if not rec(0):
        return None
    perm = tuple(j + 1 for j in f)
    assert is_homomorphism(perm, X, Y)
    return perm


def _subset0(X: Tribracket, S: Iterable[int]) -> list:
    out = sorted({int(e) for e in S})
    for e in out:
        if not 1 <= e <= X.n:
            raise ValueError(f"element {e} not in 1..{X.n}")
    return [e - 1 for e in out]


def _closure0(table: np.ndarray, seed: Iterable[int]) -> frozenset:
    """Fixed point of S -> S u [S, S, S] on 0-based elements."""
    s = set(seed)
    while True:
        idx = np.fromiter(s, dtype=np.int64)
        vals = table[np.ix_(idx, idx, idx)]
        new = set(np.unique(vals).tolist()) - s
        if not new:
            return frozenset(s)
        s |= new


def is_closed(X: Tribracket, S: Iterable[int]) -> bool:
    """True iff ``[a, b, c] in S`` for all ``a, b, c in S``."""
    s0 = _subset0(X, S)
    if not s0:
        return True
    idx = np.asarray(s0)
    return bool(np.isin(X.table[np.ix_(idx, idx, idx)], idx).all())


def generated_subtribracket(X: Tribracket, seed: Iterable[int]) -> tuple:
    """Smallest closed subset containing ``seed`` (sorted 1-based tuple)."""
    s0 = _subset0(X, seed)
    if not s0:
        raise ValueError("seed must be nonempty")
    return tuple(sorted(e + 1 for e in _closure0(X.table, s0)))


def all_subtribrackets(X: Tribracket) -> list:
    """All nonempty closed subsets, sorted by size then lexicographically.

    Closed sets are generated by joining closures rather than scanning all
    subsets; the order guard is kept for parity with a plain subset scan.
    """
    if X.n > SUBSET_GUARD:
        raise ValueError(f"subtribracket listing is limited to n <= {SUBSET_GUARD}")
    n = X.n
    found = set()
    frontier = [_closure0(X.table, [i]) for i in range(n)]
    while frontier:
        nxt = []
        for S in frontier:
            if S in found:
                continue
            found.add(S)
            for x in range(n):
                if x not in S:
                    T = _closure0(X.table, S | {x})
                    if T not in found:
                        nxt.append(T)
        frontier = nxt
    out = [tuple(sorted(e + 1 for e in S)) for S in found]
    out.sort(key=lambda s: (len(s), s))
    return out


def permutations(n: int):
    """All permutations of 1..n as tuples, lexicographic."""
    return itertools.permutations(range(1, n + 1))
