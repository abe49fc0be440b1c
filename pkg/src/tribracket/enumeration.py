"""Exhaustive enumeration of small tribrackets.

Cells are filled in lexicographic ``(i, j, k)`` order by a compiled
backtracking search (see ``_search``).  The tree is split at the first
matrix slice ``i = 1``; the resulting subtrees are independent and are
explored by a thread pool whose size is capped by ``TRIBRACKET_THREADS``.
Results are concatenated in subtree order, so the output is the
lexicographic order of the flattened tensors whatever the scheduling.
"""

from __future__ import annotations

import itertools
import os
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from . import _search
from .algebra import Tribracket
from .polynomial import TriPolynomial, canonical_string

__all__ = [
    "ENUMERATION_GUARD",
    "SPECTRUM_GUARD",
    "Spectrum",
    "canonical_form",
    "enumerate_tables",
    "enumerate_tribrackets",
    "polynomial_spectrum",
    "worker_count",
]

ENUMERATION_GUARD = 6
SPECTRUM_GUARD = 5


def worker_count() -> int:
    """Worker cap from ``TRIBRACKET_THREADS``, else the available CPUs."""
    env = os.environ.get("TRIBRACKET_THREADS", "").strip()
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise ValueError(f"TRIBRACKET_THREADS must be an integer, got {env!r}") from None
    try:
        return max(1, len(os.sched_getaffinity(0)))
    except AttributeError:  # pragma: no cover
        return max(1, os.cpu_count() or 1)


def _inverse_perms(n: int) -> np.ndarray:
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    inv = np.empty_like(perms)
    rows = np.arange(len(perms))[:, None]
    inv[rows, perms] = np.arange(n)[None, :]
    return inv


def _run(n, prefix, stop, iso, inv, cap=1024):
    while True:
        out = np.empty((cap, n ** 3), dtype=np.int8)
        count, _ = _search.search(n, prefix, stop, out, iso, inv)
        if count <= cap:
            return out[:count]
        cap = count


def enumerate_tables(n: int, up_to_iso: bool = False, workers: int | None = None) -> np.ndarray:
    """All valid 0-based tensors of order n as an ``(m, n, n, n)`` int8 array."""
    if not 1 <= n <= ENUMERATION_GUARD:
        raise ValueError(f"enumeration is limited to 1 <= n <= {ENUMERATION_GUARD}")
    N = n ** 3
    inv = _inverse_perms(n)
    empty = -np.ones(N, dtype=np.int64)
    stop = min(n * n, N)
    prefixes = _run(n, empty, stop, False, inv).astype(np.int64)
    workers = worker_count() if workers is None else workers

    def task(pre):
        return _run(n, pre, N, up_to_iso, inv)

    if workers > 1 and len(prefixes) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(task, prefixes))
    else:
        parts = [task(p) for p in prefixes]
    parts = [p for p in parts if len(p)]
    if not parts:
        return np.empty((0, n, n, n), dtype=np.int8)
    return np.concatenate(parts).reshape(-1, n, n, n)


def enumerate_tribrackets(n: int, up_to_iso: bool = False) -> Iterator[Tribracket]:
    """Every tribracket of order n once, in lexicographic tensor order.

    With ``up_to_iso`` only the lexicographically least member of each
    isomorphism class is produced.
    """
    for t in enumerate_tables(n, up_to_iso):
        yield Tribracket(t.astype(np.int64))


def canonical_form(X: Tribracket) -> Tribracket:
    """Least relabeling of X in flattened ``(i, j, k)`` order."""
    flat = X.table.reshape(-1).astype(np.int64)
    best = _search.canonical_flat(flat, X.n, _inverse_perms(X.n))
    return Tribracket(best.reshape(X.n, X.n, X.n))


def _batch_profiles(tables: np.ndarray) -> np.ndarray:
    """(m, n, 6) exponent rows in u,v,w,x,y,z order for a batch of tensors."""
    m, n = tables.shape[0], tables.shape[1]
    T = tables.astype(np.int64)
    i = np.arange(n)[:, None]
    j = np.arange(n)[None, :]
    left = T[:, i, j, j]
    center = T[:, j, i, j]
    right = T[:, j, j, i]
    cols = [
        (left == j).sum(2), (center == j).sum(2), (right == j).sum(2),
        (left == i).sum(2), (center == i).sum(2), (right == i).sum(2),
    ]
    return np.stack(cols, axis=2)


def _batch_polynomials(tables: np.ndarray) -> list:
    rows = _batch_profiles(tables)
    memo: dict = {}
    out = []
    for r in rows:
        key = r.tobytes()
        s = memo.get(key)
        if s is None:
            p = TriPolynomial(Counter(tuple(int(e) for e in row) for row in r))
            s = memo[key] = canonical_string(p)
        out.append(s)
    return out


@dataclass
class Spectrum:
    """Distinct tribracket polynomials of one order.

    ``counts`` tallies structures; ``classes`` tallies isomorphism classes
    and is filled only when the enumeration was reduced.
    """

    n: int
    counts: dict = field(default_factory=dict)
    classes: dict | None = None

    @property
    def polynomials(self) -> list:
        return list(self.counts)

    def to_json(self) -> dict:
        doc = {"n": self.n, "polynomials": self.polynomials, "counts": dict(self.counts)}
        if self.classes is not None:
            doc["classes"] = dict(self.classes)
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> "Spectrum":
        return cls(int(doc["n"]), dict(doc["counts"]), doc.get("classes"))


def _ordered(counter: Counter) -> dict:
    from .polynomial import parse_polynomial

    keys = sorted(counter, key=lambda s: (parse_polynomial(s).leading_degree(), s))
    return {k: counter[k] for k in keys}


def polynomial_spectrum(n: int, up_to_iso: bool = False) -> Spectrum:
    """Distinct polynomials over all tribrackets of order n, with counts."""
    if not 1 <= n <= SPECTRUM_GUARD:
        raise ValueError(f"spectrum is limited to 1 <= n <= {SPECTRUM_GUARD}")
    counts = Counter(_batch_polynomials(enumerate_tables(n)))
    spec = Spectrum(n, _ordered(counts))
    if up_to_iso:
        classes = Counter(_batch_polynomials(enumerate_tables(n, up_to_iso=True)))
        spec.classes = {k: classes.get(k, 0) for k in spec.counts}
    return spec
