"""Region colorings of link diagrams by tribrackets and the enhancement.

The solver precomputes a static elimination order.  Whenever a relation has
exactly one unknown region, that region is determined by the operation or
one of the inverse tables; otherwise the most constrained unknown region
becomes a free branching variable.  Each relation is checked as soon as all
four of its regions are known.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .algebra import Tribracket, _closure0
from .diagram import LinkDiagram, crossing_relations
from .polynomial import TriPolynomial, canonical_string, profile_array

__all__ = [
    "EnhancementMultiset",
    "count_colorings",
    "enhancement",
    "enumerate_colorings",
    "image_subtribracket",
    "solve_plan",
]


def _relations(d: LinkDiagram) -> list:
    return [tuple(r) for r in crossing_relations(d)]


def solve_plan(n_regions: int, rels: list) -> list:
    """Elimination steps ``('free', v)`` or ``('det', v, rel, pos)``.

    ``pos`` is the slot of ``v`` inside ``rel``.
    """
    known: set = set()
    steps = []
    while len(known) < n_regions:
        progress = True
        while progress:
            progress = False
            for r in rels:
                unk = [i for i, x in enumerate(r) if x not in known]
                if len(unk) == 1:
                    v = r[unk[0]]
                    steps.append(("det", v, r, unk[0]))
                    known.add(v)
                    progress = True
        if len(known) < n_regions:
            cnt = Counter(x for r in rels for x in r if x not in known)
            if cnt:
                top = max(cnt.values())
                v = min(x for x, c in cnt.items() if c == top)
            else:
                v = min(set(range(n_regions)) - known)
            steps.append(("free", v))
            known.add(v)
    return steps


def _solve(X: Tribracket, n_regions: int, rels: list) -> Iterator[tuple]:
    """Yield 0-based colorings (region-indexed tuples), in search order."""
    T = X.table.tolist()
    R = X.right_inv.tolist()
    C = X.center_inv.tolist()
    L = X.left_inv.tolist()
    n = X.n
    steps = solve_plan(n_regions, rels)
    known: set = set()
    checks = []
    for s in steps:
        known.add(s[1])
        checks.append([r for r in rels if s[1] in r and all(x in known for x in r)])
    col = [0] * n_regions
    depth = len(steps)

    def rec(i):
        if i == depth:
            yield tuple(col)
            return
        s = steps[i]
        if s[0] == "free":
            cands = range(n)
        else:
            _, v, (a, b, c, d), pos = s
            if pos == 3:
                x = T[col[a]][col[b]][col[c]]
            elif pos == 2:
                x = R[col[a]][col[b]][col[d]]
            elif pos == 1:
                x = C[col[a]][col[d]][col[c]]
            else:
                x = L[col[d]][col[b]][col[c]]
            cands = (x,)
        v = s[1]
        chk = checks[i]
        for x in cands:
            col[v] = x
            if all(T[col[a]][col[b]][col[c]] == col[d] for a, b, c, d in chk):
                yield from rec(i + 1)

    yield from rec(0)


def count_colorings(X: Tribracket, d: LinkDiagram) -> int:
    """Number of X-colorings of the diagram."""
    return sum(1 for _ in _solve(X, d.n_regions, _relations(d)))


def enumerate_colorings(X: Tribracket, d: LinkDiagram) -> Iterator[tuple]:
    """Colorings as 1-based region-indexed tuples, in lexicographic order.

    The solver's own order is not lexicographic, so the full set is
    materialized and sorted first.
    """
    cols = sorted(_solve(X, d.n_regions, _relations(d)))
    for c in cols:
        yield tuple(x + 1 for x in c)


def image_subtribracket(X: Tribracket, col) -> tuple:
    """Closure of the colors used by a 1-based coloring."""
    used = {int(c) - 1 for c in col}
    return tuple(sorted(e + 1 for e in _closure0(X.table, used)))


@dataclass
class EnhancementMultiset:
    """Multiset of subtribracket polynomials keyed by canonical string."""

    entries: Counter = field(default_factory=Counter)
    polys: dict = field(default_factory=dict)

    def add(self, p: TriPolynomial, mult: int = 1) -> None:
        key = canonical_string(p)
        self.polys[key] = p
        self.entries[key] += mult

    @property
    def total(self) -> int:
        return sum(self.entries.values())

    def sorted_items(self) -> list:
        """(string, multiplicity), by leading-term degree then string."""
        keys = sorted(self.entries, key=lambda k: (self.polys[k].leading_degree(), k))
        return [(k, self.entries[k]) for k in keys]

    def as_dict(self) -> dict:
        return dict(self.sorted_items())

    def __eq__(self, other) -> bool:
        if isinstance(other, EnhancementMultiset):
            return self.entries == other.entries
        if isinstance(other, dict):
            return dict(self.entries) == dict(other)
        return NotImplemented

    def __str__(self) -> str:
        body = ", ".join(f"{m}× {k}" for k, m in self.sorted_items())
        return "{" + body + "}"

    def to_json(self, count: int | None = None) -> dict:
        count = self.total if count is None else count
        return {
            "count": count,
            "enhancement": [{"poly": k, "mult": m} for k, m in self.sorted_items()],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "EnhancementMultiset":
        from .polynomial import parse_polynomial

        out = cls()
        for row in doc["enhancement"]:
            out.add(parse_polynomial(row["poly"]), int(row["mult"]))
        return out


def enhancement(X: Tribracket, d: LinkDiagram) -> EnhancementMultiset:
    """Multiset of phi(Im(f) in X) over all colorings f.

    Images depend only on the set of colors used, so polynomials are cached
    by that set.
    """
    rows = [tuple(int(e) for e in r) for r in profile_array(X)]
    cache: dict = {}
    tally: Counter = Counter()
    for col in _solve(X, d.n_regions, _relations(d)):
        key = frozenset(col)
        poly = cache.get(key)
        if poly is None:
            S = _closure0(X.table, key)
            poly = TriPolynomial(Counter(rows[i] for i in S))
            cache[key] = poly
        tally[poly] += 1
    out = EnhancementMultiset()
    for poly, m in tally.items():
        out.add(poly, m)
    return out
