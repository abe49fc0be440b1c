"""Tribracket polynomials.

Each element ``i`` of a tribracket contributes the monomial

    x^l1 y^c1 z^r1 u^l2 v^c2 w^r2

where ``l1 = #{j : [i,j,j] = i}``, ``c1 = #{j : [j,i,j] = i}``,
``r1 = #{j : [j,j,i] = i}`` and ``l2, c2, r2`` count the same patterns with
right-hand side ``j``.  Exponent tuples are stored in ``u,v,w,x,y,z`` order.
"""

from __future__ import annotations

import re
from collections import Counter
from typing import Iterable, Mapping, NamedTuple

import numpy as np

from .algebra import Tribracket, is_closed

__all__ = [
    "Profile",
    "TriPolynomial",
    "canonical_string",
    "element_monomial",
    "is_homogeneous",
    "parse_polynomial",
    "profile",
    "profile_array",
    "subtribracket_polynomial",
    "tribracket_polynomial",
]

VARIABLES = "uvwxyz"
EXPONENT_BOUND = 255


class Profile(NamedTuple):
    l1: int
    c1: int
    r1: int
    l2: int
    c2: int
    r2: int

    def exponents(self) -> tuple:
        """Exponents in u,v,w,x,y,z order."""
        return (self.l2, self.c2, self.r2, self.l1, self.c1, self.r1)


def profile_array(X: Tribracket) -> np.ndarray:
    """(n, 6) array of exponents in u,v,w,x,y,z order, row i for element i+1."""
    T = X.table
    n = X.n
    i = np.arange(n)[:, None]
    j = np.arange(n)[None, :]
    left = T[i, j, j]     # [i,j,j]
    center = T[j, i, j]   # [j,i,j]
    right = T[j, j, i]    # [j,j,i]
    cols = [
        (left == j).sum(1), (center == j).sum(1), (right == j).sum(1),
        (left == i).sum(1), (center == i).sum(1), (right == i).sum(1),
    ]
    return np.stack(cols, axis=1).astype(np.int64)


def profile(X: Tribracket, i: int) -> Profile:
    """The six counts of element ``i`` (1-based)."""
    if not 1 <= i <= X.n:
        raise IndexError(f"element {i} not in 1..{X.n}")
    u, v, w, x, y, z = (int(e) for e in profile_array(X)[i - 1])
    return Profile(l1=x, c1=y, r1=z, l2=u, c2=v, r2=w)


class TriPolynomial:
    """Integer polynomial in u,v,w,x,y,z with nonnegative exponents.

    ``terms`` maps exponent 6-tuples to nonzero coefficients.
    """

    __slots__ = ("_terms", "_key")

    def __init__(self, terms: Mapping | Iterable = ()):
        acc: Counter = Counter()
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exps, coeff in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != 6 or min(exps) < 0:
                raise ValueError(f"bad exponent tuple {exps}")
            acc[exps] += int(coeff)
        self._terms = {e: c for e, c in acc.items() if c != 0}
        self._key = tuple(sorted(self._terms.items(), reverse=True))

    @classmethod
    def monomial(cls, exps, coeff: int = 1) -> "TriPolynomial":
        return cls({tuple(exps): coeff})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def sorted_terms(self) -> tuple:
        """(exponents, coeff) pairs, exponents descending."""
        return self._key

    def __add__(self, other: "TriPolynomial") -> "TriPolynomial":
        return TriPolynomial(list(self._terms.items()) + list(other._terms.items()))

    def __eq__(self, other) -> bool:
        return isinstance(other, TriPolynomial) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient_sum(self) -> int:
        return sum(self._terms.values())

    def leading_degree(self) -> int:
        """Total degree of the first term in canonical order (0 if zero)."""
        return sum(self._key[0][0]) if self._key else 0

    def __str__(self) -> str:
        return canonical_string(self)

    def __repr__(self) -> str:
        return f"TriPolynomial({canonical_string(self)!r})"

    def to_json(self) -> list:
        """Rows ``[coeff, e_u, e_v, e_w, e_x, e_y, e_z]`` in canonical order."""
        rows = []
        for exps, coeff in self._key:
            if max(exps) > EXPONENT_BOUND:
                raise ValueError(f"exponent exceeds {EXPONENT_BOUND}")
            rows.append([coeff, *exps])
        return rows

    @classmethod
    def from_json(cls, rows) -> "TriPolynomial":
        return cls((tuple(r[1:]), r[0]) for r in rows)


def _term_string(exps, coeff: int) -> str:
    body = "".join(
        v + (f"^{e}" if e >= 2 else "") for v, e in zip(VARIABLES, exps) if e
    )
    if coeff == 1 and body:
        return body
    if coeff == -1 and body:
        return "-" + body
    return f"{coeff}{body}"


def canonical_string(p: TriPolynomial) -> str:
    """Deterministic rendering, e.g. ``"uvw^5xyz + 4uvxyz"``; zero is ``"0"``."""
    parts = [_term_string(e, c) for e, c in p.sorted_terms()]
    return " + ".join(parts) if parts else "0"


_TERM = re.compile(r"^(-?\d*)((?:[uvwxyz](?:\^\d+)?)*)$")
_FACTOR = re.compile(r"([uvwxyz])(?:\^(\d+))?")


def parse_polynomial(text: str) -> TriPolynomial:
    """Inverse of :func:`canonical_string` (also accepts any variable order)."""
    text = text.strip()
    if text == "0":
        return TriPolynomial()
    terms = []
    for chunk in text.split("+"):
        chunk = chunk.replace(" ", "")
        m = _TERM.match(chunk)
        if not chunk or not m:
            raise ValueError(f"cannot parse term {chunk!r}")
        cs, body = m.groups()
        if cs in ("", "-") and not body:
            raise ValueError(f"cannot parse term {chunk!r}")
        coeff = int(cs + "1") if cs in ("", "-") else int(cs)
        exps = [0] * 6
        for var, e in _FACTOR.findall(body):
            exps[VARIABLES.index(var)] += int(e) if e else 1
        terms.append((tuple(exps), coeff))
    return TriPolynomial(terms)


def element_monomial(p: Profile) -> TriPolynomial:
    return TriPolynomial.monomial(p.exponents())


def _sum_rows(rows) -> TriPolynomial:
    return TriPolynomial(Counter(tuple(int(e) for e in r) for r in rows))


def tribracket_polynomial(X: Tribracket) -> TriPolynomial:
    """phi(X): sum of the element monomials over X."""
    return _sum_rows(profile_array(X))


def subtribracket_polynomial(X: Tribracket, S: Iterable[int]) -> TriPolynomial:
    """phi(S in X): contributions of the elements of a closed S, counted in X."""
    S = sorted(set(S))
    if not S:
        raise ValueError("subset must be nonempty")
    if not is_closed(X, S):
        raise ValueError(f"subset {tuple(S)} is not closed")
    rows = profile_array(X)
    return _sum_rows(rows[np.asarray(S) - 1])


def is_homogeneous(X: Tribracket) -> bool:
    rows = profile_array(X)
    return bool((rows == rows[0]).all())
