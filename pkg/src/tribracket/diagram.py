"""Oriented planar diagram codes and their regions.

Crossings follow the Knot Atlas convention ``X[a, b, c, d]``: ``a`` is the
incoming under-strand edge and the remaining slots proceed counterclockwise,
so slot 0 is the incoming and slot 2 the outgoing under edge.  Corner ``k``
of a crossing is the angle between slots ``k`` and ``k + 1``.

The coloring rule relates the four regions around a crossing.  With both
strands oriented, let ``a`` be the region to the right of both strands,
``b`` right of the under strand and left of the over strand, ``c`` left of
the under strand and right of the over strand and ``d`` left of both; then
``[a, b, c] = d``.  In corner indices this reads as :data:`CROSSING_RULE`.
"""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "CROSSING_RULE",
    "CrossingRelation",
    "LinkDiagram",
    "PDCode",
    "add_kink",
    "braid_closure",
    "crossing_relations",
    "faces",
    "from_crossings",
    "mirror",
    "parse_pd",
    "reverse_component",
]

#: corner indices (a, b, c, d) with [a, b, c] = d, keyed by crossing sign
CROSSING_RULE = {+1: (0, 1, 3, 2), -1: (1, 0, 2, 3)}


class PDError(ValueError):
    pass


@dataclass(frozen=True)
class PDCode:
    """A validated PD code.

    Labels are normalized to ``1..n_edges`` so that each component's edges
    are consecutive in the direction of travel.  ``unknots`` counts extra
    crossingless components.
    """

    crossings: tuple
    components: tuple
    unknots: int = 0

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def n_edges(self) -> int:
        return 2 * len(self.crossings)

    @property
    def n_components(self) -> int:
        return len(self.components) + self.unknots

    def __str__(self) -> str:
        parts = ["X[%d,%d,%d,%d]" % x for x in self.crossings]
        if self.unknots:
            parts.append(f"UNKNOT {self.unknots}")
        return " ".join(parts)


_X_TOKEN = re.compile(r"X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]")
_UNKNOT = re.compile(r"\bUNKNOT\s+(\d+)\b")


def parse_pd(text: str) -> PDCode:
    """Parse whitespace-separated ``X[a,b,c,d]`` tokens.

    ``# ...`` comments are ignored, an optional ``PD[...]`` wrapper and
    commas between tokens are tolerated, and ``UNKNOT k`` adds ``k``
    crossingless components.  Empty input is the crossingless unknot.
    """
    body = "\n".join(ln.split("#", 1)[0] for ln in text.splitlines())
    unknots = sum(int(m) for m in _UNKNOT.findall(body))
    body = _UNKNOT.sub(" ", body)
    crossings = [tuple(int(v) for v in m) for m in _X_TOKEN.findall(body)]
    rest = _X_TOKEN.sub(" ", body)
    rest = re.sub(r"PD\[|[\s,\[\]]", "", rest)
    if rest:
        raise PDError(f"malformed PD text near {rest[:20]!r}")
    if not crossings and not unknots:
        unknots = 1
    return from_crossings(crossings, unknots)


def _occurrences(crossings) -> dict:
    occ = defaultdict(list)
    for ci, x in enumerate(crossings):
        for k, e in enumerate(x):
            occ[e].append((ci, k))
    bad = {e: len(v) for e, v in occ.items() if len(v) != 2}
    if bad:
        raise PDError(f"edge labels must appear exactly twice: {bad}")
    return occ


def _other_ends(occ) -> dict:
    other = {}
    for l in occ.values():
        other[l[0]] = l[1]
        other[l[1]] = l[0]
    return other


def _label_components(crossings, occ) -> list:
    """Edge sets joined along strands (slot k continues through slot k+2)."""
    seen = set()
    comps = []
    for e0 in sorted(occ):
        if e0 in seen:
            continue
        comp, stack = [], [e0]
        while stack:
            e = stack.pop()
            if e in seen:
                continue
            seen.add(e)
            comp.append(e)
            for ci, k in occ[e]:
                stack.append(crossings[ci][(k + 2) % 4])
        comps.append(sorted(comp))
    return comps


def _orient(crossings, occ, other) -> dict:
    """Map half-edge (crossing, slot) -> True when the edge leaves there.

    Under strands fix the direction; components that only pass over are
    oriented by their label order (``d`` follows ``b``), as in the Knot
    Atlas convention.
    """
    out = {}

    def put(h, v, stack):
        if h in out:
            if out[h] != v:
                raise PDError("inconsistent orientation")
            return
        out[h] = v
        stack.append(h)

    def spread(stack):
        while stack:
            h = stack.pop()
            put(other[h], not out[h], stack)
            c, k = h
            put((c, (k + 2) % 4), not out[h], stack)

    stack = []
    for ci in range(len(crossings)):
        put((ci, 0), False, stack)
        put((ci, 2), True, stack)
    spread(stack)
    if len(out) < 4 * len(crossings):
        succ = {}
        for comp in _label_components(crossings, occ):
            for i, e in enumerate(comp):
                succ[e] = comp[(i + 1) % len(comp)]
        for ci, x in enumerate(crossings):
            if (ci, 1) in out:
                continue
            b, d = x[1], x[3]
            stack = []
            put((ci, 3), succ[b] == d, stack)
            spread(stack)
    return out


def from_crossings(crossings: Iterable[Sequence[int]], unknots: int = 0) -> PDCode:
    """Validate raw crossing tuples and normalize labels."""
    crossings = [tuple(int(v) for v in x) for x in crossings]
    for x in crossings:
        if len(x) != 4:
            raise PDError(f"crossing {x} does not have four slots")
    if unknots < 0:
        raise PDError("UNKNOT count must be nonnegative")
    if not crossings:
        return PDCode((), (), unknots)
    occ = _occurrences(crossings)
    other = _other_ends(occ)
    out = _orient(crossings, occ, other)
    # walk each component along its orientation and relabel consecutively
    relabel: dict = {}
    comps = []
    for comp in _label_components(crossings, occ):
        start = comp[0]
        walk, e = [], start
        while True:
            walk.append(e)
            h = next(h for h in occ[e] if not out[h])  # head of e
            c, k = h
            e = crossings[c][(k + 2) % 4]
            if e == start:
                break
        if sorted(walk) != comp:
            raise PDError("component walk does not close up")
        comps.append(walk)
    n = 0
    components = []
    for walk in comps:
        labels = []
        for e in walk:
            n += 1
            relabel[e] = n
            labels.append(n)
        components.append(tuple(labels))
    new = tuple(tuple(relabel[e] for e in x) for x in crossings)
    return PDCode(new, tuple(components), unknots)


@dataclass(frozen=True)
class CrossingRelation:
    """Region indices with the coloring constraint ``[a, b, c] = d``."""

    a: int
    b: int
    c: int
    d: int

    def __iter__(self):
        return iter((self.a, self.b, self.c, self.d))


@dataclass(frozen=True)
class LinkDiagram:
    """Regions, signs and corner data of a PD code.

    ``corner_region[c][k]`` is the region index at corner ``k`` of crossing
    ``c``.  ``faces`` lists each traced face as a tuple of corners; faces
    merged into the shared outer region of a split diagram keep their own
    entry but map to the same region index.
    """

    pd: PDCode
    signs: tuple
    faces: tuple
    face_region: tuple
    corner_region: tuple
    n_regions: int
    pieces: int

    @property
    def writhe(self) -> int:
        return sum(self.signs)

    def relations(self) -> list:
        return crossing_relations(self)


def _crossing_pieces(crossings, other) -> list:
    n = len(crossings)
    piece = [-1] * n
    p = 0
    for s in range(n):
        if piece[s] >= 0:
            continue
        stack = [s]
        piece[s] = p
        while stack:
            c = stack.pop()
            for k in range(4):
                c2 = other[(c, k)][0]
                if piece[c2] < 0:
                    piece[c2] = p
                    stack.append(c2)
        p += 1
    return piece


def faces(pd: PDCode) -> LinkDiagram:
    """Trace the faces of the diagram and classify crossing signs.

    From corner ``k`` at crossing ``c`` the boundary walk continues along the
    edge at slot ``k + 1`` to its other end ``(c', k')``, which is the next
    corner ``k'``.  A crossing is positive when the over strand enters at
    slot 3.  In a split diagram the largest face of each piece is taken as
    its outer face and all outer faces are identified into one region.
    """
    crossings = pd.crossings
    nc = len(crossings)
    if nc == 0:
        return LinkDiagram(pd, (), (), (), (), pd.unknots + 1, 0)
    occ = _occurrences(crossings)
    other = _other_ends(occ)
    out = _orient(crossings, occ, other)
    signs = tuple(+1 if not out[(c, 3)] else -1 for c in range(nc))

    corner_face = {}
    face_list = []
    for c in range(nc):
        for k in range(4):
            if (c, k) in corner_face:
                continue
            f = len(face_list)
            cyc, cur = [], (c, k)
            while cur not in corner_face:
                corner_face[cur] = f
                cyc.append(cur)
                cc, kk = cur
                cur = other[(cc, (kk + 1) % 4)]
            if cur != (c, k):
                raise PDError("face trace did not close; code is not planar")
            face_list.append(tuple(cyc))

    piece = _crossing_pieces(crossings, other)
    npieces = max(piece) + 1
    face_region = list(range(len(face_list)))
    if npieces > 1 or pd.unknots:
        outer = {}
        for f, cyc in enumerate(face_list):
            p = piece[cyc[0][0]]
            best = outer.get(p)
            if best is None or len(cyc) > len(face_list[best]):
                outer[p] = f
        outer_faces = set(outer.values())
        face_region = [-1] * len(face_list)
        face_region_outer = 0
        nxt = 1
        for f in range(len(face_list)):
            if f in outer_faces:
                face_region[f] = face_region_outer
            else:
                face_region[f] = nxt
                nxt += 1
        n_regions = nxt + pd.unknots
        expected = nc + npieces + 1 + pd.unknots
    else:
        n_regions = len(face_list)
        expected = nc + 2
    if n_regions != expected:
        raise PDError(f"found {n_regions} regions, expected {expected}; code is not planar")
    corner_region = tuple(
        tuple(face_region[corner_face[(c, k)]] for k in range(4)) for c in range(nc)
    )
    return LinkDiagram(pd, signs, tuple(face_list), tuple(face_region), corner_region,
                       n_regions, npieces)


def crossing_relations(d: LinkDiagram, rule: dict | None = None) -> list:
    """One :class:`CrossingRelation` per crossing under ``rule``."""
    rule = CROSSING_RULE if rule is None else rule
    rels = []
    for sign, corners in zip(d.signs, d.corner_region):
        roles = rule[sign]
        rels.append(CrossingRelation(*(corners[r] for r in roles)))
    return rels


def diagram(pd: PDCode | str) -> LinkDiagram:
    """Convenience: parse if needed, then compute faces."""
    if isinstance(pd, str):
        pd = parse_pd(pd)
    return faces(pd)


def reverse_component(pd: PDCode, k: int) -> PDCode:
    """Reverse the orientation of component ``k`` (1-based).

    Crossings where the component passes under are rotated by two slots and
    its edge labels are reversed so that label order still follows travel.
    """
    if not 1 <= k <= pd.n_components:
        raise IndexError(f"component {k} not in 1..{pd.n_components}")
    if k > len(pd.components):
        return pd  # crossingless component
    comp = pd.components[k - 1]
    flip = {e: r for e, r in zip(comp, reversed(comp))}
    members = set(comp)
    new = []
    for x in pd.crossings:
        if x[0] in members:
            x = (x[2], x[3], x[0], x[1])
        new.append(tuple(flip.get(e, e) for e in x))
    return from_crossings(new, pd.unknots)


def mirror(pd: PDCode) -> PDCode:
    """Mirror image: reflect the plane, keeping the under strand."""
    return from_crossings([(a, d, c, b) for a, b, c, d in pd.crossings], pd.unknots)


def add_kink(pd: PDCode, edge: int, sign: int = +1, under_first: bool = True) -> PDCode:
    """Insert a Reidemeister I kink of the given sign on ``edge``.

    ``under_first`` chooses whether the strand enters the kink crossing
    below or above.
    """
    if not 1 <= edge <= pd.n_edges:
        raise IndexError(f"edge {edge} not in 1..{pd.n_edges}")
    crossings = [list(x) for x in pd.crossings]
    occ = _occurrences(pd.crossings)
    out = _orient(pd.crossings, occ, _other_ends(occ))
    head = next(h for h in occ[edge] if not out[h])
    e, f, g = edge, pd.n_edges + 1, pd.n_edges + 2
    crossings[head[0]][head[1]] = g
    if under_first:
        kink = (e, g, f, f) if sign > 0 else (e, f, f, g)
    else:
        kink = (f, f, g, e) if sign > 0 else (f, e, g, f)
    crossings.append(kink)
    return from_crossings(crossings, pd.unknots)


def braid_closure(word: Sequence[int], strands: int) -> PDCode:
    """PD code of the closure of a braid word.

    Generators are ``+i`` or ``-i`` for ``sigma_i`` and its inverse; strands
    run upward.  ``sigma_i`` gives ``X[BR, TR, TL, BL]`` (the strand from
    bottom right passes under), its inverse ``X[BL, BR, TR, TL]``.
    """
    label = 0

    def fresh():
        nonlocal label
        label += 1
        return label

    bottom = [fresh() for _ in range(strands)]
    cur = list(bottom)
    xs = []
    for g in word:
        i = abs(g) - 1
        if not 0 <= i < strands - 1:
            raise ValueError(f"generator {g} out of range for {strands} strands")
        bl, br = cur[i], cur[i + 1]
        tl, tr = fresh(), fresh()
        xs.append([br, tr, tl, bl] if g > 0 else [bl, br, tr, tl])
        cur[i], cur[i + 1] = tl, tr
    close = {cur[p]: bottom[p] for p in range(strands)}
    xs = [[close.get(e, e) for e in x] for x in xs]
    # strands that never cross anything are free unknots
    used = {e for x in xs for e in x}
    free = 0
    for p in range(strands):
        if bottom[p] not in used:
            free += 1
    return from_crossings(xs, free)
