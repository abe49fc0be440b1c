from collections import Counter

import pytest

from conftest import raw_crossings
from tribracket import (
    CROSSING_RULE,
    count_colorings,
    crossing_relations,
    enhancement,
    faces,
    parse_pd,
    reverse_component,
)
from tribracket.diagram import PDError, add_kink, braid_closure, diagram, from_crossings, mirror
from tribracket.fixtures import list_fixtures, load_pd

ALL_PD = list_fixtures(".pd")
TREFOIL = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"


# parsing --------------------------------------------------------------------

def test_parse_hopf():
    pd = parse_pd("X[2,4,1,3] X[4,2,3,1]")
    assert (pd.n_crossings, pd.n_components, pd.n_edges) == (2, 2, 4)


def test_parse_empty_and_unknots():
    assert parse_pd("").n_components == 1
    assert parse_pd("UNKNOT 2").n_components == 2
    assert parse_pd("UNKNOT 3").unknots == 3


def test_parse_kink():
    pd = parse_pd("X[1,1,2,2]")
    assert (pd.n_crossings, pd.n_components) == (1, 1)


def test_parse_wrapper_and_comments():
    a = parse_pd("# comment\nPD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]")
    assert a == parse_pd(TREFOIL)


def test_labels_normalized():
    a = parse_pd("X[10,40,20,50] X[30,60,40,10] X[50,20,60,30]")
    assert a == parse_pd(TREFOIL)
    for comp in a.components:
        assert list(comp) == list(range(comp[0], comp[0] + len(comp)))


@pytest.mark.parametrize("bad", [
    "X[1,2,3]",
    "X[1,2,3,4] junk",
    "X[1,2,3,4]",
    "X[1,1,1,2]",
    "X[1,2,2,1] X[3,4,5,6]",
])
def test_parse_errors(bad):
    with pytest.raises(PDError):
        parse_pd(bad)


# faces ------------------------------------------------------------------------

@pytest.mark.parametrize("name", ALL_PD)
def test_euler(name):
    pd = load_pd(name)
    d = faces(pd)
    c = pd.n_crossings
    if d.pieces <= 1 and not pd.unknots and c:
        assert d.n_regions == c + 2
    else:
        assert d.n_regions == c + d.pieces + 1 + pd.unknots
    # four corners per crossing, each edge leaves two corners
    corners = [cn for f in d.faces for cn in f]
    assert len(corners) == len(set(corners)) == 4 * c
    sides = Counter(pd.crossings[cc][(k + 1) % 4] for cc, k in corners)
    assert all(v == 2 for v in sides.values()) and len(sides) == pd.n_edges


def test_face_examples():
    assert diagram("X[2,4,1,3] X[4,2,3,1]").n_regions == 4
    assert diagram(TREFOIL).n_regions == 5
    assert diagram("UNKNOT 1").n_regions == 2
    assert diagram("UNKNOT 2").n_regions == 3


def test_split_diagram_regions():
    # two disjoint trefoils and an unknot: 6 + 2 + 1 + 1 regions
    shifted = " ".join(f"X[{a+6},{b+6},{c+6},{d+6}]" for a, b, c, d in
                       [(1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3)])
    d = diagram(TREFOIL + " " + shifted + " UNKNOT 1")
    assert d.pieces == 2
    assert d.n_regions == 6 + 2 + 1 + 1


def _sign_oracle(xs):
    """Signs from label order: over strand b -> d is negative when d = b + 1.

    Returns None where the rule does not apply (non-consecutive labels or a
    two-edge component, whose successor is ambiguous).
    """
    labels = sorted({e for x in xs for e in x})
    par = {e: e for e in labels}

    def find(e):
        while par[e] != e:
            e = par[e]
        return e

    for a, b, c, d in xs:
        par[find(a)] = find(c)
        par[find(b)] = find(d)
    comps: dict = {}
    for e in labels:
        comps.setdefault(find(e), []).append(e)
    span = {}
    for es in comps.values():
        lo, hi = min(es), max(es)
        if es != list(range(lo, hi + 1)):
            return None
        for e in es:
            span[e] = (lo, hi)

    def succ(e):
        lo, hi = span[e]
        return lo if e == hi else e + 1

    out = []
    for a, b, c, d in xs:
        if succ(a) != c:
            return None
        lo, hi = span[b]
        out.append(None if hi - lo < 2 else (-1 if succ(b) == d else +1))
    return out


def test_signs_match_label_rule():
    checked = 0
    for name in ALL_PD:
        want = _sign_oracle(raw_crossings(name))
        if want is None:
            continue
        got = faces(load_pd(name)).signs
        for w, g in zip(want, got):
            if w is not None:
                assert w == g, name
                checked += 1
    assert checked > 100


def test_known_writhes():
    assert faces(parse_pd(TREFOIL)).writhe == -3
    assert faces(load_pd("hopf")).writhe == 2
    assert faces(load_pd("granny")).writhe == 6


def test_mirror_negates_writhe():
    for name in ALL_PD:
        d = faces(load_pd(name))
        assert faces(mirror(load_pd(name))).writhe == -d.writhe


# relations --------------------------------------------------------------------

def test_crossing_rule_table():
    assert CROSSING_RULE == {+1: (0, 1, 3, 2), -1: (1, 0, 2, 3)}


def test_hopf_relation_shape():
    rels = [tuple(r) for r in crossing_relations(faces(load_pd("hopf")))]
    (a1, b1, c1, d1), (a2, b2, c2, d2) = rels
    assert a1 == a2 and d1 == d2 and (b1, c1) == (c2, b2)
    assert len({a1, b1, c1, d1}) == 4


def test_relations_use_incident_regions():
    for name in ALL_PD:
        d = faces(load_pd(name))
        for rel, corners in zip(crossing_relations(d), d.corner_region):
            assert sorted(rel) == sorted(corners)


def test_unlink_has_no_relations(tensors):
    d = faces(load_pd("unlink2"))
    assert crossing_relations(d) == []
    assert count_colorings(tensors["example6"], d) == 27


# orientation reversal -----------------------------------------------------------

@pytest.mark.parametrize("name", [n for n in ALL_PD if load_pd(n).n_crossings])
def test_reverse_twice(name):
    pd = load_pd(name)
    for k in range(1, pd.n_components + 1):
        assert reverse_component(reverse_component(pd, k), k) == pd


def test_reverse_all_keeps_writhe():
    for name in ALL_PD:
        pd = load_pd(name)
        r = pd
        for k in range(1, pd.n_components + 1):
            r = reverse_component(r, k)
        assert faces(r).writhe == faces(pd).writhe


def test_reverse_changes_writhe_by_linking():
    # reversing one Hopf component flips both crossings
    pd = load_pd("hopf")
    assert faces(reverse_component(pd, 1)).writhe == -2


def test_reverse_hopf_count(tensors):
    X = tensors["example6"]
    for k in (1, 2):
        assert count_colorings(X, faces(reverse_component(load_pd("hopf"), k))) == 9


def test_reverse_index_errors():
    with pytest.raises(IndexError):
        reverse_component(load_pd("hopf"), 3)
    with pytest.raises(IndexError):
        reverse_component(load_pd("hopf"), 0)


def test_l10n9_fixtures_are_reversals():
    a, b = load_pd("L10n9_0"), load_pd("L10n9_1")
    assert a.n_components == b.n_components == 2
    assert faces(a).n_regions == faces(b).n_regions == 12
    assert reverse_component(a, 2) == b


# Reidemeister moves ---------------------------------------------------------------

KINKS = [(s, u) for s in (+1, -1) for u in (True, False)]


def test_kink_signs():
    for sign, under in KINKS:
        pd = add_kink(load_pd("hopf"), 1, sign, under)
        assert pd.n_crossings == 3
        assert faces(pd).writhe == 2 + sign


def test_single_kink_codes():
    for code in ("X[1,1,2,2]", "X[1,2,2,1]", "X[2,1,1,2]", "X[2,2,1,1]"):
        d = diagram(code)
        assert d.n_regions == 3 and d.pd.n_components == 1


def _same_invariants(X, d1, d2):
    assert count_colorings(X, d1) == count_colorings(X, d2)
    assert enhancement(X, d1) == enhancement(X, d2)


def test_r1_unknot_all_order5(small_tribrackets, order5_tribrackets):
    kinks = [diagram(c) for c in ("X[1,1,2,2]", "X[1,2,2,1]", "X[2,1,1,2]", "X[2,2,1,1]")]
    kinks += [faces(add_kink(load_pd("unknot_kink"), 1, s, u)) for s, u in KINKS]
    for X in small_tribrackets + order5_tribrackets:
        want = X.n ** 2
        for k in kinks:
            assert count_colorings(X, k) == want


def test_r1_hopf(small_tribrackets):
    base = faces(load_pd("hopf"))
    kinked = [faces(add_kink(load_pd("hopf"), e, s, u)) for e in (1, 3) for s, u in KINKS]
    for X in small_tribrackets:
        for k in kinked:
            _same_invariants(X, base, k)


def test_r2(small_tribrackets):
    base = diagram("UNKNOT 2")
    for word in ([1, -1], [-1, 1]):
        d = faces(braid_closure(word, 2))
        for X in small_tribrackets:
            _same_invariants(X, base, d)


def test_r3(small_tribrackets):
    for words in (([1, 2, 1], [2, 1, 2]), ([-1, -2, -1], [-2, -1, -2])):
        a, b = (faces(braid_closure(w, 3)) for w in words)
        for X in small_tribrackets:
            _same_invariants(X, a, b)


def test_braid_trefoil():
    d = faces(braid_closure([1, 1, 1], 2))
    assert d.n_regions == 5 and d.writhe == 3
    assert braid_closure([], 2).unknots == 2


def test_braid_errors():
    with pytest.raises(ValueError):
        braid_closure([3], 3)


def test_granny_is_braid_closure():
    assert load_pd("granny") == braid_closure([1, 1, 1, 2, 2, 2], 3)


def test_from_crossings_keeps_order():
    xs = [(2, 4, 1, 3), (4, 2, 3, 1)]
    pd = from_crossings(xs)
    assert len(pd.crossings) == 2
    assert str(parse_pd(str(pd))) == str(pd)
