import itertools
from math import gcd

import numpy as np
import pytest
from sympy.combinatorics.named_groups import AbelianGroup, DihedralGroup

from conftest import naive_closed_subsets, naive_closure, naive_is_tribracket
from tribracket import (
    InvalidTribracket,
    Tribracket,
    alexander_tribracket,
    all_subtribrackets,
    dehn_tribracket,
    find_isomorphism,
    generated_subtribracket,
    is_closed,
    is_homomorphism,
    make_tribracket,
    relabel,
    validate,
)
from tribracket.algebra import FAILURE_CAP, cyclic_cayley
from tribracket.fixtures import load_tensor_fixture
from tribracket.formats import dumps_tensor, loads_tensor, tensor_json

TRIVIAL = Tribracket(np.zeros((1, 1, 1), dtype=np.int64))


# evaluation -----------------------------------------------------------------

def test_eval_examples(tensors):
    X = tensors["example3"]
    assert X.eval(1, 1, 1) == 2
    assert X.eval(1, 2, 3) == 3
    assert TRIVIAL.eval(1, 1, 1) == 1
    assert X(1, 2, 3) == 3


def test_eval_out_of_range(tensors):
    with pytest.raises(IndexError):
        tensors["example3"].eval(0, 1, 1)
    with pytest.raises(IndexError):
        tensors["example3"].eval(1, 1, 4)


def test_tables_are_read_only(tensors):
    X = tensors["example3"]
    for arr in (X.table, X.right_inv, X.center_inv, X.left_inv):
        with pytest.raises(ValueError):
            arr[0, 0, 0] = 1


# validation -----------------------------------------------------------------

def test_validate_example3(tensors):
    assert validate(tensors["example3"].tensor()).ok


def test_validate_line_repeat_witness(tensors):
    t = tensors["example3"].tensor()
    t[0][0][0] = t[0][0][1]
    rep = validate(t)
    assert not rep.ok
    right = rep.by_axiom()["uniqueness-right"]
    assert any(w[:2] == (1, 1) for w in right)


def test_validate_constant():
    rep = validate([[[1, 1], [1, 1]], [[1, 1], [1, 1]]])
    assert not rep.ok
    assert {"uniqueness-right", "uniqueness-center", "uniqueness-left"} <= set(rep.by_axiom())


def test_validate_range():
    rep = validate([[[1, 3], [2, 1]], [[2, 1], [1, 2]]])
    assert not rep.ok and rep.failures[0][0] == "range"


def test_validate_caps_witnesses():
    rep = validate(np.ones((6, 6, 6), dtype=int).tolist())
    for axiom, ws in rep.by_axiom().items():
        assert len(ws) <= FAILURE_CAP


def test_validate_compatibility_failure():
    # Latin in every direction but not compatible: [a,b,c] = a+b+c mod 3
    n = 3
    t = [[[(a + b + c) % n + 1 for c in range(n)] for b in range(n)] for a in range(n)]
    rep = validate(t)
    assert not naive_is_tribracket(t)
    assert set(rep.by_axiom()) == {"compatibility"}


def test_make_tribracket_examples():
    assert load_tensor_fixture("example5a").n == 3
    assert load_tensor_fixture("order4").n == 4
    with pytest.raises(InvalidTribracket) as exc:
        make_tribracket([[[1, 1], [1, 1]], [[1, 1], [1, 1]]])
    assert not exc.value.report.ok


def test_validate_agrees_with_naive(small_tribrackets):
    rng = np.random.default_rng(7)
    for X in small_tribrackets[:40]:
        t = X.tensor()
        assert naive_is_tribracket(t)
        m = np.array(t)
        idx = tuple(rng.integers(0, X.n, 3))
        if X.n > 1:
            m[idx] = m[idx] % X.n + 1
            assert validate(m).ok == naive_is_tribracket(m.tolist()) == False  # noqa: E712


def test_inverse_round_trip(small_tribrackets, order5_tribrackets):
    rng = np.random.default_rng(11)
    pool = small_tribrackets + order5_tribrackets
    for i in rng.choice(len(pool), 200, replace=False):
        X = pool[i]
        T = X.table
        a, b, c = np.meshgrid(*(np.arange(X.n),) * 3, indexing="ij")
        assert (T[a, b, X.right_inv[a, b, c]] == c).all()
        assert (T[a, X.center_inv[a, c, b], b] == c).all()
        assert (T[X.left_inv[c, a, b], a, b] == c).all()
        assert validate(X.tensor()).ok


# families ---------------------------------------------------------------------

@pytest.mark.parametrize("n", range(1, 13))
def test_alexander_all_units(n):
    units = [u for u in range(n) if gcd(u, n) == 1] or [0]
    for t, s in itertools.product(units, repeat=2):
        X = alexander_tribracket(n, t, s)
        assert validate(X.tensor()).ok
        a, b, c = 1, min(2, n), n
        assert X.eval(a, b, c) - 1 == (t * (b - 1) + s * (c - 1) - t * s * (a - 1)) % n


def test_alexander_reference_parameters():
    assert alexander_tribracket(18, 5, 13).n == 18
    assert alexander_tribracket(8, 3, 5).n == 8
    with pytest.raises(ValueError):
        alexander_tribracket(4, 2, 1)


def _cayley_from_perm_group(G):
    els = sorted(G.elements, key=lambda p: p.array_form)
    pos = {e: i for i, e in enumerate(els)}
    return [[pos[x * y] + 1 for y in els] for x in els]


def _quaternion_cayley():
    # elements +-1, +-i, +-j, +-k as (sign, unit index)
    mul = {(0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
           (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
           (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
           (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0)}
    els = [(s, u) for s in (1, -1) for u in range(4)]
    pos = {e: i for i, e in enumerate(els)}

    def prod(x, y):
        s, u = mul[(x[1], y[1])]
        return (x[0] * y[0] * s, u)

    return [[pos[prod(x, y)] + 1 for y in els] for x in els]


def _small_groups():
    out = {f"Z{n}": cyclic_cayley(n) for n in range(1, 9)}
    out["V4"] = _cayley_from_perm_group(AbelianGroup(2, 2))
    out["Z2xZ4"] = _cayley_from_perm_group(AbelianGroup(2, 4))
    out["Z2^3"] = _cayley_from_perm_group(AbelianGroup(2, 2, 2))
    out["S3"] = _cayley_from_perm_group(DihedralGroup(3))
    out["D4"] = _cayley_from_perm_group(DihedralGroup(4))
    out["Q8"] = _quaternion_cayley()
    return out


@pytest.mark.parametrize("name,table", sorted(_small_groups().items()))
def test_dehn_groups(name, table):
    X = dehn_tribracket(table)
    assert validate(X.tensor()).ok
    g = np.array(table) - 1
    n = len(table)
    e = next(i for i in range(n) if (g[i] == np.arange(n)).all())
    inv = [int(np.argmax(g[a] == e)) for a in range(n)]
    for a, b, c in itertools.product(range(n), repeat=3):
        assert X.table[a, b, c] == g[g[b, inv[a]], c]


def test_dehn_cyclic_is_alexander_one_one():
    for n in range(1, 10):
        assert dehn_tribracket(cyclic_cayley(n)) == alexander_tribracket(n, 1, 1)


def test_dehn_z2():
    X = dehn_tribracket(cyclic_cayley(2))
    for a, b, c in itertools.product((1, 2), repeat=3):
        assert X.eval(a, b, c) - 1 == ((b - 1) - (a - 1) + (c - 1)) % 2


def test_dehn_rejects_non_groups():
    with pytest.raises(ValueError):
        dehn_tribracket([[1, 2, 3], [2, 3, 1], [3, 2, 1]])  # no two-sided identity
    # quasigroup with identity but not associative (order-5 loop)
    loop = [[1, 2, 3, 4, 5], [2, 1, 4, 5, 3], [3, 5, 1, 2, 4],
            [4, 3, 5, 1, 2], [5, 4, 2, 3, 1]]
    with pytest.raises(ValueError):
        dehn_tribracket(loop)


# homomorphisms and isomorphisms -----------------------------------------------

def test_homomorphism_identity_and_constants(small_tribrackets):
    for X in small_tribrackets[:60]:
        assert is_homomorphism(tuple(X.elements()), X, X)
        for e in X.elements():
            want = X.eval(e, e, e) == e
            assert is_homomorphism((e,) * X.n, X, X) == want


def test_homomorphism_brute(small_tribrackets):
    X = small_tribrackets[3]  # order 3
    Y = small_tribrackets[10]
    for f in itertools.product(Y.elements(), repeat=X.n):
        brute = all(Y.eval(f[a - 1], f[b - 1], f[c - 1]) == f[X.eval(a, b, c) - 1]
                    for a, b, c in itertools.product(X.elements(), repeat=3))
        assert is_homomorphism(f, X, Y) == brute


def test_find_isomorphism_relabel(tensors):
    rng = np.random.default_rng(3)
    for X in tensors.values():
        assert find_isomorphism(X, X) is not None
        for _ in range(5):
            sigma = tuple(int(v) + 1 for v in rng.permutation(X.n))
            Y = relabel(X, sigma)
            f = find_isomorphism(X, Y)
            assert f is not None and relabel(X, f) == Y


def test_find_isomorphism_example5_pair(tensors):
    A, B = tensors["example5a"], tensors["example5b"]
    assert find_isomorphism(A, B) is None
    assert not any(relabel(A, p) == B for p in itertools.permutations(range(1, 4)))


def test_find_isomorphism_matches_brute(small_tribrackets):
    order3 = [X for X in small_tribrackets if X.n == 3]
    for X, Y in itertools.product(order3, repeat=2):
        brute = any(relabel(X, p) == Y for p in itertools.permutations(range(1, 4)))
        assert (find_isomorphism(X, Y) is not None) == brute


# subtribrackets ---------------------------------------------------------------

def test_closed_examples(tensors):
    B = tensors["example5b"]
    assert is_closed(B, [1])
    assert not is_closed(B, [2])
    assert is_closed(B, [1, 2, 3])
    assert generated_subtribracket(B, [1]) == (1,)
    assert generated_subtribracket(B, [1, 2, 3]) == (1, 2, 3)


def test_all_subtribrackets_examples(tensors):
    A, B = tensors["example5a"], tensors["example5b"]
    assert {(1,), (2,), (3,), (1, 2, 3)} <= set(all_subtribrackets(A))
    assert all_subtribrackets(B) == [(1,), (1, 2, 3)]
    assert all_subtribrackets(TRIVIAL) == [(1,)]


def test_example3_closure_matches_brute(tensors):
    X = tensors["example3"]
    assert generated_subtribracket(X, [1]) == naive_closure(X, [1])


def test_closure_matches_brute(small_tribrackets, tensors):
    pool = [X for X in small_tribrackets if X.n >= 3][::7] + list(tensors.values())
    for X in pool:
        closed = naive_closed_subsets(X)
        assert all_subtribrackets(X) == sorted(closed, key=lambda s: (len(s), s))
        for r in (1, 2):
            for seed in itertools.combinations(X.elements(), r):
                got = generated_subtribracket(X, seed)
                assert set(seed) <= set(got) and is_closed(X, got)
                assert got == naive_closure(X, seed)


def test_seed_must_be_nonempty(tensors):
    with pytest.raises(ValueError):
        generated_subtribracket(tensors["example3"], [])


# tensor files -----------------------------------------------------------------

def test_tensor_text_round_trip(tensors):
    for X in tensors.values():
        t = X.tensor()
        assert loads_tensor(dumps_tensor(t, comment="round trip")) == t
        import json
        assert loads_tensor(json.dumps(tensor_json(t))) == t


def test_tensor_text_errors():
    with pytest.raises(ValueError):
        loads_tensor("")
    with pytest.raises(ValueError):
        loads_tensor("2\n1 2\n2 1\n")
    with pytest.raises(ValueError):
        loads_tensor("x\n")
