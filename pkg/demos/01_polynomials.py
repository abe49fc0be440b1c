"""Tribracket polynomials and subtribracket polynomials.

Builds a few tribrackets, checks the axioms, and prints the polynomial
invariants. A single corrupted entry is enough to break validation.

    python3 demos/01_polynomials.py
"""

import numpy as np

from tribracket import (
    alexander_tribracket,
    all_subtribrackets,
    canonical_string,
    dehn_tribracket,
    find_isomorphism,
    is_homogeneous,
    relabel,
    subtribracket_polynomial,
    tribracket_polynomial,
    validate,
)
from tribracket.algebra import cyclic_cayley
from tribracket.fixtures import load_tensor_fixture


def show(name, X):
    phi = canonical_string(tribracket_polynomial(X))
    print(f"{name:>16}  n={X.n}  phi = {phi}  homogeneous={is_homogeneous(X)}")


def main():
    print("Polynomials of small tribrackets")
    show("example3", load_tensor_fixture("example3"))
    show("example7", load_tensor_fixture("example7"))
    show("Alexander(5,2,3)", alexander_tribracket(5, 2, 3))
    show("Dehn(Z4)", dehn_tribracket(cyclic_cayley(4)))

    print("\nClosed subsets and their polynomials in example10")
    X = load_tensor_fixture("example10")
    for S in all_subtribrackets(X):
        print(f"  {set(S)!s:>10}  {canonical_string(subtribracket_polynomial(X, S))}")

    print("\nRelabeling leaves phi unchanged")
    Y = relabel(X, (3, 1, 2))
    print("  same phi:", tribracket_polynomial(Y) == tribracket_polynomial(X))
    print("  isomorphism Y -> X:", find_isomorphism(Y, X))

    print("\nOne wrong entry breaks the axioms")
    t = np.array(X.tensor())
    t[0, 0, 0] = 2
    rep = validate(t)
    print(f"  ok={rep.ok}, first failure: {rep.failures[0]}")


if __name__ == "__main__":
    main()
