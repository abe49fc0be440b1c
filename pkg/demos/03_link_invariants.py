"""Region colorings of link diagrams and the enhanced invariant.

Counts colorings for bundled PD codes, shows the crossing relations, and
compares the enhancement multisets that separate links whose counts agree.

    python3 demos/03_link_invariants.py
"""

from tribracket import (
    alexander_tribracket,
    count_colorings,
    crossing_relations,
    enhancement,
    faces,
    reverse_component,
)
from tribracket.diagram import add_kink
from tribracket.fixtures import load_pd, load_tensor_fixture


def main():
    hopf = faces(load_pd("hopf"))
    print(f"Hopf link: {hopf.n_regions} regions")
    for r in crossing_relations(hopf):
        a, b, c, d = (v + 1 for v in r)
        print(f"  [R{a}, R{b}, R{c}] = R{d}")

    X6 = load_tensor_fixture("example6")
    print("colorings by the order-3 example:", count_colorings(X6, hopf))
    kinked = faces(add_kink(load_pd("hopf"), 1, -1))
    print("after a negative kink:", count_colorings(X6, kinked))

    print("\nL7a3 and L7a7 have equal counts but distinct enhancements")
    X4 = load_tensor_fixture("order4")
    for name in ("L7a3", "L7a7"):
        print(f"  {name}: {enhancement(X4, faces(load_pd(name)))}")

    print("\nL11n404 and L11n406 over the order-5 tribracket")
    X5 = load_tensor_fixture("order5")
    for name in ("L11n404", "L11n406"):
        print(f"  {name}: {enhancement(X5, faces(load_pd(name)))}")

    print("\nL10n9 in both orientations of component 2")
    pd = load_pd("L10n9_0")
    for label, p in (("as given", pd), ("reversed", reverse_component(pd, 2))):
        print(f"  {label}: {enhancement(X5, faces(p))}")

    print("\nAn Alexander tribracket on Z18")
    Z = alexander_tribracket(18, 5, 13)
    for name in ("granny", "6_1"):
        print(f"  {name}: {count_colorings(Z, faces(load_pd(name)))} colorings")


if __name__ == "__main__":
    main()
