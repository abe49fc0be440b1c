"""Exhaustive enumeration of small tribrackets.

Counts all tribrackets of order 1..5, the isomorphism classes, and the
distinct polynomial values. The swap [a,b,c] -> [a,c,b] exchanges the
variables y,z and v,w, so each spectrum is closed under that exchange.

    python3 demos/02_spectrum.py
"""

import time

from tribracket import canonical_string, parse_polynomial
from tribracket.enumeration import enumerate_tables, polynomial_spectrum


def swap(poly: str) -> str:
    t = poly.translate(str.maketrans("yzvw", "zywv"))
    return canonical_string(parse_polynomial(t))


def main():
    print(" n  structures  classes  polynomials   seconds")
    for n in range(1, 6):
        t0 = time.perf_counter()
        total = len(enumerate_tables(n))
        classes = len(enumerate_tables(n, up_to_iso=True))
        spec = polynomial_spectrum(n)
        dt = time.perf_counter() - t0
        print(f"{n:2d}  {total:10d}  {classes:7d}  {len(spec.polynomials):11d}  {dt:8.2f}")

    spec = polynomial_spectrum(4, up_to_iso=True)
    print("\nOrder 4 spectrum (structures, classes):")
    for p, c in spec.counts.items():
        print(f"  {p:<40} {c:4d} {spec.classes[p]:4d}")
    closed = all(swap(p) in spec.counts for p in spec.counts)
    print("closed under y<->z, v<->w:", closed)


if __name__ == "__main__":
    main()
