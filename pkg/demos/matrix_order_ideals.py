#!/usr/bin/env python3
"""Left ideals of the 2x2 integer matrix order at a prime.

Every ideal of norm p^N is a normalized triple (n, m, t); the demo walks
through enumeration, primitivity, containment, right orders, the counting
formula, and the canonical conjugation to companion form.
"""

from cmintersect.matrix_ideals import (PMatrix, canonical_conjugate,
                                       companion_matrix, contained_in,
                                       count_right_order_ideals,
                                       enumerate_ideals, generator,
                                       is_primitive, right_order_contains,
                                       unique_superideal)

p = 3
print(f"Ideals of norm {p}^N, counted 1 + p + ... + p^N:")
for N in range(4):
    ideals = enumerate_ideals(p, N)
    print(f"  N={N}: {len(ideals)} ideals")
print("  norm-3 triples:", [(I.n, I.m, I.t) for I in enumerate_ideals(p, 1)])

print("\nPrimitivity (one of n, m, v(t) vanishes):")
for triple in enumerate_ideals(p, 2):
    tag = "primitive" if is_primitive(triple) else "p * (unit ideal scale)"
    print(f"  (n={triple.n}, m={triple.m}, t={triple.t}): {tag}")

print("\nContainment through the unique-super-ideal criterion, checked")
print("against the direct matrix-quotient test elsewhere in the suite:")
I = enumerate_ideals(p, 2)[3]
J = enumerate_ideals(p, 1)[1]
print(f"  ({I.n},{I.m},{I.t}) inside ({J.n},{J.m},{J.t})? "
      f"{contained_in(0, I, 0, J)}")

z = generator(enumerate_ideals(p, 1)[2])
print(f"\nUnique super-ideal of a primitive element at each norm level:")
for N in range(2):
    sup = unique_superideal(z, p, N)
    print(f"  norm {p}^{N}: (n={sup.n}, m={sup.m}, t={sup.t})")

y = PMatrix.of(0, -5, 1, 0)
print(f"\ny = [[0, -5], [1, 0]] has trace {y.trace} and norm {y.norm}.")
print("Primitive norm-3 ideals whose right order contains y:")
for I in enumerate_ideals(p, 1):
    if is_primitive(I) and right_order_contains(I, y):
        print(f"  (n={I.n}, m={I.m}, t={I.t})")
formula = count_right_order_ideals(p, 1, y, 0)
print(f"Root-count formula gives {formula}: the solutions of "
      f"t^2 + 5 = 0 mod 3 are t = 1, 2.")

print("\nCanonical conjugation to companion form:")
U = PMatrix.of(2, 1, 1, 1)
comp = companion_matrix(1, 4, p, 1)
scrambled = U * comp * U.inverse()
A = canonical_conjugate(scrambled, p, 1)
back = A * scrambled * A.inverse()
print(f"  conjugated matrix entries: {[str(e) for e in scrambled.entries()]}")
print(f"  recovered companion form:  {[str(e) for e in back.entries()]}")
print(f"  matches [[0, -Norm p^r], [p^-r, Tr]]: {back == comp}")
