#!/usr/bin/env python3
# Linear codes as finitely generated submodules of R^m, with the
# brute-force dual as the ground-truth oracle.

from ringcodes import describe_code, make_integer_residue_ring, span

z20 = make_integer_residue_ring(20)

# Two codes of length 1 over Z/20.
c1 = span(z20, 1, [[10]])
c2 = span(z20, 1, [[4]])
print("C1 =", describe_code(c1))
print("C2 =", describe_code(c2))

# The dual collects every vector orthogonal to the whole code; here it is
# computed by scanning all of R^m.
print("C1 dual =", describe_code(c1.dual_bruteforce()))
print("C2 dual =", describe_code(c2.dual_bruteforce()))

# C1 sits inside its own dual; C2 does not.
print("C1 self-orthogonal:", c1.is_self_orthogonal())
print("C2 self-orthogonal:", c2.is_self_orthogonal())

# Over Z/25 the code spanned by (1,7) is its own dual: 1 + 49 = 0 makes it
# self-orthogonal, and cardinality 25 = 625/25 makes the containment tight.
z25 = make_integer_residue_ring(25)
c = span(z25, 2, [[1, 7]])
print("\nspan{(1,7)} over Z/25:")
print("  cardinality:", c.cardinality)
print("  self-dual:", c.is_self_dual())
print("  minimum distance:", c.min_distance())

# Distances come from exhaustive weight scans of the materialized span.
rep = span(z25, 5, [[1, 1, 1, 1, 1]])
print("\nrepetition code of length 5 over Z/25: distance", rep.min_distance())
