#!/usr/bin/env python3
# Finite commutative rings: residue rings, quotient extensions, towers.
#
# Everything is exact. An element knows its ring; arithmetic uses the
# ordinary operators.

from ringcodes import (
    galois_ring,
    make_integer_residue_ring,
    make_quotient_extension,
    parse_ring,
)

z20 = make_integer_residue_ring(20)
z25 = make_integer_residue_ring(25)
print("rings:", z20, "and", z25)

# Units versus zero divisors: in a finite commutative ring every element
# is exactly one of the two (0 counts as a zero divisor).
a = z20.element(2)
print("2 in Z/20: unit?", a.is_unit(), " zero divisor?", a.is_zero_divisor())
b = z25.element(14)
print("14 in Z/25: unit?", b.is_unit(), " inverse:", b.invert())

# 7^2 = 49 = -1 in Z/25; the library finds such elements by enumeration.
u = z25.find_square_root_of_minus_one()
print("square root of -1 in Z/25:", u, " check:", u * u == -z25.one)
print("square root of -1 in Z/20:", z20.find_square_root_of_minus_one())

# A Galois ring: Z/9 extended by a basic irreducible quadratic.
gr = galois_ring(3, 2, 2)
print("\nGalois ring:", gr, "with", gr.cardinality, "elements")
x = gr.generator()
print("generator x satisfies x^2 + x + 2 = 0:", (x * x + x + 2).is_zero())

# Towers: extend an extension. y^2 = 3 here.
tower = make_quotient_extension(gr, (gr.from_int(-3), gr.zero, gr.one))
print("tower:", tower, "with", tower.cardinality, "elements")
y = tower.generator()
print("y^2 =", y * y)

# Descriptions round-trip through the parser.
same = parse_ring(tower.description())
print("description round-trips:", same == tower)

# Enumeration is deterministic (lexicographic on canonical coordinates).
print("\nfirst six elements of", gr, ":", [str(e) for e in list(gr.elements())[:6]])
