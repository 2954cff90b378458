#!/usr/bin/env python3
# The distance guarantee: a product's minimum distance is at least
# min_i d_i * delta_i, where d_i is the distance of input i and delta_i
# the distance of the code spanned by the first i rows of the matrix.

from ringcodes import (
    MPCSpec,
    adiag1_matrix_a,
    adiag1_matrix_b,
    adiag3_matrix,
    build_mpc,
    make_integer_residue_ring,
    min_distance_lower_bound,
    prime_square_codes,
    row_codes,
    span,
)

# Row codes of the 2x2 anti-diagonal matrix over Z/25.
z25 = make_integer_residue_ring(25)
cert = adiag3_matrix(z25, 7)
for i, rc in enumerate(row_codes(cert.matrix), start=1):
    print(f"rows 1..{i}: {rc.cardinality} words, distance {rc.min_distance()}")
print("certificate deltas:", cert.deltas)

# Self-dual input (1,7)-span, distance 2: the product is guaranteed
# distance min(2*2, 1*2) = 2 and achieves it exactly.
c = span(z25, 2, [[1, 7]])
spec = MPCSpec((c, c), cert.matrix)
print("bound:", min_distance_lower_bound(spec),
      " exact:", build_mpc(spec).min_distance())

# Repetition codes over Z/25 (p = 5): products of lengths 3p and 5p with
# distances at least 2p and 3p.
ring, c1, c2 = prime_square_codes(5)
u = ring.find_square_root_of_minus_one()
for cert, name in ((adiag1_matrix_a(ring, u), "3p"), (adiag1_matrix_b(ring, u), "5p")):
    spec = MPCSpec((c1, c2), cert.matrix)
    mpc = build_mpc(spec)
    print(f"length-{name} product: length {mpc.length}, "
          f"bound {min_distance_lower_bound(spec)}, exact {mpc.min_distance()}, "
          f"self-orthogonal {mpc.is_self_orthogonal()}")
