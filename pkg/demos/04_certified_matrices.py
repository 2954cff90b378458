#!/usr/bin/env python3
# Certified combining matrices: each constructor verifies its ring
# hypotheses, then recomputes the Gram shape and the row-code distances
# before handing back a certificate.

import json

from ringcodes import (
    HypothesisViolationError,
    adiag1_matrix_a,
    adiag1_matrix_b,
    adiag3_matrix,
    block_adiag_matrix,
    diag1_matrix,
    make_integer_residue_ring,
)

z13 = make_integer_residue_ring(13)
z25 = make_integer_residue_ring(25)

# The 2x3 matrix [[1,u,1],[-1,0,1]] needs 2 and u to be non-zero-divisors.
cert = diag1_matrix(z25, 1)
print("diag family over Z/25:")
print(json.dumps(cert.to_json_dict(), indent=2))

# Over Z/20 the hypothesis on 2 fails and the constructor says which one.
z20 = make_integer_residue_ring(20)
try:
    diag1_matrix(z20, 1)
except HypothesisViolationError as err:
    print("\nZ/20 rejected:", err.hypothesis, "--", err)

# The anti-diagonal families need a square root of -1; left implicit, it
# is found by enumeration (7 over Z/25, 5 over Z/13).
for ring in (z25, z13):
    a = adiag1_matrix_a(ring)
    print(f"\n2x3 anti-diagonal over {ring}: matrix {a.matrix}, deltas {a.deltas}")
    b = adiag1_matrix_b(ring)
    print(f"2x5 anti-diagonal over {ring}: deltas {b.deltas}")

# The 2x2 self-dual workhorse and its block generalization.
print("\n2x2 over Z/25:", adiag3_matrix(z25).matrix)
for s in (3, 4, 5):
    cert = block_adiag_matrix(z13, s=s)
    print(f"block size {s} over Z/13: Gram "
          f"adiag({','.join(str(v) for v in cert.gram.lambdas)}), deltas {cert.deltas}")
