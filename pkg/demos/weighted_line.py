"""
The weighted projective line P(6,4)
===================================

Fan of A^2 minus the origin, beta: Z^2 -> Z + Z/2 with lift
[[2, -3], [1, -1]]. The Chow ring comes out as Z[t]/(24 t^2).
"""
from toricchow import assemble_block_matrix, chow_ring, graded_invariants, simplify
from toricchow.io import fixture

sf = fixture("p64").stacky_fan()
ring = chow_ring(sf)
print("raw:       ", ring)

small = simplify(ring)
print("simplified:", small)

###############################################################################
# The graded pieces: Z in degrees 0 and 1, then Z/24 forever.
print(graded_invariants(ring, 5))

###############################################################################
# The Cox quotient data behind it: the block matrix, its cokernel M and the
# weights of the coordinates.
for line in assemble_block_matrix(sf).lines():
    print(line)
