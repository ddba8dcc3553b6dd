"""
Blowing up A^3 at the origin, with a Z/2 twist
==============================================

Four rays e1, e2, e3, e1+e2+e3 and three maximal cones. Eliminating
x1, x2, x3 leaves a cubic in x4 and y1 that factors as
(x4 + 2 y1)(x4 + 6 y1)(x4 + 8 y1).
"""
from toricchow import Presentation, chow_ring, graded_equal, parse_relations, simplify
from toricchow.io import fixture

ring = chow_ring(fixture("blowupA3").stacky_fan())
print("raw:       ", ring)
small = simplify(ring)
print("simplified:", small)

###############################################################################
# Compare with the factored target degree by degree. Agreement is a
# necessary condition for an isomorphism, not a proof of one.
target = Presentation(("u", "v"), (), tuple(parse_relations("(u+2*v)*(u+6*v)*(u+8*v)", ["u", "v"])))
print("graded-equal to the factored cubic through degree 6:", graded_equal(small, target, 6))
