"""
Classifying stacks BG and fantastacks
=====================================

With the trivial fan and beta = 0 the cokernel is infinite: the free part
splits off as polynomial variables z1.., the torsion as 2-torsion,
3-torsion, ... classes y1... Fantastacks go through the hat fan.
"""
from toricchow import Fan, fantastack_chow, graded_invariants, simplify
from toricchow.io import fixture
from toricchow.stacky import chow_ring, split_infinite

sf = fixture("bg").stacky_fan()
n0, reduced = split_infinite(sf)
print("rank of the split-off free part:", n0)
print("BG:", chow_ring(sf))

###############################################################################
# A fantastack over the cone spanned by e1, e2 with images (2,0), (0,3), (4,2).
cone = Fan(2, [(1, 0), (0, 1)], [(0, 1)])
ring = fantastack_chow(cone, [(2, 0), (0, 3), (4, 2)])
print("fantastack:", ring, "~", simplify(ring))
print(graded_invariants(ring, 3))

###############################################################################
# Sanity check: the fantastack of P^2 with beta the identity is P^2 itself.
p2 = Fan(2, [(1, 0), (0, 1), (-1, -1)], [(0, 1), (1, 2), (2, 0)])
print("P^2:", simplify(fantastack_chow(p2, p2.rays)))
