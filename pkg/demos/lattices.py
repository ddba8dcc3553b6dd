"""
Smith normal forms, cokernels and saturation
============================================

Everything downstream reduces to integer linear algebra. This walks
through the pieces on small matrices.
"""
from toricchow import IntMatrix, cokernel, complement, saturation, smith_normal_form

# A tall matrix: its cokernel is Z/2, since the nonzero diagonal is (1, 2)
m = IntMatrix([[2, 0], [0, 3], [4, 2]])
res = smith_normal_form(m)
print("diagonal:", res.d.to_list())
print("u @ m @ v == d:", res.u @ m @ res.v == res.d)
print("invariant factors:", res.invariant_factors)

###############################################################################
# The cokernel comes with an explicit quotient map. For the block matrix of
# the weighted projective line P(6,4) the single free row gives the weights.
group, proj = cokernel(IntMatrix([[2, 1], [-3, -1], [0, 2]]))
print("cokernel:", group, "projection:", proj.to_list())

###############################################################################
# Saturation and a complement: the span of (2, 0) saturates to the x-axis,
# and the y-axis completes it to a basis.
sat = saturation(IntMatrix([[2], [0]]))
print("saturation basis:", sat.to_list())
print("complement basis:", complement(sat, 2).to_list())
