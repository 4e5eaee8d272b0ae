# Exact cones: both descriptions, duality, and a canonical form that makes == meaningful.

from semitoric import cone_from_rays, cone_from_ineqs, dual, intersect, contains
from semitoric.cone import contains_cone

# a cone with a line in it: the half-space y >= 0 of R^2, written redundantly
H = cone_from_rays(2, [(1, 0), (-1, 0), (3, 2), (0, 5)])
print("rays", H.rays, "lineality", H.lineality)   # ((0, 1),) ((1, 0),)
print("ineqs", H.ineqs, "equalities", H.equalities)

# same cone from inequalities
print(H == cone_from_ineqs(2, [(0, 1)]))   # True

# duality: the dual of a half-space is a ray, and back again
D = dual(H)
print("dual rays", D.rays, "pointed", D.is_pointed)
print(dual(D) == H)

# 3D quadrant cone cut by a plane
Q = cone_from_rays(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
P = cone_from_ineqs(3, [], equalities=[(1, -1, 0)])
X = intersect(Q, P)
print("Q ∩ {x = y}:", X.rays)   # (0,0,1) and (1,1,0)
print(contains(X, (2, 2, 7)), contains(X, (2, 1, 7)))
print(contains_cone(Q, X))

# nothing here touches floats; big entries are fine
B = cone_from_rays(2, [(10**30 + 1, 1), (1, 10**30)])
print(dual(dual(B)) == B)
