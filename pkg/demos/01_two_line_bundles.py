# Two toric surfaces, one semiabelian group, opposite answers.
#
# Y1 = P^1 x C and Y2 = C x P^1 are the same surface with the axes swapped,
# but once we twist by a group whose weight lattice is L = {(0, n)} the
# Hartogs property only survives over one of them.

from semitoric import Fan, SemiabelianProblem, decide, decide_toric, complement_closure_dual

Y1 = Fan(2, rays=((1, 0), (-1, 0), (0, 1)), cones=((0, 2), (1, 2)))
Y2 = Fan(2, rays=((0, 1), (0, -1), (1, 0)), cones=((2, 0), (2, 1)))

# C is dual to the closure of what the fan does not cover
print("C(Y1) rays:", complement_closure_dual(Y1).rays)   # ((0, -1),)
print("C(Y2) rays:", complement_closure_dual(Y2).rays)   # ((-1, 0),)

# torus alone: L = Z^2 always meets a nonzero cone
for name, fan in (("Y1", Y1), ("Y2", Y2)):
    v = decide_toric(fan)
    print(f"toric {name}: hartogs={v.hartogs} witness={v.witness}")

# G = C^3 / <e1, e2, e3, i(e1 + e3)>: only the character (0, 1) survives
for name, fan in (("Y1", Y1), ("Y2", Y2)):
    v = decide(SemiabelianProblem(2, L0_generators=((0, 1),), torsion=(), fan=fan))
    print(f"G x^T {name}: hartogs={v.hartogs} witness={v.witness} L={v.L.basis}")

# (0, -1) is a function's worth of growth along the missing direction in Y1;
# in Y2 the missing direction (-1, 0) is invisible to L, hence Hartogs.
