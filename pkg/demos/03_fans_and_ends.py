# Fans, their complements, and counting ends.

from semitoric import Fan, count_ends, build_arrangement, validate_fan, CompleteFan
from semitoric.fan import complement_cells

# two opposite rays split the plane into an upper and a lower half
two = Fan(2, rays=((1, 0), (-1, 0)), cones=((0,), (1,)))
ends = count_ends(two)
print("ends:", ends.count, "component sizes:", ends.component_sizes)

# the cells behind that count: a central arrangement cut out by the fan's walls
cx = build_arrangement(two)
print(len(cx.cells), "cells,", len(cx.chambers()), "chambers")

# one quadrant leaves a connected complement
quad = Fan(2, rays=((1, 0), (0, 1)), cones=((0, 1),))
print("quadrant ends:", count_ends(quad).count)
print("closed complement pieces:", [c.rays for c in complement_cells(quad)])

# P^2 covers everything; there is no end to speak of
P2 = Fan(2, rays=((1, 0), (0, 1), (-1, -1)), cones=((0, 1), (1, 2), (0, 2)))
try:
    count_ends(P2)
except CompleteFan as e:
    print("P^2:", e)

# a 3D example: the positive octant and its neighbour across x = 0
oct2 = Fan(3, rays=((1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, 0, 1)),
           cones=((0, 2, 3), (1, 2, 3)))
print("3D ends:", count_ends(oct2).count, "smooth:", oct2.is_smooth())

# overlapping cones are not a fan
bad = Fan(2, rays=((1, 0), (0, 1), (1, 1), (-1, 2)), cones=((0, 1), (2, 3)))
print(validate_fan(bad))
