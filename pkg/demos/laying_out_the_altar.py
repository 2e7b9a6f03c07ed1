"""
Laying out the altar ground
===========================

From two shadow points get the east-west line, raise the north-south line
with the rope, then peg out a rectangle whose corners are made square with
a marked cord.  Finally combine and split squares.
"""
from sulva import (east_west_from_shadow, north_south_perpendicular, nyancana_rectangle,
                   right_angle_check, sum_of_squares_side, difference_of_squares_side,
                   sqrt_n_altitude, to_decimal, triple_catalog)

# shadow tip crosses the circle of radius 5 at two points
ew, _ = east_west_from_shadow((0, 0), 5, (-3, 4), (4, 3))
ns, _ = north_south_perpendicular(ew)
print("east-west      ", ew.start, "->", ew.end)
print("north-south    ", ns.start, "->", ns.end)
print("right angle?   ", right_angle_check(ew.midpoint, ew.end, ns.end).value)

# every listed triple gives square corners
for t in triple_catalog():
    corners, _ = nyancana_rectangle((0, 0), (1, 0), t.a, t.b, triple=t)
    print(f"triple {t.as_tuple()!s:<13} corners {[str(c) for c in corners]}")

side, _ = sum_of_squares_side(3, 4)
rest, _ = difference_of_squares_side(5, 4)
print("3² + 4²  ->", side, "   5² - 4² ->", rest)

for n in (2, 3, 5, 10):
    alt, _ = sqrt_n_altitude(n)
    print(f"square of {n:>2} units has side {alt} ≈ {to_decimal(alt, 8)}")
