"""
Circling the square
===================

Build the circle whose area should match a unit square, look at the exact
radius, then measure how far off the area is and what value of pi the rule
amounts to.
"""
from sulva import circle_from_square, evaluate, render_svg, to_decimal
from sulva.analysis import area_error, builtin_catalog, reference_pi

# the construction is exact: the radius comes out as a surd
radius, trace = circle_from_square(1)
print("radius      ", radius, "≈", to_decimal(radius, 10))

# every step of the cord work is recorded and can be replayed
for step in trace.steps[:6]:
    print("  ", step.op, step.inputs, "->", step.outputs)
print("   ...", len(trace.steps), "steps in all")

# area of the circle, with pi enclosed in a certified interval
pi = reference_pi(30)
area = evaluate(radius * radius, 30) * pi
print("circle area  ", area.decimal(10))

# the same figures straight from the analysis catalog
record = builtin_catalog()[0]
report = area_error(record)
print("implied pi   ", report.implied_pi.decimal(8))
print("error (%)    ", (report.relative_error * 100).fixed(2, sign=True))

with open("circling_the_square.svg", "w", encoding="utf-8") as fh:
    fh.write(render_svg([trace]))
print("drawing written to circling_the_square.svg")
