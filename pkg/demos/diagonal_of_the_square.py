"""
The diagonal of the unit square
===============================

The rule 1 + 1/3 + 1/(3*4) - 1/(3*4*34) for the diagonal, set against a
certified enclosure of sqrt(2), with the Babylonian sexagesimal value for
comparison.
"""
from fractions import Fraction

from sulva import compare, sqrt, sqrt2_savisesha, to_decimal
from sulva.analysis import compare_sqrt2
from sulva.interval import certified_sci

value = sqrt2_savisesha()
print("rule value     ", value, "=", to_decimal(value, 8))
print("sqrt(2)        ", to_decimal(sqrt(2), 8))

# the rule overshoots; compare() decides this exactly
print("ordering       ", compare(value, sqrt(2)).value)

for label, candidate in (("rule", value), ("Babylonian", Fraction(14142129, 10 ** 7))):
    rep = compare_sqrt2(candidate)
    err = rep.absolute_error
    print(f"{label:<15} places agreeing: {rep.agreement_digits}, "
          f"error {certified_sci(err.lower, err.upper, 4, sign=True)}")
