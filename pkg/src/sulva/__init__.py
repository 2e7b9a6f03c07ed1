"""Exact cord-and-peg constructions from the Śulvasūtras, with error analysis.

Numbers are exact constructible reals (rationals closed under square
roots); decimals appear only on output, from certified interval enclosures.
"""
from __future__ import annotations

from .analysis import (ApproximationRecord, Direction, ErrorReport, ReferenceKind,
                       agreement_digits, area_error, builtin_catalog, compare_sqrt2,
                       comparison_records, emit_error_table, generate_triples, implied_pi,
                       reference_pi, reference_sqrt2)
from .constructions import (Built, CircleSquaringMethod, PythagoreanTriple, TheoremCheck,
                            augment_unit, circle_from_square, compass_perpendicular,
                            diagonal_rectangle_theorem_check, difference_of_squares_side,
                            dronaciti_partition, east_west_from_shadow, maitrayaniya_radius,
                            north_south_perpendicular, nyancana_rectangle, rectangle_to_square,
                            sqrt2_savisesha, sqrt_n_altitude, square_area_table,
                            square_from_circle, sum_of_squares_side, triple_catalog)
from .errors import *  # noqa: F401,F403
from .geometry import (AngleCheck, Circle, Point, Segment, area_of_polygon, cord_stretch_midpoint,
                       distance, intersect, mark_on_line, right_angle_check)
from .interval import Interval
from .registry import REGISTRY, OpResult
from .render import RenderSpec, render_svg
from .scalar import (ConstructibleScalar, Ordering, Scalar, compare, evaluate, parse_scalar,
                     sqrt, to_decimal)
from .script import Script, ScriptResult, parse_script, run_script
from .trace import ConstructionTrace
from .units import DEFAULT_TABLE, LengthQuantity, LengthUnit, UnitTable, quantity, unit_convert

__version__ = "0.1.0"
