"""Vedic length units and exact conversion between them.

Ratios are exact rationals relative to the aṅgula.  Each unit carries the set
of texts in which it is attested; a text missing from a unit's set means the
attestation is not recorded here, not that the text lacks the unit.

The aṅgula's metric size (about 1.9 cm) is kept for display only.
"""
from __future__ import annotations

import json
import unicodedata
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Optional, Union

from .errors import UnknownUnit
from .scalar import ConstructibleScalar, ScalarLike, sign

BAUDHAYANA = "Baudhayana"
APASTAMBA = "Apastamba"
MANAVA = "Manava"
KATYAYANA = "Katyayana"
TEXTS = (BAUDHAYANA, APASTAMBA, MANAVA, KATYAYANA)

ANGULA_CM_APPROX = "1.9"


@dataclass(frozen=True)
class LengthUnit:
    name: str
    ratio_to_angula: Fraction
    attested_in: frozenset = frozenset()
    display: str = ""
    aliases: tuple = ()
    note: str = ""

    def __post_init__(self):
        object.__setattr__(self, "ratio_to_angula", Fraction(self.ratio_to_angula))
        object.__setattr__(self, "attested_in", frozenset(self.attested_in))
        if self.ratio_to_angula <= 0:
            raise ValueError(f"unit {self.name!r} must have a positive ratio")
        unknown = self.attested_in - set(TEXTS)
        if unknown:
            raise ValueError(f"unknown text tags {sorted(unknown)}")
        if not self.display:
            object.__setattr__(self, "display", self.name)

    def __str__(self) -> str:
        return self.display


@dataclass(frozen=True)
class LengthQuantity:
    magnitude: ConstructibleScalar
    unit: LengthUnit

    def __post_init__(self):
        object.__setattr__(self, "magnitude", ConstructibleScalar.coerce(self.magnitude))

    def __str__(self) -> str:
        return f"{self.magnitude} {self.unit.display}"


_B = frozenset({BAUDHAYANA})
_K = frozenset({KATYAYANA})
_BK = frozenset({BAUDHAYANA, KATYAYANA})

DEFAULT_UNITS = (
    LengthUnit("angula", Fraction(1), _BK, "aṅgula", ("finger",)),
    LengthUnit("tila", Fraction(1, 34), _B, "tila", ("sesame",)),
    # 14 aṇu to the aṅgula is the traditional Baudhāyana figure
    LengthUnit("anu", Fraction(1, 14), _B, "aṇu", (),
               note="traditional Baudhāyana figure, kept for completeness"),
    LengthUnit("pradesha", Fraction(12), _B, "prādeśa"),
    LengthUnit("vitasti", Fraction(12), _K, "vitasti"),
    LengthUnit("pada", Fraction(12), _K, "pada"),
    LengthUnit("bahu", Fraction(36), _B, "bāhu"),
    LengthUnit("yuga", Fraction(86), _B, "yuga"),
    LengthUnit("purusha", Fraction(120), _B, "puruṣa", ("man",)),
    LengthUnit("isha", Fraction(188), _BK, "īṣā", ("pole",)),
)


def _fold(name: str) -> str:
    decomposed = unicodedata.normalize("NFKD", name)
    return "".join(ch for ch in decomposed if not unicodedata.combining(ch)).lower()


class UnitTable:
    """Lookup table for length units, by name, display name or alias."""

    def __init__(self, units: Iterable[LengthUnit] = DEFAULT_UNITS):
        self.units: dict[str, LengthUnit] = {}
        self._index: dict[str, str] = {}
        for unit in units:
            self.register(unit)

    def register(self, unit: LengthUnit) -> None:
        self.units[unit.name] = unit
        for key in (unit.name, unit.display, *unit.aliases):
            self._index[_fold(key)] = unit.name

    def __getitem__(self, name: Union[str, LengthUnit]) -> LengthUnit:
        if isinstance(name, LengthUnit):
            name = name.name
        key = self._index.get(_fold(name))
        if key is None:
            raise UnknownUnit(f"unknown unit {name!r}")
        return self.units[key]

    def __contains__(self, name: str) -> bool:
        return _fold(name) in self._index

    def __iter__(self):
        return iter(self.units.values())

    def __len__(self):
        return len(self.units)

    def attested(self, text: str) -> list[LengthUnit]:
        return [u for u in self if text in u.attested_in]

    def convert(self, q: LengthQuantity, target: Union[str, LengthUnit]) -> LengthQuantity:
        return unit_convert(q, target, self)

    # -- JSON ---------------------------------------------------------------

    def to_json(self) -> str:
        rows = []
        for u in self:
            r = u.ratio_to_angula
            rows.append({
                "name": u.name,
                "ratio_to_angula": f"{r.numerator}/{r.denominator}",
                "attested_in": sorted(u.attested_in),
                "display": u.display,
                "aliases": list(u.aliases),
            })
        return json.dumps(rows, ensure_ascii=False, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "UnitTable":
        rows = json.loads(text)
        units = []
        for row in rows:
            units.append(LengthUnit(
                name=row["name"],
                ratio_to_angula=Fraction(row["ratio_to_angula"]),
                attested_in=frozenset(row.get("attested_in", ())),
                display=row.get("display", ""),
                aliases=tuple(row.get("aliases", ())),
            ))
        return cls(units)

    @classmethod
    def load(cls, path: Union[str, Path]) -> "UnitTable":
        return cls.from_json(Path(path).read_text(encoding="utf-8"))


DEFAULT_TABLE = UnitTable()


def get_unit(name: Union[str, LengthUnit], table: Optional[UnitTable] = None) -> LengthUnit:
    return (table or DEFAULT_TABLE)[name]


def quantity(magnitude: ScalarLike, unit: Union[str, LengthUnit],
             table: Optional[UnitTable] = None) -> LengthQuantity:
    magnitude = ConstructibleScalar.coerce(magnitude)
    if sign(magnitude) < 0:
        raise ValueError("physical lengths are non-negative")
    return LengthQuantity(magnitude, get_unit(unit, table))


def unit_convert(q: LengthQuantity, target: Union[str, LengthUnit],
                 table: Optional[UnitTable] = None) -> LengthQuantity:
    """Rescale ``q`` into ``target`` units exactly."""
    table = table or DEFAULT_TABLE
    source = table[q.unit]
    dest = table[target]
    factor = source.ratio_to_angula / dest.ratio_to_angula
    return LengthQuantity(q.magnitude * factor, dest)
