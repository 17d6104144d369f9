"""Conjugacy-class and character data: model, JSON ingestion, validation.

Tables may be partial: class sizes and character values are optional and the
downstream constraint generators skip what is missing.  The JSON interchange
format is documented in the README; unknown keys are rejected.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import gcd

from .cyclotomic import CycInt, CycParseError, parse_cyc, render_cyc

__all__ = [
    "ConjClass",
    "Character",
    "CharTable",
    "TableSyntaxError",
    "ValidationError",
    "IncompleteTable",
    "MissingPowerMap",
    "OrthogonalityReport",
    "parse_table",
    "serialize_table",
    "validate_orthogonality",
    "power_class",
]


class TableSyntaxError(ValueError):
    def __init__(self, msg: str, line: int | None = None, col: int | None = None):
        self.line, self.col = line, col
        where = f" (line {line}, column {col})" if line is not None else ""
        super().__init__(msg + where)


class ValidationError(ValueError):
    """An interchange document violated a data-model invariant."""


class IncompleteTable(ValueError):
    """Raised by checks that need a complete table (all sizes and values)."""


class MissingPowerMap(KeyError):
    def __init__(self, cls: str, p: int):
        self.cls, self.p = cls, p
        super().__init__(f"class {cls!r} has no power map entry for prime {p}")


@dataclass(frozen=True)
class ConjClass:
    name: str
    element_order: int
    size: int | None = None
    power_map: dict[int, str] = field(default_factory=dict)


@dataclass(frozen=True)
class Character:
    id: str
    kind: str  # "ordinary" or "brauer"
    brauer_p: int | None
    degree: int
    values: dict[str, CycInt]

    def value(self, cls: str) -> CycInt | None:
        return self.values.get(cls)

    def is_brauer(self) -> bool:
        return self.kind == "brauer"

    def usable_at(self, k: int) -> bool:
        """Brauer characters require gcd(p, k) = 1."""
        return self.kind == "ordinary" or gcd(self.brauer_p, k) == 1


@dataclass(frozen=True)
class CharTable:
    group_name: str
    order_factored: tuple[tuple[int, int], ...]
    exponent_factored: tuple[tuple[int, int], ...]
    classes: tuple[ConjClass, ...]
    characters: tuple[Character, ...]

    @property
    def group_order(self) -> int:
        n = 1
        for p, e in self.order_factored:
            n *= p**e
        return n

    @property
    def exponent(self) -> int:
        n = 1
        for p, e in self.exponent_factored:
            n *= p**e
        return n

    def class_named(self, name: str) -> ConjClass:
        try:
            return self._by_name[name]
        except KeyError:
            raise ValidationError(f"unknown class {name!r}") from None

    @property
    def _by_name(self) -> dict[str, ConjClass]:
        # cached lazily on the instance despite frozen dataclass
        cache = object.__getattribute__(self, "__dict__").get("_names")
        if cache is None:
            cache = {c.name: c for c in self.classes}
            object.__getattribute__(self, "__dict__")["_names"] = cache
        return cache

    def spectrum(self) -> set[int]:
        return {c.element_order for c in self.classes}

    def classes_of_order(self, n: int) -> list[ConjClass]:
        return [c for c in self.classes if c.element_order == n]

    def character(self, char_id: str) -> Character:
        for chi in self.characters:
            if chi.id == char_id:
                return chi
        raise ValidationError(f"unknown character {char_id!r}")

    def is_complete(self) -> bool:
        if any(c.size is None for c in self.classes):
            return False
        names = [c.name for c in self.classes]
        return all(
            chi.kind != "ordinary" or all(n in chi.values for n in names)
            for chi in self.characters
        )


# -- parsing ----------------------------------------------------------------

_TOP_KEYS = {"group", "order_factored", "exponent_factored", "classes", "characters", "notes"}
_CLASS_KEYS = {"name", "order", "size", "powermap"}
_CHAR_KEYS = {"id", "kind", "degree", "values"}


def parse_table(text: str) -> CharTable:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as ex:
        raise TableSyntaxError(ex.msg, ex.lineno, ex.colno) from None
    if not isinstance(doc, dict):
        raise TableSyntaxError("top-level value must be an object")
    _reject_unknown(doc, _TOP_KEYS, "document")
    for key in ("group", "order_factored", "exponent_factored", "classes", "characters"):
        if key not in doc:
            raise ValidationError(f"missing required key {key!r}")

    order = _parse_factored(doc["order_factored"], "order_factored")
    exponent = _parse_factored(doc["exponent_factored"], "exponent_factored")

    classes = []
    for i, raw in enumerate(doc["classes"]):
        _reject_unknown(raw, _CLASS_KEYS, f"classes[{i}]")
        pm = {}
        for p_str, target in raw.get("powermap", {}).items():
            if not p_str.isdigit():
                raise ValidationError(f"powermap key {p_str!r} is not a prime")
            pm[int(p_str)] = target
        classes.append(
            ConjClass(raw["name"], int(raw["order"]), raw.get("size"), pm)
        )

    characters = []
    for i, raw in enumerate(doc["characters"]):
        _reject_unknown(raw, _CHAR_KEYS, f"characters[{i}]")
        kind_raw = raw["kind"]
        if kind_raw == "ordinary":
            kind, brauer_p = "ordinary", None
        elif isinstance(kind_raw, dict) and set(kind_raw) == {"brauer"}:
            kind, brauer_p = "brauer", int(kind_raw["brauer"])
        else:
            raise ValidationError(f"characters[{i}]: bad kind {kind_raw!r}")
        values = {}
        for cls, s in raw["values"].items():
            try:
                values[cls] = parse_cyc(s)
            except CycParseError as ex:
                raise ValidationError(f"character {raw['id']!r}, class {cls!r}: {ex}") from None
        characters.append(Character(raw["id"], kind, brauer_p, int(raw["degree"]), values))

    table = CharTable(doc["group"], order, exponent, tuple(classes), tuple(characters))
    _validate(table)
    return table


def _reject_unknown(obj, allowed: set[str], where: str) -> None:
    if not isinstance(obj, dict):
        raise ValidationError(f"{where} must be an object")
    unknown = set(obj) - allowed
    if unknown:
        raise ValidationError(f"{where}: unknown keys {sorted(unknown)}")


def _parse_factored(raw, where: str) -> tuple[tuple[int, int], ...]:
    out = []
    for pair in raw:
        if not (isinstance(pair, list) and len(pair) == 2):
            raise ValidationError(f"{where} entries must be [prime, exponent] pairs")
        out.append((int(pair[0]), int(pair[1])))
    return tuple(out)


def _validate(t: CharTable) -> None:
    if not t.classes:
        raise ValidationError("table has no classes")
    first = t.classes[0]
    if first.element_order != 1 or first.name != "1a":
        raise ValidationError('first class must be the identity class "1a" of order 1')
    seen = set()
    for c in t.classes:
        if c.name in seen:
            raise ValidationError(f"duplicate class name {c.name!r}")
        seen.add(c.name)
        prefix = "".join(ch for ch in c.name if ch.isdigit())
        if not prefix or int(prefix) != c.element_order:
            raise ValidationError(
                f"class {c.name!r}: numeric prefix does not equal order {c.element_order}"
            )
        if t.exponent % c.element_order:
            raise ValidationError(f"class {c.name!r}: order does not divide the exponent")
    if t.group_order % t.exponent:
        raise ValidationError("exponent does not divide the group order")
    if all(c.size is not None for c in t.classes):
        total = sum(c.size for c in t.classes)
        if total != t.group_order:
            raise ValidationError(f"class sizes sum to {total}, not the group order")
    by_name = {c.name: c for c in t.classes}
    for c in t.classes:
        for p, target in c.power_map.items():
            if target not in by_name:
                raise ValidationError(f"class {c.name!r}: powermap target {target!r} missing")
            want = c.element_order // gcd(c.element_order, p)
            got = by_name[target].element_order
            if got != want:
                raise ValidationError(
                    f"class {c.name!r}: g^{p} should have order {want}, "
                    f"powermap points at order {got}"
                )
    for chi in t.characters:
        for cls, v in chi.values.items():
            if cls not in by_name:
                raise ValidationError(f"character {chi.id!r}: unknown class {cls!r}")
        idval = chi.values.get("1a")
        if idval is not None and idval != CycInt.from_int(chi.degree):
            raise ValidationError(
                f"character {chi.id!r}: value on the identity differs from the degree"
            )
        if chi.kind == "brauer":
            for cls in chi.values:
                if by_name[cls].element_order % chi.brauer_p == 0:
                    raise ValidationError(
                        f"character {chi.id!r}: value on {cls!r} is not {chi.brauer_p}-regular"
                    )


# -- serialization -----------------------------------------------------------


def serialize_table(t: CharTable) -> str:
    doc = {
        "group": t.group_name,
        "order_factored": [list(pe) for pe in t.order_factored],
        "exponent_factored": [list(pe) for pe in t.exponent_factored],
        "classes": [
            _strip_none(
                {
                    "name": c.name,
                    "order": c.element_order,
                    "size": c.size,
                    "powermap": {str(p): c.power_map[p] for p in sorted(c.power_map)},
                }
            )
            for c in t.classes
        ],
        "characters": [
            {
                "id": chi.id,
                "kind": "ordinary" if chi.kind == "ordinary" else {"brauer": chi.brauer_p},
                "degree": chi.degree,
                "values": {
                    c.name: render_cyc(chi.values[c.name])
                    for c in t.classes
                    if c.name in chi.values
                },
            }
            for chi in t.characters
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def _strip_none(d: dict) -> dict:
    return {k: v for k, v in d.items() if v is not None and v != {}}


# -- operations --------------------------------------------------------------


@dataclass
class OrthogonalityReport:
    failures: list[tuple[str, str, str]]  # (chi_i, chi_j, rendered inner product)

    @property
    def ok(self) -> bool:
        return not self.failures


def validate_orthogonality(t: CharTable) -> OrthogonalityReport:
    """First orthogonality of the ordinary characters, in exact arithmetic.

    Sum over classes of size * chi_i(g) * conj(chi_j(g)) must equal |G| for
    i = j and 0 otherwise.  Complex conjugation is the Galois map
    zeta -> zeta^-1.
    """
    ordinary = [chi for chi in t.characters if chi.kind == "ordinary"]
    if any(c.size is None for c in t.classes):
        raise IncompleteTable("class sizes are missing")
    for chi in ordinary:
        for c in t.classes:
            if c.name not in chi.values:
                raise IncompleteTable(f"character {chi.id!r} lacks a value on {c.name!r}")
    failures = []
    for i, chi in enumerate(ordinary):
        for psi in ordinary[i:]:
            acc = CycInt.zero()
            for c in t.classes:
                term = chi.values[c.name] * psi.values[c.name].conjugate()
                acc = acc + term.scale(c.size)
            expect = t.group_order if chi.id == psi.id else 0
            if acc != CycInt.from_int(expect):
                failures.append((chi.id, psi.id, render_cyc(acc)))
    return OrthogonalityReport(failures)


def power_class(t: CharTable, cls: str, d: int) -> str:
    """Class of g^d for g in cls, chaining prime power maps.

    The exponent is first reduced modulo the element order.
    """
    c = t.class_named(cls)
    d %= c.element_order
    if d == 0:
        return t.classes[0].name
    current = c
    while d > 1:
        p = _smallest_prime(d)
        if p not in current.power_map:
            raise MissingPowerMap(current.name, p)
        current = t.class_named(current.power_map[p])
        d //= p
    return current.name


def _smallest_prime(n: int) -> int:
    p = 2
    while p * p <= n:
        if n % p == 0:
            return p
        p += 1
    return n
