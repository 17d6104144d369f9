"""Linear constraint systems on partial augmentations of torsion units.

For a candidate unit order k the non-identity classes whose element order
divides k carry one integer variable each (all other partial augmentations
vanish, and the identity one is zero); the variables of each power u^d of
order k_i = k/d get the tag k_i.  Every usable character chi and shift l
yield the constraint

    sum_d Tr( chi(u^d) * zeta_{k_i}^{-l} )  >= 0,  <= k*deg(chi),  == 0 mod k,

whose exact rational coefficients come from the cyclotomic trace.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt

from .chartable import CharTable, Character
from .cyclotomic import CycInt, root_trace

log = logging.getLogger(__name__)

__all__ = [
    "PaVar",
    "LinearForm",
    "MuConstraint",
    "CandidateOrder",
    "MissingValue",
    "BrauerPrimeDividesOrder",
    "candidate_orders",
    "hertweck_zero",
    "variable_layout",
    "augmentation_equation",
    "mu_form",
    "build_system",
    "render_constraint",
    "hlp_bounds",
    "classify_rational",
    "divisors_of",
]


class MissingValue(KeyError):
    def __init__(self, char_id: str, cls: str):
        self.char_id, self.cls = char_id, cls
        super().__init__(f"character {char_id!r} has no value on class {cls!r}")


class BrauerPrimeDividesOrder(ValueError):
    pass


@dataclass(frozen=True, order=True)
class PaVar:
    """Partial-augmentation variable: unit-power order tag plus class name."""

    order_tag: int
    cls: str


@dataclass
class LinearForm:
    """constant + sum of coeff * var with exact rational coefficients."""

    constant: Fraction = Fraction(0)
    terms: dict[PaVar, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {v: Fraction(c) for v, c in self.terms.items() if c}
        self.constant = Fraction(self.constant)

    def add_term(self, var: PaVar, coeff) -> None:
        c = self.terms.get(var, Fraction(0)) + Fraction(coeff)
        if c:
            self.terms[var] = c
        else:
            self.terms.pop(var, None)

    def plus(self, other: "LinearForm") -> "LinearForm":
        out = LinearForm(self.constant + other.constant, dict(self.terms))
        for v, c in other.terms.items():
            out.add_term(v, c)
        return out

    def scaled(self, q) -> "LinearForm":
        q = Fraction(q)
        return LinearForm(self.constant * q, {v: c * q for v, c in self.terms.items()})

    def evaluate(self, assignment: dict[PaVar, int]) -> Fraction:
        return self.constant + sum(
            (c * assignment[v] for v, c in self.terms.items()), Fraction(0)
        )

    def reduce_by_augmentation(self, layouts: dict[int, list[PaVar]]) -> "LinearForm":
        """Eliminate the last variable of every order tag via sum(nu) = 1.

        Used to compare forms that are only equal modulo the augmentation
        equations.
        """
        out = LinearForm(self.constant, dict(self.terms))
        for tag, vars_ in layouts.items():
            if not vars_:
                continue
            last = vars_[-1]
            c = out.terms.pop(last, None)
            if c:
                out.constant += c
                for v in vars_[:-1]:
                    out.add_term(v, -c)
        return out

    def __eq__(self, other):
        return (
            isinstance(other, LinearForm)
            and self.constant == other.constant
            and self.terms == other.terms
        )

    def __repr__(self):
        parts = [str(self.constant)]
        for v in sorted(self.terms):
            parts.append(f"{self.terms[v]}*nu[{v.order_tag}:{v.cls}]")
        return "LinearForm(" + " + ".join(parts) + ")"


@dataclass
class MuConstraint:
    """form >= 0, form <= upper, form == 0 (mod modulus).

    `form` is the numerator of the trace sum, before division by the unit
    order; `upper` is modulus * deg(chi).
    """

    form: LinearForm
    modulus: int
    upper: int
    provenance: tuple[str, int | None, int]  # (character id, brauer prime, l)

    def holds_at(self, assignment: dict[PaVar, int]) -> bool:
        val = self.form.evaluate(assignment)
        return (
            val.denominator == 1
            and 0 <= val <= self.upper
            and val.numerator % self.modulus == 0
        )


@dataclass(frozen=True)
class CandidateOrder:
    order: int
    in_spectrum: bool


def divisors_of(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def candidate_orders(t: CharTable) -> list[CandidateOrder]:
    """All orders a torsion unit may have: divisors > 1 of the exponent."""
    spectrum = t.spectrum()
    return [
        CandidateOrder(d, d in spectrum)
        for d in divisors_of(t.exponent)
        if d > 1
    ]


def hertweck_zero(t: CharTable, k: int) -> list[str]:
    """Classes whose partial augmentation vanishes for a unit of order k."""
    return [
        c.name
        for c in t.classes[1:]
        if k % c.element_order != 0
    ]


def variable_layout(t: CharTable, k: int) -> list[PaVar]:
    """One variable per non-identity class of order dividing k, table order."""
    if k <= 1:
        raise ValueError("unit order must exceed 1")
    return [
        PaVar(k, c.name)
        for c in t.classes[1:]
        if k % c.element_order == 0
    ]


def augmentation_equation(vars_: list[PaVar]) -> LinearForm:
    """sum(nu) - 1; constrained to equal zero."""
    form = LinearForm(Fraction(-1))
    for v in vars_:
        form.add_term(v, 1)
    return form


ChainSpec = dict[int, object]  # divisor d -> "vars" | tuple of ints


def mu_form(
    t: CharTable,
    chi: Character,
    k: int,
    l: int,
    chain: ChainSpec | None = None,
) -> MuConstraint:
    """The numerator form of the order-k multiplicity constraint at shift l.

    `chain` maps each proper divisor d of k (1 < d < k) to either the marker
    "vars" (the partial augmentations of u^d stay variables, tagged k/d) or a
    tuple of integers fixing them in the layout order of k/d.  Divisors
    absent from the chain default to "vars".
    """
    if k < 1:
        raise ValueError("order must be positive")
    if chi.kind == "brauer":
        if gcd(chi.brauer_p, k) != 1:
            raise BrauerPrimeDividesOrder(
                f"{chi.id}: modular prime {chi.brauer_p} divides the order {k}"
            )
    chain = dict(chain or {})
    form = LinearForm(Fraction(chi.degree))  # the d = k summand
    for d in divisors_of(k):
        if d == k:
            continue
        k_i = k // d
        layout = variable_layout(t, k_i) if k_i > 1 else []
        spec = chain.get(d, "vars") if d > 1 else "vars"
        shift = (-l * d) % k_i if k_i > 1 else 0
        if spec == "vars" or k_i == 1:
            for var in layout:
                form.add_term(var, _trace_coeff(t, chi, var.cls, k_i, shift))
        else:
            values = tuple(spec)
            if len(values) != len(layout):
                raise ValueError(
                    f"chain tuple for divisor {d} has {len(values)} entries, "
                    f"layout of order {k_i} has {len(layout)}"
                )
            for var, value in zip(layout, values):
                if value:
                    form.constant += value * _trace_coeff(t, chi, var.cls, k_i, shift)
    return MuConstraint(form, k, k * chi.degree, (chi.id, chi.brauer_p, l))


def _trace_coeff(t: CharTable, chi: Character, cls: str, k_i: int, shift: int) -> Fraction:
    """Tr over Q(zeta_{k_i}) of chi(cls) * zeta^shift, as an exact rational."""
    value = chi.value(cls)
    if value is None:
        raise MissingValue(chi.id, cls)
    embedded = value.embed(k_i)
    return Fraction(
        sum(c * root_trace(k_i, e + shift) for e, c in embedded.c.items())
    )


def build_system(
    t: CharTable,
    k: int,
    chain: ChainSpec | None = None,
    rows: list[tuple[str, int]] | None = None,
    chars: list[str] | None = None,
) -> tuple[list[MuConstraint], list[tuple[str, int | None]]]:
    """All usable mu constraints for order k.

    By default every character usable at k contributes for every l in [0, k);
    `rows` replays an explicit (character id, l) list and `chars` restricts to
    named characters.  Characters lacking a needed value are skipped with a
    notice, never an error, as long as something remains.

    Returns (constraints, skipped) where skipped lists (char id, brauer prime).
    """
    wanted: list[tuple[Character, int]]
    if rows is not None:
        wanted = [(t.character(cid), l) for cid, l in rows]
    else:
        pool = [
            chi
            for chi in t.characters
            if (chars is None or chi.id in chars) and chi.usable_at(k)
        ]
        wanted = [(chi, l) for chi in pool for l in range(k)]
    out: list[MuConstraint] = []
    skipped: list[tuple[str, int | None]] = []
    for chi, l in wanted:
        if not chi.usable_at(k):
            if rows is not None:
                raise BrauerPrimeDividesOrder(
                    f"{chi.id}: modular prime divides the order {k}"
                )
            continue
        try:
            out.append(mu_form(t, chi, k, l, chain))
        except MissingValue:
            key = (chi.id, chi.brauer_p)
            if key not in skipped:
                skipped.append(key)
                log.info("order %d: skipping %s (missing class values)", k, chi.id)
            if rows is not None:
                raise
    return out, skipped


def render_constraint(mc: MuConstraint) -> str:
    """Diagnostic one-liner: fraction, expanded form, and the bound."""
    char_id, p, l = mc.provenance
    label = char_id if p is None else f"{char_id},{p}"
    parts = []
    for v in sorted(mc.form.terms):
        c = mc.form.terms[v]
        coeff = "" if abs(c) == 1 else f"{abs(c)}*"
        parts.append(f"{'-' if c < 0 else '+'} {coeff}nu[{v.order_tag}:{v.cls}]")
    if mc.form.constant:
        parts.append(f"+ {mc.form.constant}")
    body = " ".join(parts).lstrip("+ ") or "0"
    deg = mc.upper // mc.modulus if mc.modulus else mc.upper
    return (f"mu_{l}({label}) = (1/{mc.modulus})({body}); "
            f"integer in [0, {deg}]")


def hlp_bounds(t: CharTable, vars_: list[PaVar]) -> dict[PaVar, tuple[int, int] | None]:
    """Box bounds |nu|^2 <= |C| per variable; None where the size is unknown.

    The companion quadratic condition sum(nu^2 / |C|) <= 1 is applied by the
    solver as a post-enumeration filter when every size is present.
    """
    out: dict[PaVar, tuple[int, int] | None] = {}
    for v in vars_:
        size = t.class_named(v.cls).size
        if size is None:
            out[v] = None
        else:
            b = isqrt(size)
            out[v] = (-b, b)
    return out


def quadratic_filter_applicable(t: CharTable, vars_: list[PaVar]) -> bool:
    return all(t.class_named(v.cls).size is not None for v in vars_)


def quadratic_filter_holds(t: CharTable, assignment: dict[PaVar, int]) -> bool:
    total = Fraction(0)
    for v, value in assignment.items():
        size = t.class_named(v.cls).size
        total += Fraction(value * value, size)
    return total <= 1


def classify_rational(chain_tuples: dict[int, tuple[int, ...]]) -> bool:
    """True iff each order's tuple has exactly one nonzero entry (then 1).

    `chain_tuples` maps every order in the divisor chain (top included) to
    its partial-augmentation tuple.
    """
    for values in chain_tuples.values():
        nonzero = [v for v in values if v]
        if len(nonzero) != 1 or nonzero[0] != 1:
            return False
    return True
