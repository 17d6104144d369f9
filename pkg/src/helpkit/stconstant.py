"""Characters constant on the order-s and order-t classes, and the two-variable
integer systems they impose on units of composite order s*t.

For primes s, t with no group element of order s*t, a unit u of that order has
nu_s + nu_t = 1 (sums of partial augmentations over the order-s and order-t
classes), and every character xi constant on both families gives

    mu_l = ( m1 + nu_s * ms + nu_t * mt ) / (s*t),

a non-negative integer, where m1, ms, mt are integer trace data.  Searching
for such characters among sums of irreducibles reduces to cancelling value
differences across the class families.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .chartable import CharTable, Character
from .cyclotomic import root_trace
from .lpcore import MissingValue

__all__ = [
    "StConstraintRow",
    "StCombination",
    "RuleOutReport",
    "EmptyConstraintSet",
    "SpectrumOrder",
    "is_st_constant",
    "st_value",
    "st_row",
    "find_st_combinations",
    "rule_out_order",
    "display_label",
]


class EmptyConstraintSet(ValueError):
    pass


class SpectrumOrder(ValueError):
    """The product order occurs in the group, so the two-variable shortcut
    does not apply."""


@dataclass(frozen=True)
class StConstraintRow:
    char_id: str
    brauer_p: int | None
    degree: int
    s: int
    t: int
    xi_s: int
    xi_t: int
    l: int
    m1: int
    ms: int
    mt: int


@dataclass(frozen=True)
class StCombination:
    """A zero-sum multiset of value differences with witnessing characters."""

    diffs: tuple[int, ...]
    witnesses: tuple[str, ...]


@dataclass
class RuleOutReport:
    group: str
    order: int
    s: int
    t: int
    verdict: str  # "infeasible" | "feasible"
    survivors: list[tuple[int, int]]
    rows: list[StConstraintRow]
    contradicting_pair: tuple[int, int] | None = None  # indices into rows
    elapsed: float = 0.0
    note: str = ""

    @property
    def infeasible(self) -> bool:
        return self.verdict == "infeasible"


def _family_values(t: CharTable, chi: Character, n: int) -> list:
    out = []
    for c in t.classes_of_order(n):
        v = chi.value(c.name)
        if v is None:
            raise MissingValue(chi.id, c.name)
        out.append(v)
    return out


def is_st_constant(table: CharTable, chi: Character, s: int, t: int) -> bool:
    """True iff chi takes one value on all order-s classes and one on all
    order-t classes."""
    for n in (s, t):
        values = _family_values(table, chi, n)
        if any(v != values[0] for v in values[1:]):
            return False
    return True


def st_value(table: CharTable, chi: Character, n: int) -> int:
    values = _family_values(table, chi, n)
    first = values[0]
    if any(v != first for v in values[1:]):
        raise ValueError(f"{chi.id} is not constant on the order-{n} classes")
    if not first.is_rational():
        raise ValueError(f"{chi.id} has an irrational constant on order-{n} classes")
    return first.rational_value()


def st_row(table: CharTable, chi: Character, s: int, t: int, l: int) -> StConstraintRow:
    """Integer data (m1, ms, mt) of the shift-l constraint for the character.

    With z a primitive st-th root, z^s is a primitive t-th root and z^t a
    primitive s-th root, so the three traces reduce to scalar root traces.
    """
    xi_s = st_value(table, chi, s)
    xi_t = st_value(table, chi, t)
    m1 = chi.degree + xi_t * root_trace(t, -l) + xi_s * root_trace(s, -l)
    ms = xi_s * root_trace(s * t, -l)
    mt = xi_t * root_trace(s * t, -l)
    return StConstraintRow(
        chi.id, chi.brauer_p, chi.degree, s, t, xi_s, xi_t, l % (s * t), m1, ms, mt
    )


# -- search for (s,t)-constant combinations -----------------------------------


def character_differences(
    table: CharTable, s: int, t: int, char_ids: list[str] | None = None
) -> dict[str, tuple[int, ...]]:
    """Difference vector per scannable character.

    The vector lists value(first class) - value(other class) over the extra
    order-s classes, then the extra order-t classes; characters with missing
    or irrational values on those families are left out.
    """
    out: dict[str, tuple[int, ...]] = {}
    for chi in table.characters:
        if char_ids is not None and chi.id not in char_ids:
            continue
        try:
            vec: list[int] = []
            for n in (s, t):
                values = _family_values(table, chi, n)
                for other in values[1:]:
                    d = values[0] - other
                    if not d.is_rational():
                        raise ValueError
                    vec.append(d.rational_value())
            out[chi.id] = tuple(vec)
        except (MissingValue, ValueError):
            continue
    return out


def find_st_combinations(
    table: CharTable,
    s: int,
    t: int,
    max_summands: int = 5,
    char_ids: list[str] | None = None,
    extra_differences: list[int] | None = None,
) -> list[StCombination]:
    """Minimal multisets of irreducibles whose sum is (s,t)-constant.

    Already-constant characters appear as singletons and never inside a
    larger multiset; a returned multiset is minimal in that removing any
    summand (equivalently, any zero-sum proper sub-multiset) breaks
    constancy.  `extra_differences` contributes recorded per-family
    difference values when the table itself lacks the underlying columns.
    """
    diff_map = character_differences(table, s, t, char_ids)
    singles = [
        StCombination((), (cid,))
        for cid, vec in sorted(diff_map.items())
        if all(x == 0 for x in vec)
    ]
    value_pool: dict[tuple[int, ...], list[str]] = {}
    for cid, vec in diff_map.items():
        if any(vec):
            value_pool.setdefault(vec, []).append(cid)
    width = None
    for vec in value_pool:
        width = len(vec)
    if extra_differences:
        for d in extra_differences:
            vec = (d,) if width in (None, 1) else None
            if vec is None:
                raise ValueError("scalar extra differences need single-column families")
            value_pool.setdefault(vec, []).append("(recorded)")
    values = sorted(value_pool)
    combos: list[StCombination] = []
    seen: set[tuple] = set()
    for size in range(2, max_summands + 1):
        for multi in itertools.combinations_with_replacement(values, size):
            if any(sum(col) for col in zip(*multi)):
                continue
            if _has_zero_sum_proper_subset(multi):
                continue
            key = tuple(sorted(multi))
            if key in seen:
                continue
            seen.add(key)
            flat = tuple(v[0] for v in multi) if len(multi[0]) == 1 else key
            witnesses = tuple(value_pool[v][0] for v in multi)
            combos.append(StCombination(flat, witnesses))
    return singles + combos


def _has_zero_sum_proper_subset(multi: tuple[tuple[int, ...], ...]) -> bool:
    n = len(multi)
    for r in range(1, n):
        for sub in set(itertools.combinations(multi, r)):
            if all(sum(col) == 0 for col in zip(*sub)):
                return True
    return False


# -- the two-variable rule-out solver ------------------------------------------


def rule_out_order(
    table: CharTable,
    s: int,
    t: int,
    rows: list[tuple[str, int]] | str = "auto",
) -> RuleOutReport:
    """Decide units of order s*t from (s,t)-constant rows alone.

    Solves { (m1 + nu_s ms + nu_t mt) / st non-negative integer <= deg,
    nu_s + nu_t = 1 } by complete enumeration over the interval the rows
    bound.  `rows="auto"` takes every (s,t)-constant character at every
    shift in [0, st).
    """
    order = s * t
    if order in table.spectrum():
        raise SpectrumOrder(f"the group has elements of order {order}")
    built: list[StConstraintRow] = []
    if rows == "auto":
        for chi in table.characters:
            if not chi.usable_at(order):
                continue
            try:
                if not is_st_constant(table, chi, s, t):
                    continue
                st_value(table, chi, s), st_value(table, chi, t)
            except (MissingValue, ValueError):
                continue
            for l in range(order):
                built.append(st_row(table, chi, s, t, l))
    else:
        for cid, l in rows:
            built.append(st_row(table, table.character(cid), s, t, l))
    # drop duplicate (m1, ms, mt, degree) data
    uniq: list[StConstraintRow] = []
    seen = set()
    for r in built:
        key = (r.m1, r.ms, r.mt, r.degree)
        if key not in seen:
            seen.add(key)
            uniq.append(r)
    if not uniq:
        raise EmptyConstraintSet(f"no usable ({s},{t})-constant rows")

    # substitute nu_t = 1 - nu_s: value(l) = (m1 + mt) + nu_s (ms - mt)
    lo, hi = None, None
    for r in uniq:
        slope = r.ms - r.mt
        base = r.m1 + r.mt
        upper = order * r.degree
        if slope > 0:
            cand_lo = -(-(0 - base) // slope)  # ceil((0 - base)/slope)
            cand_hi = (upper - base) // slope
        elif slope < 0:
            cand_lo = -(-(upper - base) // slope)
            cand_hi = (0 - base) // slope
        else:
            continue
        lo = cand_lo if lo is None else max(lo, cand_lo)
        hi = cand_hi if hi is None else min(hi, cand_hi)
    if lo is None:
        # no row depends on the variables: feasible iff every constant passes
        ok = all(
            0 <= r.m1 + r.mt <= order * r.degree and (r.m1 + r.mt) % order == 0
            for r in uniq
        )
        return RuleOutReport(
            table.group_name, order, s, t,
            "feasible" if ok else "infeasible", [], uniq,
            note="rows independent of the augmentations" if ok else "",
        )
    survivors = []
    for nu_s in range(lo, hi + 1):
        if all(_row_holds(r, order, nu_s) for r in uniq):
            survivors.append((nu_s, 1 - nu_s))
    if survivors:
        return RuleOutReport(table.group_name, order, s, t, "feasible",
                             survivors, uniq)
    pair = _contradicting_pair(uniq, order)
    return RuleOutReport(table.group_name, order, s, t, "infeasible", [],
                         uniq, contradicting_pair=pair)


def _row_holds(r: StConstraintRow, order: int, nu_s: int) -> bool:
    val = r.m1 + nu_s * r.ms + (1 - nu_s) * r.mt
    return 0 <= val <= order * r.degree and val % order == 0


def _contradicting_pair(rows: list[StConstraintRow], order: int):
    for i, j in itertools.combinations(range(len(rows)), 2):
        pair = [rows[i], rows[j]]
        lo, hi = None, None
        for r in pair:
            slope = r.ms - r.mt
            base = r.m1 + r.mt
            if slope > 0:
                a, b = -(-(0 - base) // slope), (order * r.degree - base) // slope
            elif slope < 0:
                a = -(-(order * r.degree - base) // slope)
                b = (0 - base) // slope
            else:
                continue
            lo = a if lo is None else max(lo, a)
            hi = b if hi is None else min(hi, b)
        if lo is None:
            continue
        if lo > hi or not any(
            all(_row_holds(r, order, v) for r in pair) for v in range(lo, hi + 1)
        ):
            return (i, j)
    return None


def display_label(char_id: str) -> str:
    """Render character ids the way the rule-out tables do.

    chi23 -> (23)[*];  chi2+chi5+chi8 -> (2,5,8)[*];  chi4_mod2 -> (4)[2].
    """
    base = char_id
    p = "*"
    if "_mod" in base:
        base, p = base.rsplit("_mod", 1)
    indices = []
    for piece in base.split("+"):
        indices.append(piece.removeprefix("chi"))
    return f"({','.join(indices)})[{p}]"
