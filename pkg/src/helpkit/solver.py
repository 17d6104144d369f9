"""Complete enumeration of integer solutions to partial-augmentation systems.

Pipeline: exact rational bound derivation (a small two-phase simplex run per
variable, since interval reasoning alone cannot bound through the
augmentation equalities), then depth-first branch and prune over integer
boxes with interval propagation and residue-class stepping on the last free
variable of each modular constraint.  Every reported solution is re-checked
against every constraint in exact arithmetic before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor, gcd

from .chartable import CharTable
from .lpcore import (
    LinearForm,
    MuConstraint,
    PaVar,
    augmentation_equation,
    build_system,
    divisors_of,
    hlp_bounds,
    quadratic_filter_applicable,
    quadratic_filter_holds,
    variable_layout,
)

__all__ = [
    "LinConstraint",
    "CspInstance",
    "PaSolution",
    "ChainResult",
    "Contradiction",
    "UnboundedVariable",
    "BudgetExceeded",
    "solve",
    "propagate",
    "chain_solve",
    "serialize_solutions",
    "DEFAULT_BUDGET",
]

DEFAULT_BUDGET = 10**8


class UnboundedVariable(ValueError):
    def __init__(self, var: PaVar):
        self.var = var
        super().__init__(f"variable {var} is not bounded by the constraint system")


class BudgetExceeded(RuntimeError):
    pass


class Contradiction:
    """Normal return value of propagate when a domain empties."""

    def __repr__(self):
        return "Contradiction()"


@dataclass(frozen=True)
class LinConstraint:
    """lo <= coeffs . x + constant <= hi, optionally == 0 mod modulus."""

    coeffs: tuple[tuple[PaVar, int], ...]
    constant: int
    lo: int | None
    hi: int | None
    modulus: int | None = None
    tag: str = ""

    @staticmethod
    def from_mu(mc: MuConstraint) -> "LinConstraint":
        coeffs, constant = _int_form(mc.form)
        label = mc.provenance[0]
        if mc.provenance[1] is not None:
            label += f" mod {mc.provenance[1]}"
        return LinConstraint(
            coeffs, constant, 0, mc.upper, mc.modulus, f"mu_{mc.provenance[2]}({label})"
        )

    @staticmethod
    def equality(form: LinearForm, tag: str = "") -> "LinConstraint":
        coeffs, constant = _int_form(form)
        return LinConstraint(coeffs, constant, 0, 0, None, tag)

    def holds(self, assignment: dict[PaVar, int]) -> bool:
        val = self.constant + sum(c * assignment[v] for v, c in self.coeffs)
        if self.lo is not None and val < self.lo:
            return False
        if self.hi is not None and val > self.hi:
            return False
        return self.modulus is None or val % self.modulus == 0


def _int_form(form: LinearForm) -> tuple[tuple[tuple[PaVar, int], ...], int]:
    if form.constant.denominator != 1 or any(
        c.denominator != 1 for c in form.terms.values()
    ):
        raise ValueError("constraint forms must have integer coefficients")
    coeffs = tuple(sorted(((v, int(c)) for v, c in form.terms.items())))
    return coeffs, int(form.constant)


@dataclass
class CspInstance:
    vars: tuple[PaVar, ...]
    bounds: dict[PaVar, tuple[int | None, int | None]]
    constraints: list[LinConstraint]
    quad_table: CharTable | None = None  # enables the quadratic filter

    def __post_init__(self):
        declared = set(self.vars)
        for con in self.constraints:
            for v, _ in con.coeffs:
                if v not in declared:
                    raise ValueError(f"constraint references undeclared variable {v}")


@dataclass(frozen=True)
class PaSolution:
    """Values on the top order's variables plus the divisor tuples beneath."""

    assignment: tuple[int, ...]
    chain: tuple[tuple[int, tuple[int, ...]], ...] = ()

    def chain_dict(self) -> dict[int, tuple[int, ...]]:
        return dict(self.chain)


# -- exact simplex for bound derivation --------------------------------------


class _Simplex:
    """Two-phase primal simplex over exact rationals.

    Free variables are split into positive parts; every row becomes an
    equality after slacks.  Phase 1 runs once; each objective re-runs phase 2
    from the stored feasible basis.  Dantzig pricing with a Bland fallback
    guarantees termination.
    """

    def __init__(self, variables, rows):
        self.vars = list(variables)
        index = {v: i for i, v in enumerate(self.vars)}
        nfree = 2 * len(self.vars)

        def expand(coeffs: dict) -> list[Fraction]:
            row = [Fraction(0)] * nfree
            for v, c in coeffs.items():
                i = index[v]
                row[2 * i] += c
                row[2 * i + 1] -= c
            return row

        eqs: list[tuple[list[Fraction], Fraction]] = []
        ineqs: list[tuple[list[Fraction], Fraction]] = []
        for coeffs, lo, hi in rows:
            base = expand(coeffs)
            if lo is not None and hi is not None and lo == hi:
                eqs.append((base, Fraction(lo)))
                continue
            if hi is not None:
                ineqs.append((list(base), Fraction(hi)))
            if lo is not None:
                ineqs.append(([-c for c in base], Fraction(-lo)))
        self.nfree = nfree
        self.ncols = nfree + len(ineqs)
        table: list[list[Fraction]] = []
        rhs: list[Fraction] = []
        for i, (row, b) in enumerate(ineqs):
            full = row + [Fraction(0)] * len(ineqs)
            full[nfree + i] = Fraction(1)
            table.append(full)
            rhs.append(b)
        for row, b in eqs:
            table.append(row + [Fraction(0)] * len(ineqs))
            rhs.append(b)
        m = len(table)
        # append artificial columns to reach a feasible starting basis
        self.a = []
        self.b = []
        self.basis = []
        for i in range(m):
            row = table[i][:]
            b = rhs[i]
            if b < 0:
                row = [-x for x in row]
                b = -b
            row += [Fraction(0)] * m
            row[self.ncols + i] = Fraction(1)
            self.a.append(row)
            self.b.append(b)
            self.basis.append(self.ncols + i)
        self.total_cols = self.ncols + m
        self._phase1_done = False
        self._feasible = False

    def feasible(self) -> bool:
        if not self._phase1_done:
            cost = [Fraction(0)] * self.ncols + [Fraction(-1)] * len(self.a)
            z = self._run(self.a, self.b, self.basis, cost)
            self._feasible = z is not None and z == 0
            if self._feasible:
                for i in range(len(self.a)):
                    if self.basis[i] >= self.ncols:
                        for j in range(self.ncols):
                            if self.a[i][j] != 0:
                                self._pivot(self.a, self.b, self.basis, i, j)
                                break
            self._phase1_done = True
        return self._feasible

    def optimize(self, var, maximize: bool) -> Fraction | None:
        """Extreme value of var over the relaxation; None when unbounded."""
        if not self.feasible():
            return Fraction(0)
        i = self.vars.index(var)
        sign = 1 if maximize else -1
        cost = [Fraction(0)] * self.total_cols
        cost[2 * i] = Fraction(sign)
        cost[2 * i + 1] = Fraction(-sign)
        a = [row[:] for row in self.a]
        b = self.b[:]
        basis = self.basis[:]
        z = self._run(a, b, basis, cost, forbid_artificial=True)
        if z is None:
            return None
        return z if maximize else -z

    def _run(self, a, b, basis, cost, forbid_artificial=False) -> Fraction | None:
        m = len(a)
        limit = self.ncols if forbid_artificial else self.total_cols
        iterations = 0
        while True:
            iterations += 1
            bland = iterations > 200
            cb = [cost[j] for j in basis]
            in_basis = set(basis)
            entering, best_red = -1, Fraction(0)
            for j in range(limit):
                if j in in_basis:
                    continue
                red = cost[j] - sum(cb[i] * a[i][j] for i in range(m) if a[i][j])
                if red > 0:
                    if bland:
                        entering = j
                        break
                    if red > best_red:
                        best_red, entering = red, j
            if entering < 0:
                return sum(cb[i] * b[i] for i in range(m) if b[i])
            leave, best = -1, None
            for i in range(m):
                if a[i][entering] > 0:
                    ratio = b[i] / a[i][entering]
                    if best is None or ratio < best or (
                        ratio == best and basis[i] < basis[leave]
                    ):
                        best, leave = ratio, i
            if leave < 0:
                return None  # unbounded
            self._pivot(a, b, basis, leave, entering)

    @staticmethod
    def _pivot(a, b, basis, row, col):
        piv = a[row][col]
        arow = a[row] = [x / piv for x in a[row]]
        b[row] /= piv
        brow = b[row]
        for i in range(len(a)):
            if i != row:
                f = a[i][col]
                if f:
                    ai = a[i]
                    a[i] = [x - f * y for x, y in zip(ai, arow)]
                    b[i] -= f * brow
        basis[row] = col


def _derive_bounds(inst: CspInstance) -> dict[PaVar, tuple[int, int]] | Contradiction:
    """Integer interval per variable implied by the rational relaxation."""
    rows: list[tuple[dict[PaVar, int], int | None, int | None]] = []
    for con in inst.constraints:
        lo = None if con.lo is None else con.lo - con.constant
        hi = None if con.hi is None else con.hi - con.constant
        rows.append((dict(con.coeffs), lo, hi))
    for v, (lo, hi) in inst.bounds.items():
        if lo is not None or hi is not None:
            rows.append(({v: 1}, lo, hi))
    lp = _Simplex(list(inst.vars), rows)
    if not lp.feasible():
        return Contradiction()
    out: dict[PaVar, tuple[int, int]] = {}
    for v in inst.vars:
        lo = lp.optimize(v, maximize=False)
        hi = lp.optimize(v, maximize=True)
        if lo is None or hi is None:
            raise UnboundedVariable(v)
        out[v] = (ceil(lo), floor(hi))
    return out


# -- compiled search kernel ----------------------------------------------------


class _Kernel:
    """Index-compiled instance: integer-only propagation over lo/hi arrays."""

    def __init__(self, inst: CspInstance, boxes: dict[PaVar, tuple[int, int]]):
        self.vars = list(inst.vars)
        index = {v: i for i, v in enumerate(self.vars)}
        self.lo = [boxes[v][0] for v in self.vars]
        self.hi = [boxes[v][1] for v in self.vars]
        self.cons = []  # (terms=((idx, coeff), ...), const, lo, hi, mod)
        for con in inst.constraints:
            terms = tuple((index[v], c) for v, c in con.coeffs)
            self.cons.append((terms, con.constant, con.lo, con.hi, con.modulus))
        self.touching: list[list[int]] = [[] for _ in self.vars]
        for ci, (terms, *_rest) in enumerate(self.cons):
            for i, _ in terms:
                self.touching[i].append(ci)

    def propagate(self, queue: list[int] | None = None) -> bool:
        """Tighten lo/hi to fixpoint; False on contradiction."""
        lo, hi = self.lo, self.hi
        pending = set(range(len(self.cons))) if queue is None else set(queue)
        cons = self.cons
        touching = self.touching
        while pending:
            ci = pending.pop()
            terms, const, clo, chi, mod = cons[ci]
            sum_lo = const
            sum_hi = const
            free = -1
            nfree = 0
            for i, c in terms:
                a = lo[i]
                b = hi[i]
                if c > 0:
                    sum_lo += c * a
                    sum_hi += c * b
                else:
                    sum_lo += c * b
                    sum_hi += c * a
                if a != b:
                    nfree += 1
                    free = i
            if clo is not None and sum_hi < clo:
                return False
            if chi is not None and sum_lo > chi:
                return False
            if nfree == 0:
                if mod is not None and sum_lo % mod:
                    return False
                continue
            for i, c in terms:
                a = lo[i]
                b = hi[i]
                if a == b:
                    continue
                if c > 0:
                    rest_lo = sum_lo - c * a
                    rest_hi = sum_hi - c * b
                else:
                    rest_lo = sum_lo - c * b
                    rest_hi = sum_hi - c * a
                na, nb = a, b
                if chi is not None:
                    mx = chi - rest_lo
                    if c > 0:
                        q = mx // c
                        if q < nb:
                            nb = q
                    else:
                        q = _ceil_div(mx, c)
                        if q > na:
                            na = q
                if clo is not None:
                    mn = clo - rest_hi
                    if c > 0:
                        q = _ceil_div(mn, c)
                        if q > na:
                            na = q
                    else:
                        q = _floor_div(mn, c)
                        if q < nb:
                            nb = q
                if mod is not None and nfree == 1:
                    fixed = sum_lo - c * (a if c > 0 else b)
                    clipped = _residue_interval(c, fixed, mod, na, nb)
                    if clipped is None:
                        return False
                    na, nb = clipped
                if na > nb:
                    return False
                if na != a or nb != b:
                    lo[i] = na
                    hi[i] = nb
                    pending.update(touching[i])
        return True


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b) if b > 0 else -(a // (-b))


def _floor_div(a: int, b: int) -> int:
    return a // b if b > 0 else (-a) // (-b)


def _residue_interval(c: int, fixed: int, m: int, lo: int, hi: int):
    """Clip [lo, hi] to values v with c*v + fixed == 0 (mod m)."""
    g = gcd(c, m)
    if fixed % g:
        return None
    mm = m // g
    if mm == 1:
        return (lo, hi) if lo <= hi else None
    v0 = (-(fixed // g) * pow(c // g, -1, mm)) % mm
    first = lo + ((v0 - lo) % mm)
    if first > hi:
        return None
    last = hi - ((hi - v0) % mm)
    return first, last


def propagate(
    inst: CspInstance,
    partial: dict[PaVar, int],
    boxes: dict[PaVar, tuple[int, int]] | None = None,
) -> dict[PaVar, tuple[int, int]] | Contradiction:
    """Fixpoint interval tightening given a partial assignment.

    Returns tightened per-variable intervals, or Contradiction.  Intervals
    only shrink, so the iteration terminates.
    """
    if boxes is None:
        derived = _derive_bounds(inst)
        if isinstance(derived, Contradiction):
            return derived
        boxes = derived
    kern = _Kernel(inst, boxes)
    for v, val in partial.items():
        i = inst.vars.index(v)
        if val < kern.lo[i] or val > kern.hi[i]:
            return Contradiction()
        kern.lo[i] = kern.hi[i] = val
    if not kern.propagate():
        return Contradiction()
    return {v: (kern.lo[i], kern.hi[i]) for i, v in enumerate(inst.vars)}


# -- search -------------------------------------------------------------------


def solve(
    inst: CspInstance,
    budget: int = DEFAULT_BUDGET,
    boxes: dict[PaVar, tuple[int, int]] | None = None,
) -> list[tuple[int, ...]]:
    """All integer points satisfying the instance, sorted lexicographically.

    Branch and prune with complete enumeration; raises UnboundedVariable when
    the rational relaxation does not box every variable and BudgetExceeded
    when the node cap is hit (never a truncated answer).
    """
    if boxes is None:
        derived = _derive_bounds(inst)
        if isinstance(derived, Contradiction):
            return []
        boxes = derived
    kern = _Kernel(inst, boxes)
    if not kern.propagate():
        return []
    n = len(kern.vars)
    lo, hi = kern.lo, kern.hi
    cons = kern.cons
    solutions: list[tuple[int, ...]] = []
    nodes = 0

    def verify_and_emit():
        assignment = dict(zip(inst.vars, (lo[i] for i in range(n))))
        if all(con.holds(assignment) for con in inst.constraints):
            solutions.append(tuple(lo))

    def branch_var() -> int:
        best, width = -1, None
        for i in range(n):
            w = hi[i] - lo[i]
            if w > 0 and (width is None or w < width):
                best, width = i, w
        return best

    def stride_for(i: int) -> tuple[int, int] | None:
        """(first value, step) honoring any single-free modular constraint."""
        step, first = 1, lo[i]
        for ci in kern.touching[i]:
            terms, const, _clo, _chi, mod = cons[ci]
            if mod is None:
                continue
            cvar, others_fixed, fixed = 0, True, const
            for j, c in terms:
                if j == i:
                    cvar = c
                elif lo[j] != hi[j]:
                    others_fixed = False
                    break
                else:
                    fixed += c * lo[j]
            if not others_fixed or not cvar:
                continue
            clipped = _residue_interval(cvar, fixed, mod, lo[i], hi[i])
            if clipped is None:
                return None
            mm = mod // gcd(cvar, mod)
            if mm > step:
                step, first = mm, clipped[0]
        return first, step

    def descend() -> None:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"search exceeded {budget} nodes")
        i = branch_var()
        if i < 0:
            verify_and_emit()
            return
        plan = stride_for(i)
        if plan is None:
            return
        value, step = plan
        top = hi[i]
        save_lo, save_hi = lo[:], hi[:]
        while value <= top:
            lo[i] = hi[i] = value
            if kern.propagate(kern.touching[i]):
                descend()
            lo[:], hi[:] = save_lo, save_hi
            value += step

    descend()

    if inst.quad_table is not None:
        by_tag: dict[int, list[PaVar]] = {}
        for v in inst.vars:
            by_tag.setdefault(v.order_tag, []).append(v)
        keep = []
        for tup in solutions:
            assignment = dict(zip(inst.vars, tup))
            ok = True
            for tag_vars in by_tag.values():
                if quadratic_filter_applicable(inst.quad_table, tag_vars):
                    if not quadratic_filter_holds(
                        inst.quad_table, {v: assignment[v] for v in tag_vars}
                    ):
                        ok = False
                        break
            if ok:
                keep.append(tup)
        solutions = keep
    return sorted(solutions)


# -- chained systems ----------------------------------------------------------


@dataclass
class ChainResult:
    order: int
    top_vars: tuple[PaVar, ...]
    all_vars: tuple[PaVar, ...]
    solutions: list[PaSolution]
    skipped: list[tuple[str, int | None]] = field(default_factory=list)

    def top_tuples(self) -> list[tuple[int, ...]]:
        return sorted({s.assignment for s in self.solutions})


def proper_divisor_orders(k: int) -> list[int]:
    return [d for d in divisors_of(k) if 1 < d < k]


def _chain_vars_and_constraints(
    t: CharTable,
    orders: list[int],
    plans: dict[int, list[tuple[str, int]]] | None,
):
    """Variables and mu systems for the given order tags, chains as vars."""
    vars_: list[PaVar] = []
    cons: list[LinConstraint] = []
    skipped: list[tuple[str, int | None]] = []
    seen: set[tuple] = set()
    for m in orders:
        layout = variable_layout(t, m)
        vars_.extend(layout)
        cons.append(LinConstraint.equality(augmentation_equation(layout), f"aug_{m}"))
        rows = (plans or {}).get(m)
        mus, sk = build_system(t, m, chain=None, rows=rows)
        skipped.extend(sk)
        for mc in mus:
            con = LinConstraint.from_mu(mc)
            # drop structurally duplicate rows (different l often repeat a form)
            key = (con.coeffs, con.constant, con.lo, con.hi, con.modulus)
            if key not in seen:
                seen.add(key)
                cons.append(con)
    return vars_, cons, skipped


def chain_solve(
    t: CharTable,
    k: int,
    mode: str = "case-split",
    plans: dict[int, list[tuple[str, int]]] | None = None,
    budget: int = DEFAULT_BUDGET,
    use_sizes: bool = True,
) -> ChainResult:
    """Admissible partial augmentations of order k with full divisor chaining.

    joint mode keeps the divisor orders' augmentations as solver variables
    constrained by their own systems; case-split substitutes every admissible
    divisor assignment as constants.  Both return identical solution sets.
    """
    if mode not in ("joint", "case-split"):
        raise ValueError(f"unknown mode {mode!r}")
    sub_orders = sorted(proper_divisor_orders(k), reverse=True)
    top_layout = tuple(variable_layout(t, k))
    all_orders = [k] + sub_orders
    vars_, cons, skipped = _chain_vars_and_constraints(t, all_orders, plans)
    quad = t if use_sizes and any(c.size is not None for c in t.classes) else None
    bounds = {
        v: (hlp_bounds(t, [v])[v] or (None, None)) if use_sizes else (None, None)
        for v in vars_
    }
    inst = CspInstance(tuple(vars_), bounds, cons, quad)
    derived = _derive_bounds(inst)
    if isinstance(derived, Contradiction):
        return ChainResult(k, top_layout, tuple(vars_), [], skipped)

    n_top = len(top_layout)
    if mode == "joint":
        sols = solve(inst, budget, boxes=derived)
    else:
        # admissible full divisor assignments, then the top system per case
        div_vars = tuple(vars_[n_top:])
        top_set = set(top_layout)
        if div_vars:
            div_set = set(div_vars)
            div_cons = [c for c in cons if all(v in div_set for v, _ in c.coeffs)]
            div_inst = CspInstance(
                div_vars, {v: bounds[v] for v in div_vars}, div_cons, quad
            )
            div_sols = solve(div_inst, budget, boxes={v: derived[v] for v in div_vars})
        else:
            div_sols = [()]
        sols = []
        top_boxes = {v: derived[v] for v in top_layout}
        top_only, mixed = [], []
        for con in cons:
            vs = {v for v, _ in con.coeffs}
            if vs <= top_set:
                top_only.append(con)
            elif vs & top_set:
                mixed.append(con)
        for case in div_sols:
            fixed = dict(zip(div_vars, case))
            case_cons = list(top_only)
            for con in mixed:
                const = con.constant + sum(
                    c * fixed[v] for v, c in con.coeffs if v in fixed
                )
                kept = tuple((v, c) for v, c in con.coeffs if v not in fixed)
                case_cons.append(
                    LinConstraint(kept, const, con.lo, con.hi, con.modulus, con.tag)
                )
            case_inst = CspInstance(
                top_layout, {v: bounds[v] for v in top_layout}, case_cons, quad
            )
            for tup in solve(case_inst, budget, boxes=dict(top_boxes)):
                sols.append(tuple(tup) + tuple(case))

    by_tag_slices: list[tuple[int, int, int]] = []
    pos = 0
    for m in all_orders:
        width = len(variable_layout(t, m))
        by_tag_slices.append((m, pos, pos + width))
        pos += width
    out = []
    for full in sorted(set(sols)):
        chain = tuple((m, tuple(full[a:b])) for m, a, b in by_tag_slices[1:])
        out.append(PaSolution(tuple(full[:n_top]), chain))
    return ChainResult(k, top_layout, tuple(vars_), out, skipped)


def serialize_solutions(tuples: list[tuple[int, ...]]) -> str:
    """Canonical text: one `(a,b,c)` tuple per line, declared variable order."""
    return "".join("(" + ",".join(str(x) for x in t) + ")\n" for t in tuples)
