"""Acceptance suite: every pinned result at its stated tolerance.

Each test prints one PASS line per criterion (run with -s to see them all);
tolerances are exact everywhere, so a criterion either reproduces its golden
data bit-for-bit or fails.

Known data gap, asserted honestly: the Co1 rule-outs for orders 46, 69 and
115 need character values on the order-2/3/5 classes of Co1, which no
bundled snippet can supply; those three cases fail until a full table is
provided.
"""

import itertools
import random
import time
from fractions import Fraction
from math import gcd

import pytest

from golden_forms import CO3_57_DIFF_TUPLES, MU_FORM_GOLDENS, ST_ROW_GOLDENS
from helpkit.chartable import power_class
from helpkit.cyclotomic import CycInt, root_trace
from helpkit.lpcore import (
    LinearForm,
    PaVar,
    classify_rational,
    divisors_of,
    mu_form,
    variable_layout,
)
from helpkit.report import (
    load_replay_plans,
    load_ruleout_manifest,
    load_st_differences,
    read_golden_tuples,
    run_report,
    solve_order,
)
from helpkit.solver import CspInstance, chain_solve, solve
from helpkit.stconstant import find_st_combinations, rule_out_order, st_row


def ok(name: str) -> None:
    print(f"[ACCEPTANCE] {name}: PASS")


# ---------------------------------------------------------------- criterion 1


def test_cyclotomic_trace_oracle():
    """root_trace equals the brute-force Galois-conjugate sum, n <= 30."""
    for n in range(1, 31):
        for j in range(n):
            total = CycInt.zero()
            for t in range(1, n + 1):
                if gcd(t, n) == 1:
                    total = total + CycInt(n, {(j * t) % n: 1})
            assert total.is_rational()
            assert total.rational_value() == root_trace(n, j), (n, j)
    ok("cyclotomic trace oracle (all n <= 30, exact)")


# ---------------------------------------------------------------- criterion 2


def _layouts_for(table, k, chain):
    layouts = {k: variable_layout(table, k)}
    for d in divisors_of(k):
        if 1 < d < k and chain.get(d, "vars") == "vars":
            layouts[k // d] = variable_layout(table, k // d)
    return layouts


def test_mu_form_goldens_regenerate(tables):
    """Every displayed inequality regenerates coefficient-for-coefficient."""
    for group, chi, k, l, chain, terms, constant in MU_FORM_GOLDENS:
        table = tables[group]
        mc = mu_form(table, table.character(chi), k, l, chain)
        layouts = _layouts_for(table, k, chain)
        got = mc.form.reduce_by_augmentation(layouts)
        want = LinearForm(
            Fraction(constant),
            {PaVar(tag, cls): Fraction(c) for (tag, cls), c in terms.items()},
        ).reduce_by_augmentation(layouts)
        assert got == want, (group, chi, k, l)
    for group, chi, s, t, l, m1, mp, mq in ST_ROW_GOLDENS:
        row = st_row(tables[group], tables[group].character(chi), s, t, l)
        assert (row.m1, row.ms, row.mt) == (m1, mp, mq), (group, chi, s, t, l)
    ok(f"mu-form goldens ({len(MU_FORM_GOLDENS)} displayed constraints, "
       f"{len(ST_ROW_GOLDENS)} table rows, exact)")


# ---------------------------------------------------------------- criterion 3


SOLUTION_CASES = [
    ("co3", 2, "file", "co3_order2.txt"),
    ("co3", 3, "file", "co3_order3.txt"),
    ("co3", 5, "file", "co3_order5.txt"),
    ("co3", 7, "rational", None),
    ("co3", 11, "file", "co3_order11.txt"),
    ("co3", 23, "file", "co3_order23.txt"),
    ("co3", 35, "file", "co3_order35.txt"),
    ("co2", 2, "file", "co2_order2.txt"),
    ("co2", 3, "file", "co2_order3.txt"),
    ("co2", 5, "file", "co2_order5.txt"),
    ("co2", 7, "rational", None),
    ("co2", 11, "rational", None),
    ("co2", 23, "file", "co2_order23.txt"),
    ("co2", 35, "file", "co2_order35.txt"),
    ("co1", 7, "file", "co1_order7.txt"),
    ("co1", 11, "rational", None),
    ("co1", 13, "rational", None),
]


@pytest.mark.parametrize("group,k,kind,fname", SOLUTION_CASES,
                         ids=[f"{g}-order{k}" for g, k, *_ in SOLUTION_CASES])
def test_solution_set_goldens(tables, group, k, kind, fname):
    res = solve_order(tables[group], k, plans=load_replay_plans(group))
    got = res.top_tuples()
    if kind == "file":
        assert got == sorted(read_golden_tuples(fname))
    else:
        assert got and all(
            classify_rational({k: s.assignment, **s.chain_dict()})
            for s in res.solutions
        )
    ok(f"solution set {group} order {k} "
       f"({len(got)} tuples)" if kind == "file" else
       f"solution set {group} order {k} (rationally conjugate)")


def test_solution_set_co1_order23_under_a_minute(co1):
    t0 = time.time()
    res = solve_order(co1, 23, plans=load_replay_plans("co1"))
    elapsed = time.time() - t0
    got = res.top_tuples()
    assert got == [(a, 1 - a) for a in range(-29293, 29295)]
    assert len(got) == 58588
    assert elapsed < 60, f"took {elapsed:.1f}s"
    ok(f"solution set co1 order 23 (58588 tuples in {elapsed:.1f}s)")


def test_co3_order35_intermediate_survivor(co3):
    rep = rule_out_order(co3, 5, 7, rows=[("chi3_mod3", 0), ("chi3_mod3", 7)])
    assert rep.survivors == [(15, -14)]
    ok("co3 order-35 intermediate survivor (15,-14)")


# ---------------------------------------------------------------- criterion 4


RULEOUT_REPRODUCIBLE = [
    ("co3", 33), ("co3", 46), ("co3", 55), ("co3", 69), ("co3", 77),
    ("co3", 115), ("co3", 161), ("co3", 253),
    ("co2", 21), ("co2", 22), ("co2", 33), ("co2", 46), ("co2", 55),
    ("co2", 69), ("co2", 77), ("co2", 115), ("co2", 161), ("co2", 253),
    ("co1", 77), ("co1", 91), ("co1", 143), ("co1", 161), ("co1", 253),
    ("co1", 299),
]


@pytest.mark.parametrize("group,k", RULEOUT_REPRODUCIBLE,
                         ids=[f"{g}-{k}" for g, k in RULEOUT_REPRODUCIBLE])
def test_rule_out_goldens(tables, group, k):
    table = tables[group]
    spec = load_ruleout_manifest()[group][str(k)]
    if spec["method"] == "chain":
        res = solve_order(table, k, plans=load_replay_plans(group))
        assert res.solutions == []
    else:
        rows = [(cid, l) for cid, l in spec["rows"]]
        rep = rule_out_order(table, spec["s"], spec["t"], rows)
        assert rep.infeasible
        got = {(r.l, r.m1, r.ms, r.mt) for r in rep.rows}
        assert {tuple(r) for r in spec["expect_rows"]} <= got
    ok(f"rule-out {group} order {k} (infeasible)")


def test_co3_46_intermediate_survivors(co3):
    rep = rule_out_order(co3, 2, 23,
                         rows=[("chi23", 0), ("chi23", 1), ("chi23", 23)])
    assert sorted(a for a, _ in rep.survivors) == [-22, 24]
    ok("co3 order-46 intermediate survivors nu_2 in {-22, 24}")


def test_co2_35_intermediate_survivors(co2):
    rep = rule_out_order(co2, 5, 7, rows=[("chi7_mod3", 0), ("chi7_mod3", 7)])
    assert sorted(a for a, _ in rep.survivors) == [-20, 15, 50, 85]
    ok("co2 order-35 intermediate survivors nu_5 in {-20, 15, 50, 85}")


@pytest.mark.parametrize("k", [46, 69, 115], ids=["co1-46", "co1-69", "co1-115"])
def test_rule_out_goldens_co1_data_gap(co1, k):
    """Stated criterion: infeasible from bundled snippets.

    The bundled Co1 snippet has no character values on the order-2, order-3
    or order-5 classes (none are recoverable), so no constraint row touches
    these systems and the criterion cannot be met at desk scale.  The test
    asserts the criterion as written and fails until a full table is
    supplied; see the README data-gap note.
    """
    s = {46: 2, 69: 3, 115: 5}[k]
    decided = False
    try:
        rep = rule_out_order(co1, s, 23, rows="auto")
        decided = rep.infeasible
    except Exception:
        decided = False
    assert decided, f"co1 order {k}: undecidable from bundled snippet data"
    ok(f"rule-out co1 order {k} (infeasible)")


# ---------------------------------------------------------------- criterion 5


def test_st_irreducible_search_13_tuples(co3):
    recorded = next(d for d in load_st_differences("co3")
                    if d["families"].startswith("ordinary"))
    combos = find_st_combinations(co3, 5, 7, max_summands=5,
                                  char_ids=["chi2", "chi3"],
                                  extra_differences=recorded["differences"])
    tuples = {c.diffs for c in combos if c.diffs}
    assert tuples == CO3_57_DIFF_TUPLES
    assert len(tuples) == 13
    ok("(5,7)-irreducible search reproduces the 13 difference tuples")


# ---------------------------------------------------------------- criterion 6


def test_property_mu_sum_partitions_degree(tables):
    rng = random.Random(7)
    cases = [("co3", "chi2", 2), ("co3", "chi3_mod3", 11), ("co3", "chi2", 35),
             ("co2", "chi3", 22), ("a5", "chi2", 5), ("s3", "chi3", 3)]
    for group, chi_id, k in cases:
        table = tables[group]
        chi = table.character(chi_id)
        vars_ = list(variable_layout(table, k))
        for d in divisors_of(k):
            if 1 < d < k:
                vars_.extend(variable_layout(table, k // d))
        for _ in range(10):
            assignment = {v: rng.randint(-40, 40) for v in vars_}
            total = sum(mu_form(table, chi, k, l).form.evaluate(assignment)
                        for l in range(k))
            assert total == k * chi.degree
    ok("property: sum of mu over shifts equals the degree (randomized)")


def test_property_mu_additivity(tables):
    from helpkit.chartable import Character

    for group, pair, k in [("a5", ("chi2", "chi3"), 5),
                           ("co3", ("chi2", "chi3"), 3),
                           ("co2", ("chi2", "chi3"), 2)]:
        table = tables[group]
        a, b = (table.character(x) for x in pair)
        values = {c: a.values[c] + b.values[c]
                  for c in set(a.values) & set(b.values)}
        total = Character("sum", "ordinary", None, a.degree + b.degree, values)
        for l in range(k):
            lhs = mu_form(table, total, k, l).form
            rhs = mu_form(table, a, k, l).form.plus(mu_form(table, b, k, l).form)
            assert lhs == rhs
    ok("property: mu is additive under character addition")


def test_property_realizability(tables):
    for group in ("a5", "s3"):
        table = tables[group]
        for k in sorted(table.spectrum() - {1}):
            for c in table.classes_of_order(k):
                assignment = {
                    v: 1 if v.cls == c.name else 0
                    for v in variable_layout(table, k)
                }
                for d in divisors_of(k):
                    if 1 < d < k:
                        target = power_class(table, c.name, d)
                        for v in variable_layout(table, k // d):
                            assignment[v] = 1 if v.cls == target else 0
                for chi in table.characters:
                    if not chi.usable_at(k):
                        continue
                    for l in range(k):
                        mc = mu_form(table, chi, k, l)
                        value = mc.form.evaluate(assignment)
                        assert value.denominator == 1
                        assert value.numerator % k == 0
                        assert 0 <= value <= mc.upper
    ok("property: group elements satisfy every constraint (A5, S3)")


def test_property_solver_equals_brute_force(tables):
    from helpkit.solver import _chain_vars_and_constraints, _derive_bounds

    checked = 0
    for group, k in [("co3", 2), ("co3", 3), ("co3", 5), ("co3", 11),
                     ("co3", 23), ("co2", 2), ("co2", 3), ("co2", 5),
                     ("co2", 23), ("co1", 7)]:
        table = tables[group]
        plans = {o: rows for o, rows in load_replay_plans(group).items()
                 if isinstance(rows, list)}
        vars_, cons, _ = _chain_vars_and_constraints(table, [k], plans)
        inst = CspInstance(tuple(vars_), {v: (None, None) for v in vars_}, cons)
        boxes = _derive_bounds(inst)
        volume = 1
        for v in inst.vars:
            volume *= boxes[v][1] - boxes[v][0] + 1
        if volume > 10**7:
            continue
        points = []
        names = list(inst.vars)
        for point in itertools.product(
            *[range(boxes[v][0], boxes[v][1] + 1) for v in names]
        ):
            assignment = dict(zip(names, point))
            if all(con.holds(assignment) for con in inst.constraints):
                points.append(tuple(point))
        assert solve(inst, boxes=dict(boxes)) == sorted(points), (group, k)
        checked += 1
    assert checked >= 8
    ok(f"property: solver equals brute force on {checked} golden boxes <= 1e7")


def test_property_mode_equivalence_on_goldens(tables):
    cases = [("co3", k) for k in (2, 3, 5, 7, 11, 23, 33, 35)] + \
            [("co2", k) for k in (2, 3, 5, 7, 11, 21, 22, 23, 35)] + \
            [("co1", k) for k in (7, 11, 13, 23, 77)] + \
            [("a5", k) for k in (2, 3, 5)] + [("s3", k) for k in (2, 3)]
    for group, k in cases:
        table = tables[group]
        plans = load_replay_plans(group) if group.startswith("co") else None
        a = solve_order(table, k, mode="case-split", plans=plans)
        b = solve_order(table, k, mode="joint", plans=plans)
        key = lambda s: (s.assignment, s.chain)
        assert sorted(map(key, a.solutions)) == sorted(map(key, b.solutions)), (group, k)
    ok(f"property: joint and case-split modes agree on {len(cases)} goldens")


# ---------------------------------------------------------------- criterion 7


def test_data_gated_items_reported_skipped():
    """Orders 55/65 of Co1 and the Co3 order-4/14 counts need external data
    and must be SKIPPED, not failed, by the default report."""
    report = run_report(skip=_everything_except(
        {"co1-order55", "co1-order65", "co3-order4", "co3-order14"}))
    status = {c.name: c.status for c in report.checks}
    for tag in ("co1-order55", "co1-order65", "co3-order4", "co3-order14"):
        assert status[tag] == "skip", tag
    assert report.exit_code == 0
    ok("data-gated checks marked SKIPPED by the default report")


def _everything_except(keep: set[str]) -> set[str]:
    from helpkit.report import load_ruleout_manifest, load_solution_manifest

    tags = set()
    for group, entries in load_solution_manifest().items():
        tags.update(f"{group}-order{k}" for k in entries)
    for group, entries in load_ruleout_manifest().items():
        tags.update(f"{group}-ruleout{k}" for k in entries)
    return tags - keep
