"""(s,t)-constant characters: detection, rows, combination search, rule-outs."""

import pytest

from golden_forms import CO3_57_DIFF_TUPLES, ST_ROW_GOLDENS
from helpkit.lpcore import MissingValue
from helpkit.report import load_st_differences
from helpkit.stconstant import (
    EmptyConstraintSet,
    SpectrumOrder,
    display_label,
    find_st_combinations,
    is_st_constant,
    rule_out_order,
    st_row,
    st_value,
)


def test_is_st_constant_examples(co3):
    assert is_st_constant(co3, co3.character("chi3_mod3"), 5, 7)
    assert is_st_constant(co3, co3.character("chi3"), 5, 7)
    assert not is_st_constant(co3, co3.character("chi2"), 5, 7)
    # single classes of both orders are trivially constant
    assert is_st_constant(co3, co3.character("chi2"), 7, 7)


def test_is_st_constant_missing_value(co3):
    with pytest.raises(MissingValue):
        is_st_constant(co3, co3.character("chi6"), 5, 7)


def test_st_value(co3):
    assert st_value(co3, co3.character("chi3_mod3"), 5) == 1
    assert st_value(co3, co3.character("chi3_mod3"), 7) == 0
    with pytest.raises(ValueError):
        st_value(co3, co3.character("chi2"), 5)


@pytest.mark.parametrize(
    "group,chi,s,t,l,m1,mp,mq",
    ST_ROW_GOLDENS,
    ids=[f"{g}-{c}-{s}x{t}-l{l}" for g, c, s, t, l, *_ in ST_ROW_GOLDENS],
)
def test_st_row_goldens(tables, group, chi, s, t, l, m1, mp, mq):
    row = st_row(tables[group], tables[group].character(chi), s, t, l)
    assert (row.m1, row.ms, row.mt) == (m1, mp, mq)


def test_st_row_trivial_zero_values(co3):
    # xi(C_s) = xi(C_t) = 0 leaves only the degree at l = 0
    row = st_row(co3, co3.character("chi3"), 11, 23, 0)
    assert (row.m1, row.ms, row.mt) == (253, 0, 0)


def test_find_combinations_reproduces_the_thirteen_tuples(co3):
    recorded = next(
        d for d in load_st_differences("co3")
        if d["families"].startswith("ordinary")
    )
    combos = find_st_combinations(
        co3, 5, 7, max_summands=5,
        char_ids=["chi2", "chi3"],
        extra_differences=recorded["differences"],
    )
    tuples = {c.diffs for c in combos if c.diffs}
    assert tuples == CO3_57_DIFF_TUPLES
    singles = [c.witnesses for c in combos if not c.diffs]
    assert ("chi3",) in singles


def test_combination_minimality(co3):
    recorded = [5, -5, 10, -10, 15, -15]
    combos = find_st_combinations(co3, 5, 7, char_ids=[], max_summands=5,
                                  extra_differences=recorded)
    for combo in combos:
        if not combo.diffs:
            continue
        assert sum(combo.diffs) == 0
        # removing any single summand must break the cancellation
        from itertools import combinations

        n = len(combo.diffs)
        for r in range(1, n):
            for sub in combinations(combo.diffs, r):
                assert sum(sub) != 0, (combo.diffs, sub)


def test_no_cancellation_no_combinations(co3):
    combos = find_st_combinations(co3, 5, 7, char_ids=[], max_summands=5,
                                  extra_differences=[5, 10])
    assert [c for c in combos if c.diffs] == []


def test_rule_out_requires_out_of_spectrum(co3):
    with pytest.raises(SpectrumOrder):
        rule_out_order(co3, 2, 11)  # 22 is an element order of Co3


def test_rule_out_requires_rows(co3):
    with pytest.raises(EmptyConstraintSet):
        rule_out_order(co3, 2, 23, rows=[])


def test_co3_46_intermediate_and_final(co3):
    partial = rule_out_order(co3, 2, 23,
                             rows=[("chi23", 0), ("chi23", 1), ("chi23", 23)])
    assert partial.verdict == "feasible"
    assert sorted(a for a, _ in partial.survivors) == [-22, 24]
    full = rule_out_order(co3, 2, 23, rows=[
        ("chi23", 0), ("chi23", 1), ("chi23", 23),
        ("chi2+chi5+chi8", 0), ("chi2+chi5+chi8", 23),
    ])
    assert full.infeasible


def test_co3_35_survivor(co3):
    rep = rule_out_order(co3, 5, 7, rows=[("chi3_mod3", 0), ("chi3_mod3", 7)])
    assert rep.verdict == "feasible"
    assert rep.survivors == [(15, -14)]


def test_co2_35_survivors(co2):
    rep = rule_out_order(co2, 5, 7, rows=[("chi7_mod3", 0), ("chi7_mod3", 7)])
    assert sorted(a for a, _ in rep.survivors) == [-20, 15, 50, 85]


def test_auto_mode_matches_explicit_verdicts(co3, co2, co1):
    cases = [
        (co3, 2, 23), (co3, 5, 11), (co3, 3, 23), (co3, 7, 11), (co3, 5, 23),
        (co3, 7, 23), (co3, 11, 23), (co2, 2, 23), (co2, 3, 11), (co2, 5, 11),
        (co2, 3, 23), (co2, 7, 11), (co2, 5, 23), (co2, 7, 23), (co2, 11, 23),
        (co1, 7, 13), (co1, 11, 13), (co1, 7, 23), (co1, 11, 23), (co1, 13, 23),
    ]
    for table, s, t in cases:
        assert rule_out_order(table, s, t, rows="auto").infeasible, (s, t)


def test_row_sum_closure(co3):
    # rows of a sum of (s,t)-constant characters are the row-wise sums
    a = co3.character("chi3")          # (5,7)-constant: 3 / 1
    b = co3.character("chi3_mod3")     # (5,7)-constant: 1 / 0
    from helpkit.chartable import Character

    values = {
        cls: a.values[cls] + b.values[cls]
        for cls in set(a.values) & set(b.values)
    }
    s = Character("sum", "ordinary", None, a.degree + b.degree, values)
    for l in (0, 3, 7):
        ra = st_row(co3, a, 5, 7, l)
        rb = st_row(co3, b, 5, 7, l)
        rs = st_row(co3, s, 5, 7, l)
        assert (rs.m1, rs.ms, rs.mt) == (
            ra.m1 + rb.m1, ra.ms + rb.ms, ra.mt + rb.mt)


def test_rows_independent_of_variables_feasible(co3):
    from helpkit.chartable import Character
    from helpkit.cyclotomic import CycInt

    flat = Character("flat", "ordinary", None, 46, {
        "1a": CycInt.from_int(46),
        **{c.name: CycInt.zero() for c in co3.classes
           if c.element_order in (2, 23)},
    })
    row = st_row(co3, flat, 2, 23, 0)
    assert (row.ms, row.mt) == (0, 0)
    # m1 = 46 is divisible by st and non-negative: feasible for every pair
    import dataclasses

    table = dataclasses.replace(co3, characters=co3.characters + (flat,))
    rep = rule_out_order(table, 2, 23, rows=[("flat", 0)])
    assert rep.verdict == "feasible" and rep.survivors == []
    assert "independent" in rep.note


def test_display_labels():
    assert display_label("chi23") == "(23)[*]"
    assert display_label("chi2+chi5+chi8") == "(2,5,8)[*]"
    assert display_label("chi3+chi3+chi6_mod2") == "(3,3,6)[2]"
    assert display_label("chi15_mod13") == "(15)[13]"
