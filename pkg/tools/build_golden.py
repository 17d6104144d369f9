# One-off generator for the golden dataset files (run from repo root).
import json
import os

G = "src/helpkit/data/golden"
os.makedirs(G, exist_ok=True)

CO3_ORDER3_TRIPLES = """
(-9,-3,13) (-9,-2,12) (-9,-1,11) (-8,-5,14) (-8,-4,13) (-8,-3,12)
(-8,-2,11) (-8,-1,10) (-8,0,9) (-7,-5,13) (-7,-4,12) (-7,-3,11)
(-7,-2,10) (-7,-1,9) (-7,0,8) (-6,-4,11) (-6,-3,10) (-6,-2,9)
(-6,-1,8) (-6,0,7) (-6,1,6) (-5,-4,10) (-5,-3,9) (-5,-2,8)
(-5,-1,7) (-5,0,6) (-5,1,5) (-4,-3,8) (-4,-2,7) (-4,-1,6)
(-4,0,5) (-4,1,4) (-4,2,3) (-3,-3,7) (-3,-2,6) (-3,-1,5)
(-3,0,4) (-3,1,3) (-3,2,2) (-2,-2,5) (-2,-1,4) (-2,0,3)
(-2,1,2) (-2,2,1) (-2,3,0) (-1,-2,4) (-1,-1,3) (-1,0,2)
(-1,1,1) (-1,2,0) (-1,3,-1) (0,-1,2) (0,0,1) (0,1,0)
(0,2,-1) (0,3,-2) (0,4,-3) (1,-1,1) (1,0,0) (1,1,-1)
(1,2,-2) (1,3,-3) (1,4,-4) (2,0,-1) (2,1,-2) (2,2,-3)
(2,3,-4) (2,4,-5) (2,5,-6) (3,0,-2) (3,1,-3) (3,2,-4)
(3,3,-5) (3,4,-6) (3,5,-7) (4,1,-4) (4,2,-5) (4,3,-6)
(4,4,-7) (4,5,-8) (4,6,-9) (5,1,-5) (5,2,-6) (5,3,-7)
(5,4,-8) (5,5,-9) (5,6,-10) (6,2,-7) (6,3,-8) (6,4,-9)
(6,5,-10) (6,6,-11) (6,7,-12) (7,2,-8) (7,3,-9) (7,4,-10)
(7,5,-11) (7,6,-12) (7,7,-13) (8,3,-10) (8,4,-11) (8,5,-12)
(8,6,-13) (8,7,-14) (8,8,-15) (9,3,-11) (9,4,-12) (9,5,-13)
(9,6,-14) (9,7,-15) (9,8,-16) (10,4,-13) (10,5,-14) (10,6,-15)
(10,7,-16) (10,8,-17) (10,9,-18) (11,4,-14) (11,5,-15) (11,6,-16)
(11,7,-17) (11,8,-18) (11,9,-19) (12,5,-16) (12,6,-17) (12,7,-18)
(12,8,-19) (12,9,-20) (12,10,-21) (13,5,-17) (13,6,-18) (13,7,-19)
(13,8,-20) (13,9,-21) (13,10,-22) (14,6,-19) (14,7,-20) (14,8,-21)
(14,9,-22) (14,10,-23) (14,11,-24) (15,6,-20) (15,7,-21) (15,8,-22)
(15,9,-23) (15,10,-24) (15,11,-25) (16,7,-22) (16,8,-23) (16,9,-24)
(16,10,-25) (16,11,-26) (16,12,-27) (17,7,-23) (17,8,-24)
"""

CO2_ORDER2_TRIPLES = """
(-4,-3,8) (-4,-2,7) (-4,-1,6) (-3,-5,9) (-3,-4,8) (-3,-3,7) (-3,-2,6)
(-3,-1,5) (-3,0,4) (-2,-4,7) (-2,-3,6) (-2,-2,5) (-2,-1,4) (-2,0,3)
(-2,1,2) (-1,-3,5) (-1,-2,4) (-1,-1,3) (-1,0,2) (-1,1,1) (-1,2,0)
(0,-2,3) (0,-1,2) (0,0,1) (0,1,0) (0,2,-1) (0,3,-2) (1,-1,1)
(1,0,0) (1,1,-1) (1,2,-2) (1,3,-3) (1,4,-4) (2,0,-1) (2,1,-2)
(2,2,-3) (2,3,-4) (2,4,-5) (2,5,-6) (3,1,-3) (3,2,-4) (3,3,-5)
(3,4,-6) (3,5,-7) (3,6,-8) (4,2,-5) (4,3,-6) (4,4,-7)
"""

CO1_55 = """
(-2,2,-10,11) (-2,3,-11,11) (-1,-2,-7,11) (-1,-1,-8,11)
(-1,0,-9,11) (-1,1,-10,11) (0,-6,-4,11) (0,-5,-5,11)
(0,-4,-6,11) (0,-3,-7,11) (0,-2,-8,11) (0,-1,-9,11)
(0,0,-10,11) (1,-8,-3,11) (1,-7,-4,11) (1,-6,-5,11)
(1,-5,-6,11) (1,-4,-7,11) (1,-3,-8,11) (1,-2,-9,11)
(2,-9,-3,11) (2,-8,-4,11) (2,-7,-5,11) (2,-6,-6,11)
(2,-5,-7,11) (2,-4,-8,11) (2,-3,-9,11) (3,-11,-2,11)
(3,-10,-3,11) (3,-9,-4,11) (3,-8,-5,11) (3,-7,-6,11)
(3,-6,-7,11) (4,-12,-2,11) (4,-11,-3,11) (4,-10,-4,11)
"""

CO1_65 = """
(-3,2,-24,26) (-2,-2,-21,26) (-2,-1,-22,26) (-2,0,-23,26)
(-1,-3,-21,26) (-1,-2,-22,26) (-1,-1,-23,26) (5,-4,39,-39)
(5,-3,38,-39) (6,-7,41,-39) (6,-6,40,-39) (6,-5,39,-39)
(7,-8,41,-39) (7,-7,40,-39)
"""


def parse_tuples(blob):
    out = []
    for token in blob.split():
        token = token.strip()
        if not token:
            continue
        assert token.startswith("(") and token.endswith(")"), token
        out.append(tuple(int(x) for x in token[1:-1].split(",")))
    return out


def write_tuple_file(path, header, tuples, presorted=False):
    rows = tuples if presorted else sorted(tuples)
    with open(path, "w") as fh:
        fh.write(f"# {header}\n")
        for tp in rows:
            fh.write("(" + ",".join(str(x) for x in tp) + ")\n")


def span_pairs(lo, hi):
    return [(a, 1 - a) for a in range(lo, hi + 1)]


A = parse_tuples(CO3_ORDER3_TRIPLES)
B = parse_tuples(CO2_ORDER2_TRIPLES)
assert len(A) == 155, len(A)
assert len(B) == 48, len(B)
assert all(sum(t) == 1 for t in A + B)
C55 = parse_tuples(CO1_55)
C65 = parse_tuples(CO1_65)
assert len(C55) == 36 and len(C65) == 14
assert all(sum(t) == 1 for t in C55 + C65)

write_tuple_file(f"{G}/co3_order2.txt",
                 "Co3, |u| = 2: admissible (nu_2a, nu_2b)", span_pairs(-2, 3))
write_tuple_file(f"{G}/co3_order3.txt",
                 "Co3, |u| = 3: admissible (nu_3a, nu_3b, nu_3c)", A)
write_tuple_file(f"{G}/co3_order5.txt",
                 "Co3, |u| = 5: admissible (nu_5a, nu_5b)", span_pairs(-4, 1))
write_tuple_file(f"{G}/co3_order11.txt",
                 "Co3, |u| = 11: admissible (nu_11a, nu_11b)", span_pairs(-11, 12))
write_tuple_file(f"{G}/co3_order23.txt",
                 "Co3, |u| = 23: admissible (nu_23a, nu_23b)", span_pairs(-5, 6))
write_tuple_file(f"{G}/co3_order35.txt",
                 "Co3, |u| = 35: admissible (nu_5a, nu_5b, nu_7a)",
                 [(3, 12, -14), (4, 11, -14)])
write_tuple_file(f"{G}/co2_order2.txt",
                 "Co2, |u| = 2: admissible (nu_2a, nu_2b, nu_2c)", B)
write_tuple_file(f"{G}/co2_order3.txt",
                 "Co2, |u| = 3: admissible (nu_3a, nu_3b)", span_pairs(-2, 1))
write_tuple_file(f"{G}/co2_order5.txt",
                 "Co2, |u| = 5: admissible (nu_5a, nu_5b)", span_pairs(-4, 1))
write_tuple_file(f"{G}/co2_order23.txt",
                 "Co2, |u| = 23: admissible (nu_23a, nu_23b)", span_pairs(-32, 33))
write_tuple_file(f"{G}/co2_order35.txt",
                 "Co2, |u| = 35: admissible (nu_5a, nu_5b, nu_7a)",
                 [(3, 12, -14), (4, 11, -14)])
write_tuple_file(f"{G}/co1_order7.txt",
                 "Co1, |u| = 7: admissible (nu_7a, nu_7b)", span_pairs(-7, 39))
write_tuple_file(f"{G}/co1_order55.txt",
                 "Co1, |u| = 55: admissible (nu_5a, nu_5b, nu_5c, nu_11a); "
                 "needs a user-supplied full Co1 table", C55)
write_tuple_file(f"{G}/co1_order65.txt",
                 "Co1, |u| = 65: admissible (nu_5a, nu_5b, nu_5c, nu_13a); "
                 "needs a user-supplied full Co1 table", C65)

solutions = {
    "co3": {
        "2": {"expect": "file", "file": "co3_order2.txt"},
        "3": {"expect": "file", "file": "co3_order3.txt"},
        "5": {"expect": "file", "file": "co3_order5.txt"},
        "7": {"expect": "rational"},
        "11": {"expect": "file", "file": "co3_order11.txt"},
        "23": {"expect": "file", "file": "co3_order23.txt"},
        "35": {"expect": "file", "file": "co3_order35.txt"},
        "4": {"expect": "count", "count": 510, "needs_full_table": True},
        "14": {"expect": "count", "count": 5, "needs_full_table": True},
    },
    "co2": {
        "2": {"expect": "file", "file": "co2_order2.txt"},
        "3": {"expect": "file", "file": "co2_order3.txt"},
        "5": {"expect": "file", "file": "co2_order5.txt"},
        "7": {"expect": "rational"},
        "11": {"expect": "rational"},
        "23": {"expect": "file", "file": "co2_order23.txt"},
        "35": {"expect": "file", "file": "co2_order35.txt"},
    },
    "co1": {
        "7": {"expect": "file", "file": "co1_order7.txt"},
        "11": {"expect": "rational"},
        "13": {"expect": "rational"},
        "23": {"expect": "span", "lo": -29293, "hi": 29294, "note": "58588 pairs"},
        "55": {"expect": "file", "file": "co1_order55.txt", "needs_full_table": True},
        "65": {"expect": "file", "file": "co1_order65.txt", "needs_full_table": True},
    },
}
with open(f"{G}/solutions.json", "w") as fh:
    json.dump(solutions, fh, indent=2)
    fh.write("\n")

# rule-out manifest: method, rows (char id, l), expected (l, m1, mp, mq) rows,
# optional intermediate checks
ruleouts = {
    "co3": {
        "33": {"method": "chain"},
        "46": {
            "method": "st", "s": 2, "t": 23,
            "rows": [["chi23", 0], ["chi23", 1], ["chi23", 23],
                     ["chi2+chi5+chi8", 0], ["chi2+chi5+chi8", 23]],
            "expect_rows": [[0, 31570, -1210, 0], [1, 31680, -55, 0],
                            [23, 31680, 1210, 0], [0, 2068, 462, -22],
                            [23, 2026, -462, 22]],
            "intermediate": {"rows": [["chi23", 0], ["chi23", 1], ["chi23", 23]],
                             "survivors_s": [-22, 24]},
        },
        "55": {"method": "st", "s": 5, "t": 11,
               "rows": [["chi3", 0], ["chi3", 1], ["chi3", 11]],
               "expect_rows": [[0, 265, 120, 0], [1, 250, 3, 0], [11, 250, -30, 0]]},
        "69": {"method": "st", "s": 3, "t": 23,
               "rows": [["chi3+chi5+chi8+chi15+chi19_mod5", 0],
                        ["chi3+chi5+chi8+chi15+chi19_mod5", 23],
                        ["chi3+chi3+chi6_mod2", 23]],
               "expect_rows": [[0, 48189, 1100, 0], [23, 48114, -550, 0],
                               [23, 1966, -264, -22]]},
        "77": {"method": "st", "s": 7, "t": 11,
               "rows": [["chi3", 0], ["chi3", 11]],
               "expect_rows": [[0, 259, 60, 0], [11, 252, -10, 0]]},
        "115": {"method": "st", "s": 5, "t": 23,
                "rows": [["chi3", 0], ["chi3", 23]],
                "expect_rows": [[0, 265, 264, 0], [23, 250, -66, 0]]},
        "161": {"method": "st", "s": 7, "t": 23,
                "rows": [["chi2", 0], ["chi2", 23]],
                "expect_rows": [[0, 35, 264, 0], [23, 21, -44, 0]]},
        "253": {"method": "st", "s": 11, "t": 23,
                "rows": [["chi2", 0], ["chi2", 11], ["chi2", 23]],
                "expect_rows": [[0, 33, 220, 0], [11, 33, -10, 0], [23, 22, -22, 0]]},
    },
    "co2": {
        "21": {"method": "chain"},
        "22": {"method": "chain"},
        "33": {"method": "st", "s": 3, "t": 11,
               "rows": [["chi3", 0], ["chi3", 11]],
               "expect_rows": [[0, 273, 200, 0], [11, 243, -100, 0]]},
        "46": {
            "method": "st", "s": 2, "t": 23,
            "rows": [["chi2+chi3+chi5", 0], ["chi2+chi3+chi5", 2],
                     ["chi2+chi3+chi5", 23],
                     ["chi2+chi4+chi5", 0], ["chi2+chi4+chi5", 23]],
            "expect_rows": [[0, 2046, -22, 0], [2, 2046, 1, 0], [23, 2048, 22, 0],
                            [0, 2068, 462, -22], [23, 2026, -462, 22]],
        },
        "55": {"method": "st", "s": 5, "t": 11,
               "rows": [["chi3", 0], ["chi3", 5], ["chi3", 11]],
               "expect_rows": [[0, 265, 120, 0], [5, 265, -12, 0], [11, 250, -30, 0]]},
        "69": {"method": "st", "s": 3, "t": 23,
               "rows": [["chi3", 0], ["chi3", 23]],
               "expect_rows": [[0, 273, 440, 0], [23, 243, -220, 0]]},
        "77": {"method": "st", "s": 7, "t": 11,
               "rows": [["chi4", 0], ["chi4", 11]],
               "expect_rows": [[0, 287, 120, 0], [11, 273, -20, 0]]},
        "115": {"method": "st", "s": 5, "t": 23,
                "rows": [["chi3", 0], ["chi3", 23]],
                "expect_rows": [[0, 265, 264, 0], [23, 250, -66, 0]]},
        "161": {"method": "st", "s": 7, "t": 23,
                "rows": [["chi2", 0], ["chi2", 23]],
                "expect_rows": [[0, 35, 264, 0], [23, 21, -44, 0]]},
        "253": {"method": "st", "s": 11, "t": 23,
                "rows": [["chi2", 0], ["chi2", 11], ["chi2", 23]],
                "expect_rows": [[0, 33, 220, 0], [11, 33, -10, 0], [23, 22, -22, 0]]},
    },
    "co1": {
        "46": {"method": "insufficient-data",
               "note": "no order-2 class values are recoverable for Co1"},
        "69": {"method": "insufficient-data",
               "note": "no order-3 class values are recoverable for Co1"},
        "77": {"method": "chain"},
        "91": {"method": "st", "s": 7, "t": 13,
               "rows": [["chi3", 0], ["chi3", 13]],
               "expect_rows": [[0, 329, 360, 0], [13, 294, -60, 0]]},
        "115": {"method": "insufficient-data",
                "note": "no order-5 class values are recoverable for Co1"},
        "143": {"method": "st", "s": 11, "t": 13,
                "rows": [["chi3", 0], ["chi3", 13]],
                "expect_rows": [[0, 319, 240, 0], [13, 297, -24, 0]]},
        "161": {"method": "st", "s": 7, "t": 23,
                "rows": [["chi3", 0], ["chi3", 23]],
                "expect_rows": [[0, 329, 660, 0], [23, 294, -110, 0]]},
        "253": {"method": "st", "s": 11, "t": 23,
                "rows": [["chi3", 0], ["chi3", 11], ["chi3", 23]],
                "expect_rows": [[0, 319, 440, 0], [11, 319, -20, 0], [23, 297, -44, 0]]},
        "299": {"method": "st", "s": 13, "t": 23,
                "rows": [["chi2", 0], ["chi2", 23]],
                "expect_rows": [[0, 312, 792, 0], [23, 273, -66, 0]]},
    },
}
with open(f"{G}/ruleouts.json", "w") as fh:
    json.dump(ruleouts, fh, indent=2)
    fh.write("\n")

# replay plans: the published row selections per order (rows = [char id, l]);
# "chars"/"all_l" marks full-range systems over the named characters
replay = {
    "co3": {
        "2": [["chi2", 0], ["chi2", 1]],
        "3": [["chi2", 0], ["chi2", 1], ["chi3", 0], ["chi3", 1],
              ["chi3_mod2", 0], ["chi3_mod2", 1]],
        "5": [["chi2", 0], ["chi2", 1]],
        "7": [],
        "11": [["chi3_mod3", 1], ["chi3_mod3", 2]],
        "23": [["chi3_mod3", 1], ["chi3_mod3", 5]],
        "33": [["chi2", 0], ["chi2", 11], ["chi2", 1], ["chi2", 3],
               ["chi3", 0], ["chi3", 11], ["chi3", 1], ["chi3", 3],
               ["chi6", 0], ["chi6", 11], ["chi6", 1], ["chi6", 3]],
        "35": [["chi2", 0], ["chi2", 1], ["chi2", 5], ["chi2", 7],
               ["chi3", 0], ["chi3", 7], ["chi3_mod3", 0], ["chi3_mod3", 7]],
    },
    "co2": {
        "2": [["chi2", 1], ["chi2", 0], ["chi3", 0], ["chi3", 1]],
        "3": [["chi2", 0], ["chi2", 1]],
        "5": [["chi2", 0], ["chi2", 1]],
        "7": [],
        "11": [],
        "23": [["chi4_mod2", 1], ["chi9_mod3", 1], ["chi4_mod2", 5]],
        "21": [["chi2", 0], ["chi2", 1], ["chi2", 3], ["chi2", 7],
               ["chi3", 0], ["chi3", 1], ["chi3", 7], ["chi5", 1]],
        "22": {"chars": ["chi2", "chi3", "chi4", "chi5"], "all_l": True},
        "35": [["chi2", 0], ["chi2", 1], ["chi2", 5], ["chi2", 7],
               ["chi3", 0], ["chi3", 7], ["chi7_mod3", 0], ["chi7_mod3", 7]],
    },
    "co1": {
        "7": [["chi2", 0], ["chi2", 1]],
        "11": [],
        "13": [],
        "23": [["chi17", 1], ["chi17", 5]],
        "77": [["chi2", 11], ["chi3", 0], ["chi4", 0], ["chi4", 11],
               ["chi4", 1], ["chi4", 7], ["chi7", 0], ["chi15_mod13", 0]],
    },
}
with open("src/helpkit/data/replay.json", "w") as fh:
    json.dump(replay, fh, indent=2)
    fh.write("\n")

# recorded per-family value differences for the (5,7) search on Co3
st_differences = {
    "co3": [
        {"s": 5, "t": 7,
         "families": "ordinary plus 11- and 23-modular",
         "differences": [5, -5, 10, -10, 15, -15]},
        {"s": 5, "t": 7, "families": "3-modular",
         "differences": [5, -5, 10, -10, 15, 20]},
        {"s": 5, "t": 7, "families": "2-modular",
         "differences": [5, -5, 10, -10, -20]},
    ]
}
with open("src/helpkit/data/st_differences.json", "w") as fh:
    json.dump(st_differences, fh, indent=2)
    fh.write("\n")

print("golden data written")
