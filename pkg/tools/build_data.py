# One-off generator for the bundled table JSON files (run from repo root).
import json
import sys

sys.path.insert(0, "src")  # run from the repository root
from helpkit.chartable import parse_table, serialize_table

ETA11 = "E(11)+E(11)^3+E(11)^4+E(11)^5+E(11)^9"
ETA11C = "E(11)^2+E(11)^6+E(11)^7+E(11)^8+E(11)^10"
ETA23 = ("E(23)+E(23)^2+E(23)^3+E(23)^4+E(23)^6+E(23)^8+E(23)^9+E(23)^12"
         "+E(23)^13+E(23)^16+E(23)^18")
ETA23C = ("E(23)^5+E(23)^7+E(23)^10+E(23)^11+E(23)^14+E(23)^15+E(23)^17"
          "+E(23)^19+E(23)^20+E(23)^21+E(23)^22")


def cls(name, order, size=None, pm=None):
    d = {"name": name, "order": order}
    if size is not None:
        d["size"] = size
    if pm:
        d["powermap"] = {str(p): t for p, t in pm.items()}
    return d


def expand(spec):
    """spec: list of (order, count) -> class dicts named 1a, 2a, 2b, ..."""
    out = []
    for order, count in spec:
        for i in range(count):
            out.append(cls(f"{order}{chr(ord('a') + i)}", order))
    return out


def fixed_pm(name, order, primes):
    # class fixed by every sigma_p, killed by its own prime
    return {p: ("1a" if order % p == 0 else name) for p in primes}


# ---------------------------------------------------------------- A5
a5 = {
    "group": "A5",
    "order_factored": [[2, 2], [3, 1], [5, 1]],
    "exponent_factored": [[2, 1], [3, 1], [5, 1]],
    "classes": [
        cls("1a", 1, 1, {2: "1a", 3: "1a", 5: "1a"}),
        cls("2a", 2, 15, {2: "1a", 3: "2a", 5: "2a"}),
        cls("3a", 3, 20, {2: "3a", 3: "1a", 5: "3a"}),
        cls("5a", 5, 12, {2: "5b", 3: "5b", 5: "1a"}),
        cls("5b", 5, 12, {2: "5a", 3: "5a", 5: "1a"}),
    ],
    "characters": [
        {"id": "chi1", "kind": "ordinary", "degree": 1,
         "values": {"1a": "1", "2a": "1", "3a": "1", "5a": "1", "5b": "1"}},
        {"id": "chi2", "kind": "ordinary", "degree": 3,
         "values": {"1a": "3", "2a": "-1", "3a": "0",
                    "5a": "-E(5)^2-E(5)^3", "5b": "-E(5)-E(5)^4"}},
        {"id": "chi3", "kind": "ordinary", "degree": 3,
         "values": {"1a": "3", "2a": "-1", "3a": "0",
                    "5a": "-E(5)-E(5)^4", "5b": "-E(5)^2-E(5)^3"}},
        {"id": "chi4", "kind": "ordinary", "degree": 4,
         "values": {"1a": "4", "2a": "0", "3a": "1", "5a": "-1", "5b": "-1"}},
        {"id": "chi5", "kind": "ordinary", "degree": 5,
         "values": {"1a": "5", "2a": "1", "3a": "-1", "5a": "0", "5b": "0"}},
    ],
    "notes": "Full ordinary character table of the alternating group A5.",
}

# ---------------------------------------------------------------- S3
s3 = {
    "group": "S3",
    "order_factored": [[2, 1], [3, 1]],
    "exponent_factored": [[2, 1], [3, 1]],
    "classes": [
        cls("1a", 1, 1, {2: "1a", 3: "1a"}),
        cls("2a", 2, 3, {2: "1a", 3: "2a"}),
        cls("3a", 3, 2, {2: "3a", 3: "1a"}),
    ],
    "characters": [
        {"id": "chi1", "kind": "ordinary", "degree": 1,
         "values": {"1a": "1", "2a": "1", "3a": "1"}},
        {"id": "chi2", "kind": "ordinary", "degree": 1,
         "values": {"1a": "1", "2a": "-1", "3a": "1"}},
        {"id": "chi3", "kind": "ordinary", "degree": 2,
         "values": {"1a": "2", "2a": "0", "3a": "-1"}},
    ],
    "notes": "Full ordinary character table of the symmetric group S3.",
}

# ---------------------------------------------------------------- Co3
P6 = [2, 3, 5, 7, 11, 23]
co3_classes = []
co3_spec = [(1, 1), (2, 2), (3, 3), (4, 2), (5, 2), (6, 5), (7, 1), (8, 3),
            (9, 2), (10, 2), (11, 2), (12, 3), (14, 1), (15, 2), (18, 1),
            (20, 2), (21, 1), (22, 2), (23, 2), (24, 2), (30, 1)]
for d in expand(co3_spec):
    name, order = d["name"], d["order"]
    if order == 1:
        d["powermap"] = {str(p): "1a" for p in P6}
    elif order in (2, 3, 5) or name == "7a":
        d["powermap"] = {str(p): t for p, t in fixed_pm(name, order, P6).items()}
    elif name in ("11a", "11b"):
        other = "11b" if name == "11a" else "11a"
        d["powermap"] = {"2": other, "3": name, "5": name, "7": other,
                         "11": "1a", "23": name}
    elif name in ("23a", "23b"):
        other = "23b" if name == "23a" else "23a"
        d["powermap"] = {"2": name, "3": name, "5": other, "7": other,
                         "11": other, "23": "1a"}
    co3_classes.append(d)

co3 = {
    "group": "Co3",
    "order_factored": [[2, 10], [3, 7], [5, 3], [7, 1], [11, 1], [23, 1]],
    "exponent_factored": [[2, 3], [3, 2], [5, 1], [7, 1], [11, 1], [23, 1]],
    "classes": co3_classes,
    "characters": [
        {"id": "chi2", "kind": "ordinary", "degree": 23,
         "values": {"1a": "23", "2a": "7", "2b": "-1", "3a": "-4", "3b": "5",
                    "3c": "-1", "5a": "-2", "5b": "3", "7a": "2",
                    "11a": "1", "11b": "1", "23a": "0", "23b": "0"}},
        {"id": "chi3", "kind": "ordinary", "degree": 253,
         "values": {"1a": "253", "3a": "10", "3b": "10", "3c": "1",
                    "5a": "3", "5b": "3", "7a": "1",
                    "11a": "0", "11b": "0", "23a": "0", "23b": "0"}},
        {"id": "chi6", "kind": "ordinary", "degree": 896,
         "values": {"1a": "896", "3a": "32", "3b": "-4", "3c": "-7",
                    "11a": ETA11, "11b": ETA11C}},
        {"id": "chi23", "kind": "ordinary", "degree": 31625,
         "values": {"1a": "31625", "2a": "-55", "2b": "-55",
                    "23a": "0", "23b": "0"}},
        {"id": "chi2+chi5+chi8", "kind": "ordinary", "degree": 2069,
         "values": {"1a": "2069", "2a": "21", "2b": "21",
                    "23a": "-1", "23b": "-1"}},
        {"id": "chi3_mod2", "kind": {"brauer": 2}, "degree": 230,
         "values": {"1a": "230", "3a": "14", "3b": "5", "3c": "2"}},
        {"id": "chi3_mod3", "kind": {"brauer": 3}, "degree": 126,
         "values": {"1a": "126", "5a": "1", "5b": "1", "7a": "0",
                    "11a": ETA11, "11b": ETA11C,
                    "23a": ETA23, "23b": ETA23C}},
        {"id": "chi3+chi5+chi8+chi15+chi19_mod5", "kind": {"brauer": 5},
         "degree": 48139,
         "values": {"1a": "48139", "3a": "25", "3b": "25", "3c": "25",
                    "23a": "0", "23b": "0"}},
        {"id": "chi3+chi3+chi6_mod2", "kind": {"brauer": 2}, "degree": 1956,
         "values": {"1a": "1956", "3a": "12", "3b": "12", "3c": "12",
                    "23a": "1", "23b": "1"}},
    ],
    "notes": "Partial table of Co3: the character values pinned by the bundled "
             "constraint goldens (see data/provenance.md).",
}

# ---------------------------------------------------------------- Co2
co2_classes = []
co2_spec = [(1, 1), (2, 3), (3, 2), (4, 7), (5, 2), (6, 7), (7, 1), (8, 6),
            (9, 1), (10, 3), (11, 1), (12, 8), (14, 3), (15, 3), (16, 2),
            (18, 1), (20, 2), (23, 2), (24, 2), (28, 1), (30, 2)]
for d in expand(co2_spec):
    name, order = d["name"], d["order"]
    if order == 1:
        d["powermap"] = {str(p): "1a" for p in P6}
    elif order in (2, 3, 5) or name in ("7a", "11a"):
        d["powermap"] = {str(p): t for p, t in fixed_pm(name, order, P6).items()}
    elif name in ("23a", "23b"):
        other = "23b" if name == "23a" else "23a"
        d["powermap"] = {"2": name, "3": name, "5": other, "7": other,
                         "11": other, "23": "1a"}
    co2_classes.append(d)

co2 = {
    "group": "Co2",
    "order_factored": [[2, 18], [3, 6], [5, 3], [7, 1], [11, 1], [23, 1]],
    "exponent_factored": [[2, 4], [3, 2], [5, 1], [7, 1], [11, 1], [23, 1]],
    "classes": co2_classes,
    "characters": [
        {"id": "chi2", "kind": "ordinary", "degree": 23,
         "values": {"1a": "23", "2a": "-9", "2b": "7", "2c": "-1",
                    "3a": "-4", "3b": "5", "5a": "-2", "5b": "3", "7a": "2",
                    "11a": "1", "23a": "0", "23b": "0"}},
        {"id": "chi3", "kind": "ordinary", "degree": 253,
         "values": {"1a": "253", "2a": "29", "2b": "13", "2c": "-11",
                    "3a": "10", "3b": "10", "5a": "3", "5b": "3", "7a": "1",
                    "11a": "0", "23a": "0", "23b": "0"}},
        {"id": "chi4", "kind": "ordinary", "degree": 275,
         "values": {"1a": "275", "2a": "51", "2b": "35", "2c": "11",
                    "7a": "2", "11a": "0"}},
        {"id": "chi5", "kind": "ordinary", "degree": 1771,
         "values": {"1a": "1771", "2a": "-21", "2b": "-21", "2c": "11",
                    "3a": "-11", "3b": "16", "7a": "0", "11a": "0"}},
        {"id": "chi2+chi3+chi5", "kind": "ordinary", "degree": 2047,
         "values": {"1a": "2047", "2a": "-1", "2b": "-1", "2c": "-1",
                    "23a": "0", "23b": "0"}},
        {"id": "chi2+chi4+chi5", "kind": "ordinary", "degree": 2069,
         "values": {"1a": "2069", "2a": "21", "2b": "21", "2c": "21",
                    "23a": "-1", "23b": "-1"}},
        {"id": "chi4_mod2", "kind": {"brauer": 2}, "degree": 748,
         "values": {"1a": "748", "23a": "1+" + ETA23C, "23b": "1+" + ETA23}},
        {"id": "chi9_mod3", "kind": {"brauer": 3}, "degree": 9372,
         "values": {"1a": "9372", "23a": ETA23, "23b": ETA23C}},
        {"id": "chi7_mod3", "kind": {"brauer": 3}, "degree": 2254,
         "values": {"1a": "2254", "5a": "4", "5b": "4", "7a": "0"}},
    ],
    "notes": "Partial table of Co2: the character values pinned by the bundled "
             "constraint goldens (see data/provenance.md).",
}

# ---------------------------------------------------------------- Co1
P7 = [2, 3, 5, 7, 11, 13, 23]
co1_classes = []
co1_spec = [(1, 1), (2, 3), (3, 4), (4, 7), (5, 3), (6, 9), (7, 2), (8, 7),
            (9, 4), (10, 5), (11, 1), (12, 9), (13, 1), (14, 2), (15, 5),
            (16, 4), (18, 3), (20, 4), (21, 3), (22, 1), (23, 2), (24, 5),
            (26, 1), (28, 2), (30, 3), (33, 1), (35, 1), (36, 3), (39, 2),
            (40, 1), (42, 1), (60, 1)]
for d in expand(co1_spec):
    name, order = d["name"], d["order"]
    if order == 1:
        d["powermap"] = {str(p): "1a" for p in P7}
    elif name in ("7a", "7b"):
        d["powermap"] = {str(p): ("1a" if p == 7 else name) for p in P7}
    elif name in ("11a", "13a"):
        d["powermap"] = {str(p): ("1a" if order % p == 0 else name) for p in P7}
    elif name in ("23a", "23b"):
        other = "23b" if name == "23a" else "23a"
        d["powermap"] = {"2": name, "3": name, "5": other, "7": other,
                         "11": other, "13": name, "23": "1a"}
    elif order in (2, 3, 5):
        d["powermap"] = {str(order): "1a"}
    co1_classes.append(d)

co1 = {
    "group": "Co1",
    "order_factored": [[2, 21], [3, 9], [5, 4], [7, 2], [11, 1], [13, 1], [23, 1]],
    "exponent_factored": [[2, 4], [3, 2], [5, 1], [7, 1], [11, 1], [13, 1], [23, 1]],
    "classes": co1_classes,
    "characters": [
        {"id": "chi2", "kind": "ordinary", "degree": 276,
         "values": {"1a": "276", "7a": "10", "7b": "3", "11a": "1",
                    "13a": "3", "23a": "0", "23b": "0"}},
        {"id": "chi3", "kind": "ordinary", "degree": 299,
         "values": {"1a": "299", "7a": "5", "7b": "5", "11a": "2",
                    "13a": "0", "23a": "0", "23b": "0"}},
        {"id": "chi4", "kind": "ordinary", "degree": 1771,
         "values": {"1a": "1771", "7a": "14", "7b": "0", "11a": "0"}},
        {"id": "chi7", "kind": "ordinary", "degree": 27300,
         "values": {"1a": "27300", "7a": "14", "7b": "0", "11a": "-2"}},
        {"id": "chi15_mod13", "kind": {"brauer": 13}, "degree": 474145,
         "values": {"1a": "474145", "7a": "-7", "7b": "0", "11a": "1"}},
        {"id": "chi17", "kind": "ordinary", "degree": 673750,
         "values": {"1a": "673750", "23a": ETA23, "23b": ETA23C}},
    ],
    "notes": "Partial table of Co1: the character values pinned by the bundled "
             "constraint goldens (see data/provenance.md). 13a is the unique "
             "class of order 13; sigma_13 check: 2-regular data only.",
}

for name, doc in [("a5", a5), ("s3", s3), ("co1", co1), ("co2", co2), ("co3", co3)]:
    text = json.dumps(doc, indent=2) + "\n"
    table = parse_table(text)  # round-trip through the validator
    canonical = serialize_table(table)
    # keep the notes key (serialize_table drops it); re-insert for the file
    doc2 = json.loads(canonical)
    if "notes" in doc:
        doc2["notes"] = doc["notes"]
    out = json.dumps(doc2, indent=2) + "\n"
    parse_table(out)
    with open(f"src/helpkit/data/{name}.json", "w") as fh:
        fh.write(out)
    print(name, "ok:", len(table.classes), "classes,", len(table.characters), "characters")
