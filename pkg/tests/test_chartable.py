"""Table model: parsing, validation, orthogonality, power maps."""

import json

import pytest

from helpkit.chartable import (
    IncompleteTable,
    MissingPowerMap,
    TableSyntaxError,
    ValidationError,
    parse_table,
    power_class,
    serialize_table,
    validate_orthogonality,
)


def test_a5_parses_with_expected_shape(a5):
    assert [c.name for c in a5.classes] == ["1a", "2a", "3a", "5a", "5b"]
    assert len(a5.characters) == 5
    assert a5.group_order == 60
    assert a5.exponent == 30


def test_co3_snippet_shape(co3):
    assert len(co3.classes) == 42
    ids = {chi.id for chi in co3.characters}
    assert {"chi2", "chi3", "chi6", "chi23", "chi3_mod2", "chi3_mod3"} <= ids
    assert co3.character("chi2").degree == 23
    assert co3.character("chi3").degree == 253
    assert co3.character("chi6").degree == 896
    assert co3.character("chi3_mod2").degree == 230
    assert co3.character("chi3_mod3").degree == 126


def test_co2_co1_shapes(co2, co1):
    assert len(co2.classes) == 60
    assert len(co1.classes) == 101


def test_name_order_mismatch_rejected(a5):
    doc = json.loads(serialize_table(a5))
    doc["classes"][1]["order"] = 3  # class named 2a
    with pytest.raises(ValidationError, match="numeric prefix"):
        parse_table(json.dumps(doc))


def test_unknown_keys_rejected(a5):
    doc = json.loads(serialize_table(a5))
    doc["extra"] = 1
    with pytest.raises(ValidationError, match="unknown keys"):
        parse_table(json.dumps(doc))


def test_truncated_document_gives_position():
    text = serialize_table_text_prefix()
    with pytest.raises(TableSyntaxError) as err:
        parse_table(text)
    assert err.value.line is not None


def serialize_table_text_prefix():
    from helpkit.report import _data_text

    return _data_text("a5.json")[:200]


def test_identity_value_must_match_degree(a5):
    doc = json.loads(serialize_table(a5))
    doc["characters"][1]["values"]["1a"] = "4"
    with pytest.raises(ValidationError, match="identity"):
        parse_table(json.dumps(doc))


def test_brauer_values_must_be_p_regular(s3):
    doc = json.loads(serialize_table(s3))
    doc["characters"].append(
        {"id": "phi1", "kind": {"brauer": 2}, "degree": 1,
         "values": {"1a": "1", "2a": "1"}}
    )
    with pytest.raises(ValidationError, match="regular"):
        parse_table(json.dumps(doc))


def test_powermap_target_order_checked(s3):
    doc = json.loads(serialize_table(s3))
    doc["classes"][1]["powermap"]["2"] = "3a"
    with pytest.raises(ValidationError, match="order"):
        parse_table(json.dumps(doc))


def test_sizes_must_sum_to_group_order(s3):
    doc = json.loads(serialize_table(s3))
    doc["classes"][1]["size"] = 4
    with pytest.raises(ValidationError, match="sum"):
        parse_table(json.dumps(doc))


def test_round_trip_is_identity(tables):
    for t in tables.values():
        again = parse_table(serialize_table(t))
        assert serialize_table(again) == serialize_table(t)


def test_orthogonality_passes_on_full_tables(a5, s3):
    assert validate_orthogonality(a5).ok
    assert validate_orthogonality(s3).ok
    assert sum(chi.degree**2 for chi in a5.characters) == a5.group_order
    assert sum(chi.degree**2 for chi in s3.characters) == s3.group_order


def test_orthogonality_detects_a_perturbed_value(a5):
    doc = json.loads(serialize_table(a5))
    doc["characters"][3]["values"]["2a"] = "1"  # was 0
    broken = parse_table(json.dumps(doc))
    report = validate_orthogonality(broken)
    assert not report.ok


def test_orthogonality_needs_complete_table(co3):
    with pytest.raises(IncompleteTable):
        validate_orthogonality(co3)


def test_power_class_examples(a5, co3):
    assert power_class(a5, "5a", 5) == "1a"
    assert power_class(a5, "5a", 1) == "5a"
    assert power_class(a5, "5a", 2) == "5b"
    assert power_class(a5, "5a", 4) == "5a"
    assert power_class(co3, "11a", 2) == "11b"
    assert power_class(co3, "23a", 5) == "23b"
    with pytest.raises(MissingPowerMap):
        power_class(co3, "6a", 3)


def test_power_class_is_multiplicative(a5, s3):
    for t in (a5, s3):
        for c in t.classes:
            for d1 in range(1, 7):
                for d2 in range(1, 7):
                    lhs = power_class(t, c.name, d1 * d2)
                    rhs = power_class(t, power_class(t, c.name, d1), d2)
                    assert lhs == rhs
