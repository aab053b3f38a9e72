"""Database loading, lookup and validation tests."""

import json

import pytest

from lamina import (
    DataError,
    bundled_database_path,
    dimensionless,
    find_material,
    load_materials,
    validate_record,
)
from lamina.database import MaterialRecord
from lamina.material import DimensionlessMaterial, EngineeringConstants


class TestBundled:
    def test_loads_fifteen_in_order(self, records):
        assert len(records) == 15
        assert records[0].name == "Pine wood"
        assert records[1].name == "Carbon-epoxy T300/5208"
        assert records[-1].name == "Carbon-epoxy 3 MXP251S"

    def test_every_record_carries_polar_data(self, records):
        for rec in records:
            assert rec.polar is not None
            assert rec.ratios is not None
            assert rec.provenance

    def test_all_records_validate(self, records):
        for rec in records:
            assert validate_record(rec) == []

    def test_ratio_columns_are_half_tick_consistent(self, records):
        for rec in records:
            parent = dimensionless(rec.polar)
            assert abs(parent.tau0 - rec.ratios.tau0) <= 0.5e-4 + 1e-12
            assert abs(parent.tau1 - rec.ratios.tau1) <= 0.5e-4 + 1e-12
            assert abs(parent.rho - rec.ratios.rho) <= 0.5e-4 + 1e-12

    def test_analysis_material_prefers_stored_ratios(self, records):
        rec = records[1]
        assert rec.analysis_material() == rec.ratios
        bare = MaterialRecord(constants=rec.constants)
        recomputed = bare.analysis_material()
        assert recomputed.tau0 == pytest.approx(rec.ratios.tau0, abs=2e-3)


class TestValidation:
    def test_detects_wrong_stored_ratio(self, records):
        rec = records[1]
        tampered = MaterialRecord(
            constants=rec.constants,
            polar=rec.polar,
            ratios=DimensionlessMaterial(
                rec.ratios.tau0 + 0.02, rec.ratios.tau1, rec.ratios.rho
            ),
        )
        issues = validate_record(tampered)
        assert [i.field for i in issues] == ["tau0"]

    def test_detects_wrong_stored_modulus(self, records):
        rec = records[1]
        bad = type(rec.polar)(
            rec.polar.t0 + 0.5, rec.polar.t1, rec.polar.r0, rec.polar.r1
        )
        issues = validate_record(
            MaterialRecord(constants=rec.constants, polar=bad)
        )
        assert [i.field for i in issues] == ["T0"]
        assert "T0" in str(issues[0])

    def test_tolerance_override(self, records):
        rec = records[0]
        assert validate_record(rec, tol_modulus=1e-6) != []


class TestLoading:
    def test_missing_file(self, tmp_path):
        with pytest.raises(DataError, match="not found"):
            load_materials(tmp_path / "nope.csv")

    def test_empty_file(self, tmp_path):
        path = tmp_path / "empty.csv"
        path.write_text("name,E1,E2,G12,nu12\n")
        with pytest.raises(DataError, match="no materials"):
            load_materials(path)

    def test_missing_header(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("name,E1\nfoo,1\n")
        with pytest.raises(DataError, match="header"):
            load_materials(path)

    def test_malformed_row_reports_line(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("name,E1,E2,G12,nu12\nok,10,1,1,0.2\nbad,10,xx,1,0.2\n")
        with pytest.raises(DataError, match="line 3"):
            load_materials(path)

    def test_nonphysical_row_flagged(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("name,E1,E2,G12,nu12\nbad,10,10,3,1.2\n")
        with pytest.raises(DataError, match="nu12"):
            load_materials(path)

    def test_incomplete_optional_columns(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text(
            "name,E1,E2,G12,nu12,T0,T1,R0,R1\nfoo,10,1,1,0.2,1.5,1.2,,\n"
        )
        with pytest.raises(DataError, match="incomplete"):
            load_materials(path)

    def test_json_round_trip(self, tmp_path, records):
        payload = []
        for rec in records:
            ec = rec.constants
            payload.append(
                {
                    "name": ec.name,
                    "E1": ec.e1,
                    "E2": ec.e2,
                    "G12": ec.g12,
                    "nu12": ec.nu12,
                    "T0": rec.polar.t0,
                    "T1": rec.polar.t1,
                    "R0": rec.polar.r0,
                    "R1": rec.polar.r1,
                    "tau0": rec.ratios.tau0,
                    "tau1": rec.ratios.tau1,
                    "rho": rec.ratios.rho,
                    "K": rec.ratios.k,
                    "provenance": rec.provenance,
                }
            )
        path = tmp_path / "db.json"
        path.write_text(json.dumps(payload))
        assert load_materials(path) == records

    def test_bad_json(self, tmp_path):
        path = tmp_path / "db.json"
        path.write_text("{not json")
        with pytest.raises(DataError, match="JSON"):
            load_materials(path)

    def test_json_must_be_array(self, tmp_path):
        path = tmp_path / "db.json"
        path.write_text('{"name": "x"}')
        with pytest.raises(DataError, match="array"):
            load_materials(path)


class TestLookup:
    def test_by_index(self, records):
        assert find_material(records, "2") is records[1]
        assert find_material(records, "15") is records[14]

    def test_by_name_case_insensitive(self, records):
        assert find_material(records, "pine WOOD") is records[0]

    def test_by_unique_substring(self, records):
        assert find_material(records, "GY70") is records[9]

    def test_ambiguous(self, records):
        with pytest.raises(KeyError, match="ambiguous"):
            find_material(records, "Kevlar")

    def test_unknown(self, records):
        with pytest.raises(KeyError, match="unknown"):
            find_material(records, "unobtainium")

    def test_index_out_of_range(self, records):
        with pytest.raises(KeyError, match="out of range"):
            find_material(records, "16")

    def test_bundled_path_exists(self):
        assert bundled_database_path().exists()
