"""Material database: flat-file records, the bundled corpus, validation.

A database is a UTF-8 CSV with header ``name,E1,E2,G12,nu12`` (moduli in
GPa) or a JSON array of objects with the same field names. Records may carry
the optional precomputed columns ``T0,T1,R0,R1`` (polar moduli, GPa),
``tau0,tau1,rho,K`` (dimensionless ratios) and ``provenance``.

Precomputed fields, when present, are the record's declared anisotropy
description and take precedence in analysis; validation checks each stored
layer against the layer it derives from (engineering constants -> polar
moduli -> ratios).
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import DataError, InvalidMaterialError
from .material import (
    DimensionlessMaterial,
    EngineeringConstants,
    PolarParameters,
    dimensionless,
    polar_from_stiffness,
    reduce_stiffness,
)

_REQUIRED = ("name", "E1", "E2", "G12", "nu12")
_POLAR = ("T0", "T1", "R0", "R1")
_RATIOS = ("tau0", "tau1", "rho")


@dataclass(frozen=True)
class MaterialRecord:
    """One database row: engineering constants plus optional polar data."""

    constants: EngineeringConstants
    polar: PolarParameters | None = None
    ratios: DimensionlessMaterial | None = None
    provenance: str = ""

    @property
    def name(self) -> str:
        return self.constants.name

    def computed_polar(self) -> PolarParameters:
        """Polar invariants recomputed from the engineering constants."""
        return polar_from_stiffness(reduce_stiffness(self.constants))

    def analysis_material(self) -> DimensionlessMaterial:
        """Dimensionless parameters used by the analysis commands.

        Stored ratios win, then ratios of the stored polar moduli, then full
        recomputation from the engineering constants.
        """
        if self.ratios is not None:
            return self.ratios
        if self.polar is not None:
            return dimensionless(self.polar)
        return dimensionless(self.computed_polar())


@dataclass(frozen=True)
class ValidationIssue:
    """One stored-versus-recomputed deviation beyond tolerance."""

    material: str
    field: str
    stored: float
    computed: float
    deviation: float
    tolerance: float

    def __str__(self) -> str:
        return (
            f"{self.material}: {self.field} stored {self.stored:g} vs "
            f"recomputed {self.computed:g} (deviation {self.deviation:.4g} "
            f"> {self.tolerance:g})"
        )


def _round_to_tol(value: float, tol: float) -> float:
    """Round a recomputed value to the decimal resolution of the tolerance.

    Stored columns are tabulated (rounded) data, so recomputed values are
    compared at the same resolution before applying the tolerance.
    """
    decimals = 0
    while tol < 0.5 and decimals < 12:
        tol *= 10.0
        decimals += 1
    return round(value, decimals)


def _beyond(deviation: float, tol: float, reference: float) -> bool:
    """Tolerance check immune to binary representation of decimal ticks."""
    return deviation > tol + 1e-9 * max(1.0, abs(reference))


def validate_record(
    record: MaterialRecord,
    tol_modulus: float = 0.01,
    tol_ratio: float = 0.001,
) -> list[ValidationIssue]:
    """Check stored precomputed fields against recomputation.

    Stored polar moduli are compared with the engineering-constants chain,
    stored ratios with the stored moduli (or with the full chain when no
    moduli are stored). Returns the list of deviations beyond tolerance.
    """
    issues = []
    computed = record.computed_polar()
    if record.polar is not None:
        pairs = zip(
            _POLAR,
            (computed.t0, computed.t1, computed.r0, computed.r1),
            (record.polar.t0, record.polar.t1, record.polar.r0, record.polar.r1),
        )
        for field, calc, stored in pairs:
            dev = abs(_round_to_tol(calc, tol_modulus) - stored)
            if _beyond(dev, tol_modulus, stored):
                issues.append(
                    ValidationIssue(record.name, field, stored, calc, dev, tol_modulus)
                )
    if record.ratios is not None:
        parent = dimensionless(record.polar) if record.polar is not None else dimensionless(computed)
        pairs = zip(
            _RATIOS,
            (parent.tau0, parent.tau1, parent.rho),
            (record.ratios.tau0, record.ratios.tau1, record.ratios.rho),
        )
        for field, calc, stored in pairs:
            dev = abs(_round_to_tol(calc, tol_ratio) - stored)
            if _beyond(dev, tol_ratio, stored):
                issues.append(
                    ValidationIssue(record.name, field, stored, calc, dev, tol_ratio)
                )
        if record.ratios.k != parent.k:
            issues.append(
                ValidationIssue(record.name, "K", record.ratios.k, parent.k, 1.0, 0.0)
            )
    return issues


def _record_from_fields(fields: dict, where: str) -> MaterialRecord:
    try:
        constants = EngineeringConstants(
            name=str(fields["name"]).strip(),
            e1=float(fields["E1"]),
            e2=float(fields["E2"]),
            g12=float(fields["G12"]),
            nu12=float(fields["nu12"]),
        )
    except (KeyError, TypeError, ValueError, InvalidMaterialError) as exc:
        raise DataError(f"{where}: {exc}") from exc

    def optional_block(names) -> tuple[float, ...] | None:
        raw = [fields.get(n) for n in names]
        present = [v not in (None, "") for v in raw]
        if not any(present):
            return None
        if not all(present):
            raise DataError(f"{where}: incomplete optional columns {names}")
        try:
            return tuple(float(v) for v in raw)
        except (TypeError, ValueError) as exc:
            raise DataError(f"{where}: {exc}") from exc

    polar = None
    values = optional_block(_POLAR)
    if values is not None:
        try:
            polar = PolarParameters(*values)
        except InvalidMaterialError as exc:
            raise DataError(f"{where}: {exc}") from exc
    ratios = None
    values = optional_block(_RATIOS)
    if values is not None:
        k_raw = fields.get("K")
        try:
            ratios = DimensionlessMaterial(
                *values, k=int(k_raw) if k_raw not in (None, "") else 0
            )
        except (ValueError, InvalidMaterialError) as exc:
            raise DataError(f"{where}: {exc}") from exc
    return MaterialRecord(
        constants=constants,
        polar=polar,
        ratios=ratios,
        provenance=str(fields.get("provenance") or "").strip(),
    )


def load_materials(path: str | Path) -> list[MaterialRecord]:
    """Load a CSV or JSON material database; raises DataError on bad rows."""
    path = Path(path)
    if not path.exists():
        raise DataError(f"database not found: {path}")
    records: list[MaterialRecord] = []
    problems: list[str] = []

    def consume(fields, where):
        try:
            records.append(_record_from_fields(fields, where))
        except DataError as exc:
            problems.append(str(exc))

    if path.suffix.lower() == ".json":
        try:
            rows = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise DataError(f"{path}: invalid JSON ({exc})") from exc
        if not isinstance(rows, list):
            raise DataError(f"{path}: expected a JSON array of records")
        for i, row in enumerate(rows):
            consume(row, f"{path}: record {i + 1}")
    else:
        with path.open(newline="", encoding="utf-8") as handle:
            reader = csv.DictReader(handle)
            if reader.fieldnames is None or not set(_REQUIRED) <= set(reader.fieldnames):
                raise DataError(
                    f"{path}: header must contain {','.join(_REQUIRED)}"
                )
            for row in reader:
                consume(row, f"{path}: line {reader.line_num}")
    if problems:
        raise DataError("; ".join(problems))
    if not records:
        raise DataError(f"{path}: no materials")
    return records


def bundled_database_path() -> Path:
    """Filesystem path of the bundled unidirectional-ply database."""
    return Path(resources.files("lamina") / "data" / "materials.csv")


def find_material(records: list[MaterialRecord], key: str) -> MaterialRecord:
    """Look up a record by 1-based index or case-insensitive name."""
    key = key.strip()
    if key.isdigit():
        idx = int(key)
        if 1 <= idx <= len(records):
            return records[idx - 1]
        raise KeyError(f"material index {idx} out of range 1..{len(records)}")
    folded = key.casefold()
    for rec in records:
        if rec.name.casefold() == folded:
            return rec
    matches = [rec for rec in records if folded in rec.name.casefold()]
    if len(matches) == 1:
        return matches[0]
    if matches:
        names = ", ".join(rec.name for rec in matches)
        raise KeyError(f"ambiguous material {key!r}: matches {names}")
    raise KeyError(f"unknown material {key!r}")
