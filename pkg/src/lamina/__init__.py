"""Directional Poisson's ratio analysis and auxetic optimization of
orthotropic composite laminates, built on polar tensor invariants.

The package answers, for a given unidirectional ply: at which directions a
laminate made of it can have a negative Poisson's ratio, which stack gives
the lowest ratio, and which stack gives the widest negative-ratio angular
zone. A command line (``lamina``) reproduces the reference tables and
renders directional diagrams and domain maps.
"""

__version__ = "0.1.0"

from .database import (
    MaterialRecord,
    ValidationIssue,
    bundled_database_path,
    find_material,
    load_materials,
    validate_record,
)
from .errors import (
    DataError,
    DomainError,
    InvalidMaterialError,
    LaminaError,
    PoleError,
    UniformSignError,
)
from .laminate import (
    AuxeticZone,
    LaminationPoint,
    StackingSequence,
    angle_ply_point,
    delta_from_point,
    in_domain,
    lamination_parameters,
    nu12_laminate,
    nu12_numerator,
    zone_from_threshold,
    zone_threshold,
    zone_threshold_on_boundary,
)
from .material import (
    DimensionlessMaterial,
    EngineeringConstants,
    PolarParameters,
    ReducedStiffness,
    compliance_polar,
    determinant_delta,
    dimensionless,
    nu12_from_compliance,
    nu12_ply,
    polar_from_stiffness,
    reduce_stiffness,
)
from .optimize import (
    FeasibilityResult,
    GridSpec,
    MaxZoneResult,
    MinNuResult,
    auxetic_margin,
    brute_force_search,
    feasibility,
    max_zone,
    min_nu12_at_point,
    min_nu12_global,
)

__all__ = [name for name in dir() if not name.startswith("_")]
