"""Command line front end.

Subcommands: materials, nu12, min-nu, max-zone, xi-domain, plot. The
database defaults to the bundled unidirectional-ply corpus and can be
overridden with --db or the LAMINA_DB environment variable.

Output conventions (also in --help): ratios, lamination parameters and
Poisson values print with 4 decimals, optimum angles with 0.1 degree;
direction sweeps and contour coordinates keep full grid precision so that
downstream consumers can re-evaluate them. Identical inputs produce byte
identical outputs; JSON reports stamp their generation time from
SOURCE_DATE_EPOCH when set.

Exit codes: 0 success, 2 data error (unreadable or invalid database,
non-physical material), 3 usage or domain error (bad arguments, unknown
material, point outside the lamination domain, schema mismatch).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from . import __version__
from .database import (
    MaterialRecord,
    bundled_database_path,
    find_material,
    load_materials,
    validate_record,
)
from .errors import DataError, DomainError, InvalidMaterialError, LaminaError, PoleError
from .laminate import LaminationPoint, angle_ply_point, in_domain, nu12_laminate
from .optimize import feasibility, max_zone, min_nu12_global
from .plots import domain_map_figure, polar_nu12_figure, save_svg

EXIT_OK = 0
EXIT_DATA = 2
EXIT_USAGE = 3

_EPILOG = """\
formatting: ratios and Poisson values use 4 decimals, optimum angles 0.1 deg;
sweep and contour columns keep grid precision. identical inputs give byte
identical outputs (JSON timestamps honor SOURCE_DATE_EPOCH).
exit codes: 0 success, 2 data error, 3 usage or domain error.
"""


class _Parser(argparse.ArgumentParser):
    """argparse with the usage-error exit code of this tool's contract."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class RunReport:
    """Reproducible envelope for JSON results of one command invocation."""

    command: tuple[str, ...]
    db: str
    version: str
    generated: str
    results: tuple[dict, ...]

    def to_json(self) -> str:
        payload = {
            "command": list(self.command),
            "db": self.db,
            "version": self.version,
            "generated": self.generated,
            "results": list(self.results),
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        data = json.loads(text)
        return cls(
            command=tuple(data["command"]),
            db=data["db"],
            version=data["version"],
            generated=data["generated"],
            results=tuple(data["results"]),
        )


def _timestamp() -> str:
    epoch = os.environ.get("SOURCE_DATE_EPOCH")
    if epoch is not None:
        moment = datetime.fromtimestamp(int(epoch), tz=timezone.utc)
    else:
        moment = datetime.now(tz=timezone.utc)
    return moment.isoformat(timespec="seconds")


def _fmt(x: float) -> str:
    return "" if math.isnan(x) else f"{x:.4f}"


def _fmt_deg(rad: float) -> str:
    return "" if math.isnan(rad) else f"{math.degrees(rad):.1f}"


def _emit_csv(header, rows, comments=()) -> str:
    buf = io.StringIO()
    for line in comments:
        buf.write(f"# {line}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _emit_report(args, results: list[dict]) -> str:
    report = RunReport(
        command=tuple(args.command_echo),
        db=str(args.db),
        version=__version__,
        generated=_timestamp(),
        results=tuple(results),
    )
    return report.to_json()


def _load_db(args) -> list[MaterialRecord]:
    return load_materials(args.db)


def _select(args, records: list[MaterialRecord]) -> list[MaterialRecord]:
    if getattr(args, "all", False):
        return records
    if not args.material:
        raise DomainError("a material id is required unless --all is given")
    try:
        return [find_material(records, args.material)]
    except KeyError as exc:
        raise DomainError(str(exc.args[0])) from exc


def _tolerances(args) -> dict[str, float]:
    tol = {"modulus": 0.01, "ratio": 0.001}
    for item in args.tolerance or ():
        key, _, value = item.partition("=")
        if key not in tol or not value:
            raise DomainError(
                f"bad --tolerance {item!r}: expected modulus=VALUE or ratio=VALUE"
            )
        try:
            tol[key] = float(value)
        except ValueError as exc:
            raise DomainError(f"bad --tolerance value {value!r}") from exc
    return tol


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_materials(args) -> int:
    if args.action == "show" and not args.material:
        raise DomainError("materials show needs a material id")
    records = _load_db(args)

    if args.action == "list":
        if args.format == "json":
            rows = [_record_dict(rec) for rec in records]
            sys.stdout.write(_emit_report(args, rows))
        else:
            sys.stdout.write(
                f"{'id':>3}  {'name':32}  {'E1':>7}  {'E2':>6}  {'G12':>6}  "
                f"{'nu12':>5}  provenance\n"
            )
            for i, rec in enumerate(records, start=1):
                ec = rec.constants
                sys.stdout.write(
                    f"{i:>3}  {ec.name:32}  {ec.e1:7.2f}  {ec.e2:6.2f}  "
                    f"{ec.g12:6.2f}  {ec.nu12:5.2f}  {rec.provenance}\n"
                )
        return EXIT_OK

    if args.action == "show":
        rec = _select(args, records)[0]
        if args.format == "json":
            sys.stdout.write(_emit_report(args, [_record_dict(rec)]))
            return EXIT_OK
        ec = rec.constants
        polar = rec.computed_polar()
        ratios = rec.analysis_material()
        sys.stdout.write(f"name       : {ec.name}\n")
        sys.stdout.write(f"provenance : {rec.provenance}\n")
        sys.stdout.write(
            f"constants  : E1={ec.e1:.2f} E2={ec.e2:.2f} G12={ec.g12:.2f} "
            f"nu12={ec.nu12:.2f}\n"
        )
        sys.stdout.write(
            f"polar      : T0={polar.t0:.4f} T1={polar.t1:.4f} "
            f"R0={polar.r0:.4f} R1={polar.r1:.4f} (recomputed)\n"
        )
        if rec.polar is not None:
            sys.stdout.write(
                f"stored     : T0={rec.polar.t0:.2f} T1={rec.polar.t1:.2f} "
                f"R0={rec.polar.r0:.2f} R1={rec.polar.r1:.2f}\n"
            )
        sys.stdout.write(
            f"ratios     : tau0={ratios.tau0:.4f} tau1={ratios.tau1:.4f} "
            f"rho={ratios.rho:.4f} K={ratios.k}\n"
        )
        return EXIT_OK

    # validate
    tol = _tolerances(args)
    failures = 0
    results = []
    for i, rec in enumerate(records, start=1):
        issues = validate_record(rec, tol_modulus=tol["modulus"], tol_ratio=tol["ratio"])
        results.append(
            {"material": rec.name, "valid": not issues,
             "issues": [str(issue) for issue in issues]}
        )
        if issues:
            failures += 1
            if args.format != "json":
                sys.stdout.write(f"{i:>3}  {rec.name}: FAIL\n")
                for issue in issues:
                    sys.stdout.write(f"       {issue}\n")
        elif args.format != "json":
            sys.stdout.write(f"{i:>3}  {rec.name}: ok\n")
    if args.format == "json":
        sys.stdout.write(_emit_report(args, results))
    else:
        sys.stdout.write(
            f"{len(records) - failures} of {len(records)} materials valid "
            f"(modulus tolerance {tol['modulus']:g} GPa, ratio tolerance {tol['ratio']:g})\n"
        )
    return EXIT_DATA if failures else EXIT_OK


def _record_dict(rec: MaterialRecord) -> dict:
    ec = rec.constants
    out = {
        "name": ec.name,
        "E1": ec.e1,
        "E2": ec.e2,
        "G12": ec.g12,
        "nu12": ec.nu12,
        "provenance": rec.provenance,
    }
    if rec.polar is not None:
        out.update(T0=rec.polar.t0, T1=rec.polar.t1, R0=rec.polar.r0, R1=rec.polar.r1)
    if rec.ratios is not None:
        out.update(
            tau0=rec.ratios.tau0, tau1=rec.ratios.tau1,
            rho=rec.ratios.rho, K=rec.ratios.k,
        )
    return out


def cmd_nu12(args) -> int:
    records = _load_db(args)
    rec = _select(args, records)[0]
    material = rec.analysis_material()

    if args.angle_ply is not None:
        if not 0.0 <= args.angle_ply <= 90.0:
            raise DomainError(f"angle-ply angle {args.angle_ply} outside [0, 90] deg")
        point = angle_ply_point(math.radians(args.angle_ply))
        where = f"angle-ply +-{args.angle_ply:g} deg"
    else:
        point = LaminationPoint(xi3=args.point[0], xi1=args.point[1])
        if not in_domain(point):
            raise DomainError(
                f"point ({point.xi3:g}, {point.xi1:g}) outside the lamination domain"
            )
        where = f"point xi3={point.xi3:g} xi1={point.xi1:g}"

    n = args.theta_grid
    if n < 1:
        raise DomainError(f"theta grid must have at least 1 step, got {n}")
    theta_deg = np.linspace(0.0, 90.0, n + 1)
    values = nu12_laminate(material, point, np.radians(theta_deg))

    if args.format == "json":
        result = {
            "material": rec.name,
            "point": {"xi3": point.xi3, "xi1": point.xi1},
            "series": [[float(t), float(v)] for t, v in zip(theta_deg, values)],
        }
        sys.stdout.write(_emit_report(args, [result]))
        return EXIT_OK
    rows = [(f"{t:.4f}", _fmt(v)) for t, v in zip(theta_deg, values)]
    sys.stdout.write(
        _emit_csv(
            ("theta_deg", "nu12"),
            rows,
            comments=(f"material: {rec.name}", where),
        )
    )
    return EXIT_OK


def cmd_min_nu(args) -> int:
    records = _load_db(args)
    rows = []
    results = []
    for rec in _select(args, records):
        material = rec.analysis_material()
        res = min_nu12_global(material)
        if res.nu_min >= 0.0:
            sys.stderr.write(
                f"warning: {rec.name} admits no auxetic laminate "
                f"(minimum nu12 = {res.nu_min:.4f})\n"
            )
        delta = res.delta if res.delta is not None else math.nan
        rows.append(
            (
                rec.name,
                _fmt(res.nu_min),
                _fmt_deg(res.theta),
                _fmt(res.point.xi3),
                _fmt(res.point.xi1),
                _fmt_deg(delta),
            )
        )
        results.append(
            {
                "material": rec.name,
                "nu12_min": res.nu_min,
                "theta_deg": math.degrees(res.theta),
                "xi3": res.point.xi3,
                "xi1": res.point.xi1,
                "delta_deg": None if res.delta is None else math.degrees(res.delta),
            }
        )
    if args.format == "json":
        sys.stdout.write(_emit_report(args, results))
    else:
        sys.stdout.write(
            _emit_csv(("material", "nu12_min", "theta_deg", "xi3", "xi1", "delta_deg"), rows)
        )
    return EXIT_OK


def cmd_max_zone(args) -> int:
    records = _load_db(args)
    rows = []
    results = []
    for rec in _select(args, records):
        material = rec.analysis_material()
        res = max_zone(material)
        if res.zone.empty:
            sys.stderr.write(
                f"warning: {rec.name} admits no auxetic laminate "
                f"(threshold maximum {res.lambda_max:.4f})\n"
            )
        rows.append(
            (
                rec.name,
                _fmt(res.point.xi3),
                _fmt(res.point.xi1),
                _fmt_deg(res.zone.theta1),
                _fmt_deg(res.zone.theta2),
                _fmt_deg(res.zone.width),
                _fmt_deg(res.delta),
                _fmt(res.nu_min),
                _fmt_deg(res.theta_min),
                str(res.clamped).lower(),
            )
        )
        results.append(
            {
                "material": rec.name,
                "xi3_opt": res.point.xi3,
                "xi1_opt": res.point.xi1,
                "theta1_deg": math.degrees(res.zone.theta1),
                "theta2_deg": math.degrees(res.zone.theta2),
                "delta_theta_deg": math.degrees(res.zone.width),
                "delta_deg": math.degrees(res.delta),
                "nu12_min": res.nu_min,
                "theta_min_deg": math.degrees(res.theta_min),
                "clamped": res.clamped,
                "lambda_max": res.lambda_max,
            }
        )
    if args.format == "json":
        sys.stdout.write(_emit_report(args, results))
    else:
        sys.stdout.write(
            _emit_csv(
                (
                    "material", "xi3_opt", "xi1_opt", "theta1_deg", "theta2_deg",
                    "delta_theta_deg", "delta_deg", "nu12_min", "theta_min_deg",
                    "clamped",
                ),
                rows,
            )
        )
    return EXIT_OK


def cmd_xi_domain(args) -> int:
    if args.resolution < 16:
        raise DomainError(f"contour resolution must be at least 16, got {args.resolution}")
    records = _load_db(args)
    rec = _select(args, records)[0]
    material = rec.analysis_material()
    res = feasibility(material, contour_grid=args.resolution)
    if not res.feasible:
        sys.stderr.write(
            f"warning: {rec.name} admits no auxetic laminate "
            f"(margin minimum {res.eta_min:.4f}); contour is empty\n"
        )

    rows = []
    for part_idx, line in enumerate(res.xi_boundary):
        for p in line:
            rows.append(("xi_boundary", part_idx, f"{p.xi3:.9f}", f"{p.xi1:.9f}"))
    rows.append(("eta_min", 0, f"{res.argmin.xi3:.9f}", f"{res.argmin.xi1:.9f}"))
    results = [
        {
            "material": rec.name,
            "feasible": res.feasible,
            "eta_min": res.eta_min,
            "argmin": {"xi3": res.argmin.xi3, "xi1": res.argmin.xi1},
            "boundary_parts": [
                [[p.xi3, p.xi1] for p in line] for line in res.xi_boundary
            ],
        }
    ]

    if args.with_optima:
        mn = min_nu12_global(material)
        mz = max_zone(material)
        rows.append(("nu12_min", 0, f"{mn.point.xi3:.9f}", f"{mn.point.xi1:.9f}"))
        rows.append(("zone_max", 0, f"{mz.point.xi3:.9f}", f"{mz.point.xi1:.9f}"))
        results[0]["nu12_min"] = {"xi3": mn.point.xi3, "xi1": mn.point.xi1}
        results[0]["zone_max"] = {"xi3": mz.point.xi3, "xi1": mz.point.xi1}

    if args.format == "json":
        sys.stdout.write(_emit_report(args, results))
    else:
        sys.stdout.write(
            _emit_csv(
                ("series", "part", "xi3", "xi1"),
                rows,
                comments=(f"material: {rec.name}",),
            )
        )
    return EXIT_OK


def cmd_plot(args) -> int:
    path = Path(args.input)
    if not path.exists():
        raise DataError(f"input not found: {path}")
    with path.open(newline="", encoding="utf-8") as handle:
        filtered = (line for line in handle if not line.startswith("#"))
        reader = csv.DictReader(filtered)
        header = set(reader.fieldnames or ())
        rows = list(reader)

    out = Path(args.output) if args.output else path.with_suffix(".svg")
    if args.kind == "polar-nu12":
        if not {"theta_deg", "nu12"} <= header:
            raise DomainError("polar-nu12 input needs columns theta_deg,nu12")
        if not rows:
            raise DomainError("no data rows to plot")
        theta = [float(r["theta_deg"]) for r in rows]
        nu = [float(r["nu12"]) for r in rows]
        fig = polar_nu12_figure(theta, nu, title=args.title)
    else:
        if not {"series", "xi3", "xi1"} <= header:
            raise DomainError("domain-map input needs columns series,xi3,xi1")
        if not rows:
            raise DomainError("no data rows to plot")
        series: dict[str, dict[int, list[tuple[float, float]]]] = {}
        for r in rows:
            part = int(r.get("part") or 0)
            series.setdefault(r["series"], {}).setdefault(part, []).append(
                (float(r["xi3"]), float(r["xi1"]))
            )
        fig = domain_map_figure(series, title=args.title)
    save_svg(fig, out)
    sys.stdout.write(f"{out}\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _global_flags(default) -> _Parser:
    flags = _Parser(add_help=False)
    flags.add_argument(
        "--db", default=default,
        help="material database (CSV or JSON); default LAMINA_DB or bundled",
    )
    flags.add_argument(
        "--format", choices=("csv", "json"), default=default,
        help="output format for results (default csv)",
    )
    flags.add_argument(
        "--tolerance", action="append", metavar="KEY=VALUE", default=default,
        help="validation tolerance override: modulus=GPA or ratio=VALUE",
    )
    return flags


def build_parser() -> _Parser:
    # global flags are accepted before and after the subcommand; the
    # subcommand occurrence wins. The subparser side suppresses defaults so
    # it cannot clobber values the root parser already stored.
    common = _global_flags(argparse.SUPPRESS)

    parser = _Parser(
        prog="lamina",
        description="Directional Poisson's ratio analysis and auxetic "
        "optimization of orthotropic laminates.",
        epilog=_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
        parents=[_global_flags(None)],
    )
    parser.add_argument("--version", action="version", version=f"lamina {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("materials", parents=[common],
                       help="list, show or validate database records")
    p.add_argument("action", choices=("list", "show", "validate"))
    p.add_argument("material", nargs="?", help="record name or 1-based index")
    p.set_defaults(func=cmd_materials)

    p = sub.add_parser("nu12", parents=[common],
                       help="sweep nu12 over directions for one laminate")
    p.add_argument("material", help="record name or 1-based index")
    where = p.add_mutually_exclusive_group(required=True)
    where.add_argument("--point", nargs=2, type=float, metavar=("XI3", "XI1"),
                       help="lamination point")
    where.add_argument("--angle-ply", type=float, metavar="DELTA_DEG",
                       help="balanced angle-ply half angle in degrees")
    p.add_argument("--theta-grid", type=int, default=900, metavar="N",
                   help="number of steps over [0, 90] deg (default 900)")
    p.set_defaults(func=cmd_nu12)

    p = sub.add_parser("min-nu", parents=[common],
                       help="global minimum of nu12 over points and directions")
    p.add_argument("material", nargs="?", help="record name or 1-based index")
    p.add_argument("--all", action="store_true", help="process every record")
    p.set_defaults(func=cmd_min_nu)

    p = sub.add_parser("max-zone", parents=[common],
                       help="widest auxetic angular zone over lamination points")
    p.add_argument("material", nargs="?", help="record name or 1-based index")
    p.add_argument("--all", action="store_true", help="process every record")
    p.set_defaults(func=cmd_max_zone)

    p = sub.add_parser("xi-domain", parents=[common],
                       help="zero-margin contour and margin minimum in the domain")
    p.add_argument("material", help="record name or 1-based index")
    p.add_argument("--resolution", type=int, default=257, metavar="N",
                   help="contour grid nodes per axis (default 257)")
    p.add_argument("--with-optima", action="store_true",
                   help="append the nu12 minimum and widest-zone points")
    p.set_defaults(func=cmd_xi_domain)

    p = sub.add_parser("plot", parents=[common],
                       help="render a result CSV to an SVG figure")
    p.add_argument("input", help="CSV produced by nu12 or xi-domain")
    p.add_argument("--kind", choices=("polar-nu12", "domain-map"), required=True)
    p.add_argument("--output", "-o", help="output SVG path (default input with .svg)")
    p.add_argument("--title", default="", help="figure title")
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.command_echo = argv
        if args.db is None:
            args.db = os.environ.get("LAMINA_DB") or bundled_database_path()
        if args.format is None:
            args.format = "csv"
        return args.func(args)
    except SystemExit as exc:
        return int(exc.code or 0)
    except (DataError, InvalidMaterialError, PoleError) as exc:
        sys.stderr.write(f"lamina: data error: {exc}\n")
        return EXIT_DATA
    except (DomainError, LaminaError) as exc:
        sys.stderr.write(f"lamina: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
