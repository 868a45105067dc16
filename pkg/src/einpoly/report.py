"""Assembly of the full analysis report (schema report/v1).

The report is deterministic for a given input: dictionaries are built in a
fixed field order and every rational is serialized as a decimal-free
string.
"""

from __future__ import annotations

import json
from fractions import Fraction
from . import __version__
from .curvature import newton_polytope, scalar_curvature
from .exact import format_rat
from .faces import (
    NEEDS_MORE_DATA,
    marked_census,
    parallelogram_singular,
)
from .homspace import HomSpaceData, weight_polytope
from .infinity import B2NotApplicableError, b2_exponent, delta_min, flat_complex, is_admissible
from .solver import bound_report, real_positive

REPORT_SCHEMA = "report/v1"


def analyze(data: HomSpaceData, theta=Fraction(0), solve: bool = True) -> dict:
    """Full pipeline: weight polytope, flats, minimal polytope, volume and
    bounds, marked-face census, 2-face singularity verdicts, and (for
    d <= 3) the certified solver."""
    warnings = list(data.validation_warnings())
    delta = weight_polytope(data)
    T = flat_complex(data)
    dmin = delta_min(delta, T)
    nu = dmin.normalized_volume()
    s = scalar_curvature(data)
    nw = newton_polytope(s)
    nw_equals_min = nw == dmin
    nw_equals_delta = nw == delta
    if data.complement == "killing_orthogonal" and not nw_equals_min:
        warnings.append(
            "curvature support differs from the minimal polytope on a "
            "Killing-orthogonal input"
        )
    try:
        b2 = b2_exponent(dmin)
    except B2NotApplicableError as exc:
        b2 = f"not applicable: {exc}"
    bounds = bound_report(data, solve=solve and data.d in (2, 3))
    census = marked_census(dmin)
    singularity = []
    if census.applicable and dmin.contains_polytope(nw):
        for entry in census.marked_faces():
            if entry.dim != 2:
                singularity.append(
                    {
                        "signature": list(entry.signature),
                        "dim": entry.dim,
                        "verdict": "not_analyzed",
                    }
                )
                continue
            verts = entry.face.vertices()
            if len(verts) == 4 and _is_parallelogram(verts):
                verdict = parallelogram_singular(s, entry.face)
            else:
                verdict = NEEDS_MORE_DATA
            singularity.append(
                {
                    "signature": list(entry.signature),
                    "dim": entry.dim,
                    "verdict": verdict,
                }
            )
            if verdict == NEEDS_MORE_DATA:
                warnings.append(
                    f"face {list(entry.signature)} left undecided (needs more data)"
                )
    elif census.applicable:
        warnings.append("curvature support not contained in the minimal polytope; "
                        "singularity analysis skipped")
    solver_obj = None
    solver_exit = 0
    if solve:
        if data.d in (2, 3):
            sol = real_positive(data)
            solver_obj = sol.to_json_obj()
            warnings.extend(sol.warnings)
        else:
            solver_exit = 3
            warnings.append(
                f"solver skipped: unsupported dimension d = {data.d} (supported: 2, 3)"
            )
    report = {
        "schema": REPORT_SCHEMA,
        "version": __version__,
        "input": data.to_json_obj(),
        "theta": format_rat(Fraction(theta)),
        "delta": delta.to_json_obj(),
        "T": T.to_json_obj(),
        "delta_admissible": is_admissible(delta, T),
        "delta_min": dmin.to_json_obj(),
        "delta_min_admissible": is_admissible(dmin, T),
        "nu": nu,
        "b2_exponent": b2,
        "newton": {
            "equals_delta_min": nw_equals_min,
            "equals_delta": nw_equals_delta,
            "support_size": len(s.terms),
        },
        "bounds": bounds.to_json_obj(),
        "census": _census_obj(census),
        "singularity": singularity,
        "solver": solver_obj,
        "warnings": warnings,
    }
    return report, solver_exit


def _is_parallelogram(verts) -> bool:
    from .faces import _parallelogram_diagonals

    return len(verts) == 4 and _parallelogram_diagonals(list(verts)) is not None


def _census_obj(census) -> dict:
    by_dim = {}
    for entry in census.entries:
        rec = by_dim.setdefault(entry.dim, {"faces": 0, "marked": 0, "test2": 0})
        rec["faces"] += 1
        if entry.marked:
            rec["marked"] += 1
        if entry.test2:
            rec["test2"] += 1
    return {
        "applicable": census.applicable,
        "by_dim": {str(k): v for k, v in sorted(by_dim.items())},
        "marked_total": census.marked_total(),
        "marked_faces": [
            {"dim": e.dim, "signature": list(e.signature),
             "vertices": [list(v) for v in e.face.vertices()]}
            for e in census.marked_faces()
        ],
    }


def render_report(report: dict) -> str:
    return json.dumps(report, indent=2)


def summarize(report: dict) -> str:
    """Short human-readable summary of an analysis report."""
    lines = []
    name = report["input"].get("name", "?")
    d = report["input"]["d"]
    lines.append(f"{name}: d = {d}")
    lines.append(
        f"  weight polytope: {len(report['delta']['vertices'])} vertices, "
        f"{len(report['delta']['facets'])} facets"
    )
    flats = report["T"]["maximal_flats"]
    lines.append(f"  flats at infinity: {flats if flats else 'none'}")
    lines.append(
        f"  minimal polytope: {len(report['delta_min']['vertices'])} vertices, "
        f"{len(report['delta_min']['facets'])} facets, nu = {report['nu']}"
    )
    lines.append(f"  b2 exponent: {report['b2_exponent']}")
    b = report["bounds"]
    lines.append(
        f"  bounds: nu = {b['nu']} <= Delannoy {b['delannoy_bound']} < {b['six_power']}"
    )
    if b["epsilon_computed"] is not None:
        lines.append(f"  complex solutions (distinct): {b['epsilon_computed']}")
    elif b["epsilon_annotation"] is not None:
        lines.append(f"  complex solutions (annotation): {b['epsilon_annotation']}")
    if b["escaped_to_infinity"]:
        lines.append(f"  solutions at infinity: nu - epsilon = {b['escaped_to_infinity']}")
    c = report["census"]
    if c["applicable"]:
        lines.append(f"  marked faces: {c['marked_total']}")
    else:
        lines.append("  marked faces: shape tests inapplicable")
    verdicts = {}
    for entry in report["singularity"]:
        verdicts[entry["verdict"]] = verdicts.get(entry["verdict"], 0) + 1
    if verdicts:
        lines.append(f"  singularity verdicts: {verdicts}")
    sol = report.get("solver")
    if sol:
        lines.append(
            f"  solver: {sol['distinct_complex']} complex, "
            f"{sol['real_count']} real, {sol['positive_count']} positive"
        )
    for w in report["warnings"]:
        lines.append(f"  warning: {w}")
    return "\n".join(lines)
