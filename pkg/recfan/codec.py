"""
JSON documents for polyhedra, complexes and reports. Rationals are always
strings (``"p/q"`` or ``"p"``), never floats.
"""
import json
from typing import List, Optional, Tuple

from recfan.complex import ComplexVerdict, MWReport, PolyhedralComplex, build_complex
from recfan.errors import InputError
from recfan.exactq import rational_to_str
from recfan.fanops import SubdivisionResult, Theorem14Report, ToricDatum
from recfan.polyhedron import Halfspace, HRep, Polyhedron, VRep, from_hrep, from_vrep


def read_json(path: str):
    """Load a JSON file; decoding errors become InputError with line and column."""
    try:
        with open(path) as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise InputError("{}: invalid JSON at line {}, column {}: {}".format(path, e.lineno, e.colno, e.msg))
    except OSError as e:
        raise InputError("{}: {}".format(path, e.strerror or e))


def _vector_to_list(v) -> List[str]:
    return [rational_to_str(_) for _ in v]


def _halfspace_to_dict(h: Halfspace) -> dict:
    return {"normal": _vector_to_list(h.normal), "offset": rational_to_str(h.offset)}


def polyhedron_to_dict(p: Polyhedron) -> dict:
    data = {"dim": p.dim}
    if p.is_empty:
        data["empty"] = True
    data["inequalities"] = [_halfspace_to_dict(_) for _ in p.hrep.inequalities]
    data["equalities"] = [_halfspace_to_dict(_) for _ in p.hrep.equalities]
    data["vertices"] = [_vector_to_list(_) for _ in p.vrep.vertices]
    data["rays"] = [_vector_to_list(_) for _ in p.vrep.rays]
    data["lines"] = [_vector_to_list(_) for _ in p.vrep.lines]

    return data


def _halfspaces_from_list(items, key: str) -> Tuple[Halfspace, ...]:
    if not isinstance(items, list):
        raise InputError("'{}' must be a list".format(key))
    halfspaces = []
    for item in items:
        if not isinstance(item, dict) or "normal" not in item:
            raise InputError("each entry of '{}' needs a 'normal'".format(key))
        if not isinstance(item["normal"], list):
            raise InputError("'normal' must be a list of rationals")
        halfspaces.append(Halfspace.of(item["normal"], item.get("offset", "0")))
    return tuple(halfspaces)


def _vectors_from_list(items, key: str) -> list:
    if not isinstance(items, list) or not all(isinstance(_, list) for _ in items):
        raise InputError("'{}' must be a list of vectors".format(key))
    return items


def polyhedron_from_dict(data: dict, dim: Optional[int] = None) -> Polyhedron:
    """
    Accepts either H-form keys (``inequalities``/``equalities``) or V-form keys
    (``vertices``/``rays``/``lines``); H-form wins when both are present.
    """
    if not isinstance(data, dict):
        raise InputError("a polyhedron must be a JSON object")
    dim = data.get("dim", dim)
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise InputError("'dim' must be a positive integer, got {!r}".format(dim))
    if "inequalities" in data or "equalities" in data:
        return from_hrep(
            HRep(
                dim,
                _halfspaces_from_list(data.get("inequalities", []), "inequalities"),
                _halfspaces_from_list(data.get("equalities", []), "equalities"),
            )
        )
    if "vertices" in data:
        return from_vrep(
            VRep.of(
                dim,
                _vectors_from_list(data["vertices"], "vertices"),
                _vectors_from_list(data.get("rays", []), "rays"),
                _vectors_from_list(data.get("lines", []), "lines"),
            )
        )
    raise InputError("a polyhedron needs inequalities/equalities or vertices")


def complex_to_dict(complex_: PolyhedralComplex) -> dict:
    return {
        "dim": complex_.dim,
        "cells": [polyhedron_to_dict(_) for _ in complex_.cells],
    }


def cells_to_dict(dim: int, cells) -> dict:
    return {"dim": dim, "cells": [polyhedron_to_dict(_) for _ in cells]}


def cells_from_dict(data: dict) -> Tuple[int, List[Polyhedron]]:
    if not isinstance(data, dict):
        raise InputError("a complex must be a JSON object")
    dim = data.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise InputError("'dim' must be a positive integer, got {!r}".format(dim))
    cells = data.get("cells")
    if not isinstance(cells, list) or not cells:
        raise InputError("'cells' must be a nonempty list")
    polyhedra = [polyhedron_from_dict(_, dim) for _ in cells]
    if any(_.dim != dim for _ in polyhedra):
        raise InputError("every cell must have dimension {}".format(dim))
    if any(_.is_empty for _ in polyhedra):
        raise InputError("cells of a complex must be nonempty")

    return dim, polyhedra


def complex_from_dict(data: dict) -> Tuple[PolyhedralComplex, ComplexVerdict]:
    """Parse ``{"dim": n, "cells": [...]}``; faces are added by closure."""
    _, cells = cells_from_dict(data)
    return build_complex(cells)


def verdict_to_dict(verdict: ComplexVerdict, witnesses: bool = True) -> dict:
    data = {"status": verdict.status.value}
    if witnesses and not verdict.is_valid:
        data["cells"] = [polyhedron_to_dict(_) for _ in verdict.cells]
        data["witness"] = polyhedron_to_dict(verdict.witness)
    return data


def mw_report_to_dict(report: MWReport, witnesses: bool = True) -> dict:
    data = {"holds": report.holds}
    if report.holds:
        data["sigma"] = polyhedron_to_dict(report.sigma)
        data["delta_pieces"] = [polyhedron_to_dict(_) for _ in report.delta_pieces]
    elif witnesses:
        p, u = report.failure_witness
        data["failure_witness"] = {"point": _vector_to_list(p), "direction": _vector_to_list(u)}
    return data


def theorem14_report_to_dict(report: Theorem14Report, witnesses: bool = True) -> dict:
    return {
        "hypotheses": {
            "connected": report.connected,
            "mw": mw_report_to_dict(report.mw, witnesses),
        },
        "rec_complex": {
            "cells": [polyhedron_to_dict(_) for _ in report.rec_cells],
            "verdict": verdict_to_dict(report.rec_verdict, witnesses),
        },
        "cone_complex": {
            "cells": [polyhedron_to_dict(_) for _ in report.cone_cells],
            "verdict": verdict_to_dict(report.cone_verdict, witnesses),
        },
        "support_identity_rec": report.support_identity_rec,
        "support_identity_cone": report.support_identity_cone,
        "flags": {"rational": report.rational, "fans": report.fans},
    }


def subdivision_to_dict(result: SubdivisionResult) -> dict:
    """The refined complex at the top level, so the document parses as a complex."""
    data = complex_to_dict(result.refined)
    data["extension"] = complex_to_dict(result.extension)
    data["same_support"] = result.same_support
    data["refines"] = result.refines
    data["extension_complete"] = result.extension_complete
    return data


def toric_datum_to_dict(datum: ToricDatum) -> dict:
    return {
        "dim": datum.dim,
        "cones": [
            {"rays": [[str(x) for x in r] for r in rays], "faces_of": list(parents)}
            for rays, parents in zip(datum.rays, datum.faces_of)
        ],
        "complete": datum.complete,
        "strongly_convex": datum.strongly_convex,
        "proper": datum.proper,
    }
