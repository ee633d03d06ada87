"""JSON documents for complexes, flags, labelings and sample tables.

Output is canonical: sorted keys, sorted simplex lists, two-space indent.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import numpy as np

from .complex import SymmetricComplex
from .errors import LabelingError, ValidationError
from .flag import HemisphereFlag
from .labeling import Labeling, from_representatives


def dumps(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def write_json(path: str | Path, doc: Any) -> None:
    Path(path).write_text(dumps(doc))


def read_json(path: str | Path) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: not valid JSON ({exc})") from exc


def complex_to_json(complex_: SymmetricComplex, flag: HemisphereFlag | None = None) -> dict:
    vertices = []
    for v, a in enumerate(complex_.antipode):
        entry: dict[str, Any] = {"id": v, "antipode": a}
        if complex_.coords is not None:
            entry["coords"] = [float(x) for x in complex_.coords[v]]
        vertices.append(entry)
    doc: dict[str, Any] = {
        "n": complex_.n,
        "vertices": vertices,
        "maximal_simplices": [list(s) for s in sorted(complex_.maximal_simplices)],
    }
    if flag is not None:
        doc["flag"] = {str(d): [list(s) for s in level] for d, level in enumerate(flag.levels)}
        if flag.explicit_negative:
            doc["flag_negative"] = {
                str(d): [list(s) for s in level] for d, level in enumerate(flag.negative)
            }
    return doc


def _levels(doc: dict, n: int, key: str) -> list[list[list[int]]]:
    try:
        return [doc[str(d)] for d in range(n + 1)]
    except KeyError as exc:
        raise ValidationError(f"{key} is missing level {exc.args[0]}") from exc


def complex_from_json(doc: dict) -> tuple[SymmetricComplex, HemisphereFlag | None]:
    try:
        n = int(doc["n"])
        vertices = doc["vertices"]
        tops = doc["maximal_simplices"]
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"complex document is missing field {exc}") from exc

    ids = sorted(int(v["id"]) for v in vertices)
    if ids != list(range(len(vertices))):
        raise ValidationError("vertex ids must be dense from 0")
    by_id = {int(v["id"]): v for v in vertices}
    antipode = [int(by_id[i]["antipode"]) for i in range(len(vertices))]
    has_coords = [("coords" in by_id[i]) for i in range(len(vertices))]
    coords = None
    if any(has_coords):
        if not all(has_coords):
            raise ValidationError("coordinates must be given for all vertices or none")
        coords = np.array([by_id[i]["coords"] for i in range(len(vertices))], dtype=float)
    try:
        cx = SymmetricComplex(n, antipode, tops, coords)
    except ValueError as exc:
        raise ValidationError(str(exc)) from exc

    flag = None
    if "flag" in doc:
        negative = None
        if "flag_negative" in doc:
            negative = _levels(doc["flag_negative"], n, "flag_negative")
        try:
            flag = HemisphereFlag(cx, _levels(doc["flag"], n, "flag"), negative=negative)
        except ValueError as exc:
            raise ValidationError(f"bad flag: {exc}") from exc
    return cx, flag


def load_complex(path: str | Path) -> tuple[SymmetricComplex, HemisphereFlag | None]:
    return complex_from_json(read_json(path))


def labeling_to_json(labeling: Labeling) -> dict:
    return {"m": labeling.m, "labels": {str(v): x for v, x in enumerate(labeling.labels)}}


def labeling_from_json(complex_: SymmetricComplex, doc: dict) -> Labeling:
    """Load labels given on at least one vertex per antipodal pair, mirroring the rest."""
    try:
        m = int(doc["m"])
        values = {int(v): int(x) for v, x in doc["labels"].items()}
    except (KeyError, TypeError, ValueError) as exc:
        raise LabelingError(f"bad labeling document: {exc}") from exc
    bad = [v for v in values if not 0 <= v < complex_.num_vertices]
    if bad:
        raise LabelingError(f"labels given for unknown vertices {bad}")
    return from_representatives(complex_, m, values)


def samples_from_json(doc: dict) -> dict[int, list[float]]:
    try:
        return {int(v): [float(x) for x in f] for v, f in doc["samples"].items()}
    except (KeyError, TypeError, ValueError) as exc:
        raise LabelingError(f"bad sample table: {exc}") from exc
