"""JSON file formats for pre-bases and Hamiltonian families.

Complex numbers are two-element arrays ``[re, im]``.

Pre-basis file::

    {"d": 2, "n": 3,
     "vectors": [[[1, 0], [0, 0]], [[0.447, 0], [0, 0.894]], ...],
     "labels": ["1", "2", "3"]}          # optional

Family file (theta(lambda) = H0 + lambda H1)::

    {"H0": [[[1, 0], [0, 0]], [[0, 0], [1, 0]]],
     "H1": [[[0, 0], [1, 1]], [[1, -1], [0, 0]]],
     "lambda_range": [-5, 5]}            # optional
"""

from __future__ import annotations

import json
import logging
import math
from pathlib import Path

import numpy as np

from .detect import AffineHamiltonianFamily
from .errors import GenBasisError
from .mobius import PreBasis

__all__ = [
    "FileFormatError",
    "dump_prebasis",
    "load_family",
    "load_prebasis",
    "parse_cmatrix",
    "parse_cvector",
    "parse_prebasis",
    "prebasis_to_dict",
]

log = logging.getLogger(__name__)

_NORM_WARN = 1e-6


class FileFormatError(GenBasisError, ValueError):
    """Malformed input document; the message names the offending field."""


def _complex(value, where) -> complex:
    if (not isinstance(value, (list, tuple)) or len(value) != 2
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in value)):
        raise FileFormatError(f"{where}: expected [re, im], got {value!r}")
    return complex(value[0], value[1])


def parse_cvector(value, where) -> np.ndarray:
    if not isinstance(value, list):
        raise FileFormatError(f"{where}: expected a list of [re, im] pairs")
    return np.array([_complex(x, f"{where}[{k}]") for k, x in enumerate(value)])


def parse_cmatrix(value, where) -> np.ndarray:
    if not isinstance(value, list) or not value:
        raise FileFormatError(f"{where}: expected a list of rows")
    rows = [parse_cvector(r, f"{where}[{k}]") for k, r in enumerate(value)]
    if any(len(r) != len(rows) for r in rows):
        raise FileFormatError(f"{where}: matrix must be square")
    return np.array(rows)


def _load_json(text: str, source: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"{source}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc


def parse_prebasis(doc: dict, source="<input>") -> PreBasis:
    if not isinstance(doc, dict):
        raise FileFormatError(f"{source}: top level must be an object")
    for key in ("d", "vectors"):
        if key not in doc:
            raise FileFormatError(f"{source}: missing field '{key}'")
    d = doc["d"]
    if not isinstance(d, int) or d < 1:
        raise FileFormatError(f"{source}: field 'd' must be a positive integer")
    vectors = doc["vectors"]
    if not isinstance(vectors, list) or not vectors:
        raise FileFormatError(f"{source}: field 'vectors' must be a non-empty list")
    vecs = [parse_cvector(v, f"{source}: vectors[{k}]") for k, v in enumerate(vectors)]
    for k, v in enumerate(vecs):
        if len(v) != d:
            raise FileFormatError(f"{source}: vectors[{k}] has {len(v)} entries, expected d={d}")
    if "n" in doc and doc["n"] != len(vecs):
        raise FileFormatError(f"{source}: field 'n' = {doc['n']} but {len(vecs)} vectors given")
    labels = doc.get("labels", ())
    if labels and len(labels) != len(vecs):
        raise FileFormatError(f"{source}: field 'labels' has {len(labels)} entries for {len(vecs)} vectors")
    arr = np.array(vecs)
    for k, norm in enumerate(np.linalg.norm(arr, axis=1)):
        if abs(norm - 1) > _NORM_WARN:
            log.warning("%s: vectors[%d] has norm %.6g; normalizing", source, k, norm)
    return PreBasis.from_vectors(arr, labels=tuple(str(x) for x in labels))


def load_prebasis(path) -> PreBasis:
    path = Path(path)
    return parse_prebasis(_load_json(path.read_text(), str(path)), str(path))


def prebasis_to_dict(basis: PreBasis) -> dict:
    doc = {
        "d": basis.d,
        "n": basis.n,
        "vectors": [[[float(z.real), float(z.imag)] for z in v] for v in basis.vectors],
    }
    if basis.labels:
        doc["labels"] = list(basis.labels)
    return doc


def dump_prebasis(basis: PreBasis, path) -> None:
    Path(path).write_text(json.dumps(prebasis_to_dict(basis), indent=2) + "\n")


def load_family(path) -> AffineHamiltonianFamily:
    path = Path(path)
    src = str(path)
    doc = _load_json(path.read_text(), src)
    if not isinstance(doc, dict):
        raise FileFormatError(f"{src}: top level must be an object")
    for key in ("H0", "H1"):
        if key not in doc:
            raise FileFormatError(f"{src}: missing field '{key}'")
    h0 = parse_cmatrix(doc["H0"], f"{src}: H0")
    h1 = parse_cmatrix(doc["H1"], f"{src}: H1")
    rng = doc.get("lambda_range", [-math.inf, math.inf])
    if not (isinstance(rng, list) and len(rng) == 2):
        raise FileFormatError(f"{src}: field 'lambda_range' must be [min, max]")
    return AffineHamiltonianFamily(h0, h1, (float(rng[0]), float(rng[1])), path.stem)
