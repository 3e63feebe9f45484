"""JSON readers and writers for spaces, functions, nets, certificates and
modulus tables.

Writers emit keys in a fixed order and floats in shortest round-trip form so
identical inputs give byte-identical files.  All writes go through a
temporary file and an atomic rename.
"""

from __future__ import annotations

import csv
import io
import json
import os
import tempfile
from pathlib import Path
from typing import Optional

import numpy as np

from .approx import ApproximationCertificate, ModulusTable
from .errors import FileFormatError
from .extension import RestrictedFunction
from .metric import FiniteMetricSpace, euclidean_space, graph_space, matrix_space, poincare_disk_space
from .nets import SeparatedNet

# required / optional keys per space kind
SPACE_FIELDS = {
    "matrix": ({"distances"}, {"labels"}),
    "euclidean": ({"coords"}, {"labels"}),
    "graph": ({"n", "edges"}, {"labels"}),
    "poincare_disk": ({"points"}, {"labels", "scale"}),
}


def atomic_write_text(path, text: str) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def dumps(obj) -> str:
    return json.dumps(obj, indent=1, ensure_ascii=False, allow_nan=False) + "\n"


def write_json(path, obj) -> None:
    atomic_write_text(path, dumps(obj))


def read_json(path):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FileFormatError(f"{path}: {exc.strerror or exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc


def _floats(a) -> list:
    return [float(x) for x in np.asarray(a, dtype=float).reshape(-1)]


# -- spaces -----------------------------------------------------------------

def space_to_dict(space: FiniteMetricSpace) -> dict:
    out: dict = {"kind": space.origin_kind}
    if space.labels is not None:
        out["labels"] = list(space.labels)
    if space.origin_kind == "matrix":
        out["distances"] = [_floats(row) for row in space.dist]
    elif space.origin_kind == "euclidean":
        out["coords"] = [_floats(row) for row in space.coords]
    elif space.origin_kind == "graph":
        out["n"] = space.n
        out["edges"] = [[int(u), int(v), float(w)] for u, v, w in space.edges]
    else:
        out["points"] = [[float(z.real), float(z.imag)] for z in space.points]
        out["scale"] = float(space.scale)
    return out


def space_from_dict(d: dict, where: str = "space") -> FiniteMetricSpace:
    if not isinstance(d, dict):
        raise FileFormatError(f"{where}: expected a JSON object")
    kind = d.get("kind")
    if kind not in SPACE_FIELDS:
        raise FileFormatError(f"{where}: unknown kind {kind!r}")
    required, optional = SPACE_FIELDS[kind]
    keys = set(d) - {"kind"}
    missing = required - keys
    extra = keys - required - optional
    if missing:
        raise FileFormatError(f"{where}: kind {kind!r} needs {sorted(missing)}")
    if extra:
        raise FileFormatError(f"{where}: fields {sorted(extra)} do not belong to kind {kind!r}")
    labels = d.get("labels")
    if kind == "matrix":
        return matrix_space(np.array(d["distances"], dtype=float), labels=labels)
    if kind == "euclidean":
        return euclidean_space(d["coords"], labels=labels)
    if kind == "graph":
        return graph_space(int(d["n"]), [tuple(e) for e in d["edges"]], labels=labels)
    return poincare_disk_space([tuple(p) for p in d["points"]], scale=float(d.get("scale", 1.0)), labels=labels)


def write_space(path, space: FiniteMetricSpace) -> None:
    write_json(path, space_to_dict(space))


def read_space(path) -> FiniteMetricSpace:
    return space_from_dict(read_json(path), str(path))


# -- functions --------------------------------------------------------------

def function_to_dict(values, indices=None) -> dict:
    v = np.asarray(values)
    out: dict = {}
    if indices is not None:
        out["indices"] = [int(i) for i in indices]
    out["values_re"] = _floats(v.real)
    if np.iscomplexobj(v):
        out["values_im"] = _floats(v.imag)
    return out


def function_from_dict(d: dict, where: str = "function") -> tuple[np.ndarray, Optional[np.ndarray]]:
    """Return (values, indices); indices is None for a full function."""
    if not isinstance(d, dict) or "values_re" not in d:
        raise FileFormatError(f"{where}: expected an object with 'values_re'")
    extra = set(d) - {"values_re", "values_im", "indices"}
    if extra:
        raise FileFormatError(f"{where}: unexpected fields {sorted(extra)}")
    re = np.asarray(d["values_re"], dtype=float)
    if "values_im" in d:
        im = np.asarray(d["values_im"], dtype=float)
        if im.shape != re.shape:
            raise FileFormatError(f"{where}: values_re and values_im differ in length")
        values = re + 1j * im
    else:
        values = re
    indices = None
    if "indices" in d:
        indices = np.asarray(d["indices"], dtype=int)
        if indices.shape != re.shape:
            raise FileFormatError(f"{where}: indices and values differ in length")
    return values, indices


def write_function(path, values, indices=None) -> None:
    write_json(path, function_to_dict(values, indices))


def read_function(path) -> tuple[np.ndarray, Optional[np.ndarray]]:
    return function_from_dict(read_json(path), str(path))


def read_restricted(path) -> RestrictedFunction:
    values, indices = read_function(path)
    if indices is None:
        indices = np.arange(values.shape[0])
    return RestrictedFunction(indices, values)


# -- nets -------------------------------------------------------------------

def net_to_dict(net: SeparatedNet) -> dict:
    return {"t": float(net.t), "indices": [int(i) for i in net.indices], "covering_radius": float(net.covering_radius)}


def net_from_dict(d: dict) -> SeparatedNet:
    try:
        return SeparatedNet(float(d["t"]), [int(i) for i in d["indices"]], float(d["covering_radius"]))
    except (KeyError, TypeError) as exc:
        raise FileFormatError(f"net: malformed ({exc})") from exc


# -- certificates ------------------------------------------------------------

def certificate_to_dict(cert: ApproximationCertificate, values=None) -> dict:
    out = {
        "epsilon": float(cert.epsilon),
        "mode": cert.mode,
        "c_used": float(cert.c_used),
        "t": None if cert.t is None else float(cert.t),
        "net_size": int(cert.net_size),
        "restriction_lip": float(cert.restriction_lip),
        "extension_lip_bound": float(cert.extension_lip_bound),
        "proven_sup_error": float(cert.proven_sup_error),
        "achieved_sup_error": float(cert.achieved_sup_error),
        "measured_extension_lip": float(cert.measured_extension_lip),
        "ok": cert.ok,
        "net": {
            "t": None if cert.t is None else float(cert.t),
            "indices": [int(i) for i in cert.net_indices],
            "covering_radius": float(cert.covering_radius),
        },
    }
    if values is not None:
        out["F"] = function_to_dict(values)
    return out


def certificate_from_dict(d: dict) -> tuple[ApproximationCertificate, Optional[np.ndarray]]:
    cert = ApproximationCertificate(
        epsilon=d["epsilon"], mode=d["mode"], c_used=d["c_used"], t=d["t"], net_size=d["net_size"],
        restriction_lip=d["restriction_lip"], extension_lip_bound=d["extension_lip_bound"],
        proven_sup_error=d["proven_sup_error"], achieved_sup_error=d["achieved_sup_error"],
        measured_extension_lip=d["measured_extension_lip"], net_indices=list(d["net"]["indices"]),
        covering_radius=d["net"]["covering_radius"],
    )
    values = function_from_dict(d["F"])[0] if "F" in d else None
    return cert, values


CERT_CSV_COLUMNS = (
    "epsilon", "c_used", "t", "net_size", "achieved_sup_error", "proven_sup_error", "measured_extension_lip",
)


def certificates_csv(certs: list[ApproximationCertificate]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CERT_CSV_COLUMNS)
    for c in certs:
        w.writerow([repr(getattr(c, k)) if isinstance(getattr(c, k), float) else getattr(c, k)
                    for k in CERT_CSV_COLUMNS])
    return buf.getvalue()


# -- modulus tables ----------------------------------------------------------

def modulus_table_to_list(table: ModulusTable) -> list:
    out = []
    for row in table.rows:
        out.append({
            "epsilon": float(row.epsilon),
            "c_star": float(row.star.c_star),
            "delta": None if row.uc.no_violation else float(row.uc.delta),
            "witness": None if row.star.witness_pair is None else list(row.star.witness_pair),
            "delta_witness": None if row.uc.witness_pair is None else list(row.uc.witness_pair),
        })
    return out


def modulus_csv(rows: list) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(("epsilon", "c_star", "delta"))
    for r in rows:
        w.writerow((repr(r["epsilon"]), repr(r["c_star"]), "" if r["delta"] is None else repr(r["delta"])))
    return buf.getvalue()
