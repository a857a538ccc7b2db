"""JSON instance and certificate documents.

Instance::

    {"field": {"kind": "prime", "p": 2} | {"kind": "rational"},
     "n": 4,
     "side1": {"distinguished": "A",
               "summands": [{"label": "A", "basis": [[1, 0, 0, 0]]}, ...]},
     "side2": {...}}

F_p entries are integers in ``[0, p)``; rational entries are strings
``"a"`` or ``"a/b"``.  ``distinguished`` defaults to the first summand.

Certificate::

    {"field": ..., "n": ..., "J0": [...], "I0": [...],
     "Y_basis": [...], "complement_basis": [...],
     "report": [{"name": ..., "pass": true}, ...]}

Labels are sorted and bases are in RREF, so equal certificates serialize
to equal bytes.
"""

import json

from .core import span_canonicalize
from .decomp import make_decomposition
from .errors import InputError
from .field import FieldSpec
from .refine import RefinementCertificate, RefinementInstance


def _render(obj, indent):
    pad = "  " * (indent + 1)
    end = "  " * indent
    if isinstance(obj, dict) and obj:
        items = [f"{pad}{json.dumps(k)}: {_render(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, list) and obj and any(isinstance(x, (list, dict)) for x in obj):
        return "[\n" + ",\n".join(pad + _render(x, indent + 1) for x in obj) + "\n" + end + "]"
    return json.dumps(obj, separators=(", ", ": "))


def dumps(doc):
    """Deterministic JSON text; lists of scalars (basis rows) stay on one line."""
    return _render(doc, 0) + "\n"


def loads(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"not valid JSON: {exc}") from exc


def _basis_to_json(space):
    return [[space.field.format(x) for x in row] for row in space.basis]


def _basis_from_json(rows, field, n, where):
    if not isinstance(rows, list):
        raise InputError(f"{where}: basis must be a list of rows")
    parsed = []
    for row in rows:
        if not isinstance(row, list) or len(row) != n:
            raise InputError(f"{where}: every basis row needs {n} entries")
        try:
            parsed.append([field.parse(x) for x in row])
        except InputError as exc:
            raise InputError(f"{where}: {exc}") from exc
    return span_canonicalize(parsed, field, n)


def _side_to_json(side):
    return {
        "distinguished": side.distinguished_label,
        "summands": [{"label": label, "basis": _basis_to_json(s)} for label, s in side.summands],
    }


def _side_from_json(doc, field, n, name):
    if not isinstance(doc, dict) or not isinstance(doc.get("summands"), list) or not doc["summands"]:
        raise InputError(f"{name}: expected an object with a non-empty 'summands' list")
    summands = []
    for k, item in enumerate(doc["summands"]):
        if not isinstance(item, dict) or "label" not in item or "basis" not in item:
            raise InputError(f"{name}: summand #{k} needs 'label' and 'basis'")
        label = item["label"]
        if not isinstance(label, str):
            raise InputError(f"{name}: summand #{k} label must be a string")
        summands.append((label, _basis_from_json(item["basis"], field, n, f"{name}/{label}")))
    try:
        side = make_decomposition(field, n, summands, doc.get("distinguished", 0))
    except InputError as exc:
        raise InputError(f"{name}: {exc}") from exc
    if not side.report.valid:
        raise InputError(f"{name}: not a direct-sum decomposition ({'; '.join(side.report.reasons)})")
    return side


def instance_to_json(inst):
    return {
        "field": inst.field.to_json(),
        "n": inst.n,
        "side1": _side_to_json(inst.side1),
        "side2": _side_to_json(inst.side2),
    }


def parse_instance(doc):
    """Validated :class:`RefinementInstance` from a decoded document or JSON text."""
    if isinstance(doc, (str, bytes)):
        doc = loads(doc)
    if not isinstance(doc, dict):
        raise InputError("instance must be a JSON object")
    for key in ("field", "n", "side1", "side2"):
        if key not in doc:
            raise InputError(f"instance is missing {key!r}")
    field = FieldSpec.from_json(doc["field"])
    n = doc["n"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise InputError("n must be a non-negative integer")
    side1 = _side_from_json(doc["side1"], field, n, "side1")
    side2 = _side_from_json(doc["side2"], field, n, "side2")
    return RefinementInstance(field, n, side1, side2)


def certificate_to_json(inst, cert):
    return {
        "field": inst.field.to_json(),
        "n": inst.n,
        "J0": sorted(cert.J0),
        "I0": sorted(cert.I0),
        "Y_basis": _basis_to_json(cert.Y),
        "complement_basis": _basis_to_json(cert.Y_complement),
        "report": [{"name": name, "pass": ok} for name, ok in cert.report],
    }


def parse_certificate(doc, inst):
    if isinstance(doc, (str, bytes)):
        doc = loads(doc)
    if not isinstance(doc, dict):
        raise InputError("certificate must be a JSON object")
    for key in ("J0", "I0", "Y_basis", "complement_basis"):
        if key not in doc:
            raise InputError(f"certificate is missing {key!r}")
    if "field" in doc and FieldSpec.from_json(doc["field"]) != inst.field:
        raise InputError("certificate field differs from the instance field")
    if "n" in doc and doc["n"] != inst.n:
        raise InputError("certificate dimension differs from the instance dimension")
    for key in ("J0", "I0"):
        if not isinstance(doc[key], list) or not all(isinstance(x, str) for x in doc[key]):
            raise InputError(f"{key} must be a list of labels")
    report = []
    for item in doc.get("report", []):
        if not isinstance(item, dict) or "name" not in item or "pass" not in item:
            raise InputError("report entries need 'name' and 'pass'")
        report.append((str(item["name"]), bool(item["pass"])))
    return RefinementCertificate(
        J0=tuple(sorted(doc["J0"])),
        I0=tuple(sorted(doc["I0"])),
        Y=_basis_from_json(doc["Y_basis"], inst.field, inst.n, "Y_basis"),
        Y_complement=_basis_from_json(doc["complement_basis"], inst.field, inst.n, "complement_basis"),
        report=tuple(report),
    )
