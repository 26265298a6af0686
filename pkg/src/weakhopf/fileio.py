"""JSON file formats: algebras with R-matrices, group/groupoid tables, and user
supplied right modules over endomorphism algebras.

Algebra files look like::

    {"format": "weakhopf-algebra", "version": 1,
     "field": {"kind": "cyclotomic", "order": 3},
     "dim": 2, "labels": ["a", "b"],
     "mult": [[i, j, k, "c"], ...],        e_i e_j = sum c e_k
     "unit": [[k, "c"], ...],
     "comult": [[i, j, k, "c"], ...],      Delta(e_i) = sum c e_j (x) e_k
     "counit": [[i, "c"], ...],
     "antipode": [[i, j, "c"], ...],       S(e_i) = sum c e_j
     "rmatrix": [[i, j, "c"], ...]}        R = sum c e_i (x) e_j

Coefficients are strings in the declared field ("-1/2", "1 + z^2").
"""

from __future__ import annotations

import hashlib
import json

from .builders import InvalidTable, load_table
from .linalg import Matrix
from .scalars import FieldSpec
from .wha import WeakHopfAlgebra

ALGEBRA_FORMAT = "weakhopf-algebra"
MODULES_FORMAT = "weakhopf-user-modules"
VERSION = 1


class ParseError(ValueError):
    pass


def digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def _idx(x, n, what):
    if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < n:
        raise ParseError(f"{what}: index {x!r} out of range 0..{n - 1}")
    return x


def _coef(field, s, what):
    if not isinstance(s, str):
        raise ParseError(f"{what}: coefficient must be a string, got {s!r}")
    try:
        return field.parse(s)
    except (ValueError, TypeError) as exc:
        raise ParseError(f"{what}: {exc}") from exc


def _entries(d, key, arity, n, field):
    rows = d.get(key)
    if not isinstance(rows, list):
        raise ParseError(f"missing or malformed '{key}'")
    out = []
    for row in rows:
        if not isinstance(row, list) or len(row) != arity + 1:
            raise ParseError(f"{key}: expected {arity} indices and a coefficient, got {row!r}")
        idx = tuple(_idx(x, n, key) for x in row[:arity])
        out.append((idx, _coef(field, row[arity], key)))
    return out


def algebra_from_dict(d):
    """Returns (H, R)."""
    if not isinstance(d, dict) or d.get("format") != ALGEBRA_FORMAT:
        raise ParseError(f"not a {ALGEBRA_FORMAT} document")
    if d.get("version") != VERSION:
        raise ParseError(f"unsupported version {d.get('version')!r}")
    try:
        field = FieldSpec.from_dict(d.get("field", {"kind": "rationals"}))
    except (ValueError, TypeError) as exc:
        raise ParseError(f"field: {exc}") from exc
    n = d.get("dim")
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ParseError("dim must be a positive integer")

    def acc(target, key, value):
        if key in target:
            target[key] = target[key] + value
        else:
            target[key] = value

    mult = {}
    for (i, j, k), c in _entries(d, "mult", 3, n, field):
        acc(mult.setdefault((i, j), {}), k, c)
    unit = {}
    for (k,), c in _entries(d, "unit", 1, n, field):
        acc(unit, k, c)
    comult = [{} for _ in range(n)]
    for (i, j, k), c in _entries(d, "comult", 3, n, field):
        acc(comult[i], (j, k), c)
    counit = {}
    for (k,), c in _entries(d, "counit", 1, n, field):
        acc(counit, k, c)
    antipode = [{} for _ in range(n)]
    for (i, j), c in _entries(d, "antipode", 2, n, field):
        acc(antipode[i], j, c)
    R = {}
    for (i, j), c in _entries(d, "rmatrix", 2, n, field):
        acc(R, (i, j), c)
    labels = d.get("labels")
    if labels is not None and (not isinstance(labels, list) or len(labels) != n):
        raise ParseError("labels must list one name per basis element")
    H = WeakHopfAlgebra(n, mult, unit, comult, counit, antipode, field, labels)
    return H, {k: v for k, v in R.items() if v}


def algebra_to_dict(H, R):
    f = H.field.format
    d = {"format": ALGEBRA_FORMAT, "version": VERSION, "field": H.field.to_dict(), "dim": H.dim,
         "labels": list(H.labels)}
    d["mult"] = [[i, j, k, f(c)] for (i, j), v in sorted(H.mult.items()) for k, c in sorted(v.items()) if c]
    d["unit"] = [[k, f(c)] for k, c in sorted(H.unit.items()) if c]
    d["comult"] = [[i, j, k, f(c)] for i, t in enumerate(H.comult) for (j, k), c in sorted(t.items()) if c]
    d["counit"] = [[k, f(c)] for k, c in sorted(H.counit.items()) if c]
    d["antipode"] = [[i, j, f(c)] for i, v in enumerate(H.antipode) for j, c in sorted(v.items()) if c]
    d["rmatrix"] = [[i, j, f(c)] for (i, j), c in sorted(R.items()) if c]
    return d


def dumps(d):
    """Canonical text: one sparse entry per line, sorted keys, trailing newline."""
    lines = ["{"]
    keys = list(d)
    for n, key in enumerate(keys):
        value = d[key]
        sep = "," if n < len(keys) - 1 else ""
        if isinstance(value, list) and value and isinstance(value[0], list):
            lines.append(f"  {json.dumps(key)}: [")
            for m, row in enumerate(value):
                lines.append(f"    {json.dumps(row)}" + ("," if m < len(value) - 1 else ""))
            lines.append(f"  ]{sep}")
        else:
            lines.append(f"  {json.dumps(key)}: {json.dumps(value)}{sep}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def loads_json(text, what="input"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{what}: invalid JSON: {exc}") from exc


def read_algebra(path):
    """Returns (H, R, raw bytes)."""
    with open(path, "rb") as fh:
        raw = fh.read()
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path}: not UTF-8") from exc
    H, R = algebra_from_dict(loads_json(text, str(path)))
    return H, R, raw


def write_algebra(path, H, R):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(algebra_to_dict(H, R)))


def read_table(path):
    with open(path, "rb") as fh:
        raw = fh.read()
    d = loads_json(raw.decode("utf-8"), str(path))
    try:
        return load_table(d), raw
    except InvalidTable as exc:
        raise ParseError(f"{path}: {exc}") from exc


def write_table(path, table):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(table.to_dict(), fh, indent=1)
        fh.write("\n")


# -- user modules -------------------------------------------------------------------

def modules_to_dict(entries, field):
    """``entries``: list of (component, block, RightAModule)."""
    f = field.format
    mods = []
    for comp, block, U in entries:
        mats = [[[r, c, f(x)] for c, col in enumerate(m.cols) for r, x in sorted(col.items()) if x]
                for m in U.mats]
        mods.append({"component": comp, "block": block, "dim": U.dim, "action": mats})
    return {"format": MODULES_FORMAT, "version": VERSION, "field": field.to_dict(), "modules": mods}


def modules_from_dict(d, field):
    """Returns {(component, block): factory(EndAlgebra) -> RightAModule}."""
    from .comod import RightAModule
    if not isinstance(d, dict) or d.get("format") != MODULES_FORMAT or d.get("version") != VERSION:
        raise ParseError(f"not a {MODULES_FORMAT} v{VERSION} document")
    out = {}
    for entry in d.get("modules", []):
        try:
            comp, block, dim = int(entry["component"]), int(entry["block"]), int(entry["dim"])
            mats = []
            for m in entry["action"]:
                cols = [{} for _ in range(dim)]
                for r, c, x in m:
                    cols[_idx(c, dim, "action")][_idx(r, dim, "action")] = _coef(field, x, "action")
                mats.append(Matrix(dim, dim, cols))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed module entry: {exc}") from exc

        def factory(E, mats=mats, dim=dim, comp=comp, block=block):
            if len(mats) != E.dim:
                raise ParseError(f"module ({comp}, {block}) gives {len(mats)} matrices, "
                                 f"the algebra has dimension {E.dim}")
            return RightAModule(E, dim, mats, f"U[{comp},{block}]")

        out[(comp, block)] = factory
    return out


def read_modules(path, field):
    with open(path, "rb") as fh:
        raw = fh.read()
    return modules_from_dict(loads_json(raw.decode("utf-8"), str(path)), field), raw
