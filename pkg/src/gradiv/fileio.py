"""Canonical JSON file formats: galg/1 (algebras), pres/1 (presentations), gmap/1 (graded maps)."""

from __future__ import annotations

import json
import math

from .abgroups import AbelianGroup, GroupHom
from .constructions import Presentation
from .errors import BadInput, FormatError
from .galgebra import GradedAlgebra, make_algebra
from .isomaps import GradedMap
from .scalars import Scalar, euler_phi, format_rational, parse_rational

__all__ = [
    "dump_algebra",
    "load_algebra",
    "dump_presentation",
    "load_presentation",
    "dump_map",
    "load_map",
    "read_algebra",
    "write_text",
]


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False) + "\n"


def _loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON: {exc}") from exc


def _scalar_out(c: Scalar, N: int) -> list:
    return [format_rational(x) for x in c.coerce(N).coeffs]


def _scalar_in(value, N: int, where: str) -> Scalar:
    if isinstance(value, (int, str)):
        try:
            return Scalar(parse_rational(value), N)
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"bad rational {value!r}", where) from exc
    if not isinstance(value, list) or len(value) != euler_phi(N):
        raise FormatError(f"scalar must be a list of {euler_phi(N)} rational strings", where)
    try:
        return Scalar([parse_rational(x) for x in value], N)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise FormatError(f"bad rational in scalar {value!r}", where) from exc


def _sparse_out(v: dict, N: int) -> list:
    return [{"k": k, "c": _scalar_out(c, N)} for k, c in sorted(v.items())]


def _sparse_in(items, N: int, where: str) -> dict:
    if not isinstance(items, list):
        raise FormatError("expected a list of {k, c} terms", where)
    out = {}
    for t in items:
        if not isinstance(t, dict) or not isinstance(t.get("k"), int):
            raise FormatError("term needs an integer 'k'", where)
        out[t["k"]] = _scalar_in(t.get("c"), N, where)
    return out


def _require(obj: dict, key: str, kind, where: str | None = None):
    if key not in obj:
        raise FormatError(f"missing field '{key}'", where or key)
    value = obj[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise FormatError(f"field '{key}' has the wrong type", where or key)
    return value


def _group_in(value, where: str) -> AbelianGroup:
    if not isinstance(value, list) or not value or not all(isinstance(d, int) and d >= 1 for d in value):
        raise FormatError("group must be a nonempty list of positive factor orders", where)
    return AbelianGroup(tuple(value))


def _element_in(G: AbelianGroup, value, where: str) -> tuple:
    if not isinstance(value, list) or len(value) != G.rank or not all(isinstance(x, int) for x in value):
        raise FormatError(f"group element must be a list of {G.rank} integers", where)
    if any(not 0 <= x < d for x, d in zip(value, G.orders)):
        raise FormatError(f"residues {value} out of range for group {G}", where)
    return tuple(value)


def _conductor_in(obj: dict, default: int | None = None) -> int:
    if "conductor" not in obj and default is not None:
        return default
    N = _require(obj, "conductor", int)
    if N <= 0 or N % 8:
        raise FormatError("conductor must be a positive multiple of 8", "conductor")
    return N


# -- galg/1 -----------------------------------------------------------------------

def dump_algebra(R: GradedAlgebra) -> str:
    N = R.conductor
    mul = []
    for i, row in enumerate(R.table):
        for j, terms in enumerate(row):
            if terms:
                mul.append({"i": i, "j": j, "terms": [{"k": k, "c": _scalar_out(c, N)} for k, c in sorted(terms)]})
    obj = {
        "format": "galg/1",
        "conductor": N,
        "group": list(R.group.orders),
        "degrees": [list(g) for g in R.degrees],
        "unit": [_scalar_out(c, N) for c in R.unit],
        "mul": mul,
    }
    meta = _meta_out(R)
    if meta:
        obj["meta"] = meta
    return _dumps(obj)


def _meta_out(R: GradedAlgebra) -> dict:
    N = R.conductor
    meta = {}
    if "name" in R.meta:
        meta["name"] = R.meta["name"]
    if R.meta.get("generators"):
        meta["generators"] = list(R.meta["generators"])
    if R.meta.get("centroid", "R") != "R":
        meta["centroid"] = R.meta["centroid"]
        meta["complex_unit"] = _sparse_out(R.to_sparse(R.meta["complex_unit"]), N)
    if R.meta.get("frame"):
        meta["frame"] = [
            {"degree": list(g), "vector": _sparse_out(R.to_sparse(v), N)}
            for g, v in sorted(R.meta["frame"].items())
        ]
    return meta


def load_algebra(text: str) -> GradedAlgebra:
    obj = _loads(text)
    if not isinstance(obj, dict):
        raise FormatError("top level must be an object")
    if obj.get("format") != "galg/1":
        raise FormatError("expected \"format\": \"galg/1\"", "format")
    N = _conductor_in(obj)
    G = _group_in(obj.get("group"), "group")
    degrees = [_element_in(G, g, f"degrees[{n}]") for n, g in enumerate(_require(obj, "degrees", list))]
    dim = len(degrees)
    if dim == 0:
        raise FormatError("algebra must have positive dimension", "degrees")
    unit_raw = _require(obj, "unit", list)
    if len(unit_raw) != dim:
        raise FormatError(f"unit has {len(unit_raw)} entries, expected {dim}", "unit")
    unit = [_scalar_in(c, N, f"unit[{n}]") for n, c in enumerate(unit_raw)]
    table = [[[] for _ in range(dim)] for _ in range(dim)]
    for n, entry in enumerate(_require(obj, "mul", list)):
        where = f"mul[{n}]"
        if not isinstance(entry, dict):
            raise FormatError("entry must be an object", where)
        i, j = entry.get("i"), entry.get("j")
        if not (isinstance(i, int) and isinstance(j, int) and 0 <= i < dim and 0 <= j < dim):
            raise FormatError("entry needs indices i, j in range", where)
        if table[i][j]:
            raise FormatError(f"duplicate entry for ({i}, {j})", where)
        for t in _require(entry, "terms", list, where):
            if not isinstance(t, dict) or not isinstance(t.get("k"), int) or not 0 <= t["k"] < dim:
                raise FormatError("term needs an index k in range", where)
            table[i][j].append((t["k"], _scalar_in(t.get("c"), N, where)))
    meta = _meta_in(obj.get("meta", {}), N, G, dim)
    try:
        return make_algebra(G, degrees, unit, table, N, meta)
    except BadInput as exc:
        raise FormatError(str(exc)) from exc


def _meta_in(meta, N: int, G: AbelianGroup, dim: int) -> dict:
    if not isinstance(meta, dict):
        raise FormatError("meta must be an object", "meta")
    out = {}
    if "name" in meta:
        out["name"] = str(meta["name"])
    if "generators" in meta:
        gens = meta["generators"]
        if not isinstance(gens, list) or not all(isinstance(g, int) and 0 <= g < dim for g in gens):
            raise FormatError("generators must be basis indices", "meta.generators")
        out["generators"] = gens
    if "centroid" in meta:
        if meta["centroid"] not in ("R", "C"):
            raise FormatError("centroid must be R or C", "meta.centroid")
        out["centroid"] = meta["centroid"]
        out["complex_unit"] = _sparse_in(meta.get("complex_unit"), N, "meta.complex_unit")
    if "frame" in meta:
        frame = {}
        for n, item in enumerate(meta["frame"]):
            where = f"meta.frame[{n}]"
            if not isinstance(item, dict):
                raise FormatError("frame entry must be an object", where)
            frame[_element_in(G, item.get("degree"), where)] = _sparse_in(item.get("vector"), N, where)
        out["frame"] = frame
    return out


# -- pres/1 -------------------------------------------------------------------------

def dump_presentation(P: Presentation) -> str:
    N = P.conductor()
    obj = {
        "format": "pres/1",
        "conductor": N,
        "group": list(P.group.orders),
        "degrees": [list(P.group.element(g)) for g in P.degrees],
        "powers": list(P.powers),
        "power_scalars": [_scalar_out(Scalar(s, N), N) for s in P.power_scalars],
        "comm": [[i, j, _scalar_out(Scalar(c, N), N)] for (i, j), c in sorted(P.comm.items())],
    }
    if P.name:
        obj["name"] = P.name
    return _dumps(obj)


def load_presentation(text: str) -> Presentation:
    obj = _loads(text)
    if not isinstance(obj, dict):
        raise FormatError("top level must be an object")
    if "format" in obj and obj["format"] != "pres/1":
        raise FormatError("expected \"format\": \"pres/1\"", "format")
    N = _conductor_in(obj, 8)
    G = _group_in(obj.get("group"), "group")
    degrees = [_element_in(G, g, f"degrees[{n}]") for n, g in enumerate(_require(obj, "degrees", list))]
    powers = _require(obj, "powers", list)
    if len(powers) != len(degrees) or not all(isinstance(m, int) and m >= 1 for m in powers):
        raise FormatError("powers must list one positive integer per generator", "powers")
    scalars_raw = _require(obj, "power_scalars", list)
    if len(scalars_raw) != len(degrees):
        raise FormatError("power_scalars must list one scalar per generator", "power_scalars")
    scalars = [_scalar_in(s, N, f"power_scalars[{n}]") for n, s in enumerate(scalars_raw)]
    comm = {}
    for n, item in enumerate(obj.get("comm", [])):
        where = f"comm[{n}]"
        if not (isinstance(item, list) and len(item) == 3 and all(isinstance(x, int) for x in item[:2])):
            raise FormatError("comm entries are [i, j, scalar]", where)
        i, j = item[0], item[1]
        if not (0 <= i < len(degrees) and 0 <= j < len(degrees)) or i == j:
            raise FormatError("comm indices out of range", where)
        comm[(i, j)] = _scalar_in(item[2], N, where)
    return Presentation(G, degrees, powers, scalars, comm, str(obj.get("name", "")))


# -- gmap/1 -----------------------------------------------------------------------------

def dump_map(f: GradedMap, B: GradedAlgebra) -> str:
    N = B.conductor
    z = Scalar(0, N)
    obj = {
        "format": "gmap/1",
        "conductor": N,
        "alpha": [list(im) for im in f.alpha.images],
        "images": [[_scalar_out(img.get(k, z), N) for k in range(B.dim)] for img in f.images],
    }
    return _dumps(obj)


def load_map(text: str, A: GradedAlgebra, B: GradedAlgebra) -> GradedMap:
    obj = _loads(text)
    if not isinstance(obj, dict):
        raise FormatError("top level must be an object")
    if "format" in obj and obj["format"] != "gmap/1":
        raise FormatError("expected \"format\": \"gmap/1\"", "format")
    N = _conductor_in(obj, B.conductor)
    alpha_raw = _require(obj, "alpha", list)
    if len(alpha_raw) != A.group.rank:
        raise FormatError(f"alpha needs {A.group.rank} generator images", "alpha")
    images = [_element_in(B.group, g, f"alpha[{n}]") for n, g in enumerate(alpha_raw)]
    try:
        alpha = GroupHom(A.group, B.group, tuple(images))
    except BadInput as exc:
        raise FormatError(str(exc), "alpha") from exc
    rows = _require(obj, "images", list)
    if len(rows) != A.dim:
        raise FormatError(f"images needs {A.dim} rows", "images")
    out = []
    for n, row in enumerate(rows):
        where = f"images[{n}]"
        if not isinstance(row, list) or len(row) != B.dim:
            raise FormatError(f"image must have {B.dim} coordinates", where)
        vec = {}
        for k, c in enumerate(row):
            s = _scalar_in(c, N, where)
            if s:
                vec[k] = s.coerce(math.lcm(N, B.conductor)) if N != B.conductor else s
        out.append(vec)
    return GradedMap(alpha, tuple(out))


def read_algebra(path: str) -> GradedAlgebra:
    try:
        with open(path, encoding="utf-8") as fh:
            return load_algebra(fh.read())
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}", path) from exc


def write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)

