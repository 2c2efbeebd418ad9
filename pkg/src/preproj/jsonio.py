"""JSON wire formats: rationals as "p/q" strings, everything else nested.

Formats:
  PLFunc        {"breakpoints": [["0","2/5"], ...]}
  BFunc         {"k": "2/5", "breakpoints": [...]}
  CurveModule   {"n": 5, "i": 2, "kind": "sub", "curve": ["2/5", ...]}
  GridPermuton  {"m": 5, "mass": [["0","1/5",...], ...]}        (row-major, y down)
  Sheet         {"k": "1/2", "up": BFunc, "down": BFunc}
  Sawtooth      {"a": "1/5", "b": "4/5", "teeth": [["1/5","2/5"],...],
                 "endpoints": [true, true]}
  Module        one of {"type": "simple", "x": ...}, {"type": "sawtooth", ...},
                {"type": "curve_module", ...}
"""

from __future__ import annotations

from typing import Any

from .errors import ParseError
from .finite import CurveModule, DiamondCurve, Kind
from .permuton import GridPermuton
from .plfunc import BFunc, PLFunc
from .rat import frac, rat_str
from .sheets import SawtoothDesc, Sheet, SimpleModule, sheet_new


def _need(obj: dict, key: str) -> Any:
    try:
        return obj[key]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"missing field {key!r}") from exc


def plfunc_to_json(f: PLFunc) -> dict:
    return {"breakpoints": [[rat_str(x), rat_str(y)] for x, y in f.breakpoints]}


def plfunc_from_json(obj: dict) -> PLFunc:
    pts = _need(obj, "breakpoints")
    return PLFunc((frac(x), frac(y)) for x, y in pts)


def bfunc_to_json(b: BFunc) -> dict:
    out = {"k": rat_str(b.k)}
    out.update(plfunc_to_json(b.f))
    return out


def bfunc_from_json(obj: dict) -> BFunc:
    return BFunc(frac(_need(obj, "k")), plfunc_from_json(obj))


def curve_module_to_json(m: CurveModule) -> dict:
    return {
        "n": m.n,
        "i": m.i,
        "kind": m.kind.value,
        "curve": [rat_str(v) for v in m.curve.values],
    }


def curve_module_from_json(obj: dict) -> CurveModule:
    kind_raw = _need(obj, "kind")
    try:
        kind = Kind(kind_raw)
    except ValueError as exc:
        raise ParseError(f"kind must be 'sub' or 'quot', got {kind_raw!r}") from exc
    curve = DiamondCurve(
        int(_need(obj, "i")), int(_need(obj, "n")), [frac(v) for v in _need(obj, "curve")]
    )
    return CurveModule(kind, curve)


def permuton_to_json(mu: GridPermuton) -> dict:
    return {"m": mu.m, "mass": [[rat_str(v) for v in row] for row in mu.mass]}


def permuton_from_json(obj: dict) -> GridPermuton:
    return GridPermuton(int(_need(obj, "m")), _need(obj, "mass"))


def sheet_to_json(s: Sheet) -> dict:
    return {
        "k": rat_str(s.k),
        "up": bfunc_to_json(s.up),
        "down": bfunc_to_json(s.down),
    }


def sheet_from_json(obj: dict) -> Sheet:
    return sheet_new(
        frac(_need(obj, "k")),
        bfunc_from_json(_need(obj, "up")),
        bfunc_from_json(_need(obj, "down")),
    )


def sawtooth_to_json(st: SawtoothDesc) -> dict:
    return {
        "a": rat_str(st.a),
        "b": rat_str(st.b),
        "teeth": [[rat_str(x), rat_str(v)] for x, v in st.teeth],
        "endpoints": list(st.endpoint_flags),
    }


def sawtooth_from_json(obj: dict) -> SawtoothDesc:
    flags = obj.get("endpoints", [True, True])
    if len(flags) != 2:
        raise ParseError("endpoints must be a pair of booleans")
    return SawtoothDesc(
        frac(_need(obj, "a")),
        frac(_need(obj, "b")),
        [(frac(x), frac(v)) for x, v in _need(obj, "teeth")],
        (bool(flags[0]), bool(flags[1])),
    )


def module_to_json(module) -> dict:
    if isinstance(module, SimpleModule):
        return {"type": "simple", "x": rat_str(module.x)}
    if isinstance(module, SawtoothDesc):
        return {"type": "sawtooth", **sawtooth_to_json(module)}
    if isinstance(module, CurveModule):
        return {"type": "curve_module", **curve_module_to_json(module)}
    raise ParseError(f"not a module descriptor: {module!r}")


def module_from_json(obj: dict):
    kind = _need(obj, "type")
    if kind == "simple":
        return SimpleModule(frac(_need(obj, "x")))
    if kind == "sawtooth":
        return sawtooth_from_json(obj)
    if kind == "curve_module":
        return curve_module_from_json(obj)
    raise ParseError(f"unknown module type {kind!r}")
