"""JSON file formats: complexes, maps, chains, cochains and surface bundles.

Parse failures and references to missing simplices raise InputError (CLI exit
code 3); structurally valid data violating a mathematical invariant raises
InvariantError (exit code 2).
"""

from __future__ import annotations

import json
from typing import Any

from .abelian import CoeffGroup, parse_group
from .complexes import (Chain, Simplex, SimplicialComplex, SimplicialMap,
                        build_complex)
from .errors import InputError
from .homology import Cochain
from .surfaces import ClosedSurface, CobordismSurface, XSurface


def _load_json(path: str) -> Any:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None


def _need(data: dict, key: str, where: str):
    if not isinstance(data, dict) or key not in data:
        raise InputError(f"{where}: missing key {key!r}")
    return data[key]


def complex_from_dict(data: dict, where: str = "complex") -> SimplicialComplex:
    vertices = _need(data, "vertices", where)
    maximal = _need(data, "maximal_simplices", where)
    if not isinstance(vertices, int) or vertices < 0:
        raise InputError(f"{where}: 'vertices' must be a non-negative integer")
    if not isinstance(maximal, list):
        raise InputError(f"{where}: 'maximal_simplices' must be a list")
    return build_complex([tuple(s) for s in maximal], vertex_count=vertices)


def complex_to_dict(X: SimplicialComplex) -> dict:
    top = []
    covered: set[Simplex] = set()
    for k in range(X.dim, -1, -1):
        for s in X.simplices(k):
            if s not in covered:
                top.append(list(s.verts))
                covered.add(s)
                if k > 0:
                    stack = list(s.faces())
                    while stack:
                        f = stack.pop()
                        if f not in covered:
                            covered.add(f)
                            if f.dim > 0:
                                stack.extend(f.faces())
    return {"vertices": X.vertex_count, "maximal_simplices": top}


def load_complex(path: str) -> SimplicialComplex:
    return complex_from_dict(_load_json(path), path)


def map_from_dict(data: dict, domain: SimplicialComplex, codomain: SimplicialComplex,
                  where: str = "map") -> SimplicialMap:
    vm = _need(data, "vertex_map", where)
    return SimplicialMap(domain, codomain, vm)


def chain_from_dict(data: dict, X: SimplicialComplex, where: str = "chain") -> Chain:
    dim = _need(data, "dim", where)
    terms = _need(data, "terms", where)
    coeffs: dict[Simplex, int] = {}
    for term in terms:
        verts = tuple(_need(term, "simplex", where))
        coeff = _need(term, "coeff", where)
        s = Simplex(verts)
        if not X.has(s):
            raise InputError(f"{where}: chain references missing simplex {s!r}")
        coeffs[s] = coeffs.get(s, 0) + int(coeff)
    return Chain(dim, coeffs)


def chain_to_dict(c: Chain) -> dict:
    return {"dim": c.dim,
            "terms": [{"simplex": list(s.verts), "coeff": v}
                      for s, v in sorted(c.coeffs.items())]}


def load_chain(path: str, X: SimplicialComplex) -> Chain:
    return chain_from_dict(_load_json(path), X, path)


def cochain_from_dict(data: dict, X: SimplicialComplex,
                      where: str = "cochain") -> Cochain:
    degree = _need(data, "degree", where)
    group = parse_group(str(_need(data, "group", where)))
    values = {}
    for item in _need(data, "values", where):
        verts = tuple(_need(item, "simplex", where))
        s = Simplex(verts)
        if not X.has(s):
            raise InputError(f"{where}: cochain references missing simplex {s!r}")
        values[s] = group.parse(str(_need(item, "value", where)))
    return Cochain(X, degree, group, values)


def load_cochain(path: str, X: SimplicialComplex) -> Cochain:
    return cochain_from_dict(_load_json(path), X, path)


def cochain_to_dict(f: Cochain) -> dict:
    return {"degree": f.degree, "group": f.group.spec_string(),
            "values": [{"simplex": list(s.verts), "value": f.group.format(v.value)}
                       for s, v in sorted(f.values.items())]}


def surface_from_dict(data: dict, base: SimplicialComplex,
                      where: str = "surface") -> XSurface:
    """A surface bundle: its own complex, a map into the base, the cycle and
    optional boundary circle lists.  The result is eagerly verified."""
    scomplex = complex_from_dict(_need(data, "complex", where), f"{where}.complex")
    smap = map_from_dict(_need(data, "map", where), scomplex, base, f"{where}.map")
    cycle = chain_from_dict(_need(data, "cycle", where), scomplex, f"{where}.cycle")
    inputs = tuple(tuple(c) for c in data.get("inputs", []))
    outputs = tuple(tuple(c) for c in data.get("outputs", []))
    if inputs or outputs:
        surf: ClosedSurface | CobordismSurface = CobordismSurface(
            scomplex, inputs, outputs, cycle)
    else:
        surf = ClosedSurface(scomplex, cycle)
    xs = XSurface(surf, smap)
    xs.verify()
    return xs


def load_surface(path: str, base: SimplicialComplex) -> XSurface:
    return surface_from_dict(_load_json(path), base, path)


def surface_to_dict(g: XSurface) -> dict:
    data = {
        "complex": complex_to_dict(g.surface.complex),
        "map": {"vertex_map": list(g.map.vertex_map)},
        "cycle": chain_to_dict(g.surface.cycle),
    }
    if isinstance(g.surface, CobordismSurface):
        data["inputs"] = [list(c) for c in g.surface.input_circles]
        data["outputs"] = [list(c) for c in g.surface.output_circles]
    return data


def load_matrix(path: str) -> list[list[int]]:
    data = _load_json(path)
    rows = _need(data, "rows", path)
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise InputError(f"{path}: 'rows' must be a list of integer rows")
    widths = {len(r) for r in rows}
    if len(widths) > 1:
        raise InputError(f"{path}: ragged matrix rows")
    return [[int(x) for x in r] for r in rows]


def parse_coeff_group(text: str) -> CoeffGroup:
    return parse_group(text)
