"""JSON round-tripping for every on-disk object.

Rationals travel as strings ("p/q", or "p" when integral) so no consumer can
lose precision; number fields carry their minimal polynomial and isolating
interval; loading re-validates certificates. Dumps are canonical (sorted
keys) so identical inputs produce byte-identical files.
"""

import json
from fractions import Fraction

from .config import DEFAULT
from .errors import InvalidInput
from .generic import AmbientModel, ExtendedPeriod
from .linalg import Subspace
from .monodromy import Representation
from .numfield import QQ, ComplexAlg, NumberField, nf_create
from .poly import Poly
from .surface import PolygonSurface, SquareTiled


def rat_str(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else \
        f"{q.numerator}/{q.denominator}"


def rat_parse(s):
    return Fraction(s)


def field_to_json(K):
    return {"minpoly": [rat_str(c) for c in K.minpoly.coeffs],
            "embedding": [rat_str(K.interval0[0]), rat_str(K.interval0[1])]}


def field_from_json(obj, config=DEFAULT):
    coeffs = [rat_parse(c) for c in obj["minpoly"]]
    lo, hi = (rat_parse(x) for x in obj["embedding"])
    return nf_create(Poly(coeffs), (lo, hi), config)


def elem_to_json(e):
    return [rat_str(c) for c in e.coords]


def elem_from_json(arr, K):
    return K.element([rat_parse(c) for c in arr])


def complex_to_json(z):
    return [elem_to_json(z.re), elem_to_json(z.im)]


def complex_from_json(pair, K):
    return ComplexAlg(elem_from_json(pair[0], K), elem_from_json(pair[1], K))


def surface_to_json(S):
    return {
        "field": field_to_json(S.field),
        "polygons": [[complex_to_json(z) for z in poly]
                     for poly in S.polygons],
        "gluings": [[[a[0], a[1]], [b[0], b[1]]] for a, b in S.gluings],
    }


def square_tiled_to_json(T):
    return {"squares": T.n, "h": list(T.h), "v": list(T.v)}


def surface_from_json(obj, config=DEFAULT):
    """Load either a polygon surface or square-tiled data."""
    if "squares" in obj:
        return SquareTiled(int(obj["squares"]),
                           tuple(int(x) for x in obj["h"]),
                           tuple(int(x) for x in obj["v"]))
    K = field_from_json(obj["field"], config)
    polys = [[complex_from_json(z, K) for z in poly]
             for poly in obj["polygons"]]
    gluings = [((int(a[0]), int(a[1])), (int(b[0]), int(b[1])))
               for a, b in obj["gluings"]]
    return PolygonSurface(K, polys, gluings)


def subspace_to_json(V, K, is_complex):
    vectors = []
    for row in V.rows:
        vec = []
        for e in row:
            if is_complex:
                vec.append(complex_to_json(e))
            elif isinstance(e, Fraction):
                vec.append([rat_str(e)])
            else:
                vec.append(elem_to_json(e))
        vectors.append(vec)
    return {"field": field_to_json(K), "complex": bool(is_complex),
            "vectors": vectors}


def subspace_from_json(obj, config=DEFAULT):
    """Returns (Subspace, field, is_complex)."""
    K = field_from_json(obj["field"], config)
    is_complex = bool(obj.get("complex", False))
    rows = []
    for vec in obj["vectors"]:
        row = []
        for entry in vec:
            if is_complex:
                row.append(complex_from_json(entry, K))
            else:
                row.append(elem_from_json(entry, K))
        rows.append(row)
    n = len(obj["vectors"][0]) if obj["vectors"] else 0
    return Subspace(n, rows), K, is_complex


def representation_to_json(R, pa=None):
    out = {"dim": R.dim, "generators": [[list(r) for r in G]
                                        for G in R.generators]}
    if pa is not None:
        out["pa"] = [list(r) for r in pa]
    return out


def representation_from_json(obj):
    dim = int(obj["dim"])
    gens = [[[int(c) for c in row] for row in G] for G in obj["generators"]]
    pa = None
    if obj.get("pa") is not None:
        pa = [[int(c) for c in row] for row in obj["pa"]]
    return Representation(dim, gens), pa


def periods_to_json(zs, K, symbols=None):
    syms = symbols if symbols is not None else sorted(
        {s for z in zs for s in z.trans})
    entries = []
    for z in zs:
        entries.append({
            "alg": complex_to_json(z.alg),
            "trans": {s: [rat_str(a), rat_str(b)]
                      for s, (a, b) in sorted(z.trans.items())},
        })
    return {"field": field_to_json(K), "symbols": list(syms),
            "entries": entries}


def periods_from_json(obj, config=DEFAULT):
    """Returns (list of ExtendedPeriod, field)."""
    K = field_from_json(obj["field"], config)
    declared = set(obj.get("symbols", []))
    zs = []
    for entry in obj["entries"]:
        trans = {}
        for sym, pair in entry.get("trans", {}).items():
            if sym not in declared:
                raise InvalidInput(f"undeclared symbol {sym!r}")
            trans[sym] = (rat_parse(pair[0]), rat_parse(pair[1]))
        zs.append(ExtendedPeriod(alg=complex_from_json(entry["alg"], K),
                                 trans=trans))
    return zs, K


def ambient_to_json(M):
    is_complex = False
    return {
        "n": M.n,
        "kM": field_to_json(M.k_M),
        "relations": subspace_to_json(M.relations, M.k_M, is_complex),
        "genus": M.genus,
    }


def ambient_from_json(obj, config=DEFAULT):
    kM = field_from_json(obj["kM"], config)
    n = int(obj["n"])
    rel_obj = obj["relations"]
    if rel_obj["vectors"]:
        relations, _, _ = subspace_from_json(rel_obj, config)
    else:
        relations = Subspace.zero(n)
    return AmbientModel(n=n, k_M=kM, relations=relations,
                        genus=int(obj["genus"]))


def dumps_canonical(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def load_json(path):
    with open(path) as fh:
        return json.load(fh)


def save_json(path, obj):
    with open(path, "w") as fh:
        fh.write(dumps_canonical(obj))
