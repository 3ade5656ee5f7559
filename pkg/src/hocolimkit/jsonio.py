"""JSON schemas for categories, functors, simplicial sets and diagrams.

Identifiers may be arbitrary JSON values; since JSON object keys must be
strings, non-string identifiers are encoded as their compact JSON text and
decoded back on load (lists become tuples so they can be dict keys).
"""

import json

from . import fincat, sset
from .fincat import FinCat, Functor, Morphism, SchemaError, _skey
from .sset import SMap, SSet


def freeze(v):
    if isinstance(v, list):
        return tuple(freeze(x) for x in v)
    return v


def thaw(v):
    if isinstance(v, tuple):
        return [thaw(x) for x in v]
    return v


def encode_key(k):
    if isinstance(k, str):
        return k
    return json.dumps(thaw(k), sort_keys=True, separators=(",", ":"))


def decode_key(s):
    try:
        return freeze(json.loads(s))
    except (ValueError, TypeError):
        return s


def _decode_map(d):
    return {decode_key(k): freeze(v) for k, v in d.items()}


def _encode_map(d):
    return {encode_key(k): thaw(v) for k, v in
            sorted(d.items(), key=lambda kv: _skey(kv[0]))}


# ---------------------------------------------------------------------------
# categories and functors

def category_from_json(doc):
    if not isinstance(doc, dict):
        raise SchemaError("category document must be a JSON object")
    try:
        objects = [freeze(o) for o in doc["objects"]]
        morphisms = [(freeze(m["id"]), freeze(m["src"]), freeze(m["tgt"]))
                     for m in doc.get("morphisms", [])]
        compose = {(freeze(e["g"]), freeze(e["f"])): freeze(e["gf"])
                   for e in doc.get("compose", [])}
    except (KeyError, TypeError) as exc:
        raise SchemaError("malformed category document: %s" % exc)
    return fincat.make_fincat(objects, morphisms, compose)


def category_to_json(c):
    mors = [{"id": thaw(m), "src": thaw(c.src(m)), "tgt": thaw(c.tgt(m))}
            for m in c.mor_ids() if not c.is_identity(m)]
    compose = [{"g": thaw(g), "f": thaw(f), "gf": thaw(gf)}
               for (g, f), gf in sorted(c.compose.items(),
                                        key=lambda kv: _skey(kv[0]))
               if not (c.is_identity(g) or c.is_identity(f))]
    return {"objects": [thaw(o) for o in c.objects],
            "morphisms": mors, "compose": compose}


def functor_from_json(doc, source=None, target=None):
    if source is None:
        source = category_from_json(doc["source"])
    if target is None:
        target = category_from_json(doc["target"])
    f = Functor(source, target,
                _decode_map(doc["obj_map"]), _decode_map(doc["mor_map"]))
    # identity morphisms may be left implicit in the input
    mor_map = dict(f.mor_map)
    for o in source.objects:
        mor_map.setdefault(source.identity[o], target.identity[f.obj_map[o]])
    f = Functor(source, target, f.obj_map, mor_map)
    rep = fincat.validate_functor(f)
    if rep["status"] != "pass":
        raise SchemaError("invalid functor: %r" % (rep,))
    return f


def functor_to_json(f):
    return {"source": category_to_json(f.source),
            "target": category_to_json(f.target),
            "obj_map": _encode_map(f.obj_map),
            "mor_map": _encode_map({m: v for m, v in f.mor_map.items()
                                    if not f.source.is_identity(m)})}


# ---------------------------------------------------------------------------
# simplicial sets

def named_sset(name, cap):
    if name == "point":
        return sset.point(cap)
    kind, _, arg = name.partition(":")
    if kind == "delta" and arg:
        return sset.standard_simplex(int(arg), cap)
    if kind == "boundary" and arg:
        return sset.boundary_simplex(int(arg), cap)
    raise SchemaError("unknown named simplicial set %r" % (name,))


def sset_from_json(doc, cap=None):
    if isinstance(doc, str):
        if cap is None:
            raise SchemaError("named simplicial set %r needs a cap" % (doc,))
        return named_sset(doc, cap)
    try:
        c = int(doc["cap"])
        simplices = tuple(tuple(freeze(s) for s in level)
                          for level in doc["simplices"])
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError("malformed simplicial set document: %s" % exc)
    if len(simplices) != c + 1:
        raise SchemaError("expected %d simplex levels, found %d"
                          % (c + 1, len(simplices)))
    face, degeneracy = {}, {}
    for key, mp in doc.get("face", {}).items():
        n, i = (int(t) for t in key.split(","))
        face[(n, i)] = _decode_map(mp)
    for key, mp in doc.get("degeneracy", {}).items():
        n, j = (int(t) for t in key.split(","))
        degeneracy[(n, j)] = _decode_map(mp)
    x = SSet(c, simplices, face, degeneracy)
    sset.audit_sset(x)
    return x


def sset_to_json(x):
    return {"cap": x.cap,
            "simplices": [[thaw(s) for s in level] for level in x.simplices],
            "face": {"%d,%d" % (n, i): _encode_map(x.face[(n, i)])
                     for n in range(1, x.cap + 1) for i in range(n + 1)},
            "degeneracy": {"%d,%d" % (n, j): _encode_map(x.degeneracy[(n, j)])
                           for n in range(x.cap) for j in range(n + 1)}}


# ---------------------------------------------------------------------------
# diagrams

def diagram_from_json(doc, cap=None, load_ref=None):
    """Load a diagram; ``load_ref`` resolves string file references for the
    shape.  Identity arrows may be left implicit."""
    from . import replace
    shape_doc = doc["shape"]
    if isinstance(shape_doc, str):
        if load_ref is None:
            raise SchemaError("file reference %r not resolvable here"
                              % (shape_doc,))
        shape_doc = load_ref(shape_doc)
    shape = category_from_json(shape_doc)
    values = {}
    for key, vdoc in doc["values"].items():
        values[decode_key(key)] = sset_from_json(vdoc, cap=cap)
    caps = {v.cap for v in values.values()}
    if len(caps) != 1:
        raise SchemaError("diagram values must share a cap")
    arrows = {}
    for key, levels in doc.get("arrows", {}).items():
        m = decode_key(key)
        if m not in shape.morphisms:
            raise SchemaError("arrow %r is not a morphism of the shape"
                              % (m,))
        src, tgt = values[shape.src(m)], values[shape.tgt(m)]
        level = {int(n): _decode_map(mp) for n, mp in levels.items()}
        arrows[m] = SMap(src, tgt, level)
    for o in shape.objects:
        arrows.setdefault(shape.identity[o], sset.identity_smap(values[o]))
    dg = replace.Diagram(shape, values, arrows)
    replace.validate_diagram(dg)
    return dg


def diagram_to_json(dg):
    return {"shape": category_to_json(dg.shape),
            "values": {encode_key(o): sset_to_json(dg.values[o])
                       for o in dg.shape.objects},
            "arrows": {encode_key(m): {str(n): _encode_map(lv)
                                       for n, lv in sorted(
                                           dg.arrows[m].level.items())}
                       for m in dg.shape.mor_ids()
                       if not dg.shape.is_identity(m)}}


def dumps(doc):
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"
