"""Finite categories given by explicit composition tables, plus functors,
products, opposites, comma categories and nerves.

Objects and morphism ids are arbitrary hashables.  Categories built from
JSON use strings; categories built by the constructors here use tuples.
Identities are synthesized with id ``("id", obj)`` (or ``"id_<obj>"`` for
string objects) and the composition table is completed with the forced
identity composites, so ``compose`` is total on composable pairs.
"""

from dataclasses import dataclass, field


class SchemaError(ValueError):
    """Malformed category / functor / simplicial-set data."""


def _skey(x):
    # stable sort key for heterogeneous hashables
    return repr(x)


@dataclass(frozen=True, eq=False)
class Morphism:
    id: object
    src: object
    tgt: object


@dataclass(frozen=True, eq=False)
class FinCat:
    objects: tuple
    morphisms: dict        # mor id -> Morphism
    identity: dict         # object -> mor id
    compose: dict          # (g id, f id) -> (g.f) id, total on composable pairs

    def src(self, m):
        return self.morphisms[m].src

    def tgt(self, m):
        return self.morphisms[m].tgt

    def is_identity(self, m):
        return self.identity[self.morphisms[m].src] == m

    def mor_ids(self):
        return sorted(self.morphisms, key=_skey)

    def hom(self, a, b):
        return [m for m in self.mor_ids()
                if self.morphisms[m].src == a and self.morphisms[m].tgt == b]

    def __repr__(self):
        return "FinCat(%d objects, %d morphisms)" % (
            len(self.objects), len(self.morphisms))


def make_fincat(objects, morphisms, compose):
    """Build a FinCat from non-identity data, synthesizing identities.

    ``morphisms`` is an iterable of (id, src, tgt) triples not containing
    identities; ``compose`` maps (g, f) -> gf for non-identity pairs.
    """
    objects = tuple(sorted(objects, key=_skey))
    mors = {}
    for (mid, src, tgt) in morphisms:
        if mid in mors:
            raise SchemaError("duplicate morphism id %r" % (mid,))
        if src not in objects or tgt not in objects:
            raise SchemaError("morphism %r has unknown endpoint" % (mid,))
        mors[mid] = Morphism(mid, src, tgt)
    identity = {}
    for o in objects:
        iid = "id_%s" % o if isinstance(o, str) else ("id", o)
        if iid in mors:
            raise SchemaError("reserved identity id %r already used" % (iid,))
        mors[iid] = Morphism(iid, o, o)
        identity[o] = iid
    table = dict(compose)
    for m, rec in mors.items():
        table[(identity[rec.tgt], m)] = m
        table[(m, identity[rec.src])] = m
    return FinCat(objects, mors, identity, table)


def validate_category(c):
    """Check identity, associativity and typing axioms by enumeration.

    Returns a dict with ``"status": "pass"`` or the first violation found.
    """
    def fail(kind, **data):
        return {"status": "fail", "violation": kind, **data}

    for o in c.objects:
        i = c.identity.get(o)
        if i not in c.morphisms or c.morphisms[i].src != o or c.morphisms[i].tgt != o:
            return fail("bad-identity", object=o)
    mids = c.mor_ids()
    composable = []
    for g in mids:
        for f in mids:
            if c.src(g) == c.tgt(f):
                composable.append((g, f))
                gf = c.compose.get((g, f))
                if gf is None:
                    return fail("missing-composite", g=g, f=f)
                if c.src(gf) != c.src(f) or c.tgt(gf) != c.tgt(g):
                    return fail("ill-typed-composite", g=g, f=f, gf=gf)
            elif (g, f) in c.compose:
                return fail("non-composable-entry", g=g, f=f)
    for f in mids:
        if c.compose[(c.identity[c.tgt(f)], f)] != f:
            return fail("left-identity", f=f)
        if c.compose[(f, c.identity[c.src(f)])] != f:
            return fail("right-identity", f=f)
    for (g, f) in composable:
        gf = c.compose[(g, f)]
        for h in mids:
            if c.src(h) == c.tgt(g):
                hg = c.compose[(h, g)]
                if c.compose[(h, gf)] != c.compose[(hg, f)]:
                    return fail("associativity", h=h, g=g, f=f)
    return {"status": "pass", "objects": len(c.objects),
            "morphisms": len(c.morphisms)}


# ---------------------------------------------------------------------------
# constructors

def poset_category(n):
    """The category [n] of the ordered set 0 < 1 < ... < n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    objects = list(range(n + 1))
    mors = [(("le", i, j), i, j) for i in objects for j in objects if i < j]
    compose = {}
    for i in objects:
        for j in objects:
            for k in objects:
                if i < j < k:
                    compose[(("le", j, k), ("le", i, j))] = ("le", i, k)
    return make_fincat(objects, mors, compose)


def discrete_category(objects):
    return make_fincat(objects, [], {})


def span_category():
    """Three objects a <- b -> c with the two legs l, r."""
    return make_fincat(["a", "b", "c"],
                       [("l", "b", "a"), ("r", "b", "c")], {})


def product_category(i, j):
    """Product category I x J (objects and morphisms are pairs)."""
    objects = tuple(sorted(((a, b) for a in i.objects for b in j.objects),
                           key=_skey))
    mor_map = {}
    for m in i.morphisms:
        for n in j.morphisms:
            mid = (m, n)
            mor_map[mid] = Morphism(mid, (i.src(m), j.src(n)),
                                    (i.tgt(m), j.tgt(n)))
    identity = {(a, b): (i.identity[a], j.identity[b]) for (a, b) in objects}
    compose = {((g1, g2), (f1, f2)): (c1, c2)
               for (g1, f1), c1 in i.compose.items()
               for (g2, f2), c2 in j.compose.items()}
    return FinCat(objects, mor_map, identity, compose)


def opposite(i):
    """Opposite category: src/tgt swapped, composition reversed."""
    mor_map = {m: Morphism(m, rec.tgt, rec.src)
               for m, rec in i.morphisms.items()}
    compose = {(f, g): gf for (g, f), gf in i.compose.items()}
    return FinCat(i.objects, mor_map, dict(i.identity), compose)


# ---------------------------------------------------------------------------
# functors

@dataclass(frozen=True, eq=False)
class Functor:
    source: FinCat
    target: FinCat
    obj_map: dict
    mor_map: dict

    def __call__(self, x):
        return self.obj_map[x]

    def on_mor(self, m):
        return self.mor_map[m]


def identity_functor(i):
    return Functor(i, i, {o: o for o in i.objects},
                   {m: m for m in i.morphisms})


def constant_functor(i, j, obj):
    """The functor I -> J collapsing everything to ``obj``."""
    return Functor(i, j, {o: obj for o in i.objects},
                   {m: j.identity[obj] for m in i.morphisms})


def validate_functor(f):
    i, j = f.source, f.target
    for o in i.objects:
        if f.obj_map.get(o) not in j.objects:
            return {"status": "fail", "violation": "object-map", "object": o}
    for m in i.mor_ids():
        fm = f.mor_map.get(m)
        if fm not in j.morphisms:
            return {"status": "fail", "violation": "morphism-map", "morphism": m}
        if j.src(fm) != f.obj_map[i.src(m)] or j.tgt(fm) != f.obj_map[i.tgt(m)]:
            return {"status": "fail", "violation": "src-tgt", "morphism": m}
    for o in i.objects:
        if f.mor_map[i.identity[o]] != j.identity[f.obj_map[o]]:
            return {"status": "fail", "violation": "identity", "object": o}
    for (g, h), gh in i.compose.items():
        if j.compose[(f.mor_map[g], f.mor_map[h])] != f.mor_map[gh]:
            return {"status": "fail", "violation": "composite", "g": g, "f": h}
    return {"status": "pass"}


# ---------------------------------------------------------------------------
# comma categories

def comma_under(x, f):
    """Undercategory (x/f): objects (y, a: x -> f(y)), plus forgetful functor.

    A morphism (y, a) -> (y', a') is an I-arrow g: y -> y' with f(g).a = a'.
    Returns (category, u_x: (x/f) -> I).
    """
    i, j = f.source, f.target
    if x not in j.objects:
        raise ValueError("%r is not an object of the target" % (x,))
    objects = []
    for y in i.objects:
        for a in j.hom(x, f.obj_map[y]):
            objects.append((y, a))
    mor_map, identity, compose = {}, {}, {}
    mors = []
    for (y, a) in objects:
        for g in i.mor_ids():
            if i.src(g) != y:
                continue
            a2 = j.compose[(f.mor_map[g], a)]
            mors.append((((y, a), g), (y, a), (i.tgt(g), a2)))
    for (mid, s, t) in mors:
        mor_map[mid] = Morphism(mid, s, t)
    for (y, a) in objects:
        identity[(y, a)] = ((y, a), i.identity[y])
    for (mid2, s2, t2) in mors:
        for (mid1, s1, t1) in mors:
            if t1 == s2:
                compose[(mid2, mid1)] = (s1, i.compose[(mid2[1], mid1[1])])
    cat = FinCat(tuple(sorted(objects, key=_skey)), mor_map, identity, compose)
    u = Functor(cat, i,
                {(y, a): y for (y, a) in objects},
                {mid: mid[1] for mid in mor_map})
    return cat, u


def comma_over(f, x):
    """Overcategory (f/x): objects (y, a: f(y) -> x), plus forgetful functor."""
    i, j = f.source, f.target
    if x not in j.objects:
        raise ValueError("%r is not an object of the target" % (x,))
    objects = []
    for y in i.objects:
        for a in j.hom(f.obj_map[y], x):
            objects.append((y, a))
    mor_map, identity, compose = {}, {}, {}
    mors = []
    for (y, a) in objects:
        for g in i.mor_ids():
            if i.tgt(g) != y:
                continue
            y0 = i.src(g)
            a0 = j.compose[(a, f.mor_map[g])]
            # g: (y0, a0) -> (y, a) with a . f(g) = a0; the target arrow is
            # part of the id since it is not determined by (source, g)
            mors.append((((y0, a0), g, a), (y0, a0), (y, a)))
    for (mid, s, t) in mors:
        mor_map[mid] = Morphism(mid, s, t)
    for (y, a) in objects:
        identity[(y, a)] = ((y, a), i.identity[y], a)
    for (mid2, s2, t2) in mors:
        for (mid1, s1, t1) in mors:
            if t1 == s2:
                compose[(mid2, mid1)] = (s1, i.compose[(mid2[1], mid1[1])],
                                         mid2[2])
    cat = FinCat(tuple(sorted(objects, key=_skey)), mor_map, identity, compose)
    u = Functor(cat, i,
                {(y, a): y for (y, a) in objects},
                {mid: mid[1] for mid in mor_map})
    return cat, u


def initial_objects(c):
    """Objects with exactly one arrow to every object."""
    out = []
    for o in c.objects:
        if all(len(c.hom(o, b)) == 1 for b in c.objects):
            out.append(o)
    return out


def terminal_objects(c):
    out = []
    for o in c.objects:
        if all(len(c.hom(b, o)) == 1 for b in c.objects):
            out.append(o)
    return out


# ---------------------------------------------------------------------------
# nerve

def chains(c, n):
    """Composable length-n morphism chains, as (start object, mor tuple)."""
    if n == 0:
        return [(o, ()) for o in c.objects]
    out = []
    for (o, ms) in chains(c, n - 1):
        cur = c.tgt(ms[-1]) if ms else o
        for m in c.mor_ids():
            if c.src(m) == cur:
                out.append((o, ms + (m,)))
    return out


def chain_face(c, ch, k):
    """Face d_k of a nerve chain."""
    o, ms = ch
    n = len(ms)
    if k == 0:
        return (c.tgt(ms[0]), ms[1:])
    if k == n:
        return (o, ms[:-1])
    return (o, ms[:k - 1] + (c.compose[(ms[k], ms[k - 1])],) + ms[k + 1:])


def chain_degeneracy(c, ch, k):
    """Degeneracy s_k: insert the identity at position k."""
    o, ms = ch
    at = o if k == 0 else c.tgt(ms[k - 1])
    return (o, ms[:k] + (c.identity[at],) + ms[k:])


def chain_map(f, ch):
    """Apply a functor to a chain of its source category."""
    o, ms = ch
    return (f.obj_map[o], tuple(f.mor_map[m] for m in ms))


def nerve(c, cap):
    """Nerve of a category as a capped SSet; n-simplices are n-chains."""
    from . import sset
    simplices = [tuple(sorted(chains(c, n), key=_skey)) for n in range(cap + 1)]
    face = {}
    degeneracy = {}
    for n in range(1, cap + 1):
        for k in range(n + 1):
            face[(n, k)] = {ch: chain_face(c, ch, k) for ch in simplices[n]}
    for n in range(cap):
        for k in range(n + 1):
            degeneracy[(n, k)] = {ch: chain_degeneracy(c, ch, k)
                                  for ch in simplices[n]}
    return sset.SSet(cap, tuple(simplices), face, degeneracy)


def nerve_of_functor(f, cap):
    """The simplicial map N(f): N(I) -> N(J) applying f chain-wise."""
    from . import sset
    src = nerve(f.source, cap)
    tgt = nerve(f.target, cap)
    level = {n: {ch: chain_map(f, ch) for ch in src.simplices[n]}
             for n in range(cap + 1)}
    return sset.SMap(src, tgt, level)
