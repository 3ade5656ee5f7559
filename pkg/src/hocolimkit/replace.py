"""Constructions on diagrams of capped simplicial sets: simplicial
replacement, Voevodsky homotopy colimit, colimit augmentation, decalage,
two-sided bar, coends, the Bousfield-Kan homotopy colimit, cofinality maps
and pointwise homotopy left Kan extensions.

Chain caps and simplicial caps are kept as a single cap per computation;
constructions that need source degrees beyond the cap (decalage) demand an
explicitly larger input cap and raise CapError otherwise.
"""

from dataclasses import dataclass

from . import fincat, sset
from .fincat import _skey
from .sset import BiSSet, CapError, SMap, SSet, SchemaError


@dataclass(frozen=True, eq=False)
class Diagram:
    shape: fincat.FinCat
    values: dict              # object -> SSet, uniform cap
    arrows: dict              # mor id -> SMap

    @property
    def cap(self):
        return next(iter(self.values.values())).cap

    def value(self, i):
        return self.values[i]

    def arrow(self, m):
        return self.arrows[m]

    def push(self, m, deg, x):
        return self.arrows[m].level[deg][x]


def validate_diagram(x):
    caps = {v.cap for v in x.values.values()}
    if len(caps) != 1:
        raise SchemaError("diagram values must share a cap")
    for o in x.shape.objects:
        if o not in x.values:
            raise SchemaError("missing value at object %r" % (o,))
    for m in x.shape.mor_ids():
        f = x.arrows.get(m)
        if f is None:
            raise SchemaError("missing arrow at morphism %r" % (m,))
        if f.source is not x.values[x.shape.src(m)] or \
           f.target is not x.values[x.shape.tgt(m)]:
            raise SchemaError("arrow %r has wrong endpoints" % (m,))
        sset.validate_smap(f)
    for o in x.shape.objects:
        if not sset.smaps_equal(x.arrows[x.shape.identity[o]],
                                sset.identity_smap(x.values[o])):
            raise SchemaError("identity arrow at %r is not the identity" % (o,))
    for (g, f), gf in x.shape.compose.items():
        lhs = sset.compose_smaps(x.arrows[g], x.arrows[f])
        if not sset.smaps_equal(lhs, x.arrows[gf]):
            raise SchemaError("arrows do not respect composite %r" % (gf,))
    return True


def constant_diagram(shape, value):
    ident = sset.identity_smap(value)
    return Diagram(shape, {o: value for o in shape.objects},
                   {m: ident for m in shape.morphisms})


def restrict_diagram(f, x):
    """Pull back a diagram over J along a functor f: I -> J."""
    return Diagram(f.source,
                   {i: x.values[f.obj_map[i]] for i in f.source.objects},
                   {m: x.arrows[f.mor_map[m]] for m in f.source.morphisms})


# ---------------------------------------------------------------------------
# simplicial replacement and the Voevodsky homotopy colimit

def simplicial_replacement(x, chain_cap):
    """Bisimplicial set with bidegree (n, m) the simplices (chain, sigma),
    sigma an m-simplex of the value at the chain's first object.

    Horizontal d_0 pushes sigma along the first chain arrow; the other
    horizontal maps reindex chains only; vertical structure is that of the
    value at the chain start.
    """
    c = x.shape
    vcap = x.cap
    chain_lists = [sorted(fincat.chains(c, n), key=_skey)
                   for n in range(chain_cap + 1)]
    simplices = {}
    for n in range(chain_cap + 1):
        for m in range(vcap + 1):
            simplices[(n, m)] = tuple(
                (ch, sx) for ch in chain_lists[n]
                for sx in x.values[ch[0]].simplices[m])
    hface, hdeg, vface, vdeg = {}, {}, {}, {}
    for n in range(chain_cap + 1):
        for m in range(vcap + 1):
            level = simplices[(n, m)]
            if n >= 1:
                for k in range(n + 1):
                    if k == 0:
                        hface[(n, m, 0)] = {
                            (ch, sx): (fincat.chain_face(c, ch, 0),
                                       x.push(ch[1][0], m, sx))
                            for (ch, sx) in level}
                    else:
                        hface[(n, m, k)] = {
                            (ch, sx): (fincat.chain_face(c, ch, k), sx)
                            for (ch, sx) in level}
            if n < chain_cap:
                for k in range(n + 1):
                    hdeg[(n, m, k)] = {
                        (ch, sx): (fincat.chain_degeneracy(c, ch, k), sx)
                        for (ch, sx) in level}
            if m >= 1:
                for k in range(m + 1):
                    vface[(n, m, k)] = {
                        (ch, sx): (ch, x.values[ch[0]].d(m, k, sx))
                        for (ch, sx) in level}
            if m < vcap:
                for k in range(m + 1):
                    vdeg[(n, m, k)] = {
                        (ch, sx): (ch, x.values[ch[0]].s(m, k, sx))
                        for (ch, sx) in level}
    return BiSSet((chain_cap, vcap), simplices, hface, hdeg, vface, vdeg)


def voevodsky_hocolim(x, cap):
    """Diagonal of the simplicial replacement; degree n is the disjoint
    union of the value n-simplices at chain starts over length-n chains."""
    if x.cap < cap:
        raise CapError("diagram values capped at %d, need %d" % (x.cap, cap))
    return sset.diagonal(simplicial_replacement(x, cap), cap)


def replacement_naturality_map(f, tau_levels, x, y, chain_cap):
    """The bisimplicial map induced by (f, tau): X -> f*Y on replacements.

    ``tau_levels`` maps each source object i to the SMap X(i) -> Y(f(i)).
    """
    rx = simplicial_replacement(x, chain_cap)
    ry = simplicial_replacement(y, chain_cap)
    maps = {}
    for (n, m), level in rx.simplices.items():
        maps[(n, m)] = {(ch, sx): (fincat.chain_map(f, ch),
                                   tau_levels[ch[0]].level[m][sx])
                        for (ch, sx) in level}
    return rx, ry, maps


def voevodsky_induced_map(tau, x, y, cap):
    """SMap on Voevodsky hocolims induced by a diagram map over a fixed shape.

    ``tau`` maps objects to SMaps X(i) -> Y(i), natural in i.
    """
    hx = voevodsky_hocolim(x, cap)
    hy = voevodsky_hocolim(y, cap)
    level = {n: {(ch, sx): (ch, tau[ch[0]].level[n][sx])
                 for (ch, sx) in hx.simplices[n]}
             for n in range(cap + 1)}
    return SMap(hx, hy, level)


def induced_cofinal_map(f, x, cap):
    """hocolim_I f*X -> hocolim_J X, reindexing chains along f."""
    fx = restrict_diagram(f, x)
    src = voevodsky_hocolim(fx, cap)
    tgt = voevodsky_hocolim(x, cap)
    level = {n: {(ch, sx): (fincat.chain_map(f, ch), sx)
                 for (ch, sx) in src.simplices[n]}
             for n in range(cap + 1)}
    return SMap(src, tgt, level)


# ---------------------------------------------------------------------------
# colimits

def tagged_coproduct(values):
    """Coproduct of a dict of same-cap simplicial sets, tagged by key."""
    keys = sorted(values, key=_skey)
    cap = values[keys[0]].cap
    simplices = tuple(tuple((k, sx) for k in keys
                            for sx in values[k].simplices[n])
                      for n in range(cap + 1))
    face = {(n, i): {(k, sx): (k, values[k].d(n, i, sx))
                     for k in keys for sx in values[k].simplices[n]}
            for n in range(1, cap + 1) for i in range(n + 1)}
    deg = {(n, j): {(k, sx): (k, values[k].s(n, j, sx))
                    for k in keys for sx in values[k].simplices[n]}
           for n in range(cap) for j in range(n + 1)}
    return SSet(cap, simplices, face, deg)


def colim_augmentation(x):
    """Levelwise union-find coequalizer of d_0, d_1 on the replacement.

    Returns (colim, aug) where aug is the projection SMap from the tagged
    coproduct of the values (the degree-0 row of the replacement).
    """
    cop = tagged_coproduct(x.values)
    rel = []
    for m in x.shape.mor_ids():
        if x.shape.is_identity(m):
            continue
        i, j = x.shape.src(m), x.shape.tgt(m)
        for n in range(x.cap + 1):
            for sx in x.values[i].simplices[n]:
                rel.append((n, (i, sx), (j, x.push(m, n, sx))))
    colim, proj = sset.quotient(cop, rel)
    return colim, proj


# ---------------------------------------------------------------------------
# decalage

def decalage(y, p, q):
    """Illusie's bisimplicial decalage of a simplicial set.

    Bidegree (n, m) is Y_{n+m+1}; horizontal faces are the first faces of
    Y, vertical ones the last.  Returns (dec, lamI, lamII, extras):

    * ``lamI[(n, m)]`` is the augmentation component to Y_m (d_0 iterated
      n+1 times), ``lamII[(n, m)]`` the one to Y_n (d_{n+1} iterated).
    * ``extras`` holds candidate extra degeneracies: for each column m a
      high-side family (the maps s_{n+1} of Y, section s_0: Y_m -> Y_{m+1}),
      for each row n a low-side family (the maps s_n of Y).
    """
    if y.cap < p + q + 1:
        raise CapError("decalage caps (%d, %d) need source cap >= %d, got %d"
                       % (p, q, p + q + 1, y.cap))
    simplices = {(n, m): y.simplices[n + m + 1]
                 for n in range(p + 1) for m in range(q + 1)}
    hface, hdeg, vface, vdeg = {}, {}, {}, {}
    for n in range(p + 1):
        for m in range(q + 1):
            d = n + m + 1
            if n >= 1:
                for k in range(n + 1):
                    hface[(n, m, k)] = y.face[(d, k)]
            if n < p:
                for k in range(n + 1):
                    hdeg[(n, m, k)] = y.degeneracy[(d, k)]
            if m >= 1:
                for k in range(m + 1):
                    vface[(n, m, k)] = y.face[(d, n + k + 1)]
            if m < q:
                for k in range(m + 1):
                    vdeg[(n, m, k)] = y.degeneracy[(d, n + k + 1)]
    dec = BiSSet((p, q), simplices, hface, hdeg, vface, vdeg)

    lamI, lamII = {}, {}
    for n in range(p + 1):
        for m in range(q + 1):
            comp = {}
            for sx in simplices[(n, m)]:
                cur, deg = sx, n + m + 1
                for _ in range(n + 1):
                    cur = y.d(deg, 0, cur)
                    deg -= 1
                comp[sx] = cur
            lamI[(n, m)] = comp
            comp = {}
            for sx in simplices[(n, m)]:
                cur, deg = sx, n + m + 1
                for _ in range(m + 1):
                    cur = y.d(deg, n + 1, cur)
                    deg -= 1
                comp[sx] = cur
            lamII[(n, m)] = comp

    extras = {"lamI": {}, "lamII": {}}
    for m in range(q + 1):
        fam = {-1: {sx: y.s(m, 0, sx) for sx in y.simplices[m]}}
        for n in range(p):
            fam[n] = {sx: y.s(n + m + 1, n + 1, sx)
                      for sx in simplices[(n, m)]}
        extras["lamI"][m] = fam
    for n in range(p + 1):
        fam = {-1: {sx: y.s(n, n, sx) for sx in y.simplices[n]}}
        for m in range(q):
            fam[m] = {sx: y.s(n + m + 1, n, sx)
                      for sx in simplices[(n, m)]}
        extras["lamII"][n] = fam
    return dec, lamI, lamII, extras


def decalage_column_augmentation(y, dec, lamI, m, p):
    """The column at vertical degree m as an augmented simplicial set."""
    col = sset.bisset_column(dec, m)
    const = sset.constant_sset(y.simplices[m], p)
    eps = SMap(col, const, {n: dict(lamI[(n, m)]) for n in range(p + 1)})
    return col, const, eps


def decalage_row_augmentation(y, dec, lamII, n, q):
    row = sset.bisset_row(dec, n)
    const = sset.constant_sset(y.simplices[n], q)
    eps = SMap(row, const, {m: dict(lamII[(n, m)]) for m in range(q + 1)})
    return row, const, eps


def decalage_diagonal_maps(y, p, q):
    """The SMaps D(Lambda^I), D(Lambda^II): D(dec Y) -> Y (truncated)."""
    dec, lamI, lamII, _ = decalage(y, p, q)
    cap = min(p, q)
    diag = sset.diagonal(dec, cap)
    ytr = truncate(y, cap)
    dI = SMap(diag, ytr, {n: {sx: lamI[(n, n)][sx] for sx in diag.simplices[n]}
                          for n in range(cap + 1)})
    dII = SMap(diag, ytr, {n: {sx: lamII[(n, n)][sx]
                               for sx in diag.simplices[n]}
                           for n in range(cap + 1)})
    return diag, dI, dII


def truncate(x, cap):
    if cap > x.cap:
        raise CapError("cannot truncate cap %d to %d" % (x.cap, cap))
    face = {(n, i): x.face[(n, i)] for n in range(1, cap + 1)
            for i in range(n + 1)}
    deg = {(n, j): x.degeneracy[(n, j)] for n in range(cap)
           for j in range(n + 1)}
    return SSet(cap, x.simplices[:cap + 1], face, deg)


# ---------------------------------------------------------------------------
# two-sided bar construction and coends

@dataclass(frozen=True, eq=False)
class Bifunctor:
    """F: I x I-op -> simplicial sets, with separate left/right actions.

    ``lmap[(f, j)]`` is F(src f, j) -> F(tgt f, j) (covariant),
    ``rmap[(i, f)]`` is F(i, tgt f) -> F(i, src f) (contravariant).
    """
    shape: fincat.FinCat
    values: dict              # (i, j) -> SSet
    lmap: dict
    rmap: dict

    @property
    def cap(self):
        return next(iter(self.values.values())).cap


def validate_bifunctor(f):
    c = f.shape
    for i in c.objects:
        for j in c.objects:
            if (i, j) not in f.values:
                raise SchemaError("missing value at (%r, %r)" % (i, j))
    for m in c.mor_ids():
        for j in c.objects:
            sset.validate_smap(f.lmap[(m, j)])
        for i in c.objects:
            sset.validate_smap(f.rmap[(i, m)])
    for (g, h), gh in c.compose.items():
        for j in c.objects:
            if not sset.smaps_equal(
                    sset.compose_smaps(f.lmap[(g, j)], f.lmap[(h, j)]),
                    f.lmap[(gh, j)]):
                raise SchemaError("left action not functorial at %r" % (gh,))
        for i in c.objects:
            if not sset.smaps_equal(
                    sset.compose_smaps(f.rmap[(i, h)], f.rmap[(i, g)]),
                    f.rmap[(i, gh)]):
                raise SchemaError("right action not functorial at %r" % (gh,))
    for m1 in c.mor_ids():
        for m2 in c.mor_ids():
            a = sset.compose_smaps(f.lmap[(m1, c.src(m2))],
                                   f.rmap[(c.src(m1), m2)])
            b = sset.compose_smaps(f.rmap[(c.tgt(m1), m2)],
                                   f.lmap[(m1, c.tgt(m2))])
            if not sset.smaps_equal(a, b):
                raise SchemaError("left/right actions do not commute")
    return True


def chain_end(c, ch):
    o, ms = ch
    return c.tgt(ms[-1]) if ms else o


def two_sided_bar(f, chain_cap):
    """W(F): bidegree (n, m) pairs (n-chain, m-simplex of F(i_0, i_n))."""
    c = f.shape
    vcap = f.cap
    chain_lists = [sorted(fincat.chains(c, n), key=_skey)
                   for n in range(chain_cap + 1)]
    ends = [{ch: chain_end(c, ch) for ch in lev} for lev in chain_lists]
    simplices = {}
    for n in range(chain_cap + 1):
        for m in range(vcap + 1):
            simplices[(n, m)] = tuple(
                (ch, sx) for ch in chain_lists[n]
                for sx in f.values[(ch[0], ends[n][ch])].simplices[m])
    hface, hdeg, vface, vdeg = {}, {}, {}, {}
    for n in range(chain_cap + 1):
        for m in range(vcap + 1):
            level = simplices[(n, m)]
            if n >= 1:
                for k in range(n + 1):
                    out = {}
                    for (ch, sx) in level:
                        nch = fincat.chain_face(c, ch, k)
                        if k == 0:
                            nsx = f.lmap[(ch[1][0], ends[n][ch])].level[m][sx]
                        elif k == n:
                            nsx = f.rmap[(ch[0], ch[1][-1])].level[m][sx]
                        else:
                            nsx = sx
                        out[(ch, sx)] = (nch, nsx)
                    hface[(n, m, k)] = out
            if n < chain_cap:
                for k in range(n + 1):
                    hdeg[(n, m, k)] = {
                        (ch, sx): (fincat.chain_degeneracy(c, ch, k), sx)
                        for (ch, sx) in level}
            if m >= 1:
                for k in range(m + 1):
                    vface[(n, m, k)] = {
                        (ch, sx): (ch, f.values[(ch[0], ends[n][ch])].d(m, k, sx))
                        for (ch, sx) in level}
            if m < vcap:
                for k in range(m + 1):
                    vdeg[(n, m, k)] = {
                        (ch, sx): (ch, f.values[(ch[0], ends[n][ch])].s(m, k, sx))
                        for (ch, sx) in level}
    return BiSSet((chain_cap, vcap), simplices, hface, hdeg, vface, vdeg)


def coend(f, with_proj=False):
    """Coequalizer of d_0, d_1: W_1(F) -> W_0(F), computed levelwise.

    For every arrow g: i -> j and simplex sigma of F(i, j), the left push
    to F(j, j) is glued to the right pull to F(i, i).
    """
    c = f.shape
    diag_values = {i: f.values[(i, i)] for i in c.objects}
    cop = tagged_coproduct(diag_values)
    rel = []
    for g in c.mor_ids():
        if c.is_identity(g):
            continue
        i, j = c.src(g), c.tgt(g)
        val = f.values[(i, j)]
        lm, rm = f.lmap[(g, j)], f.rmap[(i, g)]
        for n in range(f.cap + 1):
            for sx in val.simplices[n]:
                rel.append((n, (j, lm.level[n][sx]), (i, rm.level[n][sx])))
    out, proj = sset.quotient(cop, rel)
    if with_proj:
        return out, proj
    return out


# ---------------------------------------------------------------------------
# bifunctors for the Bousfield-Kan formula and the bar=decalage lemma

def under_nerve(shape, j, cap):
    """Nerve of the undercategory (j/I), with the comma category."""
    cat, _ = fincat.comma_under(j, fincat.identity_functor(shape))
    return cat, fincat.nerve(cat, cap)


def under_restriction_functor(shape, g):
    """For g: j -> j', the functor (j'/I) -> (j/I) precomposing with g."""
    j, j2 = shape.src(g), shape.tgt(g)
    src_cat, _ = fincat.comma_under(j2, fincat.identity_functor(shape))
    tgt_cat, _ = fincat.comma_under(j, fincat.identity_functor(shape))
    obj_map = {(y, a): (y, shape.compose[(a, g)]) for (y, a) in src_cat.objects}
    mor_map = {((y, a), h): ((y, shape.compose[(a, g)]), h)
               for ((y, a), h) in src_cat.morphisms}
    return fincat.Functor(src_cat, tgt_cat, obj_map, mor_map)


def bk_bifunctor(x, cap):
    """(i, j) -> X(i) x N(j/I)-op, the Bousfield-Kan integrand.

    In simplicial sets every object is cofibrant and the frame of X(i) may
    be taken levelwise, so the tensor is the levelwise product.
    """
    c = x.shape
    if x.cap < cap:
        raise CapError("diagram values capped at %d, need %d" % (x.cap, cap))
    nerves = {}
    for j in c.objects:
        _, nv = under_nerve(c, j, cap)
        nerves[j] = sset.opposite_sset(nv)
    xt = {i: truncate(x.values[i], cap) for i in c.objects}
    values = {(i, j): sset.product(xt[i], nerves[j])
              for i in c.objects for j in c.objects}
    lmap, rmap = {}, {}
    for m in c.mor_ids():
        i, i2 = c.src(m), c.tgt(m)
        for j in c.objects:
            lmap[(m, j)] = SMap(
                values[(i, j)], values[(i2, j)],
                {n: {(a, b): (x.push(m, n, a), b)
                     for (a, b) in values[(i, j)].simplices[n]}
                 for n in range(cap + 1)})
    for m in c.mor_ids():
        nf = sset.opposite_smap(
            fincat.nerve_of_functor(under_restriction_functor(c, m), cap))
        j, j2 = c.src(m), c.tgt(m)
        for i in c.objects:
            rmap[(i, m)] = SMap(
                values[(i, j2)], values[(i, j)],
                {n: {(a, b): (a, nf.level[n][b])
                     for (a, b) in values[(i, j2)].simplices[n]}
                 for n in range(cap + 1)})
    return Bifunctor(c, values, lmap, rmap)


def bk_hocolim(x, cap, with_proj=False):
    """Bousfield-Kan homotopy colimit: the coend of X(i) x N(j/I)-op."""
    return coend(bk_bifunctor(x, cap), with_proj=with_proj)


def bk_induced_map(tau, x, y, cap):
    """SMap on BK hocolims induced by a diagram map (object -> SMap)."""
    bx, px = bk_hocolim(x, cap, with_proj=True)
    by, py = bk_hocolim(y, cap, with_proj=True)
    level = {}
    for n in range(cap + 1):
        out = {}
        for (i, (a, b)), cls in px.level[n].items():
            tgt = py.level[n][(i, (tau[i].level[n][a], b))]
            if cls in out and out[cls] != tgt:
                raise SchemaError("induced map not constant on classes")
            out[cls] = tgt
        level[n] = out
    return SMap(bx, by, level)


def projection_bifunctor(x, cap):
    """(i, j) -> X(i): the one-sided bifunctor X o proj, whose bar is the
    simplicial replacement and whose coend is the colimit."""
    c = x.shape
    xt = {i: truncate(x.values[i], cap) for i in c.objects}
    values = {(i, j): xt[i] for i in c.objects for j in c.objects}
    arrows_t = {m: SMap(xt[c.src(m)], xt[c.tgt(m)],
                        {n: dict(x.arrows[m].level[n])
                         for n in range(cap + 1)})
                for m in c.morphisms}
    lmap = {(m, j): arrows_t[m] for m in c.morphisms for j in c.objects}
    rmap = {(i, m): sset.identity_smap(xt[i])
            for i in c.objects for m in c.morphisms}
    return Bifunctor(c, values, lmap, rmap)


def tensor_under_bifunctor(x, cap):
    """(i, j) -> X(i) x N(j/I): the integrand of the bar=decalage lemma."""
    c = x.shape
    nerves = {}
    for j in c.objects:
        _, nv = under_nerve(c, j, cap)
        nerves[j] = nv
    xt = {i: truncate(x.values[i], cap) for i in c.objects}
    values = {(i, j): sset.product(xt[i], nerves[j])
              for i in c.objects for j in c.objects}
    lmap, rmap = {}, {}
    for m in c.mor_ids():
        i, i2 = c.src(m), c.tgt(m)
        for j in c.objects:
            lmap[(m, j)] = SMap(
                values[(i, j)], values[(i2, j)],
                {n: {(a, b): (x.push(m, n, a), b)
                     for (a, b) in values[(i, j)].simplices[n]}
                 for n in range(cap + 1)})
    for m in c.mor_ids():
        nf = fincat.nerve_of_functor(under_restriction_functor(c, m), cap)
        j, j2 = c.src(m), c.tgt(m)
        for i in c.objects:
            rmap[(i, m)] = SMap(
                values[(i, j2)], values[(i, j)],
                {n: {(a, b): (a, nf.level[n][b])
                     for (a, b) in values[(i, j2)].simplices[n]}
                 for n in range(cap + 1)})
    return Bifunctor(c, values, lmap, rmap)


# ---------------------------------------------------------------------------
# bar = decalage certificate

def decalage_of_replacement(r, p, q):
    """Decalage of a simplicial replacement in the chain direction, with
    the value direction collapsed diagonally: bidegree (n, m) is the
    replacement bidegree (n+m+1, m)."""
    cp, cv = r.caps
    if cp < p + q + 1 or cv < q:
        raise CapError("replacement caps %r too small for decalage (%d, %d)"
                       % (r.caps, p, q))
    simplices = {(n, m): r.simplices[(n + m + 1, m)]
                 for n in range(p + 1) for m in range(q + 1)}
    hface, hdeg, vface, vdeg = {}, {}, {}, {}
    for n in range(p + 1):
        for m in range(q + 1):
            d = n + m + 1
            if n >= 1:
                for k in range(n + 1):
                    hface[(n, m, k)] = r.hface[(d, m, k)]
            if n < p:
                for k in range(n + 1):
                    hdeg[(n, m, k)] = r.hdeg[(d, m, k)]
            if m >= 1:
                for k in range(m + 1):
                    h = r.hface[(d, m, n + k + 1)]
                    v = r.vface[(d - 1, m, k)]
                    vface[(n, m, k)] = {sx: v[h[sx]]
                                        for sx in simplices[(n, m)]}
            if m < q:
                for k in range(m + 1):
                    h = r.hdeg[(d, m, n + k + 1)]
                    v = r.vdeg[(d + 1, m, k)]
                    vdeg[(n, m, k)] = {sx: v[h[sx]]
                                       for sx in simplices[(n, m)]}
    return BiSSet((p, q), simplices, hface, hdeg, vface, vdeg)


def bar_chain_split(c, w_simplex):
    """The chain-splitting bijection from a bar simplex of X tensor N(./I)
    to a decalage simplex of the replacement."""
    (ch, (a, nu)) = w_simplex
    start, ms = ch
    (l0, a0), comma_ms = nu
    total = ms + (a0,) + tuple(g for (_, g) in comma_ms)
    return ((start, total), a)


def bar_vs_decalage_iso(x, p, q):
    """Certify the bidegreewise bijection W(X tensor N(./I)) = dec of the
    simplicial replacement, carrying the bar augmentations to the decalage
    ones.  Returns a pass certificate or a counterexample witness."""
    c = x.shape
    if x.cap < q:
        raise CapError("value cap %d below vertical cap %d" % (x.cap, q))
    bf = tensor_under_bifunctor(x, q)
    w = two_sided_bar(bf, p)
    r = simplicial_replacement(truncate_diagram(x, q), p + q + 1)
    dec = decalage_of_replacement(r, p, q)

    def fail(kind, bidegree, witness):
        return {"status": "fail", "violation": kind,
                "bidegree": list(bidegree), "witness": repr(witness)}

    iso = {}
    for n in range(p + 1):
        for m in range(q + 1):
            fw = {sx: bar_chain_split(c, sx) for sx in w.simplices[(n, m)]}
            if sorted(map(_skey, fw.values())) != \
               sorted(map(_skey, dec.simplices[(n, m)])):
                return fail("not-bijective", (n, m), None)
            iso[(n, m)] = fw
    families = [("hface", w.hface, dec.hface, lambda n, m: n >= 1,
                 lambda n: n + 1, -1, 0),
                ("hdeg", w.hdeg, dec.hdeg, lambda n, m: n < p,
                 lambda n: n + 1, +1, 0),
                ("vface", w.vface, dec.vface, lambda n, m: m >= 1,
                 None, 0, -1),
                ("vdeg", w.vdeg, dec.vdeg, lambda n, m: m < q,
                 None, 0, +1)]
    for (name, wmaps, dmaps, defined, _, dn, dm) in families:
        horiz = name.startswith("h")
        for n in range(p + 1):
            for m in range(q + 1):
                if not defined(n, m):
                    continue
                deg = n if horiz else m
                for k in range(deg + 1):
                    tgt = (n + dn, m + dm) if horiz else (n, m + dm)
                    if horiz:
                        tgt = (n + dn, m)
                    for sx in w.simplices[(n, m)]:
                        a = iso[tgt][wmaps[(n, m, k)][sx]]
                        b = dmaps[(n, m, k)][iso[(n, m)][sx]]
                        if a != b:
                            return fail("structure-map:%s_%d" % (name, k),
                                        (n, m), sx)
    # alpha corresponds to Lambda-II, beta to Lambda-I
    for n in range(p + 1):
        for m in range(q + 1):
            for sx in w.simplices[(n, m)]:
                (ch, (a, nu)) = sx
                alpha = (ch, a)
                cur = iso[(n, m)][sx]
                for step in range(m + 1):
                    d = n + m + 1 - step
                    cur = r.hface[(d, m, n + 1)][cur]
                if cur != alpha:
                    return fail("alpha-vs-lambdaII", (n, m), sx)
                (l0, a0), comma_ms = nu
                jchain = (l0, tuple(g for (_, g) in comma_ms))
                pushed = a
                for g in ch[1] + (a0,):
                    pushed = x.arrows[g].level[m][pushed]
                beta = (jchain, pushed)
                cur = iso[(n, m)][sx]
                for step in range(n + 1):
                    d = n + m + 1 - step
                    cur = r.hface[(d, m, 0)][cur]
                if cur != beta:
                    return fail("beta-vs-lambdaI", (n, m), sx)
    sizes = {"%d,%d" % (n, m): len(w.simplices[(n, m)])
             for n in range(p + 1) for m in range(q + 1)}
    return {"status": "pass", "caps": [p, q], "sizes": sizes}


def truncate_diagram(x, cap):
    xt = {i: truncate(x.values[i], cap) for i in x.shape.objects}
    arrows = {m: SMap(xt[x.shape.src(m)], xt[x.shape.tgt(m)],
                      {n: dict(x.arrows[m].level[n]) for n in range(cap + 1)})
              for m in x.shape.morphisms}
    return Diagram(x.shape, xt, arrows)


# ---------------------------------------------------------------------------
# homotopy left Kan extension

def over_comma_diagram(f, x, j):
    """The diagram over (f/j) restricting x along the forgetful functor."""
    cat, u = fincat.comma_over(f, j)
    return cat, u, restrict_diagram(u, x)


def kan_transition_functor(f, g):
    """For g: j -> j' in J, the postcomposition functor (f/j) -> (f/j')."""
    jcat = f.target
    j, j2 = jcat.src(g), jcat.tgt(g)
    src_cat, _ = fincat.comma_over(f, j)
    tgt_cat, _ = fincat.comma_over(f, j2)
    obj_map = {(y, a): (y, jcat.compose[(g, a)]) for (y, a) in src_cat.objects}
    mor_map = {}
    for ((y0, a0), h, a) in src_cat.morphisms:
        mor_map[((y0, a0), h, a)] = ((y0, jcat.compose[(g, a0)]), h,
                                     jcat.compose[(g, a)])
    return fincat.Functor(src_cat, tgt_cat, obj_map, mor_map)


def homotopy_left_kan(f, x, cap):
    """Pointwise Voevodsky hocolim over the overcategories (f/j)."""
    jcat = f.target
    values = {}
    diags = {}
    for j in jcat.objects:
        _, _, dg = over_comma_diagram(f, x, j)
        diags[j] = dg
        values[j] = voevodsky_hocolim(dg, cap)
    arrows = {}
    for g in jcat.mor_ids():
        t = kan_transition_functor(f, g)
        src = values[jcat.src(g)]
        tgt = values[jcat.tgt(g)]
        level = {n: {(ch, sx): (fincat.chain_map(t, ch), sx)
                     for (ch, sx) in src.simplices[n]}
                 for n in range(cap + 1)}
        arrows[g] = SMap(src, tgt, level)
    return Diagram(jcat, values, arrows)


def rho_map(x, i, cap):
    """The counit component hocolim over (I/i) -> X(i): push each simplex
    along the arrow decorating the chain start."""
    ident = fincat.identity_functor(x.shape)
    cat, u = fincat.comma_over(ident, i)
    dg = restrict_diagram(u, x)
    src = voevodsky_hocolim(dg, cap)
    tgt = truncate(x.values[i], cap)
    level = {}
    for n in range(cap + 1):
        out = {}
        for (ch, sx) in src.simplices[n]:
            (y0, a0) = ch[0]
            out[(ch, sx)] = x.arrows[a0].level[n][sx]
        level[n] = out
    return SMap(src, tgt, level)
