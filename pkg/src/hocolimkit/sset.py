"""Dimension-capped simplicial and bisimplicial sets.

An SSet stores every simplex (degenerate ones included) up to its cap,
together with total face and degeneracy dictionaries.  All constructions
are degreewise, so capping commutes with products, coproducts, quotients
and diagonals; homology downstream is only reported for degrees <= cap-1.
"""

from dataclasses import dataclass

from .fincat import SchemaError, _skey


class CapError(ValueError):
    """A construction needs source degrees beyond the stored cap."""


@dataclass(frozen=True, eq=False)
class SSet:
    cap: int
    simplices: tuple          # simplices[n]: tuple of simplex ids
    face: dict                # (n, i) -> {simplex: simplex}, 1 <= n <= cap
    degeneracy: dict          # (n, j) -> {simplex: simplex}, 0 <= n < cap

    def d(self, n, i, x):
        return self.face[(n, i)][x]

    def s(self, n, j, x):
        return self.degeneracy[(n, j)][x]

    def sizes(self):
        return [len(self.simplices[n]) for n in range(self.cap + 1)]

    def is_degenerate(self, n, x):
        if n == 0:
            return False
        return any(x in self.degeneracy[(n - 1, j)].values()
                   for j in range(n))

    def __repr__(self):
        return "SSet(cap=%d, sizes=%r)" % (self.cap, self.sizes())


@dataclass(frozen=True, eq=False)
class SMap:
    source: SSet
    target: SSet
    level: dict               # n -> {simplex: simplex}

    def __call__(self, n, x):
        return self.level[n][x]


@dataclass(frozen=True, eq=False)
class BiSSet:
    caps: tuple               # (p, q)
    simplices: dict           # (n, m) -> tuple of simplex ids
    hface: dict               # (n, m, i) -> map, n >= 1
    hdeg: dict                # (n, m, j) -> map, n < p
    vface: dict               # (n, m, i) -> map, m >= 1
    vdeg: dict                # (n, m, j) -> map, m < q

    def sizes(self):
        p, q = self.caps
        return [[len(self.simplices[(n, m)]) for m in range(q + 1)]
                for n in range(p + 1)]

    def __repr__(self):
        return "BiSSet(caps=%r)" % (self.caps,)


# ---------------------------------------------------------------------------
# audits

def audit_sset(x):
    """Full simplicial-identity audit within the cap; raises on failure."""
    for n in range(1, x.cap + 1):
        for i in range(n + 1):
            fm = x.face[(n, i)]
            for sx in x.simplices[n]:
                if fm[sx] not in set(x.simplices[n - 1]):
                    raise SchemaError("face lands outside degree %d" % (n - 1))
    for n in range(x.cap):
        for j in range(n + 1):
            dm = x.degeneracy[(n, j)]
            vals = [dm[sx] for sx in x.simplices[n]]
            if len(set(vals)) != len(vals):
                raise SchemaError("degeneracy s_%d at degree %d not injective"
                                  % (j, n))
    # d_i d_j = d_{j-1} d_i  (i < j)
    for n in range(2, x.cap + 1):
        for j in range(1, n + 1):
            for i in range(j):
                for sx in x.simplices[n]:
                    if x.d(n - 1, i, x.d(n, j, sx)) != \
                       x.d(n - 1, j - 1, x.d(n, i, sx)):
                        raise SchemaError("d%d d%d identity fails at degree %d"
                                          % (i, j, n))
    # s_i s_j = s_{j+1} s_i  (i <= j)
    for n in range(x.cap - 1):
        for j in range(n + 1):
            for i in range(j + 1):
                for sx in x.simplices[n]:
                    if x.s(n + 1, i, x.s(n, j, sx)) != \
                       x.s(n + 1, j + 1, x.s(n, i, sx)):
                        raise SchemaError("s%d s%d identity fails at degree %d"
                                          % (i, j, n))
    # mixed identities
    for n in range(1, x.cap):
        for j in range(n + 1):
            for i in range(n + 2):
                for sx in x.simplices[n]:
                    lhs = x.d(n + 1, i, x.s(n, j, sx))
                    if i < j:
                        rhs = x.s(n - 1, j - 1, x.d(n, i, sx))
                    elif i in (j, j + 1):
                        rhs = sx
                    else:
                        rhs = x.s(n - 1, j, x.d(n, i - 1, sx))
                    if lhs != rhs:
                        raise SchemaError(
                            "d%d s%d identity fails at degree %d" % (i, j, n))
    return True


def audit_bisset(z):
    """Check both simplicial directions and their commutation."""
    p, q = z.caps
    for m in range(q + 1):
        audit_sset(bisset_column(z, m))
    for n in range(p + 1):
        audit_sset(bisset_row(z, n))
    for (n, m) in z.simplices:
        for sx in z.simplices[(n, m)]:
            for i in range(n + 1):
                for k in range(m + 1):
                    if n >= 1 and m >= 1:
                        a = z.vface[(n - 1, m, k)][z.hface[(n, m, i)][sx]]
                        b = z.hface[(n, m - 1, i)][z.vface[(n, m, k)][sx]]
                        if a != b:
                            raise SchemaError("h/v faces do not commute")
                    if n < p and m < q:
                        a = z.vdeg[(n + 1, m, k)][z.hdeg[(n, m, i)][sx]]
                        b = z.hdeg[(n, m + 1, i)][z.vdeg[(n, m, k)][sx]]
                        if a != b:
                            raise SchemaError("h/v degeneracies do not commute")
                    if n >= 1 and m < q:
                        a = z.vdeg[(n - 1, m, k)][z.hface[(n, m, i)][sx]]
                        b = z.hface[(n, m + 1, i)][z.vdeg[(n, m, k)][sx]]
                        if a != b:
                            raise SchemaError("h face / v degeneracy mix fails")
    return True


def bisset_column(z, m):
    """The horizontal simplicial set at fixed vertical degree m."""
    p, _ = z.caps
    simplices = tuple(z.simplices[(n, m)] for n in range(p + 1))
    face = {(n, i): z.hface[(n, m, i)]
            for n in range(1, p + 1) for i in range(n + 1)}
    deg = {(n, j): z.hdeg[(n, m, j)]
           for n in range(p) for j in range(n + 1)}
    return SSet(p, simplices, face, deg)


def bisset_row(z, n):
    """The vertical simplicial set at fixed horizontal degree n."""
    _, q = z.caps
    simplices = tuple(z.simplices[(n, m)] for m in range(q + 1))
    face = {(m, i): z.vface[(n, m, i)]
            for m in range(1, q + 1) for i in range(m + 1)}
    deg = {(m, j): z.vdeg[(n, m, j)]
           for m in range(q) for j in range(m + 1)}
    return SSet(q, simplices, face, deg)


def validate_smap(f):
    """Check that an SMap commutes with every stored face and degeneracy."""
    x, y = f.source, f.target
    if x.cap != y.cap:
        raise SchemaError("SMap endpoints have different caps")
    for n in range(x.cap + 1):
        for sx in x.simplices[n]:
            if f.level[n][sx] not in set(y.simplices[n]):
                raise SchemaError("map value outside target at degree %d" % n)
    for n in range(1, x.cap + 1):
        for i in range(n + 1):
            for sx in x.simplices[n]:
                if f(n - 1, x.d(n, i, sx)) != y.face[(n, i)][f(n, sx)]:
                    raise SchemaError("map does not commute with d_%d" % i)
    for n in range(x.cap):
        for j in range(n + 1):
            for sx in x.simplices[n]:
                if f(n + 1, x.s(n, j, sx)) != y.degeneracy[(n, j)][f(n, sx)]:
                    raise SchemaError("map does not commute with s_%d" % j)
    return True


def identity_smap(x):
    return SMap(x, x, {n: {sx: sx for sx in x.simplices[n]}
                       for n in range(x.cap + 1)})


def compose_smaps(g, f):
    return SMap(f.source, g.target,
                {n: {sx: g.level[n][f.level[n][sx]]
                     for sx in f.source.simplices[n]}
                 for n in range(f.source.cap + 1)})


def smaps_equal(f, g):
    return all(f.level[n] == g.level[n] for n in range(f.source.cap + 1))


# ---------------------------------------------------------------------------
# basic constructions

def monotone_maps(n, k):
    """Monotone maps [n] -> [k] as value tuples of length n+1."""
    out = []

    def rec(prefix, lo):
        if len(prefix) == n + 1:
            out.append(tuple(prefix))
            return
        for v in range(lo, k + 1):
            rec(prefix + [v], v)
    rec([], 0)
    return out


def standard_simplex(k, cap):
    """Delta[k]: simplices in degree n are monotone maps [n] -> [k]."""
    simplices = tuple(tuple(monotone_maps(n, k)) for n in range(cap + 1))
    face = {}
    degeneracy = {}
    for n in range(1, cap + 1):
        for i in range(n + 1):
            face[(n, i)] = {t: t[:i] + t[i + 1:] for t in simplices[n]}
    for n in range(cap):
        for j in range(n + 1):
            degeneracy[(n, j)] = {t: t[:j] + (t[j],) + t[j:]
                                  for t in simplices[n]}
    return SSet(cap, simplices, face, degeneracy)


def boundary_simplex(k, cap):
    """The boundary of Delta[k]: the non-surjective monotone maps."""
    full = standard_simplex(k, cap)
    keep = [tuple(t for t in full.simplices[n] if len(set(t)) < k + 1)
            for n in range(cap + 1)]
    keep_sets = [set(level) for level in keep]
    face = {key: {t: v for t, v in m.items() if t in keep_sets[key[0]]}
            for key, m in full.face.items()}
    degeneracy = {key: {t: v for t, v in m.items() if t in keep_sets[key[0]]}
                  for key, m in full.degeneracy.items()}
    return SSet(cap, tuple(keep), face, degeneracy)


def point(cap):
    """The terminal simplicial set: one simplex per degree."""
    return standard_simplex(0, cap)


def constant_sset(elements, cap):
    """Constant simplicial set on a finite set, identities everywhere."""
    elements = tuple(sorted(elements, key=_skey))
    ident = {e: e for e in elements}
    face = {(n, i): dict(ident) for n in range(1, cap + 1)
            for i in range(n + 1)}
    degeneracy = {(n, j): dict(ident) for n in range(cap)
                  for j in range(n + 1)}
    return SSet(cap, tuple(elements for _ in range(cap + 1)),
                face, degeneracy)


def coproduct(xs):
    """Disjoint union; simplices are tagged (index, simplex).

    Returns (sset, injections).
    """
    if not xs:
        raise ValueError("empty coproduct not supported")
    cap = xs[0].cap
    if any(x.cap != cap for x in xs):
        raise SchemaError("coproduct factors must share a cap")
    simplices = tuple(tuple((t, sx) for t, x in enumerate(xs)
                            for sx in x.simplices[n])
                      for n in range(cap + 1))
    face = {}
    degeneracy = {}
    for n in range(1, cap + 1):
        for i in range(n + 1):
            face[(n, i)] = {(t, sx): (t, x.d(n, i, sx))
                            for t, x in enumerate(xs)
                            for sx in x.simplices[n]}
    for n in range(cap):
        for j in range(n + 1):
            degeneracy[(n, j)] = {(t, sx): (t, x.s(n, j, sx))
                                  for t, x in enumerate(xs)
                                  for sx in x.simplices[n]}
    out = SSet(cap, simplices, face, degeneracy)
    injections = [SMap(x, out, {n: {sx: (t, sx) for sx in x.simplices[n]}
                                for n in range(cap + 1)})
                  for t, x in enumerate(xs)]
    return out, injections


class UnionFind:
    """Union-find with path compression over hashable elements."""

    def __init__(self):
        self.parent = {}

    def add(self, x):
        self.parent.setdefault(x, x)

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb
            return True
        return False

    def classes(self):
        out = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return out


def quotient(x, rel):
    """Quotient by levelwise relation pairs, closed under structure maps.

    ``rel`` is an iterable of (degree, simplex, simplex).  Identifications
    propagate along all faces and degeneracies until a fixpoint is reached;
    classes are relabeled by their repr-least member.  Returns
    (sset, projection SMap).
    """
    uf = UnionFind()
    for n in range(x.cap + 1):
        for sx in x.simplices[n]:
            uf.add((n, sx))
    pending = []
    for (n, a, b) in rel:
        if not (0 <= n <= x.cap):
            raise SchemaError("relation pair at degree %d outside cap" % n)
        if a not in set(x.simplices[n]) or b not in set(x.simplices[n]):
            raise SchemaError("relation pair names unknown simplices")
        pending.append((n, a, b))
    while pending:
        n, a, b = pending.pop()
        if not uf.union((n, a), (n, b)):
            continue
        if n >= 1:
            for i in range(n + 1):
                pending.append((n - 1, x.d(n, i, a), x.d(n, i, b)))
        if n < x.cap:
            for j in range(n + 1):
                pending.append((n + 1, x.s(n, j, a), x.s(n, j, b)))
    label = {}
    for members in uf.classes().values():
        rep = min((sx for (_, sx) in members), key=_skey)
        for (n, sx) in members:
            label[(n, sx)] = rep

    def cls(n, sx):
        return label[(n, sx)]
    simplices = tuple(tuple(sorted({cls(n, sx) for sx in x.simplices[n]},
                                   key=_skey))
                      for n in range(x.cap + 1))
    face = {}
    degeneracy = {}
    for n in range(1, x.cap + 1):
        for i in range(n + 1):
            face[(n, i)] = {cls(n, sx): cls(n - 1, x.d(n, i, sx))
                            for sx in x.simplices[n]}
    for n in range(x.cap):
        for j in range(n + 1):
            degeneracy[(n, j)] = {cls(n, sx): cls(n + 1, x.s(n, j, sx))
                                  for sx in x.simplices[n]}
    out = SSet(x.cap, simplices, face, degeneracy)
    proj = SMap(x, out, {n: {sx: cls(n, sx) for sx in x.simplices[n]}
                         for n in range(x.cap + 1)})
    return out, proj


def product(x, k):
    """Levelwise product with componentwise structure maps.

    This realizes the tensor action of a simplicial finite set on a
    set-valued simplicial object: the degreewise coproduct of copies of
    X_n indexed by K_n is exactly X_n x K_n.
    """
    if x.cap != k.cap:
        raise SchemaError("product factors must share a cap")
    cap = x.cap
    simplices = tuple(tuple((a, b) for a in x.simplices[n]
                            for b in k.simplices[n])
                      for n in range(cap + 1))
    face = {}
    degeneracy = {}
    for n in range(1, cap + 1):
        for i in range(n + 1):
            face[(n, i)] = {(a, b): (x.d(n, i, a), k.d(n, i, b))
                            for (a, b) in simplices[n]}
    for n in range(cap):
        for j in range(n + 1):
            degeneracy[(n, j)] = {(a, b): (x.s(n, j, a), k.s(n, j, b))
                                  for (a, b) in simplices[n]}
    return SSet(cap, simplices, face, degeneracy)


def product_projections(x, k):
    prod = product(x, k)
    p1 = SMap(prod, x, {n: {(a, b): a for (a, b) in prod.simplices[n]}
                        for n in range(x.cap + 1)})
    p2 = SMap(prod, k, {n: {(a, b): b for (a, b) in prod.simplices[n]}
                        for n in range(x.cap + 1)})
    return prod, p1, p2


def cylinder_ends(x):
    """The two end inclusions of the cylinder x -> x * Delta[1].

    Convention: d0 pairs a simplex with the degenerate simplex on vertex 1
    of Delta[1] (induced by the coface [0] -> [1] missing 0), d1 with the
    one on vertex 0.
    """
    interval = standard_simplex(1, x.cap)
    cyl = product(x, interval)
    d0 = SMap(x, cyl, {n: {sx: (sx, (1,) * (n + 1)) for sx in x.simplices[n]}
                       for n in range(x.cap + 1)})
    d1 = SMap(x, cyl, {n: {sx: (sx, (0,) * (n + 1)) for sx in x.simplices[n]}
                       for n in range(x.cap + 1)})
    return cyl, d0, d1


def check_homotopy(h, f, g):
    """True iff h is a simplicial homotopy from f to g.

    h must be an SMap from the cylinder of f.source (as built by
    cylinder_ends) to f.target, and h.d0 = f, h.d1 = g levelwise.
    """
    x = f.source
    _, d0, d1 = cylinder_ends(x)
    return smaps_equal(compose_smaps(h, d0), f) and \
        smaps_equal(compose_smaps(h, d1), g)


def check_extra_degeneracy(eps, s, side):
    """Verify the extra-degeneracy identities for an augmentation.

    ``eps`` is an SMap from X to a constant simplicial set on A (every
    degree the same simplex set, identity structure maps).  ``s`` maps
    degrees to dicts: s[-1] is the section A -> X_0 and s[n] is the extra
    map X_n -> X_{n+1} for 0 <= n <= cap-1.

    The identity list is fixed here (one per side, following the usual
    convention for augmented simplicial objects):

    low side  (an extra s_{-1}):
        d_0 s_{-1} = 1,   eps s_{-1}|_A = 1_A,
        d_{i+1} s_{-1} = s_{-1} d_i,   s_{j+1} s_{-1} = s_{-1} s_j,
        s_0 s_{-1}|_A = s_{-1} s_{-1}|_A
    high side (an extra s_{n+1} on X_n and a section s_0: A -> X_0):
        d_{n+1} s_{n+1} = 1,   eps s_0|_A = 1_A,
        d_i s_{n+1} = s_n d_i (i <= n; at n = 0 the right side is
        s_0 eps),   s_i s_{n+1} = s_{n+2} s_i (i <= n)
    """
    x = eps.source
    const = eps.target
    aset = list(const.simplices[0])
    if -1 not in s:
        raise SchemaError("missing section A -> X_0")
    for n in range(x.cap):
        if n not in s:
            raise SchemaError("missing extra-degeneracy level %d" % n)
    sec = s[-1]

    def eps0(sx):
        return eps.level[0][sx]

    if side == "low":
        for a in aset:
            if eps0(sec[a]) != a:
                return False
            if x.cap >= 1 and x.s(0, 0, sec[a]) != s[0][sec[a]]:
                return False
        for n in range(x.cap):
            for sx in x.simplices[n]:
                y = s[n][sx]
                if x.d(n + 1, 0, y) != sx:
                    return False
                for i in range(n + 1):
                    prev = sec[eps0(sx)] if n == 0 else s[n - 1][x.d(n, i, sx)]
                    if x.d(n + 1, i + 1, y) != prev:
                        return False
                if n + 1 < x.cap:
                    for j in range(n + 1):
                        if x.s(n + 1, j + 1, y) != s[n + 1][x.s(n, j, sx)]:
                            return False
        return True
    if side == "high":
        for a in aset:
            if eps0(sec[a]) != a:
                return False
        for n in range(x.cap):
            for sx in x.simplices[n]:
                y = s[n][sx]
                if x.d(n + 1, n + 1, y) != sx:
                    return False
                for i in range(n + 1):
                    prev = sec[eps0(sx)] if n == 0 else s[n - 1][x.d(n, i, sx)]
                    if x.d(n + 1, i, y) != prev:
                        return False
                if n + 1 < x.cap:
                    for j in range(n + 1):
                        if x.s(n + 1, j, y) != s[n + 1][x.s(n, j, sx)]:
                            return False
        return True
    raise ValueError("side must be 'low' or 'high'")


def diagonal(z, cap=None):
    """Diagonal of a bisimplicial set: degree n is bidegree (n, n)."""
    p, q = z.caps
    if cap is None:
        cap = min(p, q)
    if cap > min(p, q):
        raise CapError("diagonal cap %d exceeds bidegree caps %r" % (cap, z.caps))
    simplices = tuple(z.simplices[(n, n)] for n in range(cap + 1))
    face = {}
    degeneracy = {}
    for n in range(1, cap + 1):
        for i in range(n + 1):
            face[(n, i)] = {sx: z.hface[(n, n - 1, i)][z.vface[(n, n, i)][sx]]
                            for sx in simplices[n]}
    for n in range(cap):
        for j in range(n + 1):
            degeneracy[(n, j)] = {sx: z.hdeg[(n, n + 1, j)][z.vdeg[(n, n, j)][sx]]
                                  for sx in simplices[n]}
    return SSet(cap, simplices, face, degeneracy)


def opposite_sset(x):
    """Reverse the simplicial direction: new d_i = old d_{n-i}."""
    face = {(n, i): x.face[(n, n - i)]
            for n in range(1, x.cap + 1) for i in range(n + 1)}
    degeneracy = {(n, j): x.degeneracy[(n, n - j)]
                  for n in range(x.cap) for j in range(n + 1)}
    return SSet(x.cap, x.simplices, face, degeneracy)


def opposite_smap(f):
    return SMap(opposite_sset(f.source), opposite_sset(f.target), f.level)
