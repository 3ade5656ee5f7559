"""Exact integral homology of capped simplicial sets via normalized chains
and Smith normal form, plus the mapping-cone quasi-isomorphism test and the
contractibility / right-cofinality oracles.

All arithmetic is exact (Python ints).  A cap-c simplicial set determines
H_n faithfully for n <= c-1, since the boundary out of degree c is stored;
range checks below enforce this.
"""

from dataclasses import dataclass

from . import fincat, sset
from .fincat import SchemaError, _skey
from .sset import CapError


@dataclass(frozen=True, eq=False)
class ChainComplex:
    dims: list                # dims[n], 0 <= n <= top
    boundary: dict            # n -> matrix (dims[n-1] x dims[n]) for 1 <= n <= top
    basis: dict               # n -> list of simplex ids (None for cones)

    @property
    def top(self):
        return len(self.dims) - 1


def normalized_chains(x):
    """Normalized chain complex: basis the nondegenerate simplices, boundary
    the alternating face sum with degenerate faces dropped."""
    sset.audit_sset(x)
    basis = {}
    index = {}
    for n in range(x.cap + 1):
        bn = [sx for sx in sorted(x.simplices[n], key=_skey)
              if not x.is_degenerate(n, sx)]
        basis[n] = bn
        index[n] = {sx: k for k, sx in enumerate(bn)}
    dims = [len(basis[n]) for n in range(x.cap + 1)]
    boundary = {}
    for n in range(1, x.cap + 1):
        mat = [[0] * dims[n] for _ in range(dims[n - 1])]
        for col, sx in enumerate(basis[n]):
            for i in range(n + 1):
                f = x.d(n, i, sx)
                row = index[n - 1].get(f)
                if row is not None:
                    mat[row][col] += (-1) ** i
        boundary[n] = mat
    cc = ChainComplex(dims, boundary, basis)
    assert _boundary_squares_to_zero(cc)
    return cc


def _boundary_squares_to_zero(c):
    for n in range(2, c.top + 1):
        a, b = c.boundary[n - 1], c.boundary[n]
        for j in range(c.dims[n]):
            for i in range(c.dims[n - 2]):
                if sum(a[i][k] * b[k][j] for k in range(c.dims[n - 1])) != 0:
                    return False
    return True


def smith_normal_form(mat):
    """Diagonal invariant factors of an integer matrix, exactly.

    Pivoting strategy: at each step pick the remaining entry of least
    absolute value (ties by position), move it to the pivot slot, and clear
    its row and column by division with remainder; if the pivot fails to
    divide some remaining entry, fold that row in and repeat.  Choosing the
    smallest entry keeps intermediate entries from blowing up on the desk-
    scale matrices this package produces.

    Returns (factors, rank) with factors the nonzero diagonal in
    divisibility order.
    """
    a = [row[:] for row in mat]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    t = 0
    factors = []
    while t < rows and t < cols:
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = a[i][j]
                if v and (best is None or abs(v) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        a[t], a[bi] = a[bi], a[t]
        for row in a:
            row[t], row[bj] = row[bj], row[t]
        while True:
            # clear column t
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    qout = a[i][t] // a[t][t]
                    for j in range(t, cols):
                        a[i][j] -= qout * a[t][j]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        dirty = True
            if dirty:
                continue
            # clear row t
            for j in range(t + 1, cols):
                if a[t][j]:
                    qout = a[t][j] // a[t][t]
                    for i in range(t, rows):
                        a[i][j] -= qout * a[i][t]
                    if a[t][j]:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        dirty = True
            if dirty:
                continue
            # pivot must divide the rest of the submatrix
            offender = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if a[i][j] % a[t][t]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            for j in range(t, cols):
                a[t][j] += a[offender][j]
        factors.append(abs(a[t][t]))
        t += 1
    return factors, len(factors)


@dataclass(frozen=True)
class HomologySummary:
    groups: tuple             # ((degree, betti, torsion tuple), ...)

    def betti(self, n):
        for (d, b, t) in self.groups:
            if d == n:
                return b
        raise KeyError(n)

    def torsion(self, n):
        for (d, b, t) in self.groups:
            if d == n:
                return t
        raise KeyError(n)

    def as_dict(self):
        return [{"degree": d, "betti": b, "torsion": list(t)}
                for (d, b, t) in self.groups]


def homology_of_complex(c, max_degree):
    """H_n for 0 <= n <= max_degree; needs boundary out of max_degree+1."""
    if max_degree + 1 > c.top:
        raise CapError("homology through degree %d needs chains through %d"
                       % (max_degree, max_degree + 1))
    data = {}
    for n in range(1, max_degree + 2):
        f, r = smith_normal_form(c.boundary[n])
        data[n] = (r, tuple(d for d in f if d > 1))
    data[0] = (0, ())
    groups = []
    for n in range(max_degree + 1):
        betti = c.dims[n] - data[n][0] - data[n + 1][0]
        groups.append((n, betti, data[n + 1][1]))
    return HomologySummary(tuple(groups))


def homology_of(x, max_degree=None):
    if max_degree is None:
        max_degree = x.cap - 1
    return homology_of_complex(normalized_chains(x), max_degree)


# ---------------------------------------------------------------------------
# chain maps and mapping cones

def chain_map_of(f, cx=None, cy=None):
    """Matrix form of the normalized chain map induced by an SMap.

    Degenerate images are sent to zero (the normalized quotient).
    """
    sset.validate_smap(f)
    cx = cx or normalized_chains(f.source)
    cy = cy or normalized_chains(f.target)
    mats = {}
    for n in range(cx.top + 1):
        idx = {sx: k for k, sx in enumerate(cy.basis[n])}
        mat = [[0] * cx.dims[n] for _ in range(cy.dims[n])]
        for col, sx in enumerate(cx.basis[n]):
            row = idx.get(f.level[n][sx])
            if row is not None:
                mat[row][col] = 1
        mats[n] = mat
    for n in range(1, cx.top + 1):
        lhs = _matmul(cy.boundary[n], mats[n],
                      cy.dims[n - 1], cy.dims[n], cx.dims[n])
        rhs = _matmul(mats[n - 1], cx.boundary[n],
                      cy.dims[n - 1], cx.dims[n - 1], cx.dims[n])
        if lhs != rhs:
            raise SchemaError("candidate chain map does not commute with "
                              "the boundary at degree %d" % n)
    return cx, cy, mats


def _matmul(a, b, rows, inner, cols):
    # explicit dims: an empty python list cannot carry a column count
    return [[sum(a[i][k] * b[k][j] for k in range(inner))
             for j in range(cols)] for i in range(rows)]


def mapping_cone(cx, cy, mats):
    """Cone(f)_n = X_{n-1} (+) Y_n with d(a, b) = (-da, f(a) + db)."""
    top = cx.top
    dims = [cx.dims[n - 1] + cy.dims[n] if n >= 1 else cy.dims[0]
            for n in range(top + 1)]
    boundary = {}
    for n in range(1, top + 1):
        ra = cx.dims[n - 2] if n >= 2 else 0
        rb = cy.dims[n - 1]
        ca = cx.dims[n - 1]
        cb = cy.dims[n]
        mat = [[0] * (ca + cb) for _ in range(ra + rb)]
        if n >= 2:
            bx = cx.boundary[n - 1]
            for i in range(ra):
                for j in range(ca):
                    mat[i][j] = -bx[i][j]
        fm = mats[n - 1]
        for i in range(rb):
            for j in range(ca):
                mat[ra + i][j] = fm[i][j]
        by = cy.boundary[n]
        for i in range(rb):
            for j in range(cb):
                mat[ra + i][ca + j] = by[i][j]
        boundary[n] = mat
    return ChainComplex(dims, boundary, {})


# ---------------------------------------------------------------------------
# weak-equivalence and contractibility oracles

def path_components(x):
    """Partition of the vertices by edges; returns {vertex: class repr}."""
    uf = sset.UnionFind()
    for v in x.simplices[0]:
        uf.add(v)
    if x.cap >= 1:
        for e in x.simplices[1]:
            uf.union(x.d(1, 0, e), x.d(1, 1, e))
    return {v: uf.find(v) for v in x.simplices[0]}


def is_quasi_iso_in_range(f, max_degree):
    """Homology isomorphism test through ``max_degree``: acyclic mapping
    cone in degrees <= max_degree together with a bijection on path
    components.  Demands max_degree <= cap - 2 so every group tested is
    computed from complete boundary data.
    """
    cap = f.source.cap
    if f.target.cap != cap:
        raise CapError("endpoints have different caps")
    if max_degree > cap - 2:
        raise CapError("max_degree %d needs cap >= %d, got %d"
                       % (max_degree, max_degree + 2, cap))
    cx, cy, mats = chain_map_of(f)
    px = path_components(f.source)
    py = path_components(f.target)
    fmap = {}
    for v, c in px.items():
        fmap.setdefault(c, set()).add(py[f.level[0][v]])
    classes_x = set(px.values())
    classes_y = set(py.values())
    images = set()
    for c, tgts in fmap.items():
        if len(tgts) != 1:
            raise AssertionError("map not constant on components")
        images |= tgts
    pi0_bijective = (len(classes_x) == len(classes_y) == len(images)
                     and all(len(t) == 1 for t in fmap.values()))
    cone = mapping_cone(cx, cy, mats)
    hc = homology_of_complex(cone, max_degree)
    acyclic = all(b == 0 and t == () for (_, b, t) in hc.groups)
    witness = None
    if not pi0_bijective:
        witness = {"kind": "pi0", "source": len(classes_x),
                   "target": len(classes_y), "image": len(images)}
    elif not acyclic:
        bad = [(d, b, list(t)) for (d, b, t) in hc.groups if b or t]
        witness = {"kind": "cone-homology", "groups": bad}
    return {"status": "pass" if (pi0_bijective and acyclic) else "fail",
            "max_degree": max_degree, "witness": witness}


def is_contractible_in_range(x):
    """Necessary conditions for contractibility at this cap: nonempty and
    connected with vanishing reduced homology through cap-1.  A clean pass
    is only that; a failure is definitive.
    """
    if not x.simplices[0]:
        return {"status": "certified-fail", "witness": {"kind": "empty"}}
    ncomp = len(set(path_components(x).values()))
    if ncomp != 1:
        return {"status": "certified-fail",
                "witness": {"kind": "pi0", "components": ncomp}}
    h = homology_of(x)
    for (d, b, t) in h.groups:
        expect = 1 if d == 0 else 0
        if b != expect or t != ():
            return {"status": "certified-fail",
                    "witness": {"kind": "homology", "degree": d,
                                "betti": b, "torsion": list(t)}}
    return {"status": "passes-necessary-conditions",
            "checked_through": x.cap - 1}


def check_homotopy_right_cofinal(f, cap):
    """Necessary conditions for homotopy right cofinality of f: I -> J:
    every undercategory (x/f) has nerve passing the contractibility oracle.
    """
    rep = fincat.validate_functor(f)
    if rep["status"] != "pass":
        raise SchemaError("invalid functor: %r" % (rep,))
    per_object = {}
    overall = "passes-necessary-conditions"
    for x in f.target.objects:
        cat, _ = fincat.comma_under(x, f)
        verdict = is_contractible_in_range(fincat.nerve(cat, cap))
        per_object[x] = verdict
        if verdict["status"] == "certified-fail":
            overall = "certified-fail"
    return {"status": overall, "cap": cap,
            "objects": {repr(x): v for x, v in
                        sorted(per_object.items(), key=lambda kv: _skey(kv[0]))}}
