import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from hocolimkit import fincat, homology, sset
from hocolimkit.fincat import SchemaError
from hocolimkit.sset import CapError


def circle(cap):
    out, _ = sset.quotient(sset.standard_simplex(1, cap), [(0, (0,), (1,))])
    return out


def sphere(cap):
    d2 = sset.standard_simplex(2, cap)
    rel = []
    for n in range(cap + 1):
        bdy = [sx for sx in d2.simplices[n] if len(set(sx)) <= 2]
        rel.extend((n, bdy[0], sx) for sx in bdy[1:])
    out, _ = sset.quotient(d2, rel)
    return out


# ---------------------------------------------------------------------------
# Smith normal form

def minor_gcd_factors(mat, rows, cols):
    """Independent oracle: k-th invariant factor = gcd of kxk minors
    divided by gcd of (k-1)x(k-1) minors.  Only for tiny matrices."""

    def minor_gcd(k):
        if k == 0:
            return 1
        g = 0
        for ri in itertools.combinations(range(rows), k):
            for ci in itertools.combinations(range(cols), k):
                sub = [[mat[i][j] for j in ci] for i in ri]
                g = math.gcd(g, _det(sub))
        return g

    def _det(m):
        k = len(m)
        if k == 1:
            return m[0][0]
        return sum((-1) ** j * m[0][j] *
                   _det([row[:j] + row[j + 1:] for row in m[1:]])
                   for j in range(k))

    out = []
    prev = 1
    for k in range(1, min(rows, cols) + 1):
        g = minor_gcd(k)
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


def test_snf_frozen_examples():
    assert homology.smith_normal_form([[2, 0], [0, 3]]) == ([1, 6], 2)
    assert homology.smith_normal_form([[0]]) == ([], 0)
    assert homology.smith_normal_form([[4, 2], [2, 4]])[0] == [2, 6]
    assert homology.smith_normal_form([]) == ([], 0)


def test_snf_divisibility_chain():
    f, r = homology.smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])
    assert r == len(f)
    for a, b in zip(f, f[1:]):
        assert b % a == 0


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_snf_against_minor_gcd_oracle(rows, cols, data):
    mat = [[data.draw(st.integers(-6, 6)) for _ in range(cols)]
           for _ in range(rows)]
    factors, rank = homology.smith_normal_form(mat)
    assert factors == minor_gcd_factors(mat, rows, cols)
    for a, b in zip(factors, factors[1:]):
        assert b % a == 0


# ---------------------------------------------------------------------------
# normalized chains and homology

def test_boundary_squares_to_zero_is_asserted():
    for x in (sset.standard_simplex(2, 3), circle(3), sphere(3),
              fincat.nerve(fincat.span_category(), 3)):
        cc = homology.normalized_chains(x)   # asserts dd = 0 internally
        assert cc.top == x.cap


def test_homology_frozen_values():
    assert homology.homology_of(sset.point(3)).as_dict() == [
        {"degree": 0, "betti": 1, "torsion": []},
        {"degree": 1, "betti": 0, "torsion": []},
        {"degree": 2, "betti": 0, "torsion": []}]
    h = homology.homology_of(sset.boundary_simplex(2, 3), 1)
    assert (h.betti(0), h.betti(1)) == (1, 1)
    hc = homology.homology_of(circle(3), 1)
    assert (hc.betti(0), hc.betti(1)) == (1, 1)
    hs = homology.homology_of(sphere(4), 3)
    assert [g[1] for g in hs.groups] == [1, 0, 1, 0]


def test_homology_invariant_under_relabeling():
    x = circle(3)
    relab = {n: {sx: ("wrapped", n, sx) for sx in x.simplices[n]}
             for n in range(4)}
    y = sset.SSet(3, tuple(tuple(relab[n][sx] for sx in x.simplices[n])
                           for n in range(4)),
                  {k: {relab[k[0]][a]: relab[k[0] - 1][b]
                       for a, b in mp.items()}
                   for k, mp in x.face.items()},
                  {k: {relab[k[0]][a]: relab[k[0] + 1][b]
                       for a, b in mp.items()}
                   for k, mp in x.degeneracy.items()})
    assert homology.homology_of(x).as_dict() == \
        homology.homology_of(y).as_dict()


def test_euler_characteristic_consistency():
    # alternating sum of chain dims equals alternating betti sum when the
    # top boundary-out is treated as zero and no torsion appears
    for x in (sset.boundary_simplex(2, 3), circle(3),
              fincat.nerve(fincat.poset_category(2), 3)):
        cc = homology.normalized_chains(x)
        chi_dims = sum((-1) ** n * cc.dims[n] for n in range(cc.top + 1))
        ranks = {n: homology.smith_normal_form(cc.boundary[n])[1]
                 for n in range(1, cc.top + 1)}
        ranks[0] = ranks[cc.top + 1] = 0
        chi_betti = sum((-1) ** n *
                        (cc.dims[n] - ranks[n] - ranks[n + 1])
                        for n in range(cc.top + 1))
        assert chi_dims == chi_betti


def test_homology_range_guard():
    with pytest.raises(CapError):
        homology.homology_of(sset.point(2), 2)


# ---------------------------------------------------------------------------
# quasi-isomorphism oracle

def test_quasi_iso_identity_and_collapse():
    d2 = sset.standard_simplex(2, 4)
    ident = sset.identity_smap(d2)
    assert homology.is_quasi_iso_in_range(ident, 2)["status"] == "pass"
    pt = sset.point(4)
    collapse = sset.SMap(d2, pt, {n: {sx: pt.simplices[n][0]
                                      for sx in d2.simplices[n]}
                                  for n in range(5)})
    assert homology.is_quasi_iso_in_range(collapse, 2)["status"] == "pass"


def test_quasi_iso_rejects_pi0_mismatch():
    bd = sset.boundary_simplex(1, 4)
    pt = sset.point(4)
    inc = sset.SMap(pt, bd, {n: {sx: (0,) * (n + 1)
                                 for sx in pt.simplices[n]}
                             for n in range(5)})
    rep = homology.is_quasi_iso_in_range(inc, 2)
    assert rep["status"] == "fail"
    assert rep["witness"]["kind"] == "pi0"


def test_quasi_iso_range_guard():
    ident = sset.identity_smap(sset.point(3))
    with pytest.raises(CapError):
        homology.is_quasi_iso_in_range(ident, 2)


def test_mapping_cone_sign_convention():
    # on the identity of a point the cone must be acyclic with the fixed
    # sign d(a, b) = (-da, f(a) + db)
    pt = sset.point(3)
    cx, cy, mats = homology.chain_map_of(sset.identity_smap(pt))
    cone = homology.mapping_cone(cx, cy, mats)
    assert cone.boundary[1] == [[1]]
    h = homology.homology_of_complex(cone, 1)
    assert all(b == 0 for (_, b, _t) in h.groups)


# ---------------------------------------------------------------------------
# contractibility and cofinality

def test_contractibility_verdict_labels():
    rep = homology.is_contractible_in_range(sset.standard_simplex(2, 3))
    assert rep["status"] == "passes-necessary-conditions"
    rep = homology.is_contractible_in_range(circle(3))
    assert rep["status"] == "certified-fail"
    assert rep["witness"]["degree"] == 1
    empty = sset.SSet(2, ((), (), ()),
                      {(n, i): {} for n in (1, 2) for i in range(n + 1)},
                      {(n, j): {} for n in (0, 1) for j in range(n + 1)})
    assert homology.is_contractible_in_range(empty)["status"] == \
        "certified-fail"


def test_cofinality_check_terminal_vs_initial():
    c1 = fincat.poset_category(1)
    one = fincat.poset_category(0)
    at1 = fincat.Functor(one, c1, {0: 1}, {one.identity[0]: c1.identity[1]})
    at0 = fincat.Functor(one, c1, {0: 0}, {one.identity[0]: c1.identity[0]})
    assert homology.check_homotopy_right_cofinal(at1, 3)["status"] == \
        "passes-necessary-conditions"
    rep = homology.check_homotopy_right_cofinal(at0, 3)
    assert rep["status"] == "certified-fail"
    assert rep["objects"]["1"]["witness"]["kind"] == "empty"
