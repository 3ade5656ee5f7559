import pytest
from hypothesis import given, settings, strategies as st

from hocolimkit import fincat, sset
from hocolimkit.sset import CapError, SchemaError


def circle(cap):
    out, _ = sset.quotient(sset.standard_simplex(1, cap), [(0, (0,), (1,))])
    return out


def test_standard_simplex_sizes():
    d2 = sset.standard_simplex(2, 2)
    assert d2.sizes() == [3, 6, 10]
    assert sset.audit_sset(d2)
    assert sset.boundary_simplex(2, 2).sizes() == [3, 6, 9]
    assert sset.point(3).sizes() == [1, 1, 1, 1]


def test_audit_catches_broken_identity():
    d1 = sset.standard_simplex(1, 2)
    face = dict(d1.face)
    bad = dict(face[(1, 0)])
    bad[(0, 1)] = (0,)
    bad[(0, 0)] = (1,)  # swap two values: d0 d1 = d0 d0 now fails
    face[(1, 0)] = bad
    broken = sset.SSet(2, d1.simplices, face, d1.degeneracy)
    with pytest.raises(SchemaError):
        sset.audit_sset(broken)


def test_degenerate_simplices_are_stored():
    p = sset.point(3)
    assert p.is_degenerate(2, p.simplices[2][0])
    assert not p.is_degenerate(0, p.simplices[0][0])


def test_coproduct_and_quotient():
    p = sset.point(2)
    two, injs = sset.coproduct([p, p])
    assert two.sizes() == [2, 2, 2]
    assert sset.audit_sset(two)
    a = injs[0].level[0][p.simplices[0][0]]
    b = injs[1].level[0][p.simplices[0][0]]
    one, proj = sset.quotient(two, [(0, a, b)])
    assert one.sizes() == [1, 1, 1]
    assert sset.validate_smap(proj)


def test_quotient_closes_under_structure_maps():
    c = circle(3)
    assert c.sizes() == [1, 2, 3, 4]
    assert sset.audit_sset(c)


def test_quotient_rejects_unknown_simplices():
    p = sset.point(2)
    with pytest.raises(SchemaError):
        sset.quotient(p, [(0, (0,), (9, 9))])


def test_product_is_levelwise():
    d1 = sset.standard_simplex(1, 2)
    prod, p1, p2 = sset.product_projections(d1, d1)
    assert prod.sizes() == [4, 9, 16]
    assert sset.audit_sset(prod)
    assert sset.validate_smap(p1) and sset.validate_smap(p2)


def test_cylinder_ends_and_trivial_homotopy():
    x = sset.boundary_simplex(1, 2)
    cyl, d0, d1 = sset.cylinder_ends(x)
    assert sset.validate_smap(d0) and sset.validate_smap(d1)
    # projecting the cylinder back gives a homotopy from id to id
    h = sset.SMap(cyl, x, {n: {(a, b): a for (a, b) in cyl.simplices[n]}
                           for n in range(x.cap + 1)})
    assert sset.validate_smap(h)
    ident = sset.identity_smap(x)
    assert sset.check_homotopy(h, ident, ident)


def test_extra_degeneracy_cone_point():
    # Delta[1] augments to a point with the "last vertex" contraction
    d1 = sset.standard_simplex(1, 3)
    pt = sset.constant_sset([("pt",)], 3)
    eps = sset.SMap(d1, pt, {n: {sx: ("pt",) for sx in d1.simplices[n]}
                             for n in range(4)})
    s = {-1: {("pt",): (1,)}}
    for n in range(3):
        s[n] = {sx: sx + (1,) for sx in d1.simplices[n]}
    assert sset.check_extra_degeneracy(eps, s, "high")


def test_extra_degeneracy_detects_fake():
    x = sset.boundary_simplex(1, 2)   # two points, not contractible
    pt = sset.constant_sset([("pt",)], 2)
    eps = sset.SMap(x, pt, {n: {sx: ("pt",) for sx in x.simplices[n]}
                            for n in range(3)})
    s = {-1: {("pt",): (0,)}}
    for n in range(2):
        s[n] = {sx: sx + (sx[-1],) for sx in x.simplices[n]}
    assert not sset.check_extra_degeneracy(eps, s, "high")


def test_diagonal_of_constant_bisset():
    from hocolimkit import replace
    c1 = fincat.poset_category(1)
    dg = replace.constant_diagram(c1, sset.point(2))
    r = replace.simplicial_replacement(dg, 2)
    diag = sset.diagonal(r, 2)
    # constant point diagram: diagonal is the nerve of the shape
    assert diag.sizes() == fincat.nerve(c1, 2).sizes()
    assert sset.audit_sset(diag)


def test_opposite_sset_involutive_and_valid():
    n = fincat.nerve(fincat.poset_category(2), 3)
    op = sset.opposite_sset(n)
    assert sset.audit_sset(op)
    opop = sset.opposite_sset(op)
    assert all(opop.face[k] == n.face[k] for k in n.face)


def test_smap_validation_rejects_noncommuting():
    d1 = sset.standard_simplex(1, 2)
    pt = sset.point(2)
    level = {n: {sx: pt.simplices[n][0] for sx in pt.simplices[n]}
             for n in range(3)}
    f = sset.SMap(pt, d1, {0: {(0,): (0,)},
                           1: {(0, 0): (0, 1)},       # not degenerate image
                           2: {(0, 0, 0): (0, 0, 0)}})
    with pytest.raises(SchemaError):
        sset.validate_smap(f)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 3), st.integers(1, 3))
def test_simplex_audits_property(k, cap):
    assert sset.audit_sset(sset.standard_simplex(k, cap))
    if k >= 1:
        assert sset.audit_sset(sset.boundary_simplex(k, cap))


@settings(max_examples=20, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 1), st.integers(0, 1)),
                max_size=4))
def test_quotient_projection_always_simplicial(pairs):
    x = sset.boundary_simplex(1, 2)
    verts = x.simplices[0]
    rel = [(0, verts[a], verts[b]) for (a, b) in pairs]
    out, proj = sset.quotient(x, rel)
    assert sset.audit_sset(out)
    assert sset.validate_smap(proj)
