import pytest

from hocolimkit import fincat
from hocolimkit.fincat import SchemaError


def test_poset_category_validates():
    for n in range(4):
        c = fincat.poset_category(n)
        assert fincat.validate_category(c)["status"] == "pass"


def test_identity_synthesis_and_table_completion():
    c = fincat.make_fincat(["x", "y"], [("f", "x", "y")], {})
    assert c.identity["x"] == "id_x"
    assert c.compose[("f", "id_x")] == "f"
    assert c.compose[("id_y", "f")] == "f"


def test_duplicate_morphism_id_rejected():
    with pytest.raises(SchemaError):
        fincat.make_fincat(["x"], [("f", "x", "x"), ("f", "x", "x")],
                           {("f", "f"): "f"})


def test_validate_category_reports_missing_composite():
    c = fincat.make_fincat(["x", "y", "z"],
                           [("f", "x", "y"), ("g", "y", "z")], {})
    rep = fincat.validate_category(c)
    assert rep["status"] == "fail"
    assert rep["violation"] == "missing-composite"
    assert (rep["g"], rep["f"]) == ("g", "f")


def test_validate_category_catches_broken_associativity():
    # two parallel endomorphisms with a non-associative table
    c = fincat.make_fincat(["e"], [("p", "e", "e"), ("q", "e", "e")],
                           {("p", "p"): "q", ("p", "q"): "q",
                            ("q", "p"): "p", ("q", "q"): "q"})
    rep = fincat.validate_category(c)
    assert rep["status"] == "fail"


def test_product_and_opposite():
    c = fincat.product_category(fincat.poset_category(1),
                                fincat.poset_category(1))
    assert fincat.validate_category(c)["status"] == "pass"
    assert len(c.objects) == 4
    op = fincat.opposite(fincat.poset_category(2))
    assert fincat.validate_category(op)["status"] == "pass"
    assert op.src(("le", 0, 1)) == 1


def test_functor_validation():
    c1 = fincat.poset_category(1)
    f = fincat.identity_functor(c1)
    assert fincat.validate_functor(f)["status"] == "pass"
    bad = fincat.Functor(c1, c1, {0: 0, 1: 0},
                         dict(f.mor_map))
    rep = fincat.validate_functor(bad)
    assert rep["status"] == "fail" and rep["violation"] == "src-tgt"


def test_comma_under_terminal_vertex():
    c1 = fincat.poset_category(1)
    ident = fincat.identity_functor(c1)
    cat, u = ident, None
    cat, u = fincat.comma_under(0, ident)
    # (0/[1]) has objects (0, id) and (1, le01), shaped like [1]
    assert len(cat.objects) == 2
    assert fincat.validate_category(cat)["status"] == "pass"
    assert fincat.validate_functor(u)["status"] == "pass"
    cat1, _ = fincat.comma_under(1, ident)
    assert len(cat1.objects) == 1


def test_comma_over_tracks_target_arrow():
    c2 = fincat.poset_category(2)
    ident = fincat.identity_functor(c2)
    cat, u = fincat.comma_over(ident, 2)
    assert fincat.validate_category(cat)["status"] == "pass"
    assert fincat.validate_functor(u)["status"] == "pass"
    assert len(cat.objects) == 3
    # every non-identity morphism id carries its target arrow
    for m in cat.mor_ids():
        src, g, a = m
        assert cat.morphisms[m].tgt[1] == a


def test_initial_terminal_objects():
    c2 = fincat.poset_category(2)
    assert fincat.initial_objects(c2) == [0]
    assert fincat.terminal_objects(c2) == [2]
    sp = fincat.span_category()
    assert fincat.initial_objects(sp) == ["b"]
    assert fincat.terminal_objects(sp) == []


def test_chains_and_faces():
    c1 = fincat.poset_category(1)
    assert len(fincat.chains(c1, 0)) == 2
    assert len(fincat.chains(c1, 1)) == 3
    assert len(fincat.chains(c1, 2)) == 4
    ch = (0, (("le", 0, 1), c1.identity[1]))
    assert fincat.chain_face(c1, ch, 0) == (1, (c1.identity[1],))
    assert fincat.chain_face(c1, ch, 1) == (0, (("le", 0, 1),))
    assert fincat.chain_face(c1, ch, 2) == (0, (("le", 0, 1),))
    assert fincat.chain_degeneracy(c1, (0, ()), 0) == (0, (c1.identity[0],))


def test_nerve_is_valid_sset():
    from hocolimkit import sset
    n = fincat.nerve(fincat.poset_category(1), 3)
    assert n.sizes() == [2, 3, 4, 5]
    assert sset.audit_sset(n)
    n2 = fincat.nerve(fincat.span_category(), 3)
    assert sset.audit_sset(n2)
    assert n2.sizes()[0] == 3


def test_nerve_of_functor_is_simplicial():
    from hocolimkit import sset
    c1, c2 = fincat.poset_category(1), fincat.poset_category(2)
    f = fincat.Functor(c1, c2, {0: 0, 1: 2},
                       {("le", 0, 1): ("le", 0, 2),
                        c1.identity[0]: c2.identity[0],
                        c1.identity[1]: c2.identity[2]})
    fincat.validate_functor(f)
    nf = fincat.nerve_of_functor(f, 3)
    assert sset.validate_smap(nf)
