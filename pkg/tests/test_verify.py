import json

from hocolimkit import fincat, verify


def test_random_poset_categories_are_valid():
    import random
    rng = random.Random(7)
    for _ in range(25):
        c = verify.random_poset_category(rng)
        assert fincat.validate_category(c)["status"] == "pass"
        assert len(c.objects) <= 4
        assert len(c.morphisms) <= 14


def test_random_diagrams_are_valid_and_bounded():
    import random
    from hocolimkit import replace
    rng = random.Random(3)
    for _ in range(15):
        desc, dg = verify.random_diagram(rng, 3)
        assert replace.validate_diagram(dg)
        for v in dg.values.values():
            assert sum(v.sizes()) <= 30 * len(dg.shape.objects)


def test_rosters_are_seed_deterministic():
    a = verify.diagram_roster(5, 10, 3)
    b = verify.diagram_roster(5, 10, 3)
    assert [name for name, _ in a] == [name for name, _ in b]
    for (_, x), (_, y) in zip(a, b):
        assert x.shape.objects == y.shape.objects
        for i in x.shape.objects:
            assert x.values[i].sizes() == y.values[i].sizes()


def test_reports_are_json_lines():
    reports = verify.suite_quillen_a()
    text = verify.reports_to_jsonl(reports)
    lines = text.strip().split("\n")
    assert len(lines) == len(reports)
    for line in lines:
        doc = json.loads(line)
        assert set(doc) == {"suite", "instance", "status", "detail"}


def test_suite_reports_byte_stable():
    r1 = verify.reports_to_jsonl(verify.run_suites(["quillen-a",
                                                    "cofinal-invariance"],
                                                   seed=1))
    r2 = verify.reports_to_jsonl(verify.run_suites(["quillen-a",
                                                    "cofinal-invariance"],
                                                   seed=1))
    assert r1 == r2


def test_quillen_suite_has_negative_controls():
    reports = verify.suite_quillen_a()
    refuted = [r for r in reports
               if r["detail"]["cofinality"] == "certified-fail"]
    assert len(refuted) >= 3
    assert all(r["status"] == "pass" for r in reports)
    # at least one negative control where the conclusion genuinely fails
    assert any(r["detail"]["nerve_map_quasi_iso"] == "fail"
               for r in refuted)


def test_summarize_counts():
    reports = [verify.report("s", "a", "pass"),
               verify.report("s", "b", "fail", {"w": 1})]
    s = verify.summarize(reports)
    assert s["suites"]["s"] == {"pass": 1, "fail": 1}
    assert s["failures"] == 1


def test_failing_reports_carry_witnesses():
    # force a failure through the bar=decalage certificate on tampered data
    from hocolimkit import replace, sset
    dgs = dict(verify.curated_diagrams(3))
    dg = dgs["interval-inclusion"]
    cert = replace.bar_vs_decalage_iso(dg, 1, 1)
    assert cert["status"] == "pass"
    # sanity of witness plumbing: a fail report keeps its detail dict
    rep = verify.report("bar-vs-decalage", "tampered", "fail",
                        {"violation": "not-bijective", "bidegree": [0, 0]})
    line = verify.reports_to_jsonl([rep])
    assert json.loads(line)["detail"]["violation"] == "not-bijective"
