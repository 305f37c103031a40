"""Smoke tests for the python bindings."""

import json

import pytest

import depcat


def test_generate_and_check_ring():
    doc = depcat.generate("ring", modulus=4)
    assert doc.num_objects == 1
    assert doc.num_arrows == 4
    assert doc.num_families == 16
    assert depcat.check(doc)


def test_generate_finset_counts():
    doc = depcat.generate("finset", max_object_size=3, fiber_cap=2)
    assert doc.num_objects == 4
    assert doc.num_arrows == 60
    assert doc.hom_size(2, 3) == 9
    assert doc.terminal_object() == 1
    assert doc.global_element_count(3) == 3
    assert "effective_cap=1" in doc.meta


def test_run_suites_reports():
    doc = depcat.generate("finset", max_object_size=2, fiber_cap=1)
    reports = depcat.run_suites(doc)
    assert reports
    assert all(suite["passed"] for suite in reports)
    laws = {entry["law"] for suite in reports for entry in suite["entries"]}
    assert {"fam1", "fam2", "s1", "s2", "dep1", "dep2", "depsigma.compat"} <= laws


def test_serialization_round_trip(tmp_path):
    doc = depcat.generate("poset", chain=3, fam="coslice", sigma="trivial",
                          dep="trivial", pr2="trivial")
    path = tmp_path / "chain.json"
    depcat.save(doc, str(path))
    back = depcat.load(str(path))
    assert back == doc
    parsed = json.loads(doc.to_json())
    assert parsed["version"] == 1
    assert depcat.loads(doc.to_json()) == doc


def test_mutation_is_detected():
    doc = depcat.generate("finset", max_object_size=2, fiber_cap=1)
    description, suite, mutated = depcat.mutate_for_law(doc, "s1")
    assert description
    reports = depcat.run_suites(mutated, [suite])
    entries = {e["law"]: e for s in reports for e in s["entries"]}
    assert not entries["s1"]["passed"]
    assert entries["s1"]["witness"]


def test_errors_are_typed():
    with pytest.raises(depcat.DepcatError):
        depcat.generate("nonsense")
    with pytest.raises(depcat.DepcatError):
        depcat.loads("{\"version\": 1")


def test_no_terminal_object_is_none():
    ring = depcat.generate("ring", modulus=5)
    assert ring.terminal_object() is None
    assert ring.product_apex(0, 0) is None


def test_layer_counts_and_bijection():
    from depcat._core import bijection_counts

    doc = depcat.generate("finset", max_object_size=3, fiber_cap=2)
    assert doc.fam_count_of(2) == 4  # fiber tuples over a 2-element set at cap 1
    hom, sections = bijection_counts(doc, 1, 3)
    assert hom == sections == 3
    ring = depcat.generate("ring", modulus=4)
    assert ring.fam_count_of(0) == 16
    assert all(ring.dep_count_of(lam) == 1 for lam in range(16))
