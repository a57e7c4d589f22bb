"""Factorization enumeration, orbit search, certificates, partition reports."""

import pytest

from crg import (
    BudgetExceededError,
    GroupParams,
    NotConnectedError,
    apply_braid,
    coxeter_element,
    orbit_bfs,
    same_orbit,
    verify_main_theorem,
)
from crg.hurwitz import multiset_key
from crg.orbits import enumerate_factorizations


def facts_of(params, m):
    return enumerate_factorizations(params, coxeter_element(params), m)


def test_enumeration_frozen_counts():
    assert len(facts_of(GroupParams(2, 1, 2), 2)) == 4
    assert len(facts_of(GroupParams(1, 1, 3), 2)) == 3
    assert len(facts_of(GroupParams(2, 1, 3), 3)) == 27
    assert len(facts_of(GroupParams(2, 2, 3), 2)) == 0
    assert len(facts_of(GroupParams(3, 1, 2), 3)) == 12


def test_enumeration_products_and_dedup():
    params = GroupParams(3, 1, 2)
    c = coxeter_element(params)
    facts = facts_of(params, 3)
    assert len({f.key() for f in facts}) == len(facts)
    for f in facts:
        assert f.product() == c


def test_enumeration_budget():
    with pytest.raises(BudgetExceededError):
        enumerate_factorizations(GroupParams(2, 1, 3),
                                 coxeter_element(GroupParams(2, 1, 3)), 5, budget=100)


def test_orbit_bfs_closure_and_certificates():
    params = GroupParams(2, 1, 2)
    f = facts_of(params, 4)[0]
    orbit = orbit_bfs(f)
    assert f.key() in orbit.members
    assert len(orbit) == 32
    for key, g in orbit.members.items():
        word = orbit.word_to(key)
        assert apply_braid(f, word).key() == key
        assert multiset_key(g) == multiset_key(f)


def test_orbit_budget():
    params = GroupParams(2, 1, 2)
    f = facts_of(params, 4)[0]
    with pytest.raises(BudgetExceededError):
        orbit_bfs(f, budget=5)


def test_orbit_threads_deterministic():
    params = GroupParams(2, 1, 2)
    f = facts_of(params, 4)[0]
    single = orbit_bfs(f, threads=1)
    multi = orbit_bfs(f, threads=4)
    assert list(single.members) == list(multi.members)
    assert single.parents == multi.parents


def test_same_orbit_certificate():
    params = GroupParams(2, 1, 3)
    facts = facts_of(params, 3)
    word = same_orbit(facts[0], facts[-1])
    assert apply_braid(facts[0], word).key() == facts[-1].key()
    assert same_orbit(facts[0], facts[0]) == []


def test_same_orbit_disconnected():
    params = GroupParams(2, 1, 2)
    facts = facts_of(params, 4)
    blocks = {}
    for f in facts:
        blocks.setdefault(multiset_key(f), []).append(f)
    (a, b) = [fs[0] for fs in blocks.values()][:2]
    with pytest.raises(NotConnectedError):
        same_orbit(a, b)


def test_verify_report_fields():
    report = verify_main_theorem(GroupParams(2, 1, 2), 4)
    assert report.match
    assert report.factorization_count == 64
    assert report.orbit_count == 2
    assert report.class_multiset_count == 2
    assert sorted(report.orbit_sizes) == [32, 32]
    doc = report.to_json()
    assert doc["v"] == 1 and doc["group"] == "2,1,2" and doc["match"] is True


def test_verify_single_vs_multi_thread_identical():
    for params, m in [(GroupParams(2, 1, 2), 4), (GroupParams(3, 1, 2), 3)]:
        one = verify_main_theorem(params, m, threads=1)
        many = verify_main_theorem(params, m, threads=4)
        assert one.to_json_str() == many.to_json_str()


def test_verify_zero_length():
    report = verify_main_theorem(GroupParams(2, 1, 2), 0)
    assert report.factorization_count == 0 and report.match
