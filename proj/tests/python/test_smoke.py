import json

import pytest

import rlw


def test_builders_and_validation():
    g3 = rlw.goedel_chain(3)
    assert g3.size == 3
    assert rlw.validate_errors(g3) == []
    assert rlw.boolean_algebra(2).size == 4
    assert rlw.product(g3, rlw.goedel_chain(2)).size == 6


def test_json_round_trip():
    g3 = rlw.goedel_chain(3)
    text = g3.to_json()
    doc = json.loads(text)
    assert doc["size"] == 3
    assert rlw.from_json(text) == g3


def test_broken_table_is_reported():
    doc = json.loads(rlw.goedel_chain(3).to_json())
    doc["impl"][2][0] = 2
    errors = rlw.validate_errors(rlw.from_json(json.dumps(doc)))
    assert any("residuation" in e for e in errors)


def test_filters_and_primes():
    g3 = rlw.goedel_chain(3)
    assert rlw.filters(g3) == [[2], [1, 2], [0, 1, 2]]
    assert rlw.prime_filters(g3) == [[2], [1, 2]]
    assert rlw.zltrl_count(g3) == 3


def test_quotient_and_topology():
    g3 = rlw.goedel_chain(3)
    assert rlw.quotient(g3, [1, 2]) == rlw.goedel_chain(2)
    assert rlw.min_neighborhoods(g3, [[1, 2]]) == [[0], [1, 2], [1, 2]]
    with pytest.raises(ValueError):
        rlw.quotient(g3, [0, 2])


def test_completion_and_analysis():
    g3 = rlw.goedel_chain(3)
    c = rlw.completion(g3)
    assert c["size"] == 3
    assert c["filter_count"] == 3
    assert c["isomorphism"] is True

    a = rlw.analyze(g3)
    assert a["dimension"] == 1
    assert a["subdirectly_irreducible"] is True
    assert a["monolith"] == [1, 2]
    assert a["key"] == g3.canonical_key()


def test_catalog_counts():
    counts = rlw.catalog_counts(3)
    assert list(counts) == [1, 1, 2]
