import pytest

import sexpansion as sx

Z2 = [[0, 1], [1, 0]]
CHAIN2 = [[0, 0], [0, 1]]
NULL2 = [[0, 0], [0, 0]]


def test_enumeration_counts():
    assert [len(sx.enumerate_semigroups(p, False)) for p in (1, 2, 3)] == [1, 6, 63]
    assert [len(sx.enumerate_semigroups(p)) for p in (1, 2, 3)] == [1, 3, 12]


def test_mk_matrices():
    assert sx.mk_matrix(Z2) == [[2, 0], [0, 2]]
    assert sx.mk_matrix(CHAIN2) == [[1, 1], [1, 2]]
    assert sx.mk_matrix(NULL2) == [[1, 1], [1, 1]]


def test_signatures():
    assert sx.killing_inertia("so3") == (0, 3, 0)
    assert sx.expanded_inertia(Z2, "so3") == (0, 6, 0)
    assert sx.predict_signature("sl2", CHAIN2) == (4, 2, 0)
    assert sx.expanded_inertia(CHAIN2, "sl2") == (4, 2, 0)
    assert sx.predict_character(-1, 4, 0, 3) == 2
    assert sx.predict_character(-1, 4, 1, 2) == 1


def test_expand_document():
    doc = sx.expand(Z2, "so3")
    assert doc["dim"] == 6
    reduced = sx.expand(CHAIN2, "so3", reduce_zero=True)
    assert reduced["dim"] == 3
    assert reduced["expansion"]["zero_reduced"] is True


def test_discovery_and_table():
    assert sx.solve_phq("so3", "so4")[0] == (2, 0, 0)
    found = sx.discover("so3", "so4", 2)
    assert len(found) == 2
    rows = sx.table_one()
    assert len(rows) == 16
    assert rows[0] == (3, 4, 2, 0, 0)


def test_certificates():
    z2 = sx.certify_nonsimple(Z2, "so3")
    assert z2["verified"] and z2["full_split"] and z2["ideal_dim"] == 3
    null = sx.certify_nonsimple(NULL2, "so3")
    assert null["verified"] and not null["full_split"]


def test_errors():
    assert not sx.is_semigroup([[1, 0], [0, 0]])
    with pytest.raises(sx.Error):
        sx.expand(Z2, "so3", reduce_zero=True)
    with pytest.raises(ValueError):
        sx.killing_inertia("e8")
