from fractions import Fraction

import pytest

import symbool


def test_cyclic_table():
    table = symbool.coinvariant_table("cyclic", 3, op="union")
    assert table["group"] == "Z_3"
    assert table["labels"][1] == "({},{},{1})"
    assert table["table"][(1, 1)] == {1: Fraction(1, 3), 2: Fraction(2, 3)}


def test_orbit_count_matches_burnside():
    assert symbool.orbit_count("sym", 5) == (6, 6)
    assert symbool.orbit_count("young", blocks=[2, 1]) == (6, 6)


def test_closed_forms():
    assert symbool.closed_union(1, 2, 3) == {2: Fraction(2, 3), 3: Fraction(1, 3)}
    assert symbool.closed_intersection(1, 2, 3) == {0: Fraction(1, 3), 1: Fraction(2, 3)}
    assert symbool.closed_complement(1, 3) == 2
    report = symbool.verify_closed_forms(3)
    assert report["union"] and report["intersection"] and report["complement"]
    assert (1, 2) in report["uncorrected_mismatches"]


def test_axioms():
    assert symbool.failed_axioms(3) == []
    assert symbool.failed_axioms_coinvariant("sym", 2) == [3, 5, 6]


def test_stone():
    monoid = '{"size": 2, "union": [[0,1],[1,1]], "intersection": [[0,0],[0,1]], "complement": [1,0], "empty": 0, "total": 1}'
    atoms, images = symbool.stone_atoms(monoid)
    assert atoms == [1]
    assert images == [(), (1,)]


def test_inclusion_exclusion():
    assert symbool.classical_ie([1, 1, 1], [[1, 2], [2, 3], [1, 3]]) == (3, 3)
    r = symbool.ie_verify("elementary", 2, [[[1], [2]], [[1], []]], [1, 1])
    assert r == {"lhs": Fraction(3, 2), "rhs": Fraction(3, 2), "equal": True}
    r = symbool.ie_verify("homogeneous", 2, [[[1, 2], [3]], [[2, 3], [1]]], ["2", "-1/2", Fraction(3, 4)])
    assert r["lhs"] == r["rhs"] == Fraction(43, 4)


def test_nfold_union():
    u = symbool.nfold_union([[[1], [2]], [[1], []]], 2)
    assert u == {((1,), (2,)): Fraction(1, 2), ((1,), (1, 2)): Fraction(1, 2)}


def test_dist_product():
    coin = {(): Fraction(1, 2), (1,): Fraction(1, 2)}
    assert symbool.dist_product("union", 1, coin, coin) == {(): Fraction(1, 4), (1,): Fraction(3, 4)}


def test_errors():
    with pytest.raises(ValueError):
        symbool.closed_union(3, 1, 2)
    with pytest.raises(symbool.BudgetExceeded):
        symbool.verify_closed_forms(9)


def test_cli():
    code, out, _ = symbool.run_cli(["oracle", "--check", "closed-forms", "--k", "2"])
    assert code == 0
    assert "union formula: matches brute force" in out
