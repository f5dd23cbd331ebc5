import pytest

import inertia_lab


def test_cyclic_cohomology():
    assert inertia_lab.cohomology("ade:A4", 4)["text"] == "Z/5"
    assert inertia_lab.cohomology("ade:D4", 2)["torsion"] == ["2", "2"]


def test_inertia_rows():
    rows = inertia_lab.inertia("sym:3")
    assert [r["centralizer_order"] for r in rows] == [6, 2, 3]
    assert sum(r["class_size"] for r in rows) == 6


def test_shuffle_signs():
    signs = [s[2] for s in inertia_lab.shuffles(1, 1)]
    assert signs == [1, -1]
    assert len(inertia_lab.shuffles(3, 2)) == 10


def test_group_table_is_a_latin_square():
    table = inertia_lab.group_table("ade:E6")
    assert len(table) == inertia_lab.group_order("ade:E6") == 24
    for row in table:
        assert sorted(row) == list(range(24))


def test_transgression_shape():
    m = inertia_lab.transgression_matrix("sym:3", 3, "QmodZ")
    assert m["source"]["text"] == "Z/6"
    assert len(m["targets"]) == 3


def test_comparison_and_borel():
    assert inertia_lab.compare_grh("cyc:3", "regular", 3)["ok"]
    report = inertia_lab.borel_sphere(2)
    assert report["ok"]
    assert [g["text"] for g in report["cohomology"]] == ["Z", "0", "Z/2", "0", "Z + Z/2"]


def test_errors():
    with pytest.raises(inertia_lab.FormatError):
        inertia_lab.group_order("nope:1")
    with pytest.raises(inertia_lab.BudgetError):
        inertia_lab.cohomology("ade:E8", 5, budget=1000)
