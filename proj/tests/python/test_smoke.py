import json

try:
    import _sespencils as m  # in-tree build: extension straight off PYTHONPATH
except ImportError:
    import sespencils as m


def test_closed_forms():
    assert m.n_closed(3, 4) == 2
    assert m.n_closed(7, 5) == 10
    assert m.i_indecomposable(5, 5) == 6
    assert m.h_genus1(9, 3) == 1
    assert m.classes_closed(5, 10) == 7
    assert m.classes_closed(5, 12) == 10


def test_orbit_and_subgroup_counts():
    assert m.count_orbits(3, 4) == m.n_closed(3, 4)
    assert m.count_orbits(3, 2, family="all") >= 1
    assert m.stabilizer_order(5, "x^2+2") == 48
    assert m.dihedral_census(5) == (10, 2)
    assert m.sylow3_bijection_check(5)


def test_bruteforce_report():
    r = m.classes_bruteforce(3, 10)
    assert r["closed_form"] == r["brute_force"] == 5
    assert len(r["breakdown"]) == 3
    assert sum(c for _, c in r["breakdown"]) == 5


def test_pair_orbits():
    assert m.decomposable_pair_orbits(5, "quad+quad") == 2
    assert m.decomposable_pair_orbits(5, "quad+quad") == m.decomposable_pair_closed(
        5, "quad+quad"
    )


def test_pencil_roundtrip(tmp_path):
    doc = m.companion_pencil_json(3, "x^2+1")
    path = tmp_path / "pencil.json"
    path.write_text(doc)
    assert json.loads(doc)["dimV"] == 4
    info = m.analyze_pencil(str(path))
    assert info["pfaffian"] == "X^2 + Y^2"
    assert info["ses_direct"] and info["ses_pfaffian"]
    assert info["genus"] == 1


def test_fixture_analysis():
    info = m.analyze_pencil("fixtures/genus_h.json")
    assert info["pfaffian"] == "X^4 + 4X^2Y^2 + 4Y^4"
    assert info["centroid_dim"] == 1
    assert info["genus"] == 2


def test_errors():
    import pytest

    with pytest.raises(Exception):
        m.n_closed(4, 2)  # not a prime
    with pytest.raises(Exception):
        m.classes_closed(3, 14)  # unsupported order
