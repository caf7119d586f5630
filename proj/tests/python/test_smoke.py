"""Smoke tests for the extension module.

Importable either as the installed `multipole` package or, when running from
the build tree with PYTHONPATH set, through the package shim next to the
freshly built `_multipole` extension.
"""

import pytest

try:
    import multipole as mp
except ImportError:  # build tree without the package on the path
    import _multipole as mp


def test_constructors_and_shapes():
    e = mp.make_free_edge()
    assert (e.n, e.m) == (0, 2)
    c5 = mp.make_cycle(5)
    assert (c5.n, c5.m) == (5, 5)
    assert mp.is_connected(c5)
    assert mp.is_forest(mp.make_path_tree(6))


def test_states_and_formulas():
    assert mp.states(mp.make_minimal(4)) == ["1111", "1122"]
    assert len(mp.states(mp.make_cycle(6))) == mp.cycle_count(6) == 11
    assert mp.sigma(6) == 31
    assert mp.rho(5) == 3
    assert mp.tree_count(10) == 128
    assert mp.forest_count(1, 7) == 9
    assert len(mp.admissible_states(6)) == 31


def test_parse_roundtrip():
    text = mp.serialize(mp.make_cycle(4))
    again = mp.parse(text)
    assert mp.serialize(again) == text
    assert mp.validate(again) == []
    with pytest.raises(mp.MultipoleError):
        mp.parse("vertices 1\nsemi 0\n")


def test_operations():
    v = mp.parse("vertices 1\nsemi 0\nsemi 0\nsemi 0\n")
    digon = mp.junction(v, v, [(0, 0), (1, 1)])
    assert (digon.n, digon.m) == (2, 2)
    assert mp.states(digon) == ["11"]
    cut = mp.cut_edge(digon, 0, 1)
    assert cut.m == 4


def test_catalog_and_checks():
    entries = mp.catalog(4, 2)
    assert len(entries) >= 2
    assert mp.check_complete(v := mp.parse("vertices 1\nsemi 0\nsemi 0\nsemi 0\n"))["holds"]
    verdict = mp.check_reducible(mp.make_cycle(4))
    assert verdict["verdict"] == "reducible"
    assert "witness" in verdict
