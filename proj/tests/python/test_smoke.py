import os

import pytest

import silted

DATA = os.environ.get("SILTED_DATA", os.path.join(os.path.dirname(__file__), "..", "..", "data", "quivers"))


def test_fixture_names():
    assert "D5" in silted.fixture_names()


def test_dynkin_type():
    assert silted.dynkin_type("vertices 1 2 3\narrows a:1->3 b:2->3") == "A3"
    with pytest.raises(silted.NotDynkin):
        silted.dynkin_type("vertices 1 2 3\narrows a:1->2 b:2->3 c:1->3")


def test_parse_error_is_a_value_error():
    with pytest.raises(ValueError):
        silted.silting("vertices 1 2\narrow a:1->2\narrow b:2->1")


def test_silting_counts():
    assert silted.silting("A2")["count"] == 5
    assert silted.silting(os.path.join(DATA, "D4.quiver"), tilting_only=True)["count"] == 20


def test_classify_d4():
    report = silted.classify("D4", jobs=2)
    assert len(report["classes"]) == 13
    shod = [r for r in report["records"] if r["strictly_shod"]]
    assert shod and all(r["gl_dim"] == 3 for r in shod)


def test_ar_quiver():
    ar = silted.ar_quiver("A3", two_term=True)
    assert len(ar["vertices"]) == 9


def test_suite():
    results = silted.run_suite(2)
    assert [r[0] for r in results] == list(range(1, 8))
    assert all(r[2] for r in results)
