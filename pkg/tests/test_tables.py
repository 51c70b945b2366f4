import pytest

from covercraft.algebra import GaloisGroup
from covercraft.surfaces import cls
from covercraft.tables import eval_class, eval_linear, expected_cases, load_tables


@pytest.mark.parametrize("expr, e, m, value", [
    ("2m-e+1", 1, 4, 8),
    ("m+3", 0, 7, 10),
    ("2e+2", 2, None, 6),
    ("0", None, None, 0),
    ("-m", 0, 5, -5),
    (7, None, None, 7),
])
def test_eval_linear(expr, e, m, value):
    assert eval_linear(expr, e, m) == value


@pytest.mark.parametrize("expr", ["", "2x", "m+", "++1"])
def test_eval_linear_rejects(expr):
    with pytest.raises(ValueError):
        eval_linear(expr, 0, 1)


def test_eval_linear_needs_variables():
    with pytest.raises(ValueError):
        eval_linear("m+1", 0, None)


def test_eval_class():
    assert eval_class(["4", "2e+2"], 2, 3) == cls(4, 6)
    assert eval_class("4", None, None).b is None


def test_expected_cases_ranges():
    t = load_tables()
    assert [x.label for x in expected_cases(t, "scroll", GaloisGroup.Z4, 0, 1)] == \
        ["B.2.1", "B.2.2", "B.2.3", "Thm3.6-case2"]
    assert [x.label for x in expected_cases(t, "scroll", GaloisGroup.Z4, 0, 2)] == ["B.2.1", "B.2.2"]
    assert expected_cases(t, "scroll", GaloisGroup.Z2xZ2, 3, 4) == []
    (a24,) = [x for x in expected_cases(t, "scroll", GaloisGroup.Z2xZ2, 0, 1) if x.label == "A.2.4"]
    assert a24.swap_duplicate_of == "A.2.2"


def test_without_and_round_trip(tmp_path):
    t = load_tables()
    smaller = t.without("B.1")
    assert len(smaller.cases) == len(t.cases) - 1
    path = tmp_path / "t.json"
    path.write_text(smaller.to_json())
    again = load_tables(path)
    assert again.cases == smaller.cases and again.origin == str(path)


def test_env_override(tmp_path, monkeypatch):
    path = tmp_path / "t.json"
    path.write_text(load_tables().without("A.1").to_json())
    monkeypatch.setenv("COVERCRAFT_TABLES", str(path))
    assert all(r["label"] != "A.1" for r in load_tables().cases)


def test_rejects_foreign_file(tmp_path):
    path = tmp_path / "x.json"
    path.write_text('{"cases": []}')
    with pytest.raises(ValueError):
        load_tables(path)
