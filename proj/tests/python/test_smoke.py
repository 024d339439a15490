import json
from fractions import Fraction

import pytest

import cactoid_lab as cl


def test_metric_and_gh():
    x = cl.MetricSpace.create(["a", "b"], [["0", "1"], ["1", "0"]])
    y = cl.MetricSpace.create(["p"], [["0"]])
    assert cl.gh_exact(x, y) == Fraction(1, 2)
    assert cl.gh_lower(x, y) <= Fraction(1, 2)
    z = cl.MetricSpace.from_json(x.to_json())
    assert z.labels == ["a", "b"]
    assert z.dist(0, 1) == Fraction(1)

    with pytest.raises(cl.ParseError):
        cl.MetricSpace.from_json("{}")
    with pytest.raises(cl.ValidationError):
        cl.MetricSpace.create(["a", "b"], [["0", "-1"], ["-1", "0"]])


def test_gh_cap():
    labels = [f"v{i}" for i in range(10)]
    dist = [["0" if i == j else "1" for j in range(10)] for i in range(10)]
    big = cl.MetricSpace.create(labels, dist)
    with pytest.raises(cl.CapExceeded):
        cl.gh_exact(big, big)


def test_surfaces_and_doubling():
    assert cl.sphere().invariants()["connectivity"] == 0
    assert cl.torus().invariants()["connectivity"] == 2
    assert cl.mobius().invariants() == {
        "orientable": False,
        "euler_char": 0,
        "boundary_count": 1,
        "connectivity": 2,
        "reduced_connectivity": 1,
    }
    doubled = cl.disc().doubled().invariants()
    assert doubled["connectivity"] == 0 and doubled["boundary_count"] == 0
    klein = cl.mobius().doubled().invariants()
    assert klein["connectivity"] == 2 and not klein["orientable"]

    s = cl.sphere("1")
    t = cl.Surface.from_text(s.to_text())
    assert t.to_text() == s.to_text()


def test_cut_calculus():
    pairs = {
        tuple(p["connectivity"] for p in o["parts"])
        for o in cl.cut_separating_arc(5)
        if o["kind"] == "wedge_split"
    }
    assert pairs == {(2, 4), (3, 3)}
    assert cl.cut_nonseparating_arc(2)["parts"][0]["connectivity"] == 1
    with pytest.raises(cl.ValidationError):
        cl.cut_jordan(0)


def make_disc_pair():
    cls = {
        "orientable": True,
        "euler_char": 1,
        "boundary_count": 1,
        "connectivity": 1,
        "reduced_connectivity": 0,
    }
    return {
        "format_version": 1,
        "pieces": [
            {"name": "D", "class": cls, "diameter": "1", "shrinking_family": False},
            {"name": "E", "class": cls, "diameter": "1", "shrinking_family": False},
        ],
        "trees": [],
        "incidences": [
            {
                "name": "w",
                "a": {"on": "piece", "owner": 0, "point": "p", "circle": 0},
                "b": {"on": "piece", "owner": 1, "point": "q", "circle": 0},
            }
        ],
        "grouping": [],
        "history": {"steps": [{"kind": "two_point", "arguments": "", "boundary_flag": True}]},
    }


def test_cactoid_pipeline():
    doc = make_disc_pair()
    text = cl.minimal_preboundary(json.dumps(doc))
    regrouped = json.loads(text)
    assert len(regrouped["grouping"]) == 1
    assert cl.validate_cactoid(text) == []
    assert cl.connectivity_number(text) == 1

    cert = cl.certify(text, 2)
    assert cert == {"c_target": 2, "c0": 1, "k": 1, "k0": 1, "verdict": True}

    out = json.loads(cl.approximate(text, 2, schedule=[2]))
    assert out["main"]["verdict"] is True
    assert out["records"][0]["invariants"]["connectivity"] == 2
