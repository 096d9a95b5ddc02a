import json
import math

import pytest

import ghol


def test_version():
    assert ghol.__version__


def test_bundled_listing_and_explain():
    names = ghol.bundled_scenario_names()
    assert "circle-two-arcs-holonomy" in names
    assert "monopole-n1" in names
    assert "vertex" in ghol.explain("surface-holonomy")
    with pytest.raises(KeyError):
        ghol.explain("bogus")
    assert set(ghol.known_verbs()) >= {"holonomy", "theorem-1", "globalise"}


def test_circle_globalisation_rank():
    report_text, ok = ghol.run_bundled("circle-two-arcs-holonomy")
    assert ok
    report = json.loads(report_text)
    pres = report["results"][0]["hol_vertex_presentation"]
    assert pres["free"] and pres["rank"] == 1
    assert report["results"][0]["glob_vertex_order"] == 1


def test_monopole_values():
    # equator of the charge-n monopole: n/2 turns mod 1
    assert abs(ghol.monopole_holonomy_turns(1, math.pi / 2) - 0.5) < 1e-9
    assert ghol.monopole_holonomy_turns(2, math.pi / 2) < 1e-9
    # colatitude pi/3 on n=1: (1 - cos)/2 = 1/4 turn
    assert abs(ghol.monopole_holonomy_turns(1, math.pi / 3) - 0.25) < 1e-9


def test_flat_torus_gerbe():
    assert ghol.flat_torus_surface_holonomy_turns("1/3") == "1/3"
    assert ghol.flat_torus_surface_holonomy_turns("2/5") == "2/5"


def test_scenario_dict_roundtrip():
    scenario = {
        "name": "smoke",
        "space": {"builtin": "octahedron-2-charts"},
        "bundle": {"builtin": "monopole-octahedron", "n": 1},
        "paths": {
            "equator": {
                "kind": "combinatorial",
                "start": "e0",
                "steps": [
                    {"edge": 4, "chart": "N"},
                    {"edge": 5, "chart": "N"},
                    {"edge": 6, "chart": "N"},
                    {"edge": 7, "chart": "N"},
                ],
            }
        },
        "verbs": [
            {"verb": "validate-bundle"},
            {"verb": "holonomy", "path": "equator"},
        ],
    }
    report = ghol.run_scenario(scenario)
    assert report["status"] == "pass"
    assert report["results"][1]["value"]["turns"] == "1/2"


def test_schema_errors_are_value_errors():
    with pytest.raises(ValueError):
        ghol.run_scenario_text("{not json")
    with pytest.raises(ValueError):
        ghol.run_scenario({"name": "x"})
