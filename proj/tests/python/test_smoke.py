"""Smoke tests for the python module and the command-line tool."""

import json
import os
import subprocess

import _trig


def test_picard_spot_values():
    assert _trig.picard_group(2)["group"] == "Z"
    assert _trig.picard_group(3)["group"] == "Z+Z/9"
    assert _trig.picard_group(6)["group"] == "Z+Z/3"
    assert _trig.picard_group(12)["group"] == "Z+Z/9"


def test_picard_table_pattern():
    rows = _trig.picard_table(2, 50)
    assert len(rows) == 49
    for row in rows:
        g = row["g"]
        if g % 9 == 3:
            assert row["group"] == "Z+Z/9"
        elif g % 3 == 0:
            assert row["group"] == "Z+Z/3"
        else:
            assert row["group"] == "Z"
        assert row["a"] == -(g + 6)
        expected_b = (g + 15) // 2 if g % 2 else (g + 15)
        assert row["b"] == expected_b


def test_class_strings():
    assert _trig.class_w() == "4*c1^2 + 2*c1*nu1 - 9*c2"
    y = _trig.class_y_symbolic()
    assert y["gamma1"] == "g + 15"
    assert y["delta1"] == "-g - 6"
    assert y["restriction_check"] == "0"


def test_singularity_criterion():
    hit = _trig.in_w("x1^2*x2", "0")
    assert hit["in_W"] is True
    assert hit["witness"] == "(0:1)"
    miss = _trig.in_w("x1^2*x2", "x2^3")
    assert miss["in_W"] is False


def test_cubic_algebra_roundtrip():
    alg = _trig.cubic_algebra("x1^3 - x2^3")
    assert alg["fiber_type"] == "etale"
    assert _trig.cubic_from_algebra("2*x1^3 + x1^2*x2 - 5*x2^3")


def test_genus_and_sections():
    info = _trig.genus_and_maroni(2, 3)
    assert info["g"] == 3 and info["maroni"] == 0
    assert _trig.section_space_dim(3, 3) == 2 * 4 + 8


def test_splitting_type():
    euler2 = {
        "r": 2,
        "d": 2,
        "entries": [
            [["1", "0"], ["0", "0"]],
            [["0", "1"], ["0", "0"]],
            [["0", "0"], ["1", "0"]],
            [["0", "0"], ["0", "1"]],
        ],
    }
    assert _trig.splitting_type(json.dumps(euler2)) == [1, 1]
    assert _trig.degeneracy_check(json.dumps(euler2)) is True


def test_smooth_check():
    datum = {"m": 0, "n": 1, "phi": ["0", "1", "0", "-t1^2"]}
    verdict = _trig.smooth_check(json.dumps(datum))
    assert verdict["smooth"] is False
    assert verdict["singular_points"] == [
        {"base": "(1:0)", "fiber": ["(0:1)"]}
    ]


def test_probe_exhaustive():
    res = _trig.codim_probe(1, 1, 5, exhaustive=True)
    assert res["trials"] == 625
    assert res["degenerate"] == 145


def test_quick_verify_subset():
    results = _trig.verify("sections")
    assert len(results) == 1 and results[0]["pass"]


def test_cli_binary():
    cli = os.environ.get("TRIG_CLI")
    if not cli:
        return
    out = subprocess.run(
        [cli, "chow", "picard", "--from", "2", "--to", "12"],
        capture_output=True,
        text=True,
        check=True,
    )
    rows = json.loads(out.stdout)
    assert rows[-1] == {"a": "-18", "b": "27", "g": 12, "group": "Z+Z/9"}
