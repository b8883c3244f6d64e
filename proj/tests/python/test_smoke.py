import json
import os

import pytest

import softint

DATA = os.path.join(os.path.dirname(__file__), "..", "data")


def test_group_basics():
    d3 = softint.Group("dihedral:3")
    assert d3.order == 6
    assert not d3.is_abelian
    assert d3.names[:4] == ["e", "u", "u^2", "v"]
    assert d3.mul(1, 3) == 5
    assert len(d3.subgroups()) == 6


def test_fixture_f2():
    f2 = softint.fixture("F2")
    assert softint.is_int_group(f2)
    for c in softint.CRITERIA:
        assert softint.is_normal(f2, c) is False
    assert softint.normalizer(f2) == ["e", "v"]
    assert len(softint.distinct_conjugates(f2)) == 3
    assert softint.level_structure(f2)["chain_level_normal"] is False


def test_soft_set_construction_and_product():
    f1 = softint.SoftSet("cyclic:4", ["a", "b"], [["a", "b"], ["a"], ["a", "b"], ["a"]])
    assert f1 == softint.fixture("F1")
    assert f1.masks == [3, 1, 3, 1]
    assert f1[1] == ["a"]
    assert softint.soft_product(f1, f1) == f1
    img = softint.soft_image("mod:4:2", f1)
    assert img.masks == [3, 1]


def test_bad_input_raises():
    with pytest.raises(softint.Error):
        softint.SoftSet("cyclic:2", ["a"], [1])
    with pytest.raises(softint.ParseError):
        softint.Group("torus")
    bad = softint.SoftSet("cyclic:4", 1, [1, 1, 0, 0])
    assert not softint.is_int_group(bad)
    with pytest.raises(softint.Error):
        softint.normalizer(bad)


def test_parse_round_trip():
    with open(os.path.join(DATA, "f4.soft")) as fh:
        f4 = softint.parse_soft_set(fh.read(), "klein")
    assert f4 == softint.fixture("F4")
    text = softint.format_soft_set(f4, "validated: int-group, normal")
    assert softint.parse_soft_set(text, "klein") == f4


def test_enumerate_counts():
    assert len(softint.enumerate_int_groups("cyclic:2", 1)) == 3
    assert len(softint.enumerate_int_groups("quaternion", 1)) == 7


def test_check_theorem():
    assert softint.check_theorem("C290", "dihedral:3", [softint.fixture("F2")])["verdict"] == "holds"
    r = softint.check_theorem("C90conv", "dihedral:3", [softint.fixture("F3")])
    assert r["verdict"] == "violated"
    assert r["informational"]
    assert "C226" in softint.theorem_ids()


def test_suite_is_deterministic():
    a = softint.run_suite(["cyclic:4", "klein"], [1, 2])
    b = softint.run_suite(["cyclic:4", "klein"], [1, 2])
    assert a == b
    code, text = a
    assert code == 0
    report = json.loads(text)
    assert report["exit_code"] == 0
    assert report["records"]


def test_cli_entry():
    code, out, _ = softint.cli(["levels", "--group", "klein", os.path.join(DATA, "f4.soft")])
    assert code == 0
    assert "images not a chain; poset-form level-normal: yes" in out
