"""Report determinism, config validation, and CLI exit codes."""

import json

import pytest

from kfun.cli import main, parse_partition, parse_strict_partition, ParseError
from kfun.report import RunConfig, compare, serialize, summarize
from kfun.rings import PolyRing, TruncationProfile

RING = PolyRing(TruncationProfile(2), nb=1)


def test_runconfig_validation():
    RunConfig(beta_order=0)
    with pytest.raises(ValueError):
        RunConfig(beta_order=-1)
    with pytest.raises(ValueError):
        RunConfig(mode="guess")


def test_partition_parsing():
    assert parse_partition("3,1") == (3, 1)
    assert parse_partition("") == ()
    with pytest.raises(ParseError):
        parse_partition("1,3")
    with pytest.raises(ParseError):
        parse_partition("a,b")
    with pytest.raises(ParseError):
        parse_strict_partition("2,2")


def test_compare_statuses():
    one, zero = RING.one(), RING.zero()
    assert compare("id", {}, {}, one, one).status == "pass"
    r = compare("id", {}, {}, one, zero)
    assert r.status == "fail" and r.witness["lhs"] == "1"
    assert compare("id", {}, {}, one, zero, boundary_hits=2).status == "cap-limited"


def test_serialize_is_order_independent_and_hides_timings():
    a = compare("b-id", {"k": 1}, {}, RING.one(), RING.one(), wall_time=0.5)
    b = compare("a-id", {"k": 2}, {}, RING.one(), RING.one(), wall_time=0.7)
    s1 = serialize([a, b])
    s2 = serialize([b, a])
    assert s1 == s2
    rows = json.loads(s1)
    assert [r["identity"] for r in rows] == ["a-id", "b-id"]
    assert all(r["wall_time"] is None for r in rows)
    timed = json.loads(serialize([a], timings=True))
    assert timed[0]["wall_time"] == 0.5


def test_summarize_counts():
    a = compare("x", {}, {}, RING.one(), RING.one())
    b = compare("x", {}, {}, RING.one(), RING.zero())
    assert summarize([a, b]) == {"pass": 1, "fail": 1, "cap-limited": 0}


def test_cli_exit_codes(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["verify", "duality", "--beta-order", "1", "--max-size", "2",
                 "--out", str(out)]) == 0
    rows = json.loads(out.read_text())
    assert rows and all(r["status"] == "pass" for r in rows)

    assert main(["verify", "no-such-suite"]) == 2
    assert main(["compute", "GQ", "--partition", "1,2"]) == 2
    assert main(["compute", "gq", "--partition", "2"]) == 2  # needs --degree
    capsys.readouterr()


def test_cli_compute_round_trip(capsys):
    assert main(["compute", "GQ", "--partition", "2,1", "--beta-order", "1",
                 "--xvars", "2", "--bvars", "2"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["family"] == "GQ"
    assert data["value"]["terms"]


def test_cli_verify_deterministic(tmp_path):
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    args = ["verify", "contour", "--beta-order", "1", "--out"]
    assert main(args + [str(p1)]) == 0
    assert main(args + [str(p2)]) == 0
    assert p1.read_text() == p2.read_text()
