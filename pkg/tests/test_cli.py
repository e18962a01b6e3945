import json

import pytest

from epoly.cli import run


@pytest.fixture
def cap(capsys):
    def invoke(argv):
        rc = run(argv)
        return rc, capsys.readouterr().out

    return invoke


def test_info(cap):
    rc, out = cap(["info", "--poset", "builtin:lambda"])
    assert rc == 0
    payload = json.loads(out)
    assert payload["elements"] == ["u", "v", "w"]
    assert payload["covers"] == [["u", "w"], ["v", "w"]]
    assert payload["signed_filters"] == payload["signed_antichains"] == 11


def test_points_count(cap):
    rc, out = cap(["points", "--poset", "builtin:lambda", "--kind", "eo"])
    assert rc == 0
    payload = json.loads(out)
    assert payload["kind"] == "eo"
    assert payload["dilate"] == 1
    assert payload["count"] == 11
    assert len(payload["points"]) == 11
    rc, out = cap(
        ["points", "--poset", "builtin:lambda", "--kind", "ec", "--dilate", "2"]
    )
    assert json.loads(out)["count"] == 45


def test_transfer_exact_bytes(cap):
    rc, out = cap(
        [
            "transfer",
            "--poset",
            "builtin:lambda",
            "--map",
            "ephi",
            "--point",
            "[1, 1, 1]",
        ]
    )
    assert rc == 0
    assert out == '["1","1","0"]\n'


def test_transfer_theta(cap):
    rc, out = cap(
        [
            "transfer",
            "--poset",
            "builtin:lambda",
            "--map",
            "theta",
            "--point",
            "[1, -1, 2]",
            "--dilate",
            "2",
        ]
    )
    assert rc == 0
    assert json.loads(out) == ["1", "-1", "2"]


def test_transfer_rejects_bad_point(cap):
    rc, out = cap(
        [
            "transfer",
            "--poset",
            "builtin:lambda",
            "--map",
            "pi",
            "--point",
            "[9, 0, 0]",
            "--dilate",
            "2",
        ]
    )
    assert rc == 1


def test_vertices(cap):
    rc, out = cap(["vertices", "--poset", "builtin:chain2", "--kind", "ec"])
    assert rc == 0
    payload = json.loads(out)
    assert payload["count"] == 4
    assert ["0", "-1"] in payload["vertices"]


def test_ehrhart_with_check(cap):
    rc, out = cap(["ehrhart", "--poset", "builtin:lambda", "--check"])
    assert rc == 0
    payload = json.loads(out)
    assert payload["degree"] == 3
    assert payload["coefficients"] == ["1", "10/3", "4", "8/3"]
    assert payload["check"] == {"m": 5, "count": 451}


def test_stats_payloads(cap):
    rc, out = cap(["stats", "--poset", "builtin:chain2", "--what", "hstar"])
    assert rc == 0
    assert json.loads(out)["hstar"] == [1, 2, 1]

    rc, out = cap(["stats", "--poset", "builtin:chain2", "--what", "gamma"])
    assert json.loads(out)["gamma"] == [1, 0]

    rc, out = cap(["stats", "--poset", "builtin:antichain2", "--what", "dvector"])
    payload = json.loads(out)
    assert payload["via_gamma"] == payload["via_peaks"] == [1, 2]
    assert payload["agree"] is True

    rc, out = cap(["stats", "--poset", "builtin:lambda", "--what", "flags"])
    payload = json.loads(out)
    counts = [row["count"] for row in payload["f"]]
    assert counts == [1, 2, 4, 4, 8, 8, 8, 16]
    assert payload["h_vector"] == [1, 7, 7, 1]


def test_triangulate_with_verify(cap):
    rc, out = cap(
        [
            "triangulate",
            "--poset",
            "builtin:chain2",
            "--kind",
            "ec",
            "--verify",
            "--samples",
            "20",
        ]
    )
    assert rc == 0
    payload = json.loads(out)
    assert len(payload["facets"]) == 4
    assert payload["report"]["ok"] is True


def test_verify_command(cap):
    rc, out = cap(
        [
            "verify",
            "--poset",
            "builtin:lambda",
            "--m-max",
            "2",
            "--samples",
            "30",
        ]
    )
    assert rc == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert payload["failures"] == []


def test_poset_from_text_file(cap, tmp_path):
    spec = tmp_path / "bowtie.poset"
    spec.write_text(
        "# double vee\nelements: a b c d e\ncovers: a<c b<c c<d c<e\n"
    )
    rc, out = cap(["info", "--poset", str(spec)])
    assert rc == 0
    payload = json.loads(out)
    assert payload["d"] == 5
    assert payload["minimals"] == ["a", "b"]
    assert payload["maximals"] == ["d", "e"]


def test_poset_from_json_file(cap, tmp_path):
    spec = tmp_path / "p.json"
    spec.write_text(
        json.dumps({"elements": ["x", "y", "z"], "covers": [["x", "z"], ["y", "z"]]})
    )
    rc, out = cap(["points", "--poset", str(spec), "--kind", "eo"])
    assert rc == 0
    assert json.loads(out)["count"] == 11


def test_error_exits(cap, tmp_path):
    rc, _ = cap(["info", "--poset", "builtin:nonesuch"])
    assert rc == 1
    rc, _ = cap(["info", "--poset", str(tmp_path / "missing.poset")])
    assert rc == 1
    rc, _ = cap(["points", "--poset", "builtin:lambda", "--kind", "tetra"])
    assert rc == 1
    rc, _ = cap(["frobnicate"])
    assert rc == 1
    bad = tmp_path / "cyclic.poset"
    bad.write_text("elements: a b\ncovers: a<b b<a\n")
    rc, _ = cap(["info", "--poset", str(bad)])
    assert rc == 1


def test_deterministic_output(cap):
    argv = ["verify", "--poset", "builtin:chain2", "--seed", "5", "--samples", "50"]
    rc1, out1 = cap(argv)
    rc2, out2 = cap(argv)
    assert rc1 == rc2 == 0
    assert out1 == out2


def test_text_format(cap):
    rc, out = cap(
        ["stats", "--poset", "builtin:chain2", "--what", "hstar", "--format", "text"]
    )
    assert rc == 0
    assert out == "what: hstar\nkind: eo\nhstar: [1,2,1]\n"
