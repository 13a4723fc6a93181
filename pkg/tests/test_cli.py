import json

import pytest

from flatfields.cli import run
from flatfields.serialize import dumps_canonical


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(dumps_canonical(obj))
    return str(p)


@pytest.fixture
def lshape(tmp_path):
    return write(tmp_path, "lshape.json",
                 {"squares": 3, "h": [2, 1, 3], "v": [3, 2, 1]})


@pytest.fixture
def torus(tmp_path):
    return write(tmp_path, "torus.json",
                 {"squares": 1, "h": [1], "v": [1]})


OCTAGON = {
    "field": {"minpoly": ["-2", "0", "1"], "embedding": ["1", "2"]},
    "polygons": [[
        [["0", "0"], ["0", "0"]],
        [["1", "0"], ["0", "0"]],
        [["1", "1/2"], ["0", "1/2"]],
        [["1", "1/2"], ["1", "1/2"]],
        [["1", "0"], ["1", "1"]],
        [["0", "0"], ["1", "1"]],
        [["0", "-1/2"], ["1", "1/2"]],
        [["0", "-1/2"], ["0", "1/2"]],
    ]],
    "gluings": [[[0, 0], [0, 4]], [[0, 1], [0, 5]],
                [[0, 2], [0, 6]], [[0, 3], [0, 7]]],
}


@pytest.fixture
def octagon(tmp_path):
    return write(tmp_path, "octagon.json", OCTAGON)


def run_ok(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    assert code == 0, out
    return json.loads(out)


def test_surface_info_lshape(capsys, lshape):
    rep = run_ok(capsys, ["surface-info", lshape])
    assert rep["command"] == "surface-info"
    assert rep["result"]["stratum"] == "H(2)"
    assert rep["result"]["genus"] == 2
    assert rep["result"]["homology"]["relative_rank"] == 4
    assert rep["citations"]


def test_surface_info_torus(capsys, torus):
    rep = run_ok(capsys, ["surface-info", torus])
    assert rep["result"]["genus"] == 1
    assert rep["result"]["stratum"] == "H(0)"


def test_surface_info_bad_gluing(capsys, tmp_path):
    bad = {
        "field": {"minpoly": ["0", "1"], "embedding": ["-1", "1"]},
        "polygons": [[
            [["0"], ["0"]], [["1"], ["0"]], [["1"], ["1"]], [["0"], ["1"]],
        ]],
        "gluings": [[[0, 0], [0, 1]], [[0, 2], [0, 3]]],
    }
    path = write(tmp_path, "bad.json", bad)
    code = run(["surface-info", path])
    assert code == 1


def test_holonomy_octagon(capsys, octagon):
    rep = run_ok(capsys, ["holonomy", octagon])
    assert rep["result"]["holonomy_field"]["minpoly"] == "x^2 - 2"


def test_holonomy_square_tiled(capsys, lshape):
    rep = run_ok(capsys, ["holonomy", lshape])
    assert rep["result"]["holonomy_field"]["degree"] == 1


def test_fod(capsys, tmp_path):
    sub = {
        "field": {"minpoly": ["-2", "0", "1"], "embedding": ["1", "2"]},
        "complex": False,
        "vectors": [[["1", "0"], ["0", "1"], ["0", "0"]],
                    [["0", "0"], ["0", "0"], ["1", "0"]]],
    }
    path = write(tmp_path, "sub.json", sub)
    rep = run_ok(capsys, ["fod", path])
    assert rep["result"]["field_of_definition"]["minpoly"] == "x^2 - 2"
    assert rep["result"]["imaginary_parts_present"] is False


def test_intersect_fields(capsys, tmp_path):
    f2 = write(tmp_path, "q2.json",
               {"minpoly": ["-2", "0", "1"], "embedding": ["1", "2"]})
    f3 = write(tmp_path, "q3.json",
               {"minpoly": ["-3", "0", "1"], "embedding": ["1", "2"]})
    rep = run_ok(capsys, ["intersect-fields", f2, f3])
    assert rep["result"]["intersection"]["degree"] == 1

    rep2 = run_ok(capsys, ["intersect-fields", f2, f2])
    assert rep2["result"]["intersection"]["minpoly"] == "x^2 - 2"


def test_k_of_m(capsys, octagon, lshape):
    rep = run_ok(capsys, ["k-of-m", octagon, lshape])
    assert rep["result"]["field_upper_bound"]["degree"] == 1
    rep2 = run_ok(capsys, ["k-of-m", octagon])
    assert rep2["result"]["field_upper_bound"]["minpoly"] == "x^2 - 2"


@pytest.fixture
def rep_file(tmp_path):
    T = [[1, 1, 0, 1], [0, 1, 1, 0], [0, 0, 1, 1], [0, 0, 0, 1]]

    def conj(T, A):
        from flatfields.linalg import int_mat_inverse, int_mat_mul
        return int_mat_mul(int_mat_mul(T, A), int_mat_inverse(T))

    def block_diag(a, b):
        n = len(a) + len(b)
        out = [[0] * n for _ in range(n)]
        for i, row in enumerate(a):
            for j, v in enumerate(row):
                out[i][j] = v
        for i, row in enumerate(b):
            for j, v in enumerate(row):
                out[len(a) + i][len(a) + j] = v
        return out

    A = conj(T, block_diag([[0, -1], [1, 3]], [[0, -1], [1, 0]]))
    return write(tmp_path, "rep.json",
                 {"dim": 4, "generators": [A], "pa": A})


def test_monodromy_pa(capsys, rep_file):
    rep = run_ok(capsys, ["monodromy", rep_file, "--pa"])
    assert rep["result"]["dominant_eigenvalue"]["minpoly"] == "x^2 - 3x + 1"


def test_monodromy_pa_not_simple(capsys, tmp_path):
    path = write(tmp_path, "par.json",
                 {"dim": 2, "generators": [[[1, 1], [0, 1]]],
                  "pa": [[1, 1], [0, 1]]})
    assert run(["monodromy", path, "--pa"]) == 1


def test_monodromy_decompose(capsys, rep_file):
    rep = run_ok(capsys, ["--verify", "monodromy", rep_file, "--decompose"])
    res = rep["result"]
    assert res["field_of_definition"]["minpoly"] == "x^2 - 5"
    assert res["piece_dimension"] == 1
    assert res["rational_complement_dimension"] == 2
    assert res["dimension_inequality"]["holds"] is True
    assert len(res["conjugate_sum_rref"]) == 2
    assert len(res["complement_rref"]) == 2


def test_monodromy_blocks(capsys, tmp_path, lshape):
    A = [[2, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 1], [0, 0, 1, 2]]
    path = write(tmp_path, "rel.json", {"dim": 4, "generators": [A], "pa": A})
    rep = run_ok(capsys, ["monodromy", path, "--blocks",
                          "--surface", lshape])
    assert rep["result"]["power"] == 1
    assert rep["result"]["charpoly_identity"] is True


@pytest.fixture
def ambient_file(tmp_path):
    return write(tmp_path, "ambient.json", {
        "n": 4,
        "kM": {"minpoly": ["0", "1"], "embedding": ["-1", "1"]},
        "relations": {"field": {"minpoly": ["0", "1"],
                                "embedding": ["-1", "1"]},
                      "complex": False, "vectors": []},
        "genus": 2,
    })


def test_typical_transcendental(capsys, tmp_path, ambient_file):
    zq = [["0"], ["0"]]
    periods = {
        "field": {"minpoly": ["0", "1"], "embedding": ["-1", "1"]},
        "symbols": ["p1", "p2", "p3", "p4"],
        "entries": [
            {"alg": zq, "trans": {"p1": ["1", "0"]}},
            {"alg": zq, "trans": {"p2": ["1", "0"]}},
            {"alg": zq, "trans": {"p3": ["1", "0"]}},
            {"alg": zq, "trans": {"p4": ["1", "0"]}},
        ],
    }
    path = write(tmp_path, "periods.json", periods)
    rep = run_ok(capsys, ["typical", path, "--ambient", ambient_file])
    assert rep["result"]["verdict"] == "M-generic"


def test_typical_special(capsys, tmp_path, ambient_file):
    periods = {
        "field": {"minpoly": ["0", "1"], "embedding": ["-1", "1"]},
        "symbols": [],
        "entries": [
            {"alg": [["1"], ["1"]], "trans": {}},
            {"alg": [["1"], ["-1"]], "trans": {}},
            {"alg": [["2"], ["0"]], "trans": {}},
            {"alg": [["0"], ["2"]], "trans": {}},
        ],
    }
    path = write(tmp_path, "special.json", periods)
    rep = run_ok(capsys, ["typical", path, "--ambient", ambient_file])
    assert rep["result"]["verdict"] == "inconclusive"
    assert rep["result"]["witness"]


def test_reports_deterministic(capsys, octagon):
    code = run(["holonomy", octagon])
    first = capsys.readouterr().out
    code = run(["holonomy", octagon])
    second = capsys.readouterr().out
    assert code == 0
    assert first == second


def test_out_flag(tmp_path, capsys, torus):
    out = tmp_path / "report.json"
    code = run(["--out", str(out), "surface-info", torus])
    capsys.readouterr()
    assert code == 0
    rep = json.loads(out.read_text())
    assert rep["result"]["genus"] == 1


def test_config_degree_cap(tmp_path, capsys, octagon):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"factor_degree_limit": 1}))
    code = run(["--config", str(cfg), "holonomy", octagon])
    capsys.readouterr()
    assert code == 2
