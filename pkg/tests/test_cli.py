import json

from onelap.cli import main
from onelap.complexes import SimplicialComplex

from corpus import COMPLEXES


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_complex(tmp_path, K, name="complex.json"):
    target = tmp_path / name
    target.write_text(
        json.dumps(
            {
                "vertices": list(K.vertices),
                "maximal_faces": [list(f) for f in K.maximal_faces()],
            }
        )
    )
    return str(target)


class TestSpectrumCommand:
    def test_tetrahedron_text(self, capsys):
        code, out, _ = run(
            capsys,
            "spectrum", "--builtin", "simplex:3", "--dim", "2",
            "--op", "up", "--norm", "normalized",
        )
        assert code == 0
        assert "eigenvalues: 0, 1" in out

    def test_json_report_schema(self, capsys):
        code, out, _ = run(
            capsys,
            "spectrum", "--builtin", "simplex:3", "--dim", "2",
            "--op", "up", "--norm", "normalized", "--json", "--seed", "7",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["eigenvalues"] == ["0", "1"]
        assert set(payload) == {"problem", "eigenvalues", "witnesses", "stats"}
        assert payload["problem"]["seed"] == 7
        for witnesses in payload["witnesses"].values():
            for w in witnesses:
                for v in w["vector"].values():
                    assert "." not in v  # exact rationals only
        assert payload["stats"]["faces_enumerated"] == 90

    def test_degenerate_exit_code(self, capsys):
        code, _, err = run(
            capsys,
            "spectrum", "--builtin", "path", "--dim", "1",
            "--op", "up", "--norm", "normalized",
        )
        assert code == 3 and "degenerate" in err

    def test_path_down(self, capsys):
        code, out, _ = run(
            capsys,
            "spectrum", "--builtin", "path", "--dim", "1",
            "--op", "down", "--norm", "normalized",
        )
        assert code == 0 and "eigenvalues: 1/2, 1" in out

    def test_threads_match(self, capsys):
        code, out1, _ = run(
            capsys,
            "spectrum", "--builtin", "simplex:3", "--dim", "2",
            "--op", "up", "--norm", "normalized", "--json",
        )
        code2, out2, _ = run(
            capsys,
            "spectrum", "--builtin", "simplex:3", "--dim", "2",
            "--op", "up", "--norm", "normalized", "--json", "--threads", "4",
        )
        assert code == code2 == 0 and json.loads(out1) == json.loads(out2)

    def test_file_input(self, capsys, tmp_path):
        path = write_complex(tmp_path, COMPLEXES["tetrahedron"])
        code, out, _ = run(
            capsys,
            "spectrum", "--input", path, "--dim", "2",
            "--op", "up", "--norm", "normalized",
        )
        assert code == 0 and "eigenvalues: 0, 1" in out

    def test_missing_file(self, capsys):
        code, _, err = run(
            capsys,
            "spectrum", "--input", "/nonexistent.json", "--dim", "2",
            "--op", "up", "--norm", "normalized",
        )
        assert code == 2


class TestVerifyCommand:
    def test_accepted(self, capsys, tmp_path):
        vec = tmp_path / "vec.json"
        vec.write_text(json.dumps({"1,2,3": "1", "1,2,4": "-1", "1,3,4": "1", "2,3,4": "-1"}))
        code, out, _ = run(
            capsys,
            "verify", "--builtin", "simplex:3", "--dim", "2", "--op", "up",
            "--norm", "normalized", "--mu", "0", "--vector", str(vec),
        )
        assert code == 0 and json.loads(out)["accepted"] is True

    def test_rejected_wrong_value(self, capsys, tmp_path):
        vec = tmp_path / "vec.json"
        vec.write_text(json.dumps({"1,2,3": "1"}))
        code, out, _ = run(
            capsys,
            "verify", "--builtin", "simplex:3", "--dim", "2", "--op", "up",
            "--norm", "normalized", "--mu", "1/2", "--vector", str(vec),
        )
        assert code == 1 and json.loads(out)["reason"] == "WrongValue"

    def test_malformed_rational(self, capsys, tmp_path):
        vec = tmp_path / "vec.json"
        vec.write_text(json.dumps({"1,2,3": "1"}))
        code, _, err = run(
            capsys,
            "verify", "--builtin", "simplex:3", "--dim", "2", "--op", "up",
            "--norm", "normalized", "--mu", "1/0", "--vector", str(vec),
        )
        assert code == 2 and "denominator" in err

    def test_unknown_face_key(self, capsys, tmp_path):
        vec = tmp_path / "vec.json"
        vec.write_text(json.dumps({"9,9,9": "1"}))
        code, _, _ = run(
            capsys,
            "verify", "--builtin", "simplex:3", "--dim", "2", "--op", "up",
            "--norm", "normalized", "--mu", "0", "--vector", str(vec),
        )
        assert code == 2


class TestOracleCommand:
    def test_triangle_matches(self, capsys):
        code, out, _ = run(
            capsys,
            "oracle", "--builtin", "simplex:2", "--dim", "1", "--op", "up",
            "--norm", "normalized", "--grid-bound", "2",
        )
        assert code == 0 and "oracle = engine = {0, 1}" in out

    def test_budget_exit(self, capsys):
        code, _, err = run(
            capsys,
            "oracle", "--builtin", "simplex:3", "--dim", "2", "--op", "up",
            "--norm", "normalized", "--grid-bound", "6", "--budget", "10",
        )
        assert code == 4


class TestInvariantsCommand:
    def test_remark_values(self, capsys):
        code, out, _ = run(capsys, "invariants", "--builtin", "remark5")
        assert code == 0
        assert "alpha=3" in out and "alpha_2=4" in out

    def test_json(self, capsys):
        code, out, _ = run(
            capsys, "invariants", "--builtin", "remark5", "--json", "--dim", "1"
        )
        payload = json.loads(out)
        assert payload["alpha"] == 3 and payload["alpha_s"]["2"] == 4
        assert payload["face_graph"]["dim"] == 1


class TestBoundsCommand:
    def test_tetrahedron_all_hold(self, capsys):
        code, out, _ = run(capsys, "bounds", "--builtin", "simplex:3", "--dim", "2")
        assert code == 0
        assert "FAIL" not in out
        assert "c1<=coloring_bound: 0 <= 0" in out

    def test_json_payload(self, capsys):
        code, out, _ = run(
            capsys, "bounds", "--builtin", "remark5", "--dim", "2", "--json"
        )
        payload = json.loads(out)
        assert code == 0 and payload["all_hold"] is True

    def test_degenerate_volume_is_skipped(self, capsys):
        # no triangles, so the up-degree volume vanishes at d=1: the coloring
        # line is skipped rather than failing, and the rest still holds
        code, out, _ = run(capsys, "bounds", "--builtin", "path", "--dim", "1")
        assert code == 0 and "[skip] coloring_bound" in out


class TestNodalCommand:
    def test_tetrahedron(self, capsys, tmp_path):
        vec = tmp_path / "vec.json"
        vec.write_text(json.dumps({"1,2,3": "1", "1,2,4": "-1", "1,3,4": "1", "2,3,4": "-1"}))
        code, out, _ = run(
            capsys,
            "nodal", "--builtin", "simplex:3", "--dim", "2", "--op", "up",
            "--norm", "normalized", "--mu", "0", "--vector", str(vec),
        )
        assert code == 0 and "nodal domains: 1" in out


class TestWedgeCommand:
    def test_round_trip_and_check(self, capsys, tmp_path):
        out_file = tmp_path / "wedge.json"
        code, out, _ = run(
            capsys,
            "wedge", "--builtin1", "simplex:2", "--builtin2", "simplex:2",
            "--face1", "1", "--face2", "2", "--out", str(out_file),
            "--check-dim", "1", "--op", "up", "--norm", "normalized",
        )
        assert code == 0 and "wedge spectrum" in out
        data = json.loads(out_file.read_text())
        K = SimplicialComplex.from_maximal_faces(data["maximal_faces"])
        assert K.num_faces(2) == 2 and len(K.vertices) == 5
        # round trip: re-serialization is stable
        assert [list(f) for f in K.maximal_faces()] == data["maximal_faces"]

    def test_hypothesis_skip(self, capsys, tmp_path):
        out_file = tmp_path / "wedge.json"
        code, out, _ = run(
            capsys,
            "wedge", "--builtin1", "simplex:2", "--builtin2", "simplex:2",
            "--face1", "1,2", "--face2", "1,2", "--out", str(out_file),
            "--check-dim", "1", "--op", "up",
        )
        assert code == 0 and "check skipped" in out


class TestDuplicateCommand:
    def test_path_motif(self, capsys, tmp_path):
        out_file = tmp_path / "dup.json"
        code, out, _ = run(
            capsys,
            "duplicate", "--builtin", "path", "--motif", "1,2",
            "--out", str(out_file),
        )
        assert code == 0
        K = SimplicialComplex.from_maximal_faces(
            json.loads(out_file.read_text())["maximal_faces"]
        )
        assert K.num_faces(0) == 5 and K.num_faces(1) == 4

    def test_not_a_motif_exit(self, capsys, tmp_path):
        code, _, err = run(
            capsys,
            "duplicate", "--builtin", "simplex:2", "--motif", "1;2",
            "--out", str(tmp_path / "x.json"),
        )
        assert code == 1


class TestInputErrors:
    def test_unknown_builtin(self, capsys):
        code, _, err = run(
            capsys,
            "spectrum", "--builtin", "dodecahedron", "--dim", "1",
            "--op", "up", "--norm", "normalized",
        )
        assert code == 2
