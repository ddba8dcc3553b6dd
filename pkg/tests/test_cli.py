import json

import pytest

from toricchow.cli import main
from toricchow.io import FIXTURES, InputDocument, InputError


@pytest.fixture
def files(tmp_path):
    out = {}
    for name in FIXTURES:
        path = tmp_path / f"{name}.json"
        assert main(["examples", name, "-o", str(path)]) == 0
        out[name] = str(path)
    return out


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc) if not isinstance(doc, str) else doc)
    return str(path)


class TestExamples:
    def test_p64_document(self, capsys):
        code, out, _ = run(capsys, "examples", "p64")
        assert code == 0
        doc = json.loads(out)
        assert doc == {"lattice_rank": 2, "rays": [[1, 0], [0, 1]], "max_cones": [[0], [1]],
                       "target": {"rank": 1, "torsion": [2]}, "lift": [[2, -3], [1, -1]]}

    def test_blowup_document(self, capsys):
        doc = json.loads(run(capsys, "examples", "blowupA3")[1])
        assert doc["rays"] == [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]]
        assert len(doc["max_cones"]) == 3
        assert doc["target"] == {"rank": 2, "torsion": [2]}
        assert doc["lift"] == [[3, -1, 0], [4, 0, -1], [0, -1, 1]]

    def test_fanta_document(self, capsys):
        doc = json.loads(run(capsys, "examples", "fanta")[1])
        assert doc["mode"] == "fantastack"
        images = [[row[i] for row in doc["lift"]] for i in range(doc["lattice_rank"])]
        assert images == [[2, 0], [0, 3], [4, 2]]

    def test_unknown(self, capsys):
        code, _, err = run(capsys, "examples", "nope")
        assert code == 2
        assert "unknown example" in err


class TestCheck:
    def test_p64(self, capsys, files):
        code, out, _ = run(capsys, "check", files["p64"])
        assert code == 0
        assert "hypotheses: OK" in out

    def test_single_ray(self, capsys, tmp_path):
        path = write(tmp_path, "ray.json", {"lattice_rank": 2, "rays": [[1, 0]], "max_cones": [[0]],
                                            "target": {"rank": 1, "torsion": []}, "lift": [[1, 0]]})
        code, out, _ = run(capsys, "check", path)
        assert code == 1
        assert "torus factor" in out

    def test_truncated(self, capsys, tmp_path, files):
        text = open(files["p64"]).read()
        code, _, err = run(capsys, "check", write(tmp_path, "cut.json", text[: len(text) // 2]))
        assert code == 2
        assert "invalid JSON" in err

    def test_missing_file(self, capsys, tmp_path):
        assert run(capsys, "check", str(tmp_path / "none.json"))[0] == 2

    def test_verbose_normalized_lift(self, capsys, tmp_path):
        doc = dict(FIXTURES["p64"], lift=[[2, -3], [5, -7]])
        code, out, _ = run(capsys, "check", write(tmp_path, "p.json", doc), "--verbose")
        assert code == 0
        assert "normalized lift: [[2, -3], [1, 1]]" in out

    def test_bg_reports_infinite_cokernel(self, capsys, files):
        code, out, _ = run(capsys, "check", files["bg"])
        assert code == 0
        assert "infinite (rk N0 = 2)" in out


class TestChow:
    def test_p64_raw(self, capsys, files):
        code, out, _ = run(capsys, "chow", files["p64"])
        assert code == 0
        assert out.splitlines()[0] == "Z[x1,x2,y1]/(2*x1-3*x2, x1-x2+2*y1, x1*x2)"
        assert "weights: [[6, 4, -1]]" in out

    def test_p64_simplify(self, capsys, files):
        out = run(capsys, "chow", files["p64"], "--simplify")[1]
        assert out.splitlines()[0] == "Z[y1]/(24*y1^2)"

    def test_p64_graded(self, capsys, files):
        out = run(capsys, "chow", files["p64"], "--graded", "4")[1].splitlines()
        assert out[1:6] == ["deg 0: Z", "deg 1: Z", "deg 2: Z/24", "deg 3: Z/24", "deg 4: Z/24"]

    def test_bg(self, capsys, files):
        out = run(capsys, "chow", files["bg"])[1]
        assert out.splitlines()[0] == "Z[z1,z2,y1,y2]/(2*y1, 3*y2)"

    def test_latex(self, capsys, files):
        out = run(capsys, "chow", files["p64"], "--simplify", "--format", "latex")[1].splitlines()
        assert out[0] == r"\mathbb{Z}[y_{1}]/(24y_{1}^{2})"
        assert all(line.startswith("% ") for line in out[1:])

    def test_json(self, capsys, files):
        out = run(capsys, "chow", files["blowupA3"], "--format", "json", "--graded", "2", "--verbose")[1]
        doc = json.loads(out)
        assert doc["presentation"]["relations"][0] == "3*x1-x2+2*x4"
        assert doc["presentation"]["monomial_relations"] == [["x1", "x2", "x3"]]
        assert doc["cox"]["character_group"] == {"rank": 2, "torsion": []}
        assert doc["graded"][2]["free_rank"] == 3
        assert doc["normalized_lift"] == [[3, -1, 0], [4, 0, -1], [0, 1, 1]]

    def test_deterministic(self, capsys, files):
        a = run(capsys, "chow", files["blowupA3"], "--simplify", "--graded", "3")[1]
        b = run(capsys, "chow", files["blowupA3"], "--simplify", "--graded", "3")[1]
        assert a == b

    def test_hypothesis_failure(self, capsys, tmp_path):
        doc = {"lattice_rank": 2, "rays": [[1, 0], [1, 2]], "max_cones": [[0, 1]],
               "target": {"rank": 2, "torsion": []}, "lift": [[1, 0], [0, 1]]}
        code, _, err = run(capsys, "chow", write(tmp_path, "ns.json", doc))
        assert code == 1
        assert "not smooth" in err

    def test_skip_fan_check(self, capsys, files):
        code, out, _ = run(capsys, "chow", files["p64"], "--skip-fan-check")
        assert code == 0


class TestFantastack:
    def test_fanta(self, capsys, files):
        out = run(capsys, "fantastack", files["fanta"])[1]
        assert out.splitlines()[0] == "Z[x1,x2,x3]/(2*x1+4*x3, 3*x2+2*x3)"
        out = run(capsys, "fantastack", files["fanta"], "--simplify")[1]
        assert out.splitlines()[0] == "Z[s,t]/(2*t)"

    def test_p2(self, capsys, files):
        out = run(capsys, "fantastack", files["p2"], "--simplify")[1]
        assert out.splitlines()[0] == "Z[x3]/(x3^3)"

    def test_image_outside_support(self, capsys, tmp_path):
        doc = dict(FIXTURES["fanta"], lift=[[2, 0, -4], [0, 3, 2]])
        code, _, err = run(capsys, "fantastack", write(tmp_path, "bad.json", doc))
        assert code == 1
        assert "image 2" in err

    def test_requires_fantastack_mode(self, capsys, files):
        assert run(capsys, "fantastack", files["p64"])[0] == 2


class TestCompare:
    def test_blowup_cubic(self, capsys, files):
        code, out, _ = run(capsys, "compare", files["blowupA3"], "--target",
                           "(u+2*v)*(u+6*v)*(u+8*v)", "--max-degree", "6")
        assert code == 0
        assert out.splitlines()[-1].startswith("PASS")

    def test_p64_pass_and_fail(self, capsys, files):
        assert run(capsys, "compare", files["p64"], "--target", "24*t^2")[0] == 0
        code, out, _ = run(capsys, "compare", files["p64"], "--target", "12*t^2")
        assert code == 1
        assert "FAIL at degree 2" in out

    def test_ring_target_and_file(self, capsys, files, tmp_path):
        assert run(capsys, "compare", files["fanta"], "--target", "Z[s,t]/(2*t)")[0] == 0
        path = write(tmp_path, "target.txt", "2*t\n")
        assert run(capsys, "compare", files["fanta"], "--target", path, "--vars", "s,t")[0] == 0

    def test_json_target(self, capsys, files, tmp_path):
        doc = {"variables": [{"name": "t", "degree": 1}], "relations": ["24*t^2"]}
        path = write(tmp_path, "target.json", doc)
        assert run(capsys, "compare", files["p64"], "--target", path)[0] == 0

    def test_parse_error(self, capsys, files):
        code, _, err = run(capsys, "compare", files["p64"], "--target", "24*t^^2")
        assert code == 2
        assert "position" in err


class TestInputDocument:
    def test_unknown_field(self):
        with pytest.raises(InputError, match="unknown fields"):
            InputDocument.from_dict(dict(FIXTURES["p64"], extra=1))

    def test_lift_shape(self):
        with pytest.raises(InputError):
            InputDocument.from_dict(dict(FIXTURES["p64"], lift=[[2, -3]]))

    def test_torsion_coefficients(self):
        with pytest.raises(InputError):
            InputDocument.from_dict(dict(FIXTURES["p64"], target={"rank": 1, "torsion": [1]}))

    def test_round_trip(self):
        for name, doc in FIXTURES.items():
            parsed = InputDocument.from_dict(doc)
            assert InputDocument.from_dict(json.loads(parsed.dumps())) == parsed

    def test_bad_usage_exit_code(self, capsys):
        assert main(["chow"]) == 2
        assert main(["--help"]) == 0
        capsys.readouterr()
