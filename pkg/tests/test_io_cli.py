from __future__ import annotations

import json
import subprocess
import sys

import pytest

from fanlemma import io
from fanlemma.cli import main
from fanlemma.errors import LabelingError, ValidationError
from fanlemma.generators import GeneratorSpec, generate, paper_tetra
from fanlemma.labeling import random_labeling


class TestRoundTrip:
    @pytest.mark.parametrize("spec", [GeneratorSpec("octahedral", 2, 1), GeneratorSpec("paper-tetra", 2)])
    def test_complex(self, spec):
        cx, fl = generate(spec)
        back, fl2 = io.complex_from_json(json.loads(io.dumps(io.complex_to_json(cx, fl))))
        assert back == cx
        assert fl2.levels == fl.levels and fl2.negative == fl.negative
        assert fl2.explicit_negative == fl.explicit_negative

    def test_labeling(self, s2):
        cx, _ = s2
        lab = random_labeling(cx, 3, seed=4)
        assert io.labeling_from_json(cx, io.labeling_to_json(lab)) == lab

    def test_half_labeling_is_mirrored(self, s2):
        cx, _ = s2
        lab = io.labeling_from_json(cx, {"m": 3, "labels": {"0": 1, "1": -2, "2": 3}})
        assert lab.labels == (1, -2, 3, -1, 2, -3)

    def test_canonical_output(self, s1):
        text = io.dumps(io.complex_to_json(*s1))
        assert text == io.dumps(json.loads(text))

    def test_bad_documents(self, s1, tmp_path):
        cx, _ = s1
        with pytest.raises(ValidationError):
            io.complex_from_json({"n": 1})
        with pytest.raises(LabelingError):
            io.labeling_from_json(cx, {"labels": {}})
        with pytest.raises(LabelingError):
            io.labeling_from_json(cx, {"m": 2, "labels": {"9": 1}})
        p = tmp_path / "x.json"
        p.write_text("{not json")
        with pytest.raises(ValidationError):
            io.read_json(p)


@pytest.fixture
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path


def write(path, doc):
    path.write_text(json.dumps(doc))
    return str(path)


class TestCli:
    def test_gen_and_fan(self, workdir, capsys):
        assert main(["gen", "--kind", "octahedral", "--dim", "2", "-o", "s2.json"]) == 0
        labels = write(workdir / "l.json", {"m": 3, "labels": {"0": 1, "1": 2, "2": 3}})
        assert main(["fan", "-i", "s2.json", "--labels", labels, "-o", "t.json"]) == 0
        out = capsys.readouterr().out
        assert "path length" in out and "antipodal witness" in out
        doc = json.loads((workdir / "t.json").read_text())
        assert doc["termination"] == "AlternatingN"
        assert sorted(doc["witness"]["simplex"]) == [1, 3, 5]

    def test_fan_random(self, workdir, capsys):
        main(["gen", "--dim", "3", "--refine", "1", "-o", "s3.json"])
        assert main(["fan", "-i", "s3.json", "--random", "4", "--seed", "5"]) == 0

    def test_fan_bound_exit_3(self, workdir, capsys):
        main(["gen", "--dim", "2", "-o", "s2.json"])
        assert main(["fan", "-i", "s2.json", "--random", "2"]) == 3
        assert "m >= n+1" in capsys.readouterr().err

    def test_fan_complementary_exit_3(self, workdir):
        main(["gen", "--dim", "1", "-o", "s1.json"])
        labels = write(workdir / "l.json", {"m": 2, "labels": {"0": 1, "1": -1}})
        assert main(["fan", "-i", "s1.json", "--labels", labels]) == 3

    def test_tucker(self, workdir, capsys):
        main(["gen", "--dim", "2", "--refine", "1", "-o", "s2.json"])
        assert main(["tucker", "-i", "s2.json", "--random", "2", "-o", "t.json"]) == 0
        doc = json.loads((workdir / "t.json").read_text())
        assert doc["termination"] == "ComplementaryEdge"
        assert "complementary edge" in capsys.readouterr().out

    def test_tucker_short_circuit(self, workdir, capsys):
        main(["gen", "--kind", "paper-tetra", "-o", "t.json"])
        assert "antipodal vertex pair" in capsys.readouterr().out
        assert main(["tucker", "-i", "t.json", "--random", "2"]) == 0
        assert "short-circuit" in capsys.readouterr().out

    def test_label_and_verify(self, workdir, capsys):
        main(["gen", "--dim", "2", "--refine", "1", "-o", "s2.json"])
        assert main(["label", "-i", "s2.json", "--m", "3", "--seed", "2",
                     "--forbid-complementary", "-o", "l.json"]) == 0
        rc = main(["verify", "-i", "s2.json", "--labels", "l.json", "-o", "r.json",
                   "--full", "--figure", "r.png"])
        assert rc == 0
        doc = json.loads((workdir / "r.json").read_text())
        assert all(doc["claims"].values()) and doc["trace_matches_oracle"]
        assert (workdir / "r.png").stat().st_size > 0
        assert (workdir / "r_trace.png").stat().st_size > 0
        assert "FAIL" not in capsys.readouterr().out

    def test_verify_tucker(self, workdir):
        main(["gen", "--dim", "1", "--refine", "2", "-o", "s1.json"])
        main(["label", "-i", "s1.json", "--m", "1", "-o", "l.json"])
        assert main(["verify", "-i", "s1.json", "--labels", "l.json", "--mode", "tucker",
                     "-o", "r.json"]) == 0
        doc = json.loads((workdir / "r.json").read_text())
        assert doc["tucker_endpoints"][0] == doc["tucker_endpoints"][1]

    def test_invalid_complex_exit_2(self, workdir):
        cx, fl = paper_tetra()
        doc = io.complex_to_json(cx, fl)
        doc["vertices"][0]["antipode"] = 0
        write(workdir / "bad.json", doc)
        assert main(["tucker", "-i", "bad.json", "--random", "2"]) == 2

    def test_missing_flag_exit_2(self, workdir, capsys):
        cx, _ = paper_tetra()
        write(workdir / "noflag.json", io.complex_to_json(cx))
        assert main(["tucker", "-i", "noflag.json", "--random", "2"]) == 2
        assert "no flag" in capsys.readouterr().err

    def test_borsuk(self, workdir, capsys):
        rc = main(["borsuk", "--matrix", "1", "0", "0.3", "0", "1", "0.3", "--refine", "2",
                   "--out", "w.json", "--figure", "b.png"])
        assert rc == 0
        doc = json.loads((workdir / "w.json").read_text())
        assert doc["residual"] <= doc["bound"]
        assert (workdir / "b.png").exists()
        assert "residual" in capsys.readouterr().out

    def test_borsuk_degenerate_exit_2(self, workdir, capsys):
        assert main(["borsuk", "--matrix", "1", "0", "0", "0", "1", "0"]) == 2
        assert "vertex 2" in capsys.readouterr().err

    def test_borsuk_wrong_size(self, workdir):
        assert main(["borsuk", "--matrix", "1", "0"]) == 2

    def test_borsuk_samples(self, workdir):
        main(["gen", "--dim", "1", "-o", "s1.json"])
        write(workdir / "f.json", {"samples": {"0": [0.4], "1": [-1.0]}})
        assert main(["borsuk", "-i", "s1.json", "--samples", "f.json", "--out", "w.json"]) == 0
        assert json.loads((workdir / "w.json").read_text())["residual"] == 0.4

    def test_module_entry_point(self, workdir):
        proc = subprocess.run(
            [sys.executable, "-m", "fanlemma", "gen", "--dim", "1", "-o", "s1.json"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0 and (workdir / "s1.json").exists()
