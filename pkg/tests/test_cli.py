import io
import json

import pytest

from hyperchrome import cli
from hyperchrome import constructions as cons
from hyperchrome.hypercore import Hypergraph


def write_hgr(tmp_path, g, name="g.hgr"):
    path = tmp_path / name
    path.write_text(g.to_hgr())
    return str(path)


def run(capsys, argv):
    code = cli.main(argv)
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, argv):
    code, out = run(capsys, argv)
    return code, json.loads(out)


class TestBasicVerbs:
    def test_chi(self, tmp_path, capsys):
        path = write_hgr(tmp_path, cons.complete_graph(4))
        code, payload = run_json(capsys, ["chi", path])
        assert code == 0 and payload == {"chi": 4}

    def test_color_negative_verdict(self, tmp_path, capsys):
        path = write_hgr(tmp_path, cons.complete_graph(4))
        code, payload = run_json(capsys, ["color", path, "-k", "3"])
        assert code == 1 and payload["coloring"] is None

    def test_critical_exit_codes(self, tmp_path, capsys):
        g = Hypergraph.of(5, list(cons.complete_graph(4).edges) + [(3, 4)])
        path = write_hgr(tmp_path, g)
        code, payload = run_json(capsys, ["critical", path, "-k", "4"])
        assert code == 1 and payload["critical"] is False
        path = write_hgr(tmp_path, cons.complete_graph(4), "k4.hgr")
        code, payload = run_json(capsys, ["critical", path, "-k", "4"])
        assert code == 0 and payload["critical"] is True

    def test_lambda_with_pair(self, tmp_path, capsys):
        path = write_hgr(tmp_path, cons.odd_wheel(5))
        code, payload = run_json(capsys, ["lambda", path])
        assert code == 0 and payload == {"lambda": 3}
        code, payload = run_json(capsys, ["lambda", path, "-s", "0", "-t", "5"])
        assert code == 0 and payload["lambda"] == 3
        assert len(payload["paths"]) == 3

    def test_blocks(self, tmp_path, capsys):
        g = Hypergraph.of(5, list(cons.complete_graph(4).edges) + [(3, 4)])
        path = write_hgr(tmp_path, g)
        code, payload = run_json(capsys, ["blocks", path])
        assert code == 0
        assert payload["separating_vertices"] == [3]
        assert sorted(b["vertices"] for b in payload["blocks"]) == [[0, 1, 2, 3], [3, 4]]

    def test_cuts_and_mixed_seps(self, tmp_path, capsys):
        path = write_hgr(tmp_path, cons.figure1_join(False).graph)
        code, payload = run_json(capsys, ["cuts", path, "--max-size", "3"])
        assert code == 0 and payload["cuts"]
        code, payload = run_json(capsys, ["mixed-seps", path])
        assert code == 0 and payload["mixed"]


class TestErrorPaths:
    def test_malformed_hgr_is_input_error(self, tmp_path, capsys):
        path = tmp_path / "bad.hgr"
        path.write_text("HGR 1\nn 2\ne 0 5\n")
        code, _ = run(capsys, ["chi", str(path)])
        assert code == 2

    def test_missing_file_is_input_error(self, capsys):
        code, _ = run(capsys, ["chi", "/nonexistent/g.hgr"])
        assert code == 2

    def test_guard_exit_code(self, tmp_path, capsys):
        big = Hypergraph.of(30, [(i, i + 1) for i in range(29)])
        path = write_hgr(tmp_path, big)
        code, _ = run(capsys, ["chi", path])
        assert code == 3
        code, payload = run_json(capsys, ["chi", path, "--force"])
        assert code == 0 and payload == {"chi": 2}

    def test_unknown_construction(self, capsys):
        code, _ = run(capsys, ["construct", "mystery"])
        assert code == 2

    def test_bad_verb(self, capsys):
        assert cli.main(["no-such-verb"]) == 2


class TestPipelines:
    def test_construct_then_classify(self, capsys, monkeypatch):
        code, out = run(capsys, ["construct", "odd-wheel", "5"])
        assert code == 0
        monkeypatch.setattr("sys.stdin", io.StringIO(out))
        code, payload = run_json(capsys, ["classify", "-"])
        assert code == 0
        assert payload["verdict"] == "tight" and payload["lambda"] == 3
        assert payload["certificate"]["type"] == "leaf"

    def test_construct_toft_classify(self, capsys, monkeypatch):
        code, out = run(capsys, ["construct", "toft", "1"])
        assert code == 0
        monkeypatch.setattr("sys.stdin", io.StringIO(out))
        code, payload = run_json(capsys, ["classify", "-"])
        assert code == 0 and payload["verdict"] == "colorable"

    def test_every_generator_classifies(self, capsys, monkeypatch):
        cases = [
            ["complete", "4"],
            ["cycle", "5"],
            ["odd-wheel", "5"],
            ["hyperwheel", "4"],
            ["kc", "1", "2"],
            ["figure1"],
            ["figure2-g1"],
            ["figure2-g2"],
            ["figure3"],
            ["c2-tree", "-1", "0", "0", "1", "1", "2", "2"],
        ]
        for case in cases:
            code, out = run(capsys, ["construct"] + case)
            assert code == 0, case
            monkeypatch.setattr("sys.stdin", io.StringIO(out))
            code, _ = run_json(capsys, ["classify", "-"])
            assert code == 0, case

    def test_certify_and_verify_cert(self, tmp_path, capsys):
        path = write_hgr(tmp_path, cons.figure1_join(True).graph)
        code, payload = run_json(capsys, ["certify", path, "-k", "3"])
        assert code == 0 and payload["certificate"]["type"] == "join"
        cert_path = tmp_path / "cert.json"
        cert_path.write_text(json.dumps(payload["certificate"]))
        code, payload = run_json(capsys, ["verify-cert", str(cert_path), path])
        assert code == 0 and payload["match"] is True
        other = write_hgr(tmp_path, cons.odd_wheel(5), "w5.hgr")
        code, payload = run_json(capsys, ["verify-cert", str(cert_path), other])
        assert code == 1 and payload["match"] is False

    def test_certify_negative(self, tmp_path, capsys):
        path = write_hgr(tmp_path, cons.cycle(7))
        code, payload = run_json(capsys, ["certify", path, "-k", "3"])
        assert code == 1 and payload["certificate"] is None

    def test_join_verb(self, tmp_path, capsys):
        path = write_hgr(tmp_path, cons.complete_graph(4))
        code, out = run(
            capsys,
            ["join", path, path, "--v1", "0", "--v2", "0", "--e1", "0", "--e2", "0"],
        )
        assert code == 0
        assert Hypergraph.from_hgr(out) == cons.figure1_join(False).graph

    def test_decompose_mixed(self, tmp_path, capsys):
        j = cons.figure1_join(False)
        path = write_hgr(tmp_path, j.graph)
        estar = j.graph.edge_ref(j.estar)
        code, payload = run_json(capsys, ["decompose", path, "--mixed", f"0,{estar}"])
        assert code == 0
        assert Hypergraph.from_hgr(payload["g1"]) == cons.complete_graph(4)

    def test_gallai_check(self, tmp_path, capsys):
        path = write_hgr(tmp_path, cons.odd_wheel(5))
        code, payload = run_json(capsys, ["gallai-check", path, "-k", "3"])
        assert code == 0 and payload["all_ok"] is True


class TestCorpus:
    def test_corpus_reproducible(self, tmp_path, capsys):
        out1, out2 = tmp_path / "a", tmp_path / "b"
        for out in (out1, out2):
            code, _ = run(capsys, [
                "corpus", "--seed", "3", "--count", "4", "--n-max", "7",
                "--out", str(out),
            ])
            assert code == 0
        files1 = sorted(p.name for p in out1.iterdir())
        assert files1 == sorted(p.name for p in out2.iterdir())
        for name in files1:
            assert (out1 / name).read_bytes() == (out2 / name).read_bytes()

    def test_corpus_files_reparse_and_manifest_holds(self, tmp_path, capsys):
        out = tmp_path / "c"
        code, _ = run(capsys, [
            "corpus", "--seed", "5", "--count", "6", "--n-max", "7", "--out", str(out),
        ])
        assert code == 0
        manifest = json.loads((out / "manifest.json").read_text())
        assert len(manifest["entries"]) >= 6 + 15
        for name, entry in manifest["entries"].items():
            g = Hypergraph.from_hgr((out / f"{name}.hgr").read_text())
            assert g.n == entry["n"] and g.m == entry["m"]
