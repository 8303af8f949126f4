import json

import pytest

from halin.cli import main
from halin.io import dumps_graph, load_graph
from halin.generators import make_wheel


def _out(capsys):
    return json.loads(capsys.readouterr().out)


def test_generate_then_color_even_wheel(tmp_path, capsys):
    path = tmp_path / "w6.json"
    assert main(["generate", "--variant", "wheel", "--n", "6", "--out", str(path)]) == 0
    capsys.readouterr()
    assert main(["color", "--in", str(path)]) == 0
    report = _out(capsys)
    assert report["num_colors"] == 4


def test_generate_then_recognize_round_trip(tmp_path, capsys):
    path = tmp_path / "h10.json"
    assert (
        main(
            [
                "generate", "--variant", "halin", "--n", "10",
                "--seed", "7", "--out", str(path),
            ]
        )
        == 0
    )
    capsys.readouterr()
    assert main(["recognize", "--in", str(path)]) == 0
    assert _out(capsys)["halin"] is True


def test_generate_to_stdout_is_deterministic(capsys):
    args = ["generate", "--variant", "halin-cubic", "--n", "12", "--seed", "3"]
    assert main(args) == 0
    first = capsys.readouterr().out
    assert main(args) == 0
    assert capsys.readouterr().out == first
    obj = json.loads(first)
    assert set(obj) == {"n", "edges", "outer"}


def test_missing_file_is_usage_error(capsys):
    assert main(["color", "--in", "missing.json"]) == 2


def test_unknown_field_is_usage_error(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"n": 4, "edges": [[0, 1]], "color": 3}')
    assert main(["recognize", "--in", str(path)]) == 2


def test_recognize_rejects_non_halin(tmp_path, capsys):
    path = tmp_path / "c5.json"
    path.write_text(
        json.dumps({"n": 5, "edges": [[i, (i + 1) % 5] for i in range(5)]})
    )
    assert main(["recognize", "--in", str(path)]) == 1
    report = _out(capsys)
    assert report["halin"] is False
    assert "reason" in report


def test_generate_rejects_bad_parameters(capsys):
    assert main(["generate", "--variant", "wheel", "--n", "3"]) == 2
    assert main(["generate", "--variant", "halin-cubic", "--n", "9"]) == 2
    assert main(["generate", "--variant", "necklace", "--n", "7"]) == 2


def test_certificate_emission_and_reuse(tmp_path, capsys):
    graph = tmp_path / "g.json"
    cert = tmp_path / "cert.json"
    main(["generate", "--variant", "halin", "--n", "20", "--seed", "5", "--out", str(graph)])
    assert main(["recognize", "--in", str(graph), "--emit-certificate", str(cert)]) == 0
    cert_obj = json.loads(cert.read_text())
    assert set(cert_obj) == {"outer", "cycle_order", "root", "parent"}
    capsys.readouterr()
    assert main(["color", "--in", str(graph), "--certificate", str(cert)]) == 0
    assert _out(capsys)["num_colors"] == 3


def test_peo_pipeline_with_completion(tmp_path, capsys):
    graph = tmp_path / "g.json"
    completion = tmp_path / "comp.json"
    main(["generate", "--variant", "halin", "--n", "15", "--seed", "2", "--out", str(graph)])
    capsys.readouterr()
    assert main(["peo", "--in", str(graph), "--emit-completion", str(completion)]) == 0
    report = _out(capsys)
    assert sorted(report["order"]) == list(range(15))
    comp, _ = load_graph(str(completion))
    g, _ = load_graph(str(graph))
    assert comp.num_edges() == g.num_edges() + len(report["fill_edges"])


def test_color_runs_recognition_when_outer_missing(tmp_path, capsys):
    g, _ = make_wheel(5)
    path = tmp_path / "w5.json"
    path.write_text(dumps_graph(g))  # no outer field
    assert main(["color", "--in", str(path)]) == 0
    assert _out(capsys)["num_colors"] == 3


def test_mismatched_certificate_is_format_error(tmp_path, capsys):
    g1 = tmp_path / "g1.json"
    g2 = tmp_path / "g2.json"
    cert = tmp_path / "cert.json"
    main(["generate", "--variant", "halin", "--n", "20", "--seed", "5", "--out", str(g1)])
    main(["generate", "--variant", "halin", "--n", "24", "--seed", "6", "--out", str(g2)])
    main(["recognize", "--in", str(g1), "--emit-certificate", str(cert)])
    capsys.readouterr()
    assert main(["color", "--in", str(g2), "--certificate", str(cert)]) == 2


def test_wrong_outer_field_falls_back_to_recognition(tmp_path, capsys):
    g, _ = make_wheel(7)
    path = tmp_path / "w7.json"
    obj = json.loads(dumps_graph(g, {0, 1, 2, 3}))  # not a valid outer set
    path.write_text(json.dumps(obj))
    assert main(["color", "--in", str(path)]) == 0
    assert _out(capsys)["num_colors"] == 3


def test_dot_export(tmp_path, capsys):
    graph = tmp_path / "g.json"
    dot = tmp_path / "g.dot"
    main(["generate", "--variant", "wheel", "--n", "7", "--out", str(graph)])
    capsys.readouterr()
    assert main(["color", "--in", str(graph), "--dot", str(dot)]) == 0
    text = dot.read_text()
    assert text.startswith("graph halin {")
    assert text.count("penwidth") == 6  # cycle edges drawn distinctly
    assert "fillcolor" in text


@pytest.mark.parametrize("mode", ["coloring", "chordal", "peo"])
def test_verify_modes(tmp_path, capsys, mode):
    graph = tmp_path / "g.json"
    main(["generate", "--variant", "halin", "--n", "12", "--seed", "1", "--out", str(graph)])
    capsys.readouterr()
    if mode == "chordal":
        # a Halin graph on >= 5 vertices is never chordal itself
        assert main(["verify", "--in", str(graph), "--mode", mode]) == 1
        assert _out(capsys)["chordal"] is False
    else:
        assert main(["verify", "--in", str(graph), "--mode", mode]) == 0
        assert _out(capsys)["ok"] is True


def test_bench_empty_schedule(capsys):
    assert main(["bench", "--algorithm", "color", "--sizes", ""]) == 0
    report = _out(capsys)
    assert report["points"] == []
    assert report["slope"] is None


def test_bench_small_schedule(capsys):
    assert (
        main(
            [
                "bench", "--algorithm", "peo", "--variant", "necklace",
                "--sizes", "200,400", "--repeats", "2",
            ]
        )
        == 0
    )
    report = _out(capsys)
    assert len(report["points"]) == 2
    assert isinstance(report["slope"], float)


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["recognize"])  # missing --in
    assert exc.value.code == 2
