import json
import os
import subprocess
import sys

import pytest

from rainbow2.cli import main
from rainbow2.errors import ParseError
from rainbow2.generators import GeneratorSpec, generate, petersen
from rainbow2.io import format_coloring, format_edge_list, parse_coloring, parse_edge_list
from rainbow2.verify import EdgeColoring, is_rainbow_connected

C4_TEXT = "# the 4-cycle\n4 4\n0 1\n1 2\n2 3\n3 0\n"


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return write


def test_edge_list_roundtrip():
    for seed in range(20):
        g = generate(GeneratorSpec("random_diam2_bridgeless", 8 + seed, 0.5, seed))
        assert parse_edge_list(format_edge_list(g)) == g


def test_parse_with_comments():
    g = parse_edge_list(C4_TEXT)
    assert (g.n, g.m) == (4, 4)
    assert format_edge_list(g) == "4 4\n0 1\n0 3\n1 2\n2 3\n"


@pytest.mark.parametrize("text", ["", "4\n", "4 2\n0 1\n", "3 1\n0 5\n", "3 1\n0 x\n",
                                  "3 1\n1 1\n"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_edge_list(text)


def test_coloring_roundtrip():
    g = parse_edge_list(C4_TEXT)
    c = EdgeColoring({(0, 1): 1, (1, 2): 2, (2, 3): 1, (0, 3): 2})
    n, back = parse_coloring(format_coloring(g, c))
    assert n == 4 and back == c
    with pytest.raises(ParseError):
        parse_coloring("2 1 2\n0 1 3\n")


def test_color_c4(files, capsys):
    graph = files("c4.txt", C4_TEXT)
    assert main(["color", graph]) == 0
    out = capsys.readouterr().out
    n, c = parse_coloring(out)
    assert c.k <= 5
    assert is_rainbow_connected(parse_edge_list(C4_TEXT), c)


def test_color_writes_trace(files, tmp_path):
    graph = files("p.txt", format_edge_list(petersen()))
    out, trace = str(tmp_path / "p.col"), str(tmp_path / "p.json")
    assert main(["color", graph, "-o", out, "--trace", trace]) == 0
    doc = json.loads(open(trace).read())
    assert list(doc)[:3] == ["center", "blocks", "block_centers"]
    assert doc["completion_case"].startswith("step")
    assert main(["verify", graph, out]) == 0


def test_color_exit_codes(files):
    star = files("star.txt", "4 3\n0 1\n0 2\n0 3\n")
    assert main(["color", star]) == 2
    assert main(["color", files("bad.txt", "four four\n")]) == 1
    assert main(["color", files("c4.txt", C4_TEXT), "--mode", "pendant"]) == 2
    assert main(["color", "/nonexistent/file"]) == 1


def test_color_completion_failure_exit(files, monkeypatch):
    from rainbow2 import algorithm
    from rainbow2.errors import CompletionFailed

    def boom(g):
        raise CompletionFailed("forced", algorithm.ColoringTrace(completion_case="step12"))

    monkeypatch.setattr(algorithm, "color_rc2", boom)
    assert main(["color", files("c4.txt", C4_TEXT)]) == 3


def test_verify_exit_codes(files, capsys):
    graph = files("c4.txt", C4_TEXT)
    alt = files("alt.col", "4 4 2\n0 1 1\n1 2 2\n2 3 1\n0 3 2\n")
    mono = files("mono.col", "4 4 1\n0 1 1\n1 2 1\n2 3 1\n0 3 1\n")
    assert main(["verify", graph, alt]) == 0
    assert "RAINBOW-CONNECTED" in capsys.readouterr().out
    assert main(["verify", graph, mono]) == 4
    assert capsys.readouterr().out.strip() == "NOT-RAINBOW-CONNECTED 0 2"
    wrong_n = files("n.col", "5 4 2\n0 1 1\n1 2 2\n2 3 1\n0 3 2\n")
    assert main(["verify", graph, wrong_n]) == 1


def test_rc(files, capsys):
    c5 = files("c5.txt", "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
    assert main(["rc", c5]) == 0
    assert capsys.readouterr().out.strip() == "3"
    k4 = files("k4.txt", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")
    assert main(["rc", k4]) == 0
    assert capsys.readouterr().out.strip() == "1"
    p7 = files("p7.txt", "7 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n")
    assert main(["rc", p7]) == 0
    assert capsys.readouterr().out.strip() == "> 5"
    big = generate(GeneratorSpec("random_diam2_bridgeless", 50, 0.4, 1))
    assert main(["rc", files("big.txt", format_edge_list(big))]) == 5


def test_gen(capsys, files):
    assert main(["gen", "--family", "named", "--name", "petersen"]) == 0
    assert parse_edge_list(capsys.readouterr().out) == petersen()
    args = ["gen", "--family", "random-diam2", "--n", "20", "--p", "0.3", "--seed", "7"]
    assert main(args) == 0
    first = capsys.readouterr().out
    assert main(args) == 0
    assert capsys.readouterr().out == first
    from rainbow2.generators import validate_family
    assert validate_family(parse_edge_list(first), "random_diam2_bridgeless")
    spec = files("spec.json", GeneratorSpec("named", name="wheel_5").to_json())
    assert main(["gen", "--spec", spec]) == 0
    assert parse_edge_list(capsys.readouterr().out).m == 10
    assert main(["gen", "--family", "named", "--name", "nope"]) == 1
    assert main(["gen"]) == 1


def test_usage_errors_exit_1():
    with pytest.raises(SystemExit) as err:
        main(["frobnicate"])
    assert err.value.code == 1


def _bench(capsys, *extra):
    assert main(["bench", "--count", "12", "--n-min", "8", "--n-max", "20", "--seed", "3",
                 *extra]) == 0
    return capsys.readouterr().out


def test_bench_rows(capsys):
    out = _bench(capsys)
    lines = out.strip().splitlines()
    assert lines[0] == "seed,n,m,colors_used,completion_case,repair_iterations,wall_time"
    rows = [line.split(",") for line in lines[1:-1]]
    assert len(rows) == 12
    assert all(int(r[3]) <= 5 for r in rows)
    keys = [(int(r[1]), int(r[0])) for r in rows]
    assert keys == sorted(keys)
    assert lines[-1].startswith("# instances=12 max_colors_used=")


def test_bench_pendant(capsys):
    out = _bench(capsys, "--family", "pendant", "--no-timing")
    rows = [line.split(",") for line in out.strip().splitlines()[1:-1]]
    assert all(int(r[3]) <= 4 for r in rows)


def test_bench_deterministic(capsys):
    assert _bench(capsys, "--no-timing") == _bench(capsys, "--no-timing")


def test_module_entry_point(tmp_path):
    graph = tmp_path / "c4.txt"
    graph.write_text(C4_TEXT)
    proc = subprocess.run([sys.executable, "-m", "rainbow2", "color", str(graph)],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("4 4 ")
