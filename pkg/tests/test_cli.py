import json

from nmgraph.cli import main
from nmgraph.core import NMGraph, NMParams, serialize


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_graph(tmp_path, name, g, extra=""):
    path = tmp_path / name
    path.write_text(extra + serialize(g))
    return str(path)


def test_gen_tight_roundtrip(tmp_path, capsys):
    out = tmp_path / "tight.nmg"
    code, _, _ = run(capsys, "gen", "tight", "--n", "1", "--m", "0",
                     "-o", str(out))
    assert code == 0
    text = out.read_text()
    assert text.startswith("# good:")
    assert "embed" in text


def test_verify_theorem_pass(capsys):
    code, out, _ = run(capsys, "verify-theorem", "--n", "1", "--m", "0")
    assert code == 0
    assert "omega_r = 10 = 2*2^2+2 PASS" in out
    assert "result: PASS" in out


def test_verify_theorem_json(capsys):
    code, out, _ = run(capsys, "verify-theorem", "--n", "0", "--m", "2",
                       "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["omega_r"] == 10
    assert payload["result"] == "PASS"


def test_relative_clique_and_verify(tmp_path, capsys):
    g = NMGraph(NMParams(1, 0), 3, arcs=[(0, 1, 1), (1, 2, 1)])
    path = write_graph(tmp_path, "p3.nmg", g)
    code, out, _ = run(capsys, "relative-clique", path)
    assert code == 0
    assert "omega_r: 3" in out

    code, out, _ = run(capsys, "relative-clique", path, "--verify", "0,1,2",
                       "--certificate")
    assert code == 0
    assert "verified: True" in out

    # 0 and 2 do not see each other in a directed 2-path 0->1, 1->2?  They
    # do (they disagree on 1), so use two isolated vertices instead.
    iso = NMGraph(NMParams(1, 0), 2)
    path2 = write_graph(tmp_path, "iso.nmg", iso)
    code, out, _ = run(capsys, "relative-clique", path2, "--verify", "0,1")
    assert code == 1
    assert "failing_pair: 0 1" in out


def test_absolute_clique(tmp_path, capsys):
    g = NMGraph(NMParams(0, 2), 3, edges=[(0, 1, 1), (1, 2, 1)])
    path = write_graph(tmp_path, "mono.nmg", g)
    code, out, _ = run(capsys, "absolute-clique", path)
    assert code == 0
    assert "omega_a: 2" in out


def test_chromatic(tmp_path, capsys):
    g = NMGraph(NMParams(1, 0), 3, arcs=[(0, 1, 1), (1, 2, 1)])
    path = write_graph(tmp_path, "p3.nmg", g)
    code, out, _ = run(capsys, "chromatic", path)
    assert code == 0
    assert "chi: 3" in out

    code, out, _ = run(capsys, "chromatic", path, "--max-order", "2")
    assert code == 1
    assert "chi: exhausted" in out


def test_hom_yes_and_no(tmp_path, capsys):
    src = NMGraph(NMParams(1, 0), 3, arcs=[(0, 1, 1), (1, 2, 1)])
    tgt = NMGraph(NMParams(1, 0), 3, arcs=[(0, 1, 1), (1, 2, 1), (2, 0, 1)])
    bad = NMGraph(NMParams(1, 0), 2, arcs=[(0, 1, 1)])
    s = write_graph(tmp_path, "s.nmg", src)
    t = write_graph(tmp_path, "t.nmg", tgt)
    b = write_graph(tmp_path, "b.nmg", bad)

    code, out, _ = run(capsys, "hom", s, t)
    assert code == 0
    assert "homomorphism: True" in out

    code, out, _ = run(capsys, "hom", s, b)
    assert code == 1
    assert "homomorphism: False" in out


def test_seeing_output(tmp_path, capsys):
    g = NMGraph(NMParams(1, 0), 3, arcs=[(0, 1, 1), (1, 2, 1)])
    path = write_graph(tmp_path, "p3.nmg", g)
    code, out, _ = run(capsys, "seeing", path)
    assert code == 0
    assert "0 2" in out and "via 1" in out

    code, out, _ = run(capsys, "seeing", path, "--restrict", "0,1", "--json")
    assert code == 0
    payload = json.loads(out)
    # Host-vertex indexing is kept; only edges are restricted.
    assert payload["vertices"] == 3
    assert "0 1" in payload["edges"]
    assert "0 2" not in payload["edges"]


def test_check(tmp_path, capsys):
    code, _, _ = run(capsys, "gen", "tight", "--n", "1", "--m", "0",
                     "-o", str(tmp_path / "t.nmg"))
    assert code == 0
    code, out, _ = run(capsys, "check", str(tmp_path / "t.nmg"))
    assert code == 0
    assert "girth: 4" in out
    assert "triangle_free: True" in out
    assert "planar: True" in out
    assert "euler_ok: True" in out


def test_oracle_sweep_small(capsys):
    code, out, _ = run(capsys, "oracle", "sweep", "--vertices", "3",
                       "--n", "1", "--m", "0")
    assert code == 0
    assert "result: PASS" in out
    assert "graphs_checked: 27" in out


def test_parse_error_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.nmg"
    bad.write_text("nm 1 0\nvertices 2\narc 0 5 1\n")
    code, _, err = run(capsys, "check", str(bad))
    assert code == 2
    assert "line 3" in err


def test_missing_file_exit_2(capsys):
    code, _, err = run(capsys, "check", "/nonexistent/file.nmg")
    assert code == 2
    assert err


def test_gen_exceptional_and_fk(tmp_path, capsys):
    code, _, _ = run(capsys, "gen", "exceptional", "--n", "1", "--m", "0",
                     "--alpha", "1", "--beta", "2",
                     "-o", str(tmp_path / "e.nmg"))
    assert code == 0
    code, out, _ = run(capsys, "gen", "fk", "--n", "1", "--m", "0",
                       "--pairs", "1:1,1:2,2:1", "-o", "-")
    assert code == 0
    assert out.startswith("# good:")
