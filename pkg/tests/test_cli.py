import json
import subprocess
import sys

import pytest

from chordal.cli import main
from chordal.graph import parse_graph
from chordal.reversible import ReversibilityCertificate
from chordal.search import ChordalityCertificate, is_simplicial_elimination_scheme
from chordal.structures import tree_from_json
from chordal.cliquetree import verify_clique_tree

from conftest import G1_EDGES

C4 = "0 1\n1 2\n2 3\n3 0\n"
BULL_TEXT = "a b\nb c\nb d\nc d\nc e\n"


def edge_text(spec: str) -> str:
    return "\n".join(e.replace("-", " ") for e in spec.split()) + "\n"


@pytest.fixture
def run(tmp_path, capsys):
    def go(*argv, text=None):
        args = list(argv)
        if text is not None:
            path = tmp_path / "g.txt"
            path.write_text(text)
            args.append(str(path))
        code = main(args)
        out = capsys.readouterr()
        return code, out.out, out.err
    return go


def test_check_chordal_and_hole(run):
    code, out, _ = run("check", text=edge_text(G1_EDGES))
    assert code == 0
    data = json.loads(out)
    g = parse_graph(edge_text(G1_EDGES))
    cert = ChordalityCertificate.from_json(data, g)
    assert cert.chordal and cert.verify(g)

    code, out, _ = run("check", text=C4)
    assert code == 1
    assert json.loads(out) == {"chordal": False, "kind": "hole", "vertices": ["0", "1", "2", "3"]}


def test_check_text_format(run):
    code, out, _ = run("check", "-f", "text", text=C4)
    assert code == 1 and out.startswith("not chordal; hole: 0 1 2 3")


def test_peo_searches(run):
    g = parse_graph(edge_text(G1_EDGES))
    for search in ("lexbfs", "mcs"):
        code, out, _ = run("peo", "--search", search, "--start", "f", text=edge_text(G1_EDGES))
        data = json.loads(out)
        assert code == 0 and data["start"] == "f" and data["search"] == search
        order = [g.vertex(x) for x in data["ordering"]]
        assert is_simplicial_elimination_scheme(g, order)
        assert order[-1] == g.vertex("f")


def test_peo_non_chordal_reports_hole(run):
    code, out, _ = run("peo", text=C4)
    assert code == 1 and json.loads(out)["kind"] == "hole"


def test_clique_tree_round_trip(run):
    code, out, _ = run("clique-tree", text=edge_text(G1_EDGES))
    g = parse_graph(edge_text(G1_EDGES))
    t = tree_from_json(json.loads(out), g)
    assert code == 0 and verify_clique_tree(g, t)


def test_clique_tree_non_chordal(run):
    code, out, _ = run("clique-tree", text=C4)
    assert code == 1 and json.loads(out)["vertices"] == ["0", "1", "2", "3"]


def test_rcg_and_dot(run):
    code, out, _ = run("rcg", "-f", "dot", text=edge_text("a-b a-c b-c b-d c-d c-e d-e"))
    assert code == 0 and out.startswith("graph Cr")


def test_minmax_tree_outputs(run):
    code, out, _ = run("minmax-tree", text=edge_text(G1_EDGES))
    data = json.loads(out)
    g = parse_graph(edge_text(G1_EDGES))
    assert code == 0 and verify_clique_tree(g, tree_from_json(data, g))
    assert data["pending_edge"]["separator"] in (["c", "d"], ["e"])
    code, out, _ = run("minmax-tree", "-f", "dot", text=edge_text(G1_EDGES))
    assert "red" in out
    code, out, _ = run("minmax-tree", "-f", "text", text="a b\n")
    assert "single clique" in out


def test_scheme(run):
    code, out, _ = run("scheme", text=edge_text(G1_EDGES))
    data = json.loads(out)
    g = parse_graph(edge_text(G1_EDGES))
    assert code == 0
    assert is_simplicial_elimination_scheme(g, [g.vertex(x) for x in data["ordering"]])
    assert data["steps"][-1]["separator"] is None


def test_reversible(run):
    code, out, _ = run("reversible", text=BULL_TEXT)
    assert code == 0 and json.loads(out) == {"kind": "ordering", "vertices": list("abdce")}
    code, out, _ = run("reversible", text="0 1\n0 2\n0 3\n")
    g = parse_graph("0 1\n0 2\n0 3\n")
    cert = ReversibilityCertificate.from_json(json.loads(out), g)
    assert code == 1 and cert.kind == "claw" and cert.verify(g)


def test_separators(run):
    code, out, _ = run("separators", "-f", "text", "--with-simplicial", text=edge_text(G1_EDGES))
    assert code == 0
    assert out.strip().splitlines()[-1] == "min-max simplicial: a b f"


def test_components(run):
    code, out, _ = run("components", "-f", "json", text="p edge 5 2\ne 1 2\ne 3 4\n")
    data = json.loads(out)
    assert code == 0 and [d["labels"] for d in data] == [["1", "2"], ["3", "4"], ["5"]]


def test_disconnected_is_usage_error(run):
    code, _, err = run("minmax-tree", text="a b\nc d\n")
    assert code == 2 and "chordal components" in err


def test_search_and_limit(run):
    code, out, _ = run("search", "no-minmax-terminal", "--n-max", "6", "--limit", "1")
    data = json.loads(out)
    assert code == 0 and data["count"] >= 1 and len(data["instances"]) == 1
    code, out, _ = run("search", "no-minmin-pending", "--n-max", "5")
    assert code == 1 and json.loads(out)["count"] == 0


def test_gen_is_seeded_and_chordal(run):
    _, a, _ = run("gen", "30", "--seed", "3")
    _, b, _ = run("gen", "30", "--seed", "3")
    assert a == b
    code, out, _ = run("check", text=a)
    assert code == 0
    _, out, _ = run("gen", "5", "-f", "json")
    assert json.loads(out)["n"] == 5


def test_verify(run):
    code, out, _ = run("verify", text=edge_text(G1_EDGES))
    data = json.loads(out)
    assert code == 0 and data["ok"]
    assert all(v is True for v in data["checks"].values())
    code, out, _ = run("verify", text=C4)
    assert code == 0 and json.loads(out)["checks"]["chordality"] is True


def test_bench_small(run):
    code, out, _ = run("bench", "-f", "json", "--sizes", "500", "1000", "--repeats", "1", "--no-memory")
    data = json.loads(out)
    assert code == 0 and len(data["rows"]) == 2 and data["memory_slope"] is None


def test_input_errors(run, tmp_path):
    code, _, err = run("check", str(tmp_path / "missing.txt"))
    assert code == 2 and "cannot read" in err
    code, _, err = run("check", text="a b c\n")
    assert code == 2


def test_dimacs_input(run):
    code, out, _ = run("check", text="p edge 3 2\ne 1 2\ne 2 3\n")
    assert code == 0


def test_stdin_and_module_entry():
    res = subprocess.run([sys.executable, "-m", "chordal", "check", "-f", "text"],
                         input=C4, capture_output=True, text=True)
    assert res.returncode == 1 and "hole" in res.stdout


def test_output_is_deterministic(run):
    outs = {run("minmax-tree", text=edge_text(G1_EDGES))[1] for _ in range(3)}
    assert len(outs) == 1
