import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypertrees.cli import main
from hypertrees.core import new_hypergraph, tight_line_graph
from hypertrees.enumeration import EnumerationStats
from hypertrees.errors import DuplicateEdgeError, ParseError
from hypertrees.generators import five_vertex_hypertree, small_counterexample, tight_path, tight_star
from hypertrees.khg import emit_report, export_dot, parse_khg, serialize_khg
from hypertrees.bounds import check_lower_bound
from hypertrees.recognition import classify


class TestFormat:
    def test_parse_path(self):
        assert parse_khg("3 5\n0 1 2\n1 2 3\n2 3 4\n") == tight_path(5, 3)

    def test_comments_and_missing_newline(self):
        assert parse_khg("# a path\n3 5\n\n0 1 2\n# mid\n1 2 3\n2 3 4") == tight_path(5, 3)

    def test_duplicate(self):
        with pytest.raises(DuplicateEdgeError):
            parse_khg("3 4\n0 1 2\n0 2 1\n")

    def test_short_line(self):
        with pytest.raises(ParseError) as info:
            parse_khg("3 5\n0 1\n")
        assert info.value.line == 2

    @pytest.mark.parametrize("text", ["", "# only\n", "3\n", "3 5\n0 1 x\n"])
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse_khg(text)

    @settings(max_examples=100, deadline=None)
    @given(st.integers(3, 8).flatmap(lambda n: st.tuples(
        st.just(n), st.sets(st.frozensets(st.integers(0, n - 1), min_size=3, max_size=3), max_size=15))))
    def test_round_trip(self, data):
        n, edges = data
        H = new_hypergraph(3, n, [sorted(e, reverse=True) for e in edges])
        text = serialize_khg(H)
        assert parse_khg(text) == H
        assert serialize_khg(parse_khg(text)) == text


class TestReports:
    def test_classification_json(self):
        data = json.loads(emit_report(classify(five_vertex_hypertree())))
        assert data["hypertree"] is True and data["line_graph_components"] == 2
        for key in ("n", "k", "m", "chain_connected", "semicycle_free", "edge_minimal",
                    "edge_maximal", "max_chain_length", "focus_vertices", "bounds"):
            assert key in data

    def test_bound_json(self):
        data = json.loads(emit_report(check_lower_bound(small_counterexample(6))))
        assert (data["bound_name"], data["holds"], data["applicable"]) == ("lower", False, False)

    def test_empty_stats(self):
        data = json.loads(emit_report(EnumerationStats(3, 3, 1)))
        assert data["total_edge_sets"] == 0 and data["counts"]["hypertree"] == 0

    def test_dot(self):
        dot = export_dot(tight_line_graph(five_vertex_hypertree()))
        assert dot.count(" -- ") == 3 and all(f"e{i};" in dot for i in range(1, 5))
        dot = export_dot(tight_line_graph(new_hypergraph(3, 6, [[0, 1, 2], [3, 4, 5]])))
        assert dot.count(" -- ") == 0 and dot.count(";") == 2
        assert export_dot(tight_line_graph(tight_star(7, 3))).count(" -- ") == 10


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


class TestCommands:
    def test_gen_and_check(self, tmp_path, capsys):
        f = tmp_path / "star.khg"
        assert run(capsys, "gen", "star", "--n", "7", "--k", "3", "-o", str(f))[0] == 0
        assert parse_khg(f.read_text()) == tight_star(7, 3)
        code, out = run(capsys, "check", str(f), "--expect", "edge-minimal", "--report", "json")
        assert code == 0 and json.loads(out.out)["edge_minimal"] is True

    def test_expect_failure(self, tmp_path, capsys):
        f = tmp_path / "k4.khg"
        run(capsys, "gen", "complete", "--n", "4", "--k", "3", "-o", str(f))
        assert run(capsys, "check", str(f), "--expect", "hypertree")[0] == 1

    def test_input_error(self, tmp_path, capsys):
        f = tmp_path / "bad.khg"
        f.write_text("3 5\n0 1\n")
        code, out = run(capsys, "check", str(f))
        assert code == 2 and "line 2" in out.err
        assert run(capsys, "check", str(tmp_path / "missing.khg"))[0] == 2

    def test_guards(self, tmp_path, capsys):
        base = tmp_path / "e.khg"
        base.write_text("3 3\n0 1 2\n")
        big = tmp_path / "b.khg"
        assert run(capsys, "gen", "b-construction", "--base", str(base), "-o", str(big))[0] == 0
        assert run(capsys, "check", str(big), "--budget", "10")[0] == 3
        assert run(capsys, "enumerate", "--n", "7", "--k", "3")[0] == 3

    def test_bounds(self, tmp_path, capsys):
        f = tmp_path / "s.khg"
        run(capsys, "gen", "small-counterexample", "--k", "6", "-o", str(f))
        code, out = run(capsys, "bounds", str(f), "--lower")
        assert code == 1 and json.loads(out.out)["label"] == "counterexample"
        g = tmp_path / "star.khg"
        run(capsys, "gen", "star", "--n", "8", "--k", "4", "-o", str(g))
        code, out = run(capsys, "bounds", str(g), "--l-hypertree", "2")
        assert code == 0 and len(json.loads(out.out)["witness"]["maps"]) == 3
        code, out = run(capsys, "bounds", str(g))
        assert code == 0 and len(json.loads(out.out)) == 2

    def test_enumerate_and_probe(self, tmp_path, capsys):
        code, out = run(capsys, "enumerate", "--n", "5", "--k", "3", "--checkpoint", str(tmp_path / "ck"))
        assert code == 0 and json.loads(out.out)["counts"]["hypertree"] > 0
        code, out = run(capsys, "probe-conjectures", "--n", "5", "--k", "3")
        assert code == 0 and "max_edge_minimal_m" in json.loads(out.out)

    def test_dot_and_berge(self, tmp_path, capsys):
        f = tmp_path / "h5.khg"
        run(capsys, "gen", "five-vertex", "-o", str(f))
        code, out = run(capsys, "export-dot", str(f))
        assert code == 0 and out.out.startswith("graph")
        code, out = run(capsys, "berge", str(f), "--identity")
        assert code == 0 and json.loads(out.out)["identity"]["consistent"] is True
        code, out = run(capsys, "berge", str(f), "--lovasz")
        assert code == 0 and "lovasz" in json.loads(out.out)

    def test_random_sampler_seeded(self, tmp_path, capsys):
        a, b = tmp_path / "a.khg", tmp_path / "b.khg"
        for f in (a, b):
            run(capsys, "gen", "random-semicycle-free", "--n", "7", "--k", "3", "--seed", "5", "-o", str(f))
        assert a.read_text() == b.read_text()
