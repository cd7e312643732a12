import pytest

from wedge import graph as gr
from wedge import structures as st
from wedge import verify as vf
from wedge.corpus import (
    CorpusSpec,
    biconnected_outerplanar_graphs,
    corpus_for,
    count_by,
    enumerate_graphs,
)


def count(n, *filters):
    return sum(1 for _ in enumerate_graphs(CorpusSpec(n, filters=set(filters))))


class TestNative:
    @pytest.mark.parametrize("n, want", [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112), (7, 853)])
    def test_connected_counts(self, n, want):
        assert count(n, "connected") == want

    @pytest.mark.parametrize("n, want", [(3, 4), (4, 11), (5, 34), (6, 156)])
    def test_all_graph_counts(self, n, want):
        assert count(n) == want

    @pytest.mark.slow
    def test_connected_n8(self):
        assert count(8, "connected") == 11117

    def test_one_triangle_contains_house(self):
        house = gr.canonical_form(st.house())
        forms = {gr.canonical_form(g) for g in enumerate_graphs(CorpusSpec(5, filters={"connected", "exactly-one-triangle"}))}
        assert house in forms
        assert len(forms) == 4

    def test_filters_hold(self):
        for g in enumerate_graphs(CorpusSpec(7, filters={"connected", "girth>=5"})):
            assert gr.is_connected(g) and gr.girth(g) >= 5

    def test_no_duplicates(self):
        graphs = list(enumerate_graphs(CorpusSpec(6)))
        assert len({gr.canonical_form(g) for g in graphs}) == len(graphs)

    def test_limits(self):
        with pytest.raises(gr.SizeLimitError):
            CorpusSpec(9, filters={"connected"})
        with pytest.raises(gr.GraphError):
            CorpusSpec(5, filters={"planar"})
        with pytest.raises(gr.GraphError):
            CorpusSpec(5, source="graph6-file")
        CorpusSpec(10, filters={"outerplanar"})

    def test_count_by(self):
        by = count_by(enumerate_graphs(CorpusSpec(4, filters={"connected"})), lambda g: g.m)
        assert by == {3: 2, 4: 2, 5: 1, 6: 1}


class TestDissections:
    @pytest.mark.parametrize("n, want", [(3, 1), (4, 2), (5, 3), (6, 9), (7, 20), (8, 75)])
    def test_counts(self, n, want):
        assert len(biconnected_outerplanar_graphs(n)) == want

    @pytest.mark.parametrize("n", range(3, 9))
    def test_matches_native(self, n):
        native = {gr.serialize_graph6(g) for g in enumerate_graphs(CorpusSpec(n, filters={"biconnected", "outerplanar"}))}
        diss = {gr.serialize_graph6(g) for g in biconnected_outerplanar_graphs(n)}
        assert native == diss

    def test_all_outerplanar_and_biconnected(self):
        for g in biconnected_outerplanar_graphs(9):
            assert gr.is_outerplanar(g) and gr.is_biconnected(g)


class TestFileSource:
    def test_dedup_and_filter(self, tmp_path):
        c4 = st.cycle(4)
        lines = [
            gr.to_graph6(c4),
            gr.to_graph6(gr.relabel(c4, [1, 2, 3, 0])),
            gr.to_graph6(st.path(4)),
            gr.to_graph6(st.k3()),
            "",
        ]
        path = tmp_path / "c.g6"
        path.write_text(">>graph6<<" + "\n".join(lines))
        got = list(enumerate_graphs(CorpusSpec(4, "graph6-file", {"connected"}, str(path))))
        assert len(got) == 2
        got = list(enumerate_graphs(CorpusSpec(4, "graph6-file", {"biconnected"}, str(path))))
        assert [gr.is_isomorphic(g, c4) for g in got] == [True]

    def test_bad_line(self, tmp_path):
        path = tmp_path / "bad.g6"
        path.write_text("C~\nnot graph6!\n")
        with pytest.raises(gr.GraphFormatError):
            list(enumerate_graphs(CorpusSpec(4, "graph6-file", path=str(path))))

    def test_corpus_for_needs_file(self):
        with pytest.raises(gr.SizeLimitError):
            corpus_for([9], {"connected"})


class TestReports:
    def test_one_triangle_report_deterministic(self):
        a = vf.verify_theorem1(6)
        b = vf.verify_theorem1(6, jobs=2)
        assert a.passed and a.body() == b.body()
        assert "elapsed_seconds" in a.render() and "elapsed" not in a.body()

    def test_outerplanar_small(self):
        rep = vf.verify_outerplanar(5)
        assert rep.passed
        assert rep.summary["wed_named"] == "C3 C4 C5 H F5"
        rep = vf.verify_outerplanar(6, n_min=6)
        assert rep.passed and rep.summary["wed"] == 0 and rep.summary["equimatchable"] == 0

    def test_connected_reading_reports_only(self):
        rep = vf.verify_outerplanar(3, "connected")
        assert rep.passed
        # P3 is outside the named list
        assert rep.summary["discrepancies"] == 1
        assert any(gr.to_graph6(gr.canonical_graph(st.path(3))) in n for n in rep.notes)

    def test_counterexamples_reparse(self):
        rep = vf.verify_lemma_suite(5, weaken=["theorem2-support"])
        assert not rep.passed
        for g6, _ in rep.counterexamples:
            g = gr.parse_graph6(g6)
            assert gr.is_connected(g)

    def test_unknown_weakening(self):
        with pytest.raises(gr.GraphError):
            vf.verify_lemma_suite(4, weaken=["nothing"])

    def test_no_equimatchable_orders(self):
        with pytest.raises(gr.GraphError):
            vf.verify_theorem8([7])
        assert vf.verify_theorem8([6]).passed
