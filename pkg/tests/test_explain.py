import math

import pytest

from mdmlink.explain import (
    build_text_index,
    compare_nodes,
    enumerate_paths,
    explain_link,
    rank_paths,
    retrieve_verification,
)
from mdmlink.graph import Edge, Node, build_graph


def make_graph(n, triples, attrs=None):
    nodes = [Node(i, "person", (attrs or {}).get(i, {})) for i in range(n)]
    edges = [Edge(a, b, rel) for a, b, rel in triples]
    return build_graph(nodes, edges)


class TestEnumeratePaths:
    def test_direct_edge_included(self):
        g = make_graph(3, [(0, 1, "knows"), (1, 2, "knows")])
        paths = enumerate_paths(g, 0, 1)
        assert [0, 1] in paths

    def test_disconnected_empty(self):
        g = make_graph(4, [(0, 1, "knows"), (2, 3, "knows")])
        assert enumerate_paths(g, 0, 3) == []

    def test_four_cycle_two_paths(self):
        g = make_graph(4, [(0, 1, "knows"), (1, 2, "knows"),
                           (2, 3, "knows"), (3, 0, "knows")])
        paths = enumerate_paths(g, 0, 2, max_len=2)
        assert sorted(paths) == [[0, 1, 2], [0, 3, 2]]

    def test_max_len_respected(self):
        g = make_graph(6, [(i, i + 1, "knows") for i in range(5)])
        assert enumerate_paths(g, 0, 5, max_len=4) == []
        assert enumerate_paths(g, 0, 5, max_len=5) == [[0, 1, 2, 3, 4, 5]]

    def test_max_paths_truncates(self):
        triples = []
        for mid in range(1, 9):
            triples.append((0, mid, "knows"))
            triples.append((mid, 9, "knows"))
        g = make_graph(10, triples)
        assert len(enumerate_paths(g, 0, 9, max_paths=5)) == 5

    def test_simple_paths_only(self):
        g = make_graph(3, [(0, 1, "knows"), (1, 2, "knows"), (0, 2, "knows")])
        for path in enumerate_paths(g, 0, 2, max_len=4):
            assert len(set(path)) == len(path)

    def test_same_endpoints_rejected(self):
        g = make_graph(2, [(0, 1, "knows")])
        with pytest.raises(ValueError):
            enumerate_paths(g, 1, 1)


class TestRankPaths:
    def graph(self):
        # 'spouse' appears once (rare), 'knows' nine times (common)
        triples = [(0, 1, "spouse"), (0, 2, "knows"), (2, 1, "knows")]
        triples += [(3 + i, 4 + i, "knows") for i in range(7)]
        return make_graph(11, triples)

    def test_rare_relation_outranks_common(self):
        g = self.graph()
        triples_graph = make_graph(4, [(0, 1, "spouse"), (1, 2, "knows"),
                                       (0, 3, "knows"), (3, 2, "knows")]
                                   + [(1, 3, "knows")])
        paths = [[0, 1, 2], [0, 3, 2]]
        ranked = rank_paths(triples_graph, paths)
        assert ranked.paths[0].nodes == [0, 1, 2]  # via the rare spouse edge

    def test_direct_edge_beats_longer_path(self):
        g = self.graph()
        ranked = rank_paths(g, [[0, 1], [0, 2, 1]])
        assert ranked.paths[0].nodes == [0, 1]

    def test_score_closed_form(self):
        g = self.graph()
        ranked = rank_paths(g, [[0, 1]])
        expected = math.log(10 / 1) / 1  # spouse freq 1/10, length 1
        assert ranked.paths[0].score == pytest.approx(expected)

    def test_breakdown_per_edge(self):
        g = self.graph()
        ranked = rank_paths(g, [[0, 2, 1]])
        path = ranked.paths[0]
        assert len(path.breakdown) == 2
        expected = sum(b["rarity"] for b in path.breakdown) / 4
        assert path.score == pytest.approx(expected)

    def test_top_k_and_tie_break(self):
        g = make_graph(5, [(0, 1, "knows"), (1, 4, "knows"),
                           (0, 2, "knows"), (2, 4, "knows"),
                           (0, 3, "knows"), (3, 4, "knows")])
        ranked = rank_paths(g, enumerate_paths(g, 0, 4), top_k=2)
        assert len(ranked.paths) == 2
        assert ranked.paths[0].nodes == [0, 1, 4]  # lexicographic tie break
        assert ranked.paths[1].nodes == [0, 2, 4]


class TestTextIndex:
    def test_empty_corpus(self):
        index = build_text_index({})
        assert index.postings == {}

    def test_postings(self):
        index = build_text_index({"d1": "ANNA works at ACME"})
        assert [d for d, _ in index.postings["anna"]] == ["d1"]
        assert "acme" in index.postings
        assert "works" in index.postings

    def test_round_trip_lookup(self):
        docs = {"d1": "MARY SMITH lives in BOSTON",
                "d2": "JOHN DOE works at GLOBEX"}
        index = build_text_index(docs)
        for doc_id, text in docs.items():
            for token in text.lower().split():
                assert doc_id in {d for d, _ in index.postings[token]}


class TestRetrieveVerification:
    def corpus(self):
        return build_text_index({
            "d1": "ANNA SMITH met BORIS KARLOV at the office",
            "d2": "ANNA SMITH lives in BOSTON",
            "d3": "nothing relevant here",
        })

    def test_both_endpoints_ranked_first(self):
        ev = retrieve_verification(
            self.corpus(),
            {"given_name": "ANNA", "last_name": "SMITH"},
            {"given_name": "BORIS", "last_name": "KARLOV"},
        )
        assert ev.snippets[0].source_record_id == "d1"
        assert ev.snippets[0].both_endpoints

    def test_single_endpoint_flagged(self):
        ev = retrieve_verification(
            self.corpus(),
            {"given_name": "ANNA", "last_name": "SMITH"},
            {"given_name": "BORIS", "last_name": "KARLOV"},
        )
        single = [s for s in ev.snippets if s.source_record_id == "d2"]
        assert single and not single[0].both_endpoints

    def test_no_overlap_empty(self):
        ev = retrieve_verification(
            self.corpus(),
            {"given_name": "XAVIER"},
            {"given_name": "YOLANDA"},
        )
        assert ev.snippets == []

    def test_snippet_is_substring_of_tokens(self):
        index = self.corpus()
        ev = retrieve_verification(
            index,
            {"given_name": "ANNA"},
            {"given_name": "BORIS"},
        )
        for s in ev.snippets:
            doc_tokens = " ".join(index.tokens[s.source_record_id])
            assert s.snippet in doc_tokens


class TestCompareNodes:
    def test_identical_attributes(self):
        attrs = {0: {"last_name": "SMITH", "city": "BOSTON"},
                 1: {"last_name": "SMITH", "city": "BOSTON"}}
        g = make_graph(3, [(0, 2, "knows"), (1, 2, "knows")], attrs)
        cmp = compare_nodes(g, 0, 1)
        assert all(a["similarity"] == 1.0 for a in cmp.attributes.values())

    def test_edit_similarity(self):
        attrs = {0: {"last_name": "SMITH"}, 1: {"last_name": "SMYTH"}}
        g = make_graph(2, [(0, 1, "knows")], attrs)
        cmp = compare_nodes(g, 0, 1)
        assert cmp.attributes["last_name"]["similarity"] == pytest.approx(0.8)

    def test_jaccard(self):
        g = make_graph(5, [(0, 2, "knows"), (0, 3, "knows"),
                           (1, 3, "knows"), (1, 4, "knows")])
        cmp = compare_nodes(g, 0, 1)
        assert cmp.neighbor_jaccard == pytest.approx(1 / 3)

    def test_disjoint_neighborhoods_zero(self):
        g = make_graph(4, [(0, 2, "knows"), (1, 3, "knows")])
        assert compare_nodes(g, 0, 1).neighbor_jaccard == 0.0

    def test_symmetric(self):
        attrs = {0: {"last_name": "SMITH"}, 1: {"last_name": "SCHMIDT"}}
        g = make_graph(3, [(0, 2, "knows"), (1, 2, "knows")], attrs)
        a = compare_nodes(g, 0, 1)
        b = compare_nodes(g, 1, 0)
        assert a.neighbor_jaccard == b.neighbor_jaccard
        assert (a.attributes["last_name"]["similarity"]
                == b.attributes["last_name"]["similarity"])


class TestExplainLink:
    def test_bundle_fields_always_present(self):
        g = make_graph(4, [(0, 1, "knows"), (2, 3, "knows")])
        bundle = explain_link(g, None, 0, 3, score=0.42)
        d = bundle.to_dict()
        assert set(d) == {"source", "target", "score", "paths",
                          "evidence", "comparison"}
        assert d["paths"]["paths"] == []
        assert d["evidence"]["snippets"] == []

    def test_composition_matches_parts(self):
        attrs = {0: {"given_name": "ANNA"}, 2: {"given_name": "MARY"}}
        g = make_graph(3, [(0, 1, "spouse"), (1, 2, "knows")], attrs)
        index = build_text_index({"d1": "ANNA and MARY share a flat"})
        bundle = explain_link(g, index, 0, 2, score=0.9)
        direct = rank_paths(g, enumerate_paths(g, 0, 2))
        assert bundle.paths.to_dict() == direct.to_dict()
        ev = retrieve_verification(index, g.nodes[0].attributes,
                                   g.nodes[2].attributes)
        assert bundle.evidence.to_dict() == ev.to_dict()
        assert bundle.comparison.to_dict() == compare_nodes(g, 0, 2).to_dict()
