"""Verification harness: population tallies, sharding, streamed input."""

import pytest

from hamcert.graph6 import to_graph6
from hamcert.graphs import cycle_graph, enumerate_labeled, from_edge_mask, path_graph
from hamcert.harness import VerificationReport, classify, verify_order
from hamcert.theorem import build_extremal

from tests.oracles import (
    oracle_chromatic,
    oracle_hamiltonian_cycle,
    oracle_vertex_connectivity,
)


def report_fingerprint(rep):
    return (
        rep.total_graphs,
        rep.hypothesis_hits,
        rep.hamiltonian,
        rep.extremal,
        rep.counterexamples,
        rep.lemma1_violations,
    )


class TestInternalSweep:
    def test_order_three_frozen(self):
        rep = verify_order(3, (2, 2))
        assert rep.total_graphs == 8
        assert rep.hypothesis_hits == {2: 1}  # the triangle
        assert rep.hamiltonian == 1
        assert rep.extremal == 0
        assert rep.counterexamples == []
        assert rep.lemma1_violations == 0
        assert rep.consistent()

    def test_order_four_frozen(self):
        rep = verify_order(4)
        assert rep.total_graphs == 64
        assert rep.hypothesis_hits == {2: 10, 3: 1}
        assert rep.hamiltonian == 11
        assert rep.extremal == 0
        assert rep.consistent()

    def test_order_five_frozen(self):
        rep = verify_order(5)
        assert rep.total_graphs == 1024
        assert rep.hypothesis_hits == {2: 228, 3: 26, 4: 1}
        assert rep.hamiltonian == 245
        assert rep.extremal == 10
        assert rep.counterexamples == []
        assert rep.lemma1_violations == 0
        assert rep.consistent()

    def test_order_six_frozen(self):
        rep = verify_order(6)
        assert rep.total_graphs == 32768
        assert rep.hypothesis_hits == {2: 3168, 3: 1758, 4: 76, 5: 1}
        assert rep.hamiltonian == 4913
        assert rep.extremal == 90
        assert rep.counterexamples == []
        assert rep.lemma1_violations == 0
        assert rep.consistent()

    def test_order_four_against_oracles(self):
        # independent recount of every tally the sweep produces
        hits = {2: 0, 3: 0}
        ham = 0
        for em in range(64):
            g = from_edge_mask(4, em)
            chi = oracle_chromatic(g)
            kappa = oracle_vertex_connectivity(g)
            graph_hits = [k for k in hits if kappa >= k and chi >= 4 - k]
            for k in graph_hits:
                hits[k] += 1
            if graph_hits and oracle_hamiltonian_cycle(g) is not None:
                ham += len(graph_hits)
        rep = verify_order(4)
        assert rep.hypothesis_hits == hits
        assert rep.hamiltonian == ham

    def test_trivial_orders(self):
        for n in (1, 2):
            rep = verify_order(n)
            assert rep.total_graphs == 1 << (n * (n - 1) // 2)
            assert rep.hypothesis_hits == {}
            assert rep.consistent()

    def test_k_range_clamped(self):
        rep = verify_order(5, (0, 99))
        assert sorted(rep.hypothesis_hits) == [2, 3, 4]
        narrow = verify_order(5, (4, 4))
        assert narrow.hypothesis_hits == {4: 1}

    def test_rejects_large_internal_order(self):
        with pytest.raises(ValueError, match="1..7"):
            verify_order(8)

    def test_rejects_bad_source(self):
        with pytest.raises(ValueError, match="source"):
            verify_order(4, source="telepathy")

    def test_rejects_bad_shards(self):
        with pytest.raises(ValueError):
            verify_order(4, shards=0)


class TestSharding:
    def test_totals_independent_of_shard_count(self):
        base = report_fingerprint(verify_order(5))
        for shards in (2, 3, 5, 11):
            assert report_fingerprint(verify_order(5, shards=shards)) == base

    def test_merge_is_associative(self):
        a = VerificationReport(
            total_graphs=3, hypothesis_hits={2: 1}, hamiltonian=1,
            counterexamples=[("Dhc", 2)], elapsed=0.5,
        )
        b = VerificationReport(
            total_graphs=4, hypothesis_hits={2: 2, 3: 1}, extremal=1,
            lemma1_violations=1, errors=[(9, "bad")],
        )
        c = VerificationReport(total_graphs=1, hypothesis_hits={3: 4}, hamiltonian=2)
        left = a.merge(b).merge(c)
        right = a.merge(b.merge(c))
        assert report_fingerprint(left) == report_fingerprint(right)
        assert left.errors == right.errors
        assert left.hypothesis_hits == {2: 3, 3: 5}

    def test_merge_keeps_identity(self):
        rep = verify_order(4)
        merged = VerificationReport(hypothesis_hits={2: 0, 3: 0}).merge(rep)
        assert report_fingerprint(merged) == report_fingerprint(rep)


class TestStreamedSource:
    def test_stream_matches_internal_on_order_five(self):
        lines = [to_graph6(g) for g in enumerate_labeled(5)]
        streamed = verify_order(5, source="graph6", stream=iter(lines))
        internal = verify_order(5)
        assert streamed.total_graphs == internal.total_graphs
        assert streamed.hypothesis_hits == internal.hypothesis_hits
        assert streamed.hamiltonian == internal.hamiltonian
        assert streamed.extremal == internal.extremal
        assert streamed.lemma1_violations == internal.lemma1_violations
        assert streamed.counterexamples == internal.counterexamples

    def test_malformed_lines_reported_and_skipped(self):
        lines = ["Dhc", "", "not graph6 \x01", "Dhc", "C~", "Dhc"]
        rep = verify_order(5, source="graph6", stream=iter(lines))
        assert rep.total_graphs == 3
        assert [line_no for line_no, _ in rep.errors] == [3, 5]
        assert "order" in rep.errors[1][1]

    def test_blank_lines_are_not_errors(self):
        rep = verify_order(5, source="graph6", stream=iter(["", "   ", "\n"]))
        assert rep.total_graphs == 0
        assert rep.errors == []

    def test_stream_requires_lines(self):
        with pytest.raises(ValueError, match="stream"):
            verify_order(5, source="graph6")

    def test_stream_counts_extremal(self):
        g6 = to_graph6(build_extremal(2, 5))
        rep = verify_order(5, source="graph6", stream=iter([g6]))
        assert rep.hypothesis_hits == {2: 1, 3: 0, 4: 0}
        assert rep.extremal == 1
        assert rep.hamiltonian == 0


class TestClassify:
    def test_extremal_record(self):
        g = build_extremal(2, 5)
        record = classify(g, 2)
        fields = record.split("\t")
        assert fields[0] == to_graph6(g)
        assert fields[1:6] == ["5", "2", "2", "3", "3"]
        assert fields[6] == "kconn=1,chi=1,kge2=1"
        assert fields[7] == "extremal"
        assert len(fields[8]) == 12

    def test_hamiltonian_record(self):
        fields = classify(cycle_graph(5), 2).split("\t")
        assert fields[7] == "hamiltonian"

    def test_hypothesis_failure_record(self):
        # path: kappa = 1, so no certificate applies at k = 2
        fields = classify(path_graph(4), 2).split("\t")
        assert fields[6] == "kconn=0,chi=1,kge2=1"
        assert fields[7] == "none"
        assert fields[8] == "-"

    def test_record_is_deterministic(self):
        g = build_extremal(3, 7)
        assert classify(g, 3) == classify(g, 3)
