"""Command-line interface: dispatch, exit codes, stdin plumbing."""

import io
import re

import pytest

from hamcert.cli import CommandOutcome, main, run
from hamcert.graph6 import parse_graph6, to_graph6
from hamcert.graphs import complete_graph
from hamcert.theorem import (
    build_extremal,
    parse_certificate,
    validate_certificate,
)


def test_extremal_emits_graph6():
    out = run(["extremal", "--k", "2", "--n", "5"])
    assert out.exit_code == 0
    g = parse_graph6(out.payload)
    assert g.n == 5
    assert g.edge_count() == 7


def test_extremal_rejects_bad_parameters():
    assert run(["extremal", "--k", "1", "--n", "5"]).exit_code == 2
    assert run(["extremal", "--k", "2", "--n", "4"]).exit_code == 2


def test_invariants_on_complete_four():
    out = run(["invariants", "C~"])
    assert out.exit_code == 0
    assert out.payload == (
        "C~ n=4 kappa=3 chi=4 alpha=1 omega=4 mindeg=3 hamiltonian=yes"
    )


def test_invariants_on_path():
    out = run(["invariants", "Ch"])
    assert out.exit_code == 0
    assert "kappa=1" in out.payload
    assert "hamiltonian=no" in out.payload


def test_invariants_reads_stdin(monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("C~\nCh\n"))
    out = run(["invariants"])
    assert out.exit_code == 0
    lines = out.payload.splitlines()
    assert len(lines) == 2
    assert lines[0].startswith("C~ ")
    assert lines[1].startswith("Ch ")


def test_bad_graph6_is_input_error(monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("C~\n\x01bogus\n"))
    out = run(["invariants"])
    assert out.exit_code == 2
    # the good line is still processed
    assert out.payload.splitlines()[0].startswith("C~ ")
    assert "error" in out.payload


def test_empty_stdin_is_input_error(monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(""))
    assert run(["invariants"]).exit_code == 2


class TestCertify:
    def test_round_trip_re_validates(self):
        g = build_extremal(2, 5)
        out = run(["certify", to_graph6(g), "--k", "2"])
        assert out.exit_code == 0
        parsed_graph, cert = parse_certificate(out.payload)
        assert parsed_graph.adj == g.adj
        assert cert.kind == "extremal"
        assert validate_certificate(parsed_graph, cert) == []

    def test_hamiltonian_certificate(self):
        out = run(["certify", "Dhc", "--k", "2"])
        assert out.exit_code == 0
        assert out.payload.splitlines()[0] == "kind hamiltonian"

    def test_hypothesis_violation_names_the_flag(self):
        out = run(["certify", "Ch", "--k", "2"])
        assert out.exit_code == 2
        assert "k_connected_ok" in out.payload

    def test_requires_k(self):
        assert run(["certify", "Dhc"]).exit_code == 2


class TestTrace:
    def test_line_format_is_stable(self):
        out = run(["trace", to_graph6(build_extremal(2, 5)), "--k", "2"])
        assert out.exit_code == 0
        lines = out.payload.splitlines()
        step_re = re.compile(r"^step \d+ [a-z0-9-]+ (PASS|FAIL) ")
        for line in lines[:-1]:
            assert step_re.match(line), line
        assert lines[-1].startswith("conclusion ")
        assert "extremal" in lines[-1]

    def test_hamiltonian_trace_is_single_step(self):
        out = run(["trace", "Dhc", "--k", "2"])
        assert out.exit_code == 0
        lines = out.payload.splitlines()
        assert len(lines) == 2
        assert lines[0].startswith("step 1 hamiltonian PASS")
        assert lines[1] == "conclusion hamiltonian"

    def test_hypothesis_violation(self):
        out = run(["trace", "Ch", "--k", "2"])
        assert out.exit_code == 2
        assert "k_connected_ok" in out.payload

    def test_oversize_refusal_is_input_error(self):
        g6 = to_graph6(build_extremal(2, 17))
        out = run(["trace", g6, "--k", "2"])
        assert out.exit_code == 2
        assert "refused" in out.payload


class TestVerify:
    def test_internal_sweep_clean(self):
        out = run(["verify", "--n", "5"])
        assert out.exit_code == 0
        assert "graphs 1024" in out.payload
        assert "counterexamples 0" in out.payload
        assert "lemma1 violations 0" in out.payload

    def test_k_window(self):
        out = run(["verify", "--n", "5", "--k-min", "3", "--k-max", "3"])
        assert out.exit_code == 0
        assert "k=3:26" in out.payload

    def test_stream_file(self, tmp_path):
        path = tmp_path / "pop.g6"
        path.write_text("Dhc\nD}o\nnot-a-graph\x01\n")
        out = run(["verify", "--n", "5", "--stream", str(path)])
        assert out.exit_code == 0
        assert "graphs 2" in out.payload
        assert "input errors 1" in out.payload

    def test_stream_stdin(self, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("Dhc\n"))
        out = run(["verify", "--n", "5", "--stream", "-"])
        assert out.exit_code == 0
        assert "hamiltonian 1" in out.payload

    def test_missing_stream_file(self):
        out = run(["verify", "--n", "5", "--stream", "/no/such/file.g6"])
        assert out.exit_code == 2

    def test_internal_order_cap(self):
        out = run(["verify", "--n", "8"])
        assert out.exit_code == 2
        assert "1..7" in out.payload


class TestGraph6Utility:
    def test_decode(self):
        out = run(["g6", "decode", "C~"])
        assert out.exit_code == 0
        assert out.payload == "4 0-1 0-2 0-3 1-2 1-3 2-3"

    def test_decode_no_edges(self):
        assert run(["g6", "decode", "?"]).payload == "0"

    def test_encode(self):
        out = run(["g6", "encode", "4 0-1 0-2 0-3 1-2 1-3 2-3"])
        assert out.payload == "C~"

    def test_encode_decode_round_trip(self, monkeypatch):
        g6 = to_graph6(complete_graph(5))
        decoded = run(["g6", "decode", g6]).payload
        assert run(["g6", "encode", decoded]).payload == g6

    def test_garbage_input(self):
        assert run(["g6", "encode", "four 0-1"]).exit_code == 2


def test_unknown_subcommand_is_usage_error():
    assert run(["nonsense"]).exit_code == 2


def test_help_exits_zero():
    assert run(["--help"]).exit_code == 0


def test_main_prints_payload_and_returns_code(capsys):
    code = main(["extremal", "--k", "2", "--n", "5"])
    assert code == 0
    assert capsys.readouterr().out.strip() == "D}o"


def test_outcome_is_frozen():
    outcome = CommandOutcome(0, "x")
    with pytest.raises(AttributeError):
        outcome.exit_code = 1
