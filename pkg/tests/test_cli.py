"""Instance files, traces, and the command-line front end."""

from __future__ import annotations

import random

import pytest
from conftest import random_multigraph

from pitvd.cli import (ParseError, load_trace, main, parse, serialize,
                       trace_lines)
from pitvd.driver import kernelize, replay
from pitvd.exact import decide
from pitvd.multigraph import MultiGraph
from pitvd.mutation import killer_instances
from pitvd.rules import RULES


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

def test_parse_triangle():
    g, k = parse("p pitvd 3 3 1\ne 1 2 1\ne 2 3 1\ne 1 3 1\n")
    assert k == 1
    assert g.vertices == [1, 2, 3]
    assert sorted(g.edges()) == [(1, 2, 1), (1, 3, 1), (2, 3, 1)]


def test_parse_self_loop_rejected():
    with pytest.raises(ParseError):
        parse("p pitvd 2 1 0\ne 1 1 1\n")


def test_parse_duplicate_records_sum():
    g, _ = parse("p pitvd 2 2 0\ne 1 2 1\ne 1 2 1\n")
    assert g.multiplicity(1, 2) == 2


def test_parse_label_out_of_range():
    with pytest.raises(ParseError):
        parse("p pitvd 3 1 0\ne 1 4 1\n")


def test_parse_isolated_vertices_from_header():
    g, k = parse("p pitvd 5 1 2\ne 2 4 1\n")
    assert g.n == 5
    assert g.degree(1) == 0


def test_parse_comments_and_blanks_ignored():
    g, k = parse("c hello\n\np pitvd 2 1 0\nc mid\ne 1 2 3\n\n")
    assert g.multiplicity(1, 2) == 3


@pytest.mark.parametrize("text", [
    "e 1 2 1\n",                          # edge before header
    "p pitvd 2 2 0\ne 1 2 1\n",           # record count mismatch
    "p pitvd 2 1 0\np pitvd 2 1 0\ne 1 2 1\n",
    "p pitvd 2 1 -1\ne 1 2 1\n",
    "p pitvd 2 1 0\ne 1 2 0\n",           # zero multiplicity
    "p pitvd 2 1 0\nq 1 2 1\n",
    "p pitvd two 1 0\ne 1 2 1\n",
])
def test_parse_rejects_malformed(text):
    with pytest.raises(ParseError):
        parse(text)


def test_serialize_relabels_to_dense_range():
    g = MultiGraph()
    for v in (5, 9, 12):
        g.ensure_vertex(v)
    g.add_edge(5, 12, 2)
    text = serialize(g, 3)
    assert text == "p pitvd 3 1 3\ne 1 3 2\n"


def test_round_trip_random_instances():
    rng = random.Random(404)
    for _ in range(25):
        g = random_multigraph(rng, rng.randint(1, 10), 0.4, 0.2)
        k = rng.randint(0, 4)
        text = serialize(g, k)
        g2, k2 = parse(text)
        assert k2 == k
        assert serialize(g2, k2) == text


# ---------------------------------------------------------------------------
# traces
# ---------------------------------------------------------------------------

def test_trace_text_round_trips_and_replays():
    rng = random.Random(77)
    for _ in range(10):
        g = random_multigraph(rng, rng.randint(4, 9), 0.4, 0.2)
        res = kernelize(g, 2)
        loaded = load_trace(trace_lines(res.trace))
        assert loaded == res.trace
        h, k2 = replay(g, 2, loaded)
        assert k2 == res.k
        assert serialize(h, k2) == serialize(res.graph, res.k)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def test_generate_is_deterministic(tmp_path):
    a = tmp_path / "a.txt"
    b = tmp_path / "b.txt"
    for out in (a, b):
        assert main(["generate", "--n", "9", "--density", "0.4",
                     "--seed", "123", "-o", str(out)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_generate_density_zero_is_edgeless(tmp_path):
    out = tmp_path / "e.txt"
    main(["generate", "--n", "6", "--density", "0", "--seed", "1",
          "-o", str(out)])
    g, _ = parse(out.read_text())
    assert g.n == 6 and g.edge_count == 0


def test_generate_rate_one_doubles_everything(tmp_path):
    out = tmp_path / "d.txt"
    main(["generate", "--n", "8", "--density", "0.5", "--double-rate", "1",
          "--seed", "2", "-o", str(out)])
    g, _ = parse(out.read_text())
    assert g.edge_count > 0
    assert all(m == 2 for _, _, m in g.edges())


def test_kernelize_clean_instance_empties(tmp_path):
    text = "p pitvd 4 3 0\ne 1 2 1\ne 2 3 1\ne 3 4 1\n"
    out = tmp_path / "k.txt"
    code = main(["kernelize", write(tmp_path, "in.txt", text),
                 "-o", str(out)])
    assert code == 0
    assert out.read_text() == "p pitvd 0 0 0\n"


def test_kernelize_two_holes_one_budget_says_no(tmp_path):
    g = MultiGraph()
    for v in range(14):
        g.ensure_vertex(v)
    for c in (range(7), range(7, 14)):
        c = list(c)
        for i, u in enumerate(c):
            g.add_edge(u, c[(i + 1) % 7], 1)
    path = write(tmp_path, "no.txt", serialize(g, 1))
    assert main(["kernelize", path]) == 20


def test_kernelize_rejects_malformed_file(tmp_path):
    assert main(["kernelize", write(tmp_path, "bad.txt",
                                    "p pitvd 2 1 0\ne 1 1 1\n")]) == 2


def test_kernelize_rejects_missing_file(tmp_path):
    assert main(["kernelize", str(tmp_path / "nope.txt")]) == 2


def test_kernelize_trace_replays_to_identical_kernel(tmp_path):
    src = tmp_path / "in.txt"
    out = tmp_path / "out.txt"
    tr = tmp_path / "trace.jsonl"
    main(["generate", "--n", "11", "--density", "0.3", "--seed", "2",
          "--k", "3", "-o", str(src)])
    assert main(["kernelize", str(src), "-o", str(out),
                 "--trace", str(tr)]) == 0
    g, k = parse(src.read_text())
    h, k2 = replay(g, k, load_trace(tr.read_text()))
    assert serialize(h, k2) == out.read_text()


def test_verify_small_run_passes(capsys):
    assert main(["verify", "--count", "6", "--seed", "9"]) == 0
    out = capsys.readouterr().out
    assert "passed 6/6" in out


def test_verify_count_zero_is_empty(capsys):
    assert main(["verify", "--count", "0", "--seed", "9"]) == 0
    assert "passed 0/0" in capsys.readouterr().out


def test_verify_reports_are_seed_deterministic(capsys):
    main(["verify", "--count", "5", "--seed", "42"])
    first = capsys.readouterr().out
    main(["verify", "--count", "5", "--seed", "42"])
    assert capsys.readouterr().out == first


def test_verify_unknown_mutant_rejected(capsys):
    assert main(["verify", "--count", "1", "--mutation-test", "99"]) == 2


def test_verify_detects_a_broken_rule(capsys):
    assert main(["verify", "--count", "0", "--seed", "3",
                 "--mutation-test", "5"]) == 0
    assert "detected" in capsys.readouterr().out


# ---------------------------------------------------------------------------
# the structured sensitivity instances
# ---------------------------------------------------------------------------

def test_killer_instances_are_honest():
    """The real battery must handle every sensitivity instance cleanly,
    otherwise mutant detections on them would be meaningless."""
    seen = set()
    for name, g, k in killer_instances():
        assert name not in seen
        seen.add(name)
        truth = decide(g.copy(), k) is not None
        res = kernelize(g.copy(), k, rules=RULES)
        assert (not res.decided_no) == truth, name
    assert len(seen) == 14
