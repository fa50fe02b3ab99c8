"""Shared fixtures: the exhaustive small-permutation sweep and random
generators used across the suite, plus a terminal summary that prints one
pass/fail line per acceptance criterion."""

import random
import re
import string
import time
from dataclasses import dataclass

import pytest

from revdcj.dcj import AdjacencySet, Extremity, HEAD, TAIL, genome_from_adjacency_set
from revdcj.graphs import LoopedGraph, adjacency_matrix
from revdcj.localcomp import has_full_lc_sequence
from revdcj.oracle import enumerate_signed_permutations, reversal_distance_table
from revdcj.perm import Genome, SignedPermutation
from revdcj.sorter import circuit_count, permutation_circle_graph, sort_by_reversals

SWEEP_MAX_N = 5


@dataclass(frozen=True)
class SweepRow:
    perm: SignedPermutation
    c: int
    rank: int
    sortable: bool
    script_length: int | None
    oracle_distance: int


@dataclass(frozen=True)
class SweepData:
    rows: dict[int, list[SweepRow]]
    build_seconds: float


@pytest.fixture(scope="session")
def small_sweep() -> SweepData:
    """Every signed permutation with n <= 5, annotated with circuit count,
    matrix rank, the sortability criterion, the greedy script length (the
    sorter itself asserts the step law at every step), and the exact BFS
    distance."""
    started = time.monotonic()
    rows: dict[int, list[SweepRow]] = {}
    for n in range(SWEEP_MAX_N + 1):
        table = reversal_distance_table(n)
        out = []
        for p in enumerate_signed_permutations(n):
            h = permutation_circle_graph(p)
            rank = adjacency_matrix(h).rank()
            c = circuit_count(p)
            sortable = has_full_lc_sequence(h)
            script = sort_by_reversals(p) if sortable else None
            out.append(
                SweepRow(
                    perm=p,
                    c=c,
                    rank=rank,
                    sortable=sortable,
                    script_length=None if script is None else script.claimed_distance,
                    oracle_distance=table[p.values],
                )
            )
        rows[n] = out
    return SweepData(rows, time.monotonic() - started)


def random_looped_graph(n: int, seed: int, edge_p: float = 0.4, loop_p: float = 0.5):
    rng = random.Random(seed)
    edges = set()
    for a in range(n):
        if rng.random() < loop_p:
            edges.add(frozenset({a}))
        for b in range(a + 1, n):
            if rng.random() < edge_p:
                edges.add(frozenset({a, b}))
    return LoopedGraph(tuple(range(n)), frozenset(edges))


def random_genome(names, rng) -> Genome:
    """Uniformly scrambled pairing of all marker extremities."""
    exts = [Extremity(m, s) for m in names for s in (HEAD, TAIL)]
    rng.shuffle(exts)
    adjacencies, telomeres = set(), set()
    while exts:
        e = exts.pop()
        if exts and rng.random() < 0.75:
            adjacencies.add(frozenset({e, exts.pop()}))
        else:
            telomeres.add(e)
    return genome_from_adjacency_set(
        AdjacencySet(frozenset(adjacencies), frozenset(telomeres))
    )


def marker_names(n: int) -> list[str]:
    return list(string.ascii_lowercase[:n])


# ---------------------------------------------------------------------------
# acceptance summary

_ACCEPTANCE: dict[int, tuple[str, str]] = {}
_CRITERION = re.compile(r"test_criterion_(\d+)")


@pytest.fixture
def criterion_note(request):
    """Lets an acceptance test attach a short result note to its line."""

    def set_note(text: str):
        request.node._criterion_note = text

    return set_note


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call":
        return
    match = _CRITERION.search(item.name)
    if match and "test_acceptance" in item.nodeid:
        _ACCEPTANCE[int(match.group(1))] = (
            report.outcome,
            getattr(item, "_criterion_note", ""),
        )


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_ACCEPTANCE):
        outcome, note = _ACCEPTANCE[num]
        word = "PASS" if outcome == "passed" else "FAIL"
        line = "criterion %d: %s" % (num, word)
        if note:
            line += " -- %s" % note
        terminalreporter.write_line(line)
