import itertools
from collections import deque

import numpy as np
import pytest
from hypothesis import strategies as st

from c5pair.graphs import OrientedDigraph, Tournament, UndirectedGraph


def tournament_from_bits(n, bits):
    """Tournament whose k-th pair (lexicographic i<j) points forward iff bit k is set."""
    m = np.zeros((n, n), dtype=bool)
    for k, (i, j) in enumerate(itertools.combinations(range(n), 2)):
        if bits >> k & 1:
            m[i, j] = True
        else:
            m[j, i] = True
    return Tournament(m)


def bfs_reach(adj, s):
    """Plain-Python BFS, independent of the library's reachability code."""
    seen = {s}
    q = deque([s])
    while q:
        x = q.popleft()
        for y in range(len(adj)):
            if adj[x][y] and y not in seen:
                seen.add(y)
                q.append(y)
    return seen


def induced_cycle_exists(adj):
    """True iff some vertex subset of size >= 4 induces a cycle (every vertex degree 2, connected)."""
    n = len(adj)
    for k in range(4, n + 1):
        for sub in itertools.combinations(range(n), k):
            if all(sum(adj[v][u] for u in sub) == 2 for v in sub):
                seen = {sub[0]}
                stack = [sub[0]]
                while stack:
                    x = stack.pop()
                    for y in sub:
                        if adj[x][y] and y not in seen:
                            seen.add(y)
                            stack.append(y)
                if len(seen) == k:
                    return True
    return False


def all_cliques(adj):
    n = len(adj)
    for k in range(1, n + 1):
        for sub in itertools.combinations(range(n), k):
            if all(adj[a][b] for a, b in itertools.combinations(sub, 2)):
                yield sub


def random_undirected(n, p, rng):
    m = np.triu(rng.random((n, n)) < p, 1)
    return UndirectedGraph(m | m.T)


def random_oriented(n, p, rng):
    m = np.triu(rng.random((n, n)) < p, 1)
    flip = np.triu(rng.random((n, n)) < 0.5, 1)
    adj = (m & flip) | (m & ~flip).T
    return OrientedDigraph(adj)


@st.composite
def tournaments(draw, min_n=1, max_n=12):
    n = draw(st.integers(min_n, max_n))
    bits = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    return tournament_from_bits(n, bits)


@st.composite
def oriented_digraphs(draw, max_n=20):
    n = draw(st.integers(1, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    p = draw(st.sampled_from([0.05, 0.15, 0.4, 0.8]))
    return random_oriented(n, p, np.random.default_rng(seed))


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


# -- acceptance reporting ----------------------------------------------------

ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line per acceptance criterion.

    Usage: ``criterion(k, title)`` returns a callable ``note(text)``; the
    line is marked PASS only if the test body finishes without raising.
    """
    state = {}

    def start(k, title):
        state.update(k=k, title=title, notes=[])
        return state["notes"].append

    yield start
    if "k" in state:
        failed = getattr(request.node, "rep_call", None) is None or request.node.rep_call.failed
        verdict = "FAIL" if failed else "PASS"
        detail = "; ".join(state["notes"])
        ACCEPTANCE_LINES[state["k"]] = f"[{verdict}] criterion {state['k']}: {state['title']}" + (f" ({detail})" if detail else "")
        print("\n" + ACCEPTANCE_LINES[state["k"]])


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
