"""Exact isomorphism-class tooling for the test data generators.

canonical_key finds the lexicographically smallest column-order
adjacency bit sequence over all vertex relabelings (branch and bound
over partial assignments, children visited best-first).  iso_classes
builds one representative per isomorphism class by vertex augmentation:
every class on n vertices arises from some class on n-1 vertices plus
one new vertex, so extending each parent by every possible neighborhood
and deduplicating canonical keys enumerates all classes exactly once.

Known class counts for cross-checking: 1, 2, 4, 11, 34, 156, 1044,
12346 for n = 1..8.
"""

from __future__ import annotations

from hamcert.graphs import Graph, with_edges

ISO_CLASS_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


def canonical_key(g: Graph) -> tuple[int, ...]:
    """Lex-min tuple of column values; column i holds the bits (j,i)
    for j < i with position 0 most significant."""
    n = g.n
    adj = g.adj
    best: tuple[int, ...] | None = None

    def dfs(cols: tuple[int, ...], perm: list[int], used: int) -> None:
        nonlocal best
        i = len(perm)
        if best is not None and cols > best[:i]:
            return
        if i == n:
            if best is None or cols < best:
                best = cols
            return
        children = []
        for v in range(n):
            if used >> v & 1:
                continue
            value = 0
            for u in perm:
                value = value << 1 | adj[u] >> v & 1
            children.append((value, v))
        children.sort()
        for value, v in children:
            dfs(cols + (value,), perm + [v], used | 1 << v)

    dfs((), [], 0)
    assert best is not None
    return best


def graph_from_key(n: int, key: tuple[int, ...]) -> Graph:
    edges = []
    for i in range(n):
        for j in range(i):
            if key[i] >> (i - 1 - j) & 1:
                edges.append((j, i))
    return with_edges(n, edges)


def canonical_form(g: Graph) -> Graph:
    return graph_from_key(g.n, canonical_key(g))


def iso_classes(n: int) -> list[Graph]:
    """One canonical representative per isomorphism class of order n."""
    if n < 1:
        raise ValueError("order must be positive")
    reps = [with_edges(1, [])]
    for order in range(2, n + 1):
        seen: set[tuple[int, ...]] = set()
        grown: list[Graph] = []
        for parent in reps:
            base = [(u, v) for u, v in parent.edges()]
            for neighborhood in range(1 << (order - 1)):
                edges = base + [
                    (u, order - 1) for u in range(order - 1) if neighborhood >> u & 1
                ]
                key = canonical_key(with_edges(order, edges))
                if key not in seen:
                    seen.add(key)
                    grown.append(graph_from_key(order, key))
        reps = grown
    return reps
