"""Independent brute-force oracles used only by the test suite.

Everything here is written for obviousness, not speed, and deliberately
shares no algorithmic ideas with the package under test: colorings are
found by plain backtracking over vertices in label order, cliques and
independent sets by full subset sweeps, connectivity by deleting every
candidate cut set, cycles by permutation search.  Keep it that way.
"""

from __future__ import annotations

from itertools import combinations

from hamcert.graphs import Graph


def oracle_is_colorable(g: Graph, t: int) -> bool:
    """Can g be properly colored with at most t colors?  Plain backtracking."""
    if t < 0:
        raise ValueError("color count must be non-negative")
    colors = [-1] * g.n

    def place(v: int) -> bool:
        if v == g.n:
            return True
        for c in range(t):
            ok = True
            for u in range(v):
                if g.adj[v] >> u & 1 and colors[u] == c:
                    ok = False
                    break
            if ok:
                colors[v] = c
                if place(v + 1):
                    return True
                colors[v] = -1
        return False

    return place(0)


def oracle_chromatic(g: Graph) -> int:
    if g.n == 0:
        return 0
    t = 1
    while not oracle_is_colorable(g, t):
        t += 1
    return t


def oracle_clique_number(g: Graph) -> int:
    best = 0
    for size in range(g.n, 0, -1):
        if size <= best:
            break
        for subset in combinations(range(g.n), size):
            if all(g.adj[a] >> b & 1 for a, b in combinations(subset, 2)):
                best = size
                break
        if best == size:
            break
    return best


def oracle_independence_number(g: Graph) -> int:
    best = 0
    for size in range(g.n, 0, -1):
        if size <= best:
            break
        for subset in combinations(range(g.n), size):
            if all(not (g.adj[a] >> b & 1) for a, b in combinations(subset, 2)):
                best = size
                break
        if best == size:
            break
    return best


def _connected_after_removal(g: Graph, removed: frozenset[int]) -> bool:
    left = [v for v in range(g.n) if v not in removed]
    if not left:
        return True
    seen = {left[0]}
    stack = [left[0]]
    while stack:
        v = stack.pop()
        for u in left:
            if u not in seen and g.adj[v] >> u & 1:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(left)


def oracle_vertex_connectivity(g: Graph) -> int:
    """Smallest vertex set whose removal disconnects g; n-1 for complete graphs."""
    if g.n == 0:
        raise ValueError("connectivity of the empty graph is undefined")
    if all(row == g.vertex_mask ^ (1 << v) for v, row in enumerate(g.adj)):
        return g.n - 1
    if not _connected_after_removal(g, frozenset()):
        return 0
    for size in range(1, g.n - 1):
        for cut in combinations(range(g.n), size):
            if not _connected_after_removal(g, frozenset(cut)):
                return size
    return g.n - 1


def oracle_hamiltonian_cycle(g: Graph) -> tuple[int, ...] | None:
    """First Hamiltonian cycle in permutation order starting at vertex 0."""
    if g.n < 3:
        return None
    path = [0]
    used = [False] * g.n
    used[0] = True

    def extend() -> tuple[int, ...] | None:
        if len(path) == g.n:
            if g.adj[path[-1]] >> 0 & 1:
                return tuple(path)
            return None
        for v in range(1, g.n):
            if not used[v] and g.adj[path[-1]] >> v & 1:
                used[v] = True
                path.append(v)
                found = extend()
                if found is not None:
                    return found
                path.pop()
                used[v] = False
        return None

    return extend()


def oracle_longest_cycle_length(g: Graph) -> int:
    """Length of a longest cycle, 0 if acyclic.  DFS over simple paths."""
    best = 0
    for start in range(g.n):
        path = [start]
        on_path = {start}

        def walk() -> None:
            nonlocal best
            last = path[-1]
            for v in range(start + 1, g.n):
                if v in on_path or not (g.adj[last] >> v & 1):
                    continue
                path.append(v)
                on_path.add(v)
                if len(path) >= 3 and g.adj[v] >> start & 1:
                    best = max(best, len(path))
                walk()
                path.pop()
                on_path.remove(v)

        walk()
    return best
