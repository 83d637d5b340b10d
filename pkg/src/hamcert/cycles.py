"""Oriented cycles, exact cycle solvers, and longer-cycle extension rules.

The extension rules each take a cycle plus a fan of disjoint paths and
try one specific rewiring that, when its enabling chord exists, yields a
strictly longer cycle.  Every candidate is validated against the host
graph before being returned, so the rules are safe on arbitrary inputs:
a returned cycle is always real and always longer.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from hamcert.graphs import Graph, iter_bits, mask_of
from hamcert.invariants import PathSystem

# Exact longest-cycle search is refused above this order; the state space
# doubles per vertex and answers stop being desk-scale.
MAX_LONGEST_CYCLE_ORDER = 16

# Subset-DP Hamiltonian search bound; beyond it backtracking takes over.
MAX_HAMILTONIAN_DP_ORDER = 24

_PURE_PYTHON_DP_ORDER = 13


@dataclass(frozen=True)
class Cycle:
    """Oriented cycle: a sequence of at least 3 distinct vertices with
    wraparound; adjacency against a host graph is checked by
    is_valid_cycle, not here."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        if len(self.vertices) < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("cycle repeats a vertex")

    @cached_property
    def _pos(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: int) -> bool:
        return v in self._pos

    @property
    def vertex_set(self) -> int:
        return mask_of(self.vertices)

    def position(self, v: int) -> int:
        try:
            return self._pos[v]
        except KeyError:
            raise ValueError(f"vertex {v} is not on the cycle") from None

    def successor(self, v: int) -> int:
        return self.vertices[(self.position(v) + 1) % len(self.vertices)]

    def predecessor(self, v: int) -> int:
        return self.vertices[(self.position(v) - 1) % len(self.vertices)]

    def arc(self, x: int, y: int, *, backward: bool = False) -> tuple[int, ...]:
        """Consecutive vertices from x to y inclusive; x == y gives (x,).

        The backward arc from x to y equals the reversed forward arc
        from y to x.
        """
        i, j = self.position(x), self.position(y)
        m = len(self.vertices)
        step = -1 if backward else 1
        out = [x]
        while i != j:
            i = (i + step) % m
            out.append(self.vertices[i])
        return tuple(out)

    def reversed_(self) -> "Cycle":
        """Opposite orientation, same starting vertex."""
        v = self.vertices
        return Cycle((v[0],) + tuple(reversed(v[1:])))

    def rotated(self, start: int) -> "Cycle":
        i = self.position(start)
        return Cycle(self.vertices[i:] + self.vertices[:i])


def is_valid_cycle(g: Graph, vertices) -> bool:
    seq = tuple(vertices.vertices) if isinstance(vertices, Cycle) else tuple(vertices)
    if len(seq) < 3 or len(set(seq)) != len(seq):
        return False
    if any(not (0 <= v < g.n) for v in seq):
        return False
    return all(g.has_edge(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq)))


def canonical_cycle(vertices) -> Cycle:
    """Normal form under rotation and reflection: start at the minimum
    vertex, then the lexicographically smaller direction."""
    seq = tuple(vertices.vertices) if isinstance(vertices, Cycle) else tuple(vertices)
    i = seq.index(min(seq))
    fwd = seq[i:] + seq[:i]
    bwd = (fwd[0],) + tuple(reversed(fwd[1:]))
    return Cycle(min(fwd, bwd))


# ---------------------------------------------------------------------------
# Hamiltonian cycle


def _hamiltonian_dp_python(g: Graph):
    """Subset DP over masks of vertices 1..n-1; dp[mask] holds the set of
    endpoints of paths from vertex 0 spanning exactly mask."""
    n = g.n
    shifted = [g.adj[v] >> 1 for v in range(n)]
    full = (1 << (n - 1)) - 1
    dp = [0] * (full + 1)
    start = shifted[0]
    m = start
    while m:
        low = m & -m
        dp[low] = low
        m ^= low
    for mask in range(1, full + 1):
        if mask & (mask - 1) == 0:
            continue
        acc = 0
        rest = mask
        while rest:
            low = rest & -rest
            rest ^= low
            v = low.bit_length()  # actual vertex index (bit b is vertex b+1)
            if dp[mask ^ low] & shifted[v]:
                acc |= low
        dp[mask] = acc
    closers = dp[full] & start
    if not closers:
        return None
    seq = []
    mask = full
    cur = (closers & -closers).bit_length() - 1
    while True:
        seq.append(cur + 1)
        low = 1 << cur
        if mask == low:
            break
        prev = dp[mask ^ low] & shifted[cur + 1]
        mask ^= low
        cur = (prev & -prev).bit_length() - 1
    return [0] + seq[::-1]


def _hamiltonian_dp_numpy(g: Graph):
    """Same DP, layered by popcount and vectorized per endpoint pair."""
    import numpy as np

    n = g.n
    full = (1 << (n - 1)) - 1
    dp = np.zeros(full + 1, dtype=np.uint32)
    for v in range(1, n):
        if g.has_edge(0, v):
            dp[1 << (v - 1)] = 1 << (v - 1)
    all_masks = np.arange(full + 1, dtype=np.uint32)
    pop = np.bitwise_count(all_masks)
    by_layer = [all_masks[pop == p] for p in range(n)]
    for layer in range(1, n - 1):
        masks = by_layer[layer]
        live = masks[dp[masks] != 0]
        if live.size == 0:
            continue
        for v in range(1, n):
            vb = np.uint32(1 << (v - 1))
            has_v = live[(dp[live] & vb) != 0]
            if has_v.size == 0:
                continue
            for u in iter_bits(g.adj[v] >> 1):
                # u here is a bit index: actual vertex u+1
                ub = np.uint32(1 << u)
                targets = has_v[(has_v & ub) == 0]
                if targets.size:
                    # targets are distinct and all lack bit u, so the
                    # fancy-indexed |= hits each slot once
                    dp[targets | ub] |= ub
    closers = int(dp[full]) & (g.adj[0] >> 1)
    if not closers:
        return None
    shifted = [g.adj[v] >> 1 for v in range(n)]
    seq = []
    mask = full
    cur = (closers & -closers).bit_length() - 1
    while True:
        seq.append(cur + 1)
        low = 1 << cur
        if mask == low:
            break
        prev = int(dp[mask ^ low]) & shifted[cur + 1]
        mask ^= low
        cur = (prev & -prev).bit_length() - 1
    return [0] + seq[::-1]


def _articulation_free(g: Graph) -> bool:
    """True when g is connected with no cut vertex (n >= 3)."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    # iterative Tarjan; (vertex, parent, neighbor iterator) frames
    stack = [(0, -1, iter_bits(g.adj[0]))]
    disc[0] = low[0] = 0
    clock = 1
    root_children = 0
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for u in it:
            if disc[u] < 0:
                disc[u] = low[u] = clock
                clock += 1
                if v == 0:
                    root_children += 1
                stack.append((u, v, iter_bits(g.adj[u])))
                advanced = True
                break
            elif u != parent:
                low[v] = min(low[v], disc[u])
        if not advanced:
            stack.pop()
            if stack:
                pv = stack[-1][0]
                low[pv] = min(low[pv], low[v])
                if pv != 0 and low[v] >= disc[pv]:
                    return False
    if clock != n:
        return False
    return root_children <= 1


def _hamiltonian_backtrack(g: Graph):
    """Fallback for large orders: DFS with degree and reachability pruning."""
    n = g.n
    if any(row.bit_count() < 2 for row in g.adj):
        return None
    if not _articulation_free(g):
        return None
    full = g.vertex_mask
    path = [0]
    visited = 1

    def reachable_ok(cur: int) -> bool:
        allowed = (full & ~visited) | (1 << cur) | 1
        seen = 1 << cur
        frontier = seen
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.adj[v] & allowed
            frontier = nxt & ~seen
            seen |= frontier
        return (seen & (full & ~visited)) == (full & ~visited) and (seen & 1) == 1

    def extend(cur: int) -> bool:
        nonlocal visited
        if visited == full:
            return bool(g.adj[cur] & 1)
        if not reachable_ok(cur):
            return False
        for v in iter_bits(g.adj[cur] & ~visited):
            # unvisited vertices must keep 2 usable ends
            visited |= 1 << v
            ok = True
            for w in iter_bits(full & ~visited):
                room = (g.adj[w] & ~visited).bit_count() + (1 if g.has_edge(w, v) else 0) + (1 if g.has_edge(w, 0) else 0)
                if room < 2:
                    ok = False
                    break
            if ok:
                path.append(v)
                if extend(v):
                    return True
                path.pop()
            visited &= ~(1 << v)
        return False

    if extend(0):
        return path
    return None


def find_hamiltonian_cycle(g: Graph):
    """A Hamiltonian cycle in canonical form, or None; the absence answer
    is exact (exhaustive subset DP, not a timeout)."""
    if g.n < 3:
        raise ValueError("Hamiltonian cycles need at least 3 vertices")
    if any(row == 0 for row in g.adj):
        return None
    if g.n <= _PURE_PYTHON_DP_ORDER:
        seq = _hamiltonian_dp_python(g)
    elif g.n <= MAX_HAMILTONIAN_DP_ORDER:
        seq = _hamiltonian_dp_numpy(g)
    else:
        seq = _hamiltonian_backtrack(g)
    if seq is None:
        return None
    cycle = canonical_cycle(seq)
    assert is_valid_cycle(g, cycle)
    return cycle


# ---------------------------------------------------------------------------
# longest cycle


def longest_cycle(g: Graph) -> Cycle:
    """The lexicographically least maximum-length cycle (after rotation
    and reflection normalization).  Exact; refuses orders above
    MAX_LONGEST_CYCLE_ORDER and raises on acyclic graphs.
    """
    n = g.n
    if n > MAX_LONGEST_CYCLE_ORDER:
        raise ValueError(
            f"exact longest-cycle search is limited to {MAX_LONGEST_CYCLE_ORDER} vertices"
        )
    best = 0
    if n >= 3:
        # dp[mask] = endpoint set of simple paths that start at the lowest
        # bit of mask and span exactly mask; extensions stay above that bit
        dp = [0] * (1 << n)
        for v in range(n):
            dp[1 << v] = 1 << v
        for mask in range(3, 1 << n):
            if mask & (mask - 1) == 0:
                continue
            low = mask & -mask
            s = low.bit_length() - 1
            acc = 0
            rest = mask ^ low
            while rest:
                vb = rest & -rest
                rest ^= vb
                v = vb.bit_length() - 1
                if dp[mask ^ vb] & g.adj[v]:
                    acc |= vb
            dp[mask] = acc
            if acc & g.adj[s] and mask.bit_count() >= 3:
                best = max(best, mask.bit_count())
    if best < 3:
        raise ValueError("graph has no cycle")
    target = best

    # lexicographically least representative: DFS in sequence order from
    # each candidate minimum vertex; the first hit is the normal form
    for s in range(n):
        higher = ~((1 << (s + 1)) - 1)
        path = [s]
        used = 1 << s

        def search(cur: int) -> list[int] | None:
            nonlocal used
            if len(path) == target:
                return list(path) if g.has_edge(cur, s) else None
            allowed = g.adj[cur] & higher & ~used
            for v in iter_bits(allowed):
                reach = 1 << v
                frontier = reach
                while frontier:
                    nxt = 0
                    for w in iter_bits(frontier):
                        nxt |= g.adj[w] & higher & ~used
                    frontier = nxt & ~reach
                    reach |= frontier
                if reach.bit_count() < target - len(path) or not (reach & g.adj[s]):
                    continue
                path.append(v)
                used |= 1 << v
                found = search(v)
                if found is not None:
                    return found
                path.pop()
                used &= ~(1 << v)
            return None

        hit = search(s)
        if hit is not None:
            return Cycle(tuple(hit))
    raise AssertionError("length was certified but no cycle reconstructed")


# ---------------------------------------------------------------------------
# fans on cycles: successor sets and segment decomposition


def successors_set(c: Cycle, fan: PathSystem) -> int:
    """The hub together with every attachment's cycle successor, as a
    vertex bitmask."""
    out = 1 << fan.hub
    for u in fan.attachments:
        out |= 1 << c.successor(u)
    return out


@dataclass(frozen=True)
class SegmentDecomposition:
    """Arcs between consecutive attachment successors.

    segments[i-1] is the arc from the double successor of attachment i
    to attachment i+1 inclusive (indices 1-based with wraparound), so
    the segments cover the cycle minus the attachment successors.
    big_segment_indices holds the 1-based indices of segments with at
    least 2 vertices; its size drives the case analysis.
    """

    attachments: tuple[int, ...]
    successors: tuple[int, ...]
    segments: tuple[tuple[int, ...], ...]
    big_segment_indices: frozenset[int]


def segments(c: Cycle, fan: PathSystem, k: int) -> SegmentDecomposition:
    """Decompose the cycle along the first k fan attachments."""
    if k < 2:
        raise ValueError("segment decomposition needs k >= 2")
    if k > len(fan.attachments):
        raise ValueError(f"fan has only {len(fan.attachments)} attachments")
    att = fan.attachments[:k]
    if att[0] != min(att):
        raise ValueError("attachments not in cycle order")
    base = c.position(att[0])
    m = len(c)
    keys = [(c.position(u) - base) % m for u in att]
    if keys != sorted(keys) or len(set(keys)) != k:
        raise ValueError("attachments not in cycle order")
    succ = tuple(c.successor(u) for u in att)
    for i in range(k):
        if succ[i] == att[(i + 1) % k]:
            raise ValueError(
                "attachments adjacent on the cycle leave no room for a segment"
            )
    segs = []
    for i in range(k):
        start = c.successor(succ[i])
        segs.append(c.arc(start, att[(i + 1) % k]))
    big = frozenset(i + 1 for i in range(k) if len(segs[i]) >= 2)
    return SegmentDecomposition(att, succ, tuple(segs), big)


# ---------------------------------------------------------------------------
# extension rules
#
# Each rule returns a strictly longer valid cycle or None.  Candidates
# are checked against the host graph; no candidate is trusted by
# construction.


def _interior(path: tuple[int, ...]) -> list[int]:
    return list(path[1:-1])


def _accept(g: Graph, c: Cycle, candidate: list[int]):
    if len(candidate) > len(c) and is_valid_cycle(g, candidate):
        return Cycle(tuple(candidate))
    return None


def extend_offcycle(g: Graph, c: Cycle, fan: PathSystem, z: int):
    """Absorb an off-cycle neighbor z of the hub.

    If z reaches an attachment u_j, the cycle is rewired as
    hub, z, the arc from u_j around to a neighboring attachment, then
    back along that attachment's fan path.  Both arc directions are
    tried for every attachment of z.
    """
    if z in c:
        raise ValueError(f"vertex {z} lies on the cycle")
    if z == fan.hub:
        raise ValueError("z must differ from the hub")
    if not g.has_edge(fan.hub, z):
        return None
    k = len(fan.attachments)
    for j in range(k):
        u_j = fan.attachments[j]
        if not g.has_edge(z, u_j):
            continue
        for backward, other in ((False, (j - 1) % k), (True, (j + 1) % k)):
            u_other = fan.attachments[other]
            if u_other == u_j:
                continue
            arc = c.arc(u_j, u_other, backward=backward)
            candidate = (
                [fan.hub, z]
                + list(arc)
                + list(reversed(_interior(fan.paths[other])))
            )
            found = _accept(g, c, candidate)
            if found is not None:
                return found
    return None


def extend_predecessor_chord(g: Graph, c: Cycle, fan: PathSystem):
    """Use a chord between the interior predecessors of two attachment
    terminals (both segments must have length >= 2).

    The rewired cycle enters along one fan path, runs forward to the
    first predecessor's far side, crosses the chord, runs backward to
    the other entry attachment, and exits along its fan path, gaining
    the hub.
    """
    k = len(fan.attachments)
    try:
        decomp = segments(c, fan, k)
    except ValueError:
        return None
    big = sorted(decomp.big_segment_indices)
    for a in range(len(big)):
        for b in range(a + 1, len(big)):
            i, j = big[a], big[b]  # 1-based segment indices
            term_i = fan.attachments[i % k]
            term_j = fan.attachments[j % k]
            p_i = c.predecessor(term_i)
            p_j = c.predecessor(term_j)
            if not g.has_edge(p_i, p_j):
                continue
            candidate = (
                [fan.hub]
                + _interior(fan.paths[i % k])
                + list(c.arc(term_i, p_j))
                + list(c.arc(p_i, term_j, backward=True))
                + list(reversed(_interior(fan.paths[j % k])))
            )
            found = _accept(g, c, candidate)
            if found is not None:
                return found
    return None


def extend_case1_rotation(g: Graph, c: Cycle, fan: PathSystem, y_index: int):
    """Rewirings available when exactly one segment is long.

    With the long segment written y_1 .. y_r followed by its terminal
    attachment, and y_0 standing for the first attachment's successor,
    position j = y_index needs the edge from y_j back to that successor;
    then either (a) a hub edge to y_{j-1} or (b) an edge from another
    attachment's successor to y_{j-1} yields a longer cycle.  Raises
    unless exactly one segment is long and 1 <= y_index <= r.
    """
    k = len(fan.attachments)
    decomp = segments(c, fan, k)
    big = sorted(decomp.big_segment_indices)
    if len(big) != 1:
        raise ValueError(f"exactly one long segment required, found {len(big)}")
    rot = big[0] - 1
    att = fan.attachments[rot:] + fan.attachments[:rot]
    paths = fan.paths[rot:] + fan.paths[:rot]
    seg = decomp.segments[rot]
    ys = seg[:-1]
    r = len(ys)
    if not (1 <= y_index <= r):
        raise ValueError(f"y index must be in 1..{r}, got {y_index}")
    u1 = att[0]
    u1_succ = c.successor(u1)
    y_j = ys[y_index - 1]
    y_prev = ys[y_index - 2] if y_index >= 2 else u1_succ
    hub = fan.hub
    if g.has_edge(u1_succ, y_j):
        # (a) hub drops onto y_{j-1}, sweeps back to the first successor,
        # jumps to y_j, and takes the long way home through path 1
        if g.has_edge(hub, y_prev):
            candidate = (
                [hub]
                + list(c.arc(y_prev, u1_succ, backward=True))
                + list(c.arc(y_j, u1))
                + list(reversed(_interior(paths[0])))
            )
            found = _accept(g, c, candidate)
            if found is not None:
                return found
        # (b) enter along path l, run back to y_j, jump to the first
        # successor, forward to y_{j-1}, jump to successor l, close via path 1
        for l in range(2, k + 1):
            u_l = att[l - 1]
            u_l_succ = c.successor(u_l)
            if not g.has_edge(u_l_succ, y_prev):
                continue
            candidate = (
                [hub]
                + _interior(paths[l - 1])
                + list(c.arc(u_l, y_j, backward=True))
                + list(c.arc(u1_succ, y_prev))
                + list(c.arc(u_l_succ, u1))
                + list(reversed(_interior(paths[0])))
            )
            found = _accept(g, c, candidate)
            if found is not None:
                return found
    return None
