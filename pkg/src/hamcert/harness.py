"""Population-scale verification over all labeled graphs of an order.

The internal source enumerates every labeled graph on n <= 7 vertices by
edge bitmask and pushes the bulk filtering through numpy: adjacency rows,
degrees, connectivity, greedy coloring bounds, exact clique and
independence numbers, exact clamped connectivity, and exact
Hamiltonicity all run as whole-population array passes.  Only the rare
graphs the cheap passes cannot settle (chromatic suspects, borderline
cases of the coloring inequality, non-Hamiltonian hypothesis hits) fall
back to the exact single-graph solvers, and every counterexample-adjacent
decision is replayed through certify so the vector path never has the
final word.

Work may be split into shards by edge-mask range; partial reports merge
associatively, so totals are identical for every shard count.
"""

from __future__ import annotations

import hashlib
import time
from dataclasses import dataclass, field
from itertools import combinations, permutations

from hamcert.graph6 import Graph6Error, parse_graph6, to_graph6
from hamcert.graphs import Graph, from_edge_mask, triangle_pairs
from hamcert.invariants import (
    chromatic_number,
    independence_number,
    nordhaus_gaddum,
    vertex_connectivity,
)
from hamcert.cycles import find_hamiltonian_cycle
from hamcert.theorem import certify, check_hypothesis, format_certificate

MAX_INTERNAL_ORDER = 7
MAX_STREAM_ORDER = 62


@dataclass
class VerificationReport:
    """Additive tallies of one verification run (or one shard of it)."""

    total_graphs: int = 0
    hypothesis_hits: dict[int, int] = field(default_factory=dict)
    hamiltonian: int = 0
    extremal: int = 0
    counterexamples: list[tuple[str, int]] = field(default_factory=list)
    lemma1_violations: int = 0
    elapsed: float = 0.0
    errors: list[tuple[int, str]] = field(default_factory=list)

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        hits = dict(self.hypothesis_hits)
        for k, v in other.hypothesis_hits.items():
            hits[k] = hits.get(k, 0) + v
        return VerificationReport(
            total_graphs=self.total_graphs + other.total_graphs,
            hypothesis_hits=hits,
            hamiltonian=self.hamiltonian + other.hamiltonian,
            extremal=self.extremal + other.extremal,
            counterexamples=self.counterexamples + other.counterexamples,
            lemma1_violations=self.lemma1_violations + other.lemma1_violations,
            elapsed=self.elapsed + other.elapsed,
            errors=self.errors + other.errors,
        )

    @property
    def hits_total(self) -> int:
        return sum(self.hypothesis_hits.values())

    def consistent(self) -> bool:
        return self.hamiltonian + self.extremal + len(self.counterexamples) == self.hits_total

    def summary(self) -> str:
        hits = " ".join(f"k={k}:{v}" for k, v in sorted(self.hypothesis_hits.items()))
        lines = [
            f"graphs {self.total_graphs}",
            f"hypothesis hits {self.hits_total} ({hits or 'none'})",
            f"hamiltonian {self.hamiltonian}",
            f"extremal {self.extremal}",
            f"counterexamples {len(self.counterexamples)}",
            f"lemma1 violations {self.lemma1_violations}",
            f"elapsed {self.elapsed:.2f}s",
        ]
        if self.errors:
            lines.append(f"input errors {len(self.errors)}")
            for line_no, message in self.errors[:20]:
                lines.append(f"  line {line_no}: {message}")
        for g6, k in self.counterexamples[:20]:
            lines.append(f"  COUNTEREXAMPLE {g6} k={k}")
        return "\n".join(lines)


def _clamped_k_range(n: int, k_min: int, k_max: int) -> range:
    lo = max(2, k_min)
    hi = min(k_max, n - 1)
    return range(lo, hi + 1)


# ---------------------------------------------------------------------------
# internal vectorized engine


def _pair_index(n: int) -> dict[tuple[int, int], int]:
    return {pair: i for i, pair in enumerate(triangle_pairs(n))}


def _subset_edge_masks(n: int):
    """For every vertex subset: the edge mask of all pairs inside it."""
    idx = _pair_index(n)
    out = []
    for s in range(1 << n):
        verts = [v for v in range(n) if s >> v & 1]
        em = 0
        for a, b in combinations(verts, 2):
            em |= 1 << idx[(a, b)]
        out.append(em)
    return out


def _hamiltonian_edge_masks(n: int) -> list[int]:
    """Edge masks of all cyclic vertex orders, one per undirected cycle."""
    if n < 3:
        return []
    idx = _pair_index(n)
    out = []
    for perm in permutations(range(1, n)):
        if perm[0] > perm[-1]:
            continue  # reflection-reduced
        order = (0,) + perm
        em = 0
        for i in range(n):
            a, b = order[i], order[(i + 1) % n]
            em |= 1 << idx[(min(a, b), max(a, b))]
        out.append(em)
    return out


def _np():
    import numpy

    return numpy


def _build_rows(np, masks, n):
    rows = [np.zeros(masks.shape, np.uint8) for _ in range(n)]
    for i, (u, v) in enumerate(triangle_pairs(n)):
        bit = ((masks >> np.uint32(i)) & np.uint32(1)).astype(np.uint8)
        rows[u] |= bit << np.uint8(v)
        rows[v] |= bit << np.uint8(u)
    return rows


def _connected_mask(np, rows, n, full):
    seen = np.full(rows[0].shape, 1, np.uint8)
    for _ in range(n - 1):
        for v in range(n):
            seen |= ((seen >> np.uint8(v)) & np.uint8(1)) * rows[v]
    return seen == np.uint8(full)


def _greedy_bound(np, rows, n, orders):
    """Smallest fixed-order greedy color count over the given orders."""
    best = None
    for order in orders:
        color = [None] * n
        ncol = np.zeros(rows[0].shape, np.uint8)
        for pos, v in enumerate(order):
            forb = np.zeros(rows[0].shape, np.uint16)
            for u in order[:pos]:
                has = ((rows[v] >> np.uint8(u)) & np.uint8(1)).astype(np.uint16)
                forb |= has << color[u]
            lcb = (~forb) & (forb + np.uint16(1))
            c = np.bitwise_count((lcb - np.uint16(1))).astype(np.uint16)
            color[v] = c
            ncol = np.maximum(ncol, (c + 1).astype(np.uint8))
        best = ncol if best is None else np.minimum(best, ncol)
    return best


def _clique_alpha(np, masks, n):
    """Exact clique and independence numbers for every mask via the
    subset sweep (ascending popcount so later writes dominate)."""
    omega = np.ones(masks.shape, np.uint8)
    alpha = np.ones(masks.shape, np.uint8)
    ems = _subset_edge_masks(n)
    subsets = sorted(range(1, 1 << n), key=lambda s: s.bit_count())
    for s in subsets:
        size = s.bit_count()
        if size < 2:
            continue
        em = np.uint32(ems[s])
        inside = masks & em
        omega = np.where(inside == em, np.uint8(size), omega)
        alpha = np.where(inside == np.uint32(0), np.uint8(size), alpha)
    return omega, alpha


def _clamped_connectivity(np, rows, n, full, k_cap):
    """Exact min(kappa, k_cap) for every graph in rows (assumed
    connected); smallest separating-set size wins, no cut up to
    k_cap - 1 means the clamp value."""
    size = rows[0].shape
    kappa = np.full(size, k_cap, np.uint8)
    for cut_size in range(1, min(k_cap, n - 1)):
        hit_this_size = np.zeros(size, bool)
        for cut in combinations(range(n), cut_size):
            cut_mask = 0
            for v in cut:
                cut_mask |= 1 << v
            allowed = full ^ cut_mask
            start = allowed & -allowed
            seen = np.full(size, start, np.uint8)
            keep = np.uint8(allowed)
            live = [v for v in range(n) if allowed >> v & 1]
            for _ in range(len(live) - 1):
                for v in live:
                    seen |= ((seen >> np.uint8(v)) & np.uint8(1)) * (rows[v] & keep)
            hit_this_size |= (seen & keep) != keep
        kappa = np.where(hit_this_size & (kappa == k_cap), np.uint8(cut_size), kappa)
    return kappa


def _verify_internal_shard(n, k_range, lo, hi, chi_memo, on_extremal) -> VerificationReport:
    np = _np()
    report = VerificationReport(total_graphs=hi - lo)
    masks = np.arange(lo, hi, dtype=np.uint32)
    rows = _build_rows(np, masks, n)
    full = (1 << n) - 1

    deg = np.bitwise_count(rows[0])
    mindeg = deg.copy()
    for v in range(1, n):
        d = np.bitwise_count(rows[v])
        mindeg = np.minimum(mindeg, d)
    conn = _connected_mask(np, rows, n, full)

    omega, alpha = _clique_alpha(np, masks, n)

    orders = [list(range(n)), list(range(n - 1, -1, -1))]
    ub = _greedy_bound(np, rows, n, orders)
    ub = np.minimum(ub, (n - alpha + 1).astype(np.uint8))
    ub = np.maximum(ub, omega)  # greedy can never beat the clique bound
    crows = [(~rows[v]) & np.uint8(full ^ (1 << v)) for v in range(n)]
    ub_c = _greedy_bound(np, crows, n, orders)
    ub_c = np.minimum(ub_c, (n - omega + 1).astype(np.uint8))
    ub_c = np.maximum(ub_c, alpha)

    # the greedy bounds already witness chi + chi_c <= n+1 for almost
    # every graph; the rest get the exact treatment
    suspects = np.nonzero(ub.astype(np.int16) + ub_c.astype(np.int16) > n + 1)[0]
    for i in suspects.tolist():
        g = from_edge_mask(n, lo + i)
        if nordhaus_gaddum(g)[2] < 0:
            report.lemma1_violations += 1

    ks = list(k_range)
    report.hypothesis_hits = {k: 0 for k in ks}
    if not ks:
        report.elapsed = 0.0
        return report
    k_cap = ks[-1]

    # candidate filter: the hypothesis needs kappa >= 2 (so connected,
    # min degree >= 2) and chi >= n - min(mindeg, k_cap); chi <= ub makes
    # the ub version a sound superset
    reach = np.minimum(mindeg, np.uint8(k_cap)).astype(np.int16)
    cand = conn & (mindeg >= 2) & (ub.astype(np.int16) >= n - reach)
    cand_idx = np.nonzero(cand)[0]
    if cand_idx.size == 0:
        return report

    cmasks = masks[cand_idx]
    crows_sub = [rows[v][cand_idx] for v in range(n)]
    comega = omega[cand_idx]
    cub = ub[cand_idx]

    # exact chromatic numbers: free when the clique bound meets the
    # greedy bound, single-graph solver otherwise
    chi = cub.astype(np.uint8).copy()
    unsettled = np.nonzero(comega != cub)[0]
    for i in unsettled.tolist():
        em = int(cmasks[i])
        value = chi_memo.get(em)
        if value is None:
            value = chromatic_number(from_edge_mask(n, em))[0]
            chi_memo[em] = value
        chi[i] = value

    kappa = _clamped_connectivity(np, crows_sub, n, full, k_cap)

    hit_any = np.zeros(cand_idx.shape, bool)
    chi16 = chi.astype(np.int16)
    for k in ks:
        hits_k = (kappa >= k) & (chi16 >= n - k)
        report.hypothesis_hits[k] = int(np.count_nonzero(hits_k))
        hit_any |= hits_k

    hit_idx = np.nonzero(hit_any)[0]
    if hit_idx.size == 0:
        return report

    hmasks = cmasks[hit_idx]
    ham = np.zeros(hit_idx.shape, bool)
    for em in _hamiltonian_edge_masks(n):
        em32 = np.uint32(em)
        ham |= (hmasks & em32) == em32

    hkappa = kappa[hit_idx]
    hchi = chi16[hit_idx]
    for pos in range(hit_idx.size):
        graph_hits = [k for k in ks if hkappa[pos] >= k and hchi[pos] >= n - k]
        if ham[pos]:
            report.hamiltonian += len(graph_hits)
            continue
        # rare path: replay through the exact certifier, which recomputes
        # kappa and chi independently of the vector pass
        g = from_edge_mask(n, int(hmasks[pos]))
        for k in graph_hits:
            cert = certify(g, k)
            if cert.kind == "hamiltonian":
                report.hamiltonian += 1
            elif cert.kind == "extremal":
                report.extremal += 1
                if on_extremal is not None:
                    on_extremal(to_graph6(g), k)
            else:
                report.counterexamples.append((to_graph6(g), k))
    return report


# ---------------------------------------------------------------------------
# streamed source


def _verify_stream(n, k_range, lines, on_extremal) -> VerificationReport:
    report = VerificationReport()
    ks = list(k_range)
    report.hypothesis_hits = {k: 0 for k in ks}
    for line_no, raw in enumerate(lines, 1):
        text = raw.strip()
        if not text:
            continue
        try:
            g = parse_graph6(text)
        except Graph6Error as err:
            report.errors.append((line_no, str(err)))
            continue
        if g.n != n:
            report.errors.append((line_no, f"expected order {n}, got {g.n}"))
            continue
        report.total_graphs += 1
        chi, _, slack = nordhaus_gaddum(g)
        if slack < 0:
            report.lemma1_violations += 1
        if not ks:
            continue
        kappa = vertex_connectivity(g)
        if kappa < 2:
            continue
        graph_hits = [k for k in ks if kappa >= k and chi >= n - k]
        if not graph_hits:
            continue
        for k in graph_hits:
            report.hypothesis_hits[k] += 1
        if find_hamiltonian_cycle(g) is not None:
            report.hamiltonian += len(graph_hits)
            continue
        for k in graph_hits:
            cert = certify(g, k)
            if cert.kind == "hamiltonian":
                report.hamiltonian += 1
            elif cert.kind == "extremal":
                report.extremal += 1
                if on_extremal is not None:
                    on_extremal(to_graph6(g), k)
            else:
                report.counterexamples.append((to_graph6(g), k))
    return report


# ---------------------------------------------------------------------------
# entry points


def verify_order(
    n: int,
    k_range: tuple[int, int] | None = None,
    source: str = "internal",
    stream=None,
    shards: int = 1,
    on_extremal=None,
) -> VerificationReport:
    """Check the theorem and the coloring inequality over a population.

    source "internal": every labeled graph of order n (n <= 7 enforced),
    vectorized, optionally sharded by edge-mask range.  source "graph6":
    iterate the given lines; malformed lines are recorded with their
    line numbers and processing continues.  on_extremal, when given, is
    called with (graph6, k) for every extremal certificate issued.
    """
    if k_range is None:
        k_range = (2, n - 1)
    k_min, k_max = k_range
    started = time.monotonic()
    if source == "internal":
        if not (1 <= n <= MAX_INTERNAL_ORDER):
            raise ValueError(
                f"internal enumeration is limited to orders 1..{MAX_INTERNAL_ORDER}"
            )
        if shards < 1:
            raise ValueError("shards must be positive")
        ks = _clamped_k_range(n, k_min, k_max)
        total = 1 << (n * (n - 1) // 2)
        bounds = [total * i // shards for i in range(shards + 1)]
        report = VerificationReport(hypothesis_hits={k: 0 for k in ks})
        chi_memo: dict[int, int] = {}
        for lo, hi in zip(bounds, bounds[1:]):
            if lo == hi:
                continue
            report = report.merge(
                _verify_internal_shard(n, ks, lo, hi, chi_memo, on_extremal)
            )
        report.elapsed = time.monotonic() - started
        return report
    if source == "graph6":
        if not (1 <= n <= MAX_STREAM_ORDER):
            raise ValueError(f"stream verification is limited to orders 1..{MAX_STREAM_ORDER}")
        if stream is None:
            raise ValueError("graph6 source needs a stream of lines")
        report = _verify_stream(n, _clamped_k_range(n, k_min, k_max), stream, on_extremal)
        report.elapsed = time.monotonic() - started
        return report
    raise ValueError(f"unknown source {source!r}")


def classify(g: Graph, k: int) -> str:
    """One tab-separated record: graph6, n, k, kappa, chi, alpha, the
    hypothesis flags, certificate kind, payload digest."""
    rep = check_hypothesis(g, k)
    alpha = independence_number(g)[0]
    flags = (
        f"kconn={int(rep.k_connected_ok)},chi={int(rep.chi_ok)},kge2={int(rep.k_ge_2)}"
    )
    if rep.all_ok:
        cert = certify(g, k)
        kind = cert.kind
        digest = hashlib.sha256(format_certificate(g, cert).encode()).hexdigest()[:12]
    else:
        kind = "none"
        digest = "-"
    fields = [to_graph6(g), g.n, k, rep.kappa, rep.chi, alpha, flags, kind, digest]
    return "\t".join(str(f) for f in fields)
