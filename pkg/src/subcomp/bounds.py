"""Constructive upper bounds on c2 with verifying witness systems.

Three builders: the 2*tau vertex-cover construction (complement N(u) and
N[u] for each cover vertex, minus already-processed cover vertices), the
m-1 edge construction (a high-degree vertex's neighborhood pair plus one
pair set per remaining edge), and the n-2 cycle recursion. Singleton and
empty residual sets toggle nothing and are dropped, which is where the
strict inequalities come from. Every builder re-verifies its output.

Minimum vertex cover is exact branch-and-bound (take a vertex or its
whole residual neighborhood), deterministic: the lexicographically
smallest minimum cover.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, TooLarge, bits, components, is_linear_forest
from .systems import ComplementationSystem, verify_system

VERTEX_COVER_CEILING = 32


class BadOrder(ValueError):
    """Cycle constructions need n >= 3."""


@dataclass(frozen=True)
class BoundReport:
    bound_name: str
    bound_value: int
    system: ComplementationSystem


def _min_cover_size(adj: tuple[int, ...], alive: int, banned: int, memo: dict) -> float:
    """Size of a minimum vertex cover of the alive-induced graph avoiding banned vertices."""
    key = (alive, banned)
    hit = memo.get(key)
    if hit is not None:
        return hit
    u = None
    a = alive
    while a:
        v = (a & -a).bit_length() - 1
        if adj[v] & alive:
            u = v
            break
        a &= a - 1
    if u is None:
        memo[key] = 0
        return 0
    best = float("inf")
    if not (banned >> u) & 1:
        best = 1 + _min_cover_size(adj, alive ^ (1 << u), banned, memo)
    nbrs = adj[u] & alive
    if not nbrs & banned:
        rest = _min_cover_size(adj, alive & ~nbrs & ~(1 << u), banned, memo)
        best = min(best, nbrs.bit_count() + rest)
    memo[key] = best
    return best


def min_vertex_cover(g: Graph) -> tuple[int, ...]:
    """Lexicographically smallest minimum vertex cover."""
    if g.n > VERTEX_COVER_CEILING:
        raise TooLarge(f"vertex cover branch-and-bound ceiling is {VERTEX_COVER_CEILING}")
    full = (1 << g.n) - 1
    memo: dict = {}
    tau = _min_cover_size(g.adj, full, 0, memo)
    assert tau != float("inf")
    chosen: list[int] = []
    alive = full
    banned = 0
    for v in range(g.n):
        if len(chosen) == tau:
            break
        with_v = 1 + _min_cover_size(g.adj, alive ^ (1 << v), banned, memo)
        if len(chosen) + with_v == tau:
            chosen.append(v)
            alive ^= 1 << v
        else:
            banned |= 1 << v
    assert len(chosen) == tau
    return tuple(chosen)


def vertex_cover_system(g: Graph) -> BoundReport:
    """Witness for c2 <= 2*tau; residual sets of size < 2 are dropped."""
    cover = min_vertex_cover(g)
    sets = []
    prev = 0
    for u in cover:
        closed = (g.adj[u] | (1 << u)) & ~prev
        open_ = g.adj[u] & ~prev
        for s in (open_, closed):
            if s.bit_count() >= 2:
                sets.append(s)
        prev |= 1 << u
    system = ComplementationSystem(g.n, tuple(sets))
    assert verify_system(g, system)
    return BoundReport("vertex-cover", 2 * len(cover), system)


def cycle_system(n: int) -> ComplementationSystem:
    """System of size n-2 for the standard-labeled cycle 0,1,..,n-1.

    The recursion peels the closed neighborhood {0, k-2, k-1}, which turns
    the k-cycle into a (k-1)-cycle plus an isolated vertex; the base case
    is the triangle's single set.
    """
    if n < 3:
        raise BadOrder("cycles need n >= 3")
    masks = [0b111]
    for k in range(4, n + 1):
        masks.append(1 | (1 << (k - 2)) | (1 << (k - 1)))
    return ComplementationSystem(n, tuple(masks))


def _relabeled(system: ComplementationSystem, mapping: list[int], n: int) -> list[int]:
    out = []
    for s in system.sets:
        mask = 0
        for v in bits(s):
            mask |= 1 << mapping[v]
        out.append(mask)
    return out


def _cycle_order(g: Graph, verts: list[int]) -> list[int]:
    start = verts[0]
    order = [start]
    prev = -1
    cur = start
    while True:
        nbrs = [u for u in bits(g.adj[cur]) if u != prev]
        nxt = min(nbrs)
        if nxt == start:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    return order


def edge_bound_system(g: Graph) -> BoundReport:
    """Witness for the edge bound: size m for linear forests (tight), else <= m-1.

    A vertex v of degree >= 3 contributes {N(v), N[v]} and each edge not
    at v a pair set, m - d(v) + 2 sets in total; degree-<=2 graphs with a
    cycle combine cycle systems and edge pairs per component.
    """
    m = g.m
    pair_sets = lambda edges: [(1 << u) | (1 << v) for u, v in edges]
    if is_linear_forest(g):
        system = ComplementationSystem(g.n, tuple(pair_sets(g.edges())))
        assert verify_system(g, system)
        return BoundReport("edge-count", m, system)
    degrees = [g.degree(v) for v in range(g.n)]
    if max(degrees) >= 3:
        v = degrees.index(max(degrees))
        sets = [g.adj[v], g.adj[v] | (1 << v)]
        sets += pair_sets(e for e in g.edges() if v not in e)
        assert len(sets) == m - degrees[v] + 2 <= m - 1
    else:
        sets = []
        for verts, sub in components(g):
            if sub.m == sub.n and sub.n >= 3:  # a cycle component
                order = _cycle_order(g, verts)
                sets += _relabeled(cycle_system(sub.n), order, g.n)
            else:
                sets += pair_sets((verts[u], verts[w]) for u, w in sub.edges())
        assert len(sets) <= m - 1
    system = ComplementationSystem(g.n, tuple(sets))
    assert verify_system(g, system)
    return BoundReport("edge-count", m - 1, system)
