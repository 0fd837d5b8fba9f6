"""Exact minimum rank over GF(2) of the symmetric matrices fitting a graph.

A matrix fits a graph when its off-diagonal zero pattern is the graph's
non-adjacency pattern; the diagonal is free. The minimum is taken by
enumerating all 2^n diagonals per connected component (ranks add across
components), with two prunes: rank computations abort once they reach the
current best, and the whole scan stops when the best hits a precomputed
lower bound, the largest rank of an off-diagonal block A[S, V-S] over 32
fixed-seed random bipartitions (every fitting matrix contains that block
verbatim, so its rank bounds them all).

Besides the minimum, callers get the rank of the adjacency matrix itself
(the all-zero diagonal) and the best rank over nonzero diagonals; the gap
between those two is what makes a graph *exceptional*: the adjacency
matrix is then the unique minimum-rank fitting matrix.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .gf2 import rank_rows
from .graphs import Graph, TooLarge, components

DEFAULT_CEILING = 20
_BIPARTITION_TRIES = 32
_BIPARTITION_SEED = 0x5EED


class EmptyGraph(ValueError):
    """Operation defined only for graphs with at least one edge."""


@dataclass(frozen=True)
class MinRankResult:
    """Exact minimum-rank data for one graph.

    ``witness`` is the diagonal (one bit per vertex) attaining ``mr``,
    lexicographically smallest, preferring a nonzero diagonal whenever one
    attains the minimum. ``best_nonzero_diag_rank`` is ``math.inf`` only
    for the zero-vertex graph.
    """

    mr: int
    rank_adjacency: int
    best_nonzero_diag_rank: int | float
    witness: tuple[int, ...]

    def witness_is_zero(self) -> bool:
        return not any(self.witness)


def _bipartition_bound(adj: tuple[int, ...]) -> int:
    n = len(adj)
    if n <= 1:
        return 0
    full = (1 << n) - 1
    rng = random.Random(_BIPARTITION_SEED ^ n)
    best = 0
    for _ in range(_BIPARTITION_TRIES):
        s = rng.randrange(1, full)  # nonempty proper subset
        comp = full ^ s
        rows = []
        ss = s
        while ss:
            v = (ss & -ss).bit_length() - 1
            rows.append(adj[v] & comp)
            ss &= ss - 1
        best = max(best, rank_rows(rows))
    return best


def _solve_component(adj: tuple[int, ...]) -> tuple[int, int, int | None]:
    """(adjacency rank, best rank over nonzero diagonals, witness diagonal).

    The witness is returned as an int whose bit (n-1-v) is vertex v's
    diagonal entry, so ascending ints scan diagonals in lexicographic
    order and the first minimum found is the lexicographically smallest.
    """
    n = len(adj)
    rank_adj = rank_rows(adj)
    if n == 0:
        return 0, 0, None
    lower = _bipartition_bound(adj)
    best: int | None = None
    wit: int | None = None
    for enc in range(1, 1 << n):
        rows = list(adj)
        e = enc
        v = n - 1
        while e:
            if e & 1:
                rows[v] |= 1 << v
            e >>= 1
            v -= 1
        r = rank_rows(rows, limit=best)
        if best is None or r < best:
            best, wit = r, enc
            if best == lower:
                break
    assert best is not None
    return rank_adj, best, wit


def _decode(enc: int, n: int) -> tuple[int, ...]:
    return tuple((enc >> (n - 1 - v)) & 1 for v in range(n))


def _component_result(adj: tuple[int, ...]) -> MinRankResult:
    n = len(adj)
    if n == 0:
        return MinRankResult(0, 0, math.inf, ())
    rank_adj, best_nz, wit_nz = _solve_component(adj)
    mr = min(rank_adj, best_nz)
    if best_nz == mr:
        witness = _decode(wit_nz, n)
    else:
        witness = (0,) * n
    return MinRankResult(mr, rank_adj, best_nz, witness)


def component_minrank(g: Graph, ceiling: int = DEFAULT_CEILING) -> list[MinRankResult]:
    """Per-component results in component order; the mr values add up."""
    out = []
    for verts, sub in components(g):
        if sub.n > ceiling:
            raise TooLarge(
                f"component {verts} has {sub.n} vertices, above the ceiling {ceiling}"
            )
        out.append(_component_result(sub.adj))
    return out


def min_rank_f2(g: Graph, ceiling: int = DEFAULT_CEILING) -> MinRankResult:
    """Exact mr(G) over GF(2), diagonal enumerated per component."""
    if g.n == 0:
        return MinRankResult(0, 0, math.inf, ())
    comp = components(g)
    parts = []
    for verts, sub in comp:
        if sub.n > ceiling:
            raise TooLarge(
                f"component {verts} has {sub.n} vertices, above the ceiling {ceiling}"
            )
        parts.append((verts, sub, _component_result(sub.adj)))
    mr = sum(p.mr for _, _, p in parts)
    rank_adj = sum(p.rank_adjacency for _, _, p in parts)
    best_nz = mr + min(p.best_nonzero_diag_rank - p.mr for _, _, p in parts)

    def assemble(carrier: int | None) -> tuple[int, ...]:
        diag = [0] * g.n
        for idx, (verts, _, p) in enumerate(parts):
            if idx == carrier:
                local = p.witness  # nonzero by choice of carrier
            elif p.rank_adjacency == p.mr:
                local = (0,) * len(verts)
            else:
                local = p.witness
            for v, bit in zip(verts, local):
                diag[v] = bit
        return tuple(diag)

    if best_nz == mr:
        carriers = [
            idx for idx, (_, _, p) in enumerate(parts)
            if p.best_nonzero_diag_rank == p.mr
        ]
        witness = min(assemble(c) for c in carriers)
    else:
        witness = (0,) * g.n
    return MinRankResult(mr, rank_adj, best_nz, witness)


def is_exceptional(g: Graph, ceiling: int = DEFAULT_CEILING) -> bool:
    """True iff the adjacency matrix is the unique minimum-rank fitting matrix.

    Defined for nonempty graphs only.
    """
    if g.m == 0:
        raise EmptyGraph("exceptionality is defined for graphs with at least one edge")
    res = min_rank_f2(g, ceiling)
    return res.rank_adjacency < res.best_nonzero_diag_rank
