"""Independent oracles for the test suite.

Everything here deliberately avoids the package's GF(2) elimination and
its diagonal-enumeration engine: ranks come from a numpy row-echelon
routine on dense 0/1 matrices, and the minimum-rank oracle enumerates
every diagonal against that routine.
"""

from __future__ import annotations

import numpy as np

from subcomp.graphs import Graph, enumerate_nonisomorphic


def dense_adjacency(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=np.uint8)
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1
    return a


def rank_mod2_dense(a: np.ndarray) -> int:
    """Row-echelon rank over GF(2), numpy arithmetic only."""
    a = a.copy() % 2
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        pivots = np.nonzero(a[r:, c])[0]
        if pivots.size == 0:
            continue
        p = r + pivots[0]
        a[[r, p]] = a[[p, r]]
        hits = np.nonzero(a[:, c])[0]
        for h in hits:
            if h != r:
                a[h] ^= a[r]
        r += 1
        if r == rows:
            break
    return r


def mr_oracle(g: Graph) -> tuple[int, int, int]:
    """(mr, adjacency rank, best nonzero-diagonal rank) by full enumeration."""
    a = dense_adjacency(g)
    n = g.n
    rank_adj = rank_mod2_dense(a)
    best_nz = None
    for d in range(1, 1 << n):
        b = a.copy()
        for v in range(n):
            b[v, v] = (d >> v) & 1
        r = rank_mod2_dense(b)
        if best_nz is None or r < best_nz:
            best_nz = r
    if best_nz is None:
        return rank_adj, rank_adj, 0
    return min(rank_adj, best_nz), rank_adj, best_nz


def all_graphs_upto(n: int):
    for k in range(1, n + 1):
        yield from enumerate_nonisomorphic(k)


def reference_graph6(g: Graph) -> bytes:
    """Straightforward string-based graph6 encoder, independent of the codec."""
    bits = ""
    for j in range(1, g.n):
        for i in range(j):
            bits += "1" if g.has_edge(i, j) else "0"
    bits += "0" * (-len(bits) % 6)
    out = bytes([g.n + 63]) + bytes(
        int(bits[k : k + 6], 2) + 63 for k in range(0, len(bits), 6)
    )
    return out
