"""Tripartite subgraph complementation and the invariant t2.

A triclique is a complete tripartite graph on three pairwise-disjoint
(possibly empty) vertex subsets; t2(G) is the least number of tricliques
whose edge sets XOR to E(G).

Because the adjacency matrix has zero diagonal, its congruence
decomposition is all hyperbolic blocks, and each block's generator column
pair reads off one triclique: x-bit only -> first part, y-bit only ->
second, both -> third, neither -> absent. Conversely l tricliques give an
n x 2l generator, so 2l is at least the adjacency rank. Hence
t2(G) = rank(A(G)) / 2 exactly; the brute-force oracle below cross-checks
that identity in the tests rather than trusting the derivation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf2 import BlockKind, congruence_decompose, rank_rows
from .graphs import Graph, SizeMismatch, bits
from .systems import _pairs_within


class OverlappingParts(ValueError):
    """A triclique's three parts must be pairwise disjoint."""


@dataclass(frozen=True)
class Triclique:
    """Parts as bitmasks (X, Y, Z); any may be empty."""

    parts: tuple[int, int, int]

    def vertices(self) -> int:
        return self.parts[0] | self.parts[1] | self.parts[2]

    def edge_mask(self) -> int:
        """Pair bits of edges between distinct parts (graph6 triangle order)."""
        x, y, z = self.parts
        if x & y or x & z or y & z:
            raise OverlappingParts("triclique parts intersect")
        return (
            _pairs_within(x | y | z)
            ^ _pairs_within(x)
            ^ _pairs_within(y)
            ^ _pairs_within(z)
        )

    def as_dict(self) -> dict[str, list[int]]:
        return {"X": bits(self.parts[0]), "Y": bits(self.parts[1]), "Z": bits(self.parts[2])}


@dataclass(frozen=True)
class TricliqueSystem:
    n: int
    tricliques: tuple[Triclique, ...]

    def __len__(self) -> int:
        return len(self.tricliques)


def t2(g: Graph) -> int:
    """Minimum triclique count: half the GF(2) rank of the adjacency matrix."""
    return rank_rows(g.adj) // 2


def build_triclique_system(g: Graph) -> TricliqueSystem:
    """Minimum triclique collection from the all-hyperbolic decomposition."""
    if g.m == 0:
        return TricliqueSystem(g.n, ())
    dec = congruence_decompose(g.adjacency_matrix())
    assert all(b is BlockKind.HYPERBOLIC for b in dec.blocks)
    cols = dec.generator.columns()
    tricliques = []
    for i in range(0, len(cols), 2):
        x, y = cols[i], cols[i + 1]
        tricliques.append(Triclique((x & ~y, y & ~x, x & y)))
    system = TricliqueSystem(g.n, tuple(tricliques))
    assert verify_triclique_system(g, system)
    return system


def verify_triclique_system(g: Graph, t: TricliqueSystem) -> bool:
    """True iff each pair is adjacent in an odd number of tricliques exactly when adjacent in g."""
    if t.n != g.n:
        raise SizeMismatch(f"system on {t.n} vertices vs graph on {g.n}")
    acc = 0
    for tri in t.tricliques:
        if tri.vertices() >> g.n:
            raise SizeMismatch("triclique mentions vertices outside the graph")
        acc ^= tri.edge_mask()
    return acc == g.triangle_mask()


def _single_triclique_masks(n: int) -> list[int]:
    """Distinct nonzero edge masks of all tricliques on subsets of 0..n-1."""
    masks = set()
    for code in range(4 ** n):
        parts = [0, 0, 0]
        c = code
        for v in range(n):
            state = c & 3
            c >>= 2
            if state:
                parts[state - 1] |= 1 << v
        em = Triclique(tuple(parts)).edge_mask()
        if em:
            masks.add(em)
    return sorted(masks)


def brute_force_t2(g: Graph, max_size: int) -> int | None:
    """Exhaustive oracle: least number of tricliques XOR-ing to E(G).

    Enumerates the distinct single-triclique edge masks (4^n vertex
    assignments) and searches combinations; meant for n <= 5 and small
    ``max_size``.
    """
    target = g.triangle_mask()
    if target == 0:
        return 0
    masks = _single_triclique_masks(g.n)
    mask_set = set(masks)
    if max_size >= 1 and target in mask_set:
        return 1
    if max_size >= 2:
        for a in masks:
            if (target ^ a) in mask_set:
                return 2

    def rec(start: int, left: int, acc: int) -> bool:
        if left == 0:
            return acc == target
        return any(rec(i + 1, left - 1, acc ^ masks[i]) for i in range(start, len(masks)))

    for size in range(3, max_size + 1):
        if rec(0, size, 0):
            return size
    return None
