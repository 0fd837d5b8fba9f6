"""Subgraph complementation systems and the invariant c2.

A system is an ordered list of vertex subsets; it represents a graph when
every adjacent pair lies in an odd number of subsets and every
non-adjacent pair in an even number. c2(G) is the least possible number
of subsets.

Verification works on pair parities packed into one big int: a subset S
toggles exactly the pairs inside S, so a system is valid iff its subsets'
pair masks XOR to the graph's edge mask.

The exact value rides on :mod:`subcomp.minrank`: c2 = mr except for
exceptional graphs (adjacency matrix the unique minimum-rank fitting
matrix), where c2 = mr + 1. The certificate comes from a Gram
factorization X * X^T of a minimum-rank fitting matrix with a nonzero
diagonal (exceptional case: the adjacency matrix with one diagonal entry
flipped, whose rank is mr + 1); the columns of X are the subsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .gf2 import BitMatrix, GramCase, gram_factor
from .graphs import Graph, SizeMismatch, bits, symmetric_difference
from .minrank import DEFAULT_CEILING, EmptyGraph, is_exceptional, min_rank_f2


class VertexOutOfRange(ValueError):
    pass


@dataclass(frozen=True)
class ComplementationSystem:
    """Vertex subsets stored as bitmasks over 0..n-1, in order."""

    n: int
    sets: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "sets", tuple(self.sets))
        full = (1 << self.n) - 1
        for s in self.sets:
            if s & ~full:
                raise VertexOutOfRange("set contains vertices outside 0..n-1")

    @classmethod
    def from_sets(cls, n: int, subsets) -> "ComplementationSystem":
        masks = []
        for s in subsets:
            masks.append(sum(1 << v for v in set(s)))
        return cls(n, tuple(masks))

    def as_lists(self) -> list[list[int]]:
        return [bits(s) for s in self.sets]

    def __len__(self) -> int:
        return len(self.sets)


def _pairs_within(mask: int) -> int:
    """Pair bits (graph6 triangle order) of all pairs inside a vertex mask."""
    out = 0
    mm = mask
    while mm:
        j = (mm & -mm).bit_length() - 1
        below = mask & ((1 << j) - 1)
        out |= below << (j * (j - 1) // 2)
        mm &= mm - 1
    return out


def _pair_from_bit(t: int) -> tuple[int, int]:
    j = 1
    while (j + 1) * j // 2 <= t:
        j += 1
    return t - j * (j - 1) // 2, j


def system_violations(g: Graph, c: ComplementationSystem) -> list[tuple[int, int, int, bool]]:
    """Pairs with wrong parity, as (u, v, times together, should be odd)."""
    if c.n != g.n:
        raise SizeMismatch(f"system on {c.n} vertices vs graph on {g.n}")
    acc = 0
    for s in c.sets:
        acc ^= _pairs_within(s)
    bad = acc ^ g.triangle_mask()
    out = []
    t = 0
    while bad:
        if bad & 1:
            u, v = _pair_from_bit(t)
            count = sum(1 for s in c.sets if (s >> u) & 1 and (s >> v) & 1)
            out.append((u, v, count, g.has_edge(u, v)))
        bad >>= 1
        t += 1
    return out


def verify_system(g: Graph, c: ComplementationSystem) -> bool:
    """True iff every pair's parity matches adjacency. Empty/singleton sets are no-ops."""
    if c.n != g.n:
        raise SizeMismatch(f"system on {c.n} vertices vs graph on {g.n}")
    acc = 0
    for s in c.sets:
        acc ^= _pairs_within(s)
    return acc == g.triangle_mask()


def symdiff_transform(c: ComplementationSystem, v: int) -> ComplementationSystem:
    """Replace every set C by C symmetric-difference {v}. An involution."""
    if not 0 <= v < c.n:
        raise VertexOutOfRange(f"vertex {v} not in 0..{c.n - 1}")
    return ComplementationSystem(c.n, tuple(s ^ (1 << v) for s in c.sets))


def appearance_parity(c: ComplementationSystem) -> tuple[int, ...]:
    """Bit v: parity of the number of sets containing v."""
    acc = 0
    for s in c.sets:
        acc ^= s
    return tuple((acc >> v) & 1 for v in range(c.n))


@dataclass(frozen=True)
class C2Result:
    c2: int
    mr: int
    exceptional: bool
    system: ComplementationSystem


def _fitting_matrix(g: Graph, diag: tuple[int, ...]) -> BitMatrix:
    return BitMatrix(
        tuple(row | (bit << v) for v, (row, bit) in enumerate(zip(g.adj, diag))), g.n
    )


def _sorted_system(n: int, masks: list[int]) -> ComplementationSystem:
    ordered = sorted(masks, key=lambda m: (m.bit_count(), bits(m)))
    return ComplementationSystem(n, tuple(ordered))


def c2(g: Graph, ceiling: int = DEFAULT_CEILING) -> C2Result:
    """Exact c2 with a verified minimum system.

    Non-exceptional graphs: Gram-factor the minimum-rank fitting matrix
    given by the enumeration witness (nonzero diagonal, so the factor has
    mr columns). Exceptional graphs: flip the diagonal entry of the
    lowest-indexed maximum-degree vertex of the adjacency matrix; the
    result has rank mr + 1 and a one-wider factor. Factor columns are the
    subsets, emitted sorted by (size, members).
    """
    if g.m == 0:
        return C2Result(0, 0, False, ComplementationSystem(g.n, ()))
    res = min_rank_f2(g, ceiling)
    exceptional = res.rank_adjacency < res.best_nonzero_diag_rank
    if exceptional:
        max_deg = max(g.degree(v) for v in range(g.n))
        v = next(u for u in range(g.n) if g.degree(u) == max_deg)
        rows = list(g.adj)
        rows[v] |= 1 << v
        fac = gram_factor(BitMatrix(tuple(rows), g.n))
        assert fac.case is GramCase.TIGHT and fac.rank == res.mr + 1
    else:
        assert any(res.witness), "non-exceptional graph must admit a nonzero-diagonal witness"
        fac = gram_factor(_fitting_matrix(g, res.witness))
        assert fac.case is GramCase.TIGHT and fac.rank == res.mr
    masks = fac.factor.columns()
    assert all(m.bit_count() >= 2 for m in masks), "minimum factor cannot contain no-op sets"
    system = _sorted_system(g.n, masks)
    assert verify_system(g, system)
    return C2Result(len(system), res.mr, exceptional, system)


def c2_value(g: Graph, ceiling: int = DEFAULT_CEILING) -> int:
    """c2 without building the certificate (cheaper for bulk scans)."""
    if g.m == 0:
        return 0
    res = min_rank_f2(g, ceiling)
    return res.mr + (1 if res.rank_adjacency < res.best_nonzero_diag_rank else 0)


def distance(g: Graph, h: Graph, ceiling: int = DEFAULT_CEILING) -> int:
    """Minimum subgraph complementations turning h into g: c2 of their symmetric difference."""
    return c2(symmetric_difference(g, h), ceiling).c2


def brute_force_c2(
    g: Graph, max_size: int
) -> tuple[int, ComplementationSystem] | None:
    """Exhaustive oracle: scan strictly increasing tuples of distinct subsets.

    Only subsets of size >= 2 matter (smaller ones toggle no pair), and
    duplicate sets cancel, so distinct-subset search is exhaustive. Returns
    the first verified system by (cardinality, lexicographic) order, or
    None if nothing verifies within ``max_size`` sets.
    """
    target = g.triangle_mask()
    if target == 0:
        return 0, ComplementationSystem(g.n, ())
    masks = [m for m in range(1 << g.n) if m.bit_count() >= 2]
    pms = [_pairs_within(m) for m in masks]
    for size in range(1, max_size + 1):
        chosen: list[int] = []

        def rec(start: int, left: int, acc: int) -> bool:
            if left == 0:
                return acc == target
            for i in range(start, len(pms) - left + 1):
                chosen.append(i)
                if rec(i + 1, left - 1, acc ^ pms[i]):
                    return True
                chosen.pop()
            return False

        if rec(0, size, 0):
            return size, ComplementationSystem(g.n, tuple(masks[i] for i in chosen))
    return None


def enumerate_minimum_systems(g: Graph, max_size: int | None = None) -> list[ComplementationSystem]:
    """All minimum systems over distinct subsets of size >= 2. Small n only."""
    if max_size is None:
        max_size = max(g.n - 1, 1)
    found = brute_force_c2(g, max_size)
    if found is None:
        return []
    size = found[0]
    if size == 0:
        return [ComplementationSystem(g.n, ())]
    target = g.triangle_mask()
    masks = [m for m in range(1 << g.n) if m.bit_count() >= 2]
    pms = [_pairs_within(m) for m in masks]
    out = []
    for combo in combinations(range(len(masks)), size):
        acc = 0
        for i in combo:
            acc ^= pms[i]
        if acc == target:
            out.append(ComplementationSystem(g.n, tuple(masks[i] for i in combo)))
    return out


def has_even_minimum_system(g: Graph, ceiling: int = DEFAULT_CEILING) -> bool:
    """True iff some minimum system has every vertex appearing an even number of times.

    Equivalent to the graph being exceptional; computed through minrank.
    """
    if g.m == 0:
        raise EmptyGraph("defined for graphs with at least one edge")
    return is_exceptional(g, ceiling)
