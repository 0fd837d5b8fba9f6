"""Simple undirected graphs as adjacency bitmasks.

``Graph.adj[v]`` is an int whose bit u is set iff uv is an edge. Graphs
are immutable values; every operation returns a new graph. Vertex sets
are bitmasks throughout the package; JSON-facing code converts them to
sorted index lists.

Also here: the graph6 codec (short form, n <= 62), connected components,
symmetric difference, a canonical form good through n ~ 10, induced
subgraph search, and isomorph-free enumeration of all graphs on up to 7
vertices (labeled enumeration plus orbit dedup).
"""

from __future__ import annotations

import heapq
import itertools
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

import numpy as np

from .gf2 import BitMatrix

GRAPH6_MAX = 62
_ENUM_MAX = 7
_G6_HEADER = b">>graph6<<"


class MalformedGraph6(ValueError):
    """Input is not a valid short-form graph6 line."""


class TooLarge(ValueError):
    """Graph exceeds a hard size ceiling of the requested operation."""


class SizeMismatch(ValueError):
    """Two-graph operation called on graphs of different orders."""


class TooLargeForBuiltin(ValueError):
    """Built-in enumeration only covers n <= 7; larger orders come from files."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits(mask: int) -> list[int]:
    """Sorted vertex indices of a bitmask."""
    return list(_bits(mask))


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "adj", tuple(self.adj))
        if len(self.adj) != self.n:
            raise ValueError("adjacency length differs from vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError("adjacency bits outside vertex range")
            if (row >> v) & 1:
                raise ValueError("self-loop")
        for v in range(self.n):
            for u in _bits(self.adj[v]):
                if not (self.adj[u] >> v) & 1:
                    raise ValueError("adjacency not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"bad edge ({u}, {v}) for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in _bits(self.adj[v] & ((1 << v) - 1))]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def adjacency_matrix(self) -> BitMatrix:
        return BitMatrix(self.adj, self.n)

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph; vertex i of the result is the i-th smallest kept vertex."""
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        adj = [0] * len(keep)
        for v in keep:
            for u in _bits(self.adj[v]):
                if u in pos:
                    adj[pos[v]] |= 1 << pos[u]
        return Graph(len(keep), tuple(adj))

    def delete_vertex(self, v: int) -> "Graph":
        return self.induced([u for u in range(self.n) if u != v])

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Vertex v of self becomes perm[v] of the result."""
        perm = list(perm)
        adj = [0] * self.n
        for v in range(self.n):
            for u in _bits(self.adj[v]):
                adj[perm[v]] |= 1 << perm[u]
        return Graph(self.n, tuple(adj))

    def triangle_mask(self) -> int:
        """Upper-triangle edge bits in graph6 order: bit C(j,2)+i is edge (i, j)."""
        out = 0
        for j in range(1, self.n):
            out |= (self.adj[j] & ((1 << j) - 1)) << (j * (j - 1) // 2)
        return out

    @classmethod
    def from_triangle_mask(cls, n: int, mask: int) -> "Graph":
        adj = [0] * n
        for j in range(1, n):
            block = (mask >> (j * (j - 1) // 2)) & ((1 << j) - 1)
            adj[j] |= block
            for i in _bits(block):
                adj[i] |= 1 << j
        return cls(n, tuple(adj))


# ---------------------------------------------------------------------------
# named constructions

def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def wheel_graph(n: int) -> Graph:
    """Hub 0 joined to the cycle 1..n-1 (n vertices total)."""
    if n < 4:
        raise ValueError("wheels need n >= 4")
    rim = [(i, i + 1) for i in range(1, n - 1)] + [(n - 1, 1)]
    return Graph.from_edges(n, rim + [(0, i) for i in range(1, n)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    adj = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(g.n + h.n, tuple(adj))


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(u, v) for v in range(n) for u in range(v) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform labeled tree via a random Pruefer sequence."""
    if n <= 1:
        return empty_graph(n)
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u = heapq.heappop(leaves)
    w = heapq.heappop(leaves)
    edges.append((u, w))
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# graph6 codec (short form)

def parse_graph6(text: bytes | str) -> Graph:
    """Decode one short-form graph6 line (optional ">>graph6<<" header)."""
    if isinstance(text, str):
        text = text.encode("ascii", errors="replace")
    line = text.strip()
    if line.startswith(_G6_HEADER):
        line = line[len(_G6_HEADER):]
    if not line:
        raise MalformedGraph6("empty graph6 input")
    if line[0] == 126:  # '~' introduces the long form
        raise MalformedGraph6("long-form graph6 (n > 62) is not supported")
    if not all(63 <= b <= 126 for b in line):
        raise MalformedGraph6("characters outside the graph6 range 63..126")
    n = line[0] - 63
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = line[1:]
    if len(body) != need:
        raise MalformedGraph6(f"expected {need} data characters for n={n}, got {len(body)}")
    mask = 0
    pos = 0
    for b in body:
        val = b - 63
        for k in range(5, -1, -1):
            bit = (val >> k) & 1
            if pos < nbits:
                mask |= bit << pos
            elif bit:
                raise MalformedGraph6("nonzero padding bits")
            pos += 1
    return Graph.from_triangle_mask(n, mask)


def emit_graph6(g: Graph) -> bytes:
    """Canonical short-form graph6 encoding of the labeled graph."""
    if g.n > GRAPH6_MAX:
        raise TooLarge(f"graph6 short form stops at n={GRAPH6_MAX}")
    mask = g.triangle_mask()
    nbits = g.n * (g.n - 1) // 2
    out = [g.n + 63]
    for start in range(0, nbits, 6):
        val = 0
        for k in range(6):
            pos = start + k
            bit = (mask >> pos) & 1 if pos < nbits else 0
            val = (val << 1) | bit
        out.append(val + 63)
    return bytes(out)


def parse_edge_list(text: str) -> Graph:
    """Parse the "n <count>" / "u v" per line edge-list format."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "n":
        raise ValueError('edge-list input must start with a "n <count>" line')
    n = int(head[1])
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line: {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph.from_edges(n, edges)


def emit_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# structure

def symmetric_difference(g: Graph, h: Graph) -> Graph:
    """Graph on the shared vertex set whose edges lie in exactly one input."""
    if g.n != h.n:
        raise SizeMismatch(f"orders differ: {g.n} vs {h.n}")
    return Graph(g.n, tuple(a ^ b for a, b in zip(g.adj, h.adj)))


def components(g: Graph) -> list[tuple[list[int], Graph]]:
    """Connected components ordered by smallest member, with induced subgraphs."""
    seen = 0
    out = []
    for v in range(g.n):
        if (seen >> v) & 1:
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        verts = bits(comp)
        out.append((verts, g.induced(verts)))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def is_forest(g: Graph) -> bool:
    return g.m == g.n - len(components(g))


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and is_connected(g) and g.m == g.n - 1


def is_linear_forest(g: Graph) -> bool:
    """Every component a path: acyclic with maximum degree at most 2."""
    return is_forest(g) and all(g.degree(v) <= 2 for v in range(g.n))


# ---------------------------------------------------------------------------
# canonical form

@dataclass(frozen=True)
class CanonicalForm:
    """Isomorphism certificate: graph6 bytes of an extremal relabeling."""

    certificate: bytes


def _refine_cells(g: Graph) -> list[list[int]]:
    """Equitable ordered partition by iterated neighbor-color refinement."""
    colors = [g.degree(v) for v in range(g.n)]
    while True:
        keys = [
            (colors[v], tuple(sorted(colors[u] for u in _bits(g.adj[v]))))
            for v in range(g.n)
        ]
        order = {k: i for i, k in enumerate(sorted(set(keys)))}
        new = [order[k] for k in keys]
        if len(set(new)) == len(set(colors)) and new == colors:
            break
        colors = new
    cells: dict[int, list[int]] = {}
    for v in range(g.n):
        cells.setdefault(colors[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def _orderings(cells: list[list[int]]) -> Iterator[tuple[int, ...]]:
    for combo in itertools.product(*(itertools.permutations(c) for c in cells)):
        yield sum(combo, ())


_CHUNK = 4096
_SMALL_SEARCH = 512


def _triangle_key(g: Graph, order: tuple[int, ...]) -> tuple[int, ...]:
    adj = g.adj
    return tuple(
        (adj[order[i]] >> order[j]) & 1 for j in range(1, g.n) for i in range(j)
    )


def _min_triangle_over(g: Graph, orderings: Iterator[tuple[int, ...]], count: int) -> tuple[int, ...]:
    """Ordering whose triangle bitstring (msb-first) is lexicographically least."""
    if count <= _SMALL_SEARCH:
        return min(orderings, key=lambda order: _triangle_key(g, order))
    n = g.n
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    t = len(pairs)
    dense = np.zeros((n, n), dtype=np.int64)
    for v in range(n):
        for u in _bits(g.adj[v]):
            dense[v, u] = 1
    i_idx = np.array([p[0] for p in pairs])
    j_idx = np.array([p[1] for p in pairs])
    weights = 1 << np.arange(t - 1, -1, -1, dtype=np.int64) if t <= 62 else None
    best_key = None
    best_ord = None
    while True:
        chunk = list(itertools.islice(orderings, _CHUNK))
        if not chunk:
            break
        P = np.array(chunk, dtype=np.int64)
        bit_rows = dense[P[:, i_idx], P[:, j_idx]]
        if weights is not None:
            keys = bit_rows @ weights
            pos = int(np.argmin(keys))
            key = int(keys[pos])
        else:  # n > 11: compare as tuples (rare, best effort)
            tuples = [tuple(row) for row in bit_rows.tolist()]
            pos = min(range(len(tuples)), key=tuples.__getitem__)
            key = tuples[pos]
        if best_key is None or key < best_key:
            best_key = key
            best_ord = chunk[pos]
    return best_ord


def canonical_form(g: Graph) -> CanonicalForm:
    """Relabeling-invariant certificate; equal iff graphs are isomorphic.

    Refine to an equitable ordered partition, then take the
    lexicographically least adjacency bitstring over all partition-
    respecting orderings. Exact (the certificate determines the graph);
    intended scale is n <= 10.
    """
    if g.n <= 1:
        return CanonicalForm(emit_graph6(g))
    cells = _refine_cells(g)
    count = 1
    for cell in cells:
        for k in range(2, len(cell) + 1):
            count *= k
    order = _min_triangle_over(g, _orderings(cells), count)
    perm = [0] * g.n
    for new_pos, v in enumerate(order):
        perm[v] = new_pos
    return CanonicalForm(emit_graph6(g.relabel(perm)))


# ---------------------------------------------------------------------------
# induced subgraph search

def contains_induced(g: Graph, h: Graph) -> tuple[int, ...] | None:
    """Injective map V(h) -> V(g) preserving adjacency and non-adjacency.

    Returns the witness as a tuple indexed by h's vertices, or None.
    """
    if h.n > g.n:
        return None
    if h.n == 0:
        return ()
    # order h's vertices: highest degree first, then prefer neighbors of
    # already-placed vertices so candidate masks shrink early
    remaining = sorted(range(h.n), key=lambda v: -h.degree(v))
    order = [remaining.pop(0)]
    while remaining:
        placed = set(order)
        nxt = None
        for v in remaining:
            if any((h.adj[v] >> u) & 1 for u in placed):
                nxt = v
                break
        if nxt is None:
            nxt = remaining[0]
        remaining.remove(nxt)
        order.append(nxt)
    full = (1 << g.n) - 1
    gdeg = [g.degree(v) for v in range(g.n)]
    hdeg = [h.degree(v) for v in range(h.n)]
    assignment: dict[int, int] = {}

    def backtrack(depth: int) -> bool:
        if depth == len(order):
            return True
        hu = order[depth]
        cand = full
        for placed_h, placed_g in assignment.items():
            cand &= ~(1 << placed_g)
            if (h.adj[hu] >> placed_h) & 1:
                cand &= g.adj[placed_g]
            else:
                cand &= ~g.adj[placed_g]
        for w in _bits(cand):
            if gdeg[w] < hdeg[hu]:
                continue
            assignment[hu] = w
            if backtrack(depth + 1):
                return True
            del assignment[hu]
        return False

    if backtrack(0):
        return tuple(assignment[v] for v in range(h.n))
    return None


# ---------------------------------------------------------------------------
# isomorph-free enumeration, n <= 7

@lru_cache(maxsize=None)
def _pair_permutations(n: int) -> np.ndarray:
    """For each vertex permutation, where each triangle bit comes from."""
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    pos = {p: t for t, p in enumerate(pairs)}
    perms = list(itertools.permutations(range(n)))
    table = np.empty((len(perms), len(pairs)), dtype=np.int64)
    for r, sigma in enumerate(perms):
        for t, (i, j) in enumerate(pairs):
            a, b = sigma[i], sigma[j]
            table[r, t] = pos[(a, b) if a < b else (b, a)]
    return table


@lru_cache(maxsize=None)
def _noniso_masks(n: int) -> tuple[int, ...]:
    if n <= 1:
        return (0,)
    t = n * (n - 1) // 2
    table = _pair_permutations(n)
    weights = (1 << np.arange(t, dtype=np.int64))
    seen = bytearray(1 << t)
    reps = []
    for mask in range(1 << t):
        if seen[mask]:
            continue
        reps.append(mask)
        mbits = np.fromiter(((mask >> k) & 1 for k in range(t)), dtype=np.int64, count=t)
        orbit = (mbits[table] * weights).sum(axis=1)
        for val in np.unique(orbit).tolist():
            seen[val] = 1
    return tuple(reps)


def enumerate_nonisomorphic(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class, ascending triangle mask."""
    if n > _ENUM_MAX:
        raise TooLargeForBuiltin(
            f"built-in enumeration stops at n={_ENUM_MAX}; feed larger orders from graph6 files"
        )
    for mask in _noniso_masks(n):
        yield Graph.from_triangle_mask(n, mask)


def count_nonisomorphic(n: int) -> int:
    return len(_noniso_masks(n))


def enumerate_trees(n: int) -> list[Graph]:
    """All trees on n vertices up to isomorphism, by leaf extension."""
    if n == 0:
        return [empty_graph(0)]
    level = [empty_graph(1)]
    for size in range(2, n + 1):
        seen = {}
        for t in level:
            for v in range(t.n):
                bigger = Graph.from_edges(size, t.edges() + [(v, size - 1)])
                cert = canonical_form(bigger)
                if cert not in seen:
                    seen[cert] = bigger
        level = list(seen.values())
    return level
