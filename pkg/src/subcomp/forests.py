"""Exact polynomial-time c2 for forests.

For a forest, c2 equals n minus the path cover number p (minimum number of
vertex-disjoint induced paths covering the vertices). p comes from a
leaf-up tree DP. The witness system generalizes the classical
construction: choose a hub set K of vertices, emit a pair set {u, w} for
every tree edge avoiding K, and for each hub v_i (ascending) the residual
neighborhoods N(v_i) and N[v_i] minus earlier hubs. A tree-wide parity
case analysis shows any hub set yields a valid system of size
(n - 1) - e(K) + 2|K|, where e(K) counts edges meeting K; a second DP
maximizes e(K) - 2|K|, whose optimum p - 1 makes the system size exactly
n - p. (Taking K = all degree->=3 vertices, which matches the textbook
construction, is not always optimal: in the spider of stars - a center
joined to three centers of stars - the all-high choice overshoots by 2,
while dropping the middle vertex from K is exact.)

tree_path_cover prefers covers in which every path holds at most one
degree->=3 vertex, never as an endpoint; such covers do not always exist
(the same spider of stars), in which case a plain minimum cover is
returned. ``cover_is_structural`` tests the property.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, bits, components, is_forest, is_tree
from .systems import ComplementationSystem, _sorted_system, c2, verify_system

_BIG = 1 << 40


class NotAForest(ValueError):
    pass


class NotATree(ValueError):
    pass


@dataclass(frozen=True)
class PathCover:
    """Vertex-disjoint induced paths covering all vertices, as vertex sequences."""

    paths: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.paths)


def _rooted(adj: tuple[int, ...], root: int) -> tuple[list[int], dict[int, list[int]]]:
    """Postorder vertex list and children (ascending) of the tree rooted at root."""
    parent = {root: -1}
    order = [root]
    queue = [root]
    children: dict[int, list[int]] = {v: [] for v in range(len(adj))}
    while queue:
        v = queue.pop(0)
        for u in bits(adj[v]):
            if u not in parent:
                parent[u] = v
                children[v].append(u)
                order.append(u)
                queue.append(u)
    order.reverse()
    return order, children


def _path_dp(adj: tuple[int, ...], highs: int):
    """Minimum path cover of a tree, optionally structural.

    States per vertex: T (everything settled), O0 (open path at v, no
    high vertex in it), O1 (open path at v containing one high vertex).
    A high vertex's own open path is only O1 and never terminable, which
    forbids high endpoints and singleton high paths; joins allow at most
    one high per path. With ``highs == 0`` this is the plain DP.
    Returns (value, reconstruct() -> list of paths).
    """
    n = len(adj)
    root = 0
    order, children = _rooted(adj, root)
    T: dict[int, int] = {}
    O0: dict[int, int] = {}
    O1: dict[int, int] = {}
    CL: dict[int, int] = {}
    choice: dict[int, dict] = {}

    for v in order:
        ch = children[v]
        high = (highs >> v) & 1
        sum_t = sum(T[c] for c in ch)
        dec: dict = {}
        d0 = {c: O0[c] - T[c] for c in ch}
        d1 = {c: O1[c] - T[c] for c in ch}

        def best_pair(allow_one_high: bool):
            val, pick = _BIG, None
            for a in range(len(ch)):
                for b in range(a + 1, len(ch)):
                    j, k = ch[a], ch[b]
                    cands = [(d0[j] + d0[k], (j, "O0", k, "O0"))]
                    if allow_one_high:
                        cands.append((d0[j] + d1[k], (j, "O0", k, "O1")))
                        cands.append((d1[j] + d0[k], (j, "O1", k, "O0")))
                    for cv, cp in cands:
                        if cv < val:
                            val, pick = cv, cp
            return val, pick

        if high:
            o0 = _BIG
            o1, o1c = 1 + sum_t, ("new",)
            for c in ch:
                if sum_t + d0[c] < o1:
                    o1, o1c = sum_t + d0[c], ("ext", c, "O0")
            pv, pc = best_pair(allow_one_high=False)
            cl = sum_t - 1 + pv if pc else _BIG
            dec["O1"], dec["CL"] = o1c, ("join",) + pc if pc else None
            t, tc = cl, "CL"
        else:
            o0, o0c = 1 + sum_t, ("new",)
            for c in ch:
                if sum_t + d0[c] < o0:
                    o0, o0c = sum_t + d0[c], ("ext", c, "O0")
            o1, o1c = _BIG, None
            for c in ch:
                if sum_t + d1[c] < o1:
                    o1, o1c = sum_t + d1[c], ("ext", c, "O1")
            pv, pc = best_pair(allow_one_high=True)
            cl = sum_t - 1 + pv if pc else _BIG
            dec["O0"], dec["O1"] = o0c, o1c
            dec["CL"] = ("join",) + pc if pc else None
            t, tc = o0, "O0"
            if o1 < t:
                t, tc = o1, "O1"
            if cl < t:
                t, tc = cl, "CL"
        O0[v], O1[v], CL[v] = min(o0, _BIG), min(o1, _BIG), min(cl, _BIG)
        T[v] = min(t, _BIG)
        dec["T"] = tc
        choice[v] = dec

    def recon_t(v: int) -> list[list[int]]:
        closed, open_path = recon(v, choice[v]["T"])
        if open_path is not None:
            closed.append(open_path)
        return closed

    def recon(v: int, state: str):
        ch = children[v]
        if state == "CL":
            _, j, sj, k, sk = choice[v]["CL"]
            cj, oj = recon(j, sj)
            ck, ok = recon(k, sk)
            path = oj + [v] + ok[::-1]
            rest = [p for c in ch if c not in (j, k) for p in recon_t(c)]
            return cj + ck + rest + [path], None
        d = choice[v][state]
        if d[0] == "new":
            return [p for c in ch for p in recon_t(c)], [v]
        _, c, cs = d
        cc, oc = recon(c, cs)
        rest = [p for other in ch if other != c for p in recon_t(other)]
        return cc + rest, oc + [v]

    value = T[root]

    def reconstruct() -> list[list[int]]:
        return recon_t(root)

    return value, reconstruct


def _high_mask(adj: tuple[int, ...]) -> int:
    return sum(1 << v for v in range(len(adj)) if adj[v].bit_count() >= 3)


def _tree_p(adj: tuple[int, ...]) -> int:
    value, _ = _path_dp(adj, 0)
    return value


def path_cover_number(f: Graph) -> int:
    """Exact p(F): minimum vertex-disjoint induced paths covering V, per tree."""
    if not is_forest(f):
        raise NotAForest("path cover DP needs an acyclic input")
    return sum(_tree_p(sub.adj) for _, sub in components(f))


def tree_path_cover(t: Graph) -> PathCover:
    """A minimum path cover of a tree, structural when one exists.

    Structural: every path holds at most one vertex of tree-degree >= 3
    and no such vertex is a path endpoint. Some trees admit no structural
    minimum cover (spider of stars); those get a plain minimum cover.
    """
    if not is_tree(t):
        raise NotATree("expected a connected acyclic graph")
    p, recon_plain = _path_dp(t.adj, 0)
    value, recon_struct = _path_dp(t.adj, _high_mask(t.adj))
    paths = recon_struct() if value == p else recon_plain()
    cover = PathCover(tuple(tuple(path) for path in paths))
    assert cover_is_valid(t, cover) and len(cover) == p
    return cover


def forest_path_cover(f: Graph) -> PathCover:
    if not is_forest(f):
        raise NotAForest("expected an acyclic input")
    paths = []
    for verts, sub in components(f):
        sub_cover = tree_path_cover(sub) if sub.n > 1 else PathCover(((0,),))
        for path in sub_cover.paths:
            paths.append(tuple(verts[v] for v in path))
    return PathCover(tuple(paths))


def cover_is_valid(g: Graph, cover: PathCover) -> bool:
    """Disjoint induced paths covering every vertex."""
    seen = 0
    for path in cover.paths:
        mask = sum(1 << v for v in path)
        if mask & seen or mask.bit_count() != len(path):
            return False
        seen |= mask
        for i, v in enumerate(path):
            for j in range(i + 1, len(path)):
                if g.has_edge(v, path[j]) != (j == i + 1):
                    return False
    return seen == (1 << g.n) - 1


def cover_is_structural(g: Graph, cover: PathCover) -> bool:
    """At most one degree->=3 vertex per path, and never at an endpoint."""
    for path in cover.paths:
        high = [v for v in path if g.degree(v) >= 3]
        if len(high) > 1:
            return False
        if high and (path[0] in high or path[-1] in high):
            return False
    return True


def _hub_dp(adj: tuple[int, ...]) -> tuple[int, int]:
    """Maximize e(K) - 2|K| over vertex sets K of a tree.

    e(K) counts edges with at least one end in K. Ties prefer leaving
    vertices out. Returns (K as bitmask, optimum).
    """
    root = 0
    order, children = _rooted(adj, root)
    dp: dict[int, tuple[int, int]] = {}
    for v in order:
        vals = []
        for s in (0, 1):
            acc = -2 * s
            for c in children[v]:
                acc += max(dp[c][1] + 1, dp[c][0] + s)
            vals.append(acc)
        dp[v] = (vals[0], vals[1])
    mask = 0
    stack = [(root, 1 if dp[root][1] > dp[root][0] else 0)]
    while stack:
        v, s = stack.pop()
        if s:
            mask |= 1 << v
        for c in children[v]:
            sc = 1 if dp[c][1] + 1 > dp[c][0] + s else 0
            stack.append((c, sc))
    return mask, max(dp[root])


def forest_system(f: Graph) -> ComplementationSystem:
    """A verified minimum system for a forest: size |F| - p(F).

    Per tree: pick the hub set K from the DP above, emit {u, w} for each
    tree edge avoiding K and the residual neighborhoods N(v_i), N[v_i]
    minus earlier hubs for each hub in ascending order. Should the hub
    optimum ever miss p - 1 (never observed), the tree falls back to the
    generic exact builder.
    """
    if not is_forest(f):
        raise NotAForest("expected an acyclic input")
    all_sets: list[int] = []
    for verts, sub in components(f):
        if sub.n == 1:
            continue
        p = _tree_p(sub.adj)
        k_mask, fval = _hub_dp(sub.adj)
        if fval != p - 1:  # pragma: no cover - safety net, see module docstring
            for s in c2(sub).system.sets:
                all_sets.append(sum(1 << verts[v] for v in bits(s)))
            continue
        tree_sets: list[int] = []
        for u, w in sub.edges():
            if not ((k_mask >> u) & 1 or (k_mask >> w) & 1):
                tree_sets.append((1 << u) | (1 << w))
        prev = 0
        for v in bits(k_mask):
            open_ = sub.adj[v] & ~prev
            closed = (sub.adj[v] | (1 << v)) & ~prev
            assert open_.bit_count() >= 2 and closed.bit_count() >= 2
            tree_sets += [open_, closed]
            prev |= 1 << v
        assert len(tree_sets) == sub.n - p
        for s in tree_sets:
            all_sets.append(sum(1 << verts[v] for v in bits(s)))
    system = _sorted_system(f.n, all_sets)
    assert verify_system(f, system)
    return system
