"""Forbidden-induced-subgraph catalogs and minimal-obstruction search.

The class {c2 <= k} is hereditary, so it is cut out by its minimal
forbidden induced subgraphs. Catalog A lists the eight minimal
obstructions for c2 <= 2, catalog B the seven for mr <= 2 (they share
five members; K_{3,3} and W_5 sit only on the c2 side, the join of two
paths only on the mr side). For c2 <= 1 the obstructions are P_3 and
2K_2: those graphs are exactly one clique plus isolated vertices.

Catalog edge lists are fixed here and cross-checked lazily (each member
must sit exactly on its class boundary) instead of being trusted.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from .graphs import CanonicalForm, Graph, TooLarge, canonical_form, contains_induced
from .minrank import DEFAULT_CEILING, min_rank_f2
from .systems import c2_value


def _g(n: int, edges: list[tuple[int, int]]) -> Graph:
    return Graph.from_edges(n, edges)


CATALOG: dict[str, Graph] = {
    "P4": _g(4, [(0, 1), (1, 2), (2, 3)]),
    "P3+K2": _g(5, [(0, 1), (1, 2), (3, 4)]),
    "3K2": _g(6, [(0, 1), (2, 3), (4, 5)]),
    "full-house": _g(5, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (0, 1), (0, 4)]),
    "dart": _g(5, [(0, 1), (1, 2), (0, 3), (1, 3), (1, 4), (0, 4)]),
    "cricket": _g(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4)]),
    "K3,3": _g(6, [(i, 3 + j) for i in range(3) for j in range(3)]),
    "W5": _g(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (4, 1)]),
    "P3|P3": _g(6, [(0, 1), (1, 2), (3, 4), (4, 5)] + [(i, 3 + j) for i in range(3) for j in range(3)]),
}

SET_A = ("P4", "P3+K2", "3K2", "full-house", "dart", "cricket", "K3,3", "W5")
SET_B = ("P4", "P3+K2", "3K2", "full-house", "dart", "cricket", "P3|P3")

_LE1 = {
    "P3": _g(3, [(0, 1), (1, 2)]),
    "2K2": _g(4, [(0, 1), (2, 3)]),
}


@lru_cache(maxsize=1)
def catalog_self_check() -> bool:
    """Boundary check: set-A members have c2 = 3, set-B members mr = 3."""
    for name in SET_A:
        if c2_value(CATALOG[name]) != 3:
            raise AssertionError(f"catalog graph {name} is not on the c2 <= 2 boundary")
    for name in SET_B:
        if min_rank_f2(CATALOG[name]).mr != 3:
            raise AssertionError(f"catalog graph {name} is not on the mr <= 2 boundary")
    return True


def _find_witness(g: Graph, names: Iterable[str], source: dict[str, Graph]):
    for name in names:
        hit = contains_induced(g, source[name])
        if hit is not None:
            return name, hit
    return None


def c2_le2_witness(g: Graph) -> tuple[str, tuple[int, ...]] | None:
    """An induced set-A member (name, embedding), or None when c2(g) <= 2."""
    catalog_self_check()
    return _find_witness(g, SET_A, CATALOG)


def classify_c2_le2(g: Graph) -> bool:
    """True iff g is free of all eight set-A graphs, i.e. c2(g) <= 2."""
    return c2_le2_witness(g) is None


def mr_le2_witness(g: Graph) -> tuple[str, tuple[int, ...]] | None:
    catalog_self_check()
    return _find_witness(g, SET_B, CATALOG)


def classify_mr_le2(g: Graph) -> bool:
    """True iff g is free of all seven set-B graphs, i.e. mr(g) <= 2."""
    return mr_le2_witness(g) is None


def classify_c2_le1(g: Graph) -> bool:
    """True iff g is {P3, 2K2}-free: a single clique plus isolated vertices."""
    return all(contains_induced(g, h) is None for h in _LE1.values())


def _invariant_fn(invariant: str, ceiling: int):
    if invariant == "c2":
        return lambda g: c2_value(g, ceiling)
    if invariant == "mr":
        return lambda g: min_rank_f2(g, ceiling).mr
    raise ValueError(f"unknown invariant {invariant!r}; expected 'c2' or 'mr'")


def find_minimal_forbidden(
    graphs: Iterable[Graph],
    invariant: str,
    k: int,
    ceiling: int = DEFAULT_CEILING,
    skipped: list[Graph] | None = None,
) -> list[tuple[CanonicalForm, Graph]]:
    """Minimal forbidden induced subgraphs for {invariant <= k} in the stream.

    A graph qualifies when its invariant exceeds k but every single-vertex
    deletion drops to k or below. Results are deduplicated by canonical
    form and ordered by (order, certificate). Graphs beyond the rank
    ceiling go to ``skipped`` (when given) and are left out.
    """
    fn = _invariant_fn(invariant, ceiling)
    found: dict[bytes, Graph] = {}
    for g in graphs:
        try:
            if fn(g) <= k:
                continue
            if any(fn(g.delete_vertex(v)) > k for v in range(g.n)):
                continue
        except TooLarge:
            if skipped is not None:
                skipped.append(g)
            continue
        cert = canonical_form(g)
        found.setdefault(cert.certificate, g)
    ordered = sorted(found.items(), key=lambda kv: (kv[1].n, kv[0]))
    return [(CanonicalForm(cert), g) for cert, g in ordered]
