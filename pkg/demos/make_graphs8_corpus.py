#!/usr/bin/env python3
"""Regenerate data/graphs8.g6: every isomorphism class on exactly 8 vertices.

Extends each of the 1044 canonical 7-vertex graphs by one new vertex with
every possible neighborhood (1044 * 128 labeled candidates), deduplicates
by canonical form, and checks the classical count 12346 before writing.
The scan tooling consumes this file to reproduce the 62 minimal forbidden
induced subgraphs for mr <= 3.

Takes a few minutes; the repository ships the output, so this only needs
rerunning if the file is lost.
"""

import argparse
import sys
import time
from pathlib import Path

from subcomp.graphs import Graph, canonical_form, emit_graph6, enumerate_nonisomorphic

EXPECTED_CLASSES_N8 = 12346


def generate() -> list[bytes]:
    reps7 = list(enumerate_nonisomorphic(7))
    certs: set[bytes] = set()
    t0 = time.time()
    for idx, base in enumerate(reps7):
        adj7 = base.adj
        for nbhd in range(1 << 7):
            adj = [row | (((nbhd >> v) & 1) << 7) for v, row in enumerate(adj7)]
            adj.append(nbhd)
            g = Graph(8, tuple(adj))
            certs.add(canonical_form(g).certificate)
        if (idx + 1) % 100 == 0:
            print(
                f"  {idx + 1}/{len(reps7)} base graphs, {len(certs)} classes, "
                f"{time.time() - t0:.0f}s",
                file=sys.stderr,
            )
    return sorted(certs)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--out",
        default=str(Path(__file__).resolve().parent.parent / "data" / "graphs8.g6"),
    )
    args = parser.parse_args()
    certs = generate()
    if len(certs) != EXPECTED_CLASSES_N8:
        print(
            f"refusing to write: found {len(certs)} classes, expected {EXPECTED_CLASSES_N8}",
            file=sys.stderr,
        )
        return 1
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "wb") as fh:
        for cert in certs:
            fh.write(cert + b"\n")
    print(f"wrote {len(certs)} graphs to {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
