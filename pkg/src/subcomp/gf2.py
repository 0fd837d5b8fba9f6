"""Dense linear algebra over GF(2) with bit-packed rows.

A matrix row is a Python int: bit j is the entry in column j. Row XOR is
then a single word-wide operation, which keeps the diagonal-enumeration
loops in :mod:`subcomp.minrank` cheap. All matrices are values: operations
never mutate their inputs.

The two structural factorizations live here:

* ``congruence_decompose`` writes a symmetric matrix as X * D * X^T where
  D is a block diagonal of 1x1 unit blocks and 2x2 hyperbolic blocks
  (zero diagonal, ones off it).
* ``gram_factor`` writes a symmetric matrix as X * X^T, with X either
  rank-many columns wide (some diagonal entry is 1) or one column wider
  with every row of even weight (all-zero diagonal).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence


class NotSymmetric(ValueError):
    """Raised when an operation requiring a symmetric matrix gets another."""


class NoUnitBlock(ValueError):
    """Raised by merge_unit_hyperbolic when no unit block is available."""


def _mask_ok(rows: Sequence[int], ncols: int) -> bool:
    limit = 1 << ncols
    return all(0 <= r < limit for r in rows)


@dataclass(frozen=True)
class BitMatrix:
    """Matrix over GF(2); ``rows[i]`` has bit j set iff entry (i, j) is 1."""

    rows: tuple[int, ...]
    ncols: int

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        if self.ncols < 0 or not _mask_ok(self.rows, self.ncols):
            raise ValueError("row bits outside declared column range")

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]], ncols: int | None = None) -> "BitMatrix":
        if ncols is None:
            ncols = len(entries[0]) if entries else 0
        rows = []
        for row in entries:
            if len(row) != ncols:
                raise ValueError("ragged rows")
            rows.append(sum((1 << j) for j, e in enumerate(row) if e & 1))
        return cls(tuple(rows), ncols)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "BitMatrix":
        return cls((0,) * nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(tuple(1 << i for i in range(n)), n)

    @classmethod
    def from_columns(cls, cols: Sequence[int], nrows: int) -> "BitMatrix":
        rows = [0] * nrows
        for j, col in enumerate(cols):
            if col >> nrows:
                raise ValueError("column bits outside row range")
            for i in range(nrows):
                if (col >> i) & 1:
                    rows[i] |= 1 << j
        return cls(tuple(rows), len(cols))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def column(self, j: int) -> int:
        """Column j as a bitmask over row indices."""
        out = 0
        for i, r in enumerate(self.rows):
            out |= ((r >> j) & 1) << i
        return out

    def columns(self) -> list[int]:
        return [self.column(j) for j in range(self.ncols)]

    def diagonal(self) -> int:
        """Bitmask whose bit i is entry (i, i)."""
        out = 0
        for i, r in enumerate(self.rows):
            out |= ((r >> i) & 1) << i
        return out

    def transpose(self) -> "BitMatrix":
        return BitMatrix(tuple(self.column(j) for j in range(self.ncols)), self.nrows)

    def mul(self, other: "BitMatrix") -> "BitMatrix":
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch")
        out = []
        for r in self.rows:
            acc = 0
            rr = r
            while rr:
                j = (rr & -rr).bit_length() - 1
                acc ^= other.rows[j]
                rr &= rr - 1
            out.append(acc)
        return BitMatrix(tuple(out), other.ncols)

    def gram(self) -> "BitMatrix":
        """self * self^T; entry (i, j) is the parity of <row i, row j>."""
        n = self.nrows
        out = []
        for i in range(n):
            acc = 0
            ri = self.rows[i]
            for j in range(n):
                acc |= ((ri & self.rows[j]).bit_count() & 1) << j
            out.append(acc)
        return BitMatrix(tuple(out), n)

    def xor(self, other: "BitMatrix") -> "BitMatrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("dimension mismatch")
        return BitMatrix(tuple(a ^ b for a, b in zip(self.rows, other.rows)), self.ncols)

    def is_symmetric(self) -> bool:
        if self.nrows != self.ncols:
            return False
        return all(self.entry(i, j) == self.entry(j, i) for i in range(self.nrows) for j in range(i))

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.rows]


def rank_rows(rows: Iterable[int], limit: int | None = None) -> int:
    """GF(2) rank of bitmask rows.

    ``limit`` aborts elimination once the rank reaches it; callers that only
    need "is the rank below my current best" use this to skip work.
    """
    pivots: dict[int, int] = {}
    rank = 0
    for r in rows:
        while r:
            b = r.bit_length() - 1
            p = pivots.get(b)
            if p is None:
                pivots[b] = r
                rank += 1
                if limit is not None and rank >= limit:
                    return rank
                break
            r ^= p
    return rank


def rank_gf2(m: BitMatrix) -> int:
    """Row rank of ``m`` over GF(2); pure, the input is untouched."""
    return rank_rows(m.rows)


class BlockKind(enum.Enum):
    UNIT = 1        # the 1x1 block [1]
    HYPERBOLIC = 2  # the 2x2 block with zero diagonal, ones off it

    @property
    def size(self) -> int:
        return self.value


@dataclass(frozen=True)
class CongruenceDecomposition:
    """target = generator * D * generator^T, D block diagonal per ``blocks``.

    The generator is n x rank with full column rank; unit blocks take one
    generator column, hyperbolic blocks two consecutive ones.
    """

    generator: BitMatrix
    blocks: tuple[BlockKind, ...]
    rank: int

    def block_diagonal(self) -> BitMatrix:
        rows = []
        pos = 0
        for b in self.blocks:
            if b is BlockKind.UNIT:
                rows.append(1 << pos)
                pos += 1
            else:
                rows.append(1 << (pos + 1))
                rows.append(1 << pos)
                pos += 2
        return BitMatrix(tuple(rows), pos)

    def reconstruct(self) -> BitMatrix:
        x = self.generator
        return x.mul(self.block_diagonal()).mul(x.transpose())


class GramCase(enum.Enum):
    TIGHT = "tight"  # factor has exactly rank columns
    EVEN = "even"    # rank+1 columns, every factor row of even weight


@dataclass(frozen=True)
class GramFactorization:
    """target = factor * factor^T over GF(2)."""

    factor: BitMatrix
    case: GramCase
    rank: int

    def reconstruct(self) -> BitMatrix:
        return self.factor.gram()


def _require_symmetric(a: BitMatrix) -> None:
    if not a.is_symmetric():
        raise NotSymmetric("matrix is not symmetric")


def congruence_decompose(a: BitMatrix) -> CongruenceDecomposition:
    """Symmetric congruence decomposition by pivoting.

    Pivot order: the lowest-index nonzero diagonal entry hosts a unit
    pivot; only when the working diagonal is entirely zero does the
    lexicographically first off-diagonal 1 host a hyperbolic pivot. Unit
    steps may re-light the diagonal, hyperbolic steps never do, so pivots
    come in a unit run followed by a hyperbolic run; if the input diagonal
    was nonzero the trailing hyperbolic blocks are merged away, so the
    output is all-unit exactly when some diagonal entry of ``a`` is 1.
    """
    _require_symmetric(a)
    n = a.nrows
    work = list(a.rows)
    cols: list[int] = []
    blocks: list[BlockKind] = []
    while any(work):
        i = next((v for v in range(n) if (work[v] >> v) & 1), None)
        if i is not None:
            c = work[i]
            cols.append(c)
            blocks.append(BlockKind.UNIT)
            cc = c
            while cc:
                v = (cc & -cc).bit_length() - 1
                work[v] ^= c
                cc &= cc - 1
        else:
            i = next(v for v in range(n) if work[v])
            j = (work[i] & -work[i]).bit_length() - 1
            u, w = work[i], work[j]
            # column j first: H2 itself then decomposes with the identity generator
            cols.append(w)
            cols.append(u)
            blocks.append(BlockKind.HYPERBOLIC)
            for v in range(n):
                delta = 0
                if (u >> v) & 1:
                    delta ^= w
                if (w >> v) & 1:
                    delta ^= u
                work[v] ^= delta
    rank = len(cols)
    dec = CongruenceDecomposition(BitMatrix.from_columns(cols, n), tuple(blocks), rank)
    if a.diagonal() and BlockKind.HYPERBOLIC in dec.blocks:
        dec = merge_unit_hyperbolic(dec)
    return dec


# Change of basis sending diag(1) (+) H2 to the 3x3 identity, and its
# inverse; checked below at import.
_MERGE = ((1, 1, 0), (1, 0, 1), (1, 1, 1))
_MERGE_INV = ((1, 1, 1), (0, 1, 1), (1, 0, 1))


def _check_merge_matrix() -> None:
    p = BitMatrix.from_lists(_MERGE)
    pinv = BitMatrix.from_lists(_MERGE_INV)
    d3 = BitMatrix.from_lists([[1, 0, 0], [0, 0, 1], [0, 1, 0]])
    ident = BitMatrix.identity(3)
    if p.mul(d3).mul(p.transpose()) != ident or p.mul(pinv) != ident:
        raise AssertionError("merge change-of-basis self-check failed")


_check_merge_matrix()


def merge_unit_hyperbolic(dec: CongruenceDecomposition) -> CongruenceDecomposition:
    """Rewrite every unit (+) hyperbolic pair as three unit blocks.

    Needs at least one unit block; repeats until no hyperbolic block
    remains. The reconstruction is unchanged.
    """
    if BlockKind.UNIT not in dec.blocks:
        raise NoUnitBlock("decomposition has no unit block to merge with")
    n = dec.generator.nrows
    cols = dec.generator.columns()
    blocks = list(dec.blocks)
    while BlockKind.HYPERBOLIC in blocks:
        # column offset of each block
        offs = []
        pos = 0
        for b in blocks:
            offs.append(pos)
            pos += b.size
        ui = blocks.index(BlockKind.UNIT)
        hi = blocks.index(BlockKind.HYPERBOLIC)
        cu = cols[offs[ui]]
        ch1, ch2 = cols[offs[hi]], cols[offs[hi] + 1]
        x3 = (cu, ch1, ch2)
        new_cols = []
        for t in range(3):
            acc = 0
            for s in range(3):
                if _MERGE_INV[s][t]:
                    acc ^= x3[s]
            new_cols.append(acc)
        # replace the unit column by the three new ones, drop the hyperbolic pair
        del cols[offs[hi]: offs[hi] + 2]
        del blocks[hi]
        off_u = offs[ui] - (2 if hi < ui else 0)
        if hi < ui:
            ui -= 1
        cols[off_u: off_u + 1] = new_cols
        blocks[ui: ui + 1] = [BlockKind.UNIT] * 3
    return CongruenceDecomposition(BitMatrix.from_columns(cols, n), tuple(blocks), dec.rank)


def gram_factor(a: BitMatrix, flip_vertex: int | None = None) -> GramFactorization:
    """Factor a symmetric matrix as X * X^T.

    When some diagonal entry of ``a`` is 1 the factor has exactly
    rank-many columns (TIGHT). When the diagonal is all-zero and ``a`` is
    nonzero, the factor has rank+1 columns, the rank is even, and every
    factor row has even weight (EVEN); ``flip_vertex`` picks the diagonal
    entry flipped on the way there (defaults to 0). The zero matrix gets
    an n x 0 factor.
    """
    _require_symmetric(a)
    n = a.nrows
    if not any(a.rows):
        return GramFactorization(BitMatrix.zeros(n, 0), GramCase.TIGHT, 0)
    if a.diagonal():
        dec = congruence_decompose(a)
        fac = GramFactorization(dec.generator, GramCase.TIGHT, dec.rank)
    else:
        k = rank_rows(a.rows)
        v = 0 if flip_vertex is None else flip_vertex
        if not 0 <= v < n:
            raise ValueError("flip_vertex out of range")
        b_rows = list(a.rows)
        b_rows[v] ^= 1 << v
        dec = congruence_decompose(BitMatrix(tuple(b_rows), n))
        y = dec.generator
        if dec.rank == k + 1:
            # complement row v; row weights elsewhere are already even
            rows = list(y.rows)
            rows[v] ^= (1 << (k + 1)) - 1
            factor = BitMatrix(tuple(rows), k + 1)
        elif dec.rank == k:
            rows = [r | ((1 << k) if i == v else 0) for i, r in enumerate(y.rows)]
            factor = BitMatrix(tuple(rows), k + 1)
        else:
            raise AssertionError("flipping one diagonal entry moved the rank by more than one")
        fac = GramFactorization(factor, GramCase.EVEN, k)
    if fac.reconstruct() != a:
        raise AssertionError("gram factor failed to reconstruct its input")
    return fac
