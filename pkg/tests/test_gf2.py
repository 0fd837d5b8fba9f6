import random

import pytest

from subcomp.gf2 import (
    BitMatrix,
    BlockKind,
    CongruenceDecomposition,
    GramCase,
    NoUnitBlock,
    NotSymmetric,
    congruence_decompose,
    gram_factor,
    merge_unit_hyperbolic,
    rank_gf2,
)
from subcomp.graphs import complete_bipartite, path_graph, wheel_graph

from helpers import rank_mod2_dense
import numpy as np

H2 = BitMatrix.from_lists([[0, 1], [1, 0]])


def random_symmetric(n, rng):
    rows = [0] * n
    for i in range(n):
        if rng.random() < 0.5:
            rows[i] |= 1 << i
        for j in range(i):
            if rng.random() < 0.5:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return BitMatrix(tuple(rows), n)


def test_rank_identity():
    assert rank_gf2(BitMatrix.identity(6)) == 6


def test_rank_k33_adjacency():
    assert rank_gf2(complete_bipartite(3, 3).adjacency_matrix()) == 2


def test_rank_p4_adjacency():
    a = path_graph(4).adjacency_matrix()
    assert rank_gf2(a) == rank_mod2_dense(np.array(a.to_lists(), dtype=np.uint8)) == 4


def test_rank_matches_dense_oracle_random():
    rng = random.Random(42)
    for _ in range(300):
        n = rng.randrange(0, 11)
        m = rng.randrange(0, 11)
        rows = tuple(rng.getrandbits(m) for _ in range(n))
        mat = BitMatrix(rows, m)
        dense = np.array(mat.to_lists(), dtype=np.uint8).reshape(n, m)
        assert rank_gf2(mat) == rank_mod2_dense(dense)


def test_congruence_h2():
    dec = congruence_decompose(H2)
    assert dec.blocks == (BlockKind.HYPERBOLIC,)
    assert dec.generator == BitMatrix.identity(2)
    assert dec.reconstruct() == H2


def test_congruence_w5():
    a = wheel_graph(5).adjacency_matrix()
    dec = congruence_decompose(a)
    assert dec.rank == 2
    assert dec.blocks == (BlockKind.HYPERBOLIC,)
    assert dec.reconstruct() == a
    assert rank_gf2(dec.generator) == 2


def test_congruence_all_ones():
    ones = BitMatrix.from_lists([[1] * 4] * 4)
    dec = congruence_decompose(ones)
    assert dec.rank == 1
    assert dec.blocks == (BlockKind.UNIT,)
    assert dec.reconstruct() == ones


def test_congruence_rejects_asymmetric():
    with pytest.raises(NotSymmetric):
        congruence_decompose(BitMatrix.from_lists([[0, 1], [0, 0]]))


def test_congruence_random_reconstruction_and_block_law():
    rng = random.Random(7)
    for _ in range(500):
        n = rng.randrange(1, 13)
        a = random_symmetric(n, rng)
        dec = congruence_decompose(a)
        assert dec.reconstruct() == a
        assert dec.rank == rank_gf2(a)
        if a.diagonal():
            assert all(b is BlockKind.UNIT for b in dec.blocks)
        else:
            assert all(b is BlockKind.HYPERBOLIC for b in dec.blocks)
            assert dec.rank % 2 == 0


def test_gram_w5_even_case():
    a = wheel_graph(5).adjacency_matrix()
    fac = gram_factor(a)
    assert fac.case is GramCase.EVEN
    assert fac.rank == 2 and fac.factor.ncols == 3
    assert fac.reconstruct() == a
    assert all(r.bit_count() % 2 == 0 for r in fac.factor.rows)
    assert rank_gf2(fac.factor) == 2


def test_gram_all_ones_tight():
    for n in (1, 3, 6):
        ones = BitMatrix.from_lists([[1] * n] * n)
        fac = gram_factor(ones)
        assert fac.case is GramCase.TIGHT
        assert fac.factor == BitMatrix.from_lists([[1]] * n)


def test_gram_fitting_p3():
    # adjacency of P3 with unit diagonal at the endpoints: rank 2, 3x2 factor
    a = BitMatrix.from_lists([[1, 1, 0], [1, 0, 1], [0, 1, 1]])
    fac = gram_factor(a)
    assert fac.case is GramCase.TIGHT
    assert (fac.factor.nrows, fac.factor.ncols) == (3, 2)
    assert fac.reconstruct() == a


def test_gram_zero_matrix():
    fac = gram_factor(BitMatrix.zeros(4, 4))
    assert fac.factor.ncols == 0 and fac.rank == 0
    assert fac.reconstruct() == BitMatrix.zeros(4, 4)


def test_gram_even_case_random():
    # random symmetric with forced zero diagonal
    rng = random.Random(13)
    seen = 0
    while seen < 60:
        n = rng.randrange(2, 11)
        rows = [0] * n
        for i in range(n):
            for j in range(i):
                if rng.random() < 0.4:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        a = BitMatrix(tuple(rows), n)
        if not any(rows):
            continue
        seen += 1
        fac = gram_factor(a)
        k = rank_gf2(a)
        assert fac.case is GramCase.EVEN
        assert fac.factor.ncols == k + 1 and k % 2 == 0
        assert all(r.bit_count() % 2 == 0 for r in fac.factor.rows)
        assert rank_gf2(fac.factor) == k
        assert fac.reconstruct() == a


def test_merge_all_unit_is_fixed_point():
    dec = congruence_decompose(BitMatrix.identity(4))
    assert merge_unit_hyperbolic(dec) == dec


def test_merge_unit_plus_h2():
    d = BitMatrix.from_lists([[1, 0, 0], [0, 0, 1], [0, 1, 0]])
    dec = CongruenceDecomposition(BitMatrix.identity(3), (BlockKind.UNIT, BlockKind.HYPERBOLIC), 3)
    merged = merge_unit_hyperbolic(dec)
    assert merged.blocks == (BlockKind.UNIT,) * 3
    assert merged.generator == BitMatrix.from_lists([[1, 1, 1], [0, 1, 1], [1, 0, 1]])
    assert merged.reconstruct() == d


def test_merge_unit_plus_two_h2():
    gen = BitMatrix.identity(5)
    dec = CongruenceDecomposition(
        gen, (BlockKind.UNIT, BlockKind.HYPERBOLIC, BlockKind.HYPERBOLIC), 5
    )
    merged = merge_unit_hyperbolic(dec)
    assert merged.blocks == (BlockKind.UNIT,) * 5
    assert merged.reconstruct() == dec.reconstruct()


def test_merge_requires_unit():
    dec = congruence_decompose(H2)
    with pytest.raises(NoUnitBlock):
        merge_unit_hyperbolic(dec)


def test_gram_rank_inequality_random():
    rng = random.Random(99)
    for _ in range(500):
        n = rng.randrange(1, 10)
        m = rng.randrange(1, 10)
        mat = BitMatrix(tuple(rng.getrandbits(m) for _ in range(n)), m)
        assert rank_gf2(mat.gram()) <= rank_gf2(mat)
