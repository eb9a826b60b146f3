"""Pointed sets, partial injections, and Jordan block decomposition."""

import math
import random

import pytest

from f1hall.pointed import (
    CYCLIC_BLOCK,
    NILPOTENT_BLOCK,
    EndoBlockDecomposition,
    PartialInjection,
    PointedSpace,
    all_partial_injections,
    cokernel,
    compose,
    count_subspaces,
    cyclic_block,
    direct_sum,
    direct_sum_map,
    endo_from_blocks,
    jordan_decompose,
    kernel,
    nilpotent_block,
    tensor,
    transpose,
)


def test_space_dim_validation():
    assert PointedSpace(0).dim == 0
    assert list(PointedSpace(3).elements()) == [1, 2, 3]
    with pytest.raises(ValueError):
        PointedSpace(-1)


def test_partial_injection_validation():
    PartialInjection(3, 2, (2, 0, 1))
    with pytest.raises(ValueError):
        PartialInjection(3, 2, (2, 2, 0))  # repeated nonzero image
    with pytest.raises(ValueError):
        PartialInjection(2, 2, (3, 0))  # image out of range
    with pytest.raises(ValueError):
        PartialInjection(2, 2, (1,))  # wrong length


def test_identity_and_zero():
    assert PartialInjection.identity(3)(2) == 2
    assert PartialInjection.identity(3).is_identity()
    assert PartialInjection.zero(2, 5).is_zero()
    assert PartialInjection.zero(2, 5)(1) == 0


def test_compose():
    f = PartialInjection(2, 3, (3, 1))
    g = PartialInjection(3, 2, (2, 0, 1))
    assert compose(f, g).image == (1, 0, 3)
    assert compose(g, f).image == (1, 2)
    ident = PartialInjection.identity(3)
    assert compose(f, compose(g, ident)) == compose(f, g)
    with pytest.raises(ValueError):
        compose(f, f)


def test_kernel_cokernel():
    f = PartialInjection(3, 3, (0, 3, 0))
    ker_space, incl = kernel(f)
    assert ker_space.dim == 2
    assert incl.image == (1, 3)
    coker_space, proj = cokernel(f)
    assert coker_space.dim == 2
    # survivors 1 and 2 get relabeled 1 and 2; the hit element 3 dies
    assert proj.image == (1, 2, 0)


def test_kernel_cokernel_dims_add_up():
    rng = random.Random(7)
    for _ in range(100):
        n, m = rng.randrange(0, 5), rng.randrange(0, 5)
        f = rng.choice(all_partial_injections(n, m))
        rank = sum(1 for a in f.image if a != 0)
        assert kernel(f)[0].dim == n - rank
        assert cokernel(f)[0].dim == m - rank


def test_direct_sum():
    total, iota_v, iota_w, p_v, p_w = direct_sum(PointedSpace(2), PointedSpace(3))
    assert total.dim == 5
    assert compose(p_v, iota_v).is_identity()
    assert compose(p_w, iota_w).is_identity()
    assert compose(p_w, iota_v).is_zero()


def test_direct_sum_map():
    f = PartialInjection(1, 1, (1,))
    g = PartialInjection(2, 2, (0, 1))
    assert direct_sum_map(f, g).image == (1, 0, 2)


def test_tensor():
    assert tensor(PointedSpace(2), PointedSpace(3)).dim == 6
    assert tensor(PointedSpace(0), PointedSpace(3)).dim == 0


def test_transpose_involution_and_duality():
    rng = random.Random(11)
    for _ in range(100):
        n, m = rng.randrange(0, 5), rng.randrange(0, 5)
        f = rng.choice(all_partial_injections(n, m))
        assert transpose(transpose(f)) == f
        # duality swaps kernel and cokernel
        assert kernel(transpose(f))[0].dim == cokernel(f)[0].dim
        assert cokernel(transpose(f))[0].dim == kernel(f)[0].dim


def test_jordan_identity_gives_fixed_cycles():
    dec = jordan_decompose(PartialInjection.identity(4))
    assert dec.blocks == ((CYCLIC_BLOCK, 1),) * 4


def test_jordan_zero_map_gives_singleton_chains():
    dec = jordan_decompose(PartialInjection.zero(3, 3))
    assert dec.blocks == ((NILPOTENT_BLOCK, 1),) * 3


def test_jordan_mixed_example():
    # 1 <-> 2 is a 2-cycle, 3 -> 0 a singleton chain
    dec = jordan_decompose(PartialInjection(3, 3, (2, 1, 0)))
    assert dec.blocks == ((CYCLIC_BLOCK, 2), (NILPOTENT_BLOCK, 1))


def test_jordan_blocks_of_canonical_endos():
    assert jordan_decompose(nilpotent_block(4)).blocks == ((NILPOTENT_BLOCK, 4),)
    assert jordan_decompose(cyclic_block(5)).blocks == ((CYCLIC_BLOCK, 5),)


def test_jordan_roundtrip_exhaustive_small():
    for n in range(0, 5):
        for f in all_partial_injections(n, n):
            dec = jordan_decompose(f)
            assert dec.total_dim == n
            rebuilt = endo_from_blocks(dec)
            assert jordan_decompose(rebuilt) == dec


def test_block_decomposition_validation():
    with pytest.raises(ValueError):
        EndoBlockDecomposition((("X", 2),))
    with pytest.raises(ValueError):
        EndoBlockDecomposition(((NILPOTENT_BLOCK, 0),))


def test_hom_set_count():
    # #Hom(m,n) = sum_k C(m,k) C(n,k) k!
    for m in range(0, 5):
        for n in range(0, 5):
            expected = sum(
                math.comb(m, k) * math.comb(n, k) * math.factorial(k)
                for k in range(0, min(m, n) + 1)
            )
            assert len(all_partial_injections(m, n)) == expected


def test_count_subspaces_is_binomial():
    for n in range(0, 9):
        for k in range(0, n + 1):
            assert count_subspaces(n, k) == math.comb(n, k)
    assert count_subspaces(20, 3) == math.comb(20, 3)
    with pytest.raises(ValueError):
        count_subspaces(3, 4)
