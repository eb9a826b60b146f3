"""Worked families: Jordan/symmetric functions, cyclic windings, type A."""

import itertools

import pytest

from f1hall.families import (
    CyclicIndec,
    LoopBasisElement,
    cyclic_bracket,
    cyclic_class_count_by_tuples,
    cyclic_indec_key,
    cyclic_indec_rep,
    engine_cyclic_bracket,
    interval_rep,
    is_partition,
    jordan_class_of_partition,
    loop_basis,
    loop_bracket,
    monomial_symmetric_product,
    partition_of_jordan_class,
    partitions,
    psi,
    typeA_indecomposables,
    verify_jordan_iso,
    verify_psi_homomorphism,
)
from f1hall.quiver import cyclic_quiver, is_nilpotent
from f1hall.structure import canonical_key, enumerate_reps, is_indecomposable


def test_partitions_and_validation():
    assert partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert is_partition((3, 1, 1))
    assert not is_partition((1, 2))
    assert not is_partition((0,))


def test_partition_key_roundtrip():
    for n in range(0, 6):
        for lam in partitions(n):
            assert partition_of_jordan_class(jordan_class_of_partition(lam)) == lam


def test_monomial_symmetric_products():
    assert monomial_symmetric_product((1,), (1,)) == {(1, 1): 2, (2,): 1}
    assert monomial_symmetric_product((2,), (1,)) == {(2, 1): 1, (3,): 1}
    assert monomial_symmetric_product((1,), (1, 1)) == {(1, 1, 1): 3, (2, 1): 1}
    assert monomial_symmetric_product((), (2, 1)) == {(2, 1): 1}
    # commutativity
    assert monomial_symmetric_product((2, 1), (1,)) == monomial_symmetric_product(
        (1,), (2, 1)
    )


def test_verify_jordan_iso():
    verdict = verify_jordan_iso(4)
    assert verdict.ok, verdict.detail


def test_winding_reps_are_nilpotent_indecomposables():
    for n in (2, 3):
        for k in range(n):
            for r in range(1, 6):
                rep = cyclic_indec_rep(CyclicIndec(n, k, r))
                assert rep.total_dim == r
                assert is_nilpotent(rep)
                assert is_indecomposable(rep)


def test_winding_keys_distinct():
    keys = {
        cyclic_indec_key(CyclicIndec(3, k, r)) for k in range(3) for r in range(1, 5)
    }
    assert len(keys) == 12


def test_cyclic_bracket_examples():
    # splicing S_1 on top of S_0 in the 2-cycle gives the length-2 winding
    # through residue 1; antisymmetry contributes the mirror term
    out = cyclic_bracket(CyclicIndec(2, 1, 1), CyclicIndec(2, 0, 1))
    assert out == {CyclicIndec(2, 1, 2): 1, CyclicIndec(2, 0, 2): -1}
    # non-matching residues: zero
    assert cyclic_bracket(CyclicIndec(3, 0, 1), CyclicIndec(3, 1, 2)) == {}
    with pytest.raises(ValueError):
        cyclic_bracket(CyclicIndec(2, 0, 1), CyclicIndec(3, 0, 1))


def test_cyclic_bracket_matches_engine():
    for n in (2, 3):
        for i, p, j, q in itertools.product(range(n), (1, 2, 3), range(n), (1, 2, 3)):
            x, y = CyclicIndec(n, i, p), CyclicIndec(n, j, q)
            assert cyclic_bracket(x, y) == engine_cyclic_bracket(x, y)


def test_loop_basis_membership():
    basis = loop_basis(2, 1)
    assert LoopBasisElement(1, 2, 0) in basis
    assert LoopBasisElement(2, 1, 1) in basis
    assert LoopBasisElement(2, 1, 0) not in basis  # lower triangular at power 0
    with pytest.raises(ValueError):
        LoopBasisElement(1, 3, 0).check(2)


def test_loop_bracket():
    e12 = LoopBasisElement(1, 2, 0)
    e21 = LoopBasisElement(2, 1, 1)
    assert loop_bracket(e12, e21) == {
        LoopBasisElement(1, 1, 1): 1,
        LoopBasisElement(2, 2, 1): -1,
    }
    assert loop_bracket(e12, e12) == {}
    # antisymmetry
    assert loop_bracket(e21, e12) == {
        k: -v for k, v in loop_bracket(e12, e21).items()
    }


def test_psi_examples():
    assert psi(LoopBasisElement(1, 2, 0), 2) == CyclicIndec(2, 1, 1)
    # top element of the winding sits at residue col-1
    assert psi(LoopBasisElement(1, 1, 1), 2) == CyclicIndec(2, 0, 2)
    assert psi(LoopBasisElement(2, 1, 1), 2) == CyclicIndec(2, 0, 1)
    with pytest.raises(ValueError):
        psi(LoopBasisElement(2, 1, 0), 2)


def test_psi_is_a_bijection_onto_windings():
    for n in (2, 3):
        basis = loop_basis(n, 2)
        images = [psi(x, n) for x in basis]
        assert len(set(images)) == len(images)


def test_verify_psi_homomorphism():
    for n in (2, 3):
        verdict = verify_psi_homomorphism(n, 1)
        assert verdict.ok, verdict.detail


def test_cyclic_class_counts():
    # classes at total dim d = n-tuples of partitions of total weight d
    for n in (2, 3):
        quiver = cyclic_quiver(n)
        for total in range(0, 5):
            count = sum(
                len(enumerate_reps(quiver, dims))
                for dims in _dim_vectors(n, total)
            )
            assert count == cyclic_class_count_by_tuples(n, total)


def _dim_vectors(r, total):
    if r == 1:
        return [(total,)]
    return [
        (first,) + rest
        for first in range(total + 1)
        for rest in _dim_vectors(r - 1, total - first)
    ]


def test_typeA_intervals():
    for n in (2, 3, 4):
        for orientation in itertools.product((True, False), repeat=n - 1):
            found = typeA_indecomposables(n, orientation)
            assert len(found) == n * (n + 1) // 2
            keys = {key for _, key in found}
            assert len(keys) == len(found)
            for (a, b), key in found:
                rep = interval_rep(n, orientation, a, b)
                assert canonical_key(rep) == key
                assert rep.total_dim == b - a + 1
