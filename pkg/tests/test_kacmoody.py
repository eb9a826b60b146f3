"""Cartan matrices, root systems, Serre relations, and graded dimensions."""

import math

import pytest

from f1hall.kacmoody import (
    cartan_matrix,
    composition_algebra_graded_dim,
    composition_algebra_words_rank,
    filtration_count,
    filtration_count_formula,
    is_finite_type,
    positive_roots,
    rho_defect_report,
    serre_check,
    serre_pair_signature,
    un_plus_graded_dim,
)
from f1hall.quiver import Quiver, cyclic_quiver, jordan_quiver, linear_quiver
from f1hall.structure import enumerate_reps

A2 = linear_quiver(2)
D4 = Quiver(4, ((0, 1), (2, 1), (3, 1)))  # three arms into a central vertex
KRONECKER = Quiver(2, ((0, 1), (0, 1)))


def test_cartan_matrices():
    assert cartan_matrix(A2) == ((2, -1), (-1, 2))
    assert cartan_matrix(cyclic_quiver(2)) == ((2, -2), (-2, 2))
    assert cartan_matrix(KRONECKER) == ((2, -2), (-2, 2))
    assert cartan_matrix(D4) == (
        (2, -1, 0, 0),
        (-1, 2, -1, -1),
        (0, -1, 2, 0),
        (0, -1, 0, 2),
    )
    with pytest.raises(ValueError):
        cartan_matrix(jordan_quiver())


def test_finite_type_detection():
    assert is_finite_type(cartan_matrix(A2))
    assert is_finite_type(cartan_matrix(linear_quiver(4)))
    assert is_finite_type(cartan_matrix(D4))
    assert not is_finite_type(cartan_matrix(cyclic_quiver(3)))
    assert not is_finite_type(cartan_matrix(KRONECKER))


def test_positive_roots_type_a():
    # A_n has n(n+1)/2 positive roots, the interval sums of simple roots
    for n in range(1, 5):
        roots = positive_roots(cartan_matrix(linear_quiver(n)))
        assert len(roots.positive_roots) == n * (n + 1) // 2
        for root in roots.positive_roots:
            support = [i for i, x in enumerate(root) if x]
            assert all(x == 1 for x in root if x)
            assert support == list(range(support[0], support[-1] + 1))


def test_positive_roots_d4():
    roots = positive_roots(cartan_matrix(D4))
    assert len(roots.positive_roots) == 12
    assert (1, 2, 1, 1) in roots.positive_roots  # the highest root


def test_positive_roots_rejects_non_finite():
    with pytest.raises(ValueError):
        positive_roots(cartan_matrix(cyclic_quiver(2)))


def test_kostant_counts():
    a2_roots = positive_roots(cartan_matrix(A2))
    assert un_plus_graded_dim(a2_roots, (1, 1)) == 2
    assert un_plus_graded_dim(a2_roots, (2, 1)) == 2
    assert un_plus_graded_dim(a2_roots, (0, 0)) == 1
    d4_roots = positive_roots(cartan_matrix(D4))
    assert un_plus_graded_dim(d4_roots, (1, 2, 1, 1)) == 15


def test_serre_a2_both_orders():
    for i, j in ((0, 1), (1, 0)):
        result = serre_check(A2, i, j)
        assert result.holds
        assert result.witness is None
        assert result.element.is_zero()


def test_serre_double_edge():
    # a_ij = -2: the degree-4 alternating sum vanishes
    for quiver in (cyclic_quiver(2), KRONECKER):
        for i, j in ((0, 1), (1, 0)):
            assert serre_check(quiver, i, j).holds


def test_serre_rejects_bad_input():
    with pytest.raises(ValueError):
        serre_check(A2, 0, 0)
    with pytest.raises(ValueError):
        serre_check(jordan_quiver(), 0, 0)


def test_serre_pair_signature():
    quiver = Quiver(3, ((0, 1), (0, 1), (1, 0), (2, 0)))
    assert serre_pair_signature(quiver, 0, 1) == (2, 1)
    assert serre_pair_signature(quiver, 1, 0) == (1, 2)
    assert serre_pair_signature(quiver, 1, 2) == (0, 0)


def test_filtration_count_matches_formula():
    # M with dim = n·e_i + e_j + l·e_i on quivers with edges both ways
    for quiver in (A2, cyclic_quiver(2)):
        for i, j in ((0, 1), (1, 0)):
            for n in range(0, 3):
                for l in range(0, 3 - n):
                    dims = tuple(
                        (n + l if v == i else 0) + (1 if v == j else 0)
                        for v in range(2)
                    )
                    for m_key in enumerate_reps(quiver, dims):
                        assert filtration_count(
                            quiver, m_key, i, j, l, n
                        ) == filtration_count_formula(quiver, m_key, i, j, n)


def test_composition_algebra_dims_match_word_oracle():
    for quiver in (A2, D4):
        degrees = (
            [(1, 1), (2, 1), (2, 2)]
            if quiver is A2
            else [(1, 1, 0, 0), (1, 1, 1, 1), (0, 2, 1, 0)]
        )
        for alpha in degrees:
            assert composition_algebra_graded_dim(
                quiver, alpha
            ) == composition_algebra_words_rank(quiver, alpha)


def test_composition_algebra_full_in_type_a():
    # in type A the composition algebra exhausts the Hall algebra
    for alpha in [(1, 1), (2, 1), (2, 2)]:
        assert composition_algebra_graded_dim(A2, alpha) == len(
            enumerate_reps(A2, alpha)
        )


def test_rho_defect_report_d4():
    report = rho_defect_report(D4, (1, 2, 1, 1))
    assert report == (15, 14, 14, 1, 0)


def test_rho_defect_report_type_a_is_exact():
    for alpha in [(1, 1), (1, 2), (2, 2)]:
        report = rho_defect_report(A2, alpha)
        assert report.kernel == 0
        assert report.cokernel == 0


def test_rho_defect_report_rejects_non_finite():
    with pytest.raises(ValueError):
        rho_defect_report(cyclic_quiver(2), (1, 1))
