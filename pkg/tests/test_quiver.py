"""Quivers, representations, morphisms, subobjects, and nilpotency."""

import random

import pytest

from f1hall.pointed import PartialInjection, all_partial_injections, nilpotent_block
from f1hall.quiver import (
    Quiver,
    Rep,
    RepMorphism,
    cyclic_quiver,
    is_nilpotent,
    jordan_quiver,
    linear_quiver,
    make_rep,
    quotient,
    rep_cokernel,
    rep_direct_sum,
    rep_kernel,
    sub_rep,
    subrep_element_sets,
    subrepresentations,
    winding_rep,
    zero_rep,
)

A2 = linear_quiver(2)


def thin_a2():
    """The indecomposable of dimension (1,1) on the path 0 -> 1."""
    return make_rep(A2, (1, 1), [(1,)])


def test_quiver_shape_helpers():
    assert jordan_quiver().has_self_loops()
    assert not A2.has_self_loops()
    assert A2.is_tree()
    assert not cyclic_quiver(3).is_tree()
    assert cyclic_quiver(2).edges_between(0, 1) == 2
    assert A2.edges_between(0, 1) == 1
    with pytest.raises(ValueError):
        Quiver(2, ((0, 2),))


def test_rep_validation_names_offending_edge():
    with pytest.raises(ValueError, match="edge 0"):
        Rep(A2, (1, 1), (PartialInjection(2, 1, (1, 0)),))
    with pytest.raises(ValueError):
        make_rep(A2, (1,), [(1,)])


def test_zero_rep():
    assert zero_rep(A2).total_dim == 0
    assert zero_rep(jordan_quiver()).dims == (0,)


def test_morphism_requires_commuting_squares():
    v = thin_a2()
    RepMorphism.identity(v)
    RepMorphism.zero(v, v)
    # map the top element but not its image: the square breaks
    with pytest.raises(ValueError, match="edge 0"):
        RepMorphism(v, v, (PartialInjection.identity(1), PartialInjection(1, 1, (0,))))


def test_kernel_cokernel_of_inclusion():
    v = thin_a2()
    sub, incl = sub_rep(v, (frozenset(), frozenset({1})))
    assert sub.dims == (0, 1)
    ker, _ = rep_kernel(incl)
    assert ker.total_dim == 0
    coker, proj = rep_cokernel(incl)
    assert coker.dims == (1, 0)
    # projection onto the quotient kills the included element
    assert proj.components[1].is_zero()


def test_direct_sum_dims_and_maps():
    v = thin_a2()
    w = make_rep(A2, (1, 0), [(0,)])
    both = rep_direct_sum(v, w)
    assert both.dims == (2, 1)
    assert both.maps[0].image == (1, 0)
    with pytest.raises(ValueError):
        rep_direct_sum(v, make_rep(linear_quiver(2, (False,)), (1, 1), [(1,)]))


def test_nilpotency():
    jq = jordan_quiver()
    assert not is_nilpotent(make_rep(jq, (2,), [(2, 1)]))  # a 2-cycle
    assert is_nilpotent(Rep(jq, (3,), (nilpotent_block(3),)))
    # every representation of an acyclic quiver is nilpotent
    rng = random.Random(3)
    for _ in range(50):
        dims = (rng.randrange(0, 3), rng.randrange(0, 3))
        f = rng.choice(all_partial_injections(dims[0], dims[1]))
        assert is_nilpotent(Rep(A2, dims, (f,)))
    # winding around the whole cycle once is still nilpotent
    assert is_nilpotent(winding_rep(2, 0, 4))


def test_subrepresentations_of_thin_a2():
    v = thin_a2()
    closed = subrep_element_sets(v)
    assert len(closed) == 3  # zero, the socle at vertex 1, everything
    dims = sorted(sub.dims for sub, _ in subrepresentations(v))
    assert dims == [(0, 0), (0, 1), (1, 1)]
    with pytest.raises(ValueError):
        sub_rep(v, (frozenset({1}), frozenset()))  # not closed


def test_quotient_of_thin_a2():
    v = thin_a2()
    quot, proj = quotient(v, (frozenset(), frozenset({1})))
    assert quot.dims == (1, 0)
    assert proj.components[0].is_identity()
    with pytest.raises(ValueError):
        quotient(v, (frozenset({1}), frozenset()))


def test_sub_plus_quotient_dims():
    rng = random.Random(5)
    jq = jordan_quiver()
    for _ in range(20):
        n = rng.randrange(0, 4)
        rep = Rep(jq, (n,), (rng.choice(all_partial_injections(n, n)),))
        for subsets in subrep_element_sets(rep):
            sub, _ = sub_rep(rep, subsets)
            quot, _ = quotient(rep, subsets)
            assert sub.total_dim + quot.total_dim == rep.total_dim


def test_winding_rep():
    w = winding_rep(3, 1, 4)
    assert w.quiver == cyclic_quiver(3)
    assert w.dims == (1, 2, 1)
    assert w.total_dim == 4
    assert is_nilpotent(w)
    # the element graph of a winding is a single path
    arcs = sum(
        1 for k in range(3) for x in w.maps[k].image if x != 0
    )
    assert arcs == 3
