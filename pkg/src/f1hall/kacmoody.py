"""Cartan data and the Kac-Moody side of the Hall algebra.

Covers the Cartan matrix of a loop-free quiver, finite-type detection,
positive roots of simply-laced finite root systems (rank <= 4), graded
dimensions of the enveloping algebra of the positive part via Kostant
partition counts, verification of the Serre relations inside the Hall
algebra, and graded-dimension comparison with the composition algebra.
"""

from __future__ import annotations

import math
from collections import namedtuple
from fractions import Fraction
from functools import lru_cache

from .hall import HallElement, hall_product, simple_class, unit_key
from .quiver import quotient, sub_rep, subrep_element_sets
from .structure import (
    canonical_key,
    enumerate_reps,
    simple_power,
)

MAX_ROOT_RANK = 4


def cartan_matrix(quiver):
    """Generalized Cartan matrix: 2 on the diagonal, minus the number of
    edges joining each pair (in either direction) off it."""
    if quiver.has_self_loops():
        raise ValueError("Cartan matrix undefined for quivers with self-loops")
    r = quiver.num_vertices
    return tuple(
        tuple(2 if i == j else -quiver.edges_between(i, j) for j in range(r))
        for i in range(r)
    )


def _det(matrix):
    """Exact determinant by fraction-free expansion (tiny matrices only)."""
    n = len(matrix)
    if n == 0:
        return 1
    if n == 1:
        return matrix[0][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in matrix[1:]]
        total += (-1) ** j * matrix[0][j] * _det(minor)
    return total


def is_finite_type(cartan):
    """Positive definiteness of the symmetric Cartan matrix (Sylvester)."""
    n = len(cartan)
    for k in range(1, n + 1):
        leading = [list(row[:k]) for row in cartan[:k]]
        if _det(leading) <= 0:
            return False
    return True


RootSystemData = namedtuple("RootSystemData", ["simple_roots", "positive_roots"])


def positive_roots(cartan):
    """All positive roots of a finite-type simply-laced Cartan matrix.

    Roots are exactly the non-negative lattice vectors of squared norm 2
    reachable from the simple roots by adding one simple root at a time.
    """
    r = len(cartan)
    if r > MAX_ROOT_RANK:
        raise ValueError(f"rank {r} exceeds the supported bound {MAX_ROOT_RANK}")
    if not is_finite_type(cartan):
        raise ValueError("Cartan matrix is not of finite type")

    def norm2(beta):
        return sum(
            beta[i] * cartan[i][j] * beta[j] for i in range(r) for j in range(r)
        )

    simples = [tuple(1 if j == i else 0 for j in range(r)) for i in range(r)]
    roots = set(simples)
    frontier = list(simples)
    while frontier:
        new = []
        for beta in frontier:
            for i in range(r):
                cand = tuple(b + (1 if j == i else 0) for j, b in enumerate(beta))
                if cand not in roots and norm2(cand) == 2:
                    roots.add(cand)
                    new.append(cand)
        frontier = new
    return RootSystemData(tuple(simples), tuple(sorted(roots)))


def un_plus_graded_dim(roots, alpha):
    """dim U(n+)[alpha]: the number of multisets of positive roots summing
    to alpha (the Kostant partition count; all multiplicities are 1 in
    finite type)."""
    alpha = tuple(alpha)
    ordered = sorted(roots.positive_roots)

    @lru_cache(maxsize=None)
    def count(idx, remaining):
        if all(x == 0 for x in remaining):
            return 1
        if idx >= len(ordered):
            return 0
        root = ordered[idx]
        total = 0
        copies = 0
        rem = remaining
        while all(a >= 0 for a in rem):
            total += count(idx + 1, rem)
            rem = tuple(a - b for a, b in zip(rem, root))
            copies += 1
        return total

    result = count(0, alpha)
    count.cache_clear()
    return result


# ---------------------------------------------------------------------------
# Serre relations
# ---------------------------------------------------------------------------

SerreResult = namedtuple("SerreResult", ["element", "holds", "witness"])


def serre_check(quiver, i, j):
    """Evaluate Σ_l (−1)^l [S_i]^(l) [S_j] [S_i]^(1−a_ij−l) in the Hall algebra.

    The divided powers are the classes [S_i^{⊕l}].  Returns the resulting
    element, whether it vanishes, and (on failure) the least offending class.
    """
    if i == j:
        raise ValueError("serre_check needs two distinct vertices")
    if quiver.has_self_loops():
        raise ValueError("serre_check needs a quiver without self-loops")
    a_ij = -quiver.edges_between(i, j)
    top = 1 - a_ij
    s_j = simple_class(quiver, j)
    total = HallElement.zero(quiver)
    for l in range(top + 1):
        term = hall_product(
            hall_product(simple_class(quiver, i, l), s_j),
            simple_class(quiver, i, top - l),
        )
        total = total + term.scale((-1) ** l)
    witness = min(total.terms) if total.terms else None
    return SerreResult(total, total.is_zero(), witness)


def serre_pair_signature(quiver, i, j):
    """(#edges i->j, #edges j->i): the only data serre_check depends on.

    All representations entering the Serre sum are supported on {i, j},
    so edges elsewhere carry maps between zero-dimensional spaces.
    """
    fwd = sum(1 for s, t in quiver.edges if (s, t) == (i, j))
    bwd = sum(1 for s, t in quiver.edges if (s, t) == (j, i))
    return fwd, bwd


# ---------------------------------------------------------------------------
# filtration counting
# ---------------------------------------------------------------------------


def filtration_count(quiver, m_key, i, j, l, n):
    """Number of filtrations ∅ ⊂ F1 ⊂ F2 ⊂ M with F1 ≅ S_i^{⊕n},
    F2/F1 ≅ S_j and M/F2 ≅ S_i^{⊕l}, by direct enumeration."""
    expected = tuple(
        (n + l if v == i else 0) + (1 if v == j else 0)
        for v in range(quiver.num_vertices)
    )
    if m_key.dims != expected:
        raise ValueError("dimension vector of M does not match n·e_i + e_j + l·e_i")
    rep = m_key.to_rep(quiver)
    key_f1 = canonical_key(simple_power(quiver, i, n))
    key_sj = canonical_key(simple_power(quiver, j, 1))
    key_top = canonical_key(simple_power(quiver, i, l))
    count = 0
    closed = subrep_element_sets(rep)
    for f1 in closed:
        sub1, _ = sub_rep(rep, f1)
        if canonical_key(sub1) != key_f1:
            continue
        for f2 in closed:
            if not all(a <= b for a, b in zip(f1, f2)):
                continue
            sub2, _ = sub_rep(rep, f2)
            mid_sets = tuple(
                frozenset(
                    idx + 1
                    for idx, x in enumerate(sorted(f2[v]))
                    if x in f1[v]
                )
                for v in range(quiver.num_vertices)
            )
            mid, _ = quotient(sub2, mid_sets)
            if canonical_key(mid) != key_sj:
                continue
            top, _ = quotient(rep, f2)
            if canonical_key(top) == key_top:
                count += 1
    return count


def filtration_count_formula(quiver, m_key, i, j, n):
    """The closed form C(u − v, n − v): u is the dimension of the common
    kernel of the maps i→j inside V_i, v the dimension of the union of the
    images of the maps j→i."""
    rep = m_key.to_rep(quiver)
    in_kernel = set(range(1, rep.dims[i] + 1))
    for k, (s, t) in enumerate(quiver.edges):
        if s == i and t == j:
            in_kernel &= {x for x in range(1, rep.dims[i] + 1) if rep.maps[k](x) == 0}
    in_image = set()
    for k, (s, t) in enumerate(quiver.edges):
        if s == j and t == i:
            in_image |= {a for a in rep.maps[k].image if a != 0}
    u, v = len(in_kernel), len(in_image)
    if n - v < 0 or n - v > u - v:
        return 0
    return math.comb(u - v, n - v)


# ---------------------------------------------------------------------------
# composition algebra graded dimensions
# ---------------------------------------------------------------------------


class _SpanBasis:
    """Incrementally reduced basis of a span of Hall elements (exact rationals)."""

    def __init__(self):
        self.rows = {}  # pivot key -> HallElement with coefficient 1 at pivot

    def reduce(self, x):
        # rows only contain keys >= their pivot, so one increasing pass suffices
        for pivot in sorted(self.rows):
            coeff = x.terms.get(pivot)
            if coeff:
                x = x - self.rows[pivot].scale(coeff)
        return x

    def insert(self, x):
        x = self.reduce(x)
        if x.is_zero():
            return False
        pivot = min(x.terms)
        self.rows[pivot] = x.scale(Fraction(1) / x.terms[pivot])
        # keep existing rows reduced against the new pivot
        for p, row in list(self.rows.items()):
            if p != pivot and pivot in row.terms:
                self.rows[p] = row - self.rows[pivot].scale(row.terms[pivot])
        return True

    @property
    def rank(self):
        return len(self.rows)


def _word_span_bases(quiver, alpha):
    """Reduced span bases of all products of simple classes, per sub-degree.

    span[β] is spanned by the values of all words in the [S_i] of content β;
    it satisfies span[β] = Σ_i span[β − e_i]·[S_i], which is how it is built.
    The full word enumeration spans the same space (every word factors
    through its last letter); see composition_algebra_words_rank for the
    oracle path.
    """
    r = quiver.num_vertices
    alpha = tuple(alpha)
    spans = {}
    zero = (0,) * r
    base = _SpanBasis()
    base.insert(HallElement.one(quiver))
    spans[zero] = base

    def degrees_below(limit):
        out = [()]
        for bound in limit:
            out = [prefix + (v,) for prefix in out for v in range(bound + 1)]
        out.sort(key=lambda d: (sum(d), d))
        return out

    for beta in degrees_below(alpha):
        if beta == zero:
            continue
        basis = _SpanBasis()
        for i in range(r):
            if beta[i] == 0:
                continue
            prev = tuple(b - (1 if v == i else 0) for v, b in enumerate(beta))
            gen = simple_class(quiver, i)
            for row in spans[prev].rows.values():
                basis.insert(hall_product(row, gen))
        spans[beta] = basis
    return spans


def composition_algebra_graded_dim(quiver, alpha):
    """Rank of the span of all words in the simple classes with content alpha."""
    if quiver.has_self_loops():
        raise ValueError("composition algebra needs a quiver without self-loops")
    return _word_span_bases(quiver, alpha)[tuple(alpha)].rank


def composition_algebra_words_rank(quiver, alpha):
    """Oracle path: rank over the explicit multiset of all words of content alpha."""
    from itertools import permutations as iperm

    letters = []
    for i, m in enumerate(alpha):
        letters.extend([i] * m)
    basis = _SpanBasis()
    for word in sorted(set(iperm(letters))):
        value = HallElement.one(quiver)
        for i in word:
            value = hall_product(value, simple_class(quiver, i))
        basis.insert(value)
    return basis.rank


DefectReport = namedtuple(
    "DefectReport", ["dim_un_plus", "dim_composition", "dim_hall", "kernel", "cokernel"]
)


def rho_defect_report(quiver, alpha):
    """Graded dimensions of U(n+), the composition algebra, and the Hall
    algebra at alpha, with the kernel/cokernel dimensions of the Kac-Moody
    homomorphism at that degree."""
    cartan = cartan_matrix(quiver)
    if not is_finite_type(cartan):
        raise ValueError("defect report needs a finite-type quiver")
    roots = positive_roots(cartan)
    alpha = tuple(alpha)
    dim_un = un_plus_graded_dim(roots, alpha)
    dim_cq = composition_algebra_graded_dim(quiver, alpha)
    dim_hq = len(enumerate_reps(quiver, alpha, nilpotent_only=True))
    return DefectReport(dim_un, dim_cq, dim_hq, dim_un - dim_cq, dim_hq - dim_cq)
