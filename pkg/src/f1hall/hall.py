"""The Hall algebra of nilpotent quiver representations over F1.

Basis elements are canonical keys of nilpotent isomorphism classes;
coefficients are exact rationals.  The product counts subobjects with
prescribed sub/quotient classes, the coproduct splits the Krull-Schmidt
multiset, and the extended algebra adjoins commuting Cartan generators.
"""

from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from itertools import product

from .quiver import _quotient_data, _sub_rep_data, subrep_element_sets
from .structure import (
    CanonicalKey,
    assemble_key,
    canonical_key,
    enumerate_reps,
    indecomposable_summands,
    simple_power,
)


def unit_key(quiver):
    """Key of the zero representation (the multiplicative unit class)."""
    return CanonicalKey((0,) * quiver.num_vertices, ((),) * quiver.num_edges)


class HallElement:
    """A finitely supported rational linear combination of class keys."""

    __slots__ = ("quiver", "terms")

    def __init__(self, quiver, terms=None):
        self.quiver = quiver
        clean = {}
        for key, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff != 0:
                clean[key] = coeff
        self.terms = clean

    @classmethod
    def basis(cls, quiver, key, coeff=1):
        return cls(quiver, {key: Fraction(coeff)})

    @classmethod
    def one(cls, quiver):
        return cls.basis(quiver, unit_key(quiver))

    @classmethod
    def zero(cls, quiver):
        return cls(quiver)

    def is_zero(self):
        return not self.terms

    def support(self):
        return sorted(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, HallElement)
            and self.quiver == other.quiver
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.quiver, tuple(sorted(self.terms.items()))))

    def __add__(self, other):
        self._check(other)
        merged = dict(self.terms)
        for key, coeff in other.terms.items():
            merged[key] = merged.get(key, Fraction(0)) + coeff
        return HallElement(self.quiver, merged)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return HallElement(self.quiver, {k: -c for k, c in self.terms.items()})

    def scale(self, scalar):
        scalar = Fraction(scalar)
        return HallElement(self.quiver, {k: c * scalar for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, HallElement):
            return hall_product(self, other)
        return self.scale(other)

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def _check(self, other):
        if self.quiver != other.quiver:
            raise ValueError("elements of Hall algebras of different quivers")

    def graded_component(self, alpha):
        alpha = tuple(alpha)
        return HallElement(
            self.quiver, {k: c for k, c in self.terms.items() if k.dims == alpha}
        )

    def pretty(self, namer=None):
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms):
            coeff = self.terms[key]
            name = namer(key) if namer else key.to_hex()
            parts.append(f"{coeff}*[{name}]")
        return " + ".join(parts)

    def __repr__(self):
        return f"HallElement({self.pretty()})"


# ---------------------------------------------------------------------------
# structure constants via subobject counting
# ---------------------------------------------------------------------------

_pairs_cache = {}


def sub_quotient_pairs(quiver, key):
    """Multiplicity of each (key L, key R/L) pair over the subobjects L.

    Cached per class; this table drives both the product and the number of
    subobjects of any prescribed type.
    """
    cache_key = (quiver, key)
    cached = _pairs_cache.get(cache_key)
    if cached is not None:
        return cached
    rep = key.to_rep(quiver)
    pairs = {}
    for subsets in subrep_element_sets(rep):
        sub, _ = _sub_rep_data(rep, subsets)
        quot, _ = _quotient_data(rep, subsets)
        pair = (canonical_key(sub), canonical_key(quot))
        pairs[pair] = pairs.get(pair, 0) + 1
    _pairs_cache[cache_key] = pairs
    return pairs


def structure_constant(quiver, m_key, n_key, r_key):
    """#{L ⊆ R : L ≅ N and R/L ≅ M}; zero immediately on a grading mismatch."""
    if tuple(a + b for a, b in zip(m_key.dims, n_key.dims)) != r_key.dims:
        return 0
    return sub_quotient_pairs(quiver, r_key).get((n_key, m_key), 0)


def _basis_product(quiver, m_key, n_key):
    alpha = tuple(a + b for a, b in zip(m_key.dims, n_key.dims))
    terms = {}
    for r_key in enumerate_reps(quiver, alpha, nilpotent_only=True):
        c = structure_constant(quiver, m_key, n_key, r_key)
        if c:
            terms[r_key] = Fraction(c)
    return HallElement(quiver, terms)


def hall_product(x, y):
    """Bilinear extension of [M]·[N] = Σ_R #{L ⊆ R : L ≅ N, R/L ≅ M} [R]."""
    x._check(y)
    result = HallElement.zero(x.quiver)
    for m_key, cm in x.terms.items():
        for n_key, cn in y.terms.items():
            result = result + _basis_product(x.quiver, m_key, n_key).scale(cm * cn)
    return result


# ---------------------------------------------------------------------------
# coproduct
# ---------------------------------------------------------------------------


class TensorElement:
    """A rational linear combination of ordered key pairs (x ⊗ y)."""

    __slots__ = ("quiver", "terms")

    def __init__(self, quiver, terms=None):
        self.quiver = quiver
        clean = {}
        for pair, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff != 0:
                clean[pair] = coeff
        self.terms = clean

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, TensorElement)
            and self.quiver == other.quiver
            and self.terms == other.terms
        )

    def __add__(self, other):
        merged = dict(self.terms)
        for pair, coeff in other.terms.items():
            merged[pair] = merged.get(pair, Fraction(0)) + coeff
        return TensorElement(self.quiver, merged)

    def __sub__(self, other):
        return self + TensorElement(
            self.quiver, {p: -c for p, c in other.terms.items()}
        )

    def swap(self):
        return TensorElement(self.quiver, {(b, a): c for (a, b), c in self.terms.items()})

    def __mul__(self, other):
        """Componentwise product (a⊗b)(c⊗d) = ac ⊗ bd."""
        result = {}
        for (a, b), c1 in self.terms.items():
            left = HallElement.basis(self.quiver, a)
            right = HallElement.basis(self.quiver, b)
            for (c, d), c2 in other.terms.items():
                prod_l = hall_product(left, HallElement.basis(self.quiver, c))
                prod_r = hall_product(right, HallElement.basis(self.quiver, d))
                for ka, va in prod_l.terms.items():
                    for kb, vb in prod_r.terms.items():
                        pair = (ka, kb)
                        result[pair] = result.get(pair, Fraction(0)) + c1 * c2 * va * vb
        return TensorElement(self.quiver, result)

    def __repr__(self):
        parts = [
            f"{c}*[{a.to_hex()}]⊗[{b.to_hex()}]" for (a, b), c in sorted(self.terms.items())
        ]
        return "TensorElement(" + (" + ".join(parts) if parts else "0") + ")"


def _splittings(quiver, key):
    """Ordered pairs (A, B) of keys with A ⊕ B ≅ the class of `key`.

    Computed from the Krull-Schmidt multiset: one term per pair of
    complementary sub-multisets of indecomposable summands.
    """
    decomp = indecomposable_summands(key.to_rep(quiver))
    items = list(decomp.summands)
    payload_of = {k: (k.dims, k.images) for k, _ in items}
    # component payload = the single-component payload of each summand key
    pairs = []
    ranges = [range(m + 1) for _, m in items]
    for take in product(*ranges):
        left_payloads = []
        right_payloads = []
        for (k, m), j in zip(items, take):
            left_payloads.extend([payload_of[k]] * j)
            right_payloads.extend([payload_of[k]] * (m - j))
        pairs.append(
            (assemble_key(quiver, left_payloads), assemble_key(quiver, right_payloads))
        )
    return pairs


def hall_coproduct(x):
    """Δ([M]) = Σ over ordered splittings A ⊕ B ≅ M of [A] ⊗ [B], extended linearly."""
    terms = {}
    for key, coeff in x.terms.items():
        for pair in _splittings(x.quiver, key):
            terms[pair] = terms.get(pair, Fraction(0)) + coeff
    return TensorElement(x.quiver, terms)


def is_primitive(x):
    """Δ(x) = x ⊗ 1 + 1 ⊗ x."""
    one = unit_key(x.quiver)
    expected = {}
    for key, coeff in x.terms.items():
        expected[(key, one)] = expected.get((key, one), Fraction(0)) + coeff
        expected[(one, key)] = expected.get((one, key), Fraction(0)) + coeff
    return hall_coproduct(x) == TensorElement(x.quiver, expected)


def graded_dim(quiver, alpha, nilpotent_only=True):
    """Number of isomorphism classes at the dimension vector alpha."""
    return len(enumerate_reps(quiver, tuple(alpha), nilpotent_only))


def simple_class(quiver, i, n=1):
    """The basis element [S_i^{⊕n}] (the divided power of [S_i])."""
    return HallElement.basis(quiver, canonical_key(simple_power(quiver, i, n)))


# ---------------------------------------------------------------------------
# extended Hall algebra
# ---------------------------------------------------------------------------


def _degree_pairing(quiver, i, alpha):
    """Z_i evaluated on a degree: Z_i(α_j) = a_ji, extended additively."""
    total = 0
    for j, mult in enumerate(alpha):
        if mult == 0:
            continue
        if i == j:
            a_ji = 2
        else:
            a_ji = -quiver.edges_between(i, j)
        total += a_ji * mult
    return total


class ExtHallElement:
    """Normal-ordered combination of (Cartan monomial) ⊗ (Hall class)."""

    __slots__ = ("quiver", "terms")

    def __init__(self, quiver, terms=None):
        if quiver.has_self_loops():
            raise ValueError("the extended algebra needs a quiver without self-loops")
        self.quiver = quiver
        clean = {}
        for (zexp, key), coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if any(e < 0 for e in zexp):
                raise ValueError("negative Cartan exponent")
            if coeff != 0:
                clean[(tuple(zexp), key)] = coeff
        self.terms = clean

    @classmethod
    def cartan(cls, quiver, i):
        """The generator Z_i."""
        zexp = tuple(1 if j == i else 0 for j in range(quiver.num_vertices))
        return cls(quiver, {(zexp, unit_key(quiver)): Fraction(1)})

    @classmethod
    def from_hall(cls, x):
        zero = (0,) * x.quiver.num_vertices
        return cls(x.quiver, {(zero, k): c for k, c in x.terms.items()})

    @classmethod
    def one(cls, quiver):
        return cls.from_hall(HallElement.one(quiver))

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, ExtHallElement)
            and self.quiver == other.quiver
            and self.terms == other.terms
        )

    def __add__(self, other):
        merged = dict(self.terms)
        for t, coeff in other.terms.items():
            merged[t] = merged.get(t, Fraction(0)) + coeff
        return ExtHallElement(self.quiver, merged)

    def __sub__(self, other):
        return self + ExtHallElement(self.quiver, {t: -c for t, c in other.terms.items()})

    def __mul__(self, other):
        return ext_product(self, other)


def _commute_monomial_past_class(quiver, zexp, key):
    """Rewrite [M] · z^b as Σ coeff · z^k · [M].

    From [Z_i, [M]] = Z_i(α_M)·[M] we get [M]·Z_i = (Z_i − Z_i(α_M))·[M];
    expanding binomially gives {exponent vector k: coefficient}.
    """
    out = {(0,) * quiver.num_vertices: Fraction(1)}
    for i, b in enumerate(zexp):
        if b == 0:
            continue
        c_i = -_degree_pairing(quiver, i, key.dims)
        new = {}
        for k in range(b + 1):
            coeff = Fraction(math.comb(b, k)) * Fraction(c_i) ** (b - k)
            for exp, prev in out.items():
                bumped = tuple(e + (k if j == i else 0) for j, e in enumerate(exp))
                new[bumped] = new.get(bumped, Fraction(0)) + prev * coeff
        out = new
    return out


def ext_product(x, y):
    """Product in the extended algebra, normal-ordering Cartan monomials left."""
    if x.quiver != y.quiver:
        raise ValueError("elements of extended algebras of different quivers")
    quiver = x.quiver
    result = {}
    for (za, m_key), ca in x.terms.items():
        for (zb, n_key), cb in y.terms.items():
            # normal-order: move z^b leftwards across [M]
            for zk, shuffle_coeff in _commute_monomial_past_class(quiver, zb, m_key).items():
                zmono = tuple(a + k for a, k in zip(za, zk))
                prod = _basis_product(quiver, m_key, n_key)
                for r_key, pc in prod.terms.items():
                    t = (zmono, r_key)
                    result[t] = result.get(t, Fraction(0)) + ca * cb * shuffle_coeff * pc
    return ExtHallElement(quiver, result)
