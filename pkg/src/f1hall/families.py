"""Closed-form models of the three worked quiver families.

Jordan quiver classes are partitions and the Hall algebra is the ring of
symmetric functions in the monomial basis; cyclic quiver indecomposables
are windings I_[k,r] with an explicit bracket matching the nilpotent half
of the matrix loop algebra; type A indecomposables are vertex intervals.
Each closed form is cross-validated against the generic engine.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .hall import HallElement, hall_product, is_primitive
from .pointed import CYCLIC_BLOCK
from .quiver import (
    cyclic_quiver,
    jordan_quiver,
    linear_quiver,
    make_rep,
    winding_rep,
)
from .structure import (
    _partitions,
    canonical_key,
    enumerate_indecomposables,
    jordan_rep_of_partition,
)


def partitions(n, max_part=None):
    """Partitions of n as non-increasing tuples."""
    return list(_partitions(n, max_part))


def is_partition(parts):
    return all(isinstance(p, int) and p > 0 for p in parts) and all(
        a >= b for a, b in zip(parts, parts[1:])
    )


# ---------------------------------------------------------------------------
# Jordan quiver <-> partitions and symmetric functions
# ---------------------------------------------------------------------------


def jordan_class_of_partition(parts):
    """Canonical key of ⊕_m N_m over the parts."""
    parts = tuple(parts)
    if not is_partition(parts):
        raise ValueError(f"not a partition: {parts}")
    return canonical_key(jordan_rep_of_partition(parts))


def partition_of_jordan_class(key):
    """Inverse bijection: the multiset of chain lengths of the class."""
    from .pointed import jordan_decompose

    rep = key.to_rep(jordan_quiver())
    decomp = jordan_decompose(rep.maps[0])
    if any(tag == CYCLIC_BLOCK for tag, _ in decomp.blocks):
        raise ValueError("class is not nilpotent")
    return tuple(sorted((size for _, size in decomp.blocks), reverse=True))


def _distinct_rearrangements(parts, num_vars):
    """All distinct exponent vectors obtained by permuting the padded parts."""
    counts = Counter(tuple(parts) + (0,) * (num_vars - len(parts)))

    def build(prefix, remaining):
        if len(prefix) == num_vars:
            yield prefix
            return
        for value in sorted(remaining, reverse=True):
            if remaining[value] == 0:
                continue
            remaining[value] -= 1
            yield from build(prefix + (value,), remaining)
            remaining[value] += 1

    return list(build((), counts))


def _rearrangement_count(parts, num_vars):
    """Number of distinct rearrangements of the padded parts (a multinomial)."""
    import math

    counts = Counter(tuple(parts) + (0,) * (num_vars - len(parts)))
    total = math.factorial(num_vars)
    for c in counts.values():
        total //= math.factorial(c)
    return total


def monomial_symmetric_product(lam, mu):
    """Expand m_lam · m_mu in the monomial basis.

    Definitional oracle: expand both factors as sums of distinct monomials
    in |lam| + |mu| variables (enough variables, since no partition in the
    product has more parts than that), multiply exponent vectors, and
    re-collect by sorted exponent vector.
    """
    lam, mu = tuple(lam), tuple(mu)
    for p in (lam, mu):
        if not is_partition(p):
            raise ValueError(f"not a partition: {p}")
    num_vars = sum(lam) + sum(mu)
    if num_vars == 0:
        return {(): 1}
    out = Counter()
    for a in _distinct_rearrangements(lam, num_vars):
        for b in _distinct_rearrangements(mu, num_vars):
            exps = tuple(sorted((x + y for x, y in zip(a, b)), reverse=True))
            out[exps] += 1
    # each product partition appears once per distinct rearrangement of itself
    result = {}
    for exps, count in out.items():
        parts = tuple(p for p in exps if p > 0)
        if parts in result:
            continue
        reps = _rearrangement_count(parts, num_vars)
        coeff, rem = divmod(count, reps)
        if rem:
            raise AssertionError("monomial expansion not constant on orbits (internal bug)")
        result[parts] = coeff
    return result


@dataclass(frozen=True)
class Verdict:
    """Outcome of a family verification, carrying the first counterexample."""

    ok: bool
    detail: str = ""

    def __bool__(self):
        return self.ok


def verify_jordan_iso(max_weight):
    """Check that partition -> m_partition intertwines the Hall product with
    the monomial product for all basis pairs of total weight <= max_weight,
    and that the generator classes [N_i] are primitive and commute."""
    q = jordan_quiver()
    for total in range(0, max_weight + 1):
        for w1 in range(0, total + 1):
            w2 = total - w1
            for lam in _partitions(w1):
                for mu in _partitions(w2):
                    left = hall_product(
                        HallElement.basis(q, jordan_class_of_partition(lam)),
                        HallElement.basis(q, jordan_class_of_partition(mu)),
                    )
                    expected = monomial_symmetric_product(lam, mu)
                    got = {
                        partition_of_jordan_class(k): c for k, c in left.terms.items()
                    }
                    if got != {p: Fraction(c) for p, c in expected.items()}:
                        return Verdict(
                            False,
                            f"product mismatch at {lam} * {mu}: hall={got}, monomial={expected}",
                        )
    for i in range(1, max_weight + 1):
        gen = HallElement.basis(q, jordan_class_of_partition((i,)))
        if not is_primitive(gen):
            return Verdict(False, f"[N_{i}] is not primitive")
        for j in range(1, max_weight + 1 - i):
            other = HallElement.basis(q, jordan_class_of_partition((j,)))
            if hall_product(gen, other) != hall_product(other, gen):
                return Verdict(False, f"[N_{i}] and [N_{j}] do not commute")
    return Verdict(True)


# ---------------------------------------------------------------------------
# cyclic quiver: windings and the loop algebra
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class CyclicIndec:
    """The winding indecomposable I_[k,r] of the cyclic quiver on n residues."""

    n: int
    k: int
    r: int

    def __post_init__(self):
        if not (self.n >= 2 and 0 <= self.k < self.n and self.r >= 1):
            raise ValueError(f"bad winding parameters {self}")

    def __str__(self):
        return f"I[{self.k},{self.r}]"


def cyclic_indec_rep(x):
    """Build the winding representation of I_[k,r]."""
    return winding_rep(x.n, x.k, x.r)


def cyclic_indec_key(x):
    return canonical_key(cyclic_indec_rep(x))


def cyclic_bracket(x, y):
    """Closed-form Lie bracket of winding classes in the Hall Lie algebra.

    A winding I_[i,p] sits on top of I_[j,q] in a longer winding exactly
    when the residue below its lowest element is j, i.e. j ≡ i − p (mod n);
    the splice is then I_[i,p+q].  Antisymmetrizing:

        [I_[i,p], I_[j,q]] = I_[i,p+q] when j ≡ i − p (mod n),
                             minus I_[j,p+q] when i ≡ j − q (mod n),

    and 0 otherwise (both terms appear when both residues match).
    Returns a formal integer combination {CyclicIndec: coeff}.
    """
    if x.n != y.n:
        raise ValueError("windings of different cyclic quivers")
    n = x.n
    out = Counter()
    if y.k == (x.k - x.r) % n:
        out[CyclicIndec(n, x.k, x.r + y.r)] += 1
    if x.k == (y.k - y.r) % n:
        out[CyclicIndec(n, y.k, x.r + y.r)] -= 1
    return {c: v for c, v in out.items() if v != 0}


def engine_cyclic_bracket(x, y):
    """The same bracket computed by the generic Hall engine: [a,b] = ab − ba
    on the classes, returned in the same formal form."""
    if x.n != y.n:
        raise ValueError("windings of different cyclic quivers")
    q = cyclic_quiver(x.n)
    a = HallElement.basis(q, cyclic_indec_key(x))
    b = HallElement.basis(q, cyclic_indec_key(y))
    comm = hall_product(a, b) - hall_product(b, a)
    out = {}
    for key, coeff in comm.terms.items():
        wind = _winding_of_key(x.n, key)
        if wind is None:
            raise AssertionError(f"commutator left the span of windings: {key}")
        out[wind] = int(coeff)
    return out


def _winding_of_key(n, key):
    """Recognize an indecomposable cyclic class as a winding, if it is one."""
    r = key.total_dim
    for k in range(n):
        if cyclic_indec_key(CyclicIndec(n, k, r)) == key:
            return CyclicIndec(n, k, r)
    return None


@dataclass(frozen=True, order=True)
class LoopBasisElement:
    """A basis element E_{row,col} ⊗ t^power of the nilpotent half a_+.

    Membership in a_+ requires power >= 1 when col <= row (and >= 0 when
    col > row, the strictly upper-triangular constant part).
    """

    row: int
    col: int
    power: int

    def check(self, n):
        if not (1 <= self.row <= n and 1 <= self.col <= n):
            raise ValueError(f"matrix indices out of range for gl_{n}: {self}")
        if self.col > self.row:
            ok = self.power >= 0
        else:
            ok = self.power >= 1
        if not ok:
            raise ValueError(f"element outside the nilpotent half a_+: {self}")

    def __str__(self):
        return f"E[{self.row},{self.col}]t^{self.power}"


def loop_basis(n, max_power):
    """All a_+ basis elements with t-power at most max_power."""
    out = []
    for row in range(1, n + 1):
        for col in range(1, n + 1):
            start = 0 if col > row else 1
            for m in range(start, max_power + 1):
                out.append(LoopBasisElement(row, col, m))
    return out


def loop_bracket(x, y):
    """[E_{r,s}⊗t^a, E_{r',s'}⊗t^b] = δ_{s,r'} E_{r,s'} − δ_{s',r} E_{r',s},
    at power a+b.  No central term arises inside a_+ (powers never cancel
    to pair t^c with t^{-c}).  Formal combination {LoopBasisElement: coeff}."""
    out = Counter()
    m = x.power + y.power
    if x.col == y.row:
        out[LoopBasisElement(x.row, y.col, m)] += 1
    if y.col == x.row:
        out[LoopBasisElement(y.row, x.col, m)] -= 1
    return {e: c for e, c in out.items() if c != 0}


def psi(x, n):
    """The loop-to-winding correspondence: E_{r,s}⊗t^m maps to the winding
    of length s − r + m·n whose top element sits at residue s − 1.

    Windings are labelled by their top residue, so the bottom element of
    psi(E_{r,s}⊗t^m) sits at residue r − 1: matrix units compose exactly
    when the windings splice."""
    x.check(n)
    length = x.col - x.row + x.power * n
    if length < 1:
        raise ValueError(f"element outside the nilpotent half a_+: {x}")
    return CyclicIndec(n, (x.col - 1) % n, length)


def verify_psi_homomorphism(n, max_power, use_engine_bracket=False):
    """Check ψ([a,b]) = −[ψ(a), ψ(b)] (the opposite winding bracket) for all
    basis pairs with t-power up to max_power."""
    basis = loop_basis(n, max_power)
    for a in basis:
        for b in basis:
            lhs = Counter()
            for elem, coeff in loop_bracket(a, b).items():
                lhs[psi(elem, n)] += coeff
            lhs = {w: c for w, c in lhs.items() if c != 0}
            bracket = engine_cyclic_bracket if use_engine_bracket else cyclic_bracket
            rhs = {w: -c for w, c in bracket(psi(a, n), psi(b, n)).items()}
            if lhs != rhs:
                return Verdict(
                    False,
                    f"bracket mismatch at {a}, {b}: psi side {lhs}, winding side {rhs}",
                )
    return Verdict(True)


def cyclic_class_count_by_tuples(n, total):
    """Number of n-tuples of partitions of total weight `total` (the closed
    form for the number of nilpotent cyclic classes of that total dimension)."""

    def p(k):
        return len(partitions(k))

    def walk(parts_left, remaining):
        if parts_left == 1:
            return p(remaining)
        return sum(
            p(w) * walk(parts_left - 1, remaining - w) for w in range(remaining + 1)
        )

    return walk(n, total)


# ---------------------------------------------------------------------------
# type A intervals
# ---------------------------------------------------------------------------


def interval_rep(n, orientation, a, b):
    """The indecomposable supported on vertices a..b (1-based, inclusive)
    with one-dimensional spaces and identity maps inside the interval."""
    q = linear_quiver(n, orientation)
    dims = tuple(1 if a - 1 <= v <= b - 1 else 0 for v in range(n))
    images = []
    for src, tgt in q.edges:
        if dims[src] and dims[tgt]:
            images.append((1,))
        else:
            images.append((0,) * dims[src])
    return make_rep(q, dims, images)


def typeA_indecomposables(n, orientation=None):
    """One indecomposable per interval [a,b] of the path, with its key;
    cross-checked against the generic enumeration."""
    if n > 6:
        raise ValueError("type A intervals supported for n <= 6")
    if orientation is None:
        orientation = (True,) * (n - 1)
    expected = sorted(
        canonical_key(interval_rep(n, orientation, a, b))
        for a in range(1, n + 1)
        for b in range(a, n + 1)
    )
    found = enumerate_indecomposables(linear_quiver(n, orientation), n)
    if expected != found:
        raise AssertionError("interval classes disagree with the generic enumeration")
    out = []
    for a in range(1, n + 1):
        for b in range(a, n + 1):
            out.append(((a, b), canonical_key(interval_rep(n, orientation, a, b))))
    return out
