"""Linear algebra over F1: pointed finite sets and partial injections.

A "vector space" is a pointed finite set whose elements are canonically
labeled 0..dim, with 0 the basepoint.  A "linear map" is a map of pointed
sets that is injective away from the fiber over the basepoint; we store it
as the list of images of the elements 1..src_dim, with 0 meaning "maps to
the basepoint".  All values are immutable and all operations are pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

NILPOTENT_BLOCK = "N"
CYCLIC_BLOCK = "C"


@dataclass(frozen=True, order=True)
class PointedSpace:
    """A pointed finite set with elements 0..dim (0 is the basepoint)."""

    dim: int

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError(f"dimension must be non-negative, got {self.dim}")

    def elements(self):
        """Nonzero elements, in increasing order."""
        return range(1, self.dim + 1)


ZERO_SPACE = PointedSpace(0)


@dataclass(frozen=True, order=True)
class PartialInjection:
    """A basepoint-preserving map injective away from the zero fiber.

    `image[x-1]` is the image of the source element x; an entry of 0 means
    x is sent to the basepoint.  Nonzero entries are pairwise distinct.
    """

    src_dim: int
    tgt_dim: int
    image: tuple

    def __post_init__(self):
        if len(self.image) != self.src_dim:
            raise ValueError(
                f"image list has length {len(self.image)}, expected {self.src_dim}"
            )
        nonzero = [a for a in self.image if a != 0]
        for a in nonzero:
            if not 1 <= a <= self.tgt_dim:
                raise ValueError(f"image entry {a} outside 0..{self.tgt_dim}")
        if len(set(nonzero)) != len(nonzero):
            raise ValueError(f"not injective away from zero: {self.image}")

    @classmethod
    def identity(cls, n):
        return cls(n, n, tuple(range(1, n + 1)))

    @classmethod
    def zero(cls, src_dim, tgt_dim):
        return cls(src_dim, tgt_dim, (0,) * src_dim)

    def __call__(self, x):
        """Image of the element x (0 maps to 0)."""
        if x == 0:
            return 0
        return self.image[x - 1]

    def is_zero(self):
        return all(a == 0 for a in self.image)

    def is_identity(self):
        return self.src_dim == self.tgt_dim and self.image == tuple(
            range(1, self.src_dim + 1)
        )

    def __str__(self):
        return "[" + ",".join(str(a) for a in self.image) + "]"


def compose(f, g):
    """The composite f∘g (apply g first)."""
    if g.tgt_dim != f.src_dim:
        raise ValueError(
            f"cannot compose: inner target dim {g.tgt_dim} != outer source dim {f.src_dim}"
        )
    return PartialInjection(g.src_dim, f.tgt_dim, tuple(f(g(x)) for x in range(1, g.src_dim + 1)))


def kernel(f):
    """The kernel f^{-1}(0) with its inclusion into the source."""
    elts = [x for x in range(1, f.src_dim + 1) if f(x) == 0]
    space = PointedSpace(len(elts))
    incl = PartialInjection(len(elts), f.src_dim, tuple(elts))
    return space, incl


def cokernel(f):
    """The quotient target/f(source) with the projection from the target."""
    hit = {a for a in f.image if a != 0}
    survivors = [w for w in range(1, f.tgt_dim + 1) if w not in hit]
    space = PointedSpace(len(survivors))
    new_label = {w: k + 1 for k, w in enumerate(survivors)}
    proj = PartialInjection(
        f.tgt_dim, len(survivors), tuple(new_label.get(w, 0) for w in range(1, f.tgt_dim + 1))
    )
    return space, proj


def direct_sum(v, w):
    """Pointed disjoint union, with V occupying 1..dimV and W the rest.

    Returns (space, iota_v, iota_w, p_v, p_w) with p∘iota = id.
    """
    n, m = v.dim, w.dim
    total = PointedSpace(n + m)
    iota_v = PartialInjection(n, n + m, tuple(range(1, n + 1)))
    iota_w = PartialInjection(m, n + m, tuple(range(n + 1, n + m + 1)))
    p_v = PartialInjection(n + m, n, tuple(range(1, n + 1)) + (0,) * m)
    p_w = PartialInjection(n + m, m, (0,) * n + tuple(range(1, m + 1)))
    return total, iota_v, iota_w, p_v, p_w


def direct_sum_map(f, g):
    """Blockwise direct sum of two maps (left block then right block)."""
    image = tuple(f.image) + tuple(a + f.tgt_dim if a != 0 else 0 for a in g.image)
    return PartialInjection(f.src_dim + g.src_dim, f.tgt_dim + g.tgt_dim, image)


def tensor(v, w):
    """Pointed Cartesian product; dim multiplies."""
    return PointedSpace(v.dim * w.dim)


def transpose(f):
    """Duality: send each element of the image back to its unique preimage."""
    back = [0] * f.tgt_dim
    for x in range(1, f.src_dim + 1):
        a = f(x)
        if a != 0:
            back[a - 1] = x
    return PartialInjection(f.tgt_dim, f.src_dim, tuple(back))


@dataclass(frozen=True, order=True)
class EndoBlockDecomposition:
    """Multiset of Jordan blocks of an endomorphism, as sorted (tag, size) pairs."""

    blocks: tuple

    def __post_init__(self):
        for tag, size in self.blocks:
            if tag not in (NILPOTENT_BLOCK, CYCLIC_BLOCK):
                raise ValueError(f"unknown block tag {tag!r}")
            if size < 1:
                raise ValueError(f"block size must be >= 1, got {size}")

    @property
    def total_dim(self):
        return sum(size for _, size in self.blocks)


def nilpotent_block(m):
    """The chain endomorphism N_m: k -> k-1, with 1 -> 0."""
    return PartialInjection(m, m, tuple(range(0, m)))


def cyclic_block(m):
    """The cyclic endomorphism C_m: k -> k-1, with 1 -> m."""
    if m < 1:
        raise ValueError("cyclic block needs size >= 1")
    return PartialInjection(m, m, (m,) + tuple(range(1, m)))


def endo_from_blocks(decomp):
    """A representative endomorphism realizing the given block multiset."""
    result = PartialInjection(0, 0, ())
    for tag, size in decomp.blocks:
        block = nilpotent_block(size) if tag == NILPOTENT_BLOCK else cyclic_block(size)
        result = direct_sum_map(result, block)
    return result


def jordan_decompose(t):
    """Decompose a square map into nilpotent chains and cycles.

    Follows the orbit-tracing argument: every nonzero element has at most
    one preimage, so the element graph is a disjoint union of paths (each
    a nilpotent block) and cycles (each a cyclic block).
    """
    if t.src_dim != t.tgt_dim:
        raise ValueError("jordan_decompose requires an endomorphism")
    n = t.src_dim
    pred = [0] * (n + 1)
    for x in range(1, n + 1):
        a = t(x)
        if a != 0:
            pred[a] = x
    seen = [False] * (n + 1)
    blocks = []
    for x in range(1, n + 1):
        if seen[x]:
            continue
        # walk backwards to the orbit start, detecting a cycle on the way
        start = x
        visited = {x}
        is_cycle = False
        while pred[start] != 0:
            start = pred[start]
            if start in visited:
                is_cycle = True
                break
            visited.add(start)
        orbit = []
        y = start
        while y != 0 and not seen[y]:
            seen[y] = True
            orbit.append(y)
            y = t(y)
        tag = CYCLIC_BLOCK if is_cycle else NILPOTENT_BLOCK
        blocks.append((tag, len(orbit)))
    return EndoBlockDecomposition(tuple(sorted(blocks)))


def all_partial_injections(src_dim, tgt_dim):
    """All partial injections src_dim -> tgt_dim, in a deterministic order."""
    from itertools import permutations

    out = []
    for k in range(0, min(src_dim, tgt_dim) + 1):
        for positions in combinations(range(src_dim), k):
            for targets in permutations(range(1, tgt_dim + 1), k):
                image = [0] * src_dim
                for pos, a in zip(positions, targets):
                    image[pos] = a
                out.append(PartialInjection(src_dim, tgt_dim, tuple(image)))
    return out


def count_subspaces(n, k):
    """Number of k-dimensional subspaces of an n-dimensional pointed space.

    For n <= 12 this actually enumerates k-element subsets of the nonzero
    elements (the enumeration is the oracle for the binomial formula).
    """
    if k < 0 or k > n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    if n <= 12:
        return sum(1 for _ in combinations(range(1, n + 1), k))
    return math.comb(n, k)
