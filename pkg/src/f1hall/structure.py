"""Structure theory: canonical forms, decomposition, and class enumeration.

Isomorphism classes are identified by a CanonicalKey: the representation is
split into the connected components of its element graph (these are exactly
the indecomposable direct summands), each component is canonically relabeled
by minimizing its edge-map encoding over color-respecting relabelings, and
the sorted components are reassembled.  Equal keys iff isomorphic.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import permutations, product

from .pointed import (
    NILPOTENT_BLOCK,
    PartialInjection,
    all_partial_injections,
    nilpotent_block,
)
from .quiver import (
    Quiver,
    Rep,
    cyclic_quiver,
    is_nilpotent,
    jordan_quiver,
    make_rep,
    quotient,
    rep_direct_sum,
    winding_rep,
)

KEY_PREFIX = "f1k1"


@dataclass(frozen=True, order=True)
class CanonicalKey:
    """Total-order encoding of an isomorphism class: dims plus edge images."""

    dims: tuple
    images: tuple

    @property
    def dim_vector(self):
        return self.dims

    @property
    def total_dim(self):
        return sum(self.dims)

    def to_rep(self, quiver):
        return make_rep(quiver, self.dims, self.images)

    def to_hex(self):
        """Stable cross-run identity string, versioned `f1k1:`."""
        payload = [len(self.dims), *self.dims, len(self.images)]
        for img in self.images:
            payload.append(len(img))
            payload.extend(img)
        if any(v > 255 for v in payload):
            raise ValueError("key entries exceed single-byte encoding")
        return KEY_PREFIX + ":" + bytes(payload).hex()

    @classmethod
    def from_hex(cls, text):
        prefix, _, body = text.partition(":")
        if prefix != KEY_PREFIX or not body:
            raise ValueError(f"not a canonical key string: {text!r}")
        data = bytes.fromhex(body)
        try:
            pos = 0
            nd = data[pos]
            pos += 1
            dims = tuple(data[pos : pos + nd])
            if len(dims) != nd:
                raise IndexError
            pos += nd
            ne = data[pos]
            pos += 1
            images = []
            for _ in range(ne):
                ln = data[pos]
                pos += 1
                images.append(tuple(data[pos : pos + ln]))
                if len(images[-1]) != ln:
                    raise IndexError
                pos += ln
        except IndexError:
            raise ValueError(f"truncated key string: {text!r}")
        if pos != len(data):
            raise ValueError("trailing bytes in key string")
        return cls(dims, tuple(images))

    def __str__(self):
        return self.to_hex()


@dataclass(frozen=True)
class Decomposition:
    """Multiset of indecomposable summand keys, as sorted (key, mult) pairs."""

    summands: tuple

    def as_counter(self):
        return Counter(dict(self.summands))

    @property
    def num_summands(self):
        return sum(m for _, m in self.summands)


def simple(quiver, i):
    """The one-dimensional representation supported at vertex i."""
    if not 0 <= i < quiver.num_vertices:
        raise ValueError(f"vertex {i} out of range")
    dims = tuple(1 if j == i else 0 for j in range(quiver.num_vertices))
    images = [(0,) * dims[s] for s, _ in quiver.edges]
    return make_rep(quiver, dims, images)


def simple_power(quiver, i, n):
    """S_i^{⊕n}."""
    dims = tuple(n if j == i else 0 for j in range(quiver.num_vertices))
    images = [(0,) * dims[s] for s, _ in quiver.edges]
    return make_rep(quiver, dims, images)


# ---------------------------------------------------------------------------
# components of the element graph
# ---------------------------------------------------------------------------


def _components(rep):
    """Connected components of the undirected element graph, each as a
    per-vertex sorted tuple of elements.  Deterministically ordered."""
    elements = rep.elements()
    parent = {e: e for e in elements}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for k, (s, t) in enumerate(rep.quiver.edges):
        for x in range(1, rep.dims[s] + 1):
            y = rep.maps[k](x)
            if y != 0:
                union((s, x), (t, y))
    groups = {}
    for e in elements:
        groups.setdefault(find(e), []).append(e)
    comps = []
    for members in groups.values():
        by_vertex = [[] for _ in range(rep.quiver.num_vertices)]
        for v, x in members:
            by_vertex[v].append(x)
        comps.append(tuple(tuple(sorted(g)) for g in by_vertex))
    comps.sort()
    return comps


# ---------------------------------------------------------------------------
# canonical form of a single component
# ---------------------------------------------------------------------------


def _refine_colors(rep, members):
    """Iterated neighborhood color refinement on a set of elements.

    Colors start from the vertex and are refined by the per-edge in/out
    color profile until stable; the final color ids are label-independent.
    """
    q = rep.quiver
    member_set = set(members)
    color = {e: e[0] for e in members}
    # predecessor per edge (partial injections have unique preimages)
    preds = []
    for k, (s, t) in enumerate(q.edges):
        back = {}
        for x in range(1, rep.dims[s] + 1):
            y = rep.maps[k](x)
            if y != 0:
                back[(t, y)] = (s, x)
        preds.append(back)
    while True:
        sigs = {}
        for e in members:
            v, x = e
            # -2 marks "edge not incident here", -1 "falls to the basepoint"
            prof = []
            for k, (s, t) in enumerate(q.edges):
                if s == v:
                    y = rep.maps[k](x)
                    prof.append(color[(t, y)] if y != 0 and (t, y) in member_set else -1)
                else:
                    prof.append(-2)
                if t == v:
                    p = preds[k].get(e)
                    prof.append(color[p] if p is not None and p in member_set else -1)
                else:
                    prof.append(-2)
            sigs[e] = (color[e], tuple(prof))
        ranking = {sig: rank for rank, sig in enumerate(sorted(set(sigs.values())))}
        new_color = {e: ranking[sigs[e]] for e in members}
        # stop when the induced partition no longer splits
        if len(set(new_color.values())) == len(set(color.values())):
            return new_color
        color = new_color


def _component_payload(rep, comp):
    """Canonical (dims, images) payload of one component, plus its |Aut|.

    Labels at each vertex are assigned in blocks by refined color; the
    encoding is minimized over all within-class permutations.  Isomorphisms
    preserve refined colors, so the minimum is an isomorphism invariant and
    the number of minimizing relabelings is the automorphism count.
    """
    q = rep.quiver
    members = [(v, x) for v in range(q.num_vertices) for x in comp[v]]
    color = _refine_colors(rep, members)
    dims_c = tuple(len(comp[v]) for v in range(q.num_vertices))

    # per vertex: color classes in increasing color order
    classes = []
    for v in range(q.num_vertices):
        by_color = {}
        for x in comp[v]:
            by_color.setdefault(color[(v, x)], []).append(x)
        classes.append([by_color[c] for c in sorted(by_color)])

    # candidate relabelings: per vertex, product of within-class permutations
    per_vertex_choices = []
    for v in range(q.num_vertices):
        choices = []
        for arrangement in product(*[permutations(cls) for cls in classes[v]]):
            flat = [x for cls in arrangement for x in cls]
            choices.append({x: idx + 1 for idx, x in enumerate(flat)})
        per_vertex_choices.append(choices)

    best = None
    best_count = 0
    for labeling in product(*per_vertex_choices):
        images = []
        for k, (s, t) in enumerate(q.edges):
            inv = sorted(labeling[s], key=labeling[s].get)
            img = []
            for x in inv:
                y = rep.maps[k](x)
                img.append(labeling[t][y] if y != 0 else 0)
            images.append(tuple(img))
        enc = tuple(images)
        if best is None or enc < best:
            best = enc
            best_count = 1
        elif enc == best:
            best_count += 1
    return (dims_c, best), best_count


_canon_cache = {}


def _analyze(rep):
    """(component payload multiset, aut count) for a rep, memoized."""
    cached = _canon_cache.get(rep)
    if cached is not None:
        return cached
    payloads = []
    aut_by_payload = {}
    for comp in _components(rep):
        payload, aut = _component_payload(rep, comp)
        payloads.append(payload)
        aut_by_payload[payload] = aut
    payloads.sort()
    result = (tuple(payloads), aut_by_payload)
    _canon_cache[rep] = result
    return result


def assemble_key(quiver, payloads):
    """CanonicalKey of the direct sum of component payloads (sorted first)."""
    payloads = sorted(payloads)
    r = quiver.num_vertices
    dims = [0] * r
    images = [[] for _ in quiver.edges]
    for comp_dims, comp_images in payloads:
        offsets = tuple(dims[v] for v in range(r))
        for k, (s, t) in enumerate(quiver.edges):
            images[k].extend(a + offsets[t] if a != 0 else 0 for a in comp_images[k])
        for v in range(r):
            dims[v] += comp_dims[v]
    return CanonicalKey(tuple(dims), tuple(tuple(img) for img in images))


def canonical_key(rep):
    """The canonical encoding of the isomorphism class of `rep`."""
    payloads, _ = _analyze(rep)
    return assemble_key(rep.quiver, payloads)


def iso(v, w):
    """Isomorphism test via canonical keys."""
    if v.quiver != w.quiver:
        raise ValueError("representations of different quivers")
    return canonical_key(v) == canonical_key(w)


def aut_count(rep):
    """Order of the automorphism group.

    Automorphisms permute isomorphic indecomposable components and act on
    each by its own automorphisms, so |Aut| is a product of wreath-product
    orders over the distinct summands.
    """
    import math

    payloads, aut_by_payload = _analyze(rep)
    total = 1
    for payload, mult in Counter(payloads).items():
        total *= aut_by_payload[payload] ** mult * math.factorial(mult)
    return total


def indecomposable_summands(rep):
    """Krull-Schmidt decomposition as a multiset of indecomposable keys."""
    payloads, _ = _analyze(rep)
    counts = Counter(assemble_key(rep.quiver, [p]) for p in payloads)
    return Decomposition(tuple(sorted(counts.items())))


def is_indecomposable(rep):
    if rep.total_dim < 1:
        raise ValueError("the zero representation is neither decomposable nor indecomposable")
    payloads, _ = _analyze(rep)
    return len(payloads) == 1


def composition_series(rep):
    """Vertex labels of the simple quotients of a maximal filtration.

    Built bottom-up: repeatedly take the lexicographically least nonzero
    element all of whose edge images vanish (a socle element, which exists
    by nilpotency), split off the simple it spans, quotient, recurse.
    """
    if not is_nilpotent(rep):
        raise ValueError("composition series requires a nilpotent representation")
    q = rep.quiver
    labels = []
    current = rep
    while current.total_dim > 0:
        found = None
        for v, x in current.elements():
            if all(
                current.maps[k](x) == 0
                for k, (s, _) in enumerate(q.edges)
                if s == v
            ):
                found = (v, x)
                break
        if found is None:
            raise AssertionError("nilpotent representation without socle (internal bug)")
        v, x = found
        subsets = tuple(
            frozenset({x}) if i == v else frozenset() for i in range(q.num_vertices)
        )
        current, _ = quotient(current, subsets)
        labels.append(v)
    return labels


# ---------------------------------------------------------------------------
# enumeration of isomorphism classes
# ---------------------------------------------------------------------------

_enum_cache = {}


def _partitions(n, max_part=None):
    """Partitions of n as non-increasing tuples, deterministically ordered."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def _is_jordan(quiver):
    return quiver == jordan_quiver()


def _is_cyclic(quiver):
    n = quiver.num_vertices
    return n >= 2 and quiver == cyclic_quiver(n)


def jordan_rep_of_partition(parts):
    """⊕ N_m over the parts, as a Jordan-quiver representation."""
    q = jordan_quiver()
    dim = sum(parts)
    f = PartialInjection.zero(0, 0)
    from .pointed import direct_sum_map

    for m in parts:
        f = direct_sum_map(f, nilpotent_block(m))
    return Rep(q, (dim,), (f,))


def _enumerate_jordan(total):
    return [canonical_key(jordan_rep_of_partition(p)) for p in _partitions(total)]


def _enumerate_cyclic(quiver, dims):
    """Nilpotent cyclic classes at a dim vector: multisets of windings I_[k,r]."""
    n = quiver.num_vertices
    total = sum(dims)
    candidates = []
    for r in range(1, total + 1):
        for k in range(n):
            w = winding_rep(n, k, r)
            if all(a <= b for a, b in zip(w.dims, dims)):
                candidates.append(((k, r), w.dims))
    keys = []

    def walk(idx, remaining, chosen):
        if all(d == 0 for d in remaining):
            rep = None
            for (k, r) in chosen:
                w = winding_rep(n, k, r)
                rep = w if rep is None else rep_direct_sum(rep, w)
            if rep is None:
                rep = make_rep(quiver, (0,) * n, [()] * n)
            keys.append(canonical_key(rep))
            return
        if idx >= len(candidates):
            return
        (kr, wdims) = candidates[idx]
        max_copies = min(
            (rem // wd if wd > 0 else total) for rem, wd in zip(remaining, wdims) if wd > 0
        )
        for copies in range(max_copies, -1, -1):
            new_rem = tuple(rem - copies * wd for rem, wd in zip(remaining, wdims))
            walk(idx + 1, new_rem, chosen + [kr] * copies)

    walk(0, tuple(dims), [])
    return keys


def enumerate_reps_exhaustive(quiver, dims, nilpotent_only=True):
    """All isomorphism classes at a dimension vector by exhausting edge maps."""
    dims = tuple(dims)
    seen = set()
    choices = [
        all_partial_injections(dims[s], dims[t]) for s, t in quiver.edges
    ]
    for maps in product(*choices):
        rep = Rep(quiver, dims, maps)
        if nilpotent_only and not is_nilpotent(rep):
            continue
        seen.add(canonical_key(rep))
    return sorted(seen)


def enumerate_reps(quiver, dims, nilpotent_only=True):
    """Deterministically ordered isomorphism classes at a dimension vector.

    For the Jordan and equi-oriented cyclic quivers (nilpotent case) the
    classes are indexed by partitions / multisets of windings; the generic
    path exhausts edge-map assignments and buckets by canonical key.
    """
    dims = tuple(dims)
    cache_key = (quiver, dims, bool(nilpotent_only))
    cached = _enum_cache.get(cache_key)
    if cached is not None:
        return list(cached)
    if nilpotent_only and _is_jordan(quiver):
        keys = sorted(_enumerate_jordan(dims[0]))
    elif nilpotent_only and _is_cyclic(quiver):
        keys = sorted(set(_enumerate_cyclic(quiver, dims)))
    else:
        keys = enumerate_reps_exhaustive(quiver, dims, nilpotent_only)
    _enum_cache[cache_key] = tuple(keys)
    return list(keys)


def _dim_vectors(num_vertices, total):
    """All vectors of the given length with non-negative entries summing to total."""
    if num_vertices == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _dim_vectors(num_vertices - 1, total - first):
            yield (first,) + rest


def enumerate_indecomposables(quiver, max_total_dim, nilpotent_only=True):
    """All indecomposable classes with total dimension up to the cap."""
    if nilpotent_only and _is_jordan(quiver):
        return sorted(
            canonical_key(jordan_rep_of_partition((m,)))
            for m in range(1, max_total_dim + 1)
        )
    out = []
    for total in range(1, max_total_dim + 1):
        for dims in _dim_vectors(quiver.num_vertices, total):
            for key in enumerate_reps(quiver, dims, nilpotent_only):
                rep = key.to_rep(quiver)
                if len(_components(rep)) == 1:
                    out.append(key)
    return sorted(out)
