"""Quivers and their representations in pointed finite sets.

A representation assigns a dimension to each vertex and a partial
injection to each edge.  Elements at vertex i are labeled 1..dims[i];
the global element (i, x) notation is used for subrepresentation and
component bookkeeping.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .pointed import PartialInjection, compose, direct_sum_map


@dataclass(frozen=True, order=True)
class Quiver:
    """A finite directed multigraph; self-loops and parallel edges allowed."""

    num_vertices: int
    edges: tuple

    def __post_init__(self):
        if self.num_vertices < 1:
            raise ValueError("a quiver needs at least one vertex")
        for src, tgt in self.edges:
            if not (0 <= src < self.num_vertices and 0 <= tgt < self.num_vertices):
                raise ValueError(f"edge ({src},{tgt}) out of range")

    @property
    def num_edges(self):
        return len(self.edges)

    def has_self_loops(self):
        return any(src == tgt for src, tgt in self.edges)

    def edges_between(self, i, j):
        """Number of edges joining i and j in either direction."""
        return sum(1 for s, t in self.edges if {s, t} == {i, j})

    def is_tree(self):
        """True if the underlying unoriented graph is a tree."""
        if self.has_self_loops() or len(self.edges) != self.num_vertices - 1:
            return False
        parent = list(range(self.num_vertices))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for s, t in self.edges:
            rs, rt = find(s), find(t)
            if rs == rt:
                return False
            parent[rs] = rt
        return True


def jordan_quiver():
    """One vertex with a single self-loop."""
    return Quiver(1, ((0, 0),))


def linear_quiver(n, orientation=None):
    """Type A_n path on vertices 0..n-1.

    `orientation[k]` is True for the edge k -> k+1, False for k+1 -> k;
    defaults to all edges pointing right.
    """
    if orientation is None:
        orientation = (True,) * (n - 1)
    if len(orientation) != n - 1:
        raise ValueError("orientation needs one entry per edge")
    edges = tuple((k, k + 1) if fwd else (k + 1, k) for k, fwd in enumerate(orientation))
    return Quiver(n, edges)


def cyclic_quiver(n):
    """Equi-oriented cycle on residues 0..n-1 with edges i -> i-1 (mod n)."""
    if n < 2:
        raise ValueError("cyclic quiver needs at least 2 vertices")
    return Quiver(n, tuple((i, (i - 1) % n) for i in range(n)))


@dataclass(frozen=True, order=True)
class Rep:
    """A representation: a dimension per vertex, a partial injection per edge."""

    quiver: Quiver
    dims: tuple
    maps: tuple

    def __post_init__(self):
        validate(self)

    @property
    def dim_vector(self):
        return self.dims

    @property
    def total_dim(self):
        return sum(self.dims)

    def elements(self):
        """All nonzero global elements (vertex, label), in increasing order."""
        return [(i, x) for i in range(self.quiver.num_vertices) for x in range(1, self.dims[i] + 1)]


def validate(rep):
    """Check the Rep shape invariants; raises with the offending edge named."""
    q = rep.quiver
    if len(rep.dims) != q.num_vertices:
        raise ValueError(
            f"dims has {len(rep.dims)} entries, quiver has {q.num_vertices} vertices"
        )
    if any(d < 0 for d in rep.dims):
        raise ValueError("negative dimension")
    if len(rep.maps) != q.num_edges:
        raise ValueError(f"maps has {len(rep.maps)} entries, quiver has {q.num_edges} edges")
    for k, (src, tgt) in enumerate(q.edges):
        f = rep.maps[k]
        if f.src_dim != rep.dims[src] or f.tgt_dim != rep.dims[tgt]:
            raise ValueError(
                f"edge {k} ({src}->{tgt}): map is {f.src_dim}->{f.tgt_dim}, "
                f"expected {rep.dims[src]}->{rep.dims[tgt]}"
            )


def zero_rep(quiver):
    dims = (0,) * quiver.num_vertices
    maps = tuple(PartialInjection.zero(0, 0) for _ in quiver.edges)
    return Rep(quiver, dims, maps)


def make_rep(quiver, dims, images):
    """Build a Rep from raw per-edge image lists."""
    dims = tuple(dims)
    if len(dims) != quiver.num_vertices:
        raise ValueError(
            f"dims has {len(dims)} entries, quiver has {quiver.num_vertices} vertices"
        )
    maps = tuple(
        PartialInjection(dims[src], dims[tgt], tuple(img))
        for (src, tgt), img in zip(quiver.edges, images)
    )
    return Rep(quiver, dims, maps)


@dataclass(frozen=True)
class RepMorphism:
    """A vertexwise family of partial injections making every edge square commute."""

    source: Rep
    target: Rep
    components: tuple

    def __post_init__(self):
        if self.source.quiver != self.target.quiver:
            raise ValueError("morphism between representations of different quivers")
        for i, phi in enumerate(self.components):
            if phi.src_dim != self.source.dims[i] or phi.tgt_dim != self.target.dims[i]:
                raise ValueError(f"component at vertex {i} has wrong dimensions")
        for k, (src, tgt) in enumerate(self.source.quiver.edges):
            left = compose(self.target.maps[k], self.components[src])
            right = compose(self.components[tgt], self.source.maps[k])
            if left != right:
                raise ValueError(f"square for edge {k} ({src}->{tgt}) does not commute")

    @classmethod
    def identity(cls, rep):
        return cls(rep, rep, tuple(PartialInjection.identity(d) for d in rep.dims))

    @classmethod
    def zero(cls, source, target):
        return cls(
            source,
            target,
            tuple(PartialInjection.zero(s, t) for s, t in zip(source.dims, target.dims)),
        )


def rep_kernel(phi):
    """Vertexwise kernel with induced edge maps and its inclusion."""
    from .pointed import kernel as pkernel

    src_rep = phi.source
    q = src_rep.quiver
    spaces = []
    incls = []
    for i in range(q.num_vertices):
        space, incl = pkernel(phi.components[i])
        spaces.append(space.dim)
        incls.append(incl)
    maps = []
    for k, (s, t) in enumerate(q.edges):
        # inverse of the target inclusion, defined on its image
        back = {incls[t](y): y for y in range(1, spaces[t] + 1)}
        image = []
        for x in range(1, spaces[s] + 1):
            old = src_rep.maps[k](incls[s](x))
            if old == 0:
                image.append(0)
            else:
                if old not in back:
                    raise AssertionError("kernel not closed under edge maps (internal bug)")
                image.append(back[old])
        maps.append(PartialInjection(spaces[s], spaces[t], tuple(image)))
    ker = Rep(q, tuple(spaces), tuple(maps))
    return ker, RepMorphism(ker, src_rep, tuple(incls))


def rep_cokernel(phi):
    """Vertexwise cokernel with induced edge maps and the projection onto it."""
    from .pointed import cokernel as pcokernel

    tgt_rep = phi.target
    q = tgt_rep.quiver
    spaces = []
    projs = []
    for i in range(q.num_vertices):
        space, proj = pcokernel(phi.components[i])
        spaces.append(space.dim)
        projs.append(proj)
    maps = []
    for k, (s, t) in enumerate(q.edges):
        # section of the source projection: surviving old element per new one
        lift = {}
        for w in range(1, tgt_rep.dims[s] + 1):
            c = projs[s](w)
            if c != 0:
                lift[c] = w
        image = []
        for c in range(1, spaces[s] + 1):
            image.append(projs[t](tgt_rep.maps[k](lift[c])))
        maps.append(PartialInjection(spaces[s], spaces[t], tuple(image)))
    coker = Rep(q, tuple(spaces), tuple(maps))
    return coker, RepMorphism(tgt_rep, coker, tuple(projs))


def rep_direct_sum(v, w):
    """Vertexwise direct sum with blockwise edge maps."""
    if v.quiver != w.quiver:
        raise ValueError("direct sum of representations of different quivers")
    dims = tuple(a + b for a, b in zip(v.dims, w.dims))
    maps = tuple(direct_sum_map(f, g) for f, g in zip(v.maps, w.maps))
    return Rep(v.quiver, dims, maps)


def is_nilpotent(rep):
    """True iff the directed graph on nonzero elements is acyclic.

    An arc (i,x) -> (j,y) exists whenever some edge map sends x to y != 0.
    A cycle yields arbitrarily long nonzero path compositions; acyclicity
    bounds nonzero path length by the total dimension, so this matches the
    all-long-paths-vanish definition.
    """
    succ = {e: [] for e in rep.elements()}
    for k, (s, t) in enumerate(rep.quiver.edges):
        for x in range(1, rep.dims[s] + 1):
            y = rep.maps[k](x)
            if y != 0:
                succ[(s, x)].append((t, y))
    state = dict.fromkeys(succ, 0)  # 0 unseen, 1 on stack, 2 done
    for start in succ:
        if state[start] != 0:
            continue
        stack = [(start, iter(succ[start]))]
        state[start] = 1
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                if state[nxt] == 1:
                    return False
                if state[nxt] == 0:
                    state[nxt] = 1
                    stack.append((nxt, iter(succ[nxt])))
                    advanced = True
                    break
            if not advanced:
                state[node] = 2
                stack.pop()
    return True


def _is_closed(rep, subsets):
    """Whether the per-vertex element subsets are stable under all edge maps."""
    for k, (s, t) in enumerate(rep.quiver.edges):
        for x in subsets[s]:
            y = rep.maps[k](x)
            if y != 0 and y not in subsets[t]:
                return False
    return True


def subrep_element_sets(rep):
    """All edge-closed per-vertex element subsets, deterministically ordered."""
    per_vertex = [
        [frozenset(c) for r in range(rep.dims[i] + 1) for c in _subsets(rep.dims[i], r)]
        for i in range(rep.quiver.num_vertices)
    ]
    out = []
    for subsets in product(*per_vertex):
        if _is_closed(rep, subsets):
            out.append(tuple(subsets))
    return out


def _subsets(n, r):
    from itertools import combinations

    return combinations(range(1, n + 1), r)


def _sub_rep_data(rep, subsets):
    """The subrepresentation alone (closure assumed), elements renumbered."""
    q = rep.quiver
    ordered = [sorted(subsets[i]) for i in range(q.num_vertices)]
    dims = tuple(len(o) for o in ordered)
    new_label = [{x: k + 1 for k, x in enumerate(o)} for o in ordered]
    maps = []
    for k, (s, t) in enumerate(q.edges):
        image = []
        for x in ordered[s]:
            y = rep.maps[k](x)
            image.append(new_label[t][y] if y != 0 else 0)
        maps.append(PartialInjection(dims[s], dims[t], tuple(image)))
    return Rep(q, dims, tuple(maps)), ordered


def sub_rep(rep, subsets):
    """The subrepresentation on the given closed subsets, with its inclusion.

    Surviving elements are renumbered in increasing order.
    """
    if not _is_closed(rep, subsets):
        raise ValueError("subsets not closed under edge maps")
    q = rep.quiver
    sub, ordered = _sub_rep_data(rep, subsets)
    dims = sub.dims
    incl = RepMorphism(
        sub,
        rep,
        tuple(
            PartialInjection(dims[i], rep.dims[i], tuple(ordered[i]))
            for i in range(q.num_vertices)
        ),
    )
    return sub, incl


def subrepresentations(rep):
    """Enumerate all subrepresentations with their inclusions."""
    return [sub_rep(rep, subsets) for subsets in subrep_element_sets(rep)]


def _quotient_data(rep, subsets):
    """The quotient alone (closure assumed), survivors renumbered."""
    q = rep.quiver
    survivors = [
        [x for x in range(1, rep.dims[i] + 1) if x not in subsets[i]]
        for i in range(q.num_vertices)
    ]
    dims = tuple(len(s) for s in survivors)
    new_label = [{x: k + 1 for k, x in enumerate(s)} for s in survivors]
    maps = []
    for k, (s, t) in enumerate(q.edges):
        image = []
        for x in survivors[s]:
            y = rep.maps[k](x)
            image.append(new_label[t].get(y, 0))
        maps.append(PartialInjection(dims[s], dims[t], tuple(image)))
    return Rep(q, dims, tuple(maps)), new_label


def quotient(rep, subsets):
    """Collapse a closed subrepresentation to the basepoint, vertexwise.

    Surviving elements are renumbered in increasing order; returns the
    quotient with its projection.
    """
    if not _is_closed(rep, subsets):
        raise ValueError("subsets not closed under edge maps")
    q = rep.quiver
    quot, new_label = _quotient_data(rep, subsets)
    dims = quot.dims
    proj = RepMorphism(
        rep,
        quot,
        tuple(
            PartialInjection(
                rep.dims[i],
                dims[i],
                tuple(new_label[i].get(x, 0) for x in range(1, rep.dims[i] + 1)),
            )
            for i in range(q.num_vertices)
        ),
    )
    return quot, proj


def winding_rep(n, k, r):
    """The r-dimensional nilpotent cyclic-quiver representation starting at k.

    Elements wind down the cycle: step s (0-based) sits at vertex (k-s) mod n,
    and the edge j -> j-1 carries step s to step s+1.  Local labels at each
    vertex follow increasing s.
    """
    q = cyclic_quiver(n)
    at_vertex = [[] for _ in range(n)]
    vertex_of = []
    for s in range(r):
        v = (k - s) % n
        vertex_of.append(v)
        at_vertex[v].append(s)
    dims = tuple(len(a) for a in at_vertex)
    local = {}
    for v in range(n):
        for idx, s in enumerate(at_vertex[v]):
            local[s] = idx + 1
    images = []
    for src, tgt in q.edges:
        img = []
        for s in at_vertex[src]:
            nxt = s + 1
            if nxt < r and vertex_of[nxt] == tgt:
                img.append(local[nxt])
            else:
                img.append(0)
        images.append(img)
    return make_rep(q, dims, images)
