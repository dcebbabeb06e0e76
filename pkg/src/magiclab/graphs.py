"""Simple undirected graphs on dense 0-based vertex indices.

Provides the structural queries the rest of the package is built on:
regularity, connectivity, canonical forms, isomorphism and automorphism
groups for small orders.  Canonical forms use individualization-refinement
on a twin-reduced copy of the graph: vertices with identical open
neighborhoods are collapsed into a single colored vertex first, which is
exact for isomorphism and keeps twin-rich graphs (the wreath family)
tractable.

All values are immutable; module-level caches are keyed by graph value and
are semantically transparent.
"""

from __future__ import annotations

import json
from itertools import permutations
from math import factorial
from typing import Iterable, Sequence

MAX_CANONICAL_ORDER = 64
MAX_GROUP_ORDER = 32
MAX_GROUP_SIZE = 2_000_000


class GraphError(ValueError):
    """Invalid graph construction or an operation outside documented limits."""


class Graph:
    """Finite simple undirected graph.

    Vertices are 0..n-1; adjacency is stored as sorted, duplicate-free
    neighbor tuples.  Instances are immutable and hashable (labeled
    equality, not isomorphism).
    """

    __slots__ = ("n", "neighbors", "_edgeset", "_hash")

    def __init__(self, n: int, edges: Iterable[Sequence[int]]):
        if n < 0:
            raise GraphError(f"order must be nonnegative, got {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) has an endpoint outside 0..{n-1}")
            if u == v:
                raise GraphError(f"loop edge at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.neighbors = tuple(tuple(sorted(s)) for s in nbrs)
        self._edgeset = frozenset(
            (u, v) for u in range(n) for v in self.neighbors[u] if u < v
        )
        self._hash = hash((n, self._edgeset))

    # -- basic queries ----------------------------------------------------

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self._edgeset if u < v else (v, u) in self._edgeset

    def edges(self) -> list[tuple[int, int]]:
        """Edge list as (u, v) with u < v, sorted lexicographically."""
        return sorted(self._edgeset)

    @property
    def edge_count(self) -> int:
        return len(self._edgeset)

    def is_regular(self, k: int) -> bool:
        return all(len(nb) == k for nb in self.neighbors)

    def is_connected(self) -> bool:
        """True iff the graph has a single connected component.

        The empty graph is vacuously connected.
        """
        if self.n == 0:
            return True
        return len(self.component_of(0)) == self.n

    def component_of(self, v: int) -> list[int]:
        seen = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in self.neighbors[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return sorted(seen)

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._edgeset == other._edgeset
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={len(self._edgeset)})"

    def __setattr__(self, name, value):
        if hasattr(self, "_hash"):
            raise AttributeError("Graph is immutable")
        object.__setattr__(self, name, value)


def new_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph, collapsing duplicate edges; loops and bad indices raise."""
    return Graph(n, edges)


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the connected components, each sorted, ordered by minimum."""
    seen: set[int] = set()
    comps = []
    for v in range(g.n):
        if v not in seen:
            comp = g.component_of(v)
            seen.update(comp)
            comps.append(comp)
    return comps


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph induced on `vertices`, reindexed by their sorted order."""
    vs = sorted(vertices)
    index = {v: i for i, v in enumerate(vs)}
    edges = [
        (index[u], index[v])
        for u in vs
        for v in g.neighbors[u]
        if v in index and u < v
    ]
    return Graph(len(vs), edges)


def apply_permutation(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabeled copy of g: vertex v becomes perm[v]."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("permutation must be a bijection on 0..n-1")
    return Graph(g.n, [(perm[u], perm[v]) for (u, v) in g.edges()])


# -- JSON wire format -------------------------------------------------------


def graph_to_json(g: Graph) -> str:
    return json.dumps({"order": g.n, "edges": [list(e) for e in g.edges()]})


def graph_from_json(text: str) -> Graph:
    data = json.loads(text)
    return Graph(int(data["order"]), [tuple(e) for e in data["edges"]])


# -- twin reduction ----------------------------------------------------------
#
# Two vertices are (open) twins when they have identical neighborhoods; twin
# classes are independent sets and any two classes are joined completely or
# not at all, so the colored reduced graph determines the original exactly.


def _twin_classes(g: Graph) -> list[list[int]]:
    groups: dict[tuple[int, ...], list[int]] = {}
    for v in range(g.n):
        groups.setdefault(g.neighbors[v], []).append(v)
    return sorted(groups.values(), key=lambda c: c[0])


def _reduce_twins(g: Graph):
    """Return (reduced neighbor tuples, class sizes, classes).

    Reduced vertex i stands for classes[i]; classes are ordered by their
    smallest original vertex, which is irrelevant for canonicalization
    (refinement re-sorts) but keeps everything deterministic.
    """
    classes = _twin_classes(g)
    index = {}
    for i, cls in enumerate(classes):
        for v in cls:
            index[v] = i
    k = len(classes)
    adj: list[set[int]] = [set() for _ in range(k)]
    for i, cls in enumerate(classes):
        rep = cls[0]
        for u in g.neighbors[rep]:
            adj[i].add(index[u])
    reduced = tuple(tuple(sorted(s)) for s in adj)
    sizes = tuple(len(c) for c in classes)
    return reduced, sizes, classes


# -- individualization-refinement -------------------------------------------


def _refine(neigh: Sequence[Sequence[int]], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement of an ordered partition.

    Splits every cell by the multiset of neighbor cell indices; sub-cells are
    ordered by signature, so the result depends only on the isomorphism type
    of (graph, ordered partition).
    """
    n = len(neigh)
    while True:
        cid = [0] * n
        for i, cell in enumerate(cells):
            for v in cell:
                cid[v] = i
        new_cells: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            buckets: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple(sorted(cid[u] for u in neigh[v]))
                buckets.setdefault(sig, []).append(v)
            if len(buckets) == 1:
                new_cells.append(cell)
            else:
                changed = True
                for sig in sorted(buckets):
                    new_cells.append(buckets[sig])
        cells = new_cells
        if not changed:
            return cells


def _encode_leaf(neigh: Sequence[Sequence[int]], order: list[int]) -> tuple[int, ...]:
    """Adjacency-matrix row encoding under the leaf ordering (position -> vertex).

    Row i is an integer whose bit (n-1-j) is set when positions i and j are
    adjacent, so tuple comparison is lexicographic on matrix rows.
    """
    n = len(neigh)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for i, v in enumerate(order):
        row = 0
        for u in neigh[v]:
            row |= 1 << (n - 1 - pos[u])
        rows.append(row)
    return tuple(rows)


def _ir_leaves(neigh: Sequence[Sequence[int]], cells: list[list[int]]):
    """All minimal-encoding leaves of the refinement search tree.

    Returns (best encoding, list of position->vertex orders achieving it).
    Branches on the smallest non-singleton cell, earliest among ties,
    individualizing its members in ascending order.
    """
    best: list = [None]
    best_orders: list[list[int]] = []

    def rec(cells: list[list[int]]):
        cells = _refine(neigh, cells)
        target = -1
        target_size = None
        for i, cell in enumerate(cells):
            if len(cell) > 1 and (target_size is None or len(cell) < target_size):
                target, target_size = i, len(cell)
        if target < 0:
            order = [cell[0] for cell in cells]
            enc = _encode_leaf(neigh, order)
            if best[0] is None or enc < best[0]:
                best[0] = enc
                best_orders.clear()
                best_orders.append(order)
            elif enc == best[0]:
                best_orders.append(order)
            return
        cell = cells[target]
        for v in sorted(cell):
            rest = [u for u in cell if u != v]
            rec(cells[:target] + [[v], rest] + cells[target + 1 :])

    rec(cells)
    return best[0], best_orders


def _initial_cells(sizes: Sequence[int]) -> list[list[int]]:
    """Ordered partition grouping reduced vertices by twin-class size, ascending."""
    by_size: dict[int, list[int]] = {}
    for i, s in enumerate(sizes):
        by_size.setdefault(s, []).append(i)
    return [by_size[s] for s in sorted(by_size)]


_canon_cache: dict[Graph, tuple] = {}


def _canonical_data(g: Graph):
    """(code bytes, reduced neighbors, sizes, classes, canonical leaf orders).

    Cached per graph value; all consumers below share this computation.
    """
    cached = _canon_cache.get(g)
    if cached is not None:
        return cached
    if g.n > MAX_CANONICAL_ORDER:
        raise GraphError(
            f"order {g.n} exceeds the canonical-form limit {MAX_CANONICAL_ORDER}"
        )
    reduced, sizes, classes = _reduce_twins(g)
    if not reduced:
        data = (bytes([0, 0]), reduced, sizes, classes, [[]])
        _canon_cache[g] = data
        return data
    enc, orders = _ir_leaves(reduced, _initial_cells(sizes))
    k = len(reduced)
    order0 = orders[0]
    head = bytes([g.n, k]) + bytes(sizes[v] for v in order0)
    rowbytes = (k + 7) // 8
    body = b"".join(row.to_bytes(rowbytes, "big") for row in enc)
    data = (head + body, reduced, sizes, classes, orders)
    _canon_cache[g] = data
    return data


def canonical_code(g: Graph) -> bytes:
    """Order-invariant encoding of g's isomorphism class.

    Equal codes characterize isomorphic graphs for orders up to
    MAX_CANONICAL_ORDER; serialize with .hex() for the wire format.
    """
    return _canonical_data(g)[0]


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(map(len, g.neighbors)) != sorted(map(len, h.neighbors)):
        return False
    return canonical_code(g) == canonical_code(h)


# -- automorphisms -----------------------------------------------------------


def _reduced_automorphisms(g: Graph) -> list[tuple[int, ...]]:
    """Color-preserving automorphisms of the twin-reduced graph."""
    _, reduced, _sizes, _classes, orders = _canonical_data(g)
    if not reduced:
        return [()]
    base = orders[0]
    autos = []
    for order in orders:
        perm = [0] * len(reduced)
        for i, v in enumerate(base):
            perm[v] = order[i]
        autos.append(tuple(perm))
    return autos


def group_order(g: Graph) -> int:
    """|Aut(g)| without listing the group."""
    _, _reduced, _sizes, classes, _orders = _canonical_data(g)
    count = len(_reduced_automorphisms(g))
    for cls in classes:
        count *= factorial(len(cls))
    return count


def automorphism_group(g: Graph) -> list[tuple[int, ...]]:
    """Complete list of adjacency-preserving permutations, identity included.

    Each permutation is an image tuple (vertex v maps to perm[v]), and the
    list is sorted.  Limited to order MAX_GROUP_ORDER and to groups of at
    most MAX_GROUP_SIZE elements.
    """
    if g.n > MAX_GROUP_ORDER:
        raise GraphError(
            f"order {g.n} exceeds the group-listing limit {MAX_GROUP_ORDER}"
        )
    size = group_order(g)
    if size > MAX_GROUP_SIZE:
        raise GraphError(f"automorphism group of size {size} is too large to list")
    _, _reduced, _sizes, classes, _orders = _canonical_data(g)
    reduced_autos = _reduced_automorphisms(g)
    class_perm_pools = [list(permutations(cls)) for cls in classes]
    perms = []

    def build(ra_idx: int, pool_idx: int, perm: list[int]):
        if pool_idx == len(classes):
            perms.append(tuple(perm))
            return
        ra = reduced_autos[ra_idx]
        src = classes[pool_idx]
        dst = classes[ra[pool_idx]]
        for arrangement in class_perm_pools[pool_idx]:
            # arrangement is an ordering of src members; map them onto dst in order
            for s, d in zip(arrangement, dst):
                perm[s] = d
            build(ra_idx, pool_idx + 1, perm)

    scratch = [0] * g.n
    for ra_idx in range(len(reduced_autos)):
        build(ra_idx, 0, scratch)
    perms.sort()
    return perms


def _aut_generators(g: Graph) -> list[tuple[int, ...]]:
    """Generating set for Aut(g): twin-class transpositions + lifted reduced autos."""
    _, _reduced, _sizes, classes, _orders = _canonical_data(g)
    gens = []
    identity = list(range(g.n))
    for cls in classes:
        for a, b in zip(cls, cls[1:]):
            perm = identity[:]
            perm[a], perm[b] = b, a
            gens.append(tuple(perm))
    for ra in _reduced_automorphisms(g):
        perm = identity[:]
        for i, cls in enumerate(classes):
            for s, d in zip(cls, classes[ra[i]]):
                perm[s] = d
        gens.append(tuple(perm))
    return gens


def _vertex_orbits(g: Graph) -> list[list[int]]:
    gens = _aut_generators(g)
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for perm in gens:
        for v in range(g.n):
            a, b = find(v), find(perm[v])
            if a != b:
                parent[a] = b
    orbits: dict[int, list[int]] = {}
    for v in range(g.n):
        orbits.setdefault(find(v), []).append(v)
    return sorted(orbits.values(), key=lambda o: o[0])


def vertex_orbit_representatives(g: Graph) -> list[int]:
    """One vertex per automorphism orbit (the minimum of each)."""
    return [orbit[0] for orbit in _vertex_orbits(g)]


def is_vertex_transitive(g: Graph) -> bool:
    """True iff the automorphism group has a single vertex orbit."""
    if g.n > MAX_GROUP_ORDER:
        raise GraphError(
            f"order {g.n} exceeds the group-listing limit {MAX_GROUP_ORDER}"
        )
    if g.n == 0:
        return True
    return len(_vertex_orbits(g)) == 1


def is_edge_transitive(g: Graph) -> bool:
    """True iff the automorphism group has a single edge orbit."""
    if g.n > MAX_GROUP_ORDER:
        raise GraphError(
            f"order {g.n} exceeds the group-listing limit {MAX_GROUP_ORDER}"
        )
    edges = g.edges()
    if not edges:
        return True
    gens = _aut_generators(g)
    start = edges[0]
    seen = {start}
    stack = [start]
    while stack:
        u, v = stack.pop()
        for perm in gens:
            a, b = perm[u], perm[v]
            e = (a, b) if a < b else (b, a)
            if e not in seen:
                seen.add(e)
                stack.append(e)
    return len(seen) == len(edges)
