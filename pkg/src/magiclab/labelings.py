"""The signed label model and every labeling predicate.

Labels for a graph of order n come from the symmetric set
{1-n, 3-n, ..., n-1}: an arithmetic progression with step 2 that is closed
under negation and contains 0 exactly when n is odd.  A labeling is distance
magic when every vertex's neighbor labels sum to zero, and self-reverse when
swapping each vertex with its negated-label partner is an automorphism.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .graphs import Graph


class LabelingError(ValueError):
    """Invalid labeling data or a violated operation precondition."""


def label_set(n: int) -> tuple[int, ...]:
    """The n labels 1-n, 3-n, ..., n-1, ascending."""
    if n < 1:
        raise LabelingError("label set needs a positive order")
    return tuple(range(1 - n, n, 2))


class Labeling:
    """Bijection from vertex indices onto label_set(n), stored by vertex."""

    __slots__ = ("n", "labels", "_pos")

    def __init__(self, labels: Sequence[int]):
        labels = tuple(labels)
        n = len(labels)
        if sorted(labels) != list(label_set(n)):
            raise LabelingError(
                f"labels must be a bijection onto {{1-n,...,n-1}} for n={n}"
            )
        self.n = n
        self.labels = labels
        self._pos = {lab: v for v, lab in enumerate(labels)}

    def label(self, v: int) -> int:
        return self.labels[v]

    def vertex_of(self, lab: int) -> int:
        return self._pos[lab]

    def partner(self, v: int) -> int:
        """The unique vertex whose label is the negation of v's label."""
        return self._pos[-self.labels[v]]

    def central_vertex(self) -> Optional[int]:
        """The vertex labeled 0, present exactly when n is odd."""
        return self._pos.get(0)

    def reverse(self) -> "Labeling":
        """Negate every label; distance magic is preserved."""
        return Labeling(tuple(-x for x in self.labels))

    def __eq__(self, other) -> bool:
        return isinstance(other, Labeling) and self.labels == other.labels

    def __hash__(self) -> int:
        return hash(self.labels)

    def __repr__(self) -> str:
        return f"Labeling({list(self.labels)})"

    def __setattr__(self, name, value):
        if hasattr(self, "_pos"):
            raise AttributeError("Labeling is immutable")
        object.__setattr__(self, name, value)


def labeling_to_json(l: Labeling) -> str:
    return json.dumps({"order": l.n, "labels": list(l.labels)})


def labeling_from_json(text: str) -> Labeling:
    data = json.loads(text)
    labels = [int(x) for x in data["labels"]]
    if len(labels) != int(data["order"]):
        raise LabelingError("label count does not match the declared order")
    return Labeling(labels)


def to_classical(l: Labeling) -> tuple[int, ...]:
    """Convert to the 1..n label model: (1 + n + label) / 2 per vertex."""
    return tuple((1 + l.n + x) // 2 for x in l.labels)


def _check_same_order(g: Graph, l: Labeling):
    if g.n != l.n:
        raise LabelingError(f"graph order {g.n} != labeling order {l.n}")


def is_distance_magic(g: Graph, l: Labeling) -> bool:
    """Every vertex's neighbor labels sum to 0."""
    _check_same_order(g, l)
    labels = l.labels
    return all(sum(labels[u] for u in nb) == 0 for nb in g.neighbors)


def partner(l: Labeling, v: int) -> int:
    return l.partner(v)


@dataclass(frozen=True)
class PairPartition:
    """Vertex pairs {v, partner(v)}, plus the central singleton for odd order."""

    pairs: tuple[tuple[int, int], ...]
    central: Optional[int]


def pair_partition(l: Labeling) -> PairPartition:
    """Partition of the vertex set into negation pairs, sorted by positive label."""
    pairs = []
    for lab in range(1 if l.n % 2 == 0 else 2, l.n, 2):
        u, v = l.vertex_of(lab), l.vertex_of(-lab)
        pairs.append((min(u, v), max(u, v)))
    return PairPartition(tuple(pairs), l.central_vertex())


def reverse(l: Labeling) -> Labeling:
    return l.reverse()


def is_self_reverse(g: Graph, l: Labeling) -> bool:
    """The partner involution is an automorphism of g.

    Equivalently: u ~ v exactly when partner(u) ~ partner(v) for all pairs,
    and the labeling is equivalent to its reverse.
    """
    _check_same_order(g, l)
    part = [l.partner(v) for v in range(g.n)]
    for u in range(g.n):
        pu = part[u]
        for v in g.neighbors[u]:
            if not g.has_edge(pu, part[v]):
                return False
    return True


def is_degenerate(g: Graph, l: Labeling) -> bool:
    """Some vertex u (not self-paired) is adjacent to both members of another pair."""
    _check_same_order(g, l)
    part = [l.partner(v) for v in range(g.n)]
    for u in range(g.n):
        if part[u] == u:
            continue
        for v in g.neighbors[u]:
            pv = part[v]
            if pv != v and pv != u and g.has_edge(u, pv):
                return True
    return False


class LabelGraph:
    """Graph whose vertex set is the label set itself.

    The image of a labeled graph under its labeling; two labelings are
    equivalent exactly when they induce the same LabelGraph, so this is the
    canonical representative of a labeling-equivalence class.
    """

    __slots__ = ("n", "edges", "_key")

    def __init__(self, n: int, edges: Iterable[Sequence[int]]):
        valid = set(label_set(n))
        norm = set()
        for e in edges:
            a, b = e
            if a not in valid or b not in valid:
                raise LabelingError(f"label edge ({a},{b}) outside the label set")
            if a == b:
                raise LabelingError(f"label edge with equal endpoints {a}")
            norm.add((a, b) if a < b else (b, a))
        self.n = n
        self.edges = frozenset(norm)
        self._key = (n, tuple(sorted(norm)))

    def sort_key(self) -> tuple:
        return self._key

    def to_graph(self) -> tuple[Graph, Labeling]:
        """Concrete (Graph, Labeling) on ascending-label vertex order."""
        labs = label_set(self.n)
        index = {lab: i for i, lab in enumerate(labs)}
        g = Graph(self.n, [(index[a], index[b]) for a, b in self.edges])
        return g, Labeling(labs)

    def __eq__(self, other) -> bool:
        return isinstance(other, LabelGraph) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"LabelGraph(n={self.n}, edges={len(self.edges)})"

    def __setattr__(self, name, value):
        if hasattr(self, "_key"):
            raise AttributeError("LabelGraph is immutable")
        object.__setattr__(self, name, value)


def label_graph_to_json(lg: LabelGraph) -> str:
    return json.dumps({"order": lg.n, "edges": [list(e) for e in sorted(lg.edges)]})


def label_graph_from_json(text: str) -> LabelGraph:
    data = json.loads(text)
    return LabelGraph(int(data["order"]), [tuple(e) for e in data["edges"]])


def label_graph(g: Graph, l: Labeling) -> LabelGraph:
    """Edge {label(u), label(v)} for each edge {u, v} of g."""
    _check_same_order(g, l)
    labels = l.labels
    return LabelGraph(g.n, [(labels[u], labels[v]) for u, v in g.edges()])


def are_equivalent(g1: Graph, l1: Labeling, g2: Graph, l2: Labeling) -> bool:
    """Same adjacency between every pair of labels."""
    if l1.n != l2.n:
        raise LabelingError(f"order mismatch: {l1.n} != {l2.n}")
    return label_graph(g1, l1) == label_graph(g2, l2)


def bipartition(l: Labeling) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(A, B) with A the vertices of nonnegative label, B the rest."""
    a = tuple(v for v in range(l.n) if l.labels[v] >= 0)
    b = tuple(v for v in range(l.n) if l.labels[v] < 0)
    return a, b


def is_link(g: Graph, l: Labeling, e: Sequence[int]) -> bool:
    """Exactly one endpoint of e carries a negative label."""
    _check_same_order(g, l)
    u, v = e
    if not g.has_edge(u, v):
        raise LabelingError(f"({u},{v}) is not an edge")
    return (l.labels[u] < 0) != (l.labels[v] < 0)


def is_balanced(g: Graph, l: Labeling) -> bool:
    """Every vertex has equally many neighbors of each sign class.

    Defined only when every vertex has even degree.
    """
    _check_same_order(g, l)
    labels = l.labels
    for nb in g.neighbors:
        if len(nb) % 2 != 0:
            raise LabelingError("balance requires every vertex degree to be even")
    for nb in g.neighbors:
        neg = sum(1 for u in nb if labels[u] < 0)
        if 2 * neg != len(nb):
            return False
    return True


def _cyclet_vertices(c) -> tuple[int, ...]:
    return tuple(getattr(c, "vertices", c))


def is_alternating(g: Graph, l: Labeling, c) -> bool:
    """Consecutive cyclet edges, closing edge included, alternate link/non-link."""
    _check_same_order(g, l)
    vs = _cyclet_vertices(c)
    d = len(vs)
    if d < 3:
        raise LabelingError(f"a cyclet has at least 3 vertices, got {d}")
    if d % 2 != 0:
        raise LabelingError("alternation is defined for even-length cyclets only")
    flags = [is_link(g, l, (vs[i], vs[(i + 1) % d])) for i in range(d)]
    return all(flags[i] != flags[(i + 1) % d] for i in range(d))


def self_reverse_by_pair_structure(g: Graph, l: Labeling) -> bool:
    """Independent self-reverse test via the pair-partition edge patterns.

    Between any two distinct partition sets the induced bipartite subgraph
    must be empty, complete, or a pair of disjoint edges.  Used to cross-check
    is_self_reverse; both must always agree.
    """
    _check_same_order(g, l)
    part = pair_partition(l)
    sets: list[tuple[int, ...]] = [p for p in part.pairs]
    if part.central is not None:
        sets.append((part.central,))
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            a_set, b_set = sets[i], sets[j]
            cross = [
                (u, v) for u in a_set for v in b_set if g.has_edge(u, v)
            ]
            k = len(cross)
            if k == 0 or k == len(a_set) * len(b_set):
                continue
            if (
                k == 2
                and len(a_set) == 2
                and len(b_set) == 2
                and cross[0][0] != cross[1][0]
                and cross[0][1] != cross[1][1]
            ):
                continue
            return False
    return True
