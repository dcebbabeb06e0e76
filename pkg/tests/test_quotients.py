import pytest

from magiclab.families import wreath, wreath_natural_labeling, wreath_nondegenerate_labeling
from magiclab.graphs import are_isomorphic
from magiclab.labelings import are_equivalent, is_distance_magic, is_self_reverse
from magiclab.quotients import (
    DASHED,
    SOLID,
    QuotientError,
    QuotientGraph,
    export_dot,
    lift,
    quotient,
    quotient_from_json,
    quotient_to_json,
)
from magiclab.search import SearchOptions, enumerate_sr

# Quotient of an order-21 instance: central vertex 0 with two solid edges,
# every other vertex balancing its solid neighbors against its dashed ones.
ODD21_EDGES = [
    (0, 2, SOLID), (0, 18, SOLID),
    (2, 8, SOLID), (2, 10, SOLID), (2, 18, DASHED),
    (4, 8, SOLID), (4, 12, DASHED), (4, 16, DASHED), (4, 20, SOLID),
    (6, 10, DASHED), (6, 14, SOLID), (6, 16, SOLID), (6, 20, DASHED),
    (8, 12, SOLID), (8, 18, DASHED),
    (10, 14, DASHED), (10, 18, SOLID),
    (12, 16, SOLID), (12, 20, DASHED),
    (14, 16, DASHED), (14, 20, SOLID),
]


def w4_quotient() -> QuotientGraph:
    return quotient(wreath(4), wreath_nondegenerate_labeling(4))


class TestQuotientConstruction:
    def test_w4_structure(self):
        q = w4_quotient()
        assert q.vertices == (1, 3, 5, 7)
        assert q.semiedges == frozenset({1, 3, 5, 7})
        colors = {(a, b): c for a, b, c in q.edges}
        assert colors == {
            (1, 3): SOLID, (1, 5): SOLID, (3, 7): SOLID, (5, 7): SOLID,
            (1, 7): DASHED, (3, 5): DASHED,
        }

    def test_degenerate_rejected(self):
        with pytest.raises(QuotientError):
            quotient(wreath(3), wreath_natural_labeling(3))

    def test_non_tetravalent_rejected(self):
        from magiclab.graphs import Graph
        from magiclab.labelings import Labeling
        square = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        with pytest.raises(QuotientError):
            quotient(square, Labeling([1, 3, -1, -3]))

    def test_odd_order_central_vertex(self):
        q = QuotientGraph(21, ODD21_EDGES, semiedges=(), central=True)
        q.validate()
        g, l = lift(q)
        assert g.n == 21 and g.is_regular(4) and g.is_connected()
        assert is_distance_magic(g, l) and is_self_reverse(g, l)
        q2 = quotient(g, l)
        assert q2 == q
        central_edges = [(a, b) for a, b, c in q2.edges if 0 in (a, b)]
        assert sorted(central_edges) == [(0, 2), (0, 18)]


class TestLift:
    def test_w4_round_trip(self):
        q = w4_quotient()
        g, l = lift(q)
        assert are_isomorphic(g, wreath(4))
        assert quotient(g, l) == q

    def test_unbalanced_rejected(self):
        q = QuotientGraph(
            8,
            [(1, 3, SOLID), (1, 5, SOLID), (3, 7, SOLID), (5, 7, SOLID),
             (1, 7, SOLID), (3, 5, SOLID)],
            semiedges=(1, 3, 5, 7),
            central=False,
        )
        with pytest.raises(QuotientError):
            lift(q)

    def test_wrong_degree_rejected(self):
        q = QuotientGraph(8, [(1, 3, SOLID)], semiedges=(1, 3), central=False)
        with pytest.raises(QuotientError):
            lift(q)

    def test_central_must_be_solid(self):
        q = QuotientGraph(21, [(0, 2, DASHED)] + ODD21_EDGES[1:], semiedges=(), central=True)
        with pytest.raises(QuotientError):
            lift(q)

    def test_round_trip_over_enumeration(self):
        for n in (8, 16, 18):
            pairs, _ = enumerate_sr(n, SearchOptions(require_nondegenerate=True))
            for g, l in pairs:
                g2, l2 = lift(quotient(g, l))
                assert are_isomorphic(g, g2)
                assert are_equivalent(g, l, g2, l2)

    def test_lift_may_be_disconnected(self):
        # two disjoint order-8 quotient blocks, the second shifted by 8:
        # every invariant holds, yet the cover falls apart
        block = [
            (1, 3, SOLID), (1, 5, SOLID), (3, 7, SOLID), (5, 7, SOLID),
            (1, 7, DASHED), (3, 5, DASHED),
        ]
        shifted = [(a + 8, b + 8, c) for a, b, c in block]
        q = QuotientGraph(16, block + shifted,
                          semiedges=(1, 3, 5, 7, 9, 11, 13, 15), central=False)
        q.validate()
        g, l = lift(q)
        assert not g.is_connected()
        assert is_distance_magic(g, l) and is_self_reverse(g, l)


class TestJson:
    def test_round_trip(self):
        q = w4_quotient()
        assert quotient_from_json(quotient_to_json(q)) == q

    def test_fields(self):
        import json
        data = json.loads(quotient_to_json(w4_quotient()))
        assert data["n"] == 8
        assert data["vertices"] == [1, 3, 5, 7]
        assert data["central"] is False
        assert ["1", "3"] not in data["edges"]  # labels stay integers


class TestDot:
    def test_w4_shape(self):
        dot = export_dot(w4_quotient())
        assert dot.count("_se_") == 8  # 4 anchor declarations + 4 anchor edges
        assert dot.count("[style=solid]") == 4
        assert dot.count("[style=dashed]") == 6  # 2 dashed edges + 4 semiedges

    def test_no_semiedges_no_anchors(self):
        q = QuotientGraph(
            8,
            [(1, 3, SOLID), (3, 5, SOLID), (5, 7, SOLID), (1, 7, SOLID),
             (1, 5, DASHED), (3, 7, DASHED)],
            semiedges=(1, 3, 5, 7),
            central=False,
        )
        # strip semiedges: structurally invalid, but export is total
        bare = QuotientGraph(8, q.edges, semiedges=(), central=False)
        assert "_se_" not in export_dot(bare)

    def test_deterministic(self):
        q = w4_quotient()
        assert export_dot(q) == export_dot(w4_quotient())

    def test_central_double_circle(self):
        q = QuotientGraph(21, ODD21_EDGES, semiedges=(), central=True)
        assert '"0" [shape=doublecircle];' in export_dot(q)
