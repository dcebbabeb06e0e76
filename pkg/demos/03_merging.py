#!/usr/bin/env python3
"""Growing distance magic graphs by merging along cyclets.

A cyclet is a rooted oriented cycle.  Merging deletes the cyclet edges in
two host graphs and cross-connects consecutive cyclet vertices, preserving
all degrees.  When the second labeling is balanced, its cyclet alternates
links and non-links, and the opposing label sums agree, the merged graph is
distance magic with the second block's labels shifted outward; matching
symmetry conditions on the cyclets keep the labeling self-reverse.
"""

from magiclab import (
    are_isomorphic,
    check_merge_conditions,
    cyclet_from_quotient_edge,
    extend_by_w4,
    is_degenerate,
    is_distance_magic,
    is_self_reverse,
    make_cyclet,
    merge,
    merged_labeling,
    quotient,
    wreath,
    wreath_nondegenerate_labeling,
)

# Two copies of wreath(3) merged along (x0, x1, y2, y1) give the order-12
# quasi-wreath graph: 4-regular, connected, and not a wreath.
w3 = wreath(3)
c = make_cyclet(w3, (0, 1, 5, 4))
qw33 = merge(w3, c, w3, c)
print("wreath(3) + wreath(3):",
      f"order {qw33.n}, 4-regular {qw33.is_regular(4)},",
      f"wreath {are_isomorphic(qw33, wreath(6))}")

# The quotient of the order-8 block has solid edges {3,7} and {1,5}, both
# with semiedges and label difference 4; those cyclets merge two blocks
# into the order-16 wreath with a self-reverse labeling.
g, l = wreath(4), wreath_nondegenerate_labeling(4)
c1 = cyclet_from_quotient_edge(g, l, 3, 7)
c2 = cyclet_from_quotient_edge(g, l, 1, 5)
print("\ncyclet through labels 3,7,-7,-3:", c1.vertices)
print("conditions:", check_merge_conditions(g, l, c1, g, l, c2))
m16 = merge(g, c1, g, c2)
lab = merged_labeling(g, l, g, l)
print("merged graph is wreath(8):", are_isomorphic(m16, wreath(8)))
print("labeling: magic", is_distance_magic(m16, lab),
      "self-reverse", is_self_reverse(m16, lab),
      "degenerate", is_degenerate(m16, lab))

# Extension by one 8-vertex block can be iterated forever: each step leaves
# a fresh solid edge with labels differing by 4.
print("\niterated extension:")
g, l = wreath(4), wreath_nondegenerate_labeling(4)
a, b = 3, 7
for _ in range(3):
    g, l = extend_by_w4(g, l, a, b)
    q = quotient(g, l)
    a, b = g.n - 8 + 3, g.n - 8 + 7
    print(f"  order {g.n}: next extensible edge {{{a},{b}}} is",
          q.edge_color(a, b), "with semiedges",
          a in q.semiedges and b in q.semiedges)
