#!/usr/bin/env python3
"""Folding a self-reverse labeling into its quotient and unfolding it back.

A non-degenerate self-reverse labeling pairs each vertex with the one
carrying the negated label.  Collapsing every pair leaves half as many
vertices, named by the nonnegative labels; edges remember whether they
joined equal signs (solid) or opposite signs (dashed), and a pair adjacent
within itself keeps a semiedge.  The original graph is recovered as the
two-fold cover, so the quotient is a complete, compact description.
"""

from magiclab import (
    are_equivalent,
    are_isomorphic,
    export_dot,
    lift,
    quotient,
    quotient_to_json,
    wreath,
    wreath_nondegenerate_labeling,
)

g = wreath(4)
l = wreath_nondegenerate_labeling(4)
q = quotient(g, l)

print("order-8 quotient:")
print(" ", quotient_to_json(q))
print("\nsigned balance holds at every vertex: for each label a,")
print("sum(solid neighbors) - sum(dashed neighbors) - a*[semiedge] = 0")
for a in q.vertices:
    solid = sum(y if x == a else x for x, y, c in q.edges if c == "solid" and a in (x, y))
    dashed = sum(y if x == a else x for x, y, c in q.edges if c == "dashed" and a in (x, y))
    semi = a if a in q.semiedges else 0
    print(f"  at {a}: {solid} - {dashed} - {semi} = {solid - dashed - semi}")

g2, l2 = lift(q)
print("\nlift returns the original up to relabeling:",
      are_isomorphic(g, g2) and are_equivalent(g, l, g2, l2))

print("\nGraphviz rendering (dashed stubs are the semiedges):\n")
print(export_dot(q))
