#!/usr/bin/env python3
"""Tour of the signed label model.

A graph of order n is labeled with the integers 1-n, 3-n, ..., n-1: an
arithmetic progression symmetric under negation, with 0 present exactly for
odd orders.  A labeling is distance magic when every vertex's neighbors sum
to zero; the classical 1..n model is an affine rescaling of this one.
"""

from magiclab import (
    is_balanced,
    is_degenerate,
    is_distance_magic,
    is_self_reverse,
    label_set,
    pair_partition,
    to_classical,
    wreath,
    wreath_natural_labeling,
    wreath_non_sr_labeling,
    wreath_nondegenerate_labeling,
)

print("label sets:")
for n in (4, 5, 8):
    print(f"  n={n}: {label_set(n)}")

g = wreath(3)
l = wreath_natural_labeling(3)
print("\nwreath(3) with the natural labeling", l.labels)
print("  distance magic:", is_distance_magic(g, l))
print("  classical form:", to_classical(l))
print("  self-reverse:  ", is_self_reverse(g, l))
print("  degenerate:    ", is_degenerate(g, l))
print("  balanced:      ", is_balanced(g, l))
print("  pairs:         ", pair_partition(l).pairs)

# The reverse of a distance magic labeling is again distance magic; a
# labeling equivalent to its own reverse is self-reverse.
rev = l.reverse()
print("\nreverse labels:", rev.labels, "-> distance magic:", is_distance_magic(g, rev))

# Wreaths whose size is a multiple of 4 admit three different flavors.
g8 = wreath(8)
for name, lab in [
    ("natural (degenerate)", wreath_natural_labeling(8)),
    ("non-degenerate", wreath_nondegenerate_labeling(8)),
    ("non-self-reverse tweak", wreath_non_sr_labeling(8)),
]:
    print(
        f"\nwreath(8) {name}:"
        f" magic={is_distance_magic(g8, lab)}"
        f" self-reverse={is_self_reverse(g8, lab)}"
        f" degenerate={is_degenerate(g8, lab)}"
    )
