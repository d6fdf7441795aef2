#!/usr/bin/env python3
"""The statistic-swapping involution on pairs (sigma, pi): applying it
twice is the identity, and the fixed-point / k-cycle counts trade
places."""

from cycleswap import (
    GsgElement,
    InvolutionPair,
    count_fixed_points,
    count_k_cycles,
    format_gsg,
    format_permutation,
    involute,
    parse_permutation,
)

k = 3
pi = parse_permutation("(8 3 4 5)(9)(11 1 10)(15 7 2 6 12 14 13)", 15)
sigma = GsgElement(k, (2, 0, 0, 1, 0), parse_permutation("(2)(3 1)(4)(5)", 5))

pair = InvolutionPair(sigma, pi)
print("in : sigma =", format_gsg(sigma))
print("     pi    =", format_permutation(pi))
print("     fixed points:", count_fixed_points(sigma), " 3-cycles:", count_k_cycles(pi, k))

out = involute(pair)
print("\nout: sigma =", format_gsg(out.sigma))
print("     pi    =", format_permutation(out.pi))
print("     fixed points:", count_fixed_points(out.sigma), " 3-cycles:", count_k_cycles(out.pi, k))

print("\napplied twice returns the input:", involute(out) == pair)

# It cannot be a group homomorphism: the identity pair has 0 k-cycles
# and n fixed points, so it has to move.
ident = InvolutionPair(
    GsgElement(2, (0, 0), parse_permutation("1,2", 2)), parse_permutation("1,2,3,4", 4)
)
moved = involute(ident)
print("\nidentity pair maps to:")
print("  sigma =", format_gsg(moved.sigma))
print("  pi    =", format_permutation(moved.pi))
