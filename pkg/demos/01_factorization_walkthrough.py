#!/usr/bin/env python3
"""Walk through factoring a 15-letter permutation (k=3, n=5) into a
product of five 3-cycles plus a generalized symmetric group element,
then rebuild it."""

from cycleswap import (
    GsgElement,
    block_leaders,
    factor,
    format_gsg,
    format_permutation,
    parse_permutation,
    recover_shifts,
    standardize,
    stanley_hat,
    unfactor,
)

pi = parse_permutation("(8 3 4 5)(9)(11 1 10)(15 7 2 6 12 14 13)", 15)
print("pi        =", format_permutation(pi))

# Drop the parentheses of the canonical cycle notation to get a word,
# then read it in blocks of 3.
word = stanley_hat(pi)
print("hat word  =", ",".join(map(str, word)))
print("blocks    =", [word[i : i + 3] for i in range(0, 15, 3)])
print("leaders   =", block_leaders(word, 3))
print("std       =", standardize(block_leaders(word, 3)))

pair = factor(pi, 3)
print("\ndelta     =", format_permutation(pair.delta.perm))
print("sigma     =", format_gsg(pair.sigma))

# The statistic carried across: 3-cycles of pi vs fixed points of sigma.
from cycleswap import count_fixed_points, count_k_cycles

print("3-cycles of pi      =", count_k_cycles(pi, 3))
print("fixed pts of sigma  =", count_fixed_points(pair.sigma))

# Going back: permute delta's blocks by tau-hat, then rotate each block
# into place.  The rotation amounts are recovered right to left.
print("\nshifts    =", recover_shifts(pair.delta, pair.sigma))
back = unfactor(pair.delta, pair.sigma)
print("rebuilt   =", format_permutation(back))
print("round trip ok:", back == pi)

# A different sigma against the same delta lands on a different pi.
sigma2 = GsgElement(3, (2, 0, 0, 1, 0), parse_permutation("(2)(3 1)(4)(5)", 5))
print("\nother sigma:", format_gsg(sigma2))
print("other pi   :", format_permutation(unfactor(pair.delta, sigma2)))
