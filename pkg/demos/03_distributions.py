#!/usr/bin/env python3
"""Exact distribution of k-cycle counts over all of S_kn next to the
fixed-point distribution over the generalized symmetric group, plus the
cross-multiplied identity that says they are proportional."""

from math import factorial

from cycleswap import (
    fixed_point_distribution,
    k_cycle_distribution,
    sample_empirical,
    verify_distribution_identity,
)

for k, n in [(2, 3), (3, 2), (2, 4)]:
    cyc = k_cycle_distribution(k, n)
    fxpt = fixed_point_distribution(k, n)
    print(f"k={k}, n={n}")
    print("  m      :", "  ".join(f"{m:>8}" for m in range(n + 1)))
    print("  S_kn   :", "  ".join(f"{c:>8}" for c in cyc.counts), f" total {cyc.total}")
    print("  S(k,n) :", "  ".join(f"{c:>8}" for c in fxpt.counts), f" total {fxpt.total}")
    for m in range(n + 1):
        assert cyc.counts[m] * fxpt.total == fxpt.counts[m] * cyc.total
    print("  exact proportionality holds at every m")
    print()

report = verify_distribution_identity(2, 4)
print(report.to_text())

# The same equality seen empirically from a million uniform draws.
cyc, fxpt = sample_empirical(2, 3, 1_000_000, seed=42)
print("\nempirical P(no 2-cycle)    =", cyc[0] / 1e6)
print("empirical P(no fixed point) =", fxpt[0] / 1e6)
print("exact value                 =", 435 / factorial(6), "=", 29 / 48)
