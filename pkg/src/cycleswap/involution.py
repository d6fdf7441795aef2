"""The statistic-swapping involution on pairs (sigma, pi).

Factor pi into (delta, sigma_new), then rebuild a permutation from delta
and the incoming sigma.  Applying the map twice returns the original
pair, and the fixed-point count of each sigma always matches the k-cycle
count of the permutation it is paired with on the other side.
"""

from __future__ import annotations

from dataclasses import dataclass

from .forward import factor
from .gsg import GsgElement
from .inverse import unfactor
from .permutations import Permutation


@dataclass(frozen=True)
class InvolutionPair:
    """(sigma, pi) with sigma in Z_k^n x| S_n and pi a permutation of
    {1..kn}."""

    sigma: GsgElement
    pi: Permutation

    def __post_init__(self):
        if self.sigma.k * self.sigma.n != self.pi.size:
            raise ValueError(
                f"pi acts on {self.pi.size} points, expected "
                f"k*n = {self.sigma.k}*{self.sigma.n}"
            )


def involute(pair: InvolutionPair) -> InvolutionPair:
    """Swap statistics: the output pairs pi's factor sigma with a new
    permutation built from pi's k-cycle factor and the input sigma."""
    factored = factor(pair.pi, pair.sigma.k)
    return InvolutionPair(factored.sigma, unfactor(factored.delta, pair.sigma))
