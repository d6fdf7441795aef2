"""Reconstruction of a permutation of {1..kn} from its factorization
(delta, (x, tau)).

The blocks of the hat word of delta are permuted by the hat word of tau,
then each block is cyclically rotated so that its leader lands at the
distance mod k prescribed by x.  The rotation amounts are recovered right
to left: the rightmost block's next-record position is pinned at the end
of the word, and each earlier block's next-record position only depends
on blocks already placed (it is invariant under rotating the block
itself).
"""

from __future__ import annotations

import itertools
from math import factorial
from typing import Iterator, Sequence

from .forward import KCycleFactorization, block, leader_distance
from .gsg import GsgElement
from .permutations import Permutation, check_capacity, stanley_hat, stanley_unhat


def rotate_left(piece: Sequence[int], s: int) -> tuple[int, ...]:
    """Cyclic left shift by s: suffix of length len-s, then prefix of
    length s."""
    if not 0 <= s < len(piece):
        raise ValueError(f"shift {s} outside 0..{len(piece) - 1}")
    return tuple(piece[s:]) + tuple(piece[:s])


def _check_compatible(delta: KCycleFactorization, sigma: GsgElement) -> None:
    if delta.k != sigma.k or delta.n != sigma.n:
        raise ValueError(
            f"incompatible inputs: delta is ({delta.k},{delta.n}), "
            f"sigma is ({sigma.k},{sigma.n})"
        )


def _permuted_blocks(delta: KCycleFactorization, sigma: GsgElement) -> list[tuple[int, ...]]:
    delta_hat = stanley_hat(delta.perm)
    tau_hat = stanley_hat(sigma.tau)
    return [block(delta_hat, tau_hat[i], delta.k) for i in range(delta.n)]


def recover_shifts(delta: KCycleFactorization, sigma: GsgElement) -> tuple[int, ...]:
    """Rotation amounts s_1..s_n placing each block of the permuted word
    so its leader sits at the residue demanded by sigma.x.

    Computed right to left on a working word whose unprocessed blocks are
    still unrotated; s_i = x_{tau_hat(i)} - d_i mod k, with d_i the
    distance from the i-th leader to the next record of the working word.
    """
    _check_compatible(delta, sigma)
    k, n = delta.k, delta.n
    tau_hat = stanley_hat(sigma.tau)
    blocks = _permuted_blocks(delta, sigma)
    shifts = [0] * n
    for i in range(n, 0, -1):
        word = tuple(itertools.chain.from_iterable(blocks))
        _, d = leader_distance(word, i, k)
        s = (sigma.x[tau_hat[i - 1] - 1] - d) % k
        shifts[i - 1] = s
        blocks[i - 1] = rotate_left(blocks[i - 1], s)
    return tuple(shifts)


def unfactor(delta: KCycleFactorization, sigma: GsgElement) -> Permutation:
    """Inverse of :func:`cycleswap.forward.factor`."""
    _check_compatible(delta, sigma)
    blocks = _permuted_blocks(delta, sigma)
    shifts = recover_shifts(delta, sigma)
    word = tuple(
        itertools.chain.from_iterable(
            rotate_left(b, s) for b, s in zip(blocks, shifts)
        )
    )
    return stanley_unhat(word)


def count_k_cycle_factorizations(k: int, n: int) -> int:
    """|{permutations of {1..kn} with cycle type (k^n)}| = (kn)!/(k^n n!)."""
    return factorial(k * n) // (k**n * factorial(n))


def enumerate_k_cycle_factorizations(
    k: int, n: int, limit: int | None = None
) -> Iterator[KCycleFactorization]:
    """Yield every partition of {1..kn} into n k-cycles exactly once.

    Built directly rather than by filtering all of S_kn: each cycle is
    normalized to start with the largest letter not yet used, which kills
    both rotation and cycle-order duplicates.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if n < 0:
        raise ValueError("n must be nonnegative")
    check_capacity(count_k_cycle_factorizations(k, n), limit, f"D_{{{k},{n}}}")
    m = k * n
    for cycles in _cycle_sets(frozenset(range(1, m + 1)), k):
        yield KCycleFactorization(k, Permutation.from_cycles(cycles, m))


def _cycle_sets(remaining: frozenset[int], k: int) -> Iterator[list[tuple[int, ...]]]:
    if not remaining:
        yield []
        return
    lead = max(remaining)
    rest = sorted(remaining - {lead})
    for tail in itertools.permutations(rest, k - 1):
        cycle = (lead,) + tail
        for more in _cycle_sets(remaining - set(cycle), k):
            yield [cycle] + more
