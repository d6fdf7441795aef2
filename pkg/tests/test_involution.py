import pytest

from cycleswap.gsg import GsgElement, count_fixed_points, enumerate_gsg
from cycleswap.involution import InvolutionPair, involute
from cycleswap.permutations import Permutation, count_k_cycles, enumerate_permutations

PI = Permutation.from_cycles(
    [(8, 3, 4, 5), (9,), (11, 1, 10), (15, 7, 2, 6, 12, 14, 13)], 15
)
SIGMA = GsgElement(3, (0, 1, 0, 2, 1), Permutation.from_cycles([(2,), (3,), (5, 1, 4)], 5))
SIGMA_PRIME = GsgElement(
    3, (2, 0, 0, 1, 0), Permutation.from_cycles([(2,), (3, 1), (4,), (5,)], 5)
)
PI_PRIME = Permutation.from_cycles(
    [(8, 3, 4), (11, 5, 9, 6, 7, 2), (13, 12), (14,), (15, 1, 10)], 15
)


def test_reference_pair():
    out = involute(InvolutionPair(SIGMA_PRIME, PI))
    assert out.sigma == SIGMA
    assert out.pi == PI_PRIME


def test_reference_pair_statistics():
    out = involute(InvolutionPair(SIGMA_PRIME, PI))
    assert count_fixed_points(SIGMA_PRIME) == 2 == count_k_cycles(out.pi, 3)
    assert count_fixed_points(out.sigma) == 1 == count_k_cycles(PI, 3)


def test_reference_pair_double_application():
    pair = InvolutionPair(SIGMA_PRIME, PI)
    assert involute(involute(pair)) == pair


def test_dimension_mismatch_rejected():
    with pytest.raises(ValueError):
        InvolutionPair(SIGMA, Permutation.identity(6))


@pytest.mark.parametrize("k,n", [(1, 3), (2, 2), (3, 1)])
def test_involution_exhaustive(k, n):
    pis = list(enumerate_permutations(k * n))
    for sigma in enumerate_gsg(k, n):
        for pi in pis:
            pair = InvolutionPair(sigma, pi)
            out = involute(pair)
            assert involute(out) == pair
            assert count_fixed_points(out.sigma) == count_k_cycles(pi, k)
            assert count_k_cycles(out.pi, k) == count_fixed_points(sigma)


def test_not_the_identity_on_identity_pair():
    # No group map can do this statistic swap: the identity pair has 0
    # k-cycles and n fixed points, so it cannot map to itself.
    pair = InvolutionPair(
        GsgElement(2, (0, 0), Permutation.identity(2)), Permutation.identity(4)
    )
    assert involute(pair) != pair


def test_k1_is_the_literal_swap():
    # For k=1 both sides are copies of S_n; the map degenerates to
    # swapping the components under that identification.
    for n in range(5):
        for sigma in enumerate_gsg(1, n):
            for pi in enumerate_permutations(n):
                out = involute(InvolutionPair(sigma, pi))
                assert out.sigma == GsgElement(1, (0,) * n, pi)
                assert out.pi == sigma.tau
