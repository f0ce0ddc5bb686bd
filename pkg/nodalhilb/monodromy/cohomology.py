"""
Cohomology of the Hilbert scheme and of the nested Hilbert scheme of a smooth
nearby fiber, assembled as monodromy representations from exterior powers of H^1.
"""
import logging
from math import comb
from functools import lru_cache
from nodalhilb.errors import DegreeOutOfRange
from nodalhilb.monodromy.graded import GradedRep
from nodalhilb.monodromy.constructions import (
    build_h1, direct_sum, direct_sum_all, exterior_power, tate_twist, tensor, zero_rep,
)

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def cached_h1(delta: int) -> GradedRep:
    return build_h1(delta)

@lru_cache(maxsize=None)
def cached_wedge(delta: int, l: int) -> GradedRep:
    if l < 0:
        return zero_rep(delta)
    return exterior_power(cached_h1(delta), l)

def _check_degree(i: int, top: int):
    if i < 0 or i > top:
        message = f"Cohomological degree {i} outside the range 0..{top}"
        logger.error(message)
        raise DegreeOutOfRange(message)

def macdonald_rep(delta: int, m: int, d: int, wedge_offset: int = 0, via_duality: bool = True) -> GradedRep:
    """
    Sum over k of  wedge^(d - 2k - wedge_offset) H^1 (-k), the MacDonald decomposition of
    H^d of the m-th symmetric product; zero outside 0 <= d <= 2m.

    Above the middle degree the summands are either obtained by the duality
    H^d = H^(2m-d)(m-d), or read off directly with k >= d - m.
    """
    if d < 0 or d > 2 * m:
        return zero_rep(delta)
    if d > m and via_duality:
        return tate_twist(macdonald_rep(delta, m, 2 * m - d, wedge_offset), d - m)
    lowest_k = max(0, d - m)
    summands = (
        tate_twist(cached_wedge(delta, d - 2 * k - wedge_offset), k)
        for k in range(lowest_k, d // 2 + 1)
    )
    return direct_sum_all(delta, summands)

def hilb_cohomology_rep(delta: int, m: int, i: int, via_duality: bool = True) -> GradedRep:
    _check_degree(i, 2 * m)
    rep = macdonald_rep(delta, m, i, via_duality=via_duality)
    logger.debug(f"H^{i} of the {m}-th Hilbert scheme, {delta} nodes: dimension {rep.dim}")
    return rep

def nested_cohomology_rep(delta: int, m: int, i: int) -> GradedRep:
    """
    Kunneth for C^[m] x C with H^0 = Q, H^1 and H^2 = Q(-1):
    H^i ⊕ (H^(i-1) ⊗ H^1) ⊕ H^(i-2)(-1).
    """
    _check_degree(i, 2 * m + 2)
    rep = direct_sum(
        direct_sum(
            macdonald_rep(delta, m, i),
            tensor(macdonald_rep(delta, m, i - 1), cached_h1(delta)),
        ),
        tate_twist(macdonald_rep(delta, m, i - 2), 1),
    )
    logger.debug(f"H^{i} of the {m}-th nested Hilbert scheme, {delta} nodes: dimension {rep.dim}")
    return rep

def nested_rep_dimension(delta: int, m: int, i: int) -> int:
    """Dimension of nested_cohomology_rep without building it."""
    def hilb_dim(d: int) -> int:
        if d < 0 or d > 2 * m:
            return 0
        if d > m:
            d = 2 * m - d
        return sum(comb(2 * delta, d - 2 * k) for k in range(d // 2 + 1))

    return hilb_dim(i) + 2 * delta * hilb_dim(i - 1) + hilb_dim(i - 2)
