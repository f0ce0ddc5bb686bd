"""
Binomial closed forms for the invariant weight polynomials.

Every value here is unsigned; the sign (-1)^i of cohomological degree i is
applied by whoever forms an alternating sum.
"""
from nodalhilb.ring import WeightPoly, binom, poly_shift, poly_sum

_L = WeightPoly.L()
_ONE_PLUS_L = WeightPoly((1, 1))


def wedge_invariants(l: int, delta: int) -> WeightPoly:
    """
    Invariants of wedge^l H^1: choose j blocks contributing wedge^2 V_i (weight 2)
    and l - 2j blocks contributing their vanishing cycle alpha_i (weight 0).
    """
    if l < 0 or delta < 0:
        return WeightPoly.zero()
    return poly_sum(
        WeightPoly.monomial(binom(delta, j) * binom(delta - j, l - 2 * j), j)
        for j in range(delta + 1)
    )

def closed_form_I(i: int, delta: int) -> WeightPoly:
    """I(i, delta) = sum_k L^k sum_j C(delta, j) C(delta-j, i-2k-2j) L^j, k the MacDonald index."""
    if i < 0:
        return WeightPoly.zero()
    return poly_sum(poly_shift(wedge_invariants(i - 2 * k, delta), k) for k in range(i // 2 + 1))

def closed_form_J(l: int, delta: int) -> WeightPoly:
    """
    Invariants of wedge^l H^1 ⊗ H^1. By symmetry in the nodes this is delta times the
    invariants against V_1, split by l_1, the exterior degree taken from V_1:

      l_1 = 2: wedge^2 V_1 ⊗ V_1 = V_1(-1), one invariant of weight 2
      l_1 = 1: V_1 ⊗ V_1, invariants of weight 0 and 2
      l_1 = 0: V_1 alone, its vanishing cycle
    """
    if l < 0 or delta == 0:
        return WeightPoly.zero()
    rest = delta - 1
    per_node = (
        _L * wedge_invariants(l - 2, rest)
        + _ONE_PLUS_L * wedge_invariants(l - 1, rest)
        + wedge_invariants(l, rest)
    )
    return per_node * delta

def closed_form_extra(l: int, delta: int) -> WeightPoly:
    """The part of closed_form_J not of the form (invariant of wedge^l) ⊗ (invariant of H^1)."""
    if l < 1 or delta == 0:
        return WeightPoly.zero()
    return (_L * wedge_invariants(l - 1, delta - 1)) * delta

def _dual_degree(m: int, d: int, slice_at) -> WeightPoly:
    """Value in degree d of a MacDonald assembly over 0..2m, using H^d = H^(2m-d)(m-d) above m."""
    if d < 0 or d > 2 * m:
        return WeightPoly.zero()
    if d > m:
        return poly_shift(_dual_degree(m, 2 * m - d, slice_at), d - m)
    return poly_sum(poly_shift(slice_at(d - 2 * k), k) for k in range(d // 2 + 1))

def hilb_degree_closed(delta: int, m: int, d: int) -> WeightPoly:
    return _dual_degree(m, d, lambda l: wedge_invariants(l, delta))

def tensor_degree_closed(delta: int, m: int, d: int) -> WeightPoly:
    """Invariants of H^d(C^[m]) ⊗ H^1."""
    return _dual_degree(m, d, lambda l: closed_form_J(l, delta))

def extra_degree_closed(delta: int, m: int, d: int) -> WeightPoly:
    return _dual_degree(m, d, lambda l: closed_form_extra(l, delta))

def nested_degree_closed(delta: int, m: int, i: int) -> WeightPoly:
    return (
        hilb_degree_closed(delta, m, i)
        + tensor_degree_closed(delta, m, i - 1)
        + _L * hilb_degree_closed(delta, m, i - 2)
    )

def w_H_closed(delta: int, m: int) -> WeightPoly:
    """
    sum_{i<m} (-1)^i (1 + L^(m-i)) I(i, delta) + (-1)^m I(m, delta): each degree below the
    middle is paired with its dual degree 2m - i.
    """
    total = WeightPoly.zero()
    for i in range(m):
        sign = -1 if i % 2 else 1
        total = total + (WeightPoly.one() + WeightPoly.monomial(1, m - i)) * closed_form_I(i, delta) * sign
    return total + closed_form_I(m, delta) * (-1 if m % 2 else 1)

def w_I_closed(delta: int, m: int) -> WeightPoly:
    total = WeightPoly.zero()
    for i in range(2 * m + 3):
        total = total + nested_degree_closed(delta, m, i) * (-1 if i % 2 else 1)
    return total
