import logging
from enum import Enum
from nodalhilb.errors import DegreeOutOfRange
from nodalhilb.ring import WeightPoly, poly_shift
from nodalhilb.monodromy.closed_forms import (
    extra_degree_closed, hilb_degree_closed, nested_degree_closed, w_H_closed, w_I_closed,
)
from nodalhilb.monodromy.cohomology import (
    cached_h1, hilb_cohomology_rep, macdonald_rep, nested_cohomology_rep,
)
from nodalhilb.monodromy.constructions import tensor
from nodalhilb.monodromy.invariants import invariants

logger = logging.getLogger(__name__)


class Method(Enum):
    ORACLE = 'oracle'
    CLOSED_FORM = 'closed_form'

    @classmethod
    def parse(cls, value) -> 'Method':
        if isinstance(value, cls):
            return value
        if value == 'closed':
            return cls.CLOSED_FORM
        return cls(value)


class ExtraMethod(Enum):
    STRUCTURAL = 'structural'
    DIFFERENCE = 'difference'
    CLOSED_FORM = 'closed_form'


def _sign(i: int) -> int:
    return -1 if i % 2 else 1

def _invariant_weights(rep) -> WeightPoly:
    return invariants(rep).weight_polynomial()

def degree_invariants(delta: int, m: int, i: int, nested: bool = False, method=Method.ORACLE) -> WeightPoly:
    """Unsigned invariant weight polynomial of one cohomological degree."""
    method = Method.parse(method)
    top = 2 * m + 2 if nested else 2 * m
    if i < 0 or i > top:
        message = f"Cohomological degree {i} outside the range 0..{top}"
        logger.error(message)
        raise DegreeOutOfRange(message)
    if method is Method.CLOSED_FORM:
        return nested_degree_closed(delta, m, i) if nested else hilb_degree_closed(delta, m, i)
    rep = nested_cohomology_rep(delta, m, i) if nested else hilb_cohomology_rep(delta, m, i)
    return _invariant_weights(rep)

def w_H(delta: int, m: int, method=Method.ORACLE) -> WeightPoly:
    method = Method.parse(method)
    if method is Method.CLOSED_FORM:
        return w_H_closed(delta, m)
    total = WeightPoly.zero()
    for i in range(2 * m + 1):
        total = total + degree_invariants(delta, m, i) * _sign(i)
    logger.debug(f"w(H^{m}) for {delta} nodes by {method.value}: {total}")
    return total

def w_I(delta: int, m: int, method=Method.ORACLE) -> WeightPoly:
    method = Method.parse(method)
    if method is Method.CLOSED_FORM:
        return w_I_closed(delta, m)
    total = WeightPoly.zero()
    for i in range(2 * m + 3):
        total = total + degree_invariants(delta, m, i, nested=True) * _sign(i)
    logger.debug(f"w(I^{m}) for {delta} nodes by {method.value}: {total}")
    return total

def split_invariants_extra(delta: int, m: int, i: int, method=ExtraMethod.STRUCTURAL) -> WeightPoly:
    """
    Weight-2 invariants of the middle Kunneth term H^(i-1)(C^[m]) ⊗ H^1 that are not
    products of an invariant of H^(i-1) with a vanishing cycle. They come from the
    wedge^2 V_j inside V_j ⊗ V_j, one for each node j whose block enters with degree 1.

    STRUCTURAL: delta * L * invariants of the same MacDonald assembly on the other
    delta - 1 nodes, one exterior degree lower.
    DIFFERENCE: invariants of the full tensor minus delta copies of those of H^(i-1).
    CLOSED_FORM: the binomial count of the structural description.
    """
    method = ExtraMethod(method)
    if i < 0 or i > 2 * m + 2:
        message = f"Cohomological degree {i} outside the range 0..{2 * m + 2}"
        logger.error(message)
        raise DegreeOutOfRange(message)
    if delta == 0:
        return WeightPoly.zero()
    d = i - 1
    if method is ExtraMethod.CLOSED_FORM:
        return extra_degree_closed(delta, m, d)
    if method is ExtraMethod.STRUCTURAL:
        rest = macdonald_rep(delta - 1, m, d, wedge_offset=1)
        return poly_shift(_invariant_weights(rest), 1) * delta
    middle = macdonald_rep(delta, m, d)
    full = _invariant_weights(tensor(middle, cached_h1(delta)))
    return full - _invariant_weights(middle) * delta

def extra_aggregate(delta: int, m: int, method=ExtraMethod.STRUCTURAL) -> WeightPoly:
    """Signed sum over degrees of split_invariants_extra."""
    total = WeightPoly.zero()
    for i in range(2 * m + 3):
        total = total + split_invariants_extra(delta, m, i, method) * _sign(i)
    return total
