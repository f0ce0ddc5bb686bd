"""
Grothendieck-ring classes of rational nodal curves and of their Hilbert and
nested Hilbert schemes, all valued in Z[L].

The Hilbert scheme series of a curve factors over its points: the smooth locus
contributes a global factor and every node its punctual series. Nested classes
come from stratifying by how often the extra point of z' ⊂ z sits at a node.
"""
import logging
from nodalhilb.curves.curve_spec import CurveSpec
from nodalhilb.ring import (
    WeightPoly, QSeries, binom, coefficient, eval_at_one, geometric_sum, poly_mul, poly_sub, poly_sum,
    series_inverse, series_mul, series_pow,
)

logger = logging.getLogger(__name__)

_L = WeightPoly.L()


def node_punctual_hilb_class(k: int) -> WeightPoly:
    """[C_x^[k]]: k-1 projective lines meeting in k-2 points, a single point for k <= 1."""
    if k < 0:
        raise ValueError(f"Length must be nonnegative, got {k}")
    if k <= 1:
        return WeightPoly.one()
    return WeightPoly((1, k - 1))

def node_punctual_nested_class(k: int) -> WeightPoly:
    """[C_x^[k,k+1]]: 2k-1 projective lines meeting in 2k-2 points, a single point for k = 0."""
    if k < 0:
        raise ValueError(f"Length must be nonnegative, got {k}")
    if k == 0:
        return WeightPoly.one()
    return WeightPoly((1, 2 * k - 1))


def _one_minus_q(order: int) -> QSeries:
    return QSeries.from_coeffs([1, -1], order)

def _one_minus_qL(order: int) -> QSeries:
    return QSeries.from_coeffs([WeightPoly.one(), -_L], order)

def projective_line_series(order: int) -> QSeries:
    """Sum_m q^m [P^m] = 1/((1-q)(1-qL))."""
    return series_inverse(series_mul(_one_minus_q(order), _one_minus_qL(order)))

def regular_part_series(delta: int, order: int) -> QSeries:
    """
    Series of the smooth locus of a delta-nodal rational curve, which is the
    projective line minus the 2*delta preimages of the nodes: (1-q)^(2delta-1)/(1-qL).
    """
    return series_mul(projective_line_series(order), series_pow(_one_minus_q(order), 2 * delta))

def node_local_series(order: int) -> QSeries:
    """Sum_k q^k [C_x^[k]] for a single node x."""
    return QSeries.from_coeffs([node_punctual_hilb_class(k) for k in range(order + 1)], order)

def hilb_series(spec: CurveSpec, order: int) -> QSeries:
    series = series_mul(regular_part_series(spec.delta, order), series_pow(node_local_series(order), spec.delta))
    if spec.punctures:
        series = series_mul(series, series_pow(_one_minus_q(order), spec.punctures))
    logger.debug(f"Hilbert series of {spec} to order {order}: {series}")
    return series

def hilb_series_product_formula(spec: CurveSpec, order: int) -> QSeries:
    """(1-q+q^2 L)^delta (1-q)^punctures / ((1-q)(1-qL)), the closed product form of hilb_series."""
    node_factor = QSeries.from_coeffs([WeightPoly.one(), WeightPoly.constant(-1), _L], order)
    series = series_mul(projective_line_series(order), series_pow(node_factor, spec.delta))
    return series_mul(series, series_pow(_one_minus_q(order), spec.punctures))

def hilb_class(spec: CurveSpec, m: int) -> WeightPoly:
    if m < 0:
        return WeightPoly.zero()
    return coefficient(hilb_series(spec, m), m)

def hilb_class_closed_form(delta: int, m: int) -> WeightPoly:
    """
    Coefficient of q^m in the product formula written as a double sum:

        sum_s (-1)^s sum_t C(delta,t) C(t,s-t) L^(s-t) * (1 + L + ... + L^(m-s))

    The geometric factor is kept as a polynomial, Z[L] has no division by L-1.
    """
    terms = []
    for s in range(m + 1):
        sign = -1 if s % 2 else 1
        inner = poly_sum(
            WeightPoly.monomial(binom(delta, t) * binom(t, s - t), s - t)
            for t in range(delta + 1) if s - t >= 0
        )
        terms.append(poly_mul(inner, geometric_sum(m - s)) * sign)
    return poly_sum(terms)

def curve_class(spec: CurveSpec) -> WeightPoly:
    return WeightPoly((1 - spec.delta - spec.punctures, 1))

def regular_locus_class(spec: CurveSpec) -> WeightPoly:
    """[C_reg]: the curve with its nodes removed, each node being a single point of C."""
    return curve_class(spec) - spec.delta

def tilde_hilb_class(delta: int, m: int) -> WeightPoly:
    """
    [C~^[m]] = sum_k k [(C-x)^[m-k]], counting the k ways a length-k scheme
    supported on the two branch points is glued back at the node x.
    Zero for a smooth curve.
    """
    if delta == 0:
        return WeightPoly.zero()
    minus_node = CurveSpec(delta).minus_node()
    return poly_sum(hilb_class(minus_node, m - k) * k for k in range(1, m + 1))

def nested_class(delta: int, m: int) -> WeightPoly:
    """
    [C^[m,m+1]] = [C^[m]] [C] + delta L [C~^[m]].

    The second term is assembled from the punctual difference
    [C_x^[k,k+1]] - [C_x^[k]] = kL, node by node.
    """
    spec = CurveSpec(delta)
    product_part = poly_mul(hilb_class(spec, m), curve_class(spec))
    if delta == 0:
        return product_part
    minus_node = spec.minus_node()
    node_part = poly_sum(
        poly_mul(
            hilb_class(minus_node, m - k),
            poly_sub(node_punctual_nested_class(k), node_punctual_hilb_class(k)),
        )
        for k in range(m + 1)
    )
    return product_part + node_part * delta

def nested_class_direct(delta: int, m: int) -> WeightPoly:
    """
    Stratify by where the extra point of z' ⊂ z lies: a regular point adds no
    choice, a node carrying a length-k piece of z' contributes [C_x^[k,k+1]].
    """
    spec = CurveSpec(delta)
    regular_part = poly_mul(hilb_class(spec, m), regular_locus_class(spec))
    if delta == 0:
        return regular_part
    minus_node = spec.minus_node()
    node_part = poly_sum(
        poly_mul(hilb_class(minus_node, m - k), node_punctual_nested_class(k))
        for k in range(m + 1)
    )
    return regular_part + node_part * delta

def hilb_euler_characteristic(spec: CurveSpec, m: int) -> int:
    return eval_at_one(hilb_class(spec, m))

def nested_euler_characteristic(delta: int, m: int) -> int:
    return eval_at_one(nested_class(delta, m))
