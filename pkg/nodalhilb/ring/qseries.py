from __future__ import annotations
import logging
from dataclasses import dataclass
from typing import Sequence
from nodalhilb.errors import NonUnitConstantTerm, OrderExceeded
from nodalhilb.ring.weight_poly import WeightPoly, poly_add, poly_mul, poly_neg, poly_sub, poly_sum

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QSeries:
    """
    A power series in q with WeightPoly coefficients, truncated after q**order.

    Coefficients beyond the order are unknown rather than zero, so combining two
    series keeps the smaller of their orders. Precision is never extended silently.
    """
    order: int
    coeffs: tuple[WeightPoly, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError(f"Series order must be nonnegative, got {self.order}")
        coeffs = tuple(self.coeffs)
        if len(coeffs) != self.order + 1:
            raise ValueError(f"A series of order {self.order} needs {self.order + 1} coefficients, got {len(coeffs)}")
        object.__setattr__(self, 'coeffs', coeffs)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[WeightPoly | int], order: int) -> QSeries:
        """Build a series of the given order, padding with zeros and dropping terms past the order."""
        padded = []
        for n in range(order + 1):
            c = coeffs[n] if n < len(coeffs) else WeightPoly.zero()
            padded.append(c if isinstance(c, WeightPoly) else WeightPoly.constant(c))
        return cls(order, tuple(padded))

    @classmethod
    def one(cls, order: int) -> QSeries:
        return cls.from_coeffs([WeightPoly.one()], order)

    def truncate(self, order: int) -> QSeries:
        if order > self.order:
            raise OrderExceeded(f"Cannot extend a series of order {self.order} to order {order}")
        return QSeries(order, self.coeffs[:order + 1])

    def __getitem__(self, m: int) -> WeightPoly:
        return coefficient(self, m)

    def __add__(self, other: QSeries) -> QSeries:
        return series_add(self, other)

    def __sub__(self, other: QSeries) -> QSeries:
        return series_sub(self, other)

    def __mul__(self, other):
        if isinstance(other, QSeries):
            return series_mul(self, other)
        if isinstance(other, (WeightPoly, int)):
            return series_scale(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> QSeries:
        return series_pow(self, n)

    def to_text(self, variable: str = 'L') -> str:
        return '[' + ', '.join(c.to_text(variable) for c in self.coeffs) + ']'

    def __str__(self):
        return self.to_text()


def _common_order(a: QSeries, b: QSeries) -> int:
    return min(a.order, b.order)

def series_add(a: QSeries, b: QSeries) -> QSeries:
    order = _common_order(a, b)
    return QSeries(order, tuple(poly_add(a.coeffs[n], b.coeffs[n]) for n in range(order + 1)))

def series_sub(a: QSeries, b: QSeries) -> QSeries:
    order = _common_order(a, b)
    return QSeries(order, tuple(poly_sub(a.coeffs[n], b.coeffs[n]) for n in range(order + 1)))

def series_scale(a: QSeries, factor: WeightPoly | int) -> QSeries:
    if isinstance(factor, int):
        factor = WeightPoly.constant(factor)
    return QSeries(a.order, tuple(poly_mul(c, factor) for c in a.coeffs))

def series_mul(a: QSeries, b: QSeries) -> QSeries:
    """Truncated Cauchy product at the smaller of the two orders."""
    order = _common_order(a, b)
    coeffs = []
    for n in range(order + 1):
        coeffs.append(poly_sum(poly_mul(a.coeffs[i], b.coeffs[n - i]) for i in range(n + 1)))
    return QSeries(order, tuple(coeffs))

def series_inverse(a: QSeries) -> QSeries:
    constant = a.coeffs[0]
    if constant not in (WeightPoly.one(), WeightPoly.constant(-1)):
        message = f"Series with constant term {constant} is not invertible over Z[L]"
        logger.error(message)
        raise NonUnitConstantTerm(message)

    # b_0 = 1/a_0 = a_0 for a unit a_0 = +-1; b_n = -b_0 * sum_{i=1}^{n} a_i b_{n-i}
    inverse = [constant]
    for n in range(1, a.order + 1):
        acc = poly_sum(poly_mul(a.coeffs[i], inverse[n - i]) for i in range(1, n + 1))
        inverse.append(poly_neg(poly_mul(constant, acc)))
    return QSeries(a.order, tuple(inverse))

def series_pow(a: QSeries, n: int) -> QSeries:
    if n < 0:
        raise ValueError(f"Exponent must be nonnegative, got {n}")
    result = QSeries.one(a.order)
    base = a
    while n:
        if n & 1:
            result = series_mul(result, base)
        base = series_mul(base, base)
        n >>= 1
    return result

def coefficient(a: QSeries, m: int) -> WeightPoly:
    if m < 0:
        raise ValueError(f"Coefficient index must be nonnegative, got {m}")
    if m > a.order:
        message = f"Coefficient of q^{m} requested from a series truncated at order {a.order}"
        logger.error(message)
        raise OrderExceeded(message)
    return a.coeffs[m]

def series_from_coeffs(coeffs: Sequence[WeightPoly | int], order: int) -> QSeries:
    return QSeries.from_coeffs(coeffs, order)
