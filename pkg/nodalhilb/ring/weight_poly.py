from __future__ import annotations
import json
import operator
from dataclasses import dataclass
from typing import Iterable
from sympy.polys.domains import ZZ
from sympy.polys.densearith import dup_add, dup_sub, dup_mul, dup_neg, dup_mul_ground
from sympy.polys.densebasic import dup_strip

# sympy's dense univariate routines ("dup") keep coefficients highest degree first;
# WeightPoly keeps them lowest degree first.

def _to_dup(coeffs: tuple[int, ...]) -> list:
    return [ZZ(c) for c in reversed(coeffs)]

def _from_dup(f: list) -> tuple[int, ...]:
    return tuple(int(c) for c in reversed(dup_strip(f)))


@dataclass(frozen=True)
class WeightPoly:
    """
    A polynomial in L, the class of the affine line, with integer coefficients.

    ``coeffs[i]`` is the coefficient of ``L**i``. Trailing zeros are stripped on
    construction so two equal polynomials always compare equal structurally; the
    zero polynomial has no coefficients at all.
    """
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        coeffs = [operator.index(c) for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, 'coeffs', tuple(coeffs))

    @classmethod
    def zero(cls) -> WeightPoly:
        return cls(())

    @classmethod
    def one(cls) -> WeightPoly:
        return cls((1,))

    @classmethod
    def L(cls) -> WeightPoly:
        return cls((0, 1))

    @classmethod
    def constant(cls, value: int) -> WeightPoly:
        return cls((value,))

    @classmethod
    def monomial(cls, coefficient: int, power: int) -> WeightPoly:
        if power < 0:
            raise ValueError(f"Negative power {power} is not a polynomial")
        return cls((0,) * power + (coefficient,))

    @classmethod
    def from_json(cls, raw) -> WeightPoly:
        if isinstance(raw, str):
            raw = json.loads(raw)
        return cls(tuple(int(c) for c in raw))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, power: int) -> int:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return 0

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return poly_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return poly_sub(self, other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return poly_sub(other, self)

    def __neg__(self):
        return poly_neg(self)

    def __mul__(self, other):
        if isinstance(other, int):
            return poly_scale(self, other)
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("Weight polynomials have no negative powers")
        result = WeightPoly.one()
        base = self
        while exponent:
            if exponent & 1:
                result = poly_mul(result, base)
            base = poly_mul(base, base)
            exponent >>= 1
        return result

    def shift(self, power: int) -> WeightPoly:
        return poly_shift(self, power)

    def eval_at_one(self) -> int:
        return eval_at_one(self)

    def to_json_list(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    def to_text(self, variable: str = 'L') -> str:
        if not self.coeffs:
            return '0'
        parts = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            magnitude = abs(c)
            if power == 0:
                token = str(magnitude)
            else:
                unit = variable if power == 1 else f'{variable}^{power}'
                token = unit if magnitude == 1 else f'{magnitude}{unit}'
            if not parts:
                parts.append(f'-{token}' if c < 0 else token)
            else:
                parts.append(f'- {token}' if c < 0 else f'+ {token}')
        return ' '.join(parts)

    def __str__(self):
        return self.to_text()


def _coerce(value):
    if isinstance(value, WeightPoly):
        return value
    if isinstance(value, int):
        return WeightPoly.constant(value)
    return NotImplemented


def poly_add(a: WeightPoly, b: WeightPoly) -> WeightPoly:
    return WeightPoly(_from_dup(dup_add(_to_dup(a.coeffs), _to_dup(b.coeffs), ZZ)))

def poly_sub(a: WeightPoly, b: WeightPoly) -> WeightPoly:
    return WeightPoly(_from_dup(dup_sub(_to_dup(a.coeffs), _to_dup(b.coeffs), ZZ)))

def poly_neg(a: WeightPoly) -> WeightPoly:
    return WeightPoly(_from_dup(dup_neg(_to_dup(a.coeffs), ZZ)))

def poly_mul(a: WeightPoly, b: WeightPoly) -> WeightPoly:
    if a.is_zero() or b.is_zero():
        return WeightPoly.zero()
    return WeightPoly(_from_dup(dup_mul(_to_dup(a.coeffs), _to_dup(b.coeffs), ZZ)))

def poly_scale(a: WeightPoly, factor: int) -> WeightPoly:
    return WeightPoly(_from_dup(dup_mul_ground(_to_dup(a.coeffs), ZZ(factor), ZZ)))

def poly_shift(a: WeightPoly, power: int) -> WeightPoly:
    """Multiply by L**power (a Tate twist by ``power``)."""
    if power < 0:
        raise ValueError(f"Cannot shift by negative power {power}")
    if a.is_zero():
        return a
    return WeightPoly((0,) * power + a.coeffs)

def poly_sum(polys: Iterable[WeightPoly]) -> WeightPoly:
    total = WeightPoly.zero()
    for p in polys:
        total = poly_add(total, p)
    return total

def eval_at_one(a: WeightPoly) -> int:
    """Specialize L -> 1, turning a class into its Euler characteristic."""
    return sum(a.coeffs)

def geometric_sum(n: int) -> WeightPoly:
    """1 + L + ... + L**n, the class of projective n-space; zero for n < 0."""
    if n < 0:
        return WeightPoly.zero()
    return WeightPoly((1,) * (n + 1))
