from __future__ import annotations
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Iterator, Mapping, Sequence
from nodalhilb.ring import WeightPoly, poly_sum

logger = logging.getLogger(__name__)

Scalar = int | Fraction


@dataclass(frozen=True, eq=False)
class Operator:
    """
    A square matrix with exact entries, stored sparsely as {(row, col): value}.
    Zero entries are never stored.
    """
    dim: int
    entries: Mapping[tuple[int, int], Scalar] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {}
        for (r, c), v in self.entries.items():
            if not (0 <= r < self.dim and 0 <= c < self.dim):
                raise IndexError(f"Entry ({r}, {c}) outside a {self.dim}x{self.dim} operator")
            if v != 0:
                cleaned[(r, c)] = v
        object.__setattr__(self, 'entries', MappingProxyType(cleaned))

    @classmethod
    def identity(cls, dim: int) -> Operator:
        return cls(dim, {(i, i): 1 for i in range(dim)})

    def __eq__(self, other):
        if not isinstance(other, Operator):
            return NotImplemented
        return self.dim == other.dim and dict(self.entries) == dict(other.entries)

    def __iter__(self) -> Iterator[tuple[int, int, Scalar]]:
        for (r, c), v in self.entries.items():
            yield r, c, v

    def columns(self) -> list[list[tuple[int, Scalar]]]:
        cols = [[] for _ in range(self.dim)]
        for (r, c), v in sorted(self.entries.items(), key=lambda item: (item[0][1], item[0][0])):
            cols[c].append((r, v))
        return cols

    def matmul(self, other: Operator) -> Operator:
        if self.dim != other.dim:
            raise ValueError(f"Cannot multiply operators of dimensions {self.dim} and {other.dim}")
        rows_of_other = {}
        for (r, c), v in other.entries.items():
            rows_of_other.setdefault(r, []).append((c, v))
        product = {}
        for (r, k), v in self.entries.items():
            for c, w in rows_of_other.get(k, ()):
                product[(r, c)] = product.get((r, c), 0) + v * w
        return Operator(self.dim, product)

    __matmul__ = matmul

    def minus_identity(self) -> Operator:
        shifted = dict(self.entries)
        for i in range(self.dim):
            shifted[(i, i)] = shifted.get((i, i), 0) - 1
        return Operator(self.dim, shifted)

    def is_zero(self) -> bool:
        return not self.entries

    def kron(self, other: Operator) -> Operator:
        """Kronecker product; basis vector (x, y) gets index x * other.dim + y."""
        n = other.dim
        product = {}
        for (r1, c1), v1 in self.entries.items():
            for (r2, c2), v2 in other.entries.items():
                product[(r1 * n + r2, c1 * n + c2)] = v1 * v2
        return Operator(self.dim * n, product)

    def block_sum(self, other: Operator) -> Operator:
        offset = self.dim
        combined = dict(self.entries)
        for (r, c), v in other.entries.items():
            combined[(r + offset, c + offset)] = v
        return Operator(self.dim + other.dim, combined)

    def relabeled(self, perm: Sequence[int]) -> Operator:
        """P T P^-1 for the permutation sending basis vector x to perm[x]."""
        return Operator(self.dim, {(perm[r], perm[c]): v for (r, c), v in self.entries.items()})

    def to_dense(self) -> list[list[Scalar]]:
        dense = [[0] * self.dim for _ in range(self.dim)]
        for (r, c), v in self.entries.items():
            dense[r][c] = v
        return dense


def _weight_polynomial(weights: Sequence[int]) -> WeightPoly:
    return poly_sum(WeightPoly.monomial(1, w // 2) for w in weights)

def _check_weights(weights: Sequence[int]):
    for w in weights:
        if w < 0 or w % 2:
            raise ValueError(f"Weights must be even and nonnegative, got {w}")


@dataclass(frozen=True)
class GradedSpace:
    """A vector space with an even weight attached to each basis vector."""
    dim: int
    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'weights', tuple(self.weights))
        if len(self.weights) != self.dim:
            raise ValueError(f"Expected {self.dim} weights, got {len(self.weights)}")
        _check_weights(self.weights)

    def weight_polynomial(self) -> WeightPoly:
        """Unsigned: every basis vector of weight 2k contributes L^k."""
        return _weight_polynomial(self.weights)


@dataclass(frozen=True, eq=False)
class GradedRep:
    """
    A representation of Z^delta, one generator per node, on a space whose basis
    vectors carry even weights. Values are never mutated after construction.
    """
    delta: int
    weights: tuple[int, ...]
    generators: tuple[Operator, ...]

    def __post_init__(self):
        object.__setattr__(self, 'weights', tuple(self.weights))
        object.__setattr__(self, 'generators', tuple(self.generators))
        _check_weights(self.weights)
        if len(self.generators) != self.delta:
            raise ValueError(f"A representation of Z^{self.delta} needs {self.delta} generators, got {len(self.generators)}")
        for g in self.generators:
            if g.dim != self.dim:
                raise ValueError(f"Generator of dimension {g.dim} on a space of dimension {self.dim}")

    @property
    def dim(self) -> int:
        return len(self.weights)

    def weight_polynomial(self) -> WeightPoly:
        return _weight_polynomial(self.weights)

    def generators_commute(self) -> bool:
        for i, a in enumerate(self.generators):
            for b in self.generators[i + 1:]:
                if a @ b != b @ a:
                    return False
        return True

    def preserves_weight_filtration(self) -> bool:
        """Entry (r, c) may only be nonzero when weight(r) <= weight(c)."""
        return all(
            self.weights[r] <= self.weights[c]
            for g in self.generators for r, c, _ in g
        )
