"""
Joint monodromy invariants: the common kernel of T_i - id over all generators.

The generators of every representation built here are sparse and nearly block
diagonal, so the kernel is computed one connected component of their support
graph at a time, each by exact rational elimination.
"""
import logging
from fractions import Fraction
import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components
from sympy import QQ
from sympy.polys.matrices import DomainMatrix
from nodalhilb.errors import InhomogeneousInvariant
from nodalhilb.monodromy.graded import GradedRep, GradedSpace, Operator

logger = logging.getLogger(__name__)

InvariantVector = dict[int, Fraction]


def _component_labels(dim: int, nilpotents: list[Operator]) -> tuple[int, np.ndarray]:
    rows, cols = [], []
    for n in nilpotents:
        for r, c, _ in n:
            rows.append(r)
            cols.append(c)
    graph = coo_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(dim, dim))
    return connected_components(graph, directed=True, connection='weak')

def _to_qq(value):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)

def _component_kernel(component: list[int], blocks: list[dict]) -> list[InvariantVector]:
    """Kernel of the stacked blocks of all T_i - id restricted to one component."""
    local = {x: n for n, x in enumerate(component)}
    size = len(component)
    rows = []
    for block in blocks:
        for _, row in sorted(block.items()):
            dense = [QQ(0)] * size
            for c, v in row.items():
                dense[local[c]] = _to_qq(v)
            rows.append(dense)

    if not rows:
        return [{x: Fraction(1)} for x in component]

    matrix = DomainMatrix(rows, (len(rows), size), QQ)
    vectors = []
    for row in matrix.nullspace().to_Matrix().tolist():
        vector = {}
        for n, value in enumerate(row):
            if value != 0:
                vector[component[n]] = Fraction(int(value.p), int(value.q))
        vectors.append(vector)
    return vectors

def invariant_basis(rep: GradedRep) -> list[tuple[int, InvariantVector]]:
    """
    A basis of the joint invariants as (weight, sparse vector) pairs.

    The kernel of a unipotent action whose logarithm lowers weights by 2 is spanned
    by weight-homogeneous vectors, and the echelon basis returned by elimination is
    homogeneous; anything else is reported rather than guessed.
    """
    if rep.dim == 0:
        return []
    nilpotents = [g.minus_identity() for g in rep.generators]
    count, labels = _component_labels(rep.dim, nilpotents)

    members = [[] for _ in range(count)]
    for x, label in enumerate(labels):
        members[label].append(x)
    blocks = [[{} for _ in nilpotents] for _ in range(count)]
    for i, n in enumerate(nilpotents):
        for r, c, v in n:
            blocks[labels[r]][i].setdefault(r, {})[c] = v

    result = []
    # components are visited in order of their smallest basis index
    for label in sorted(range(count), key=lambda lab: members[lab][0]):
        for vector in _component_kernel(members[label], blocks[label]):
            weights = {rep.weights[x] for x in vector}
            if len(weights) != 1:
                message = f"Invariant vector with support weights {sorted(weights)} is not weight-homogeneous"
                logger.error(message)
                raise InhomogeneousInvariant(message)
            result.append((weights.pop(), vector))
    logger.debug(f"Representation of dimension {rep.dim} has {len(result)} invariants")
    return result

def invariants(rep: GradedRep) -> GradedSpace:
    weights = tuple(weight for weight, _ in invariant_basis(rep))
    return GradedSpace(len(weights), weights)
