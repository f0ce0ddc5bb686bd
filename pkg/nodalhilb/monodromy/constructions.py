import logging
from itertools import combinations, product
from typing import Sequence
from sympy.combinatorics import Permutation
from nodalhilb.errors import DeltaMismatch, PowerExceedsDimension
from nodalhilb.monodromy.graded import GradedRep, Operator

logger = logging.getLogger(__name__)


def zero_rep(delta: int) -> GradedRep:
    return GradedRep(delta, (), tuple(Operator(0) for _ in range(delta)))

def trivial_rep(delta: int, weight: int = 0) -> GradedRep:
    return GradedRep(delta, (weight,), tuple(Operator.identity(1) for _ in range(delta)))

def build_h1(delta: int) -> GradedRep:
    """
    H^1 of a smooth nearby fiber with basis (alpha_1, beta_1, ..., alpha_delta, beta_delta).
    The vanishing cycles alpha_i have weight 0, their partners beta_i weight 2, and the
    loop around the i-th branch of the discriminant sends beta_i to alpha_i + beta_i.
    """
    dim = 2 * delta
    generators = []
    for i in range(delta):
        alpha, beta = 2 * i, 2 * i + 1
        entries = {(j, j): 1 for j in range(dim)}
        entries[(alpha, beta)] = 1
        generators.append(Operator(dim, entries))
    return GradedRep(delta, (0, 2) * delta, tuple(generators))

def _wedge_sign(indices: Sequence[int]) -> int:
    if len(indices) < 2:
        return 1
    order = sorted(range(len(indices)), key=indices.__getitem__)
    return Permutation(order).signature()

def _wedge_operator(generator: Operator, basis: list[tuple[int, ...]], index: dict[tuple[int, ...], int]) -> Operator:
    columns = generator.columns()
    entries = {}
    for c, subset in enumerate(basis):
        # T(e_s1 ^ ... ^ e_sl) = (T e_s1) ^ ... ^ (T e_sl), expanded and reduced to sorted monomials
        for choice in product(*(columns[s] for s in subset)):
            rows = [r for r, _ in choice]
            if len(set(rows)) < len(rows):
                continue
            value = _wedge_sign(rows)
            for _, v in choice:
                value *= v
            r = index[tuple(sorted(rows))]
            entries[(r, c)] = entries.get((r, c), 0) + value
    return Operator(len(basis), entries)

def exterior_power(rep: GradedRep, l: int, strict: bool = False) -> GradedRep:
    """
    The l-th exterior power, with basis the sorted l-subsets of the basis of ``rep``.
    Past the dimension the power vanishes; ``strict`` turns that case into an error.
    """
    if l < 0:
        raise ValueError(f"Exterior power degree must be nonnegative, got {l}")
    if l > rep.dim:
        if strict:
            message = f"Exterior power {l} exceeds the dimension {rep.dim} of the representation"
            logger.error(message)
            raise PowerExceedsDimension(message)
        return zero_rep(rep.delta)

    basis = list(combinations(range(rep.dim), l))
    index = {subset: n for n, subset in enumerate(basis)}
    weights = tuple(sum(rep.weights[s] for s in subset) for subset in basis)
    generators = tuple(_wedge_operator(g, basis, index) for g in rep.generators)
    logger.debug(f"Exterior power {l} of a {rep.dim}-dimensional representation has dimension {len(basis)}")
    return GradedRep(rep.delta, weights, generators)

def _require_same_delta(a: GradedRep, b: GradedRep):
    if a.delta != b.delta:
        message = f"Representations of Z^{a.delta} and Z^{b.delta} cannot be combined"
        logger.error(message)
        raise DeltaMismatch(message)

def tensor(a: GradedRep, b: GradedRep) -> GradedRep:
    """Each generator acts diagonally as T_i (x) T_i; weights add."""
    _require_same_delta(a, b)
    weights = tuple(wa + wb for wa in a.weights for wb in b.weights)
    generators = tuple(ga.kron(gb) for ga, gb in zip(a.generators, b.generators))
    return GradedRep(a.delta, weights, generators)

def tate_twist(rep: GradedRep, k: int) -> GradedRep:
    if k < 0:
        raise ValueError(f"Tate twist must be nonnegative, got {k}")
    if k == 0:
        return rep
    return GradedRep(rep.delta, tuple(w + 2 * k for w in rep.weights), rep.generators)

def direct_sum(a: GradedRep, b: GradedRep) -> GradedRep:
    _require_same_delta(a, b)
    generators = tuple(ga.block_sum(gb) for ga, gb in zip(a.generators, b.generators))
    return GradedRep(a.delta, a.weights + b.weights, generators)

def direct_sum_all(delta: int, reps) -> GradedRep:
    total = zero_rep(delta)
    for rep in reps:
        total = direct_sum(total, rep)
    return total

def relabel(rep: GradedRep, basis_perm: Sequence[int], generator_order: Sequence[int] = None) -> GradedRep:
    """
    Conjugate by the basis permutation x -> basis_perm[x], optionally reordering the
    generators. Used to check that nothing depends on how the nodes are numbered.
    """
    if sorted(basis_perm) != list(range(rep.dim)):
        raise ValueError("basis_perm must be a permutation of the basis indices")
    weights = [0] * rep.dim
    for x, w in enumerate(rep.weights):
        weights[basis_perm[x]] = w
    order = generator_order if generator_order is not None else range(rep.delta)
    generators = tuple(rep.generators[i].relabeled(basis_perm) for i in order)
    return GradedRep(rep.delta, tuple(weights), generators)
