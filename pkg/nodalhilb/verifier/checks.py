"""
Per-cell checks of the support identities. The class computed from the curve is
always the left-hand witness, the monodromy side the right-hand one.
"""
import logging
import time
from dataclasses import dataclass, replace
from enum import Enum
from nodalhilb.curves import CurveSpec, hilb_class, nested_class, tilde_hilb_class
from nodalhilb.monodromy import ExtraMethod, Method, extra_aggregate, w_H, w_I
from nodalhilb.ring import WeightPoly
from nodalhilb.verifier.identities import Identity, get_check, identity_check

logger = logging.getLogger(__name__)


class CellStatus(Enum):
    PASS = 'pass'
    FAIL = 'fail'
    TIMEOUT = 'timeout'


@dataclass(frozen=True)
class CellResult:
    identity: Identity
    delta: int
    m: int
    status: CellStatus
    lhs: WeightPoly
    rhs: WeightPoly
    lhs_source: str
    rhs_source: str
    elapsed: float = 0.0
    detail: str = ''

    @property
    def passed(self) -> bool:
        return self.status is CellStatus.PASS

    def sort_key(self) -> tuple:
        return (self.delta, self.m, list(Identity).index(self.identity))

    def with_elapsed(self, elapsed: float) -> 'CellResult':
        return replace(self, elapsed=elapsed)


def _compare(identity, delta, m, lhs, rhs, lhs_source, rhs_source) -> CellResult:
    status = CellStatus.PASS if lhs == rhs else CellStatus.FAIL
    if status is CellStatus.FAIL:
        logger.warning(f"{identity.value} fails at delta={delta}, m={m}: {lhs} != {rhs}")
    return CellResult(identity, delta, m, status, lhs, rhs, lhs_source, rhs_source)

def _extra_or_disagreement(identity: Identity, delta: int, m: int):
    """
    Both computations of the extra invariants. Returns (aggregate, None) when they agree,
    otherwise (None, failed cell) carrying the two aggregates as witnesses.
    """
    structural = extra_aggregate(delta, m, ExtraMethod.STRUCTURAL)
    difference = extra_aggregate(delta, m, ExtraMethod.DIFFERENCE)
    if structural == difference:
        return structural, None
    logger.warning(f"Extra invariants disagree at delta={delta}, m={m}: {structural} != {difference}")
    failed = CellResult(
        identity, delta, m, CellStatus.FAIL, structural, difference,
        'monodromy.extra[structural]', 'monodromy.extra[difference]',
        detail='structural and difference computations of the extra invariants disagree',
    )
    return None, failed


@identity_check(Identity.HILB_SUPPORT)
def verify_hilb_support(delta: int, m: int) -> CellResult:
    return _compare(
        Identity.HILB_SUPPORT, delta, m,
        hilb_class(CurveSpec(delta), m), w_H(delta, m, Method.ORACLE),
        'curves.hilb_class', 'monodromy.w_H[oracle]',
    )

@identity_check(Identity.NESTED_SUPPORT)
def verify_nested_support(delta: int, m: int) -> CellResult:
    return _compare(
        Identity.NESTED_SUPPORT, delta, m,
        nested_class(delta, m), w_I(delta, m, Method.ORACLE),
        'curves.nested_class', 'monodromy.w_I[oracle]',
    )

@identity_check(Identity.LEMMA_A)
def verify_lemma_A(delta: int, m: int) -> CellResult:
    """A, defined as w_I minus the extra invariants, against w_H (L + 1 - delta)."""
    extra, failed = _extra_or_disagreement(Identity.LEMMA_A, delta, m)
    if failed:
        return failed
    lhs = w_H(delta, m, Method.ORACLE) * WeightPoly((1 - delta, 1))
    rhs = w_I(delta, m, Method.ORACLE) - extra
    return _compare(
        Identity.LEMMA_A, delta, m, lhs, rhs,
        'monodromy.w_H[oracle] * (L + 1 - delta)', 'monodromy.w_I[oracle] - extra',
    )

@identity_check(Identity.LEMMA_B)
def verify_lemma_B(delta: int, m: int) -> CellResult:
    extra, failed = _extra_or_disagreement(Identity.LEMMA_B, delta, m)
    if failed:
        return failed
    lhs = tilde_hilb_class(delta, m).shift(1) * delta
    return _compare(
        Identity.LEMMA_B, delta, m, lhs, extra,
        'curves.tilde_hilb_class * delta L', 'monodromy.extra[structural]',
    )

def run_cell(identity, delta: int, m: int) -> CellResult:
    """Run one registered check and record its wall-clock time."""
    check = get_check(identity)
    start = time.perf_counter()
    result = check(delta, m)
    return result.with_elapsed(time.perf_counter() - start)
