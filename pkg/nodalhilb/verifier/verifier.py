import logging
from concurrent.futures import ProcessPoolExecutor, as_completed
from enum import Enum, auto
from typing import Iterable
from nodalhilb import config as cfg
from nodalhilb.errors import BoundExceeded
from nodalhilb.monodromy import nested_rep_dimension
from nodalhilb.verifier.checks import CellResult, CellStatus, run_cell
from nodalhilb.verifier.identities import Identity, registered_identities
from nodalhilb.verifier.report import VerificationReport

logger = logging.getLogger(__name__)


class _VerifierState(Enum):
    INITIALIZED = auto()
    ACTIVE = auto()
    COMPLETED = auto()


def largest_matrix_dimension(delta_max: int, m_max: int) -> int:
    """Dimension of the largest representation whose invariants a grid run computes."""
    return max(nested_rep_dimension(delta_max, m_max, i) for i in range(2 * m_max + 3))


class Verifier:
    """
    Runs identity checks over a (delta, m) rectangle. The configuration is locked
    while the verifier is active:

        with Verifier(4, 8) as verifier:
            report = verifier.run()
    """
    def __init__(
            self,
            delta_max: int,
            m_max: int,
            identities: Iterable = None,
            jobs: int = None,
            override: bool = False,
        ):
        if delta_max < 0 or m_max < 0:
            message = f"Grid bounds must be nonnegative, got delta_max={delta_max}, m_max={m_max}"
            logger.error(message)
            raise ValueError(message)
        self._delta_max = delta_max
        self._m_max = m_max
        if identities is None:
            self._identities = registered_identities()
        else:
            chosen = {Identity.parse(i) for i in identities}
            self._identities = [i for i in Identity if i in chosen]
        if not self._identities:
            message = "At least one identity must be selected"
            logger.error(message)
            raise ValueError(message)
        self._jobs = jobs if jobs is not None else cfg.get(cfg.DEFAULT_JOBS)
        self._override = override or cfg.bound_override_enabled()
        self._state = _VerifierState.INITIALIZED
        self._check_bounds()

    def _check_bounds(self):
        delta_bound = cfg.get(cfg.DELTA_SAFETY_BOUND)
        m_bound = min(cfg.get(cfg.M_SAFETY_BOUND), cfg.get(cfg.M_HARD_LIMIT))
        # H^1 of the nearby fiber has dimension 2 * delta
        if 2 * self._delta_max <= cfg.get(cfg.MAX_H1_DIM) and self._m_max <= m_bound:
            return
        estimate = largest_matrix_dimension(self._delta_max, self._m_max)
        if self._override:
            logger.warning(
                f"Grid delta<={self._delta_max}, m<={self._m_max} is past the safety bound "
                f"(delta<={delta_bound}, m<={m_bound}); running anyway, largest matrix ~{estimate}"
            )
            return
        message = (
            f"Grid delta<={self._delta_max}, m<={self._m_max} exceeds the safety bound "
            f"delta<={delta_bound}, m<={m_bound}: the largest representation has dimension {estimate}. "
            f"Pass --override or set {cfg.get(cfg.BOUND_OVERRIDE_ENV)}=1 to run it anyway."
        )
        logger.error(message)
        raise BoundExceeded(message, estimate)

    def __enter__(self):
        if self._state != _VerifierState.INITIALIZED:
            raise ValueError("Verifier must only be activated once.")
        cfg.lock()
        self._state = _VerifierState.ACTIVE
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        cfg.unlock()
        self._state = _VerifierState.COMPLETED

    def _tasks(self) -> list[tuple[Identity, int, int]]:
        return [
            (identity, delta, m)
            for delta in range(self._delta_max + 1)
            for m in range(self._m_max + 1)
            for identity in self._identities
        ]

    def _run_sequential(self, tasks) -> list[CellResult]:
        return [run_cell(*task) for task in tasks]

    def _run_parallel(self, tasks) -> list[CellResult]:
        results = []
        with ProcessPoolExecutor(max_workers=self._jobs) as executor:
            futures = [executor.submit(run_cell, identity.value, delta, m) for identity, delta, m in tasks]
            for future in as_completed(futures):
                results.append(future.result())
        return results

    def _apply_timeout(self, cell: CellResult) -> CellResult:
        timeout = cfg.get(cfg.CELL_TIMEOUT_SECONDS)
        if cell.elapsed <= timeout:
            return cell
        logger.warning(f"{cell.identity.value} at delta={cell.delta}, m={cell.m} took {cell.elapsed:.1f}s, over {timeout}s")
        return CellResult(
            cell.identity, cell.delta, cell.m, CellStatus.TIMEOUT, cell.lhs, cell.rhs,
            cell.lhs_source, cell.rhs_source, cell.elapsed, f'exceeded the cell timeout of {timeout}s',
        )

    def run(self) -> VerificationReport:
        if self._state != _VerifierState.ACTIVE:
            message = 'Verifier must first be activated by using it in a "with" block'
            logger.error(message)
            raise RuntimeError(message)

        tasks = self._tasks()
        logger.info(
            f"Verifying {', '.join(i.value for i in self._identities)} on delta<={self._delta_max}, "
            f"m<={self._m_max}: {len(tasks)} cells, {self._jobs} job(s)"
        )
        if self._jobs > 1 and len(tasks) > 1:
            cells = self._run_parallel(tasks)
        else:
            cells = self._run_sequential(tasks)
        cells = [self._apply_timeout(cell) for cell in cells]

        report = VerificationReport(self._identities, self._delta_max, self._m_max, cells)
        logger.info(f"Verification finished: {report.summary()}")
        return report


def verify_grid(delta_max: int, m_max: int, identities: Iterable = None, jobs: int = None, override: bool = False) -> VerificationReport:
    with Verifier(delta_max, m_max, identities, jobs, override) as verifier:
        return verifier.run()
