import csv
import io
import json
import logging
from dataclasses import dataclass, field
from nodalhilb import config as cfg
from nodalhilb.verifier.checks import CellResult, CellStatus
from nodalhilb.verifier.identities import Identity

logger = logging.getLogger(__name__)

CONVENTION_NOTES = (
    "Kunneth: the third summand of the nested cohomology is H^(i-2)(C^[m])(-1).",
    "Nodal gluing: a length-k scheme at a node is glued back from the two branch points in k ways, "
    "so [C~^[m]] = sum_k k [(C-x)^[m-k]].",
    "Duality: above the middle degree H^i = H^(2m-i)(m-i) shifts weights up by 2(i-m), "
    "which makes w(H^m) of a smooth rational curve equal to [P^m].",
    "w(I^m) closed form: every cohomological degree i carries the sign (-1)^i; the oracle is ground truth.",
)

CSV_COLUMNS = ('identity', 'delta', 'm', 'status', 'lhs', 'rhs', 'lhs_source', 'rhs_source', 'elapsed', 'detail')


@dataclass
class VerificationReport:
    """
    Outcome of a verification run. Cells are kept ordered by (delta, m, identity)
    regardless of the order in which they were computed.
    """
    identities: list[Identity]
    delta_max: int
    m_max: int
    cells: list[CellResult] = field(default_factory=list)
    notes: list[str] = field(default_factory=lambda: list(CONVENTION_NOTES))

    def __post_init__(self):
        self.cells = sorted(self.cells, key=CellResult.sort_key)

    @property
    def grid(self) -> list[tuple[int, int]]:
        return [(delta, m) for delta in range(self.delta_max + 1) for m in range(self.m_max + 1)]

    def summary(self) -> dict[str, int]:
        counts = {status.value: 0 for status in CellStatus}
        for cell in self.cells:
            counts[cell.status.value] += 1
        return counts

    @property
    def passed(self) -> bool:
        return all(cell.passed for cell in self.cells)

    def failures(self) -> list[CellResult]:
        return [cell for cell in self.cells if not cell.passed]

    def _cell_dict(self, cell: CellResult, include_timing: bool) -> dict:
        entry = {
            'identity': cell.identity.value,
            'delta': cell.delta,
            'm': cell.m,
            'status': cell.status.value,
            'lhs': cell.lhs.to_json_list(),
            'rhs': cell.rhs.to_json_list(),
            'lhs_source': cell.lhs_source,
            'rhs_source': cell.rhs_source,
        }
        if cell.detail:
            entry['detail'] = cell.detail
        if include_timing:
            entry['elapsed'] = round(cell.elapsed, 6)
        return entry

    def to_dict(self, include_timing: bool = True) -> dict:
        return {
            'format_version': cfg.get(cfg.REPORT_FORMAT_VERSION),
            'identities': [identity.value for identity in self.identities],
            'grid': {'delta_max': self.delta_max, 'm_max': self.m_max, 'cells': [list(c) for c in self.grid]},
            'cells': [self._cell_dict(cell, include_timing) for cell in self.cells],
            'notes': list(self.notes),
            'summary': self.summary(),
        }

    def to_json(self, include_timing: bool = True) -> str:
        return json.dumps(self.to_dict(include_timing), indent=2)

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(CSV_COLUMNS)
        for cell in self.cells:
            writer.writerow([
                cell.identity.value, cell.delta, cell.m, cell.status.value,
                cell.lhs.to_text(), cell.rhs.to_text(), cell.lhs_source, cell.rhs_source,
                f'{cell.elapsed:.6f}', cell.detail,
            ])
        return buffer.getvalue()

    def to_text(self) -> str:
        header = ('identity', 'delta', 'm', 'status', 'lhs', 'rhs', 'seconds')
        rows = [
            (cell.identity.value, str(cell.delta), str(cell.m), cell.status.value,
             cell.lhs.to_text(), cell.rhs.to_text(), f'{cell.elapsed:.3f}')
            for cell in self.cells
        ]
        widths = [max(len(row[n]) for row in [header, *rows]) for n in range(len(header))]
        lines = ['  '.join(value.ljust(width) for value, width in zip(row, widths)).rstrip() for row in [header, *rows]]
        counts = self.summary()
        lines.append('')
        lines.append(f"pass: {counts['pass']}  fail: {counts['fail']}  timeout: {counts['timeout']}")
        lines.extend(f'note: {note}' for note in self.notes)
        return '\n'.join(lines) + '\n'

    def write(self, file_path: str, rendered: str):
        with open(file_path, 'w', encoding='utf-8') as file:
            file.write(rendered)
        logger.info(f"Verification report written to {file_path}")
