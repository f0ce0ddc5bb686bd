import json
import logging
import pytest
import nodalhilb.config as cfg
import nodalhilb.curves.classes as classes
from nodalhilb.errors import BoundExceeded, ConfigLocked
from nodalhilb.ring import WeightPoly, geometric_sum
from nodalhilb.verifier import identities
from nodalhilb.verifier import (
    CellStatus, Identity, VerificationReport, Verifier, get_check, identity_check, largest_matrix_dimension,
    registered_identities, verify_grid, verify_hilb_support, verify_lemma_A, verify_lemma_B,
    verify_nested_support,
)

L = WeightPoly.L()


@pytest.fixture(autouse=True)
def reset_config_state(monkeypatch):
    monkeypatch.delenv(cfg.get(cfg.BOUND_OVERRIDE_ENV), raising=False)
    original_config = cfg.all_config().copy()
    yield
    while True:
        try:
            cfg.unlock()
        except RuntimeError:
            break
    for key in cfg.USER_CONFIGURABLE_KEYS:
        cfg.set(key, original_config[key])

@pytest.fixture
def off_by_one_nested(monkeypatch):
    def broken(k):
        if k == 0:
            return WeightPoly.one()
        return WeightPoly((1, 2 * k))
    monkeypatch.setattr(classes, 'node_punctual_nested_class', broken)

@pytest.fixture
def off_by_one_hilb(monkeypatch):
    def broken(k):
        if k <= 1:
            return WeightPoly.one()
        return WeightPoly((1, k))
    monkeypatch.setattr(classes, 'node_punctual_hilb_class', broken)


class TestCells:
    def test_hilb_support(self):
        for m in range(5):
            cell = verify_hilb_support(0, m)
            assert cell.status is CellStatus.PASS
            assert cell.lhs == cell.rhs == geometric_sum(m)
        cell = verify_hilb_support(1, 1)
        assert cell.passed
        assert cell.lhs == L
        assert verify_hilb_support(3, 5).passed

    def test_nested_support(self):
        for delta in range(4):
            cell = verify_nested_support(delta, 0)
            assert cell.passed
            assert cell.lhs == L + 1 - delta
        cell = verify_nested_support(0, 2)
        assert cell.lhs == geometric_sum(2) * (L + 1)
        assert verify_nested_support(2, 4).passed

    def test_lemma_A(self):
        assert verify_lemma_A(0, 3).passed
        assert verify_lemma_A(1, 1).passed
        assert verify_lemma_A(3, 4).passed

    def test_lemma_B(self):
        cell = verify_lemma_B(0, 3)
        assert cell.passed
        assert cell.lhs.is_zero() and cell.rhs.is_zero()
        cell = verify_lemma_B(1, 1)
        assert cell.passed
        assert cell.lhs == cell.rhs == L
        assert verify_lemma_B(2, 3).passed

    def test_witness_sources_are_labelled(self):
        cell = verify_nested_support(1, 1)
        assert cell.lhs_source.startswith('curves.')
        assert cell.rhs_source.startswith('monodromy.')


class TestRegistry:
    def test_all_identities_registered(self):
        assert registered_identities() == list(Identity)
        assert get_check('lemma_B') is verify_lemma_B

    def test_unknown_identity(self):
        with pytest.raises(ValueError):
            Identity.parse('lemma_C')

    def test_overwrite_warns(self, monkeypatch, caplog):
        monkeypatch.setattr(identities, '_registered_checks', dict(identities._registered_checks))
        with caplog.at_level(logging.WARNING):
            @identity_check(Identity.LEMMA_B)
            def replacement(delta, m):
                return None
        assert 'overwritten' in caplog.text
        assert get_check(Identity.LEMMA_B) is replacement


class TestHonesty:
    def test_broken_nested_punctual_class_fails_cells(self, off_by_one_nested):
        cell = verify_nested_support(1, 1)
        assert cell.status is CellStatus.FAIL
        assert not cell.lhs.is_zero()
        assert not cell.rhs.is_zero()
        assert cell.lhs != cell.rhs

    def test_broken_nested_punctual_class_fails_grid(self, off_by_one_nested):
        report = verify_grid(2, 2, [Identity.NESTED_SUPPORT])
        assert not report.passed
        assert report.summary()['fail'] > 0
        for cell in report.failures():
            assert cell.lhs.to_json_list() and cell.rhs.to_json_list()

    def test_broken_hilb_punctual_class_fails_cells(self, off_by_one_hilb):
        cell = verify_hilb_support(1, 2)
        assert cell.status is CellStatus.FAIL
        assert cell.lhs != cell.rhs


class TestVerifier:
    def test_smooth_grid_passes(self):
        report = verify_grid(0, 3)
        assert report.passed
        assert report.summary() == {'pass': 16, 'fail': 0, 'timeout': 0}

    def test_default_grid_passes(self):
        delta_max, m_max = cfg.get(cfg.DEFAULT_DELTA_MAX), cfg.get(cfg.DEFAULT_M_MAX)
        assert (delta_max, m_max) == (4, 8)
        report = verify_grid(delta_max, m_max)
        assert report.passed
        assert report.summary() == {'pass': 5 * 9 * 4, 'fail': 0, 'timeout': 0}

    def test_small_grid_passes(self):
        report = verify_grid(2, 3)
        assert report.passed
        assert len(report.cells) == 3 * 4 * 4

    def test_hilb_support_grid(self):
        report = verify_grid(3, 6, {'hilb_support'})
        assert report.passed
        assert report.identities == [Identity.HILB_SUPPORT]

    def test_cells_are_ordered(self):
        report = verify_grid(1, 1, [Identity.LEMMA_B, Identity.HILB_SUPPORT])
        keys = [(c.delta, c.m, c.identity) for c in report.cells]
        assert keys == [
            (0, 0, Identity.HILB_SUPPORT), (0, 0, Identity.LEMMA_B),
            (0, 1, Identity.HILB_SUPPORT), (0, 1, Identity.LEMMA_B),
            (1, 0, Identity.HILB_SUPPORT), (1, 0, Identity.LEMMA_B),
            (1, 1, Identity.HILB_SUPPORT), (1, 1, Identity.LEMMA_B),
        ]

    def test_report_is_deterministic(self):
        first = verify_grid(1, 2).to_json(include_timing=False)
        second = verify_grid(1, 2).to_json(include_timing=False)
        assert first == second

    def test_parallel_matches_sequential(self):
        sequential = verify_grid(1, 2, jobs=1).to_dict(include_timing=False)
        parallel = verify_grid(1, 2, jobs=2).to_dict(include_timing=False)
        assert parallel == sequential

    def test_bound_exceeded(self):
        with pytest.raises(BoundExceeded) as info:
            Verifier(9, 12)
        assert info.value.matrix_dim_estimate > 0
        assert 'safety bound' in str(info.value)

    def test_bound_override_flag(self):
        Verifier(9, 12, override=True)

    def test_bound_override_env(self, monkeypatch):
        monkeypatch.setenv(cfg.get(cfg.BOUND_OVERRIDE_ENV), '1')
        Verifier(6, 3)

    def test_lowered_bound_applies(self):
        cfg.set(cfg.DELTA_SAFETY_BOUND, 1)
        with pytest.raises(BoundExceeded):
            Verifier(2, 1)

    def test_largest_matrix_dimension(self):
        # delta = 1, m = 1, degree 2: H^2 (1) + H^1 x H^1 (2 * 2) + H^0 (1)
        assert largest_matrix_dimension(1, 1) == 6

    def test_negative_bounds_rejected(self):
        with pytest.raises(ValueError):
            Verifier(-1, 2)

    def test_empty_identity_set_rejected(self):
        with pytest.raises(ValueError):
            Verifier(1, 1, identities=[])
        with pytest.raises(ValueError):
            verify_grid(1, 1, set())

    def test_bound_follows_h1_dimension(self):
        cfg.set(cfg.DELTA_SAFETY_BOUND, 2)
        assert cfg.get(cfg.MAX_H1_DIM) == 4
        Verifier(2, 1)
        with pytest.raises(BoundExceeded):
            Verifier(3, 1)

    def test_timeout_is_never_pass(self):
        cfg.set(cfg.CELL_TIMEOUT_SECONDS, -1.0)
        report = verify_grid(0, 1, [Identity.HILB_SUPPORT])
        assert not report.passed
        assert {cell.status for cell in report.cells} == {CellStatus.TIMEOUT}
        assert report.summary()['timeout'] == 2


class TestLifecycle:
    def test_run_requires_with_block(self):
        with pytest.raises(RuntimeError):
            Verifier(0, 1).run()

    def test_activate_only_once(self):
        verifier = Verifier(0, 1)
        with verifier:
            pass
        with pytest.raises(ValueError):
            verifier.__enter__()

    def test_config_locked_while_active(self):
        with Verifier(0, 1):
            with pytest.raises(ConfigLocked):
                cfg.set(cfg.DEFAULT_JOBS, 3)
        cfg.set(cfg.DEFAULT_JOBS, 3)


class TestReport:
    @pytest.fixture
    def report(self) -> VerificationReport:
        return verify_grid(1, 1, [Identity.HILB_SUPPORT, Identity.LEMMA_B])

    def test_json_schema(self, report):
        data = json.loads(report.to_json())
        assert set(data) == {'format_version', 'identities', 'grid', 'cells', 'notes', 'summary'}
        assert data['format_version'] == 1
        assert data['identities'] == ['hilb_support', 'lemma_B']
        assert data['grid']['cells'] == [[0, 0], [0, 1], [1, 0], [1, 1]]
        assert data['summary'] == {'pass': 8, 'fail': 0, 'timeout': 0}
        cell = data['cells'][-1]
        assert cell['identity'] == 'lemma_B'
        assert cell['lhs'] == ['0', '1']
        assert 'elapsed' in cell
        assert any('Kunneth' in note for note in data['notes'])

    def test_json_without_timing(self, report):
        data = report.to_dict(include_timing=False)
        assert all('elapsed' not in cell for cell in data['cells'])

    def test_csv(self, report):
        lines = report.to_csv().splitlines()
        assert lines[0].startswith('identity,delta,m,status,lhs,rhs')
        assert len(lines) == 1 + 8
        assert lines[-1].startswith('lemma_B,1,1,pass,L,L,')

    def test_text(self, report):
        text = report.to_text()
        assert text.splitlines()[0].split() == ['identity', 'delta', 'm', 'status', 'lhs', 'rhs', 'seconds']
        assert 'pass: 8  fail: 0  timeout: 0' in text

    def test_write(self, report, tmp_path):
        path = tmp_path / 'report.json'
        report.write(str(path), report.to_json())
        assert json.loads(path.read_text())['summary']['pass'] == 8
