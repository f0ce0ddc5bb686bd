"""
Renderers for the three output formats of the command line.

JSON polynomials are arrays of decimal strings, lowest degree first, so that
coefficients of any size survive a round trip. Text polynomials are written in
descending powers of L.
"""
import csv
import io
import json
from enum import Enum
from nodalhilb import config as cfg
from nodalhilb.ring import QSeries, WeightPoly
from nodalhilb.verifier import VerificationReport


class OutputFormat(Enum):
    JSON = 'json'
    CSV = 'csv'
    TEXT = 'text'


class _BaseFormat:
    def render_poly(self, poly: WeightPoly) -> str:
        raise NotImplementedError(f"Polynomial rendering not implemented for {type(self).__name__}")

    def render_series(self, series: QSeries) -> str:
        raise NotImplementedError(f"Series rendering not implemented for {type(self).__name__}")

    def render_report(self, report: VerificationReport) -> str:
        raise NotImplementedError(f"Report rendering not implemented for {type(self).__name__}")


class _JsonFormat(_BaseFormat):
    def render_poly(self, poly: WeightPoly) -> str:
        return json.dumps(poly.to_json_list())

    def render_series(self, series: QSeries) -> str:
        return json.dumps([c.to_json_list() for c in series.coeffs])

    def render_report(self, report: VerificationReport) -> str:
        return report.to_json()


class _CsvFormat(_BaseFormat):
    def _write(self, header, rows) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(header)
        writer.writerows(rows)
        return buffer.getvalue()

    def render_poly(self, poly: WeightPoly) -> str:
        return self._write(('power', 'coefficient'), enumerate(poly.coeffs))

    def render_series(self, series: QSeries) -> str:
        rows = (
            (q_power, power, c)
            for q_power, poly in enumerate(series.coeffs)
            for power, c in enumerate(poly.coeffs)
        )
        return self._write((f"{cfg.get(cfg.SERIES_VARIABLE)}_power", 'power', 'coefficient'), rows)

    def render_report(self, report: VerificationReport) -> str:
        return report.to_csv()


class _TextFormat(_BaseFormat):
    def render_poly(self, poly: WeightPoly) -> str:
        return poly.to_text(cfg.get(cfg.POLY_VARIABLE))

    def render_series(self, series: QSeries) -> str:
        return series.to_text(cfg.get(cfg.POLY_VARIABLE))

    def render_report(self, report: VerificationReport) -> str:
        return report.to_text()


_FORMATS = {
    OutputFormat.JSON: _JsonFormat(),
    OutputFormat.CSV: _CsvFormat(),
    OutputFormat.TEXT: _TextFormat(),
}

def get_format(output_format) -> _BaseFormat:
    return _FORMATS[OutputFormat(output_format)]
