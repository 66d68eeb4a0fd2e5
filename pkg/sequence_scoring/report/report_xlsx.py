# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl.html).
"""Spreadsheet exports of benchmark and sorting runs."""

import logging
import re
from io import BytesIO

import xlsxwriter
from gettext import gettext as _

from ..exceptions import UserError

_logger = logging.getLogger(__name__)


class ReportXlsxAbstract:
    """Workbook made of the worksheets listed by ``_get_ws_params``.

    Every worksheet dict carries ``ws_name``, ``title``, ``col_specs`` (a
    list of ``(header, width, format)``) and ``generate_ws_method``, the
    name of the method filling it.
    """

    def create_xlsx_report(self, data):
        file_data = BytesIO()
        workbook = xlsxwriter.Workbook(file_data, self.get_workbook_options())
        self.generate_xlsx_report(workbook, data)
        workbook.close()
        file_data.seek(0)
        return file_data.read()

    def write(self, path, data):
        content = self.create_xlsx_report(data)
        try:
            with open(path, "wb") as f:
                f.write(content)
        except OSError as e:
            raise UserError(
                _("Cannot write the workbook '%(path)s': %(error)s")
                % {"path": path, "error": e.strerror}
            ) from e
        _logger.info("Workbook written to %s (%s bytes)", path, len(content))

    def get_workbook_options(self):
        """
        See https://xlsxwriter.readthedocs.io/workbook.html constructor options
        :return: A dictionary of options
        """
        return {}

    def generate_xlsx_report(self, workbook, data):
        formats = self._define_formats(workbook)
        for ws_params in self._get_ws_params(data):
            ws = workbook.add_worksheet(self._check_ws_name(ws_params["ws_name"]))
            generate_ws_method = getattr(self, ws_params["generate_ws_method"])
            generate_ws_method(ws, ws_params, data, formats)

    def _get_ws_params(self, data):
        return []

    def _check_ws_name(self, name):
        # invalid characters: /\*[]:?
        return re.sub(r"[/\\*\[\]:?]", "", name)[:31]

    def _define_formats(self, workbook):
        border = {"border": True, "border_color": "#D3D3D3"}
        return {
            "title": workbook.add_format({"bold": True, "font_size": 14}),
            "theader": workbook.add_format(
                dict(border, bold=True, bg_color="#CCCCCC", align="center")
            ),
            "text": workbook.add_format(dict(border, align="left")),
            "integer": workbook.add_format(dict(border, num_format="0")),
            "decimal": workbook.add_format(dict(border, num_format="#,##0.000")),
            "ratio": workbook.add_format(dict(border, num_format="0.0000")),
        }

    def _write_table(self, ws, ws_params, rows, formats):
        """Title on the first row, headers on the third, then ``rows``.
        Returns the next free row."""
        col_specs = ws_params["col_specs"]
        ws.write_string(0, 0, ws_params["title"], formats["title"])
        for col, (header, width, _fmt) in enumerate(col_specs):
            ws.set_column(col, col, width)
            ws.write_string(2, col, header, formats["theader"])
        ws.freeze_panes(3, 0)
        row_pos = 3
        for row in rows:
            for col, (value, (_header, _width, fmt)) in enumerate(zip(row, col_specs)):
                if value is None:
                    ws.write_blank(row_pos, col, None, formats[fmt])
                elif fmt == "text":
                    ws.write_string(row_pos, col, str(value), formats[fmt])
                else:
                    ws.write_number(row_pos, col, value, formats[fmt])
            row_pos += 1
        return row_pos


class BenchReportXlsx(ReportXlsxAbstract):
    """``data``: ``records`` (BenchRecord list) and ``summary`` (dicts with
    ``n``, ``algo``, ``median_micros``, ``growth``)."""

    def _get_ws_params(self, data):
        return [
            {
                "ws_name": "Records",
                "title": _("Insertion timings"),
                "col_specs": [
                    ("n", 10, "integer"),
                    ("algo", 10, "text"),
                    ("rep", 6, "integer"),
                    ("micros", 14, "decimal"),
                    ("checksum", 14, "integer"),
                ],
                "generate_ws_method": "_records_report",
            },
            {
                "ws_name": "Summary",
                "title": _("Median time per size"),
                "col_specs": [
                    ("n", 10, "integer"),
                    ("algo", 10, "text"),
                    ("median micros", 16, "decimal"),
                    ("growth", 10, "ratio"),
                ],
                "generate_ws_method": "_summary_report",
            },
        ]

    def _records_report(self, ws, ws_params, data, formats):
        rows = [
            (r.n, r.algo, r.rep, r.micros, r.checksum) for r in data["records"]
        ]
        self._write_table(ws, ws_params, rows, formats)

    def _summary_report(self, ws, ws_params, data, formats):
        rows = [
            (s["n"], s["algo"], s["median_micros"], s["growth"])
            for s in data["summary"]
        ]
        self._write_table(ws, ws_params, rows, formats)


class SortReportXlsx(ReportXlsxAbstract):
    """``data``: ``results``, the per-line dicts of the sort command."""

    def _get_ws_params(self, data):
        return [
            {
                "ws_name": "Records",
                "title": _("Permutations"),
                "col_specs": [
                    ("line", 6, "integer"),
                    ("n", 8, "integer"),
                    ("value", 12, "integer"),
                    ("L", 12, "integer"),
                    ("lower bound", 12, "integer"),
                    ("opt", 12, "integer"),
                    ("ratio", 10, "ratio"),
                    ("permutation", 40, "text"),
                ],
                "generate_ws_method": "_records_report",
            },
            {
                "ws_name": "Summary",
                "title": _("Approximation quality"),
                "col_specs": [
                    ("instances", 10, "integer"),
                    ("errors", 10, "integer"),
                    ("solved exactly", 14, "integer"),
                    ("max ratio", 12, "ratio"),
                    ("mean ratio", 12, "ratio"),
                ],
                "generate_ws_method": "_summary_report",
            },
        ]

    def _records_report(self, ws, ws_params, data, formats):
        rows = []
        for result in data["results"]:
            if "error" in result:
                continue
            permutation = result.get("permutation")
            rows.append(
                (
                    result["line"],
                    result["n"],
                    result.get("value", result.get("opt")),
                    result.get("L"),
                    result.get("lower_bound"),
                    result.get("opt"),
                    result.get("ratio"),
                    " ".join(str(a) for a in (permutation or ())),
                )
            )
        self._write_table(ws, ws_params, rows, formats)

    def _summary_report(self, ws, ws_params, data, formats):
        results = data["results"]
        ratios = [r["ratio"] for r in results if r.get("ratio") is not None]
        row = (
            len(results),
            sum(1 for r in results if "error" in r),
            sum(1 for r in results if r.get("opt") is not None),
            max(ratios) if ratios else None,
            sum(ratios) / len(ratios) if ratios else None,
        )
        self._write_table(ws, ws_params, [row], formats)
