from fractions import Fraction
from io import StringIO
from typing import List
import csv
import logging

from cantor_oscillator.models.export import ApproximantExport, BreakpointRow
from cantor_oscillator.models.oscillator import CutFinding, CutReport, OrientationPolicy, WitnessFamily
from cantor_oscillator.models.pl import PLFunction
from cantor_oscillator.utils.exact import rat_to_decimal, rat_to_text

logger = logging.getLogger(__name__)

ns_svg = "http://www.w3.org/2000/svg"

# [0, 1] x [-1.3, 1.3] drawn on a 1000 x 600 canvas, y pointing down
SVG_WIDTH = 1000
SVG_HEIGHT = 600
Y_SPAN = Fraction(13, 10)
AXIS_XS = (Fraction(0), Fraction(1, 3), Fraction(2, 3), Fraction(1))

CSV_HEADER = ["x_exact", "y_exact", "x_float", "y_float"]

CUT_FIELDS = ("radius", "negative_point", "negative_value", "positive_point", "positive_value")


def _svg_x(x: Fraction) -> str:
    return f"{float(x * SVG_WIDTH):.4f}"


def _svg_y(y: Fraction) -> str:
    return f"{float((Y_SPAN - y) * SVG_HEIGHT / (2 * Y_SPAN)):.4f}"


class ExportService:

    @staticmethod
    def to_csv(f: PLFunction, float_digits: int = 12) -> str:
        """One row per breakpoint: exact p/q columns followed by their float renderings"""
        buffer = StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for x, y in f.breakpoints:
            writer.writerow([
                rat_to_text(x),
                rat_to_text(y),
                rat_to_decimal(x, float_digits),
                rat_to_decimal(y, float_digits),
            ])
        return buffer.getvalue()

    @staticmethod
    def to_export(f: PLFunction, level: int, policy: OrientationPolicy, float_digits: int = 12) -> ApproximantExport:
        """Breakpoints as exact values with float companions"""
        rows: List[BreakpointRow] = [
            BreakpointRow(
                x=x,
                y=y,
                x_float=rat_to_decimal(x, float_digits),
                y_float=rat_to_decimal(y, float_digits),
            )
            for x, y in f.breakpoints
        ]
        return ApproximantExport(level=level, policy=policy, breakpoint_count=len(rows), breakpoints=rows)

    @staticmethod
    def to_json(f: PLFunction, level: int, policy: OrientationPolicy, float_digits: int = 12) -> str:
        """to_export rendered as indented JSON"""
        return ExportService.to_export(f, level, policy, float_digits).model_dump_json(indent=2)

    @staticmethod
    def to_svg(f: PLFunction, level: int, policy: OrientationPolicy) -> str:
        """Single polyline through every breakpoint, axes at y = 0 and x in {0, 1/3, 2/3, 1}"""
        points = " ".join(f"{_svg_x(x)},{_svg_y(y)}" for x, y in f.breakpoints)
        exact = " ".join(f"{rat_to_text(x)},{rat_to_text(y)}" for x, y in f.breakpoints)
        axis_y = _svg_y(Fraction(0))
        axes = [
            f'<line class="axis" x1="0" y1="{axis_y}" x2="{SVG_WIDTH}" y2="{axis_y}" stroke="#999" stroke-width="1"/>'
        ]
        for x in AXIS_XS:
            axes.append(
                f'<line class="axis" x1="{_svg_x(x)}" y1="0" x2="{_svg_x(x)}" y2="{SVG_HEIGHT}" '
                f'stroke="#ccc" stroke-width="1"/>'
            )
        lines = [
            f'<svg xmlns="{ns_svg}" width="{SVG_WIDTH}" height="{SVG_HEIGHT}" viewBox="0 0 {SVG_WIDTH} {SVG_HEIGHT}">',
            f"<title>f_{level} ({policy.value})</title>",
            f"<desc>{exact}</desc>",
            *axes,
            f'<polyline fill="none" stroke="#1f4e9c" stroke-width="1" points="{points}"/>',
            "</svg>",
        ]
        logger.info(f"Rendered f_{level} as SVG with {len(f.breakpoints)} points")
        return "\n".join(lines) + "\n"

    @staticmethod
    def witness_with_floats(family: WitnessFamily, float_digits: int = 12) -> WitnessFamily:
        """Copy of the family whose intervals carry a_float / b_float"""
        intervals = [
            interval.model_copy(update={
                "a_float": rat_to_decimal(interval.a, float_digits),
                "b_float": rat_to_decimal(interval.b, float_digits),
            })
            for interval in family.intervals
        ]
        return family.model_copy(update={"intervals": intervals})

    @staticmethod
    def cut_report_with_floats(report: CutReport, float_digits: int = 12) -> CutReport:
        """Copy of the report with a *_float companion next to every rational it found"""
        findings: List[CutFinding] = []
        for finding in report.findings:
            update = {
                f"{name}_float": rat_to_decimal(getattr(finding, name), float_digits)
                for name in CUT_FIELDS
                if getattr(finding, name) is not None
            }
            findings.append(finding.model_copy(update=update))
        return report.model_copy(update={
            "x_float": rat_to_decimal(report.x, float_digits),
            "findings": findings,
        })
