"""Deterministic text and SVG diagrams of vocabularies.

Both renderers are pure functions of their input: the same vocabulary
always produces byte-identical output.  Complete vocabularies draw a
single tiled axis with boundary marks; incomplete ones draw the known
hulls as solid stretches over a dotted axis.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence, Union

from .core import Domain, Vocabulary
from .exemplars import InducedVocabulary

WIDTH = 80

Diagram = Union[Vocabulary, InducedVocabulary]


def _column(value: Fraction, domain: Domain, width: int = WIDTH) -> int:
    span = domain.upper - domain.lower
    position = Fraction(width - 1) * (value - domain.lower) / span
    return int(position)  # floor: positions are never negative


def _value_text(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _overlay(row: list[str], start: int, text: str) -> None:
    """Write onto blank cells only, clipped to the row."""
    for offset, char in enumerate(text):
        index = start + offset
        if 0 <= index < len(row) and row[index] == " ":
            row[index] = char


def _value_row(values: Sequence[Fraction], domain: Domain) -> str:
    row = [" "] * WIDTH
    cursor = 0
    for value in sorted(set(values)):
        text = _value_text(value)
        start = max(_column(value, domain) - len(text) // 2, cursor)
        start = min(start, WIDTH - len(text))
        for offset, char in enumerate(text):
            row[start + offset] = char
        cursor = start + len(text) + 1
    return "".join(row).rstrip()


def _label_row(
    extents: Sequence[Optional[tuple[Fraction, Fraction]]],
    names: Sequence[str],
    domain: Domain,
) -> str:
    row = [" "] * WIDTH
    for j, extent in enumerate(extents):
        if extent is None:
            continue
        center = (_column(extent[0], domain) + _column(extent[1], domain)) // 2
        text = names[j]
        _overlay(row, min(max(center - len(text) // 2, 0), WIDTH - len(text)), text)
    return "".join(row).rstrip()


def _names_for(diagram: Diagram, names: Optional[Sequence[str]]) -> tuple[str, ...]:
    count = diagram.word_count
    if names is None:
        return tuple(f"w{j}" for j in range(1, count + 1))
    if len(names) != count:
        raise ValueError(f"{len(names)} names for {count} words")
    return tuple(names)


def render_ascii(diagram: Diagram, names: Optional[Sequence[str]] = None) -> str:
    names = _names_for(diagram, names)
    domain = diagram.domain
    axis = [" "] * WIDTH
    values: list[Fraction] = [domain.lower, domain.upper]
    if isinstance(diagram, Vocabulary):
        for index in range(WIDTH):
            axis[index] = "-"
        for extent in diagram.extents:
            if extent is None:
                continue
            for bound in extent:
                values.append(bound)
                if domain.contains(bound):
                    axis[_column(bound, domain)] = "|"
    else:
        for index in range(WIDTH):
            axis[index] = "."
        for extent in diagram.extents:
            if extent is None:
                continue
            lo, hi = extent
            values.extend((lo, hi))
            left, right = _column(lo, domain), _column(hi, domain)
            if left == right:
                axis[left] = "*"
            else:
                for index in range(left, right + 1):
                    axis[index] = "="
                axis[left], axis[right] = "[", "]"
    axis[0], axis[-1] = "(", ")"
    lines = [
        _label_row(diagram.extents, names, domain),
        "".join(axis),
        _value_row(values, domain),
    ]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# SVG

_SVG_LEFT = 40
_SVG_SPAN = 720
_SVG_AXIS_Y = 80


def _svg_x(value: Fraction, domain: Domain) -> str:
    span = domain.upper - domain.lower
    x = _SVG_LEFT + _SVG_SPAN * (value - domain.lower) / span
    return f"{float(x):.2f}"


def render_svg(diagram: Diagram, names: Optional[Sequence[str]] = None) -> str:
    names = _names_for(diagram, names)
    domain = diagram.domain
    complete = isinstance(diagram, Vocabulary)
    dashes = "" if complete else ' stroke-dasharray="4 4"'
    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 800 160"'
        ' font-family="monospace" font-size="14">',
        f'  <line x1="{_SVG_LEFT}" y1="{_SVG_AXIS_Y}" x2="{_SVG_LEFT + _SVG_SPAN}"'
        f' y2="{_SVG_AXIS_Y}" stroke="black" stroke-width="1"{dashes}/>',
    ]
    ticks: list[Fraction] = [domain.lower, domain.upper]
    for j, extent in enumerate(diagram.extents):
        if extent is None:
            continue
        lo, hi = extent
        ticks.extend((lo, hi))
        x1, x2 = _svg_x(lo, domain), _svg_x(hi, domain)
        if not complete and lo == hi:
            parts.append(
                f'  <circle cx="{x1}" cy="{_SVG_AXIS_Y}" r="4" fill="black"/>'
            )
        else:
            parts.append(
                f'  <line x1="{x1}" y1="{_SVG_AXIS_Y}" x2="{x2}"'
                f' y2="{_SVG_AXIS_Y}" stroke="black" stroke-width="5"/>'
            )
        mid = (lo + hi) / 2
        parts.append(
            f'  <text x="{_svg_x(mid, domain)}" y="58"'
            f' text-anchor="middle">{names[j]}</text>'
        )
    for value in sorted(set(ticks)):
        x = _svg_x(value, domain)
        parts.append(
            f'  <line x1="{x}" y1="72" x2="{x}" y2="88"'
            ' stroke="black" stroke-width="1"/>'
        )
        parts.append(
            f'  <text x="{x}" y="108" text-anchor="middle">{_value_text(value)}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_diagram(
    diagram: Diagram,
    style: str = "ascii",
    names: Optional[Sequence[str]] = None,
) -> str:
    if style == "ascii":
        return render_ascii(diagram, names)
    if style == "svg":
        return render_svg(diagram, names)
    raise ValueError(f"unknown render style {style!r}; choose ascii or svg")
