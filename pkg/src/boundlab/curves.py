"""Curve container and CSV serialization for figure data.

A Curve is one figure's worth of series sampled on a shared, strictly
increasing x grid. Cells may be NaN where a series has no value (outside
its validity domain); they serialize as empty CSV cells so downstream
plotters can break the line there.

CSV layout: '#'-prefixed metadata lines ("# key: value"), then a header
row naming the x column and each series, then data rows. No timestamps,
so identical inputs produce identical bytes.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Sequence, Tuple, Union

from .errors import DomainError


@dataclass(frozen=True)
class Curve:
    name: str
    x_label: str
    x: Tuple[float, ...]
    series: Tuple[Tuple[str, Tuple[float, ...]], ...]

    def __post_init__(self):
        if len(self.x) == 0:
            raise DomainError(f"curve {self.name!r}: empty x grid")
        for a, b in zip(self.x, self.x[1:]):
            if not a < b:
                raise DomainError(
                    f"curve {self.name!r}: x grid not strictly increasing "
                    f"({a} then {b})")
        for label, values in self.series:
            if len(values) != len(self.x):
                raise DomainError(
                    f"curve {self.name!r}: series {label!r} has {len(values)} "
                    f"values for {len(self.x)} x points")

    @property
    def labels(self) -> Tuple[str, ...]:
        return tuple(label for label, _ in self.series)

    def column(self, label: str) -> Tuple[float, ...]:
        for lab, values in self.series:
            if lab == label:
                return values
        raise DomainError(f"curve {self.name!r} has no series {label!r}")


def _format_cell(v: float) -> str:
    if v is None or (isinstance(v, float) and math.isnan(v)):
        return ""
    return repr(float(v))


def write_csv(curve: Curve, target: Union[str, io.TextIOBase],
              metadata: Optional[Dict[str, str]] = None) -> None:
    """Serialize to CSV. metadata keys become '# key: value' header lines."""
    own = isinstance(target, str)
    fh = open(target, "w", encoding="utf-8", newline="") if own else target
    try:
        for key, value in (metadata or {}).items():
            fh.write(f"# {key}: {value}\n")
        fh.write(",".join([curve.x_label, *curve.labels]) + "\n")
        for i, xv in enumerate(curve.x):
            cells = [repr(float(xv))]
            cells += [_format_cell(values[i]) for _, values in curve.series]
            fh.write(",".join(cells) + "\n")
    finally:
        if own:
            fh.close()


def read_csv(source: Union[str, io.TextIOBase],
             name: str = "") -> Tuple[Curve, Dict[str, str]]:
    """Parse a CSV produced by write_csv. Returns (curve, metadata)."""
    own = isinstance(source, str)
    fh = open(source, "r", encoding="utf-8") if own else source
    try:
        metadata: Dict[str, str] = {}
        header: Optional[Sequence[str]] = None
        xs = []
        cols: list = []
        for raw in fh:
            line = raw.rstrip("\n")
            if not line.strip():
                continue
            if line.startswith("#"):
                body = line[1:].strip()
                if ":" in body:
                    key, _, value = body.partition(":")
                    metadata[key.strip()] = value.strip()
                continue
            cells = line.split(",")
            if header is None:
                header = [c.strip() for c in cells]
                cols = [[] for _ in header[1:]]
                continue
            if len(cells) != len(header):
                raise DomainError(
                    f"CSV row has {len(cells)} cells, header has {len(header)}")
            xs.append(float(cells[0]))
            for j, cell in enumerate(cells[1:]):
                cols[j].append(float(cell) if cell.strip() else math.nan)
        if header is None:
            raise DomainError("CSV has no header row")
        curve = Curve(name=name or metadata.get("figure", ""),
                      x_label=header[0], x=tuple(xs),
                      series=tuple((lab, tuple(col))
                                   for lab, col in zip(header[1:], cols)))
        return curve, metadata
    finally:
        if own:
            fh.close()
