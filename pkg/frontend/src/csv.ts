/**
 * Reader for the boundlab CSV format: '#'-prefixed "key: value" metadata
 * lines, one header row, comma-separated float rows. Empty cells are NaN
 * (the series is undefined at that x).
 */

import * as fs from "fs";

export interface CurveTable {
  metadata: Record<string, string>;
  xLabel: string;
  columns: string[]; // full header, x label first
  x: number[];
  series: Map<string, number[]>;
}

export class CsvFormatError extends Error {}

function parseCell(cell: string): number {
  if (cell === "") return NaN;
  const v = Number(cell);
  if (Number.isNaN(v) && cell.toLowerCase() !== "nan") {
    throw new CsvFormatError(`not a number: "${cell}"`);
  }
  return v;
}

export function parseCurveCsv(text: string): CurveTable {
  const metadata: Record<string, string> = {};
  let header: string[] | null = null;
  const rows: number[][] = [];

  for (const rawLine of text.split("\n")) {
    const line = rawLine.replace(/\r$/, "");
    if (line === "") continue;
    if (line.startsWith("#")) {
      const body = line.slice(1).trim();
      const sep = body.indexOf(":");
      if (sep > 0) {
        metadata[body.slice(0, sep).trim()] = body.slice(sep + 1).trim();
      }
      continue;
    }
    const cells = line.split(",");
    if (header === null) {
      header = cells.map((c) => c.trim());
      if (header.length < 2) {
        throw new CsvFormatError("header needs an x column and at least one series");
      }
      continue;
    }
    if (cells.length !== header.length) {
      throw new CsvFormatError(
        `row has ${cells.length} cells, header has ${header.length}`,
      );
    }
    rows.push(cells.map(parseCell));
  }

  if (header === null) throw new CsvFormatError("no header row found");
  if (rows.length === 0) throw new CsvFormatError("no data rows found");

  const x = rows.map((r) => r[0]);
  for (let i = 1; i < x.length; i++) {
    if (!(x[i] > x[i - 1])) {
      throw new CsvFormatError(`x column must strictly increase (row ${i})`);
    }
  }

  const series = new Map<string, number[]>();
  for (let c = 1; c < header.length; c++) {
    series.set(header[c], rows.map((r) => r[c]));
  }
  return { metadata, xLabel: header[0], columns: header, x, series };
}

export function loadCurveCsv(path: string): CurveTable {
  return parseCurveCsv(fs.readFileSync(path, "utf-8"));
}
