import { describe, expect, it } from "vitest";
import * as path from "path";
import { loadCurveCsv, parseCurveCsv, CsvFormatError } from "../src/csv";
import { RECIPES, FIGURE_IDS } from "../src/recipes";
import { planSeries, renderFigure, RecipeError } from "../src/render";

const fixture = (id: string) =>
  path.join(__dirname, "fixtures", `${id}.csv`);

describe("csv parsing", () => {
  it("reads metadata, header, and data", () => {
    const table = loadCurveCsv(fixture("ru-q15"));
    expect(table.metadata.command).toContain("boundlab figure ru-q15");
    expect(table.columns).toEqual([
      "delta",
      "ru_q15",
      "johnson_q15",
      "half_delta",
    ]);
    expect(table.x.length).toBe(512);
    expect(table.series.get("half_delta")![0]).toBeCloseTo(table.x[0] / 2, 12);
  });

  it("turns empty cells into NaN", () => {
    const table = loadCurveCsv(fixture("pstar-vs-johnson"));
    const q9 = table.series.get("pstar_q9")!;
    // q = 9 curves are masked past delta = 8/9 on the shared grid
    expect(q9.some((v) => Number.isNaN(v))).toBe(true);
    expect(Number.isNaN(q9[0])).toBe(false);
  });

  it("rejects an empty file", () => {
    expect(() => parseCurveCsv("")).toThrow(CsvFormatError);
    expect(() => parseCurveCsv("# command: x\n")).toThrow(CsvFormatError);
  });

  it("rejects a header-only file", () => {
    expect(() => parseCurveCsv("x,y\n")).toThrow(CsvFormatError);
  });

  it("rejects ragged rows", () => {
    expect(() => parseCurveCsv("x,y\n1,2\n3\n")).toThrow(CsvFormatError);
  });

  it("rejects non-numeric cells", () => {
    expect(() => parseCurveCsv("x,y\n1,two\n")).toThrow(CsvFormatError);
  });

  it("rejects a non-increasing x column", () => {
    expect(() => parseCurveCsv("x,y\n1,2\n1,3\n")).toThrow(CsvFormatError);
  });
});

describe("figure rendering", () => {
  for (const id of FIGURE_IDS) {
    it(`renders ${id} with every series`, () => {
      const table = loadCurveCsv(fixture(id));
      const recipe = RECIPES[id];
      const planned = planSeries(table, recipe);
      // every CSV data column must be plotted (no recipe skips anything)
      expect(planned.map((s) => s.label)).toEqual(table.columns.slice(1));
      const svg = renderFigure(table, recipe);
      expect(svg.startsWith("<svg")).toBe(true);
      for (const s of planned) {
        // legend text carries the series name into the SVG
        expect(svg).toContain(s.label);
      }
    });

    it(`re-renders ${id} byte-identically`, () => {
      const table = loadCurveCsv(fixture(id));
      const first = renderFigure(table, RECIPES[id]);
      const second = renderFigure(table, RECIPES[id]);
      expect(second).toBe(first);
    });
  }

  it("fails when a required column is missing", () => {
    const table = loadCurveCsv(fixture("ru-q15"));
    table.columns = table.columns.filter((c) => c !== "johnson_q15");
    table.series.delete("johnson_q15");
    expect(() => planSeries(table, RECIPES["ru-q15"])).toThrow(RecipeError);
  });

  it("fails when the CSV has a column the recipe does not cover", () => {
    const table = loadCurveCsv(fixture("ru-q15"));
    table.columns = [...table.columns, "mystery"];
    table.series.set("mystery", table.x.map(() => 0));
    expect(() => planSeries(table, RECIPES["ru-q15"])).toThrow(RecipeError);
  });

  it("breaks lines at masked points instead of bridging them", () => {
    const table = loadCurveCsv(fixture("qary-pstar"));
    const svg = renderFigure(table, RECIPES["qary-pstar"]);
    // four pstar curves with different mask tails plus the reference line
    // must all be present
    for (const name of ["pstar_q3", "pstar_q5", "pstar_q7", "pstar_q16"]) {
      expect(svg).toContain(name);
    }
  });
});
