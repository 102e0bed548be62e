import * as echarts from "echarts";
import { CurveTable } from "./csv";
import { FigureRecipe, SeriesRule } from "./recipes";

export class RecipeError extends Error {}

const WIDTH = 900;
const HEIGHT = 560;

// fixed palette so the output does not depend on echarts defaults
const PALETTE = [
  "#1f77b4",
  "#d62728",
  "#2ca02c",
  "#ff7f0e",
  "#9467bd",
  "#8c564b",
  "#17becf",
  "#7f7f7f",
  "#bcbd22",
  "#e377c2",
];

function ruleMatches(rule: SeriesRule, column: string): boolean {
  if (typeof rule.match === "string") return rule.match === column;
  return rule.match.test(column);
}

interface PlannedSeries {
  label: string;
  dashed: boolean;
}

/**
 * Decide which columns get plotted, in CSV header order. Every column must
 * be matched by a rule or listed in skip, and every rule must match at
 * least one column; both failures are hard errors so a stale recipe cannot
 * silently drop data.
 */
export function planSeries(
  table: CurveTable,
  recipe: FigureRecipe,
): PlannedSeries[] {
  const dataColumns = table.columns.slice(1);
  const planned: PlannedSeries[] = [];
  const hits = new Array(recipe.rules.length).fill(0);
  for (const column of dataColumns) {
    if (recipe.skip.includes(column)) continue;
    const idx = recipe.rules.findIndex((rule) => ruleMatches(rule, column));
    if (idx < 0) {
      throw new RecipeError(
        `column ${column} is not covered by recipe ${recipe.figureId}`,
      );
    }
    hits[idx] += 1;
    planned.push({ label: column, dashed: !!recipe.rules[idx].dashed });
  }
  for (let i = 0; i < recipe.rules.length; i++) {
    if (hits[i] === 0) {
      throw new RecipeError(
        `recipe ${recipe.figureId} expects column ${recipe.rules[i].match}` +
          ` but the CSV does not have it`,
      );
    }
  }
  if (planned.length === 0) {
    throw new RecipeError(`recipe ${recipe.figureId} plotted nothing`);
  }
  return planned;
}

// NaN cells become nulls so echarts breaks the line instead of bridging
// masked regions
function seriesData(xs: number[], ys: number[]): [number, number | null][] {
  return xs.map((x, i) => [x, Number.isNaN(ys[i]) ? null : ys[i]]);
}

export function buildOption(
  table: CurveTable,
  recipe: FigureRecipe,
): echarts.EChartsOption {
  const planned = planSeries(table, recipe);
  const series = planned.map((s, i) => ({
    name: s.label,
    type: "line" as const,
    data: seriesData(table.x, table.series.get(s.label)!),
    showSymbol: false,
    connectNulls: false,
    lineStyle: {
      width: s.dashed ? 1.5 : 2,
      type: s.dashed ? ("dashed" as const) : ("solid" as const),
      color: PALETTE[i % PALETTE.length],
    },
    itemStyle: { color: PALETTE[i % PALETTE.length] },
  }));
  return {
    animation: false,
    backgroundColor: "#ffffff",
    title: { text: recipe.title, left: "center" },
    legend: { data: planned.map((s) => s.label), bottom: 0, type: "plain" },
    grid: { left: 70, right: 30, top: 50, bottom: 80 },
    xAxis: { type: "value", name: recipe.xName, nameLocation: "middle", nameGap: 28 },
    yAxis: { type: "value", name: recipe.yName, nameLocation: "middle", nameGap: 48 },
    series,
  };
}

/**
 * zrender stamps process-wide counters into ids and css class names
 * (zr17-cls-49, zr17-c3), so rendering the same chart twice yields
 * different bytes. Renumber every such token by first appearance to make
 * the output a pure function of the chart content.
 */
export function canonicalizeSvgIds(svg: string): string {
  const assigned = new Map<string, string>();
  return svg.replace(/\bzr\d+-(cls-|c)(\d+)\b/g, (token, kind) => {
    let fresh = assigned.get(token);
    if (fresh === undefined) {
      fresh = `zr-${kind}${assigned.size}`;
      assigned.set(token, fresh);
    }
    return fresh;
  });
}

export function renderFigure(table: CurveTable, recipe: FigureRecipe): string {
  const chart = echarts.init(null, null, {
    renderer: "svg",
    ssr: true,
    width: WIDTH,
    height: HEIGHT,
  });
  try {
    chart.setOption(buildOption(table, recipe));
    return canonicalizeSvgIds(chart.renderToSVGString());
  } finally {
    chart.dispose();
  }
}
