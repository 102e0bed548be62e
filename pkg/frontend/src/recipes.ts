/**
 * One recipe per figure id. A recipe says which CSV columns it plots and
 * how; rendering fails if a CSV column is neither matched nor skipped, or
 * if a required column is absent. Legend labels come straight from the
 * CSV header.
 */

export interface SeriesRule {
  match: string | RegExp; // exact column name, or a pattern for families
  dashed?: boolean; // reference lines are dashed
}

export interface FigureRecipe {
  figureId: string;
  title: string;
  xName: string;
  yName: string;
  rules: SeriesRule[];
  skip: string[];
}

const r = (match: string | RegExp, dashed = false): SeriesRule => ({
  match,
  dashed,
});

export const RECIPES: Record<string, FigureRecipe> = {
  "pstar-vs-johnson": {
    figureId: "pstar-vs-johnson",
    title: "Threshold radius vs Johnson radius",
    xName: "delta",
    yName: "decoding radius",
    rules: [
      r("pstar_q9"),
      r("johnson_q9", true),
      r("pstar_q17"),
      r("johnson_q17", true),
      r("upper_delta", true),
      r("lower_half_delta", true),
    ],
    skip: [],
  },
  "F-lambda": {
    figureId: "F-lambda",
    title: "Shifted gap functional at lambda = 0.5",
    xName: "gamma",
    yName: "F + gamma log2(2^lambda - 1)",
    rules: [r(/^F_p/)],
    skip: [],
  },
  "pstar-vs-lambda": {
    figureId: "pstar-vs-lambda",
    title: "Threshold radius vs erasure probability",
    xName: "lambda",
    yName: "p*",
    rules: [r(/^pstar_d/), r("small_delta_limit", true)],
    skip: [],
  },
  "pstar-vs-delta": {
    figureId: "pstar-vs-delta",
    title: "Threshold radius vs relative distance",
    xName: "delta",
    yName: "p*",
    rules: [r(/^pstar_lam/), r("johnson", true)],
    skip: [],
  },
  "qary-pstar": {
    figureId: "qary-pstar",
    title: "q-ary threshold radius at lambda = 0.6",
    xName: "delta",
    yName: "p*",
    rules: [r(/^pstar_q/), r("half_delta", true)],
    skip: [],
  },
  "dual-compare": {
    figureId: "dual-compare",
    title: "Primal threshold vs dual thresholds",
    xName: "delta",
    yName: "p*",
    rules: [r("primal_lam0.6", true), r(/^dual_R/)],
    skip: [],
  },
  "ru-q15": {
    figureId: "ru-q15",
    title: "Reference lower bound at q = 15",
    xName: "delta",
    yName: "decoding radius",
    rules: [r("ru_q15"), r("johnson_q15"), r("half_delta", true)],
    skip: [],
  },
  "large-delta-zoom": {
    figureId: "large-delta-zoom",
    title: "Near-Plotkin zoom",
    xName: "delta - (1 - 1/q)",
    yName: "decoding radius",
    rules: [
      r("lsym_q3"),
      r("johnson_q3", true),
      r("lsym_q4"),
      r("johnson_q4", true),
      r("lsym_q9"),
      r("johnson_q9", true),
      r("lsym_q17"),
      r("johnson_q17", true),
    ],
    skip: [],
  },
  "all-bounds-q2pow20": {
    figureId: "all-bounds-q2pow20",
    title: "All bounds at q = 2^20",
    xName: "delta",
    yName: "decoding radius",
    rules: [
      r("tvz"),
      r("ru"),
      r("johnson"),
      r("lsym"),
      r("upper_delta", true),
      r("lower_half_delta", true),
    ],
    skip: [],
  },
};

export const FIGURE_IDS = Object.keys(RECIPES);
