#!/usr/bin/env node
import * as fs from "fs";
import * as path from "path";
import yargs from "yargs";
import { hideBin } from "yargs/helpers";
import { loadCurveCsv, CsvFormatError } from "./csv";
import { RECIPES, FIGURE_IDS } from "./recipes";
import { renderFigure, RecipeError } from "./render";

function main(): number {
  const argv = yargs(hideBin(process.argv))
    .usage("render a figure CSV produced by the boundlab CLI to SVG")
    .option("csv", {
      type: "string",
      demandOption: true,
      describe: "input curve CSV",
    })
    .option("figure", {
      type: "string",
      demandOption: true,
      choices: FIGURE_IDS,
      describe: "figure id the CSV was generated for",
    })
    .option("out", {
      type: "string",
      describe: "output SVG path (default: <figure>.svg)",
    })
    .strict()
    .parseSync();

  const recipe = RECIPES[argv.figure];
  const out = argv.out ?? `${argv.figure}.svg`;
  try {
    const table = loadCurveCsv(argv.csv);
    const svg = renderFigure(table, recipe);
    fs.writeFileSync(out, svg);
    console.log(`wrote ${path.resolve(out)}`);
    return 0;
  } catch (err) {
    if (err instanceof CsvFormatError || err instanceof RecipeError) {
      console.error(`error: ${err.message}`);
      return 1;
    }
    if (err instanceof Error && (err as NodeJS.ErrnoException).code) {
      console.error(`error: ${err.message}`);
      return 1;
    }
    throw err;
  }
}

process.exitCode = main();
