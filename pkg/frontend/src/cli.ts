/**
 * Standalone plot script: profile CSVs in, one SVG plus a JSON sidecar
 * out. The sidecar reports how many dots each panel rendered so batch
 * jobs can assert row-count conservation.
 *
 * Usage: profile-plots wing.csv [tip.csv ...] --out plot.svg
 *        [--min-density 0.1] [--max-size 10000]
 */

import { readFileSync, writeFileSync } from 'node:fs';
import { basename } from 'node:path';
import { parseArgs } from 'node:util';

import { parseProfileCsv } from './csv.js';
import { DEFAULT_SPEC, Panel, renderProfilePanels } from './render.js';

export function run(argv: string[]): number {
  let parsed;
  try {
    parsed = parseArgs({
      args: argv,
      allowPositionals: true,
      options: {
        out: { type: 'string' },
        'min-density': { type: 'string' },
        'max-size': { type: 'string' },
      },
    });
  } catch (error) {
    console.error(`profile-plots: ${(error as Error).message}`);
    return 1;
  }
  const inputs = parsed.positionals;
  const out = parsed.values.out;
  if (inputs.length === 0 || !out) {
    console.error(
      'usage: profile-plots <profiles.csv> [more.csv ...] --out plot.svg ' +
        '[--min-density 0.1] [--max-size 10000]',
    );
    return 1;
  }
  const spec = {
    ...DEFAULT_SPEC,
    minDensity: parsed.values['min-density']
      ? Number(parsed.values['min-density'])
      : DEFAULT_SPEC.minDensity,
    maxSize: parsed.values['max-size']
      ? Number(parsed.values['max-size'])
      : DEFAULT_SPEC.maxSize,
  };

  const panels: Panel[] = [];
  for (const input of inputs) {
    let text: string;
    try {
      text = readFileSync(input, 'utf8');
    } catch (error) {
      console.error(`profile-plots: cannot read ${input}: ${(error as Error).message}`);
      return 2;
    }
    try {
      panels.push({ title: basename(input), rows: parseProfileCsv(text) });
    } catch (error) {
      console.error(`profile-plots: ${input}: ${(error as Error).message}`);
      return 2;
    }
  }

  const result = renderProfilePanels(panels, spec);
  for (const warning of result.warnings) {
    console.warn(`profile-plots: warning: ${warning}`);
  }
  writeFileSync(out, result.svg);
  const sidecar = {
    image: out,
    spec,
    panels: result.reports,
    totalDots: result.totalDots,
  };
  writeFileSync(`${out}.json`, JSON.stringify(sidecar, null, 2) + '\n');
  console.log(`wrote ${out} (${result.totalDots} dots) and ${out}.json`);
  return 0;
}

const invokedDirectly =
  process.argv[1] !== undefined &&
  import.meta.url === new URL(`file://${process.argv[1]}`).href;
if (invokedDirectly) {
  process.exit(run(process.argv.slice(2)));
}
