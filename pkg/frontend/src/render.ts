/** SVG scatter panels: |U| on x, |V| on y (log scales), density color. */

import { densityColor, viridis } from './colormap.js';
import { ProfileRow } from './csv.js';

export interface PlotSpec {
  /** Dots with either side above this limit are dropped. */
  maxSize: number;
  /** Dots below this density are dropped; also the colormap floor. */
  minDensity: number;
  /** Colormap ceiling. */
  maxDensity: number;
}

export const DEFAULT_SPEC: PlotSpec = {
  maxSize: 10_000,
  minDensity: 0.1,
  maxDensity: 1.0,
};

export interface Panel {
  title: string;
  rows: ProfileRow[];
}

export interface PanelReport {
  title: string;
  dots: number;
  skipped: number;
}

export interface RenderResult {
  svg: string;
  reports: PanelReport[];
  totalDots: number;
  warnings: string[];
}

const PANEL = 320;
const MARGIN = { top: 34, right: 16, bottom: 44, left: 52 };
const GAP = 26;
const LEGEND_HEIGHT = 46;

function validateSpec(spec: PlotSpec): void {
  if (!(spec.maxSize > 0)) {
    throw new Error(`axis limit must be positive, got ${spec.maxSize}`);
  }
  if (
    spec.minDensity < 0 ||
    spec.maxDensity > 1 ||
    spec.minDensity > spec.maxDensity
  ) {
    throw new Error(
      `density window [${spec.minDensity}, ${spec.maxDensity}] must sit inside [0, 1]`,
    );
  }
}

/** log10 position of v within [1, limit], in [0, 1]. */
function logPosition(v: number, limit: number): number {
  const top = Math.log10(Math.max(limit, 10));
  return Math.log10(Math.max(v, 1)) / top;
}

function keepRow(row: ProfileRow, spec: PlotSpec): boolean {
  return (
    row.density >= spec.minDensity &&
    row.uSize <= spec.maxSize &&
    row.vSize <= spec.maxSize
  );
}

export function renderProfilePanels(
  panels: Panel[],
  spec: PlotSpec = DEFAULT_SPEC,
): RenderResult {
  validateSpec(spec);
  const width =
    MARGIN.left +
    panels.length * PANEL +
    (panels.length - 1) * GAP +
    MARGIN.right;
  const height = MARGIN.top + PANEL + MARGIN.bottom + LEGEND_HEIGHT;
  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" viewBox="0 0 ${width} ${height}">`,
  );
  parts.push(`<rect width="${width}" height="${height}" fill="white"/>`);

  const warnings: string[] = [];
  const reports: PanelReport[] = [];
  panels.forEach((panel, i) => {
    const x0 = MARGIN.left + i * (PANEL + GAP);
    const y0 = MARGIN.top;
    const kept = panel.rows.filter((row) => keepRow(row, spec));
    if (panel.rows.length === 0) {
      warnings.push(`panel "${panel.title}" has no rows; drawing empty axes`);
    }
    reports.push({
      title: panel.title,
      dots: kept.length,
      skipped: panel.rows.length - kept.length,
    });
    parts.push(panelSvg(panel.title, kept, spec, x0, y0));
  });
  parts.push(legendSvg(spec, MARGIN.left, MARGIN.top + PANEL + MARGIN.bottom));
  parts.push('</svg>');
  return {
    svg: parts.join('\n'),
    reports,
    totalDots: reports.reduce((acc, r) => acc + r.dots, 0),
    warnings,
  };
}

function panelSvg(
  title: string,
  rows: ProfileRow[],
  spec: PlotSpec,
  x0: number,
  y0: number,
): string {
  const parts: string[] = [];
  parts.push(`<g transform="translate(${x0},${y0})">`);
  parts.push(
    `<text x="${PANEL / 2}" y="-14" text-anchor="middle" font-family="sans-serif" font-size="13">${escapeXml(title)}</text>`,
  );
  parts.push(
    `<rect x="0" y="0" width="${PANEL}" height="${PANEL}" fill="none" stroke="#888" stroke-width="1"/>`,
  );
  for (let exp = 0; ; exp += 1) {
    const tick = 10 ** exp;
    if (tick > spec.maxSize) break;
    const fraction = logPosition(tick, spec.maxSize);
    const px = (fraction * PANEL).toFixed(1);
    const py = (PANEL - fraction * PANEL).toFixed(1);
    parts.push(
      `<line x1="${px}" y1="0" x2="${px}" y2="${PANEL}" stroke="#eee"/>`,
      `<line x1="0" y1="${py}" x2="${PANEL}" y2="${py}" stroke="#eee"/>`,
      `<text x="${px}" y="${PANEL + 16}" text-anchor="middle" font-family="sans-serif" font-size="10">${tick}</text>`,
      `<text x="-6" y="${py}" text-anchor="end" dominant-baseline="middle" font-family="sans-serif" font-size="10">${tick}</text>`,
    );
  }
  parts.push(
    `<text x="${PANEL / 2}" y="${PANEL + 34}" text-anchor="middle" font-family="sans-serif" font-size="11">primary side |U|</text>`,
    `<text transform="translate(-36,${PANEL / 2}) rotate(-90)" text-anchor="middle" font-family="sans-serif" font-size="11">secondary side |V|</text>`,
  );
  for (const row of rows) {
    const cx = (logPosition(row.uSize, spec.maxSize) * PANEL).toFixed(2);
    const cy = (PANEL - logPosition(row.vSize, spec.maxSize) * PANEL).toFixed(2);
    const fill = densityColor(row.density, spec.minDensity, spec.maxDensity);
    parts.push(
      `<circle cx="${cx}" cy="${cy}" r="3.5" fill="${fill}" fill-opacity="0.85"/>`,
    );
  }
  parts.push('</g>');
  return parts.join('\n');
}

function legendSvg(spec: PlotSpec, x0: number, y0: number): string {
  const width = 180;
  const steps = 24;
  const parts: string[] = [`<g transform="translate(${x0},${y0})">`];
  for (let i = 0; i < steps; i += 1) {
    const x = ((i * width) / steps).toFixed(1);
    parts.push(
      `<rect x="${x}" y="8" width="${(width / steps).toFixed(1)}" height="10" fill="${viridis(i / (steps - 1))}"/>`,
    );
  }
  parts.push(
    `<text x="0" y="32" font-family="sans-serif" font-size="10">${spec.minDensity.toFixed(2)}</text>`,
    `<text x="${width}" y="32" text-anchor="end" font-family="sans-serif" font-size="10">${spec.maxDensity.toFixed(2)}</text>`,
    `<text x="${width / 2}" y="32" text-anchor="middle" font-family="sans-serif" font-size="10">density |E|/(|U|x|V|)</text>`,
  );
  parts.push('</g>');
  return parts.join('\n');
}

function escapeXml(text: string): string {
  return text
    .replace(/&/g, '&amp;')
    .replace(/</g, '&lt;')
    .replace(/>/g, '&gt;');
}
